#include "bhr/solver.hpp"

#include <mutex>
#include <numeric>

#include "bhr/composition.hpp"
#include "bhr/conditions.hpp"
#include "bhr/error.hpp"
#include "rules.hpp"

namespace bhr {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::realizable: return "realizable";
    case Status::not_realizable: return "not-realizable";
    case Status::unknown: return "unknown";
  }
  return "?";
}

namespace {

enum Table { kDecide = 0, kLinear = 1, kCyclic = 2 };

Exponents minus(const Exponents& x, const Exponents& y) {
  return Exponents{x.ones - y.ones, x.twos - y.twos, x.threes - y.threes, x.fives - y.fives};
}

bool nonnegative(const Exponents& e) { return e.ones >= 0 && e.twos >= 0 && e.threes >= 0 && e.fives >= 0; }

bool fits(const Exponents& inner, const Exponents& outer) { return nonnegative(minus(outer, inner)); }

std::string braces(const Exponents& e) { return "{" + EdgeLengthList::from_exponents(e).to_string() + "}"; }

Verdict found(Mode mode, const EdgeLengthList& list, PathRealization path, Trace trace, std::string basis) {
  auto report = validate(path, list, mode);
  if (!report.passed())
    throw Error("internal: witness " + path.to_string() + " for {" + list.to_string() + "} failed: " +
                report.describe());
  Verdict v;
  v.status = Status::realizable;
  v.mode = mode;
  v.witness = std::move(path);
  v.trace = std::move(trace);
  v.basis = std::move(basis);
  return v;
}

Verdict refused(Mode mode, std::string reason, std::string basis) {
  Verdict v;
  v.status = Status::not_realizable;
  v.mode = mode;
  v.reason = std::move(reason);
  v.basis = std::move(basis);
  return v;
}

}  // namespace

Solver::Solver(SolverOptions options)
    : options_(options), catalog_(options.catalog ? options.catalog : &Catalog::builtin()) {}

CertificateStore* Solver::store() const {
  return options_.certificates ? options_.certificates : &default_certificate_store();
}

std::optional<Verdict> Solver::recall(int table, const Exponents& e) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find({table, e.ones, e.twos, e.threes, e.fives});
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

Verdict Solver::remember(int table, const Exponents& e, Verdict v) {
  std::unique_lock lock(mutex_);
  memo_[{table, e.ones, e.twos, e.threes, e.fives}] = v;
  return v;
}

std::optional<Solver::Perfect> Solver::perfect_base(const Exponents& e, std::vector<std::string>& notes) {
  if (e.twos == 0 && e.threes == 0 && e.fives == 0) {
    auto trace = TraceNode::make_ones(e.ones);
    return Perfect{replay(*trace, *catalog_), trace};
  }
  for (const auto& inst : catalog_->instances(e, FamilyKind::perfect_linear)) {
    try {
      return Perfect{instantiate(*inst.family, inst.param), TraceNode::make_catalog(inst.family->id, inst.param)};
    } catch (const TemplateDefect& err) {
      notes.push_back("quarantined " + inst.family->id + " at " + std::to_string(inst.param) + ": " + err.what());
    }
  }
  return std::nullopt;
}

std::vector<Exponents> Solver::perfect_bases_within(const Exponents& e) const {
  std::vector<Exponents> out;
  for (const auto& t : catalog_->templates()) {
    if (t.kind != FamilyKind::perfect_linear) continue;
    for (int p = t.is_constant() ? 0 : t.min_param; p <= t.min_param + e.total(); ++p) {
      Exponents x = t.exponents_at(p);
      if (!fits(x, e)) break;
      if (x != e && x.total() > 0) out.push_back(x);
      if (t.is_constant()) break;
    }
  }
  return out;
}

Verdict Solver::searched(const EdgeLengthList& list, Mode mode, Verdict base) {
  SearchConfig config;
  config.mode = mode;
  config.budget = options_.budget;
  auto outcome = search(list, config, store());
  if (outcome.found) {
    Verdict v = found(mode, list, *outcome.found,
                      TraceNode::make_search(list.to_string(), mode, false, config.budget, outcome.nodes), "search");
    v.notes = std::move(base.notes);
    return v;
  }
  base.mode = mode;
  if (outcome.exhausted) {
    base.status = Status::not_realizable;
    base.reason = "exhaustive " + std::string(to_string(mode)) + " search, certificate " + *outcome.certificate;
    base.basis = "oracle";
  } else {
    base.status = Status::unknown;
    base.budget = "search stopped after " + std::to_string(outcome.nodes) + " nodes (budget " +
                  std::to_string(config.budget) + ")";
  }
  return base;
}

Verdict Solver::decide_linear(const Exponents& e) {
  if (auto v = recall(kDecide, e)) return *v;
  const auto& clause = detail::classify_linear(e);
  Verdict v;
  v.mode = Mode::linear;
  if (clause.answer == detail::Answer::open) {
    v = construct_linear(e);
    v.basis = "oracle";
    v.notes.push_back("outside the published classification: " + std::string(clause.key));
  } else {
    v.status = clause.answer == detail::Answer::yes ? Status::realizable : Status::not_realizable;
    v.reason = std::string(clause.key);
    v.basis = "published";
  }
  return remember(kDecide, e, std::move(v));
}

Verdict Solver::construct_linear(const Exponents& e) {
  if (!nonnegative(e)) throw InvalidList("negative exponent in " + e.to_string());
  if (auto v = recall(kLinear, e)) return *v;
  return remember(kLinear, e, build_linear(e));
}

Verdict Solver::build_linear(const Exponents& e) {
  const auto list = EdgeLengthList::from_exponents(e);
  const Mode mode = Mode::linear;
  if (e.total() == 0) return found(mode, list, PathRealization({0}), TraceNode::make_ones(0), "construction");

  const auto& clause = detail::classify_linear(e);
  if (clause.answer == detail::Answer::no) return refused(mode, std::string(clause.key), "published");
  auto decided = [](const Exponents& x) { return detail::classify_linear(x).answer; };

  std::vector<std::string> notes;
  auto with_notes = [&](Verdict v) {
    v.notes.insert(v.notes.end(), notes.begin(), notes.end());
    return v;
  };

  for (auto kind : {FamilyKind::perfect_linear, FamilyKind::linear}) {
    for (const auto& inst : catalog_->instances(e, kind)) {
      try {
        return with_notes(found(mode, list, instantiate(*inst.family, inst.param),
                                TraceNode::make_catalog(inst.family->id, inst.param), "catalog"));
      } catch (const TemplateDefect& err) {
        notes.push_back("quarantined " + inst.family->id + " at " + std::to_string(inst.param) + ": " + err.what());
      }
    }
  }
  if (e.twos == 0 && e.threes == 0 && e.fives == 0) {
    auto trace = TraceNode::make_ones(e.ones);
    return with_notes(found(mode, list, replay(*trace, *catalog_), trace, "construction"));
  }

  auto attempt = [&](const std::string& rule, const Exponents& left) -> std::optional<Verdict> {
    Exponents rest = minus(e, left);
    if (!nonnegative(rest) || left.total() == 0) return std::nullopt;
    if (decided(rest) == detail::Answer::no) return std::nullopt;
    auto base = perfect_base(left, notes);
    if (!base) return std::nullopt;
    Verdict sub = construct_linear(rest);
    if (sub.status != Status::realizable) return std::nullopt;
    return with_notes(found(mode, list, compose(base->path, *sub.witness),
                            TraceNode::make_compose(rule, base->trace, sub.trace), "construction"));
  };

  for (const auto& rule : detail::linear_recursions()) {
    if (!rule.guard(e)) continue;
    if (auto v = attempt(std::string(rule.key), rule.left(e))) return *v;
  }

  // A straight prefix of ones in front of a realization with fewer ones.
  for (int j = e.ones; j >= 1; --j) {
    Exponents rest{e.ones - j, e.twos, e.threes, e.fives};
    if (decided(rest) != detail::Answer::yes) continue;
    if (auto v = attempt("R{1^" + std::to_string(j) + "} + r" + braces(rest), Exponents{j, 0, 0, 0})) return *v;
  }

  for (const auto& left : perfect_bases_within(e)) {
    Exponents rest = minus(e, left);
    if (decided(rest) != detail::Answer::yes) continue;
    if (auto v = attempt("R" + braces(left) + " + r" + braces(rest), left)) return *v;
  }

  Verdict base;
  base.notes = std::move(notes);
  if (clause.answer == detail::Answer::yes) base.notes.push_back("no composition applied; searching");
  Verdict v = searched(list, mode, std::move(base));
  if (clause.answer == detail::Answer::yes && v.status != Status::realizable)
    v.notes.push_back("defect: the classification promises a linear realization of " + braces(e));
  return v;
}

Verdict Solver::construct_cyclic(const EdgeLengthList& list) {
  auto e = list.exponents();
  if (!e) throw InvalidList("constructive cyclic solving needs support within {1,2,3,5}, got {" + list.to_string() + "}");
  if (auto v = recall(kCyclic, *e)) return *v;
  return remember(kCyclic, *e, build_cyclic(list, *e));
}

Verdict Solver::build_cyclic(const EdgeLengthList& list, const Exponents& e) {
  const Mode mode = Mode::cyclic;
  if (list.empty()) return found(mode, list, PathRealization({0}), TraceNode::make_ones(0), "construction");
  if (!list.cyclic_admissible()) return refused(mode, "length exceeds floor(v/2)", "definition");
  auto cond = condition_two(list);
  if (!cond.holds) return refused(mode, "condition two " + cond.describe(), "condition");

  std::vector<std::string> notes;
  if (detail::classify_linear(e).answer == detail::Answer::yes) {
    Verdict lin = construct_linear(e);
    notes = lin.notes;
    if (lin.status == Status::realizable) {
      Verdict v = found(mode, list, *lin.witness, TraceNode::make_bridge(lin.trace), "construction");
      v.notes = std::move(notes);
      return v;
    }
  }
  for (const auto& inst : catalog_->instances(e, FamilyKind::cyclic)) {
    try {
      Verdict v = found(mode, list, instantiate(*inst.family, inst.param),
                        TraceNode::make_catalog(inst.family->id, inst.param), "catalog");
      v.notes = std::move(notes);
      return v;
    } catch (const TemplateDefect& err) {
      notes.push_back("quarantined " + inst.family->id + " at " + std::to_string(inst.param) + ": " + err.what());
    }
  }
  Verdict base;
  base.notes = std::move(notes);
  Verdict v = searched(list, mode, std::move(base));
  if (v.status != Status::realizable)
    v.notes.push_back("defect: condition two holds on {1,2,3,5} yet no cyclic realization was produced");
  return v;
}

Verdict Solver::decide_bhr(const EdgeLengthList& list) {
  if (list.exponents()) return construct_cyclic(list);
  const Mode mode = Mode::cyclic;
  if (!list.cyclic_admissible()) return refused(mode, "length exceeds floor(v/2)", "definition");
  auto cond = condition_two(list);
  if (!cond.holds) return refused(mode, "condition two " + cond.describe(), "condition");
  Verdict base;
  base.notes.push_back("support outside {1,2,3,5}: condition two holds, so the conjecture predicts a realization");
  Verdict v = searched(list, mode, std::move(base));
  if (v.status == Status::not_realizable)
    v.notes.push_back("conjecture violation: exhaustive search found no cyclic realization although condition two holds");
  return v;
}

Solver& default_solver() {
  static Solver solver;
  return solver;
}

bool decide_linear_123(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidList("negative exponent");
  return detail::classify_linear(Exponents{a, b, c, 0}).answer == detail::Answer::yes;
}

Verdict decide_linear(int a, int b, int c, int d) { return default_solver().decide_linear(Exponents{a, b, c, d}); }

Verdict construct_linear(int a, int b, int c, int d) {
  return default_solver().construct_linear(Exponents{a, b, c, d});
}

Verdict construct_cyclic(const EdgeLengthList& list) { return default_solver().construct_cyclic(list); }

Verdict decide_bhr(const EdgeLengthList& list) { return default_solver().decide_bhr(list); }

}  // namespace bhr
