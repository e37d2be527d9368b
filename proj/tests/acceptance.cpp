// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include "bhr/cayley.hpp"
#include "bhr/conditions.hpp"
#include "bhr/family.hpp"
#include "bhr/search.hpp"
#include "bhr/solver.hpp"

using namespace bhr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

EdgeLengthList L(const char* text) { return EdgeLengthList::parse(text); }

std::vector<int> vertices_of(const PathRealization& p) { return {p.vertices().begin(), p.vertices().end()}; }

// Lists over {1,2,3,5} with order at most max_v.
template <typename F>
void for_each_tuple(int max_v, F&& f) {
  for (int a = 0; a < max_v; ++a)
    for (int b = 0; a + b < max_v; ++b)
      for (int c = 0; a + b + c < max_v; ++c)
        for (int d = 0; a + b + c + d < max_v; ++d) f(Exponents{a, b, c, d});
}

Outcome worked_examples() {
  Outcome o;
  struct Case {
    std::vector<int> path;
    const char* list;
    Mode mode;
  };
  for (const auto& c : {Case{{0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7}, "1,3^3,5^6", Mode::cyclic},
                        Case{{0, 5, 3, 1, 6, 9, 4, 2, 7, 12, 10, 11, 8}, "1,2^4,3^2,5^5", Mode::linear},
                        Case{{0, 2, 3, 5, 4, 1, 6}, "1^2,2^2,3,5", Mode::linear},
                        Case{{0, 2, 3, 5, 4, 1, 6}, "1^2,2^3,3", Mode::cyclic}}) {
    if (!validate(c.path, L(c.list), c.mode).passed()) o.fail(std::string("path for {") + c.list + "} fails");
    if (oracle::lengths(c.path, static_cast<int>(c.path.size()), c.mode == Mode::cyclic) != L(c.list).counts())
      o.fail(std::string("reference lengths differ for {") + c.list + "}");
  }
  if (!is_perfect(PathRealization({0, 2, 3, 5, 4, 1, 6}))) o.fail("order-7 path not perfect");
  auto s3 = staircase(3, 1), s5 = staircase(5, 1);
  if (vertices_of(s3) != std::vector<int>{0, 3, 4, 1, 2, 5} || linear_lengths(s3) != L("1^2,3^3") || !is_perfect(s3))
    o.fail("staircase (3,1)");
  if (vertices_of(s5) != std::vector<int>{0, 5, 6, 1, 2, 7, 8, 3, 4, 9} || linear_lengths(s5) != L("1^4,5^5") ||
      !is_perfect(s5))
    o.fail("staircase (5,1)");
  o.detail = o.pass ? "4 paths, 2 staircases" : o.detail;
  return o;
}

Outcome condition_equivalence() {
  Outcome o;
  std::uint64_t checked = 0;
  for (int v = 2; v <= 12 && o.pass; ++v) {
    std::vector<int> seq(v - 1, 1);
    do {
      std::map<int, int> counts;
      for (int x : seq) ++counts[x];
      EdgeLengthList list(counts);
      bool two = condition_two(list).holds;
      if (condition_one(list).holds != two || oracle::condition_two(counts) != two) {
        o.fail("disagreement on {" + list.to_string() + "}");
        break;
      }
      ++checked;
    } while (next_multiset(seq, v - 1));
  }
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 10000 && o.pass; ++trial) {
    int v = 2 + static_cast<int>(rng() % 59);
    std::map<int, int> counts;
    // bias toward few distinct lengths so failures are common
    int palette = 1 + static_cast<int>(rng() % 4);
    std::vector<int> lengths;
    for (int i = 0; i < palette; ++i) lengths.push_back(1 + static_cast<int>(rng() % (v / 2 > 0 ? v / 2 : 1)));
    for (int i = 0; i < v - 1; ++i) {
      int l = (rng() % 4) ? lengths[rng() % lengths.size()] : 1 + static_cast<int>(rng() % std::max(1, v / 2));
      ++counts[l];
    }
    EdgeLengthList list(counts);
    bool two = condition_two(list).holds;
    if (condition_one(list).holds != two || oracle::condition_two(counts) != two) o.fail("random disagreement on {" + list.to_string() + "}");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " lists, 0 disagreements";
  return o;
}

Outcome necessity() {
  Outcome o;
  std::mt19937 rng(77);
  std::uint64_t checks = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int v = 2 + static_cast<int>(rng() % 39);
    auto p = oracle::random_path(v, rng);
    PathRealization path(p);
    auto list = cyclic_lengths(path);
    if (!condition_two(list).holds || !oracle::condition_two(list.counts())) o.fail("condition two fails on " + path.to_string());
    for (int d : divisors(v)) {
      int n = 0;
      for (const auto& [l, m] : list.counts())
        if (l % d) n += m;
      if (residue_components(path, d) != n + 1) o.fail("component count on " + path.to_string());
      ++checks;
    }
  }
  if (o.pass) o.detail = "10000 paths, " + std::to_string(checks) + " divisor checks";
  return o;
}

Outcome catalog_soundness() {
  Outcome o;
  const auto& catalog = Catalog::builtin();
  auto failures = catalog.soundness_sweep(10);
  for (const auto& f : failures) std::cout << "  quarantined " << f.id << " at " << f.param << ": " << f.message << '\n';
  if (!failures.empty()) o.fail(std::to_string(failures.size()) + " quarantined instances");
  std::size_t instances = 0;
  for (const auto& t : catalog.templates()) {
    int top = t.is_constant() ? 0 : 10;
    for (int p = t.is_constant() ? 0 : t.min_param; p <= top; ++p) {
      ++instances;
      try {
        auto path = instantiate(t, p);
        if (oracle::lengths(vertices_of(path), path.order(), t.kind == FamilyKind::cyclic) != t.list_at(p).counts())
          o.fail(t.id + " reference lengths differ");
        if (t.kind == FamilyKind::perfect_linear && path.back() != path.order() - 1) o.fail(t.id + " not perfect");
      } catch (const std::exception&) {
      }
    }
  }
  if (o.pass) o.detail = std::to_string(catalog.templates().size()) + " templates, " + std::to_string(instances) + " instances, 0 quarantined";
  return o;
}

Outcome exception_fidelity() {
  Outcome o;
  std::uint64_t tuples = 0, brute = 0;
  for_each_tuple(14, [&](Exponents e) {
    auto list = EdgeLengthList::from_exponents(e);
    SearchConfig config;
    config.mode = Mode::linear;
    config.budget = ~std::uint64_t{0};
    auto truth = search(list, config);
    bool exists = truth.found.has_value();
    if (!truth.exhausted && !exists) o.fail("oracle did not finish on " + e.to_string());
    if (e.order() <= 9) {
      ++brute;
      if (oracle::all_realizations(list.counts(), false).empty() == exists) o.fail("search and enumeration differ on " + e.to_string());
    }
    auto verdict = default_solver().decide_linear(e);
    if ((verdict.status == Status::realizable) != exists) o.fail("decide_linear wrong on " + e.to_string());
    if (verdict.status == Status::unknown) o.fail("unknown on " + e.to_string());
    ++tuples;
  });
  for (auto e : {Exponents{0, 3, 1, 8}, Exponents{1, 0, 3, 1}, Exponents{4, 0, 0, 8}, Exponents{1, 1, 5, 0}}) {
    auto v = default_solver().decide_linear(e);
    if (v.status != Status::not_realizable || v.basis != "published") o.fail(e.to_string() + " not refused by citation");
  }
  if (o.pass)
    o.detail = std::to_string(tuples) + " tuples, " + std::to_string(brute) + " also enumerated, 0 disagreements";
  return o;
}

Outcome end_to_end() {
  Outcome o;
  std::uint64_t realized = 0, refused = 0, crosschecked = 0;
  for_each_tuple(30, [&](Exponents e) {
    auto list = EdgeLengthList::from_exponents(e);
    if (!list.cyclic_admissible()) return;
    bool holds = condition_two(list).holds;
    auto verdict = default_solver().construct_cyclic(list);
    if (holds) {
      if (verdict.status != Status::realizable || !verdict.witness) {
        o.fail(e.to_string() + " gave " + std::string(to_string(verdict.status)));
        return;
      }
      if (!validate(*verdict.witness, list, Mode::cyclic).passed() ||
          oracle::lengths(vertices_of(*verdict.witness), list.order(), true) != list.counts())
        o.fail(e.to_string() + " witness invalid");
      ++realized;
    } else {
      if (verdict.status != Status::not_realizable) o.fail(e.to_string() + " should be refused");
      ++refused;
      if (list.order() <= 13) {
        SearchConfig config;
        config.mode = Mode::cyclic;
        config.budget = ~std::uint64_t{0};
        auto truth = search(list, config);
        if (truth.found || !truth.exhausted) o.fail(e.to_string() + " refused but search disagrees");
        ++crosschecked;
      }
    }
  });
  if (o.pass)
    o.detail = std::to_string(realized) + " realized, " + std::to_string(refused) + " refused (" +
               std::to_string(crosschecked) + " searched)";
  return o;
}

Outcome desk_sweep() {
  Outcome o;
  std::ostringstream s;
  for (int v : {5, 7, 11, 13}) {
    auto r = sweep_conjecture(v);
    if (!r.violations.empty()) o.fail("violation at v=" + std::to_string(v) + ": " + r.violations.front());
    if (r.unresolved) o.fail(std::to_string(r.unresolved) + " unresolved at v=" + std::to_string(v));
    s << (v == 5 ? "" : ", ") << "v=" << v << ": " << r.lists;
  }
  if (o.pass) o.detail = s.str() + " lists, 0 violations";
  return o;
}

Outcome cayley_bridge() {
  Outcome o;
  if (!verify_decomposition(PathRealization({0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7}))) o.fail("order-11 path");
  std::uint64_t verified = 0;
  for_each_tuple(30, [&](Exponents e) {
    auto list = EdgeLengthList::from_exponents(e);
    if (!list.cyclic_admissible() || !condition_two(list).holds) return;
    auto verdict = default_solver().construct_cyclic(list);
    if (!verdict.witness) return;
    auto w = vertices_of(*verdict.witness);
    auto orbit = oracle::orbit_edges(w, list.order());
    auto graph = build_from_list(list);
    bool same = true;
    for (int x = 0; x < list.order(); ++x)
      for (int y = x + 1; y < list.order(); ++y) same = same && orbit[x][y] == graph.edge_multiplicity(x, y);
    if (!verify_decomposition(*verdict.witness) || !same) o.fail(e.to_string() + " decomposition fails");
    ++verified;
  });
  auto counter = L("2^3,4^4");
  if (condition_two(counter).holds) o.fail("order-8 counterexample passes condition two");
  bool found = false, seen = false;
  SweepOptions options;
  options.on_record = [&](const SweepRecord& r) {
    if (r.list == counter) {
      seen = true;
      found = r.witness.has_value() || !r.exhausted;
    }
  };
  auto sweep = sweep_conjecture(8, options);
  if (!seen || found) o.fail("sweep at v=8 realizes or misses the counterexample");
  if (!sweep.violations.empty()) o.fail("violations at v=8");
  if (o.pass) o.detail = std::to_string(verified) + " witnesses decompose; order-8 counterexample unrealizable";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "worked examples", 1, worked_examples},
      {2, "condition equivalence", 120, condition_equivalence},
      {3, "necessity and component counts", 60, necessity},
      {4, "catalog soundness", 60, catalog_soundness},
      {5, "exception lists against exhaustive search", 900, exception_fidelity},
      {6, "cyclic realizations over {1,2,3,5} up to v=30", 1800, end_to_end},
      {7, "conjecture sweep at v=5,7,11,13", 600, desk_sweep},
      {8, "translate decompositions", 120, cayley_bridge},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds > c.limit_seconds) o.fail("took longer than " + std::to_string(int(c.limit_seconds)) + " s");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << std::fixed
              << std::setprecision(2) << seconds << " s) " << o.detail << std::endl;
  }
  return failures ? 1 : 0;
}
