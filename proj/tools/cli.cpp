#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "bhr/cayley.hpp"
#include "bhr/composition.hpp"
#include "bhr/conditions.hpp"
#include "bhr/family.hpp"
#include "bhr/record.hpp"
#include "bhr/search.hpp"
#include "bhr/solver.hpp"

namespace bhr::cli {

namespace {

using nlohmann::ordered_json;

struct RawArguments {
  std::string list;
  std::string path;
  std::string mode;
  std::string output = "text";
  std::string checkpoint;
  std::string cert_dir;
  std::string catalog;
};

void add_options(CLI::App& sub, CommandConfig& c, RawArguments& raw) {
  sub.add_option("--list", raw.list, "edge lengths, e.g. 1^2,2^2,3,5");
  sub.add_option("--v", c.v, "order the list must have");
  sub.add_option("--path", raw.path, "vertex sequence, e.g. [0,2,3,5,4,1,6]");
  sub.add_option("--mode", raw.mode, "linear or cyclic")->check(CLI::IsMember({"linear", "cyclic"}));
  sub.add_flag("--perfect", c.perfect, "oracle: require a perfect linear realization");
  sub.add_option("--budget", c.budget, "search node budget (default from BHR_BUDGET)");
  sub.add_option("--output", raw.output, "text or record")->check(CLI::IsMember({"text", "record"}));
  sub.add_option("--checkpoint", raw.checkpoint, "sweep checkpoint file");
  sub.add_flag("--no-checkpoint", c.no_checkpoint, "sweep without a checkpoint file");
  sub.add_option("--workers", c.workers, "sweep worker threads")->check(CLI::PositiveNumber);
  sub.add_option("--cap", c.cap, "largest order an exhaustive sweep accepts");
  sub.add_option("--max-param", c.max_param, "catalog: largest parameter instantiated")->check(CLI::NonNegativeNumber);
  sub.add_option("--cert-dir", raw.cert_dir, "directory for search certificates");
  sub.add_option("--catalog", raw.catalog, "catalog file instead of the builtin one");
}

EdgeLengthList parse_list(const std::string& text) {
  try {
    return EdgeLengthList::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("malformed list: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(std::string("malformed list: ") + e.what());
  }
}

std::vector<int> parse_path(const std::string& text) {
  try {
    return parse_vertex_sequence(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("malformed path: ") + e.what());
  }
}

void require(bool present, const CommandConfig& c, const char* what) {
  if (!present) throw UsageError(c.command + " needs " + what);
}

std::string braces(const EdgeLengthList& list) { return "{" + list.to_string() + "}"; }

void emit(const CommandConfig& c, std::ostream& out, const Record& record, const std::string& text) {
  if (c.output == Output::record)
    out << record.to_line() << '\n';
  else
    out << text;
}

int verdict_code(Status status) {
  switch (status) {
    case Status::realizable: return kSuccess;
    case Status::not_realizable: return kNegative;
    case Status::unknown: return kUnknown;
  }
  return kUnknown;
}

std::string describe(const Verdict& verdict) {
  std::ostringstream s;
  s << "status: " << to_string(verdict.status) << '\n' << "mode: " << to_string(verdict.mode) << '\n';
  if (verdict.witness) {
    s << "witness: " << verdict.witness->to_string() << '\n';
    if (verdict.mode == Mode::linear) s << "perfect: " << (is_perfect(*verdict.witness) ? "yes" : "no") << '\n';
  }
  if (verdict.reason) s << "reason: " << *verdict.reason << '\n';
  if (verdict.budget) s << "budget: " << *verdict.budget << '\n';
  s << "basis: " << verdict.basis << '\n';
  if (verdict.trace) {
    s << "trace:\n";
    for (const auto& step : trace_steps(*verdict.trace)) s << "  " << step << '\n';
  }
  for (const auto& note : verdict.notes) s << "note: " << note << '\n';
  return s.str();
}

std::unique_ptr<CertificateStore> certificate_store(const CommandConfig& c) {
  if (!c.cert_dir) return std::make_unique<MemoryCertificateStore>();
  return std::make_unique<DirectoryCertificateStore>(*c.cert_dir);
}

int cmd_check(const CommandConfig& c, std::ostream& out) {
  require(c.list.has_value(), c, "--list");
  const auto& list = *c.list;
  if (c.v && *c.v != list.order())
    throw UsageError("list has order " + std::to_string(list.order()) + " but --v is " + std::to_string(*c.v));
  auto two = condition_two(list);
  auto one = condition_one(list);
  int code = two.holds ? kSuccess : kNegative;
  Record r{"check", code, ordered_json::object()};
  r.data["list"] = list.to_string();
  r.data["v"] = list.order();
  r.data["cyclic_admissible"] = list.cyclic_admissible();
  r.data["condition_two"] = to_json(two);
  r.data["condition_one"] = to_json(one);
  std::ostringstream s;
  s << "list: " << braces(list) << '\n'
    << "v: " << list.order() << '\n'
    << "cyclic admissible: " << (list.cyclic_admissible() ? "yes" : "no") << '\n'
    << "condition two: " << two.describe() << '\n'
    << "condition one: " << one.describe() << '\n';
  emit(c, out, r, s.str());
  return code;
}

int cmd_realize(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  require(c.list.has_value(), c, "--list");
  const auto& list = *c.list;
  auto store = certificate_store(c);
  std::unique_ptr<Catalog> loaded;
  if (c.catalog) loaded = std::make_unique<Catalog>(Catalog::load(c.catalog->string()));
  Solver solver(SolverOptions{c.budget, loaded.get(), store.get()});
  Mode mode = c.mode.value_or(Mode::cyclic);
  Verdict verdict;
  if (mode == Mode::cyclic) {
    verdict = solver.decide_bhr(list);
  } else if (auto e = list.exponents()) {
    verdict = solver.construct_linear(*e);
  } else {
    SearchConfig config{Mode::linear, false, c.budget, true};
    auto outcome = search(list, config, store.get());
    verdict.mode = Mode::linear;
    verdict.basis = "oracle";
    if (outcome.found) {
      verdict.status = Status::realizable;
      verdict.witness = outcome.found;
      verdict.trace = TraceNode::make_search(list.to_string(), Mode::linear, false, c.budget, outcome.nodes);
    } else if (outcome.exhausted) {
      verdict.status = Status::not_realizable;
      verdict.reason = "exhaustive linear search, certificate " + *outcome.certificate;
    } else {
      verdict.budget = "search stopped after " + std::to_string(outcome.nodes) + " nodes";
    }
  }
  for (const auto& note : verdict.notes)
    if (note.starts_with("defect") || note.starts_with("conjecture violation")) err << note << '\n';
  int code = verdict_code(verdict.status);
  Record r{"realize", code, ordered_json::object()};
  r.data["list"] = list.to_string();
  r.data["v"] = list.order();
  r.data["verdict"] = to_json(verdict);
  emit(c, out, r, "list: " + braces(list) + "\nv: " + std::to_string(list.order()) + "\n" + describe(verdict));
  return code;
}

int cmd_verify(const CommandConfig& c, std::ostream& out) {
  require(c.list.has_value(), c, "--list");
  require(c.path.has_value(), c, "--path");
  Mode mode = c.mode.value_or(Mode::cyclic);
  ValidationReport report;
  try {
    report = validate(*c.path, *c.list, mode);
  } catch (const OrderMismatch& e) {
    throw UsageError(e.what());
  }
  int code = report.passed() ? kSuccess : kNegative;
  Record r{"verify", code, ordered_json::object()};
  r.data["list"] = c.list->to_string();
  r.data["path"] = format_vertex_sequence(*c.path);
  r.data["report"] = to_json(report);
  emit(c, out, r, "verify " + std::string(to_string(mode)) + ": " + report.describe() + "\n");
  return code;
}

int cmd_oracle(const CommandConfig& c, std::ostream& out) {
  require(c.list.has_value(), c, "--list");
  Mode mode = c.mode.value_or(Mode::cyclic);
  if (c.perfect && mode != Mode::linear) throw UsageError("--perfect needs --mode linear");
  auto store = certificate_store(c);
  SearchConfig config{mode, c.perfect, c.budget, true};
  auto outcome = search(*c.list, config, store.get());
  int code = outcome.found ? kSuccess : outcome.exhausted ? kNegative : kUnknown;
  Record r{"oracle", code, ordered_json::object()};
  r.data["list"] = c.list->to_string();
  r.data["mode"] = to_string(mode);
  r.data["perfect"] = c.perfect;
  if (outcome.found) r.data["witness"] = outcome.found->to_string();
  r.data["exhausted"] = outcome.exhausted;
  r.data["nodes"] = outcome.nodes;
  if (outcome.certificate) r.data["certificate"] = *outcome.certificate;
  std::ostringstream s;
  s << "list: " << braces(*c.list) << '\n' << "mode: " << to_string(mode) << (c.perfect ? " perfect" : "") << '\n';
  if (outcome.found)
    s << "witness: " << outcome.found->to_string() << '\n';
  else if (outcome.exhausted)
    s << "no realization; certificate " << *outcome.certificate << '\n';
  else
    s << "budget exceeded\n";
  s << "nodes: " << outcome.nodes << '\n';
  emit(c, out, r, s.str());
  return code;
}

int cmd_sweep(const CommandConfig& c, std::ostream& out) {
  require(c.v.has_value(), c, "--v");
  const int v = *c.v;
  if (v < 2) throw UsageError("sweep needs --v >= 2");
  if (v > c.cap) throw UsageError("v = " + std::to_string(v) + " exceeds the sweep cap " + std::to_string(c.cap) + " (raise --cap)");
  SweepOptions options;
  options.cap = c.cap;
  options.budget = c.budget;
  options.workers = c.workers;
  if (c.checkpoint)
    options.checkpoint = c.checkpoint;
  else if (v >= 12 && !c.no_checkpoint)
    options.checkpoint = std::filesystem::path("bhr-sweep-v" + std::to_string(v) + ".checkpoint");
  if (c.no_checkpoint) options.checkpoint.reset();
  if (c.output == Output::record) {
    options.on_record = [&](const SweepRecord& rec) {
      Record line{"sweep-list", rec.violation() ? int(kNegative) : int(kSuccess), to_json(rec)};
      out << line.to_line() << '\n';
    };
  }
  auto report = sweep_conjecture(v, options);
  int code = !report.violations.empty() ? kNegative : report.unresolved ? kUnknown : kSuccess;
  Record r{"sweep", code, to_json(report)};
  std::ostringstream s;
  s << "v: " << report.v << '\n'
    << "lists: " << report.lists << '\n'
    << "condition holds: " << report.condition_holds << '\n'
    << "realizable: " << report.realizable << '\n'
    << "agreements: " << report.agreements << '\n'
    << "unresolved: " << report.unresolved << '\n'
    << "violations: " << report.violations.size() << '\n';
  for (const auto& violation : report.violations) s << "  " << violation << '\n';
  if (report.resumed) s << "resumed from checkpoint\n";
  emit(c, out, r, s.str());
  return code;
}

int cmd_decompose(const CommandConfig& c, std::ostream& out) {
  require(c.path.has_value(), c, "--path");
  std::optional<PathRealization> path;
  try {
    path.emplace(*c.path);
  } catch (const InvalidPath& e) {
    throw UsageError(e.what());
  }
  const int v = path->order();
  bool ok = verify_decomposition(*path);
  auto graph = CayleyMultigraph(v, difference_list(path->vertices(), v));
  int code = ok ? kSuccess : kNegative;
  Record r{"decompose", code, ordered_json::object()};
  r.data["path"] = path->to_string();
  r.data["v"] = v;
  ordered_json connection = ordered_json::object();
  for (auto [g, m] : graph.connection()) connection[std::to_string(g)] = m;
  r.data["connection"] = connection;
  ordered_json translates = ordered_json::array();
  std::ostringstream s;
  s << "path: " << path->to_string() << '\n' << "connection:";
  for (auto [g, m] : graph.connection()) s << ' ' << g << '^' << m;
  s << '\n';
  for (int g = 0; g < v; ++g) {
    auto t = format_vertex_sequence(translate(*path, g));
    translates.push_back(t);
    s << "H+" << g << ": " << t << '\n';
  }
  r.data["translates"] = translates;
  r.data["decomposition"] = ok;
  s << "decomposition: " << (ok ? "verified" : "fails") << '\n';
  emit(c, out, r, s.str());
  return code;
}

int cmd_catalog(const CommandConfig& c, std::ostream& out) {
  Catalog loaded;
  const Catalog* catalog = &Catalog::builtin();
  if (c.catalog) {
    loaded = Catalog::load(c.catalog->string());
    catalog = &loaded;
  }
  auto failures = catalog->soundness_sweep(c.max_param);
  int code = failures.empty() ? kSuccess : kNegative;
  Record r{"catalog", code, ordered_json::object()};
  r.data["templates"] = catalog->templates().size();
  r.data["max_param"] = c.max_param;
  ordered_json quarantined = ordered_json::array();
  std::ostringstream s;
  s << "templates: " << catalog->templates().size() << '\n' << "params: 0.." << c.max_param << '\n';
  s << "quarantined: " << failures.size() << '\n';
  for (const auto& f : failures) {
    quarantined.push_back({{"id", f.id}, {"param", f.param}, {"message", f.message}});
    s << "  " << f.id << " at " << f.param << ": " << f.message << '\n';
  }
  r.data["quarantined"] = quarantined;
  emit(c, out, r, s.str());
  return code;
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BHR_BUDGET"); env && *env) {
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (*end == '\0' && value > 0) return value;
    throw UsageError(std::string("BHR_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultBudget;
}

std::optional<CommandConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out) {
  CommandConfig config;
  RawArguments raw;
  CLI::App app{"Edge-length realization toolkit"};
  app.require_subcommand(1);
  const std::pair<const char*, const char*> commands[] = {
      {"check", "evaluate the divisibility conditions for a list"},
      {"realize", "construct a realization or explain why none exists"},
      {"verify", "validate a path against a list"},
      {"oracle", "exhaustive backtracking search"},
      {"sweep", "classify every list of a given order"},
      {"decompose", "check the translate decomposition of a path"},
      {"catalog", "instantiate and validate every family template"},
  };
  for (auto [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_options(*sub, config, raw);
    sub->callback([&config, name = std::string(name)] { config.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  config.budget = config.budget ? config.budget : default_budget();
  if (!raw.list.empty()) config.list = parse_list(raw.list);
  if (!raw.path.empty()) config.path = parse_path(raw.path);
  if (!raw.mode.empty()) config.mode = parse_mode(raw.mode);
  config.output = raw.output == "record" ? Output::record : Output::text;
  if (!raw.checkpoint.empty()) config.checkpoint = raw.checkpoint;
  if (!raw.cert_dir.empty()) config.cert_dir = raw.cert_dir;
  if (!raw.catalog.empty()) config.catalog = raw.catalog;
  return config;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  std::uint64_t budget = config.budget ? config.budget : default_budget();
  CommandConfig c = config;
  c.budget = budget;
  if (c.cert_dir) set_default_certificate_store(std::make_shared<DirectoryCertificateStore>(*c.cert_dir));
  int code = kUsage;
  if (c.command == "check") code = cmd_check(c, out);
  else if (c.command == "realize") code = cmd_realize(c, out, err);
  else if (c.command == "verify") code = cmd_verify(c, out);
  else if (c.command == "oracle") code = cmd_oracle(c, out);
  else if (c.command == "sweep") code = cmd_sweep(c, out);
  else if (c.command == "decompose") code = cmd_decompose(c, out);
  else if (c.command == "catalog") code = cmd_catalog(c, out);
  else throw UsageError("unknown command '" + c.command + "'");
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    auto config = parse_arguments(argc, argv, out);
    if (!config) return kSuccess;
    int code = run(*config, out, err);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bhr::cli
