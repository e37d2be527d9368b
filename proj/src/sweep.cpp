#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "bhr/conditions.hpp"
#include "bhr/error.hpp"
#include "bhr/search.hpp"

namespace bhr {

bool next_multiset(std::vector<int>& seq, int max) {
  int i = static_cast<int>(seq.size()) - 1;
  while (i >= 0 && seq[i] == max) --i;
  if (i < 0) return false;
  int value = seq[i] + 1;
  for (std::size_t j = i; j < seq.size(); ++j) seq[j] = value;
  return true;
}

namespace {

EdgeLengthList from_sequence(const std::vector<int>& seq) {
  std::map<int, int> counts;
  for (int x : seq) ++counts[x];
  return EdgeLengthList(std::move(counts));
}

std::string join(const std::vector<int>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// Plain `key=value` lines. `last` is the final sequence already classified.
struct Checkpoint {
  int v = 0;
  std::vector<int> last;
  SweepReport totals;
};

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
    out << "bhr-sweep-checkpoint 1\n";
    out << "v=" << cp.v << "\n";
    out << "last=" << join(cp.last) << "\n";
    out << "lists=" << cp.totals.lists << "\n";
    out << "condition_holds=" << cp.totals.condition_holds << "\n";
    out << "realizable=" << cp.totals.realizable << "\n";
    out << "agreements=" << cp.totals.agreements << "\n";
    out << "unresolved=" << cp.totals.unresolved << "\n";
    for (const auto& v : cp.totals.violations) out << "violation=" << v << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "bhr-sweep-checkpoint 1")
    throw ParseError("not a sweep checkpoint: " + path.string(), 0);
  Checkpoint cp;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("malformed checkpoint line '" + line + "'", 0);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "v") cp.v = std::stoi(value);
    else if (key == "last") cp.last = split_ints(value);
    else if (key == "lists") cp.totals.lists = std::stoull(value);
    else if (key == "condition_holds") cp.totals.condition_holds = std::stoull(value);
    else if (key == "realizable") cp.totals.realizable = std::stoull(value);
    else if (key == "agreements") cp.totals.agreements = std::stoull(value);
    else if (key == "unresolved") cp.totals.unresolved = std::stoull(value);
    else if (key == "violation") cp.totals.violations.push_back(value);
    else throw ParseError("unknown checkpoint key '" + key + "'", 0);
  }
  return cp;
}

SweepRecord classify(const std::vector<int>& seq, std::uint64_t budget) {
  SweepRecord r;
  r.list = from_sequence(seq);
  r.condition_holds = condition_two(r.list).holds;
  SearchConfig config;
  config.mode = Mode::cyclic;
  config.budget = budget;
  auto outcome = search(r.list, config);
  r.witness = outcome.found;
  r.exhausted = outcome.exhausted;
  r.nodes = outcome.nodes;
  return r;
}

}  // namespace

SweepReport sweep_conjecture(int v, const SweepOptions& options) {
  if (v < 2) throw InvalidList("sweep needs v >= 2");
  if (v > options.cap)
    throw CapExceeded("sweep is capped at v <= " + std::to_string(options.cap) + ", got v = " + std::to_string(v));

  const int max = v / 2;
  std::vector<int> seq(v - 1, 1);
  bool more = true;
  SweepReport report;
  report.v = v;

  if (options.checkpoint) {
    if (auto cp = read_checkpoint(*options.checkpoint)) {
      if (cp->v != v) throw Error("checkpoint is for v = " + std::to_string(cp->v));
      if (cp->last.size() != seq.size()) throw ParseError("checkpoint sequence has the wrong length", 0);
      report = cp->totals;
      report.v = v;
      report.resumed = true;
      seq = cp->last;
      more = next_multiset(seq, max);
    }
  }

  const int workers = std::max(1, options.workers);
  std::vector<std::vector<int>> batch;
  std::vector<SweepRecord> results;
  while (more) {
    batch.clear();
    while (more && batch.size() < options.checkpoint_every) {
      batch.push_back(seq);
      more = next_multiset(seq, max);
    }
    results.assign(batch.size(), SweepRecord{});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) results[i] = classify(batch[i], options.budget);
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (const auto& r : results) {
      ++report.lists;
      if (r.condition_holds) ++report.condition_holds;
      if (r.witness) ++report.realizable;
      if (r.unresolved()) ++report.unresolved;
      else if (r.violation()) report.violations.push_back(r.list.to_string());
      else ++report.agreements;
      if (options.on_record) options.on_record(r);
    }
    if (options.checkpoint) write_checkpoint(*options.checkpoint, Checkpoint{v, batch.back(), report});
  }
  return report;
}

}  // namespace bhr
