#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "bhr/edge_list.hpp"
#include "bhr/family.hpp"
#include "bhr/path.hpp"
#include "bhr/search.hpp"

namespace bhr {

// How a witness was obtained. Replaying a trace rebuilds the witness.
struct TraceNode;
using Trace = std::shared_ptr<const TraceNode>;

struct TraceNode {
  enum class Kind { catalog, ones, compose, search, bridge };

  Kind kind = Kind::ones;
  // catalog
  std::string id;
  int param = 0;
  // ones: the straight path [0, 1, ..., count]
  int count = 0;
  // compose: left is perfect, right is shifted onto its end
  std::string rule;
  Trace left;
  Trace right;
  // search
  std::string list;
  Mode mode = Mode::linear;
  bool perfect = false;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  // bridge: a linear witness read as a cyclic one
  Trace inner;

  static Trace make_catalog(std::string id, int param);
  static Trace make_ones(int count);
  static Trace make_compose(std::string rule, Trace left, Trace right);
  static Trace make_search(std::string list, Mode mode, bool perfect, std::uint64_t budget, std::uint64_t nodes);
  static Trace make_bridge(Trace inner);
};

std::string_view to_string(TraceNode::Kind kind);

PathRealization replay(const TraceNode& trace, const Catalog& catalog = Catalog::builtin());

// One line per step, leaves before the compositions that use them.
std::vector<std::string> trace_steps(const TraceNode& trace);

enum class Status { realizable, not_realizable, unknown };

std::string_view to_string(Status status);

struct Verdict {
  Status status = Status::unknown;
  Mode mode = Mode::linear;
  std::optional<PathRealization> witness;
  Trace trace;
  // A citation key for the rule that decided, a certificate id, or a note.
  std::optional<std::string> reason;
  // Unknown only: what ran out.
  std::optional<std::string> budget;
  // "published" (classification tables), "oracle" (exhaustive search),
  // "construction", or "condition" (condition two).
  std::string basis;
  // Quarantined catalog rows and other remarks picked up on the way.
  std::vector<std::string> notes;
};

struct SolverOptions {
  std::uint64_t budget = kDefaultBudget;
  const Catalog* catalog = nullptr;  // builtin when null
  CertificateStore* certificates = nullptr;  // default store when null
};

// Memoized front end. Results are deterministic, so concurrent callers may
// race on the memo harmlessly.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});

  // Status from the classification tables; tuples the tables leave open are
  // settled by exhaustive linear search.
  Verdict decide_linear(const Exponents& e);

  // A validated linear witness, or a cited or certified refusal.
  Verdict construct_linear(const Exponents& e);

  // Support must lie in {1,2,3,5}; throws InvalidList otherwise.
  Verdict construct_cyclic(const EdgeLengthList& list);

  // Any list. Constructive on {1,2,3,5}, search with a budget elsewhere.
  Verdict decide_bhr(const EdgeLengthList& list);

  const Catalog& catalog() const { return *catalog_; }
  std::uint64_t budget() const { return options_.budget; }

 private:
  struct Perfect {
    PathRealization path;
    Trace trace;
  };

  std::optional<Verdict> recall(int table, const Exponents& e) const;
  Verdict remember(int table, const Exponents& e, Verdict v);
  std::optional<Perfect> perfect_base(const Exponents& e, std::vector<std::string>& notes);
  std::vector<Exponents> perfect_bases_within(const Exponents& e) const;
  Verdict build_linear(const Exponents& e);
  Verdict build_cyclic(const EdgeLengthList& list, const Exponents& e);
  Verdict searched(const EdgeLengthList& list, Mode mode, Verdict base);
  CertificateStore* store() const;

  SolverOptions options_;
  const Catalog* catalog_;
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int, int, int>, Verdict> memo_;
};

// Shared process-wide solver with default options.
Solver& default_solver();

// True iff {1^a, 2^b, 3^c} has a linear realization.
bool decide_linear_123(int a, int b, int c);
Verdict decide_linear(int a, int b, int c, int d);
Verdict construct_linear(int a, int b, int c, int d);
Verdict construct_cyclic(const EdgeLengthList& list);
Verdict decide_bhr(const EdgeLengthList& list);

}  // namespace bhr
