#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bhr/edge_list.hpp"
#include "bhr/path.hpp"

namespace bhr {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr int kMaxSearchOrder = 64;

struct SearchConfig {
  Mode mode = Mode::linear;
  bool perfect = false;  // linear only: the path must end at v-1
  std::uint64_t budget = kDefaultBudget;
  // Reachability and degree cuts, plus x1 <= v/2 in cyclic mode. None of
  // them changes the first witness found.
  bool prune = true;
};

// Enough to re-run a search that found nothing and compare node counts.
struct Certificate {
  std::string id;
  std::string list;
  Mode mode = Mode::linear;
  bool perfect = false;
  bool pruned = true;
  std::uint64_t nodes = 0;

  std::string to_json() const;
  static Certificate from_json(const std::string& text);
};

class CertificateStore {
 public:
  virtual ~CertificateStore() = default;
  virtual void put(const Certificate& cert) = 0;
  virtual std::optional<Certificate> get(const std::string& id) const = 0;
};

class MemoryCertificateStore : public CertificateStore {
 public:
  void put(const Certificate& cert) override;
  std::optional<Certificate> get(const std::string& id) const override;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Certificate> certs_;
};

// One `<id>.json` file per certificate.
class DirectoryCertificateStore : public CertificateStore {
 public:
  explicit DirectoryCertificateStore(std::filesystem::path dir);
  void put(const Certificate& cert) override;
  std::optional<Certificate> get(const std::string& id) const override;

 private:
  std::filesystem::path dir_;
};

// Store used by search() when none is passed. Starts as a process-wide
// memory store.
CertificateStore& default_certificate_store();
void set_default_certificate_store(std::shared_ptr<CertificateStore> store);

struct SearchOutcome {
  std::optional<PathRealization> found;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  std::optional<std::string> certificate;
};

// Depth-first extension from vertex 0, trying candidate vertices in
// ascending order, so the witness found is the lexicographically smallest.
// Orders above 64 throw CapExceeded.
SearchOutcome search(const EdgeLengthList& list, const SearchConfig& config, CertificateStore* store = nullptr);

// Re-runs the certified search and checks it still exhausts with the same
// node count.
bool recheck(const Certificate& cert);

// Number of realizations starting at 0. Throws CapExceeded above `cap`.
std::uint64_t count_realizations(const EdgeLengthList& list, Mode mode, int cap = 13);

struct SweepRecord {
  EdgeLengthList list;
  bool condition_holds = false;
  std::optional<PathRealization> witness;
  bool exhausted = false;
  std::uint64_t nodes = 0;

  // Condition and search disagree.
  bool violation() const { return condition_holds ? (exhausted && !witness) : witness.has_value(); }
  bool unresolved() const { return !exhausted && !witness; }
};

struct SweepOptions {
  int cap = 13;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  std::optional<std::filesystem::path> checkpoint;
  std::size_t checkpoint_every = 256;
  std::function<void(const SweepRecord&)> on_record;
};

struct SweepReport {
  int v = 0;
  std::uint64_t lists = 0;
  std::uint64_t condition_holds = 0;
  std::uint64_t realizable = 0;
  std::uint64_t agreements = 0;
  std::uint64_t unresolved = 0;
  std::vector<std::string> violations;
  bool resumed = false;
};

// Every multiset of v-1 lengths from 1..floor(v/2), in lexicographic order of
// their nondecreasing sequences, classified by condition two and cyclic
// search. Violations are collected, never thrown.
SweepReport sweep_conjecture(int v, const SweepOptions& options = {});

// Lexicographic successor of a nondecreasing sequence over [1, max]; false
// when `seq` is the last one.
bool next_multiset(std::vector<int>& seq, int max);

}  // namespace bhr
