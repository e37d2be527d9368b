#include "bhr/search.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bhr/error.hpp"

namespace bhr {

namespace {

using Mask = std::uint64_t;

class Searcher {
 public:
  Searcher(const EdgeLengthList& list, const SearchConfig& config, bool counting)
      : v_(list.order()), config_(config), counting_(counting), reflect_(config.prune && !counting) {
    if (v_ > kMaxSearchOrder) throw CapExceeded("search supports v <= 64, got " + std::to_string(v_));
    if (config.perfect && config.mode == Mode::cyclic) throw Error("perfect search is linear only");
    full_ = v_ == 64 ? ~Mask{0} : (Mask{1} << v_) - 1;
    for (const auto& [length, mult] : list.counts()) {
      if (length >= v_) {
        impossible_ = true;
        continue;
      }
      if (config.mode == Mode::cyclic && 2 * length > v_) {
        impossible_ = true;
        continue;
      }
      remaining_[length] = mult;
    }
  }

  void run() {
    path_.assign(1, 0);
    if (impossible_) {
      exhausted_ = true;
      return;
    }
    if (v_ == 1) {
      record();
      exhausted_ = !found_.has_value() || counting_;
      return;
    }
    stopped_ = false;
    extend(0, Mask{1});
    exhausted_ = !stopped_ && (counting_ || !found_);
  }

  std::optional<std::vector<int>> found_;
  bool exhausted_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;

 private:
  Mask shift(Mask s, int l, bool up) const {
    if (config_.mode == Mode::linear) return (up ? s << l : s >> l) & full_;
    int r = up ? l : v_ - l;
    return ((s << r) | (s >> (v_ - r))) & full_;
  }

  // Cuts that never remove a completion: the unvisited vertices must all be
  // reachable from x, and at most one of them (the end) may have fewer than
  // two usable neighbours.
  bool viable(int x, Mask visited) const {
    Mask unvisited = full_ & ~visited;
    if (!unvisited) return true;
    Mask open = unvisited | (Mask{1} << x);
    Mask once = 0, twice = 0;
    for (int l = 1; l < v_; ++l) {
      if (!remaining_[l]) continue;
      Mask a = shift(open, l, true);
      twice |= once & a;
      once |= a;
      if (config_.mode == Mode::cyclic && 2 * l == v_) continue;
      Mask b = shift(open, l, false);
      twice |= once & b;
      once |= b;
    }
    Mask weak = unvisited & ~twice;
    if (unvisited & ~once) return false;
    if (config_.perfect) {
      if (weak & ~(Mask{1} << (v_ - 1))) return false;
    } else if (weak & (weak - 1)) {
      return false;
    }

    Mask reach = Mask{1} << x;
    Mask frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (int l = 1; l < v_; ++l) {
        if (!remaining_[l]) continue;
        next |= shift(frontier, l, true);
        next |= shift(frontier, l, false);
      }
      frontier = next & unvisited & ~reach;
      reach |= frontier;
    }
    return (unvisited & ~reach) == 0;
  }

  void record() {
    if (counting_) {
      ++count_;
      return;
    }
    found_ = path_;
  }

  bool done() const { return stopped_ || (!counting_ && found_); }

  void extend(int x, Mask visited) {
    if (++nodes_ > config_.budget) {
      stopped_ = true;
      return;
    }
    if (static_cast<int>(path_.size()) == v_) {
      if (!config_.perfect || x == v_ - 1) record();
      return;
    }
    if (config_.prune && !viable(x, visited)) return;

    std::array<int, 2 * kMaxSearchOrder> cand{};
    int n = 0;
    auto push = [&](int y) {
      if (y < 0 || y >= v_ || (visited >> y & 1)) return;
      if (config_.perfect && y == v_ - 1 && static_cast<int>(path_.size()) + 1 < v_) return;
      if (reflect_ && config_.mode == Mode::cyclic && path_.size() == 1 && 2 * y > v_) return;
      for (int i = 0; i < n; ++i)
        if (cand[i] == y) return;
      cand[n++] = y;
    };
    for (int l = 1; l < v_; ++l) {
      if (!remaining_[l]) continue;
      if (config_.mode == Mode::linear) {
        push(x - l);
        push(x + l);
      } else {
        push((x + l) % v_);
        push((x - l + v_) % v_);
      }
    }
    std::sort(cand.begin(), cand.begin() + n);

    for (int i = 0; i < n && !done(); ++i) {
      int y = cand[i];
      int d = y > x ? y - x : x - y;
      int l = config_.mode == Mode::cyclic ? std::min(d, v_ - d) : d;
      --remaining_[l];
      path_.push_back(y);
      extend(y, visited | (Mask{1} << y));
      path_.pop_back();
      ++remaining_[l];
    }
  }

  int v_;
  SearchConfig config_;
  bool counting_;
  // x -> -x fixes 0 and every cyclic length, so x1 <= v/2 loses nothing.
  bool reflect_;
  bool impossible_ = false;
  bool stopped_ = false;
  Mask full_ = 0;
  std::array<int, kMaxSearchOrder + 1> remaining_{};
  std::vector<int> path_;
};

std::string fnv_id(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "cert-";
  for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 15];
  return out;
}

std::shared_ptr<CertificateStore>& default_store_slot() {
  static std::shared_ptr<CertificateStore> store = std::make_shared<MemoryCertificateStore>();
  return store;
}

std::mutex& default_store_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "bhr-certificate/1";
  j["id"] = id;
  j["list"] = list;
  j["mode"] = std::string(bhr::to_string(mode));
  j["perfect"] = perfect;
  j["pruned"] = pruned;
  j["nodes"] = nodes;
  return j.dump();
}

Certificate Certificate::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.at("schema") != "bhr-certificate/1") throw ParseError("unknown certificate schema", 0);
    Certificate c;
    c.id = j.at("id").get<std::string>();
    c.list = j.at("list").get<std::string>();
    c.mode = parse_mode(j.at("mode").get<std::string>());
    c.perfect = j.at("perfect").get<bool>();
    c.pruned = j.at("pruned").get<bool>();
    c.nodes = j.at("nodes").get<std::uint64_t>();
    return c;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), e.byte);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate field error: ") + e.what(), 0);
  }
}

void MemoryCertificateStore::put(const Certificate& cert) {
  std::lock_guard lock(mutex_);
  certs_[cert.id] = cert;
}

std::optional<Certificate> MemoryCertificateStore::get(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = certs_.find(id);
  if (it == certs_.end()) return std::nullopt;
  return it->second;
}

std::size_t MemoryCertificateStore::size() const {
  std::lock_guard lock(mutex_);
  return certs_.size();
}

DirectoryCertificateStore::DirectoryCertificateStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void DirectoryCertificateStore::put(const Certificate& cert) {
  auto target = dir_ / (cert.id + ".json");
  auto tmp = dir_ / (cert.id + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write certificate " + tmp.string());
    out << cert.to_json() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

std::optional<Certificate> DirectoryCertificateStore::get(const std::string& id) const {
  std::ifstream in(dir_ / (id + ".json"));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Certificate::from_json(buffer.str());
}

CertificateStore& default_certificate_store() {
  std::lock_guard lock(default_store_mutex());
  return *default_store_slot();
}

void set_default_certificate_store(std::shared_ptr<CertificateStore> store) {
  std::lock_guard lock(default_store_mutex());
  default_store_slot() = std::move(store);
}

SearchOutcome search(const EdgeLengthList& list, const SearchConfig& config, CertificateStore* store) {
  Searcher s(list, config, false);
  s.run();
  SearchOutcome out;
  out.exhausted = s.exhausted_;
  out.nodes = s.nodes_;
  if (s.found_) {
    out.found = PathRealization(*s.found_);
    if (!validate(*out.found, list, config.mode).passed())
      throw Error("search produced an invalid witness for " + list.to_string());
  } else if (out.exhausted) {
    Certificate cert;
    cert.list = list.to_string();
    cert.mode = config.mode;
    cert.perfect = config.perfect;
    cert.pruned = config.prune;
    cert.nodes = out.nodes;
    cert.id = fnv_id(std::string(to_string(cert.mode)) + (cert.perfect ? "+perfect" : "") +
                     (cert.pruned ? "+pruned" : "") + ":" + cert.list);
    (store ? *store : default_certificate_store()).put(cert);
    out.certificate = cert.id;
  }
  return out;
}

bool recheck(const Certificate& cert) {
  SearchConfig config;
  config.mode = cert.mode;
  config.perfect = cert.perfect;
  config.prune = cert.pruned;
  config.budget = cert.nodes;
  Searcher s(EdgeLengthList::parse(cert.list), config, false);
  s.run();
  return s.exhausted_ && !s.found_ && s.nodes_ == cert.nodes;
}

std::uint64_t count_realizations(const EdgeLengthList& list, Mode mode, int cap) {
  if (list.order() > cap)
    throw CapExceeded("counting is capped at v <= " + std::to_string(cap) + ", got v = " +
                      std::to_string(list.order()));
  SearchConfig config;
  config.mode = mode;
  config.budget = ~std::uint64_t{0};
  Searcher s(list, config, true);
  s.run();
  return s.count_;
}

}  // namespace bhr
