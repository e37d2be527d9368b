#pragma once

// Reference implementations written straight from the definitions. They
// share no code with the library beyond plain containers.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Counts = std::map<int, int>;

inline int cyclic_len(int x, int y, int v) {
  int d = std::abs(x - y);
  return std::min(d, v - d);
}

inline Counts lengths(const std::vector<int>& p, int v, bool cyclic) {
  Counts out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) ++out[cyclic ? cyclic_len(p[i], p[i + 1], v) : std::abs(p[i] - p[i + 1])];
  return out;
}

inline int order(const Counts& list) {
  int n = 1;
  for (auto [l, m] : list) n += m;
  return n;
}

// Every permutation of 1..v-1 after a leading 0 whose lengths equal `list`.
inline std::vector<std::vector<int>> all_realizations(const Counts& list, bool cyclic) {
  const int v = order(list);
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (lengths(p, v, cyclic) == list) out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// Realizations with any first vertex (no normalization at all).
inline bool any_unnormalized(const Counts& list, bool cyclic) {
  const int v = order(list);
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (lengths(p, v, cyclic) == list) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Multiples of d among the lengths, for every divisor d of v.
inline bool condition_two(const Counts& list) {
  const int v = order(list);
  for (int d = 1; d <= v; ++d) {
    if (v % d) continue;
    int multiples = 0;
    for (auto [l, m] : list)
      if (l % d == 0) multiples += m;
    if (multiples > v - d) return false;
  }
  return true;
}

// Element-level enumeration of sublists J with J and L\J sharing no value.
inline bool condition_one(const Counts& list) {
  const int v = order(list);
  std::vector<int> items;
  for (auto [l, m] : list)
    for (int i = 0; i < m; ++i) items.push_back(l);
  const std::size_t n = items.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> in, out;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? in : out).push_back(items[i]);
    bool disjoint = std::none_of(in.begin(), in.end(),
                                 [&](int x) { return std::find(out.begin(), out.end(), x) != out.end(); });
    if (!disjoint) continue;
    int g = v;
    for (int x : out) g = std::gcd(g, x);
    if (static_cast<int>(in.size()) < g - 1) return false;
  }
  return true;
}

// The variant counting lengths with gcd(l, v) == d, which is too weak.
inline bool gcd_variant(const Counts& list) {
  const int v = order(list);
  for (int d = 1; d <= v; ++d) {
    if (v % d) continue;
    int count = 0;
    for (auto [l, m] : list)
      if (std::gcd(l, v) == d) count += m;
    if (count > v - d) return false;
  }
  return true;
}

inline std::vector<int> random_path(int v, std::mt19937& rng) {
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

// Components after deleting edges whose cyclic length is not a multiple of d.
inline int components(const std::vector<int>& p, int v, int d) {
  int n = 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (cyclic_len(p[i], p[i + 1], v) % d) ++n;
  return n;
}

// Undirected edge counts of the translate orbit, and of the Cayley multigraph
// where v/2 is counted once per occurrence (the halved reading).
inline std::vector<std::vector<int>> orbit_edges(const std::vector<int>& p, int v) {
  std::vector<std::vector<int>> e(v, std::vector<int>(v, 0));
  for (int g = 0; g < v; ++g)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      int x = (p[i] + g) % v, y = (p[i + 1] + g) % v;
      ++e[x][y];
      ++e[y][x];
    }
  return e;
}

inline bool halved_convention_matches(const std::vector<int>& p, int v) {
  Counts connection;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int l = cyclic_len(p[i], p[i + 1], v);
    if (2 * l == v)
      ++connection[l];
    else {
      ++connection[l];
      ++connection[v - l];
    }
  }
  auto orbit = orbit_edges(p, v);
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      auto it = connection.find(((x - y) % v + v) % v);
      if (orbit[x][y] != (it == connection.end() ? 0 : it->second)) return false;
    }
  return true;
}

}  // namespace oracle
