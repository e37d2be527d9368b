#include "bhr/conditions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "bhr/error.hpp"

namespace bhr {

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string ConditionReport::describe() const {
  if (holds) return "holds";
  std::string out = "fails";
  if (divisor)
    out += ": d=" + std::to_string(divisor->divisor) + " has " + std::to_string(divisor->multiples) +
           " multiples";
  if (sublist) {
    out += ": J={";
    for (std::size_t i = 0; i < sublist->lengths.size(); ++i)
      out += (i ? "," : "") + std::to_string(sublist->lengths[i]);
    out += "} |J|=" + std::to_string(sublist->size) + " gcd=" + std::to_string(sublist->gcd);
  }
  return out;
}

ConditionReport condition_two(const EdgeLengthList& list) {
  const int v = list.order();
  ConditionReport report;
  for (int d : divisors(v)) {
    int multiples = 0;
    for (const auto& [length, mult] : list.counts())
      if (length % d == 0) multiples += mult;
    if (multiples > v - d) {
      report.holds = false;
      report.divisor = DivisorWitness{d, multiples};
      return report;
    }
  }
  return report;
}

namespace {

ConditionReport sublist_failure(const EdgeLengthList& list, const std::vector<int>& outside, int g) {
  ConditionReport report;
  report.holds = false;
  SublistWitness w;
  w.gcd = g;
  for (const auto& [length, mult] : list.counts()) {
    if (std::find(outside.begin(), outside.end(), length) != outside.end()) continue;
    w.lengths.push_back(length);
    w.size += mult;
  }
  report.sublist = std::move(w);
  return report;
}

}  // namespace

ConditionReport condition_one(const EdgeLengthList& list) {
  const int v = list.order();
  const int total = list.size();
  const auto support = list.support();
  const std::size_t n = support.size();

  if (n <= 20) {
    // mask selects the lengths that stay outside J.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      int g = v;
      int outside = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1u)) continue;
        g = std::gcd(g, support[i]);
        outside += list.multiplicity(support[i]);
      }
      if (total - outside < g - 1) {
        std::vector<int> kept;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1u) kept.push_back(support[i]);
        return sublist_failure(list, kept, g);
      }
    }
    return {};
  }

  // best[g] = largest |L \ J| over support subsets with gcd(v, subset) = g.
  struct Best {
    int size;
    std::vector<int> lengths;
  };
  std::map<int, Best> best{{v, {0, {}}}};
  for (int length : support) {
    auto next = best;
    for (const auto& [g, entry] : best) {
      int h = std::gcd(g, length);
      int size = entry.size + list.multiplicity(length);
      auto it = next.find(h);
      if (it == next.end() || it->second.size < size) {
        auto lengths = entry.lengths;
        lengths.push_back(length);
        next[h] = Best{size, std::move(lengths)};
      }
    }
    best = std::move(next);
  }
  for (const auto& [g, entry] : best)
    if (total - entry.size < g - 1) return sublist_failure(list, entry.lengths, g);
  return {};
}

int residue_components(const PathRealization& path, int d) {
  const int v = path.order();
  if (d < 1 || v % d != 0)
    throw InvalidDivisor(std::to_string(d) + " does not divide " + std::to_string(v));
  auto vertices = path.vertices();
  int components = 1;
  int size = 1;
  auto check = [&](int first, int count) {
    if (count > v / d)
      throw Error("component starting at " + std::to_string(first) + " exceeds v/d vertices");
  };
  int first = vertices[0];
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int x = vertices[i];
    int y = vertices[i + 1];
    if (edge_length(x, y, v) % d == 0) {
      if ((y - first) % d != 0) throw Error("component leaves its residue class mod d");
      ++size;
      continue;
    }
    check(first, size);
    ++components;
    first = y;
    size = 1;
  }
  check(first, size);
  return components;
}

}  // namespace bhr
