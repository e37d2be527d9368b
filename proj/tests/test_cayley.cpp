#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bhr/cayley.hpp"
#include "bhr/error.hpp"

using namespace bhr;

namespace {
EdgeLengthList L(const char* text) { return EdgeLengthList::parse(text); }
const std::vector<int> kCyclic11{0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7};
}  // namespace

TEST_CASE("difference lists are symmetric") {
  std::vector<int> p{0, 1, 2};
  CHECK(difference_list(p, 5) == DifferenceMultiset{{1, 2}, {4, 2}});
  auto d = difference_list(kCyclic11, 11);
  int total = 0;
  for (auto [g, m] : d) total += m;
  CHECK(total == 20);
  CHECK(d == build_from_list(L("1,3^3,5^6")).connection());
  std::vector<int> reversed(kCyclic11.rbegin(), kCyclic11.rend());
  CHECK(difference_list(reversed, 11) == d);
  std::vector<int> repeat{0, 5};
  CHECK_THROWS_AS(difference_list(repeat, 5), InvalidEdge);
}

TEST_CASE("cayley multigraphs from lists") {
  auto g8 = build_from_list(L("2^3,4^4"));
  CHECK(g8.connection() == DifferenceMultiset{{2, 3}, {4, 8}, {6, 3}});
  CHECK(g8.size() == 14);
  CHECK(g8.edge_multiplicity(0, 4) == 8);
  CHECK(g8.edge_multiplicity(6, 0) == 3);
  CHECK(g8.edge_multiplicity(0, 1) == 0);
  auto g11 = build_from_list(L("1,3^3,5^6"));
  CHECK(g11.connection() == DifferenceMultiset{{1, 1}, {3, 3}, {5, 6}, {6, 6}, {8, 3}, {10, 1}});
  // v = 4: the self-paired residue 2 counts twice per occurrence
  CHECK(build_from_list(L("1^2,2")).connection() == DifferenceMultiset{{1, 2}, {2, 2}, {3, 2}});
  CHECK(build_from_list(L("1")).connection() == DifferenceMultiset{{1, 2}});
  CHECK_THROWS_AS(build_from_list(L("3")), InvalidLength);
  CHECK_THROWS_AS(CayleyMultigraph(5, DifferenceMultiset{{1, 1}}), InvalidLength);
  CHECK_THROWS_AS(CayleyMultigraph(5, DifferenceMultiset{{0, 1}}), InvalidLength);
  CHECK_THROWS_AS(g8.edge_multiplicity(2, 2), InvalidEdge);
}

TEST_CASE("size identity") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int v = 2 + static_cast<int>(rng() % 30);
    std::map<int, int> counts;
    for (int i = 0; i < v - 1; ++i) ++counts[1 + static_cast<int>(rng() % (v / 2))];
    auto g = build_from_list(EdgeLengthList(counts));
    CHECK(g.size() == 2 * (v - 1));
    CHECK(2 * g.edge_count() == static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(g.size()));
  }
}

TEST_CASE("translate orbits decompose the cayley multigraph") {
  CHECK(verify_decomposition(PathRealization(kCyclic11)));
  CHECK(verify_decomposition(PathRealization({0, 1, 2, 3, 4, 5})));
  CHECK(build_from_list(L("1^5")).connection() == DifferenceMultiset{{1, 5}, {5, 5}});
  CHECK(verify_decomposition(PathRealization({0})));
  std::mt19937 rng(31);
  int with_half = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int v = 2 + static_cast<int>(rng() % 24);
    auto p = oracle::random_path(v, rng);
    CHECK(verify_decomposition(PathRealization(p)));
    bool half = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) half = half || 2 * oracle::cyclic_len(p[i], p[i + 1], v) == v;
    if (half) {
      ++with_half;
      CHECK_FALSE(oracle::halved_convention_matches(p, v));
    } else {
      CHECK(oracle::halved_convention_matches(p, v));
    }
    // re-indexing the orbit by a fixed shift gives the same edge counts
    auto shifted = oracle::orbit_edges(p, v);
    std::vector<int> q(p);
    for (auto& x : q) x = (x + 1) % v;
    CHECK(oracle::orbit_edges(q, v) == shifted);
    CHECK(translate_orbit_edges(PathRealization(p)) == shifted);
  }
  CHECK(with_half > 20);
}
