#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bhr/composition.hpp"
#include "bhr/error.hpp"
#include "bhr/family.hpp"

using namespace bhr;

namespace {
PathRealization P(std::vector<int> v) { return PathRealization(std::move(v)); }
EdgeLengthList L(const char* text) { return EdgeLengthList::parse(text); }
const std::vector<int> kCyclic11{0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7};

std::vector<PathRealization> perfect_rows() {
  std::vector<PathRealization> out;
  for (const auto& t : Catalog::builtin().templates()) {
    if (t.kind != FamilyKind::perfect_linear) continue;
    for (int p = 0; p <= (t.is_constant() ? 0 : 2); ++p) out.push_back(instantiate(t, p));
  }
  return out;
}
}  // namespace

TEST_CASE("compose shifts the second path onto the end of the first") {
  auto a = compose(P({0, 1, 2}), P({0, 2, 1, 3}));
  CHECK(a.to_string() == "[0,1,2,4,3,5]");
  CHECK(linear_lengths(a) == L("1^3,2^2"));
  auto r1 = P({0, 3, 6, 1, 4, 7, 2, 5, 8});
  CHECK(compose(r1, P({0})) == r1);
  auto b = compose(r1, P({0, 1}));
  CHECK(b.to_string() == "[0,3,6,1,4,7,2,5,8,9]");
  CHECK(linear_lengths(b) == L("1,3^6,5^2"));
  CHECK_THROWS_AS(compose(P({0, 2, 1}), P({0, 1})), CompositionError);
}

TEST_CASE("ones prefix") {
  CHECK(extend_with_ones(P({0, 2, 1, 3}), 3).to_string() == "[0,1,2,4,3,5]");
  auto r = P({0, 2, 1, 3});
  CHECK(extend_with_ones(r, 1) == r);
  auto big = extend_with_ones(P({0, 5, 3, 1, 6, 9, 4, 2, 7, 12, 10, 11, 8}), 3);
  CHECK(big.order() == 15);
  CHECK(linear_lengths(big) == L("1^3,2^4,3^2,5^5"));
  CHECK_THROWS_AS(extend_with_ones(P({0, 1, 2}), 1), InvalidLength);
}

TEST_CASE("translation") {
  auto p = P(kCyclic11);
  CHECK(translate(p, 0) == kCyclic11);
  CHECK(translate(p, 1) == std::vector<int>{1, 4, 9, 3, 6, 0, 5, 10, 2, 7, 8});
  for (int g = 0; g < 11; ++g) {
    auto t = translate(p, g);
    CHECK(oracle::lengths(t, 11, true) == cyclic_lengths(p).counts());
    for (int h = 0; h < 11; ++h) CHECK(translate(t, h, 11) == translate(p, (g + h) % 11));
  }
  CHECK_THROWS_AS(translate(p, 11), OutOfRange);
  CHECK_THROWS_AS(translate(p, -1), OutOfRange);
}

TEST_CASE("composition adds lists and is associative on perfect chains") {
  auto rows = perfect_rows();
  REQUIRE(rows.size() > 10);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = rows[rng() % rows.size()];
    const auto& b = rows[rng() % rows.size()];
    const auto& c = rows[rng() % rows.size()];
    auto ab = compose(a, b);
    CHECK(linear_lengths(ab) == linear_lengths(a) + linear_lengths(b));
    CHECK(ab.order() == a.order() + b.order() - 1);
    CHECK(is_perfect(ab));
    CHECK(compose(ab, c) == compose(a, compose(b, c)));
  }
  auto tail = P({0, 5, 3, 1, 6, 9, 4, 2, 7, 12, 10, 11, 8});
  CHECK_FALSE(is_perfect(compose(rows.front(), tail)));
}

TEST_CASE("gluing cyclic realizations the same way can change the lengths") {
  // Both paths are cyclic realizations on their own orders; the naive glue on
  // the combined order folds the lengths differently.
  auto first = P({0, 2, 3, 5, 4, 1, 6});
  auto second = P({0, 3, 1, 4, 2});
  auto glued = compose(first, second);
  CHECK(cyclic_lengths(glued) != cyclic_lengths(first) + cyclic_lengths(second));
}
