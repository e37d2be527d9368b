#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bhr/conditions.hpp"
#include "bhr/error.hpp"

using namespace bhr;

namespace {
EdgeLengthList L(const char* text) { return EdgeLengthList::parse(text); }
}  // namespace

TEST_CASE("divisors ascend") {
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<int>{1});
  CHECK(divisors(13) == std::vector<int>{1, 13});
}

TEST_CASE("condition two on the small examples") {
  auto r = condition_two(L("2^3,4^4"));
  CHECK_FALSE(r.holds);
  REQUIRE(r.divisor.has_value());
  CHECK(r.divisor->divisor == 2);
  CHECK(r.divisor->multiples == 7);
  CHECK(r.describe() == "fails: d=2 has 7 multiples");

  for (int v = 2; v <= 30; ++v)
    CHECK(condition_two(EdgeLengthList(std::map<int, int>{{1, v - 1}})).holds);

  auto six = condition_two(L("2^5"));
  CHECK_FALSE(six.holds);
  CHECK(six.divisor->divisor == 2);
  CHECK(six.divisor->multiples == 5);

  auto ten = condition_two(L("5^9"));
  CHECK_FALSE(ten.holds);
  CHECK(ten.divisor->divisor == 5);
}

TEST_CASE("condition one on the small examples") {
  CHECK_FALSE(condition_one(L("2^3,4^4")).holds);
  auto r = condition_one(L("2^3,4^4"));
  REQUIRE(r.sublist.has_value());
  CHECK(r.sublist->size < r.sublist->gcd - 1);
  CHECK(condition_one(L("1^6")).holds);
  CHECK(condition_one(L("1,2^3,3^2,4")).holds);  // v = 8
  // v prime: always holds
  CHECK(condition_one(L("2^5,3^5")).holds);
  CHECK(condition_one(L("5^12")).holds);
  CHECK(condition_one(L("")).holds);
}

TEST_CASE("both conditions agree with the references on every small list") {
  for (int v = 2; v <= 10; ++v) {
    std::vector<int> seq(v - 1, 1);
    do {
      oracle::Counts counts;
      for (int x : seq) ++counts[x];
      EdgeLengthList list(counts);
      bool two = oracle::condition_two(counts);
      CHECK(condition_two(list).holds == two);
      CHECK(condition_one(list).holds == oracle::condition_one(counts));
      CHECK(condition_one(list).holds == two);
    } while ([&] {
      for (int i = v - 2; i >= 0; --i)
        if (seq[i] < v / 2) {
          int next = seq[i] + 1;
          for (int j = i; j < v - 1; ++j) seq[j] = next;
          return true;
        }
      return false;
    }());
  }
}

TEST_CASE("large supports agree on both conditions") {
  std::mt19937 rng(5);
  int large = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int v = 44 + static_cast<int>(rng() % 17);
    std::map<int, int> counts;
    for (int l = 1; l <= 21; ++l) counts[l] = 1;
    int heavy = 2 + static_cast<int>(rng() % (v / 2 - 1));
    counts[heavy] += v - 1 - 21;
    EdgeLengthList list(counts);
    if (list.support().size() > 20) ++large;
    CHECK(condition_one(list).holds == condition_two(list).holds);
  }
  CHECK(large == 300);

  // v = 60: 38 copies of 30 exceed v - 30 while the support has 22 lengths.
  std::map<int, int> counts{{30, 38}};
  for (int l = 1; l <= 21; ++l) counts[l] = 1;
  EdgeLengthList list(counts);
  CHECK(list.order() == 60);
  auto two = condition_two(list);
  CHECK_FALSE(two.holds);
  CHECK(two.divisor->divisor == 30);
  auto one = condition_one(list);
  CHECK_FALSE(one.holds);
  REQUIRE(one.sublist.has_value());
  CHECK(one.sublist->gcd == 30);
  counts[30] = 30;
  counts[1] += 8;
  CHECK(condition_one(EdgeLengthList(counts)).holds);
}

TEST_CASE("residue components") {
  std::vector<int> line{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(residue_components(PathRealization(line), 2) == 8);
  CHECK(residue_components(PathRealization({0, 2, 4, 6, 1, 3, 5, 7}), 2) == 2);
  CHECK(residue_components(PathRealization({0, 2, 4, 6, 1, 3, 5, 7}), 1) == 1);
  CHECK_THROWS_AS(residue_components(PathRealization(line), 3), InvalidDivisor);
  CHECK_THROWS_AS(residue_components(PathRealization(line), 0), InvalidDivisor);
}

TEST_CASE("random paths satisfy condition two and the component count") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    int v = 2 + static_cast<int>(rng() % 39);
    auto p = oracle::random_path(v, rng);
    PathRealization path(p);
    auto list = cyclic_lengths(path);
    CHECK(condition_two(list).holds);
    for (int d : divisors(v)) {
      int n = residue_components(path, d);
      CHECK(n == oracle::components(p, v, d));
      CHECK(n >= d);
    }
  }
}

TEST_CASE("the gcd-counting variant accepts the order-8 counterexample") {
  oracle::Counts counts{{2, 3}, {4, 4}};
  CHECK(oracle::gcd_variant(counts));
  CHECK_FALSE(oracle::condition_two(counts));
  CHECK(oracle::all_realizations(counts, true).empty());
  CHECK_FALSE(oracle::any_unnormalized(counts, true));
}
