#include <stdexcept>
#include <random>
#include <vector>

#include "doctest.h"

#include "bhr/kernels.hpp"

using namespace bhr;
using namespace bhr::kernels;

TEST_CASE("scalar backend is always available") {
  CHECK(available(Backend::scalar));
  CHECK(to_string(Backend::avx2) == "avx2");
  CHECK(available(active()));
}

TEST_CASE("avx2 kernels match the scalar ones") {
  if (!available(Backend::avx2)) {
    MESSAGE("avx2 not available on this CPU; equivalence not exercised");
    return;
  }
  std::mt19937 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    int v = 1 + static_cast<int>(rng() % 200);
    std::size_t n = 1 + rng() % 70;
    std::vector<std::int32_t> in(n);
    for (auto& x : in) x = static_cast<std::int32_t>(rng() % v);
    for (Mode mode : {Mode::linear, Mode::cyclic}) {
      std::vector<std::int32_t> a(n - 1), b(n - 1);
      consecutive_lengths(Backend::scalar, in, v, mode, a);
      consecutive_lengths(Backend::avx2, in, v, mode, b);
      CHECK(a == b);
    }
    std::int32_t shift = static_cast<std::int32_t>(rng() % v);
    std::vector<std::int32_t> a(n), b(n);
    translate_mod(Backend::scalar, in, shift, v, a);
    translate_mod(Backend::avx2, in, shift, v, b);
    CHECK(a == b);
  }
}

TEST_CASE("kernel results") {
  std::vector<std::int32_t> in{0, 9, 1, 5, 4, 3, 8, 2, 6, 7};
  std::vector<std::int32_t> out(9);
  consecutive_lengths(Backend::scalar, in, 10, Mode::linear, out);
  CHECK(out == std::vector<std::int32_t>{9, 8, 4, 1, 1, 5, 6, 4, 1});
  consecutive_lengths(Backend::scalar, in, 10, Mode::cyclic, out);
  CHECK(out == std::vector<std::int32_t>{1, 2, 4, 1, 1, 5, 4, 4, 1});
  std::vector<std::int32_t> moved(10);
  translate_mod(Backend::scalar, in, 3, 10, moved);
  CHECK(moved == std::vector<std::int32_t>{3, 2, 4, 8, 7, 6, 1, 5, 9, 0});
}

TEST_CASE("kernels reject mismatched buffers") {
  std::vector<std::int32_t> in{0, 1, 2}, out(3);
  CHECK_THROWS_AS(consecutive_lengths(in, 3, Mode::linear, out), std::invalid_argument);
  std::vector<std::int32_t> small(2);
  CHECK_THROWS_AS(translate_mod(in, 1, 3, small), std::invalid_argument);
}
