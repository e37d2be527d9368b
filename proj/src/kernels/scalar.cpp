#include <cstdlib>

#include "bhr/kernels.hpp"

namespace bhr::kernels::detail {

void consecutive_lengths_scalar(const std::int32_t* in, std::size_t edges, std::int32_t v, bool cyclic,
                                std::int32_t* out) {
  for (std::size_t i = 0; i < edges; ++i) {
    std::int32_t d = std::abs(in[i + 1] - in[i]);
    out[i] = (cyclic && v - d < d) ? v - d : d;
  }
}

void translate_mod_scalar(const std::int32_t* in, std::size_t n, std::int32_t shift, std::int32_t v,
                          std::int32_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t y = in[i] + shift;
    out[i] = y >= v ? y - v : y;
  }
}

}  // namespace bhr::kernels::detail
