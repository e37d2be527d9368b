#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "bhr/path.hpp"

// Data-parallel inner loops. Each kernel has a scalar reference and an AVX2
// variant; the variant is picked once at runtime from the CPU features.
// Setting BHR_FORCE_SCALAR=1 in the environment pins the scalar path.
namespace bhr::kernels {

enum class Backend { scalar, avx2 };

std::string_view to_string(Backend backend);
bool available(Backend backend);
Backend active();

// out[i] = length of the edge (vertices[i], vertices[i+1]); out.size() must be
// vertices.size() - 1. Linear lengths are |x - y|, cyclic ones fold by v.
void consecutive_lengths(Backend backend, std::span<const std::int32_t> vertices, std::int32_t v,
                         Mode mode, std::span<std::int32_t> out);
void consecutive_lengths(std::span<const std::int32_t> vertices, std::int32_t v, Mode mode,
                         std::span<std::int32_t> out);

// out[i] = (in[i] + shift) mod v for in[i] in [0, v) and shift in [0, v).
void translate_mod(Backend backend, std::span<const std::int32_t> in, std::int32_t shift,
                   std::int32_t v, std::span<std::int32_t> out);
void translate_mod(std::span<const std::int32_t> in, std::int32_t shift, std::int32_t v,
                   std::span<std::int32_t> out);

namespace detail {
void consecutive_lengths_scalar(const std::int32_t* in, std::size_t edges, std::int32_t v, bool cyclic,
                                std::int32_t* out);
void consecutive_lengths_avx2(const std::int32_t* in, std::size_t edges, std::int32_t v, bool cyclic,
                              std::int32_t* out);
void translate_mod_scalar(const std::int32_t* in, std::size_t n, std::int32_t shift, std::int32_t v,
                          std::int32_t* out);
void translate_mod_avx2(const std::int32_t* in, std::size_t n, std::int32_t shift, std::int32_t v,
                        std::int32_t* out);
}  // namespace detail

}  // namespace bhr::kernels
