#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "bhr/kernels.hpp"

namespace bhr::kernels {

std::string_view to_string(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool available(Backend backend) {
  if (backend == Backend::scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active() {
  static const Backend chosen = [] {
    const char* force = std::getenv("BHR_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0') return Backend::scalar;
    return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
  }();
  return chosen;
}

void consecutive_lengths(Backend backend, std::span<const std::int32_t> vertices, std::int32_t v,
                         Mode mode, std::span<std::int32_t> out) {
  if (vertices.empty()) return;
  if (out.size() + 1 != vertices.size()) throw std::invalid_argument("consecutive_lengths: bad output size");
  const bool cyclic = mode == Mode::cyclic;
  if (backend == Backend::avx2 && available(Backend::avx2))
    detail::consecutive_lengths_avx2(vertices.data(), out.size(), v, cyclic, out.data());
  else
    detail::consecutive_lengths_scalar(vertices.data(), out.size(), v, cyclic, out.data());
}

void consecutive_lengths(std::span<const std::int32_t> vertices, std::int32_t v, Mode mode,
                         std::span<std::int32_t> out) {
  consecutive_lengths(active(), vertices, v, mode, out);
}

void translate_mod(Backend backend, std::span<const std::int32_t> in, std::int32_t shift, std::int32_t v,
                   std::span<std::int32_t> out) {
  if (out.size() != in.size()) throw std::invalid_argument("translate_mod: bad output size");
  if (backend == Backend::avx2 && available(Backend::avx2))
    detail::translate_mod_avx2(in.data(), in.size(), shift, v, out.data());
  else
    detail::translate_mod_scalar(in.data(), in.size(), shift, v, out.data());
}

void translate_mod(std::span<const std::int32_t> in, std::int32_t shift, std::int32_t v,
                   std::span<std::int32_t> out) {
  translate_mod(active(), in, shift, v, out);
}

}  // namespace bhr::kernels
