#include "bhr/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define BHR_HAVE_AVX2_TARGET 1
#endif

namespace bhr::kernels::detail {

#if BHR_HAVE_AVX2_TARGET

__attribute__((target("avx2"))) void consecutive_lengths_avx2(const std::int32_t* in, std::size_t edges,
                                                              std::int32_t v, bool cyclic,
                                                              std::int32_t* out) {
  const __m256i order = _mm256_set1_epi32(v);
  std::size_t i = 0;
  for (; i + 8 <= edges; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i + 1));
    __m256i d = _mm256_abs_epi32(_mm256_sub_epi32(b, a));
    if (cyclic) d = _mm256_min_epi32(d, _mm256_sub_epi32(order, d));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), d);
  }
  consecutive_lengths_scalar(in + i, edges - i, v, cyclic, out + i);
}

__attribute__((target("avx2"))) void translate_mod_avx2(const std::int32_t* in, std::size_t n,
                                                        std::int32_t shift, std::int32_t v,
                                                        std::int32_t* out) {
  const __m256i s = _mm256_set1_epi32(shift);
  const __m256i vm1 = _mm256_set1_epi32(v - 1);
  const __m256i order = _mm256_set1_epi32(v);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i y = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i)), s);
    __m256i wrap = _mm256_and_si256(_mm256_cmpgt_epi32(y, vm1), order);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi32(y, wrap));
  }
  translate_mod_scalar(in + i, n - i, shift, v, out + i);
}

#else

void consecutive_lengths_avx2(const std::int32_t* in, std::size_t edges, std::int32_t v, bool cyclic,
                              std::int32_t* out) {
  consecutive_lengths_scalar(in, edges, v, cyclic, out);
}

void translate_mod_avx2(const std::int32_t* in, std::size_t n, std::int32_t shift, std::int32_t v,
                        std::int32_t* out) {
  translate_mod_scalar(in, n, shift, v, out);
}

#endif

}  // namespace bhr::kernels::detail
