#include <immintrin.h>

#include <cstring>

#include "ncdkit/kernels.hpp"

namespace ncdkit::kern::avx2 {

std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t max_len) {
  std::size_t i = 0;
  while (i + 32 <= max_len) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    std::uint32_t eq = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    if (eq != 0xffffffffu) {
      return i + static_cast<std::size_t>(__builtin_ctz(~eq));
    }
    i += 32;
  }
  return scalar::match_length(a + i, b + i, max_len - i) + i;
}

std::uint64_t sum_sq_diff_u32(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // counts are < 2^31 so the i32 difference cannot overflow
    __m256i d = _mm256_sub_epi32(va, vb);
    // square the even and odd 32-bit lanes into 64-bit products
    __m256i even = _mm256_mul_epi32(d, d);
    __m256i shifted = _mm256_srli_epi64(d, 32);
    __m256i odd = _mm256_mul_epi32(shifted, shifted);
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(even, odd));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    std::int64_t d =
        static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

}  // namespace ncdkit::kern::avx2
