#pragma once

#include <cstddef>
#include <cstdint>

// Inner-loop kernels with scalar reference implementations and AVX2
// variants selected at runtime. Both variants are kept equivalence-tested;
// everything above this layer is implementation-agnostic.

namespace ncdkit::kern {

// Length of the common prefix of a[0..max_len) and b[0..max_len).
using MatchLengthFn = std::size_t (*)(const std::uint8_t* a,
                                      const std::uint8_t* b,
                                      std::size_t max_len);

// Sum over i of (int64(a[i]) - int64(b[i]))^2 for u32 count vectors.
using SumSqDiffFn = std::uint64_t (*)(const std::uint32_t* a,
                                      const std::uint32_t* b,
                                      std::size_t n);

namespace scalar {
std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t max_len);
std::uint64_t sum_sq_diff_u32(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n);
}  // namespace scalar

#ifdef NCDKIT_X86_64
namespace avx2 {
std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t max_len);
std::uint64_t sum_sq_diff_u32(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n);
}  // namespace avx2
#endif

// Dispatched entry points (resolved once, at first use).
std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t max_len);
std::uint64_t sum_sq_diff_u32(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n);

// Name of the active implementation ("scalar" or "avx2").
const char* active_impl();

// Test hook: force the scalar path regardless of CPU support.
void force_scalar(bool on);

}  // namespace ncdkit::kern
