#include "ncdkit/kernels.hpp"

#include <atomic>
#include <cstring>

namespace ncdkit::kern {

namespace scalar {

std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t max_len) {
  std::size_t i = 0;
  // word-at-a-time; misaligned loads are fine on the targets we build for
  while (i + 8 <= max_len) {
    std::uint64_t wa, wb;
    std::memcpy(&wa, a + i, 8);
    std::memcpy(&wb, b + i, 8);
    if (wa != wb) {
      std::uint64_t diff = wa ^ wb;
#if defined(__GNUC__) || defined(__clang__)
      return i + static_cast<std::size_t>(__builtin_ctzll(diff)) / 8;
#else
      while (a[i] == b[i]) ++i;
      return i;
#endif
    }
    i += 8;
  }
  while (i < max_len && a[i] == b[i]) ++i;
  return i;
}

std::uint64_t sum_sq_diff_u32(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d =
        static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
    acc += static_cast<std::uint64_t>(d * d);
  }
  return acc;
}

}  // namespace scalar

namespace {

struct Impl {
  MatchLengthFn match_length;
  SumSqDiffFn sum_sq_diff;
  const char* name;
};

constexpr Impl kScalar{&scalar::match_length, &scalar::sum_sq_diff_u32,
                       "scalar"};

#ifdef NCDKIT_X86_64
constexpr Impl kAvx2{&avx2::match_length, &avx2::sum_sq_diff_u32, "avx2"};
#endif

std::atomic<bool> g_force_scalar{false};

const Impl& pick() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return kScalar;
#ifdef NCDKIT_X86_64
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t max_len) {
  return pick().match_length(a, b, max_len);
}

std::uint64_t sum_sq_diff_u32(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n) {
  return pick().sum_sq_diff(a, b, n);
}

const char* active_impl() { return pick().name; }

void force_scalar(bool on) {
  g_force_scalar.store(on, std::memory_order_relaxed);
}

}  // namespace ncdkit::kern
