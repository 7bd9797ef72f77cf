#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ncdkit/rational.hpp"

namespace ncdkit::theory {

// Exhaustive enumeration budget: strings of length at most this are
// enumerated; longer requests are refused.
constexpr unsigned kMaxEnumLength = 20;

// ceil(log2 v) for v >= 1.
unsigned ceil_log2(std::uint64_t v);

// Prefix-code length for the Hamming encoding of (n, d, flipped positions):
// 2*ceil(log2 n) + 4*ceil(log2 ceil(log2 n)) + 2 + d*ceil(log2 n).
// Integer ceil logs keep the lengths integral, which can only strengthen
// the Kraft property. Requires n >= 4 and d <= n.
std::uint64_t hamming_code_length(unsigned n, unsigned d);

// Code length in bits for the pair (x, y) of n-bit strings.
using CodeLengthFn =
    std::function<std::uint64_t(std::uint32_t x, std::uint32_t y, unsigned n)>;

// Sum over all y in {0,1}^n of 2^-code(x,y), exact.
Ratio kraft_sum(const CodeLengthFn& code, std::uint32_t x, unsigned n);

// Normalized distance on n-bit strings, exact rational values.
using NormalizedDistanceFn =
    std::function<Ratio(std::uint32_t x, std::uint32_t y, unsigned n)>;

Ratio hamming_fraction(std::uint32_t x, std::uint32_t y, unsigned n);

struct DensityThresholdResult {
  Ratio e;
  std::uint64_t count = 0;  // |{y : d(x,y) <= e}|
  bool pass = false;        // count < 2^(e*kappa) + 1, decided exactly
};

struct DensityCheckResult {
  std::uint32_t x = 0;
  unsigned n = 0;
  Ratio kappa;
  std::vector<DensityThresholdResult> thresholds;
  bool all_pass = false;
};

// Exhaustively counts the e-ball around x for each grid value and checks
// the density bound with kappa standing in for K(x). Exact arithmetic:
// count < 2^(p/q) + 1 is decided as (count-1)^q < 2^p.
DensityCheckResult density_check(const NormalizedDistanceFn& dist,
                                 std::uint32_t x, unsigned n,
                                 const Ratio& kappa,
                                 const std::vector<Ratio>& e_grid);

}  // namespace ncdkit::theory
