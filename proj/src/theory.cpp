#include "ncdkit/theory.hpp"

#include <bit>
#include <string>
#include <stdexcept>

namespace ncdkit::theory {

unsigned ceil_log2(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("ceil_log2(0)");
  unsigned bits = 0;
  std::uint64_t p = 1;
  while (p < v) {
    p <<= 1;
    ++bits;
  }
  return bits;
}

std::uint64_t hamming_code_length(unsigned n, unsigned d) {
  if (n < 4) {
    throw std::invalid_argument("hamming_code_length: n must be >= 4");
  }
  if (d > n) {
    throw std::invalid_argument("hamming_code_length: d > n");
  }
  const std::uint64_t ln = ceil_log2(n);
  const std::uint64_t lln = ceil_log2(ln);
  return 2 * ln + 4 * lln + 2 + static_cast<std::uint64_t>(d) * ln;
}

Ratio kraft_sum(const CodeLengthFn& code, std::uint32_t x, unsigned n) {
  if (n > kMaxEnumLength) {
    throw std::invalid_argument(
        "kraft_sum: refusing exhaustive enumeration beyond n = " +
        std::to_string(kMaxEnumLength));
  }
  Ratio sum = 0;
  const std::uint32_t total = n >= 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t y = 0; y < total; ++y) {
    const std::uint64_t bits = code(x, y, n);
    Ratio term(BigInt(1), BigInt(1) << bits);
    sum += term;
  }
  return sum;
}

Ratio hamming_fraction(std::uint32_t x, std::uint32_t y, unsigned n) {
  if (n == 0) throw std::invalid_argument("hamming_fraction: n must be >= 1");
  const unsigned d = static_cast<unsigned>(std::popcount(x ^ y));
  return Ratio(d, n);
}

namespace {

// Decides count < 2^t + 1 for rational t = p/q >= 0, exactly.
bool density_bound_holds(std::uint64_t count, const Ratio& t) {
  if (count <= 1) return true;  // count - 1 < 2^t always for t >= 0
  if (t < 0) return false;
  const BigInt p = boost::multiprecision::numerator(t);
  const BigInt q = boost::multiprecision::denominator(t);
  // (count - 1)^q < 2^p
  BigInt lhs = boost::multiprecision::pow(
      BigInt(count - 1), q.convert_to<unsigned>());
  BigInt rhs = BigInt(1) << p.convert_to<unsigned>();
  return lhs < rhs;
}

}  // namespace

DensityCheckResult density_check(const NormalizedDistanceFn& dist,
                                 std::uint32_t x, unsigned n,
                                 const Ratio& kappa,
                                 const std::vector<Ratio>& e_grid) {
  if (n > kMaxEnumLength) {
    throw std::invalid_argument(
        "density_check: refusing exhaustive enumeration beyond n = " +
        std::to_string(kMaxEnumLength));
  }
  if (kappa <= 0) {
    throw std::invalid_argument("density_check: kappa must be positive");
  }
  DensityCheckResult res;
  res.x = x;
  res.n = n;
  res.kappa = kappa;
  res.all_pass = true;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (const Ratio& e : e_grid) {
    DensityThresholdResult tr;
    tr.e = e;
    for (std::uint32_t y = 0; y < total; ++y) {
      if (dist(x, y, n) <= e) ++tr.count;
    }
    tr.pass = density_bound_holds(tr.count, e * kappa);
    res.all_pass = res.all_pass && tr.pass;
    res.thresholds.push_back(std::move(tr));
  }
  return res;
}

}  // namespace ncdkit::theory
