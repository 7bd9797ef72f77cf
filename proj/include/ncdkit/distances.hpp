#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "ncdkit/compressor.hpp"
#include "ncdkit/corpus.hpp"
#include "ncdkit/rational.hpp"

namespace ncdkit {

class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class JointSizePolicy { SingleOrder, MinOfBothOrders };

struct SizeTriple {
  std::uint64_t cx = 0;
  std::uint64_t cy = 0;
  std::uint64_t cxy = 0;
  std::optional<std::uint64_t> cyx;

  // min(cxy, cyx) when both orders were measured, else cxy.
  std::uint64_t joint() const {
    return cyx ? std::min(cxy, *cyx) : cxy;
  }
};

// NCD(x,y) = (joint - min(cx,cy)) / max(cx,cy). Exact rational.
Ratio ncd(const SizeTriple& s);

// ds_hat = (2*joint - cx - cy) / joint, the compressor form of the
// sum-normalized distance.
Ratio ds_hat(const SizeTriple& s);

// CDM = joint / (cx + cy); ranges over [1/2, 1] for an ideal compressor.
Ratio cdm(const SizeTriple& s);

// Asymmetric fragment distance s(x,y); may be negative, never clamped.
Ratio benedetto_s(std::uint64_t c_xy_frag, std::uint64_t c_x,
                  std::uint64_t c_yy_frag, std::uint64_t c_y,
                  std::uint64_t len_y_frag);

// Fragment y' = first min(|y|/10, 1 KiB) bytes of y.
struct FragmentPolicy {
  std::size_t divisor = 10;
  std::size_t max_bytes = 1024;
  std::size_t fragment_length(std::size_t doc_length) const {
    std::size_t n = doc_length / divisor;
    if (n < 1) n = 1;
    return std::min(n, max_bytes);
  }
};

// Symmetric two-term fragment distance S(x,y).
Ratio benedetto_S(const Document& x, const Document& y,
                  const FragmentPolicy& policy, const CompressorSpec& spec);

enum class DistanceFormula { Ncd, DsHat, Cdm, BenedettoS, BenedettoBigS, HammingCode };

struct PairDistance {
  Ratio exact;
  double value = 0;
  DistanceFormula formula = DistanceFormula::Ncd;
  SizeTriple sizes;
};

// Memoized compressed sizes per document id and ordered id pair.
class CompressedSizeCache {
 public:
  std::uint64_t single(const CompressorSpec& spec, const Document& d);
  std::uint64_t pair(const CompressorSpec& spec, const Document& a,
                     const Document& b);

  std::uint64_t single_calls() const { return single_calls_; }
  std::uint64_t pair_calls() const { return pair_calls_; }

 private:
  std::mutex mu_;
  std::map<std::string, std::uint64_t> singles_;
  std::map<std::pair<std::string, std::string>, std::uint64_t> pairs_;
  std::uint64_t single_calls_ = 0;
  std::uint64_t pair_calls_ = 0;
};

PairDistance ncd_pair(const Document& x, const Document& y,
                      const CompressorSpec& spec,
                      JointSizePolicy policy = JointSizePolicy::MinOfBothOrders,
                      CompressedSizeCache* cache = nullptr);

struct DistanceMatrix;

// Iteratively repairs triangle violations: m[x][y] <- min_w m[x][w]+m[w][y]
// wherever it exceeds that min, sweeping until a fixpoint or max_rounds.
// Requires a symmetric input. Sets *converged when a fixpoint was reached.
DistanceMatrix procrustes_triangularize(const DistanceMatrix& m,
                                        std::size_t max_rounds,
                                        bool* converged = nullptr);

}  // namespace ncdkit
