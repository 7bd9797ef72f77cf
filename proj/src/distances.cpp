#include "ncdkit/distances.hpp"

#include <algorithm>
#include <cmath>

#include "ncdkit/matrix.hpp"

namespace ncdkit {

Ratio ncd(const SizeTriple& s) {
  const std::uint64_t mx = std::max(s.cx, s.cy);
  if (mx == 0) {
    throw DegenerateInputError("ncd: max(C(x), C(y)) is zero");
  }
  const std::uint64_t mn = std::min(s.cx, s.cy);
  const std::uint64_t joint = s.joint();
  Ratio num = joint >= mn ? Ratio(joint - mn) : -Ratio(mn - joint);
  return num / Ratio(mx);
}

Ratio ds_hat(const SizeTriple& s) {
  const std::uint64_t joint = s.joint();
  if (joint == 0) {
    throw DegenerateInputError("ds_hat: joint compressed size is zero");
  }
  Ratio num = Ratio(2) * Ratio(joint) - Ratio(s.cx) - Ratio(s.cy);
  return num / Ratio(joint);
}

Ratio cdm(const SizeTriple& s) {
  if (s.cx + s.cy == 0) {
    throw DegenerateInputError("cdm: C(x) + C(y) is zero");
  }
  return Ratio(s.joint()) / Ratio(s.cx + s.cy);
}

Ratio benedetto_s(std::uint64_t c_xy_frag, std::uint64_t c_x,
                  std::uint64_t c_yy_frag, std::uint64_t c_y,
                  std::uint64_t len_y_frag) {
  if (len_y_frag == 0) {
    throw DegenerateInputError("benedetto_s: empty fragment");
  }
  Ratio delta_cross = Ratio(c_xy_frag) - Ratio(c_x);
  Ratio delta_self = Ratio(c_yy_frag) - Ratio(c_y);
  return (delta_cross - delta_self) / Ratio(len_y_frag);
}

Ratio benedetto_S(const Document& x, const Document& y,
                  const FragmentPolicy& policy, const CompressorSpec& spec) {
  const std::size_t fy = policy.fragment_length(y.bytes.size());
  const std::size_t fx = policy.fragment_length(x.bytes.size());
  if (x.bytes.size() <= fx || y.bytes.size() <= fy) {
    throw DegenerateInputError(
        "benedetto_S: document shorter than its fragment (" + x.id + ", " +
        y.id + ")");
  }
  const std::string yfrag = y.bytes.substr(0, fy);
  const std::string xfrag = x.bytes.substr(0, fx);

  const std::uint64_t c_x = compressed_size(spec, x.bytes).bits;
  const std::uint64_t c_y = compressed_size(spec, y.bytes).bits;
  const std::uint64_t c_xyf = concat_size(spec, x.bytes, yfrag).bits;
  const std::uint64_t c_yyf = concat_size(spec, y.bytes, yfrag).bits;
  const std::uint64_t c_yxf = concat_size(spec, y.bytes, xfrag).bits;
  const std::uint64_t c_xxf = concat_size(spec, x.bytes, xfrag).bits;

  if (c_yyf <= c_y) {
    throw DegenerateInputError("benedetto_S: C(yy') - C(y) = 0 for pair (" +
                               x.id + ", " + y.id + ")");
  }
  if (c_xxf <= c_x) {
    throw DegenerateInputError("benedetto_S: C(xx') - C(x) = 0 for pair (" +
                               y.id + ", " + x.id + ")");
  }

  Ratio s_xy = benedetto_s(c_xyf, c_x, c_yyf, c_y, fy);
  Ratio s_yx = benedetto_s(c_yxf, c_y, c_xxf, c_x, fx);
  return s_xy * Ratio(fy) / (Ratio(c_yyf) - Ratio(c_y)) +
         s_yx * Ratio(fx) / (Ratio(c_xxf) - Ratio(c_x));
}

std::uint64_t CompressedSizeCache::single(const CompressorSpec& spec,
                                          const Document& d) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = singles_.find(d.id);
    if (it != singles_.end()) return it->second;
  }
  std::uint64_t bits = compressed_size(spec, d.bytes).bits;
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = singles_.emplace(d.id, bits);
  if (inserted) ++single_calls_;
  return it->second;
}

std::uint64_t CompressedSizeCache::pair(const CompressorSpec& spec,
                                        const Document& a, const Document& b) {
  const auto key = std::make_pair(a.id, b.id);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
  }
  std::uint64_t bits = concat_size(spec, a.bytes, b.bytes).bits;
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = pairs_.emplace(key, bits);
  if (inserted) ++pair_calls_;
  return it->second;
}

PairDistance ncd_pair(const Document& x, const Document& y,
                      const CompressorSpec& spec, JointSizePolicy policy,
                      CompressedSizeCache* cache) {
  CompressedSizeCache local;
  CompressedSizeCache& c = cache ? *cache : local;

  PairDistance pd;
  pd.formula = DistanceFormula::Ncd;
  pd.sizes.cx = c.single(spec, x);
  pd.sizes.cy = c.single(spec, y);
  pd.sizes.cxy = c.pair(spec, x, y);
  if (policy == JointSizePolicy::MinOfBothOrders) {
    pd.sizes.cyx = c.pair(spec, y, x);
  }
  pd.exact = ncd(pd.sizes);
  pd.value = to_double(pd.exact);
  return pd;
}

DistanceMatrix procrustes_triangularize(const DistanceMatrix& m,
                                        std::size_t max_rounds,
                                        bool* converged) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        throw std::invalid_argument(
            "procrustes_triangularize: input matrix is not symmetric");
      }
    }
  }
  DistanceMatrix out = m;
  bool fixed = false;
  for (std::size_t round = 0; round < max_rounds && !fixed; ++round) {
    fixed = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        double best = out.at(i, j);
        for (std::size_t w = 0; w < n; ++w) {
          if (w == i || w == j) continue;
          best = std::min(best, out.at(i, w) + out.at(w, j));
        }
        if (best < out.at(i, j)) {
          out.at(i, j) = best;
          out.at(j, i) = best;
          fixed = false;
        }
      }
    }
  }
  if (converged) *converged = fixed;
  return out;
}

}  // namespace ncdkit
