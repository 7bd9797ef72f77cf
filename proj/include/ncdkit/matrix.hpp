#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncdkit/compressor.hpp"
#include "ncdkit/corpus.hpp"
#include "ncdkit/distances.hpp"
#include "ncdkit/kmer.hpp"

namespace ncdkit {

enum class RecipeDistance {
  Ncd,
  DsHat,
  Cdm,
  BenedettoBigS,
  DPrime,
  DStar,
  FreqEuclidean,
};

RecipeDistance parse_recipe_distance(const std::string& name);
std::string recipe_distance_name(RecipeDistance d);
bool distance_is_compression_based(RecipeDistance d);

struct DistanceRecipe {
  RecipeDistance distance = RecipeDistance::Ncd;
  std::optional<CompressorSpec> compressor;
  std::optional<unsigned> k;
  std::optional<std::string> spaced_template;
  CondVariant variant = CondVariant::SetDiff;
  JointSizePolicy joint_policy = JointSizePolicy::MinOfBothOrders;

  void validate() const;
  std::string describe() const;
};

struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;  // n*n row-major, raw (possibly asymmetric)
  DistanceRecipe recipe;

  std::size_t size() const { return labels.size(); }
  double& at(std::size_t i, std::size_t j) { return values[i * size() + j]; }
  double at(std::size_t i, std::size_t j) const {
    return values[i * size() + j];
  }
  std::size_t index_of(const std::string& label) const;
};

struct ComputeStats {
  std::uint64_t pair_evaluations = 0;      // off-diagonal unordered pairs
  std::uint64_t diagonal_evaluations = 0;  // raw self-distances
  std::uint64_t single_compressions = 0;   // C(x) per document
  std::uint64_t joint_compressions = 0;    // C(xy) concatenations
  std::uint64_t kmer_set_builds = 0;       // one KmerSet per document
};

// Evaluates every unordered pair once plus the raw diagonal; per-document
// sizes and word sets are computed once and shared. Output is bit-identical
// for any worker count.
DistanceMatrix compute_matrix(const std::vector<Document>& corpus,
                              const DistanceRecipe& recipe,
                              unsigned workers = 1,
                              ComputeStats* stats = nullptr);

enum class SymmetrizeMode { Raw, Avg, Min };

DistanceMatrix symmetrize_export(const DistanceMatrix& m, SymmetrizeMode mode,
                                 bool zero_diagonal);

struct MetricAuditReport {
  double max_self_distance = 0;
  double max_symmetry_gap = 0;
  std::uint64_t triangle_violations = 0;  // unordered triples, at tolerance
  std::uint64_t triples_checked = 0;
  double worst_triangle_slack = 0;
  double tolerance = 0;
};

MetricAuditReport metric_audit(const DistanceMatrix& m, double tolerance);

// PHYLIP square format: first line n, rows of 10-char labels plus fixed
// 6-decimal values.
std::string to_phylip(const DistanceMatrix& m);
std::string to_tsv(const DistanceMatrix& m);
std::string matrix_to_json(const DistanceMatrix& m,
                           const MetricAuditReport* audit = nullptr);

DistanceMatrix parse_phylip(const std::string& text);

}  // namespace ncdkit
