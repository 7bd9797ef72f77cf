#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncdkit/rational.hpp"

namespace ncdkit {

enum class Alphabet { Dna, Bytes };

enum class CondVariant { Concat, SetDiff };

// Set of distinct (possibly overlapping) length-k words. DNA words with
// k <= 32 are 2-bit packed into sorted u64 vectors; everything else falls
// back to sorted strings.
class KmerSet {
 public:
  static KmerSet from_sequence(std::string_view x, unsigned k,
                               Alphabet alphabet = Alphabet::Dna);

  unsigned k() const { return k_; }
  Alphabet alphabet() const { return alphabet_; }
  std::size_t count() const;
  bool packed() const { return packed_; }

  std::vector<std::string> words_sorted() const;

  static std::size_t union_count(const KmerSet& a, const KmerSet& b);
  // |a \ b|
  static std::size_t diff_count(const KmerSet& a, const KmerSet& b);

 private:
  friend KmerSet spaced_words(std::string_view, const struct SpacedTemplate&,
                              Alphabet);
  unsigned k_ = 0;
  Alphabet alphabet_ = Alphabet::Dna;
  bool packed_ = false;
  std::vector<std::uint64_t> packed_words_;  // sorted, unique
  std::vector<std::string> string_words_;    // sorted, unique
};

struct SpacedTemplate {
  std::string pattern;  // 0/1 string, first and last must be '1'

  std::size_t length() const { return pattern.size(); }
  std::size_t weight() const;
  static SpacedTemplate parse(const std::string& pattern);
};

KmerSet distinct_kmers(std::string_view x, unsigned k,
                       Alphabet alphabet = Alphabet::Dna);

// Words extracted through the template's 1-positions, sliding one step at a
// time; feeds d_prime/d_star exactly like contiguous k-mer sets.
KmerSet spaced_words(std::string_view x, const SpacedTemplate& t,
                     Alphabet alphabet = Alphabet::Dna);

// N(x|y): concat variant = N(xy) - N(y); setdiff variant = |kmers(x)\kmers(y)|.
std::size_t n_cond(std::string_view x, std::string_view y, unsigned k,
                   CondVariant variant, Alphabet alphabet = Alphabet::Dna);

// d'(x,y) = max{N(x|y), N(y|x)} / max{N(x), N(y)}
Ratio d_prime(std::string_view x, std::string_view y, unsigned k,
              CondVariant variant = CondVariant::SetDiff,
              Alphabet alphabet = Alphabet::Dna);

// d*(x,y) = (N(x|y) + N(y|x)) / N(xy); N(xy) is always the concat count.
Ratio d_star(std::string_view x, std::string_view y, unsigned k,
             CondVariant variant = CondVariant::SetDiff,
             Alphabet alphabet = Alphabet::Dna);

// Variants computed from precomputed word sets (contiguous or spaced).
// n_concat_xy / n_concat_yx are the distinct-word counts of the two
// concatenation orders; the d* denominator uses their minimum so the
// distance stays exactly symmetric despite order-dependent junction words.
Ratio d_prime_sets(const KmerSet& kx, const KmerSet& ky, CondVariant variant,
                   std::size_t n_concat_xy, std::size_t n_concat_yx);
Ratio d_star_sets(const KmerSet& kx, const KmerSet& ky, CondVariant variant,
                  std::size_t n_concat_xy, std::size_t n_concat_yx);

// Euclidean distance between overlapping-occurrence count vectors.
double freq_euclidean(std::string_view x, std::string_view y, unsigned k,
                      Alphabet alphabet = Alphabet::Dna);

struct KRange {
  unsigned recommended = 0;
  unsigned lo = 0;
  unsigned hi = 0;
};

// k = ceil(log_a n) + 3 with sweep range [ceil(log_a n) - 1, ceil + 6],
// clipped at 1.
KRange recommend_k(std::uint64_t n, unsigned alphabet_size);

}  // namespace ncdkit
