#include "ncdkit/kmer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ncdkit/corpus.hpp"
#include "ncdkit/distances.hpp"
#include "ncdkit/kernels.hpp"

namespace ncdkit {

namespace {

int dna_code(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

char dna_char(unsigned code) { return "ACGT"[code & 3]; }

bool use_packed(Alphabet a, unsigned k) {
  return a == Alphabet::Dna && k >= 1 && k <= 32;
}

std::string prepare(std::string_view x, Alphabet a) {
  if (a == Alphabet::Dna) return clean_dna(std::string(x));
  return std::string(x);
}

void finalize_sorted(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void finalize_sorted(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::size_t SpacedTemplate::weight() const {
  return static_cast<std::size_t>(
      std::count(pattern.begin(), pattern.end(), '1'));
}

SpacedTemplate SpacedTemplate::parse(const std::string& pattern) {
  if (pattern.empty() ||
      pattern.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("spaced template must be a non-empty 0/1 string: '" +
                                pattern + "'");
  }
  if (pattern.front() != '1' || pattern.back() != '1') {
    throw std::invalid_argument(
        "spaced template must start and end with 1: '" + pattern + "'");
  }
  return SpacedTemplate{pattern};
}

KmerSet KmerSet::from_sequence(std::string_view x, unsigned k,
                               Alphabet alphabet) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  KmerSet s;
  s.k_ = k;
  s.alphabet_ = alphabet;
  s.packed_ = use_packed(alphabet, k);
  const std::string seq = prepare(x, alphabet);
  if (seq.size() < k) return s;
  if (s.packed_) {
    const std::uint64_t mask =
        k == 32 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (2 * k)) - 1);
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      w = ((w << 2) | static_cast<unsigned>(dna_code(seq[i]))) & mask;
      if (i + 1 >= k) s.packed_words_.push_back(w);
    }
    finalize_sorted(s.packed_words_);
  } else {
    for (std::size_t i = 0; i + k <= seq.size(); ++i) {
      s.string_words_.emplace_back(seq.substr(i, k));
    }
    finalize_sorted(s.string_words_);
  }
  return s;
}

std::size_t KmerSet::count() const {
  return packed_ ? packed_words_.size() : string_words_.size();
}

std::vector<std::string> KmerSet::words_sorted() const {
  if (!packed_) return string_words_;
  std::vector<std::string> out;
  out.reserve(packed_words_.size());
  for (std::uint64_t w : packed_words_) {
    std::string word(k_, 'A');
    for (unsigned i = 0; i < k_; ++i) {
      word[k_ - 1 - i] = dna_char(static_cast<unsigned>(w >> (2 * i)));
    }
    out.push_back(std::move(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename T>
std::size_t merged_union_count(const std::vector<T>& a,
                               const std::vector<T>& b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++i; ++j; }
    ++n;
  }
  return n + (a.size() - i) + (b.size() - j);
}

template <typename T>
std::size_t merged_diff_count(const std::vector<T>& a,
                              const std::vector<T>& b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) { ++n; ++i; }
    else if (b[j] < a[i]) ++j;
    else { ++i; ++j; }
  }
  return n + (a.size() - i);
}

void check_compatible(const KmerSet& a, const KmerSet& b) {
  if (a.k() != b.k() || a.alphabet() != b.alphabet() ||
      a.packed() != b.packed()) {
    throw std::invalid_argument("k-mer sets have mismatched k or alphabet");
  }
}

}  // namespace

std::size_t KmerSet::union_count(const KmerSet& a, const KmerSet& b) {
  check_compatible(a, b);
  return a.packed_ ? merged_union_count(a.packed_words_, b.packed_words_)
                   : merged_union_count(a.string_words_, b.string_words_);
}

std::size_t KmerSet::diff_count(const KmerSet& a, const KmerSet& b) {
  check_compatible(a, b);
  return a.packed_ ? merged_diff_count(a.packed_words_, b.packed_words_)
                   : merged_diff_count(a.string_words_, b.string_words_);
}

KmerSet distinct_kmers(std::string_view x, unsigned k, Alphabet alphabet) {
  return KmerSet::from_sequence(x, k, alphabet);
}

KmerSet spaced_words(std::string_view x, const SpacedTemplate& t,
                     Alphabet alphabet) {
  SpacedTemplate::parse(t.pattern);  // revalidate
  const unsigned k = static_cast<unsigned>(t.weight());
  const std::size_t L = t.length();
  KmerSet s;
  s.k_ = k;
  s.alphabet_ = alphabet;
  s.packed_ = use_packed(alphabet, k);
  const std::string seq = prepare(x, alphabet);
  if (seq.size() < L) return s;

  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < L; ++i) {
    if (t.pattern[i] == '1') ones.push_back(i);
  }
  for (std::size_t start = 0; start + L <= seq.size(); ++start) {
    if (s.packed_) {
      std::uint64_t w = 0;
      for (std::size_t p : ones) {
        w = (w << 2) | static_cast<unsigned>(dna_code(seq[start + p]));
      }
      s.packed_words_.push_back(w);
    } else {
      std::string word;
      word.reserve(k);
      for (std::size_t p : ones) word.push_back(seq[start + p]);
      s.string_words_.push_back(std::move(word));
    }
  }
  if (s.packed_) finalize_sorted(s.packed_words_);
  else finalize_sorted(s.string_words_);
  return s;
}

namespace {

std::size_t n_cond_sets(const KmerSet& kx, const KmerSet& ky,
                        CondVariant variant, std::size_t n_concat) {
  if (variant == CondVariant::SetDiff) return KmerSet::diff_count(kx, ky);
  return n_concat - ky.count();
}

}  // namespace

std::size_t n_cond(std::string_view x, std::string_view y, unsigned k,
                   CondVariant variant, Alphabet alphabet) {
  if (variant == CondVariant::SetDiff) {
    return KmerSet::diff_count(distinct_kmers(x, k, alphabet),
                               distinct_kmers(y, k, alphabet));
  }
  const std::string xy = std::string(x) + std::string(y);
  return distinct_kmers(xy, k, alphabet).count() -
         distinct_kmers(y, k, alphabet).count();
}

Ratio d_prime_sets(const KmerSet& kx, const KmerSet& ky, CondVariant variant,
                   std::size_t n_concat_xy, std::size_t n_concat_yx) {
  const std::size_t nx = kx.count();
  const std::size_t ny = ky.count();
  if (std::max(nx, ny) == 0) {
    throw DegenerateInputError("d_prime: both word sets are empty");
  }
  // each conditional count uses its own concatenation order; the max makes
  // the result symmetric regardless of order-dependent junction words
  const std::size_t nxy = n_cond_sets(kx, ky, variant, n_concat_xy);
  const std::size_t nyx = n_cond_sets(ky, kx, variant, n_concat_yx);
  return Ratio(std::max(nxy, nyx)) / Ratio(std::max(nx, ny));
}

Ratio d_star_sets(const KmerSet& kx, const KmerSet& ky, CondVariant variant,
                  std::size_t n_concat_xy, std::size_t n_concat_yx) {
  const std::size_t denom = std::min(n_concat_xy, n_concat_yx);
  if (denom == 0) {
    throw DegenerateInputError("d_star: empty concatenation word set");
  }
  const std::size_t nxy = n_cond_sets(kx, ky, variant, n_concat_xy);
  const std::size_t nyx = n_cond_sets(ky, kx, variant, n_concat_yx);
  return Ratio(nxy + nyx) / Ratio(denom);
}

namespace {

std::pair<std::size_t, std::size_t> concat_counts(std::string_view x,
                                                  std::string_view y,
                                                  unsigned k,
                                                  Alphabet alphabet) {
  const std::string xs(x), ys(y);
  return {distinct_kmers(xs + ys, k, alphabet).count(),
          distinct_kmers(ys + xs, k, alphabet).count()};
}

}  // namespace

Ratio d_prime(std::string_view x, std::string_view y, unsigned k,
              CondVariant variant, Alphabet alphabet) {
  const KmerSet kx = distinct_kmers(x, k, alphabet);
  const KmerSet ky = distinct_kmers(y, k, alphabet);
  const auto [nxy, nyx] = concat_counts(x, y, k, alphabet);
  return d_prime_sets(kx, ky, variant, nxy, nyx);
}

Ratio d_star(std::string_view x, std::string_view y, unsigned k,
             CondVariant variant, Alphabet alphabet) {
  const KmerSet kx = distinct_kmers(x, k, alphabet);
  const KmerSet ky = distinct_kmers(y, k, alphabet);
  const auto [nxy, nyx] = concat_counts(x, y, k, alphabet);
  return d_star_sets(kx, ky, variant, nxy, nyx);
}

double freq_euclidean(std::string_view x, std::string_view y, unsigned k,
                      Alphabet alphabet) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto counts = [&](std::string_view s) {
    std::map<std::string, std::uint32_t> c;
    const std::string seq = prepare(s, alphabet);
    for (std::size_t i = 0; i + k <= seq.size(); ++i) {
      ++c[seq.substr(i, k)];
    }
    return c;
  };
  const auto cx = counts(x);
  const auto cy = counts(y);

  std::vector<std::uint32_t> vx, vy;
  auto ix = cx.begin();
  auto iy = cy.begin();
  while (ix != cx.end() || iy != cy.end()) {
    if (iy == cy.end() || (ix != cx.end() && ix->first < iy->first)) {
      vx.push_back(ix->second);
      vy.push_back(0);
      ++ix;
    } else if (ix == cx.end() || iy->first < ix->first) {
      vx.push_back(0);
      vy.push_back(iy->second);
      ++iy;
    } else {
      vx.push_back(ix->second);
      vy.push_back(iy->second);
      ++ix;
      ++iy;
    }
  }
  const std::uint64_t ss = kern::sum_sq_diff_u32(vx.data(), vy.data(), vx.size());
  return std::sqrt(static_cast<double>(ss));
}

KRange recommend_k(std::uint64_t n, unsigned alphabet_size) {
  if (n < 2) throw std::invalid_argument("recommend_k: n must be >= 2");
  if (alphabet_size < 2) {
    throw std::invalid_argument("recommend_k: alphabet size must be >= 2");
  }
  const double lg = std::log(static_cast<double>(n)) /
                    std::log(static_cast<double>(alphabet_size));
  const unsigned base = static_cast<unsigned>(std::ceil(lg - 1e-9));
  KRange r;
  r.recommended = base + 3;
  r.lo = base > 1 ? base - 1 : 1;
  r.hi = base + 6;
  return r;
}

}  // namespace ncdkit
