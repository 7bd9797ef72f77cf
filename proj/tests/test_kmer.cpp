#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "ncdkit/kmer.hpp"

using namespace ncdkit;

namespace {

// independent brute-force enumerator, written against the definitions only
std::set<std::string> brute_kmers(const std::string& x, unsigned k) {
  std::set<std::string> out;
  if (x.size() < k) return out;
  for (std::size_t i = 0; i + k <= x.size(); ++i) out.insert(x.substr(i, k));
  return out;
}

std::size_t brute_n(const std::string& x, unsigned k) {
  return brute_kmers(x, k).size();
}

Ratio brute_d_prime(const std::string& x, const std::string& y, unsigned k,
                    CondVariant v) {
  auto kx = brute_kmers(x, k), ky = brute_kmers(y, k);
  std::size_t nxy, nyx;
  if (v == CondVariant::Concat) {
    nxy = brute_n(x + y, k) - brute_n(y, k);
    nyx = brute_n(y + x, k) - brute_n(x, k);
  } else {
    std::vector<std::string> d;
    std::set_difference(kx.begin(), kx.end(), ky.begin(), ky.end(),
                        std::back_inserter(d));
    nxy = d.size();
    d.clear();
    std::set_difference(ky.begin(), ky.end(), kx.begin(), kx.end(),
                        std::back_inserter(d));
    nyx = d.size();
  }
  return Ratio(std::max(nxy, nyx), std::max(kx.size(), ky.size()));
}

std::string random_dna(std::size_t n, std::mt19937& rng) {
  static const char b[] = "ACGT";
  std::string s(n, 'A');
  for (auto& c : s) c = b[rng() % 4];
  return s;
}

}  // namespace

TEST_CASE("distinct word counts: hand cases") {
  CHECK(distinct_kmers("AAAA", 1).count() == 1);
  CHECK(distinct_kmers("ACGT", 2).count() == 3);
  CHECK(distinct_kmers("ACGTACGT", 2).count() == 4);
  CHECK(distinct_kmers("ACG", 4).count() == 0);
  auto words = distinct_kmers("ACGT", 2).words_sorted();
  CHECK(words == std::vector<std::string>{"AC", "CG", "GT"});
}

TEST_CASE("conditional counts: both variants") {
  CHECK(n_cond("AAAA", "AAAA", 1, CondVariant::Concat) == 0);
  CHECK(n_cond("AAAA", "AAAA", 1, CondVariant::SetDiff) == 0);
  // concat variant counts the junction word TA on self-concatenation
  CHECK(n_cond("ACGT", "ACGT", 2, CondVariant::Concat) == 1);
  CHECK(n_cond("ACGT", "ACGT", 2, CondVariant::SetDiff) == 0);
  CHECK(n_cond("AAAA", "CCCC", 1, CondVariant::SetDiff) == 1);
}

TEST_CASE("d_prime and d_star hand values") {
  CHECK(d_prime("AAAA", "AAAA", 1) == 0);
  CHECK(d_prime("AAAA", "CCCC", 1) == 1);
  CHECK(d_prime("ACGT", "ACGT", 2, CondVariant::Concat) == Ratio(1, 3));
  CHECK(d_star("AAAA", "AAAA", 1) == 0);
  CHECK(d_star("AAAA", "CCCC", 1) == 1);
  CHECK(d_star("ACGT", "ACGT", 2, CondVariant::Concat) == Ratio(1, 2));
  CHECK_THROWS(d_prime("A", "C", 2));
}

TEST_CASE("d_prime matches the brute-force oracle on random DNA") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 1 + rng() % 5;
    const std::string x = random_dna(k + rng() % 40, rng);
    const std::string y = random_dna(k + rng() % 40, rng);
    CHECK(d_prime(x, y, k, CondVariant::SetDiff) ==
          brute_d_prime(x, y, k, CondVariant::SetDiff));
    CHECK(d_prime(x, y, k, CondVariant::Concat) ==
          brute_d_prime(x, y, k, CondVariant::Concat));
    // symmetry is exact for both distances
    CHECK(d_prime(x, y, k) == d_prime(y, x, k));
    CHECK(d_star(x, y, k) == d_star(y, x, k));
    // setdiff variant stays within [0,1]
    const Ratio dp = d_prime(x, y, k);
    CHECK(dp >= 0);
    CHECK(dp <= 1);
  }
}

TEST_CASE("d_star matches its definition on random DNA") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = 1 + rng() % 4;
    const std::string x = random_dna(k + rng() % 30, rng);
    const std::string y = random_dna(k + rng() % 30, rng);
    // denominator: smaller of the two concatenation-order word counts,
    // which keeps the distance exactly symmetric
    const std::size_t n_concat = std::min(brute_n(x + y, k), brute_n(y + x, k));
    const std::size_t nxy = n_cond(x, y, k, CondVariant::SetDiff);
    const std::size_t nyx = n_cond(y, x, k, CondVariant::SetDiff);
    CHECK(d_star(x, y, k) == Ratio(nxy + nyx, n_concat));
  }
}

TEST_CASE("packed DNA representation agrees with the string fallback") {
  std::mt19937 rng(5);
  const std::string x = random_dna(200, rng);
  auto packed = KmerSet::from_sequence(x, 8, Alphabet::Dna);
  auto strings = KmerSet::from_sequence(x, 8, Alphabet::Bytes);
  CHECK(packed.packed());
  CHECK(!strings.packed());
  CHECK(packed.count() == strings.count());
  CHECK(packed.words_sorted() == strings.words_sorted());
}

TEST_CASE("spaced template parsing and hand extraction") {
  auto t = SpacedTemplate::parse("101");
  CHECK(t.length() == 3);
  CHECK(t.weight() == 2);
  auto set = spaced_words("ACGT", t);
  CHECK(set.words_sorted() == std::vector<std::string>{"AG", "CT"});
  CHECK(spaced_words("AAAA", SpacedTemplate::parse("1")).count() == 1);
  CHECK_THROWS(SpacedTemplate::parse("01"));
  CHECK_THROWS(SpacedTemplate::parse("10"));
  CHECK_THROWS(SpacedTemplate::parse("1x1"));
  CHECK_THROWS(SpacedTemplate::parse(""));
}

TEST_CASE("all-ones templates reduce to contiguous k-mers") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string x = random_dna(rng() % 64, rng);
    for (unsigned k = 1; k <= 8; ++k) {
      auto t = SpacedTemplate::parse(std::string(k, '1'));
      CHECK(spaced_words(x, t).words_sorted() ==
            distinct_kmers(x, k).words_sorted());
    }
  }
}

TEST_CASE("frequency-vector Euclidean distance") {
  CHECK(freq_euclidean("ACGT", "ACGT", 2) == 0);
  CHECK(freq_euclidean("AA", "AC", 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(freq_euclidean("AAAA", "AAA", 2) == doctest::Approx(1.0));
}

TEST_CASE("recommended word length") {
  auto r = recommend_k(17000, 4);
  CHECK(r.recommended == 11);
  // sweep range must cover the empirically good window 8..13
  CHECK(r.lo <= 8);
  CHECK(r.hi >= 13);

  auto s = recommend_k(16, 2);
  CHECK(s.recommended == 7);
  CHECK(s.lo == 3);
  CHECK(s.hi == 10);

  auto tiny = recommend_k(2, 4);
  CHECK(tiny.lo == 1);
}
