#include "ncdkit/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace ncdkit {

RecipeDistance parse_recipe_distance(const std::string& name) {
  if (name == "ncd") return RecipeDistance::Ncd;
  if (name == "ds-hat") return RecipeDistance::DsHat;
  if (name == "cdm") return RecipeDistance::Cdm;
  if (name == "benedetto-S") return RecipeDistance::BenedettoBigS;
  if (name == "d-prime") return RecipeDistance::DPrime;
  if (name == "d-star") return RecipeDistance::DStar;
  if (name == "freq-euclidean") return RecipeDistance::FreqEuclidean;
  throw std::invalid_argument("unknown distance: " + name);
}

std::string recipe_distance_name(RecipeDistance d) {
  switch (d) {
    case RecipeDistance::Ncd: return "ncd";
    case RecipeDistance::DsHat: return "ds-hat";
    case RecipeDistance::Cdm: return "cdm";
    case RecipeDistance::BenedettoBigS: return "benedetto-S";
    case RecipeDistance::DPrime: return "d-prime";
    case RecipeDistance::DStar: return "d-star";
    case RecipeDistance::FreqEuclidean: return "freq-euclidean";
  }
  return "ncd";
}

bool distance_is_compression_based(RecipeDistance d) {
  return d == RecipeDistance::Ncd || d == RecipeDistance::DsHat ||
         d == RecipeDistance::Cdm || d == RecipeDistance::BenedettoBigS;
}

void DistanceRecipe::validate() const {
  const bool compression = distance_is_compression_based(distance);
  if (compression && !compressor) {
    throw std::invalid_argument("recipe: " + recipe_distance_name(distance) +
                                " requires a compressor spec");
  }
  if (!compression && compressor) {
    throw std::invalid_argument("recipe: " + recipe_distance_name(distance) +
                                " does not take a compressor spec");
  }
  if (!compression && !k && !spaced_template) {
    throw std::invalid_argument("recipe: " + recipe_distance_name(distance) +
                                " requires k or a spaced template");
  }
  if (compression && (k || spaced_template)) {
    throw std::invalid_argument("recipe: " + recipe_distance_name(distance) +
                                " does not take k-mer parameters");
  }
  if (k && spaced_template) {
    throw std::invalid_argument(
        "recipe: k and a spaced template are mutually exclusive");
  }
  if (spaced_template) SpacedTemplate::parse(*spaced_template);
  if (compressor) compressor->validate();
}

std::string DistanceRecipe::describe() const {
  std::string s = recipe_distance_name(distance);
  if (compressor) s += "/" + compressor->describe();
  if (k) s += "/k=" + std::to_string(*k);
  if (spaced_template) s += "/template=" + *spaced_template;
  if (!distance_is_compression_based(distance)) {
    s += variant == CondVariant::SetDiff ? "/setdiff" : "/concat";
  }
  return s;
}

std::size_t DistanceMatrix::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::out_of_range("label not in matrix: " + label);
}

namespace {

Alphabet doc_alphabet(const Document& d) {
  return d.kind == DocKind::Dna ? Alphabet::Dna : Alphabet::Bytes;
}

struct PairTask {
  std::size_t i, j;
};

// Per-corpus precomputation shared by all pair evaluations.
struct Precomputed {
  std::vector<std::uint64_t> single_bits;
  std::vector<KmerSet> sets;
  CompressedSizeCache cache;
};

}  // namespace

DistanceMatrix compute_matrix(const std::vector<Document>& corpus,
                              const DistanceRecipe& recipe, unsigned workers,
                              ComputeStats* stats) {
  recipe.validate();
  const std::size_t n = corpus.size();
  if (n < 2) {
    throw std::invalid_argument("compute_matrix: need at least 2 documents");
  }
  {
    std::set<std::string> ids;
    for (const auto& d : corpus) {
      if (!ids.insert(d.id).second) {
        throw std::invalid_argument("compute_matrix: duplicate id " + d.id);
      }
    }
  }
  if (workers < 1) workers = 1;

  DistanceMatrix m;
  m.recipe = recipe;
  for (const auto& d : corpus) m.labels.push_back(d.id);
  m.values.assign(n * n, 0.0);

  ComputeStats st;
  const bool compression = distance_is_compression_based(recipe.distance);
  Precomputed pre;

  if (compression) {
    pre.single_bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      pre.single_bits[i] =
          compressed_size(*recipe.compressor, corpus[i].bytes).bits;
      ++st.single_compressions;
    }
  } else if (recipe.distance != RecipeDistance::FreqEuclidean) {
    pre.sets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (recipe.spaced_template) {
        pre.sets.push_back(
            spaced_words(corpus[i].bytes,
                         SpacedTemplate::parse(*recipe.spaced_template),
                         doc_alphabet(corpus[i])));
      } else {
        pre.sets.push_back(
            distinct_kmers(corpus[i].bytes, *recipe.k, doc_alphabet(corpus[i])));
      }
      ++st.kmer_set_builds;
    }
  }

  std::atomic<std::uint64_t> joint_compressions{0};

  auto concat_count = [&](std::size_t i, std::size_t j) -> std::size_t {
    const std::string xy = corpus[i].bytes + corpus[j].bytes;
    if (recipe.spaced_template) {
      return spaced_words(xy, SpacedTemplate::parse(*recipe.spaced_template),
                          doc_alphabet(corpus[i]))
          .count();
    }
    return distinct_kmers(xy, *recipe.k, doc_alphabet(corpus[i])).count();
  };

  auto evaluate = [&](std::size_t i, std::size_t j) -> double {
    switch (recipe.distance) {
      case RecipeDistance::Ncd:
      case RecipeDistance::DsHat:
      case RecipeDistance::Cdm: {
        SizeTriple t;
        t.cx = pre.single_bits[i];
        t.cy = pre.single_bits[j];
        t.cxy = concat_size(*recipe.compressor, corpus[i].bytes,
                            corpus[j].bytes)
                    .bits;
        ++joint_compressions;
        if (recipe.joint_policy == JointSizePolicy::MinOfBothOrders && i != j) {
          t.cyx = concat_size(*recipe.compressor, corpus[j].bytes,
                              corpus[i].bytes)
                      .bits;
          ++joint_compressions;
        }
        if (recipe.distance == RecipeDistance::Ncd) return to_double(ncd(t));
        if (recipe.distance == RecipeDistance::DsHat)
          return to_double(ds_hat(t));
        return to_double(cdm(t));
      }
      case RecipeDistance::BenedettoBigS:
        return to_double(benedetto_S(corpus[i], corpus[j], FragmentPolicy{},
                                     *recipe.compressor));
      case RecipeDistance::DPrime:
        return to_double(d_prime_sets(pre.sets[i], pre.sets[j], recipe.variant,
                                      concat_count(i, j), concat_count(j, i)));
      case RecipeDistance::DStar:
        return to_double(d_star_sets(pre.sets[i], pre.sets[j], recipe.variant,
                                     concat_count(i, j), concat_count(j, i)));
      case RecipeDistance::FreqEuclidean:
        return freq_euclidean(corpus[i].bytes, corpus[j].bytes, *recipe.k,
                              doc_alphabet(corpus[i]));
    }
    throw std::logic_error("unreachable distance kind");
  };

  std::vector<PairTask> tasks;
  for (std::size_t i = 0; i < n; ++i) {
    tasks.push_back({i, i});
    for (std::size_t j = i + 1; j < n; ++j) tasks.push_back({i, j});
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        const auto [i, j] = tasks[t];
        double v = evaluate(i, j);
        m.values[i * n + j] = v;
        if (i != j) m.values[j * n + i] = v;
      }
    } catch (const std::exception& e) {
      errors[w] = e.what();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& err : errors) {
    if (!err.empty()) {
      throw std::runtime_error("compute_matrix aborted: " + err);
    }
  }

  // With SingleOrder the off-diagonal evaluation is still definitionally
  // symmetric for every built-in formula (joint = cxy regardless of order),
  // so mirroring the unordered pair keeps raw semantics.
  st.pair_evaluations = n * (n - 1) / 2;
  st.diagonal_evaluations = n;
  st.joint_compressions = joint_compressions.load();
  if (stats) *stats = st;
  return m;
}

DistanceMatrix symmetrize_export(const DistanceMatrix& m, SymmetrizeMode mode,
                                 bool zero_diagonal) {
  const std::size_t n = m.size();
  DistanceMatrix out = m;
  if (mode != SymmetrizeMode::Raw) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double a = m.at(i, j), b = m.at(j, i);
        double v = mode == SymmetrizeMode::Avg ? 0.5 * (a + b) : std::min(a, b);
        out.at(i, j) = v;
        out.at(j, i) = v;
      }
    }
  }
  if (zero_diagonal) {
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 0.0;
  }
  return out;
}

MetricAuditReport metric_audit(const DistanceMatrix& m, double tolerance) {
  const std::size_t n = m.size();
  MetricAuditReport rep;
  rep.tolerance = tolerance;
  for (std::size_t i = 0; i < n; ++i) {
    rep.max_self_distance = std::max(rep.max_self_distance, m.at(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      rep.max_symmetry_gap =
          std::max(rep.max_symmetry_gap, std::abs(m.at(i, j) - m.at(j, i)));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        ++rep.triples_checked;
        const std::size_t idx[3] = {a, b, c};
        bool violated = false;
        for (int p = 0; p < 3; ++p) {
          const std::size_t x = idx[p];
          const std::size_t y = idx[(p + 1) % 3];
          const std::size_t z = idx[(p + 2) % 3];
          const double slack = m.at(x, y) - (m.at(x, z) + m.at(z, y));
          rep.worst_triangle_slack = std::max(rep.worst_triangle_slack, slack);
          if (slack > tolerance) violated = true;
          const double slack_r = m.at(y, x) - (m.at(y, z) + m.at(z, x));
          rep.worst_triangle_slack =
              std::max(rep.worst_triangle_slack, slack_r);
          if (slack_r > tolerance) violated = true;
        }
        if (violated) ++rep.triangle_violations;
      }
    }
  }
  return rep;
}

std::string to_phylip(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  std::string out = std::to_string(n) + "\n";
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = m.labels[i].substr(0, 10);
    label.resize(10, ' ');
    out += label;
    for (std::size_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, " %.6f", m.at(i, j));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string to_tsv(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  std::string out = "id";
  for (const auto& l : m.labels) out += "\t" + l;
  out += "\n";
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    out += m.labels[i];
    for (std::size_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "\t%.10g", m.at(i, j));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string matrix_to_json(const DistanceMatrix& m,
                           const MetricAuditReport* audit) {
  nlohmann::json j;
  j["labels"] = m.labels;
  j["recipe"] = m.recipe.describe();
  auto& rows = j["values"];
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(m.at(i, k));
    rows.push_back(row);
  }
  if (audit) {
    j["audit"] = {
        {"max_self_distance", audit->max_self_distance},
        {"max_symmetry_gap", audit->max_symmetry_gap},
        {"triangle_violations", audit->triangle_violations},
        {"triples_checked", audit->triples_checked},
        {"worst_triangle_slack", audit->worst_triangle_slack},
        {"tolerance", audit->tolerance},
    };
  }
  return j.dump(2) + "\n";
}

DistanceMatrix parse_phylip(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  if (!(in >> n) || n < 2) {
    throw std::runtime_error("PHYLIP parse: bad taxon count");
  }
  DistanceMatrix m;
  m.values.assign(n * n, 0.0);
  std::string line;
  std::getline(in, line);  // rest of header line
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw std::runtime_error("PHYLIP parse: truncated matrix");
    }
    if (line.size() < 10) {
      throw std::runtime_error("PHYLIP parse: row label shorter than 10 chars");
    }
    std::string label = line.substr(0, 10);
    while (!label.empty() && label.back() == ' ') label.pop_back();
    m.labels.push_back(label);
    std::istringstream row(line.substr(10));
    for (std::size_t j = 0; j < n; ++j) {
      if (!(row >> m.values[i * n + j])) {
        throw std::runtime_error("PHYLIP parse: row " + label +
                                 " has fewer than " + std::to_string(n) +
                                 " values");
      }
    }
  }
  return m;
}

}  // namespace ncdkit
