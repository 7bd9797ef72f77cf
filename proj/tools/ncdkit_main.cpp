#include <algorithm>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncdkit/compressor.hpp"
#include "ncdkit/corpus.hpp"
#include "ncdkit/distances.hpp"
#include "ncdkit/fetch.hpp"
#include "ncdkit/kmer.hpp"
#include "ncdkit/matrix.hpp"
#include "ncdkit/theory.hpp"
#include "ncdkit/tree.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 2 usage/input, 3 compressor, 4 matrix failure,
// 5 strict-audit failure.
constexpr int kExitUsage = 2;
constexpr int kExitCompressor = 3;
constexpr int kExitMatrix = 4;
constexpr int kExitStrict = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StrictAuditFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MatrixFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write file: " + p.string());
}

// Shared recipe flags.
struct RecipeFlags {
  std::string distance = "ncd";
  std::string compressor = "builtin";
  std::size_t window = 64 * 1024;
  int level = 1;
  unsigned k = 0;
  std::string tmpl;
  std::string variant = "setdiff";
  std::string joint = "min";

  void attach(CLI::App* cmd) {
    cmd->add_option("--distance", distance,
                    "ncd|ds-hat|cdm|benedetto-S|d-prime|d-star|freq-euclidean");
    cmd->add_option("--compressor", compressor,
                    "builtin, gzip, bzip2, or a shell command reading stdin");
    cmd->add_option("--window", window, "builtin-lz window size in bytes");
    cmd->add_option("--level", level, "builtin-lz search depth 1-9");
    cmd->add_option("--k", k, "k-mer length");
    cmd->add_option("--template", tmpl, "spaced template, e.g. 110101");
    cmd->add_option("--variant", variant, "setdiff|concat");
    cmd->add_option("--joint", joint, "joint size policy: min|single");
  }

  ncdkit::CompressorSpec compressor_spec() const {
    if (compressor == "builtin") {
      return ncdkit::CompressorSpec::builtin(window, level);
    }
    if (compressor == "gzip") return ncdkit::CompressorSpec::external("gzip -9");
    if (compressor == "bzip2")
      return ncdkit::CompressorSpec::external("bzip2 -9");
    return ncdkit::CompressorSpec::external(compressor);
  }

  ncdkit::DistanceRecipe recipe() const {
    ncdkit::DistanceRecipe r;
    r.distance = ncdkit::parse_recipe_distance(distance);
    if (ncdkit::distance_is_compression_based(r.distance)) {
      r.compressor = compressor_spec();
    } else {
      if (!tmpl.empty()) r.spaced_template = tmpl;
      else if (k > 0) r.k = k;
      else throw UsageError("distance " + distance + " needs --k or --template");
    }
    if (variant == "setdiff") r.variant = ncdkit::CondVariant::SetDiff;
    else if (variant == "concat") r.variant = ncdkit::CondVariant::Concat;
    else throw UsageError("unknown --variant: " + variant);
    if (joint == "min") r.joint_policy = ncdkit::JointSizePolicy::MinOfBothOrders;
    else if (joint == "single") r.joint_policy = ncdkit::JointSizePolicy::SingleOrder;
    else throw UsageError("unknown --joint: " + joint);
    return r;
  }
};

ncdkit::Document doc_from_file(const fs::path& p) {
  ncdkit::Document d;
  d.id = p.filename().string();
  d.bytes = slurp(p);
  d.kind = ncdkit::DocKind::Text;
  d.source = p.string();
  return d;
}

std::vector<ncdkit::Document> load_corpus(const std::string& corpus_dir,
                                          const std::string& manifest_path,
                                          const std::string& data_dir) {
  if (!corpus_dir.empty()) return ncdkit::load_directory(corpus_dir);
  if (!manifest_path.empty()) {
    auto m = ncdkit::Manifest::load(manifest_path);
    fs::path base = data_dir.empty()
                        ? fs::path(manifest_path).parent_path()
                        : fs::path(data_dir);
    return ncdkit::load_manifest(m, base);
  }
  throw UsageError("need --corpus or --manifest");
}

json normality_to_json(const ncdkit::NormalityReport& rep) {
  json j;
  j["monotonicity_violations"] = rep.monotonicity_violations;
  j["median_idempotency"] = rep.median_idempotency;
  j["max_idempotency"] = rep.max_idempotency;
  j["median_symmetry_gap"] = rep.median_symmetry_gap;
  j["max_symmetry_gap"] = rep.max_symmetry_gap;
  for (const auto& f : rep.files) {
    j["files"].push_back({{"id", f.id}, {"idempotency", f.idempotency}});
  }
  for (const auto& p : rep.pairs) {
    j["pairs"].push_back({{"a", p.a},
                          {"b", p.b},
                          {"symmetry_gap", p.symmetry_gap},
                          {"monotonicity_violation", p.monotonicity_violation}});
  }
  return j;
}

json audit_to_json(const ncdkit::MetricAuditReport& rep) {
  return json{{"max_self_distance", rep.max_self_distance},
              {"max_symmetry_gap", rep.max_symmetry_gap},
              {"triangle_violations", rep.triangle_violations},
              {"triples_checked", rep.triples_checked},
              {"worst_triangle_slack", rep.worst_triangle_slack},
              {"tolerance", rep.tolerance}};
}

// ---------------------------------------------------------------- pair ----

int cmd_pair(const std::string& x_path, const std::string& y_path,
             const RecipeFlags& flags, bool as_json) {
  ncdkit::Document x = doc_from_file(x_path);
  ncdkit::Document y = doc_from_file(y_path);
  const auto recipe = flags.recipe();

  json out;
  out["x"] = x.id;
  out["y"] = y.id;
  out["distance"] = flags.distance;
  double value = 0;
  if (ncdkit::distance_is_compression_based(recipe.distance)) {
    ncdkit::CompressedSizeCache cache;
    ncdkit::SizeTriple t;
    t.cx = cache.single(*recipe.compressor, x);
    t.cy = cache.single(*recipe.compressor, y);
    t.cxy = cache.pair(*recipe.compressor, x, y);
    if (recipe.joint_policy == ncdkit::JointSizePolicy::MinOfBothOrders) {
      t.cyx = cache.pair(*recipe.compressor, y, x);
    }
    switch (recipe.distance) {
      case ncdkit::RecipeDistance::Ncd: value = ncdkit::to_double(ncd(t)); break;
      case ncdkit::RecipeDistance::DsHat:
        value = ncdkit::to_double(ds_hat(t));
        break;
      case ncdkit::RecipeDistance::Cdm: value = ncdkit::to_double(cdm(t)); break;
      case ncdkit::RecipeDistance::BenedettoBigS:
        value = ncdkit::to_double(ncdkit::benedetto_S(
            x, y, ncdkit::FragmentPolicy{}, *recipe.compressor));
        break;
      default: break;
    }
    out["sizes"] = {{"cx", t.cx}, {"cy", t.cy}, {"cxy", t.cxy}};
    if (t.cyx) out["sizes"]["cyx"] = *t.cyx;
  } else {
    const unsigned kk = recipe.k ? *recipe.k : 0;
    const ncdkit::Alphabet alpha = ncdkit::Alphabet::Bytes;
    if (recipe.distance == ncdkit::RecipeDistance::FreqEuclidean) {
      value = ncdkit::freq_euclidean(x.bytes, y.bytes, kk, alpha);
    } else {
      ncdkit::KmerSet kx, ky;
      std::size_t n_concat_xy, n_concat_yx;
      if (recipe.spaced_template) {
        auto t = ncdkit::SpacedTemplate::parse(*recipe.spaced_template);
        kx = ncdkit::spaced_words(x.bytes, t, alpha);
        ky = ncdkit::spaced_words(y.bytes, t, alpha);
        n_concat_xy = ncdkit::spaced_words(x.bytes + y.bytes, t, alpha).count();
        n_concat_yx = ncdkit::spaced_words(y.bytes + x.bytes, t, alpha).count();
      } else {
        kx = ncdkit::distinct_kmers(x.bytes, kk, alpha);
        ky = ncdkit::distinct_kmers(y.bytes, kk, alpha);
        n_concat_xy =
            ncdkit::distinct_kmers(x.bytes + y.bytes, kk, alpha).count();
        n_concat_yx =
            ncdkit::distinct_kmers(y.bytes + x.bytes, kk, alpha).count();
      }
      out["counts"] = {{"nx", kx.count()}, {"ny", ky.count()},
                       {"n_concat", n_concat_xy}};
      if (recipe.distance == ncdkit::RecipeDistance::DPrime) {
        value = ncdkit::to_double(
            d_prime_sets(kx, ky, recipe.variant, n_concat_xy, n_concat_yx));
      } else {
        value = ncdkit::to_double(
            d_star_sets(kx, ky, recipe.variant, n_concat_xy, n_concat_yx));
      }
    }
  }
  out["value"] = value;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
    if (out.contains("sizes")) std::cout << out["sizes"].dump() << "\n";
    if (out.contains("counts")) std::cout << out["counts"].dump() << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- matrix ----

int cmd_matrix(const std::string& corpus_dir, const std::string& manifest,
               const std::string& data_dir, const RecipeFlags& flags,
               const std::string& out_dir, const std::string& formats,
               const std::string& symmetrize, bool zero_diag, unsigned workers,
               double audit_eps) {
  auto corpus = load_corpus(corpus_dir, manifest, data_dir);
  ncdkit::DistanceMatrix m;
  try {
    m = ncdkit::compute_matrix(corpus, flags.recipe(), workers);
  } catch (const ncdkit::CompressorError&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw MatrixFailure(e.what());
  }

  ncdkit::SymmetrizeMode mode = ncdkit::SymmetrizeMode::Avg;
  if (symmetrize == "raw") mode = ncdkit::SymmetrizeMode::Raw;
  else if (symmetrize == "avg") mode = ncdkit::SymmetrizeMode::Avg;
  else if (symmetrize == "min") mode = ncdkit::SymmetrizeMode::Min;
  else throw UsageError("unknown --symmetrize: " + symmetrize);

  const auto audit = ncdkit::metric_audit(m, audit_eps);
  const auto exported = ncdkit::symmetrize_export(m, mode, zero_diag);

  fs::create_directories(out_dir);
  std::stringstream fmts(formats);
  std::string fmt;
  while (std::getline(fmts, fmt, ',')) {
    if (fmt == "phylip") {
      spit(fs::path(out_dir) / "matrix.phy", ncdkit::to_phylip(exported));
    } else if (fmt == "tsv") {
      spit(fs::path(out_dir) / "matrix.tsv", ncdkit::to_tsv(exported));
    } else if (fmt == "json") {
      spit(fs::path(out_dir) / "matrix.json",
           ncdkit::matrix_to_json(exported, &audit));
    } else {
      throw UsageError("unknown format: " + fmt);
    }
  }
  spit(fs::path(out_dir) / "audit.json", audit_to_json(audit).dump(2) + "\n");
  std::cout << "wrote matrix (" << m.size() << "x" << m.size() << ") to "
            << out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------- tree ----

int cmd_tree(const std::string& matrix_path, const std::string& outgroup,
             const std::string& out_path, const std::string& compare_path,
             int precision, bool no_clamp, bool auto_symmetrize) {
  auto m = ncdkit::parse_phylip(slurp(matrix_path));
  if (auto_symmetrize) {
    m = ncdkit::symmetrize_export(m, ncdkit::SymmetrizeMode::Avg, true);
  }
  ncdkit::PhyloTree t = ncdkit::neighbor_join(m);
  if (!outgroup.empty()) {
    try {
      t = ncdkit::root_at_outgroup(t, outgroup);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  ncdkit::NewickOptions opts;
  opts.precision = precision;
  opts.clamp_negative = !no_clamp;
  const std::string newick = ncdkit::to_newick(t, opts);
  if (out_path.empty()) {
    std::cout << newick << "\n";
  } else {
    spit(out_path, newick + "\n");
  }
  if (!compare_path.empty()) {
    auto ref = ncdkit::parse_newick(slurp(compare_path));
    std::cout << ncdkit::rf_distance(t, ref) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- audit ----

int cmd_audit(const std::string& corpus_dir, const std::string& manifest,
              const std::string& data_dir, const RecipeFlags& flags,
              double eps, const std::string& strict,
              const std::string& out_path) {
  auto corpus = load_corpus(corpus_dir, manifest, data_dir);
  const auto spec = flags.compressor_spec();
  const auto normality = ncdkit::normality_audit(spec, corpus);

  json out;
  out["normality"] = normality_to_json(normality);

  ncdkit::MetricAuditReport metric{};
  bool have_metric = false;
  if (corpus.size() >= 2) {
    ncdkit::DistanceRecipe recipe;
    recipe.distance = ncdkit::RecipeDistance::Ncd;
    recipe.compressor = spec;
    const auto m = ncdkit::compute_matrix(corpus, recipe);
    metric = ncdkit::metric_audit(m, eps);
    have_metric = true;
    out["metric"] = audit_to_json(metric);
  }
  const std::string text = out.dump(2) + "\n";
  if (out_path.empty()) std::cout << text;
  else spit(out_path, text);

  if (!strict.empty()) {
    if (!have_metric) throw UsageError("--strict needs >= 2 documents");
    // comma-separated terms: triangle=<eps>:<max-violation-percent>% and
    // self=<max-self-distance>
    std::stringstream terms(strict);
    std::string term;
    while (std::getline(terms, term, ',')) {
      double s_eps = 0;
      double s_pct = 0;
      double s_self = 0;
      if (std::sscanf(term.c_str(), "triangle=%lf:%lf%%", &s_eps, &s_pct) ==
          2) {
        const auto strict_metric = [&] {
          if (s_eps == eps) return metric;
          ncdkit::DistanceRecipe recipe;
          recipe.distance = ncdkit::RecipeDistance::Ncd;
          recipe.compressor = spec;
          return ncdkit::metric_audit(ncdkit::compute_matrix(corpus, recipe),
                                      s_eps);
        }();
        const double frac =
            strict_metric.triples_checked == 0
                ? 0.0
                : 100.0 *
                      static_cast<double>(strict_metric.triangle_violations) /
                      static_cast<double>(strict_metric.triples_checked);
        if (frac > s_pct) {
          throw StrictAuditFailure(
              "triangle violations " + std::to_string(frac) + "% exceed " +
              std::to_string(s_pct) + "% at eps=" + std::to_string(s_eps));
        }
      } else if (std::sscanf(term.c_str(), "self=%lf", &s_self) == 1) {
        if (metric.max_self_distance > s_self) {
          throw StrictAuditFailure(
              "max self-distance " + std::to_string(metric.max_self_distance) +
              " exceeds " + std::to_string(s_self));
        }
      } else {
        throw UsageError(
            "bad --strict term (expected triangle=EPS:PCT% or self=MAX): " +
            term);
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- kmer ----

int cmd_kmer(const std::string& path, unsigned k, const std::string& tmpl,
             const std::string& alphabet, bool list_words) {
  const std::string bytes = slurp(path);
  const ncdkit::Alphabet alpha =
      alphabet == "dna" ? ncdkit::Alphabet::Dna : ncdkit::Alphabet::Bytes;
  ncdkit::KmerSet set;
  if (!tmpl.empty()) {
    set = ncdkit::spaced_words(bytes, ncdkit::SpacedTemplate::parse(tmpl),
                               alpha);
  } else {
    if (k == 0) throw UsageError("kmer: need --k or --template");
    set = ncdkit::distinct_kmers(bytes, k, alpha);
  }
  json out;
  out["file"] = path;
  out["k"] = set.k();
  out["count"] = set.count();
  if (!tmpl.empty()) out["template"] = tmpl;
  if (list_words) out["words"] = set.words_sorted();
  std::cout << out.dump(2) << "\n";
  return 0;
}

// -------------------------------------------------------------- theory ----

int cmd_theory_kraft(unsigned n_lo, unsigned n_hi) {
  json out;
  bool all_hold = true;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const ncdkit::Ratio sum = ncdkit::theory::kraft_sum(
        [](std::uint32_t, std::uint32_t y, unsigned nn) {
          return ncdkit::theory::hamming_code_length(
              nn, static_cast<unsigned>(std::popcount(y)));
        },
        0, n);
    const bool holds = sum <= 1;
    all_hold = all_hold && holds;
    out["results"].push_back({{"n", n},
                              {"sum", sum.str()},
                              {"sum_approx", ncdkit::to_double(sum)},
                              {"kraft_holds", holds}});
  }
  out["all_hold"] = all_hold;
  std::cout << out.dump(2) << "\n";
  return 0;
}

// accepts "3", "1/4", or decimal forms like "0.25"
ncdkit::Ratio parse_ratio(const std::string& s) {
  try {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return ncdkit::Ratio(s);
    const std::string ip = s.substr(0, dot);
    const std::string fp = s.substr(dot + 1);
    const bool neg = !ip.empty() && ip[0] == '-';
    ncdkit::BigInt num = ip.empty() || ip == "-" ? 0 : ncdkit::BigInt(ip);
    ncdkit::BigInt den = 1;
    for (char c : fp) {
      if (c < '0' || c > '9') throw std::runtime_error("bad digit");
      num = num * 10 + (neg ? -(c - '0') : (c - '0'));
      den *= 10;
    }
    return ncdkit::Ratio(num, den);
  } catch (const std::exception&) {
    throw UsageError("cannot parse rational value: " + s);
  }
}

int cmd_theory_density(unsigned n, const std::string& kappa_str,
                       std::vector<std::string> grid) {
  ncdkit::Ratio kappa =
      kappa_str.empty() ? ncdkit::Ratio(n) : parse_ratio(kappa_str);
  std::vector<ncdkit::Ratio> e_grid;
  if (grid.empty()) grid = {"0", "1/8", "1/4", "1/2", "1"};
  for (const auto& g : grid) e_grid.push_back(parse_ratio(g));
  const auto res = ncdkit::theory::density_check(
      &ncdkit::theory::hamming_fraction, 0, n, kappa, e_grid);
  json out;
  out["n"] = n;
  out["kappa"] = kappa.str();
  out["distance"] = "hamming-fraction";
  for (const auto& t : res.thresholds) {
    out["thresholds"].push_back(
        {{"e", t.e.str()}, {"count", t.count}, {"pass", t.pass}});
  }
  out["all_pass"] = res.all_pass;
  std::cout << out.dump(2) << "\n";
  return 0;
}

// --------------------------------------------------------------- fetch ----

int cmd_fetch(const std::string& manifest, const std::string& dest) {
  const auto m = ncdkit::Manifest::load(manifest);
  const auto report = ncdkit::fetch_dataset(m, dest);
  json out;
  for (const auto& e : report.entries) {
    out["entries"].push_back({{"id", e.id},
                              {"url", e.url},
                              {"ok", e.ok},
                              {"skipped", e.skipped},
                              {"error", e.error},
                              {"sha256", e.sha256}});
  }
  out["failures"] = report.failures;
  std::cout << out.dump(2) << "\n";
  return report.failures == 0 ? 0 : 1;
}

// ----------------------------------------------------------- reproduce ----

const std::map<std::string, std::vector<std::string>>& mammal_groups() {
  static const std::map<std::string, std::vector<std::string>> groups = {
      {"primates",
       {"Human", "Chimpanzee", "PygmyChimp", "Gorilla", "Orangutan",
        "SumatranOrang", "Gibbon"}},
      {"outgroup", {"Opossum", "Wallaroo", "Platypus"}},
  };
  return groups;
}

const std::map<std::string, std::string>& language_families() {
  static const std::map<std::string, std::string> fam = {
      {"English", "Germanic"},   {"German", "Germanic"},
      {"Dutch", "Germanic"},     {"Swedish", "Germanic"},
      {"Danish", "Germanic"},    {"Norwegian", "Germanic"},
      {"Icelandic", "Germanic"}, {"French", "Romance"},
      {"Spanish", "Romance"},    {"Italian", "Romance"},
      {"Portuguese", "Romance"}, {"Romanian", "Romance"},
      {"Catalan", "Romance"},    {"Russian", "Slavic"},
      {"Polish", "Slavic"},      {"Czech", "Slavic"},
      {"Slovak", "Slavic"},      {"Ukrainian", "Slavic"},
      {"Croatian", "Slavic"},    {"Slovenian", "Slavic"},
      {"Bulgarian", "Slavic"},   {"Basque", "isolate"},
  };
  return fam;
}

int cmd_reproduce(const std::string& experiment, bool do_fetch,
                  const std::string& manifest_path,
                  const std::string& data_dir, const std::string& out_dir,
                  unsigned workers) {
  fs::path manifest_file = manifest_path;
  if (manifest_file.empty()) {
    throw UsageError("reproduce: --manifest is required");
  }
  const auto manifest = ncdkit::Manifest::load(manifest_file);
  const fs::path data =
      data_dir.empty() ? fs::path("fetched") / experiment : fs::path(data_dir);

  bool missing = false;
  for (const auto& e : manifest.entries) {
    if (e.remote() && !fs::exists(data / e.id)) missing = true;
  }
  if (missing) {
    if (!do_fetch) {
      throw UsageError("reproduce " + experiment +
                       ": data not present under " + data.string() +
                       "; rerun with --fetch (downloads from public sources)");
    }
    const auto report = ncdkit::fetch_dataset(manifest, data);
    if (report.failures > 0) {
      std::string msg = "fetch failures:";
      for (const auto& e : report.entries) {
        if (!e.ok) msg += " " + e.id + " (" + e.error + ")";
      }
      throw std::runtime_error(msg);
    }
  }

  auto corpus = ncdkit::load_manifest(manifest, data);
  fs::create_directories(out_dir);
  json report;
  report["experiment"] = experiment;

  if (experiment == "mammals") {
    std::uint64_t mean_len = 0;
    for (const auto& d : corpus) mean_len += d.bytes.size();
    mean_len /= corpus.size();
    const auto kr = ncdkit::recommend_k(mean_len, 4);
    report["recommended_k"] = kr.recommended;
    report["k_range"] = {kr.lo, kr.hi};

    // NCD tree (window large enough for a pair of genomes)
    ncdkit::DistanceRecipe ncd_recipe;
    ncd_recipe.distance = ncdkit::RecipeDistance::Ncd;
    ncd_recipe.compressor = ncdkit::CompressorSpec::builtin(1u << 20);
    auto ncd_m = ncdkit::symmetrize_export(
        ncdkit::compute_matrix(corpus, ncd_recipe, workers),
        ncdkit::SymmetrizeMode::Avg, true);
    auto ncd_tree = ncdkit::neighbor_join(ncd_m);
    spit(fs::path(out_dir) / "mammals_ncd.nwk",
         ncdkit::to_newick(ncd_tree) + "\n");
    for (const auto& [group, members] : mammal_groups()) {
      report["ncd"][group + "_monophyletic"] =
          ncdkit::is_monophyletic(ncd_tree, members);
    }
    spit(fs::path(out_dir) / "mammals_ncd.phy", ncdkit::to_phylip(ncd_m));

    // d* sweep over the recommended k range
    for (unsigned k = kr.lo; k <= kr.hi; ++k) {
      ncdkit::DistanceRecipe r;
      r.distance = ncdkit::RecipeDistance::DStar;
      r.k = k;
      r.variant = ncdkit::CondVariant::SetDiff;
      auto m = ncdkit::symmetrize_export(
          ncdkit::compute_matrix(corpus, r, workers),
          ncdkit::SymmetrizeMode::Avg, true);
      auto tree = ncdkit::neighbor_join(m);
      spit(fs::path(out_dir) / ("mammals_dstar_k" + std::to_string(k) + ".nwk"),
           ncdkit::to_newick(tree) + "\n");
      json entry;
      entry["k"] = k;
      for (const auto& [group, members] : mammal_groups()) {
        entry[group + "_monophyletic"] =
            ncdkit::is_monophyletic(tree, members);
      }
      report["dstar"].push_back(entry);
    }
  } else if (experiment == "languages") {
    ncdkit::DistanceRecipe recipe;
    recipe.distance = ncdkit::RecipeDistance::Ncd;
    recipe.compressor = ncdkit::CompressorSpec::builtin(256 * 1024);
    auto m = ncdkit::symmetrize_export(
        ncdkit::compute_matrix(corpus, recipe, workers),
        ncdkit::SymmetrizeMode::Avg, true);
    spit(fs::path(out_dir) / "languages_ncd.phy", ncdkit::to_phylip(m));
    auto tree = ncdkit::neighbor_join(m);
    bool have_basque = false;
    for (const auto& d : corpus) have_basque |= d.id == "Basque";
    if (have_basque) tree = ncdkit::root_at_outgroup(tree, "Basque");
    spit(fs::path(out_dir) / "languages_ncd.nwk",
         ncdkit::to_newick(tree) + "\n");

    // per-family mean within vs cross distances and monophyly
    std::map<std::string, std::vector<std::size_t>> by_family;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto it = language_families().find(corpus[i].id);
      if (it != language_families().end() && it->second != "isolate") {
        by_family[it->second].push_back(i);
      }
    }
    for (const auto& [family, members] : by_family) {
      double within = 0, cross = 0;
      std::size_t nw = 0, nc = 0;
      for (std::size_t i : members) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
          if (j == i) continue;
          const bool same =
              std::find(members.begin(), members.end(), j) != members.end();
          if (same) { within += m.at(i, j); ++nw; }
          else { cross += m.at(i, j); ++nc; }
        }
      }
      json entry;
      entry["family"] = family;
      entry["mean_within"] = nw ? within / static_cast<double>(nw) : 0;
      entry["mean_cross"] = nc ? cross / static_cast<double>(nc) : 0;
      entry["separated"] = nw && nc && within / static_cast<double>(nw) <
                                           cross / static_cast<double>(nc);
      std::vector<std::string> labels;
      for (std::size_t i : members) labels.push_back(corpus[i].id);
      entry["monophyletic"] =
          have_basque ? ncdkit::is_clade(tree, labels)
                      : ncdkit::is_monophyletic(tree, labels);
      report["families"].push_back(entry);
    }
  } else {
    throw UsageError("unknown experiment: " + experiment +
                     " (expected mammals or languages)");
  }

  spit(fs::path(out_dir) / (experiment + "_report.json"),
       report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compression- and k-mer-based similarity toolkit"};
  app.set_config("--config", "", "flat key=value config file; flags override");
  app.require_subcommand(1);

  // pair
  auto* pair = app.add_subcommand("pair", "distance between two files");
  std::string pair_x, pair_y;
  bool pair_json = false;
  RecipeFlags pair_flags;
  pair->add_option("x", pair_x, "first file")->required();
  pair->add_option("y", pair_y, "second file")->required();
  pair_flags.attach(pair);
  pair->add_flag("--json", pair_json, "emit JSON");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "all-pairs distance matrix");
  std::string m_corpus, m_manifest, m_data, m_out = "out",
              m_formats = "phylip,tsv,json", m_sym = "avg";
  bool m_zero = true;
  unsigned m_workers = 1;
  double m_eps = 0.05;
  RecipeFlags m_flags;
  matrix->add_option("--corpus", m_corpus, "corpus directory");
  matrix->add_option("--manifest", m_manifest, "manifest file");
  matrix->add_option("--data-dir", m_data, "base dir for manifest entries");
  m_flags.attach(matrix);
  matrix->add_option("--out", m_out, "output directory");
  matrix->add_option("--formats", m_formats, "comma list: phylip,tsv,json");
  matrix->add_option("--symmetrize", m_sym, "raw|avg|min");
  matrix->add_flag("--zero-diagonal,!--keep-diagonal", m_zero,
                   "zero the diagonal on export");
  matrix->add_option("--workers", m_workers, "parallel pair evaluations");
  matrix->add_option("--audit-eps", m_eps, "metric audit tolerance");

  // tree
  auto* tree = app.add_subcommand("tree", "neighbor-joining tree from matrix");
  std::string t_matrix, t_outgroup, t_out, t_compare;
  int t_precision = 6;
  bool t_noclamp = false, t_autosym = false;
  tree->add_option("matrix", t_matrix, "PHYLIP matrix file")->required();
  tree->add_option("--outgroup", t_outgroup, "outgroup leaf label");
  tree->add_option("--out", t_out, "output Newick file (default stdout)");
  tree->add_option("--compare", t_compare, "reference Newick; prints RF");
  tree->add_option("--precision", t_precision, "branch length digits");
  tree->add_flag("--no-clamp", t_noclamp, "keep negative branch lengths");
  tree->add_flag("--auto-symmetrize", t_autosym,
                 "average-symmetrize and zero the diagonal first");

  // audit
  auto* audit = app.add_subcommand("audit", "normality and metric audits");
  std::string a_corpus, a_manifest, a_data, a_strict, a_out;
  double a_eps = 0.05;
  RecipeFlags a_flags;
  audit->add_option("--corpus", a_corpus, "corpus directory");
  audit->add_option("--manifest", a_manifest, "manifest file");
  audit->add_option("--data-dir", a_data, "base dir for manifest entries");
  a_flags.attach(audit);
  audit->add_option("--eps", a_eps, "triangle tolerance");
  audit->add_option("--strict", a_strict,
                    "fail (exit 5) beyond threshold, e.g. triangle=0.05:5%");
  audit->add_option("--out", a_out, "report file (default stdout)");

  // kmer
  auto* kmer = app.add_subcommand("kmer", "distinct k-mer / spaced-word count");
  std::string k_file, k_tmpl, k_alpha = "dna";
  unsigned k_k = 0;
  bool k_list = false;
  kmer->add_option("file", k_file, "input file")->required();
  kmer->add_option("--k", k_k, "word length");
  kmer->add_option("--template", k_tmpl, "spaced template, e.g. 110101");
  kmer->add_option("--alphabet", k_alpha, "dna|bytes");
  kmer->add_flag("--list", k_list, "also list the words");

  // theory
  auto* theory = app.add_subcommand("theory", "small-scale theory checks");
  theory->require_subcommand(1);
  auto* kraft = theory->add_subcommand("kraft", "Kraft sums of the Hamming code");
  unsigned kr_lo = 4, kr_hi = 12;
  kraft->add_option("--n-min", kr_lo, "smallest string length");
  kraft->add_option("--n-max", kr_hi, "largest string length");
  auto* density = theory->add_subcommand("density", "density-bound counts");
  unsigned de_n = 8;
  std::string de_kappa;
  std::vector<std::string> de_grid;
  density->add_option("--n", de_n, "string length");
  density->add_option("--kappa", de_kappa, "K(x) stand-in (rational, default n)");
  density->add_option("--e", de_grid, "threshold grid values (rationals)");

  // fetch
  auto* fetch = app.add_subcommand("fetch", "download manifest datasets");
  std::string f_manifest, f_dest = "fetched";
  fetch->add_option("--manifest", f_manifest, "manifest file")->required();
  fetch->add_option("--dest", f_dest, "destination directory");

  // reproduce
  auto* reproduce =
      app.add_subcommand("reproduce", "run a full published-experiment pipeline");
  std::string r_experiment, r_manifest, r_data, r_out = "out";
  bool r_fetch = false;
  unsigned r_workers = 1;
  reproduce->add_option("experiment", r_experiment, "mammals|languages")
      ->required();
  reproduce->add_flag("--fetch", r_fetch, "download missing data");
  reproduce->add_option("--manifest", r_manifest, "dataset manifest");
  reproduce->add_option("--data-dir", r_data, "where fetched data lives");
  reproduce->add_option("--out", r_out, "output directory");
  reproduce->add_option("--workers", r_workers, "parallel pair evaluations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pair->parsed()) return cmd_pair(pair_x, pair_y, pair_flags, pair_json);
    if (matrix->parsed()) {
      return cmd_matrix(m_corpus, m_manifest, m_data, m_flags, m_out,
                        m_formats, m_sym, m_zero, m_workers, m_eps);
    }
    if (tree->parsed()) {
      return cmd_tree(t_matrix, t_outgroup, t_out, t_compare, t_precision,
                      t_noclamp, t_autosym);
    }
    if (audit->parsed()) {
      return cmd_audit(a_corpus, a_manifest, a_data, a_flags, a_eps, a_strict,
                       a_out);
    }
    if (kmer->parsed()) return cmd_kmer(k_file, k_k, k_tmpl, k_alpha, k_list);
    if (theory->parsed()) {
      if (kraft->parsed()) return cmd_theory_kraft(kr_lo, kr_hi);
      return cmd_theory_density(de_n, de_kappa, de_grid);
    }
    if (fetch->parsed()) return cmd_fetch(f_manifest, f_dest);
    if (reproduce->parsed()) {
      return cmd_reproduce(r_experiment, r_fetch, r_manifest, r_data, r_out,
                           r_workers);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ncdkit::CompressorError& e) {
    std::cerr << "compressor error: " << e.what() << "\n";
    return kExitCompressor;
  } catch (const MatrixFailure& e) {
    std::cerr << "matrix error: " << e.what() << "\n";
    return kExitMatrix;
  } catch (const StrictAuditFailure& e) {
    std::cerr << "strict audit failed: " << e.what() << "\n";
    return kExitStrict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
