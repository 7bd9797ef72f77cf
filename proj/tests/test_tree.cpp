#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ncdkit/matrix.hpp"
#include "ncdkit/tree.hpp"

using namespace ncdkit;

namespace {

DistanceMatrix make_matrix(std::vector<std::string> labels,
                           std::vector<double> values) {
  DistanceMatrix m;
  m.labels = std::move(labels);
  m.values = std::move(values);
  return m;
}

// random binary tree generator used for the consistency property: build by
// sequential leaf attachment, then read off exact leaf-to-leaf distances
struct RandomTree {
  // adjacency with edge lengths
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<int> leaves;  // node ids of leaves, leaf i labeled Li
};

RandomTree random_binary_tree(std::size_t n_leaves, std::mt19937& rng) {
  std::uniform_real_distribution<double> len(0.1, 10.0);
  RandomTree t;
  auto add_node = [&]() {
    t.adj.emplace_back();
    return static_cast<int>(t.adj.size() - 1);
  };
  auto link = [&](int a, int b, double w) {
    t.adj[a].push_back({b, w});
    t.adj[b].push_back({a, w});
  };
  // start from a 2-leaf tree, then split random edges
  int a = add_node(), b = add_node();
  link(a, b, len(rng));
  t.leaves = {a, b};
  struct Edge { int u, v; };
  while (t.leaves.size() < n_leaves) {
    // pick a random existing edge
    std::vector<Edge> edges;
    for (int u = 0; u < static_cast<int>(t.adj.size()); ++u)
      for (auto& [v, w] : t.adj[u])
        if (u < v) edges.push_back({u, v});
    Edge e = edges[rng() % edges.size()];
    double w = 0;
    for (auto& [v, ww] : t.adj[e.u])
      if (v == e.v) w = ww;
    // remove edge u-v, insert midpoint node m and a fresh leaf
    auto drop = [&](int from, int to) {
      auto& lst = t.adj[from];
      for (std::size_t i = 0; i < lst.size(); ++i)
        if (lst[i].first == to) { lst.erase(lst.begin() + i); break; }
    };
    drop(e.u, e.v);
    drop(e.v, e.u);
    int mid = add_node();
    double cut = w * 0.5;
    link(e.u, mid, cut);
    link(mid, e.v, w - cut);
    int leaf = add_node();
    link(mid, leaf, len(rng));
    t.leaves.push_back(leaf);
  }
  return t;
}

DistanceMatrix additive_matrix(const RandomTree& t) {
  const std::size_t n = t.leaves.size();
  DistanceMatrix m;
  for (std::size_t i = 0; i < n; ++i) m.labels.push_back("L" + std::to_string(i));
  m.values.assign(n * n, 0.0);
  // dijkstra-free: tree distances via DFS from each leaf
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> dist(t.adj.size(), -1.0);
    std::vector<int> stack{t.leaves[i]};
    dist[t.leaves[i]] = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto& [v, w] : t.adj[u])
        if (dist[v] < 0) { dist[v] = dist[u] + w; stack.push_back(v); }
    }
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist[t.leaves[j]];
  }
  // path sums accumulate in traversal order, so mirror the upper triangle
  // to keep the matrix exactly symmetric
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) m.at(j, i) = m.at(i, j);
  }
  return m;
}

PhyloTree true_phylo(const RandomTree& t) {
  // convert the adjacency into a PhyloTree rooted at leaf 0's neighbor
  PhyloTree p;
  p.nodes.resize(t.adj.size());
  for (std::size_t i = 0; i < t.leaves.size(); ++i)
    p.nodes[t.leaves[i]].label = "L" + std::to_string(i);
  int root = t.adj[t.leaves[0]][0].first;
  p.root = root;
  std::vector<int> stack{root};
  std::vector<bool> seen(t.adj.size(), false);
  seen[root] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto& [v, w] : t.adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      p.nodes[v].parent = u;
      p.nodes[v].length = w;
      p.nodes[u].children.push_back(v);
      stack.push_back(v);
    }
  }
  return p;
}

const std::vector<std::string> kAbcd{"A", "B", "C", "D"};
// additive on the tree (A:1,B:2)--1--(C:3,D:4)
const std::vector<double> kAbcdValues{0, 3, 5, 6, 3, 0, 6, 7,
                                      5, 6, 0, 7, 6, 7, 7, 0};

}  // namespace

TEST_CASE("two leaves: single edge of the input distance") {
  auto t = neighbor_join(make_matrix({"A", "B"}, {0, 0.8, 0.8, 0}));
  CHECK(t.leaf_count() == 2);
  CHECK(t.leaf_path_length("A", "B") == doctest::Approx(0.8));
}

TEST_CASE("three leaves: closed-form star lengths") {
  auto t = neighbor_join(
      make_matrix({"A", "B", "C"}, {0, 2, 3, 2, 0, 4, 3, 4, 0}));
  CHECK(t.leaf_path_length("A", "B") == doctest::Approx(2.0));
  CHECK(t.leaf_path_length("A", "C") == doctest::Approx(3.0));
  CHECK(t.leaf_path_length("B", "C") == doctest::Approx(4.0));
}

TEST_CASE("four-point additive case: exact topology and branch lengths") {
  auto t = neighbor_join(make_matrix(kAbcd, kAbcdValues));
  CHECK(t.leaf_path_length("A", "B") == doctest::Approx(3.0));
  CHECK(t.leaf_path_length("A", "C") == doctest::Approx(5.0));
  CHECK(t.leaf_path_length("A", "D") == doctest::Approx(6.0));
  CHECK(t.leaf_path_length("B", "C") == doctest::Approx(6.0));
  CHECK(t.leaf_path_length("B", "D") == doctest::Approx(7.0));
  CHECK(t.leaf_path_length("C", "D") == doctest::Approx(7.0));
  auto splits = split_set(t);
  REQUIRE(splits.size() == 1);
  CHECK(*splits.begin() == std::vector<std::string>{"A", "B"});
}

TEST_CASE("contract errors point to symmetrization") {
  auto asym = make_matrix({"A", "B"}, {0, 0.4, 0.6, 0});
  CHECK_THROWS_WITH(neighbor_join(asym), doctest::Contains("symmetrize"));
  auto diag = make_matrix({"A", "B"}, {0.1, 0.4, 0.4, 0});
  CHECK_THROWS(neighbor_join(diag));
}

TEST_CASE("newick serialization is deterministic and round-trips") {
  auto t = neighbor_join(make_matrix(kAbcd, kAbcdValues));
  const std::string nwk = to_newick(t);
  CHECK(nwk == "((A:1,B:2):1,C:3,D:4);");
  CHECK(to_newick(neighbor_join(make_matrix(kAbcd, kAbcdValues))) == nwk);

  auto back = parse_newick(nwk);
  CHECK(split_set(back) == split_set(t));
  CHECK(back.leaf_path_length("A", "D") == doctest::Approx(6.0));
}

TEST_CASE("newick quoting of unsafe labels") {
  auto t = neighbor_join(
      make_matrix({"sp one", "B(x)"}, {0, 1.0, 1.0, 0}));
  const std::string nwk = to_newick(t);
  CHECK(nwk.find("'sp one'") != std::string::npos);
  CHECK(nwk.find("'B(x)'") != std::string::npos);
  auto back = parse_newick(nwk);
  CHECK(back.leaf_labels() == std::vector<std::string>{"B(x)", "sp one"});
}

TEST_CASE("negative branch lengths are kept, flagged, clamped at export") {
  PhyloTree t;
  t.nodes.resize(3);
  t.root = 0;
  t.nodes[0].children = {1, 2};
  t.nodes[1] = {"A", 0, -0.25, {}};
  t.nodes[2] = {"B", 0, 0.75, {}};
  CHECK(t.has_negative_lengths());
  CHECK(to_newick(t).find("-") == std::string::npos);
  NewickOptions raw;
  raw.clamp_negative = false;
  CHECK(to_newick(t, raw).find("-0.25") != std::string::npos);
}

TEST_CASE("outgroup rooting") {
  auto t = neighbor_join(make_matrix(kAbcd, kAbcdValues));
  auto rooted = root_at_outgroup(t, "A");
  CHECK(rooted.rooted);
  // the root splits A's pendant edge in half
  REQUIRE(rooted.nodes[rooted.root].children.size() == 2);
  CHECK(rooted.leaf_path_length("A", "B") == doctest::Approx(3.0));
  CHECK(split_set(rooted) == split_set(t));
  CHECK(is_clade(rooted, {"C", "D"}));
  CHECK(is_clade(rooted, {"B", "C", "D"}));
  CHECK(!is_clade(rooted, {"A", "C"}));

  CHECK_THROWS_WITH(root_at_outgroup(t, "Z"), doctest::Contains("available"));
}

TEST_CASE("two-leaf midpoint rooting") {
  auto t = neighbor_join(make_matrix({"A", "B"}, {0, 0.8, 0.8, 0}));
  auto rooted = root_at_outgroup(t, "A");
  CHECK(to_newick(rooted, {.precision = 6}) == "(A:0.4,B:0.4);");
}

TEST_CASE("robinson-foulds distance") {
  auto ab_cd = neighbor_join(make_matrix(kAbcd, kAbcdValues));
  CHECK(rf_distance(ab_cd, ab_cd) == 0);
  // AC|BD topology
  auto ac_bd = neighbor_join(make_matrix(
      {"A", "B", "C", "D"},
      {0, 5, 3, 6, 5, 0, 6, 7, 3, 6, 0, 7, 6, 7, 7, 0}));
  CHECK(rf_distance(ab_cd, ac_bd) == 2);

  auto other = neighbor_join(make_matrix({"A", "B"}, {0, 1, 1, 0}));
  CHECK_THROWS(rf_distance(ab_cd, other));
}

TEST_CASE("monophyly on unrooted trees") {
  auto t = neighbor_join(make_matrix(kAbcd, kAbcdValues));
  CHECK(is_monophyletic(t, {"A", "B"}));
  CHECK(is_monophyletic(t, {"C", "D"}));
  CHECK(!is_monophyletic(t, {"A", "C"}));
  CHECK(is_monophyletic(t, {"A"}));  // trivial group
}

TEST_CASE("consistency: exact recovery from additive matrices") {
  std::mt19937 rng(424242);
  int ok = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 4 + rng() % 13;  // 4..16
    auto rt = random_binary_tree(n, rng);
    auto m = additive_matrix(rt);
    auto inferred = neighbor_join(m);
    auto truth = true_phylo(rt);
    if (rf_distance(inferred, truth) != 0) continue;
    bool lengths_ok = true;
    for (std::size_t i = 0; i < n && lengths_ok; ++i)
      for (std::size_t j = i + 1; j < n && lengths_ok; ++j) {
        const double got =
            inferred.leaf_path_length(m.labels[i], m.labels[j]);
        if (std::abs(got - m.at(i, j)) > 1e-9) lengths_ok = false;
      }
    if (lengths_ok) ++ok;
  }
  CHECK(ok == trials);
}
