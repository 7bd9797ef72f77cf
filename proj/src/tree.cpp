#include "ncdkit/tree.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace ncdkit {

std::size_t PhyloTree::leaf_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes) {
    if (node.children.empty()) ++n;
  }
  return n;
}

std::vector<std::string> PhyloTree::leaf_labels() const {
  std::vector<std::string> out;
  for (const auto& node : nodes) {
    if (node.children.empty()) out.push_back(node.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PhyloTree::has_negative_lengths() const {
  for (const auto& node : nodes) {
    if (node.parent >= 0 && node.length < 0) return true;
  }
  return false;
}

double PhyloTree::leaf_path_length(const std::string& a,
                                   const std::string& b) const {
  auto find_leaf = [&](const std::string& label) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].children.empty() && nodes[i].label == label) {
        return static_cast<int>(i);
      }
    }
    throw std::out_of_range("leaf not found: " + label);
  };
  int na = find_leaf(a), nb = find_leaf(b);
  std::map<int, double> dist_a;
  double d = 0;
  for (int v = na; v != -1; v = nodes[v].parent) {
    dist_a[v] = d;
    if (nodes[v].parent != -1) d += nodes[v].length;
  }
  d = 0;
  for (int v = nb; v != -1; v = nodes[v].parent) {
    auto it = dist_a.find(v);
    if (it != dist_a.end()) return d + it->second;
    if (nodes[v].parent != -1) d += nodes[v].length;
  }
  throw std::logic_error("disconnected tree");
}

PhyloTree neighbor_join(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw std::invalid_argument("neighbor_join: need n >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, i) != 0.0) {
      throw std::invalid_argument(
          "neighbor_join: nonzero diagonal; run symmetrize_export with "
          "zero_diagonal first");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        throw std::invalid_argument(
            "neighbor_join: asymmetric input; run symmetrize_export first");
      }
    }
  }

  PhyloTree t;
  t.rooted = false;
  for (std::size_t i = 0; i < n; ++i) {
    PhyloTree::Node leaf;
    leaf.label = m.labels[i];
    t.nodes.push_back(leaf);
  }

  if (n == 2) {
    // stored midpoint-split; the leaf path length is m[0][1]
    PhyloTree::Node mid;
    int c = static_cast<int>(t.nodes.size());
    t.nodes.push_back(mid);
    t.nodes[0].parent = c;
    t.nodes[0].length = m.at(0, 1) / 2;
    t.nodes[1].parent = c;
    t.nodes[1].length = m.at(0, 1) / 2;
    t.nodes[c].children = {0, 1};
    t.root = c;
    return t;
  }

  struct Active {
    int node;
    std::vector<double> d;  // distances to active clusters, by position
  };
  std::vector<int> active;            // node ids
  std::vector<std::vector<double>> d;  // working distance matrix
  for (std::size_t i = 0; i < n; ++i) active.push_back(static_cast<int>(i));
  d.resize(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = m.at(i, j);
  }

  auto join = [&](std::size_t a, std::size_t b, double la, double lb) {
    PhyloTree::Node internal;
    const int u = static_cast<int>(t.nodes.size());
    t.nodes.push_back(internal);
    t.nodes[active[a]].parent = u;
    t.nodes[active[a]].length = la;
    t.nodes[active[b]].parent = u;
    t.nodes[active[b]].length = lb;
    t.nodes[u].children = {active[a], active[b]};
    return u;
  };

  while (active.size() > 3) {
    const std::size_t cnt = active.size();
    std::vector<double> r(cnt, 0.0);
    for (std::size_t i = 0; i < cnt; ++i) {
      for (std::size_t j = 0; j < cnt; ++j) r[i] += d[i][j];
    }
    double best_q = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < cnt; ++i) {
      for (std::size_t j = i + 1; j < cnt; ++j) {
        const double q = (static_cast<double>(cnt) - 2) * d[i][j] - r[i] - r[j];
        if (q < best_q) {
          best_q = q;
          bi = i;
          bj = j;
        }
      }
    }
    const double dij = d[bi][bj];
    const double li =
        0.5 * dij + (r[bi] - r[bj]) / (2.0 * (static_cast<double>(cnt) - 2));
    const double lj = dij - li;
    const int u = join(bi, bj, li, lj);

    std::vector<double> du(cnt, 0.0);
    for (std::size_t k = 0; k < cnt; ++k) {
      if (k == bi || k == bj) continue;
      du[k] = 0.5 * (d[bi][k] + d[bj][k] - dij);
    }
    // replace cluster bi with u, drop bj
    active[bi] = u;
    for (std::size_t k = 0; k < cnt; ++k) {
      d[bi][k] = du[k];
      d[k][bi] = du[k];
    }
    d[bi][bi] = 0.0;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(bj));
    for (auto& row : d) {
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
    }
  }

  // star-join the last three clusters
  PhyloTree::Node center;
  const int c = static_cast<int>(t.nodes.size());
  t.nodes.push_back(center);
  const double la = 0.5 * (d[0][1] + d[0][2] - d[1][2]);
  const double lb = 0.5 * (d[0][1] + d[1][2] - d[0][2]);
  const double lc = 0.5 * (d[0][2] + d[1][2] - d[0][1]);
  const double lens[3] = {la, lb, lc};
  for (int i = 0; i < 3; ++i) {
    t.nodes[active[static_cast<std::size_t>(i)]].parent = c;
    t.nodes[active[static_cast<std::size_t>(i)]].length = lens[i];
    t.nodes[c].children.push_back(active[static_cast<std::size_t>(i)]);
  }
  t.root = c;
  return t;
}

namespace {

struct Adjacency {
  // neighbor -> branch length, per node
  std::vector<std::vector<std::pair<int, double>>> adj;
};

Adjacency to_adjacency(const PhyloTree& t) {
  Adjacency a;
  a.adj.resize(t.nodes.size());
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    int p = t.nodes[v].parent;
    if (p >= 0) {
      a.adj[v].push_back({p, t.nodes[v].length});
      a.adj[static_cast<std::size_t>(p)].push_back(
          {static_cast<int>(v), t.nodes[v].length});
    }
  }
  return a;
}

// Rebuilds parent/child structure hanging from new_root using adjacency.
void rehang(PhyloTree& t, const Adjacency& a, int new_root) {
  for (auto& node : t.nodes) {
    node.parent = -1;
    node.children.clear();
    node.length = 0;
  }
  std::function<void(int, int, double)> dfs = [&](int v, int parent,
                                                  double len) {
    t.nodes[static_cast<std::size_t>(v)].parent = parent;
    t.nodes[static_cast<std::size_t>(v)].length = len;
    for (const auto& [u, l] : a.adj[static_cast<std::size_t>(v)]) {
      if (u != parent) {
        t.nodes[static_cast<std::size_t>(v)].children.push_back(u);
        dfs(u, v, l);
      }
    }
  };
  dfs(new_root, -1, 0);
  t.root = new_root;
}

}  // namespace

PhyloTree root_at_outgroup(const PhyloTree& t, const std::string& outgroup) {
  int leaf = -1;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].children.empty() && t.nodes[i].label == outgroup) {
      leaf = static_cast<int>(i);
      break;
    }
  }
  if (leaf < 0) {
    std::string avail;
    for (const auto& l : t.leaf_labels()) {
      if (!avail.empty()) avail += ", ";
      avail += l;
    }
    throw std::out_of_range("outgroup '" + outgroup +
                            "' is not a leaf; available: " + avail);
  }

  // a 2-leaf tree is already stored with the single edge split at its
  // midpoint, which is exactly where outgroup rooting would place the root
  if (t.leaf_count() == 2) {
    PhyloTree two = t;
    two.rooted = true;
    return two;
  }

  PhyloTree out = t;
  Adjacency a = to_adjacency(t);
  // split the outgroup's pendant edge at its midpoint
  const auto [attach, pend_len] = a.adj[static_cast<std::size_t>(leaf)][0];
  const int root = static_cast<int>(out.nodes.size());
  out.nodes.push_back({});
  a.adj.push_back({});
  auto drop_edge = [&](int u, int v) {
    auto& lst = a.adj[static_cast<std::size_t>(u)];
    lst.erase(std::remove_if(lst.begin(), lst.end(),
                             [&](const std::pair<int, double>& e) {
                               return e.first == v;
                             }),
              lst.end());
  };
  drop_edge(leaf, attach);
  drop_edge(attach, leaf);
  a.adj[static_cast<std::size_t>(leaf)].push_back({root, pend_len / 2});
  a.adj[static_cast<std::size_t>(root)].push_back({leaf, pend_len / 2});
  a.adj[static_cast<std::size_t>(attach)].push_back({root, pend_len / 2});
  a.adj[static_cast<std::size_t>(root)].push_back({attach, pend_len / 2});

  rehang(out, a, root);
  out.rooted = true;
  return out;
}

namespace {

std::string quote_label(const std::string& label) {
  if (label.find_first_of(" \t()[]:;,'") == std::string::npos &&
      !label.empty()) {
    return label;
  }
  std::string q = "'";
  for (char c : label) {
    q += c;
    if (c == '\'') q += '\'';
  }
  q += "'";
  return q;
}

std::string format_length(double v, const NewickOptions& opts) {
  if (opts.clamp_negative && v < 0) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", opts.precision, v);
  return buf;
}

}  // namespace

std::string to_newick(const PhyloTree& t, const NewickOptions& opts) {
  std::vector<std::string> min_leaf(t.nodes.size());
  std::function<void(int)> annotate = [&](int v) {
    auto& node = t.nodes[static_cast<std::size_t>(v)];
    if (node.children.empty()) {
      min_leaf[static_cast<std::size_t>(v)] = node.label;
      return;
    }
    std::string best;
    for (int c : node.children) {
      annotate(c);
      const auto& m = min_leaf[static_cast<std::size_t>(c)];
      if (best.empty() || m < best) best = m;
    }
    min_leaf[static_cast<std::size_t>(v)] = best;
  };
  annotate(t.root);

  std::function<std::string(int, bool)> emit = [&](int v, bool is_root) {
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    std::string s;
    if (node.children.empty()) {
      s = quote_label(node.label);
    } else {
      std::vector<int> kids = node.children;
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        return min_leaf[static_cast<std::size_t>(a)] <
               min_leaf[static_cast<std::size_t>(b)];
      });
      s = "(";
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) s += ",";
        s += emit(kids[i], false);
      }
      s += ")";
    }
    if (!is_root) s += ":" + format_length(node.length, opts);
    return s;
  };
  return emit(t.root, true) + ";";
}

PhyloTree parse_newick(const std::string& text) {
  PhyloTree t;
  std::size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::function<int()> parse_node = [&]() -> int {
    skip_ws();
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      for (;;) {
        int child = parse_node();
        t.nodes[static_cast<std::size_t>(child)].parent = id;
        t.nodes[static_cast<std::size_t>(id)].children.push_back(child);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') {
        throw std::runtime_error("newick parse: expected ')'");
      }
      ++pos;
    }
    skip_ws();
    // optional label
    if (pos < text.size() && text[pos] == '\'') {
      ++pos;
      std::string label;
      while (pos < text.size()) {
        if (text[pos] == '\'') {
          if (pos + 1 < text.size() && text[pos + 1] == '\'') {
            label += '\'';
            pos += 2;
          } else {
            ++pos;
            break;
          }
        } else {
          label += text[pos++];
        }
      }
      t.nodes[static_cast<std::size_t>(id)].label = label;
    } else {
      std::string label;
      while (pos < text.size() &&
             std::string("(),:;").find(text[pos]) == std::string::npos &&
             !std::isspace(static_cast<unsigned char>(text[pos]))) {
        label += text[pos++];
      }
      t.nodes[static_cast<std::size_t>(id)].label = label;
    }
    skip_ws();
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      skip_ws();
      std::size_t used = 0;
      t.nodes[static_cast<std::size_t>(id)].length =
          std::stod(text.substr(pos), &used);
      pos += used;
    }
    return id;
  };
  const int root = parse_node();
  skip_ws();
  if (pos >= text.size() || text[pos] != ';') {
    throw std::runtime_error("newick parse: missing ';'");
  }
  t.root = root;
  t.rooted = t.nodes[static_cast<std::size_t>(root)].children.size() == 2;
  // internal labels are not used; clear any accidental ones on internals
  for (auto& node : t.nodes) {
    if (!node.children.empty()) node.label.clear();
  }
  return t;
}

std::set<std::vector<std::string>> split_set(const PhyloTree& t) {
  std::vector<std::string> all = t.leaf_labels();
  const std::string& global_min = all.front();
  std::set<std::vector<std::string>> splits;

  std::vector<std::vector<std::string>> below(t.nodes.size());
  std::function<void(int)> collect = [&](int v) {
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    if (node.children.empty()) {
      below[static_cast<std::size_t>(v)] = {node.label};
      return;
    }
    for (int c : node.children) {
      collect(c);
      auto& b = below[static_cast<std::size_t>(v)];
      b.insert(b.end(), below[static_cast<std::size_t>(c)].begin(),
               below[static_cast<std::size_t>(c)].end());
    }
    std::sort(below[static_cast<std::size_t>(v)].begin(),
              below[static_cast<std::size_t>(v)].end());
  };
  collect(t.root);

  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    if (t.nodes[v].parent < 0 || t.nodes[v].children.empty()) continue;
    const auto& side = below[v];
    if (side.size() < 2 || side.size() > all.size() - 2) continue;
    if (std::binary_search(side.begin(), side.end(), global_min)) {
      splits.insert(side);
    } else {
      std::vector<std::string> other;
      std::set_difference(all.begin(), all.end(), side.begin(), side.end(),
                          std::back_inserter(other));
      splits.insert(other);
    }
  }
  return splits;
}

std::size_t rf_distance(const PhyloTree& a, const PhyloTree& b) {
  const auto la = a.leaf_labels();
  const auto lb = b.leaf_labels();
  if (la != lb) {
    std::vector<std::string> diff;
    std::set_symmetric_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                                  std::back_inserter(diff));
    std::string msg = "rf_distance: leaf sets differ:";
    for (const auto& d : diff) msg += " " + d;
    throw std::invalid_argument(msg);
  }
  const auto sa = split_set(a);
  const auto sb = split_set(b);
  std::size_t common = 0;
  for (const auto& s : sa) {
    if (sb.count(s)) ++common;
  }
  return (sa.size() - common) + (sb.size() - common);
}

bool is_monophyletic(const PhyloTree& t,
                     const std::vector<std::string>& labels) {
  std::vector<std::string> want = labels;
  std::sort(want.begin(), want.end());
  const auto all = t.leaf_labels();
  if (want.size() <= 1 || want.size() >= all.size() - 1) return true;
  const std::string& global_min = all.front();
  std::vector<std::string> canon;
  if (std::binary_search(want.begin(), want.end(), global_min)) {
    canon = want;
  } else {
    std::set_difference(all.begin(), all.end(), want.begin(), want.end(),
                        std::back_inserter(canon));
  }
  return split_set(t).count(canon) > 0;
}

bool is_clade(const PhyloTree& t, const std::vector<std::string>& labels) {
  std::vector<std::string> want = labels;
  std::sort(want.begin(), want.end());
  if (want.size() <= 1) return true;
  std::vector<std::vector<std::string>> below(t.nodes.size());
  bool found = false;
  std::function<void(int)> collect = [&](int v) {
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    auto& b = below[static_cast<std::size_t>(v)];
    if (node.children.empty()) {
      b = {node.label};
    } else {
      for (int c : node.children) {
        collect(c);
        b.insert(b.end(), below[static_cast<std::size_t>(c)].begin(),
                 below[static_cast<std::size_t>(c)].end());
      }
      std::sort(b.begin(), b.end());
    }
    if (b == want) found = true;
  };
  collect(t.root);
  return found;
}

}  // namespace ncdkit
