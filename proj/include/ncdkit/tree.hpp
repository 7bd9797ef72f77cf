#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ncdkit/matrix.hpp"

namespace ncdkit {

// Unrooted (or outgroup-rooted) tree with labeled leaves and branch
// lengths. Stored rooted at an arbitrary internal node for traversal;
// `rooted` records whether the root is meaningful.
struct PhyloTree {
  struct Node {
    std::string label;          // empty for internal nodes
    int parent = -1;
    double length = 0;          // edge to parent; unused at the root
    std::vector<int> children;
  };

  std::vector<Node> nodes;
  int root = -1;
  bool rooted = false;

  std::size_t leaf_count() const;
  std::vector<std::string> leaf_labels() const;  // sorted
  bool has_negative_lengths() const;

  // Total edge length on the path between two leaves.
  double leaf_path_length(const std::string& a, const std::string& b) const;
};

// Saitou-Nei neighbor joining. Requires a symmetric, zero-diagonal matrix.
// Ties in the Q-criterion break toward the smallest (i, j) index pair.
PhyloTree neighbor_join(const DistanceMatrix& m);

// Reroots at the midpoint of the outgroup's pendant edge.
PhyloTree root_at_outgroup(const PhyloTree& t, const std::string& outgroup);

struct NewickOptions {
  int precision = 6;
  bool clamp_negative = true;  // clamp negative branch lengths to 0 at export
};

// Deterministic Newick: children ordered by smallest descendant leaf label.
std::string to_newick(const PhyloTree& t, const NewickOptions& opts = {});

PhyloTree parse_newick(const std::string& text);

// Leaf bipartitions induced by internal edges, each encoded as the sorted
// side containing the lexicographically smallest leaf.
std::set<std::vector<std::string>> split_set(const PhyloTree& t);

// Robinson-Foulds distance: |split_set(a) symmetric-difference split_set(b)|.
std::size_t rf_distance(const PhyloTree& a, const PhyloTree& b);

// True if `labels` forms one side of a bipartition of the unrooted tree
// (trivial subsets of size <= 1 or >= n-1 count as monophyletic).
bool is_monophyletic(const PhyloTree& t,
                     const std::vector<std::string>& labels);

// True if some node of the rooted tree has exactly `labels` below it.
bool is_clade(const PhyloTree& t, const std::vector<std::string>& labels);

}  // namespace ncdkit
