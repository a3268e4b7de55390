#pragma once

#include <cstdint>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

using EdgeMask = std::uint32_t;

/// Labelled view of a tree used for subforest and cut enumeration.
///
/// Vertices are numbered in preorder of the canonical encoding, so vertex 0
/// is the root. Edge i joins vertex i + 1 to its parent; an EdgeSubset is a
/// bitmask over these edge indices.
struct TreeGraph {
  std::vector<int> parent;  // parent[0] == -1
  std::vector<std::vector<int>> children;

  static TreeGraph from_tree(const Tree& t);

  int vertex_count() const noexcept { return static_cast<int>(parent.size()); }
  int edge_count() const noexcept { return vertex_count() - 1; }
  EdgeMask all_edges() const noexcept { return edge_count() == 0 ? 0 : (EdgeMask{1} << edge_count()) - 1; }

  /// Tree rooted at `root` keeping only edges in `mask` (descending from root).
  Tree subtree(int root, EdgeMask mask) const;
  /// Tree rooted at `root` keeping every edge below it.
  Tree full_subtree(int root) const { return subtree(root, all_edges()); }
  Tree to_tree() const { return full_subtree(0); }

  /// Connected components of the edges in `mask`. Components without edges
  /// (isolated vertices) are included only when `with_isolated` is set.
  Forest components(EdgeMask mask, bool with_isolated) const;

  /// Contracts every edge in `mask`. `edge_map`, when given, receives for
  /// each edge of this graph its index in the quotient, or -1 if contracted.
  TreeGraph quotient(EdgeMask mask, std::vector<int>* edge_map = nullptr) const;
};

}  // namespace arbor
