#include "arbor/tree_graph.hpp"

#include <functional>
#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

constexpr int kMaxVertices = 32;

bool has_edge(EdgeMask mask, int child) { return (mask >> (child - 1)) & 1u; }

}  // namespace

TreeGraph TreeGraph::from_tree(const Tree& t) {
  if (t.vertices() > kMaxVertices) throw DomainError("tree too large for edge-subset enumeration");
  TreeGraph g;
  std::vector<int> stack;
  for (char c : t.code()) {
    if (c == '[') {
      const int v = static_cast<int>(g.parent.size());
      const int p = stack.empty() ? -1 : stack.back();
      g.parent.push_back(p);
      g.children.emplace_back();
      if (p >= 0) g.children[p].push_back(v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return g;
}

Tree TreeGraph::subtree(int root, EdgeMask mask) const {
  std::vector<Tree> kids;
  for (int c : children[root]) {
    if (has_edge(mask, c)) kids.push_back(subtree(c, mask));
  }
  return Tree::graft(std::move(kids));
}

Forest TreeGraph::components(EdgeMask mask, bool with_isolated) const {
  std::vector<Tree> parts;
  for (int v = 0; v < vertex_count(); ++v) {
    // v heads a component when the edge above it is absent.
    if (v != 0 && has_edge(mask, v)) continue;
    bool any_edge = false;
    for (int c : children[v]) any_edge = any_edge || has_edge(mask, c);
    if (any_edge || with_isolated) parts.push_back(subtree(v, mask));
  }
  return Forest(std::move(parts));
}

TreeGraph TreeGraph::quotient(EdgeMask mask, std::vector<int>* edge_map) const {
  // Class representative = topmost vertex reached by climbing contracted edges.
  std::vector<int> head(parent.size());
  for (int v = 0; v < vertex_count(); ++v) {
    head[v] = (v != 0 && has_edge(mask, v)) ? head[parent[v]] : v;
  }
  TreeGraph q;
  std::vector<int> new_index(parent.size(), -1);
  if (edge_map) edge_map->assign(edge_count(), -1);
  // Preorder walk of the quotient: visit a class, then its child classes in
  // the order their heads appear in the original preorder.
  std::function<void(int, int)> visit = [&](int h, int qparent) {
    const int idx = q.vertex_count();
    new_index[h] = idx;
    q.parent.push_back(qparent);
    q.children.emplace_back();
    if (qparent >= 0) q.children[qparent].push_back(idx);
    if (edge_map && h != 0) (*edge_map)[h - 1] = idx - 1;
    for (int v = 0; v < vertex_count(); ++v) {
      if (head[v] != h) continue;
      for (int c : children[v]) {
        if (!has_edge(mask, c)) visit(c, idx);
      }
    }
  };
  visit(0, -1);
  return q;
}

}  // namespace arbor
