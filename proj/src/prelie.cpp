#include "arbor/prelie.hpp"

#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"

namespace arbor {

namespace {

// Every tree obtained by hanging t under one vertex of u, with repetition.
void attachments(const Tree& t, const Tree& u, std::vector<Tree>& out) {
  auto children = u.children();
  {
    auto with_t = children;
    with_t.push_back(t);
    out.push_back(Tree::graft(std::move(with_t)));
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::vector<Tree> below;
    attachments(t, children[i], below);
    for (auto& b : below) {
      auto replaced = children;
      replaced[i] = std::move(b);
      out.push_back(Tree::graft(std::move(replaced)));
    }
  }
}

ForestSum truncate(const ForestSum& x, std::size_t max_vertices) {
  ForestSum out;
  for (const auto& [f, c] : x.terms()) {
    if (f.vertices() <= max_vertices) out.add(f, c);
  }
  return out;
}

}  // namespace

ForestSum insert(const Tree& t, const Tree& u, bool normalized) {
  ForestSum out;
  const TensorSum::Key key{Forest(t), Forest(u)};
  for (const auto& v : enumerate_trees(t.edges() + u.edges(), Grading::Edges)) {
    const Rational n = tree_coproduct(v, Algebra::H).coefficient(key);
    if (n == 0) continue;
    out.add(v, normalized ? Rational(n * Rational(symmetry(t) * symmetry(u)) / Rational(symmetry(v))) : n);
  }
  return out;
}

ForestSum graft(const Tree& t, const Tree& u, bool normalized) {
  std::vector<Tree> trees;
  attachments(t, u, trees);
  ForestSum out;
  for (const auto& v : trees) {
    out.add(v, normalized ? Rational(1) : Rational(Rational(symmetry(v)) / Rational(symmetry(t) * symmetry(u))));
  }
  return out;
}

ForestSum graft_by_cuts(const Tree& t, const Tree& u) {
  ForestSum out;
  const TensorSum::Key key{Forest(t), Forest(u)};
  for (const auto& v : enumerate_trees(t.vertices() + u.vertices())) {
    out.add(v, tree_coproduct(v, Algebra::CK).coefficient(key));
  }
  return out;
}

ForestSum apply_product(const TreeProduct& product, const ForestSum& x, const ForestSum& y) {
  ForestSum out;
  for (const auto& [fx, cx] : x.terms()) {
    for (const auto& [fy, cy] : y.terms()) {
      if (!fx.is_tree() || !fy.is_tree()) throw DomainError("pre-Lie products act on sums of trees");
      out += (cx * cy) * product(fx.tree(), fy.tree());
    }
  }
  return out;
}

ForestSum prelie_defect(const TreeProduct& product, const Tree& x, const Tree& y, const Tree& z) {
  const ForestSum sx(x), sy(y), sz(z);
  ForestSum out = apply_product(product, product(x, y), sz);
  out -= apply_product(product, sx, product(y, z));
  out -= apply_product(product, product(y, x), sz);
  out += apply_product(product, sy, product(x, z));
  return out;
}

std::vector<Rational> bernoulli_numbers(std::size_t n) {
  // sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = 0;
    for (std::size_t k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -s / Rational(static_cast<long>(m + 1));
  }
  return b;
}

ForestSum magnus_omega(std::size_t max_vertices) {
  if (max_vertices == 0) throw DomainError("magnus_omega needs at least one vertex");
  const auto b = bernoulli_numbers(max_vertices);
  const auto right_graft = [](const Tree& t, const Tree& u) { return graft(t, u, true); };
  const ForestSum bullet(Forest::bullet());
  ForestSum omega = bullet;
  // Each pass fixes one more grade.
  for (std::size_t pass = 1; pass < max_vertices; ++pass) {
    ForestSum next = bullet;
    ForestSum iterate = bullet;
    Rational inv_factorial = 1;
    for (std::size_t n = 1; n < max_vertices; ++n) {
      iterate = truncate(apply_product(right_graft, omega, iterate), max_vertices);
      if (iterate.is_zero()) break;
      inv_factorial /= static_cast<long>(n);
      next += (b[n] * inv_factorial) * iterate;
    }
    omega = std::move(next);
  }
  return omega;
}

}  // namespace arbor
