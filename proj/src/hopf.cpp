#include "arbor/hopf.hpp"

#include <array>
#include <functional>
#include <string>

#include "arbor/errors.hpp"
#include "arbor/memo.hpp"
#include "arbor/tree_graph.hpp"

namespace arbor {

namespace {

using Key2 = TensorSum::Key;

std::string memo_key(const Tree& t, Algebra a, int tag = 0) {
  return std::to_string(static_cast<int>(a)) + ":" + std::to_string(tag) + ":" + t.code();
}

TensorSum subforest_coproduct(const Tree& t, bool with_isolated) {
  TensorSum out(2);
  const auto g = TreeGraph::from_tree(t);
  const EdgeMask total = g.all_edges();
  for (EdgeMask mask = 0;; ++mask) {
    Forest left = g.components(mask, with_isolated);
    if (!with_isolated) left = normalize(left, Algebra::H);
    out.add({left, Forest(g.quotient(mask).to_tree())}, 1);
    if (mask == total) break;
  }
  return out;
}

// All antichains of edges below vertex v, as edge masks.
std::vector<EdgeMask> antichains(const TreeGraph& g, int v) {
  std::vector<EdgeMask> acc{0};
  for (int c : g.children[v]) {
    std::vector<EdgeMask> options{EdgeMask{1} << (c - 1)};
    auto below = antichains(g, c);
    options.insert(options.end(), below.begin(), below.end());
    std::vector<EdgeMask> next;
    next.reserve(acc.size() * options.size());
    for (EdgeMask a : acc) {
      for (EdgeMask o : options) next.push_back(a | o);
    }
    acc = std::move(next);
  }
  return acc;
}

TensorSum admissible_cut_coproduct(const Tree& t) {
  TensorSum out(2);
  const auto g = TreeGraph::from_tree(t);
  for (EdgeMask cut : antichains(g, 0)) {
    std::vector<Tree> pruned;
    for (int v = 1; v < g.vertex_count(); ++v) {
      if ((cut >> (v - 1)) & 1u) pruned.push_back(g.full_subtree(v));
    }
    out.add({Forest(std::move(pruned)), Forest(g.subtree(0, g.all_edges() & ~cut))}, 1);
  }
  out.add({Forest(t), Forest::empty()}, 1);
  return out;
}

void check_h_forest(const Forest& s, Algebra a) {
  if (!edge_graded(a)) return;
  if (s.size() == 1 && s.tree().is_bullet()) return;
  for (const auto& t : s.trees()) {
    if (t.is_bullet()) {
      throw DomainError("forest " + s.to_string() +
                        " has a single-vertex component, which is the unit of the edge-graded algebra");
    }
  }
}

}  // namespace

const TensorSum& tree_coproduct(const Tree& t, Algebra a) {
  static detail::MemoCache<std::string, TensorSum> cache;
  return cache.get_or_compute(memo_key(t, a), [&] {
    switch (a) {
      case Algebra::H:
        return subforest_coproduct(t, false);
      case Algebra::HTilde:
        return subforest_coproduct(t, true);
      case Algebra::CK:
        return admissible_cut_coproduct(t);
      case Algebra::HSigma: {
        TensorSum out(2);
        const Rational sigma_t(symmetry(t));
        for (const auto& [k, c] : tree_coproduct(t, Algebra::H).terms()) {
          out.add(k, c * Rational(symmetry(k[0]) * symmetry(k[1])) / sigma_t);
        }
        return out;
      }
    }
    return TensorSum(2);
  });
}

TensorSum coproduct(const Forest& raw, Algebra a) {
  check_h_forest(raw, a);
  const Forest s = normalize(raw, a);
  TensorSum out(2);
  out.add({unit(a), unit(a)}, 1);
  if (edge_graded(a) && s == unit(a)) return out;
  const std::array<Algebra, 2> slots{a, a};
  for (const auto& t : s.trees()) out = TensorSum::multiply(out, tree_coproduct(t, a), slots);
  return out;
}

TensorSum coproduct(const ForestSum& x, Algebra a) {
  TensorSum out(2);
  for (const auto& [f, c] : x.terms()) {
    TensorSum part = coproduct(f, a);
    part *= c;
    out += part;
  }
  return out;
}

Rational counit(const Forest& raw, Algebra a) {
  switch (a) {
    case Algebra::H:
    case Algebra::HSigma:
      return normalize(raw, a) == unit(a) ? 1 : 0;
    case Algebra::HTilde:
      return raw.all_bullets() ? 1 : 0;
    case Algebra::CK:
      return raw.is_empty() ? 1 : 0;
  }
  return 0;
}

TensorSum reduced_coproduct(const Forest& raw, Algebra a) {
  if (a == Algebra::HTilde) throw DomainError("Htilde is not connected; no reduced coproduct");
  const Forest s = normalize(raw, a);
  if (s == unit(a)) return TensorSum(2);
  TensorSum out = coproduct(s, a);
  out.add({s, unit(a)}, -1);
  out.add({unit(a), s}, -1);
  return out;
}

TensorSum apply_coproduct_at(const TensorSum& x, std::size_t slot, Algebra a, bool reduced) {
  if (slot >= x.arity()) throw DomainError("slot out of range");
  TensorSum out(x.arity() + 1);
  for (const auto& [k, c] : x.terms()) {
    const TensorSum d = reduced ? reduced_coproduct(k[slot], a) : coproduct(k[slot], a);
    for (const auto& [dk, dc] : d.terms()) {
      Key2 key;
      key.reserve(k.size() + 1);
      key.insert(key.end(), k.begin(), k.begin() + static_cast<long>(slot));
      key.push_back(dk[0]);
      key.push_back(dk[1]);
      key.insert(key.end(), k.begin() + static_cast<long>(slot) + 1, k.end());
      out.add(key, c * dc);
    }
  }
  return out;
}

TensorSum iterated_coproduct(const Forest& s, Algebra a, std::size_t n, bool reduced) {
  TensorSum out(1);
  out.add({normalize(s, a)}, 1);
  for (std::size_t i = 0; i < n; ++i) out = apply_coproduct_at(out, out.arity() - 1, a, reduced);
  return out;
}

ForestSum sigma_scale(const ForestSum& x, bool inverse) {
  ForestSum out;
  for (const auto& [f, c] : x.terms()) {
    const Rational s(symmetry(f));
    out.add(f, inverse ? Rational(c / s) : Rational(c * s));
  }
  return out;
}

namespace {

ForestSum closed_form_tree_antipode(const Tree& t) {
  const auto g0 = TreeGraph::from_tree(t);
  const int e = g0.edge_count();
  ForestSum out;
  if (e == 0) return ForestSum(Forest::bullet());
  std::vector<int> label(e, 0);
  for (int r = 1; r <= e; ++r) {
    const Rational sign = (r % 2 == 0) ? 1 : -1;
    // Every labelling of the edges by 0..r-1 that uses each label is an
    // ordered partition of the edge set into r blocks.
    std::function<void(int)> assign = [&](int i) {
      if (i == e) {
        std::vector<bool> used(r, false);
        for (int l : label) used[l] = true;
        for (bool u : used) {
          if (!u) return;
        }
        TreeGraph g = g0;
        std::vector<int> where(e);
        for (int k = 0; k < e; ++k) where[k] = k;
        Forest product = Forest::bullet();
        for (int block = 0; block + 1 < r; ++block) {
          EdgeMask mask = 0;
          for (int k = 0; k < e; ++k) {
            if (label[k] == block) mask |= EdgeMask{1} << where[k];
          }
          product = multiply(product, g.components(mask, false), Algebra::H);
          std::vector<int> emap;
          TreeGraph next = g.quotient(mask, &emap);
          for (int k = 0; k < e; ++k) where[k] = where[k] >= 0 ? emap[where[k]] : -1;
          g = std::move(next);
        }
        out.add(multiply(product, Forest(g.to_tree()), Algebra::H), sign);
        return;
      }
      for (int l = 0; l < r; ++l) {
        label[i] = l;
        assign(i + 1);
      }
    };
    assign(0);
  }
  return out;
}

const ForestSum& tree_antipode(const Tree& t, Algebra a, AntipodeMethod method) {
  static detail::MemoCache<std::string, ForestSum> cache;
  return cache.get_or_compute(memo_key(t, a, static_cast<int>(method) + 1), [&]() -> ForestSum {
    if (edge_graded(a) && t.is_bullet()) return ForestSum(Forest::bullet());
    if (method == AntipodeMethod::ClosedForm) {
      if (a == Algebra::H) return closed_form_tree_antipode(t);
      // S_sigma = A_sigma o S o A_sigma^{-1}
      ForestSum s = sigma_scale(closed_form_tree_antipode(t));
      s *= Rational(1) / Rational(symmetry(t));
      return s;
    }
    ForestSum out(Forest(t), -1);
    for (const auto& [k, c] : tree_coproduct(t, a).terms()) {
      if (k[0] == unit(a) || k[1] == unit(a)) continue;
      if (method == AntipodeMethod::Recursive) {
        out -= c * multiply(ForestSum(k[0]), antipode(k[1], a, method), a);
      } else {
        out -= c * multiply(antipode(k[0], a, method), ForestSum(k[1]), a);
      }
    }
    return out;
  });
}

}  // namespace

ForestSum antipode(const Forest& raw, Algebra a, AntipodeMethod method) {
  if (a == Algebra::HTilde) throw DomainError("Htilde is only a bialgebra; it has no antipode");
  if (a == Algebra::CK && method == AntipodeMethod::ClosedForm) {
    throw DomainError("no closed-form antipode is available for CK");
  }
  check_h_forest(raw, a);
  const Forest s = normalize(raw, a);
  ForestSum out(unit(a));
  if (s == unit(a)) return out;
  for (const auto& t : s.trees()) out = multiply(out, tree_antipode(t, a, method), a);
  return out;
}

ForestSum antipode(const ForestSum& x, Algebra a, AntipodeMethod method) {
  ForestSum out;
  for (const auto& [f, c] : x.terms()) out += c * antipode(f, a, method);
  return out;
}

TensorSum corolla_coproduct(std::size_t n, bool sigma_normalized) {
  TensorSum out(2);
  for (std::size_t p = 0; p <= n; ++p) {
    const Rational weight = sigma_normalized ? Rational(1) : Rational(binomial(n, p));
    out.add({normalize(Forest(corolla(p)), Algebra::H), normalize(Forest(corolla(n - p)), Algebra::H)}, weight);
  }
  return out;
}

TensorSum ladder_coproduct(std::size_t n) {
  TensorSum out(2);
  // Mock-compositions: p_1 >= 0, later parts >= 1, summing to n.
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      Forest left = Forest::bullet();
      std::size_t right = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i % 2 == 0) {
          left = multiply(left, Forest(ladder(parts[i])), Algebra::H);
        } else {
          right += parts[i];
        }
      }
      out.add({left, Forest(ladder(right))}, 1);
      return;
    }
    for (std::size_t p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      extend(remaining - p);
      parts.pop_back();
    }
  };
  for (std::size_t first = 0; first <= n; ++first) {
    parts = {first};
    extend(n - first);
  }
  return out;
}

namespace {

template <class Visit>
void for_each_floor_function(const TreeGraph& g, Visit&& visit) {
  const int e = g.edge_count();
  std::vector<int> floor(e, 0);
  // Edges are indexed by preorder of their upper vertex, so the parent edge
  // of edge i (vertex i + 1) always has a smaller index.
  std::function<void(int)> assign = [&](int i) {
    if (i == e) {
      visit(floor);
      return;
    }
    const int v = i + 1;
    const int p = g.parent[v];
    const int base = p == 0 ? 0 : floor[p - 1];
    for (int step = 0; step <= 1; ++step) {
      floor[i] = base + step;
      assign(i + 1);
    }
  };
  assign(0);
}

bool image_is_interval(const std::vector<int>& floor) {
  if (floor.empty()) return true;
  int lo = floor[0];
  int hi = floor[0];
  for (int f : floor) {
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  if (lo > 1) return false;
  std::vector<bool> seen(hi + 1, false);
  for (int f : floor) seen[f] = true;
  for (int k = lo; k <= hi; ++k) {
    if (!seen[k]) return false;
  }
  return true;
}

}  // namespace

TensorSum floored_coproduct(const Tree& t) {
  TensorSum out(2);
  const auto g = TreeGraph::from_tree(t);
  if (g.edge_count() == 0) {
    out.add({Forest::bullet(), Forest::bullet()}, 1);
    return out;
  }
  for_each_floor_function(g, [&](const std::vector<int>& floor) {
    if (!image_is_interval(floor)) return;
    EdgeMask odd_ranked = 0;  // floors 0, 2, 4, ... are s_1, s_3, s_5, ...
    for (std::size_t i = 0; i < floor.size(); ++i) {
      if (floor[i] % 2 == 0) odd_ranked |= EdgeMask{1} << i;
    }
    out.add({normalize(g.components(odd_ranked, false), Algebra::H), Forest(g.quotient(odd_ranked).to_tree())}, 1);
  });
  return out;
}

std::size_t floored_tree_count(const Tree& t) {
  const auto g = TreeGraph::from_tree(t);
  std::size_t count = 0;
  for_each_floor_function(g, [&](const std::vector<int>& floor) {
    if (image_is_interval(floor)) ++count;
  });
  return count;
}

ForestSum corolla_antipode(std::size_t n, bool sigma_normalized) {
  ForestSum out;
  if (n == 0) return ForestSum(Forest::bullet());
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      Rational weight = sigma_normalized ? Rational(1) : Rational(factorial(n));
      Forest product = Forest::bullet();
      for (std::size_t k : parts) {
        if (!sigma_normalized) weight /= Rational(factorial(k));
        product = multiply(product, Forest(corolla(k)), Algebra::H);
      }
      if (parts.size() % 2 == 1) weight = -weight;
      out.add(product, weight);
      return;
    }
    for (std::size_t k = 1; k <= remaining; ++k) {
      parts.push_back(k);
      extend(remaining - k);
      parts.pop_back();
    }
  };
  extend(n);
  return out;
}

ForestSum b_plus(const ForestSum& x) {
  ForestSum out;
  for (const auto& [f, c] : x.terms()) out.add(Forest(b_plus(f)), c);
  return out;
}

}  // namespace arbor
