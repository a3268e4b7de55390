#pragma once

// Brute-force references built from labelled trees (parent arrays) and plain
// integer arithmetic. Only the final conversion into library types uses the
// library, through Tree::parse on strings assembled here.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "arbor/linear.hpp"
#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace oracle {

// parent[0] == -1, parent[i] < i otherwise.
using Parents = std::vector<int>;

inline bool shortlex(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

inline std::string encode(const std::vector<std::vector<int>>& kids, int v) {
  std::vector<std::string> parts;
  for (int w : kids[v]) parts.push_back(encode(kids, w));
  std::sort(parts.begin(), parts.end(), shortlex);
  std::string out = "[";
  for (const auto& p : parts) out += p;
  return out + "]";
}

inline std::vector<std::vector<int>> children_of(const Parents& p) {
  std::vector<std::vector<int>> kids(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) kids[p[i]].push_back(static_cast<int>(i));
  return kids;
}

inline std::string encode(const Parents& p) { return encode(children_of(p), 0); }

// Every parent array on n vertices; each unlabelled tree shows up at least once.
inline void for_each_labelled(std::size_t n, const std::function<void(const Parents&)>& f) {
  Parents p(n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      f(p);
      return;
    }
    for (std::size_t j = 0; j < i; ++j) {
      p[i] = static_cast<int>(j);
      rec(i + 1);
    }
  };
  if (n > 0) rec(1);
}

inline std::set<std::string> unlabelled_trees(std::size_t n) {
  std::set<std::string> out;
  for_each_labelled(n, [&](const Parents& p) { out.insert(encode(p)); });
  return out;
}

// Parent array of a canonical string, root 0, vertices in preorder.
inline Parents parents_of(const std::string& code) {
  Parents p;
  std::vector<int> stack;
  for (char c : code) {
    if (c == '[') {
      p.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(p.size()) - 1);
    } else {
      stack.pop_back();
    }
  }
  return p;
}

inline long automorphisms(const Parents& p) {
  const std::size_t n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    if (perm[0] != 0) continue;
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = p[perm[i]] == perm[p[i]];
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline long tree_factorial(const Parents& p) {
  std::vector<long> size(p.size(), 1);
  for (std::size_t i = p.size(); i-- > 1;) size[p[i]] += size[i];
  long out = 1;
  for (long s : size) out *= s;
  return out;
}

inline arbor::Forest forest_of(std::vector<std::string> codes) {
  std::vector<arbor::Tree> trees;
  for (const auto& c : codes) trees.push_back(arbor::Tree::parse(c));
  return arbor::Forest(trees);
}

struct Split {
  std::vector<int> cls;                  // class representative per vertex
  std::vector<std::vector<int>> inside;  // children joined by a chosen edge
};

inline Split split(const Parents& p, std::uint32_t edges) {
  const std::size_t n = p.size();
  Split s{std::vector<int>(n), std::vector<std::vector<int>>(n)};
  for (std::size_t v = 0; v < n; ++v) {
    const bool chosen = v > 0 && (edges >> (v - 1)) & 1U;
    s.cls[v] = chosen ? s.cls[p[v]] : static_cast<int>(v);
    if (chosen) s.inside[p[v]].push_back(static_cast<int>(v));
  }
  return s;
}

// Quotient tree: each class becomes one vertex.
inline std::string contraction(const Parents& p, const Split& s) {
  std::vector<std::vector<int>> kids(p.size());
  for (std::size_t v = 1; v < p.size(); ++v) {
    if (s.cls[v] == static_cast<int>(v)) kids[s.cls[p[v]]].push_back(static_cast<int>(v));
  }
  return encode(kids, 0);
}

enum class Cop { H, HTilde, CK };

// Terms of the coproduct of a tree, each edge subset (or cut) counted once.
inline arbor::TensorSum coproduct(const std::string& code, Cop kind) {
  const Parents p = parents_of(code);
  const std::size_t n = p.size();
  const std::uint32_t all = (1U << (n - 1)) - 1;
  arbor::TensorSum out(2);
  if (kind == Cop::CK) {
    for (std::uint32_t cut = 0; cut <= all; ++cut) {
      // antichain: no cut edge above another
      bool ok = true;
      std::vector<bool> below(n, false);
      for (std::size_t v = 1; v < n && ok; ++v) {
        below[v] = below[p[v]] || ((cut >> (v - 1)) & 1U);
        if (((cut >> (v - 1)) & 1U) && below[p[v]]) ok = false;
      }
      if (!ok) continue;
      std::vector<std::vector<int>> kids(n);
      std::vector<std::string> pruned;
      std::vector<int> tops;
      for (std::size_t v = 1; v < n; ++v) {
        if ((cut >> (v - 1)) & 1U) {
          tops.push_back(static_cast<int>(v));
        } else {
          kids[p[v]].push_back(static_cast<int>(v));
        }
      }
      for (int v : tops) pruned.push_back(encode(kids, v));
      out.add({forest_of(pruned), forest_of({encode(kids, 0)})}, 1);
    }
    out.add({forest_of({code}), arbor::Forest()}, 1);
    return out;
  }
  for (std::uint32_t edges = 0; edges <= all; ++edges) {
    const Split s = split(p, edges);
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < n; ++v) {
      if (s.cls[v] != static_cast<int>(v)) continue;
      if (kind == Cop::H && s.inside[v].empty()) continue;
      parts.push_back(encode(s.inside, static_cast<int>(v)));
    }
    const arbor::Forest left = parts.empty() ? arbor::Forest::bullet() : forest_of(parts);
    out.add({left, forest_of({contraction(p, s)})}, 1);
  }
  return out;
}

// Quasi-shuffles of blocks of sizes ks onto sum(ks) - r letters: tuples of
// subsets with those sizes covering every letter.
inline long quasi_shuffles(const std::vector<std::size_t>& ks, std::size_t r) {
  std::size_t total = 0;
  for (auto k : ks) total += k;
  if (r > total) return 0;
  const std::size_t m = total - r;
  const std::uint32_t full = (1U << m) - 1;
  std::vector<std::vector<std::uint32_t>> choices(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::uint32_t a = 0; a <= full; ++a) {
      if (static_cast<std::size_t>(std::popcount(a)) == ks[i]) choices[i].push_back(a);
    }
  }
  long count = 0;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t covered) {
    if (i == ks.size()) {
      count += covered == full ? 1 : 0;
      return;
    }
    for (auto a : choices[i]) rec(i + 1, covered | a);
  };
  rec(0, 0);
  return count;
}

// b_n with sum_n b_n x^n = x / (e^x - 1), by dividing by sum x^k / (k+1)!.
inline std::vector<arbor::Rational> bernoulli_over_factorial(std::size_t n) {
  std::vector<arbor::Rational> d(n + 1), b(n + 1);
  arbor::Rational f = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    f *= arbor::Rational(static_cast<long>(k + 1));
    d[k] = 1 / f;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    arbor::Rational acc = k == 0 ? arbor::Rational(1) : arbor::Rational(0);
    for (std::size_t j = 0; j < k; ++j) acc -= b[j] * d[k - j];
    b[k] = acc / d[0];
  }
  return b;
}

// B_n from sum_{k<=n} binom(n+1, k) B_k = 0.
inline std::vector<arbor::Rational> bernoulli_by_recursion(std::size_t n) {
  std::vector<arbor::Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    arbor::Rational acc = 0;
    arbor::Integer c = 1;  // binom(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += arbor::Rational(c) * b[k];
      c = c * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    b[m] = -acc / arbor::Rational(c);
  }
  return b;
}

}  // namespace oracle
