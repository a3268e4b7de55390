#include "arbor/verify.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>

#include "arbor/bseries.hpp"
#include "arbor/characters.hpp"
#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "arbor/prelie.hpp"
#include "arbor/qshuffle.hpp"

namespace arbor {

namespace {

using Clock = std::chrono::steady_clock;

// Outcome of one check: empty detail on failure is replaced by "failed".
struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string what) {
    if (passed) detail = std::move(what);
    passed = false;
  }
};

void timed(Report& r, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const InternalMismatch&) {
    throw;
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!out.passed && out.detail.empty()) out.detail = "failed";
  r.add(name, out.passed, out.detail, seconds);
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Rational next() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Rational q(num(gen_), den(gen_));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937 gen_;
};

Functional random_character(Algebra a, std::size_t d, Rng& rng, bool bullet_one = true) {
  Functional f(grading_of(a), Kind::Character, d);
  for (const auto& s : basis(a, d)) {
    if (!s.is_tree() || s == unit(a)) continue;
    f.set(s, (bullet_one && s.tree().is_bullet()) ? Rational(1) : rng.next());
  }
  return f;
}

Functional random_infinitesimal(Algebra a, std::size_t d, Rng& rng) {
  if (a == Algebra::HTilde) {
    // a(t •^m) = a(t) and a(•^m) = m a(•), zero with two larger components.
    std::map<Tree, Rational> v;
    for (const auto& t : trees_up_to(d)) v[t] = rng.next();
    Functional f(Grading::Vertices, Kind::Generic, d);
    for (const auto& s : basis(a, d)) {
      std::vector<Tree> big;
      for (const auto& t : s.trees()) {
        if (!t.is_bullet()) big.push_back(t);
      }
      if (big.empty()) {
        f.set(s, Rational(static_cast<long>(s.size())) * v[Tree()]);
      } else if (big.size() == 1) {
        f.set(s, v[big.front()]);
      }
    }
    return f;
  }
  Functional f(grading_of(a), Kind::Infinitesimal, d);
  for (const auto& s : basis(a, d)) {
    if (s.is_tree() && s != unit(a)) f.set(s, rng.next());
  }
  return f;
}

Functional random_generic(Algebra a, std::size_t d, Rng& rng, std::optional<Rational> unit_value = std::nullopt) {
  Functional f(grading_of(a), Kind::Generic, d);
  for (const auto& s : basis(a, d)) f.set(s, (unit_value && s == unit(a)) ? *unit_value : rng.next());
  return f;
}

template <class Value>
Functional tabulate(Algebra a, std::size_t d, Value&& value) {
  Functional out(grading_of(a), Kind::Generic, d);
  for (const auto& s : basis(a, d)) out.set(s, value(s));
  return out;
}

void compare(Outcome& out, const Functional& f, const Functional& g, Algebra a, std::size_t d,
             const std::string& label) {
  for (const auto& s : basis(a, d)) {
    if (f(s) != g(s)) {
      out.fail(label + " differs on " + s.to_string() + ": " + to_string(f(s)) + " vs " + to_string(g(s)));
      return;
    }
  }
}

ForestSum contract_counit(const TensorSum& x, std::size_t slot, Algebra a) {
  ForestSum out;
  for (const auto& [k, c] : x.terms()) {
    const Rational e = counit(k[slot], a);
    if (e != 0) out.add(normalize(k[1 - slot], a), c * e);
  }
  return out;
}

ForestSum antipode_convolution(const Forest& s, Algebra a, bool antipode_left) {
  ForestSum out;
  for (const auto sum = coproduct(s, a); const auto& [k, c] : sum.terms()) {
    const ForestSum left = antipode_left ? antipode(k[0], a) : ForestSum(k[0]);
    const ForestSum right = antipode_left ? ForestSum(k[1]) : antipode(k[1], a);
    out += c * multiply(left, right, a);
  }
  return out;
}

TensorSum tensor_linear(const ForestSum& x, const std::function<TensorSum(const Forest&)>& f) {
  TensorSum out(2);
  for (const auto& [s, c] : x.terms()) {
    TensorSum part = f(s);
    part *= c;
    out += part;
  }
  return out;
}

// Caches a tree product keyed by canonical codes.
TreeProduct cached(TreeProduct product) {
  auto cache = std::make_shared<std::map<std::pair<Tree, Tree>, ForestSum>>();
  return [product = std::move(product), cache](const Tree& t, const Tree& u) -> ForestSum {
    const auto key = std::make_pair(t, u);
    if (auto it = cache->find(key); it != cache->end()) return it->second;
    return cache->emplace(key, product(t, u)).first->second;
  };
}

void prelie_triples(Outcome& out, const TreeProduct& product, const std::vector<Tree>& trees, std::size_t budget,
                    const std::function<std::size_t(const Tree&)>& grade, std::size_t& count) {
  for (const auto& x : trees) {
    for (const auto& y : trees) {
      for (const auto& z : trees) {
        if (grade(x) + grade(y) + grade(z) > budget) continue;
        ++count;
        if (!prelie_defect(product, x, y, z).is_zero()) {
          out.fail("defect for " + x.code() + ", " + y.code() + ", " + z.code());
          return;
        }
      }
    }
  }
}

Functional dual_of(const ForestSum& x, Algebra a, std::size_t d, bool sigma_weighted) {
  Functional out(grading_of(a), Kind::Generic, d);
  for (const auto& [f, c] : x.terms()) {
    out.set(f, out(f) + (sigma_weighted ? Rational(c * Rational(symmetry(f))) : c));
  }
  return out;
}

Functional scaled(const Functional& f, const Rational& c, Algebra a) {
  return tabulate(a, f.max_degree(), [&](const Forest& s) -> Rational { return c * f(s); });
}

Functional difference(const Functional& f, const Functional& g, Algebra a) {
  return tabulate(a, std::min(f.max_degree(), g.max_degree()),
                  [&](const Forest& s) -> Rational { return f(s) - g(s); });
}

std::vector<std::pair<Tree, Tree>> tree_pairs(std::size_t max_each, std::size_t max_total) {
  std::vector<std::pair<Tree, Tree>> out;
  const auto trees = trees_up_to(max_each);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.vertices() + b.vertices() <= max_total) out.emplace_back(a, b);
    }
  }
  return out;
}

PolyVectorField random_field(std::size_t dim, Rng& rng) {
  PolyVectorField a = PolyVectorField::zero(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    // All monomials of total degree <= 2, about half of them switched on.
    for (unsigned p = 0; p <= 2; ++p) {
      for (unsigned q = 0; p + q <= 2; ++q) {
        if (dim == 1 && q > 0) continue;
        const Rational c = rng.next();
        if (c == 0 || (p + q == 0 && i == 0)) continue;
        Poly::Exponents e(dim, 0);
        e[0] = p;
        if (dim > 1) e[1] = q;
        a.components[i].add(e, c);
      }
    }
    if (a.components[i].total_degree() < 2) {
      Poly::Exponents e(dim, 0);
      e[i] = 2;
      a.components[i].add(e, 1);
    }
  }
  return a;
}

}  // namespace

std::vector<std::size_t> tree_counts(std::size_t n) {
  // a(m+1) = (1/m) sum_{k=1..m} (sum_{d | k} d a(d)) a(m-k+1).
  std::vector<Integer> a(n + 2, 0);
  if (n >= 1) a[1] = 1;
  for (std::size_t m = 1; m + 1 <= n; ++m) {
    Integer total = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      Integer s = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        if (k % d == 0) s += Integer(static_cast<unsigned long>(d)) * a[d];
      }
      total += s * a[m - k + 1];
    }
    a[m + 1] = total / Integer(static_cast<unsigned long>(m));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(a[i].get_ui());
  return out;
}

Report verify_trees(std::size_t max_degree) {
  Report r;
  const std::size_t reach = std::max<std::size_t>(max_degree, 8);
  timed(r, "tree counts", [&] {
    Outcome out;
    const auto expected = tree_counts(reach);
    for (std::size_t n = 1; n <= reach; ++n) {
      if (enumerate_trees(n).size() != expected[n - 1]) {
        out.fail(std::to_string(n) + " vertices: " + std::to_string(enumerate_trees(n).size()) + " trees, expected " +
                 std::to_string(expected[n - 1]));
      }
    }
    out.detail = out.passed ? "grades 1.." + std::to_string(reach) : out.detail;
    return out;
  });
  timed(r, "round trip", [&] {
    Outcome out;
    for (const auto& t : trees_up_to(max_degree + 1)) {
      if (Tree::parse(t.code()) != t) out.fail(t.code());
    }
    for (std::size_t n = 0; n <= max_degree; ++n) {
      for (const auto& f : enumerate_forests(n)) {
        if (parse_forest(f.to_string()) != f) out.fail(f.to_string());
      }
    }
    return out;
  });
  timed(r, "labelled counts", [&] {
    Outcome out;
    // Sum of n!/sigma is n^{n-1} labelled rooted trees; sum of CM is (n-1)!
    // increasing labellings.
    for (std::size_t n = 1; n <= max_degree + 1; ++n) {
      Rational labelled = 0, increasing = 0;
      for (const auto& t : enumerate_trees(n)) {
        labelled += Rational(factorial(n)) / Rational(symmetry(t));
        increasing += stats(Forest(t)).cm;
      }
      Integer power = 1;
      for (std::size_t i = 1; i < n; ++i) power *= static_cast<unsigned long>(n);
      if (labelled != Rational(power)) out.fail("n!/sigma sum at " + std::to_string(n));
      if (increasing != Rational(factorial(n - 1))) out.fail("CM sum at " + std::to_string(n));
    }
    return out;
  });
  return r;
}

Report verify_hopf(std::size_t max_degree) {
  Report r;
  const std::size_t d = max_degree;
  const std::array<Algebra, 4> algebras{Algebra::H, Algebra::HSigma, Algebra::HTilde, Algebra::CK};
  for (Algebra a : algebras) {
    const std::string label(name(a));
    timed(r, "coassociativity " + label, [&] {
      Outcome out;
      std::size_t n = 0;
      for (const auto& s : basis(a, d)) {
        const TensorSum once = coproduct(s, a);
        if (!(apply_coproduct_at(once, 0, a) == apply_coproduct_at(once, 1, a))) out.fail(s.to_string());
        ++n;
      }
      if (out.passed) out.detail = std::to_string(n) + " forests";
      return out;
    });
    timed(r, "counit " + label, [&] {
      Outcome out;
      for (const auto& s : basis(a, d)) {
        const TensorSum once = coproduct(s, a);
        const ForestSum expected(normalize(s, a));
        if (!(contract_counit(once, 0, a) == expected) || !(contract_counit(once, 1, a) == expected)) {
          out.fail(s.to_string());
        }
      }
      return out;
    });
  }
  for (Algebra a : {Algebra::H, Algebra::HSigma, Algebra::CK}) {
    const std::string label(name(a));
    timed(r, "antipode axiom " + label, [&] {
      Outcome out;
      for (const auto& s : basis(a, d)) {
        const ForestSum expected = ForestSum(unit(a), counit(s, a));
        if (!(antipode_convolution(s, a, true) == expected) || !(antipode_convolution(s, a, false) == expected)) {
          out.fail(s.to_string());
        }
      }
      return out;
    });
  }
  timed(r, "antipode methods agree", [&] {
    Outcome out;
    for (Algebra a : {Algebra::H, Algebra::HSigma}) {
      for (std::size_t e = 1; e <= d; ++e) {
        for (const auto& t : enumerate_trees(e, Grading::Edges)) {
          const ForestSum rec = antipode(Forest(t), a, AntipodeMethod::Recursive);
          if (!(rec == antipode(Forest(t), a, AntipodeMethod::RecursiveLeft)) ||
              !(rec == antipode(Forest(t), a, AntipodeMethod::ClosedForm))) {
            out.fail(std::string(name(a)) + " " + t.code());
          }
        }
      }
    }
    for (const auto& t : trees_up_to(d)) {
      if (!(antipode(Forest(t), Algebra::CK) == antipode(Forest(t), Algebra::CK, AntipodeMethod::RecursiveLeft))) {
        out.fail("CK " + t.code());
      }
    }
    return out;
  });
  timed(r, "sigma conjugation", [&] {
    Outcome out;
    for (std::size_t e = 1; e <= d; ++e) {
      for (const auto& t : enumerate_trees(e, Grading::Edges)) {
        const ForestSum conj = sigma_scale(antipode(sigma_scale(ForestSum(t), true), Algebra::H));
        if (!(antipode(Forest(t), Algebra::HSigma) == conj)) out.fail(t.code());
      }
    }
    return out;
  });
  timed(r, "corolla oracle", [&] {
    Outcome out;
    for (std::size_t n = 1; n <= d; ++n) {
      if (!(corolla_coproduct(n) == tree_coproduct(corolla(n), Algebra::H))) out.fail("C_" + std::to_string(n));
      if (!(corolla_coproduct(n, true) == tree_coproduct(corolla(n), Algebra::HSigma))) {
        out.fail("sigma C_" + std::to_string(n));
      }
      if (!(corolla_antipode(n) == antipode(Forest(corolla(n)), Algebra::H))) out.fail("S(C_" + std::to_string(n) + ")");
      if (!(corolla_antipode(n, true) == antipode(Forest(corolla(n)), Algebra::HSigma))) {
        out.fail("S_sigma(C_" + std::to_string(n) + ")");
      }
    }
    return out;
  });
  timed(r, "ladder oracle", [&] {
    Outcome out;
    for (std::size_t n = 1; n <= d; ++n) {
      if (!(ladder_coproduct(n) == tree_coproduct(ladder(n), Algebra::H))) out.fail("E_" + std::to_string(n));
    }
    return out;
  });
  timed(r, "floored oracle", [&] {
    Outcome out;
    std::size_t n = 0;
    for (std::size_t e = 1; e <= d; ++e) {
      for (const auto& t : enumerate_trees(e, Grading::Edges)) {
        if (!(floored_coproduct(t) == tree_coproduct(t, Algebra::H))) out.fail(t.code());
        ++n;
      }
    }
    if (out.passed) out.detail = std::to_string(n) + " trees";
    return out;
  });
  timed(r, "B+ cocycle", [&] {
    Outcome out;
    for (std::size_t n = 0; n < d + 1; ++n) {
      for (const auto& u : enumerate_forests(n)) {
        const Tree bu = b_plus(u);
        TensorSum expected(2);
        expected.add({Forest(bu), Forest::empty()}, 1);
        for (const auto sum = coproduct(u, Algebra::CK); const auto& [k, c] : sum.terms()) {
          expected.add({k[0], Forest(b_plus(k[1]))}, c);
        }
        if (!(tree_coproduct(bu, Algebra::CK) == expected)) out.fail(u.to_string());
      }
    }
    return out;
  });
  return r;
}

Report verify_chv(std::size_t max_degree) {
  Report r;
  const std::size_t d = max_degree;
  const std::size_t he = d - 1;  // edges reached by H-functionals acting up to d vertices
  Rng rng(20250101);
  for (const CoactionFlavor flavor : {CoactionFlavor::H, CoactionFlavor::HTilde}) {
    const auto start = Clock::now();
    Report comp = verify_coaction_compatibility(he, flavor);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (auto& c : comp.checks) c.seconds = seconds / static_cast<double>(comp.checks.size());
    r.append(comp);
  }

  const Functional eps = counit_functional(Algebra::CK, d);
  const Functional delta_bullet = delta_basis(Forest::bullet(), Algebra::CK, d);
  const Functional delta = named_character(NamedCharacter::Delta, d);

  timed(r, "action on the counit", [&] {
    Outcome out;
    const Functional alpha = random_generic(Algebra::H, he, rng);
    const Functional expected = scaled(eps, alpha(Forest::bullet()), Algebra::CK);
    compare(out, star_action(alpha, eps, Side::Left), expected, Algebra::CK, d, "alpha*eps");
    compare(out, star_action(alpha, eps, Side::Right), expected, Algebra::CK, d, "eps*alpha");
    return out;
  });
  timed(r, "action on delta_bullet", [&] {
    Outcome out;
    const Functional alpha = random_generic(Algebra::H, he, rng);
    // alpha transported to CK: its values on nonempty trees, zero elsewhere.
    const Functional expected = tabulate(Algebra::CK, d, [&](const Forest& s) -> Rational {
      return s.is_tree() ? alpha(s) : Rational(0);
    });
    compare(out, star_action(alpha, delta_bullet, Side::Left), expected, Algebra::CK, d, "alpha*delta_bullet");
    compare(out, star_action(alpha, delta_bullet, Side::Right), expected, Algebra::CK, d, "delta_bullet*alpha");
    return out;
  });
  timed(r, "Z_bullet acts trivially", [&] {
    Outcome out;
    const Functional z = counit_functional(Algebra::H, he);
    const Functional b = random_generic(Algebra::CK, d, rng);
    compare(out, star_action(z, b, Side::Left), b, Algebra::CK, d, "Z_bullet*b");
    compare(out, star_action(z, b, Side::Right), b, Algebra::CK, d, "b*Z_bullet");
    return out;
  });
  timed(r, "action distributes over convolution", [&] {
    Outcome out;
    const ConvolutionContext ck{Algebra::CK, d};
    for (int trial = 0; trial < 2; ++trial) {
      const Functional phi = random_character(Algebra::H, he, rng);
      const Functional b = random_generic(Algebra::CK, d, rng);
      const Functional c = random_generic(Algebra::CK, d, rng);
      const Functional lhs = star_action(phi, convolve(b, c, ck), Side::Left);
      const Functional rhs = convolve(star_action(phi, b, Side::Left), star_action(phi, c, Side::Left), ck);
      compare(out, lhs, rhs, Algebra::CK, d, "phi*(b*c)");
    }
    return out;
  });
  timed(r, "action commutes with inversion", [&] {
    Outcome out;
    const ConvolutionContext ck{Algebra::CK, d};
    const Functional phi = random_character(Algebra::H, he, rng);
    const Functional b = random_generic(Algebra::CK, d, rng, Rational(1));
    const Functional lhs = inverse_star(star_action(phi, b, Side::Left), ck);
    const Functional rhs = star_action(phi, inverse_star(b, ck), Side::Left);
    compare(out, lhs, rhs, Algebra::CK, d, "inverse");
    return out;
  });
  timed(r, "H characters to CK", [&] {
    Outcome out;
    const Functional phi = random_character(Algebra::H, he, rng);
    const Functional inf = correspond(phi, CorrespondenceMode::Infinitesimal, d);
    const Functional chr = correspond(phi, CorrespondenceMode::Character, d);
    if (!is_infinitesimal(inf, Algebra::CK)) out.fail("phi*delta_bullet is not infinitesimal");
    if (!is_character(chr, Algebra::CK)) out.fail("phi*delta is not a character");
    for (const auto& t : trees_up_to(d)) {
      const Rational expected = t.is_bullet() ? Rational(1) : phi(t);
      if (inf(t) != expected || chr(t) != expected) out.fail("values differ on " + t.code());
    }
    return out;
  });
  timed(r, "Htilde characters to CK", [&] {
    Outcome out;
    const Functional phi = random_character(Algebra::HTilde, d, rng, false);
    const Functional inf = correspond(phi, CorrespondenceMode::Infinitesimal, d);
    const Functional chr = correspond(phi, CorrespondenceMode::Character, d);
    if (!is_infinitesimal(inf, Algebra::CK)) out.fail("phi*delta_bullet is not infinitesimal");
    if (!is_character(chr, Algebra::CK)) out.fail("phi*delta is not a character");
    for (const auto& t : trees_up_to(d)) {
      if (inf(t) != phi(t) || chr(t) != phi(t)) out.fail("values differ on " + t.code());
    }
    return out;
  });
  timed(r, "exponential of delta_bullet", [&] {
    Outcome out;
    const ConvolutionContext ck{Algebra::CK, d};
    const Functional flow = exp_star(delta_bullet, ck);
    for (const auto& t : trees_up_to(d)) {
      if (flow(t) != Rational(1) / Rational(tree_factorial(t))) out.fail("exp(delta_bullet) on " + t.code());
    }
    const Functional e = named_character(NamedCharacter::E, he);
    compare(out, correspond(e, CorrespondenceMode::Character, d), flow, Algebra::CK, d, "E*delta");
    const Functional phi = random_character(Algebra::H, he, rng);
    const Functional lhs = exp_star(correspond(phi, CorrespondenceMode::Infinitesimal, d), ck);
    compare(out, lhs, star_action(phi, flow, Side::Left), Algebra::CK, d, "exp(phi*delta_bullet)");
    return out;
  });
  timed(r, "CK characters from H", [&] {
    Outcome out;
    const ConvolutionContext ck{Algebra::CK, d};
    const Functional b = random_character(Algebra::CK, d, rng);
    const Functional btilde = restrict_to_h(b, he);
    compare(out, correspond(btilde, CorrespondenceMode::Character, d), b, Algebra::CK, d, "b = btilde*delta");
    const Functional delta_inverse = precompose_antipode(delta, Algebra::CK);
    compare(out, inverse_star(b, ck), star_action(btilde, delta_inverse, Side::Left), Algebra::CK, d, "b^-1");
    return out;
  });
  timed(r, "biderivation", [&] {
    Outcome out;
    for (const CoactionFlavor flavor : {CoactionFlavor::H, CoactionFlavor::HTilde}) {
      const Algebra ha = flavor == CoactionFlavor::H ? Algebra::H : Algebra::HTilde;
      const Functional a = random_infinitesimal(ha, flavor == CoactionFlavor::H ? he : d, rng);
      if (!is_infinitesimal(a, ha)) out.fail("sampled functional is not infinitesimal");
      const auto ta = [&](const Forest& s) { return t_L(a, s); };
      for (const auto& x : basis(Algebra::CK, d)) {
        for (const auto& y : basis(Algebra::CK, d - x.vertices())) {
          const ForestSum lhs = ta(x * y);
          const ForestSum rhs = multiply(ta(x), ForestSum(y)) + multiply(ForestSum(x), ta(y));
          if (!(lhs == rhs)) out.fail("derivation on " + x.to_string() + ", " + y.to_string());
        }
        const TensorSum lhs = tensor_linear(ta(x), [](const Forest& s) { return coproduct(s, Algebra::CK); });
        TensorSum rhs(2);
        for (const auto sum = coproduct(x, Algebra::CK); const auto& [k, c] : sum.terms()) {
          TensorSum part = tensor(ta(k[0]), ForestSum(k[1]));
          part += tensor(ForestSum(k[0]), ta(k[1]));
          part *= c;
          rhs += part;
        }
        if (!(lhs == rhs)) out.fail("coderivation on " + x.to_string());
      }
    }
    return out;
  });
  timed(r, "automorphism", [&] {
    Outcome out;
    for (const CoactionFlavor flavor : {CoactionFlavor::H, CoactionFlavor::HTilde}) {
      const Algebra ha = flavor == CoactionFlavor::H ? Algebra::H : Algebra::HTilde;
      const Functional phi = random_character(ha, flavor == CoactionFlavor::H ? he : d, rng, false);
      const auto tp = [&](const Forest& s) { return t_L(phi, s); };
      for (const auto& x : basis(Algebra::CK, d)) {
        for (const auto& y : basis(Algebra::CK, d - x.vertices())) {
          if (!(tp(x * y) == multiply(tp(x), tp(y)))) out.fail("multiplicativity on " + x.to_string());
        }
        const TensorSum lhs = tensor_linear(tp(x), [](const Forest& s) { return coproduct(s, Algebra::CK); });
        TensorSum rhs(2);
        for (const auto sum = coproduct(x, Algebra::CK); const auto& [k, c] : sum.terms()) {
          TensorSum part = tensor(tp(k[0]), tp(k[1]));
          part *= c;
          rhs += part;
        }
        if (!(lhs == rhs)) out.fail("comultiplicativity on " + x.to_string());
      }
    }
    return out;
  });
  timed(r, "group law", [&] {
    Outcome out;
    for (const Algebra a : {Algebra::H, Algebra::CK}) {
      const std::size_t deg = a == Algebra::H ? he : d;
      const ConvolutionContext ctx{a, deg};
      const Functional phi = random_character(a, deg, rng, false);
      const Functional psi = random_character(a, deg, rng, false);
      const Functional psi_inv = precompose_antipode(psi, a);
      compare(out, inverse_star(psi, ctx), psi_inv, a, deg, std::string(name(a)) + " inverse");
      compare(out, convolve(convolve(phi, psi, ctx), psi_inv, ctx), phi, a, deg, std::string(name(a)) + " (phi psi) psi^-1");
      const Functional f = random_infinitesimal(a, deg, rng);
      const Functional g = exp_star(f, ctx);
      if (!is_character(g, a)) out.fail(std::string(name(a)) + " exp of an infinitesimal character");
      compare(out, log_star(g, ctx), f, a, deg, std::string(name(a)) + " log exp");
    }
    return out;
  });
  timed(r, "omega = L*delta_bullet = log delta", [&] {
    Outcome out;
    const Functional w = omega(d + 1);
    out.detail = std::to_string(basis(Algebra::CK, d + 1).size()) + " forests up to " + std::to_string(d + 1) +
                 " vertices";
    if (w(Forest(Tree())) != 1) out.fail("omega(bullet) != 1");
    return out;
  });
  timed(r, "Bernoulli", [&] {
    Outcome out;
    const std::size_t n_max = 2 * d + 2;
    const auto b = bernoulli_numbers(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const Tree c = corolla(n);
      if (named_value(NamedCharacter::L, c) != b[n]) out.fail("L(C_" + std::to_string(n) + ")");
      if (named_value(NamedCharacter::LSigma, c) != b[n] / Rational(factorial(n))) {
        out.fail("L_sigma(C_" + std::to_string(n) + ")");
      }
      if (named_value(NamedCharacter::ESigma, c) != Rational(1) / Rational(factorial(n + 1)) ||
          named_value(NamedCharacter::ESigma, ladder(n)) != Rational(1) / Rational(factorial(n + 1))) {
        out.fail("E_sigma at " + std::to_string(n));
      }
    }
    if (out.passed) out.detail = "n <= " + std::to_string(n_max);
    return out;
  });
  return r;
}

Report verify_prelie(std::size_t max_degree) {
  Report r;
  const std::size_t budget = max_degree + 1;
  const auto edges = [](const Tree& t) { return t.edges(); };
  const auto vertices = [](const Tree& t) { return t.vertices(); };
  std::vector<Tree> with_edges;
  for (const auto& t : trees_up_to(budget)) {
    if (t.edges() >= 1 && t.edges() <= budget) with_edges.push_back(t);
  }
  const auto small = trees_up_to(budget);
  const TreeProduct insertion = cached([](const Tree& t, const Tree& u) { return insert(t, u, false); });
  const TreeProduct insertion_sigma = cached([](const Tree& t, const Tree& u) { return insert(t, u, true); });
  const TreeProduct grafting = cached([](const Tree& t, const Tree& u) { return graft(t, u, false); });
  const TreeProduct grafting_sigma = cached([](const Tree& t, const Tree& u) { return graft(t, u, true); });
  const std::array<std::tuple<std::string, const TreeProduct*, bool>, 4> products{{
      {"insertion", &insertion, true},
      {"insertion sigma", &insertion_sigma, true},
      {"grafting ->", &grafting, false},
      {"grafting normalized", &grafting_sigma, false},
  }};
  for (const auto& [label, product, by_edges] : products) {
    timed(r, "pre-Lie " + label, [&] {
      Outcome out;
      std::size_t count = 0;
      if (by_edges) {
        prelie_triples(out, *product, with_edges, budget, edges, count);
      } else {
        prelie_triples(out, *product, small, budget, vertices, count);
      }
      if (out.passed) out.detail = std::to_string(count) + " triples";
      return out;
    });
  }
  timed(r, "grafting by cuts", [&] {
    Outcome out;
    for (const auto& [t, u] : tree_pairs(budget, budget)) {
      if (!(graft(t, u, false) == graft_by_cuts(t, u))) out.fail(t.code() + " -> " + u.code());
    }
    return out;
  });
  timed(r, "bracket Z", [&] {
    Outcome out;
    for (const bool normalized : {false, true}) {
      for (const auto& t : with_edges) {
        for (const auto& u : with_edges) {
          const std::size_t deg = t.edges() + u.edges();
          if (deg > max_degree) continue;
          const ConvolutionContext ctx{Algebra::H, deg};
          // Z~_t = sigma(t) Z_t pairs with the normalized insertion.
          const auto z = [&](const Tree& x) { return dual_of(ForestSum(x), Algebra::H, deg, normalized); };
          const Functional lhs = difference(convolve(z(t), z(u), ctx), convolve(z(u), z(t), ctx), Algebra::H);
          const ForestSum br = insert(t, u, normalized) - insert(u, t, normalized);
          compare(out, lhs, dual_of(br, Algebra::H, deg, normalized), Algebra::H, deg,
                  (normalized ? "sigma " : "") + t.code() + "," + u.code());
        }
      }
    }
    return out;
  });
  timed(r, "bracket delta", [&] {
    Outcome out;
    for (const bool normalized : {false, true}) {
      for (const auto& [t, u] : tree_pairs(max_degree, max_degree)) {
        const std::size_t deg = t.vertices() + u.vertices();
        const ConvolutionContext ctx{Algebra::CK, deg};
        const auto dl = [&](const Tree& x) { return dual_of(ForestSum(x), Algebra::CK, deg, normalized); };
        const Functional lhs = difference(convolve(dl(t), dl(u), ctx), convolve(dl(u), dl(t), ctx), Algebra::CK);
        const ForestSum br = graft(t, u, normalized) - graft(u, t, normalized);
        compare(out, lhs, dual_of(br, Algebra::CK, deg, normalized), Algebra::CK, deg,
                (normalized ? "sigma " : "") + t.code() + "," + u.code());
      }
    }
    return out;
  });
  timed(r, "Magnus fixed point", [&] {
    Outcome out;
    const ForestSum m = magnus_omega(max_degree);
    const Functional w = omega(max_degree);
    for (const auto& t : trees_up_to(max_degree)) {
      const Rational expected = w(t) / Rational(symmetry(t));
      if (m.coefficient(Forest(t)) != expected) {
        out.fail(t.code() + ": " + to_string(m.coefficient(Forest(t))) + " vs " + to_string(expected));
      }
    }
    if (m.size() > trees_up_to(max_degree).size()) out.fail("terms outside the tree range");
    return out;
  });
  return r;
}

Report verify_qshuffle(std::size_t max_degree) {
  Report r;
  const std::size_t big = max_degree + 1;
  timed(r, "x^2 diamond x^2", [&] {
    Outcome out;
    const WordPoly p = diamond(WordPoly::monomial(2), WordPoly::monomial(2));
    WordPoly expected = WordPoly::monomial(4, 6);
    expected += WordPoly::monomial(3, 6);
    expected += WordPoly::monomial(2, 1);
    if (!(p == expected)) out.fail(p.to_string());
    return out;
  });
  timed(r, "qsh closed formula", [&] {
    Outcome out;
    for (std::size_t k = 0; k <= 6; ++k) {
      for (std::size_t l = 0; l <= 6; ++l) {
        for (std::size_t rr = 0; rr <= std::min(k, l); ++rr) {
          if (qsh(k, l, rr) != qsh_coefficient({k, l}, rr)) {
            out.fail("qsh(" + std::to_string(k) + "," + std::to_string(l) + ";" + std::to_string(rr) + ")");
          }
        }
      }
    }
    return out;
  });
  timed(r, "omega_s triple oracle", [&] {
    Outcome out;
    std::size_t n = 0;
    for (const auto& t : trees_up_to(big)) {
      const auto a = omega_s(t);
      const auto b = omega_s_by_partitions(t);
      std::map<std::size_t, Integer> c;
      for (std::size_t s = 0; s < t.vertices(); ++s) {
        const Integer v = c_s(t, s);
        if (v != 0) c.emplace(t.vertices() - s, v);
      }
      if (a != b || a != c) out.fail(t.code());
      ++n;
    }
    if (out.passed) out.detail = std::to_string(n) + " trees";
    return out;
  });
  timed(r, "omega via Lambda", [&] {
    Outcome out;
    const Functional w = omega(big);
    for (const auto& t : trees_up_to(big)) {
      if (omega_via_lambda(t) != w(t)) out.fail(t.code());
    }
    return out;
  });
  timed(r, "omega on bowtie", [&] {
    Outcome out;
    const Functional w = omega(big);
    for (const auto& [a, b] : tree_pairs(big, big)) {
      if (w(bowtie(a, b)) != 0) out.fail(a.code() + " bowtie " + b.code());
    }
    for (const auto& [a, b] : tree_pairs(4, 8)) {
      Rational total = 0;
      for (const auto sum = bowtie(a, b); const auto& [f, c] : sum.terms()) total += c * omega_via_lambda(f.tree());
      if (total != 0) out.fail("via Lambda " + a.code() + " bowtie " + b.code());
    }
    return out;
  });
  timed(r, "Lambda morphism", [&] {
    Outcome out;
    for (const auto& [a, b] : tree_pairs(4, 8)) {
      WordPoly lhs;
      for (const auto sum = bowtie(a, b); const auto& [f, c] : sum.terms()) {
        WordPoly part = lambda(f);
        part *= c;
        lhs += part;
      }
      const WordPoly rhs = diamond(lambda(Forest(a)), lambda(Forest(b)));
      if (!(lhs == rhs)) out.fail(a.code() + " bowtie " + b.code());
      if (!((lhs - lambda(Forest(a) * Forest(b))).is_zero())) out.fail("kernel " + a.code() + ", " + b.code());
    }
    return out;
  });
  timed(r, "Lambda cocycle", [&] {
    Outcome out;
    for (std::size_t n = 0; n <= max_degree; ++n) {
      for (const auto& u : enumerate_forests(n)) {
        if (!(lambda(Forest(b_plus(u))) == lambda(u).times_x())) out.fail(u.to_string());
      }
    }
    return out;
  });
  timed(r, "delta = delta~ o Lambda", [&] {
    Outcome out;
    const Functional delta = named_character(NamedCharacter::Delta, max_degree);
    for (const auto& s : basis(Algebra::CK, max_degree)) {
      if (delta(s) != delta_tilde(lambda(s))) out.fail(s.to_string());
    }
    return out;
  });
  timed(r, "C_0 = |t|!/t!", [&] {
    Outcome out;
    for (const auto& t : trees_up_to(big)) {
      if (Rational(c_s(t, 0)) != Rational(factorial(t.vertices())) / Rational(tree_factorial(t))) out.fail(t.code());
    }
    return out;
  });
  timed(r, "generalized corolla", [&] {
    Outcome out;
    // B+ of ladders with k_1, ..., k_n vertices.
    std::vector<std::vector<std::size_t>> shapes;
    std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> grow =
        [&](std::vector<std::size_t>& ks, std::size_t left, std::size_t min) {
          if (!ks.empty()) shapes.push_back(ks);
          for (std::size_t k = min; k <= left; ++k) {
            ks.push_back(k);
            grow(ks, left - k, k);
            ks.pop_back();
          }
        };
    std::vector<std::size_t> ks;
    grow(ks, big - 1, 1);
    for (const auto& shape : shapes) {
      std::vector<Tree> children;
      std::size_t total = 0;
      for (std::size_t k : shape) {
        children.push_back(ladder(k - 1));
        total += k;
      }
      const Tree t = Tree::graft(children);
      for (std::size_t s = 0; s <= total; ++s) {
        if (c_s(t, s) != qsh_coefficient(shape, s)) out.fail(t.code() + " s=" + std::to_string(s));
      }
    }
    if (out.passed) out.detail = std::to_string(shapes.size()) + " shapes";
    return out;
  });
  return r;
}

Report verify_bseries(std::size_t max_degree) {
  Report r;
  Rng rng(4242);
  const std::size_t n_max = max_degree;
  auto character = [&](bool bullet_one) {
    Functional f(Grading::Vertices, Kind::Character, n_max);
    for (const auto& t : trees_up_to(n_max)) f.set(t, (bullet_one && t.is_bullet()) ? Rational(1) : rng.next());
    return f;
  };
  auto infinitesimal = [&] {
    Functional f(Grading::Vertices, Kind::Infinitesimal, n_max);
    for (const auto& t : trees_up_to(n_max)) f.set(t, rng.next());
    return f;
  };
  for (std::size_t dim : {1u, 2u}) {
    const PolyVectorField a = random_field(dim, rng);
    const Functional alpha = character(true);
    const Functional beta = infinitesimal();
    const Functional gamma = character(false);
    const Functional eta = character(false);
    for (std::size_t n = 1; n <= n_max; ++n) {
      r.append(verify_substitution(a, alpha, beta, n));
      r.append(verify_composition(a, gamma, eta, n));
    }
  }
  r.append(verify_exact_flow(n_max + 1));
  timed(r, "two Euler steps", [&] {
    Outcome out;
    const PolyVectorField a = random_field(2, rng);
    const Functional delta = named_character(NamedCharacter::Delta, 2);
    const BSeriesMap euler = bseries_eval(delta, a, 2);
    const BSeriesMap twice = bseries_eval(compose_coeffs(delta, delta), a, 2);
    if (!(euler.then(euler) == twice)) out.fail("Euler twice differs from the composed series");
    // y + h a(y) + h a(y + h a(y)) to second order: y + 2h a + h^2 a'a.
    const PolyVectorField aa = directional_derivative(a, a);
    for (std::size_t i = 0; i < 2; ++i) {
      if (twice.coefficients[1][i] != a.components[i] * Rational(2) || twice.coefficients[2][i] != aa.components[i]) {
        out.fail("hand expansion differs in component " + std::to_string(i + 1));
      }
    }
    return out;
  });
  timed(r, "vector field pre-Lie", [&] {
    Outcome out;
    for (std::size_t dim : {1u, 2u}) {
      const PolyVectorField x = random_field(dim, rng), y = random_field(dim, rng), z = random_field(dim, rng);
      const auto tr = [](const PolyVectorField& p, const PolyVectorField& q) { return directional_derivative(p, q); };
      const PolyVectorField defect = tr(tr(x, y), z) + Rational(-1) * tr(x, tr(y, z)) +
                                     Rational(-1) * tr(tr(y, x), z) + tr(y, tr(x, z));
      if (!(defect == PolyVectorField::zero(dim))) out.fail("d=" + std::to_string(dim));
    }
    return out;
  });
  r.append(verify_prelie_morphism(random_field(2, rng), n_max));
  timed(r, "composition associative", [&] {
    Outcome out;
    const Functional a = character(false), b = character(false), c = character(false);
    const Functional lhs = compose_coeffs(compose_coeffs(a, b), c);
    const Functional rhs = compose_coeffs(a, compose_coeffs(b, c));
    compare(out, lhs, rhs, Algebra::CK, n_max, "(ab)c");
    return out;
  });
  timed(r, "substitution distributes", [&] {
    Outcome out;
    const Functional alpha = character(true);
    const Functional b = character(false), c = character(false);
    const Functional lhs = substitute_coeffs(alpha, compose_coeffs(b, c));
    const Functional rhs = compose_coeffs(substitute_coeffs(alpha, b), substitute_coeffs(alpha, c));
    compare(out, lhs, rhs, Algebra::CK, n_max, "alpha*(b c)");
    compare(out, lhs, star_action(alpha, compose_coeffs(b, c), Side::Left), Algebra::CK, n_max, "left action");
    return out;
  });
  return r;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"trees", "hopf", "chv", "prelie", "qshuffle", "bseries", "all"};
  return names;
}

Report verify_all(std::size_t max_degree) {
  Report r;
  r.append(verify_trees(max_degree));
  r.append(verify_hopf(max_degree));
  r.append(verify_chv(max_degree));
  r.append(verify_prelie(max_degree));
  r.append(verify_qshuffle(max_degree));
  r.append(verify_bseries(max_degree));
  return r;
}

Report run_suite(std::string_view name, std::size_t max_degree) {
  if (max_degree < 2) throw DomainError("verification needs max degree >= 2");
  if (name == "trees") return verify_trees(max_degree);
  if (name == "hopf") return verify_hopf(max_degree);
  if (name == "chv") return verify_chv(max_degree);
  if (name == "prelie") return verify_prelie(max_degree);
  if (name == "qshuffle") return verify_qshuffle(max_degree);
  if (name == "bseries") return verify_bseries(max_degree);
  if (name == "all") return verify_all(max_degree);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace arbor
