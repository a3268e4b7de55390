#include "arbor/bseries.hpp"

#include <chrono>
#include <map>

#include "arbor/characters.hpp"
#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "arbor/prelie.hpp"

namespace arbor {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_dim(const PolyVectorField& a) {
  if (a.dim == 0 || a.components.size() != a.dim) throw DomainError("vector field needs one component per dimension");
  for (const auto& p : a.components) {
    if (p.nvars() != a.dim) throw DomainError("vector field components must be polynomials in d variables");
  }
}

// Adds sum over j, p of ∂_{j_m..j_n} d · prod · prod_{l>=m} G_l[p_l]_{j_l} into out[power + sum p].
void contract(const Poly& d, const Poly& prod, const std::vector<const HSeriesField*>& kids, std::size_t m,
              std::size_t power, std::size_t component, HSeriesField& out) {
  if (d.is_zero() || prod.is_zero()) return;
  if (m == kids.size()) {
    out.coefficients[power].components[component] += Poly::multiply(d, prod);
    return;
  }
  const HSeriesField& g = *kids[m];
  for (std::size_t j = 0; j < out.dim; ++j) {
    const Poly dj = d.derivative(j);
    if (dj.is_zero()) continue;
    for (std::size_t p = 0; power + p <= out.order && p < g.coefficients.size(); ++p) {
      const Poly& gj = g.coefficients[p].components[j];
      if (gj.is_zero()) continue;
      contract(dj, Poly::multiply(prod, gj), kids, m + 1, power + p, component, out);
    }
  }
}

const HSeriesField& differential_cached(const Tree& t, const HSeriesField& a, std::map<Tree, HSeriesField>& cache) {
  if (auto it = cache.find(t); it != cache.end()) return it->second;
  const auto children = t.children();
  std::vector<const HSeriesField*> kids;
  for (const auto& c : children) kids.push_back(&differential_cached(c, a, cache));
  HSeriesField out = HSeriesField::zero(a.dim, a.order);
  const Poly one = Poly::constant(a.dim, 1);
  for (std::size_t k = 0; k <= a.order; ++k) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      contract(a.coefficients[k].components[i], one, kids, 0, k, i, out);
    }
  }
  return cache.emplace(t, std::move(out)).first->second;
}

Poly drop_last_variable(const Poly& p) {
  Poly out(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) out.add(Poly::Exponents(e.begin(), e.end() - 1), c);
  return out;
}

Poly append_variable(const Poly& p, unsigned power) {
  Poly out(p.nvars() + 1);
  for (const auto& [e, c] : p.terms()) {
    Poly::Exponents f = e;
    f.push_back(power);
    out.add(f, c);
  }
  return out;
}

std::string first_difference(const BSeriesMap& x, const BSeriesMap& y) {
  const auto names = coordinate_names(x.dim);
  for (std::size_t k = 0; k <= x.order; ++k) {
    for (std::size_t i = 0; i < x.dim; ++i) {
      if (x.coefficients[k][i] != y.coefficients[k][i]) {
        return "h^" + std::to_string(k) + " component " + std::to_string(i + 1) + ": " +
               x.coefficients[k][i].to_string(names) + " vs " + y.coefficients[k][i].to_string(names);
      }
    }
  }
  return {};
}

void require_vertex_graded(const Functional& f, std::size_t order, const char* what) {
  if (f.grading() != Grading::Vertices) throw DomainError(std::string(what) + " must be vertex-graded");
  if (f.max_degree() < order) {
    throw DomainError(std::string(what) + " is defined up to " + std::to_string(f.max_degree()) +
                      " vertices; order " + std::to_string(order) + " needs more");
  }
}

}  // namespace

PolyVectorField PolyVectorField::zero(std::size_t dim) {
  return PolyVectorField{dim, std::vector<Poly>(dim, Poly(dim))};
}

std::vector<std::string> coordinate_names(std::size_t dim) {
  if (dim == 1) return {"y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

PolyVectorField parse_field(std::size_t dim, const std::vector<std::string>& components) {
  if (dim == 0) throw DomainError("dimension must be positive");
  if (components.size() != dim) {
    throw DomainError("expected " + std::to_string(dim) + " field components, got " +
                      std::to_string(components.size()));
  }
  PolyVectorField a = PolyVectorField::zero(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (dim == 1) {
      try {
        a.components[i] = parse_poly(components[i], {"y"});
      } catch (const ParseError&) {
        a.components[i] = parse_poly(components[i], {"y1"});
      }
    } else {
      a.components[i] = parse_poly(components[i], coordinate_names(dim));
    }
  }
  return a;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.dim != b.dim) throw DomainError("vector fields have different dimensions");
  PolyVectorField out = a;
  for (std::size_t i = 0; i < a.dim; ++i) out.components[i] += b.components[i];
  return out;
}

PolyVectorField operator*(const Rational& c, const PolyVectorField& a) {
  PolyVectorField out = a;
  for (auto& p : out.components) p *= c;
  return out;
}

PolyVectorField directional_derivative(const PolyVectorField& a, const PolyVectorField& b) {
  require_dim(a);
  require_dim(b);
  if (a.dim != b.dim) throw DomainError("vector fields have different dimensions");
  PolyVectorField out = PolyVectorField::zero(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) out.components[i] += a.components[j] * b.components[i].derivative(j);
  }
  return out;
}

HSeriesField HSeriesField::zero(std::size_t dim, std::size_t order) {
  return HSeriesField{dim, order, std::vector<PolyVectorField>(order + 1, PolyVectorField::zero(dim))};
}

HSeriesField HSeriesField::constant(const PolyVectorField& a, std::size_t order) {
  HSeriesField out = zero(a.dim, order);
  out.coefficients[0] = a;
  return out;
}

PolyVectorField elementary_differential(const Tree& t, const PolyVectorField& a) {
  require_dim(a);
  return elementary_differential(t, HSeriesField::constant(a, 0)).coefficients[0];
}

HSeriesField elementary_differential(const Tree& t, const HSeriesField& a) {
  if (a.coefficients.size() != a.order + 1) throw DomainError("h-series needs order + 1 coefficients");
  for (const auto& f : a.coefficients) {
    if (f.dim != a.dim) throw DomainError("h-series coefficients have mismatched dimensions");
    require_dim(f);
  }
  std::map<Tree, HSeriesField> cache;
  return differential_cached(t, a, cache);
}

PolyVectorField elementary_differential(const ForestSum& x, const PolyVectorField& a) {
  require_dim(a);
  const HSeriesField field = HSeriesField::constant(a, 0);
  std::map<Tree, HSeriesField> cache;
  PolyVectorField out = PolyVectorField::zero(a.dim);
  for (const auto& [f, c] : x.terms()) {
    if (!f.is_tree()) throw DomainError("elementary differentials are defined on trees");
    out = out + c * differential_cached(f.tree(), field, cache).coefficients[0];
  }
  return out;
}

BSeriesMap BSeriesMap::zero(std::size_t dim, std::size_t order) {
  return BSeriesMap{dim, order, std::vector<std::vector<Poly>>(order + 1, std::vector<Poly>(dim, Poly(dim)))};
}

Poly BSeriesMap::component(std::size_t i) const {
  Poly out(dim + 1);
  for (std::size_t k = 0; k <= order; ++k) out += append_variable(coefficients[k][i], static_cast<unsigned>(k));
  return out;
}

BSeriesMap BSeriesMap::then(const BSeriesMap& other) const {
  if (other.dim != dim) throw DomainError("maps have different dimensions");
  const std::size_t n = std::min(order, other.order);
  std::vector<Poly> values;
  for (std::size_t j = 0; j < dim; ++j) values.push_back(component(j).truncated(dim, static_cast<unsigned>(n)));
  values.push_back(Poly::variable(dim + 1, dim));
  const auto cap = std::make_pair(dim, static_cast<unsigned>(n));
  BSeriesMap out = zero(dim, n);
  for (std::size_t i = 0; i < dim; ++i) {
    const Poly composed = other.component(i).truncated(dim, static_cast<unsigned>(n)).substitute(values, cap);
    for (std::size_t k = 0; k <= n; ++k) {
      out.coefficients[k][i] = drop_last_variable(composed.coefficient_of(dim, static_cast<unsigned>(k)));
    }
  }
  return out;
}

std::string BSeriesMap::to_string() const {
  const auto names = coordinate_names(dim);
  std::string out;
  for (std::size_t k = 0; k <= order; ++k) {
    out += "h^" + std::to_string(k) + ":";
    for (std::size_t i = 0; i < dim; ++i) out += (i == 0 ? " " : ", ") + coefficients[k][i].to_string(names);
    out += "\n";
  }
  return out;
}

BSeriesMap bseries_eval(const Functional& alpha, const PolyVectorField& a, std::size_t order) {
  require_dim(a);
  require_vertex_graded(alpha, order, "B-series coefficients");
  BSeriesMap out = BSeriesMap::zero(a.dim, order);
  const Rational empty = alpha(Forest());
  for (std::size_t i = 0; i < a.dim; ++i) out.coefficients[0][i] = Poly::variable(a.dim, i) * empty;
  const HSeriesField field = HSeriesField::constant(a, 0);
  std::map<Tree, HSeriesField> cache;
  for (std::size_t v = 1; v <= order; ++v) {
    for (const auto& t : enumerate_trees(v)) {
      const Rational c = alpha(t) / Rational(symmetry(t));
      if (c == 0) continue;
      const auto& f = differential_cached(t, field, cache).coefficients[0];
      for (std::size_t i = 0; i < a.dim; ++i) out.coefficients[v][i] += f.components[i] * c;
    }
  }
  return out;
}

Functional substitute_coeffs(const Functional& alpha, const Functional& beta, bool allow_general_bullet) {
  if (alpha.grading() != Grading::Vertices || beta.grading() != Grading::Vertices) {
    throw DomainError("substitution needs vertex-graded coefficients");
  }
  if (alpha.kind() != Kind::Character) throw DomainError("substitution needs a character as its first argument");
  if (!allow_general_bullet && alpha(Forest::bullet()) != 1) {
    throw DomainError("substitution expects alpha(•) = 1; pass the general-bullet flag to override");
  }
  const std::size_t d = std::min(alpha.max_degree(), beta.max_degree());
  Functional out(Grading::Vertices, beta.kind() == Kind::Character ? Kind::Character : Kind::Infinitesimal, d);
  for (std::size_t v = 1; v <= d; ++v) {
    for (const auto& t : enumerate_trees(v)) {
      Rational total = 0;
      for (const auto& [k, c] : tree_coproduct(t, Algebra::HTilde).terms()) total += c * alpha(k[0]) * beta(k[1]);
      out.set(t, total);
    }
  }
  return out;
}

Functional compose_coeffs(const Functional& alpha, const Functional& beta) {
  if (alpha.grading() != Grading::Vertices || beta.grading() != Grading::Vertices) {
    throw DomainError("composition needs vertex-graded coefficients");
  }
  return convolve(alpha, beta, {Algebra::CK, std::min(alpha.max_degree(), beta.max_degree())});
}

HSeriesField modified_field(const Functional& alpha, const PolyVectorField& a, std::size_t order) {
  require_dim(a);
  if (order == 0) throw DomainError("modified field needs order >= 1");
  require_vertex_graded(alpha, order, "substituted coefficients");
  HSeriesField out = HSeriesField::zero(a.dim, order - 1);
  const HSeriesField field = HSeriesField::constant(a, 0);
  std::map<Tree, HSeriesField> cache;
  for (std::size_t v = 1; v <= order; ++v) {
    for (const auto& t : enumerate_trees(v)) {
      const Rational c = alpha(t) / Rational(symmetry(t));
      if (c == 0) continue;
      out.coefficients[v - 1] = out.coefficients[v - 1] + c * differential_cached(t, field, cache).coefficients[0];
    }
  }
  return out;
}

Report verify_substitution(const PolyVectorField& a, const Functional& alpha, const Functional& beta,
                           std::size_t order, bool allow_general_bullet) {
  const auto start = Clock::now();
  require_vertex_graded(beta, order, "outer coefficients");
  const HSeriesField tilde = modified_field(alpha, a, order);
  BSeriesMap lhs = BSeriesMap::zero(a.dim, order);
  const Rational empty = beta(Forest());
  for (std::size_t i = 0; i < a.dim; ++i) lhs.coefficients[0][i] = Poly::variable(a.dim, i) * empty;
  std::map<Tree, HSeriesField> cache;
  for (std::size_t v = 1; v <= order; ++v) {
    for (const auto& t : enumerate_trees(v)) {
      const Rational c = beta(t) / Rational(symmetry(t));
      if (c == 0) continue;
      const HSeriesField& f = differential_cached(t, tilde, cache);
      for (std::size_t k = 0; v + k <= order; ++k) {
        for (std::size_t i = 0; i < a.dim; ++i) lhs.coefficients[v + k][i] += f.coefficients[k].components[i] * c;
      }
    }
  }
  const BSeriesMap rhs = bseries_eval(substitute_coeffs(alpha, beta, allow_general_bullet), a, order);
  Report r;
  const std::string name = "substitution d=" + std::to_string(a.dim) + " N=" + std::to_string(order);
  r.add(name, lhs == rhs, lhs == rhs ? std::string() : first_difference(lhs, rhs), seconds_since(start));
  return r;
}

Report verify_composition(const PolyVectorField& a, const Functional& alpha, const Functional& beta,
                          std::size_t order) {
  const auto start = Clock::now();
  const BSeriesMap first = bseries_eval(alpha, a, order);
  const BSeriesMap second = bseries_eval(beta, a, order);
  const BSeriesMap lhs = first.then(second);
  const BSeriesMap rhs = bseries_eval(compose_coeffs(alpha, beta), a, order);
  Report r;
  const std::string name = "composition d=" + std::to_string(a.dim) + " N=" + std::to_string(order);
  r.add(name, lhs == rhs, lhs == rhs ? std::string() : first_difference(lhs, rhs), seconds_since(start));
  return r;
}

Report verify_exact_flow(std::size_t order) {
  const auto start = Clock::now();
  const PolyVectorField a = parse_field(1, {"y^2"});
  Functional alpha(Grading::Vertices, Kind::Character, order);
  for (std::size_t v = 1; v <= order; ++v) {
    for (const auto& t : enumerate_trees(v)) alpha.set(t, Rational(1) / Rational(tree_factorial(t)));
  }
  const BSeriesMap m = bseries_eval(alpha, a, order);
  std::string detail;
  for (std::size_t n = 0; n <= order && detail.empty(); ++n) {
    Poly expected(1);
    expected.add({static_cast<unsigned>(n + 1)}, 1);
    if (m.coefficients[n][0] != expected) {
      detail = "h^" + std::to_string(n) + ": " + m.coefficients[n][0].to_string({"y"});
    }
  }
  Report r;
  r.add("exact flow y^2 N=" + std::to_string(order), detail.empty(), detail, seconds_since(start));
  return r;
}

Report verify_prelie_morphism(const PolyVectorField& a, std::size_t max_vertices) {
  const auto start = Clock::now();
  require_dim(a);
  std::size_t pairs = 0;
  std::string detail;
  const auto trees = trees_up_to(max_vertices);
  for (const auto& t : trees) {
    for (const auto& u : trees) {
      if (t.vertices() + u.vertices() > max_vertices) continue;
      ++pairs;
      const PolyVectorField lhs = elementary_differential(graft(t, u, true), a);
      const PolyVectorField rhs =
          directional_derivative(elementary_differential(t, a), elementary_differential(u, a));
      if (lhs != rhs && detail.empty()) detail = "fails for " + t.code() + " onto " + u.code();
    }
  }
  Report r;
  r.add("F_a pre-Lie morphism", detail.empty(),
        detail.empty() ? std::to_string(pairs) + " pairs" : detail, seconds_since(start));
  return r;
}

}  // namespace arbor
