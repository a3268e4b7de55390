#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arbor/characters.hpp"
#include "arbor/cli.hpp"
#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "arbor/prelie.hpp"
#include "arbor/qshuffle.hpp"
#include "arbor/verify.hpp"

namespace py = pybind11;
using namespace arbor;

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;

Terms terms_of(const ForestSum& x) {
  Terms out;
  for (const auto& [f, c] : x.terms()) out.emplace_back(f.to_string(), to_string(c));
  return out;
}

Forest forest_in(const std::string& text, Algebra a) { return normalize(parse_forest(text), a); }

py::dict report_dict(const Report& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    d["seconds"] = c.seconds;
    checks.append(d);
  }
  py::dict out;
  out["ok"] = r.ok();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_arbor, m) {
  m.doc() = "Rooted-tree Hopf algebras with exact rational arithmetic";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InternalMismatch>(m, "InternalMismatch", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& text) { return parse_forest(text).to_string(); }, py::arg("forest"));

  m.def(
      "enumerate_trees",
      [](std::size_t n, bool edges) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_trees(n, edges ? Grading::Edges : Grading::Vertices)) out.push_back(t.code());
        return out;
      },
      py::arg("n"), py::arg("edges") = false);

  m.def(
      "tree_stats",
      [](const std::string& text) {
        const TreeStats s = stats(parse_forest(text));
        py::dict d;
        d["vertices"] = s.vertices;
        d["edges"] = s.edges;
        d["sigma"] = to_string(s.sigma);
        d["factorial"] = to_string(s.factorial);
        d["cm"] = to_string(s.cm);
        return d;
      },
      py::arg("forest"));

  m.def(
      "coproduct",
      [](const std::string& text, const std::string& variant) {
        const Algebra a = parse_algebra(variant);
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto d = coproduct(forest_in(text, a), a); const auto& [k, c] : d.terms()) {
          out.emplace_back(k[0].to_string(), k[1].to_string(), to_string(c));
        }
        return out;
      },
      py::arg("forest"), py::arg("variant") = "H");

  m.def(
      "antipode",
      [](const std::string& text, const std::string& variant, const std::string& method) {
        const Algebra a = parse_algebra(variant);
        AntipodeMethod am = AntipodeMethod::Recursive;
        if (method == "recursive_left") {
          am = AntipodeMethod::RecursiveLeft;
        } else if (method == "closed_form") {
          am = AntipodeMethod::ClosedForm;
        } else if (method != "recursive") {
          throw DomainError("unknown method " + method);
        }
        return terms_of(antipode(forest_in(text, a), a, am));
      },
      py::arg("forest"), py::arg("variant") = "H", py::arg("method") = "recursive");

  m.def(
      "character_values",
      [](const std::string& name, std::size_t max_vertices) {
        const NamedCharacter c = parse_named_character(name);
        const bool on_h = edge_graded(home_algebra(c));
        if (on_h && max_vertices == 0) throw DomainError("max_vertices must be at least 1");
        const Functional f = named_character(c, on_h ? max_vertices - 1 : max_vertices);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : trees_up_to(max_vertices)) out.emplace_back(t.code(), to_string(f(t)));
        return out;
      },
      py::arg("name"), py::arg("max_vertices"));

  m.def(
      "omega",
      [](std::size_t max_vertices) {
        const Functional w = omega(max_vertices);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : trees_up_to(max_vertices)) out.emplace_back(t.code(), to_string(w(t)));
        return out;
      },
      py::arg("max_vertices"));

  m.def(
      "insert",
      [](const std::string& t, const std::string& u, bool normalized) {
        return terms_of(insert(Tree::parse(t), Tree::parse(u), normalized));
      },
      py::arg("t"), py::arg("u"), py::arg("normalized") = false);

  m.def(
      "graft",
      [](const std::string& t, const std::string& u, bool normalized) {
        return terms_of(graft(Tree::parse(t), Tree::parse(u), normalized));
      },
      py::arg("t"), py::arg("u"), py::arg("normalized") = false);

  m.def("magnus", [](std::size_t n) { return terms_of(magnus_omega(n)); }, py::arg("max_vertices"));

  m.def(
      "lambda_",
      [](const std::string& text) {
        std::vector<std::pair<std::size_t, std::string>> out;
        for (const auto p = lambda(parse_forest(text)); const auto& [k, c] : p.terms()) out.emplace_back(k, to_string(c));
        return out;
      },
      py::arg("forest"));

  m.def(
      "qsh", [](const std::vector<std::size_t>& ks, std::size_t r) { return to_string(qsh_coefficient(ks, r)); },
      py::arg("ks"), py::arg("r"));

  m.def(
      "verify", [](const std::string& suite, std::size_t d) { return report_dict(run_suite(suite, d)); },
      py::arg("suite") = "all", py::arg("max_degree") = 5);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
