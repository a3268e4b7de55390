#include "arbor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "arbor/bseries.hpp"
#include "arbor/characters.hpp"
#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "arbor/json_io.hpp"
#include "arbor/prelie.hpp"
#include "arbor/qshuffle.hpp"
#include "arbor/verify.hpp"

namespace arbor {

namespace {

using nlohmann::json;

constexpr std::size_t kHardCap = 9;
constexpr std::size_t kWarnFrom = 7;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::Text;
  std::string format_name = "text";

  void resolve() {
    if (format_name == "text") {
      format = Format::Text;
    } else if (format_name == "json") {
      format = Format::Json;
    } else if (format_name == "csv") {
      format = Format::Csv;
    } else {
      throw UsageError("unknown format '" + format_name + "' (text, json or csv)");
    }
  }
};

std::size_t checked_degree(std::size_t n, const char* what, Context& ctx) {
  if (n > kHardCap) {
    throw UsageError(std::string(what) + " " + std::to_string(n) + " exceeds the hard cap of " +
                     std::to_string(kHardCap));
  }
  if (n >= kWarnFrom) {
    ctx.err << "warning: " << what << " " << n << " is expensive; cost grows exponentially with the degree\n";
  }
  return n;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Text tables pad with spaces; widths count code points so "·" and "−" line up.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

void print_table(Context& ctx, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  if (ctx.format == Format::Json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(obj);
    }
    ctx.out << arr.dump(2) << "\n";
    return;
  }
  if (ctx.format == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) ctx.out << (i ? "," : "") << csv_field(header[i]);
    ctx.out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) ctx.out << (i ? "," : "") << csv_field(row[i]);
      ctx.out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      ctx.out << cells[i];
      if (i + 1 < cells.size()) ctx.out << std::string(width[i] - display_width(cells[i]) + 2, ' ');
    }
    ctx.out << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
}

int print_report(Context& ctx, const Report& r) {
  if (ctx.format == Format::Json) {
    ctx.out << to_json(r).dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.checks) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << c.seconds;
      rows.push_back({c.passed ? "PASS" : "FAIL", c.name, secs.str(), c.detail});
    }
    print_table(ctx, {"status", "check", "seconds", "detail"}, rows);
    if (ctx.format == Format::Text) {
      ctx.out << r.checks.size() << " checks, " << r.failures() << " failed\n";
    }
  }
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

void print_sum(Context& ctx, const ForestSum& x) {
  if (ctx.format == Format::Json) {
    ctx.out << to_json(x).dump(2) << "\n";
  } else if (ctx.format == Format::Csv) {
    ctx.out << "forest,coefficient\n";
    for (const auto& [f, c] : x.terms()) ctx.out << csv_field(f.to_string()) << "," << to_string(c) << "\n";
  } else {
    ctx.out << x.to_string() << "\n";
  }
}

void print_tensor(Context& ctx, const TensorSum& x) {
  if (ctx.format == Format::Json) {
    ctx.out << to_json(x).dump(2) << "\n";
  } else if (ctx.format == Format::Csv) {
    ctx.out << "left,right,coefficient\n";
    for (const auto& [k, c] : x.terms()) {
      ctx.out << csv_field(k[0].to_string()) << "," << csv_field(k[1].to_string()) << "," << to_string(c) << "\n";
    }
  } else {
    ctx.out << x.to_string() << "\n";
  }
}

Algebra parse_variant(const std::string& text) {
  try {
    return parse_algebra(text);
  } catch (const std::exception&) {
    throw UsageError("unknown variant '" + text + "' (H, H_sigma, Htilde or CK)");
  }
}

AntipodeMethod parse_method(const std::string& text) {
  if (text == "recursive") return AntipodeMethod::Recursive;
  if (text == "recursive_left") return AntipodeMethod::RecursiveLeft;
  if (text == "closed_form") return AntipodeMethod::ClosedForm;
  throw UsageError("unknown method '" + text + "' (recursive, recursive_left or closed_form)");
}

Forest read_forest(const std::string& text, Algebra a) {
  const Forest s = parse_forest(text);
  return edge_graded(a) ? normalize(s, a) : s;
}

// A named character, or a JSON file of tree values read as a character.
Functional read_character(const std::string& spec, Algebra a, std::size_t degree) {
  if (std::filesystem::exists(spec)) return character_from_tree_values(tree_values_from_file(spec), a, degree);
  const NamedCharacter c = parse_named_character(spec);
  const Algebra home = home_algebra(c);
  if (grading_of(home) != grading_of(a)) {
    throw UsageError("character '" + spec + "' lives on " + std::string(name(home)) + ", not on " +
                     std::string(name(a)));
  }
  return named_character(c, degree);
}

Functional series_coefficients(const std::string& path, Kind kind, std::size_t order) {
  if (path.empty()) {
    Functional f(Grading::Vertices, kind, order);
    for (const auto& t : trees_up_to(order)) f.set(t, Rational(1) / Rational(tree_factorial(t)));
    return f;
  }
  return functional_from_tree_values(tree_values_from_file(path), kind, order);
}

void add_format(CLI::App* app, Context& ctx) {
  app->add_option("--format", ctx.format_name, "Output format: text, json or csv")->capture_default_str();
}

struct Options {
  std::size_t vertices = 5;
  std::optional<std::size_t> edges;
  std::size_t max_degree = 5;
  std::size_t max_vertices = 5;
  std::string variant = "H";
  std::string method = "recursive";
  std::string name = "omega";
  std::string left, right;
  std::string suite = "all";
  std::string first, second;
  bool normalized = false;
  std::vector<std::size_t> ks;
  std::size_t r = 0;
  std::size_t dim = 1;
  std::vector<std::string> field;
  std::size_t order = 4;
  std::string alpha_file, beta_file;
  bool general_bullet = false;
};

int character_table(Context& ctx, const std::string& which, std::size_t max_vertices) {
  std::vector<std::vector<std::string>> rows;
  if (which == "omega") {
    const Functional w = omega(max_vertices);
    for (const auto& t : trees_up_to(max_vertices)) {
      const Integer sigma = symmetry(t);
      rows.push_back({t.code(), to_string(sigma), to_string(w(t)), to_string(Rational(w(t) / Rational(sigma)))});
    }
    print_table(ctx, {"tree", "sigma", "omega", "omega/sigma"}, rows);
    return kExitOk;
  }
  const NamedCharacter c = parse_named_character(which);
  const bool on_h = edge_graded(home_algebra(c));
  const Functional f = named_character(c, on_h ? max_vertices - 1 : max_vertices);
  for (const auto& t : trees_up_to(max_vertices)) rows.push_back({t.code(), to_string(f(t))});
  print_table(ctx, {"tree", std::string(name(c))}, rows);
  return kExitOk;
}

int hopf_verify_coassoc(Context& ctx, Algebra a, std::size_t d) {
  Report r;
  std::size_t n = 0;
  std::string failure;
  for (const auto& s : basis(a, d)) {
    const TensorSum once = coproduct(s, a);
    if (!(apply_coproduct_at(once, 0, a) == apply_coproduct_at(once, 1, a)) && failure.empty()) {
      failure = s.to_string();
    }
    ++n;
  }
  r.add("coassociativity " + std::string(name(a)), failure.empty(),
        failure.empty() ? std::to_string(n) + " forests" : "fails on " + failure);
  return print_report(ctx, r);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  Options o;
  CLI::App app{"Exact computations with Hopf algebras of rooted trees", "arbor"};
  app.require_subcommand(1);
  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) {
    add_format(sub, ctx);
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  auto* trees = app.add_subcommand("trees", "Enumerate rooted trees and their statistics")->require_subcommand(1);
  auto* enumerate = trees->add_subcommand("enumerate", "Canonical strings of all trees of one size");
  enumerate->add_option("--vertices", o.vertices, "Number of vertices")->capture_default_str();
  enumerate->add_option("--edges", o.edges, "Number of edges (overrides --vertices)");
  bind(enumerate, [&] {
    const std::size_t n = o.edges ? checked_degree(*o.edges + 1, "vertices", ctx) : checked_degree(o.vertices, "vertices", ctx);
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : enumerate_trees(n)) rows.push_back({t.code()});
    if (ctx.format == Format::Text) {
      for (const auto& row : rows) ctx.out << row[0] << "\n";
    } else {
      print_table(ctx, {"tree"}, rows);
    }
    return kExitOk;
  });
  auto* tstats = trees->add_subcommand("stats", "Vertices, edges, symmetry, tree factorial and CM coefficient");
  tstats->add_option("forest", o.first, "Tree or forest; further ones may follow")->required();
  tstats->allow_extras();
  bind(tstats, [&] {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> items{o.first};
    for (const auto& extra : tstats->remaining()) {
      if (extra.starts_with("-")) throw UsageError("unknown option " + extra);
      items.push_back(extra);
    }
    for (const auto& text : items) {
      const Forest s = parse_forest(text);
      const TreeStats st = stats(s);
      rows.push_back({s.to_string(), std::to_string(st.vertices), std::to_string(st.edges), to_string(st.sigma),
                      to_string(st.factorial), to_string(st.cm)});
    }
    print_table(ctx, {"forest", "vertices", "edges", "sigma", "factorial", "cm"}, rows);
    return kExitOk;
  });

  auto* hopf = app.add_subcommand("hopf", "Coproducts and antipodes")->require_subcommand(1);
  auto* cop = hopf->add_subcommand("coproduct", "Coproduct of a forest");
  cop->add_option("--variant", o.variant, "H, H_sigma, Htilde or CK")->capture_default_str();
  cop->add_option("forest", o.first, "Forest")->required();
  bind(cop, [&] {
    const Algebra a = parse_variant(o.variant);
    print_tensor(ctx, coproduct(read_forest(o.first, a), a));
    return kExitOk;
  });
  auto* anti = hopf->add_subcommand("antipode", "Antipode of a forest");
  anti->add_option("--variant", o.variant, "H, H_sigma or CK")->capture_default_str();
  anti->add_option("--method", o.method, "recursive, recursive_left or closed_form")->capture_default_str();
  anti->add_option("forest", o.first, "Forest")->required();
  bind(anti, [&] {
    const Algebra a = parse_variant(o.variant);
    const Forest s = read_forest(o.first, a);
    checked_degree(degree(s, a), "degree", ctx);
    print_sum(ctx, antipode(s, a, parse_method(o.method)));
    return kExitOk;
  });
  auto* coassoc = hopf->add_subcommand("verify-coassoc", "Coassociativity on every forest up to a degree");
  coassoc->add_option("--variant", o.variant, "H, H_sigma, Htilde or CK")->capture_default_str();
  coassoc->add_option("--max-degree", o.max_degree, "Largest degree checked")->capture_default_str();
  bind(coassoc, [&] {
    return hopf_verify_coassoc(ctx, parse_variant(o.variant), checked_degree(o.max_degree, "max degree", ctx));
  });

  auto* chars = app.add_subcommand("characters", "Character tables, convolution and the omega map")->require_subcommand(1);
  auto* table = chars->add_subcommand("table", "Values of a named character on all trees");
  table->add_option("--name", o.name, "omega, E, E_sigma, L, L_sigma, delta, eps or delta_bullet")->capture_default_str();
  table->add_option("--max-vertices", o.max_vertices, "Largest tree size")->capture_default_str();
  bind(table, [&] { return character_table(ctx, o.name, checked_degree(o.max_vertices, "max vertices", ctx)); });
  auto* conv = chars->add_subcommand("convolve", "Convolution of two characters");
  conv->add_option("--algebra", o.variant, "H, Htilde or CK")->capture_default_str();
  conv->add_option("--left", o.left, "Named character or JSON file of tree values")->required();
  conv->add_option("--right", o.right, "Named character or JSON file of tree values")->required();
  conv->add_option("--max-degree", o.max_degree, "Truncation degree")->capture_default_str();
  bind(conv, [&] {
    const Algebra a = parse_variant(o.variant);
    const std::size_t d = checked_degree(o.max_degree, "max degree", ctx);
    const Functional f = convolve(read_character(o.left, a, d), read_character(o.right, a, d), {a, d});
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : basis(a, d)) rows.push_back({s.to_string(), to_string(f(s))});
    print_table(ctx, {"forest", "value"}, rows);
    return kExitOk;
  });
  auto* cverify = chars->add_subcommand("verify", "Identity suites for the character module");
  cverify->add_option("suite", o.suite, "chv")->required();
  cverify->add_option("--max-degree", o.max_degree, "Largest degree checked")->capture_default_str();
  bind(cverify, [&] {
    if (o.suite != "chv") throw UsageError("characters verify knows only the 'chv' suite");
    return print_report(ctx, verify_chv(checked_degree(o.max_degree, "max degree", ctx)));
  });
  auto* com = chars->add_subcommand("omega", "omega and omega/sigma on all trees");
  com->add_option("--max-vertices", o.max_vertices, "Largest tree size")->capture_default_str();
  bind(com, [&] { return character_table(ctx, "omega", checked_degree(o.max_vertices, "max vertices", ctx)); });

  auto* prelie = app.add_subcommand("prelie", "Pre-Lie products and the Magnus element")->require_subcommand(1);
  auto* ins = prelie->add_subcommand("insert", "Insertion t ▷ u");
  ins->add_option("t", o.first, "Inserted tree")->required();
  ins->add_option("u", o.second, "Host tree")->required();
  ins->add_flag("--normalized", o.normalized, "Sigma-normalized insertion");
  bind(ins, [&] {
    print_sum(ctx, insert(Tree::parse(o.first), Tree::parse(o.second), o.normalized));
    return kExitOk;
  });
  auto* gr = prelie->add_subcommand("graft", "Grafting t → u (or t ↷ u with --normalized)");
  gr->add_option("t", o.first, "Grafted tree")->required();
  gr->add_option("u", o.second, "Host tree")->required();
  gr->add_flag("--normalized", o.normalized, "One term per vertex of u");
  bind(gr, [&] {
    print_sum(ctx, graft(Tree::parse(o.first), Tree::parse(o.second), o.normalized));
    return kExitOk;
  });
  auto* mag = prelie->add_subcommand("magnus", "Pre-Lie Magnus element up to a tree size");
  mag->add_option("--max-vertices", o.max_vertices, "Largest tree size")->capture_default_str();
  bind(mag, [&] {
    print_sum(ctx, magnus_omega(checked_degree(o.max_vertices, "max vertices", ctx)));
    return kExitOk;
  });

  auto* qs = app.add_subcommand("qshuffle", "Quasi-shuffle morphism and counts")->require_subcommand(1);
  auto* lam = qs->add_subcommand("lambda", "Image of a forest in the quasi-shuffle algebra");
  lam->add_option("forest", o.first, "Forest")->required();
  bind(lam, [&] {
    const Forest s = parse_forest(o.first);
    const WordPoly p = lambda(s);
    if (ctx.format == Format::Text) {
      ctx.out << p.to_string() << "\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [k, c] : p.terms()) rows.push_back({std::to_string(k), to_string(c)});
      print_table(ctx, {"power", "coefficient"}, rows);
    }
    return kExitOk;
  });
  auto* oms = qs->add_subcommand("omega-s", "Ordered partition counts omega_s(t)");
  oms->add_option("tree", o.first, "Tree")->required();
  bind(oms, [&] {
    const Tree t = Tree::parse(o.first);
    checked_degree(t.vertices(), "vertices", ctx);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [s, c] : omega_s(t)) rows.push_back({std::to_string(s), to_string(c)});
    print_table(ctx, {"s", "omega_s"}, rows);
    return kExitOk;
  });
  auto* qsh_cmd = qs->add_subcommand("qsh", "Quasi-shuffle multinomial qsh(k_1,...,k_n; r)");
  qsh_cmd->add_option("k", o.ks, "Block sizes")->required();
  qsh_cmd->add_option("--r", o.r, "Number of merged pairs")->capture_default_str();
  bind(qsh_cmd, [&] {
    const Integer v = qsh_coefficient(o.ks, o.r);
    if (o.ks.size() == 2 && qsh(o.ks[0], o.ks[1], o.r) != v) {
      throw InternalMismatch("closed formula and diamond product disagree on qsh");
    }
    if (ctx.format == Format::Json) {
      ctx.out << json{{"k", o.ks}, {"r", o.r}, {"qsh", to_string(v)}}.dump(2) << "\n";
    } else {
      ctx.out << to_string(v) << "\n";
    }
    return kExitOk;
  });

  auto* bs = app.add_subcommand("bseries", "Polynomial-exact B-series laws")->require_subcommand(1);
  auto add_series_options = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Dimension d")->capture_default_str();
    sub->add_option("--field", o.field, "One polynomial per component, in y (d = 1) or y1..yd")->required();
    sub->add_option("--order", o.order, "Truncation order N in h")->capture_default_str();
    sub->add_option("--alpha", o.alpha_file, "JSON map from tree strings to rationals")->required();
    sub->add_option("--beta", o.beta_file, "JSON map for the second series (default 1/t!)");
  };
  auto* sub = bs->add_subcommand("verify-substitution", "B(beta; h^-1 B(alpha; a)) = B(alpha ⋆ beta; a)");
  add_series_options(sub);
  sub->add_flag("--general-bullet", o.general_bullet, "Allow alpha(•) != 1");
  bind(sub, [&] {
    const std::size_t n = checked_degree(o.order, "order", ctx);
    const PolyVectorField a = parse_field(o.dim, o.field);
    const Functional alpha = functional_from_tree_values(tree_values_from_file(o.alpha_file), Kind::Character, n);
    const Functional beta = series_coefficients(o.beta_file, Kind::Infinitesimal, n);
    return print_report(ctx, verify_substitution(a, alpha, beta, n, o.general_bullet));
  });
  auto* comp = bs->add_subcommand("verify-composition", "B(beta; a) ∘ B(alpha; a) = B(alpha ∗ beta; a)");
  add_series_options(comp);
  bind(comp, [&] {
    const std::size_t n = checked_degree(o.order, "order", ctx);
    const PolyVectorField a = parse_field(o.dim, o.field);
    const Functional alpha = functional_from_tree_values(tree_values_from_file(o.alpha_file), Kind::Character, n);
    const Functional beta = series_coefficients(o.beta_file, Kind::Character, n);
    return print_report(ctx, verify_composition(a, alpha, beta, n));
  });

  auto* ver = app.add_subcommand("verify", "Run property suites");
  ver->add_option("suite", o.suite, "trees, hopf, chv, prelie, qshuffle, bseries or all")->capture_default_str();
  ver->add_option("--max-degree", o.max_degree, "Largest degree checked")->capture_default_str();
  bind(ver, [&] { return print_report(ctx, run_suite(o.suite, checked_degree(o.max_degree, "max degree", ctx))); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    ctx.resolve();
    return action ? action() : kExitUsage;
  } catch (const InternalMismatch& e) {
    err << "internal mismatch: " << e.what() << "\n";
    return kExitInternalMismatch;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace arbor
