#include "arbor/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "arbor/errors.hpp"
#include "arbor/memo.hpp"

namespace arbor {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";
constexpr std::string_view kEmptySet = "\xE2\x88\x85";
constexpr std::string_view kBulletGlyph = "\xE2\x80\xA2";

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Forest forest() {
    skip_space();
    if (consume(kEmptySet) || consume("empty")) {
      skip_space();
      expect_end();
      return Forest::empty();
    }
    std::vector<Tree> trees;
    trees.push_back(tree());
    skip_space();
    while (pos_ < text_.size()) {
      if (!consume(kMiddleDot) && !consume(".") && !consume("*")) {
        throw ParseError("expected '·' between trees", pos_);
      }
      skip_space();
      trees.push_back(tree());
      skip_space();
    }
    return Forest(std::move(trees));
  }

  Tree single() {
    skip_space();
    Tree t = tree();
    skip_space();
    expect_end();
    return t;
  }

 private:
  Tree tree() {
    if (consume(kBulletGlyph)) return Tree();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected '['", pos_);
    const char open = text_[pos_];
    if (open != '[' && open != '(') {
      throw ParseError("expected '[' but found '" + std::string(1, open) + "'", pos_);
    }
    const char close = open == '[' ? ']' : ')';
    ++pos_;
    std::vector<Tree> children;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unbalanced brackets", pos_);
      if (text_[pos_] == close) {
        ++pos_;
        break;
      }
      children.push_back(tree());
    }
    return Tree::graft(std::move(children));
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }

  void expect_end() const {
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree Tree::graft(std::vector<Tree> children) {
  std::sort(children.begin(), children.end());
  std::string code = "[";
  for (const auto& c : children) code += c.code_;
  code += ']';
  return Tree(std::move(code));
}

Tree Tree::parse(std::string_view text) { return TreeParser(text).single(); }

std::vector<Tree> Tree::children() const {
  std::vector<Tree> out;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < code_.size(); ++i) {
    depth += code_[i] == '[' ? 1 : -1;
    if (depth == 0) {
      out.push_back(Tree(code_.substr(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return out;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
}

Forest Forest::bullets(std::size_t n) { return Forest(std::vector<Tree>(n, Tree())); }

const Tree& Forest::tree() const {
  if (trees_.size() != 1) throw DomainError("forest " + to_string() + " is not a single tree");
  return trees_.front();
}

std::size_t Forest::vertices() const noexcept {
  std::size_t v = 0;
  for (const auto& t : trees_) v += t.vertices();
  return v;
}

std::size_t Forest::edges() const noexcept {
  std::size_t e = 0;
  for (const auto& t : trees_) e += t.edges();
  return e;
}

bool Forest::all_bullets() const noexcept {
  return std::all_of(trees_.begin(), trees_.end(), [](const Tree& t) { return t.is_bullet(); });
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<Tree> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(),
             std::back_inserter(merged));
  Forest out;
  out.trees_ = std::move(merged);
  return out;
}

std::string Forest::to_string() const {
  if (trees_.empty()) return std::string(kEmptySet);
  std::string out;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) out += kMiddleDot;
    out += trees_[i].code();
  }
  return out;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) noexcept {
  if (auto c = a.trees_.size() <=> b.trees_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.trees_.size(); ++i) {
    if (auto c = a.trees_[i] <=> b.trees_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Forest parse_forest(std::string_view text) { return TreeParser(text).forest(); }

namespace {

// Forests with exactly n vertices whose components are all <= bound (by
// index into the flat list of trees of each grade), generated with
// components in nonincreasing order so that each multiset appears once.
void forests_bounded(std::size_t n, std::size_t max_component, std::vector<Tree>& prefix,
                     std::vector<Forest>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t size = std::min(n, max_component); size >= 1; --size) {
    const auto& candidates = enumerate_trees(size);
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      if (!prefix.empty() && prefix.back() < *it) continue;
      prefix.push_back(*it);
      forests_bounded(n - size, size, prefix, out);
      prefix.pop_back();
    }
  }
}

std::mutex g_enum_mutex;
std::map<std::size_t, std::vector<Tree>> g_trees_by_vertices;
std::map<std::size_t, std::vector<Forest>> g_forests_by_vertices;

}  // namespace

const std::vector<Forest>& enumerate_forests(std::size_t n) {
  {
    std::lock_guard lock(g_enum_mutex);
    if (auto it = g_forests_by_vertices.find(n); it != g_forests_by_vertices.end()) return it->second;
  }
  std::vector<Forest> out;
  std::vector<Tree> prefix;
  forests_bounded(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  std::lock_guard lock(g_enum_mutex);
  return g_forests_by_vertices.emplace(n, std::move(out)).first->second;
}

const std::vector<Tree>& enumerate_trees(std::size_t n, Grading grading) {
  if (grading == Grading::Edges) return enumerate_trees(n + 1, Grading::Vertices);
  if (n == 0) throw DomainError("trees have at least one vertex");
  {
    std::lock_guard lock(g_enum_mutex);
    if (auto it = g_trees_by_vertices.find(n); it != g_trees_by_vertices.end()) return it->second;
  }
  std::vector<Tree> out;
  for (const auto& f : enumerate_forests(n - 1)) out.push_back(b_plus(f));
  std::sort(out.begin(), out.end());
  std::lock_guard lock(g_enum_mutex);
  return g_trees_by_vertices.emplace(n, std::move(out)).first->second;
}

std::vector<Tree> trees_up_to(std::size_t max_vertices) {
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const auto& grade = enumerate_trees(n);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  return out;
}

Integer symmetry(const Tree& t) {
  static detail::MemoCache<std::string, Integer> cache;
  return cache.get_or_compute(t.code(), [&] {
    Integer sigma = 1;
    const auto children = t.children();
    for (std::size_t i = 0; i < children.size();) {
      std::size_t j = i;
      while (j < children.size() && children[j] == children[i]) ++j;
      const auto multiplicity = static_cast<unsigned long>(j - i);
      Integer child_sigma = symmetry(children[i]);
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), child_sigma.get_mpz_t(), multiplicity);
      sigma *= factorial(multiplicity) * power;
      i = j;
    }
    return sigma;
  });
}

Integer symmetry(const Forest& s) {
  Integer sigma = 1;
  for (const auto& t : s.trees()) sigma *= symmetry(t);
  return sigma;
}

Integer tree_factorial(const Tree& t) {
  static detail::MemoCache<std::string, Integer> cache;
  return cache.get_or_compute(t.code(), [&] {
    Integer f = static_cast<unsigned long>(t.vertices());
    for (const auto& c : t.children()) f *= tree_factorial(c);
    return f;
  });
}

Integer tree_factorial(const Forest& s) {
  Integer f = 1;
  for (const auto& t : s.trees()) f *= tree_factorial(t);
  return f;
}

TreeStats stats(const Forest& s) {
  TreeStats st;
  st.vertices = s.vertices();
  st.edges = s.edges();
  st.sigma = symmetry(s);
  st.factorial = tree_factorial(s);
  st.cm = Rational(factorial(st.vertices)) / Rational(st.factorial * st.sigma);
  return st;
}

Tree b_plus(const Forest& s) { return Tree::graft(s.trees()); }

Tree butcher(const Tree& a, const Tree& b) {
  auto children = a.children();
  children.push_back(b);
  return Tree::graft(std::move(children));
}

Tree merge(const Tree& a, const Tree& b) {
  auto children = a.children();
  auto other = b.children();
  children.insert(children.end(), other.begin(), other.end());
  return Tree::graft(std::move(children));
}

Tree ladder(std::size_t edges) {
  Tree t;
  for (std::size_t i = 0; i < edges; ++i) t = Tree::graft({t});
  return t;
}

Tree corolla(std::size_t leaves) { return Tree::graft(std::vector<Tree>(leaves, Tree())); }

}  // namespace arbor
