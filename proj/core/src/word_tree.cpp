#include "mcw/word_tree.hpp"

#include <algorithm>
#include <cassert>

namespace mcw {

VertexPath VertexPath::child(Step s) const {
  VertexPath out = *this;
  out.steps.push_back(s);
  return out;
}

std::string VertexPath::to_string() const {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out += (s == Step::left ? 'L' : 'R');
  return out;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
      position(pos) {}

WordTree::WordTree() : left_(1, -1), right_(1, -1), parent_(1, -1), depth_(1, 0) {}

WordTree WordTree::leaf() { return WordTree(); }

int WordTree::append_copy(const WordTree& src, int src_v, int parent) {
  int id = static_cast<int>(left_.size());
  left_.push_back(-1);
  right_.push_back(-1);
  parent_.push_back(parent);
  depth_.push_back(parent < 0 ? 0 : depth_[static_cast<std::size_t>(parent)] + 1);
  if (!src.is_leaf(src_v)) {
    left_[static_cast<std::size_t>(id)] = append_copy(src, src.left_child(src_v), id);
    right_[static_cast<std::size_t>(id)] = append_copy(src, src.right_child(src_v), id);
  }
  return id;
}

void WordTree::recompute() {
  const int n = vertex_count();
  parent_.assign(static_cast<std::size_t>(n), -1);
  depth_.assign(static_cast<std::size_t>(n), 0);
  height_ = 0;
  leaf_count_ = 0;
  for (int v = 0; v < n; ++v) {
    if (is_leaf(v)) {
      ++leaf_count_;
    } else {
      parent_[static_cast<std::size_t>(left_child(v))] = v;
      parent_[static_cast<std::size_t>(right_child(v))] = v;
    }
  }
  for (int v = 1; v < n; ++v) {
    depth_[static_cast<std::size_t>(v)] = depth_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])] + 1;
    height_ = std::max(height_, depth_[static_cast<std::size_t>(v)]);
  }
}

WordTree WordTree::join(const WordTree& left, const WordTree& right) {
  WordTree out;
  out.left_.clear();
  out.right_.clear();
  out.parent_.clear();
  out.depth_.clear();
  out.left_.push_back(-1);
  out.right_.push_back(-1);
  out.parent_.push_back(-1);
  out.depth_.push_back(0);
  out.left_[0] = out.append_copy(left, 0, 0);
  out.right_[0] = out.append_copy(right, 0, 0);
  out.recompute();
  return out;
}

long long WordTree::defect() const {
  assert(height_ < 62);
  return (2ll << height_) - 1 - vertex_count();
}

int WordTree::vertex_at(const VertexPath& path) const {
  int v = 0;
  for (Step s : path.steps) {
    if (is_leaf(v)) throw std::invalid_argument("vertex path leaves the tree at a leaf");
    v = (s == Step::left) ? left_child(v) : right_child(v);
  }
  return v;
}

VertexPath WordTree::path_of(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex id out of range");
  std::vector<Step> rev;
  while (parent(v) >= 0) {
    int p = parent(v);
    rev.push_back(left_child(p) == v ? Step::left : Step::right);
    v = p;
  }
  std::reverse(rev.begin(), rev.end());
  return VertexPath{std::move(rev)};
}

std::vector<int> WordTree::leaves_in_order() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(leaf_count_));
  for (int v = 0; v < vertex_count(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

WordTree WordTree::subtree(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex id out of range");
  WordTree out;
  out.left_.clear();
  out.right_.clear();
  out.parent_.clear();
  out.depth_.clear();
  out.append_copy(*this, v, -1);
  out.recompute();
  return out;
}

WordTree WordTree::replaced(int v, const WordTree& replacement) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex id out of range");
  if (v == 0) return replacement;
  WordTree out;
  out.left_.clear();
  out.right_.clear();
  out.parent_.clear();
  out.depth_.clear();
  // Rebuild in preorder, swapping in the replacement at v.
  struct Walker {
    const WordTree& base;
    const WordTree& repl;
    int target;
    WordTree& out;
    int copy(int base_v, int parent) {
      if (base_v == target) return out.append_copy(repl, 0, parent);
      int id = static_cast<int>(out.left_.size());
      out.left_.push_back(-1);
      out.right_.push_back(-1);
      out.parent_.push_back(parent);
      out.depth_.push_back(0);
      if (!base.is_leaf(base_v)) {
        out.left_[static_cast<std::size_t>(id)] = copy(base.left_child(base_v), id);
        out.right_[static_cast<std::size_t>(id)] = copy(base.right_child(base_v), id);
      }
      return id;
    }
  };
  Walker walker{*this, replacement, v, out};
  walker.copy(0, -1);
  out.recompute();
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::vector<std::pair<long, std::size_t>> leaf_indices;  // (index, position), left to right

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  WordTree parse_word() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    if (text[pos] == 'x') return parse_leaf();
    if (text[pos] == '[') return parse_bracket();
    throw ParseError("expected 'x<k>' or '['", pos);
  }

  WordTree parse_leaf() {
    std::size_t start = pos;
    ++pos;  // consume 'x'
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError("expected an index after 'x'", pos);
    long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      ++pos;
      if (v > 1000000) throw ParseError("indeterminate index too large", pos);
    }
    if (v < 1) throw ParseError("indeterminate indices are 1-based", pos);
    leaf_indices.emplace_back(v, start);
    return WordTree::leaf();
  }

  WordTree parse_bracket() {
    ++pos;  // consume '['
    WordTree acc = parse_word();
    skip_ws();
    if (pos >= text.size() || text[pos] != ',')
      throw ParseError("a commutator needs at least two entries", pos);
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      WordTree next = parse_word();
      acc = WordTree::join(acc, next);  // left-normed shorthand
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ',' or ']'", pos);
    ++pos;
    return acc;
  }
};

void render_rec(const WordTree& t, int v, int& next_leaf, std::string& out) {
  if (t.is_leaf(v)) {
    out += 'x';
    out += std::to_string(++next_leaf);
    return;
  }
  out += '[';
  render_rec(t, t.left_child(v), next_leaf, out);
  out += ',';
  render_rec(t, t.right_child(v), next_leaf, out);
  out += ']';
}

}  // namespace

WordTree WordTree::parse(std::string_view text) {
  Parser p{text};
  WordTree tree = p.parse_word();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after the word", p.pos);
  // Multilinearity: the indices must be exactly 1..n, each once.
  const std::size_t n = p.leaf_indices.size();
  std::vector<char> seen(n + 1, 0);
  for (auto [v, at] : p.leaf_indices) {
    if (v > static_cast<long>(n))
      throw ParseError("indeterminate x" + std::to_string(v) + " out of range, expected x1..x" + std::to_string(n), at);
    if (seen[static_cast<std::size_t>(v)])
      throw ParseError("indeterminate x" + std::to_string(v) + " used twice", at);
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return tree;
}

std::string WordTree::render() const {
  std::string out;
  int next_leaf = 0;
  render_rec(*this, 0, next_leaf, out);
  return out;
}

std::string WordTree::render_at(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex id out of range");
  // Leaves are numbered by their global left-to-right position in the word.
  int first_leaf = 0;
  for (int u = 0; u < vertex_count(); ++u) {
    if (u == v) break;
    if (is_leaf(u)) ++first_leaf;
  }
  // Within the preorder layout the subtree at v occupies a contiguous block,
  // and its leaves are globally consecutive.
  WordTree sub = subtree(v);
  std::string out;
  int next_leaf = first_leaf;
  render_rec(sub, 0, next_leaf, out);
  return out;
}

std::string WordTree::dot() const {
  // Edges run child -> parent so the root ranks at the bottom of the drawing.
  std::string out = "digraph word {\n  node [shape=box];\n";
  for (int v = 0; v < vertex_count(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + render_at(v) + "\"];\n";
  for (int v = 1; v < vertex_count(); ++v)
    out += "  n" + std::to_string(v) + " -> n" + std::to_string(parent(v)) + ";\n";
  out += "}\n";
  return out;
}

std::size_t WordTreeHash::operator()(const WordTree& t) const {
  std::size_t h = 1469598103934665603ull;
  for (int v = 0; v < t.vertex_count(); ++v) {
    h ^= static_cast<std::size_t>(t.is_leaf(v) ? 3 : 5);
    h *= 1099511628211ull;
  }
  // The leaf pattern in preorder does not determine the shape; mix in child ids.
  for (int v = 0; v < t.vertex_count(); ++v) {
    h ^= static_cast<std::size_t>(t.left_child(v) + 1);
    h *= 1099511628211ull;
    h ^= static_cast<std::size_t>(t.right_child(v) + 1);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mcw
