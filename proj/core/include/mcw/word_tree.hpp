#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcw {

// Step from a vertex to one of its two children.
enum class Step : unsigned char { left, right };

// Address of a vertex as the list of steps from the root.
struct VertexPath {
  std::vector<Step> steps;

  bool is_root() const { return steps.empty(); }
  VertexPath child(Step s) const;
  friend bool operator==(const VertexPath&, const VertexPath&) = default;
  friend std::strong_ordering operator<=>(const VertexPath&, const VertexPath&) = default;
  std::string to_string() const;  // e.g. "LR", "" for the root
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position);
  std::size_t position;
};

// Labelled binary tree of a multilinear commutator word. Only the shape is
// stored: by multilinearity the leaf labels are determined up to renaming, and
// words are compared as unlabelled trees. Rendering numbers leaves x1..xn from
// left to right. Vertex ids are preorder indices; the root is vertex 0, a
// vertex's left subtree precedes its right subtree.
class WordTree {
 public:
  WordTree();  // single leaf, the word x1

  static WordTree leaf();
  static WordTree join(const WordTree& left, const WordTree& right);  // [left, right]

  // Bracket grammar with 1-based indeterminates: "x1", "[x1,x2]", and the
  // left-normed shorthand "[x1,x2,x3]" = "[[x1,x2],x3]". The indeterminates
  // must be exactly x1..xn, each used once.
  static WordTree parse(std::string_view text);

  int vertex_count() const { return static_cast<int>(left_.size()); }
  int leaf_count() const { return leaf_count_; }
  int height() const { return height_; }
  // 2^(h+1) - 1 - vertex_count; zero exactly for the full trees.
  long long defect() const;

  bool is_leaf(int v) const { return left_[static_cast<std::size_t>(v)] < 0; }
  int left_child(int v) const { return left_[static_cast<std::size_t>(v)]; }
  int right_child(int v) const { return right_[static_cast<std::size_t>(v)]; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }
  int level(int v) const { return height_ - depth(v); }  // root at level = height

  int vertex_at(const VertexPath& path) const;  // throws on invalid path
  VertexPath path_of(int v) const;
  std::vector<int> leaves_in_order() const;     // preorder = left-to-right

  WordTree subtree(int v) const;
  // New tree with the subtree at v replaced; everything else keeps its shape.
  WordTree replaced(int v, const WordTree& replacement) const;

  std::string render() const;           // canonical fully bracketed form
  std::string render_at(int v) const;   // the subword at v, numbered within w
  std::string dot() const;              // stable text, root drawn at the bottom

  // Shape equality; the preorder layout makes this a plain array compare.
  friend bool operator==(const WordTree& a, const WordTree& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  // Parallel arrays indexed by preorder vertex id; left/right are -1 on leaves.
  std::vector<int> left_, right_, parent_, depth_;
  int height_ = 0;
  int leaf_count_ = 1;

  void recompute();  // parent_/depth_/height_/leaf_count_ from left_/right_
  int append_copy(const WordTree& src, int src_v, int parent);
};

struct WordTreeHash {
  std::size_t operator()(const WordTree& t) const;
};

}  // namespace mcw
