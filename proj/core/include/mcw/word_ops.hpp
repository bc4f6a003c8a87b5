#pragma once

#include <cstddef>
#include <vector>

#include "mcw/word_tree.hpp"

namespace mcw {

// Exponent tuple (i_1, ..., i_n) indexing derived-series substitutions,
// ordered componentwise.
using TupleIndex = std::vector<int>;
bool tuple_leq(const TupleIndex& a, const TupleIndex& b);
bool tuple_less(const TupleIndex& a, const TupleIndex& b);

// A section: a maximal set of pairwise incomparable vertices (every leaf has
// exactly one ancestor-or-self in it). Members are sorted by path.
struct Section {
  std::vector<VertexPath> members;
  friend bool operator==(const Section&, const Section&) = default;
};

bool is_section(const WordTree& t, const Section& s);

// All sections of the tree. Their number is 1 + s(left)*s(right) per vertex,
// so this is only meant for the desk-scale words the checkers use.
std::vector<Section> all_sections(const WordTree& t);

// The section obtained by cutting below level i: every vertex at level i+1
// together with the leaves lying strictly below level i+1 (level > i+1).
// Requires 0 <= i < height.
Section section_below_level(const WordTree& t, int level);

// Sibling sharing the same parent; not defined for the root.
VertexPath companion(const WordTree& t, const VertexPath& p);

WordTree lower_central_word(int n);  // [x1,...,xn] left-normed, n >= 1
WordTree derived_word(int n);        // full tree on 2^n leaves, n >= 0

// phi extends w when phi's tree is obtained from w's by growing subtrees at
// some leaves of w (child order significant, labels ignored). Reflexive.
bool is_extension(const WordTree& phi, const WordTree& w);

// alpha is the shape of the subtree at some vertex of w.
bool is_constituent(const WordTree& alpha, const WordTree& w);

// Largest i such that some vertex at level i carries a full subtree of height
// i. Requires defect > 0 and height >= 1; the result then satisfies
// 1 <= i < height.
int max_full_subtree_level(const WordTree& w);

// The canonical proper extension grown at a vertex v of the section that cuts
// below level i = max_full_subtree_level(w): a leaf gets the full tree of
// height i grafted onto it; otherwise the child of v whose subtree is not the
// full tree of height i (the right child when both differ) is replaced by it.
// Preserves the height of w.
WordTree extend_at_section_vertex(const WordTree& w, const VertexPath& v, int level);

// Replace the subtree u at v by [u, eta] with fresh indeterminates for eta.
WordTree append_word_at(const WordTree& w, const VertexPath& v, const WordTree& eta);

struct ExtensionSet {
  std::vector<WordTree> words;
  bool truncated = false;  // enumeration stopped at the budget
};

// All proper extensions of w with the same height as w, in a deterministic
// order. Stops after `budget` results and sets `truncated`.
ExtensionSet proper_extensions_same_height(const WordTree& w, std::size_t budget = 10000);

// All shapes of height <= k in a deterministic order.
const std::vector<WordTree>& shapes_up_to(int k);

// w_(i): the leaf for x_j is replaced by the full tree on 2^(i_j) leaves.
// idx.size() must equal leaf_count; entries are >= 0.
WordTree substitute_derived(const WordTree& w, const TupleIndex& idx);

}  // namespace mcw
