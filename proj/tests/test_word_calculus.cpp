#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mcw/word_ops.hpp"
#include "mcw/word_tree.hpp"

using namespace mcw;

namespace {

WordTree gamma(int n) { return lower_central_word(n); }
WordTree delta(int n) { return derived_word(n); }

// Every shape with exactly n leaves, by splitting the leaves over the two
// subtrees. Independent of shapes_up_to.
std::vector<WordTree> shapes_with_leaves(int n) {
  if (n == 1) return {WordTree::leaf()};
  std::vector<WordTree> out;
  for (int k = 1; k < n; ++k)
    for (const WordTree& l : shapes_with_leaves(k))
      for (const WordTree& r : shapes_with_leaves(n - k)) out.push_back(WordTree::join(l, r));
  return out;
}

// Maximal antichains by brute force over vertex subsets: pairwise incomparable
// and hitting every root-to-leaf path.
std::vector<std::vector<int>> antichain_oracle(const WordTree& t) {
  const int n = t.vertex_count();
  REQUIRE(n <= 15);
  auto is_ancestor = [&](int a, int v) {
    for (int x = v; x != -1; x = t.parent(x))
      if (x == a) return true;
    return false;
  };
  std::vector<int> leaves = t.leaves_in_order();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) set.push_back(v);
    bool anti = true;
    for (std::size_t i = 0; i < set.size() && anti; ++i)
      for (std::size_t j = 0; j < set.size() && anti; ++j)
        if (i != j && is_ancestor(set[i], set[j])) anti = false;
    if (!anti) continue;
    bool covers = true;
    for (int leaf : leaves) {
      bool hit = false;
      for (int v : set)
        if (is_ancestor(v, leaf)) {
          hit = true;
          break;
        }
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (covers) out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> section_ids(const WordTree& t) {
  std::vector<std::vector<int>> out;
  for (const Section& s : all_sections(t)) {
    std::vector<int> ids;
    for (const VertexPath& p : s.members) ids.push_back(t.vertex_at(p));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("named words have the expected shapes") {
  CHECK(gamma(1).leaf_count() == 1);
  CHECK(gamma(1).height() == 0);
  CHECK(gamma(2).render() == "[x1,x2]");
  CHECK(gamma(3).render() == "[[x1,x2],x3]");
  CHECK(gamma(4).render() == "[[[x1,x2],x3],x4]");
  CHECK(delta(0).render() == "x1");
  CHECK(delta(1).render() == "[x1,x2]");
  CHECK(delta(2).render() == "[[x1,x2],[x3,x4]]");
  CHECK(delta(1) == gamma(2));
  CHECK(delta(3).leaf_count() == 8);
  CHECK(delta(3).height() == 3);
  CHECK(gamma(6).leaf_count() == 6);
  CHECK(gamma(6).height() == 5);
}

TEST_CASE("defect golden values") {
  CHECK(gamma(2).defect() == 0);
  CHECK(gamma(3).defect() == 2);
  CHECK(gamma(4).defect() == 8);
  CHECK(WordTree::join(gamma(3), gamma(3)).defect() == 4);
  for (int n = 0; n <= 4; ++n) CHECK(delta(n).defect() == 0);
  CHECK(WordTree::leaf().defect() == 0);
}

TEST_CASE("defect vanishes exactly on the full trees, all shapes up to 15 vertices") {
  long long checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const WordTree& t : shapes_with_leaves(n)) {
      bool full = t == delta(t.height());
      CHECK((t.defect() == 0) == full);
      CHECK(t.vertex_count() == 2 * n - 1);
      ++checked;
    }
  }
  // Catalan numbers 1, 1, 2, 5, 14, 42, 132, 429.
  CHECK(checked == 626);
}

TEST_CASE("parse accepts the bracket grammar and the left-normed shorthand") {
  CHECK(WordTree::parse("x1") == WordTree::leaf());
  CHECK(WordTree::parse("[x1,x2]") == gamma(2));
  CHECK(WordTree::parse("[x1,x2,x3,x4]") == gamma(4));
  CHECK(WordTree::parse("[[x1,x2],[x3,x4]]") == delta(2));
  CHECK(WordTree::parse("[ x1 , [ x2 , x3 ] ]").render() == "[x1,[x2,x3]]");
  CHECK(WordTree::parse("[[x1,x2,x3],[x4,x5],x6]").render() == "[[[[x1,x2],x3],[x4,x5]],x6]");
}

TEST_CASE("parse round-trips render for every shape of height <= 3") {
  for (const WordTree& t : shapes_up_to(3)) CHECK(WordTree::parse(t.render()) == t);
}

TEST_CASE("parse rejects malformed words") {
  CHECK_THROWS_AS(WordTree::parse(""), ParseError);
  CHECK_THROWS_AS(WordTree::parse("[x1]"), ParseError);
  CHECK_THROWS_AS(WordTree::parse("[x1,x2"), ParseError);
  CHECK_THROWS_AS(WordTree::parse("[x1,x2]]"), ParseError);
  CHECK_THROWS_AS(WordTree::parse("[x1,x1]"), ParseError);
  CHECK_THROWS_AS(WordTree::parse("[x1,x3]"), ParseError);
  CHECK_THROWS_AS(WordTree::parse("x2"), ParseError);
  CHECK_THROWS_AS(WordTree::parse("[x1,y2]"), ParseError);
  try {
    WordTree::parse("[x1,");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("preorder ids, paths and levels") {
  WordTree w = gamma(3);  // ids: 0 root, 1 [x1,x2], 2 x1, 3 x2, 4 x3
  CHECK(w.vertex_count() == 5);
  CHECK(w.left_child(0) == 1);
  CHECK(w.right_child(0) == 4);
  CHECK(w.left_child(1) == 2);
  CHECK(w.right_child(1) == 3);
  CHECK(w.is_leaf(2));
  CHECK(!w.is_leaf(1));
  CHECK(w.parent(0) == -1);
  CHECK(w.parent(4) == 0);
  CHECK(w.depth(0) == 0);
  CHECK(w.depth(3) == 2);
  CHECK(w.level(0) == 2);
  CHECK(w.level(4) == 1);
  CHECK(w.level(3) == 0);
  CHECK(w.leaves_in_order() == std::vector<int>{2, 3, 4});
  for (int v = 0; v < w.vertex_count(); ++v) CHECK(w.vertex_at(w.path_of(v)) == v);
  VertexPath lr;
  lr.steps = {Step::left, Step::right};
  CHECK(w.vertex_at(lr) == 3);
  CHECK(lr.to_string() == "LR");
  CHECK(VertexPath{}.to_string() == "");
  VertexPath rl;
  rl.steps = {Step::right, Step::left};
  CHECK_THROWS(w.vertex_at(rl));
}

TEST_CASE("subtree and replaced") {
  WordTree w = gamma(4);
  CHECK(w.subtree(1) == gamma(3));
  CHECK(w.subtree(0) == w);
  CHECK(w.replaced(6, gamma(2)) == WordTree::join(gamma(3), gamma(2)));
  CHECK(w.replaced(1, WordTree::leaf()) == gamma(2));
  CHECK(w.render_at(1) == "[[x1,x2],x3]");
  CHECK(w.render_at(6) == "x4");
}

TEST_CASE("dot output is stable") {
  CHECK(gamma(3).dot() ==
        "digraph word {\n"
        "  node [shape=box];\n"
        "  n0 [label=\"[[x1,x2],x3]\"];\n"
        "  n1 [label=\"[x1,x2]\"];\n"
        "  n2 [label=\"x1\"];\n"
        "  n3 [label=\"x2\"];\n"
        "  n4 [label=\"x3\"];\n"
        "  n1 -> n0;\n"
        "  n2 -> n1;\n"
        "  n3 -> n1;\n"
        "  n4 -> n0;\n"
        "}\n");
}

TEST_CASE("all_sections matches the antichain oracle on every shape of height <= 3") {
  for (const WordTree& t : shapes_up_to(3)) {
    for (const Section& s : all_sections(t)) CHECK(is_section(t, s));
    CHECK(section_ids(t) == antichain_oracle(t));
  }
}

TEST_CASE("section counts for the named words") {
  CHECK(all_sections(WordTree::leaf()).size() == 1);
  CHECK(all_sections(gamma(2)).size() == 2);
  CHECK(all_sections(gamma(3)).size() == 3);
  CHECK(all_sections(gamma(4)).size() == 4);
  CHECK(all_sections(delta(2)).size() == 5);
  CHECK(all_sections(delta(3)).size() == 26);
}

TEST_CASE("section_below_level picks level i+1 vertices plus deeper leaves") {
  WordTree w = gamma(4);
  Section s0 = section_below_level(w, 0);
  std::vector<int> ids;
  for (const VertexPath& p : s0.members) ids.push_back(w.vertex_at(p));
  std::sort(ids.begin(), ids.end());
  // level 1 vertices: [x1,x2] (id 2? no: ids 0 root,1 gamma3,2 gamma2...,6 x4)
  // gamma4 preorder: 0=[[..],x4], 1=[[x1,x2],x3], 2=[x1,x2], 3=x1, 4=x2, 5=x3, 6=x4.
  // levels: 0->3, 1->2, 2->1, 5->1, 6->2; leaves x1,x2 at level 0.
  // i=0: level-1 vertices {2, 5} plus leaves at level > 1: {6}.
  CHECK(ids == std::vector<int>{2, 5, 6});
  CHECK(is_section(w, s0));

  Section s1 = section_below_level(w, 1);
  ids.clear();
  for (const VertexPath& p : s1.members) ids.push_back(w.vertex_at(p));
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<int>{1, 6});
  CHECK(is_section(w, s1));

  Section s2 = section_below_level(w, 2);
  CHECK(s2.members.size() == 1);
  CHECK(s2.members[0].is_root());
  CHECK_THROWS(section_below_level(w, 3));
  CHECK_THROWS(section_below_level(w, -1));
}

TEST_CASE("is_section rejects non-sections") {
  WordTree w = gamma(3);
  Section bad;
  bad.members.push_back(VertexPath{});          // root
  bad.members.push_back(w.path_of(4));          // x3: comparable with nothing, but root covers it
  CHECK(!is_section(w, bad));
  Section partial;
  partial.members.push_back(w.path_of(1));      // [x1,x2] alone misses x3
  CHECK(!is_section(w, partial));
}

TEST_CASE("companion is the sibling") {
  WordTree w = gamma(3);
  CHECK(companion(w, w.path_of(1)) == w.path_of(4));
  CHECK(companion(w, w.path_of(2)) == w.path_of(3));
  CHECK_THROWS(companion(w, VertexPath{}));
}

TEST_CASE("extension and constituent relations") {
  CHECK(is_extension(gamma(2), gamma(2)));
  CHECK(is_extension(gamma(3), gamma(2)));
  CHECK(is_extension(delta(2), gamma(2)));
  CHECK(is_extension(delta(2), gamma(3)));  // grow x3 into [x,x]
  CHECK(!is_extension(gamma(2), gamma(3)));
  CHECK(!is_extension(gamma(4), delta(2)));
  CHECK(is_constituent(gamma(2), gamma(4)));
  CHECK(is_constituent(gamma(3), gamma(4)));
  CHECK(!is_constituent(delta(2), gamma(4)));
  CHECK(is_constituent(WordTree::leaf(), gamma(2)));
}

TEST_CASE("max_full_subtree_level and the canonical extension step") {
  CHECK(max_full_subtree_level(gamma(3)) == 1);
  CHECK(max_full_subtree_level(gamma(4)) == 1);
  WordTree w = WordTree::join(delta(2), WordTree::leaf());  // [[..],x5], height 3
  CHECK(max_full_subtree_level(w) == 2);

  // gamma3, i = 1: section {root}; the right child x3 is replaced by the full
  // tree of height 1.
  WordTree grown = extend_at_section_vertex(gamma(3), VertexPath{}, 1);
  CHECK(grown == delta(2));
  CHECK(grown.height() == gamma(3).height());

  // [[delta2], x5], i = 2: the non-full child of the root is x5, replaced by
  // the full tree of height 2.
  WordTree grown2 = extend_at_section_vertex(w, VertexPath{}, 2);
  CHECK(grown2 == delta(3));
}

TEST_CASE("append_word_at grafts [subtree, eta]") {
  WordTree w = gamma(2);
  WordTree at_root = append_word_at(w, VertexPath{}, gamma(2));
  CHECK(at_root == WordTree::join(gamma(2), gamma(2)));
  VertexPath left;
  left.steps = {Step::left};
  WordTree at_leaf = append_word_at(w, left, gamma(2));
  CHECK(at_leaf.render() == "[[x1,[x2,x3]],x4]");
}

TEST_CASE("proper extensions of the same height") {
  ExtensionSet g3 = proper_extensions_same_height(gamma(3));
  REQUIRE(g3.words.size() == 1);
  CHECK(g3.words[0] == delta(2));
  CHECK(!g3.truncated);

  CHECK(proper_extensions_same_height(gamma(2)).words.empty());
  CHECK(proper_extensions_same_height(delta(2)).words.empty());
  CHECK(proper_extensions_same_height(delta(3)).words.empty());

  ExtensionSet g4 = proper_extensions_same_height(gamma(4));
  CHECK(g4.words.size() == 9);
  for (const WordTree& t : g4.words) {
    CHECK(t.height() == 3);
    CHECK(is_extension(t, gamma(4)));
    CHECK(!(t == gamma(4)));
  }
  ExtensionSet trunc = proper_extensions_same_height(gamma(4), 4);
  CHECK(trunc.words.size() == 4);
  CHECK(trunc.truncated);
}

TEST_CASE("substitute_derived grows full trees at the leaves") {
  CHECK(substitute_derived(gamma(2), {0, 0}) == gamma(2));
  CHECK(substitute_derived(gamma(2), {1, 1}) == delta(2));
  CHECK(substitute_derived(gamma(3), {1, 0, 0}).render() == "[[[x1,x2],x3],x4]");
  CHECK(substitute_derived(WordTree::leaf(), {2}) == delta(2));
  CHECK_THROWS(substitute_derived(gamma(2), {0}));
}

TEST_CASE("tuple order") {
  CHECK(tuple_leq({0, 0}, {0, 0}));
  CHECK(tuple_leq({0, 1}, {1, 1}));
  CHECK(!tuple_leq({1, 0}, {0, 1}));
  CHECK(tuple_less({0, 1}, {1, 1}));
  CHECK(!tuple_less({1, 1}, {1, 1}));
}

TEST_CASE("shapes_up_to enumerates each shape once") {
  CHECK(shapes_up_to(0).size() == 1);
  CHECK(shapes_up_to(1).size() == 2);
  CHECK(shapes_up_to(2).size() == 5);
  CHECK(shapes_up_to(3).size() == 26);
  const std::vector<WordTree>& shapes = shapes_up_to(3);
  std::set<std::string> rendered;
  for (const WordTree& t : shapes) {
    CHECK(t.height() <= 3);
    rendered.insert(t.render());
  }
  CHECK(rendered.size() == shapes.size());
  int small = 0;
  for (const WordTree& t : shapes)
    if (t.leaf_count() <= 6) ++small;
  CHECK(small == 21);
  CHECK(&shapes_up_to(3) == &shapes_up_to(3));
}

TEST_CASE("hash agrees on equal shapes") {
  WordTreeHash h;
  CHECK(h(WordTree::parse("[x1,x2,x3]")) == h(gamma(3)));
  CHECK(h(gamma(3)) != h(delta(2)));  // not guaranteed in general, pinned here
}
