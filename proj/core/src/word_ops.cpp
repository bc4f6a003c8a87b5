#include "mcw/word_ops.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace mcw {

bool tuple_leq(const TupleIndex& a, const TupleIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool tuple_less(const TupleIndex& a, const TupleIndex& b) {
  return tuple_leq(a, b) && a != b;
}

bool is_section(const WordTree& t, const Section& s) {
  std::vector<char> member(static_cast<std::size_t>(t.vertex_count()), 0);
  for (const VertexPath& p : s.members) {
    int v;
    try {
      v = t.vertex_at(p);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (member[static_cast<std::size_t>(v)]) return false;
    member[static_cast<std::size_t>(v)] = 1;
  }
  // Every leaf must have exactly one ancestor-or-self in the set; that gives
  // both incomparability and maximality.
  for (int v : t.leaves_in_order()) {
    int hits = 0;
    for (int u = v; u >= 0; u = t.parent(u))
      if (member[static_cast<std::size_t>(u)]) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

namespace {

Section section_from_vertices(const WordTree& t, std::vector<int> vertices) {
  Section s;
  s.members.reserve(vertices.size());
  for (int v : vertices) s.members.push_back(t.path_of(v));
  std::sort(s.members.begin(), s.members.end());
  return s;
}

void collect_sections(const WordTree& t, int v, std::vector<std::vector<int>>& out) {
  out.push_back({v});
  if (t.is_leaf(v)) return;
  std::vector<std::vector<int>> ls, rs;
  collect_sections(t, t.left_child(v), ls);
  collect_sections(t, t.right_child(v), rs);
  for (const auto& a : ls)
    for (const auto& b : rs) {
      std::vector<int> joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      out.push_back(std::move(joined));
    }
}

}  // namespace

std::vector<Section> all_sections(const WordTree& t) {
  std::vector<std::vector<int>> raw;
  collect_sections(t, 0, raw);
  std::vector<Section> out;
  out.reserve(raw.size());
  for (auto& vs : raw) out.push_back(section_from_vertices(t, std::move(vs)));
  std::sort(out.begin(), out.end(), [](const Section& a, const Section& b) { return a.members < b.members; });
  return out;
}

Section section_below_level(const WordTree& t, int level) {
  if (level < 0 || level >= t.height())
    throw std::invalid_argument("cut level must satisfy 0 <= i < height");
  std::vector<int> vs;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.level(v) == level + 1)
      vs.push_back(v);
    else if (t.is_leaf(v) && t.level(v) > level + 1)
      vs.push_back(v);
  }
  Section s = section_from_vertices(t, std::move(vs));
  assert(is_section(t, s));
  return s;
}

VertexPath companion(const WordTree& t, const VertexPath& p) {
  if (p.is_root()) throw std::invalid_argument("the root has no companion");
  t.vertex_at(p);  // validates the path
  VertexPath out = p;
  out.steps.back() = (out.steps.back() == Step::left) ? Step::right : Step::left;
  return out;
}

WordTree lower_central_word(int n) {
  if (n < 1) throw std::invalid_argument("lower central words need n >= 1");
  WordTree acc = WordTree::leaf();
  for (int k = 2; k <= n; ++k) acc = WordTree::join(acc, WordTree::leaf());
  return acc;
}

WordTree derived_word(int n) {
  if (n < 0) throw std::invalid_argument("derived words need n >= 0");
  WordTree acc = WordTree::leaf();
  for (int k = 1; k <= n; ++k) acc = WordTree::join(acc, acc);
  return acc;
}

bool is_extension(const WordTree& phi, const WordTree& w) {
  struct Rec {
    const WordTree& phi;
    const WordTree& w;
    bool run(int pv, int wv) const {
      if (w.is_leaf(wv)) return true;
      if (phi.is_leaf(pv)) return false;
      return run(phi.left_child(pv), w.left_child(wv)) && run(phi.right_child(pv), w.right_child(wv));
    }
  };
  return Rec{phi, w}.run(0, 0);
}

bool is_constituent(const WordTree& alpha, const WordTree& w) {
  for (int v = 0; v < w.vertex_count(); ++v)
    if (w.subtree(v) == alpha) return true;
  return false;
}

namespace {

// Per-vertex subtree height and vertex count; children follow their parent in
// preorder, so a reverse sweep sees children first.
void subtree_stats(const WordTree& t, std::vector<int>& height, std::vector<long long>& count) {
  const int n = t.vertex_count();
  height.assign(static_cast<std::size_t>(n), 0);
  count.assign(static_cast<std::size_t>(n), 1);
  for (int v = n - 1; v >= 0; --v) {
    if (t.is_leaf(v)) continue;
    int l = t.left_child(v), r = t.right_child(v);
    height[static_cast<std::size_t>(v)] =
        1 + std::max(height[static_cast<std::size_t>(l)], height[static_cast<std::size_t>(r)]);
    count[static_cast<std::size_t>(v)] = 1 + count[static_cast<std::size_t>(l)] + count[static_cast<std::size_t>(r)];
  }
}

bool subtree_is_full(const std::vector<int>& height, const std::vector<long long>& count, int v, int h) {
  return height[static_cast<std::size_t>(v)] == h &&
         count[static_cast<std::size_t>(v)] == (2ll << h) - 1;
}

}  // namespace

int max_full_subtree_level(const WordTree& w) {
  if (w.defect() == 0) throw std::invalid_argument("the word is already a full tree");
  assert(w.height() >= 1);
  std::vector<int> sh;
  std::vector<long long> sc;
  subtree_stats(w, sh, sc);
  int best = -1;
  for (int v = 0; v < w.vertex_count(); ++v) {
    int lev = w.level(v);
    if (lev > best && subtree_is_full(sh, sc, v, lev)) best = lev;
  }
  // Some vertex at distance height-1 has two leaf children, so best >= 1, and
  // best = height would mean defect 0.
  assert(best >= 1 && best < w.height());
  return best;
}

WordTree extend_at_section_vertex(const WordTree& w, const VertexPath& vp, int level) {
  if (max_full_subtree_level(w) != level)
    throw std::invalid_argument("level must be the maximal full-subtree level of the word");
  Section cut = section_below_level(w, level);
  if (std::find(cut.members.begin(), cut.members.end(), vp) == cut.members.end())
    throw std::invalid_argument("vertex is not in the section cutting below the given level");

  const int v = w.vertex_at(vp);
  const WordTree full = derived_word(level);
  if (w.is_leaf(v)) return w.replaced(v, full);

  // v sits at level+1; replace the child that is not yet the full tree of
  // height `level`, preferring the right child when both qualify.
  int r = w.right_child(v), l = w.left_child(v);
  std::vector<int> sh;
  std::vector<long long> sc;
  subtree_stats(w, sh, sc);
  int target;
  if (!subtree_is_full(sh, sc, r, level))
    target = r;
  else if (!subtree_is_full(sh, sc, l, level))
    target = l;
  else
    throw std::logic_error("both children already carry the full tree; contradicts level maximality");
  return w.replaced(target, full);
}

WordTree append_word_at(const WordTree& w, const VertexPath& vp, const WordTree& eta) {
  const int v = w.vertex_at(vp);
  return w.replaced(v, WordTree::join(w.subtree(v), eta));
}

// All shapes of height <= k, deterministic order, memoized. Not safe for
// concurrent first calls; corpus and extension enumeration use it from
// single-threaded construction paths.
const std::vector<WordTree>& shapes_up_to(int k) {
  static std::map<int, std::vector<WordTree>> memo;
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  std::vector<WordTree> out;
  out.push_back(WordTree::leaf());
  if (k > 0) {
    const std::vector<WordTree>& inner = shapes_up_to(k - 1);
    for (const WordTree& a : inner)
      for (const WordTree& b : inner) out.push_back(WordTree::join(a, b));
  }
  return memo.emplace(k, std::move(out)).first->second;
}

ExtensionSet proper_extensions_same_height(const WordTree& w, std::size_t budget) {
  const int h = w.height();
  std::vector<int> leaves = w.leaves_in_order();
  const std::size_t n = leaves.size();
  std::vector<const std::vector<WordTree>*> choices(n);
  std::vector<int> depths(n);
  for (std::size_t j = 0; j < n; ++j) {
    depths[j] = w.depth(leaves[j]);
    choices[j] = &shapes_up_to(h - depths[j]);
  }

  ExtensionSet out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    bool all_leaves = true;
    int got_height = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const WordTree& s = (*choices[j])[pick[j]];
      if (s.vertex_count() > 1) all_leaves = false;
      got_height = std::max(got_height, depths[j] + s.height());
    }
    if (!all_leaves && got_height == h) {
      if (out.words.size() == budget) {
        out.truncated = true;
        return out;
      }
      // Rebuild w with each leaf replaced by its pick; replace from the last
      // leaf backwards so earlier vertex ids stay valid.
      WordTree ext = w;
      for (std::size_t j = n; j-- > 0;) {
        const WordTree& s = (*choices[j])[pick[j]];
        if (s.vertex_count() > 1) ext = ext.replaced(ext.leaves_in_order()[j], s);
      }
      out.words.push_back(std::move(ext));
    }
    // Odometer, last leaf fastest.
    std::size_t j = n;
    while (j-- > 0) {
      if (++pick[j] < choices[j]->size()) break;
      pick[j] = 0;
      if (j == 0) return out;
    }
  }
}

WordTree substitute_derived(const WordTree& w, const TupleIndex& idx) {
  if (idx.size() != static_cast<std::size_t>(w.leaf_count()))
    throw std::invalid_argument("tuple length must equal the number of indeterminates");
  for (int e : idx)
    if (e < 0) throw std::invalid_argument("tuple entries must be non-negative");
  WordTree out = w;
  for (std::size_t j = idx.size(); j-- > 0;) {
    if (idx[j] == 0) continue;
    out = out.replaced(out.leaves_in_order()[j], derived_word(idx[j]));
  }
  return out;
}

}  // namespace mcw
