#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mcw/verbal.hpp"

namespace mcw {

namespace {

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Permutation perm_power(const Permutation& x, std::uint64_t n) {
  Permutation acc(x.degree());
  Permutation base = x;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

// Bottom-up value sweep. Disjoint indeterminates across subtrees let each
// subtree's value set be computed independently and combined pairwise.
std::vector<Permutation> sweep(const WordTree& w, int v,
                               const std::vector<std::vector<Permutation>>& leaf_sets,
                               const std::vector<int>& leaf_ordinal, std::uint64_t budget,
                               std::uint64_t& spent) {
  if (w.is_leaf(v)) {
    std::vector<Permutation> out = leaf_sets[static_cast<std::size_t>(leaf_ordinal[static_cast<std::size_t>(v)])];
    sort_unique(out);
    return out;
  }
  std::vector<Permutation> left = sweep(w, w.left_child(v), leaf_sets, leaf_ordinal, budget, spent);
  std::vector<Permutation> right = sweep(w, w.right_child(v), leaf_sets, leaf_ordinal, budget, spent);
  std::uint64_t cost = static_cast<std::uint64_t>(left.size()) * right.size();
  if (cost > budget - spent) throw CapExceeded("value sweep beyond evaluation budget");
  spent += cost;
  std::vector<Permutation> rinv;
  rinv.reserve(right.size());
  for (const Permutation& b : right) rinv.push_back(b.inverse());
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cost, 1u << 20)));
  for (const Permutation& a : left) {
    Permutation ainv = a.inverse();
    for (std::size_t j = 0; j < right.size(); ++j) out.push_back(ainv * rinv[j] * a * right[j]);
  }
  sort_unique(out);
  return out;
}

std::vector<int> leaf_ordinals(const WordTree& w) {
  std::vector<int> ord(static_cast<std::size_t>(w.vertex_count()), -1);
  int next = 0;
  for (int v : w.leaves_in_order()) ord[static_cast<std::size_t>(v)] = next++;
  return ord;
}

}  // namespace

Permutation evaluate_word(const WordTree& w, const std::vector<Permutation>& args) {
  if (static_cast<int>(args.size()) != w.leaf_count())
    throw std::invalid_argument("argument count does not match the word's leaf count");
  std::vector<int> ord = leaf_ordinals(w);
  struct Rec {
    const WordTree& w;
    const std::vector<Permutation>& args;
    const std::vector<int>& ord;
    Permutation run(int v) const {
      if (w.is_leaf(v)) return args[static_cast<std::size_t>(ord[static_cast<std::size_t>(v)])];
      return Permutation::commutator(run(w.left_child(v)), run(w.right_child(v)));
    }
  };
  return Rec{w, args, ord}.run(0);
}

ValueSet values_from_leaf_sets(const PermGroup& g, const WordTree& w,
                               const std::vector<std::vector<Permutation>>& leaf_sets,
                               std::uint64_t budget) {
  if (static_cast<int>(leaf_sets.size()) != w.leaf_count())
    throw std::invalid_argument("leaf set count does not match the word's leaf count");
  for (const auto& ls : leaf_sets)
    for (const Permutation& x : ls)
      if (x.degree() != g.degree()) throw std::invalid_argument("leaf set element of wrong degree");
  std::uint64_t spent = 0;
  ValueSet out;
  out.word_label = w.render();
  out.elements = sweep(w, 0, leaf_sets, leaf_ordinals(w), budget, spent);
  return out;
}

ValueSet values_from_set(const PermGroup& g, const std::vector<Permutation>& xs, const WordTree& w,
                         std::uint64_t budget) {
  for (const Permutation& x : xs)
    if (!g.contains(x)) throw std::invalid_argument("value arguments must lie in the host group");
  std::vector<std::vector<Permutation>> leaf_sets(static_cast<std::size_t>(w.leaf_count()), xs);
  return values_from_leaf_sets(g, w, leaf_sets, budget);
}

ValueSet w_values(const PermGroup& g, const WordTree& w, const EvalOptions& opt) {
  if (!opt.sampled) {
    ValueSet out = values_from_leaf_sets(
        g, w, std::vector<std::vector<Permutation>>(static_cast<std::size_t>(w.leaf_count()), g.elements()),
        opt.budget);
    return out;
  }
  Lcg64 rng{opt.seed};
  std::vector<Permutation> args(static_cast<std::size_t>(w.leaf_count()), Permutation(g.degree()));
  ValueSet out;
  out.word_label = w.render();
  out.exhaustive = false;
  out.seed = opt.seed;
  out.draws = opt.draws;
  for (std::uint64_t d = 0; d < opt.draws; ++d) {
    for (auto& a : args) a = g.random_element(rng);
    out.elements.push_back(evaluate_word(w, args));
  }
  sort_unique(out.elements);
  return out;
}

std::vector<Permutation> commutator_closure(const PermGroup& g, std::vector<Permutation> xs) {
  for (const Permutation& x : xs)
    if (!g.contains(x)) throw std::invalid_argument("closure arguments must lie in the host group");
  sort_unique(xs);
  for (;;) {
    std::vector<Permutation> inv;
    inv.reserve(xs.size());
    for (const Permutation& x : xs) inv.push_back(x.inverse());
    std::vector<Permutation> fresh;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        Permutation c = inv[i] * inv[j] * xs[i] * xs[j];
        if (!std::binary_search(xs.begin(), xs.end(), c)) fresh.push_back(std::move(c));
      }
    }
    if (fresh.empty()) return xs;
    xs.insert(xs.end(), fresh.begin(), fresh.end());
    sort_unique(xs);
  }
}

PermGroup subgroup_from_values(const PermGroup& g, const std::vector<Permutation>& values) {
  std::vector<Permutation> gens;
  PermGroup sub = PermGroup::trivial(g.degree());
  for (const Permutation& v : values) {
    if (sub.contains(v)) continue;
    gens.push_back(v);
    sub = PermGroup(g.degree(), gens);
  }
  return sub;
}

VerbalResult verbal_subgroup(const PermGroup& g, const WordTree& w, const EvalOptions& opt) {
  if (!opt.sampled) {
    ValueSet vs = w_values(g, w, opt);
    return {subgroup_from_values(g, vs.elements), true};
  }
  ValueSet vs = w_values(g, w, opt);
  std::vector<Permutation> gens;
  for (const Permutation& v : vs.elements)
    if (!v.is_identity()) gens.push_back(v);
  PermGroup sub = normal_closure(g, gens);
  // Second, independent sample as a plausibility test; values it surfaces
  // that the closure misses are folded in.
  EvalOptions second = opt;
  second.seed = opt.seed + 1;
  for (const Permutation& v : w_values(g, w, second).elements) {
    if (sub.contains(v)) continue;
    gens.push_back(v);
    sub = normal_closure(g, gens);
  }
  return {std::move(sub), false};
}

VerbalContext::VerbalContext(PermGroup g, std::uint64_t budget) : group_(std::move(g)), budget_(budget) {
  derived_terms_ = structure_series(group_, SeriesKind::derived).terms;
}

const PermGroup& VerbalContext::derived_term(int k) const {
  if (k < 0) throw std::invalid_argument("derived term index must be nonnegative");
  return derived_terms_[static_cast<std::size_t>(std::min(k, derived_cap()))];
}

const std::vector<Permutation>& VerbalContext::derived_term_elements(int k) const {
  return derived_term(k).elements();
}

const std::vector<Permutation>& VerbalContext::derived_value_set(int k) {
  if (k < 0) throw std::invalid_argument("derived word index must be nonnegative");
  k = std::min(k, derived_cap());
  auto it = value_sets_.find(k);
  if (it != value_sets_.end()) return it->second;
  ValueSet vs = w_values(group_, derived_word(k), EvalOptions{false, budget_, 0, 0});
  return value_sets_.emplace(k, std::move(vs.elements)).first->second;
}

PermGroup tuple_verbal(VerbalContext& ctx, const WordTree& w, const TupleIndex& i, std::uint64_t budget) {
  if (static_cast<int>(i.size()) != w.leaf_count())
    throw std::invalid_argument("tuple length does not match the word's leaf count");
  std::vector<std::vector<Permutation>> by_terms;
  std::vector<std::vector<Permutation>> by_values;
  by_terms.reserve(i.size());
  by_values.reserve(i.size());
  for (int k : i) {
    by_terms.push_back(ctx.derived_term_elements(k));
    by_values.push_back(ctx.derived_value_set(k));
  }
  const PermGroup& g = ctx.group();
  PermGroup direct = subgroup_from_values(g, values_from_leaf_sets(g, w, by_terms, budget).elements);
  PermGroup extended = subgroup_from_values(g, values_from_leaf_sets(g, w, by_values, budget).elements);
  if (!subgroup_equal(direct, extended))
    throw std::logic_error("tuple verbal routes disagree between derived terms and derived values");
  return direct;
}

PermGroup tuple_verbal(const PermGroup& g, const WordTree& w, const TupleIndex& i, std::uint64_t budget) {
  VerbalContext ctx(g, budget);
  return tuple_verbal(ctx, w, i, budget);
}

PermGroup tuple_verbal_plus(VerbalContext& ctx, const WordTree& w, const TupleIndex& i,
                            std::uint64_t budget) {
  if (static_cast<int>(i.size()) != w.leaf_count())
    throw std::invalid_argument("tuple length does not match the word's leaf count");
  PermGroup acc = PermGroup::trivial(ctx.group().degree());
  for (std::size_t k = 0; k < i.size(); ++k) {
    TupleIndex succ = i;
    ++succ[k];
    acc = join_subgroups(ctx.group(), acc, tuple_verbal(ctx, w, succ, budget));
  }
  return acc;
}

PermGroup tuple_verbal_plus(const PermGroup& g, const WordTree& w, const TupleIndex& i,
                            std::uint64_t budget) {
  VerbalContext ctx(g, budget);
  return tuple_verbal_plus(ctx, w, i, budget);
}

PPartition p_partition(const PermGroup& g, const ValueSet& values, std::uint64_t p) {
  if (!values.exhaustive) throw std::invalid_argument("p-partition needs an exhaustive value set");
  if (!is_prime(p)) throw std::invalid_argument("p-partition needs a prime");
  PPartition out;
  out.x.word_label = values.word_label;
  out.y.word_label = values.word_label;
  for (const Permutation& v : values.elements) {
    std::uint64_t ord = v.order();
    while (ord % p == 0) ord /= p;
    if (ord == 1) out.x.elements.push_back(v);
  }
  sort_unique(out.x.elements);
  out.y.elements = conjugation_closure(g, out.x.elements);
  return out;
}

ValueSet power_values(const PermGroup& g, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("power word needs n >= 1");
  ValueSet out;
  out.word_label = "x^" + std::to_string(n);
  out.elements.reserve(g.elements().size());
  for (const Permutation& x : g.elements()) out.elements.push_back(perm_power(x, n));
  sort_unique(out.elements);
  return out;
}

PermGroup power_verbal(const PermGroup& g, std::uint64_t n) {
  return subgroup_from_values(g, power_values(g, n).elements);
}

}  // namespace mcw
