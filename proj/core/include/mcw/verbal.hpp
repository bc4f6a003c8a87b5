#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcw/group_ops.hpp"
#include "mcw/perm_group.hpp"
#include "mcw/word_ops.hpp"
#include "mcw/word_tree.hpp"

namespace mcw {

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

// Word values of a host group. Exhaustive sets are exactly the value sets and
// are closed under conjugation; sampled sets are flagged with their draw plan.
struct ValueSet {
  std::string word_label;
  std::vector<Permutation> elements;  // sorted, duplicate-free
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;
};

struct EvalOptions {
  bool sampled = false;
  std::uint64_t budget = kDefaultEvalBudget;
  std::uint64_t seed = 1;
  std::uint64_t draws = 512;
};

Permutation evaluate_word(const WordTree& w, const std::vector<Permutation>& args);

ValueSet w_values(const PermGroup& g, const WordTree& w, const EvalOptions& opt = {});

// X_w: values with every argument drawn from one subset of the host.
ValueSet values_from_set(const PermGroup& g, const std::vector<Permutation>& xs, const WordTree& w,
                         std::uint64_t budget = kDefaultEvalBudget);

// Values with leaf-specific argument sets, one set per leaf in traversal order.
ValueSet values_from_leaf_sets(const PermGroup& g, const WordTree& w,
                               const std::vector<std::vector<Permutation>>& leaf_sets,
                               std::uint64_t budget = kDefaultEvalBudget);

std::vector<Permutation> commutator_closure(const PermGroup& g, std::vector<Permutation> xs);

// The subgroup generated by a set of values, keeping the generator list short.
PermGroup subgroup_from_values(const PermGroup& g, const std::vector<Permutation>& values);

struct VerbalResult {
  PermGroup subgroup;
  bool verified;
};

VerbalResult verbal_subgroup(const PermGroup& g, const WordTree& w, const EvalOptions& opt = {});

// Per-group caches for repeated verbal computations: derived terms and the
// value sets of the derived words, both indexed with saturation at the point
// where the derived series stabilizes.
class VerbalContext {
 public:
  explicit VerbalContext(PermGroup g, std::uint64_t budget = kDefaultEvalBudget);
  const PermGroup& group() const { return group_; }
  int derived_cap() const { return static_cast<int>(derived_terms_.size()) - 1; }
  const PermGroup& derived_term(int k) const;
  const std::vector<Permutation>& derived_term_elements(int k) const;
  const std::vector<Permutation>& derived_value_set(int k);

 private:
  PermGroup group_;
  std::uint64_t budget_;
  std::vector<PermGroup> derived_terms_;
  std::map<int, std::vector<Permutation>> value_sets_;
};

// w(i): generated by values with the k-th argument running over the i_k-th
// derived subgroup. Computed twice, over derived-term elements and over
// derived-word value sets (the extension route), and cross-compared.
PermGroup tuple_verbal(VerbalContext& ctx, const WordTree& w, const TupleIndex& i,
                       std::uint64_t budget = kDefaultEvalBudget);
PermGroup tuple_verbal(const PermGroup& g, const WordTree& w, const TupleIndex& i,
                       std::uint64_t budget = kDefaultEvalBudget);

// w(i+): join of w(j) over all j > i componentwise; reduces exactly to the
// coordinate successors since tuple verbal subgroups are antitone.
PermGroup tuple_verbal_plus(VerbalContext& ctx, const WordTree& w, const TupleIndex& i,
                            std::uint64_t budget = kDefaultEvalBudget);
PermGroup tuple_verbal_plus(const PermGroup& g, const WordTree& w, const TupleIndex& i,
                            std::uint64_t budget = kDefaultEvalBudget);

struct PPartition {
  ValueSet x;  // members of p-power order
  ValueSet y;  // conjugation closure of x in the host
};

PPartition p_partition(const PermGroup& g, const ValueSet& values, std::uint64_t p);

ValueSet power_values(const PermGroup& g, std::uint64_t n);
PermGroup power_verbal(const PermGroup& g, std::uint64_t n);

}  // namespace mcw
