#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcw/group_ops.hpp"
#include "mcw/perm_group.hpp"
#include "mcw/verbal.hpp"
#include "mcw/word_ops.hpp"
#include "mcw/word_tree.hpp"

namespace mcw {

enum class Verdict { pass, fail, skipped };

std::string verdict_name(Verdict v);

// One verification outcome. Inputs and quantities are ordered key-value rows
// so that serialized reports are stable.
struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> quantities;
  Verdict verdict = Verdict::pass;
  std::string reason;   // populated when skipped
  std::string witness;  // populated when failing
  std::int64_t millis = 0;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
  void input(const std::string& key, const std::string& value) { inputs.emplace_back(key, value); }
  void quantity(const std::string& key, const std::string& value) { quantities.emplace_back(key, value); }
  void quantity(const std::string& key, std::uint64_t value) { quantities.emplace_back(key, std::to_string(value)); }
};

// Verbal subgroups generated from commutator-closed generating sets: a
// commutator-closed X with <X> = G satisfies <X_w> = w(G).
CheckReport check_goodgen(const PermGroup& g, const std::vector<Permutation>& xs, const WordTree& w,
                          const EvalOptions& opt = {});

// Focal-style generation: P meet w(G) is generated by the w-values inside P,
// for soluble hosts. Nonsoluble hosts are skipped unless the exploratory flag
// asks for the identity test to be recorded as data.
CheckReport check_focal(const PermGroup& g, const WordTree& w, std::uint64_t p,
                        bool nonsoluble_exploratory = false, const EvalOptions& opt = {});

enum class RankMode { nilpotent, metanilpotent };

// r = max rank over lattice subgroups H in the mode's class with
// H = <H meet G_w>. Nilpotent mode asserts rank(w(G)) <= r+1 for soluble or
// simple hosts; metanilpotent mode only records the pair.
CheckReport check_rank_bound(const PermGroup& g, const WordTree& w, RankMode mode,
                             std::uint64_t cap = kDefaultLatticeCap, const EvalOptions& opt = {});

// Fitting height against 2*rank + 1 on soluble hosts.
CheckReport check_fitting_bound(const PermGroup& g, std::uint64_t cap = kDefaultLatticeCap);

// [w(G), eta(G)] lies under the join of the section extensions pi_v.
CheckReport check_section_lemma(const PermGroup& g, const WordTree& w, const WordTree& eta,
                                const Section& s, const EvalOptions& opt = {});

// Every tuple i in the truncated poset with w(i+) = 1 and w(i) != 1 has w(i)
// abelian.
CheckReport check_abelian_wi(const PermGroup& g, const WordTree& w, const EvalOptions& opt = {});

// YN meet PN = (Y meet P)N for conjugation-closed sets Y of p-elements.
CheckReport check_pset(const PermGroup& g, const PermGroup& n, std::uint64_t p,
                       const std::vector<Permutation>& y);

// T = <[a,b]> equals [H,K] whenever the conjugate-containment hypothesis on
// the generating sets holds.
CheckReport check_lemma_T(const PermGroup& g, const std::vector<Permutation>& a_set,
                          const std::vector<Permutation>& b_set);

// A normal subgroup meeting the w-values trivially centralizes w(G).
CheckReport check_centralizer_fact(const PermGroup& g, const WordTree& w, const PermGroup& n,
                                   const EvalOptions& opt = {});

struct SupplementResult {
  PermGroup supplement;
  CheckReport report;
};

// Minimal-order H with HN = G; verifies H meet N lies in the Frattini
// subgroup of H.
SupplementResult find_frattini_supplement(const PermGroup& g, const PermGroup& n,
                                          std::uint64_t cap = kDefaultLatticeCap);

struct FrobeniusResult {
  PermGroup group;
  CheckReport report;
};

// The power-word counterexample family: a Frobenius group F x| K on p^m
// points with F^n = 1, K^n = K, G^n = G, every nilpotent subgroup generated
// by n-th powers cyclic, and rank at least m.
FrobeniusResult frobenius_counterexample(std::uint64_t p, int m, std::uint64_t n);

std::string report_to_text(const CheckReport& r, bool with_millis = false);

}  // namespace mcw
