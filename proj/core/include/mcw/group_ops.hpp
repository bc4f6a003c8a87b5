#pragma once

#include <cstdint>
#include <vector>

#include "mcw/perm_group.hpp"

namespace mcw {

inline constexpr std::uint64_t kDefaultLatticeCap = 384;

// ----- subgroup algebra ---------------------------------------------------
// Subgroups are PermGroups on the host's degree; operations validate that
// their inputs actually lie in the host where the result depends on it.

PermGroup generated_subgroup(const PermGroup& host, std::vector<Permutation> gens);
PermGroup normal_closure(const PermGroup& host, const std::vector<Permutation>& seed);
// Normal closure of {[a,b] : a, b generators} inside <A, B>.
PermGroup commutator_subgroup(const PermGroup& host, const PermGroup& a, const PermGroup& b);
PermGroup join_subgroups(const PermGroup& host, const PermGroup& a, const PermGroup& b);
// Element-wise; both factors must be below the element enumeration cap.
PermGroup intersect_subgroups(const PermGroup& a, const PermGroup& b);

bool is_subgroup_of(const PermGroup& a, const PermGroup& b);
bool subgroup_equal(const PermGroup& a, const PermGroup& b);
bool is_normal_in(const PermGroup& n, const PermGroup& g);
bool is_abelian(const PermGroup& g);
// [A, B] = 1, tested on generator pairs.
bool centralizes(const PermGroup& a, const PermGroup& b);

// One representative per conjugacy class, each the least element of its class,
// listed in sorted order.
std::vector<Permutation> conjugacy_class_reps(const PermGroup& g);
// Closure of `seed` under conjugation by g's generators, sorted.
std::vector<Permutation> conjugation_closure(const PermGroup& g, std::vector<Permutation> seed);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

// ----- series, classification, named subgroups ------------------------------

enum class SeriesKind { derived, lower_central, upper_fitting, nonsoluble_layers };

struct SeriesReport {
  SeriesKind kind;
  std::vector<PermGroup> terms;
  bool terminal = false;  // reached the natural endpoint (trivial group or G)
  int length = 0;         // derived length / nilpotency class / Fitting height / lambda
};

SeriesReport structure_series(const PermGroup& g, SeriesKind kind);

struct GroupClass {
  bool nilpotent = false;
  bool soluble = false;
  bool metanilpotent = false;
  bool perfect = false;
  bool simple = false;
};

GroupClass classify(const PermGroup& g);

bool is_soluble(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
bool is_metanilpotent(const PermGroup& g);

// Deterministic Sylow p-subgroup via normalizer growth; trivial when p does
// not divide the order. p must be prime.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

// Join of the p-cores over all primes dividing |G|.
PermGroup fitting_subgroup(const PermGroup& g);

// Largest normal soluble subgroup.
PermGroup soluble_radical(const PermGroup& g);

// lambda(G): 0 for soluble groups, else 1 + lambda(G/S) where S is the
// preimage of the socle of G/R(G).
int nonsoluble_length(const PermGroup& g);

// Intersection of the maximal subgroups; needs the subgroup lattice.
PermGroup frattini_subgroup(const PermGroup& g, std::uint64_t cap = kDefaultLatticeCap);

// ----- quotients -------------------------------------------------------------

// Action of G on the right cosets Ng by right multiplication. The kernel is
// N itself, so the image is G/N.
class Quotient {
 public:
  Quotient(const PermGroup& g, const PermGroup& n);  // n must be normal in g

  const PermGroup& group() const { return group_; }
  Permutation project(const Permutation& x) const;
  PermGroup project_subgroup(const PermGroup& h) const;
  // Full preimage of a subgroup of the quotient.
  PermGroup preimage(const PermGroup& hbar) const;

 private:
  int coset_of(const Permutation& x) const;
  PermGroup host_;
  PermGroup kernel_;
  std::vector<Permutation> reps_;
  PermGroup group_;
  bool identity_projection_ = false;  // N trivial: the quotient is G itself
};

// ----- lattice, generation rank ----------------------------------------------

// Every subgroup, each reported once, sorted by (order, element list). Built
// bottom-up by closing under joins with cyclic subgroups. Throws CapExceeded
// when |G| > cap.
std::vector<PermGroup> subgroup_lattice(const PermGroup& g, std::uint64_t cap = kDefaultLatticeCap);

// All normal subgroups (join closure of the class-representative normal
// closures), sorted by (order, element list).
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

// Smallest size of a generating set. Uses the Frattini quotient for p-groups
// and Sylow reduction for abelian groups; otherwise searches subsets in a
// deterministic order (element order descending, first entry up to conjugacy).
int min_generators(const PermGroup& h);

// max over the lattice of min_generators.
int rank_of_group(const PermGroup& g, std::uint64_t cap = kDefaultLatticeCap);

}  // namespace mcw
