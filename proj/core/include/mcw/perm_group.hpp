#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "mcw/permutation.hpp"

namespace mcw {

// Deterministic 64-bit linear congruential generator (Knuth's MMIX constants:
// multiplier 6364136223846793005, increment 1442695040888963407). Used for the
// sampled evaluation modes; fixing the seed fixes every draw.
struct Lcg64 {
  std::uint64_t state = 0;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Thrown when an operation would exceed an enumeration cap or budget; callers
// that cannot raise the cap fall back to sampled modes or skip.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kElementEnumerationCap = 100000;

// Finite permutation group on {0, ..., degree-1} with a stabilizer chain.
// The base is chosen deterministically (smallest moved point first), so
// identical generator lists give identical chains, orders and element lists.
// Instances are immutable after construction and safe to share across threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;

  // All elements, sorted by image array; cached. Throws CapExceeded when the
  // order is beyond kElementEnumerationCap.
  const std::vector<Permutation>& elements() const;

  // Uniformly random element driven by the caller's generator state.
  Permutation random_element(Lcg64& rng) const;

  std::vector<int> base() const;

  struct SiftResult {
    Permutation residue;
    int level;  // first level the residue could not pass; #levels when it ran out
  };
  SiftResult sift(const Permutation& p) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;         // strong generators assigned here
    std::vector<int> orbit;                // discovery order, orbit[0] = base_point
    std::vector<Permutation> transversal;  // by point; degree 0 marks "not in orbit"
  };

  void add_element(const Permutation& g);
  void rebuild_orbit(int level);
  void verify_chain();
  std::vector<const Permutation*> gens_for_level(int level) const;
  SiftResult sift_from(Permutation p, int start) const;

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;

  mutable std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<const std::vector<Permutation>> element_cache_;
};

}  // namespace mcw
