#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mcw {

// Permutation of {0, ..., degree-1}, stored as an image array.
// Products compose left to right: (a * b) applies a first, then b,
// so commutators are [a,b] = a^-1 b^-1 a b and x^g = g^-1 x g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);                 // identity
  explicit Permutation(std::vector<int> images);    // validated bijection

  // Cycle notation uses 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation from_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation conjugated_by(const Permutation& g) const;  // g^-1 * this * g
  static Permutation commutator(const Permutation& a, const Permutation& b);

  std::uint64_t order() const;
  int fixed_point_count() const;
  int smallest_moved_point() const;  // -1 for the identity

  // Embeddings used by direct products: pad with fixed points, or shift all
  // moved points by an offset inside a larger degree.
  Permutation extended(int new_degree) const;
  Permutation shifted(int offset, int new_degree) const;

  std::string cycle_string() const;  // canonical: cycles sorted by least point

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Semicolon-separated list of cycle-notation permutations.
std::vector<Permutation> parse_perm_list(int degree, const std::string& text);

}  // namespace mcw
