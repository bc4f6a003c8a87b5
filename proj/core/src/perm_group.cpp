#include "mcw/perm_group.hpp"

#include <algorithm>
#include <cassert>

namespace mcw {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw std::invalid_argument("group degree must be positive");
  for (const Permutation& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  for (const Permutation& g : generators_) add_element(g);
  verify_chain();
  order_ = 1;
  for (const Level& lv : levels_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
#ifndef NDEBUG
  for (const Permutation& g : generators_) assert(contains(g));
#endif
}

std::vector<const Permutation*> PermGroup::gens_for_level(int level) const {
  std::vector<const Permutation*> out;
  for (std::size_t l = static_cast<std::size_t>(level); l < levels_.size(); ++l)
    for (const Permutation& g : levels_[l].gens) out.push_back(&g);
  return out;
}

void PermGroup::rebuild_orbit(int level) {
  Level& lv = levels_[static_cast<std::size_t>(level)];
  lv.orbit.clear();
  lv.transversal.assign(static_cast<std::size_t>(degree_), Permutation());
  lv.orbit.push_back(lv.base_point);
  lv.transversal[static_cast<std::size_t>(lv.base_point)] = Permutation(degree_);
  std::vector<const Permutation*> gens = gens_for_level(level);
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    int x = lv.orbit[i];
    for (const Permutation* g : gens) {
      int y = g->image(x);
      if (lv.transversal[static_cast<std::size_t>(y)].degree() == 0) {
        lv.transversal[static_cast<std::size_t>(y)] = lv.transversal[static_cast<std::size_t>(x)] * (*g);
        lv.orbit.push_back(y);
      }
    }
  }
}

PermGroup::SiftResult PermGroup::sift_from(Permutation p, int start) const {
  for (std::size_t l = static_cast<std::size_t>(start); l < levels_.size(); ++l) {
    if (p.is_identity()) return {std::move(p), static_cast<int>(levels_.size())};
    const Level& lv = levels_[l];
    int x = p.image(lv.base_point);
    if (x == lv.base_point) continue;
    const Permutation& t = lv.transversal[static_cast<std::size_t>(x)];
    if (t.degree() == 0) return {std::move(p), static_cast<int>(l)};
    p = p * t.inverse();
  }
  return {std::move(p), static_cast<int>(levels_.size())};
}

PermGroup::SiftResult PermGroup::sift(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("sift: degree mismatch");
  return sift_from(p, 0);
}

void PermGroup::add_element(const Permutation& g) {
  SiftResult r = sift_from(g, 0);
  if (r.residue.is_identity()) return;
  int level = r.level;
  if (level == static_cast<int>(levels_.size())) {
    // The residue fixes every existing base point; open a new level.
    Level lv;
    lv.base_point = r.residue.smallest_moved_point();
    levels_.push_back(std::move(lv));
    level = static_cast<int>(levels_.size()) - 1;
  }
  levels_[static_cast<std::size_t>(level)].gens.push_back(std::move(r.residue));
  for (int l = level; l >= 0; --l) rebuild_orbit(l);
}

void PermGroup::verify_chain() {
  // Fixpoint over Schreier generators: whenever one fails to sift, add its
  // residue as a strong generator and start over. Deterministic because the
  // scan order is fixed.
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (std::size_t l = 0; l < levels_.size() && !dirty; ++l) {
      const Level& lv = levels_[l];
      std::vector<const Permutation*> gens = gens_for_level(static_cast<int>(l));
      for (std::size_t i = 0; i < lv.orbit.size() && !dirty; ++i) {
        int x = lv.orbit[i];
        const Permutation& tx = lv.transversal[static_cast<std::size_t>(x)];
        for (const Permutation* g : gens) {
          int y = g->image(x);
          Permutation schreier = tx * (*g) * lv.transversal[static_cast<std::size_t>(y)].inverse();
          SiftResult r = sift_from(std::move(schreier), static_cast<int>(l) + 1);
          if (!r.residue.is_identity()) {
            int level = r.level;
            if (level == static_cast<int>(levels_.size())) {
              Level fresh;
              fresh.base_point = r.residue.smallest_moved_point();
              levels_.push_back(std::move(fresh));
              level = static_cast<int>(levels_.size()) - 1;
            }
            levels_[static_cast<std::size_t>(level)].gens.push_back(std::move(r.residue));
            for (int k = level; k >= 0; --k) rebuild_orbit(k);
            dirty = true;
            break;
          }
        }
      }
    }
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift_from(p, 0).residue.is_identity();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const Level& lv : levels_) out.push_back(lv.base_point);
  return out;
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::scoped_lock lock(*cache_mutex_);
  if (element_cache_) return *element_cache_;
  if (order_ > kElementEnumerationCap)
    throw CapExceeded("element enumeration beyond cap: order " + std::to_string(order_));
  auto elems = std::make_shared<std::vector<Permutation>>();
  elems->reserve(static_cast<std::size_t>(order_));
  elems->push_back(Permutation(degree_));
  // Every element factors as t_(k-1) * ... * t_0 over the levels' transversals.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    std::vector<Permutation> next;
    next.reserve(elems->size() * lv.orbit.size());
    for (const Permutation& deep : *elems)
      for (int x : lv.orbit) next.push_back(deep * lv.transversal[static_cast<std::size_t>(x)]);
    *elems = std::move(next);
  }
  assert(elems->size() == order_);
  std::sort(elems->begin(), elems->end());
  element_cache_ = std::move(elems);
  return *element_cache_;
}

Permutation PermGroup::random_element(Lcg64& rng) const {
  Permutation out(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    int x = lv.orbit[static_cast<std::size_t>(rng.below(lv.orbit.size()))];
    out = out * lv.transversal[static_cast<std::size_t>(x)];
  }
  return out;
}

}  // namespace mcw
