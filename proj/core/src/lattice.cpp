#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "mcw/group_ops.hpp"

namespace mcw {

namespace {

std::vector<Permutation> cyclic_elements(const Permutation& x) {
  std::vector<Permutation> out{Permutation(x.degree())};
  Permutation cur = x;
  while (!cur.is_identity()) {
    out.push_back(cur);
    cur = cur * x;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CyclicSeed {
  Permutation gen;
  std::vector<Permutation> elements;
};

// One seed per distinct cyclic subgroup, generated by its least generator.
std::vector<CyclicSeed> cyclic_seeds(const PermGroup& g) {
  std::vector<CyclicSeed> seeds;
  std::map<std::vector<Permutation>, bool> seen;
  for (const Permutation& x : g.elements()) {
    if (x.is_identity()) continue;
    std::vector<Permutation> cyc = cyclic_elements(x);
    if (seen.emplace(cyc, true).second) seeds.push_back({x, std::move(cyc)});
  }
  return seeds;
}

bool sorted_contains_all(const std::vector<Permutation>& haystack, const std::vector<Permutation>& needles) {
  for (const Permutation& n : needles)
    if (!std::binary_search(haystack.begin(), haystack.end(), n)) return false;
  return true;
}

}  // namespace

std::vector<PermGroup> subgroup_lattice(const PermGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw CapExceeded("subgroup lattice beyond cap");
  std::vector<CyclicSeed> seeds = cyclic_seeds(g);

  struct Node {
    PermGroup sub;
    std::vector<Permutation> elements;
  };
  std::vector<Node> nodes;
  std::map<std::vector<Permutation>, std::size_t> index;
  auto add = [&](PermGroup sub) {
    std::vector<Permutation> elems = sub.elements();
    if (index.emplace(elems, nodes.size()).second) nodes.push_back({std::move(sub), std::move(elems)});
  };
  add(PermGroup::trivial(g.degree()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const CyclicSeed& seed : seeds) {
      if (sorted_contains_all(nodes[i].elements, seed.elements)) continue;
      std::vector<Permutation> gens = nodes[i].sub.generators();
      gens.push_back(seed.gen);
      add(PermGroup(g.degree(), std::move(gens)));
    }
  }

  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  std::vector<PermGroup> out;
  out.reserve(nodes.size());
  for (Node& n : nodes) out.push_back(std::move(n.sub));
  return out;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  struct Node {
    PermGroup sub;
    std::vector<Permutation> elements;
  };
  std::vector<Node> nodes;
  std::map<std::vector<Permutation>, bool> seen;
  auto add = [&](PermGroup sub) {
    std::vector<Permutation> elems = sub.elements();
    if (seen.emplace(elems, true).second) nodes.push_back({std::move(sub), std::move(elems)});
  };
  add(PermGroup::trivial(g.degree()));
  for (const Permutation& rep : conjugacy_class_reps(g)) {
    if (rep.is_identity()) continue;
    add(normal_closure(g, {rep}));
  }
  // Normal closures of class representatives generate the whole normal
  // subgroup lattice under joins.
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(join_subgroups(g, nodes[i].sub, nodes[j].sub));

  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  std::vector<PermGroup> out;
  out.reserve(nodes.size());
  for (Node& n : nodes) out.push_back(std::move(n.sub));
  return out;
}

namespace {

bool is_prime_power_order(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

int p_group_min_generators(const PermGroup& h, std::uint64_t p) {
  // Burnside basis: d = log_p [H : Phi(H)] with Phi = H' H^p.
  std::vector<Permutation> gens = commutator_subgroup(h, h, h).generators();
  for (const Permutation& x : h.elements()) {
    Permutation xp = x;
    for (std::uint64_t i = 1; i < p; ++i) xp = xp * x;
    gens.push_back(std::move(xp));
  }
  PermGroup frat(h.degree(), std::move(gens));
  std::uint64_t idx = h.order() / frat.order();
  int d = 0;
  while (idx > 1) {
    idx /= p;
    ++d;
  }
  return d;
}

// Elements of p-power order in an abelian group form its Sylow p-subgroup.
PermGroup abelian_sylow(const PermGroup& h, std::uint64_t p) {
  std::vector<Permutation> gens;
  for (const Permutation& x : h.elements())
    if (!x.is_identity() && is_prime_power_order(x.order(), p)) gens.push_back(x);
  return PermGroup(h.degree(), std::move(gens));
}

bool extend_to_generators(const PermGroup& h, const PermGroup& base,
                          const std::vector<Permutation>& pool, std::size_t start, int remaining) {
  if (remaining == 0) return base.order() == h.order();
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (base.contains(pool[i])) continue;
    std::vector<Permutation> gens = base.generators();
    gens.push_back(pool[i]);
    PermGroup ext(h.degree(), std::move(gens));
    if (extend_to_generators(h, ext, pool, i + 1, remaining - 1)) return true;
  }
  return false;
}

}  // namespace

int min_generators(const PermGroup& h) {
  if (h.is_trivial()) return 0;
  std::vector<std::uint64_t> primes = prime_divisors(h.order());
  if (primes.size() == 1) return p_group_min_generators(h, primes[0]);
  if (is_abelian(h)) {
    int d = 0;
    for (std::uint64_t p : primes) d = std::max(d, p_group_min_generators(abelian_sylow(h, p), p));
    return d;
  }
  for (const Permutation& x : h.elements())
    if (x.order() == h.order()) return 1;

  // Elements ordered by descending order then image array; the first pick may
  // be confined to class representatives since conjugate sets generate alike.
  std::vector<Permutation> pool = h.elements();
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [](const Permutation& x) { return x.is_identity(); }),
             pool.end());
  std::stable_sort(pool.begin(), pool.end(), [](const Permutation& a, const Permutation& b) {
    return a.order() > b.order();
  });
  std::vector<Permutation> firsts = conjugacy_class_reps(h);
  firsts.erase(std::remove_if(firsts.begin(), firsts.end(),
                              [](const Permutation& x) { return x.is_identity(); }),
               firsts.end());
  std::stable_sort(firsts.begin(), firsts.end(), [](const Permutation& a, const Permutation& b) {
    return a.order() > b.order();
  });
  for (int k = 2;; ++k) {
    for (const Permutation& first : firsts) {
      PermGroup base(h.degree(), {first});
      if (extend_to_generators(h, base, pool, 0, k - 1)) return k;
    }
    assert(k <= 64);
  }
}

int rank_of_group(const PermGroup& g, std::uint64_t cap) {
  int best = 0;
  for (const PermGroup& h : subgroup_lattice(g, cap)) best = std::max(best, min_generators(h));
  return best;
}

}  // namespace mcw
