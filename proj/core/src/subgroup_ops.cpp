#include "mcw/group_ops.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mcw {

PermGroup generated_subgroup(const PermGroup& host, std::vector<Permutation> gens) {
  for (const Permutation& g : gens)
    if (!host.contains(g)) throw std::invalid_argument("generator lies outside the host group");
  return PermGroup(host.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& host, const std::vector<Permutation>& seed) {
  // Only keep seeds that enlarge the closure built so far; otherwise generator
  // lists snowball across nested commutator calls and chain rebuilds dominate.
  std::vector<Permutation> gens;
  PermGroup closure(host.degree(), {});
  for (const Permutation& s : seed) {
    if (!host.contains(s)) throw std::invalid_argument("seed element lies outside the host group");
    if (s.is_identity() || closure.contains(s)) continue;
    gens.push_back(s);
    closure = PermGroup(host.degree(), gens);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Permutation& g : host.generators()) {
      Permutation c = gens[i].conjugated_by(g);
      if (!closure.contains(c)) {
        gens.push_back(std::move(c));
        closure = PermGroup(host.degree(), gens);
      }
    }
  }
  return closure;
}

PermGroup commutator_subgroup(const PermGroup& host, const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> joined = a.generators();
  joined.insert(joined.end(), b.generators().begin(), b.generators().end());
  PermGroup ab = generated_subgroup(host, std::move(joined));
  std::vector<Permutation> comms;
  for (const Permutation& x : a.generators())
    for (const Permutation& y : b.generators()) {
      Permutation c = Permutation::commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(ab, comms);
}

PermGroup join_subgroups(const PermGroup& host, const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generated_subgroup(host, std::move(gens));
}

PermGroup intersect_subgroups(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in intersection");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> common;
  for (const Permutation& x : small.elements())
    if (large.contains(x)) common.push_back(x);
  return PermGroup(a.degree(), std::move(common));
}

bool is_subgroup_of(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  for (const Permutation& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

bool subgroup_equal(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && is_subgroup_of(a, b);
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (!is_subgroup_of(n, g)) return false;
  for (const Permutation& x : n.generators())
    for (const Permutation& y : g.generators())
      if (!n.contains(x.conjugated_by(y))) return false;
  return true;
}

bool is_abelian(const PermGroup& g) {
  const std::vector<Permutation>& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!Permutation::commutator(gens[i], gens[j]).is_identity()) return false;
  return true;
}

bool centralizes(const PermGroup& a, const PermGroup& b) {
  for (const Permutation& x : a.generators())
    for (const Permutation& y : b.generators())
      if (!Permutation::commutator(x, y).is_identity()) return false;
  return true;
}

std::vector<Permutation> conjugacy_class_reps(const PermGroup& g) {
  const std::vector<Permutation>& elems = g.elements();
  std::vector<char> visited(elems.size(), 0);
  auto index_of = [&](const Permutation& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    assert(it != elems.end() && *it == p);
    return static_cast<std::size_t>(it - elems.begin());
  };
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (visited[i]) continue;
    reps.push_back(elems[i]);  // sorted scan makes this the least class member
    std::vector<std::size_t> stack{i};
    visited[i] = 1;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      for (const Permutation& y : g.generators()) {
        std::size_t k = index_of(elems[j].conjugated_by(y));
        if (!visited[k]) {
          visited[k] = 1;
          stack.push_back(k);
        }
      }
    }
  }
  return reps;
}

std::vector<Permutation> conjugation_closure(const PermGroup& g, std::vector<Permutation> seed) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<Permutation> out = seed;
  auto known = [&](const Permutation& p) {
    return std::binary_search(out.begin(), out.end(), p);
  };
  std::vector<Permutation> work = out;
  while (!work.empty()) {
    Permutation x = std::move(work.back());
    work.pop_back();
    for (const Permutation& y : g.generators()) {
      Permutation c = x.conjugated_by(y);
      if (!known(c)) {
        out.insert(std::lower_bound(out.begin(), out.end(), c), c);
        work.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace mcw
