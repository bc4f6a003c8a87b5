#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mcw/group_ops.hpp"

namespace mcw {

bool is_soluble(const PermGroup& g) {
  PermGroup cur = g;
  for (;;) {
    PermGroup next = commutator_subgroup(g, cur, cur);
    if (next.order() == cur.order()) return cur.is_trivial();
    cur = std::move(next);
  }
}

bool is_nilpotent(const PermGroup& g) {
  for (std::uint64_t p : prime_divisors(g.order()))
    if (!is_normal_in(sylow_subgroup(g, p), g)) return false;
  return true;
}

bool is_metanilpotent(const PermGroup& g) {
  PermGroup fit = fitting_subgroup(g);
  if (fit.is_trivial()) return g.is_trivial();
  return is_nilpotent(Quotient(g, fit).group());
}

namespace {

// Conjugates of a subgroup under the host generators, deduplicated.
std::vector<PermGroup> subgroup_conjugates(const PermGroup& g, const PermGroup& h) {
  std::vector<PermGroup> out{h};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Permutation& y : g.generators()) {
      std::vector<Permutation> gens;
      gens.reserve(out[i].generators().size());
      for (const Permutation& s : out[i].generators()) gens.push_back(s.conjugated_by(y));
      PermGroup conj(g.degree(), std::move(gens));
      bool known = false;
      for (const PermGroup& k : out)
        if (subgroup_equal(k, conj)) {
          known = true;
          break;
        }
      if (!known) out.push_back(std::move(conj));
    }
  }
  return out;
}

PermGroup p_core(const PermGroup& g, std::uint64_t p) {
  PermGroup core = sylow_subgroup(g, p);
  for (const PermGroup& conj : subgroup_conjugates(g, core)) core = intersect_subgroups(core, conj);
  return core;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup needs a prime");
  std::uint64_t target = 1;
  for (std::uint64_t n = g.order(); n % p == 0; n /= p) target *= p;
  PermGroup sub = PermGroup::trivial(g.degree());
  while (sub.order() < target) {
    // Any p-subgroup below full p-part extends inside its normalizer, so a
    // deterministic scan for the least usable p-element always succeeds.
    const Permutation* pick = nullptr;
    for (const Permutation& x : g.elements()) {
      if (x.is_identity() || sub.contains(x)) continue;
      std::uint64_t ord = x.order();
      bool ppower = true;
      while (ord > 1) {
        if (ord % p != 0) {
          ppower = false;
          break;
        }
        ord /= p;
      }
      if (!ppower) continue;
      bool normalizes = true;
      for (const Permutation& s : sub.generators())
        if (!sub.contains(s.conjugated_by(x))) {
          normalizes = false;
          break;
        }
      if (normalizes) {
        pick = &x;
        break;
      }
    }
    if (pick == nullptr) throw std::logic_error("sylow growth stalled before the full p-part");
    std::vector<Permutation> gens = sub.generators();
    gens.push_back(*pick);
    sub = PermGroup(g.degree(), std::move(gens));
  }
  return sub;
}

PermGroup fitting_subgroup(const PermGroup& g) {
  std::vector<Permutation> gens;
  for (std::uint64_t p : prime_divisors(g.order())) {
    PermGroup core = p_core(g, p);
    gens.insert(gens.end(), core.generators().begin(), core.generators().end());
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup soluble_radical(const PermGroup& g) {
  if (is_soluble(g)) return g;
  std::vector<Permutation> gens;
  for (const Permutation& rep : conjugacy_class_reps(g)) {
    if (rep.is_identity()) continue;
    PermGroup ncl = normal_closure(g, {rep});
    if (is_soluble(ncl))
      gens.insert(gens.end(), ncl.generators().begin(), ncl.generators().end());
  }
  return PermGroup(g.degree(), std::move(gens));
}

// ----- quotients -------------------------------------------------------------

Quotient::Quotient(const PermGroup& g, const PermGroup& n) : host_(g), kernel_(n) {
  if (!is_normal_in(n, g)) throw std::invalid_argument("quotient needs a normal subgroup of the host");
  if (n.is_trivial()) {
    identity_projection_ = true;
    group_ = g;
    return;
  }
  const std::uint64_t index = g.order() / n.order();
  if (index > kElementEnumerationCap) throw CapExceeded("coset enumeration beyond cap");
  reps_.push_back(Permutation(g.degree()));
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const Permutation& s : g.generators()) {
      Permutation x = reps_[i] * s;
      if (coset_of(x) < 0) reps_.push_back(std::move(x));
    }
  }
  assert(reps_.size() == index);
  std::vector<Permutation> proj_gens;
  const int m = static_cast<int>(reps_.size());
  for (const Permutation& s : g.generators()) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = coset_of(reps_[static_cast<std::size_t>(i)] * s);
    proj_gens.push_back(Permutation(std::move(img)));
  }
  group_ = PermGroup(m, std::move(proj_gens));
  assert(group_.order() == index);
}

int Quotient::coset_of(const Permutation& x) const {
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (kernel_.contains(x * reps_[i].inverse())) return static_cast<int>(i);
  return -1;
}

Permutation Quotient::project(const Permutation& x) const {
  if (!host_.contains(x)) throw std::invalid_argument("projecting an element outside the host");
  if (identity_projection_) return x;
  const int m = static_cast<int>(reps_.size());
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int j = coset_of(reps_[static_cast<std::size_t>(i)] * x);
    assert(j >= 0);
    img[static_cast<std::size_t>(i)] = j;
  }
  return Permutation(std::move(img));
}

PermGroup Quotient::project_subgroup(const PermGroup& h) const {
  if (identity_projection_) return h;
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const Permutation& s : h.generators()) gens.push_back(project(s));
  return PermGroup(group_.degree(), std::move(gens));
}

PermGroup Quotient::preimage(const PermGroup& hbar) const {
  if (identity_projection_) return hbar;
  if (!is_subgroup_of(hbar, group_)) throw std::invalid_argument("preimage needs a subgroup of the quotient");
  std::vector<Permutation> gens = kernel_.generators();
  for (const Permutation& r : reps_)
    if (hbar.contains(project(r))) gens.push_back(r);
  return PermGroup(host_.degree(), std::move(gens));
}

// ----- series ---------------------------------------------------------------

namespace {

std::vector<PermGroup> t_layers(const PermGroup& g);

SeriesReport derived_series(const PermGroup& g) {
  SeriesReport out{SeriesKind::derived, {g}, false, 0};
  for (;;) {
    const PermGroup& last = out.terms.back();
    PermGroup next = commutator_subgroup(g, last, last);
    if (next.order() == last.order()) break;
    out.terms.push_back(std::move(next));
  }
  out.terminal = out.terms.back().is_trivial();
  out.length = out.terminal ? static_cast<int>(out.terms.size()) - 1 : -1;
  return out;
}

SeriesReport lower_central_series(const PermGroup& g) {
  SeriesReport out{SeriesKind::lower_central, {g}, false, 0};
  for (;;) {
    const PermGroup& last = out.terms.back();
    PermGroup next = commutator_subgroup(g, last, g);
    if (next.order() == last.order()) break;
    out.terms.push_back(std::move(next));
  }
  out.terminal = out.terms.back().is_trivial();
  out.length = out.terminal ? static_cast<int>(out.terms.size()) - 1 : -1;
  return out;
}

SeriesReport upper_fitting_series(const PermGroup& g) {
  SeriesReport out{SeriesKind::upper_fitting, {}, false, 0};
  PermGroup cur = PermGroup::trivial(g.degree());
  for (;;) {
    if (cur.order() == g.order()) {
      out.terminal = true;
      break;
    }
    Quotient q(g, cur);
    PermGroup fit_bar = fitting_subgroup(q.group());
    PermGroup next = q.preimage(fit_bar);
    if (next.order() == cur.order()) break;  // stalled below G
    out.terms.push_back(next);
    cur = std::move(next);
  }
  out.length = out.terminal ? static_cast<int>(out.terms.size()) : -1;
  return out;
}

SeriesReport nonsoluble_layer_series(const PermGroup& g) {
  SeriesReport out{SeriesKind::nonsoluble_layers, t_layers(g), true, 0};
  for (const PermGroup& t : out.terms)
    if (!t.is_trivial()) ++out.length;
  return out;
}

}  // namespace

SeriesReport structure_series(const PermGroup& g, SeriesKind kind) {
  switch (kind) {
    case SeriesKind::derived:
      return derived_series(g);
    case SeriesKind::lower_central:
      return lower_central_series(g);
    case SeriesKind::upper_fitting:
      return upper_fitting_series(g);
    case SeriesKind::nonsoluble_layers:
      return nonsoluble_layer_series(g);
  }
  throw std::logic_error("unreachable series kind");
}

GroupClass classify(const PermGroup& g) {
  GroupClass out;
  out.soluble = is_soluble(g);
  out.nilpotent = is_nilpotent(g);
  out.metanilpotent = is_metanilpotent(g);
  out.perfect = commutator_subgroup(g, g, g).order() == g.order();
  if (g.order() > 1) {
    out.simple = true;
    for (const Permutation& rep : conjugacy_class_reps(g)) {
      if (rep.is_identity()) continue;
      if (normal_closure(g, {rep}).order() != g.order()) {
        out.simple = false;
        break;
      }
    }
  }
  return out;
}

int nonsoluble_length(const PermGroup& g) {
  if (is_soluble(g)) return 0;
  PermGroup radical = soluble_radical(g);
  Quotient qr(g, radical);
  const PermGroup& bar = qr.group();
  // Socle of the radical-free quotient: join of the minimal normal subgroups,
  // which all arise as normal closures of single class representatives.
  std::vector<PermGroup> ncls;
  for (const Permutation& rep : conjugacy_class_reps(bar)) {
    if (rep.is_identity()) continue;
    PermGroup n = normal_closure(bar, {rep});
    bool known = false;
    for (const PermGroup& m : ncls)
      if (subgroup_equal(m, n)) {
        known = true;
        break;
      }
    if (!known) ncls.push_back(std::move(n));
  }
  PermGroup socle = PermGroup::trivial(bar.degree());
  for (const PermGroup& n : ncls) {
    bool minimal = true;
    for (const PermGroup& m : ncls)
      if (m.order() < n.order() && is_subgroup_of(m, n)) {
        minimal = false;
        break;
      }
    if (minimal) socle = join_subgroups(bar, socle, n);
  }
  assert(!socle.is_trivial());
  PermGroup s = qr.preimage(socle);
  return 1 + nonsoluble_length(Quotient(g, s).group());
}

namespace {

// T(H): intersection of the normal subgroups N with lambda(H/N) <= 1.
PermGroup t_subgroup(const PermGroup& h) {
  PermGroup t = h;
  for (const PermGroup& n : normal_subgroups(h)) {
    if (nonsoluble_length(Quotient(h, n).group()) <= 1) t = intersect_subgroups(t, n);
  }
  return t;
}

// T_1 = perfect core, T_{i+1} = T(T_i); ends with the first trivial term.
std::vector<PermGroup> t_layers(const PermGroup& g) {
  SeriesReport ds = derived_series(g);
  std::vector<PermGroup> out{ds.terms.back()};
  while (!out.back().is_trivial()) out.push_back(t_subgroup(out.back()));
  return out;
}

}  // namespace

PermGroup frattini_subgroup(const PermGroup& g, std::uint64_t cap) {
  std::vector<PermGroup> lattice = subgroup_lattice(g, cap);
  PermGroup frat = g;
  for (const PermGroup& h : lattice) {
    if (h.order() == g.order()) continue;
    bool maximal = true;
    for (const PermGroup& k : lattice) {
      if (k.order() == g.order() || k.order() <= h.order()) continue;
      if (is_subgroup_of(h, k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) frat = intersect_subgroups(frat, h);
  }
  return frat;
}

}  // namespace mcw
