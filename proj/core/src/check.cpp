#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mcw/catalog.hpp"
#include "mcw/check.hpp"

namespace mcw {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  void finish(CheckReport& r) const {
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                   .count();
  }
};

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string group_label(const PermGroup& g) {
  return "order " + std::to_string(g.order()) + " on " + std::to_string(g.degree()) + " points";
}

// Least element of a \ b, both sorted.
const Permutation* first_missing(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  for (const Permutation& x : a)
    if (!std::binary_search(b.begin(), b.end(), x)) return &x;
  return nullptr;
}

std::string subgroup_difference_witness(const PermGroup& lhs, const PermGroup& rhs) {
  const std::vector<Permutation>& a = lhs.elements();
  const std::vector<Permutation>& b = rhs.elements();
  if (const Permutation* x = first_missing(a, b)) return x->cycle_string() + " in lhs only";
  if (const Permutation* x = first_missing(b, a)) return x->cycle_string() + " in rhs only";
  return "";
}

bool is_p_power_order(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::string tuple_label(const TupleIndex& i) {
  std::string out = "(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(i[k]);
  }
  return out + ")";
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "unknown";
}

CheckReport check_goodgen(const PermGroup& g, const std::vector<Permutation>& xs, const WordTree& w,
                          const EvalOptions& opt) {
  Timer t;
  CheckReport r;
  r.check = "goodgen";
  r.input("group", group_label(g));
  r.input("word", w.render());
  r.input("set_size", std::to_string(xs.size()));
  try {
    std::vector<Permutation> sorted = xs;
    sort_unique(sorted);
    std::vector<Permutation> closed = commutator_closure(g, sorted);
    if (closed != sorted) {
      r.verdict = Verdict::skipped;
      r.reason = "X is not commutator-closed";
      t.finish(r);
      return r;
    }
    PermGroup span(g.degree(), sorted);
    if (span.order() != g.order()) {
      r.verdict = Verdict::skipped;
      r.reason = "X does not generate G";
      t.finish(r);
      return r;
    }
    PermGroup lhs = subgroup_from_values(g, values_from_set(g, sorted, w, opt.budget).elements);
    PermGroup rhs = verbal_subgroup(g, w, opt).subgroup;
    r.quantity("generated_order", lhs.order());
    r.quantity("verbal_order", rhs.order());
    if (subgroup_equal(lhs, rhs)) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      r.witness = subgroup_difference_witness(lhs, rhs);
    }
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

CheckReport check_focal(const PermGroup& g, const WordTree& w, std::uint64_t p,
                        bool nonsoluble_exploratory, const EvalOptions& opt) {
  if (!is_prime(p)) throw std::invalid_argument("focal check needs a prime");
  Timer t;
  CheckReport r;
  r.check = "focal";
  r.input("group", group_label(g));
  r.input("word", w.render());
  r.input("prime", std::to_string(p));
  try {
    bool soluble = is_soluble(g);
    if (!soluble && !nonsoluble_exploratory) {
      r.verdict = Verdict::skipped;
      r.reason = "group is not soluble";
      t.finish(r);
      return r;
    }
    PermGroup sylow = sylow_subgroup(g, p);
    ValueSet values = w_values(g, w, opt);
    PermGroup verbal = subgroup_from_values(g, values.elements);
    PermGroup lhs = intersect_subgroups(sylow, verbal);
    std::vector<Permutation> inside;
    for (const Permutation& v : values.elements)
      if (sylow.contains(v)) inside.push_back(v);
    PermGroup rhs = subgroup_from_values(g, inside);
    r.quantity("sylow_order", sylow.order());
    r.quantity("verbal_order", verbal.order());
    r.quantity("intersection_order", lhs.order());
    r.quantity("generated_order", rhs.order());
    bool equal = subgroup_equal(lhs, rhs);
    if (!soluble) {
      r.verdict = Verdict::skipped;
      r.reason = "exploratory: group is not soluble";
      r.quantity("exploratory_equal", equal ? "true" : "false");
    } else if (equal) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      r.witness = subgroup_difference_witness(lhs, rhs);
    }
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

CheckReport check_rank_bound(const PermGroup& g, const WordTree& w, RankMode mode, std::uint64_t cap,
                             const EvalOptions& opt) {
  Timer t;
  CheckReport r;
  r.check = mode == RankMode::nilpotent ? "rank" : "rank-metanilpotent";
  r.input("group", group_label(g));
  r.input("word", w.render());
  r.input("mode", mode == RankMode::nilpotent ? "nilpotent" : "metanilpotent");
  try {
    if (mode == RankMode::nilpotent && !is_soluble(g) && !classify(g).simple) {
      r.verdict = Verdict::skipped;
      r.reason = "group is neither soluble nor simple";
      t.finish(r);
      return r;
    }
    std::vector<PermGroup> lattice = subgroup_lattice(g, cap);
    std::vector<int> d_of(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) d_of[i] = min_generators(lattice[i]);
    auto rank_below = [&](const PermGroup& h) {
      int best = 0;
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (h.order() % lattice[i].order() != 0) continue;
        if (is_subgroup_of(lattice[i], h)) best = std::max(best, d_of[i]);
      }
      return best;
    };
    ValueSet values = w_values(g, w, opt);
    PermGroup verbal = subgroup_from_values(g, values.elements);
    int r_max = 0;
    std::uint64_t qualifying = 0;
    for (const PermGroup& h : lattice) {
      bool in_class = mode == RankMode::nilpotent ? is_nilpotent(h) : is_metanilpotent(h);
      if (!in_class) continue;
      std::vector<Permutation> inside;
      for (const Permutation& v : values.elements)
        if (h.contains(v)) inside.push_back(v);
      if (subgroup_from_values(g, inside).order() != h.order()) continue;
      ++qualifying;
      r_max = std::max(r_max, rank_below(h));
    }
    int verbal_rank = rank_below(verbal);
    r.quantity("lattice_size", lattice.size());
    r.quantity("qualifying_subgroups", qualifying);
    r.quantity("r", static_cast<std::uint64_t>(r_max));
    r.quantity("verbal_order", verbal.order());
    r.quantity("verbal_rank", static_cast<std::uint64_t>(verbal_rank));
    if (mode == RankMode::metanilpotent) {
      // The bound for metanilpotent generation is not explicit; record data.
      r.quantity("asserted", "none");
      r.verdict = Verdict::pass;
    } else if (verbal_rank <= r_max + 1) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      r.witness = "rank " + std::to_string(verbal_rank) + " exceeds r+1 = " + std::to_string(r_max + 1);
    }
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

CheckReport check_fitting_bound(const PermGroup& g, std::uint64_t cap) {
  Timer t;
  CheckReport r;
  r.check = "fitting";
  r.input("group", group_label(g));
  try {
    if (!is_soluble(g)) {
      r.verdict = Verdict::skipped;
      r.reason = "group is not soluble";
      t.finish(r);
      return r;
    }
    SeriesReport series = structure_series(g, SeriesKind::upper_fitting);
    assert(series.terminal);
    int rank = rank_of_group(g, cap);
    r.quantity("fitting_height", static_cast<std::uint64_t>(series.length));
    r.quantity("rank", static_cast<std::uint64_t>(rank));
    r.quantity("bound", static_cast<std::uint64_t>(2 * rank + 1));
    if (series.length <= 2 * rank + 1) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      r.witness = "height " + std::to_string(series.length) + " exceeds " + std::to_string(2 * rank + 1);
    }
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

CheckReport check_section_lemma(const PermGroup& g, const WordTree& w, const WordTree& eta,
                                const Section& s, const EvalOptions& opt) {
  if (!is_section(w, s)) throw std::invalid_argument("vertex set is not a section of the word tree");
  Timer t;
  CheckReport r;
  r.check = "section";
  r.input("group", group_label(g));
  r.input("word", w.render());
  r.input("eta", eta.render());
  {
    std::string members;
    for (std::size_t k = 0; k < s.members.size(); ++k) {
      if (k) members += " ";
      std::string path = s.members[k].to_string();
      members += path.empty() ? "root" : path;
    }
    r.input("section", members);
  }
  try {
    PermGroup wg = verbal_subgroup(g, w, opt).subgroup;
    PermGroup etag = verbal_subgroup(g, eta, opt).subgroup;
    PermGroup lhs = commutator_subgroup(g, wg, etag);
    PermGroup rhs = PermGroup::trivial(g.degree());
    for (const VertexPath& v : s.members) {
      WordTree pi = append_word_at(w, v, eta);
      rhs = join_subgroups(g, rhs, verbal_subgroup(g, pi, opt).subgroup);
    }
    r.quantity("w_order", wg.order());
    r.quantity("eta_order", etag.order());
    r.quantity("commutator_order", lhs.order());
    r.quantity("join_order", rhs.order());
    if (is_subgroup_of(lhs, rhs)) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      const Permutation* x = first_missing(lhs.elements(), rhs.elements());
      r.witness = x ? x->cycle_string() + " outside the join" : "containment fails";
    }
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

CheckReport check_abelian_wi(const PermGroup& g, const WordTree& w, const EvalOptions& opt) {
  Timer t;
  CheckReport r;
  r.check = "abelian-wi";
  r.input("group", group_label(g));
  r.input("word", w.render());
  try {
    VerbalContext ctx(g, opt.budget);
    const int cap = ctx.derived_cap();
    const int n = w.leaf_count();
    std::map<TupleIndex, PermGroup> memo;
    auto subgroup_at = [&](TupleIndex i) -> const PermGroup& {
      for (int& c : i) c = std::min(c, cap);
      auto it = memo.find(i);
      if (it == memo.end()) it = memo.emplace(i, tuple_verbal(ctx, w, i, opt.budget)).first;
      return it->second;
    };
    std::uint64_t qualifying = 0;
    std::string first_qualifying;
    TupleIndex i(static_cast<std::size_t>(n), 0);
    for (;;) {
      const PermGroup& wi = subgroup_at(i);
      if (!wi.is_trivial()) {
        PermGroup plus = PermGroup::trivial(g.degree());
        for (int k = 0; k < n && plus.is_trivial(); ++k) {
          TupleIndex succ = i;
          ++succ[static_cast<std::size_t>(k)];
          plus = join_subgroups(g, plus, subgroup_at(succ));
        }
        if (plus.is_trivial()) {
          ++qualifying;
          if (first_qualifying.empty()) first_qualifying = tuple_label(i);
          if (!is_abelian(wi)) {
            r.verdict = Verdict::fail;
            r.witness = "w" + tuple_label(i) + " of order " + std::to_string(wi.order()) + " is not abelian";
            break;
          }
        }
      }
      int k = n - 1;
      while (k >= 0 && i[static_cast<std::size_t>(k)] == cap) {
        i[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
      ++i[static_cast<std::size_t>(k)];
    }
    r.quantity("derived_cap", static_cast<std::uint64_t>(cap));
    r.quantity("tuples_scanned", memo.size());
    r.quantity("qualifying_tuples", qualifying);
    if (!first_qualifying.empty()) r.quantity("first_qualifying", first_qualifying);
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

CheckReport check_pset(const PermGroup& g, const PermGroup& n, std::uint64_t p,
                       const std::vector<Permutation>& y) {
  if (!is_prime(p)) throw std::invalid_argument("p-set check needs a prime");
  Timer t;
  CheckReport r;
  r.check = "pset";
  r.input("group", group_label(g));
  r.input("normal_order", std::to_string(n.order()));
  r.input("prime", std::to_string(p));
  r.input("set_size", std::to_string(y.size()));
  if (!is_subgroup_of(n, g) || !is_normal_in(n, g)) {
    r.verdict = Verdict::skipped;
    r.reason = "N is not normal in G";
    t.finish(r);
    return r;
  }
  std::vector<Permutation> ys = y;
  sort_unique(ys);
  for (const Permutation& v : ys) {
    if (!g.contains(v) || !is_p_power_order(v.order(), p)) {
      r.verdict = Verdict::skipped;
      r.reason = "Y is not a set of p-elements of G";
      t.finish(r);
      return r;
    }
  }
  if (conjugation_closure(g, ys) != ys) {
    r.verdict = Verdict::skipped;
    r.reason = "Y is not closed under conjugation";
    t.finish(r);
    return r;
  }
  PermGroup sylow = sylow_subgroup(g, p);
  const std::vector<Permutation>& nelems = n.elements();
  auto times_n = [&](const std::vector<Permutation>& xs) {
    std::vector<Permutation> out;
    out.reserve(xs.size() * nelems.size());
    for (const Permutation& a : xs)
      for (const Permutation& b : nelems) out.push_back(a * b);
    sort_unique(out);
    return out;
  };
  std::vector<Permutation> yn = times_n(ys);
  std::vector<Permutation> pn = times_n(sylow.elements());
  std::vector<Permutation> lhs;
  std::set_intersection(yn.begin(), yn.end(), pn.begin(), pn.end(), std::back_inserter(lhs));
  std::vector<Permutation> yp;
  for (const Permutation& v : ys)
    if (sylow.contains(v)) yp.push_back(v);
  std::vector<Permutation> rhs = times_n(yp);
  r.quantity("sylow_order", sylow.order());
  r.quantity("lhs_size", lhs.size());
  r.quantity("rhs_size", rhs.size());
  if (lhs == rhs) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    if (const Permutation* x = first_missing(lhs, rhs))
      r.witness = x->cycle_string() + " in YN meet PN only";
    else if (const Permutation* x2 = first_missing(rhs, lhs))
      r.witness = x2->cycle_string() + " in (Y meet P)N only";
  }
  t.finish(r);
  return r;
}

CheckReport check_lemma_T(const PermGroup& g, const std::vector<Permutation>& a_set,
                          const std::vector<Permutation>& b_set) {
  Timer t;
  CheckReport r;
  r.check = "lemma-t";
  r.input("group", group_label(g));
  r.input("a_size", std::to_string(a_set.size()));
  r.input("b_size", std::to_string(b_set.size()));
  if (a_set.empty() || b_set.empty()) throw std::invalid_argument("lemma T needs nonempty generating sets");
  for (const Permutation& x : a_set)
    if (!g.contains(x)) throw std::invalid_argument("A must lie inside G");
  for (const Permutation& x : b_set)
    if (!g.contains(x)) throw std::invalid_argument("B must lie inside G");
  PermGroup h(g.degree(), a_set);
  PermGroup k(g.degree(), b_set);
  std::vector<Permutation> comms;
  for (const Permutation& a : a_set)
    for (const Permutation& b : b_set) {
      Permutation c = Permutation::commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  sort_unique(comms);
  PermGroup tsub = subgroup_from_values(g, comms);
  for (const Permutation& a : a_set) {
    for (const Permutation& b : b_set) {
      Permutation c = Permutation::commutator(a, b);
      for (const Permutation& conj : a_set) {
        if (!tsub.contains(c.conjugated_by(conj))) {
          r.verdict = Verdict::skipped;
          r.reason = "hypothesis-not-met: [a,b]^a' outside T for a=" + a.cycle_string() +
                     " b=" + b.cycle_string() + " a'=" + conj.cycle_string();
          t.finish(r);
          return r;
        }
      }
      for (const Permutation& conj : b_set) {
        if (!tsub.contains(c.conjugated_by(conj))) {
          r.verdict = Verdict::skipped;
          r.reason = "hypothesis-not-met: [a,b]^b' outside T for a=" + a.cycle_string() +
                     " b=" + b.cycle_string() + " b'=" + conj.cycle_string();
          t.finish(r);
          return r;
        }
      }
    }
  }
  PermGroup hk = commutator_subgroup(g, h, k);
  r.quantity("h_order", h.order());
  r.quantity("k_order", k.order());
  r.quantity("t_order", tsub.order());
  r.quantity("commutator_order", hk.order());
  if (subgroup_equal(tsub, hk)) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    r.witness = subgroup_difference_witness(tsub, hk);
  }
  t.finish(r);
  return r;
}

CheckReport check_centralizer_fact(const PermGroup& g, const WordTree& w, const PermGroup& n,
                                   const EvalOptions& opt) {
  Timer t;
  CheckReport r;
  r.check = "centralizer";
  r.input("group", group_label(g));
  r.input("word", w.render());
  r.input("normal_order", std::to_string(n.order()));
  try {
    if (!is_subgroup_of(n, g) || !is_normal_in(n, g)) {
      r.verdict = Verdict::skipped;
      r.reason = "N is not normal in G";
      t.finish(r);
      return r;
    }
    ValueSet values = w_values(g, w, opt);
    for (const Permutation& v : values.elements) {
      if (!v.is_identity() && n.contains(v)) {
        r.verdict = Verdict::skipped;
        r.reason = "hypothesis-not-met: value " + v.cycle_string() + " lies in N";
        t.finish(r);
        return r;
      }
    }
    PermGroup verbal = subgroup_from_values(g, values.elements);
    PermGroup comm = commutator_subgroup(g, n, verbal);
    r.quantity("verbal_order", verbal.order());
    r.quantity("commutator_order", comm.order());
    if (comm.is_trivial()) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      r.witness = comm.generators().front().cycle_string() + " in [N, w(G)]";
    }
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  t.finish(r);
  return r;
}

SupplementResult find_frattini_supplement(const PermGroup& g, const PermGroup& n, std::uint64_t cap) {
  if (!is_subgroup_of(n, g) || !is_normal_in(n, g))
    throw std::invalid_argument("supplement search needs a normal subgroup");
  Timer t;
  CheckReport r;
  r.check = "supplement";
  r.input("group", group_label(g));
  r.input("normal_order", std::to_string(n.order()));
  try {
    std::vector<PermGroup> lattice = subgroup_lattice(g, cap);
    const PermGroup* found = nullptr;
    for (const PermGroup& h : lattice) {
      PermGroup cut = intersect_subgroups(h, n);
      if (h.order() / cut.order() * n.order() == g.order()) {
        found = &h;
        break;  // lattice is sorted by order, so the first hit is minimal
      }
    }
    assert(found != nullptr);  // H = G always supplements
    PermGroup cut = intersect_subgroups(*found, n);
    PermGroup frat = frattini_subgroup(*found, cap);
    r.quantity("supplement_order", found->order());
    r.quantity("intersection_order", cut.order());
    r.quantity("frattini_order", frat.order());
    if (is_subgroup_of(cut, frat)) {
      r.verdict = Verdict::pass;
    } else {
      r.verdict = Verdict::fail;
      const Permutation* x = first_missing(cut.elements(), frat.elements());
      r.witness = x ? x->cycle_string() + " in H meet N but outside Frat(H)" : "containment fails";
    }
    t.finish(r);
    return {*found, r};
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::skipped;
    r.reason = std::string("budget: ") + e.what();
    t.finish(r);
    return {PermGroup::trivial(g.degree()), r};
  }
}

FrobeniusResult frobenius_counterexample(std::uint64_t p, int m, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("kernel prime must be prime");
  if (m < 1) throw std::invalid_argument("field degree must be positive");
  if (n < 2 || n % p != 0) throw std::invalid_argument("exponent must be a multiple of the prime, at least 2");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q == 2) throw std::invalid_argument("complement would be trivial for a field of two elements");
  if (gcd64(n, q - 1) != 1) throw std::invalid_argument("exponent must be coprime to the complement order");

  Timer t;
  CheckReport r;
  r.check = "frobenius";
  r.input("p", std::to_string(p));
  r.input("m", std::to_string(m));
  r.input("n", std::to_string(n));

  FieldSemidirect parts = field_semidirect_parts(p, m, q - 1);
  const PermGroup& g = parts.group;
  r.quantity("order", g.order());
  r.quantity("kernel_order", parts.kernel.order());
  r.quantity("complement_order", parts.complement.order());

  bool ok = true;
  std::string witness;

  // Frobenius action: transitive, and nontrivial elements fix at most one point.
  {
    std::vector<bool> seen(static_cast<std::size_t>(g.degree()), false);
    std::vector<int> frontier{0};
    seen[0] = true;
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (const Permutation& s : g.generators()) {
        int y = s.image(x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          frontier.push_back(y);
        }
      }
    }
    bool transitive = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    bool free_action = true;
    for (const Permutation& x : g.elements()) {
      if (x.is_identity()) continue;
      if (x.fixed_point_count() > 1) {
        free_action = false;
        if (witness.empty()) witness = x.cycle_string() + " fixes two points";
        break;
      }
    }
    r.quantity("frobenius", transitive && free_action ? "true" : "false");
    ok = ok && transitive && free_action;
  }

  PermGroup kernel_power = power_verbal(parts.kernel, n);
  PermGroup complement_power = power_verbal(parts.complement, n);
  PermGroup group_power = power_verbal(g, n);
  r.quantity("kernel_power_order", kernel_power.order());
  r.quantity("complement_power_order", complement_power.order());
  r.quantity("group_power_order", group_power.order());
  if (!kernel_power.is_trivial()) {
    ok = false;
    if (witness.empty()) witness = "F^n is nontrivial";
  }
  if (!subgroup_equal(complement_power, parts.complement)) {
    ok = false;
    if (witness.empty()) witness = "K^n differs from K";
  }
  if (group_power.order() != g.order()) {
    ok = false;
    if (witness.empty()) witness = "G^n is proper";
  }

  // Every nilpotent subgroup generated by n-th powers is cyclic. Bottom-up
  // closure with nilpotent pruning is exhaustive because subgroups of
  // nilpotent groups are nilpotent.
  {
    ValueSet pv = power_values(g, n);
    std::vector<Permutation> seeds;
    for (const Permutation& v : pv.elements)
      if (!v.is_identity()) seeds.push_back(v);
    struct Node {
      PermGroup sub;
      std::vector<Permutation> gens;
    };
    std::vector<Node> nodes{{PermGroup::trivial(g.degree()), {}}};
    std::map<std::vector<Permutation>, bool> known;  // element list -> nilpotent
    known.emplace(nodes[0].sub.elements(), true);
    bool all_cyclic = true;
    for (std::size_t i = 0; i < nodes.size() && all_cyclic; ++i) {
      for (const Permutation& v : seeds) {
        if (nodes[i].sub.contains(v)) continue;
        std::vector<Permutation> gens = nodes[i].gens;
        gens.push_back(v);
        PermGroup ext(g.degree(), gens);
        auto it = known.find(ext.elements());
        if (it != known.end()) continue;
        bool nil = is_nilpotent(ext);
        known.emplace(ext.elements(), nil);
        if (!nil) continue;
        bool cyclic = false;
        for (const Permutation& x : ext.elements())
          if (x.order() == ext.order()) {
            cyclic = true;
            break;
          }
        if (!cyclic) {
          all_cyclic = false;
          if (witness.empty())
            witness = "noncyclic nilpotent subgroup of order " + std::to_string(ext.order());
          break;
        }
        nodes.push_back({std::move(ext), std::move(gens)});
      }
    }
    r.quantity("power_value_count", pv.elements.size());
    r.quantity("nilpotent_family_size", nodes.size());
    r.quantity("all_cyclic", all_cyclic ? "true" : "false");
    ok = ok && all_cyclic;
  }

  int kernel_rank = min_generators(parts.kernel);
  r.quantity("kernel_rank", static_cast<std::uint64_t>(kernel_rank));
  if (kernel_rank < m) {
    ok = false;
    if (witness.empty()) witness = "kernel rank fell below m";
  }

  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.witness = ok ? "" : witness;
  t.finish(r);
  return {g, r};
}

std::string report_to_text(const CheckReport& r, bool with_millis) {
  std::ostringstream out;
  out << "check: " << r.check << "\n";
  for (const auto& [k, v] : r.inputs) out << k << ": " << v << "\n";
  for (const auto& [k, v] : r.quantities) out << k << ": " << v << "\n";
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  if (!r.reason.empty()) out << "reason: " << r.reason << "\n";
  if (!r.witness.empty()) out << "witness: " << r.witness << "\n";
  if (with_millis) out << "millis: " << r.millis << "\n";
  return out.str();
}

}  // namespace mcw
