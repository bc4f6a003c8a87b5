#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "mcw/catalog.hpp"
#include "mcw/check.hpp"
#include "mcw/corpus.hpp"
#include "mcw/group_ops.hpp"
#include "mcw/verbal.hpp"
#include "mcw/word_ops.hpp"

using namespace mcw;

namespace {

WordTree gamma(int n) { return lower_central_word(n); }

std::vector<Permutation> good_set(const PermGroup& g) {
  std::vector<Permutation> seed;
  for (const Permutation& s : g.generators()) {
    seed.push_back(s);
    seed.push_back(s.inverse());
  }
  return commutator_closure(g, std::move(seed));
}

std::string quantity_of(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.quantities)
    if (k == key) return v;
  return "<missing " + key + ">";
}

std::string input_of(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.inputs)
    if (k == key) return v;
  return "<missing " + key + ">";
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("goodgen pass and skip paths") {
  PermGroup s4 = symmetric_group(4);
  CheckReport r = check_goodgen(s4, good_set(s4), gamma(2));
  CHECK(r.check == "goodgen");
  CHECK(r.passed());
  CHECK(input_of(r, "group") == "order 24 on 4 points");
  CHECK(input_of(r, "word") == "[x1,x2]");
  CHECK(quantity_of(r, "generated_order") == "12");
  CHECK(quantity_of(r, "verbal_order") == "12");

  std::vector<Permutation> transpositions =
      conjugation_closure(s4, {Permutation::from_cycles(4, "(1 2)")});
  CheckReport skip1 = check_goodgen(s4, transpositions, gamma(2));
  CHECK(skip1.verdict == Verdict::skipped);
  CHECK(skip1.reason == "X is not commutator-closed");

  CheckReport skip2 = check_goodgen(s4, {Permutation(4)}, gamma(2));
  CHECK(skip2.verdict == Verdict::skipped);
  CHECK(skip2.reason == "X does not generate G");

  EvalOptions tiny;
  tiny.budget = 2;
  CheckReport skip3 = check_goodgen(s4, good_set(s4), gamma(2), tiny);
  CHECK(skip3.verdict == Verdict::skipped);
  CHECK(starts_with(skip3.reason, "budget: "));
}

TEST_CASE("focal check on soluble hosts") {
  PermGroup s4 = symmetric_group(4);
  CheckReport r2 = check_focal(s4, gamma(2), 2);
  CHECK(r2.check == "focal");
  CHECK(r2.passed());
  CHECK(quantity_of(r2, "sylow_order") == "8");
  CHECK(quantity_of(r2, "verbal_order") == "12");
  CHECK(quantity_of(r2, "intersection_order") == "4");
  CHECK(quantity_of(r2, "generated_order") == "4");

  CheckReport r3 = check_focal(s4, gamma(2), 3);
  CHECK(r3.passed());
  CHECK(quantity_of(r3, "sylow_order") == "3");
  CHECK(quantity_of(r3, "intersection_order") == "3");

  CHECK_THROWS_WITH_AS(check_focal(s4, gamma(2), 6), "focal check needs a prime",
                       std::invalid_argument);

  PermGroup a5 = alternating_group(5);
  CheckReport skip = check_focal(a5, gamma(2), 2);
  CHECK(skip.verdict == Verdict::skipped);
  CHECK(skip.reason == "group is not soluble");
  CHECK(skip.quantities.empty());

  CheckReport expl = check_focal(a5, gamma(2), 2, true);
  CHECK(expl.verdict == Verdict::skipped);
  CHECK(expl.reason == "exploratory: group is not soluble");
  CHECK(quantity_of(expl, "exploratory_equal") == "true");
}

TEST_CASE("rank bound check") {
  PermGroup s4 = symmetric_group(4);
  CheckReport r = check_rank_bound(s4, gamma(2), RankMode::nilpotent);
  CHECK(r.check == "rank");
  CHECK(r.passed());
  CHECK(quantity_of(r, "lattice_size") == "30");
  CHECK(quantity_of(r, "qualifying_subgroups") == "9");
  CHECK(quantity_of(r, "r") == "2");
  CHECK(quantity_of(r, "verbal_order") == "12");
  CHECK(quantity_of(r, "verbal_rank") == "2");

  CheckReport meta = check_rank_bound(s4, gamma(2), RankMode::metanilpotent);
  CHECK(meta.check == "rank-metanilpotent");
  CHECK(meta.passed());
  CHECK(quantity_of(meta, "asserted") == "none");
  CHECK(quantity_of(meta, "qualifying_subgroups") == "10");

  CheckReport skip = check_rank_bound(symmetric_group(5), gamma(2), RankMode::nilpotent);
  CHECK(skip.verdict == Verdict::skipped);
  CHECK(skip.reason == "group is neither soluble nor simple");

  CheckReport simple = check_rank_bound(alternating_group(5), gamma(2), RankMode::nilpotent);
  CHECK(simple.passed());
  CHECK(quantity_of(simple, "lattice_size") == "59");
  CHECK(quantity_of(simple, "r") == "2");
  CHECK(quantity_of(simple, "verbal_rank") == "2");
}

TEST_CASE("fitting height bound") {
  CheckReport r = check_fitting_bound(symmetric_group(4));
  CHECK(r.check == "fitting");
  CHECK(r.passed());
  CHECK(quantity_of(r, "fitting_height") == "3");
  CHECK(quantity_of(r, "rank") == "2");
  CHECK(quantity_of(r, "bound") == "5");

  CheckReport skip = check_fitting_bound(alternating_group(5));
  CHECK(skip.verdict == Verdict::skipped);
  CHECK(skip.reason == "group is not soluble");
}

TEST_CASE("section lemma over every section of gamma3") {
  PermGroup s4 = symmetric_group(4);
  WordTree w = gamma(3);
  std::vector<std::string> seen;
  for (const Section& s : all_sections(w)) {
    CheckReport r = check_section_lemma(s4, w, gamma(2), s);
    CHECK(r.check == "section");
    CHECK(r.passed());
    CHECK(quantity_of(r, "w_order") == "12");
    CHECK(quantity_of(r, "eta_order") == "12");
    CHECK(quantity_of(r, "commutator_order") == "4");
    std::string sec = input_of(r, "section");
    // grafting eta at the leaves keeps the verbal join at gamma2(S4); the
    // shallower sections push every grafted word down to the Klein subgroup
    CHECK(quantity_of(r, "join_order") == (sec == "LL LR R" ? "12" : "4"));
    seen.push_back(sec);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::string>{"L R", "LL LR R", "root"});

  Section bad;
  bad.members.push_back(VertexPath{});
  bad.members.push_back(w.path_of(4));
  CHECK_THROWS_WITH_AS(check_section_lemma(s4, w, gamma(2), bad),
                       "vertex set is not a section of the word tree", std::invalid_argument);

  EvalOptions tiny;
  tiny.budget = 2;
  CheckReport skip = check_section_lemma(s4, w, gamma(2), all_sections(w)[0], tiny);
  CHECK(skip.verdict == Verdict::skipped);
  CHECK(starts_with(skip.reason, "budget: "));
}

TEST_CASE("abelian w(i) at the top of the tuple poset") {
  CheckReport sl = check_abelian_wi(sl23_group(), gamma(2));
  CHECK(sl.check == "abelian-wi");
  CHECK(sl.passed());
  CHECK(quantity_of(sl, "derived_cap") == "3");
  CHECK(quantity_of(sl, "tuples_scanned") == "16");
  CHECK(quantity_of(sl, "qualifying_tuples") == "1");
  CHECK(quantity_of(sl, "first_qualifying") == "(1,1)");

  CheckReport s4 = check_abelian_wi(symmetric_group(4), gamma(2));
  CHECK(s4.passed());
  CHECK(quantity_of(s4, "qualifying_tuples") == "2");
  CHECK(quantity_of(s4, "first_qualifying") == "(1,2)");

  CheckReport v4 = check_abelian_wi(elementary_abelian_group(2, 2), gamma(2));
  CHECK(v4.passed());
  CHECK(quantity_of(v4, "qualifying_tuples") == "0");
  CHECK(quantity_of(v4, "first_qualifying") == "<missing first_qualifying>");
}

TEST_CASE("p-set product identity") {
  PermGroup s4 = symmetric_group(4);
  PermGroup a4 = alternating_group(4);
  ValueSet values = w_values(s4, gamma(2));
  PPartition parts = p_partition(s4, values, 2);
  CheckReport r = check_pset(s4, a4, 2, parts.y.elements);
  CHECK(r.check == "pset");
  CHECK(r.passed());
  CHECK(input_of(r, "normal_order") == "12");
  CHECK(input_of(r, "prime") == "2");
  CHECK(input_of(r, "set_size") == "4");
  CHECK(quantity_of(r, "sylow_order") == "8");
  CHECK(quantity_of(r, "lhs_size") == "12");
  CHECK(quantity_of(r, "rhs_size") == "12");

  CHECK_THROWS_WITH_AS(check_pset(s4, a4, 6, parts.y.elements), "p-set check needs a prime",
                       std::invalid_argument);

  PermGroup c2 = generated_subgroup(s4, {Permutation::from_cycles(4, "(1 2)")});
  CheckReport skip1 = check_pset(s4, c2, 2, parts.y.elements);
  CHECK(skip1.verdict == Verdict::skipped);
  CHECK(skip1.reason == "N is not normal in G");

  CheckReport skip2 = check_pset(s4, a4, 2, {Permutation::from_cycles(4, "(1 2 3)")});
  CHECK(skip2.verdict == Verdict::skipped);
  CHECK(skip2.reason == "Y is not a set of p-elements of G");

  CheckReport skip3 = check_pset(s4, a4, 2, {Permutation::from_cycles(4, "(1 2)")});
  CHECK(skip3.verdict == Verdict::skipped);
  CHECK(skip3.reason == "Y is not closed under conjugation");
}

TEST_CASE("commutator generation lemma") {
  PermGroup s4 = symmetric_group(4);
  PermGroup a4 = alternating_group(4);
  CheckReport r = check_lemma_T(s4, s4.elements(), a4.elements());
  CHECK(r.check == "lemma-t");
  CHECK(r.passed());
  CHECK(quantity_of(r, "h_order") == "24");
  CHECK(quantity_of(r, "k_order") == "12");
  CHECK(quantity_of(r, "t_order") == "12");
  CHECK(quantity_of(r, "commutator_order") == "12");

  CheckReport skip = check_lemma_T(s4, {Permutation::from_cycles(4, "(1 2 3 4)")},
                                   {Permutation::from_cycles(4, "(1 2)")});
  CHECK(skip.verdict == Verdict::skipped);
  CHECK(starts_with(skip.reason, "hypothesis-not-met: [a,b]^a'"));

  CHECK_THROWS_AS(check_lemma_T(s4, {}, a4.elements()), std::invalid_argument);
  CHECK_THROWS_WITH_AS(check_lemma_T(a4, {Permutation::from_cycles(4, "(1 2)")}, a4.elements()),
                       "A must lie inside G", std::invalid_argument);
  CHECK_THROWS_WITH_AS(check_lemma_T(a4, a4.elements(), {Permutation::from_cycles(4, "(1 2)")}),
                       "B must lie inside G", std::invalid_argument);
}

TEST_CASE("centralizer fact for normal subgroups missing the values") {
  PermGroup d12 = dihedral_group(6);
  PermGroup center = generated_subgroup(d12, {Permutation::from_cycles(6, "(1 4)(2 5)(3 6)")});
  CheckReport r = check_centralizer_fact(d12, gamma(2), center);
  CHECK(r.check == "centralizer");
  CHECK(r.passed());
  CHECK(quantity_of(r, "verbal_order") == "3");
  CHECK(quantity_of(r, "commutator_order") == "1");

  PermGroup c3 = generated_subgroup(d12, {Permutation::from_cycles(6, "(1 3 5)(2 4 6)")});
  CheckReport skip1 = check_centralizer_fact(d12, gamma(2), c3);
  CHECK(skip1.verdict == Verdict::skipped);
  CHECK(starts_with(skip1.reason, "hypothesis-not-met: value"));

  PermGroup s4 = symmetric_group(4);
  PermGroup c2 = generated_subgroup(s4, {Permutation::from_cycles(4, "(1 2)")});
  CheckReport skip2 = check_centralizer_fact(s4, gamma(2), c2);
  CHECK(skip2.verdict == Verdict::skipped);
  CHECK(skip2.reason == "N is not normal in G");
}

TEST_CASE("frattini supplements") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4 = generated_subgroup(s4, parse_perm_list(4, "(1 2)(3 4); (1 3)(2 4)"));
  SupplementResult r = find_frattini_supplement(s4, v4);
  CHECK(r.report.check == "supplement");
  CHECK(r.report.passed());
  CHECK(r.supplement.order() == 6);
  CHECK(quantity_of(r.report, "supplement_order") == "6");
  CHECK(quantity_of(r.report, "intersection_order") == "1");
  CHECK(quantity_of(r.report, "frattini_order") == "1");

  SupplementResult whole = find_frattini_supplement(s4, PermGroup::trivial(4));
  CHECK(whole.report.passed());
  CHECK(whole.supplement.order() == 24);

  PermGroup c2 = generated_subgroup(s4, {Permutation::from_cycles(4, "(1 2)")});
  CHECK_THROWS_WITH_AS(find_frattini_supplement(s4, c2),
                       "supplement search needs a normal subgroup", std::invalid_argument);

  PermGroup big = direct_product(alternating_group(5), symmetric_group(4));
  SupplementResult skipped = find_frattini_supplement(big, big);
  CHECK(skipped.report.verdict == Verdict::skipped);
  CHECK(starts_with(skipped.report.reason, "budget: "));
  CHECK(skipped.supplement.is_trivial());
}

TEST_CASE("frobenius power-word family") {
  FrobeniusResult f = frobenius_counterexample(3, 1, 3);
  CHECK(f.report.check == "frobenius");
  CHECK(f.report.passed());
  CHECK(f.group.order() == 6);
  CHECK(quantity_of(f.report, "order") == "6");
  CHECK(quantity_of(f.report, "kernel_order") == "3");
  CHECK(quantity_of(f.report, "complement_order") == "2");
  CHECK(quantity_of(f.report, "frobenius") == "true");
  CHECK(quantity_of(f.report, "kernel_power_order") == "1");
  CHECK(quantity_of(f.report, "complement_power_order") == "2");
  CHECK(quantity_of(f.report, "group_power_order") == "6");
  CHECK(quantity_of(f.report, "power_value_count") == "4");
  CHECK(quantity_of(f.report, "nilpotent_family_size") == "4");
  CHECK(quantity_of(f.report, "all_cyclic") == "true");
  CHECK(quantity_of(f.report, "kernel_rank") == "1");

  CHECK(frobenius_counterexample(3, 2, 3).report.passed());

  CHECK_THROWS_WITH_AS(frobenius_counterexample(4, 1, 4), "kernel prime must be prime",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(frobenius_counterexample(3, 0, 3), "field degree must be positive",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(frobenius_counterexample(3, 1, 5),
                       "exponent must be a multiple of the prime, at least 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(frobenius_counterexample(2, 1, 2),
                       "complement would be trivial for a field of two elements",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(frobenius_counterexample(3, 1, 6),
                       "exponent must be coprime to the complement order", std::invalid_argument);
}

TEST_CASE("report rendering") {
  CheckReport r;
  r.check = "demo";
  r.input("group", "order 6 on 3 points");
  r.quantity("k", std::uint64_t{5});
  CHECK(report_to_text(r) == "check: demo\ngroup: order 6 on 3 points\nk: 5\nverdict: pass\n");
  CHECK(report_to_text(r, true) ==
        "check: demo\ngroup: order 6 on 3 points\nk: 5\nverdict: pass\nmillis: 0\n");

  CheckReport s = r;
  s.verdict = Verdict::skipped;
  s.reason = "because";
  CHECK(report_to_text(s) ==
        "check: demo\ngroup: order 6 on 3 points\nk: 5\nverdict: skipped\nreason: because\n");

  CheckReport f = r;
  f.verdict = Verdict::fail;
  f.witness = "(1 2) in lhs only";
  CHECK(report_to_text(f) ==
        "check: demo\ngroup: order 6 on 3 points\nk: 5\nverdict: fail\nwitness: (1 2) in lhs only\n");

  CHECK(verdict_name(Verdict::pass) == "pass");
  CHECK(verdict_name(Verdict::fail) == "fail");
  CHECK(verdict_name(Verdict::skipped) == "skipped");
}

TEST_CASE("report json shape") {
  CheckReport r;
  r.check = "demo";
  r.input("group", "order 6 on 3 points");
  r.quantity("k", std::uint64_t{5});

  nlohmann::json rec = nlohmann::json::parse(report_json(r));
  CHECK(rec.size() == 6);
  CHECK(rec["check"] == "demo");
  CHECK(rec["inputs"]["group"] == "order 6 on 3 points");
  CHECK(rec["quantities"]["k"] == "5");
  CHECK(rec["verdict"] == "pass");
  CHECK(rec["reason"] == "");
  CHECK(rec["witness"] == "");
  CHECK(!rec.contains("millis"));
  CHECK(nlohmann::json::parse(report_json(r, true)).contains("millis"));

  CheckReport s = r;
  s.verdict = Verdict::skipped;
  s.reason = "because";
  nlohmann::json doc = nlohmann::json::parse(reports_json({r, s}));
  CHECK(doc["counts"]["total"] == 2);
  CHECK(doc["counts"]["pass"] == 1);
  CHECK(doc["counts"]["fail"] == 0);
  CHECK(doc["counts"]["skipped"] == 1);
  CHECK(doc["reports"].size() == 2);
  CHECK(doc["reports"][1]["reason"] == "because");
}

TEST_CASE("corpus word lists") {
  std::vector<std::pair<std::string, WordTree>> smoke = corpus_words("smoke");
  CHECK(smoke.size() == 7);
  CHECK(smoke.front().first == "[x1,x2]");
  for (const auto& [name, tree] : smoke) CHECK(name == tree.render());

  std::vector<std::pair<std::string, WordTree>> full = corpus_words("full");
  CHECK(full.size() == 21);
  for (const auto& [name, tree] : full) {
    CHECK(tree.height() <= 3);
    CHECK(tree.leaf_count() <= 6);
  }
  CHECK_THROWS(corpus_words("weekly"));
  CHECK_THROWS(run_corpus(CorpusOptions{"weekly", 1, kDefaultEvalBudget, kDefaultLatticeCap}));
}

TEST_CASE("smoke corpus counts and determinism") {
  CorpusOptions opt;
  opt.profile = "smoke";
  CorpusRun run = run_corpus(opt);
  CHECK(run.reports.size() == 782);
  CHECK(run.passes == 775);
  CHECK(run.failures == 0);
  CHECK(run.skips == 7);
  for (const CheckReport& r : run.reports) {
    CHECK(input_of(r, "case") != "<missing case>");
    if (r.verdict == Verdict::skipped) {
      CHECK(r.check == "centralizer");
      CHECK(starts_with(r.reason, "hypothesis-not-met: value"));
    }
  }

  CorpusOptions two = opt;
  two.jobs = 2;
  CorpusRun again = run_corpus(two);
  CHECK(corpus_json(run) == corpus_json(again));

  std::string text = corpus_text(run);
  CHECK(starts_with(text, "profile: smoke\njobs: 782\n"));
  CHECK(text.find("pass: 775\nfail: 0\nskipped: 7\n") != std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(corpus_json(run));
  CHECK(doc["profile"] == "smoke");
  CHECK(doc["counts"]["total"] == 782);
  CHECK(doc["counts"]["pass"] == 775);
  CHECK(doc["reports"].size() == 782);
}
