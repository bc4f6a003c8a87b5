#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "mcw/catalog.hpp"
#include "mcw/corpus.hpp"
#include "mcw/verbal.hpp"

namespace mcw {

namespace {

WordTree gamma_word(int n) { return lower_central_word(n); }

std::vector<std::pair<std::string, WordTree>> named(std::vector<WordTree> trees) {
  std::sort(trees.begin(), trees.end(), [](const WordTree& a, const WordTree& b) {
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
    return a.render() < b.render();
  });
  std::vector<std::pair<std::string, WordTree>> out;
  out.reserve(trees.size());
  for (WordTree& t : trees) {
    std::string name = t.render();
    out.emplace_back(std::move(name), std::move(t));
  }
  return out;
}

std::vector<PermGroup> minimal_normals(const PermGroup& g) {
  std::vector<PermGroup> normals = normal_subgroups(g);
  std::vector<PermGroup> out;
  for (const PermGroup& n : normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const PermGroup& m : normals) {
      if (m.is_trivial() || m.order() >= n.order()) continue;
      if (is_subgroup_of(m, n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<PermGroup> distinct_derived_terms(const PermGroup& g) {
  return structure_series(g, SeriesKind::derived).terms;
}

std::vector<Permutation> good_generating_set(const PermGroup& g) {
  std::vector<Permutation> out;
  for (const Permutation& s : g.generators()) {
    out.push_back(s);
    out.push_back(s.inverse());
  }
  return commutator_closure(g, std::move(out));
}

struct Job {
  std::string key;
  std::function<CheckReport()> run;
};

}  // namespace

std::vector<std::pair<std::string, WordTree>> corpus_words(const std::string& profile) {
  if (profile == "smoke") {
    std::vector<WordTree> trees;
    trees.push_back(gamma_word(2));
    trees.push_back(gamma_word(3));
    trees.push_back(gamma_word(4));
    trees.push_back(derived_word(2));
    trees.push_back(WordTree::join(derived_word(2), WordTree::leaf()));
    trees.push_back(WordTree::join(gamma_word(2), gamma_word(3)));
    trees.push_back(WordTree::join(gamma_word(3), gamma_word(3)));
    return named(std::move(trees));
  }
  if (profile == "full") {
    std::vector<WordTree> trees;
    for (const WordTree& t : shapes_up_to(3))
      if (t.leaf_count() <= 6) trees.push_back(t);
    return named(std::move(trees));
  }
  throw std::invalid_argument("unknown corpus profile: " + profile);
}

CorpusRun run_corpus(const CorpusOptions& opt) {
  const bool full = opt.profile == "full";
  if (!full && opt.profile != "smoke") throw std::invalid_argument("unknown corpus profile: " + opt.profile);

  std::vector<CatalogEntry> catalog = build_catalog(opt.profile);
  std::vector<std::pair<std::string, WordTree>> words = corpus_words(opt.profile);
  const WordTree gamma2 = gamma_word(2);
  const WordTree gamma3 = gamma_word(3);
  const std::uint64_t budget = opt.budget;
  const std::uint64_t cap = opt.lattice_cap;
  EvalOptions eval;
  eval.budget = budget;

  std::vector<Job> jobs;
  auto add = [&](std::string key, std::function<CheckReport()> run) {
    jobs.push_back({std::move(key), std::move(run)});
  };

  for (const CatalogEntry& entry : catalog) {
    const PermGroup& g = entry.group;
    const std::string& name = entry.name;
    const bool soluble = is_soluble(g);
    const bool simple = !soluble && classify(g).simple;
    const bool small = g.order() <= cap;
    std::vector<std::uint64_t> primes = prime_divisors(g.order());
    std::vector<Permutation> good = good_generating_set(g);

    for (const auto& [wname, w] : words) {
      add("goodgen " + name + " " + wname, [&g, good, &w = w, eval] {
        return check_goodgen(g, good, w, eval);
      });
      if (soluble) {
        for (std::uint64_t p : primes) {
          add("focal " + name + " " + wname + " p" + std::to_string(p),
              [&g, &w = w, p, eval] { return check_focal(g, w, p, false, eval); });
        }
      }
      if (small && (soluble || simple)) {
        add("rank " + name + " " + wname, [&g, &w = w, cap, eval] {
          return check_rank_bound(g, w, RankMode::nilpotent, cap, eval);
        });
      }
      if (soluble || g.order() <= 120) {
        bool big_word = w.leaf_count() > 3;
        if (!full || !big_word || g.order() <= cap) {
          add("abelian-wi " + name + " " + wname,
              [&g, &w = w, eval] { return check_abelian_wi(g, w, eval); });
        }
      }
      if (soluble && small) {
        for (const Section& s : all_sections(w)) {
          std::string skey;
          for (std::size_t k = 0; k < s.members.size(); ++k) {
            if (k) skey += ",";
            std::string path = s.members[k].to_string();
            skey += path.empty() ? "root" : path;
          }
          add("section " + name + " " + wname + " {" + skey + "}",
              [&g, &w = w, s, &gamma2, eval] { return check_section_lemma(g, w, gamma2, s, eval); });
        }
      }
    }

    if (!soluble) {
      // Exploratory focal rows: data only, never pass or fail.
      for (std::uint64_t p : primes) {
        for (const WordTree* w : {&gamma2, &gamma3}) {
          add("focal-exploratory " + name + " " + w->render() + " p" + std::to_string(p),
              [&g, w, p, eval] { return check_focal(g, *w, p, true, eval); });
        }
      }
      if (g.order() > 120) {
        add("abelian-wi " + name + " " + gamma2.render(),
            [&g, &gamma2, eval] { return check_abelian_wi(g, gamma2, eval); });
      }
    }

    if (small && (soluble || simple)) {
      add("rank-metanilpotent " + name + " " + gamma2.render(), [&g, &gamma2, cap, eval] {
        return check_rank_bound(g, gamma2, RankMode::metanilpotent, cap, eval);
      });
    }

    if (soluble && small) {
      add("fitting " + name, [&g, cap] { return check_fitting_bound(g, cap); });
    }

    for (std::uint64_t p : primes) {
      add("pset " + name + " p" + std::to_string(p), [&g, p, &gamma2, eval] {
        ValueSet values = w_values(g, gamma2, eval);
        PPartition parts = p_partition(g, values, p);
        PermGroup derived = subgroup_from_values(g, values.elements);
        return check_pset(g, derived, p, parts.y.elements);
      });
    }

    if (g.order() <= 200) {
      add("lemma-t " + name, [&g] {
        PermGroup derived = commutator_subgroup(g, g, g);
        return check_lemma_T(g, g.elements(), derived.elements());
      });
    }

    if (small) {
      std::vector<PermGroup> terms = distinct_derived_terms(g);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        add("supplement " + name + " term" + std::to_string(k),
            [&g, n = terms[k], cap] { return find_frattini_supplement(g, n, cap).report; });
      }
    }

    {
      std::vector<PermGroup> normals = minimal_normals(g);
      for (std::size_t k = 0; k < normals.size(); ++k) {
        add("centralizer " + name + " minnormal" + std::to_string(k),
            [&g, &gamma2, n = normals[k], eval] {
              return check_centralizer_fact(g, gamma2, n, eval);
            });
      }
    }
  }

  add("frobenius 3 1 3", [] { return frobenius_counterexample(3, 1, 3).report; });
  add("frobenius 3 2 3", [] { return frobenius_counterexample(3, 2, 3).report; });
  if (full) add("frobenius 3 3 3", [] { return frobenius_counterexample(3, 3, 3).report; });

  CorpusRun out;
  out.profile = opt.profile;
  out.reports.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      CheckReport r;
      try {
        r = jobs[i].run();
      } catch (const std::exception& e) {
        r.check = "error";
        r.verdict = Verdict::fail;
        r.witness = e.what();
      }
      r.inputs.insert(r.inputs.begin(), {"case", jobs[i].key});
      out.reports[i] = std::move(r);
    }
  };
  int nthreads = std::max(1, opt.jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (const CheckReport& r : out.reports) {
    if (r.passed())
      ++out.passes;
    else if (r.failed())
      ++out.failures;
    else
      ++out.skips;
  }
  return out;
}

namespace {

nlohmann::ordered_json report_record(const CheckReport& r, bool with_millis) {
  nlohmann::ordered_json rec;
  rec["check"] = r.check;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  rec["inputs"] = std::move(inputs);
  nlohmann::ordered_json quantities = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.quantities) quantities[k] = v;
  rec["quantities"] = std::move(quantities);
  rec["verdict"] = verdict_name(r.verdict);
  rec["reason"] = r.reason;
  rec["witness"] = r.witness;
  if (with_millis) rec["millis"] = r.millis;
  return rec;
}

}  // namespace

std::string report_json(const CheckReport& r, bool with_millis) {
  return report_record(r, with_millis).dump(2) + "\n";
}

std::string reports_json(const std::vector<CheckReport>& reports, bool with_millis) {
  std::uint64_t pass = 0, fail = 0, skip = 0;
  for (const CheckReport& r : reports) {
    if (r.passed())
      ++pass;
    else if (r.failed())
      ++fail;
    else
      ++skip;
  }
  nlohmann::ordered_json doc;
  doc["counts"] = {{"total", reports.size()}, {"pass", pass}, {"fail", fail}, {"skipped", skip}};
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) recs.push_back(report_record(r, with_millis));
  doc["reports"] = std::move(recs);
  return doc.dump(2) + "\n";
}

std::string corpus_json(const CorpusRun& run, bool with_millis) {
  nlohmann::ordered_json doc;
  doc["profile"] = run.profile;
  doc["counts"] = {{"total", run.reports.size()},
                   {"pass", run.passes},
                   {"fail", run.failures},
                   {"skipped", run.skips}};
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const CheckReport& r : run.reports) reports.push_back(report_record(r, with_millis));
  doc["reports"] = std::move(reports);
  return doc.dump(2) + "\n";
}

std::string corpus_text(const CorpusRun& run, bool with_millis) {
  std::ostringstream out;
  out << "profile: " << run.profile << "\n";
  out << "jobs: " << run.reports.size() << "\n\n";
  for (const CheckReport& r : run.reports) {
    out << report_to_text(r, with_millis) << "\n";
  }
  out << "pass: " << run.passes << "\n";
  out << "fail: " << run.failures << "\n";
  out << "skipped: " << run.skips << "\n";
  return out.str();
}

}  // namespace mcw
