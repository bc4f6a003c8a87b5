// Command line front end: word inspection, group inspection, verbal subgroup
// computation, the single-fact checkers, the counterexample family, and the
// corpus driver. Output is deterministic for fixed arguments; timing rows are
// opt-in so that repeated runs stay byte-identical.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcw/catalog.hpp"
#include "mcw/check.hpp"
#include "mcw/corpus.hpp"
#include "mcw/group_ops.hpp"
#include "mcw/verbal.hpp"
#include "mcw/word_ops.hpp"
#include "mcw/word_tree.hpp"

namespace {

using namespace mcw;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WordTree resolve_word(const std::string& text) {
  auto suffix_int = [&](const std::string& prefix, int min_value) -> int {
    std::string tail = text.substr(prefix.size());
    if (tail.empty()) throw UsageError("word shortcut needs an index: " + text);
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw UsageError("word shortcut needs an integer index: " + text);
    int n = std::stoi(tail);
    if (n < min_value) throw UsageError("word shortcut index out of range: " + text);
    return n;
  };
  try {
    if (text.rfind("gamma", 0) == 0) return lower_central_word(suffix_int("gamma", 1));
    if (text.rfind("delta", 0) == 0) return derived_word(suffix_int("delta", 0));
    return WordTree::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse word '" + text + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("cannot parse word '" + text + "': " + e.what());
  }
}

PermGroup resolve_group_arg(const std::string& name_or_path) {
  try {
    return resolve_group(name_or_path);
  } catch (const std::exception& e) {
    throw UsageError("cannot resolve group '" + name_or_path + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

// Shared output plumbing: every command produces check reports; the text goes
// to standard output, the JSON document to --json when given.
struct Emitter {
  std::string json_path;
  bool timings = false;

  int finish(const std::vector<CheckReport>& reports) const {
    for (const CheckReport& r : reports) std::cout << report_to_text(r, timings) << "\n";
    if (reports.size() > 1) {
      std::uint64_t pass = 0, fail = 0, skip = 0;
      for (const CheckReport& r : reports) {
        if (r.passed())
          ++pass;
        else if (r.failed())
          ++fail;
        else
          ++skip;
      }
      std::cout << "pass: " << pass << "\n"
                << "fail: " << fail << "\n"
                << "skipped: " << skip << "\n";
    }
    if (!json_path.empty()) write_file(json_path, reports_json(reports, timings));
    for (const CheckReport& r : reports)
      if (r.failed()) return 1;
    return 0;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Permutation> good_generating_set(const PermGroup& g) {
  std::vector<Permutation> xs;
  for (const Permutation& s : g.generators()) {
    xs.push_back(s);
    xs.push_back(s.inverse());
  }
  return commutator_closure(g, std::move(xs));
}

CheckReport word_info_report(const WordTree& w) {
  CheckReport r;
  r.check = "word-info";
  r.input("word", w.render());
  r.quantity("height", static_cast<std::uint64_t>(w.height()));
  r.quantity("leaves", static_cast<std::uint64_t>(w.leaf_count()));
  r.quantity("vertices", static_cast<std::uint64_t>(w.vertex_count()));
  r.quantity("defect", std::to_string(w.defect()));
  r.quantity("full_tree", yes_no(w.defect() == 0));
  r.quantity("sections", static_cast<std::uint64_t>(all_sections(w).size()));
  return r;
}

CheckReport group_info_report(const PermGroup& g, std::uint64_t cap) {
  CheckReport r;
  r.check = "group-info";
  r.quantity("order", g.order());
  r.quantity("degree", static_cast<std::uint64_t>(g.degree()));
  r.quantity("generators", static_cast<std::uint64_t>(g.generators().size()));
  GroupClass c = classify(g);
  r.quantity("nilpotent", yes_no(c.nilpotent));
  r.quantity("soluble", yes_no(c.soluble));
  r.quantity("metanilpotent", yes_no(c.metanilpotent));
  r.quantity("perfect", yes_no(c.perfect));
  r.quantity("simple", yes_no(c.simple));
  if (c.soluble) {
    r.quantity("derived_length",
               static_cast<std::uint64_t>(structure_series(g, SeriesKind::derived).length));
    r.quantity("fitting_height",
               static_cast<std::uint64_t>(structure_series(g, SeriesKind::upper_fitting).length));
  }
  r.quantity("nonsoluble_length", static_cast<std::uint64_t>(nonsoluble_length(g)));
  r.quantity("min_generators", static_cast<std::uint64_t>(min_generators(g)));
  try {
    r.quantity("rank", static_cast<std::uint64_t>(rank_of_group(g, cap)));
  } catch (const CapExceeded&) {
    r.quantity("rank", "not computed (order above lattice cap)");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilinear commutator words over finite permutation groups"};
  app.require_subcommand(1);

  Emitter emit;
  app.add_option("--json", emit.json_path, "write a JSON report document to this path");
  app.add_flag("--timings", emit.timings, "include wall-clock millis in reports");

  int exit_code = 0;
  auto run = [&](auto&& body) {
    try {
      exit_code = body();
    } catch (const UsageError&) {
      throw;
    } catch (const CapExceeded& e) {
      std::cerr << "error: computation exceeded its cap: " << e.what() << "\n";
      exit_code = 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 1;
    }
  };

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // word ----------------------------------------------------------------
  CLI::App* word = app.add_subcommand("word", "inspect a commutator word");
  word->require_subcommand(1);
  word->fallthrough();

  std::string word_text;
  std::string dot_path;

  CLI::App* word_info = leaf(word, "info", "height, defect and section count of a word");
  word_info->add_option("word", word_text, "bracket grammar, gamma<n> or delta<n>")->required();
  word_info->add_option("--dot", dot_path, "also write the tree as DOT to this path");
  word_info->callback([&] {
    run([&] {
      WordTree w = resolve_word(word_text);
      if (!dot_path.empty()) write_file(dot_path, w.dot());
      return emit.finish({word_info_report(w)});
    });
  });

  CLI::App* word_dot = leaf(word, "dot", "emit the word tree in DOT form");
  word_dot->add_option("word", word_text, "bracket grammar, gamma<n> or delta<n>")->required();
  word_dot->add_option("--dot", dot_path, "write to this path instead of standard output");
  word_dot->callback([&] {
    run([&] {
      WordTree w = resolve_word(word_text);
      if (dot_path.empty())
        std::cout << w.dot();
      else
        write_file(dot_path, w.dot());
      return 0;
    });
  });

  // group ---------------------------------------------------------------
  CLI::App* group = app.add_subcommand("group", "inspect a catalog or file group");
  group->require_subcommand(1);
  group->fallthrough();

  std::string group_name;
  std::uint64_t lattice_cap = kDefaultLatticeCap;

  CLI::App* group_info = leaf(group, "info", "order, classification and invariants");
  group_info->add_option("group", group_name, "catalog name or group file path")->required();
  group_info->add_option("--cap", lattice_cap, "lattice enumeration cap");
  group_info->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      CheckReport r = group_info_report(g, lattice_cap);
      r.inputs.insert(r.inputs.begin(), {"group", group_name});
      return emit.finish({r});
    });
  });

  // verbal --------------------------------------------------------------
  CLI::App* verbal = app.add_subcommand("verbal", "verbal subgroup computation");
  verbal->require_subcommand(1);
  verbal->fallthrough();

  EvalOptions eval;

  CLI::App* verbal_compute = leaf(verbal, "compute", "compute w(G) and report its order");
  verbal_compute->add_option("--group", group_name, "catalog name or group file path")->required();
  verbal_compute->add_option("--word", word_text, "bracket grammar, gamma<n> or delta<n>")->required();
  verbal_compute->add_flag("--sampled", eval.sampled, "sampled evaluation instead of exhaustive");
  verbal_compute->add_option("--seed", eval.seed, "sampling seed");
  verbal_compute->add_option("--draws", eval.draws, "tuples drawn per sampling round");
  verbal_compute->add_option("--budget", eval.budget, "pairwise product budget");
  verbal_compute->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text);
      CheckReport r;
      r.check = "verbal";
      r.input("group", group_name);
      r.input("word", w.render());
      r.input("mode", eval.sampled ? "sampled" : "exhaustive");
      try {
        VerbalResult res = verbal_subgroup(g, w, eval);
        r.quantity("group_order", g.order());
        r.quantity("subgroup_order", res.subgroup.order());
        r.quantity("index", g.order() / res.subgroup.order());
        r.quantity("verified", yes_no(res.verified));
      } catch (const CapExceeded& e) {
        r.verdict = Verdict::skipped;
        r.reason = std::string("budget: ") + e.what();
      }
      return emit.finish({r});
    });
  });

  // check ---------------------------------------------------------------
  CLI::App* check = app.add_subcommand("check", "run one checker");
  check->require_subcommand(1);
  check->fallthrough();

  std::uint64_t prime = 2;
  bool exploratory = false;
  std::string eta_text = "gamma2";
  int section_level = -1;
  std::string mode_name = "nilpotent";

  CLI::App* c_focal = leaf(check, "focal", "P meet w(G) against the w-values inside P");
  c_focal->add_option("--group", group_name)->required();
  c_focal->add_option("--word", word_text)->required();
  c_focal->add_option("--prime", prime)->required();
  c_focal->add_flag("--nonsoluble-exploratory", exploratory,
                    "record the identity test on nonsoluble groups as data");
  c_focal->add_option("--budget", eval.budget);
  c_focal->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text);
      return emit.finish({check_focal(g, w, prime, exploratory, eval)});
    });
  });

  CLI::App* c_goodgen = leaf(check, "goodgen", "verbal generation from a commutator-closed set");
  c_goodgen->add_option("--group", group_name)->required();
  c_goodgen->add_option("--word", word_text)->required();
  c_goodgen->add_option("--budget", eval.budget);
  c_goodgen->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text);
      return emit.finish({check_goodgen(g, good_generating_set(g), w, eval)});
    });
  });

  CLI::App* c_rank = leaf(check, "rank", "rank of w(G) against the lattice bound");
  c_rank->add_option("--group", group_name)->required();
  c_rank->add_option("--word", word_text)->required();
  c_rank->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"nilpotent", "metanilpotent"}));
  c_rank->add_option("--cap", lattice_cap);
  c_rank->add_option("--budget", eval.budget);
  c_rank->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text);
      RankMode mode = mode_name == "metanilpotent" ? RankMode::metanilpotent : RankMode::nilpotent;
      return emit.finish({check_rank_bound(g, w, mode, lattice_cap, eval)});
    });
  });

  CLI::App* c_fitting = leaf(check, "fitting", "Fitting height against 2*rank + 1");
  c_fitting->add_option("--group", group_name)->required();
  c_fitting->add_option("--cap", lattice_cap);
  c_fitting->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      return emit.finish({check_fitting_bound(g, lattice_cap)});
    });
  });

  CLI::App* c_section = leaf(check, "section", "[w(G),eta(G)] under the section extensions");
  c_section->add_option("--group", group_name)->required();
  c_section->add_option("--word", word_text)->required();
  c_section->add_option("--eta", eta_text, "second word (default gamma2)");
  c_section->add_option("--level", section_level,
                        "check only the section cut below this level");
  c_section->add_option("--budget", eval.budget);
  c_section->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text);
      WordTree eta = resolve_word(eta_text);
      std::vector<CheckReport> reports;
      if (section_level >= 0) {
        if (section_level >= w.height())
          throw UsageError("--level must lie in [0, height), height is " +
                           std::to_string(w.height()));
        reports.push_back(check_section_lemma(g, w, eta, section_below_level(w, section_level), eval));
      } else {
        for (const Section& s : all_sections(w))
          reports.push_back(check_section_lemma(g, w, eta, s, eval));
      }
      return emit.finish(reports);
    });
  });

  CLI::App* c_abelian = leaf(check, "abelian-wi", "poset sweep for nonabelian dead ends");
  c_abelian->add_option("--group", group_name)->required();
  c_abelian->add_option("--word", word_text)->required();
  c_abelian->add_option("--budget", eval.budget);
  c_abelian->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text);
      return emit.finish({check_abelian_wi(g, w, eval)});
    });
  });

  CLI::App* c_pset = leaf(check, "pset", "YN meet PN = (Y meet P)N for the p-part of the values");
  c_pset->add_option("--group", group_name)->required();
  c_pset->add_option("--prime", prime)->required();
  c_pset->add_option("--word", word_text, "value-producing word (default gamma2)");
  c_pset->add_option("--budget", eval.budget);
  c_pset->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text.empty() ? "gamma2" : word_text);
      ValueSet values = w_values(g, w, eval);
      PPartition parts = p_partition(g, values, prime);
      PermGroup n = subgroup_from_values(g, values.elements);
      return emit.finish({check_pset(g, n, prime, parts.y.elements)});
    });
  });

  CLI::App* c_lemma_t = leaf(check, "lemma-t", "T = [H,K] under the conjugate-containment hypothesis");
  c_lemma_t->add_option("--group", group_name)->required();
  c_lemma_t->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      PermGroup derived = commutator_subgroup(g, g, g);
      return emit.finish({check_lemma_T(g, g.elements(), derived.elements())});
    });
  });

  CLI::App* c_supplement = leaf(check, "supplement", "minimal supplements to the derived terms");
  c_supplement->add_option("--group", group_name)->required();
  c_supplement->add_option("--cap", lattice_cap);
  c_supplement->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      std::vector<CheckReport> reports;
      for (const PermGroup& n : structure_series(g, SeriesKind::derived).terms)
        reports.push_back(find_frattini_supplement(g, n, lattice_cap).report);
      return emit.finish(reports);
    });
  });

  CLI::App* c_centralizer = leaf(check, "centralizer", "minimal normals against the w-values");
  c_centralizer->add_option("--group", group_name)->required();
  c_centralizer->add_option("--word", word_text, "value-producing word (default gamma2)");
  c_centralizer->add_option("--budget", eval.budget);
  c_centralizer->callback([&] {
    run([&] {
      PermGroup g = resolve_group_arg(group_name);
      WordTree w = resolve_word(word_text.empty() ? "gamma2" : word_text);
      std::vector<PermGroup> normals = normal_subgroups(g);
      std::vector<CheckReport> reports;
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
        if (minimal) reports.push_back(check_centralizer_fact(g, w, n, eval));
      }
      return emit.finish(reports);
    });
  });

  // counterexample --------------------------------------------------------
  CLI::App* counter = app.add_subcommand("counterexample", "reproduce the power-word family");
  counter->require_subcommand(1);
  counter->fallthrough();

  std::uint64_t frob_p = 3;
  int frob_m = 1;
  std::uint64_t frob_n = 3;

  CLI::App* frob = leaf(counter, "frobenius", "Frobenius group with unbounded kernel rank");
  frob->add_option("--p", frob_p, "kernel characteristic")->required();
  frob->add_option("--m", frob_m, "kernel rank, the field degree")->required();
  frob->add_option("--n", frob_n, "the power word exponent")->required();
  frob->callback([&] {
    run([&] { return emit.finish({frobenius_counterexample(frob_p, frob_m, frob_n).report}); });
  });

  // corpus ----------------------------------------------------------------
  CLI::App* corpus = app.add_subcommand("corpus", "run the whole check corpus");
  corpus->require_subcommand(1);
  corpus->fallthrough();

  CorpusOptions corpus_opt;

  CLI::App* corpus_run = leaf(corpus, "run", "all checks over a catalog profile");
  corpus_run->add_option("--profile", corpus_opt.profile, "smoke or full")
      ->check(CLI::IsMember({"smoke", "full"}));
  corpus_run->add_option("--jobs", corpus_opt.jobs, "worker threads");
  corpus_run->add_option("--budget", corpus_opt.budget, "pairwise product budget per evaluation");
  corpus_run->add_option("--cap", corpus_opt.lattice_cap, "lattice enumeration cap");
  corpus_run->callback([&] {
    run([&] {
      CorpusRun result = run_corpus(corpus_opt);
      std::cout << corpus_text(result, emit.timings);
      if (!emit.json_path.empty()) write_file(emit.json_path, corpus_json(result, emit.timings));
      return result.failures == 0 ? 0 : 1;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
