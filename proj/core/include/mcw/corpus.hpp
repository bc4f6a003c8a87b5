#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcw/check.hpp"
#include "mcw/word_tree.hpp"

namespace mcw {

struct CorpusOptions {
  std::string profile = "smoke";
  int jobs = 1;
  std::uint64_t budget = kDefaultEvalBudget;
  std::uint64_t lattice_cap = kDefaultLatticeCap;
};

struct CorpusRun {
  std::string profile;
  std::vector<CheckReport> reports;  // canonical job order, independent of scheduling
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::uint64_t skips = 0;
};

// Corpus word list. The smoke profile pins seven words; the full profile
// enumerates every shape of height at most 3 with at most 6 leaves.
std::vector<std::pair<std::string, WordTree>> corpus_words(const std::string& profile);

CorpusRun run_corpus(const CorpusOptions& opt);

std::string report_json(const CheckReport& r, bool with_millis = false);
// {counts, reports} document over an ad-hoc report list; same record shape as
// the corpus document.
std::string reports_json(const std::vector<CheckReport>& reports, bool with_millis = false);
std::string corpus_json(const CorpusRun& run, bool with_millis = false);
std::string corpus_text(const CorpusRun& run, bool with_millis = false);

}  // namespace mcw
