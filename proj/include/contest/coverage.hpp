#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "contest/concrete.hpp"

namespace contest {

enum class CoverageMode {
  FirstAnswer,   // stop at the first answer, as the engine does
  AllSolutions,  // keep backtracking after each answer until the tree is exhausted
};

struct CoverageReport {
  std::map<ClauseLabel, std::size_t> per_clause_counts;  // every program clause, zero if unused
  std::size_t covered = 0;
  std::size_t total = 0;
  double clause_coverage = 0.0;
  std::map<PredicateKey, std::set<LabelSet>> choice_sites;
  std::vector<std::pair<Atom, Outcome>> per_test_outcomes;
  std::size_t total_unfolds = 0;
  CoverageMode mode = CoverageMode::FirstAnswer;
};

CoverageReport measure(const Program& p, std::span<const Atom> suite, std::size_t fuel,
                       unsigned threads = 1, CoverageMode mode = CoverageMode::FirstAnswer);

}  // namespace contest
