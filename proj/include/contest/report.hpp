#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "contest/coverage.hpp"
#include "contest/driver.hpp"

namespace contest {

/// Printable view of a driver run; built from a report or read back from JSON.
struct RunSummary {
  struct Case {
    std::string goal;
    std::vector<std::vector<std::string>> trace;
    std::string outcome;
    std::string answer;
  };
  struct Coverage {
    std::string mode;
    std::size_t covered = 0;
    std::size_t total = 0;
    double clause_coverage = 0.0;
    std::vector<std::pair<std::string, std::size_t>> per_clause;
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> choice_sites;
  };

  std::string program;
  std::string goal;
  std::size_t k = 0;
  std::vector<std::size_t> inp;
  std::vector<Case> test_cases;
  std::vector<std::vector<std::vector<std::string>>> traces;
  Coverage coverage;
  std::size_t iterations = 0;
  bool backstop_hit = false;
};

RunSummary summarize(const std::string& program_name, const TestSpec& spec,
                     const DriverReport& report, const CoverageReport& coverage);

nlohmann::ordered_json to_json(const RunSummary& s);
RunSummary summary_from_json(const nlohmann::ordered_json& j);  // throws on malformed input

std::string render_text(const RunSummary& s);

std::string to_string(CoverageMode m);  // first-answer, all-solutions
std::string render_coverage(const CoverageReport& c);

}  // namespace contest
