#include "contest/report.hpp"

#include <algorithm>
#include <cstdio>

#include "contest/printer.hpp"

namespace contest {

namespace {

std::vector<std::string> label_names(const LabelSet& s) {
  std::vector<std::string> out;
  for (ClauseLabel l : s) out.push_back(to_string(l));
  return out;
}

std::vector<std::vector<std::string>> trace_names(const Trace& t) {
  std::vector<std::vector<std::string>> out;
  for (const LabelSet& s : t) out.push_back(label_names(s));
  return out;
}

std::string set_text(const std::vector<std::string>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

std::string trace_text(const std::vector<std::vector<std::string>>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + set_text(t[i]);
  return out + ")";
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", v * 100.0);
  return buf;
}

RunSummary::Coverage coverage_view(const CoverageReport& c) {
  RunSummary::Coverage v;
  v.mode = to_string(c.mode);
  v.covered = c.covered;
  v.total = c.total;
  v.clause_coverage = c.clause_coverage;
  for (const auto& [l, n] : c.per_clause_counts) v.per_clause.emplace_back(to_string(l), n);
  for (const auto& [k, sets] : c.choice_sites) {
    std::vector<std::vector<std::string>> names;
    for (const LabelSet& s : sets) names.push_back(label_names(s));
    v.choice_sites.emplace_back(to_string(k), std::move(names));
  }
  return v;
}

void render_coverage_view(const RunSummary::Coverage& c, std::string& out) {
  out += "clause coverage (" + c.mode + "): " + std::to_string(c.covered) + "/" +
         std::to_string(c.total) + " = " + percent(c.clause_coverage) + "\n";
  for (const auto& [l, n] : c.per_clause) out += "  " + pad(l, 6) + std::to_string(n) + "\n";
  if (!c.choice_sites.empty()) out += "choice sites:\n";
  for (const auto& [k, sets] : c.choice_sites) {
    out += "  " + k + " ";
    for (const auto& s : sets) out += " " + set_text(s);
    out += "\n";
  }
}

}  // namespace

std::string to_string(CoverageMode m) {
  return m == CoverageMode::FirstAnswer ? "first-answer" : "all-solutions";
}

RunSummary summarize(const std::string& program_name, const TestSpec& spec,
                     const DriverReport& report, const CoverageReport& coverage) {
  RunSummary s;
  s.program = program_name;
  s.goal = to_string(spec.initial_goal);
  s.k = spec.depth_bound;
  s.inp = spec.input_positions;
  for (const TestCase& tc : report.test_cases) {
    RunSummary::Case c{to_string(tc.goal), trace_names(tc.trace), to_string(tc.outcome), ""};
    if (tc.outcome == Outcome::Success && !tc.answer.empty()) c.answer = to_string(tc.answer);
    s.test_cases.push_back(std::move(c));
  }
  for (const Trace& t : report.traces) s.traces.push_back(trace_names(t));
  s.coverage = coverage_view(coverage);
  s.iterations = report.iterations;
  s.backstop_hit = report.backstop_hit;
  return s;
}

nlohmann::ordered_json to_json(const RunSummary& s) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = 1;
  j["program"] = s.program;
  j["goal"] = s.goal;
  j["k"] = s.k;
  j["inp"] = s.inp;
  json cases = json::array();
  for (const auto& c : s.test_cases) {
    json jc{{"goal", c.goal}, {"trace", c.trace}, {"outcome", c.outcome}};
    if (!c.answer.empty()) jc["answer"] = c.answer;
    cases.push_back(std::move(jc));
  }
  j["test_cases"] = std::move(cases);
  j["traces"] = s.traces;
  json per_clause = json::object();
  for (const auto& [l, n] : s.coverage.per_clause) per_clause[l] = n;
  json sites = json::object();
  for (const auto& [k, sets] : s.coverage.choice_sites) sites[k] = sets;
  j["coverage"] = {{"mode", s.coverage.mode},
                   {"covered", s.coverage.covered},
                   {"total", s.coverage.total},
                   {"clause_coverage", s.coverage.clause_coverage},
                   {"per_clause", per_clause},
                   {"choice_sites", sites}};
  j["iterations"] = s.iterations;
  j["backstop_hit"] = s.backstop_hit;
  return j;
}

RunSummary summary_from_json(const nlohmann::ordered_json& j) {
  RunSummary s;
  s.program = j.at("program").get<std::string>();
  s.goal = j.at("goal").get<std::string>();
  s.k = j.at("k").get<std::size_t>();
  s.inp = j.at("inp").get<std::vector<std::size_t>>();
  for (const auto& jc : j.at("test_cases")) {
    RunSummary::Case c;
    c.goal = jc.at("goal").get<std::string>();
    c.trace = jc.at("trace").get<std::vector<std::vector<std::string>>>();
    c.outcome = jc.at("outcome").get<std::string>();
    if (jc.contains("answer")) c.answer = jc.at("answer").get<std::string>();
    s.test_cases.push_back(std::move(c));
  }
  s.traces = j.at("traces").get<std::vector<std::vector<std::vector<std::string>>>>();
  const auto& jcov = j.at("coverage");
  s.coverage.mode = jcov.at("mode").get<std::string>();
  s.coverage.covered = jcov.at("covered").get<std::size_t>();
  s.coverage.total = jcov.at("total").get<std::size_t>();
  s.coverage.clause_coverage = jcov.at("clause_coverage").get<double>();
  for (const auto& [l, n] : jcov.at("per_clause").items())
    s.coverage.per_clause.emplace_back(l, n.get<std::size_t>());
  for (const auto& [k, sets] : jcov.at("choice_sites").items())
    s.coverage.choice_sites.emplace_back(k, sets.get<std::vector<std::vector<std::string>>>());
  s.iterations = j.at("iterations").get<std::size_t>();
  s.backstop_hit = j.at("backstop_hit").get<bool>();
  return s;
}

std::string render_text(const RunSummary& s) {
  std::string out;
  std::string inp;
  for (std::size_t i = 0; i < s.inp.size(); ++i) inp += (i ? "," : "") + std::to_string(s.inp[i]);
  out += "program: " + s.program + "\n";
  out += "goal: " + s.goal + "  inp: {" + inp + "}  k: " + std::to_string(s.k) + "\n";
  out += "test cases: " + std::to_string(s.test_cases.size()) + "\n";
  std::size_t w = 4;
  for (const auto& c : s.test_cases) w = std::max(w, c.goal.size());
  out += "  " + pad("#", 4) + pad("goal", w + 2) + pad("outcome", 16) + "trace\n";
  for (std::size_t i = 0; i < s.test_cases.size(); ++i) {
    const auto& c = s.test_cases[i];
    out += "  " + pad(std::to_string(i + 1), 4) + pad(c.goal, w + 2) + pad(c.outcome, 16) +
           trace_text(c.trace);
    if (!c.answer.empty()) out += "  " + c.answer;
    out += "\n";
  }
  out += "traces: " + std::to_string(s.traces.size()) + "\n";
  for (const auto& t : s.traces) out += "  " + trace_text(t) + "\n";
  render_coverage_view(s.coverage, out);
  out += "iterations: " + std::to_string(s.iterations);
  if (s.backstop_hit) out += " (iteration backstop reached)";
  out += "\n";
  return out;
}

std::string render_coverage(const CoverageReport& c) {
  std::string out;
  for (const auto& [goal, outcome] : c.per_test_outcomes)
    out += pad(to_string(goal), 24) + " " + to_string(outcome) + "\n";
  render_coverage_view(coverage_view(c), out);
  out += "unfold steps: " + std::to_string(c.total_unfolds) + "\n";
  return out;
}

}  // namespace contest
