#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scor/experiment.hpp"
#include "scor/objectives.hpp"

namespace scor {

/// One fitted combining vector as reported by `fit`.
struct SolutionRecord {
  std::string method;
  std::string objective;
  std::vector<std::string> names;
  std::vector<double> coefficients;
  bool min_max_reduced = false;
  double ehum = 0.0;  ///< on the fitting data
  double ulba_pa = 0.0;
  double ulba_pm = 0.0;
  std::optional<double> test_ehum;
  std::optional<CutPoints> cutpoints;
  std::size_t evaluations = 0;
  double seconds = 0.0;  ///< wall clock; only emitted in "timing" records

  friend bool operator==(const SolutionRecord&, const SolutionRecord&);
};

/// Output of `fit`. Serialized as JSON Lines: one "header" record, one "solution"
/// record per fitted method, one "summary" record, then "timing" records.
struct RunReport {
  nlohmann::json config;
  std::vector<std::size_t> class_sizes;
  double random_guess = 0.0;
  std::vector<SolutionRecord> solutions;
  std::string best_method;

  friend bool operator==(const RunReport&, const RunReport&);
};

std::string to_jsonl(const RunReport& report, bool with_timings = true);
RunReport parse_run_report(std::istream& in);

/// Output of `simulate`: a "header" record then one "replication" record per cell.
/// Contains no timings, so identical inputs give identical bytes.
struct SimulationReport {
  nlohmann::json config;
  std::vector<ReplicationReport> cells;
};

std::string to_jsonl(const SimulationReport& report);
SimulationReport parse_simulation_report(std::istream& in);

/// Drops "timing" records, leaving the part of a report that is reproducible.
std::string canonical_report(const std::string& jsonl);

nlohmann::json to_json(const CutPoints& c);
CutPoints cutpoints_from_json(const nlohmann::json& j);

}  // namespace scor
