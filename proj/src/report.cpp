#include "scor/report.hpp"

#include <istream>
#include <sstream>

#include "scor/errors.hpp"
#include "scor/random.hpp"

namespace scor {

using nlohmann::json;

bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
  auto cut_eq = [](const std::optional<CutPoints>& x, const std::optional<CutPoints>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->thresholds == y->thresholds && x->youden_values == y->youden_values &&
           x->monotonicity_violated == y->monotonicity_violated;
  };
  return a.method == b.method && a.objective == b.objective && a.names == b.names &&
         a.coefficients == b.coefficients && a.min_max_reduced == b.min_max_reduced &&
         a.ehum == b.ehum && a.ulba_pa == b.ulba_pa && a.ulba_pm == b.ulba_pm &&
         a.test_ehum == b.test_ehum && cut_eq(a.cutpoints, b.cutpoints) &&
         a.evaluations == b.evaluations && a.seconds == b.seconds;
}

bool operator==(const RunReport& a, const RunReport& b) {
  return a.config == b.config && a.class_sizes == b.class_sizes && a.random_guess == b.random_guess &&
         a.solutions == b.solutions && a.best_method == b.best_method;
}

json to_json(const CutPoints& c) {
  return json{{"thresholds", c.thresholds},
              {"youden", c.youden_values},
              {"youden_mean", c.mean_youden()},
              {"monotonicity_violated", c.monotonicity_violated}};
}

CutPoints cutpoints_from_json(const json& j) {
  CutPoints c;
  c.thresholds = j.at("thresholds").get<std::vector<double>>();
  c.youden_values = j.at("youden").get<std::vector<double>>();
  c.monotonicity_violated = j.at("monotonicity_violated").get<bool>();
  return c;
}

namespace {

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report record: ") + e.what(), line_no, 0);
  }
}

template <typename F>
void for_each_record(std::istream& in, F&& f) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    f(parse_line(line, line_no));
  }
}

}  // namespace

std::string to_jsonl(const RunReport& report, bool with_timings) {
  std::ostringstream out;
  out << json{{"type", "header"},
              {"command", "fit"},
              {"rng", kRngName},
              {"config", report.config},
              {"class_sizes", report.class_sizes}}
             .dump()
      << '\n';
  for (const auto& s : report.solutions) {
    json rec{{"type", "solution"},
             {"method", s.method},
             {"objective", s.objective},
             {"names", s.names},
             {"coefficients", s.coefficients},
             {"min_max_reduced", s.min_max_reduced},
             {"ehum", s.ehum},
             {"ulba_pa", s.ulba_pa},
             {"ulba_pm", s.ulba_pm},
             {"test_ehum", s.test_ehum ? json(*s.test_ehum) : json(nullptr)},
             {"cutpoints", s.cutpoints ? to_json(*s.cutpoints) : json(nullptr)},
             {"evaluations", s.evaluations}};
    out << rec.dump() << '\n';
  }
  out << json{{"type", "summary"},
              {"best_method", report.best_method},
              {"random_guess_hum", report.random_guess}}
             .dump()
      << '\n';
  if (with_timings) {
    for (const auto& s : report.solutions) {
      out << json{{"type", "timing"}, {"method", s.method}, {"objective", s.objective}, {"seconds", s.seconds}}
                 .dump()
          << '\n';
    }
  }
  return out.str();
}

RunReport parse_run_report(std::istream& in) {
  RunReport report;
  for_each_record(in, [&](const json& rec) {
    const std::string type = rec.at("type").get<std::string>();
    if (type == "header") {
      report.config = rec.at("config");
      report.class_sizes = rec.at("class_sizes").get<std::vector<std::size_t>>();
    } else if (type == "solution") {
      SolutionRecord s;
      s.method = rec.at("method").get<std::string>();
      s.objective = rec.at("objective").get<std::string>();
      s.names = rec.at("names").get<std::vector<std::string>>();
      s.coefficients = rec.at("coefficients").get<std::vector<double>>();
      s.min_max_reduced = rec.at("min_max_reduced").get<bool>();
      s.ehum = rec.at("ehum").get<double>();
      s.ulba_pa = rec.at("ulba_pa").get<double>();
      s.ulba_pm = rec.at("ulba_pm").get<double>();
      if (!rec.at("test_ehum").is_null()) s.test_ehum = rec.at("test_ehum").get<double>();
      if (!rec.at("cutpoints").is_null()) s.cutpoints = cutpoints_from_json(rec.at("cutpoints"));
      s.evaluations = rec.at("evaluations").get<std::size_t>();
      report.solutions.push_back(std::move(s));
    } else if (type == "summary") {
      report.best_method = rec.at("best_method").get<std::string>();
      report.random_guess = rec.at("random_guess_hum").get<double>();
    } else if (type == "timing") {
      for (auto& s : report.solutions) {
        if (s.method == rec.at("method") && s.objective == rec.at("objective")) {
          s.seconds = rec.at("seconds").get<double>();
        }
      }
    }
  });
  return report;
}

std::string to_jsonl(const SimulationReport& report) {
  std::ostringstream out;
  out << json{{"type", "header"}, {"command", "simulate"}, {"rng", kRngName}, {"config", report.config}}.dump()
      << '\n';
  for (const auto& c : report.cells) {
    out << json{{"type", "replication"},
                {"method", to_string(c.method)},
                {"objective", to_string(c.criterion)},
                {"replications", c.replications},
                {"mean_test_ehum", c.mean_test_ehum},
                {"sd_test_ehum", c.sd_test_ehum},
                {"se_test_ehum", c.se_test_ehum},
                {"values", c.values}}
               .dump()
        << '\n';
  }
  return out.str();
}

SimulationReport parse_simulation_report(std::istream& in) {
  SimulationReport report;
  for_each_record(in, [&](const json& rec) {
    const std::string type = rec.at("type").get<std::string>();
    if (type == "header") {
      report.config = rec.at("config");
    } else if (type == "replication") {
      ReplicationReport r = summarize(parse_method(rec.at("method").get<std::string>()),
                                      parse_criterion(rec.at("objective").get<std::string>()),
                                      rec.at("values").get<std::vector<double>>());
      r.mean_test_ehum = rec.at("mean_test_ehum").get<double>();
      r.sd_test_ehum = rec.at("sd_test_ehum").get<double>();
      r.se_test_ehum = rec.at("se_test_ehum").get<double>();
      report.cells.push_back(std::move(r));
    }
  });
  return report;
}

std::string canonical_report(const std::string& jsonl) {
  std::istringstream in(jsonl);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (json::parse(line).value("type", "") == "timing") continue;
    out << line << '\n';
  }
  return out.str();
}

}  // namespace scor
