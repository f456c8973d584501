#include "scor/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "scor/analytic.hpp"
#include "scor/baselines.hpp"
#include "scor/dataset.hpp"
#include "scor/errors.hpp"
#include "scor/experiment.hpp"
#include "scor/report.hpp"

namespace scor {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidConfig("cannot write '" + path + "'");
  out << text;
}

void apply_thread_env() {
  if (const char* v = std::getenv(kThreadsEnv)) {
    const int n = std::atoi(v);
    if (n < 1) throw InvalidConfig(std::string(kThreadsEnv) + " must be a positive integer");
    omp_set_num_threads(n);
  }
}

struct ScorOverrides {
  ScorConfig config;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--lambda", config.lambda, "Sparsity threshold")->capture_default_str();
    cmd->add_option("--s-initial", config.s_initial, "Initial step size per run")->capture_default_str();
    cmd->add_option("--rho", config.rho, "Step decay rate")->capture_default_str();
    cmd->add_option("--phi", config.phi, "Step size threshold")->capture_default_str();
    cmd->add_option("--tol-fun", config.tol_fun)->capture_default_str();
    cmd->add_option("--tol-fun-2", config.tol_fun_2)->capture_default_str();
    cmd->add_option("--max-iters", config.max_iters)->capture_default_str();
    cmd->add_option("--max-runs", config.max_runs)->capture_default_str();
  }
};

json config_json(const ScorConfig& c) {
  return json{{"s_initial", c.s_initial}, {"rho", c.rho},         {"phi", c.phi},
              {"lambda", c.lambda},       {"tol_fun", c.tol_fun}, {"tol_fun_2", c.tol_fun_2},
              {"max_iters", c.max_iters}, {"max_runs", c.max_runs}};
}

std::vector<Method> methods_from(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.assign(std::begin(kAllMethods), std::end(kAllMethods));
      return out;
    }
    out.push_back(parse_method(n));
  }
  return out;
}

// ---------------------------------------------------------------- fit

struct FitArgs {
  std::string data;
  std::string test;
  std::string objective = "ehum";
  std::vector<std::string> methods{"scor"};
  std::uint64_t seed = 0;
  int starts = 1;
  std::string merge_labels;
  std::string out;
  ScorOverrides scor;
};

FittedCombiner fit_scor_multistart(Criterion criterion, const MulticlassSample& train,
                                   const ScorConfig& config, int starts, std::uint64_t seed) {
  const std::size_t d = train.dimension();
  std::vector<UnitVector> points{UnitVector::uniform(d)};
  PhiloxEngine rng(StreamKey{seed, 0, 2});
  std::vector<double> v(d);
  for (int s = 1; s < starts; ++s) {
    for (double& x : v) x = rng.normal();
    points.push_back(normalize(v));
  }
  const Objective f = make_objective(criterion, std::make_shared<const MulticlassSample>(train));
  const Objective negated{
      .dimension = d,
      .evaluate = [&f](const UnitVector& b) { return -f(b); },
      .thread_safe = true,
  };
  ScorConfig c = config;
  c.keep_trace = false;
  ScorResult r = multistart(negated, points, c);
  return FittedCombiner{
      .method = Method::Scor,
      .criterion = criterion,
      .coefficients = std::move(r.solution),
      .train_value = -r.objective_value,
      .evaluations = static_cast<std::size_t>(r.evaluations),
  };
}

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err) {
  const Criterion criterion = parse_criterion(args.objective);
  const std::vector<Method> methods = methods_from(args.methods);
  if (methods.empty()) throw InvalidConfig("no methods requested");
  if (args.starts < 1) throw InvalidConfig("--starts must be >= 1");
  args.scor.config.validate();
  const LabelMap merge = parse_label_map(args.merge_labels);

  const DatasetFile data = read_dataset(args.data, merge);
  for (std::size_t k : constant_columns(data.sample)) {
    err << "warning: column '" << data.column_names[k] << "' is constant\n";
  }
  std::optional<DatasetFile> test;
  if (!args.test.empty()) {
    test = read_dataset(args.test, merge);
    if (test->sample.dimension() != data.sample.dimension()) {
      throw DimensionMismatch(data.sample.dimension(), test->sample.dimension());
    }
    if (test->sample.num_classes() != data.sample.num_classes()) {
      throw InvalidConfig("test data has a different number of classes");
    }
  }

  RunReport report;
  report.class_sizes = data.sample.class_sizes();
  report.random_guess = random_guess_hum(data.sample.num_classes());
  json method_names = json::array();
  for (Method m : methods) method_names.push_back(to_string(m));
  report.config = json{{"data", args.data},
                       {"test", args.test.empty() ? json(nullptr) : json(args.test)},
                       {"objective", to_string(criterion)},
                       {"methods", method_names},
                       {"seed", args.seed},
                       {"starts", args.starts},
                       {"merge_labels", args.merge_labels},
                       {"scor", config_json(args.scor.config)}};

  for (Method m : methods) {
    const auto t0 = Clock::now();
    const FittedCombiner fit = m == Method::Scor
                                   ? fit_scor_multistart(criterion, data.sample, args.scor.config,
                                                         args.starts, args.seed)
                                   : fit_method(m, criterion, data.sample, args.scor.config);
    const double elapsed = seconds_since(t0);

    SolutionRecord rec;
    rec.method = to_string(m);
    rec.objective = to_string(criterion);
    rec.names = fit.min_max_reduced ? std::vector<std::string>{"max", "min"} : data.column_names;
    rec.coefficients = fit.coefficients.values();
    rec.min_max_reduced = fit.min_max_reduced;
    const ScoreSet s = combiner_scores(fit, data.sample);
    rec.ehum = ehum(s);
    rec.ulba_pa = ulba_pa(s);
    rec.ulba_pm = ulba_pm(s);
    if (test) rec.test_ehum = evaluate_ehum(fit, test->sample);
    try {
      rec.cutpoints = youden_cutpoints(s);
    } catch (const DegenerateScores& e) {
      err << "warning: " << rec.method << ": " << e.what() << '\n';
    }
    rec.evaluations = fit.evaluations;
    rec.seconds = elapsed;
    report.solutions.push_back(std::move(rec));
  }

  auto score_of = [](const SolutionRecord& r) { return r.test_ehum.value_or(r.ehum); };
  const auto best = std::max_element(report.solutions.begin(), report.solutions.end(),
                                     [&](const auto& a, const auto& b) { return score_of(a) < score_of(b); });
  report.best_method = best->method;

  out << "objective: " << to_string(criterion) << "   classes: " << report.class_sizes.size()
      << "   random-guess HUM: " << fmt("%.3f", report.random_guess) << '\n';
  out << "method     D_E(fit)  P_A     P_M     D_E(test)  Youden(mean)  time(s)\n";
  for (const auto& r : report.solutions) {
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %-9.4f %-7.4f %-7.4f %-10s %-13s %.3f%s\n", r.method.c_str(),
                  r.ehum, r.ulba_pa, r.ulba_pm, r.test_ehum ? fmt("%.4f", *r.test_ehum).c_str() : "-",
                  r.cutpoints ? fmt("%.4f", r.cutpoints->mean_youden()).c_str() : "-", r.seconds,
                  r.method == report.best_method ? "  *" : "");
    out << line;
  }
  for (const auto& r : report.solutions) {
    out << r.method << " coefficients:";
    for (std::size_t k = 0; k < r.coefficients.size(); ++k) {
      out << ' ' << r.names[k] << '=' << fmt("%.4f", r.coefficients[k]);
    }
    if (r.cutpoints) {
      out << "  cut-points:";
      for (double t : r.cutpoints->thresholds) out << ' ' << fmt("%.4g", t);
      out << "  Youden:";
      for (double y : r.cutpoints->youden_values) out << ' ' << fmt("%.3f", y);
      if (r.cutpoints->monotonicity_violated) out << "  (non-monotone)";
    }
    out << '\n';
  }
  if (!args.out.empty()) write_text(args.out, to_jsonl(report));
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  int scenario = 1;
  std::size_t num_classes = 2;
  std::size_t d = 5;
  std::vector<std::size_t> n{15};
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> methods{"all"};
  std::vector<std::string> objectives{"ehum", "ulba"};
  std::string out;
  ScorOverrides scor;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  ScenarioSpec spec{
      .scenario = scenario_from_id(args.scenario),
      .num_classes = args.num_classes,
      .dimension = args.d,
      .n_per_class = args.n.size() == 1 ? std::vector<std::size_t>(args.num_classes, args.n.front()) : args.n,
      .seed = args.seed,
  };
  spec.validate();
  const std::vector<Method> methods = methods_from(args.methods);
  std::vector<Criterion> criteria;
  for (const auto& o : args.objectives) criteria.push_back(parse_criterion(o));
  if (methods.empty() || criteria.empty()) throw InvalidConfig("need at least one method and objective");

  SimulationReport report;
  report.cells = replicate_experiment(spec, methods, criteria, args.reps, args.seed, args.scor.config);
  report.config = json{{"scenario", args.scenario},
                       {"M", spec.num_classes},
                       {"d", spec.dimension},
                       {"n", spec.n_per_class},
                       {"replications", args.reps},
                       {"seed", args.seed},
                       {"scor", config_json(args.scor.config)}};

  out << "scenario " << args.scenario << ", M=" << spec.num_classes << ", d=" << spec.dimension << ", n=(";
  for (std::size_t j = 0; j < spec.n_per_class.size(); ++j) out << (j ? "," : "") << spec.n_per_class[j];
  out << "), " << args.reps << " replications\n";
  out << "method     objective  mean test D_E (sd)   se\n";
  for (const auto& c : report.cells) {
    char line[128];
    std::snprintf(line, sizeof line, "%-10s %-10s %.3f (%.2f)         %.4f\n", to_string(c.method),
                  to_string(c.criterion), c.mean_test_ehum, c.sd_test_ehum, c.se_test_ehum);
    out << line;
  }
  if (!args.out.empty()) write_text(args.out, to_jsonl(report));
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string preset = "linear";
  std::size_t d = 20;
  std::string methods = "scor,scor_serial,nm,random";
  std::uint64_t seed = 0;
  std::string out;
  ScorOverrides scor;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const std::vector<std::string> methods = split_list(args.methods);
  if (methods.empty()) throw InvalidConfig("bench needs at least one method");
  for (const auto& m : methods) {
    if (m != "scor" && m != "scor_serial" && m != "nm" && m != "random") {
      throw InvalidConfig("unknown bench method '" + m + "' (scor, scor_serial, nm, random)");
    }
  }
  args.scor.config.validate();
  const Preset preset = make_preset(args.preset, args.d);
  std::atomic<long> counter{0};
  const Objective counted{
      .dimension = preset.objective.dimension,
      .evaluate =
          [&](const UnitVector& b) {
            counter.fetch_add(1, std::memory_order_relaxed);
            return preset.objective(b);
          },
      .thread_safe = true,
  };
  const UnitVector start = UnitVector::uniform(args.d);

  std::ostringstream jsonl;
  jsonl << json{{"type", "header"},
                {"command", "bench"},
                {"preset", preset.name},
                {"d", args.d},
                {"optimum", preset.optimum},
                {"threads", omp_get_max_threads()},
                {"scor", config_json(args.scor.config)}}
               .dump()
        << '\n';
  out << "preset " << preset.name << ", d=" << args.d << ", optimum " << fmt("%.6g", preset.optimum)
      << ", threads " << omp_get_max_threads() << '\n';
  out << "method       best value      gap          evaluations  time(s)\n";

  long scor_evals = 0;
  for (const auto& m : methods) {
    counter = 0;
    const auto t0 = Clock::now();
    double value = 0.0;
    if (m == "scor" || m == "scor_serial") {
      ScorConfig c = args.scor.config;
      c.parallel_eval = m == "scor";
      c.keep_trace = false;
      value = scor_minimize(counted, start, c).objective_value;
      scor_evals = counter.load();
    } else if (m == "nm") {
      value = nelder_mead_sphere(counted).objective_value;
    } else {
      const std::size_t budget = scor_evals > 0 ? static_cast<std::size_t>(scor_evals) : 200 * args.d;
      value = random_search_minimize(counted, start, budget, args.seed).value;
    }
    const double elapsed = seconds_since(t0);
    const long evals = counter.load();
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-15.9g %-12.3e %-12ld %.4f\n", m.c_str(), value,
                  value - preset.optimum, evals, elapsed);
    out << line;
    jsonl << json{{"type", "bench"},
                  {"method", m},
                  {"best_value", value},
                  {"gap", value - preset.optimum},
                  {"evaluations", evals},
                  {"seconds", elapsed}}
                 .dump()
          << '\n';
  }
  if (!args.out.empty()) write_text(args.out, jsonl.str());
  return kExitOk;
}

// ---------------------------------------------------------------- screen

struct ScreenArgs {
  std::string data;
  double threshold = 0.8;
  std::string merge_labels;
  std::string out;
};

int cmd_screen(const ScreenArgs& args, std::ostream& out) {
  const DatasetFile data = read_dataset(args.data, parse_label_map(args.merge_labels));
  const ScreenResult r = screen_correlated(data.sample, args.threshold);
  out << "removed (in order):";
  for (std::size_t k : r.removed) out << ' ' << data.column_names[k];
  out << "\nkept:";
  for (std::size_t k : r.kept) out << ' ' << data.column_names[k];
  out << '\n';
  if (!args.out.empty()) write_dataset(args.out, select_columns(data, r.kept));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherically constrained pattern search for biomarker combinations", "scor"};
  app.require_subcommand(1);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit combining vectors to a labelled CSV");
  fit_cmd->add_option("--data", fit.data, "CSV: label column then marker columns")->required();
  fit_cmd->add_option("--test", fit.test, "Held-out CSV for test-set D_E");
  fit_cmd->add_option("--objective", fit.objective)->check(CLI::IsMember({"ehum", "ulba"}))->capture_default_str();
  fit_cmd->add_option("--method", fit.methods, "scor, nm, stepdown, minmax or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"scor", "nm", "stepdown", "minmax", "all"}));
  fit_cmd->add_option("--seed", fit.seed, "Seed for extra SCOR starts")->capture_default_str();
  fit_cmd->add_option("--starts", fit.starts, "SCOR starts (the symmetric point plus random ones)")
      ->capture_default_str();
  fit_cmd->add_option("--merge-labels", fit.merge_labels, "Label remapping, e.g. 3:2,4:2");
  fit_cmd->add_option("--out", fit.out, "JSON Lines report");
  fit.scor.add_to(fit_cmd);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Replicate a simulation scenario");
  sim_cmd->add_option("--scenario", sim.scenario)->check(CLI::IsMember({1, 2, 3}))->capture_default_str();
  sim_cmd->add_option("--M", sim.num_classes, "Number of classes")->capture_default_str();
  sim_cmd->add_option("--d", sim.d, "Number of markers")->capture_default_str();
  sim_cmd->add_option("--n", sim.n, "Per-class sizes, one value or M values")->delimiter(',');
  sim_cmd->add_option("--reps", sim.reps)->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
  sim_cmd->add_option("--methods", sim.methods)->delimiter(',');
  sim_cmd->add_option("--objectives", sim.objectives)->delimiter(',');
  sim_cmd->add_option("--out", sim.out, "JSON Lines report");
  sim.scor.add_to(sim_cmd);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare optimizers on analytic objectives");
  bench_cmd->add_option("--preset", bench.preset, "linear, symmetric or quadratic")->capture_default_str();
  bench_cmd->add_option("--d", bench.d)->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "Comma list of scor, scor_serial, nm, random")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "JSON Lines report");
  bench.scor.add_to(bench_cmd);

  ScreenArgs screen;
  auto* screen_cmd = app.add_subcommand("screen", "Greedy removal of highly correlated markers");
  screen_cmd->add_option("--data", screen.data)->required();
  screen_cmd->add_option("--threshold", screen.threshold)->capture_default_str();
  screen_cmd->add_option("--merge-labels", screen.merge_labels);
  screen_cmd->add_option("--out", screen.out, "CSV with the kept columns");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_thread_env();
    if (*fit_cmd) return cmd_fit(fit, out, err);
    if (*sim_cmd) return cmd_simulate(sim, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*screen_cmd) return cmd_screen(screen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace scor
