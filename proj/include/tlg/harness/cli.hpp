#pragma once

// Command-line front end. Exit status: 0 all checks passed, 1 a figure or
// property check failed, 2 usage or configuration error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tlg/harness/figures.hpp"
#include "tlg/harness/gof.hpp"
#include "tlg/harness/run_config.hpp"
#include "tlg/harness/theorems.hpp"
#include "tlg/order_checks.hpp"
#include "tlg/serialization.hpp"

namespace tlg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

// Systems used by `gof` when the config names none.
inline std::vector<SystemSpec> default_gof_systems() {
  const BaselineSpec g = BaselineSpec::exponential(1.0);
  return {make_system(Topology::series, {1.0, 1.0}, {1.0, 1.0}, g),
          make_system(Topology::parallel, {0.5, 2.0}, {0.7, 1.5}, g)};
}

class OutputSink {
 public:
  OutputSink(const std::optional<std::string>& path, std::ostream& fallback) {
    if (path) {
      file_ = std::make_unique<std::ofstream>(*path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + *path + "'");
    }
    os_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

inline int run_figure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FigureSeries fs = reproduce_figure(*cfg.figure_id, cfg.grid, cfg.seed);
  OutputSink sink(cfg.output_path, out);
  write_csv(sink.stream(), fs);
  std::ostream& log = cfg.output_path ? out : err;
  log << to_string(fs.id) << ": " << (fs.expectation_met ? "PASS" : "FAIL") << " (" << fs.detail
      << ")\n";
  if (!fs.expectation_met && fs.verdict.witness) {
    log << "witness: " << json(*fs.verdict.witness).dump() << '\n';
  }
  return fs.expectation_met ? kExitOk : kExitFailure;
}

inline int run_theorem(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.n_components = cfg.n_components;
  opts.grid = cfg.grid;
  std::vector<TheoremId> ids;
  if (cfg.theorem_id) {
    ids.push_back(*cfg.theorem_id);
  } else {
    ids.assign(kAllTheorems.begin(), kAllTheorems.end());
  }
  json reports = json::array();
  bool all_pass = true;
  for (TheoremId id : ids) {
    const SuiteReport r = theorem_property_suite(id, opts);
    all_pass = all_pass && r.pass();
    reports.push_back(r);
  }
  OutputSink sink(cfg.output_path, out);
  const json doc = ids.size() == 1 ? reports.front() : json{{"seed", cfg.seed}, {"suites", reports}};
  sink.stream() << doc.dump(2) << '\n';
  std::ostream& log = cfg.output_path ? out : err;
  log << "seed: " << cfg.seed << '\n';
  for (const auto& r : reports) {
    log << r.at("theorem").get<std::string>() << ": " << (r.at("pass").get<bool>() ? "PASS" : "FAIL")
        << " (" << r.at("violations").size() << " violations over " << r.at("trials").get<std::size_t>()
        << " trials)\n";
  }
  return all_pass ? kExitOk : kExitFailure;
}

inline int run_gof(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<SystemSpec> systems = cfg.systems.empty() ? default_gof_systems() : cfg.systems;
  json reports = json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    // One stream per system so adding a system does not perturb the others.
    const GofReport r = monte_carlo_gof(systems[i], cfg.n_samples, cfg.seed + i);
    all_pass = all_pass && r.pass;
    reports.push_back({{"system", systems[i]},
                       {"n_samples", r.n_samples},
                       {"seed", r.seed},
                       {"ks", r.ks},
                       {"threshold", r.threshold},
                       {"pass", r.pass}});
  }
  OutputSink sink(cfg.output_path, out);
  sink.stream() << json{{"seed", cfg.seed}, {"reports", reports}}.dump(2) << '\n';
  (cfg.output_path ? out : err) << "seed: " << cfg.seed << '\n';
  return all_pass ? kExitOk : kExitFailure;
}

inline json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline int run_eval(const RunConfig& cfg, std::ostream& out) {
  json rows = json::array();
  for (std::size_t i = 0; i < cfg.systems.size(); ++i) {
    const SystemSpec& s = cfg.systems[i];
    for (double x : cfg.x) {
      json row{{"system", i}, {"x", x}, {"cdf", system_cdf(s, x)},
               {"survival", system_survival(s, x)}};
      if (in_open_support(s, x)) {
        row["pdf"] = nullable(system_pdf(s, x));
        row["hazard"] = nullable(system_hazard(s, x));
      } else {
        row["pdf"] = nullptr;
        row["hazard"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
  }
  OutputSink sink(cfg.output_path, out);
  sink.stream() << rows.dump(2) << '\n';
  return kExitOk;
}

inline int run_compare(const RunConfig& cfg, std::ostream& out) {
  const SystemSpec& sx = cfg.systems[0];
  const SystemSpec& sy = cfg.systems[1];
  const EvaluationGrid grid = build_grid(cfg.grid, sx, sy);
  json verdicts = json::array();
  for (StochasticOrder o : {StochasticOrder::st, StochasticOrder::hr, StochasticOrder::lr}) {
    try {
      verdicts.push_back(check_order(o, sx, sy, grid));
    } catch (const std::exception& e) {
      verdicts.push_back({{"order", std::string(to_string(o))}, {"error", e.what()}});
    }
  }
  OutputSink sink(cfg.output_path, out);
  sink.stream() << json{{"grid", {{"lo", grid.front()}, {"hi", grid.back()},
                                  {"count", grid.size()}, {"options", cfg.grid}}},
                        {"verdicts", verdicts}}
                       .dump(2)
                << '\n';
  return kExitOk;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::figure: return detail::run_figure(cfg, out, err);
    case Command::theorem: return detail::run_theorem(cfg, out, err);
    case Command::gof: return detail::run_gof(cfg, out, err);
    case Command::eval: return detail::run_eval(cfg, out);
    case Command::compare: return detail::run_compare(cfg, out);
  }
  return kExitUsage;
}

/// Parses argv into a RunConfig (config file first, flags on top) and runs it.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"Topp-Leone generated distributions: system lifetimes and stochastic orders",
               "tlg_cli"};
  app.require_subcommand(1);

  struct Flags {
    std::string config, id, out;
    std::size_t trials = 0, grid_count = 0, n_components = 0, samples = 0;
    std::uint64_t seed = 0;
    double q_lo = 0.0, q_hi = 0.0;
    std::vector<double> x;
  } f;

  auto add_common = [&f](CLI::App* sub) {
    sub->add_option("--config", f.config, "JSON RunConfig file")->check(CLI::ExistingFile);
    sub->add_option("--seed", f.seed, "Random seed");
    sub->add_option("--grid-count", f.grid_count, "Grid points");
    sub->add_option("--q-lo", f.q_lo, "Lower grid quantile");
    sub->add_option("--q-hi", f.q_hi, "Upper grid quantile");
    sub->add_option("--out", f.out, "Output file (default stdout)");
  };

  CLI::App* figure = app.add_subcommand("figure", "Reproduce a figure as CSV");
  add_common(figure);
  figure->add_option("--id", f.id, "fig1a | fig1b | fig2a | fig2b");

  CLI::App* theorem = app.add_subcommand("theorem", "Run a seeded property suite");
  add_common(theorem);
  theorem->add_option("--id", f.id, "t3_1 t3_2 c3_1 t3_3 t3_4 t3_5 t3_6 l2_3 l2_4 | all");
  theorem->add_option("--trials", f.trials, "Trials per suite");
  theorem->add_option("--n-components", f.n_components, "Fix the component count");

  CLI::App* gof = app.add_subcommand("gof", "Monte-Carlo goodness of fit of system cdfs");
  add_common(gof);
  gof->add_option("--samples", f.samples, "Samples per system");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate systems from --config at --x points");
  add_common(eval);
  eval->add_option("--x", f.x, "Abscissae");

  CLI::App* compare = app.add_subcommand("compare", "Check st/hr/lr between two systems");
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunConfig cfg;
  try {
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      cfg = json::parse(in).get<RunConfig>();
    }
    cfg.command = command_from_string(sub->get_name());
    if (sub->count("--seed")) cfg.seed = f.seed;
    if (sub->count("--grid-count")) cfg.grid.count = f.grid_count;
    if (sub->count("--q-lo")) cfg.grid.q_lo = f.q_lo;
    if (sub->count("--q-hi")) cfg.grid.q_hi = f.q_hi;
    if (sub->count("--out")) cfg.output_path = f.out;
    if (sub == figure && sub->count("--id")) cfg.figure_id = figure_id_from_string(f.id);
    if (sub == theorem) {
      if (sub->count("--id")) {
        if (f.id == "all") cfg.theorem_id.reset();
        else cfg.theorem_id = theorem_id_from_string(f.id);
      }
      if (sub->count("--trials")) cfg.trials = f.trials;
      if (sub->count("--n-components")) cfg.n_components = f.n_components;
    }
    if (sub == gof && sub->count("--samples")) cfg.n_samples = f.samples;
    if (sub == eval && sub->count("--x")) cfg.x = f.x;
    if (cfg.n_components && *cfg.n_components < 2) {
      throw std::invalid_argument("--n-components must be at least 2");
    }
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  }

  try {
    return run(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tlg
