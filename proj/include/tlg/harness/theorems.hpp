#pragma once

// Seeded randomized property suites for the system-comparison theorems and
// the supporting majorization lemmas.
//
// Each trial draws parameters satisfying a theorem's hypothesis, builds the
// two systems, and asks order_checks whether the conclusion holds on the
// default grid. Every compared pair is also run through all three orders to
// audit the chain lr => hr => st.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/grid.hpp"
#include "tlg/majorization.hpp"
#include "tlg/order_checks.hpp"
#include "tlg/serialization.hpp"
#include "tlg/system.hpp"

namespace tlg {

enum class TheoremId { t3_1, t3_2, c3_1, t3_3, t3_4, t3_5, t3_6, l2_3, l2_4 };

inline constexpr std::array kAllTheorems = {TheoremId::t3_1, TheoremId::t3_2, TheoremId::c3_1,
                                            TheoremId::t3_3, TheoremId::t3_4, TheoremId::t3_5,
                                            TheoremId::t3_6, TheoremId::l2_3, TheoremId::l2_4};

inline std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::t3_1: return "t3_1";
    case TheoremId::t3_2: return "t3_2";
    case TheoremId::c3_1: return "c3_1";
    case TheoremId::t3_3: return "t3_3";
    case TheoremId::t3_4: return "t3_4";
    case TheoremId::t3_5: return "t3_5";
    case TheoremId::t3_6: return "t3_6";
    case TheoremId::l2_3: return "l2_3";
    case TheoremId::l2_4: return "l2_4";
  }
  return "?";
}

inline TheoremId theorem_id_from_string(std::string_view s) {
  for (TheoremId id : kAllTheorems) {
    if (to_string(id) == s) return id;
  }
  throw std::invalid_argument("unknown theorem id '" + std::string(s) + "'");
}

struct SuiteOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  /// Fixed component count; drawn from {2..5} per trial when empty.
  std::optional<std::size_t> n_components;
  GridOptions grid;
};

struct Violation {
  std::size_t trial = 0;
  std::string check;
  std::string message;
  json params;
  std::optional<Witness> witness;
};

struct SuiteReport {
  TheoremId id = TheoremId::t3_1;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks_run = 0;
  std::size_t audit_pairs = 0;
  std::size_t audit_violations = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

inline void to_json(json& j, const Violation& v) {
  j = json{{"trial", v.trial}, {"check", v.check}, {"message", v.message}, {"params", v.params}};
  if (v.witness) j["witness"] = *v.witness;
}

inline void to_json(json& j, const SuiteReport& r) {
  j = json{{"theorem", std::string(to_string(r.id))},
           {"trials", r.trials},
           {"seed", r.seed},
           {"checks_run", r.checks_run},
           {"audit_pairs", r.audit_pairs},
           {"audit_violations", r.audit_violations},
           {"violations", r.violations},
           {"pass", r.pass()}};
}

namespace detail {

// Per-trial generator, split deterministically from (seed, suite, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, TheoremId id, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

inline double draw(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t draw_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Shape and scale parameters are kept inside this range.
inline constexpr double kParamLo = 0.1;
inline constexpr double kParamHi = 10.0;

inline bool in_param_range(const RealVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double e) { return e >= kParamLo && e <= kParamHi; });
}

inline RealVector draw_vector(std::mt19937_64& rng, std::size_t n) {
  RealVector v(n);
  for (double& e : v) e = draw(rng, kParamLo, kParamHi);
  return v;
}

// x majorized by y, all entries in the parameter range.
inline MajorizationPair draw_majorized(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    const double total = static_cast<double>(n) * draw(rng, 0.5, 6.0);
    MajorizationPair p = random_majorization_pair(rng, n, total, draw_int(rng, 0, 3 * n));
    if (in_param_range(p.x) && in_param_range(p.y)) return p;
  }
}

// theta weakly submajorized by theta_star: majorize, then raise entries.
inline MajorizationPair draw_weakly_submajorized(std::mt19937_64& rng, std::size_t n) {
  MajorizationPair p = draw_majorized(rng, n);
  for (double& e : p.y) {
    if (draw(rng, 0.0, 1.0) < 0.7) e += draw(rng, 0.0, 1.0) * 0.5 * (kParamHi - e);
  }
  return p;
}

inline RealVector raise_componentwise(std::mt19937_64& rng, const RealVector& v) {
  RealVector out = v;
  for (double& e : out) {
    if (draw(rng, 0.0, 1.0) < 0.7) e += draw(rng, 0.0, 1.0) * 0.5 * (kParamHi - e);
  }
  return out;
}

inline BaselineSpec draw_baseline(std::mt19937_64& rng) {
  switch (draw_int(rng, 0, 3)) {
    case 0: return BaselineSpec::exponential(draw(rng, 0.5, 2.0));
    case 1: return BaselineSpec::weibull(draw(rng, 0.5, 3.0), draw(rng, 0.5, 2.0));
    case 2: return BaselineSpec::log_logistic(draw(rng, 0.5, 4.0), draw(rng, 0.5, 2.0));
    default: return BaselineSpec::uniform01();
  }
}

// (G1, G2) from one family with G2 <= G1, i.e. X1* <=_st X2*.
inline std::pair<BaselineSpec, BaselineSpec> draw_st_ordered_baselines(std::mt19937_64& rng) {
  const double stretch = draw(rng, 1.0, 3.0);
  switch (draw_int(rng, 0, 3)) {
    case 0: {
      const double rate = draw(rng, 0.5, 2.0);
      return {BaselineSpec::exponential(rate), BaselineSpec::exponential(rate / stretch)};
    }
    case 1: {
      const double k = draw(rng, 0.5, 3.0), s = draw(rng, 0.5, 2.0);
      return {BaselineSpec::weibull(k, s), BaselineSpec::weibull(k, s * stretch)};
    }
    case 2: {
      const double k = draw(rng, 0.5, 4.0), s = draw(rng, 0.5, 2.0);
      return {BaselineSpec::log_logistic(k, s), BaselineSpec::log_logistic(k, s * stretch)};
    }
    default: {
      const double c = draw(rng, 0.5, 2.0);
      return {BaselineSpec::uniform01(c), BaselineSpec::uniform01(c * stretch)};
    }
  }
}

inline SystemSpec with_alphas(Topology topo, const RealVector& alphas, double theta,
                              const BaselineSpec& g) {
  return make_system(topo, alphas, RealVector(alphas.size(), theta), g);
}

inline SystemSpec with_thetas(Topology topo, double alpha, const RealVector& thetas,
                              const BaselineSpec& g) {
  return make_system(topo, RealVector(thetas.size(), alpha), thetas, g);
}

// One comparison requested by a trial.
struct Comparison {
  std::string label;
  SystemSpec x;
  SystemSpec y;
  StochasticOrder order = StochasticOrder::st;
  bool expect_holds = true;
  json params;
};

inline std::vector<Comparison> generate_trial(TheoremId id, std::mt19937_64& rng,
                                              std::size_t n) {
  std::vector<Comparison> out;
  auto params = [](std::initializer_list<std::pair<const char*, json>> kv) {
    json j = json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
  };
  switch (id) {
    case TheoremId::t3_1: {
      const BaselineSpec g = draw_baseline(rng);
      const double theta = draw(rng, kParamLo, kParamHi);
      const MajorizationPair p = draw_majorized(rng, n);  // alpha* = x, alpha = y
      out.push_back({"series hr", with_alphas(Topology::series, p.y, theta, g),
                     with_alphas(Topology::series, p.x, theta, g), StochasticOrder::hr, true,
                     params({{"alpha", p.y}, {"alpha_star", p.x}, {"theta", theta},
                             {"baseline", g}})});
      break;
    }
    case TheoremId::t3_2:
    case TheoremId::c3_1:
    case TheoremId::t3_3: {
      const BaselineSpec g = draw_baseline(rng);
      const double alpha = draw(rng, kParamLo, kParamHi);
      RealVector theta, theta_star;
      if (id == TheoremId::t3_3) {
        theta = draw_vector(rng, n);
        theta_star = raise_componentwise(rng, theta);
      } else {
        const MajorizationPair p =
            id == TheoremId::t3_2 ? draw_weakly_submajorized(rng, n) : draw_majorized(rng, n);
        theta = p.x;
        theta_star = p.y;
      }
      out.push_back({"parallel st", with_thetas(Topology::parallel, alpha, theta, g),
                     with_thetas(Topology::parallel, alpha, theta_star, g), StochasticOrder::st,
                     true,
                     params({{"alpha", alpha}, {"theta", theta}, {"theta_star", theta_star},
                             {"baseline", g}})});
      break;
    }
    case TheoremId::t3_4: {
      const BaselineSpec g = draw_baseline(rng);
      const double theta = draw(rng, kParamLo, kParamHi);
      RealVector alpha, alpha_star;
      const bool equal_sums = draw(rng, 0.0, 1.0) < 0.25;
      if (equal_sums) {
        const MajorizationPair p = draw_majorized(rng, n);
        alpha = p.y;
        alpha_star = p.x;
      } else {
        for (;;) {
          alpha = draw_vector(rng, n);
          alpha_star = draw_vector(rng, n);
          double sa = std::accumulate(alpha.begin(), alpha.end(), 0.0);
          double sb = std::accumulate(alpha_star.begin(), alpha_star.end(), 0.0);
          if (sa > sb) {
            std::swap(alpha, alpha_star);
            std::swap(sa, sb);
          }
          if (sb >= 1.05 * sa) break;
        }
      }
      const json pj = params({{"alpha", alpha}, {"alpha_star", alpha_star}, {"theta", theta},
                              {"baseline", g}, {"equal_sums", equal_sums}});
      const SystemSpec sx = with_alphas(Topology::parallel, alpha, theta, g);
      const SystemSpec sy = with_alphas(Topology::parallel, alpha_star, theta, g);
      out.push_back({"parallel lr, sum(alpha) <= sum(alpha*)", sx, sy, StochasticOrder::lr,
                     true, pj});
      if (!equal_sums) {
        out.push_back({"parallel lr, reversed sums", sy, sx, StochasticOrder::lr, false, pj});
      }
      break;
    }
    case TheoremId::t3_5: {
      const auto [g1, g2] = draw_st_ordered_baselines(rng);
      const double theta = draw(rng, kParamLo, kParamHi);
      const MajorizationPair p = draw_majorized(rng, n);
      out.push_back({"series st, two baselines", with_alphas(Topology::series, p.y, theta, g1),
                     with_alphas(Topology::series, p.x, theta, g2), StochasticOrder::st, true,
                     params({{"alpha", p.y}, {"alpha_star", p.x}, {"theta", theta},
                             {"baseline_1", g1}, {"baseline_2", g2}})});
      break;
    }
    case TheoremId::t3_6: {
      {
        const auto [g1, g2] = draw_st_ordered_baselines(rng);
        const double alpha = draw(rng, kParamLo, kParamHi);
        const MajorizationPair p = draw_weakly_submajorized(rng, n);
        out.push_back({"(i) parallel st, weak submajorization",
                       with_thetas(Topology::parallel, alpha, p.x, g1),
                       with_thetas(Topology::parallel, alpha, p.y, g2), StochasticOrder::st, true,
                       params({{"alpha", alpha}, {"theta", p.x}, {"theta_star", p.y},
                               {"baseline_1", g1}, {"baseline_2", g2}})});
      }
      {
        const auto [g1, g2] = draw_st_ordered_baselines(rng);
        const double alpha = draw(rng, kParamLo, kParamHi);
        const RealVector theta = draw_vector(rng, n);
        const RealVector theta_star = raise_componentwise(rng, theta);
        out.push_back({"(ii) parallel st, componentwise",
                       with_thetas(Topology::parallel, alpha, theta, g1),
                       with_thetas(Topology::parallel, alpha, theta_star, g2),
                       StochasticOrder::st, true,
                       params({{"alpha", alpha}, {"theta", theta}, {"theta_star", theta_star},
                               {"baseline_1", g1}, {"baseline_2", g2}})});
      }
      break;
    }
    case TheoremId::l2_3:
    case TheoremId::l2_4:
      break;
  }
  return out;
}

inline void run_comparison(const Comparison& c, std::size_t trial, const GridOptions& grid_opts,
                           SuiteReport& report) {
  auto fail = [&](std::string check, std::string msg, std::optional<Witness> w = {}) {
    json p = c.params;
    p["x_system"] = c.x;
    p["y_system"] = c.y;
    report.violations.push_back({trial, std::move(check), std::move(msg), std::move(p), w});
  };
  try {
    const EvaluationGrid grid = build_grid(grid_opts, c.x, c.y);
    std::array<std::optional<OrderVerdict>, 3> v;
    for (StochasticOrder o : {StochasticOrder::st, StochasticOrder::hr, StochasticOrder::lr}) {
      try {
        v[static_cast<std::size_t>(o)] = check_order(o, c.x, c.y, grid);
      } catch (const std::exception& e) {
        if (o == c.order) throw;
        fail(c.label + " audit", std::string(to_string(o)) + " check raised: " + e.what());
      }
    }
    ++report.checks_run;
    const OrderVerdict& main = *v[static_cast<std::size_t>(c.order)];
    if (main.holds != c.expect_holds) {
      fail(c.label, std::string(to_string(c.order)) + " verdict " +
                        (main.holds ? "holds" : "fails") + ", expected " +
                        (c.expect_holds ? "holds" : "fails") + " (min_margin " +
                        std::to_string(main.min_margin) + ")",
           main.witness);
    }
    if (v[0] && v[1] && v[2]) {
      ++report.audit_pairs;
      const bool st = v[0]->holds, hr = v[1]->holds, lr = v[2]->holds;
      if ((lr && !hr) || (hr && !st)) {
        ++report.audit_violations;
        fail(c.label + " audit", "implication chain broken: lr=" + std::to_string(lr) +
                                     " hr=" + std::to_string(hr) + " st=" + std::to_string(st));
      }
    }
  } catch (const std::exception& e) {
    fail(c.label, std::string("check raised: ") + e.what());
  }
}

}  // namespace detail

/// Runs one suite. Zero violations means every trial's conclusion was
/// confirmed on its grid and the implication audit found nothing.
inline SuiteReport theorem_property_suite(TheoremId id, const SuiteOptions& opts = {}) {
  SuiteReport report;
  report.id = id;
  report.trials = opts.trials;
  report.seed = opts.seed;

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    std::mt19937_64 rng = detail::trial_rng(opts.seed, id, trial);
    const std::size_t n = opts.n_components ? *opts.n_components : detail::draw_int(rng, 2, 5);

    if (id == TheoremId::l2_3) {
      const double t = detail::draw(rng, 0.05, 0.95);
      const double a0 = detail::draw(rng, detail::kParamLo, 5.0);
      const std::size_t m = detail::draw_int(rng, 3, 20);
      const double h = detail::draw(rng, 0.05, (detail::kParamHi - a0) / static_cast<double>(m - 1));
      RealVector alphas(m);
      for (std::size_t i = 0; i < m; ++i) alphas[i] = a0 + h * static_cast<double>(i);
      const ConvexityReport r = tau_convexity_check(t, alphas);
      ++report.checks_run;
      if (!r.pass) {
        report.violations.push_back(
            {trial, "tau convexity",
             "second difference " + std::to_string(r.min_second_difference),
             json{{"t", t}, {"alphas", alphas}}, std::nullopt});
      }
      continue;
    }
    if (id == TheoremId::l2_4) {
      const double total = detail::draw(rng, 1.0, 20.0);
      const MajorizationPair p =
          random_majorization_pair(rng, n, total, detail::draw_int(rng, 0, 3 * n));
      double sx = 0.0, sy = 0.0;
      for (double e : p.x) sx += e * e;
      for (double e : p.y) sy += e * e;
      ++report.checks_run;
      if (!is_majorized(p.x, p.y) || sx > sy + 1e-12) {
        report.violations.push_back({trial, "sum of squares",
                                     "sum x^2 = " + std::to_string(sx) +
                                         " exceeds sum y^2 = " + std::to_string(sy),
                                     json{{"x", p.x}, {"y", p.y}}, std::nullopt});
      }
      continue;
    }
    for (const detail::Comparison& c : detail::generate_trial(id, rng, n)) {
      detail::run_comparison(c, trial, opts.grid, report);
    }
  }
  return report;
}

}  // namespace tlg
