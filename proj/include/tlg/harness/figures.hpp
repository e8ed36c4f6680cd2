#pragma once

// Figure data: two dominance plots and two density-ratio plots.
//
//   fig1a  series, G = 1 - e^-x, theta = 0.5, alpha = (1, 9) vs (4, 6):
//          r_X - r_Y, expected >= 0 everywhere
//   fig1b  same systems, f_Y / f_X, expected to rise then fall
//   fig2a  parallel, alpha = 0.5, theta = (0.1, 0.4) vs (0.2, 0.5):
//          F_X - F_Y, expected >= 0 everywhere
//   fig2b  same systems, f_Y / f_X, expected to rise then fall

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlg/grid.hpp"
#include "tlg/order_checks.hpp"
#include "tlg/serialization.hpp"
#include "tlg/system.hpp"
#include "tlg/version.hpp"

namespace tlg {

enum class FigureId { fig1a, fig1b, fig2a, fig2b };

inline std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1a: return "fig1a";
    case FigureId::fig1b: return "fig1b";
    case FigureId::fig2a: return "fig2a";
    case FigureId::fig2b: return "fig2b";
  }
  return "?";
}

inline FigureId figure_id_from_string(std::string_view s) {
  if (s == "fig1a") return FigureId::fig1a;
  if (s == "fig1b") return FigureId::fig1b;
  if (s == "fig2a") return FigureId::fig2a;
  if (s == "fig2b") return FigureId::fig2b;
  throw std::invalid_argument("unknown figure id '" + std::string(s) + "'");
}

struct FigureSystems {
  SystemSpec x;
  SystemSpec y;
};

inline FigureSystems figure_systems(FigureId id) {
  const BaselineSpec g = BaselineSpec::exponential(1.0);
  if (id == FigureId::fig1a || id == FigureId::fig1b) {
    return {make_system(Topology::series, {1.0, 9.0}, {0.5, 0.5}, g),
            make_system(Topology::series, {4.0, 6.0}, {0.5, 0.5}, g)};
  }
  return {make_system(Topology::parallel, {0.5, 0.5}, {0.1, 0.4}, g),
          make_system(Topology::parallel, {0.5, 0.5}, {0.2, 0.5}, g)};
}

/// Pointwise tolerance for the non-negativity figures.
inline constexpr double kFigureTol = 1e-9;

struct FigureSeries {
  FigureId id = FigureId::fig1a;
  std::string value_column;
  std::vector<double> x;
  std::vector<double> value;
  std::vector<std::pair<std::string, std::string>> metadata;
  OrderVerdict verdict;
  /// Whether the data show what the example claims.
  bool expectation_met = false;
  std::string detail;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline FigureSeries reproduce_figure(FigureId id, const GridOptions& options = {},
                                     std::uint64_t seed = 0) {
  const FigureSystems sys = figure_systems(id);
  const EvaluationGrid grid = build_grid(options, sys.x, sys.y);

  FigureSeries fs;
  fs.id = id;
  fs.x = grid.points();
  fs.value.reserve(grid.size());

  switch (id) {
    case FigureId::fig1a: {
      fs.value_column = "hazard_diff";
      for (double x : grid) fs.value.push_back(system_hazard(sys.x, x) - system_hazard(sys.y, x));
      fs.verdict = check_hazard_rate(sys.x, sys.y, grid);
      break;
    }
    case FigureId::fig2a: {
      fs.value_column = "cdf_diff";
      for (double x : grid) {
        double fx = 0.0, fy = 0.0;
        fs.value.push_back(detail::cdf_gap(sys.x, sys.y, x, fx, fy));
      }
      fs.verdict = check_usual_stochastic(sys.x, sys.y, grid);
      break;
    }
    case FigureId::fig1b:
    case FigureId::fig2b: {
      fs.value_column = "density_ratio";
      for (const RatioPoint& p : density_ratio_curve(sys.x, sys.y, grid)) {
        fs.value.push_back(p.ratio);
      }
      fs.verdict = check_likelihood_ratio(sys.x, sys.y, grid);
      break;
    }
  }

  if (id == FigureId::fig1a || id == FigureId::fig2a) {
    std::size_t bad = 0;
    double worst = kInf, worst_x = 0.0;
    for (std::size_t i = 0; i < fs.value.size(); ++i) {
      if (!(fs.value[i] >= -kFigureTol)) ++bad;
      if (fs.value[i] < worst) {
        worst = fs.value[i];
        worst_x = fs.x[i];
      }
    }
    fs.expectation_met = bad == 0 && fs.verdict.holds;
    fs.detail = "min " + fs.value_column + " = " + detail::format_double(worst) + " at x = " +
                detail::format_double(worst_x) + "; " + std::to_string(bad) +
                " rows below -1e-9";
  } else {
    const auto& tps = fs.verdict.turning_points;
    fs.expectation_met = fs.verdict.monotone_class == MonotoneClass::non_monotone &&
                         tps.size() == 1 && tps.front().peak;
    fs.detail = "density ratio classified " +
                std::string(to_string(*fs.verdict.monotone_class)) + " with " +
                std::to_string(tps.size()) + " turning point(s)";
    if (!fs.value.empty()) {
      fs.detail += "; ratio runs from " + detail::format_double(fs.value.front()) + " to " +
                   detail::format_double(fs.value.back());
    }
  }

  auto& md = fs.metadata;
  md.emplace_back("figure", std::string(to_string(id)));
  md.emplace_back("x_system", json(sys.x).dump());
  md.emplace_back("y_system", json(sys.y).dump());
  md.emplace_back("grid_lo", detail::format_double(grid.front()));
  md.emplace_back("grid_hi", detail::format_double(grid.back()));
  md.emplace_back("grid_count", std::to_string(grid.size()));
  md.emplace_back("q_lo", detail::format_double(options.q_lo));
  md.emplace_back("q_hi", detail::format_double(options.q_hi));
  md.emplace_back("spacing", std::string(to_string(options.spacing)));
  md.emplace_back("seed", std::to_string(seed));
  md.emplace_back("verdict", json(fs.verdict).dump());
  md.emplace_back("expectation_met", fs.expectation_met ? "true" : "false");
  md.emplace_back("library_version", std::string(kVersion));
  return fs;
}

/// '#'-prefixed metadata, a header row, then one row per grid point with
/// 17 significant digits.
inline void write_csv(std::ostream& os, const FigureSeries& fs) {
  for (const auto& [k, v] : fs.metadata) os << "# " << k << ": " << v << '\n';
  os << "x," << fs.value_column << '\n';
  for (std::size_t i = 0; i < fs.x.size(); ++i) {
    os << detail::format_double(fs.x[i]) << ',' << detail::format_double(fs.value[i]) << '\n';
  }
}

}  // namespace tlg
