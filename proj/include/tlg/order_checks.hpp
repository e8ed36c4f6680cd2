#pragma once

// Grid-based verifiers for the usual stochastic (st), hazard rate (hr) and
// likelihood ratio (lr) orders.
//
// These are semidecisions. "holds" means no violation was found on the
// grid; it is evidence for the for-all statement, not a proof of it.
//
// X <=_st Y : F_Y(x) <= F_X(x)
// X <=_hr Y : r_X(x) >= r_Y(x), equivalently S_Y/S_X nondecreasing
// X <=_lr Y : f_Y/f_X nondecreasing
//
// Margins are normalised by 1 + max(|lhs|, |rhs|) so a single tolerance
// works for probabilities as well as for hazards and density ratios that
// grow without bound near the support edges.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/baseline.hpp"
#include "tlg/grid.hpp"
#include "tlg/numeric.hpp"
#include "tlg/system.hpp"
#include "tlg/topp_leone.hpp"

namespace tlg {

inline constexpr double kOrderTol = 1e-9;

/// Minimum run of same-sign differences on each side of a turning point.
inline constexpr std::size_t kTurningRun = 3;

/// Largest share of grid points a ratio check may discard.
inline constexpr double kMaxFlaggedShare = 0.01;

/// Hazard-rate formulations disagreeing by more than this are an error.
inline constexpr double kHazardConsistencyTol = 1e-6;

enum class StochasticOrder { st, hr, lr };
enum class MonotoneClass { increasing, decreasing, non_monotone, constant };
enum class BaselineOrder { first_leq_second, second_leq_first, equal, incomparable };

inline std::string_view to_string(StochasticOrder o) {
  switch (o) {
    case StochasticOrder::st: return "st";
    case StochasticOrder::hr: return "hr";
    case StochasticOrder::lr: return "lr";
  }
  return "?";
}

inline std::string_view to_string(MonotoneClass m) {
  switch (m) {
    case MonotoneClass::increasing: return "increasing";
    case MonotoneClass::decreasing: return "decreasing";
    case MonotoneClass::non_monotone: return "non-monotone";
    case MonotoneClass::constant: return "constant";
  }
  return "?";
}

inline std::string_view to_string(BaselineOrder o) {
  switch (o) {
    case BaselineOrder::first_leq_second: return "first_leq_second";
    case BaselineOrder::second_leq_first: return "second_leq_first";
    case BaselineOrder::equal: return "equal";
    case BaselineOrder::incomparable: return "incomparable";
  }
  return "?";
}

/// Grid point where the order fails. lhs is the Y-side quantity, rhs the
/// X-side one (F_Y and F_X for st, r_Y and r_X for hr, consecutive ratios
/// for lr), so lhs > rhs in every violation.
struct Witness {
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct TurningPoint {
  double x = 0.0;
  bool peak = true;  // increase-then-decrease; false for a trough
};

struct OrderVerdict {
  StochasticOrder order = StochasticOrder::st;
  bool holds = true;
  std::optional<Witness> witness;
  /// Most adverse normalised slack over the grid; holds == (min_margin >= -tol).
  double min_margin = kInf;
  std::optional<MonotoneClass> monotone_class;
  std::vector<TurningPoint> turning_points;
  std::size_t flagged_points = 0;
  /// lr only: the ratio is monotone on the grid but decreases outside it.
  bool tail_adverse = false;
};

namespace detail {

inline double normalised(double diff, double a, double b) {
  return diff / (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

template <class D>
void require_on_support(const D& d, const EvaluationGrid& grid, const char* where) {
  if (!(grid.front() > support_lo(d)) || !(grid.back() < support_hi(d))) {
    throw std::domain_error(std::string(where) + ": grid leaves the open support");
  }
}

// F_X(x) - F_Y(x) from whichever tail keeps precision.
template <class DX, class DY>
double cdf_gap(const DX& X, const DY& Y, double x, double& fx, double& fy) {
  const double lcx = log_cdf(X, x), lcy = log_cdf(Y, x);
  fx = std::exp(lcx);
  fy = std::exp(lcy);
  if (fx < 0.5 && fy < 0.5) return exp_diff(lcx, lcy);
  return exp_diff(log_survival(Y, x), log_survival(X, x));
}

struct Classified {
  MonotoneClass cls = MonotoneClass::constant;
  std::vector<TurningPoint> turning;
  double min_margin = kInf;
  std::optional<std::size_t> first_adverse;  // index i of the first diff (i, i+1) < -tol
};

// Classify a sequence by the signs of its normalised successive differences.
inline Classified classify_sequence(const std::vector<double>& xs, const std::vector<double>& v,
                                    double tol) {
  Classified c;
  const std::size_t m = v.size() < 2 ? 0 : v.size() - 1;
  std::vector<int> sign(m, 0);
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < m; ++i) {
    const double nd = normalised(v[i + 1] - v[i], v[i], v[i + 1]);
    c.min_margin = std::min(c.min_margin, nd);
    if (nd > tol) {
      sign[i] = 1;
      pos = true;
    } else if (nd < -tol) {
      sign[i] = -1;
      neg = true;
      if (!c.first_adverse) c.first_adverse = i;
    }
  }
  if (pos && neg) {
    c.cls = MonotoneClass::non_monotone;
  } else if (pos) {
    c.cls = MonotoneClass::increasing;
  } else if (neg) {
    c.cls = MonotoneClass::decreasing;
  }
  if (c.cls != MonotoneClass::non_monotone) return c;

  // Runs of equal nonzero signs; flat steps neither extend nor break a run.
  struct Run {
    int sign;
    std::size_t length;
    std::size_t last;  // index of the last difference in the run
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < m; ++i) {
    if (sign[i] == 0) continue;
    if (!runs.empty() && runs.back().sign == sign[i]) {
      ++runs.back().length;
      runs.back().last = i;
    } else {
      runs.push_back({sign[i], 1, i});
    }
  }
  std::vector<Run> kept;
  for (const Run& r : runs) {
    if (r.length < kTurningRun) continue;
    if (!kept.empty() && kept.back().sign == r.sign) {
      kept.back().length += r.length;
      kept.back().last = r.last;
    } else {
      kept.push_back(r);
    }
  }
  for (std::size_t k = 1; k < kept.size(); ++k) {
    c.turning.push_back({xs[kept[k - 1].last + 1], kept[k - 1].sign > 0});
  }
  return c;
}

}  // namespace detail

inline constexpr double kTailProbeQ = 1e-10;
inline constexpr std::size_t kTailProbeCount = 128;

namespace detail {

// First decrease of f_Y/f_X beyond tol outside the grid, probing out to the
// kTailProbeQ quantiles. The grid end points are included so a step across
// the boundary counts.
template <class DX, class DY>
std::optional<Witness> lr_tail_probe(const DX& X, const DY& Y, const EvaluationGrid& grid,
                                     double tol) {
  const double lo = std::max(support_lo(X), support_lo(Y));
  const double hi = std::min(support_hi(X), support_hi(Y));
  const double x_cap = 0.25 * std::numeric_limits<double>::max();
  auto clip = [&](double t) {
    if (!(t > lo)) t = std::nextafter(lo, kInf);
    if (!(t < hi)) t = std::nextafter(hi, kNegInf);
    return std::min(t, x_cap);
  };
  const double left = clip(std::min(quantile(X, kTailProbeQ), quantile(Y, kTailProbeQ)));
  const double right =
      clip(std::max(quantile(X, 1.0 - kTailProbeQ), quantile(Y, 1.0 - kTailProbeQ)));

  auto scan = [&](double a, double b) -> std::optional<Witness> {
    if (!(b > a)) return std::nullopt;
    const GridSpacing sp = a > 0.0 ? GridSpacing::geometric : GridSpacing::linear;
    double prev_x = 0.0, prev = kNegInf;
    for (double x : EvaluationGrid::span(a, b, kTailProbeCount, sp)) {
      if (!std::isfinite(x)) continue;
      const double lr = log_pdf(Y, x) - log_pdf(X, x);
      if (!std::isfinite(lr)) continue;
      const double r = std::exp(lr);
      if (std::isfinite(prev) && normalised(r - prev, r, prev) < -tol) {
        return Witness{prev_x, r, prev};
      }
      prev_x = x;
      prev = r;
    }
    return std::nullopt;
  };
  if (auto w = scan(left, grid.front())) return w;
  return scan(grid.back(), right);
}

}  // namespace detail

/// X <=_st Y on the grid: F_Y - F_X <= tol everywhere.
template <class DX, class DY>
OrderVerdict check_usual_stochastic(const DX& X, const DY& Y, const EvaluationGrid& grid,
                                    double tol = kOrderTol) {
  detail::require_on_support(X, grid, "check_usual_stochastic");
  detail::require_on_support(Y, grid, "check_usual_stochastic");
  OrderVerdict v;
  v.order = StochasticOrder::st;
  for (double x : grid) {
    double fx = 0.0, fy = 0.0;
    const double gap = detail::cdf_gap(X, Y, x, fx, fy);
    v.min_margin = std::min(v.min_margin, gap);
    if (gap < -tol && !v.witness) v.witness = Witness{x, fy, fx};
  }
  v.holds = v.min_margin >= -tol;
  return v;
}

/// X <=_hr Y on the grid.
///
/// Checks r_X - r_Y >= 0 pointwise and, independently, that S_Y/S_X is
/// nondecreasing across the grid. The verdict holds only if both do.
///
/// The two forms may legitimately disagree when the hazard difference
/// changes sign inside one grid interval. They must not disagree on an
/// interval where it keeps one sign at both ends; that throws
/// numerical_inconsistency.
template <class DX, class DY>
OrderVerdict check_hazard_rate(const DX& X, const DY& Y, const EvaluationGrid& grid,
                               double tol = kOrderTol) {
  detail::require_on_support(X, grid, "check_hazard_rate");
  detail::require_on_support(Y, grid, "check_hazard_rate");
  OrderVerdict v;
  v.order = StochasticOrder::hr;

  std::vector<double> margin, ratio;
  margin.reserve(grid.size());
  ratio.reserve(grid.size());
  for (double x : grid) {
    const double rx = hazard(X, x);
    const double ry = hazard(Y, x);
    if (std::isnan(rx) || std::isnan(ry) || (std::isinf(rx) && std::isinf(ry))) {
      throw std::domain_error("check_hazard_rate: hazard undefined at x = " + std::to_string(x));
    }
    double m;
    if (std::isinf(rx)) {
      m = 1.0;
    } else if (std::isinf(ry)) {
      m = -1.0;
    } else {
      m = detail::normalised(rx - ry, rx, ry);
    }
    margin.push_back(m);
    v.min_margin = std::min(v.min_margin, m);
    if (m < -tol && !v.witness) v.witness = Witness{x, ry, rx};
    ratio.push_back(std::exp(log_survival(Y, x) - log_survival(X, x)));
  }
  const bool pointwise = v.min_margin >= -tol;

  const auto& pts = grid.points();
  constexpr double c = kHazardConsistencyTol;
  double worst_step = kInf;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i + 1 < ratio.size(); ++i) {
    const double nd = detail::normalised(ratio[i + 1] - ratio[i], ratio[i], ratio[i + 1]);
    if (nd < worst_step) {
      worst_step = nd;
      worst_i = i;
    }
    const bool both_neg = margin[i] < -c && margin[i + 1] < -c;
    const bool both_pos = margin[i] > c && margin[i + 1] > c;
    if ((both_neg && nd > c) || (both_pos && nd < -c)) {
      throw numerical_inconsistency(
          "check_hazard_rate: hazard difference and survival ratio disagree on [" +
          std::to_string(pts[i]) + ", " + std::to_string(pts[i + 1]) + "]");
    }
  }
  const bool survival_form = !(worst_step < -tol);

  v.holds = pointwise && survival_form;
  if (!v.holds && !v.witness) {
    // Only the survival-ratio form failed; report its worst step.
    v.witness = Witness{pts[worst_i], ratio[worst_i + 1], ratio[worst_i]};
    v.min_margin = std::min(v.min_margin, worst_step);
  }
  return v;
}

/// X <=_lr Y on the grid: f_Y/f_X nondecreasing.
///
/// Points where either density is zero or non-finite are skipped; more than
/// 1% of them throws unreliable_grid. A turning point needs at least three
/// same-sign steps on each side.
///
/// A ratio that is nondecreasing on the grid can still turn down beyond it,
/// which breaks hr and st there. So when the grid passes, both tails out to
/// the kTailProbeQ quantiles are probed too; a decrease found there fails
/// the check with tail_adverse set and the witness in the tail.
template <class DX, class DY>
OrderVerdict check_likelihood_ratio(const DX& X, const DY& Y, const EvaluationGrid& grid,
                                    double tol = kOrderTol) {
  detail::require_on_support(X, grid, "check_likelihood_ratio");
  detail::require_on_support(Y, grid, "check_likelihood_ratio");
  OrderVerdict v;
  v.order = StochasticOrder::lr;
  std::vector<double> xs, rs;
  xs.reserve(grid.size());
  rs.reserve(grid.size());
  for (double x : grid) {
    const double r = std::exp(log_pdf(Y, x) - log_pdf(X, x));
    if (!std::isfinite(r) || !std::isfinite(log_pdf(X, x))) {
      ++v.flagged_points;
      continue;
    }
    xs.push_back(x);
    rs.push_back(r);
  }
  if (static_cast<double>(v.flagged_points) > kMaxFlaggedShare * static_cast<double>(grid.size())) {
    throw unreliable_grid("check_likelihood_ratio: " + std::to_string(v.flagged_points) +
                          " of " + std::to_string(grid.size()) + " grid points flagged");
  }
  const detail::Classified c = detail::classify_sequence(xs, rs, tol);
  v.monotone_class = c.cls;
  v.turning_points = c.turning;
  v.min_margin = c.min_margin;
  v.holds = c.cls == MonotoneClass::increasing || c.cls == MonotoneClass::constant;
  if (!v.holds) {
    std::size_t i = *c.first_adverse;
    if (!c.turning.empty()) {
      i = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), c.turning.front().x) -
                                   xs.begin());
    }
    v.witness = Witness{xs[i], rs[i + 1], rs[i]};
    return v;
  }
  if (auto w = detail::lr_tail_probe(X, Y, grid, tol)) {
    v.holds = false;
    v.tail_adverse = true;
    v.witness = w;
  }
  return v;
}

template <class DX, class DY>
OrderVerdict check_order(StochasticOrder order, const DX& X, const DY& Y,
                         const EvaluationGrid& grid, double tol = kOrderTol) {
  switch (order) {
    case StochasticOrder::st: return check_usual_stochastic(X, Y, grid, tol);
    case StochasticOrder::hr: return check_hazard_rate(X, Y, grid, tol);
    case StochasticOrder::lr: return check_likelihood_ratio(X, Y, grid, tol);
  }
  throw std::invalid_argument("unknown order");
}

/// Usual stochastic order between two baselines. first_leq_second means a
/// variable with cdf G1 is stochastically smaller, i.e. G2 <= G1.
inline BaselineOrder baseline_st_order(const BaselineSpec& g1, const BaselineSpec& g2,
                                       const EvaluationGrid& grid, double tol = kOrderTol) {
  const double lo = std::min(g1.support_lo(), g2.support_lo());
  const double hi = std::max(g1.support_hi(), g2.support_hi());
  if (grid.front() < lo || grid.back() > hi) {
    throw std::domain_error("baseline_st_order: grid leaves the union of supports");
  }
  bool any_pos = false, any_neg = false;
  for (double x : grid) {
    const BaselinePoint a = g1.evaluate(x);
    const BaselinePoint b = g2.evaluate(x);
    const double d = (a.cdf < 0.5 && b.cdf < 0.5)
                         ? detail::exp_diff(a.log_cdf, b.log_cdf)
                         : detail::exp_diff(b.log_survival, a.log_survival);
    if (d > tol) any_pos = true;
    if (d < -tol) any_neg = true;
  }
  if (any_pos && any_neg) return BaselineOrder::incomparable;
  if (any_pos) return BaselineOrder::first_leq_second;
  if (any_neg) return BaselineOrder::second_leq_first;
  return BaselineOrder::equal;
}

}  // namespace tlg
