#pragma once

// Lifetimes of series (X_{1:n}) and parallel (X_{n:n}) systems built from
// independent, possibly heterogeneous TL-G components.
//
//   series:   survival = prod S_k,   density = sum_k f_k prod_{j != k} S_j
//   parallel: cdf      = prod F_k,   density = sum_k f_k prod_{j != k} F_j
//
// Everything is accumulated in log space. The density sums are formed with
// log-sum-exp over per-component terms, which is the product-rule form
// (S * sum of hazards, or F * sum of reverse hazards) without the 0 * inf
// that appears at the support endpoints.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "tlg/grid.hpp"
#include "tlg/numeric.hpp"
#include "tlg/topp_leone.hpp"

namespace tlg {

enum class Topology { series, parallel };

inline std::string_view to_string(Topology t) {
  return t == Topology::series ? "series" : "parallel";
}

inline Topology topology_from_string(std::string_view s) {
  if (s == "series") return Topology::series;
  if (s == "parallel") return Topology::parallel;
  throw std::invalid_argument("unknown topology '" + std::string(s) + "'");
}

struct SystemSpec {
  std::vector<TLGParams> components;
  Topology topology = Topology::series;

  SystemSpec() = default;
  SystemSpec(std::vector<TLGParams> comps, Topology topo)
      : components(std::move(comps)), topology(topo) {
    validate();
  }

  void validate() const {
    if (components.empty()) throw std::invalid_argument("system needs at least one component");
    for (const auto& c : components) {
      c.validate();
    }
  }

  std::size_t size() const { return components.size(); }

  /// Intersection of the component supports.
  double support_lo() const {
    double lo = kNegInf;
    for (const auto& c : components) lo = std::max(lo, c.baseline.support_lo());
    return lo;
  }
  double support_hi() const {
    double hi = kInf;
    for (const auto& c : components) hi = std::min(hi, c.baseline.support_hi());
    return hi;
  }

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// Convenience: n components sharing theta and baseline, one alpha each.
inline SystemSpec make_system(Topology topo, const std::vector<double>& alphas,
                              const std::vector<double>& thetas, const BaselineSpec& g) {
  if (alphas.size() != thetas.size()) {
    throw std::invalid_argument("make_system: alpha and theta lengths differ");
  }
  std::vector<TLGParams> comps;
  comps.reserve(alphas.size());
  for (std::size_t k = 0; k < alphas.size(); ++k) comps.emplace_back(alphas[k], thetas[k], g);
  return SystemSpec(std::move(comps), topo);
}

struct SystemPoint {
  double log_cdf = kNegInf;
  double log_survival = 0.0;
  double log_pdf = kNegInf;
};

inline SystemPoint system_evaluate(const SystemSpec& s, double x) {
  detail::require_finite(x, "system evaluate");
  const std::size_t n = s.components.size();
  std::vector<TLGPoint> pts;
  pts.reserve(n);
  for (const auto& c : s.components) pts.push_back(tlg_evaluate(c, x));

  // For series the product runs over survivals, for parallel over cdfs.
  auto factor = [&](std::size_t k) {
    return s.topology == Topology::series ? pts[k].log_survival : pts[k].log_cdf;
  };

  SystemPoint out;
  double log_prod = 0.0;
  for (std::size_t k = 0; k < n; ++k) log_prod += factor(k);

  std::vector<double> terms(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = pts[k].log_pdf;
    for (std::size_t j = 0; j < n && t != kNegInf; ++j) {
      if (j != k) t += factor(j);
    }
    terms[k] = std::isnan(t) ? kNegInf : t;
  }
  out.log_pdf = detail::log_sum_exp(terms);

  if (s.topology == Topology::series) {
    out.log_survival = log_prod;
    out.log_cdf = detail::log1mexp(log_prod);
  } else {
    out.log_cdf = log_prod;
    out.log_survival = detail::log1mexp(log_prod);
  }
  return out;
}

inline bool in_open_support(const SystemSpec& s, double x) {
  return x > s.support_lo() && x < s.support_hi();
}

inline double system_cdf(const SystemSpec& s, double x) {
  return std::exp(system_evaluate(s, x).log_cdf);
}

inline double system_survival(const SystemSpec& s, double x) {
  return std::exp(system_evaluate(s, x).log_survival);
}

inline double system_log_pdf(const SystemSpec& s, double x) {
  return system_evaluate(s, x).log_pdf;
}

inline double system_pdf(const SystemSpec& s, double x) {
  detail::require_finite(x, "system_pdf");
  if (!in_open_support(s, x)) throw std::domain_error("system_pdf: x outside the open support");
  return std::exp(system_log_pdf(s, x));
}

/// Series: sum of component hazards. Parallel: density over survival.
inline double system_hazard(const SystemSpec& s, double x) {
  detail::require_finite(x, "system_hazard");
  if (!in_open_support(s, x)) {
    throw std::domain_error("system_hazard: x outside the open support");
  }
  if (s.topology == Topology::series) {
    double h = 0.0;
    for (const auto& c : s.components) h += tlg_hazard(c, x);
    return h;
  }
  const SystemPoint v = system_evaluate(s, x);
  if (v.log_survival == kNegInf) return kInf;
  return std::exp(v.log_pdf - v.log_survival);
}

/// Inverse of system_cdf by bracketed root finding in log x.
///
/// The bracket comes from the component quantiles: for a series system
/// min_k Q_k(1 - (1-u)^(1/n)) <= Q(u) <= min_k Q_k(u), for a parallel system
/// max_k Q_k(u) <= Q(u) <= max_k Q_k(u^(1/n)).
inline double system_quantile(const SystemSpec& s, double u) {
  detail::require_probability(u, "system_quantile");
  if (u == 0.0) return s.support_lo();
  if (u == 1.0) return s.support_hi();
  const std::size_t n = s.components.size();
  if (n == 1) return tlg_quantile(s.components.front(), u);

  const double dn = static_cast<double>(n);
  double lo_b, hi_b;
  if (s.topology == Topology::series) {
    const double u_lo = -std::expm1(std::log1p(-u) / dn);
    lo_b = kInf;
    hi_b = kInf;
    for (const auto& c : s.components) {
      lo_b = std::min(lo_b, tlg_quantile(c, u_lo));
      hi_b = std::min(hi_b, tlg_quantile(c, u));
    }
  } else {
    const double u_hi = std::exp(std::log(u) / dn);
    lo_b = kNegInf;
    hi_b = kNegInf;
    for (const auto& c : s.components) {
      lo_b = std::max(lo_b, tlg_quantile(c, u));
      hi_b = std::max(hi_b, tlg_quantile(c, u_hi));
    }
  }
  // Component quantiles can overflow; keep the bracket where exp(log x)
  // stays finite.
  const double x_cap = 0.25 * std::numeric_limits<double>::max();
  hi_b = std::min({hi_b, s.support_hi(), x_cap});
  lo_b = std::min(lo_b, x_cap);
  if (!(lo_b < hi_b)) return lo_b;
  lo_b = std::max(lo_b, std::numeric_limits<double>::min());

  // Increasing in t = log x, zero at the quantile.
  const bool lower_half = u <= 0.5;
  const double target = lower_half ? std::log(u) : std::log1p(-u);
  auto objective = [&](double t) {
    const SystemPoint v = system_evaluate(s, std::exp(t));
    const double d = lower_half ? v.log_cdf - target : target - v.log_survival;
    // toms748 interpolates, so an infinite end value would poison it.
    return std::clamp(d, -1e300, 1e300);
  };

  double t_lo = std::log(lo_b);
  double t_hi = std::log(hi_b);
  const double f_lo = objective(t_lo);
  const double f_hi = objective(t_hi);
  if (f_lo >= 0.0) return lo_b;
  if (f_hi <= 0.0) return hi_b == x_cap && f_hi < 0.0 ? kInf : hi_b;

  auto tol = [](double a, double b) {
    return std::fabs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                   std::max(1.0, std::fabs(a));
  };
  std::uintmax_t max_iter = 200;
  const auto [a, b] =
      boost::math::tools::toms748_solve(objective, t_lo, t_hi, f_lo, f_hi, tol, max_iter);
  return std::exp(0.5 * (a + b));
}

struct RatioPoint {
  double x = 0.0;
  double ratio = 0.0;
  /// Set when either density is zero or non-finite at x.
  bool flagged = false;
};

/// Pointwise f_Y / f_X over a grid, formed as exp(log f_Y - log f_X).
inline std::vector<RatioPoint> density_ratio_curve(const SystemSpec& sx, const SystemSpec& sy,
                                                   const EvaluationGrid& grid) {
  if (sx.topology != sy.topology) {
    throw std::invalid_argument("density_ratio_curve: systems must share a topology");
  }
  std::vector<RatioPoint> out;
  out.reserve(grid.size());
  for (double x : grid) {
    const double lfx = system_log_pdf(sx, x);
    const double lfy = system_log_pdf(sy, x);
    RatioPoint p{x, std::exp(lfy - lfx), false};
    if (!std::isfinite(lfx) || !std::isfinite(lfy) || !std::isfinite(p.ratio)) {
      p.flagged = true;
      p.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(p);
  }
  return out;
}

inline double cdf(const SystemSpec& d, double x) { return system_cdf(d, x); }
inline double survival(const SystemSpec& d, double x) { return system_survival(d, x); }
inline double pdf(const SystemSpec& d, double x) { return system_pdf(d, x); }
inline double log_pdf(const SystemSpec& d, double x) { return system_log_pdf(d, x); }
inline double log_cdf(const SystemSpec& d, double x) { return system_evaluate(d, x).log_cdf; }
inline double log_survival(const SystemSpec& d, double x) {
  return system_evaluate(d, x).log_survival;
}
inline double hazard(const SystemSpec& d, double x) { return system_hazard(d, x); }
inline double quantile(const SystemSpec& d, double u) { return system_quantile(d, u); }
inline double support_lo(const SystemSpec& d) { return d.support_lo(); }
inline double support_hi(const SystemSpec& d) { return d.support_hi(); }

}  // namespace tlg
