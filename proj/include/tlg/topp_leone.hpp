#pragma once

// Topp-Leone generated distribution TL-G(alpha, theta, xi):
//
//   F(x) = (G^theta (2 - G^theta))^alpha
//   f(x) = 2 alpha theta g G^(theta alpha - 1) (1 - G^theta) (2 - G^theta)^(alpha - 1)
//
// With y = G^theta we have y (2 - y) = 1 - (1 - y)^2, which is what makes the
// survival function computable without cancellation as F -> 1.

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "tlg/baseline.hpp"
#include "tlg/numeric.hpp"

namespace tlg {

/// One TL-G component: shape alpha, scale theta, baseline G.
struct TLGParams {
  double alpha = 1.0;
  double theta = 1.0;
  BaselineSpec baseline;

  TLGParams() = default;
  TLGParams(double a, double t, BaselineSpec g) : alpha(a), theta(t), baseline(std::move(g)) {
    validate();
  }

  void validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw std::invalid_argument("TL-G shape alpha must be finite and > 0");
    }
    if (!(theta > 0.0) || !std::isfinite(theta)) {
      throw std::invalid_argument("TL-G scale theta must be finite and > 0");
    }
  }

  friend bool operator==(const TLGParams&, const TLGParams&) = default;
};

/// Log-space values of one component at one abscissa.
struct TLGPoint {
  double log_cdf = kNegInf;
  double log_survival = 0.0;
  double log_pdf = kNegInf;
  /// log f/F; +inf where F = 0 inside the support.
  double log_reverse_hazard = kNegInf;
};

namespace detail {

// log(1 - exp(-exp(L))), i.e. log(-expm1(-t)) for t = e^L, without
// underflowing when t is tiny.
inline double log1mexp_of_exp(double L) {
  if (L == kNegInf) return kNegInf;
  if (L < -30.0) return L + std::log1p(-0.5 * std::exp(L));
  return std::log(-std::expm1(-std::exp(L)));
}

// log(-log(1 - e^s)) for s <= 0: the log of -log(1 - q) with q = e^s.
inline double log_neg_log1m(double s) {
  if (s == kNegInf) return kNegInf;
  if (s < -20.0) {
    const double q = std::exp(s);
    return s + std::log1p(q / 2.0 + q * q / 3.0);
  }
  return std::log(-log1mexp(s));
}

}  // namespace detail

inline TLGPoint tlg_evaluate(const TLGParams& p, double x) {
  detail::require_finite(x, "tlg evaluate");
  const BaselinePoint b = p.baseline.evaluate(x);
  TLGPoint out;
  const double a = p.alpha;
  const double t = p.theta;
  const double ta = t * a;
  const double log_coef = std::log(2.0 * a * t);

  if (x < p.baseline.support_lo()) return out;

  if (b.log_cdf == kNegInf) {
    // G = 0: support infimum. Density limit depends on theta * alpha.
    if (b.pdf > 0.0) {
      if (ta < 1.0) {
        out.log_pdf = kInf;
      } else if (ta == 1.0) {
        out.log_pdf = log_coef + b.log_pdf + (a - 1.0) * std::log(2.0);
      }
      out.log_reverse_hazard = kInf;
    }
    return out;
  }

  if (b.log_survival == kNegInf) {
    // G = 1: at or above a finite support supremum.
    out.log_cdf = 0.0;
    out.log_survival = kNegInf;
    return out;
  }

  const double lG = b.log_cdf;
  // log(1 - y) where y = G^theta; tail-accurate through log(-log G).
  const double log_neg_lG = detail::log_neg_log1m(b.log_survival);
  const double log1my = detail::log1mexp_of_exp(std::log(t) + log_neg_lG);
  const double one_my = std::exp(log1my);
  const double log2my = std::log1p(one_my);  // log(2 - y)

  double log_w;                 // log(y (2 - y))
  double log_neg_log_w;         // log(-log w)
  const double log_sq = 2.0 * log1my;  // log (1 - y)^2
  if (log1my < -0.6931471805599453) {
    log_w = std::log1p(-std::exp(log_sq));
    log_neg_log_w = detail::log_neg_log1m(log_sq);
  } else {
    log_w = t * lG + log2my;
    log_neg_log_w = std::log(-log_w);
  }

  out.log_cdf = a * log_w;
  out.log_survival = detail::log1mexp_of_exp(std::log(a) + log_neg_log_w);
  double power = (ta - 1.0) * lG;
  out.log_pdf = log_coef + b.log_pdf + power + log1my + (a - 1.0) * log2my;
  out.log_reverse_hazard = log_coef + b.log_pdf - lG + log1my - log2my;
  if (std::isnan(out.log_pdf)) out.log_pdf = kNegInf;
  if (std::isnan(out.log_reverse_hazard)) out.log_reverse_hazard = kNegInf;
  return out;
}

inline double tlg_cdf(const TLGParams& p, double x) {
  return std::exp(tlg_evaluate(p, x).log_cdf);
}

inline double tlg_survival(const TLGParams& p, double x) {
  return std::exp(tlg_evaluate(p, x).log_survival);
}

inline double tlg_pdf(const TLGParams& p, double x) {
  return std::exp(tlg_evaluate(p, x).log_pdf);
}

inline double tlg_log_pdf(const TLGParams& p, double x) {
  return tlg_evaluate(p, x).log_pdf;
}

inline bool in_open_support(const BaselineSpec& g, double x) {
  return x > g.support_lo() && x < g.support_hi();
}

/// f / (1 - F). Returns +inf once the survival function underflows.
inline double tlg_hazard(const TLGParams& p, double x) {
  detail::require_finite(x, "tlg_hazard");
  if (!in_open_support(p.baseline, x)) {
    throw std::domain_error("tlg_hazard: x outside the open support");
  }
  const TLGPoint v = tlg_evaluate(p, x);
  if (v.log_survival == kNegInf) return kInf;
  return std::exp(v.log_pdf - v.log_survival);
}

/// Closed-form inverse of the cdf.
///
/// Solving y^2 - 2y + u^(1/alpha) = 0 for y = G^theta and keeping the root in
/// [0, 1] gives y = 1 - sqrt(1 - u^(1/alpha)), evaluated here as
/// v / (1 + sqrt(1 - v)) to keep small-u precision.
inline double tlg_quantile(const TLGParams& p, double u) {
  detail::require_probability(u, "tlg_quantile");
  if (u == 0.0) return p.baseline.support_lo();
  if (u == 1.0) return p.baseline.support_hi();
  const double log_v = std::log(u) / p.alpha;
  const double v = std::exp(log_v);
  const double s = std::sqrt(-std::expm1(log_v));  // 1 - y
  const double log_y = s < 0.5 ? std::log1p(-s) : std::log(v / (1.0 + s));
  const double log_g = log_y / p.theta;
  const double g = std::exp(log_g);
  if (g < 0.5) return p.baseline.quantile(g);
  return p.baseline.quantile_upper(-std::expm1(log_g));
}

/// n inverse-transform draws. The caller owns the generator.
template <class URBG>
std::vector<double> tlg_sample(const TLGParams& p, URBG& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(tlg_quantile(p, unif(rng)));
  return out;
}

inline double cdf(const TLGParams& d, double x) { return tlg_cdf(d, x); }
inline double survival(const TLGParams& d, double x) { return tlg_survival(d, x); }
inline double pdf(const TLGParams& d, double x) { return tlg_pdf(d, x); }
inline double log_pdf(const TLGParams& d, double x) { return tlg_log_pdf(d, x); }
inline double log_cdf(const TLGParams& d, double x) { return tlg_evaluate(d, x).log_cdf; }
inline double log_survival(const TLGParams& d, double x) {
  return tlg_evaluate(d, x).log_survival;
}
inline double hazard(const TLGParams& d, double x) { return tlg_hazard(d, x); }
inline double quantile(const TLGParams& d, double u) { return tlg_quantile(d, u); }
inline double support_lo(const TLGParams& d) { return d.baseline.support_lo(); }
inline double support_hi(const TLGParams& d) { return d.baseline.support_hi(); }

}  // namespace tlg
