#pragma once

// Baseline (parent) distributions G(x) plugged into the Topp-Leone generator.
//
// Every family here lives on [0, hi] with hi either finite (scaled uniform)
// or +inf. Evaluation is done in log space so that the TL-G formulas can
// raise G and 1 - G to large or small powers without underflow.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tlg/numeric.hpp"

namespace tlg {

enum class BaselineFamily { uniform01, exponential, weibull, log_logistic };

inline std::string_view to_string(BaselineFamily f) {
  switch (f) {
    case BaselineFamily::uniform01: return "uniform01";
    case BaselineFamily::exponential: return "exponential";
    case BaselineFamily::weibull: return "weibull";
    case BaselineFamily::log_logistic: return "log_logistic";
  }
  return "?";
}

inline BaselineFamily baseline_family_from_string(std::string_view s) {
  if (s == "uniform01") return BaselineFamily::uniform01;
  if (s == "exponential") return BaselineFamily::exponential;
  if (s == "weibull") return BaselineFamily::weibull;
  if (s == "log_logistic") return BaselineFamily::log_logistic;
  throw std::invalid_argument("unknown baseline family '" + std::string(s) + "'");
}

/// Values of a baseline at one abscissa. Log fields may be -inf.
struct BaselinePoint {
  double cdf = 0.0;
  double survival = 1.0;
  double pdf = 0.0;
  double log_cdf = kNegInf;
  double log_survival = 0.0;
  double log_pdf = kNegInf;
};

/// A baseline distribution G(.; xi).
///
/// Parameter names per family:
///   uniform01     scale (optional, default 1; support [0, scale])
///   exponential   rate
///   weibull       shape, scale
///   log_logistic  shape, scale
class BaselineSpec {
 public:
  BaselineSpec() : BaselineSpec(BaselineFamily::uniform01, {}) {}

  BaselineSpec(BaselineFamily family, std::map<std::string, double> params)
      : family_(family), params_(std::move(params)) {
    validate();
  }

  static BaselineSpec uniform01(double scale = 1.0) {
    if (scale == 1.0) return BaselineSpec(BaselineFamily::uniform01, {});
    return BaselineSpec(BaselineFamily::uniform01, {{"scale", scale}});
  }
  static BaselineSpec exponential(double rate) {
    return BaselineSpec(BaselineFamily::exponential, {{"rate", rate}});
  }
  static BaselineSpec weibull(double shape, double scale) {
    return BaselineSpec(BaselineFamily::weibull, {{"shape", shape}, {"scale", scale}});
  }
  static BaselineSpec log_logistic(double shape, double scale) {
    return BaselineSpec(BaselineFamily::log_logistic,
                        {{"shape", shape}, {"scale", scale}});
  }

  BaselineFamily family() const { return family_; }
  const std::map<std::string, double>& params() const { return params_; }

  double param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) {
      if (family_ == BaselineFamily::uniform01 && name == "scale") return 1.0;
      throw std::invalid_argument("baseline parameter '" + name + "' missing");
    }
    return it->second;
  }

  double support_lo() const { return 0.0; }
  double support_hi() const {
    return family_ == BaselineFamily::uniform01 ? param("scale") : kInf;
  }

  /// Evaluate G, 1 - G and g (plus their logs) at x.
  BaselinePoint evaluate(double x) const {
    detail::require_finite(x, "baseline evaluate");
    BaselinePoint p;
    if (x < 0.0) return p;
    switch (family_) {
      case BaselineFamily::uniform01: {
        const double c = param("scale");
        if (x >= c) {
          p = {1.0, 0.0, x == c ? 1.0 / c : 0.0, 0.0, kNegInf,
               x == c ? -std::log(c) : kNegInf};
          return p;
        }
        const double r = x / c;
        p.cdf = r;
        p.survival = 1.0 - r;
        p.pdf = 1.0 / c;
        p.log_cdf = std::log(r);
        p.log_survival = std::log1p(-r);
        p.log_pdf = -std::log(c);
        return p;
      }
      case BaselineFamily::exponential: {
        const double rate = param("rate");
        const double z = rate * x;
        p.log_survival = -z;
        p.log_cdf = z == 0.0 ? kNegInf : detail::log1mexp(-z);
        p.log_pdf = std::log(rate) - z;
        break;
      }
      case BaselineFamily::weibull: {
        const double k = param("shape");
        const double s = param("scale");
        const double lr = std::log(x / s);
        const double z = std::exp(k * lr);
        p.log_survival = -z;
        p.log_cdf = z == 0.0 ? kNegInf : detail::log1mexp(-z);
        if (x == 0.0) {
          p.log_pdf = k < 1.0 ? kInf : (k == 1.0 ? -std::log(s) : kNegInf);
        } else {
          p.log_pdf = std::log(k / s) + (k - 1.0) * lr - z;
        }
        break;
      }
      case BaselineFamily::log_logistic: {
        const double k = param("shape");
        const double s = param("scale");
        const double lz = k * std::log(x / s);  // log (x/s)^k
        p.log_cdf = -softplus(-lz);
        p.log_survival = -softplus(lz);
        if (x == 0.0) {
          p.log_pdf = k < 1.0 ? kInf : (k == 1.0 ? -std::log(s) : kNegInf);
        } else {
          p.log_pdf = std::log(k / s) + (k - 1.0) / k * lz - 2.0 * softplus(lz);
        }
        break;
      }
    }
    p.cdf = std::exp(p.log_cdf);
    p.survival = std::exp(p.log_survival);
    p.pdf = std::exp(p.log_pdf);
    return p;
  }

  /// Inverse cdf computed from the complementary probability ubar = 1 - u,
  /// so that upper-tail quantiles keep full precision.
  double quantile_upper(double ubar) const {
    detail::require_probability(ubar, "baseline quantile");
    if (ubar == 1.0) return support_lo();
    if (ubar == 0.0) return support_hi();
    switch (family_) {
      case BaselineFamily::uniform01:
        return param("scale") * (1.0 - ubar);
      case BaselineFamily::exponential:
        return -std::log(ubar) / param("rate");
      case BaselineFamily::weibull:
        return param("scale") * std::pow(-std::log(ubar), 1.0 / param("shape"));
      case BaselineFamily::log_logistic:
        return param("scale") * std::pow((1.0 - ubar) / ubar, 1.0 / param("shape"));
    }
    return 0.0;
  }

  /// Infimum of {x : G(x) >= u}.
  double quantile(double u) const {
    detail::require_probability(u, "baseline quantile");
    if (u == 0.0) return support_lo();
    if (u == 1.0) return support_hi();
    switch (family_) {
      case BaselineFamily::uniform01:
        return param("scale") * u;
      case BaselineFamily::exponential:
        return -std::log1p(-u) / param("rate");
      case BaselineFamily::weibull:
        return param("scale") * std::pow(-std::log1p(-u), 1.0 / param("shape"));
      case BaselineFamily::log_logistic:
        return param("scale") * std::pow(u / (1.0 - u), 1.0 / param("shape"));
    }
    return 0.0;
  }

  friend bool operator==(const BaselineSpec&, const BaselineSpec&) = default;

 private:
  static double softplus(double t) {
    return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
  }

  void require(const char* name) const {
    auto it = params_.find(name);
    if (it == params_.end()) {
      throw std::invalid_argument(std::string(to_string(family_)) +
                                  " baseline requires parameter '" + name + "'");
    }
  }

  void validate() const {
    switch (family_) {
      case BaselineFamily::uniform01: break;
      case BaselineFamily::exponential: require("rate"); break;
      case BaselineFamily::weibull:
      case BaselineFamily::log_logistic:
        require("shape");
        require("scale");
        break;
    }
    for (const auto& [name, value] : params_) {
      if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument("baseline parameter '" + name +
                                    "' must be finite and strictly positive");
      }
    }
  }

  BaselineFamily family_;
  std::map<std::string, double> params_;
};

inline double baseline_cdf(const BaselineSpec& spec, double x) {
  return spec.evaluate(x).cdf;
}

inline double baseline_pdf(const BaselineSpec& spec, double x) {
  return spec.evaluate(x).pdf;
}

inline double baseline_survival(const BaselineSpec& spec, double x) {
  return spec.evaluate(x).survival;
}

inline double baseline_quantile(const BaselineSpec& spec, double u) {
  return spec.quantile(u);
}

// Generic accessors used by the order checks and grid builder.
inline double cdf(const BaselineSpec& d, double x) { return baseline_cdf(d, x); }
inline double survival(const BaselineSpec& d, double x) { return baseline_survival(d, x); }
inline double quantile(const BaselineSpec& d, double u) { return d.quantile(u); }
inline double support_lo(const BaselineSpec& d) { return d.support_lo(); }
inline double support_hi(const BaselineSpec& d) { return d.support_hi(); }

}  // namespace tlg
