#pragma once

// Log-space helpers shared by the distribution code.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace tlg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Raised when a check finds two equivalent formulations disagreeing
/// beyond tolerance.
class numerical_inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when too many grid points had to be discarded.
class unreliable_grid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(where) + ": argument must be finite");
  }
}

inline void require_probability(double u, const char* where) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::domain_error(std::string(where) + ": probability outside [0,1]");
  }
}

// log(1 - exp(a)) for a <= 0, accurate at both ends.
inline double log1mexp(double a) {
  if (a > -0.6931471805599453) return std::log(-std::expm1(a));
  return std::log1p(-std::exp(a));
}

// log(sum exp(v_i)); -inf for an empty or all -inf input.
inline double log_sum_exp(std::span<const double> v) {
  double m = kNegInf;
  for (double t : v) m = std::max(m, t);
  if (m == kNegInf) return kNegInf;
  if (m == kInf) return kInf;
  double s = 0.0;
  for (double t : v) s += std::exp(t - m);
  return m + std::log(s);
}

// exp(a) - exp(b) without forming either term when both are huge or tiny.
inline double exp_diff(double a, double b) {
  if (a == kNegInf && b == kNegInf) return 0.0;
  if (a >= b) return std::exp(a) * -std::expm1(b - a);
  return -std::exp(b) * -std::expm1(a - b);
}

}  // namespace detail
}  // namespace tlg
