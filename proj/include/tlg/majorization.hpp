#pragma once

// Vector orders on R^n and numerical Schur-concavity / convexity checks.
//
// Sorting is ascending throughout: x_(1) <= ... <= x_(n).
//   x majorized by y           prefix sums of sorted x >= those of y, equal totals
//   x weakly submajorized by y suffix sums of sorted x <= those of y

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlg/numeric.hpp"

namespace tlg {

using RealVector = std::vector<double>;

inline constexpr double kMajorizationTol = 1e-12;

namespace detail {

inline void require_same_length(std::span<const double> x, std::span<const double> y,
                                const char* where) {
  if (x.size() != y.size()) {
    throw std::domain_error(std::string(where) + ": vectors differ in length");
  }
  if (x.empty()) throw std::domain_error(std::string(where) + ": vectors are empty");
}

inline RealVector sorted_copy(std::span<const double> v) {
  RealVector s(v.begin(), v.end());
  for (double e : s) require_finite(e, "vector order");
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// x majorized by y (x is the less dispersed vector).
inline bool is_majorized(std::span<const double> x, std::span<const double> y,
                         double tol = kMajorizationTol) {
  detail::require_same_length(x, y, "is_majorized");
  const RealVector xs = detail::sorted_copy(x);
  const RealVector ys = detail::sorted_copy(y);
  double px = 0.0, py = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    px += xs[i];
    py += ys[i];
    if (i + 1 < xs.size() && px < py - tol) return false;
  }
  return std::fabs(px - py) <= tol;
}

/// x weakly submajorized by y.
inline bool is_weakly_submajorized(std::span<const double> x, std::span<const double> y,
                                   double tol = kMajorizationTol) {
  detail::require_same_length(x, y, "is_weakly_submajorized");
  const RealVector xs = detail::sorted_copy(x);
  const RealVector ys = detail::sorted_copy(y);
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = xs.size(); i-- > 0;) {
    sx += xs[i];
    sy += ys[i];
    if (sx > sy + tol) return false;
  }
  return true;
}

inline bool componentwise_leq(std::span<const double> x, std::span<const double> y) {
  detail::require_same_length(x, y, "componentwise_leq");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] <= y[k])) return false;
  }
  return true;
}

/// Moves `amount` from v[from] to v[to]. The amount may not exceed half the
/// gap, so the two entries never swap order.
inline void robin_hood_transfer(RealVector& v, std::size_t from, std::size_t to, double amount) {
  if (from >= v.size() || to >= v.size() || from == to) {
    throw std::domain_error("robin_hood_transfer: bad indices");
  }
  const double gap = v[from] - v[to];
  if (!(amount >= 0.0) || amount > 0.5 * gap * (1.0 + 1e-15)) {
    throw std::domain_error("robin_hood_transfer: amount must lie in [0, (larger - smaller)/2]");
  }
  v[from] -= amount;
  v[to] += amount;
}

struct MajorizationPair {
  RealVector x;  // the majorized (less dispersed) vector
  RealVector y;
};

/// Random pair with x majorized by y.
///
/// y has strictly positive entries summing to `total`; x is y after
/// `transfers` random Robin-Hood transfers, then shuffled.
template <class URBG>
MajorizationPair random_majorization_pair(URBG& rng, std::size_t n, double total,
                                          std::size_t transfers) {
  if (n < 2) throw std::domain_error("random_majorization_pair: n must be at least 2");
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::domain_error("random_majorization_pair: total must be positive");
  }
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  RealVector y(n);
  for (double& e : y) e = weight(rng);
  const double s = std::accumulate(y.begin(), y.end(), 0.0);
  for (double& e : y) e *= total / s;

  RealVector x = y;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (std::size_t t = 0; t < transfers; ++t) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    if (x[i] < x[j]) std::swap(i, j);
    const double half_gap = 0.5 * (x[i] - x[j]);
    // (0, half_gap]: 1 - U with U in [0,1).
    robin_hood_transfer(x, i, j, half_gap * (1.0 - frac(rng)));
  }
  std::shuffle(x.begin(), x.end(), rng);
  return {std::move(x), std::move(y)};
}

using SymmetricFunction = std::function<double(std::span<const double>)>;

/// Outcome of a Lemma-style pairwise derivative check.
struct SchurReport {
  /// max over k != l of (v_k - v_l)(d psi/d v_k - d psi/d v_l)
  double max_term = kNegInf;
  std::size_t worst_k = 0;
  std::size_t worst_l = 0;
  bool pass = false;
};

inline constexpr double kSchurStep = 1e-5;
inline constexpr double kSchurTol = 1e-8;

/// Central-difference test of the Schur-concavity condition
/// (v_k - v_l)(psi_k - psi_l) <= 0 at one point v.
inline SchurReport schur_concavity_witness(const SymmetricFunction& psi,
                                           std::span<const double> v,
                                           double step = kSchurStep, double tol = kSchurTol) {
  if (!(step > 0.0)) throw std::domain_error("schur_concavity_witness: step must be positive");
  if (v.size() < 2) throw std::domain_error("schur_concavity_witness: need at least 2 entries");
  const std::size_t n = v.size();
  RealVector grad(n);
  RealVector probe(v.begin(), v.end());
  for (std::size_t k = 0; k < n; ++k) {
    const double h = step * std::max(1.0, std::fabs(v[k]));
    probe[k] = v[k] + h;
    const double up = psi(probe);
    probe[k] = v[k] - h;
    const double down = psi(probe);
    probe[k] = v[k];
    grad[k] = (up - down) / (2.0 * h);
  }
  SchurReport r;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const double term = (v[k] - v[l]) * (grad[k] - grad[l]);
      if (term > r.max_term) {
        r.max_term = term;
        r.worst_k = k;
        r.worst_l = l;
      }
    }
  }
  r.pass = r.max_term <= tol;
  return r;
}

/// Schur-convexity is Schur-concavity of -psi.
inline SchurReport schur_convexity_witness(const SymmetricFunction& psi,
                                           std::span<const double> v,
                                           double step = kSchurStep, double tol = kSchurTol) {
  return schur_concavity_witness(
      [&psi](std::span<const double> z) { return -psi(z); }, v, step, tol);
}

/// tau(alpha) = alpha t^(alpha-1) / (1 - t^alpha), 0 < t < 1.
inline double tau(double t, double alpha) {
  return alpha * std::exp((alpha - 1.0) * std::log(t)) / -std::expm1(alpha * std::log(t));
}

struct ConvexityReport {
  double min_second_difference = kInf;
  std::size_t worst_index = 0;  // centre of the worst stencil
  bool pass = false;
};

/// Second central differences of tau over an equally spaced increasing
/// alpha grid must all be >= -tol.
inline ConvexityReport tau_convexity_check(double t, std::span<const double> alphas,
                                           double tol = 1e-12) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("tau_convexity_check: t must lie in (0,1)");
  if (alphas.size() < 3) throw std::domain_error("tau_convexity_check: need at least 3 alphas");
  const double h = alphas[1] - alphas[0];
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    const double d = alphas[i] - alphas[i - 1];
    if (!(alphas[i - 1] > 0.0) || !(d > 0.0) || std::fabs(d - h) > 1e-9 * std::max(1.0, h)) {
      throw std::domain_error(
          "tau_convexity_check: alphas must be positive, increasing and equally spaced");
    }
  }
  ConvexityReport r;
  for (std::size_t i = 1; i + 1 < alphas.size(); ++i) {
    const double d2 =
        tau(t, alphas[i - 1]) - 2.0 * tau(t, alphas[i]) + tau(t, alphas[i + 1]);
    if (d2 < r.min_second_difference) {
      r.min_second_difference = d2;
      r.worst_index = i;
    }
  }
  r.pass = r.min_second_difference >= -tol;
  return r;
}

}  // namespace tlg
