#pragma once

// Monte-Carlo cross-check of the analytic system cdf: simulate components,
// take the min (series) or max (parallel), and measure the one-sample
// Kolmogorov-Smirnov distance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tlg/system.hpp"
#include "tlg/topp_leone.hpp"

namespace tlg {

/// sup_x |F_n(x) - F(x)| for the sample against a continuous cdf.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf_fn) {
  if (samples.empty()) throw std::domain_error("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf_fn(samples[i]);
    const double di = static_cast<double>(i);
    d = std::max({d, (di + 1.0) / n - f, f - di / n});
  }
  return d;
}

struct GofReport {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double ks = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

inline constexpr std::size_t kMinGofSamples = 100;

/// Acceptance bound on the KS distance: 0.01, loosened to 2/sqrt(n) for
/// small samples (0.2 at n = 100).
inline double gof_threshold(std::size_t n) {
  return std::max(0.01, 2.0 / std::sqrt(static_cast<double>(n)));
}

inline std::vector<double> system_sample(const SystemSpec& s, std::mt19937_64& rng,
                                         std::size_t n) {
  std::vector<double> out(n, s.topology == Topology::series ? kInf : kNegInf);
  for (const auto& c : s.components) {
    const std::vector<double> draws = tlg_sample(c, rng, n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = s.topology == Topology::series ? std::min(out[i], draws[i])
                                              : std::max(out[i], draws[i]);
    }
  }
  return out;
}

inline GofReport monte_carlo_gof(const SystemSpec& s, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < kMinGofSamples) {
    throw std::invalid_argument("monte_carlo_gof: need at least 100 samples");
  }
  std::mt19937_64 rng(seed);
  GofReport r;
  r.n_samples = n_samples;
  r.seed = seed;
  r.ks = ks_statistic(system_sample(s, rng, n_samples),
                      [&s](double x) { return system_cdf(s, x); });
  r.threshold = gof_threshold(n_samples);
  r.pass = r.ks < r.threshold;
  return r;
}

}  // namespace tlg
