#pragma once

// Evaluation grids for the pointwise order checks.
//
// A grid is bounded by interior quantiles of the distributions being
// compared, so no point ever sits on a support endpoint where densities or
// hazards may diverge.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <span>
#include <vector>

#include "tlg/numeric.hpp"

namespace tlg {

enum class GridSpacing { linear, geometric };

inline std::string_view to_string(GridSpacing s) {
  return s == GridSpacing::linear ? "linear" : "geometric";
}

inline GridSpacing grid_spacing_from_string(std::string_view s) {
  if (s == "linear") return GridSpacing::linear;
  if (s == "geometric") return GridSpacing::geometric;
  throw std::invalid_argument("unknown grid spacing '" + std::string(s) + "'");
}

struct GridOptions {
  double q_lo = 0.001;
  double q_hi = 0.999;
  std::size_t count = 512;
  GridSpacing spacing = GridSpacing::linear;

  static constexpr std::size_t kMinCount = 16;

  void validate() const {
    if (!(q_lo > 0.0 && q_lo < q_hi && q_hi < 1.0)) {
      throw std::domain_error("grid quantile bounds must satisfy 0 < q_lo < q_hi < 1");
    }
    if (count < kMinCount) {
      throw std::domain_error("grid count must be at least " + std::to_string(kMinCount));
    }
  }
};

/// Strictly increasing abscissae plus the options that produced them.
class EvaluationGrid {
 public:
  EvaluationGrid() = default;

  explicit EvaluationGrid(std::vector<double> points, GridOptions options = {})
      : points_(std::move(points)), options_(options) {
    if (points_.empty()) throw std::domain_error("evaluation grid is empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      detail::require_finite(points_[i], "evaluation grid");
      if (i > 0 && !(points_[i] > points_[i - 1])) {
        throw std::domain_error("evaluation grid must be strictly increasing");
      }
    }
  }

  /// count points from lo to hi inclusive.
  static EvaluationGrid span(double lo, double hi, std::size_t count,
                             GridSpacing spacing = GridSpacing::linear) {
    if (!(lo < hi) || count < 2) throw std::domain_error("degenerate grid span");
    if (spacing == GridSpacing::geometric && !(lo > 0.0)) {
      throw std::domain_error("geometric grid needs a positive lower bound");
    }
    std::vector<double> pts(count);
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      const double f = static_cast<double>(i) / last;
      pts[i] = spacing == GridSpacing::linear
                   ? lo + (hi - lo) * f
                   : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f);
    }
    pts.front() = lo;
    pts.back() = hi;
    GridOptions opts;
    opts.count = count;
    opts.spacing = spacing;
    return EvaluationGrid(std::move(pts), opts);
  }

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }
  const GridOptions& options() const { return options_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<double> points_;
  GridOptions options_;
};

namespace detail {

template <class D>
void widen_bounds(const D& d, const GridOptions& o, double& lo, double& hi,
                  double& common_lo, double& common_hi) {
  lo = std::min(lo, quantile(d, o.q_lo));
  hi = std::max(hi, quantile(d, o.q_hi));
  common_lo = std::max(common_lo, support_lo(d));
  common_hi = std::min(common_hi, support_hi(d));
}

inline EvaluationGrid finish_grid(const GridOptions& o, double lo, double hi,
                                  double common_lo, double common_hi) {
  lo = std::max(lo, common_lo);
  hi = std::min(hi, common_hi);
  if (lo <= common_lo) lo = std::nextafter(common_lo, kInf);
  if (hi >= common_hi) hi = std::nextafter(common_hi, kNegInf);
  if (!(lo < hi)) {
    throw std::domain_error("grid quantile range does not meet the common open support");
  }
  EvaluationGrid g = EvaluationGrid::span(lo, hi, o.count, o.spacing);
  return EvaluationGrid(g.points(), o);
}

}  // namespace detail

/// Grid spanning [min quantile(q_lo), max quantile(q_hi)] over all inputs,
/// clipped to their common open support.
template <class... Ds>
EvaluationGrid build_grid(const GridOptions& options, const Ds&... dists) {
  static_assert(sizeof...(Ds) > 0, "build_grid needs at least one distribution");
  options.validate();
  double lo = kInf, hi = kNegInf, common_lo = kNegInf, common_hi = kInf;
  (detail::widen_bounds(dists, options, lo, hi, common_lo, common_hi), ...);
  return detail::finish_grid(options, lo, hi, common_lo, common_hi);
}

template <class D>
EvaluationGrid build_grid(std::span<const D> dists, const GridOptions& options) {
  options.validate();
  if (dists.empty()) throw std::domain_error("build_grid needs at least one distribution");
  double lo = kInf, hi = kNegInf, common_lo = kNegInf, common_hi = kInf;
  for (const D& d : dists) detail::widen_bounds(d, options, lo, hi, common_lo, common_hi);
  return detail::finish_grid(options, lo, hi, common_lo, common_hi);
}

}  // namespace tlg
