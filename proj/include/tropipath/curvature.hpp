#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/tropical.hpp"

namespace tropipath {

struct CurvatureReport {
  double total_radians = 0.0;
  std::vector<double> angles;       // turning angle at each interior vertex, post-merge
  std::vector<double> subdivision;  // parameter of each retained vertex; empty when unknown
};

/// Total curvature of a polygonal path: the sum of turning angles at strict
/// interior vertices. Consecutive samples closer than merge_rel_tol
/// (relative to the larger norm) are merged first; with merge_rel_tol = 0,
/// exact consecutive duplicates are an error instead.
inline CurvatureReport polygonal_curvature(const std::vector<std::vector<double>>& points,
                                           const std::vector<double>& params = {},
                                           double merge_rel_tol = 1e-9) {
  if (points.size() < 3) throw precondition_error("polygonal_curvature: fewer than 3 points");
  if (!params.empty() && params.size() != points.size())
    throw dimension_mismatch("polygonal_curvature: parameter count mismatch");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw dimension_mismatch("polygonal_curvature: ragged points");

  const auto norm = [](const std::vector<double>& p) {
    double s = 0.0;
    for (double c : p) s += c * c;
    return std::sqrt(s);
  };
  const auto dist = [](const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
    return std::sqrt(s);
  };

  std::vector<std::size_t> kept{0};
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& prev = points[kept.back()];
    const auto& cur = points[i];
    const double d = dist(prev, cur);
    if (merge_rel_tol > 0.0) {
      if (d <= merge_rel_tol * std::max({1.0, norm(prev), norm(cur)})) continue;
    } else if (d == 0.0) {
      throw precondition_error("polygonal_curvature: duplicate consecutive points");
    }
    kept.push_back(i);
  }

  CurvatureReport report;
  for (std::size_t k = 1; k + 1 < kept.size(); ++k) {
    const double a = euclid_angle(points[kept[k - 1]], points[kept[k]], points[kept[k + 1]]);
    report.angles.push_back(a);
    report.total_radians += a;
    if (!params.empty()) report.subdivision.push_back(params[kept[k]]);
  }
  return report;
}

struct TropCurvature {
  std::size_t right_angles = 0;
  double total_radians = 0.0;
};

/// Sum of tropical angles over the interior vertices of a tropical point
/// sequence; a lower bound for the limiting curvature of the lifted paths.
inline TropCurvature tropical_lower_bound(const std::vector<TropVector>& points) {
  if (points.size() < 3) throw precondition_error("tropical_lower_bound: fewer than 3 points");
  TropCurvature out;
  for (std::size_t k = 1; k + 1 < points.size(); ++k)
    if (trop_angle(points[k - 1], points[k], points[k + 1]) == TropAngle::right)
      ++out.right_angles;
  out.total_radians = static_cast<double>(out.right_angles) * (std::numbers::pi / 2.0);
  return out;
}

/// Curvature lower bound of the order-r family: (2^(r-1) - 1) * pi/2.
inline double cex_bound(int r) {
  if (r < 1) throw precondition_error("cex_bound: r must be >= 1");
  return static_cast<double>((1L << (r - 1)) - 1) * (std::numbers::pi / 2.0);
}

/// Dual-path bound of the extended family: (2^r - 1) * pi/2.
inline double dual_cex_bound(int r) {
  if (r < 2) throw precondition_error("dual_cex_bound: r must be >= 2");
  return static_cast<double>((1L << r) - 1) * (std::numbers::pi / 2.0);
}

}  // namespace tropipath
