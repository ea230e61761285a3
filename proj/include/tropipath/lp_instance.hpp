#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/halfspace.hpp"
#include "tropipath/puiseux.hpp"

namespace tropipath {

struct CexParams {
  int r = 1;
  bool extended = false;
};

/// One linear program over Puiseux coefficients, encoding a one-parameter
/// family of real LPs:
///     minimize c.x   subject to  A x + w = b,  x >= 0,  w >= 0,
/// with one named slack per row.
struct LPInstance {
  PuiseuxMatrix a;
  PuiseuxVector b;
  PuiseuxVector c;
  std::vector<std::string> var_names;    // one per column of A
  std::vector<std::string> slack_names;  // one per row of A
  std::string name;

  bool has_family = false;  // true when generated by build_lp
  CexParams family{};

  LPInstance(std::size_t m, std::size_t n)
      : a(m, n), b(m), c(n), var_names(n), slack_names(m) {}

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }

  /// Coordinate names in the order (x | w).
  std::vector<std::string> full_names() const {
    std::vector<std::string> out = var_names;
    out.insert(out.end(), slack_names.begin(), slack_names.end());
    return out;
  }
};

/// The constraint matrix over the full coordinate space (x | w), i.e. [A | I].
inline PuiseuxMatrix slack_extended_matrix(const LPInstance& lp) {
  const std::size_t m = lp.rows(), n = lp.cols();
  PuiseuxMatrix out(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = lp.a.at(i, j);
    out.at(i, n + i) = PuiseuxPoly::constant(Rational(1));
  }
  return out;
}

/// Tropicalization of the feasible set in (x | w) coordinates: the equality
/// rows [A | I] (x, w) = b.
inline TropHalfspaceSystem tropicalize_full(const LPInstance& lp) {
  return tropicalize(slack_extended_matrix(lp), lp.b,
                     std::vector<RowKind>(lp.rows(), RowKind::equality));
}

/// Tropicalization of the projection onto x: the inequality rows A x <= b.
inline TropHalfspaceSystem tropicalize_x(const LPInstance& lp) {
  return tropicalize(lp.a, lp.b, std::vector<RowKind>(lp.rows(), RowKind::inequality));
}

/// Objective valuations as a tropical vector over (x | w); slack coordinates
/// carry -inf.
inline TropVector tropical_objective_full(const LPInstance& lp) {
  TropVector out(lp.cols() + lp.rows(), TropScalar::neg_inf());
  for (std::size_t j = 0; j < lp.cols(); ++j)
    if (!lp.c[j].is_zero()) out[j] = val(lp.c[j]);
  return out;
}

inline TropVector tropical_objective_x(const LPInstance& lp) {
  TropVector out(lp.cols(), TropScalar::neg_inf());
  for (std::size_t j = 0; j < lp.cols(); ++j)
    if (!lp.c[j].is_zero()) out[j] = val(lp.c[j]);
  return out;
}

}  // namespace tropipath
