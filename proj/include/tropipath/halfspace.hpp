#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/puiseux.hpp"
#include "tropipath/tropical.hpp"

namespace tropipath {

enum class RowKind { inequality, equality };

/// Finite intersection of tropical halfspaces
///     max(Aplus_i . x, bminus_i)  <=  max(Aminus_i . x, bplus_i)
/// (with "." the max-plus product), equality rows requiring equality.
struct TropHalfspaceSystem {
  TropMatrix aplus, aminus;
  TropVector bplus, bminus;
  std::vector<RowKind> kinds;

  TropHalfspaceSystem(std::size_t m, std::size_t n)
      : aplus(m, n), aminus(m, n), bplus(m), bminus(m), kinds(m, RowKind::inequality) {}

  std::size_t rows() const { return aplus.rows(); }
  std::size_t cols() const { return aplus.cols(); }
};

namespace detail {

inline TropScalar row_side(const TropMatrix& coeffs, const TropScalar& cst, std::size_t i,
                           const TropVector& x) {
  TropScalar acc = cst;
  for (std::size_t j = 0; j < coeffs.cols(); ++j) acc = tadd(acc, tmul(coeffs.at(i, j), x[j]));
  return acc;
}

}  // namespace detail

inline TropScalar row_lhs(const TropHalfspaceSystem& s, std::size_t i, const TropVector& x) {
  return detail::row_side(s.aplus, s.bminus[i], i, x);
}

inline TropScalar row_rhs(const TropHalfspaceSystem& s, std::size_t i, const TropVector& x) {
  return detail::row_side(s.aminus, s.bplus[i], i, x);
}

inline bool membership(const TropHalfspaceSystem& s, const TropVector& x) {
  if (x.size() != s.cols()) throw dimension_mismatch("membership: dimension mismatch");
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const TropScalar lhs = row_lhs(s, i, x);
    const TropScalar rhs = row_rhs(s, i, x);
    if (s.kinds[i] == RowKind::equality ? !(lhs == rhs) : !(lhs <= rhs)) return false;
  }
  return true;
}

/// Splits (A | b) into ultimately-positive and ultimately-negative parts and
/// applies the valuation entrywise; absent entries become -inf.
inline TropHalfspaceSystem tropicalize(const PuiseuxMatrix& a, const PuiseuxVector& b,
                                       const std::vector<RowKind>& kinds) {
  if (b.size() != a.rows() || kinds.size() != a.rows())
    throw dimension_mismatch("tropicalize: row count mismatch");
  TropHalfspaceSystem s(a.rows(), a.cols());
  s.kinds = kinds;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const int sg = sign_ultimate(a.at(i, j));
      if (sg > 0) s.aplus.at(i, j) = val(a.at(i, j));
      if (sg < 0) s.aminus.at(i, j) = val(a.at(i, j));
    }
    const int sg = sign_ultimate(b[i]);
    if (sg > 0) s.bplus[i] = val(b[i]);
    if (sg < 0) s.bminus[i] = val(b[i]);
  }
  return s;
}

/// Appends the inequality row  max_j (c_j + x_j) <= bound.
inline TropHalfspaceSystem sublevel(const TropHalfspaceSystem& s, const TropVector& c,
                                    const TropScalar& bound) {
  if (c.size() != s.cols()) throw dimension_mismatch("sublevel: dimension mismatch");
  TropHalfspaceSystem out(s.rows() + 1, s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      out.aplus.at(i, j) = s.aplus.at(i, j);
      out.aminus.at(i, j) = s.aminus.at(i, j);
    }
    out.bplus[i] = s.bplus[i];
    out.bminus[i] = s.bminus[i];
    out.kinds[i] = s.kinds[i];
  }
  const std::size_t last = s.rows();
  for (std::size_t j = 0; j < s.cols(); ++j) out.aplus.at(last, j) = c[j];
  out.bplus[last] = bound;
  out.kinds[last] = RowKind::inequality;
  return out;
}

struct BarycenterOptions {
  std::size_t max_sweeps = 1'000'000;
};

/// Greatest feasible point <= upper_box, by monotone decreasing saturation:
/// while some row is violated, each left-side coordinate exceeding the row's
/// right-hand value is lowered to the largest admissible value. Equality rows
/// act as two opposed inequality rows. Throws infeasible_error when no
/// feasible point <= upper_box exists, convergence_error past the sweep cap.
inline TropVector barycenter(const TropHalfspaceSystem& s, const TropVector& upper_box,
                             const BarycenterOptions& opts = {}) {
  if (upper_box.size() != s.cols()) throw dimension_mismatch("barycenter: box dimension mismatch");

  // One-sided view: left coefficients, left constant, right coefficients, right constant.
  struct Side {
    const TropMatrix* lc;
    const TropScalar* lk;
    const TropMatrix* rc;
    const TropScalar* rk;
    std::size_t i;
  };
  std::vector<Side> sides;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    sides.push_back({&s.aplus, &s.bminus[i], &s.aminus, &s.bplus[i], i});
    if (s.kinds[i] == RowKind::equality)
      sides.push_back({&s.aminus, &s.bplus[i], &s.aplus, &s.bminus[i], i});
  }

  TropVector x = upper_box;
  bool changed = true;
  std::size_t sweeps = 0;
  while (changed) {
    if (++sweeps > opts.max_sweeps)
      throw convergence_error("barycenter: saturation did not reach a fixpoint");
    changed = false;
    for (const auto& side : sides) {
      const TropScalar rhs = detail::row_side(*side.rc, *side.rk, side.i, x);
      if (*side.lk > rhs) throw infeasible_error("barycenter: system infeasible below box");
      for (std::size_t j = 0; j < s.cols(); ++j) {
        const TropScalar& coeff = side.lc->at(side.i, j);
        if (!coeff.is_finite()) continue;
        if (tmul(coeff, x[j]) > rhs) {
          x[j] = rhs.is_finite() ? TropScalar(rhs.value() - coeff.value())
                                 : TropScalar::neg_inf();
          changed = true;
        }
      }
    }
  }
  if (!membership(s, x)) throw infeasible_error("barycenter: fixpoint fails membership");
  return x;
}

/// Rows whose two sides are exactly equal at x. Requires x feasible.
inline std::vector<std::size_t> tight_rows(const TropHalfspaceSystem& s, const TropVector& x) {
  if (!membership(s, x)) throw infeasible_error("tight_rows: point is infeasible");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (row_lhs(s, i, x) == row_rhs(s, i, x)) idx.push_back(i);
  return idx;
}

/// For systems whose rows each carry at most one finite positive coefficient:
/// true iff n-1 tight rows exist whose positive columns are pairwise
/// distinct. Certifies that x lies on the valuation image of the vertex-edge
/// graph of the lifted polyhedron.
inline bool on_vertex_edge_graph(const TropHalfspaceSystem& s, const TropVector& x,
                                 std::size_t n) {
  if (x.size() != s.cols()) throw dimension_mismatch("on_vertex_edge_graph: dimension mismatch");
  std::vector<std::optional<std::size_t>> positive_col(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (!s.aplus.at(i, j).is_finite()) continue;
      if (positive_col[i])
        throw precondition_error(
            "on_vertex_edge_graph: row with more than one finite positive coefficient");
      positive_col[i] = j;
    }
  }
  std::vector<bool> seen(s.cols(), false);
  std::size_t distinct = 0;
  for (std::size_t i : tight_rows(s, x)) {
    if (!positive_col[i]) continue;
    if (!seen[*positive_col[i]]) {
      seen[*positive_col[i]] = true;
      ++distinct;
    }
  }
  return distinct + 1 >= n;
}

}  // namespace tropipath
