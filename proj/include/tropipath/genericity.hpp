#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/puiseux.hpp"
#include "tropipath/tropical.hpp"

namespace tropipath {

enum class TropDetClass {
  sign_nonsingular,   // all permutation terms of maximal valuation share one sign
  all_terms_vanish,   // every permutation product is zero
  mixed,              // maximal-valuation terms with both signs
};

namespace detail {

inline int permutation_parity(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

}  // namespace detail

/// Classifies the tropicalization of a square matrix by full permutation
/// expansion of the determinant, using only valuations and ultimate signs
/// of the entries. Dimension capped at 10.
inline TropDetClass trop_det_sign(const PuiseuxMatrix& m) {
  if (m.rows() != m.cols()) throw precondition_error("trop_det_sign: matrix not square");
  const std::size_t n = m.rows();
  if (n > 10) throw precondition_error("trop_det_sign: dimension exceeds 10");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool any_term = false;
  TropScalar max_val = TropScalar::neg_inf();
  bool plus_at_max = false, minus_at_max = false;
  do {
    TropScalar v(Rational(0));
    int sign = detail::permutation_parity(perm);
    for (std::size_t i = 0; i < n && sign != 0; ++i) {
      const PuiseuxPoly& e = m.at(i, perm[i]);
      const int sg = sign_ultimate(e);
      if (sg == 0) {
        sign = 0;
        break;
      }
      sign *= sg;
      v = tmul(v, val(e));
    }
    if (sign == 0) continue;
    any_term = true;
    if (max_val < v) {
      max_val = v;
      plus_at_max = sign > 0;
      minus_at_max = sign < 0;
    } else if (v == max_val) {
      (sign > 0 ? plus_at_max : minus_at_max) = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!any_term) return TropDetClass::all_terms_vanish;
  return (plus_at_max && minus_at_max) ? TropDetClass::mixed : TropDetClass::sign_nonsingular;
}

struct GenericityReport {
  bool sign_generic = true;
  std::vector<std::size_t> witness_rows;  // offending square submatrix, empty when generic
  std::vector<std::size_t> witness_cols;
};

namespace detail {

template <typename Fn>
inline bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Enumerates every square submatrix and reports the first one that is
/// neither sign non-singular nor identically vanishing. The smaller
/// dimension is capped at 8.
inline GenericityReport is_sign_generic(const PuiseuxMatrix& w) {
  if (std::min(w.rows(), w.cols()) > 8)
    throw precondition_error("is_sign_generic: min dimension exceeds 8");
  GenericityReport report;
  for (std::size_t k = 1; k <= std::min(w.rows(), w.cols()); ++k) {
    const bool clean = detail::for_each_subset(w.rows(), k, [&](const auto& rows) {
      return detail::for_each_subset(w.cols(), k, [&](const auto& cols) {
        PuiseuxMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = w.at(rows[i], cols[j]);
        if (trop_det_sign(sub) == TropDetClass::mixed) {
          report.sign_generic = false;
          report.witness_rows = rows;
          report.witness_cols = cols;
          return false;
        }
        return true;
      });
    });
    if (!clean) break;
  }
  return report;
}

}  // namespace tropipath
