#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/rational.hpp"

namespace tropipath {

/// Element of the max-plus semiring: a finite rational or -inf.
/// -inf is the additive neutral element and absorbs multiplication.
class TropScalar {
 public:
  TropScalar() : finite_(false) {}  // -inf
  TropScalar(Rational v) : finite_(true), value_(std::move(v)) {}
  TropScalar(long v) : finite_(true), value_(v) {}

  static TropScalar neg_inf() { return TropScalar(); }

  bool is_finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw precondition_error("TropScalar: value() on -inf");
    return value_;
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
  friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
  friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

 private:
  bool finite_;
  Rational value_;
};

/// Tropical addition: max, with -inf neutral.
inline TropScalar tadd(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

/// Tropical multiplication: +, with -inf absorbing.
inline TropScalar tmul(const TropScalar& a, const TropScalar& b) {
  if (!a.is_finite() || !b.is_finite()) return TropScalar::neg_inf();
  return TropScalar(a.value() + b.value());
}

inline std::string to_string(const TropScalar& s) {
  return s.is_finite() ? to_string(s.value()) : std::string("-inf");
}

using TropVector = std::vector<TropScalar>;

class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  TropScalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const TropScalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<TropScalar> entries_;
};

/// (M @ x)_i = max_j (M_ij + x_j).
inline TropVector tmatvec(const TropMatrix& m, const TropVector& x) {
  if (m.cols() != x.size()) throw dimension_mismatch("tmatvec: dimension mismatch");
  TropVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    TropScalar acc = TropScalar::neg_inf();
    for (std::size_t j = 0; j < m.cols(); ++j) acc = tadd(acc, tmul(m.at(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

/// Rational extended with +inf; the codomain of the Funk and Hilbert
/// distances (both are nonnegative, so -inf never occurs).
class ExtendedRational {
 public:
  static ExtendedRational infinity() { return ExtendedRational(true, Rational()); }
  ExtendedRational(Rational v) : infinite_(false), value_(std::move(v)) {}
  ExtendedRational(long v) : infinite_(false), value_(v) {}

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw precondition_error("ExtendedRational: value() on +inf");
    return value_;
  }

  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedRational(a.value_ + b.value_);
  }
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }

 private:
  ExtendedRational(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

/// Funk hemi-metric: max(0, max_k (y_k - x_k)), the least rho >= 0 with
/// rho + x >= y componentwise. +inf when some x_k = -inf but y_k is finite;
/// coordinates where y_k = -inf impose nothing.
inline ExtendedRational funk(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size()) throw dimension_mismatch("funk: length mismatch");
  Rational best(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!y[k].is_finite()) continue;
    if (!x[k].is_finite()) return ExtendedRational::infinity();
    Rational d = y[k].value() - x[k].value();
    if (d > best) best = d;
  }
  return ExtendedRational(best);
}

/// Symmetrized Funk distance (affine Hilbert metric).
inline ExtendedRational hilbert(const TropVector& x, const TropVector& y) {
  return funk(x, y) + funk(y, x);
}

enum class TropAngle { zero, right };

inline double radians(TropAngle a) {
  return a == TropAngle::right ? std::numbers::pi / 2.0 : 0.0;
}

namespace detail {

inline TropScalar vec_max(const TropVector& v) {
  TropScalar m = TropScalar::neg_inf();
  for (const auto& e : v) m = tadd(m, e);
  return m;
}

inline std::vector<std::size_t> argmax_set(const TropVector& v, const TropScalar& m) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] == m) idx.push_back(k);
  return idx;
}

}  // namespace detail

/// Two-valued angle of the ordered triple (U, V, W): right iff
/// max U < max V < max W and the argmax sets of V and W are disjoint.
/// A right angle certifies a limiting quarter turn of the lifted paths.
inline TropAngle trop_angle(const TropVector& u, const TropVector& v, const TropVector& w) {
  if (u.size() != v.size() || v.size() != w.size())
    throw dimension_mismatch("trop_angle: length mismatch");
  const TropScalar mu = detail::vec_max(u);
  const TropScalar mv = detail::vec_max(v);
  const TropScalar mw = detail::vec_max(w);
  if (!mu.is_finite() || !mv.is_finite() || !mw.is_finite())
    throw precondition_error("trop_angle: vector with all entries -inf");
  if (!(mu < mv && mv < mw)) return TropAngle::zero;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] == mv && w[k] == mw) return TropAngle::zero;
  return TropAngle::right;
}

/// Turning angle at V of the polygonal path U -> V -> W, in [0, pi].
inline double euclid_angle(const std::vector<double>& u, const std::vector<double>& v,
                           const std::vector<double>& w) {
  if (u.size() != v.size() || v.size() != w.size())
    throw dimension_mismatch("euclid_angle: length mismatch");
  double dot = 0.0, n1 = 0.0, n2 = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double a = v[k] - u[k];
    const double b = w[k] - v[k];
    dot += a * b;
    n1 += a * a;
    n2 += b * b;
  }
  if (n1 == 0.0 || n2 == 0.0) throw precondition_error("euclid_angle: zero-length segment");
  double c = dot / (std::sqrt(n1) * std::sqrt(n2));
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

}  // namespace tropipath
