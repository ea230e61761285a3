#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/rational.hpp"
#include "tropipath/tropical.hpp"

namespace tropipath {

struct PuiseuxTerm {
  Rational exponent;
  Rational coefficient;
  friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

/// Finite sum of c * t^a with rational c, a, kept canonical: terms sorted by
/// strictly decreasing exponent, no zero coefficients. The empty sum is zero.
/// Stands in for a germ of a definable function of t at t -> +inf.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;

  static PuiseuxPoly constant(Rational c) { return monomial(std::move(c), Rational(0)); }

  static PuiseuxPoly monomial(Rational coeff, Rational exp) {
    PuiseuxPoly p;
    if (coeff != 0) p.terms_.push_back({std::move(exp), std::move(coeff)});
    return p;
  }

  /// t^exp
  static PuiseuxPoly power_of_t(Rational exp) { return monomial(Rational(1), std::move(exp)); }

  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly out;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && a.terms_[i].exponent > b.terms_[j].exponent)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exponent > a.terms_[i].exponent) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        Rational c = a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (c != 0) out.terms_.push_back({a.terms_[i].exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend PuiseuxPoly operator-(const PuiseuxPoly& a) {
    PuiseuxPoly out = a;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
  }

  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly out;
    for (const auto& ta : a.terms_) {
      PuiseuxPoly partial;
      partial.terms_.reserve(b.terms_.size());
      for (const auto& tb : b.terms_)
        partial.terms_.push_back({ta.exponent + tb.exponent, ta.coefficient * tb.coefficient});
      out = out + partial;
    }
    return out;
  }

 private:
  std::vector<PuiseuxTerm> terms_;
};

/// Valuation: the leading exponent; -inf for the zero element.
inline TropScalar val(const PuiseuxPoly& f) {
  if (f.is_zero()) return TropScalar::neg_inf();
  return TropScalar(f.terms().front().exponent);
}

/// Sign of f(t) for all large t: the sign of the leading coefficient.
inline int sign_ultimate(const PuiseuxPoly& f) {
  if (f.is_zero()) return 0;
  return sgn(f.terms().front().coefficient);
}

enum class EvalMode {
  fast,      // long double accumulation, infinities pass through
  checked,   // long double accumulation, throws on overflow
  extended,  // 256-bit software floats, throws only if the result exceeds double range
};

namespace detail {

inline double eval_extended(const PuiseuxPoly& f, double t) {
  constexpr mpfr_prec_t prec = 256;
  mpfr_t acc, term, base, exp_v;
  mpfr_inits2(prec, acc, term, base, exp_v, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(acc, 1);
  mpfr_set_d(base, t, MPFR_RNDN);
  for (const auto& tm : f.terms()) {
    mpfr_set_d(exp_v, to_double(tm.exponent), MPFR_RNDN);
    mpfr_pow(term, base, exp_v, MPFR_RNDN);
    mpfr_mul_d(term, term, to_double(tm.coefficient), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, term, base, exp_v, static_cast<mpfr_ptr>(nullptr));
  if (!std::isfinite(out))
    throw eval_overflow("eval: value exceeds double range even in extended mode");
  return out;
}

}  // namespace detail

/// Evaluates f at a real t > 0.
inline double eval(const PuiseuxPoly& f, double t, EvalMode mode = EvalMode::checked) {
  if (!(t > 0)) throw precondition_error("eval: t must be positive");
  if (mode == EvalMode::extended) return detail::eval_extended(f, t);
  long double acc = 0.0L;
  for (const auto& tm : f.terms()) {
    const long double p = powl(static_cast<long double>(t),
                               static_cast<long double>(to_double(tm.exponent)));
    acc += static_cast<long double>(to_double(tm.coefficient)) * p;
  }
  const double out = static_cast<double>(acc);
  if (mode == EvalMode::checked && !std::isfinite(out))
    throw eval_overflow("eval: overflow in checked mode");
  return out;
}

/// Checks val(f+g) = max(val f, val g) and val(fg) = val f + val g.
/// Only meaningful for ultimately nonnegative operands, hence the guard.
inline bool val_homomorphism_check(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  if (sign_ultimate(f) < 0 || sign_ultimate(g) < 0)
    throw precondition_error("val_homomorphism_check: operands must be ultimately nonnegative");
  const bool sum_ok = val(f + g) == tadd(val(f), val(g));
  const bool prod_ok = val(f * g) == tmul(val(f), val(g));
  return sum_ok && prod_ok;
}

inline std::string to_string(const PuiseuxPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& tm : f.terms()) {
    const bool neg = tm.coefficient < 0;
    Rational c = neg ? Rational(-tm.coefficient) : tm.coefficient;
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (c != 1 || tm.exponent == 0) out += to_string(c);
    if (tm.exponent != 0) {
      if (c != 1) out += "*";
      out += "t";
      if (tm.exponent != 1) out += "^" + to_string(tm.exponent);
    }
    first = false;
  }
  return out;
}

using PuiseuxVector = std::vector<PuiseuxPoly>;

class PuiseuxMatrix {
 public:
  PuiseuxMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  PuiseuxPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const PuiseuxPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<PuiseuxPoly> entries_;
};

/// Entrywise positive part: keeps entries that are ultimately positive.
inline PuiseuxMatrix pos_part(const PuiseuxMatrix& m) {
  PuiseuxMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sign_ultimate(m.at(i, j)) > 0) out.at(i, j) = m.at(i, j);
  return out;
}

/// Entrywise negative part: keeps entries that are ultimately negative.
inline PuiseuxMatrix neg_part(const PuiseuxMatrix& m) {
  PuiseuxMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sign_ultimate(m.at(i, j)) < 0) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace tropipath
