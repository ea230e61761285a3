#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropipath/errors.hpp"
#include "tropipath/lp_instance.hpp"
#include "tropipath/puiseux.hpp"
#include "tropipath/rational.hpp"
#include "tropipath/tropical.hpp"

namespace tropipath {

namespace cex_detail {

inline std::string level_name(const char* prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

inline void check_params(const CexParams& p) {
  if (p.r < 1) throw precondition_error("CexParams: r must be >= 1");
}

}  // namespace cex_detail

/// Number of structural variables (u_i, v_i pairs).
inline std::size_t cex_num_vars(const CexParams& p) {
  return 2 * static_cast<std::size_t>(p.r) + 2 + (p.extended ? 2 : 0);
}

/// Number of constraint rows (= number of slacks).
inline std::size_t cex_num_rows(const CexParams& p) {
  return 3 * static_cast<std::size_t>(p.r) + 2 + (p.extended ? 2 : 0);
}

/// The worst-case family in slack form: minimize v0 subject to
///   u_0 + z_0 = t,  v_0 + h_0 = t^2,
///   u_i + z_i = t u_{i-1},  u_i + z'_i = t v_{i-1},
///   v_i + h_i = t^(1 - 1/2^i) (u_{i-1} + v_{i-1})      for 1 <= i <= r,
/// all variables nonnegative. The extended variant appends
///   u_{r+1} + z_{r+1} = t^-(r+1) u_r,  v_{r+1} + h_{r+1} = t^-(r+1) v_r.
/// Variable order: u0, v0, ..., u_r, v_r (, u_{r+1}, v_{r+1});
/// slack order: z0, h0, z1, zp1, h1, ..., z_r, zp_r, h_r (, z_{r+1}, h_{r+1}).
inline LPInstance build_lp(const CexParams& p) {
  cex_detail::check_params(p);
  const int r = p.r;
  const std::size_t n = cex_num_vars(p), m = cex_num_rows(p);
  LPInstance lp(m, n);
  lp.name = std::string("cex_r") + std::to_string(r) + (p.extended ? "_ext" : "");
  lp.has_family = true;
  lp.family = p;

  const auto u = [](int i) { return static_cast<std::size_t>(2 * i); };
  const auto v = [](int i) { return static_cast<std::size_t>(2 * i + 1); };
  const int top = p.extended ? r + 1 : r;
  for (int i = 0; i <= top; ++i) {
    lp.var_names[u(i)] = cex_detail::level_name("u", i);
    lp.var_names[v(i)] = cex_detail::level_name("v", i);
  }

  const PuiseuxPoly one = PuiseuxPoly::constant(Rational(1));
  const PuiseuxPoly t = PuiseuxPoly::power_of_t(Rational(1));

  lp.a.at(0, u(0)) = one;
  lp.b[0] = t;
  lp.slack_names[0] = "z0";
  lp.a.at(1, v(0)) = one;
  lp.b[1] = PuiseuxPoly::power_of_t(Rational(2));
  lp.slack_names[1] = "h0";

  for (int i = 1; i <= r; ++i) {
    const std::size_t base = 2 + 3 * static_cast<std::size_t>(i - 1);
    const PuiseuxPoly ti = PuiseuxPoly::monomial(Rational(-1), Rational(1) - pow2(-i));
    lp.a.at(base, u(i)) = one;
    lp.a.at(base, u(i - 1)) = -t;
    lp.slack_names[base] = cex_detail::level_name("z", i);
    lp.a.at(base + 1, u(i)) = one;
    lp.a.at(base + 1, v(i - 1)) = -t;
    lp.slack_names[base + 1] = cex_detail::level_name("zp", i);
    lp.a.at(base + 2, v(i)) = one;
    lp.a.at(base + 2, u(i - 1)) = ti;
    lp.a.at(base + 2, v(i - 1)) = ti;
    lp.slack_names[base + 2] = cex_detail::level_name("h", i);
  }

  if (p.extended) {
    const PuiseuxPoly tneg = PuiseuxPoly::monomial(Rational(-1), Rational(-(r + 1)));
    lp.a.at(m - 2, u(r + 1)) = one;
    lp.a.at(m - 2, u(r)) = tneg;
    lp.slack_names[m - 2] = cex_detail::level_name("z", r + 1);
    lp.a.at(m - 1, v(r + 1)) = one;
    lp.a.at(m - 1, v(r)) = tneg;
    lp.slack_names[m - 1] = cex_detail::level_name("h", r + 1);
  }

  lp.c[v(0)] = one;
  return lp;
}

/// The same feasible region as facet inequalities over the structural
/// variables only (A x <= b), including the two nonnegativity facets of the
/// top level. Rows carry at most one positive coefficient each.
inline LPInstance build_lp_inequality(const CexParams& p) {
  cex_detail::check_params(p);
  const int r = p.r;
  const int top = p.extended ? r + 1 : r;
  const std::size_t n = cex_num_vars(p);
  const std::size_t m = cex_num_rows(p) + 2;
  LPInstance lp(m, n);
  lp.name = std::string("cex_r") + std::to_string(r) + (p.extended ? "_ext" : "") + "_ineq";

  const auto u = [](int i) { return static_cast<std::size_t>(2 * i); };
  const auto v = [](int i) { return static_cast<std::size_t>(2 * i + 1); };
  for (int i = 0; i <= top; ++i) {
    lp.var_names[u(i)] = cex_detail::level_name("u", i);
    lp.var_names[v(i)] = cex_detail::level_name("v", i);
  }

  const PuiseuxPoly one = PuiseuxPoly::constant(Rational(1));
  const PuiseuxPoly t = PuiseuxPoly::power_of_t(Rational(1));

  lp.a.at(0, u(0)) = one;
  lp.b[0] = t;
  lp.a.at(1, v(0)) = one;
  lp.b[1] = PuiseuxPoly::power_of_t(Rational(2));
  for (int i = 1; i <= r; ++i) {
    const std::size_t base = 2 + 3 * static_cast<std::size_t>(i - 1);
    const PuiseuxPoly ti = PuiseuxPoly::monomial(Rational(-1), Rational(1) - pow2(-i));
    lp.a.at(base, u(i)) = one;
    lp.a.at(base, u(i - 1)) = -t;
    lp.a.at(base + 1, u(i)) = one;
    lp.a.at(base + 1, v(i - 1)) = -t;
    lp.a.at(base + 2, v(i)) = one;
    lp.a.at(base + 2, u(i - 1)) = ti;
    lp.a.at(base + 2, v(i - 1)) = ti;
  }
  std::size_t next = 2 + 3 * static_cast<std::size_t>(r);
  if (p.extended) {
    const PuiseuxPoly tneg = PuiseuxPoly::monomial(Rational(-1), Rational(-(r + 1)));
    lp.a.at(next, u(r + 1)) = one;
    lp.a.at(next, u(r)) = tneg;
    lp.a.at(next + 1, v(r + 1)) = one;
    lp.a.at(next + 1, v(r)) = tneg;
    next += 2;
  }
  lp.a.at(next, u(top)) = -one;
  lp.a.at(next + 1, v(top)) = -one;
  for (std::size_t i = 0; i < m; ++i) lp.slack_names[i] = "w" + std::to_string(i + 1);
  lp.c[v(0)] = one;
  return lp;
}

/// Transition map of level i: (a, b) -> (1 + min(a,b), 1 - 1/2^i + max(a,b)).
inline std::pair<Rational, Rational> transition(int i, const Rational& a, const Rational& b) {
  if (i < 1) throw precondition_error("transition: level must be >= 1");
  const Rational lo = a < b ? a : b;
  const Rational hi = a < b ? b : a;
  return {Rational(1) + lo, Rational(1) - pow2(-i) + hi};
}

/// One point of the primal tropical central path, with per-level slack
/// coordinates. For 1 <= i <= r: z_i = 1 + u_{i-1}, z'_i = 1 + v_{i-1},
/// h_i = v_i; z_0 = 1, h_0 = 2.
struct TropPathPoint {
  Rational lambda;
  int r = 0;
  bool extended = false;
  std::vector<Rational> u, v;  // levels 0..r (0..r+1 extended)
  std::vector<Rational> z, h;  // levels 0..r (0..r+1 extended)
  std::vector<Rational> zp;    // levels 1..r at index i-1

  /// Coordinates in the canonical order (x | w) of build_lp.
  std::vector<Rational> full_primal() const {
    std::vector<Rational> out;
    const int top = extended ? r + 1 : r;
    for (int i = 0; i <= top; ++i) {
      out.push_back(u[static_cast<std::size_t>(i)]);
      out.push_back(v[static_cast<std::size_t>(i)]);
    }
    out.push_back(z[0]);
    out.push_back(h[0]);
    for (int i = 1; i <= r; ++i) {
      out.push_back(z[static_cast<std::size_t>(i)]);
      out.push_back(zp[static_cast<std::size_t>(i - 1)]);
      out.push_back(h[static_cast<std::size_t>(i)]);
    }
    if (extended) {
      out.push_back(z[static_cast<std::size_t>(r + 1)]);
      out.push_back(h[static_cast<std::size_t>(r + 1)]);
    }
    return out;
  }

  friend bool operator==(const TropPathPoint& a, const TropPathPoint& b) {
    return a.lambda == b.lambda && a.r == b.r && a.extended == b.extended && a.u == b.u &&
           a.v == b.v && a.z == b.z && a.h == b.h && a.zp == b.zp;
  }
};

namespace cex_detail {

inline void fill_slacks(TropPathPoint& pt) {
  const int r = pt.r;
  const std::size_t top = static_cast<std::size_t>(pt.extended ? r + 1 : r);
  pt.z.assign(top + 1, Rational(0));
  pt.h.assign(top + 1, Rational(0));
  pt.zp.assign(static_cast<std::size_t>(r), Rational(0));
  pt.z[0] = 1;
  pt.h[0] = 2;
  for (int i = 1; i <= r; ++i) {
    pt.z[static_cast<std::size_t>(i)] = Rational(1) + pt.u[static_cast<std::size_t>(i - 1)];
    pt.zp[static_cast<std::size_t>(i - 1)] = Rational(1) + pt.v[static_cast<std::size_t>(i - 1)];
    pt.h[static_cast<std::size_t>(i)] = pt.v[static_cast<std::size_t>(i)];
  }
  if (pt.extended) {
    pt.z[top] = pt.u[top];
    pt.h[top] = pt.v[top];
  }
}

inline void fill_extended_uv(TropPathPoint& pt) {
  if (!pt.extended) return;
  const Rational shift(-(pt.r + 1));
  pt.u.push_back(shift + pt.u.back());
  pt.v.push_back(shift + pt.v.back());
}

}  // namespace cex_detail

/// Primal tropical central path point by the piecewise-linear recursion:
/// u_0 = 1, v_0 = min(2, lambda), (u_i, v_i) = G_i(u_{i-1}, v_{i-1}).
inline TropPathPoint trop_path_dynamic(const CexParams& p, const Rational& lambda) {
  cex_detail::check_params(p);
  TropPathPoint pt;
  pt.lambda = lambda;
  pt.r = p.r;
  pt.extended = p.extended;
  pt.u.reserve(static_cast<std::size_t>(p.r) + 2);
  pt.v.reserve(static_cast<std::size_t>(p.r) + 2);
  pt.u.push_back(Rational(1));
  pt.v.push_back(lambda < 2 ? lambda : Rational(2));
  for (int i = 1; i <= p.r; ++i) {
    auto [ui, vi] = transition(i, pt.u.back(), pt.v.back());
    pt.u.push_back(std::move(ui));
    pt.v.push_back(std::move(vi));
  }
  cex_detail::fill_extended_uv(pt);
  cex_detail::fill_slacks(pt);
  return pt;
}

/// The same point in closed form. On [0, 2] the (u_i, v_i) curve is a
/// staircase over the dyadic subdivision of step 4/2^i; outside [0, 2] it is
/// affine in lambda (constant above 2).
inline TropPathPoint trop_path_closed(const CexParams& p, const Rational& lambda) {
  cex_detail::check_params(p);
  TropPathPoint pt;
  pt.lambda = lambda;
  pt.r = p.r;
  pt.extended = p.extended;
  pt.u.push_back(Rational(1));
  pt.v.push_back(lambda < 2 ? lambda : Rational(2));
  for (int i = 1; i <= p.r; ++i) {
    Rational ui, vi;
    if (lambda <= 0) {
      ui = Rational(i) + lambda;
      vi = Rational(i) + pow2(-i);
    } else if (lambda >= 2) {
      ui = Rational(i + 1);
      vi = Rational(i + 1) + pow2(-i);
    } else {
      mpz_class kz = rational_floor(lambda * pow2(i) / 4);
      mpz_class kmax = (mpz_class(1) << static_cast<unsigned>(i - 1)) - 1;
      if (kz > kmax) kz = kmax;
      const Rational k(kz);
      const Rational step = pow2(-i);
      if (lambda <= (4 * k + 2) * step) {
        ui = Rational(i) + lambda - 2 * k * step;
        vi = Rational(i) + (2 * k + 1) * step;
      } else {
        ui = Rational(i) + (2 * k + 2) * step;
        vi = Rational(i) + lambda - (2 * k + 1) * step;
      }
    }
    pt.u.push_back(std::move(ui));
    pt.v.push_back(std::move(vi));
  }
  cex_detail::fill_extended_uv(pt);
  cex_detail::fill_slacks(pt);
  return pt;
}

/// Dual coordinates (y | s): every dual coordinate is lambda minus its
/// paired primal coordinate. Order matches (slacks | structural variables).
inline std::vector<Rational> dual_from_primal(const TropPathPoint& pt, const Rational& lambda) {
  const std::vector<Rational> primal = pt.full_primal();
  const std::size_t n = 2 * static_cast<std::size_t>(pt.extended ? pt.r + 2 : pt.r + 1);
  std::vector<Rational> dual;
  dual.reserve(primal.size());
  for (std::size_t i = n; i < primal.size(); ++i) dual.push_back(lambda - primal[i]);  // y
  for (std::size_t j = 0; j < n; ++j) dual.push_back(lambda - primal[j]);              // s
  return dual;
}

/// Full tropical central path point (x | w | y | s).
inline std::vector<Rational> full_primal_dual(const TropPathPoint& pt) {
  std::vector<Rational> out = pt.full_primal();
  const std::vector<Rational> dual = dual_from_primal(pt, pt.lambda);
  out.insert(out.end(), dual.begin(), dual.end());
  return out;
}

/// A finite upper box for every sublevel set of the tropicalized family,
/// read off the constraint rows and propagated level by level.
/// Order matches full_primal().
inline std::vector<Rational> cex_upper_box(const CexParams& p) {
  cex_detail::check_params(p);
  std::vector<Rational> bu{Rational(1)}, bv{Rational(2)};
  std::vector<Rational> bz{Rational(1)}, bh{Rational(2)}, bzp;
  for (int i = 1; i <= p.r; ++i) {
    const Rational& pu = bu.back();
    const Rational& pv = bv.back();
    bz.push_back(Rational(1) + pu);
    bzp.push_back(Rational(1) + pv);
    const Rational top_v = Rational(1) - pow2(-i) + (pu < pv ? pv : pu);
    bu.push_back(Rational(1) + (pu < pv ? pu : pv));
    bv.push_back(top_v);
    bh.push_back(top_v);
  }
  if (p.extended) {
    const Rational shift(-(p.r + 1));
    bu.push_back(shift + bu.back());
    bv.push_back(shift + bv.back());
    bz.push_back(bu.back());
    bh.push_back(bv.back());
  }
  std::vector<Rational> out;
  const int top = p.extended ? p.r + 1 : p.r;
  for (int i = 0; i <= top; ++i) {
    out.push_back(bu[static_cast<std::size_t>(i)]);
    out.push_back(bv[static_cast<std::size_t>(i)]);
  }
  out.push_back(bz[0]);
  out.push_back(bh[0]);
  for (int i = 1; i <= p.r; ++i) {
    out.push_back(bz[static_cast<std::size_t>(i)]);
    out.push_back(bzp[static_cast<std::size_t>(i - 1)]);
    out.push_back(bh[static_cast<std::size_t>(i)]);
  }
  if (p.extended) {
    out.push_back(bz.back());
    out.push_back(bh.back());
  }
  return out;
}

/// Strictly feasible real point for the instantiated family at t > 1, in the
/// order (x | w): u_0 = z_0 = t/2, v_0 = h_0 = t^2/2, then inductively
/// u_i = z_i = t u_{i-1}/2, z'_i = t v_{i-1} - u_i,
/// v_i = h_i = t^(1-1/2^i)(u_{i-1} + v_{i-1})/2.
inline std::vector<double> strictly_feasible_point(const CexParams& p, double t) {
  cex_detail::check_params(p);
  if (!(t > 1)) throw precondition_error("strictly_feasible_point: t must exceed 1");
  const int r = p.r;
  std::vector<double> u{t / 2}, v{t * t / 2};
  std::vector<double> z{t / 2}, h{t * t / 2}, zp;
  for (int i = 1; i <= r; ++i) {
    const double ui = t * u.back() / 2;
    zp.push_back(t * v.back() - ui);
    const double vi = std::pow(t, 1.0 - std::ldexp(1.0, -i)) * (u.back() + v.back()) / 2;
    u.push_back(ui);
    z.push_back(ui);
    v.push_back(vi);
    h.push_back(vi);
  }
  if (p.extended) {
    const double scale = std::pow(t, -(r + 1.0)) / 2;
    u.push_back(scale * u.back());
    z.push_back(u.back());
    v.push_back(scale * v.back());
    h.push_back(v.back());
  }
  std::vector<double> out;
  const int top = p.extended ? r + 1 : r;
  for (int i = 0; i <= top; ++i) {
    out.push_back(u[static_cast<std::size_t>(i)]);
    out.push_back(v[static_cast<std::size_t>(i)]);
  }
  out.push_back(z[0]);
  out.push_back(h[0]);
  for (int i = 1; i <= r; ++i) {
    out.push_back(z[static_cast<std::size_t>(i)]);
    out.push_back(zp[static_cast<std::size_t>(i - 1)]);
    out.push_back(h[static_cast<std::size_t>(i)]);
  }
  if (p.extended) {
    out.push_back(z.back());
    out.push_back(h.back());
  }
  for (double c : out)
    if (!(c > 0)) throw infeasible_error("strictly_feasible_point: nonpositive coordinate");

  // The construction satisfies every constraint row exactly; guard against
  // rounding surprises all the same.
  const LPInstance lp = build_lp(p);
  const std::size_t n = lp.cols();
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    double lhs = out[n + i];  // slack of row i
    double scale = std::abs(lhs);
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.a.at(i, j).is_zero()) continue;
      const double term = eval(lp.a.at(i, j), t) * out[j];
      lhs += term;
      scale = std::max(scale, std::abs(term));
    }
    const double rhs = eval(lp.b[i], t);
    scale = std::max({scale, std::abs(rhs), 1.0});
    if (std::abs(lhs - rhs) > 1e-12 * scale)
      throw infeasible_error("strictly_feasible_point: residual check failure");
  }
  return out;
}

}  // namespace tropipath
