#pragma once

// Numerical root finding for coefficient input.
//
// Exact input is first split into squarefree parts (Yun), so multiplicities
// come from algebra rather than from numerics. Each part is solved by the
// Aberth-Ehrlich simultaneous iteration; approximations closer than the
// cluster radius are then merged, conjugate pairs are reported once and
// near-real roots are snapped to the real axis.
//
// For exact input every root is also tried as a rational number (real roots)
// or a rational quadratic factor (pairs): the simplest rational in a small
// window around the approximation is accepted only if the product of all
// accepted factors reproduces the polynomial exactly.

#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/euclid.hpp"
#include "signcert/mpfloat.hpp"
#include "signcert/roots.hpp"

namespace signcert {

struct ApproxRoot {
  Float re;
  Float im;      // >= 0; zero for real roots
  Float radius;  // inclusion radius estimate
  unsigned mult = 1;
};

struct FoundRoots {
  std::vector<ApproxRoot> approx;
  RootSpec<Interval> enclosures;
  /// Set when every root was recovered exactly and verified by expansion.
  std::optional<RootSpec<Rational>> exact;
};

struct FindRootsOptions {
  mpfr_prec_t precision = 256;
  /// Defaults to 2^-(precision/4).
  std::optional<Float> cluster_radius;
  unsigned max_iterations = 0;  // 0: 200 + 20 * degree
};

namespace detail {

struct Cx {
  Float re, im;
};

inline Cx cx_add(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx cx_sub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx cx_mul(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cx cx_div(const Cx& a, const Cx& b) {
  const Float den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Float cx_abs(const Cx& a) { return hypot(a.re, a.im); }

// p(z) and p'(z) by Horner.
inline std::pair<Cx, Cx> horner2(const std::vector<Float>& c, const Cx& z, mpfr_prec_t prec) {
  Cx p{c.back(), Float(prec)};
  Cx dp{Float(prec), Float(prec)};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = cx_add(cx_mul(dp, z), p);
    p = cx_add(cx_mul(p, z), Cx{c[k], Float(prec)});
  }
  return {p, dp};
}

/// Aberth-Ehrlich iteration (Gauss-Seidel order, deterministic start on a
/// circle). Returns approximations and Weierstrass inclusion radii.
/// `loose` accepts a stalled iteration whose last correction is below it
/// (multiple roots converge only to about eps^(1/m)).
inline std::vector<ApproxRoot> aberth(const std::vector<Float>& c, mpfr_prec_t prec, unsigned max_iter,
                                      const std::optional<Float>& loose = std::nullopt) {
  const std::size_t d = c.size() - 1;
  std::vector<ApproxRoot> out;
  if (d == 0) return out;
  if (d == 1) {
    Float r = -(c[0] / c[1]);
    out.push_back({r, Float(prec), Float(prec), 1});
    return out;
  }
  // Start radius: geometric mean of root moduli.
  Float ratio = abs(c[0] / c[d]);
  Float r0(prec);
  mpfr_rootn_ui(r0.get(), ratio.get(), static_cast<unsigned long>(d), MPFR_RNDN);
  std::vector<Cx> z(d);
  Float two_pi(prec);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  two_pi = two_pi * Float(2L, prec);
  for (std::size_t k = 0; k < d; ++k) {
    Float theta = two_pi * Float(static_cast<double>(k) / static_cast<double>(d) + 0.4 / static_cast<double>(d), prec);
    Float cs(prec), sn(prec);
    mpfr_sin_cos(sn.get(), cs.get(), theta.get(), MPFR_RNDN);
    z[k] = {r0 * cs, r0 * sn};
  }
  const Float tol = pow2(-static_cast<long>(prec) + 24, prec);
  const Float one(1L, prec);
  bool converged = false;
  Float worst(prec);
  for (unsigned it = 0; it < max_iter && !converged; ++it) {
    worst = Float(prec);
    for (std::size_t i = 0; i < d; ++i) {
      auto [p, dp] = horner2(c, z[i], prec);
      if (p.re.is_zero() && p.im.is_zero()) continue;
      const Cx n = cx_div(p, dp);
      Cx s{Float(prec), Float(prec)};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) s = cx_add(s, cx_div(Cx{one, Float(prec)}, cx_sub(z[i], z[j])));
      }
      const Cx w = cx_div(n, cx_sub(Cx{one, Float(prec)}, cx_mul(n, s)));
      z[i] = cx_sub(z[i], w);
      Float scale = cx_abs(z[i]);
      if (scale < one) scale = one;
      const Float rel = cx_abs(w) / scale;
      if (!rel.is_finite()) throw NumericError("find_roots: iteration diverged");
      if (worst < rel) worst = rel;
    }
    converged = worst < tol;
  }
  if (!converged && loose && worst < *loose) converged = true;
  if (!converged) {
    throw NumericError("find_roots: no convergence within " + std::to_string(max_iter) + " iterations");
  }
  for (std::size_t i = 0; i < d; ++i) {
    auto [p, dp] = horner2(c, z[i], prec);
    Cx prod{c[d], Float(prec)};
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) prod = cx_mul(prod, cx_sub(z[i], z[j]));
    }
    Float rad = cx_abs(cx_div(p, prod)) * Float(static_cast<long>(d), prec);
    out.push_back({z[i].re, z[i].im, rad, 1});
  }
  return out;
}

/// Simplest rational (smallest denominator, then numerator) in [lo, hi].
inline Rational simplest_rational(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational(-hi, -lo);
  // Continued-fraction descent for 0 < lo <= hi.
  std::vector<mpz_class> terms;
  while (true) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) {
      terms.push_back(fl);
      break;
    }
    if (Rational(fl + 1) <= hi) {
      terms.push_back(fl + 1);
      break;
    }
    terms.push_back(fl);
    Rational nlo = 1 / (hi - fl);
    Rational nhi = 1 / (lo - fl);
    lo = std::move(nlo);
    hi = std::move(nhi);
  }
  Rational v(terms.back());
  for (std::size_t k = terms.size() - 1; k-- > 0;) v = Rational(terms[k]) + 1 / v;
  v.canonicalize();
  return v;
}

inline Rational near_rational(const Float& x, const Float& window) {
  const Rational c = x.to_rational();
  const Rational w = window.to_rational();
  return simplest_rational(c - w, c + w);
}

inline Float window_for(const Float& radius, const Float& x, mpfr_prec_t precision) {
  Float w = pow2(-static_cast<long>(precision / 2), precision + 32);
  Float mag = abs(x);
  if (Float(1L, precision) < mag) w = w * mag;
  const Float r4 = radius * Float(4L, precision + 32);
  return w < r4 ? r4 : w;
}

// Merges close approximations, snaps near-real ones and reports each
// conjugate pair once (upper half plane).
inline std::vector<ApproxRoot> assemble(std::vector<ApproxRoot> raw, const Float& cluster, mpfr_prec_t prec) {
  // Cluster by distance (union-find over pairs closer than the radius).
  const std::size_t m = raw.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Float dist = hypot(raw[i].re - raw[j].re, raw[i].im - raw[j].im);
      if (dist < cluster) parent[find(i)] = find(j);
    }
  }
  std::vector<ApproxRoot> merged;
  std::vector<std::size_t> index(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    if (index[r] == m) {
      index[r] = merged.size();
      merged.push_back({Float(prec), Float(prec), Float(prec), 0});
    }
    auto& t = merged[index[r]];
    const Float w(static_cast<long>(raw[i].mult), prec);
    t.re = t.re + raw[i].re * w;
    t.im = t.im + raw[i].im * w;
    Float spread = raw[i].radius;
    if (t.radius < spread) t.radius = spread;
    t.mult += raw[i].mult;
  }
  for (auto& t : merged) {
    const Float w(static_cast<long>(t.mult), prec);
    t.re = t.re / w;
    t.im = t.im / w;
  }
  // Snap near-real clusters, then pair conjugates.
  std::vector<ApproxRoot> reals, upper, lower;
  for (auto& t : merged) {
    if (abs(t.im) < cluster) {
      t.im = Float(prec);
      reals.push_back(std::move(t));
    } else if (t.im.sign() > 0) {
      upper.push_back(std::move(t));
    } else {
      lower.push_back(std::move(t));
    }
  }
  if (upper.size() != lower.size()) throw ClassificationError("find_roots: conjugate pairing failed");
  std::vector<bool> used(lower.size(), false);
  for (auto& u : upper) {
    std::size_t best = lower.size();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j] || lower[j].mult != u.mult) continue;
      const Float dist = hypot(u.re - lower[j].re, u.im + lower[j].im);
      if (dist < cluster) {
        best = j;
        break;
      }
    }
    if (best == lower.size()) throw ClassificationError("find_roots: conjugate pairing failed");
    used[best] = true;
    u.re = (u.re + lower[best].re) / Float(2L, prec);
    u.im = (u.im - lower[best].im) / Float(2L, prec);
    if (u.radius < lower[best].radius) u.radius = lower[best].radius;
  }
  std::vector<ApproxRoot> out = std::move(reals);
  for (auto& u : upper) out.push_back(std::move(u));
  return out;
}

inline Root<Interval> enclose(const ApproxRoot& r, mpfr_prec_t prec) {
  const Interval re = widen(Interval::point(r.re), r.radius);
  if (r.im.is_zero()) return Root<Interval>{re, Interval::zero(prec), r.mult};
  const Interval im = widen(Interval::point(r.im), r.radius);
  if (!im.certainly_positive()) throw ClassificationError("find_roots: imaginary part within its error bound of zero");
  return Root<Interval>{re, sqr(im), r.mult};
}

inline void check_classification(const ApproxRoot& r) {
  if (!(r.radius < abs(r.re))) {
    throw ClassificationError("find_roots: root with real part " + r.re.to_string(12) +
                              " lies within its error bound of the imaginary axis");
  }
}

inline unsigned iteration_budget(const FindRootsOptions& opts, long degree) {
  return opts.max_iterations ? opts.max_iterations : 200 + 20 * static_cast<unsigned>(degree);
}

}  // namespace detail

inline Float default_cluster_radius(mpfr_prec_t precision) {
  return pow2(-static_cast<long>(precision / 4), precision);
}

/// Roots of an exact polynomial with nonzero constant term.
inline FoundRoots find_roots(const Polynomial<Rational>& p, const FindRootsOptions& opts = {}) {
  if (p.is_zero() || p.degree() < 1) throw DomainError("find_roots: degree must be at least 1");
  if (sgn(p[0]) == 0) throw DomainError("find_roots: strip zero roots first");
  const mpfr_prec_t wp = opts.precision + 32;
  const Float cluster = opts.cluster_radius ? *opts.cluster_radius : default_cluster_radius(opts.precision);
  const unsigned budget = detail::iteration_budget(opts, p.degree());

  std::vector<ApproxRoot> raw;
  // Candidate exact factors per approximation, aligned with `raw`.
  std::vector<std::optional<Polynomial<Rational>>> factors;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& A = parts[i];
    if (A.degree() < 1) continue;
    std::vector<Float> c;
    for (const auto& a : A.coeffs()) c.emplace_back(a, wp);
    auto roots = detail::aberth(c, wp, budget);
    for (auto& r : roots) {
      r.mult = static_cast<unsigned>(i + 1);
      if (abs(r.im) < cluster) {
        const Rational v = detail::near_rational(r.re, detail::window_for(r.radius, r.re, opts.precision));
        const auto lin = Polynomial<Rational>::linear_root(v);
        factors.emplace_back(sgn(A.evaluate(v)) == 0 ? std::optional(lin) : std::nullopt);
      } else if (r.im.sign() < 0) {
        factors.emplace_back(std::nullopt);  // the conjugate carries the factor
      } else {
        const Float s = r.re * Float(2L, wp);
        const Float t = r.re * r.re + r.im * r.im;
        const Rational sr = detail::near_rational(s, detail::window_for(r.radius * Float(2L, wp), s, opts.precision));
        const Rational tr = detail::near_rational(
            t, detail::window_for(r.radius * (abs(s) + Float(1L, wp)) * Float(2L, wp), t, opts.precision));
        Polynomial<Rational> quad({tr, Rational(-sr), Rational(1)});
        factors.emplace_back(divides(quad, A) ? std::optional(quad) : std::nullopt);
      }
      raw.push_back(std::move(r));
    }
  }

  FoundRoots out;
  // Exact path: every accepted factor, raised to its multiplicity, must rebuild p.
  bool all_exact = true;
  Polynomial<Rational> rebuilt = Polynomial<Rational>::one();
  RootSpec<Rational> exact;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].im.sign() < 0 && !(abs(raw[i].im) < cluster)) continue;
    if (!factors[i]) {
      all_exact = false;
      break;
    }
    rebuilt = rebuilt * pow(*factors[i], raw[i].mult);
    const auto& f = *factors[i];
    if (f.degree() == 1) {
      exact.roots.push_back(Root<Rational>::real(Rational(-f[0]), raw[i].mult));
    } else {
      const Rational re = -f[1] / 2;
      exact.roots.push_back(Root<Rational>::complex_squared(re, Rational(f[0] - re * re), raw[i].mult));
    }
  }
  if (all_exact && rebuilt == make_monic(p)) {
    bool valid = true;
    for (const auto& r : exact.roots) valid = valid && (r.is_real() || sgn(r.im_sq) > 0);
    if (valid) out.exact = exact;
  }

  out.approx = detail::assemble(std::move(raw), cluster, wp);
  if (out.exact) {
    out.enclosures = to_interval(*out.exact, opts.precision);
  } else {
    for (const auto& r : out.approx) {
      detail::check_classification(r);
      out.enclosures.roots.push_back(detail::enclose(r, opts.precision));
    }
  }
  return out;
}

/// Roots of a polynomial with interval coefficients; multiplicities come
/// from clustering alone.
inline FoundRoots find_roots(const Polynomial<Interval>& p, const FindRootsOptions& opts = {}) {
  if (p.is_zero() || p.degree() < 1) throw DomainError("find_roots: degree must be at least 1");
  if (p[0].is_exact_zero()) throw DomainError("find_roots: strip zero roots first");
  if (p[0].contains_zero()) throw ClassificationError("find_roots: constant coefficient may be zero");
  const mpfr_prec_t wp = opts.precision + 32;
  const Float cluster = opts.cluster_radius ? *opts.cluster_radius : default_cluster_radius(opts.precision);
  std::vector<Float> c;
  for (const auto& a : p.coeffs()) {
    Float m(wp);
    mpfr_set(m.get(), a.midpoint().get(), MPFR_RNDN);
    c.push_back(std::move(m));
  }
  auto raw = detail::aberth(c, wp, detail::iteration_budget(opts, p.degree()), cluster * pow2(-8, wp));
  FoundRoots out;
  out.approx = detail::assemble(std::move(raw), cluster, wp);
  for (const auto& r : out.approx) {
    detail::check_classification(r);
    out.enclosures.roots.push_back(detail::enclose(r, opts.precision));
  }
  return out;
}

}  // namespace signcert
