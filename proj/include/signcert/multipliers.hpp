#pragma once

// Multiplier polynomials.
//
// For a conjugate pair alpha ± i*gamma with alpha > 0 (beta^2 = alpha^2 + gamma^2,
// cos(phi) = alpha/beta, n minimal with (n+1)*phi >= pi) the trigonometric
// multiplier
//     g(x) = sum_{k<n} beta^(n-1-k) * sin((k+1)*phi) * x^k
// has positive coefficients and collapses f(x) = x^2 - 2*alpha*x + beta^2 to
//     f*g = beta^(n+1) sin(phi) - beta sin((n+1)phi) x^n + sin(n phi) x^(n+1).
//
// With d_k = sin((k+1)phi)/sin(phi) (Chebyshev U_k at cos(phi)) and
// e_k = beta^k d_k, the e_k obey e_{k+1} = 2 alpha e_k - beta^2 e_{k-1} and
// are polynomials in alpha and beta^2. Scaling g by beta^(n-1)/sin(phi) gives
//     g_k = (beta^2)^(n-1-k) * e_k
// which is rational whenever alpha and beta^2 are, so exact-mode roots never
// need square roots or sines. Interval-mode roots use the d_k form directly.
//
// For alpha > 0 and q >= 1 the geometric multiplier
//     h(x) = sum_{i<q} alpha^(q-1-i) x^i,   (x - alpha) h = x^q - alpha^q.

#include <string>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/polynomial.hpp"
#include "signcert/roots.hpp"

namespace signcert {

template <Scalar S>
struct TrigAngle {
  S alpha{};
  S beta_sq{};
  Interval beta;
  Interval phi;
  unsigned n = 0;
  /// Set when pi <= (n+1)*phi could only be confirmed as equality within
  /// error bounds (interval mode).
  bool boundary_assumed = false;
};

template <Scalar S>
struct TrigMultiplier {
  TrigAngle<S> angle;
  Polynomial<S> g;
  /// Coefficients of f*g at degrees 0, n and n+1.
  S constant_term{};
  S middle_term{};
  S top_term{};
  /// Positive factor relating g to beta^(n-1-k) sin((k+1)phi).
  std::string scale;

  Polynomial<S> product_form() const {
    std::vector<S> v(angle.n + 2);
    v[0] = constant_term;
    v[angle.n] = middle_term;
    v[angle.n + 1] = top_term;
    return Polynomial<S>(std::move(v));
  }
};

template <Scalar S>
struct GeometricMultiplier {
  S alpha{};
  unsigned q = 1;
  Polynomial<S> h;
};

namespace detail {

template <Scalar S>
mpfr_prec_t working_precision(const Root<S>& root, mpfr_prec_t requested) {
  if constexpr (ScalarOps<S>::exact) {
    return requested;
  } else {
    return std::max({root.re.precision(), root.im_sq.precision(), mpfr_prec_t{64}});
  }
}

inline Interval times(long k, const Interval& v) { return Interval(k) * v; }

}  // namespace detail

/// phi = arccos(alpha/beta) and the unique n >= 2 with n*phi < pi <= (n+1)*phi.
template <Scalar S>
TrigAngle<S> trig_angle(const Root<S>& root, mpfr_prec_t precision = 256) {
  if (root.is_real()) throw DomainError("trig_angle: root is real");
  if (ScalarOps<S>::sign(root.re) <= 0) throw DomainError("trig_angle: root is not in lambda3 (re <= 0)");
  const auto prec = detail::working_precision(root, precision);

  TrigAngle<S> angle;
  angle.alpha = root.re;
  angle.beta_sq = root.beta_sq();
  angle.beta = sqrt(ScalarOps<S>::to_interval(angle.beta_sq, prec));
  const Interval cos_phi = ScalarOps<S>::to_interval(angle.alpha, prec) / angle.beta;
  angle.phi = acos(cos_phi);
  const Interval pi = Interval::pi(prec);

  if constexpr (ScalarOps<S>::exact) {
    // sign(sin((k+1)phi)) = sign(e_k); n is the first k with e_k <= 0.
    const Rational two_alpha = 2 * angle.alpha;
    Rational prev = 1, cur = two_alpha;
    unsigned k = 1;
    while (sgn(cur) > 0) {
      Rational next = two_alpha * cur - angle.beta_sq * prev;
      prev = std::move(cur);
      cur = std::move(next);
      if (++k > 1000000) throw NumericError("trig_angle: angle too small");
    }
    angle.n = k;
    // The enclosure of phi must not contradict the exact choice.
    if (certainly_less(detail::times(static_cast<long>(k) + 1, angle.phi), pi) ||
        certainly_less(pi, detail::times(static_cast<long>(k), angle.phi))) {
      throw ConsistencyError("trig_angle: phi enclosure contradicts the exact recurrence");
    }
  } else {
    const Interval ratio = pi / angle.phi;
    const long j_lo = ceil_to_long(ratio.lower());
    const long j_hi = ceil_to_long(ratio.upper());
    if (j_hi - j_lo > 1) throw PrecisionError("trig_angle: phi enclosure too wide to determine n");
    const long n = j_lo - 1;
    if (n < 2) throw PrecisionError("trig_angle: n < 2, phi not certainly below pi/2");
    if (!certainly_less(detail::times(n, angle.phi), pi)) {
      throw PrecisionError("trig_angle: cannot certify n*phi < pi at " + std::to_string(prec) + " bits");
    }
    const Interval upper = detail::times(n + 1, angle.phi);
    if (certainly_less(upper, pi)) throw ConsistencyError("trig_angle: (n+1)*phi < pi");
    angle.boundary_assumed = !(pi.upper() <= upper.lower());
    angle.n = static_cast<unsigned>(n);
  }
  return angle;
}

template <Scalar S>
TrigMultiplier<S> trig_multiplier(const Root<S>& root, mpfr_prec_t precision = 256) {
  TrigMultiplier<S> tm;
  tm.angle = trig_angle(root, precision);
  const unsigned n = tm.angle.n;
  const Polynomial<S> f = quadratic_factor(root);

  if constexpr (ScalarOps<S>::exact) {
    const Rational& alpha = tm.angle.alpha;
    const Rational& beta_sq = tm.angle.beta_sq;
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    e[1] = 2 * alpha;
    for (unsigned k = 1; k < n; ++k) e[k + 1] = 2 * alpha * e[k] - beta_sq * e[k - 1];
    std::vector<Rational> g(n);
    for (unsigned k = 0; k < n; ++k) {
      g[k] = power(beta_sq, n - 1 - k) * e[k];
      if (sgn(g[k]) <= 0) throw ConsistencyError("trig_multiplier: non-positive coefficient in exact mode");
    }
    tm.g = Polynomial<Rational>(std::move(g));
    tm.constant_term = power(beta_sq, n);
    tm.middle_term = -e[n];
    tm.top_term = e[n - 1];
    tm.scale = "beta^(n-1)/sin(phi)";
    if (!(f * tm.g == tm.product_form())) {
      throw ConsistencyError("trig_multiplier: f*g differs from the three-term product");
    }
  } else {
    const auto prec = detail::working_precision(root, precision);
    const Interval& beta = tm.angle.beta;
    const Interval cos_phi = tm.angle.alpha / beta;
    // Chebyshev recurrence run exactly at the midpoint c of cos(phi);
    // |U_k'| <= k(k+1)(k+2)/3 on [-1, 1] bounds the effect of the radius.
    if (!(cos_phi.upper() < Float(1L, prec))) throw PrecisionError("trig_multiplier: cos(phi) not certainly below 1");
    const Float mid = cos_phi.midpoint();
    const Rational c = mid.to_rational();
    Float rad(prec);
    {
      Float a(prec), b(prec);
      mpfr_sub(a.get(), mid.get(), cos_phi.lower().get(), MPFR_RNDU);
      mpfr_sub(b.get(), cos_phi.upper().get(), mid.get(), MPFR_RNDU);
      mpfr_max(rad.get(), a.get(), b.get(), MPFR_RNDU);
    }
    std::vector<Interval> d;
    d.reserve(n + 1);
    Rational prev = 1, cur = 2 * c;
    for (unsigned k = 0; k <= n; ++k) {
      const Rational& value = k == 0 ? prev : cur;
      Float slack(prec);
      const double kk = static_cast<double>(k);
      mpfr_mul_d(slack.get(), rad.get(), kk * (kk + 1) * (kk + 2) / 3.0 + 1.0, MPFR_RNDU);
      d.push_back(widen(Interval(value, prec), slack));
      if (k >= 1) {
        Rational next = 2 * c * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
    }
    std::vector<Interval> g(n);
    for (unsigned k = 0; k < n; ++k) {
      g[k] = pow(beta, n - 1 - k) * d[k];
      if (!g[k].certainly_positive()) {
        throw PrecisionError("trig_multiplier: coefficient " + std::to_string(k) + " not certifiably positive");
      }
    }
    tm.g = Polynomial<Interval>(std::move(g));
    tm.constant_term = pow(beta, n + 1);
    tm.top_term = d[n - 1];
    if (d[n].certainly_positive()) throw ConsistencyError("trig_multiplier: sin((n+1)phi) > 0");
    if (d[n].certainly_negative()) {
      tm.middle_term = -(beta * d[n]);
    } else if (tm.angle.boundary_assumed) {
      // (n+1)phi = pi within bounds: sin((n+1)phi) taken as exactly zero.
      tm.middle_term = Interval::zero(prec);
    } else {
      throw PrecisionError("trig_multiplier: sign of sin((n+1)phi) undecidable");
    }
    tm.scale = "1/sin(phi)";
    const Polynomial<Interval> prod = f * tm.g;
    const Polynomial<Interval> form = tm.product_form();
    for (unsigned k = 0; k <= n + 1; ++k) {
      const bool ok = (k == 0 || k == n || k == n + 1) ? overlaps(prod.coeff(k), form.coeff(k))
                                                       : prod.coeff(k).contains_zero();
      if (!ok) throw ConsistencyError("trig_multiplier: f*g coefficient " + std::to_string(k) +
                                      " inconsistent with the three-term product");
    }
  }
  return tm;
}

template <Scalar S>
GeometricMultiplier<S> geometric_multiplier(const S& alpha, unsigned q) {
  if (q < 1) throw DomainError("geometric_multiplier: q must be at least 1");
  if (ScalarOps<S>::sign(alpha) <= 0) throw DomainError("geometric_multiplier: alpha must be positive");
  GeometricMultiplier<S> gm;
  gm.alpha = alpha;
  gm.q = q;
  std::vector<S> h(q);
  S acc = ScalarOps<S>::one();
  for (unsigned i = q; i-- > 0;) {
    h[i] = acc;
    acc = S(acc * alpha);
  }
  for (const auto& c : h) {
    if (ScalarOps<S>::sign(c) <= 0) throw PrecisionError("geometric_multiplier: coefficient not positive");
  }
  gm.h = Polynomial<S>(std::move(h));

  const Polynomial<S> lhs = Polynomial<S>::linear_root(alpha) * gm.h;
  std::vector<S> rhs_coeffs(q + 1);
  rhs_coeffs[0] = S(-power(alpha, q));
  rhs_coeffs[q] = ScalarOps<S>::one();
  const Polynomial<S> rhs(std::move(rhs_coeffs));
  bool ok = false;
  if constexpr (ScalarOps<S>::exact) {
    ok = lhs == rhs;
  } else {
    ok = overlaps(lhs, rhs);
  }
  if (!ok) throw ConsistencyError("geometric_multiplier: (x - alpha) h != x^q - alpha^q");
  return gm;
}

/// x^q - alpha^q
template <Scalar S>
Polynomial<S> binomial_factor(const S& alpha, unsigned q) {
  std::vector<S> v(q + 1);
  v[0] = S(-power(alpha, q));
  v[q] = ScalarOps<S>::one();
  return Polynomial<S>(std::move(v));
}

}  // namespace signcert
