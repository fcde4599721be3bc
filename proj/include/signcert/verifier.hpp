#pragma once

// Independent checks: the Descartes audit, positivity of coefficients, the
// three product lemmas, and full certificate verification.
//
// verify_certificate recomputes every product from F and the multipliers.
// It never throws on a well-formed certificate: failures, including
// undecidable signs, come back as failed sub-checks with witnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signcert/certificate.hpp"
#include "signcert/error.hpp"
#include "signcert/euclid.hpp"
#include "signcert/polynomial.hpp"
#include "signcert/roots.hpp"

namespace signcert {

struct DescartesAudit {
  unsigned V = 0;
  unsigned Z = 0;
  unsigned nu = 0;
  unsigned zero_root_multiplicity = 0;
};

struct Witness {
  long degree = -1;  // -1 when the witness is not tied to a coefficient
  std::string value;
  std::string note;
};

struct CheckReport {
  std::string check;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::string mode;
  std::string tolerance;
  /// Error kind when a sub-check could not be decided, e.g. "precision_insufficient".
  std::string error_kind;
  std::vector<CheckReport> subchecks;

  void fail(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }
};

template <Scalar S>
std::string mode_name(mpfr_prec_t precision) {
  if constexpr (ScalarOps<S>::exact) {
    return "exact";
  } else {
    return "float(" + std::to_string(precision) + ")";
  }
}

template <Scalar S>
DescartesAudit descartes_audit(const RootSpec<S>& spec) {
  spec.validate();
  RootSpec<S> rest = spec;
  DescartesAudit audit;
  audit.zero_root_multiplicity = remove_zero_roots(rest);
  const Polynomial<S> F = expand_rootspec(rest);
  audit.V = sign_variations(F);
  for (const auto& r : rest.roots) {
    if (r.is_real() && ScalarOps<S>::sign(r.re) > 0) audit.Z += r.mult;
  }
  if (audit.V < audit.Z || (audit.V - audit.Z) % 2 != 0) {
    throw ConsistencyError("descartes_audit: V - Z = " + std::to_string(static_cast<long>(audit.V) - audit.Z) +
                           " is not a nonnegative even number");
  }
  audit.nu = audit.V - audit.Z;
  return audit;
}

/// strict = false: every nonzero coefficient positive. strict = true: also no zeros.
template <Scalar S>
CheckReport check_positive_coefficients(const Polynomial<S>& p, bool strict) {
  if (p.is_zero()) throw DomainError("check_positive_coefficients: zero polynomial");
  CheckReport r;
  r.check = strict ? "positive_coefficients_strict" : "positive_coefficients";
  r.mode = mode_name<S>(ScalarOps<S>::precision(p[0]));
  r.tolerance = ScalarOps<S>::exact ? "0" : "certified enclosure signs";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int s = ScalarOps<S>::sign(p[i]);  // throws PrecisionError if undecidable
    if (s < 0) r.fail({static_cast<long>(i), ScalarOps<S>::str(p[i]), "negative coefficient"});
    if (s == 0 && strict) r.fail({static_cast<long>(i), "0", "zero coefficient"});
  }
  return r;
}

/// An angle given either as an enclosure or exactly as a rational multiple of pi.
struct Angle {
  std::optional<Rational> pi_fraction;
  Interval value;

  static Angle from_pi_fraction(const Rational& r, mpfr_prec_t precision) {
    return Angle{r, Interval::pi(precision) * Interval(r, precision)};
  }
  static Angle from_interval(Interval v) { return Angle{std::nullopt, std::move(v)}; }
};

namespace detail {

// sin(k * angle); exact when k * angle is a multiple of pi/2.
inline Interval sin_multiple(const Angle& a, long k, mpfr_prec_t precision) {
  if (a.pi_fraction) {
    const Rational t = Rational(2 * k) * *a.pi_fraction;  // k * angle / (pi/2)
    if (t.get_den() == 1) {
      const long m = mpz_fdiv_ui(t.get_num_mpz_t(), 4);
      static constexpr long table[4] = {0, 1, 0, -1};
      return table[m] == 0 ? Interval::zero(precision) : Interval::point(Float(table[m], precision));
    }
  }
  return sin(Interval(k) * a.value);
}

inline Interval cos_of(const Angle& a, mpfr_prec_t precision) {
  if (a.pi_fraction) {
    const Rational t = 2 * *a.pi_fraction;
    if (t.get_den() == 1) {
      const long m = mpz_fdiv_ui(t.get_num_mpz_t(), 4);
      static constexpr long table[4] = {1, 0, -1, 0};
      return table[m] == 0 ? Interval::zero(precision) : Interval::point(Float(table[m], precision));
    }
  }
  return cos(a.value);
}

}  // namespace detail

/// Builds f = x^2 - 2 beta cos(phi) x + beta^2 and g_k = beta^(n-1-k) sin((k+1)phi)
/// straight from the sine definitions, multiplies, and compares with
/// beta^(n+1) sin(phi) - beta sin((n+1)phi) x^n + sin(n phi) x^(n+1).
/// The identity holds for every n >= 1; n defaults to the one with
/// n*phi < pi <= (n+1)*phi (taken at the midpoint when that is undecidable).
inline CheckReport check_lemma1(const Interval& beta, const Angle& phi, std::optional<unsigned> n_opt = std::nullopt,
                                mpfr_prec_t precision = 256) {
  const Interval sin_phi = detail::sin_multiple(phi, 1, precision);
  if (!sin_phi.certainly_positive()) throw DomainError("check_lemma1: sin(phi) must be positive");
  if (!beta.certainly_positive()) throw DomainError("check_lemma1: beta must be positive");
  unsigned n = 0;
  if (n_opt) {
    n = *n_opt;
  } else if (phi.pi_fraction) {
    // n = ceil(1/r) - 1 for phi = r*pi.
    const Rational inv = 1 / *phi.pi_fraction;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    n = static_cast<unsigned>(c.get_si() - 1);
  } else {
    const Interval ratio = Interval::pi(precision) / phi.value;
    n = static_cast<unsigned>(std::max(2L, ceil_to_long(ratio.midpoint()) - 1));
  }
  if (n < 1) throw DomainError("check_lemma1: n must be at least 1");

  const Polynomial<Interval> f({sqr(beta), -(Interval(2L) * beta * detail::cos_of(phi, precision)), Interval(1L)});
  std::vector<Interval> g(n);
  for (unsigned k = 0; k < n; ++k) g[k] = pow(beta, n - 1 - k) * detail::sin_multiple(phi, k + 1, precision);
  const Polynomial<Interval> prod = f * Polynomial<Interval>(std::move(g));

  std::vector<Interval> rhs(n + 2, Interval::zero(precision));
  rhs[0] = pow(beta, n + 1) * sin_phi;
  rhs[n] = -(beta * detail::sin_multiple(phi, n + 1, precision));
  rhs[n + 1] = detail::sin_multiple(phi, n, precision);

  Float scale(precision);
  for (const auto& c : rhs) {
    const Float m = c.magnitude();
    if (scale < m) scale = m;
  }
  const Float bound = pow2(-static_cast<long>(precision / 2), precision) * scale;

  CheckReport r;
  r.check = "lemma1";
  r.mode = "float(" + std::to_string(precision) + ")";
  r.tolerance = "2^-" + std::to_string(precision / 2) + " relative to max |coefficient|";
  Float worst(precision);
  bool all_exact = true;
  for (unsigned k = 0; k <= n + 1; ++k) {
    const Interval dev = prod.coeff(k) - rhs[k];
    all_exact = all_exact && dev.is_exact_zero();
    const Float mag = dev.magnitude();
    if (worst < mag) worst = mag;
    if (!dev.contains_zero()) {
      r.fail({static_cast<long>(k), to_string(dev), "product differs from the three-term form"});
    } else if (bound < mag) {
      r.fail({static_cast<long>(k), to_string(dev), "deviation bound exceeds tolerance"});
    }
  }
  if (all_exact) r.tolerance = "0";
  Float rel(precision);
  if (scale.sign() > 0) mpfr_div(rel.get(), worst.get(), scale.get(), MPFR_RNDU);
  r.witnesses.insert(r.witnesses.begin(), {-1, rel.to_string(6, MPFR_RNDU), "max relative deviation"});
  r.witnesses.insert(r.witnesses.begin(), {-1, worst.to_string(6, MPFR_RNDU), "max deviation"});
  return r;
}

/// V(prod (x - a_i)^m_i) = sum m_i for positive a_i, with strict alternation.
template <Scalar S>
CheckReport check_lemma2(const std::vector<std::pair<S, unsigned>>& roots) {
  CheckReport r;
  r.check = "lemma2";
  r.mode = mode_name<S>(roots.empty() ? 0 : ScalarOps<S>::precision(roots.front().first));
  r.tolerance = ScalarOps<S>::exact ? "0" : "certified enclosure signs";
  auto prod = Polynomial<S>::one();
  unsigned m = 0;
  for (const auto& [a, mult] : roots) {
    if (ScalarOps<S>::sign(a) <= 0) throw DomainError("check_lemma2: roots must be positive");
    prod = prod * pow(Polynomial<S>::linear_root(a), mult);
    m += mult;
  }
  const unsigned V = sign_variations(prod);
  if (V != m) r.fail({-1, std::to_string(V), "V differs from the number of roots " + std::to_string(m)});
  for (std::size_t i = 0; i < prod.size(); ++i) {
    const int expected = ((m - i) % 2 == 0) ? 1 : -1;
    const int s = ScalarOps<S>::sign(prod[i]);
    if (s != expected) r.fail({static_cast<long>(i), ScalarOps<S>::str(prod[i]), "sign does not alternate"});
  }
  return r;
}

/// V(L*M) = V(M) when deg L < q, M is supported on multiples of q, and L has
/// positive ends and no negative coefficients (strict: no zero coefficients).
template <Scalar S>
CheckReport check_lemma3(const Polynomial<S>& L, const Polynomial<S>& M, unsigned q, bool strict = false) {
  if (q < 1) throw DomainError("check_lemma3: q must be positive");
  if (L.is_zero() || M.is_zero()) throw DomainError("check_lemma3: L and M must be nonzero");
  if (L.degree() > static_cast<long>(q) - 1) {
    throw DomainError("check_lemma3: deg L = " + std::to_string(L.degree()) + " exceeds q - 1 = " +
                      std::to_string(q - 1));
  }
  for (std::size_t i = 0; i < L.size(); ++i) {
    const int s = ScalarOps<S>::sign(L[i]);
    if (s < 0 || (s == 0 && (strict || i == 0))) {
      throw DomainError("check_lemma3: L violates the hypothesis at degree " + std::to_string(i) + " (value " +
                        ScalarOps<S>::str(L[i]) + ")");
    }
  }
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (i % q != 0 && !ScalarOps<S>::is_zero(M[i])) {
      throw DomainError("check_lemma3: M has a coefficient at degree " + std::to_string(i) +
                        ", not a multiple of q");
    }
  }
  CheckReport r;
  r.check = strict ? "lemma3_strict" : "lemma3";
  r.mode = mode_name<S>(ScalarOps<S>::precision(L[0]));
  r.tolerance = ScalarOps<S>::exact ? "0" : "certified enclosure signs";
  const unsigned vlm = sign_variations(L * M);
  const unsigned vm = sign_variations(M);
  if (vlm != vm) r.fail({-1, std::to_string(vlm), "V(LM) differs from V(M) = " + std::to_string(vm)});
  return r;
}

namespace detail {

template <class Fn>
CheckReport guarded(const std::string& name, const std::string& mode, Fn&& fn) {
  try {
    CheckReport r = fn();
    if (r.check.empty()) r.check = name;
    if (r.mode.empty()) r.mode = mode;
    return r;
  } catch (const Error& e) {
    CheckReport r;
    r.check = name;
    r.mode = mode;
    r.error_kind = std::string(to_string(e.kind()));
    r.fail({-1, "", e.what()});
    return r;
  }
}

template <Scalar S>
bool agree(const Polynomial<S>& a, const Polynomial<S>& b) {
  if constexpr (ScalarOps<S>::exact) {
    return a == b;
  } else {
    return overlaps(a, b);
  }
}

template <Scalar S>
CheckReport compare(const std::string& name, const Polynomial<S>& a, const Polynomial<S>& b, const std::string& mode) {
  CheckReport r;
  r.check = name;
  r.mode = mode;
  r.tolerance = ScalarOps<S>::exact ? "0" : "enclosure overlap";
  if (!agree(a, b)) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      bool same = false;
      if constexpr (ScalarOps<S>::exact) {
        same = a.coeff(i) == b.coeff(i);
      } else {
        same = overlaps(a.coeff(i), b.coeff(i));
      }
      if (!same) {
        r.fail({static_cast<long>(i), ScalarOps<S>::str(a.coeff(i)) + " vs " + ScalarOps<S>::str(b.coeff(i)),
                "coefficients differ"});
      }
    }
    if (r.witnesses.empty()) r.fail({-1, "", "degrees differ"});
  }
  return r;
}

// The polynomial whose signs are audited: the recomputed product itself in
// exact mode; in interval mode the recomputed product must agree with the
// block product L*M (or L), whose zeros are structural.
template <Scalar S>
Polynomial<S> audited_product(const Polynomial<S>& recomputed, const Polynomial<S>& structural) {
  if constexpr (ScalarOps<S>::exact) {
    return recomputed;
  } else {
    return structural;
  }
}

}  // namespace detail

template <Scalar S>
CheckReport verify_certificate(const Polynomial<S>& F, const Certificate<S>& cert) {
  const std::string mode = mode_name<S>(cert.precision);
  CheckReport report;
  report.check = "certificate_" + std::string(to_string(cert.kind));
  report.mode = mode;
  report.tolerance = ScalarOps<S>::exact ? "0" : "enclosure overlap, certified signs";

  report.subchecks.push_back(detail::guarded("F_matches_certificate", mode, [&] {
    return detail::compare("F_matches_certificate", F, cert.F, mode);
  }));

  if (cert.kind == CertKind::positivity) {
    report.subchecks.push_back(detail::guarded("G_positive", mode, [&] {
      auto r = check_positive_coefficients(cert.G, false);
      r.check = "G_positive";
      return r;
    }));
    report.subchecks.push_back(detail::guarded("FG_positive", mode, [&] {
      const Polynomial<S> FG = F * cert.G;
      CheckReport r;
      if constexpr (!ScalarOps<S>::exact) {
        r = detail::compare("FG_matches_L", FG, cert.L, mode);
        if (!r.passed) return r;
      }
      r = check_positive_coefficients(detail::audited_product(FG, cert.L), false);
      r.check = "FG_positive";
      if (ScalarOps<S>::sign(FG[0]) <= 0 || ScalarOps<S>::sign(FG.leading()) <= 0) {
        r.fail({-1, "", "F*G must have positive constant and leading coefficients"});
      }
      return r;
    }));
  } else {
    report.subchecks.push_back(detail::guarded("K_is_GH", mode, [&] {
      return detail::compare("K_is_GH", cert.K, cert.G * cert.H, mode);
    }));
    report.subchecks.push_back(detail::guarded("K_positive", mode, [&] {
      auto r = check_positive_coefficients(cert.K, false);
      r.check = "K_positive";
      return r;
    }));
    report.subchecks.push_back(detail::guarded("M_structure", mode, [&] {
      CheckReport r;
      r.check = "M_structure";
      r.mode = mode;
      r.tolerance = ScalarOps<S>::exact ? "0" : "certified enclosure signs";
      const auto& M = cert.M;
      if (M.degree() != static_cast<long>(cert.p) * cert.q) {
        r.fail({M.degree(), "", "deg M != p*q = " + std::to_string(cert.p * cert.q)});
      }
      bool monic = false;
      if constexpr (ScalarOps<S>::exact) {
        monic = M.leading() == 1;
      } else {
        monic = overlaps(M.leading(), Interval(1L));
      }
      if (!monic) r.fail({M.degree(), ScalarOps<S>::str(M.leading()), "M is not monic"});
      for (std::size_t i = 0; i < M.size(); ++i) {
        if (i % cert.q != 0) {
          if (!ScalarOps<S>::is_zero(M[i])) r.fail({static_cast<long>(i), ScalarOps<S>::str(M[i]), "off-stride"});
          continue;
        }
        const int expected = ((cert.p - i / cert.q) % 2 == 0) ? 1 : -1;
        if (ScalarOps<S>::sign(M[i]) != expected) {
          r.fail({static_cast<long>(i), ScalarOps<S>::str(M[i]), "M does not alternate strictly in x^q"});
        }
      }
      if (sign_variations(M) != cert.p) r.fail({-1, std::to_string(sign_variations(M)), "V(M) != p"});
      return r;
    }));
    report.subchecks.push_back(detail::guarded("lambda4_factors", mode, [&] {
      CheckReport r;
      r.check = "lambda4_factors";
      r.mode = mode;
      r.tolerance = ScalarOps<S>::exact ? "0" : "enclosure overlap";
      auto F4 = Polynomial<S>::one();
      auto H = Polynomial<S>::one();
      unsigned p = 0;
      for (const auto& rec : cert.lambda4) {
        const S& alpha = rec.root.re;
        if (ScalarOps<S>::sign(alpha) <= 0) r.fail({-1, ScalarOps<S>::str(alpha), "lambda4 root not positive"});
        F4 = F4 * pow(Polynomial<S>::linear_root(alpha), rec.root.mult);
        std::vector<S> h(cert.q);
        S acc = ScalarOps<S>::one();
        for (unsigned i = cert.q; i-- > 0;) {
          h[i] = acc;
          acc = S(acc * alpha);
        }
        H = H * pow(Polynomial<S>(std::move(h)), rec.root.mult);
        p += rec.root.mult;
      }
      if (p != cert.p) r.fail({-1, std::to_string(p), "lambda4 multiplicities do not sum to p"});
      if (!detail::agree(H, cert.H)) r.fail({-1, "", "H differs from the product of geometric multipliers"});
      if (!detail::agree(F4 * H, cert.M)) r.fail({-1, "", "F4*H != M"});
      // Each positive root divides F to its full multiplicity, so Z(F) >= p.
      if constexpr (ScalarOps<S>::exact) {
        if (!F.is_zero() && !divides(F4, F)) r.fail({-1, "", "F is not divisible by prod (x - alpha)^mult"});
      } else {
        for (const auto& rec : cert.lambda4) {
          if (!F.evaluate(rec.root.re).contains_zero()) {
            r.fail({-1, ScalarOps<S>::str(rec.root.re), "F does not vanish on the root enclosure"});
          }
        }
      }
      return r;
    }));
    report.subchecks.push_back(detail::guarded("lemma3", mode, [&] { return check_lemma3(cert.L, cert.M, cert.q); }));
    report.subchecks.push_back(detail::guarded("FK_equals_LM", mode, [&] {
      return detail::compare("FK_equals_LM", F * cert.K, cert.L * cert.M, mode);
    }));
    report.subchecks.push_back(detail::guarded("V_FK_equals_p", mode, [&] {
      CheckReport r;
      r.check = "V_FK_equals_p";
      r.mode = mode;
      r.tolerance = ScalarOps<S>::exact ? "0" : "certified enclosure signs";
      const Polynomial<S> FK = detail::audited_product(F * cert.K, cert.L * cert.M);
      const unsigned V = sign_variations(FK);
      if (V != cert.p) r.fail({-1, std::to_string(V), "V(F*K) != p = " + std::to_string(cert.p)});
      // K has positive coefficients, so Z(F*K) = Z(F) = p and nu(F*K) = V - p.
      if (V != cert.V_FK) r.fail({-1, std::to_string(cert.V_FK), "recorded V_FK differs from recomputed V"});
      if (cert.nu_FK != 0) r.fail({-1, std::to_string(cert.nu_FK), "recorded nu_FK is not 0"});
      return r;
    }));
  }
  for (const auto& sub : report.subchecks) {
    if (!sub.passed) {
      report.passed = false;
      if (report.error_kind.empty()) report.error_kind = sub.error_kind;
      report.witnesses.push_back({-1, "", "sub-check " + sub.check + " failed"});
    }
  }
  return report;
}

}  // namespace signcert
