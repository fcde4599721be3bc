#pragma once

// Certificate assembly.
//
//   G = prod over lambda3 of g^mult            (trigonometric multipliers)
//   L = F1 * F2 * F3 * G                       (no negative coefficients)
//   q = deg L + 1
//   H = prod over lambda4 of h_alpha^mult      (geometric multipliers at stride q)
//   M = F4 * H = prod (x^q - alpha^q)^mult     (supported on multiples of q)
//   K = G * H,   F * K = L * M
//
// Positivity certificates (no positive roots) stop at F * G = L. Variation
// certificates satisfy V(F*K) = p, the number of positive roots of F.
//
// Exact mode multiplies everything out and compares coefficient-wise.
// Interval mode builds L and M from their factored forms, where every
// coefficient is either an exact zero or of certain sign, and checks the
// directly multiplied F*G, F*K against them by enclosure overlap.

#include <string>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/multipliers.hpp"
#include "signcert/polynomial.hpp"
#include "signcert/roots.hpp"

namespace signcert {

enum class CertKind { positivity, variations };

constexpr std::string_view to_string(CertKind kind) noexcept {
  return kind == CertKind::positivity ? "positivity" : "variations";
}

struct CertOptions {
  /// Working precision for interval quantities (phi in exact mode, all
  /// arithmetic for interval roots converted from exact input).
  mpfr_prec_t precision = 256;
};

template <Scalar S>
struct TrigRecord {
  Root<S> root;
  TrigMultiplier<S> multiplier;
};

template <Scalar S>
struct GeometricRecord {
  Root<S> root;
  GeometricMultiplier<S> multiplier;
};

template <Scalar S>
struct LBuild {
  Polynomial<S> L;
  Polynomial<S> G;
  unsigned q = 1;
  std::vector<TrigRecord<S>> lambda3;
  std::vector<std::string> assumptions;
};

template <Scalar S>
struct Certificate {
  CertKind kind = CertKind::positivity;
  bool exact = ScalarOps<S>::exact;
  mpfr_prec_t precision = 256;
  unsigned p = 0;
  unsigned q = 1;
  Polynomial<S> F, G, H, K, L, M, FK;
  unsigned V_FK = 0;
  /// Positive roots of F*K: those of F (p of them); G and H have none.
  unsigned Z_FK = 0;
  int nu_FK = 0;
  std::vector<TrigRecord<S>> lambda3;
  std::vector<GeometricRecord<S>> lambda4;
  std::vector<std::string> assumptions;
};

namespace detail {

/// Every coefficient is an exact zero or certainly positive; both ends positive.
template <Scalar S>
void require_nonnegative_with_positive_ends(const Polynomial<S>& p, const char* what) {
  if (p.is_zero()) throw ConsistencyError(std::string(what) + " is the zero polynomial");
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int s = ScalarOps<S>::sign(p[i]);
    if (s < 0) throw ConsistencyError(std::string(what) + " has a negative coefficient at degree " + std::to_string(i));
  }
  if (ScalarOps<S>::sign(p[0]) <= 0 || ScalarOps<S>::sign(p.leading()) <= 0) {
    throw ConsistencyError(std::string(what) + " must have positive constant and leading coefficients");
  }
}

template <Scalar S>
bool same_polynomial(const Polynomial<S>& a, const Polynomial<S>& b) {
  if constexpr (ScalarOps<S>::exact) {
    return a == b;
  } else {
    return overlaps(a, b);
  }
}

}  // namespace detail

template <Scalar S>
LBuild<S> build_L_and_q(const RootPartition<S>& part, const CertOptions& opts = {}) {
  LBuild<S> out;
  out.G = Polynomial<S>::one();
  Polynomial<S> collapsed = Polynomial<S>::one();  // F3 * G from the three-term forms
  for (const auto& root : part.lambda3) {
    TrigRecord<S> rec{root, trig_multiplier(root, opts.precision)};
    out.G = out.G * pow(rec.multiplier.g, root.mult);
    collapsed = collapsed * pow(rec.multiplier.product_form(), root.mult);
    if (rec.multiplier.angle.boundary_assumed) {
      out.assumptions.push_back("pi = (n+1)*phi accepted within error bounds for lambda3 root re=" +
                                ScalarOps<S>::str(root.re) + " (n=" + std::to_string(rec.multiplier.angle.n) +
                                "); sin((n+1)*phi) treated as 0");
    }
    out.lambda3.push_back(std::move(rec));
  }
  const Polynomial<S> F3 = product_of_factors(part.lambda3);
  if (!detail::same_polynomial(F3 * out.G, collapsed)) {
    throw ConsistencyError("build_L_and_q: F3*G differs from the product of three-term forms");
  }
  out.L = product_of_factors(part.lambda1) * product_of_factors(part.lambda2) * collapsed;
  detail::require_nonnegative_with_positive_ends(out.L, "L");
  out.q = static_cast<unsigned>(out.L.degree()) + 1;
  return out;
}

template <Scalar S>
Certificate<S> certify_positive(const RootPartition<S>& part, const CertOptions& opts = {}) {
  if (!part.lambda4.empty()) {
    throw DomainError("certify_positive: F has " + std::to_string(count_positive_roots(part)) +
                      " positive root(s), so it is not positive on (0, inf)");
  }
  auto built = build_L_and_q(part, opts);
  Certificate<S> cert;
  cert.kind = CertKind::positivity;
  cert.precision = opts.precision;
  cert.F = expand_from_partition(part).F;
  cert.G = built.G;
  cert.H = Polynomial<S>::one();
  cert.K = built.G;
  cert.L = built.L;
  cert.M = Polynomial<S>::one();
  cert.q = built.q;
  cert.p = 0;
  const Polynomial<S> direct = cert.F * cert.G;
  if (!detail::same_polynomial(direct, built.L)) throw ConsistencyError("certify_positive: F*G != L");
  cert.FK = ScalarOps<S>::exact ? direct : built.L;
  for (std::size_t i = 0; i < cert.FK.size(); ++i) {
    if (ScalarOps<S>::sign(cert.FK[i]) < 0) {
      throw ConsistencyError("certify_positive: F*G has a negative coefficient at degree " + std::to_string(i));
    }
  }
  cert.V_FK = sign_variations(cert.FK);
  cert.Z_FK = 0;
  cert.nu_FK = static_cast<int>(cert.V_FK);
  if (cert.V_FK != 0) throw ConsistencyError("certify_positive: V(F*G) != 0");
  cert.lambda3 = std::move(built.lambda3);
  cert.assumptions = std::move(built.assumptions);
  if constexpr (!ScalarOps<S>::exact) cert.precision = max_precision(cert.FK);
  return cert;
}

template <Scalar S>
Certificate<S> certify_variations(const RootPartition<S>& part, const CertOptions& opts = {}) {
  auto built = build_L_and_q(part, opts);
  Certificate<S> cert;
  cert.kind = CertKind::variations;
  cert.precision = opts.precision;
  cert.q = built.q;
  cert.p = count_positive_roots(part);
  const auto factors = expand_from_partition(part);
  cert.F = factors.F;
  cert.G = built.G;
  cert.L = built.L;

  cert.H = Polynomial<S>::one();
  cert.M = Polynomial<S>::one();
  unsigned h_degree = 0;
  for (const auto& root : part.lambda4) {
    GeometricRecord<S> rec{root, geometric_multiplier(root.re, cert.q)};
    cert.H = cert.H * pow(rec.multiplier.h, root.mult);
    cert.M = cert.M * pow(binomial_factor(root.re, cert.q), root.mult);
    h_degree += root.mult * (cert.q - 1);
    cert.lambda4.push_back(std::move(rec));
  }
  if (!detail::same_polynomial(factors.F4 * cert.H, cert.M)) {
    throw ConsistencyError("certify_variations: F4*H != prod (x^q - alpha^q)^mult");
  }
  if (cert.H.degree() != static_cast<long>(h_degree)) throw ConsistencyError("certify_variations: deg H mismatch");
  if (cert.M.degree() != static_cast<long>(cert.p * cert.q) || ScalarOps<S>::sign(cert.M.leading()) <= 0) {
    throw ConsistencyError("certify_variations: M is not of degree p*q with positive leading coefficient");
  }
  for (std::size_t i = 0; i < cert.M.size(); ++i) {
    if (i % cert.q != 0 && !ScalarOps<S>::is_zero(cert.M[i])) {
      throw ConsistencyError("certify_variations: M has a coefficient off the multiples of q");
    }
  }
  if (sign_variations(cert.M) != cert.p) throw ConsistencyError("certify_variations: V(M) != p");

  cert.K = cert.G * cert.H;
  const Polynomial<S> LM = cert.L * cert.M;
  const Polynomial<S> direct = cert.F * cert.K;
  if (!detail::same_polynomial(direct, LM)) throw ConsistencyError("certify_variations: F*K != L*M");
  cert.FK = ScalarOps<S>::exact ? direct : LM;
  if (cert.FK.degree() != cert.L.degree() + static_cast<long>(cert.p * cert.q)) {
    throw ConsistencyError("certify_variations: deg(F*K) != deg L + p*q");
  }
  cert.V_FK = sign_variations(cert.FK);
  if (cert.V_FK != cert.p) {
    throw ConsistencyError("certify_variations: V(F*K) = " + std::to_string(cert.V_FK) + " but p = " +
                           std::to_string(cert.p));
  }
  cert.Z_FK = cert.p;
  cert.nu_FK = static_cast<int>(cert.V_FK) - static_cast<int>(cert.Z_FK);
  cert.lambda3 = std::move(built.lambda3);
  cert.assumptions = std::move(built.assumptions);
  if constexpr (!ScalarOps<S>::exact) cert.precision = max_precision(cert.FK);
  return cert;
}

}  // namespace signcert
