#pragma once

// Root specifications and the four-way partition of a root set:
//   lambda1  real roots            alpha <= 0
//   lambda2  conjugate pairs with  alpha <= 0, gamma > 0
//   lambda3  conjugate pairs with  alpha >  0, gamma > 0
//   lambda4  real roots            alpha >  0
// and the factor polynomials F1..F4 they generate.

#include <algorithm>
#include <string>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/polynomial.hpp"

namespace signcert {

/// A real root (im_sq = 0) or the conjugate pair re ± i*sqrt(im_sq).
/// The imaginary part is stored squared so that a pair whose quadratic
/// factor x^2 - 2 re x + (re^2 + im^2) is rational stays exact even when
/// the imaginary part itself is irrational.
template <Scalar S>
struct Root {
  S re{};
  S im_sq{};
  unsigned mult = 1;

  static Root real(S value, unsigned mult = 1) { return Root{std::move(value), S{}, mult}; }
  static Root complex(const S& re, const S& im, unsigned mult = 1) { return Root{re, S(im * im), mult}; }
  static Root complex_squared(S re, S im_sq, unsigned mult = 1) { return Root{std::move(re), std::move(im_sq), mult}; }

  bool is_real() const { return ScalarOps<S>::is_zero(im_sq); }
  /// beta^2 = alpha^2 + gamma^2.
  S beta_sq() const { return S(S(re * re) + im_sq); }
  /// Number of roots of F this entry accounts for.
  unsigned degree() const { return is_real() ? mult : 2 * mult; }
};

template <Scalar S>
struct RootSpec {
  std::vector<Root<S>> roots;

  /// Real roots count once, conjugate pairs twice, each times its multiplicity.
  unsigned declared_degree() const {
    unsigned d = 0;
    for (const auto& r : roots) d += r.degree();
    return d;
  }

  void validate() const {
    for (const auto& r : roots) {
      if (r.mult == 0) throw DomainError("root multiplicity must be at least 1");
      if (!r.is_real() && ScalarOps<S>::sign(r.im_sq) <= 0) {
        throw DomainError("complex root must have a positive imaginary part");
      }
    }
  }
};

template <Scalar S>
struct RootPartition {
  std::vector<Root<S>> lambda1;
  std::vector<Root<S>> lambda2;
  std::vector<Root<S>> lambda3;
  std::vector<Root<S>> lambda4;

  unsigned degree() const {
    unsigned d = 0;
    for (const auto* set : {&lambda1, &lambda2, &lambda3, &lambda4}) {
      for (const auto& r : *set) d += r.degree();
    }
    return d;
  }
};

template <Scalar S>
struct FactorSet {
  Polynomial<S> F1, F2, F3, F4, F;
};

namespace detail {

template <Scalar S>
bool root_order(const Root<S>& a, const Root<S>& b) {
  if constexpr (ScalarOps<S>::exact) {
    if (a.re != b.re) return a.re < b.re;
    if (a.im_sq != b.im_sq) return a.im_sq < b.im_sq;
  } else {
    const auto ar = a.re.midpoint(), br = b.re.midpoint();
    if (!(ar == br)) return ar < br;
    const auto ai = a.im_sq.midpoint(), bi = b.im_sq.midpoint();
    if (!(ai == bi)) return ai < bi;
  }
  return a.mult < b.mult;
}

}  // namespace detail

/// Classifies by the signs of re and im. Roots at the origin are rejected;
/// interval roots whose real part straddles zero cannot be classified.
template <Scalar S>
RootPartition<S> partition_roots(const RootSpec<S>& spec) {
  spec.validate();
  RootPartition<S> part;
  for (const auto& r : spec.roots) {
    int s = 0;
    try {
      s = ScalarOps<S>::sign(r.re);
    } catch (const PrecisionError&) {
      throw ClassificationError("root real part " + ScalarOps<S>::str(r.re) +
                                " is within its error bound of zero; cannot place it in lambda1/2 vs lambda3/4");
    }
    if (r.is_real()) {
      if (s == 0) throw DomainError("root at the origin: strip zero roots (strip_zero_roots) before partitioning");
      (s < 0 ? part.lambda1 : part.lambda4).push_back(r);
    } else {
      (s <= 0 ? part.lambda2 : part.lambda3).push_back(r);
    }
  }
  // Canonical order keeps products and serialized output independent of input order.
  for (auto* set : {&part.lambda1, &part.lambda2, &part.lambda3, &part.lambda4}) {
    std::sort(set->begin(), set->end(), detail::root_order<S>);
  }
  return part;
}

/// x^2 - 2*re*x + (re^2 + im^2) for a conjugate pair.
template <Scalar S>
Polynomial<S> quadratic_factor(const Root<S>& root) {
  if (root.is_real()) throw DomainError("quadratic_factor: root is real");
  return Polynomial<S>(std::vector<S>{root.beta_sq(), S(S(-root.re) * S(2L)), ScalarOps<S>::one()});
}

template <Scalar S>
Polynomial<S> root_factor(const Root<S>& root) {
  const auto base = root.is_real() ? Polynomial<S>::linear_root(root.re) : quadratic_factor(root);
  return pow(base, root.mult);
}

template <Scalar S>
Polynomial<S> product_of_factors(const std::vector<Root<S>>& roots) {
  auto out = Polynomial<S>::one();
  for (const auto& r : roots) out = out * root_factor(r);
  return out;
}

template <Scalar S>
FactorSet<S> expand_from_partition(const RootPartition<S>& part) {
  FactorSet<S> f;
  f.F1 = product_of_factors(part.lambda1);
  f.F2 = product_of_factors(part.lambda2);
  f.F3 = product_of_factors(part.lambda3);
  f.F4 = product_of_factors(part.lambda4);
  f.F = f.F1 * f.F2 * f.F3 * f.F4;
  return f;
}

/// Expands a spec directly, including roots at the origin.
template <Scalar S>
Polynomial<S> expand_rootspec(const RootSpec<S>& spec) {
  spec.validate();
  return product_of_factors(spec.roots);
}

template <Scalar S>
unsigned count_positive_roots(const RootPartition<S>& part) {
  unsigned p = 0;
  for (const auto& r : part.lambda4) p += r.mult;
  return p;
}

/// Splits off roots exactly at the origin; returns their total multiplicity.
template <Scalar S>
unsigned remove_zero_roots(RootSpec<S>& spec) {
  unsigned m = 0;
  std::erase_if(spec.roots, [&](const Root<S>& r) {
    if (r.is_real() && ScalarOps<S>::is_zero(r.re)) {
      m += r.mult;
      return true;
    }
    return false;
  });
  return m;
}

inline Root<Interval> to_interval(const Root<Rational>& r, mpfr_prec_t precision) {
  return Root<Interval>{Interval(r.re, precision), Interval(r.im_sq, precision), r.mult};
}

inline RootSpec<Interval> to_interval(const RootSpec<Rational>& spec, mpfr_prec_t precision) {
  RootSpec<Interval> out;
  for (const auto& r : spec.roots) out.roots.push_back(to_interval(r, precision));
  return out;
}

inline RootPartition<Interval> to_interval(const RootPartition<Rational>& part, mpfr_prec_t precision) {
  RootPartition<Interval> out;
  auto conv = [&](const std::vector<Root<Rational>>& in, std::vector<Root<Interval>>& dst) {
    for (const auto& r : in) dst.push_back(to_interval(r, precision));
  };
  conv(part.lambda1, out.lambda1);
  conv(part.lambda2, out.lambda2);
  conv(part.lambda3, out.lambda3);
  conv(part.lambda4, out.lambda4);
  return out;
}

}  // namespace signcert
