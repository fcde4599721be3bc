#pragma once

// Dense univariate polynomials, ascending coefficient order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/scalar.hpp"

namespace signcert {

/// coeffs()[i] is the coefficient of x^i. The zero polynomial has no
/// coefficients; otherwise the last coefficient is not an exact zero.
/// In interval mode the leading coefficient may still be an enclosure
/// containing zero; sign queries on it will then fail loudly.
template <Scalar S>
class Polynomial {
 public:
  using scalar_type = S;

  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<S> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(S c) { return Polynomial(std::vector<S>{std::move(c)}); }
  static Polynomial one() { return constant(ScalarOps<S>::one()); }
  static Polynomial monomial(S c, std::size_t degree) {
    std::vector<S> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - a
  static Polynomial linear_root(const S& a) { return Polynomial(std::vector<S>{S(-a), ScalarOps<S>::one()}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  S coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S{}; }
  const std::vector<S>& coeffs() const noexcept { return coeffs_; }
  auto begin() const noexcept { return coeffs_.begin(); }
  auto end() const noexcept { return coeffs_.end(); }

  const S& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  S evaluate(const S& x) const {
    S acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = S(S(acc * x) + *it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<S> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = S(coeffs_[i] * S(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = S(coeffs_[i] + o.coeffs_[i]);
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = S(coeffs_[i] - o.coeffs_[i]);
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<S> v;
    v.reserve(a.size());
    for (const auto& c : a.coeffs_) v.push_back(S(-c));
    return Polynomial(std::move(v));
  }

  // Schoolbook product. Exact-zero terms are skipped, so sparse factors
  // (binomials, three-term products) multiply quickly and, in interval
  // mode, structural zeros of the result stay exact.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (ScalarOps<S>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (ScalarOps<S>::is_zero(b.coeffs_[j])) continue;
        out[i + j] = S(out[i + j] + S(a.coeffs_[i] * b.coeffs_[j]));
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const S& s, const Polynomial& p) {
    std::vector<S> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs_) v.push_back(S(s * c));
    return Polynomial(std::move(v));
  }

  /// Coefficient-wise identity (exact equality of rationals, identical
  /// endpoints for intervals).
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!ScalarOps<S>::identical(a.coeffs_[i], b.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ScalarOps<S>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

template <Scalar S>
Polynomial<S> pow(const Polynomial<S>& base, unsigned exponent) {
  Polynomial<S> result = Polynomial<S>::one();
  Polynomial<S> b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

/// x^k * p
template <Scalar S>
Polynomial<S> shift(const Polynomial<S>& p, std::size_t k) {
  if (p.is_zero()) return p;
  std::vector<S> v(k);
  v.insert(v.end(), p.begin(), p.end());
  return Polynomial<S>(std::move(v));
}

using SignSequence = std::vector<std::int8_t>;

/// Signs of the coefficients. Interval coefficients must have decidable
/// sign (certainly positive, certainly negative, or exact zero).
template <Scalar S>
SignSequence signs(const Polynomial<S>& p) {
  SignSequence out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(static_cast<std::int8_t>(ScalarOps<S>::sign(c)));
  return out;
}

/// V(p): sign changes in the coefficient sequence with zeros deleted.
/// The zero polynomial has no variations.
template <Scalar S>
unsigned sign_variations(const Polynomial<S>& p) {
  unsigned count = 0;
  int previous = 0;
  for (const auto& c : p) {
    const int s = ScalarOps<S>::sign(c);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

/// Returns (p / x^m, m) for the largest m with x^m | p.
template <Scalar S>
std::pair<Polynomial<S>, unsigned> strip_zero_roots(const Polynomial<S>& p) {
  if (p.is_zero()) throw DomainError("strip_zero_roots: zero polynomial");
  std::size_t m = 0;
  while (ScalarOps<S>::sign(p[m]) == 0) ++m;
  std::vector<S> v(p.begin() + static_cast<std::ptrdiff_t>(m), p.end());
  return {Polynomial<S>(std::move(v)), static_cast<unsigned>(m)};
}

/// Returns (±p, flipped) with positive leading coefficient.
template <Scalar S>
std::pair<Polynomial<S>, bool> sign_normalize(const Polynomial<S>& p) {
  if (p.is_zero()) throw DomainError("sign_normalize: zero polynomial");
  if (ScalarOps<S>::sign(p.leading()) < 0) return {-p, true};
  return {p, false};
}

inline Polynomial<Interval> to_interval(const Polynomial<Rational>& p, mpfr_prec_t precision) {
  std::vector<Interval> v;
  v.reserve(p.size());
  for (const auto& c : p) v.emplace_back(c, precision);
  return Polynomial<Interval>(std::move(v));
}
inline Polynomial<Interval> to_interval(const Polynomial<Interval>& p, mpfr_prec_t) { return p; }

/// Largest coefficient precision (0 for an all-exact-zero or empty input).
inline mpfr_prec_t max_precision(const Polynomial<Interval>& p) {
  mpfr_prec_t best = 0;
  for (const auto& c : p) best = std::max(best, c.precision());
  return best;
}

/// Coefficient-wise overlap of two enclosures: the exact polynomials they
/// stand for may coincide.
inline bool overlaps(const Polynomial<Interval>& a, const Polynomial<Interval>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!overlaps(a.coeff(i), b.coeff(i))) return false;
  }
  return true;
}

// Mixed-mode products promote the exact operand to the interval's precision.
inline Polynomial<Interval> operator*(const Polynomial<Rational>& a, const Polynomial<Interval>& b) {
  return to_interval(a, std::max<mpfr_prec_t>(max_precision(b), 64)) * b;
}
inline Polynomial<Interval> operator*(const Polynomial<Interval>& a, const Polynomial<Rational>& b) {
  return b * a;
}

}  // namespace signcert
