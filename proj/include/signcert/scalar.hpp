#pragma once

// The two coefficient domains: exact rationals (GMP) and MPFR intervals.

#include <gmpxx.h>

#include <concepts>
#include <string>

#include "signcert/error.hpp"
#include "signcert/interval.hpp"

namespace signcert {

/// Always canonical: gcd(num, den) = 1 and den > 0 after every GMP operation
/// that we expose; construction from strings goes through parse_rational.
using Rational = mpq_class;

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational one() { return Rational(1); }
  static int sign(const Rational& v) { return sgn(v); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool identical(const Rational& a, const Rational& b) { return a == b; }
  static std::string str(const Rational& v) { return v.get_str(); }
  static double approx(const Rational& v) { return v.get_d(); }
  static mpfr_prec_t precision(const Rational&) { return 0; }
  static Interval to_interval(const Rational& v, mpfr_prec_t precision) { return Interval(v, precision); }
};

template <>
struct ScalarOps<Interval> {
  static constexpr bool exact = false;
  static Interval one() { return Interval(1L); }
  static int sign(const Interval& v) { return v.sign(); }
  static bool is_zero(const Interval& v) { return v.is_exact_zero(); }
  static bool identical(const Interval& a, const Interval& b) { return signcert::identical(a, b); }
  static std::string str(const Interval& v) { return to_string(v); }
  static double approx(const Interval& v) { return v.approx(); }
  static mpfr_prec_t precision(const Interval& v) { return v.precision(); }
  static Interval to_interval(const Interval& v, mpfr_prec_t) { return v; }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { ScalarOps<S>::exact } -> std::convertible_to<bool>;
  { ScalarOps<S>::sign(a) } -> std::convertible_to<int>;
  { S(a + b) };
  { S(a - b) };
  { S(a * b) };
  { S(-a) };
};

/// Powers of a scalar by repeated squaring.
template <Scalar S>
S power(const S& base, unsigned exponent) {
  S result = ScalarOps<S>::one();
  S b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = S(result * b);
    exponent >>= 1U;
    if (exponent > 0) b = S(b * b);
  }
  return result;
}

}  // namespace signcert
