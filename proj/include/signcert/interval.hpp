#pragma once

// Closed intervals [lo, hi] with MPFR endpoints and outward rounding.
//
// Every operation returns an enclosure of the exact result for all inputs
// inside the operand enclosures. A degenerate interval [v, v] is an exact
// value; exact zero is kept exact through products, which is what lets
// structurally-zero coefficients survive float-mode polynomial arithmetic.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "signcert/error.hpp"
#include "signcert/mpfloat.hpp"

namespace signcert {

class Interval {
 public:
  /// Exact zero. Integer constants use 64 bits and are promoted on contact.
  Interval() : lo_(64), hi_(64) {}
  explicit Interval(long value) : lo_(value, 64), hi_(value, 64) {}
  Interval(const mpq_class& value, mpfr_prec_t precision)
      : lo_(value, precision, MPFR_RNDD), hi_(value, precision, MPFR_RNDU) {}
  Interval(Float lo, Float hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.precision() != hi_.precision()) {
      const auto p = joint_precision(lo_, hi_);
      Float a(p), b(p);
      mpfr_set(a.get(), lo_.get(), MPFR_RNDD);
      mpfr_set(b.get(), hi_.get(), MPFR_RNDU);
      lo_ = std::move(a);
      hi_ = std::move(b);
    }
    if (lo_.is_nan() || hi_.is_nan() || hi_ < lo_) throw NumericError("invalid interval endpoints");
  }
  static Interval point(const Float& v) { return Interval(v, v); }
  static Interval zero(mpfr_prec_t precision) { return Interval(Float(precision), Float(precision)); }

  static Interval pi(mpfr_prec_t precision) {
    Float lo(precision), hi(precision);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
  }

  const Float& lower() const noexcept { return lo_; }
  const Float& upper() const noexcept { return hi_; }
  mpfr_prec_t precision() const noexcept { return lo_.precision(); }

  bool is_exact() const noexcept { return lo_ == hi_; }
  bool is_exact_zero() const noexcept { return lo_.is_zero() && hi_.is_zero(); }
  bool contains_zero() const noexcept { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool certainly_positive() const noexcept { return lo_.sign() > 0; }
  bool certainly_negative() const noexcept { return hi_.sign() < 0; }
  bool certainly_nonnegative() const noexcept { return lo_.sign() >= 0; }

  /// +1, -1 or 0 (exact zero only). Throws when the sign is undecidable.
  int sign() const {
    if (lo_.is_nan() || hi_.is_nan()) throw NumericError("NaN in interval");
    if (certainly_positive()) return 1;
    if (certainly_negative()) return -1;
    if (is_exact_zero()) return 0;
    throw PrecisionError("sign undecidable: interval [" + lo_.to_string(6) + ", " + hi_.to_string(6) +
                         "] straddles zero");
  }

  Float midpoint() const {
    Float m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
  }
  /// Upper bound on the distance from the midpoint to either endpoint.
  Float radius() const {
    Float m = midpoint();
    Float a(precision()), b(precision());
    mpfr_sub(a.get(), m.get(), lo_.get(), MPFR_RNDU);
    mpfr_sub(b.get(), hi_.get(), m.get(), MPFR_RNDU);
    mpfr_max(a.get(), a.get(), b.get(), MPFR_RNDU);
    return a;
  }
  /// Upper bound on max |x| over the interval.
  Float magnitude() const {
    Float a(precision()), b(precision());
    mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
    mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
    mpfr_max(a.get(), a.get(), b.get(), MPFR_RNDU);
    return a;
  }
  double approx() const { return midpoint().to_double(); }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);


 private:
  Float lo_;
  Float hi_;
};

/// Same endpoints, bit for bit.
inline bool identical(const Interval& a, const Interval& b) noexcept {
  return a.lower() == b.lower() && a.upper() == b.upper();
}

inline mpfr_prec_t joint_precision(const Interval& a, const Interval& b) noexcept {
  return std::max(a.precision(), b.precision());
}

inline Interval operator+(const Interval& a, const Interval& b) {
  const auto p = joint_precision(a, b);
  Float lo(p), hi(p);
  mpfr_add(lo.get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline Interval operator-(const Interval& a, const Interval& b) {
  const auto p = joint_precision(a, b);
  Float lo(p), hi(p);
  mpfr_sub(lo.get(), a.lower().get(), b.upper().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.upper().get(), b.lower().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline Interval operator-(const Interval& a) {
  const auto p = a.precision();
  Float lo(p), hi(p);
  mpfr_neg(lo.get(), a.upper().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lower().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const auto p = joint_precision(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return Interval::zero(p);
  Float lo(p), hi(p), t(p);
  const mpfr_srcptr al = a.lower().get(), ah = a.upper().get();
  const mpfr_srcptr bl = b.lower().get(), bh = b.upper().get();
  mpfr_mul(lo.get(), al, bl, MPFR_RNDD);
  mpfr_mul(t.get(), al, bh, MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_mul(t.get(), ah, bl, MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_mul(t.get(), ah, bh, MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_mul(hi.get(), al, bl, MPFR_RNDU);
  mpfr_mul(t.get(), al, bh, MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), ah, bl, MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), ah, bh, MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by an enclosure of zero");
  const auto p = joint_precision(a, b);
  Float lo(p), hi(p), t(p);
  const mpfr_srcptr al = a.lower().get(), ah = a.upper().get();
  const mpfr_srcptr bl = b.lower().get(), bh = b.upper().get();
  mpfr_div(lo.get(), al, bl, MPFR_RNDD);
  mpfr_div(t.get(), al, bh, MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_div(t.get(), ah, bl, MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_div(t.get(), ah, bh, MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_div(hi.get(), al, bl, MPFR_RNDU);
  mpfr_div(t.get(), al, bh, MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  mpfr_div(t.get(), ah, bl, MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  mpfr_div(t.get(), ah, bh, MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
inline Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
inline Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }

inline Interval sqr(const Interval& a) {
  const auto p = a.precision();
  Float lo(p), hi(p);
  if (a.certainly_nonnegative()) {
    mpfr_sqr(lo.get(), a.lower().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.upper().get(), MPFR_RNDU);
  } else if (a.upper().sign() <= 0) {
    mpfr_sqr(lo.get(), a.upper().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.lower().get(), MPFR_RNDU);
  } else {
    Float m = a.magnitude();
    mpfr_sqr(hi.get(), m.get(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

inline Interval pow(const Interval& base, unsigned exponent) {
  Interval result(1L);
  Interval b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b = sqr(b);
  }
  return result;
}

inline Interval sqrt(const Interval& a) {
  if (a.certainly_negative()) throw DomainError("square root of a negative interval");
  const auto p = a.precision();
  Float lo(p), hi(p);
  if (a.lower().sign() > 0) mpfr_sqrt(lo.get(), a.lower().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.upper().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline Interval hull(const Interval& a, const Interval& b) {
  const auto p = joint_precision(a, b);
  Float lo(p), hi(p);
  mpfr_min(lo.get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

inline bool overlaps(const Interval& a, const Interval& b) {
  return !(a.upper() < b.lower() || b.upper() < a.lower());
}
inline bool certainly_less(const Interval& a, const Interval& b) { return a.upper() < b.lower(); }

/// Widens by `r` on both sides.
inline Interval widen(const Interval& a, const Float& r) {
  const auto p = a.precision();
  Float lo(p), hi(p);
  mpfr_sub(lo.get(), a.lower().get(), r.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.upper().get(), r.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace detail {

// Enclosure of sin over [lo, hi] when shift = 1/2, of cos when shift = 0.
// The function is monotone between critical points x = (j + shift) * pi,
// so the range is the hull of the endpoint values and the extrema of every
// critical point the interval may contain.
inline Interval periodic_enclosure(const Interval& x, bool is_sin) {
  const auto p = x.precision();
  auto eval = [&](const Float& at, mpfr_rnd_t rnd) {
    Float r(p);
    if (is_sin) {
      mpfr_sin(r.get(), at.get(), rnd);
    } else {
      mpfr_cos(r.get(), at.get(), rnd);
    }
    return r;
  };
  Float lo = eval(x.lower(), MPFR_RNDD);
  Float hi = eval(x.upper(), MPFR_RNDU);
  {
    Float a = eval(x.upper(), MPFR_RNDD);
    Float b = eval(x.lower(), MPFR_RNDU);
    mpfr_min(lo.get(), lo.get(), a.get(), MPFR_RNDD);
    mpfr_max(hi.get(), hi.get(), b.get(), MPFR_RNDU);
  }
  Interval t = x / Interval::pi(p + 16);
  if (is_sin) t = t - Interval(mpq_class(1, 2), p + 16);
  Float jlo(p + 16), jhi(p + 16);
  mpfr_ceil(jlo.get(), t.lower().get());
  mpfr_floor(jhi.get(), t.upper().get());
  if (!(jhi < jlo)) {
    Float span = jhi - jlo;
    if (span.to_double() >= 1.0) {
      mpfr_set_si(lo.get(), -1, MPFR_RNDD);
      mpfr_set_si(hi.get(), 1, MPFR_RNDU);
    } else {
      // Exactly one critical point j*pi (+pi/2 for sin).
      // sin((j + 1/2) pi) = (-1)^j, cos(j pi) = (-1)^j.
      const bool even = mpfr_integer_p(jlo.get()) && std::fmod(std::fabs(jlo.to_double()), 2.0) == 0.0;
      if (even) {
        mpfr_set_si(hi.get(), 1, MPFR_RNDU);
      } else {
        mpfr_set_si(lo.get(), -1, MPFR_RNDD);
      }
    }
  }
  Float one(1L, p), minus_one(-1L, p);
  if (hi > one) hi = one;
  if (lo < minus_one) lo = minus_one;
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace detail

inline Interval sin(const Interval& x) { return detail::periodic_enclosure(x, true); }
inline Interval cos(const Interval& x) { return detail::periodic_enclosure(x, false); }

inline Interval acos(const Interval& x) {
  const auto p = x.precision();
  Float one(1L, p), minus_one(-1L, p);
  if (x.upper() < minus_one || one < x.lower()) throw DomainError("acos argument outside [-1, 1]");
  Float top = x.upper() < one ? x.upper() : one;
  Float bottom = minus_one < x.lower() ? x.lower() : minus_one;
  Float lo(p), hi(p);
  mpfr_acos(lo.get(), top.get(), MPFR_RNDD);
  mpfr_acos(hi.get(), bottom.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

/// ceil(v) for a Float, as long.
inline long ceil_to_long(const Float& v) {
  Float c(v.precision());
  mpfr_ceil(c.get(), v.get());
  return mpfr_get_si(c.get(), MPFR_RNDN);
}

// Text form: exact zero prints as "0", exact integers print as integers,
// everything else as "<mid>+-<radius>" where radius bounds the distance from
// the printed decimal midpoint to every point of the interval.
inline std::string to_string(const Interval& a) {
  if (a.is_exact_zero()) return "0";
  if (a.is_exact() && mpfr_integer_p(a.lower().get()) && mpfr_get_exp(a.lower().get()) < 4096) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), a.lower().get(), MPFR_RNDN);
    return z.get_str();
  }
  const auto p = a.precision();
  auto digits = static_cast<std::size_t>(std::ceil(static_cast<double>(p) * 0.30103)) + 2;
  Float mid = a.midpoint();
  // Digits beyond the width of the interval carry no information.
  if (!a.is_exact() && !mid.is_zero()) {
    Float width(p);
    mpfr_sub(width.get(), a.upper().get(), a.lower().get(), MPFR_RNDU);
    const long span = mpfr_get_exp(mid.get()) - mpfr_get_exp(width.get());
    const auto useful = static_cast<std::size_t>(std::max(0L, span) * 0.30103) + 3;
    digits = std::min(digits, useful);
  }
  std::string mid_text = mid.to_string(digits);
  Float back_lo(p + 64), back_hi(p + 64);
  mpfr_set_str(back_lo.get(), mid_text.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(back_hi.get(), mid_text.c_str(), 10, MPFR_RNDU);
  Float d1(p), d2(p), rad(p);
  mpfr_sub(d1.get(), back_hi.get(), a.lower().get(), MPFR_RNDU);
  mpfr_sub(d2.get(), a.upper().get(), back_lo.get(), MPFR_RNDU);
  mpfr_max(rad.get(), d1.get(), d2.get(), MPFR_RNDU);
  if (rad.sign() <= 0) return mid_text;
  return mid_text + "+-" + rad.to_string(2, MPFR_RNDU);
}

/// Parses the text form produced by to_string, or a plain decimal.
inline Interval parse_interval(std::string_view text, mpfr_prec_t precision) {
  const std::string s(text);
  const auto sep = s.find("+-");
  const std::string mid = s.substr(0, sep);
  auto check = [&](const std::string& part) {
    if (part.empty()) throw InputError("empty decimal in '" + s + "'", 0);
    for (char c : part) {
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' || c == '-' ||
            c == '+')) {
        throw InputError("malformed decimal '" + s + "'", 0);
      }
    }
  };
  check(mid);
  Float lo(precision), hi(precision);
  char* end = nullptr;
  mpfr_strtofr(lo.get(), mid.c_str(), &end, 10, MPFR_RNDD);
  if (end == nullptr || *end != '\0') throw InputError("malformed decimal '" + s + "'", 0);
  mpfr_strtofr(hi.get(), mid.c_str(), &end, 10, MPFR_RNDU);
  if (sep != std::string::npos) {
    const std::string radius_text = s.substr(sep + 2);
    check(radius_text);
    Float r(precision);
    mpfr_strtofr(r.get(), radius_text.c_str(), &end, 10, MPFR_RNDU);
    if (end == nullptr || *end != '\0' || r.sign() < 0) throw InputError("malformed radius in '" + s + "'", 0);
    mpfr_sub(lo.get(), lo.get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), r.get(), MPFR_RNDU);
  }
  if (!lo.is_finite() || !hi.is_finite()) throw InputError("non-finite value '" + s + "'", 0);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace signcert
