#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace signcert {

// Owning wrapper around mpfr_t. Each value carries its own precision;
// binary operators below round to nearest at the larger operand precision.
class Float {
 public:
  explicit Float(mpfr_prec_t precision = 64) {
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
  }
  Float(long value, mpfr_prec_t precision) {
    mpfr_init2(v_, precision);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Float(double value, mpfr_prec_t precision) {
    mpfr_init2(v_, precision);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  Float(const mpq_class& value, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, precision);
    mpfr_set_q(v_, value.get_mpq_t(), rnd);
  }
  Float(const Float& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Float(Float&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Float& operator=(const Float& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Exact conversion; every finite binary float is a dyadic rational.
  mpq_class to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(std::size_t digits, mpfr_rnd_t rnd = MPFR_RNDN) const {
    if (is_zero()) return "0";
    if (is_nan()) return "nan";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, rnd);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string out;
    std::size_t pos = 0;
    if (mant[0] == '-') {
      out.push_back('-');
      pos = 1;
    }
    out.push_back(mant[pos]);
    std::string tail = mant.substr(pos + 1);
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    if (!tail.empty()) out += "." + tail;
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
    return out;
  }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t joint_precision(const Float& a, const Float& b) noexcept {
  return std::max(a.precision(), b.precision());
}

inline Float operator+(const Float& a, const Float& b) {
  Float r(joint_precision(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Float operator-(const Float& a, const Float& b) {
  Float r(joint_precision(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Float operator*(const Float& a, const Float& b) {
  Float r(joint_precision(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Float operator/(const Float& a, const Float& b) {
  Float r(joint_precision(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Float operator-(const Float& a) {
  Float r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline Float abs(const Float& a) {
  Float r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline Float sqrt(const Float& a) {
  Float r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline Float hypot(const Float& a, const Float& b) {
  Float r(joint_precision(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline bool operator<(const Float& a, const Float& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Float& a, const Float& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Float& a, const Float& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Float& a, const Float& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

/// 2^exponent, exact.
inline Float pow2(long exponent, mpfr_prec_t precision = 64) {
  Float r(precision);
  mpfr_set_ui_2exp(r.get(), 1, exponent, MPFR_RNDN);
  return r;
}

}  // namespace signcert
