#pragma once

// Coefficient text format: ascending comma-separated list, constant first.
// Exact scalars are integers or "p/q"; interval scalars use the
// "<mid>+-<radius>" form from interval.hpp.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/polynomial.hpp"

namespace signcert {

/// Strict grammar: [+-]?[0-9]+(/[0-9]+)?  with nonzero denominator.
/// `offset` is added to reported error positions.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
  std::size_t i = 0;
  const auto n = text.size();
  if (n == 0) throw InputError("empty number", offset);
  if (text[0] == '+' || text[0] == '-') ++i;
  const std::size_t num_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw InputError("expected digits", offset + i);
  std::size_t slash = std::string_view::npos;
  if (i < n && text[i] == '/') {
    slash = i++;
    const std::size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) throw InputError("expected denominator digits", offset + i);
  }
  if (i != n) throw InputError("unexpected character '" + std::string(1, text[i]) + "'", offset + i);

  const bool negative = text[0] == '-';
  const std::string num(text.substr(num_start, (slash == std::string_view::npos ? n : slash) - num_start));
  mpz_class numerator(num, 10);
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    denominator = mpz_class(std::string(text.substr(slash + 1)), 10);
    if (denominator == 0) throw InputError("zero denominator", offset + slash + 1);
  }
  if (negative) numerator = -numerator;
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace detail {

// Splits on commas, trimming blanks; returns (token, offset) pairs.
inline std::vector<std::pair<std::string_view, std::size_t>> split_tokens(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t a = start, b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    if (a == b) throw InputError("empty coefficient", a);
    out.emplace_back(text.substr(a, b - a), a);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Polynomial<Rational> parse_polynomial(std::string_view text) {
  std::vector<Rational> coeffs;
  for (const auto& [token, offset] : detail::split_tokens(text)) coeffs.push_back(parse_rational(token, offset));
  return Polynomial<Rational>(std::move(coeffs));
}

/// True when the token is written in exact (integer or p/q) form.
inline bool is_exact_token(std::string_view token) {
  try {
    (void)parse_rational(token);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

/// Parses an exact or interval scalar into an interval enclosure.
inline Interval parse_interval_scalar(std::string_view token, mpfr_prec_t precision, std::size_t offset = 0) {
  if (is_exact_token(token)) return Interval(parse_rational(token, offset), precision);
  try {
    return parse_interval(token, precision);
  } catch (const InputError& e) {
    throw InputError(e.what(), offset);
  }
}

inline Polynomial<Interval> parse_interval_polynomial(std::string_view text, mpfr_prec_t precision) {
  std::vector<Interval> coeffs;
  for (const auto& [token, offset] : detail::split_tokens(text)) {
    coeffs.push_back(parse_interval_scalar(token, precision, offset));
  }
  return Polynomial<Interval>(std::move(coeffs));
}

/// True when every coefficient of the text is exact.
inline bool is_exact_polynomial_text(std::string_view text) {
  for (const auto& [token, offset] : detail::split_tokens(text)) {
    if (!is_exact_token(token)) return false;
  }
  return true;
}

template <Scalar S>
std::string format_polynomial(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += ScalarOps<S>::str(p[i]);
  }
  return out;
}

/// Conventional descending rendering for human-readable output, e.g. "x^2 - 3*x + 2".
template <Scalar S>
std::string pretty_polynomial(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (ScalarOps<S>::is_zero(p[k])) continue;
    std::string c = ScalarOps<S>::str(p[k]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == "1";
    if (k == 0) {
      out += c;
    } else {
      if (!unit) out += (c.find_first_of("/+") != std::string::npos ? "(" + c + ")" : c) + "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace signcert
