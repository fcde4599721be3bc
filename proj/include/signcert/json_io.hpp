#pragma once

// JSON forms of root specifications, certificates and check reports.
// Scalars are strings: "p/q" for exact values, "<mid>+-<radius>" for
// enclosures. Polynomials use the comma-separated ascending text format.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

#include "signcert/certificate.hpp"
#include "signcert/error.hpp"
#include "signcert/text.hpp"
#include "signcert/verifier.hpp"

namespace signcert {

using Json = nlohmann::ordered_json;

/// Exactly one of the two specs is meaningful, selected by `exact`.
struct ParsedRootSpec {
  bool exact = true;
  RootSpec<Rational> rational;
  RootSpec<Interval> interval;
};

namespace detail {

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

inline std::string scalar_field(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw InputError(std::string("missing field '") + key + "'", 0);
  const auto& v = obj.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(std::string("field '") + key + "' must be a string", 0);
}

inline unsigned mult_field(const Json& obj) {
  if (!obj.contains("mult")) return 1;
  const auto& v = obj.at("mult");
  if (!v.is_number_integer() || v.get<long long>() < 1) throw InputError("'mult' must be a positive integer", 0);
  return static_cast<unsigned>(v.get<long long>());
}

inline void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const char* what) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("unknown field '" + key + "' in " + what, 0);
    }
  }
}

// Exact square root of a nonnegative rational, when it has one.
inline std::optional<Rational> exact_sqrt(const Rational& v) {
  if (sgn(v) < 0) return std::nullopt;
  mpz_class n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace detail

/// Accepts {"real":[{"value":..,"mult":..}], "complex":[{"re":..,"im":..,"mult":..}]}.
/// A complex entry may give "im_sq" instead of "im" when the imaginary part
/// is irrational. Any non-exact scalar switches the whole spec to intervals.
inline ParsedRootSpec parse_rootspec(std::string_view text, mpfr_prec_t precision = 256) {
  const Json j = detail::parse_json_text(text);
  if (!j.is_object()) throw InputError("root spec must be a JSON object", 0);
  for (const auto& [key, value] : j.items()) {
    if (key != "real" && key != "complex") throw InputError("unknown root spec field '" + key + "'", 0);
    if (!value.is_array()) throw InputError("'" + key + "' must be an array", 0);
  }
  const Json empty = Json::array();
  const Json& reals = j.contains("real") ? j.at("real") : empty;
  const Json& complexes = j.contains("complex") ? j.at("complex") : empty;

  bool exact = true;
  auto visit = [&](const Json& entry, const char* key) {
    if (entry.contains(key)) exact = exact && is_exact_token(detail::scalar_field(entry, key));
  };
  for (const auto& r : reals) visit(r, "value");
  for (const auto& c : complexes) {
    visit(c, "re");
    visit(c, "im");
    visit(c, "im_sq");
  }

  ParsedRootSpec out;
  out.exact = exact;
  for (const auto& r : reals) {
    if (!r.is_object()) throw InputError("real root entries must be objects", 0);
    detail::check_keys(r, {"value", "mult"}, "real root entry");
    const auto v = detail::scalar_field(r, "value");
    const unsigned m = detail::mult_field(r);
    if (exact) {
      out.rational.roots.push_back(Root<Rational>::real(parse_rational(v), m));
    } else {
      out.interval.roots.push_back(Root<Interval>::real(parse_interval_scalar(v, precision), m));
    }
  }
  for (const auto& c : complexes) {
    if (!c.is_object()) throw InputError("complex root entries must be objects", 0);
    detail::check_keys(c, {"re", "im", "im_sq", "mult"}, "complex root entry");
    const auto re = detail::scalar_field(c, "re");
    const bool has_im = c.contains("im"), has_sq = c.contains("im_sq");
    if (has_im == has_sq) throw InputError("complex root needs exactly one of 'im' and 'im_sq'", 0);
    const auto im = detail::scalar_field(c, has_im ? "im" : "im_sq");
    const unsigned m = detail::mult_field(c);
    if (exact) {
      const Rational a = parse_rational(re), b = parse_rational(im);
      if (sgn(b) <= 0) throw InputError("complex root needs a positive imaginary part", 0);
      out.rational.roots.push_back(has_im ? Root<Rational>::complex(a, b, m) : Root<Rational>::complex_squared(a, b, m));
    } else {
      const Interval a = parse_interval_scalar(re, precision), b = parse_interval_scalar(im, precision);
      if (!b.certainly_positive()) throw InputError("complex root needs a certainly positive imaginary part", 0);
      out.interval.roots.push_back(has_im ? Root<Interval>::complex(a, b, m)
                                          : Root<Interval>::complex_squared(a, b, m));
    }
  }
  return out;
}

template <Scalar S>
Json rootspec_to_json(const RootSpec<S>& spec) {
  Json out = Json::object();
  out["real"] = Json::array();
  out["complex"] = Json::array();
  for (const auto& r : spec.roots) {
    if (r.is_real()) {
      out["real"].push_back({{"value", ScalarOps<S>::str(r.re)}, {"mult", r.mult}});
      continue;
    }
    Json c = {{"re", ScalarOps<S>::str(r.re)}};
    if constexpr (ScalarOps<S>::exact) {
      if (auto im = detail::exact_sqrt(r.im_sq)) {
        c["im"] = im->get_str();
      } else {
        c["im_sq"] = r.im_sq.get_str();
      }
    } else {
      c["im"] = to_string(sqrt(r.im_sq));
    }
    c["mult"] = r.mult;
    out["complex"].push_back(std::move(c));
  }
  return out;
}

/// Provenance that the certificate itself does not know about.
struct CertContext {
  std::string root_source = "rootspec";  // or "coefficients"
  unsigned zero_root_multiplicity = 0;
  bool negated = false;
};

template <Scalar S>
Json certificate_to_json(const Certificate<S>& cert, const CertContext& ctx = {}) {
  Json j;
  j["kind"] = std::string(to_string(cert.kind));
  j["mode"] = cert.exact ? "exact" : "approximate";
  j["precision_bits"] = cert.precision;
  j["root_source"] = ctx.root_source;
  j["zero_root_multiplicity"] = ctx.zero_root_multiplicity;
  j["negated"] = ctx.negated;
  j["p"] = cert.p;
  j["q"] = cert.q;
  j["F"] = format_polynomial(cert.F);
  j["G"] = format_polynomial(cert.G);
  j["H"] = format_polynomial(cert.H);
  j["K"] = format_polynomial(cert.K);
  j["L"] = format_polynomial(cert.L);
  j["M"] = format_polynomial(cert.M);
  j["FK"] = format_polynomial(cert.FK);
  j["V_FK"] = cert.V_FK;
  j["Z_FK"] = cert.Z_FK;
  j["nu_FK"] = cert.nu_FK;
  j["lambda3"] = Json::array();
  for (const auto& rec : cert.lambda3) {
    Json r = rootspec_to_json(RootSpec<S>{{rec.root}})["complex"][0];
    r["phi"] = to_string(rec.multiplier.angle.phi);
    r["n"] = rec.multiplier.angle.n;
    Json g = Json::array();
    for (const auto& c : rec.multiplier.g.coeffs()) g.push_back(ScalarOps<S>::str(c));
    r["g_coeffs"] = std::move(g);
    r["scale"] = rec.multiplier.scale;
    r["boundary_assumed"] = rec.multiplier.angle.boundary_assumed;
    j["lambda3"].push_back(std::move(r));
  }
  j["lambda4"] = Json::array();
  for (const auto& rec : cert.lambda4) {
    j["lambda4"].push_back(
        {{"alpha", ScalarOps<S>::str(rec.root.re)}, {"mult", rec.root.mult}, {"h_degree", rec.multiplier.q - 1}});
  }
  j["assumptions"] = cert.assumptions;
  return j;
}

namespace detail {

inline std::string string_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("certificate field '") + key + "' missing", 0);
  return j.at(key).get<std::string>();
}

inline long long int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("certificate field '") + key + "' missing or not an integer", 0);
  }
  return j.at(key).get<long long>();
}

template <Scalar S>
Polynomial<S> poly_field(const Json& j, const char* key, mpfr_prec_t precision) {
  const auto text = string_field(j, key);
  try {
    if constexpr (ScalarOps<S>::exact) {
      if (text == "0") return Polynomial<S>{};
      return parse_polynomial(text);
    } else {
      if (text == "0") return Polynomial<S>{};
      return parse_interval_polynomial(text, precision);
    }
  } catch (const InputError& e) {
    throw InputError(std::string("certificate field '") + key + "': " + e.what(), e.offset());
  }
}

template <Scalar S>
S scalar_value(const std::string& text, mpfr_prec_t precision) {
  if constexpr (ScalarOps<S>::exact) {
    return parse_rational(text);
  } else {
    return parse_interval_scalar(text, precision);
  }
}

}  // namespace detail

/// True when the certificate JSON declares exact mode.
inline bool certificate_is_exact(const Json& j) { return detail::string_field(j, "mode") == "exact"; }

/// Reads the fields verification depends on. Multiplier records are
/// restored only as far as their root data; verification recomputes the rest.
template <Scalar S>
Certificate<S> certificate_from_json(const Json& j) {
  Certificate<S> c;
  const auto kind = detail::string_field(j, "kind");
  if (kind == "positivity") {
    c.kind = CertKind::positivity;
  } else if (kind == "variations") {
    c.kind = CertKind::variations;
  } else {
    throw InputError("certificate kind must be 'positivity' or 'variations'", 0);
  }
  const bool exact = certificate_is_exact(j);
  if (exact != ScalarOps<S>::exact) throw ModeError("certificate mode does not match the requested scalar type");
  c.precision = static_cast<mpfr_prec_t>(detail::int_field(j, "precision_bits"));
  if (c.precision < 2) throw InputError("precision_bits must be at least 2", 0);
  const auto p = detail::int_field(j, "p"), q = detail::int_field(j, "q");
  if (p < 0 || q < 1) throw InputError("certificate needs p >= 0 and q >= 1", 0);
  c.p = static_cast<unsigned>(p);
  c.q = static_cast<unsigned>(q);
  c.F = detail::poly_field<S>(j, "F", c.precision);
  c.G = detail::poly_field<S>(j, "G", c.precision);
  c.H = detail::poly_field<S>(j, "H", c.precision);
  c.K = detail::poly_field<S>(j, "K", c.precision);
  c.L = detail::poly_field<S>(j, "L", c.precision);
  c.M = detail::poly_field<S>(j, "M", c.precision);
  c.FK = detail::poly_field<S>(j, "FK", c.precision);
  c.V_FK = static_cast<unsigned>(detail::int_field(j, "V_FK"));
  c.Z_FK = static_cast<unsigned>(detail::int_field(j, "Z_FK"));
  c.nu_FK = static_cast<int>(detail::int_field(j, "nu_FK"));
  if (j.contains("lambda4")) {
    for (const auto& r : j.at("lambda4")) {
      GeometricRecord<S> rec;
      rec.root = Root<S>::real(detail::scalar_value<S>(detail::string_field(r, "alpha"), c.precision),
                               static_cast<unsigned>(detail::int_field(r, "mult")));
      rec.multiplier.alpha = rec.root.re;
      rec.multiplier.q = c.q;
      c.lambda4.push_back(std::move(rec));
    }
  }
  if (j.contains("assumptions")) {
    for (const auto& a : j.at("assumptions")) c.assumptions.push_back(a.get<std::string>());
  }
  return c;
}

inline Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["passed"] = r.passed;
  j["mode"] = r.mode;
  j["tolerance"] = r.tolerance;
  if (!r.error_kind.empty()) j["error_kind"] = r.error_kind;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    if (w.degree >= 0) wj["degree"] = w.degree;
    if (!w.value.empty()) wj["value"] = w.value;
    wj["note"] = w.note;
    j["witnesses"].push_back(std::move(wj));
  }
  if (!r.subchecks.empty()) {
    j["subchecks"] = Json::array();
    for (const auto& s : r.subchecks) j["subchecks"].push_back(report_to_json(s));
  }
  return j;
}

inline Json audit_to_json(const DescartesAudit& a) {
  return {{"V", a.V}, {"Z", a.Z}, {"nu", a.nu}, {"zero_root_multiplicity", a.zero_root_multiplicity}};
}

inline Json error_to_json(const Error& e) {
  Json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* ie = dynamic_cast<const InputError*>(&e)) err["offset"] = ie->offset();
  return {{"error", std::move(err)}};
}

}  // namespace signcert
