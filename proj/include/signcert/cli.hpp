#pragma once

// Command-line front end. parse_args turns argv into a CliRequest, run
// executes one request and returns the exit code with the full report.
//
// Exit codes: 0 success, 1 claim false or verification failed,
// 2 input error, 3 precision insufficient (retry with a larger --precision).

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "signcert/certificate.hpp"
#include "signcert/find_roots.hpp"
#include "signcert/json_io.hpp"
#include "signcert/text.hpp"
#include "signcert/verifier.hpp"

namespace signcert::cli {

struct CliRequest {
  std::string subcommand;
  std::optional<std::string> poly, poly_file, roots, roots_file, cert, cert_file;
  std::string format = "json";
  mpfr_prec_t precision = 256;
  bool float_mode = false;
  bool auto_precision = false;
  /// Cluster radius for root finding (decimal); defaults to 2^-(precision/4).
  std::optional<std::string> tolerance;
  // lemma-check
  unsigned lemma = 0;
  std::optional<std::string> beta, phi, values, L, M;
  std::optional<unsigned> n;
  unsigned q = 1;
  bool strict = false;
};

struct CliResult {
  int exit_code = 0;
  std::string output;
};

constexpr mpfr_prec_t kMaxAutoPrecision = 4096;

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::precision:
    case ErrorKind::classification:
    case ErrorKind::numeric:
      return 3;
    case ErrorKind::consistency:
      return 1;
    default:
      return 2;
  }
}

namespace detail {

inline std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_stream(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read file '" + path + "'");
  return read_stream(f);
}

inline std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::optional<std::string> source(const std::optional<std::string>& inline_text,
                                         const std::optional<std::string>& file, std::istream& in) {
  if (inline_text && file) throw InputError("give either the inline value or the file, not both");
  if (inline_text) return *inline_text == "-" ? trim(read_stream(in)) : *inline_text;
  if (file) return trim(read_file(*file, in));
  return std::nullopt;
}

// Plain "key: value" rendering of a JSON report; nested values are indented.
inline void render_text(const Json& j, std::ostringstream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else if (value.is_array()) {
        out << pad << key << ": (none)\n";
      } else {
        out << pad << key << ": " << scalar(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured()) {
        out << pad << "-\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << "- " << scalar(value) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

inline std::string render(const Json& j, const std::string& format) {
  if (format == "text") {
    std::ostringstream out;
    render_text(j, out, 0);
    return out.str();
  }
  return j.dump(2) + "\n";
}

// A normalized problem: F monic with nonzero constant term, plus its roots.
struct Problem {
  bool exact = true;
  std::string root_source;
  unsigned zero_mult = 0;
  bool negated = false;
  Polynomial<Rational> F;  // exact input
  Polynomial<Interval> Fi;  // interval input (or exact input in float mode)
  RootSpec<Rational> spec;
  RootSpec<Interval> ispec;
  bool has_roots = false;
};

inline Polynomial<Interval> monic_interval(const Polynomial<Interval>& p) {
  const Interval lead = p.leading();
  std::vector<Interval> c;
  for (const auto& a : p.coeffs()) c.push_back(a.is_exact_zero() ? a : a / lead);
  c.back() = Interval(1L);
  return Polynomial<Interval>(std::move(c));
}

inline FindRootsOptions root_options(const CliRequest& req, mpfr_prec_t precision) {
  FindRootsOptions o;
  o.precision = precision;
  if (req.tolerance) {
    const Interval t = parse_interval_scalar(*req.tolerance, precision);
    if (!t.certainly_positive()) throw InputError("--tolerance must be positive");
    o.cluster_radius = t.upper();
  }
  return o;
}

/// Loads --poly / --roots. `need_roots` runs the root finder for coefficient input.
inline Problem load_problem(const CliRequest& req, mpfr_prec_t precision, std::istream& in, bool need_roots) {
  const auto poly_text = source(req.poly, req.poly_file, in);
  const auto roots_text = source(req.roots, req.roots_file, in);
  if (poly_text && roots_text) throw InputError("give either --poly or --roots, not both");
  if (!poly_text && !roots_text) throw InputError("missing input: use --poly or --roots");
  Problem pr;
  if (roots_text) {
    pr.root_source = "rootspec";
    auto parsed = parse_rootspec(*roots_text, precision);
    pr.has_roots = true;
    if (parsed.exact) {
      parsed.rational.validate();
      pr.zero_mult = remove_zero_roots(parsed.rational);
      pr.spec = parsed.rational;
      pr.F = expand_rootspec(pr.spec);
      if (req.float_mode) {
        pr.exact = false;
        pr.ispec = to_interval(pr.spec, precision);
        pr.Fi = expand_rootspec(pr.ispec);
      }
    } else {
      parsed.interval.validate();
      pr.exact = false;
      pr.zero_mult = remove_zero_roots(parsed.interval);
      pr.ispec = parsed.interval;
      pr.Fi = expand_rootspec(pr.ispec);
    }
    return pr;
  }

  pr.root_source = "coefficients";
  if (is_exact_polynomial_text(*poly_text)) {
    const auto p = parse_polynomial(*poly_text);
    if (p.is_zero()) throw DomainError("the zero polynomial has no sign pattern to analyse");
    auto [stripped, m] = strip_zero_roots(p);
    auto [normal, flipped] = sign_normalize(stripped);
    pr.zero_mult = m;
    pr.negated = flipped;
    pr.F = make_monic(normal);
    if (need_roots) {
      pr.has_roots = true;
      if (pr.F.degree() >= 1) {
        auto found = find_roots(pr.F, root_options(req, precision));
        if (found.exact) {
          pr.spec = *found.exact;
        } else {
          pr.exact = false;
          pr.ispec = found.enclosures;
        }
      }
    }
    if (req.float_mode && pr.exact) {
      pr.exact = false;
      pr.ispec = to_interval(pr.spec, precision);
    }
    if (!pr.exact) pr.Fi = to_interval(pr.F, precision);
    return pr;
  }
  const auto p = parse_interval_polynomial(*poly_text, precision);
  if (p.is_zero()) throw DomainError("the zero polynomial has no sign pattern to analyse");
  pr.exact = false;
  auto [stripped, m] = strip_zero_roots(p);
  auto [normal, flipped] = sign_normalize(stripped);
  pr.zero_mult = m;
  pr.negated = flipped;
  pr.Fi = monic_interval(normal);
  if (need_roots && pr.Fi.degree() >= 1) pr.ispec = find_roots(pr.Fi, root_options(req, precision)).enclosures;
  pr.has_roots = need_roots;
  return pr;
}

inline CertContext context_of(const Problem& pr) { return {pr.root_source, pr.zero_mult, pr.negated}; }

inline Json run_audit(const CliRequest& req, mpfr_prec_t precision, std::istream& in) {
  const Problem pr = load_problem(req, precision, in, true);
  DescartesAudit a;
  Json j;
  if (pr.exact) {
    a = descartes_audit(pr.spec);
    const unsigned v_input = sign_variations(pr.F);
    if (v_input != a.V) throw ConsistencyError("audit: V of the input differs from V of the root expansion");
    j["F"] = format_polynomial(pr.F);
  } else {
    a = descartes_audit(pr.ispec);
    a.V = sign_variations(pr.Fi);
    if (a.V < a.Z || (a.V - a.Z) % 2 != 0) throw ConsistencyError("audit: V - Z is not a nonnegative even number");
    a.nu = a.V - a.Z;
    j["F"] = format_polynomial(pr.Fi);
  }
  a.zero_root_multiplicity = pr.zero_mult;
  Json out = audit_to_json(a);
  out["mode"] = pr.exact ? "exact" : "approximate";
  out["precision_bits"] = precision;
  out["root_source"] = pr.root_source;
  out["negated"] = pr.negated;
  out["F"] = j["F"];
  return out;
}

struct Outcome {
  int exit_code = 0;
  Json body;
};

inline Outcome run_certify(const CliRequest& req, bool positivity, mpfr_prec_t precision, std::istream& in) {
  const Problem pr = load_problem(req, precision, in, true);
  CertOptions opts;
  opts.precision = precision;
  auto certify = [&](const auto& spec) -> Outcome {
    const auto part = partition_roots(spec);
    if (positivity && !part.lambda4.empty()) {
      Json body = {{"error",
                    {{"kind", "domain"},
                     {"message", "F has " + std::to_string(count_positive_roots(part)) +
                                     " positive root(s); no positivity certificate exists"}}},
                   {"p", count_positive_roots(part)}};
      return {1, body};
    }
    const auto cert = positivity ? certify_positive(part, opts) : certify_variations(part, opts);
    return {0, certificate_to_json(cert, context_of(pr))};
  };
  return pr.exact ? certify(pr.spec) : certify(pr.ispec);
}

inline Outcome run_verify(const CliRequest& req, std::istream& in) {
  const auto cert_text = source(req.cert, req.cert_file, in);
  if (!cert_text) throw InputError("missing certificate: use --cert or --cert-file");
  const Json j = signcert::detail::parse_json_text(*cert_text);
  if (!j.is_object()) throw InputError("certificate must be a JSON object");
  const bool exact = certificate_is_exact(j);
  const bool has_input = req.poly || req.poly_file || req.roots || req.roots_file;
  CheckReport report;
  if (exact) {
    const auto cert = certificate_from_json<Rational>(j);
    Polynomial<Rational> F = cert.F;
    if (has_input) {
      const Problem pr = load_problem(req, cert.precision, in, false);
      if (!pr.exact) throw ModeError("exact certificate given with approximate input");
      F = pr.F;
    }
    report = verify_certificate(F, cert);
  } else {
    const auto cert = certificate_from_json<Interval>(j);
    Polynomial<Interval> F = cert.F;
    if (has_input) {
      const Problem pr = load_problem(req, cert.precision, in, false);
      F = pr.exact ? to_interval(pr.F, cert.precision) : pr.Fi;
    }
    report = verify_certificate(F, cert);
  }
  int code = report.passed ? 0 : 1;
  if (!report.passed && (report.error_kind == "precision_insufficient" || report.error_kind == "classification")) {
    code = 3;
  }
  return {code, report_to_json(report)};
}

inline Json run_roots(const CliRequest& req, mpfr_prec_t precision, std::istream& in) {
  const auto poly_text = source(req.poly, req.poly_file, in);
  if (!poly_text) throw InputError("roots needs --poly or --poly-file");
  CliRequest sub = req;
  sub.roots.reset();
  sub.roots_file.reset();
  const Problem pr = load_problem(sub, precision, in, true);
  Json out;
  out["mode"] = pr.exact ? "exact" : "approximate";
  out["precision_bits"] = precision;
  out["zero_root_multiplicity"] = pr.zero_mult;
  out["roots"] = pr.exact ? rootspec_to_json(pr.spec) : rootspec_to_json(pr.ispec);
  return out;
}

inline Angle parse_angle(const std::string& text, mpfr_prec_t precision) {
  // "pi", "pi/4", "pi*3/8" or a plain number of radians.
  if (text.rfind("pi", 0) == 0) {
    std::string rest = text.substr(2);
    Rational r = 1;
    if (rest.empty()) {
      r = 1;
    } else if (rest[0] == '/') {
      r = 1 / parse_rational(rest.substr(1), 3);
    } else if (rest[0] == '*') {
      r = parse_rational(rest.substr(1), 3);
    } else {
      throw InputError("malformed angle '" + text + "'", 2);
    }
    return Angle::from_pi_fraction(r, precision);
  }
  return Angle::from_interval(parse_interval_scalar(text, precision));
}

inline Json run_lemma(const CliRequest& req, mpfr_prec_t precision) {
  switch (req.lemma) {
    case 1: {
      if (!req.beta || !req.phi) throw InputError("lemma 1 needs --beta and --phi");
      const Interval beta = parse_interval_scalar(*req.beta, precision);
      return report_to_json(check_lemma1(beta, parse_angle(*req.phi, precision), req.n, precision));
    }
    case 2: {
      if (!req.values) throw InputError("lemma 2 needs --values");
      std::vector<std::pair<Rational, unsigned>> roots;
      for (const auto& [token, offset] : signcert::detail::split_tokens(*req.values)) {
        roots.emplace_back(parse_rational(token, offset), 1);
      }
      return report_to_json(check_lemma2(roots));
    }
    case 3: {
      if (!req.L || !req.M) throw InputError("lemma 3 needs --L, --M and --q");
      return report_to_json(check_lemma3(parse_polynomial(*req.L), parse_polynomial(*req.M), req.q, req.strict));
    }
    default:
      throw InputError("--lemma must be 1, 2 or 3");
  }
}

inline Outcome run_once(const CliRequest& req, mpfr_prec_t precision, std::istream& in) {
  const auto& cmd = req.subcommand;
  if (cmd == "audit") return {0, run_audit(req, precision, in)};
  if (cmd == "certify-positive") return run_certify(req, true, precision, in);
  if (cmd == "certify-variations") return run_certify(req, false, precision, in);
  if (cmd == "verify") return run_verify(req, in);
  if (cmd == "roots") return {0, run_roots(req, precision, in)};
  if (cmd == "lemma-check") {
    Json body = run_lemma(req, precision);
    return {body["passed"].get<bool>() ? 0 : 1, body};
  }
  throw InputError("unknown subcommand '" + cmd + "'");
}

}  // namespace detail

inline CliResult run(const CliRequest& req, std::istream& in = std::cin) {
  if (req.format != "json" && req.format != "text") return {2, "error: --format must be json or text\n"};
  // Standard input can be consumed once; buffer it so retries see the same text.
  std::string stdin_text;
  const bool uses_stdin = req.poly == "-" || req.roots == "-" || req.cert == "-" || req.poly_file == "-" ||
                          req.roots_file == "-" || req.cert_file == "-";
  if (uses_stdin) stdin_text = detail::read_stream(in);

  mpfr_prec_t precision = req.precision;
  while (true) {
    std::istringstream buffered(stdin_text);
    try {
      if (req.precision < 64) throw InputError("--precision must be at least 64");
      auto outcome = detail::run_once(req, precision, buffered);
      if (outcome.exit_code == 3 && req.auto_precision && precision * 2 <= kMaxAutoPrecision) {
        precision *= 2;
        continue;
      }
      return {outcome.exit_code, detail::render(outcome.body, req.format)};
    } catch (const Error& e) {
      const int code = exit_code_for(e.kind());
      if (code == 3 && req.auto_precision && precision * 2 <= kMaxAutoPrecision) {
        precision *= 2;
        continue;
      }
      Json body = error_to_json(e);
      if (code == 3) body["error"]["precision_bits"] = precision;
      return {code, detail::render(body, req.format)};
    }
  }
}

/// Builds the argument parser; `req` receives the parsed values.
inline std::unique_ptr<CLI::App> make_app(CliRequest& req) {
  auto app = std::make_unique<CLI::App>(
      "Descartes sign-variation audits and multiplier certificates for real polynomials.\n"
      "Polynomials are ascending comma-separated coefficients, constant first: \"2,-3,1\" is x^2 - 3x + 2.",
      "signcert");
  app->require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool input, bool roots) {
    if (input) {
      sub->add_option("--poly", req.poly, "coefficients, constant first; '-' reads stdin");
      sub->add_option("--poly-file", req.poly_file, "file holding the coefficient list");
      if (roots) {
        sub->add_option("--roots", req.roots, "root spec JSON; '-' reads stdin");
        sub->add_option("--roots-file", req.roots_file, "file holding the root spec JSON");
      }
    }
    sub->add_option("--format", req.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--precision", req.precision, "working precision in bits (>= 64)");
    sub->add_flag("--float", req.float_mode, "use interval arithmetic even for exact input");
    sub->add_flag("--auto-precision", req.auto_precision, "double the precision on failure, up to 4096 bits");
    sub->add_option("--tolerance", req.tolerance, "root clustering radius (default 2^-(precision/4))");
  };
  add_common(app->add_subcommand("audit", "V, Z and nu = V - Z for a polynomial"), true, true);
  add_common(app->add_subcommand("certify-positive", "multiplier G with F*G free of negative coefficients"), true,
             true);
  add_common(app->add_subcommand("certify-variations", "multiplier K with V(F*K) = number of positive roots"),
             true, true);
  auto* verify = app->add_subcommand("verify", "check a certificate");
  add_common(verify, true, true);
  verify->add_option("--cert", req.cert, "certificate JSON; '-' reads stdin");
  verify->add_option("--cert-file", req.cert_file, "file holding the certificate JSON");
  add_common(app->add_subcommand("roots", "approximate and, where possible, exact roots"), true, false);
  auto* lemma = app->add_subcommand("lemma-check", "check one of the product identities numerically or exactly");
  add_common(lemma, false, false);
  lemma->add_option("--lemma", req.lemma, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  lemma->add_option("--beta", req.beta, "lemma 1: beta > 0");
  lemma->add_option("--phi", req.phi, "lemma 1: angle, e.g. pi/4 or 0.7");
  lemma->add_option("--n", req.n, "lemma 1: degree parameter (default from phi)");
  lemma->add_option("--values", req.values, "lemma 2: positive roots, comma-separated");
  lemma->add_option("--L", req.L, "lemma 3: L coefficients");
  lemma->add_option("--M", req.M, "lemma 3: M coefficients");
  lemma->add_option("--q", req.q, "lemma 3: stride q");
  lemma->add_flag("--strict", req.strict, "lemma 3: require every coefficient of L to be positive");
  return app;
}

/// Parses argv into `req`. Returns a result when parsing ends the run (help or error).
inline std::optional<CliResult> parse_args(int argc, const char* const* argv, CliRequest& req) {
  auto app = make_app(req);
  try {
    app->parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return CliResult{0, app->help()};
  } catch (const CLI::CallForAllHelp&) {
    return CliResult{0, app->help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    const Json body = {{"error", {{"kind", "input"}, {"message", e.what()}}}};
    return CliResult{2, body.dump(2) + "\n"};
  }
  for (const auto* sub : app->get_subcommands()) req.subcommand = sub->get_name();
  return std::nullopt;
}

/// Full entry point: parse, run, map errors.
inline CliResult main_entry(int argc, const char* const* argv, std::istream& in = std::cin) {
  CliRequest req;
  if (auto early = parse_args(argc, argv, req)) return *early;
  return run(req, in);
}

}  // namespace signcert::cli
