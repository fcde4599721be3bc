// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "signcert/cli.hpp"
#include "signcert/signcert.hpp"

using namespace signcert;
using P = Polynomial<Rational>;
using R = Root<Rational>;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Rational rational_from(double v) {
  Rational r(v);
  r.canonicalize();
  return r;
}

Outcome c1_examples() {
  const auto a = descartes_audit(RootSpec<Rational>{{R::real(Rational(1)), R::real(Rational(2))}});
  const auto b = descartes_audit(RootSpec<Rational>{{R::complex_squared(Rational(3, 2), Rational(11, 4))}});
  const bool ok = a.V == 2 && a.Z == 2 && a.nu == 0 && b.V == 2 && b.Z == 0 && b.nu == 2;
  // The coefficient route must agree with the root route.
  const bool coeff = sign_variations(parse_polynomial("2,-3,1")) == 2 && sign_variations(parse_polynomial("5,-3,1")) == 2;
  std::ostringstream d;
  d << "x^2-3x+2 -> (" << a.V << "," << a.Z << "," << a.nu << "), x^2-3x+5 -> (" << b.V << "," << b.Z << "," << b.nu
    << ")";
  return {ok && coeff, d.str()};
}

Outcome c2_lemma1() {
  std::mt19937_64 rng(20240502);
  std::uniform_real_distribution<double> beta_dist(0.0, 10.0);
  const double half_pi = 1.5707963267948966;
  std::uniform_real_distribution<double> phi_dist(0.05, half_pi - 0.05);
  unsigned failures = 0;
  Float worst(256);
  for (int i = 0; i < 500; ++i) {
    double b = beta_dist(rng);
    while (b <= 0.0) b = beta_dist(rng);
    const Interval beta(rational_from(b), 256);
    const Interval phi(rational_from(phi_dist(rng)), 256);
    const auto r = check_lemma1(beta, Angle::from_interval(phi), std::nullopt, 256);
    if (!r.passed || r.witnesses.size() < 2) ++failures;
    // Second witness: largest deviation bound relative to the largest coefficient.
    Float dev(256);
    mpfr_set_str(dev.get(), r.witnesses.at(1).value.c_str(), 10, MPFR_RNDU);
    if (worst < dev) worst = dev;
  }
  std::ostringstream d;
  d << "500 pairs, " << failures << " failures, tracked bound 2^-128 relative, max relative deviation "
    << worst.to_string(3, MPFR_RNDU);
  return {failures == 0 && !(pow2(-128, 256) < worst), d.str()};
}

oracle::GenConfig positivity_config(std::uint64_t seed) {
  oracle::GenConfig cfg;
  cfg.lambda1 = seed % 3;
  cfg.lambda2 = (seed / 3) % 3;
  cfg.lambda3 = 1 + (seed / 9) % 2;
  cfg.max_mult = 3;
  cfg.max_degree = 12;
  cfg.imaginary_axis_fraction = 0.2;
  cfg.seed = 1000 + seed;
  return cfg;
}

Outcome c3_positivity() {
  unsigned failures = 0, strict = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto spec = oracle::random_rootspec(positivity_config(seed));
    const auto cert = certify_positive(partition_roots(spec));
    const auto report = verify_certificate(expand_rootspec(spec), cert);
    const P FG = cert.F * cert.G;
    bool ok = report.passed && sgn(FG[0]) > 0 && sgn(FG.leading()) > 0;
    bool all_positive = true;
    for (const auto& c : FG.coeffs()) {
      if (sgn(c) < 0) ok = false;
      if (sgn(c) == 0) all_positive = false;
    }
    if (!ok) ++failures;
    if (all_positive) ++strict;
  }
  std::ostringstream d;
  d << "200 specs, " << failures << " failures; F*G has no negative coefficient and positive ends in every case ("
    << strict << "/200 without zero coefficients)";
  return {failures == 0, d.str()};
}

Outcome c4_variations() {
  unsigned failures = 0, interval_failures = 0, with_lambda3 = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda4 = 1 + seed % 4;
    cfg.lambda3 = (seed / 4) % 2;
    cfg.lambda1 = (seed / 8) % 2;
    cfg.lambda2 = (seed / 16) % 2;
    cfg.max_mult = cfg.lambda4 <= 2 ? 2 : 1;  // keeps p <= 4
    cfg.max_degree = 10;
    cfg.seed = 5000 + seed;
    const auto spec = oracle::random_rootspec(cfg);
    const auto part = partition_roots(spec);
    const unsigned p = count_positive_roots(part);
    if (!part.lambda3.empty()) ++with_lambda3;
    const auto cert = certify_variations(part);
    const bool ok = p >= 1 && p <= 4 && cert.p == p && sign_variations(cert.FK) == p && cert.nu_FK == 0 &&
                    cert.F * cert.K == cert.L * cert.M && cert.FK == cert.L * cert.M &&
                    verify_certificate(expand_rootspec(spec), cert).passed;
    if (!ok) {
      ++failures;
      std::fprintf(stderr, "  C4 seed %llu: p = %u, V = %u\n", static_cast<unsigned long long>(seed), p, cert.V_FK);
    }
    const auto icert = certify_variations(to_interval(part, 256), CertOptions{256});
    const bool iok = icert.V_FK == p && icert.nu_FK == 0 && overlaps(icert.F * icert.K, icert.L * icert.M) &&
                     verify_certificate(icert.F, icert).passed;
    if (!iok) ++interval_failures;
  }
  std::ostringstream d;
  d << "200 specs (" << with_lambda3 << " with lambda3), exact failures " << failures << ", interval failures "
    << interval_failures;
  return {failures == 0 && interval_failures == 0, d.str()};
}

Outcome c5_parity() {
  unsigned failures = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = seed % 3;
    cfg.lambda2 = (seed / 3) % 2;
    cfg.lambda3 = (seed / 6) % 3;
    cfg.lambda4 = (seed / 18) % 4;
    if (cfg.lambda1 + cfg.lambda2 + cfg.lambda3 + cfg.lambda4 == 0) cfg.lambda4 = 1;
    cfg.max_mult = 3;
    cfg.max_degree = 16;
    cfg.imaginary_axis_fraction = 0.2;
    cfg.seed = 9000 + seed;
    const auto spec = oracle::random_rootspec(cfg);
    const auto audit = descartes_audit(spec);
    const unsigned brute = oracle::brute_variations(expand_rootspec(spec).coeffs());
    if (audit.V < audit.Z || (audit.V - audit.Z) % 2 != 0 || audit.V != brute) ++failures;
  }
  return {failures == 0, "1000 specs, " + std::to_string(failures) + " failures"};
}

Outcome c6_lemma2() {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<long> num(1, 50), den(1, 12);
  unsigned failures = 0, cases = 0;
  for (unsigned m = 1; m <= 30; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::pair<Rational, unsigned>> roots;
      for (unsigned i = 0; i < m; ++i) {
        Rational a(num(rng), den(rng));
        a.canonicalize();
        roots.emplace_back(a, 1);
      }
      ++cases;
      if (!check_lemma2(roots).passed) ++failures;
    }
  }
  return {failures == 0, std::to_string(cases) + " products, m = 1..30, " + std::to_string(failures) + " failures"};
}

Outcome c7_lemma3() {
  std::mt19937_64 rng(707);
  unsigned failures = 0, interior_zero = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    oracle::GenConfig cfg;
    cfg.lambda1 = i % 2;
    cfg.lambda2 = 1 + i % 2;
    cfg.lambda3 = (i / 2) % 2;
    cfg.max_mult = 2;
    cfg.max_degree = 10;
    cfg.imaginary_axis_fraction = i % 3 == 0 ? 1.0 : 0.0;
    cfg.seed = 7000 + i;
    const auto part = partition_roots(oracle::random_rootspec(cfg));
    const auto built = build_L_and_q(part);
    const P& L = built.L;
    bool zero_inside = false;
    for (long k = 1; k < L.degree(); ++k) zero_inside = zero_inside || sgn(L[static_cast<std::size_t>(k)]) == 0;
    if (zero_inside) ++interior_zero;
    const unsigned q = built.q + static_cast<unsigned>(std::uniform_int_distribution<int>(0, 2)(rng));
    P M = P::one();
    const int roots = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int r = 0; r < roots; ++r) {
      Rational a(std::uniform_int_distribution<long>(1, 20)(rng), std::uniform_int_distribution<long>(1, 5)(rng));
      a.canonicalize();
      M = M * binomial_factor(a, q);
    }
    const auto report = check_lemma3(L, M, q);
    if (!report.passed || sign_variations(L * M) != sign_variations(M)) ++failures;
  }
  std::ostringstream d;
  d << "300 triples, " << interior_zero << " with interior zeros in L, " << failures << " failures";
  return {failures == 0 && interior_zero >= 50, d.str()};
}

Outcome c8_golden() {
  std::ifstream f(std::string(SIGNCERT_SOURCE_DIR) + "/tests/golden/worked_example.json");
  if (!f) return {false, "golden file missing"};
  std::stringstream ss;
  ss << f.rdbuf();
  const Json golden = Json::parse(ss.str());
  const char* argv[] = {"signcert", "certify-variations", "--poly", "-1,1,-1,1"};
  std::istringstream in;
  const auto result = cli::main_entry(4, argv, in);
  const Json out = Json::parse(result.output);
  const P FK = parse_polynomial(out["FK"].get<std::string>());
  const bool ok = result.exit_code == 0 && out == golden && out["q"] == 3 && out["K"] == "1,1,1" &&
                  FK == parse_polynomial("-1,0,-1,1,0,1") && sign_variations(FK) == 1 && out["V_FK"] == 1;
  return {ok, "q = " + out["q"].dump() + ", K = " + out["K"].get<std::string>() + ", FK = " +
                  out["FK"].get<std::string>() + ", V = " + std::to_string(sign_variations(FK))};
}

Outcome c9_roundtrip() {
  unsigned failures = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = seed % 2;
    cfg.lambda2 = (seed / 2) % 2;
    cfg.lambda3 = (seed / 4) % 2;
    cfg.lambda4 = 1 + seed % 3;
    cfg.max_mult = 3;
    cfg.max_degree = 10;
    cfg.min_separation = Rational(1, 4);
    cfg.seed = 11000 + seed;
    const auto spec = oracle::random_rootspec(cfg);
    const auto found = find_roots(expand_rootspec(spec));
    bool ok = found.approx.size() == spec.roots.size();
    for (const auto& r : spec.roots) {
      const double re = r.re.get_d();
      const double im = std::sqrt(r.im_sq.get_d());
      bool matched = false;
      for (const auto& a : found.approx) {
        const double err = std::hypot(a.re.to_double() - re, a.im.to_double() - im);
        if (err < 1e-10 && a.mult == r.mult) {
          matched = true;
          worst = std::max(worst, err);
        }
      }
      ok = ok && matched;
    }
    if (!ok) ++failures;
  }
  std::ostringstream d;
  d << "100 specs, " << failures << " failures, max error " << worst;
  return {failures == 0, d.str()};
}

Outcome c10_probe() {
  bool ok = true;
  long last_degree = -1;
  std::ostringstream d;
  d << "n =";
  for (unsigned k = 2; k <= 8; ++k) {
    const Interval phi = Interval::pi(512) / Interval(1L << k);
    const Root<Interval> root = Root<Interval>::complex_squared(cos(phi), sqr(sin(phi)));
    RootSpec<Interval> spec{{root, Root<Interval>::real(Interval(1L))}};
    const auto cert = certify_variations(partition_roots(spec), CertOptions{512});
    const unsigned n = cert.lambda3.at(0).multiplier.angle.n;
    const unsigned expected = (1U << k) - 1;  // ceil(pi/phi) - 1
    ok = ok && n == expected && cert.FK.degree() > last_degree && verify_certificate(cert.F, cert).passed;
    last_degree = cert.FK.degree();
    d << " " << n;
  }
  d << "; final deg(F*K) = " << last_degree;
  return {ok, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "introductory audits", 1, c1_examples},
      {2, "trigonometric product identity", 10, c2_lemma1},
      {3, "positivity certificates", 60, c3_positivity},
      {4, "variation certificates", 120, c4_variations},
      {5, "Descartes parity", 30, c5_parity},
      {6, "positive-root products alternate", 10, c6_lemma2},
      {7, "sparse product preserves V", 20, c7_lemma3},
      {8, "worked example golden file", 10, c8_golden},
      {9, "root recovery round trip", 60, c9_roundtrip},
      {10, "degree growth probe", 30, c10_probe},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = out.passed && in_time;
    if (!pass) ++failed;
    std::printf("%s C%d %s: %s [%.2fs / %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs,
                c.limit_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
