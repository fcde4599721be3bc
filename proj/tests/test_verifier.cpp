#include <gtest/gtest.h>

#include "signcert/oracle.hpp"
#include "signcert/text.hpp"
#include "signcert/verifier.hpp"

using namespace signcert;
using P = Polynomial<Rational>;
using R = Root<Rational>;

namespace {

P poly(const char* text) { return parse_polynomial(text); }

RootPartition<Rational> part_of(std::initializer_list<R> roots) {
  return partition_roots(RootSpec<Rational>{roots});
}

const CheckReport* sub(const CheckReport& r, const std::string& name) {
  for (const auto& s : r.subchecks) {
    if (s.check == name) return &s;
  }
  return nullptr;
}

}  // namespace

TEST(Audit, Examples) {
  const auto a = descartes_audit(RootSpec<Rational>{{R::real(Rational(1)), R::real(Rational(2))}});
  EXPECT_EQ(a.V, 2u);
  EXPECT_EQ(a.Z, 2u);
  EXPECT_EQ(a.nu, 0u);
  const auto b = descartes_audit(RootSpec<Rational>{{R::complex_squared(Rational(3, 2), Rational(11, 4))}});
  EXPECT_EQ(b.V, 2u);
  EXPECT_EQ(b.Z, 0u);
  EXPECT_EQ(b.nu, 2u);
  const auto c = descartes_audit(RootSpec<Rational>{{R::real(Rational(0), 3), R::real(Rational(4))}});
  EXPECT_EQ(c.zero_root_multiplicity, 3u);
  EXPECT_EQ(c.V, 1u);
}

TEST(Audit, ParityHoldsOnRandomSpecs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = seed % 2;
    cfg.lambda2 = seed % 3 == 0;
    cfg.lambda3 = seed % 3;
    cfg.lambda4 = seed % 4;
    cfg.max_mult = 3;
    cfg.max_degree = 12;
    cfg.seed = seed;
    const auto spec = oracle::random_rootspec(cfg);
    if (spec.roots.empty()) continue;
    const auto a = descartes_audit(spec);
    EXPECT_EQ(a.V, a.Z + a.nu);
    EXPECT_EQ(a.nu % 2, 0u);
    EXPECT_EQ(a.V, oracle::brute_variations(expand_rootspec(spec).coeffs()));
  }
}

TEST(PositiveCoefficients, ZerosAllowedUnlessStrict) {
  EXPECT_TRUE(check_positive_coefficients(poly("1,0,2"), false).passed);
  const auto strict = check_positive_coefficients(poly("1,0,2"), true);
  EXPECT_FALSE(strict.passed);
  ASSERT_EQ(strict.witnesses.size(), 1u);
  EXPECT_EQ(strict.witnesses[0].degree, 1);
  const auto neg = check_positive_coefficients(poly("2,-3,1"), false);
  EXPECT_FALSE(neg.passed);
  EXPECT_EQ(neg.witnesses[0].degree, 1);
  EXPECT_EQ(neg.witnesses[0].value, "-3");
  EXPECT_THROW(check_positive_coefficients(P{}, false), DomainError);
  EXPECT_THROW(check_positive_coefficients(parse_interval_polynomial("1,0+-1e-9", 64), false), PrecisionError);
}

TEST(Lemma1, ExactAtQuarterPi) {
  const Interval beta = sqrt(Interval(Rational(2), 256));
  const auto r = check_lemma1(beta, Angle::from_pi_fraction(Rational(1, 4), 256));
  EXPECT_TRUE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].note, "max deviation");
}

TEST(Lemma1, RightAngleIsExact) {
  const auto r = check_lemma1(Interval(Rational(3), 256), Angle::from_pi_fraction(Rational(1, 2), 256));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.tolerance, "0");
}

TEST(Lemma1, AnyDegreeAndRadianAngles) {
  const Interval beta(Rational(7, 5), 256);
  for (unsigned n = 1; n <= 9; ++n) {
    EXPECT_TRUE(check_lemma1(beta, Angle::from_interval(Interval(Rational(7, 10), 256)), n).passed) << n;
  }
  EXPECT_TRUE(check_lemma1(beta, Angle::from_interval(Interval(Rational(1, 20), 256))).passed);
}

TEST(Lemma1, Preconditions) {
  EXPECT_THROW(check_lemma1(Interval(-1L), Angle::from_pi_fraction(Rational(1, 4), 256)), DomainError);
  EXPECT_THROW(check_lemma1(Interval(1L), Angle::from_pi_fraction(Rational(1), 256)), DomainError);
}

TEST(Lemma2, Examples) {
  const auto r = check_lemma2<Rational>({{Rational(1, 2), 1}, {Rational(3), 1}, {Rational(7), 1}});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(pow(poly("-1/2,1"), 1) * poly("-3,1") * poly("-7,1"), poly("-21/2,26,-21/2,1"));
  EXPECT_TRUE(check_lemma2<Rational>({{Rational(2), 5}, {Rational(1, 3), 4}}).passed);
  EXPECT_THROW(check_lemma2<Rational>({{Rational(-1), 1}}), DomainError);
}

TEST(Lemma3, Examples) {
  EXPECT_EQ(poly("1,1,1") * poly("-1,0,0,1"), poly("-1,-1,-1,1,1,1"));
  EXPECT_EQ(poly("1,0,1") * poly("-1,0,0,1"), poly("-1,0,-1,1,0,1"));
  EXPECT_TRUE(check_lemma3(poly("1,1,1"), poly("-1,0,0,1"), 3).passed);
  EXPECT_TRUE(check_lemma3(poly("1,0,1"), poly("-1,0,0,1"), 3).passed);
  EXPECT_THROW(check_lemma3(poly("1,0,1"), poly("-1,0,0,1"), 3, true), DomainError);
  EXPECT_THROW(check_lemma3(poly("1,1,1,1"), poly("-1,0,0,1"), 3), DomainError);
  EXPECT_THROW(check_lemma3(poly("1,-1,1"), poly("-1,0,0,1"), 3), DomainError);
  EXPECT_THROW(check_lemma3(poly("1,1,1"), poly("-1,1,0,1"), 3), DomainError);
}

TEST(VerifyCertificate, AcceptsBuiltCertificates) {
  const auto part = part_of({R::real(Rational(1)), R::complex(0, 1)});
  const auto cert = certify_variations(part);
  const auto report = verify_certificate(cert.F, cert);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.mode, "exact");
  EXPECT_EQ(report.subchecks.size(), 8u);
  for (const auto& s : report.subchecks) EXPECT_TRUE(s.passed) << s.check;

  const auto pos = certify_positive(part_of({R::complex_squared(Rational(3, 2), Rational(11, 4))}));
  EXPECT_TRUE(verify_certificate(pos.F, pos).passed);
}

TEST(VerifyCertificate, RejectsNegativeProduct) {
  Certificate<Rational> cert;
  cert.kind = CertKind::positivity;
  cert.F = poly("2,-3,1");
  cert.G = P::one();
  cert.H = P::one();
  cert.K = P::one();
  cert.L = cert.F;
  cert.M = P::one();
  cert.FK = cert.F;
  cert.q = 3;
  const auto report = verify_certificate(cert.F, cert);
  EXPECT_FALSE(report.passed);
  const auto* fg = sub(report, "FG_positive");
  ASSERT_NE(fg, nullptr);
  EXPECT_FALSE(fg->passed);
  ASSERT_FALSE(fg->witnesses.empty());
  EXPECT_EQ(fg->witnesses[0].degree, 1);
}

TEST(VerifyCertificate, DetectsTampering) {
  const auto good = certify_variations(part_of({R::real(Rational(2)), R::complex(1, 1)}));
  auto bad_k = good;
  bad_k.K = bad_k.K + P::one();
  EXPECT_FALSE(verify_certificate(good.F, bad_k).passed);

  auto bad_p = good;
  bad_p.p = 2;
  EXPECT_FALSE(verify_certificate(good.F, bad_p).passed);

  auto bad_f = good;
  EXPECT_FALSE(verify_certificate(poly("-2,1,1"), bad_f).passed);

  // A certificate that claims a root that is not a root of F.
  auto bad_root = good;
  bad_root.lambda4[0].root.re = Rational(3);
  EXPECT_FALSE(verify_certificate(good.F, bad_root).passed);
}

TEST(VerifyCertificate, RandomClosedLoop) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = seed % 2;
    cfg.lambda2 = seed % 3 == 1;
    cfg.lambda3 = 1;
    cfg.lambda4 = seed % 4;
    cfg.max_mult = 2;
    cfg.max_degree = 10;
    cfg.seed = seed;
    const auto part = partition_roots(oracle::random_rootspec(cfg));
    const auto cert = certify_variations(part);
    EXPECT_TRUE(verify_certificate(cert.F, cert).passed) << "seed " << seed;
    const auto icert = certify_variations(to_interval(part, 256), CertOptions{256});
    EXPECT_TRUE(verify_certificate(icert.F, icert).passed) << "seed " << seed;
  }
}

TEST(VerifyCertificate, PositivityImpliesPositiveValues) {
  // Converse spot check: a verified positivity certificate means F > 0 on sampled points.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = 1;
    cfg.lambda2 = 1;
    cfg.lambda3 = 1 + seed % 2;
    cfg.max_mult = 2;
    cfg.max_degree = 12;
    cfg.seed = seed;
    const auto cert = certify_positive(partition_roots(oracle::random_rootspec(cfg)));
    ASSERT_TRUE(verify_certificate(cert.F, cert).passed);
    for (const auto& x : oracle::random_points(200, Rational(1000), seed)) {
      EXPECT_GT(sgn(oracle::naive_evaluate(cert.F.coeffs(), x)), 0) << "seed " << seed;
    }
  }
}
