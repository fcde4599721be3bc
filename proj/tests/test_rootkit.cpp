#include <gtest/gtest.h>

#include "signcert/euclid.hpp"
#include "signcert/find_roots.hpp"
#include "signcert/oracle.hpp"
#include "signcert/roots.hpp"
#include "signcert/text.hpp"

using namespace signcert;
using P = Polynomial<Rational>;
using R = Root<Rational>;

namespace {

P poly(const char* text) { return parse_polynomial(text); }

RootSpec<Rational> spec_of(std::initializer_list<R> roots) { return RootSpec<Rational>{roots}; }

bool same_roots(RootSpec<Rational> a, RootSpec<Rational> b) {
  auto pa = partition_roots(a), pb = partition_roots(b);
  auto eq = [](const std::vector<R>& x, const std::vector<R>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].re != y[i].re || x[i].im_sq != y[i].im_sq || x[i].mult != y[i].mult) return false;
    }
    return true;
  };
  return eq(pa.lambda1, pb.lambda1) && eq(pa.lambda2, pb.lambda2) && eq(pa.lambda3, pb.lambda3) &&
         eq(pa.lambda4, pb.lambda4);
}

}  // namespace

TEST(Partition, ClassifiesEachRegion) {
  const auto spec = spec_of({R::real(Rational(-1)), R::complex(0, 2), R::complex(-1, 1), R::complex(3, 1),
                             R::real(Rational(2), 2)});
  const auto part = partition_roots(spec);
  EXPECT_EQ(part.lambda1.size(), 1u);
  EXPECT_EQ(part.lambda2.size(), 2u);  // the imaginary axis belongs with alpha <= 0
  EXPECT_EQ(part.lambda3.size(), 1u);
  EXPECT_EQ(part.lambda4.size(), 1u);
  EXPECT_EQ(count_positive_roots(part), 2u);
  EXPECT_EQ(part.degree(), 1u + 4u + 2u + 2u);
}

TEST(Partition, RejectsOriginAndBadSpecs) {
  EXPECT_THROW(partition_roots(spec_of({R::real(Rational(0))})), DomainError);
  EXPECT_THROW(partition_roots(spec_of({R::real(Rational(1), 0)})), DomainError);
  EXPECT_THROW(partition_roots(spec_of({R::complex_squared(1, -1)})), DomainError);
}

TEST(Partition, IntervalStraddlingZeroIsUnclassifiable) {
  RootSpec<Interval> spec;
  spec.roots.push_back(Root<Interval>::real(Interval(Float(-1L, 64), Float(1L, 64))));
  EXPECT_THROW(partition_roots(spec), ClassificationError);
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand_rootspec(spec_of({R::real(Rational(1)), R::real(Rational(2))})), poly("2,-3,1"));
  EXPECT_EQ(expand_rootspec(spec_of({R::real(Rational(1)), R::complex(0, 1)})), poly("-1,1,-1,1"));
  EXPECT_EQ(expand_rootspec(spec_of({R::complex_squared(Rational(3, 2), Rational(11, 4))})), poly("5,-3,1"));
  EXPECT_EQ(expand_rootspec(spec_of({R::real(Rational(1), 3)})), poly("-1,3,-3,1"));
  const auto f = expand_from_partition(partition_roots(spec_of({R::real(Rational(-2)), R::real(Rational(5))})));
  EXPECT_EQ(f.F1, poly("2,1"));
  EXPECT_EQ(f.F4, poly("-5,1"));
  EXPECT_EQ(f.F2, P::one());
  EXPECT_EQ(f.F, poly("-10,-3,1"));
}

TEST(Expand, ZeroRootsAreRemovedSeparately) {
  auto spec = spec_of({R::real(Rational(0), 2), R::real(Rational(3))});
  EXPECT_EQ(expand_rootspec(spec), poly("0,0,-3,1"));
  EXPECT_EQ(remove_zero_roots(spec), 2u);
  EXPECT_EQ(spec.roots.size(), 1u);
}

TEST(Expand, NonpositiveFactorsHavePositiveCoefficients) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = 2;
    cfg.lambda2 = 2;
    cfg.max_mult = 3;
    cfg.imaginary_axis_fraction = 0.3;
    cfg.seed = seed;
    const auto f = expand_from_partition(partition_roots(oracle::random_rootspec(cfg)));
    for (const auto* p : {&f.F1, &f.F2}) {
      for (const auto& c : p->coeffs()) EXPECT_GE(sgn(c), 0);
      EXPECT_GT(sgn((*p)[0]), 0);
    }
    EXPECT_EQ(f.F.leading(), 1);
  }
}

TEST(Euclid, DivisionGcdSquarefree) {
  auto [q, r] = divmod(poly("2,-3,1"), poly("-1,1"));
  EXPECT_EQ(q, poly("-2,1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(poly("2,-3,1"), poly("-3,4,-1")), poly("-1,1"));
  EXPECT_TRUE(divides(poly("1,0,1"), poly("-1,0,-1,1,0,1")));
  EXPECT_FALSE(divides(poly("1,1"), poly("1,0,1")));
  EXPECT_EQ(make_monic(poly("4,2")), poly("2,1"));
  // (x-1)^3 (x+2): A1 = x + 2, A2 = 1, A3 = x - 1
  const auto parts = squarefree_decomposition(pow(poly("-1,1"), 3) * poly("2,1"));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], poly("2,1"));
  EXPECT_EQ(parts[1], P::one());
  EXPECT_EQ(parts[2], poly("-1,1"));
}

TEST(FindRoots, RecoversExactRoots) {
  const auto a = find_roots(poly("2,-3,1"));
  ASSERT_TRUE(a.exact);
  EXPECT_TRUE(same_roots(*a.exact, spec_of({R::real(Rational(1)), R::real(Rational(2))})));

  const auto b = find_roots(poly("1,0,1"));
  ASSERT_TRUE(b.exact);
  EXPECT_TRUE(same_roots(*b.exact, spec_of({R::complex(0, 1)})));

  const auto c = find_roots(poly("1,-2,1"));
  ASSERT_TRUE(c.exact);
  EXPECT_TRUE(same_roots(*c.exact, spec_of({R::real(Rational(1), 2)})));

  const auto d = find_roots(poly("5,-3,1"));
  ASSERT_TRUE(d.exact);
  EXPECT_TRUE(same_roots(*d.exact, spec_of({R::complex_squared(Rational(3, 2), Rational(11, 4))})));
}

TEST(FindRoots, IrrationalRootsFallBackToEnclosures) {
  const auto r = find_roots(poly("-2,0,1"));
  EXPECT_FALSE(r.exact);
  const auto part = partition_roots(r.enclosures);
  ASSERT_EQ(part.lambda1.size(), 1u);
  ASSERT_EQ(part.lambda4.size(), 1u);
  const Interval two(Rational(2), 256);
  EXPECT_TRUE(overlaps(sqr(part.lambda4[0].re), two));
  EXPECT_TRUE(overlaps(sqr(part.lambda1[0].re), two));
}

TEST(FindRoots, IntervalInputUsesClustering) {
  const auto r = find_roots(parse_interval_polynomial("1,-2,1", 256));
  ASSERT_EQ(r.enclosures.roots.size(), 1u);
  EXPECT_EQ(r.enclosures.roots[0].mult, 2u);
}

TEST(FindRoots, Preconditions) {
  EXPECT_THROW(find_roots(poly("0,1")), DomainError);
  EXPECT_THROW(find_roots(poly("3")), DomainError);
}

TEST(FindRoots, RandomRoundTrip) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracle::GenConfig cfg;
    cfg.lambda1 = seed % 2;
    cfg.lambda2 = 1;
    cfg.lambda3 = 1;
    cfg.lambda4 = 1 + seed % 2;
    cfg.max_mult = 2;
    cfg.max_degree = 10;
    cfg.min_separation = Rational(1, 4);
    cfg.seed = seed;
    const auto spec = oracle::random_rootspec(cfg);
    const P F = expand_rootspec(spec);
    const auto found = find_roots(F);
    ASSERT_TRUE(found.exact) << "seed " << seed;
    EXPECT_TRUE(same_roots(*found.exact, spec)) << "seed " << seed;
    EXPECT_EQ(expand_rootspec(*found.exact), F);
  }
}
