#pragma once

// Reference implementations and seeded generators for tests.
// Nothing here reuses the optimized code it is meant to check.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "signcert/error.hpp"
#include "signcert/roots.hpp"

namespace signcert::oracle {

struct GenConfig {
  /// Number of distinct roots per class.
  unsigned lambda1 = 0, lambda2 = 0, lambda3 = 0, lambda4 = 0;
  unsigned max_mult = 1;
  /// Total degree cap (real roots once, pairs twice, times multiplicity); 0 = none.
  unsigned max_degree = 0;
  /// Root components are p/q with 1 <= q <= max_denominator and |p/q| <= max_magnitude.
  long max_magnitude = 8;
  long max_denominator = 4;
  /// Fraction of lambda2 roots placed on the imaginary axis (re = 0).
  double imaginary_axis_fraction = 0.0;
  /// Lower bound on im/re for lambda3 roots; keeps the trigonometric degree n moderate.
  Rational min_lambda3_slope = Rational(1, 8);
  /// Minimum distance between distinct roots (conjugates included) and from the origin.
  std::optional<Rational> min_separation;
  std::uint64_t seed = 0;
  bool exact = true;
};

namespace detail {

class Sampler {
 public:
  explicit Sampler(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  /// Uniform positive rational p/q in (0, max_magnitude].
  Rational positive() {
    const long q = uniform(1, cfg_.max_denominator);
    const long p = uniform(1, cfg_.max_magnitude * q);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

 private:
  const GenConfig& cfg_;
  std::mt19937_64 rng_;
};

// Squared distance between a + ib and c + id.
inline Rational dist_sq(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return (a - c) * (a - c) + (b - d) * (b - d);
}

}  // namespace detail

/// Deterministic for a fixed config. Components are drawn as (re, im) with
/// rational im, so quadratic factors are rational too.
inline RootSpec<Rational> random_rootspec(const GenConfig& cfg) {
  if (cfg.max_mult < 1 || cfg.max_magnitude < 1 || cfg.max_denominator < 1) {
    throw GenerationError("random_rootspec: bounds must be positive");
  }
  detail::Sampler s(cfg);
  struct Point {
    Rational re, im;
  };
  std::vector<Point> placed;
  const Rational sep_sq = cfg.min_separation ? *cfg.min_separation * *cfg.min_separation : Rational(0);

  auto acceptable = [&](const Rational& re, const Rational& im) {
    if (detail::dist_sq(re, im, 0, 0) <= sep_sq) return false;
    if (sgn(im) != 0 && 4 * im * im <= sep_sq) return false;  // distance to its own conjugate
    for (const auto& p : placed) {
      for (const Rational& sign_im : {p.im, Rational(-p.im)}) {
        const Rational d = detail::dist_sq(re, im, p.re, sign_im);
        if (sgn(d) == 0 || d <= sep_sq) return false;
      }
    }
    return true;
  };

  RootSpec<Rational> spec;
  auto place = [&](auto&& draw) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      auto [re, im] = draw();
      if (!acceptable(re, im)) continue;
      placed.push_back({re, im});
      const unsigned mult = static_cast<unsigned>(s.uniform(1, cfg.max_mult));
      spec.roots.push_back(sgn(im) == 0 ? Root<Rational>::real(re, mult) : Root<Rational>::complex(re, im, mult));
      return;
    }
    throw GenerationError("random_rootspec: cannot satisfy the separation constraint");
  };

  for (unsigned i = 0; i < cfg.lambda1; ++i) place([&] { return std::pair<Rational, Rational>(-s.positive(), 0); });
  for (unsigned i = 0; i < cfg.lambda2; ++i) {
    place([&] {
      const bool axis = s.unit() < cfg.imaginary_axis_fraction;
      return std::pair<Rational, Rational>(axis ? Rational(0) : Rational(-s.positive()), s.positive());
    });
  }
  for (unsigned i = 0; i < cfg.lambda3; ++i) {
    place([&] {
      const Rational re = s.positive();
      Rational im = s.positive();
      if (im < re * cfg.min_lambda3_slope) im = re * cfg.min_lambda3_slope + im / 16;
      return std::pair<Rational, Rational>(re, im);
    });
  }
  for (unsigned i = 0; i < cfg.lambda4; ++i) place([&] { return std::pair<Rational, Rational>(s.positive(), 0); });

  if (cfg.max_degree > 0) {
    // Lower the largest multiplicities until the degree cap holds.
    while (spec.declared_degree() > cfg.max_degree) {
      Root<Rational>* top = nullptr;
      for (auto& r : spec.roots) {
        if (r.mult > 1 && (!top || r.degree() > top->degree())) top = &r;
      }
      if (!top) throw GenerationError("random_rootspec: class counts exceed the degree cap");
      --top->mult;
    }
  }
  return spec;
}

/// Literal pair count: (j, k) with j < k, a_j a_k < 0 and a_i = 0 strictly between.
template <Scalar S>
unsigned brute_variations(const std::vector<S>& a) {
  unsigned count = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = j + 1; k < a.size(); ++k) {
      bool zeros_between = true;
      for (std::size_t i = j + 1; i < k; ++i) {
        if (ScalarOps<S>::sign(a[i]) != 0) {
          zeros_between = false;
          break;
        }
      }
      if (zeros_between && ScalarOps<S>::sign(a[j]) * ScalarOps<S>::sign(a[k]) < 0) ++count;
    }
  }
  return count;
}

/// Schoolbook product on raw coefficient vectors.
inline std::vector<Rational> naive_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
  return out;
}

/// Exact value of sum a_i x^i by direct powers.
inline Rational naive_evaluate(const std::vector<Rational>& a, const Rational& x) {
  Rational sum = 0, xp = 1;
  for (const auto& c : a) {
    sum += c * xp;
    xp *= x;
  }
  return sum;
}

/// Sampling check, not a proof: p > 0 at `samples` geometrically spaced
/// points of (0, range_max], from range_max * 1e-6 up to range_max.
inline bool grid_positive_check(const std::vector<Rational>& p, unsigned samples, const Rational& range_max) {
  if (samples < 1 || sgn(range_max) <= 0) throw DomainError("grid_positive_check: need samples >= 1, range_max > 0");
  const double span = 6.0;  // decades below range_max
  for (unsigned i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.0 : span * static_cast<double>(samples - 1 - i) / static_cast<double>(samples - 1);
    const Rational x = range_max * Rational(std::pow(10.0, -t));
    if (sgn(naive_evaluate(p, x)) <= 0) return false;
  }
  return true;
}

/// Seeded uniform points of (0, range_max], as exact rationals.
inline std::vector<Rational> random_points(unsigned count, const Rational& range_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Rational> out;
  for (unsigned i = 0; i < count; ++i) {
    double t = 1.0 - u(rng);  // (0, 1]
    out.push_back(range_max * Rational(t));
  }
  return out;
}

}  // namespace signcert::oracle
