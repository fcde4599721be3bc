#pragma once

// Exact division, gcd and squarefree decomposition over Q.

#include <utility>
#include <vector>

#include "signcert/polynomial.hpp"

namespace signcert {

using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  const Rational inv = 1 / p.leading();
  return inv * p;
}

/// Returns (quotient, remainder) with deg remainder < deg divisor.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                               const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<Rational> rem(a.coeffs());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + db] / lead;
    quot[k] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= factor * b[j];
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

inline bool divides(const RationalPolynomial& divisor, const RationalPolynomial& p) {
  return divmod(p, divisor).second.is_zero();
}

inline RationalPolynomial exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("exact_quotient: nonzero remainder");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

/// Yun's algorithm: returns factors A_1, A_2, ... (monic, pairwise coprime,
/// squarefree) with p / lc(p) = prod A_i^i. Entries may be 1.
inline std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.degree() < 1) throw DomainError("squarefree_decomposition: degree must be at least 1");
  const RationalPolynomial f = make_monic(p);
  const RationalPolynomial df = f.derivative();
  RationalPolynomial a0 = gcd(f, df);
  RationalPolynomial b = exact_quotient(f, a0);
  RationalPolynomial c = exact_quotient(df, a0);
  RationalPolynomial d = c - b.derivative();
  std::vector<RationalPolynomial> out;
  while (b.degree() > 0) {
    RationalPolynomial a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace signcert
