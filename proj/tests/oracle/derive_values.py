"""Independent reference values for the C++ tests, computed with sympy.

Run: python3 tests/oracle/derive_values.py
The printed values are frozen into the unit tests.
"""
import sympy as sp

x = sp.symbols("x")


def asc(p):
    return [sp.nsimplify(c) for c in reversed(sp.Poly(sp.expand(p), x).all_coeffs())]


def variations(cs):
    s = [sp.sign(c) for c in cs if c != 0]
    return sum(1 for a, b in zip(s, s[1:]) if a * b < 0)


def scaled_trig_multiplier(alpha, beta_sq):
    """g_k = beta^(n-1-k) sin((k+1)phi) * beta^(n-1)/sin(phi), built from sines."""
    beta = sp.sqrt(beta_sq)
    phi = sp.acos(alpha / beta)
    n = int(sp.ceiling(sp.pi / phi)) - 1
    g = [sp.nsimplify(sp.simplify(beta ** (n - 1 - k) * sp.sin((k + 1) * phi) * beta ** (n - 1) / sp.sin(phi)))
         for k in range(n)]
    return n, g


print("(x^2+1)(x^3-1) =", asc((x**2 + 1) * (x**3 - 1)))
print("(x-1)(x-2) =", asc((x - 1) * (x - 2)))
print("F for roots {1, +-i} =", asc((x - 1) * (x**2 + 1)))
print("V(x^3-x^2+x-1) =", variations(asc((x - 1) * (x**2 + 1))))

for alpha, beta_sq in [(1, 2), (sp.Rational(1, 2), 1), (sp.Rational(3, 2), 5)]:
    n, g = scaled_trig_multiplier(sp.nsimplify(alpha), sp.nsimplify(beta_sq))
    f = x**2 - 2 * alpha * x + beta_sq
    prod = asc(f * sum(c * x**k for k, c in enumerate(g)))
    print(f"alpha={alpha} beta^2={beta_sq}: n={n} g={g} f*g={prod}")

beta = sp.sqrt(2)
phi = sp.pi / 4
g = [beta ** (3 - 1 - k) * sp.sin((k + 1) * phi) for k in range(3)]
print("lemma1 beta=sqrt2 phi=pi/4:", [sp.simplify(c) for c in asc((x**2 - 2 * beta * sp.cos(phi) * x + 2) * sum(c * x**k for k, c in enumerate(g)))])
g = [sp.sin((k + 1) * sp.pi / 3) for k in range(2)]
print("lemma1 beta=1 phi=pi/3:", [sp.simplify(c) for c in asc((x**2 - x + 1) * sum(c * x**k for k, c in enumerate(g)))])

p = asc((x - sp.Rational(1, 2)) * (x - 3) * (x - 7))
print("lemma2 (1/2,3,7):", p, "V =", variations(p))
print("lemma3 L=x^2+x+1, M=x^3-1:", asc((x**2 + x + 1) * (x**3 - 1)))
print("lemma3 L=x^2+1, M=x^3-1:", asc((x**2 + 1) * (x**3 - 1)))

# x^2-3x+5 certificate (variations path, no positive roots): L = F*g, q = 5.
n, g = scaled_trig_multiplier(sp.Rational(3, 2), 5)
L = asc((x**2 - 3 * x + 5) * sum(c * x**k for k, c in enumerate(g)))
print("x^2-3x+5: L =", L, "q =", len(L))

# Mixed example: roots 3/2 +- i sqrt(11)/2 and 2 -> q = 5, M = x^5 - 32.
FK = asc((x**2 - 3 * x + 5) * (x - 2) * sum(c * x**k for k, c in enumerate(g)) * sum(2 ** (4 - i) * x**i for i in range(5)))
print("(x^2-3x+5)(x-2): FK =", FK, "V =", variations(FK))

# Degree-growth probe: phi = pi/2^k gives n = 2^k - 1.
print("probe n:", [int(sp.ceiling(sp.pi / (sp.pi / 2**k))) - 1 for k in range(2, 9)])
