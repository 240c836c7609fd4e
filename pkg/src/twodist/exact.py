"""Tolerance-free re-decision of the spherical test.

Everything here works over the integers: characteristic polynomials come
from Faddeev-LeVerrier (its divisions are exact for integer matrices), roots
are located with Sturm sequences at rational points, and multiplicities
come from square-free (Yun) decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .graphs import Graph, is_complete_multipartite

MAX_EXACT = 16


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_high(cls, coeffs) -> IntPoly:
        return cls(tuple(reversed(list(coeffs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        # p(a/b) * b^deg keeps the sign and stays integral
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        deg = self.degree
        acc = 0
        for i, c in enumerate(self.coeffs):
            acc += c * a**i * b ** (deg - i)
        return (acc > 0) - (acc < 0)

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Divide by the content, normalising the leading coefficient to be positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lead() < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    def scale_roots(self, s: int) -> IntPoly:
        """Polynomial whose roots are ``s`` times the roots of ``self``."""
        deg = self.degree
        return IntPoly(tuple(c * s ** (deg - i) for i, c in enumerate(self.coeffs)))

    def shift_down(self) -> IntPoly:
        """Divide by ``x``; the constant term must be zero."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("polynomial not divisible by x")
        return IntPoly(self.coeffs[1:])

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (abs(c) != 1 or i == 0) else ("-" if c < 0 else "")
                terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _divmod_rational(a: IntPoly, b: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    rem = [Fraction(c) for c in a.coeffs]
    lead = Fraction(b.lead())
    quot = [Fraction(0)] * max(len(rem) - len(b.coeffs) + 1, 1)
    while len(rem) >= len(b.coeffs) and any(rem):
        shift = len(rem) - len(b.coeffs)
        f = rem[-1] / lead
        quot[shift] = f
        for i, c in enumerate(b.coeffs):
            rem[i + shift] -= f * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return quot, rem


def _from_rational(coeffs: list[Fraction]) -> IntPoly:
    """Clear denominators; the result is a positive multiple of the input."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly(tuple(int(c * den) for c in coeffs))


def poly_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Positive integer multiple of the remainder of ``a`` by ``b``."""
    return _from_rational(_divmod_rational(a, b)[1])


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b``; ``b`` must divide ``a`` with an integral quotient."""
    quot, rem = _divmod_rational(a, b)
    if any(rem) or any(c.denominator != 1 for c in quot):
        raise ValueError("division is not exact over the integers")
    return IntPoly(tuple(int(c) for c in quot))


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, poly_rem(a, b).primitive()
    return a.primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    return poly_exact_div(p, poly_gcd(p, p.derivative())).primitive()


def squarefree_decomposition(p: IntPoly) -> list[IntPoly]:
    """Yun's algorithm: ``factors[i]`` collects the roots of multiplicity ``i + 1``."""
    if p.degree < 1:
        return []
    # divisors are primitive gcds, so every quotient stays integral (Gauss);
    # b and c must share one scale, hence no normalisation inside the loop
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = poly_exact_div(p, a)
    c = poly_exact_div(dp, a)
    d = _sub(c, b.derivative())
    factors = []
    while b.degree > 0:
        a = poly_gcd(b, d)
        factors.append(a)
        b = poly_exact_div(b, a)
        c = poly_exact_div(d, a)
        d = _sub(c, b.derivative())
    return factors


def _sub(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    ac = list(a.coeffs) + [0] * (n - len(a.coeffs))
    bc = list(b.coeffs) + [0] * (n - len(b.coeffs))
    return IntPoly(tuple(x - y for x, y in zip(ac, bc)))


# characteristic polynomial ----------------------------------------------


def charpoly_int(m) -> IntPoly:
    """``det(xI - m)`` for an integer matrix via Faddeev-LeVerrier."""
    rows = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(rows)
    if n > MAX_EXACT:
        raise ValueError(f"charpoly_int supports n <= {MAX_EXACT}, got {n}")
    if n == 0:
        return IntPoly((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(rows[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier division not exact; input not integral?")
        c = -trace // k
        coeffs[n - k] = c
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return IntPoly(tuple(coeffs))


def det_int(m) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


# Sturm sequences -------------------------------------------------------


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = poly_rem(seq[-2], seq[-1])
        g = r.content()
        seq.append(IntPoly(tuple(-c // g for c in r.coeffs)) if g else r)
    seq.pop()
    return seq


def _variations(seq: list[IntPoly], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPoly, lo, hi, seq: list[IntPoly] | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if seq is None:
        seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p.lead())
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead)


def isolate_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]``, one per distinct real root, descending."""
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = sturm_count(p, lo, hi, seq)
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda iv: iv[0], reverse=True)
    return out


def _has_root_in(p: IntPoly, lo: Fraction, hi: Fraction) -> bool:
    return p.degree >= 1 and sturm_count(p, lo, hi) > 0


# exact spherical decision ----------------------------------------------


@dataclass(frozen=True)
class ExactVerdict:
    n: int
    spherical: bool
    representable: bool
    lambda2_interval: tuple[Fraction, Fraction] | None = None
    mult_lambda2_A: int | None = None
    mult_lambda2_PAP: int | None = None
    mu1_equals_lambda2: bool | None = None
    reason: str = ""

    @property
    def min_dimension(self) -> int | None:
        if not self.spherical or self.mult_lambda2_A is None:
            return None
        return self.n - 1 - self.mult_lambda2_A


def _multiplicity_at(factors: list[IntPoly], lo: Fraction, hi: Fraction, probe: IntPoly) -> int:
    # probe: square-free polynomial with exactly one root in (lo, hi]
    for i, f in enumerate(factors):
        if _has_root_in(poly_gcd(f, probe), lo, hi):
            return i + 1
    return 0


def exact_decide(g: Graph) -> ExactVerdict:
    """Exact version of the spectral test, with the multiplicities it found."""
    n = g.n
    if n > MAX_EXACT:
        raise ValueError(f"exact test supports n <= {MAX_EXACT}, got {n}")
    if is_complete_multipartite(g):
        return ExactVerdict(n, False, False, reason="complete multipartite")

    a = g.adjacency(dtype=np.int64)
    p = charpoly_int(a)
    factors = squarefree_decomposition(p)
    sf = squarefree_part(p)
    roots = isolate_roots(sf)

    top_lo, top_hi = roots[0]
    top_mult = _multiplicity_at(factors, top_lo, top_hi, sf)
    if top_mult >= 2:
        lam2_iv, mult_a, index2 = roots[0], top_mult - 1, 0
    else:
        lam2_iv = roots[1]
        mult_a = _multiplicity_at(factors, *lam2_iv, sf)
        index2 = 1

    positive = sturm_count(sf, 0, root_bound(sf))
    if positive < index2 + 1:
        return ExactVerdict(n, False, True, lam2_iv, mult_a, reason="lambda2 <= 0")

    # (nI - J) A (nI - J) has eigenvalues n^2 * mu plus the zero belonging to 1
    proj = n * np.eye(n, dtype=np.int64) - np.ones((n, n), dtype=np.int64)
    big = proj @ a @ proj
    q = charpoly_int(big).shift_down()
    q_factors = squarefree_decomposition(q)
    q_sf = squarefree_part(q)

    s = n * n
    h = sf.scale_roots(s)
    lo, hi = lam2_iv[0] * s, lam2_iv[1] * s
    if not _has_root_in(poly_gcd(q_sf, h), lo, hi):
        return ExactVerdict(n, False, True, lam2_iv, mult_a, 0, False, "lambda2 not an eigenvalue of PAP")

    # shrink until q has no other root beside n^2 * lambda2 in the interval
    h_seq = sturm_sequence(h)
    while sturm_count(q_sf, lo, hi) > 1:
        mid = (lo + hi) / 2
        if sturm_count(h, lo, mid, h_seq):
            hi = mid
        else:
            lo = mid
    above = sturm_count(q_sf, hi, root_bound(q_sf))
    mu1_ok = above == 0
    mult_pap = _multiplicity_at(q_factors, lo, hi, h)
    spherical = mu1_ok and mult_pap == mult_a
    reason = "" if spherical else ("mu1 > lambda2" if not mu1_ok else "multiplicity mismatch")
    return ExactVerdict(n, spherical, True, lam2_iv, mult_a, mult_pap, mu1_ok, reason)


def exact_test_spherical(g: Graph) -> bool:
    return exact_decide(g).spherical


def exact_min_dimension(g: Graph) -> int | None:
    return exact_decide(g).min_dimension
