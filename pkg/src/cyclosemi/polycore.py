"""Exact integer polynomial arithmetic and cyclotomic factor peeling.

Polynomials are dense lists of unbounded Python integers, constant term
first.  Everything in this module is exact; no floating point is used.
The central entry points are :func:`cyclotomic`, which builds the d-th
cyclotomic polynomial, and :func:`cyclotomic_test`, which factors out
every cyclotomic divisor of an integer polynomial and reports whether
anything is left over.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator

import numpy as np


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Canonical form: no trailing zeros, so the zero polynomial is the
    empty tuple and has degree -1.

    >>> IntPoly([1, -1]) * IntPoly([1, 1, 1])
    IntPoly('-x^3 + 1')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def x_power(cls, k: int, coeff: int = 1) -> IntPoly:
        """coeff * x^k."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, float and complex x."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return poly_mul(self, other)

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly('0')"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "-" if c < 0 else ""
            mag = abs(c)
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            coeff = str(mag) if (mag != 1 or i == 0) else ""
            parts.append(f"{sign}{coeff}{term}")
        return f"IntPoly('{''.join(parts)}')"

    def to_coeff_strings(self) -> list[str]:
        """Wire form: decimal strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings: Iterable[str]) -> IntPoly:
        return cls(int(s) for s in strings)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact schoolbook product."""
    if a.is_zero() or b.is_zero():
        return IntPoly.zero()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return IntPoly(out)


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly | None:
    """Exact quotient q with q*b == a over the integers, or None.

    Schoolbook long division from the top; a failed coefficient
    division or a nonzero remainder both mean a is not divisible by b
    in Z[x].
    """
    if b.is_zero():
        raise ValueError("division by zero polynomial")
    if a.is_zero():
        return IntPoly.zero()
    if a.degree < b.degree:
        return None
    rem = list(a.coeffs)
    lead = b.leading_coefficient()
    db = b.degree
    quot = [0] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        q, r = divmod(top, lead)
        if r != 0:
            return None
        quot[k] = q
        for j, cb in enumerate(b.coeffs):
            rem[k + j] -= q * cb
    if any(rem[: db]):
        return None
    return IntPoly(quot)


# --- Euler phi sieve, grow-only and shared ------------------------------

_phi_lock = threading.Lock()
_phi_table: np.ndarray = np.arange(2, dtype=np.int64)  # phi[0]=0, phi[1]=1


def phi_table(limit: int) -> np.ndarray:
    """Totient values phi[0..limit]; cached and only ever grown."""
    global _phi_table
    with _phi_lock:
        if limit < len(_phi_table):
            return _phi_table
        phi = np.arange(limit + 1, dtype=np.int64)
        for p in range(2, limit + 1):
            if phi[p] == p:  # p prime
                phi[p::p] -= phi[p::p] // p
        _phi_table = phi
        return phi


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi is defined for positive integers")
    return int(phi_table(n)[n])


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _squarefree_divisors_with_mobius(n: int) -> list[tuple[int, int]]:
    """(divisor, mu(divisor)) over squarefree divisors of n."""
    divs = [(1, 1)]
    for p in _prime_factors(n):
        divs += [(d * p, -mu) for d, mu in divs]
    return divs


_cyclo_lock = threading.Lock()
_cyclo_cache: dict[int, IntPoly] = {}
_cyclo_at2_cache: dict[int, int] = {1: 1}


def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, via x^d - 1 = prod_{e|d} Phi_e.

    Recursive exact division with memoization; the result is monic of
    degree phi(d).
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    with _cyclo_lock:
        cached = _cyclo_cache.get(d)
    if cached is not None:
        return cached
    if d == 1:
        result = IntPoly((-1, 1))
    else:
        num = IntPoly.x_power(d, 1) - IntPoly.one()
        den = IntPoly.one()
        e = 1
        while e * e <= d:
            if d % e == 0:
                if e < d:
                    den = den * cyclotomic(e)
                other = d // e
                if other != e and other < d:
                    den = den * cyclotomic(other)
            e += 1
        quot = poly_divexact(num, den)
        assert quot is not None, f"cyclotomic recursion failed at d={d}"
        result = quot
    with _cyclo_lock:
        _cyclo_cache[d] = result
    return result


def cyclotomic_value_at_2(d: int) -> int:
    """Phi_d(2), computed by Mobius inversion of 2^k - 1 without
    constructing the polynomial; used as a fast divisibility filter."""
    with _cyclo_lock:
        cached = _cyclo_at2_cache.get(d)
    if cached is not None:
        return cached
    num = 1
    den = 1
    for e, mu in _squarefree_divisors_with_mobius(d):
        term = (1 << (d // e)) - 1
        if mu == 1:
            num *= term
        elif mu == -1:
            den *= term
    value = num // den
    with _cyclo_lock:
        _cyclo_at2_cache[d] = value
    return value


def is_palindromic(p: IntPoly) -> bool:
    """True iff coeffs read the same forwards and backwards."""
    if p.is_zero():
        raise ValueError("zero polynomial has no palindrome status")
    c = p.coeffs
    return all(c[i] == c[len(c) - 1 - i] for i in range(len(c) // 2 + 1))


@dataclass(frozen=True)
class CyclotomicReport:
    """Outcome of peeling every cyclotomic factor from a polynomial.

    factors multiplied together times the remainder reconstruct the
    input exactly; the polynomial is cyclotomic iff the remainder is
    the constant 1.
    """

    factors: tuple[tuple[int, int], ...]  # (index d, multiplicity), d ascending
    remainder: IntPoly

    @property
    def is_cyclotomic(self) -> bool:
        return self.remainder == IntPoly.one()

    def factor_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def reconstruct(self) -> IntPoly:
        out = self.remainder
        for d, m in self.factors:
            out = out * cyclotomic(d) ** m
        return out


def cyclotomic_test(p: IntPoly) -> CyclotomicReport:
    """Peel cyclotomic factors off p and report what is left.

    Candidate indices are every d with phi(d) <= deg of the current
    remainder; since phi(d) >= sqrt(d/2), scanning d <= 2*deg^2 covers
    them all.  A product of cyclotomics is monic with constant term
    +-1, so anything else is rejected without peeling.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return CyclotomicReport((), p)
    if p.coeffs[0] not in (-1, 1) or p.leading_coefficient() not in (-1, 1):
        return CyclotomicReport((), p)

    deg = p.degree
    phi = phi_table(2 * deg * deg)
    candidates = np.nonzero(phi[1:] <= deg)[0] + 1

    rem = p
    rem_at_2 = rem(2)
    factors: list[tuple[int, int]] = []
    for d in candidates:
        d = int(d)
        if rem.degree == 0:
            break
        if phi[d] > rem.degree:
            continue
        f2 = cyclotomic_value_at_2(d)
        mult = 0
        while rem_at_2 % f2 == 0:
            quot = poly_divexact(rem, cyclotomic(d))
            if quot is None:
                break
            rem = quot
            rem_at_2 = rem(2)
            mult += 1
        if mult:
            factors.append((d, mult))
    return CyclotomicReport(tuple(factors), rem)
