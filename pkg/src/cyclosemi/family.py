"""The two-parameter semigroup family behind the symmetric-but-not-
cyclotomic construction: generators, closed-form polynomial, and the
classification verdict."""
from __future__ import annotations

from dataclasses import dataclass

from . import semigroup
from .polycore import IntPoly, cyclotomic_test
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class FamilyParams:
    """Validated (n, t) index into the family; requires n >= 6t + 2 so
    the middle generator block is nonempty."""

    n: int
    t: int

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("t must be nonnegative")
        if self.n < 6 * self.t + 2:
            raise ValueError(f"n={self.n} is below 6t+2={6 * self.t + 2}")
        # t=0, n=2 degenerates to <2>, whose complement is infinite
        if self.t == 0 and self.n < 3:
            raise ValueError("n must be at least 3 when t=0")


def acyclotomicity_threshold(t: int) -> int:
    """Smallest n for which the non-cyclotomicity theorem applies."""
    return max(8 * (t + 1) ** 3, 40 * (t + 2))


def certificate_threshold(t: int) -> int:
    """Smallest n for which the root-count certificate lemma applies.

    The theorem and the lemma it rests on state different cubic
    constants (8 vs 16); certificate claims use the larger one.
    """
    return max(16 * (t + 1) ** 3, 40 * (t + 2))


def family_generators(p: FamilyParams) -> list[int]:
    """The three generator groups: t low pairs, a solid middle block of
    n - 6t - 1 integers, and t high singletons spaced by 4."""
    n, t = p.n, p.t
    gens = []
    for i in range(t):
        gens.append(n - 2 * t + 4 * i)
        gens.append(n - 2 * t + 4 * i + 1)
    gens.extend(range(n + 2 * t, 2 * n - 4 * t - 1))
    for j in range(t):
        gens.append(2 * n - 4 * t + 4 * j - 1)
    return sorted(gens)


def family_semigroup(p: FamilyParams) -> NumericalSemigroup:
    return semigroup.from_generators(family_generators(p))


def family_polynomial_closed_form(p: FamilyParams) -> IntPoly:
    """x^{2n} - x^{2n-1} + sum_{i=0}^{2t} (-1)^i x^{n+2t-2i} - x + 1."""
    n, t = p.n, p.t
    coeffs = [0] * (2 * n + 1)
    coeffs[0] = 1
    coeffs[1] = -1
    coeffs[2 * n] = 1
    coeffs[2 * n - 1] = -1
    for i in range(2 * t + 1):
        coeffs[n + 2 * t - 2 * i] += (-1) ** i
    return IntPoly(coeffs)


@dataclass(frozen=True)
class FamilyVerdict:
    embedding_dimension: int
    symmetric: bool
    cyclotomic: bool

    def expected_embedding_dimension(self, p: FamilyParams) -> int:
        return p.n - 3 * p.t - 1


def family_verdict(p: FamilyParams) -> FamilyVerdict:
    """Classify the (n, t) member: embedding dimension, symmetry, and
    whether its polynomial is a product of cyclotomics."""
    s = family_semigroup(p)
    report = cyclotomic_test(s.semigroup_polynomial())
    return FamilyVerdict(
        embedding_dimension=s.embedding_dimension,
        symmetric=s.is_symmetric(),
        cyclotomic=report.is_cyclotomic,
    )
