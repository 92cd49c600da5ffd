"""Numerical semigroups: membership, gaps, Frobenius number, Apery sets,
minimal generators, symmetry, and the semigroup polynomial."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .polycore import IntPoly, is_palindromic


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, fully tabulated at construction.

    ``generators`` is the (possibly redundant) input generator list;
    ``minimal_generators`` is the unique inclusion-minimal one.  The
    Frobenius number is -1 when there are no gaps (S = Z>=0).
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int
    minimal_generators: tuple[int, ...]
    _gap_set: frozenset[int] = field(repr=False)

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def contains(self, x: int) -> bool:
        return x >= 0 and (x > self.frobenius or x not in self._gap_set)

    def apery_set(self, m: int | None = None) -> list[int]:
        """Least member of S in each residue class mod m, index r holds
        the class of r.  m defaults to the multiplicity."""
        if m is None:
            m = self.multiplicity
        if m <= 0 or not self.contains(m):
            raise ValueError(f"{m} is not a nonzero member of the semigroup")
        out: list[int | None] = [None] * m
        remaining = m
        v = 0
        while remaining:
            if self.contains(v) and out[v % m] is None:
                out[v % m] = v
                remaining -= 1
            v += 1
        return [a for a in out if a is not None]

    def semigroup_polynomial(self) -> IntPoly:
        """P_S(x) = 1 + (x - 1) * sum over gaps g of x^g; degree F + 1."""
        coeffs = [0] * (self.frobenius + 2)
        coeffs[0] = 1
        for g in self.gaps:
            coeffs[g] -= 1
            coeffs[g + 1] += 1
        return IntPoly(coeffs)

    def hilbert_polynomial_form(self) -> IntPoly:
        """P_S built the other way, as (1 - x) * truncated Hilbert series
        with the geometric tail folded into a single x^(F+1) term."""
        f = self.frobenius
        truncated = IntPoly([1 if self.contains(v) else 0 for v in range(f + 1)])
        one_minus_x = IntPoly((1, -1))
        return one_minus_x * truncated + IntPoly.x_power(f + 1)

    def is_symmetric(self) -> bool:
        return is_palindromic(self.semigroup_polynomial())

    def is_symmetric_by_gaps(self) -> bool:
        """Gap-reflection criterion: x in S iff F - x not in S."""
        f = self.frobenius
        return all(self.contains(x) != self.contains(f - x) for x in range(f + 1))

    def analysis_record(self) -> dict:
        """Canonical JSON-ready summary (field order is part of the format)."""
        return {
            "generators": list(self.generators),
            "minimal_generators": list(self.minimal_generators),
            "embedding_dimension": self.embedding_dimension,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "gaps": list(self.gaps),
            "polynomial": self.semigroup_polynomial().to_coeff_strings(),
            "symmetric": self.is_symmetric(),
        }


def _membership_table(gens: tuple[int, ...]) -> tuple[bytearray, int]:
    """DP membership table and the Frobenius number.

    The table is grown until max(gens) consecutive members appear; from
    there on every integer is a member, so the run start minus one is F.
    """
    maxg = gens[-1]
    bound = 2 * maxg + 2
    member = bytearray(bound)
    member[0] = 1
    run = 0
    v = 1
    while True:
        if v >= len(member):
            member.extend(bytearray(len(member)))
        member[v] = 1 if any(g <= v and member[v - g] for g in gens) else 0
        run = run + 1 if member[v] else 0
        if run == maxg:
            frobenius = v - maxg
            while frobenius >= 0 and member[frobenius]:
                frobenius -= 1
            return member, frobenius
        v += 1


def minimal_generators_from_membership(contains, frobenius: int) -> list[int]:
    """Members not expressible as a sum of two nonzero members.

    ``contains`` is a membership predicate.  Every member above
    F + multiplicity splits off the multiplicity, so the candidate
    window [m0, F + m0] is exhaustive.
    """
    if frobenius == -1:
        return [1]
    m0 = next(v for v in range(1, frobenius + 2) if contains(v))
    out = []
    for x in range(m0, frobenius + m0 + 1):
        if not contains(x):
            continue
        if any(contains(a) and contains(x - a) for a in range(m0, x - m0 + 1)):
            continue
        out.append(x)
    return out


def from_generators(gens: list[int]) -> NumericalSemigroup:
    """Build the semigroup generated by ``gens``.

    Raises ValueError for an empty list, nonpositive entries, or
    gcd != 1 (the complement would be infinite).
    """
    if not gens:
        raise ValueError("generator list is empty")
    if any(g <= 0 for g in gens):
        raise ValueError("generators must be positive")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise ValueError(f"gcd of generators is {g}, not 1; complement is not finite")
    sorted_gens = tuple(sorted(set(gens)))
    member, frobenius = _membership_table(sorted_gens)
    gaps = tuple(v for v in range(1, frobenius + 1) if not member[v])
    gap_set = frozenset(gaps)

    def contains(x: int) -> bool:
        return x >= 0 and (x > frobenius or x not in gap_set)

    minimal = tuple(minimal_generators_from_membership(contains, frobenius))
    return NumericalSemigroup(
        generators=sorted_gens,
        gaps=gaps,
        frobenius=frobenius,
        minimal_generators=minimal,
        _gap_set=gap_set,
    )
