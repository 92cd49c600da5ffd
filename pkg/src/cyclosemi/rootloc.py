"""Numeric root analysis for the family polynomials.

Two halves: a real trigonometric kernel Q(theta) whose zeros on
[0, 2pi) are exactly the unit-circle roots of the family polynomial
(used for grid/bisection root counting and the interval sign
certificates), and a general Aberth simultaneous-iteration complex
root finder (used for the root-modulus band check).

Everything here is floating point and advisory; exact cyclotomicity
verdicts come from :mod:`cyclosemi.polycore`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .family import FamilyParams, certificate_threshold
from .polycore import IntPoly

ZERO_WINDOW = 1e-9
BISECTION_WIDTH = 1e-12


@dataclass(frozen=True)
class QKernel:
    """Parameters (n, t) of the kernel Q(theta) =
    2cos(n theta) - 2cos((n-1) theta) + cos((2t+1) theta)/cos(theta),
    evaluated in a division-free expansion of the cosine ratio."""

    n: int
    t: int

    def __post_init__(self):
        FamilyParams(self.n, self.t)  # same validity domain


def q_eval(k: QKernel, theta):
    """Q(theta); accepts a scalar or an ndarray of angles.

    The cosine ratio expands to (-1)^t + 2 sum_{i=0}^{t-1} (-1)^i
    cos((2t-2i) theta), which is finite at cos(theta) = 0.
    """
    n, t = k.n, k.t
    theta = np.asarray(theta, dtype=float)
    acc = 2 * np.cos(n * theta) - 2 * np.cos((n - 1) * theta) + (-1) ** t
    for i in range(t):
        acc = acc + 2 * (-1) ** i * np.cos((2 * t - 2 * i) * theta)
    return acc if acc.ndim else float(acc)


def q_prime_eval(k: QKernel, theta):
    """-Q'(theta)/2 = n sin(n theta) - (n-1) sin((n-1) theta)
    + 2 sum_{i=1}^{t} (-1)^{i+t} i sin(2i theta)."""
    n, t = k.n, k.t
    theta = np.asarray(theta, dtype=float)
    acc = n * np.sin(n * theta) - (n - 1) * np.sin((n - 1) * theta)
    for i in range(1, t + 1):
        acc = acc + 2 * (-1) ** (i + t) * i * np.sin(2 * i * theta)
    return acc if acc.ndim else float(acc)


def q_second_eval(k: QKernel, theta):
    """-Q''(theta)/2 = n^2 cos(n theta) - (n-1)^2 cos((n-1) theta)
    + 4 sum_{i=1}^{t} (-1)^{i+t} i^2 cos(2i theta)."""
    n, t = k.n, k.t
    theta = np.asarray(theta, dtype=float)
    acc = n**2 * np.cos(n * theta) - (n - 1) ** 2 * np.cos((n - 1) * theta)
    for i in range(1, t + 1):
        acc = acc + 4 * (-1) ** (i + t) * i**2 * np.cos(2 * i * theta)
    return acc if acc.ndim else float(acc)


def exclusion_check(k: QKernel) -> bool:
    """Dense-sampling confirmation that Q has no zero on
    [0, 1/(2t+4)] or [2pi - 1/(2t+4), 2pi)."""
    width = 1.0 / (2 * k.t + 4)
    points = max(1000, 20 * k.n)
    for lo, hi, closed in ((0.0, width, True), (2 * math.pi - width, 2 * math.pi, False)):
        theta = np.linspace(lo, hi, points, endpoint=closed)
        values = q_eval(k, theta)
        # Q(0) = 1 exactly; any other near-zero or sign flip fails.
        if np.any(np.abs(values) < ZERO_WINDOW):
            return False
        if np.any(np.sign(values[1:]) != np.sign(values[:-1])):
            return False
    return True


@dataclass(frozen=True)
class CertificateReport:
    """Per-index sign-pattern checks over the I/J/K interval triples.

    flags maps index i to (a_holds, b_holds, c_holds): the scaled
    negative first derivative keeps the sign of (-1)^i on I_i (a) and
    the opposite sign on K_i (c), and the scaled negative second
    derivative never vanishes on J_i (b).
    """

    n: int
    t: int
    i_min: int
    i_max: int
    flags: dict[int, tuple[bool, bool, bool]]
    exclusion_ok: bool
    root_count: int

    @property
    def r_bound(self) -> int:
        return (self.t + 1) ** 2

    @property
    def t_bound(self) -> int:
        return 4 * self.n

    @property
    def all_hold(self) -> bool:
        return self.exclusion_ok and all(
            a and b and c for a, b, c in self.flags.values()
        )

    def failed_indices(self) -> list[int]:
        return [i for i, f in self.flags.items() if not all(f)]


def certificate_index_range(n: int, t: int) -> tuple[int, int]:
    """Integer endpoints of [(2n-1)/(4pi(t+2)) - 1, (2n-1)(1 - 1/(4pi(t+2)))]."""
    lo = (2 * n - 1) / (4 * math.pi * (t + 2)) - 1
    hi = (2 * n - 1) * (1 - 1 / (4 * math.pi * (t + 2)))
    return math.ceil(lo), math.floor(hi)


def certificate_check(k: QKernel, samples_per_interval: int = 64) -> CertificateReport:
    """Evaluate the interval sign certificate at desk scale.

    Requires n >= max(16(t+1)^3, 40(t+2)).  When every flag holds, Q
    has at most 2n - 1 zeros on [0, 2pi).
    """
    n, t = k.n, k.t
    threshold = certificate_threshold(t)
    if n < threshold:
        raise ValueError(f"n={n} is below the certificate threshold {threshold} for t={t}")
    i_min, i_max = certificate_index_range(n, t)
    step = math.pi / (4 * n - 2)
    offsets = np.linspace(0.0, 2.0, samples_per_interval)  # in units of step
    flags: dict[int, tuple[bool, bool, bool]] = {}
    for i in range(i_min, i_max + 1):
        start_i = (4 * i - 1) * step
        theta_i = start_i + offsets * step
        theta_j = theta_i + 2 * step
        theta_k = theta_j + 2 * step
        want = 1.0 if i % 2 == 0 else -1.0
        dp_i = q_prime_eval(k, theta_i)
        dp_k = q_prime_eval(k, theta_k)
        dpp_j = q_second_eval(k, theta_j)
        a_holds = bool(np.all(np.sign(dp_i) == want))
        c_holds = bool(np.all(np.sign(dp_k) == -want))
        b_holds = bool(
            np.all(np.abs(dpp_j) > ZERO_WINDOW)
            and np.all(np.sign(dpp_j) == np.sign(dpp_j[0]))
        )
        flags[i] = (a_holds, b_holds, c_holds)
    return CertificateReport(
        n=n,
        t=t,
        i_min=i_min,
        i_max=i_max,
        flags=flags,
        exclusion_ok=exclusion_check(k),
        root_count=count_unit_circle_roots(k),
    )


def _bisect_roots(k: QKernel, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Refine sign-change brackets to width BISECTION_WIDTH, vectorized."""
    flo = q_eval(k, lo)
    while np.max(hi - lo) > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        fmid = q_eval(k, mid)
        left = np.sign(fmid) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fmid, flo)
        hi = np.where(left, hi, mid)
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class UnitCircleRootCount:
    """Roots of Q found by grid sign changes plus a heuristic count of
    tangential (suspected even-multiplicity) touches."""

    crossings: tuple[float, ...]
    suspected_double: tuple[float, ...]

    @property
    def total(self) -> int:
        return len(self.crossings) + 2 * len(self.suspected_double)


def unit_circle_root_scan(k: QKernel, grid_factor: int = 64) -> UnitCircleRootCount:
    """Scan [0, 2pi) on a grid of grid_factor * n points (phase-shifted
    off rational angles), bisect every sign change, and flag local
    minima of |Q| below the zero window as suspected double roots."""
    n = k.n
    count = grid_factor * n
    spacing = 2 * math.pi / count
    # irrational-ish phase keeps roots-of-unity angles off the grid
    theta = (np.arange(count) + 0.381966) * spacing
    values = q_eval(k, theta)

    wrapped = np.concatenate([values, values[:1]])
    grid = np.concatenate([theta, theta[:1] + 2 * math.pi])
    change = np.sign(wrapped[1:]) != np.sign(wrapped[:-1])
    idx = np.nonzero(change)[0]
    roots = _bisect_roots(k, grid[idx], grid[idx + 1]) if idx.size else np.empty(0)
    roots = np.mod(roots, 2 * math.pi)

    # tangential touches: |Q| dips below the window without a sign flip
    small = np.abs(values) < ZERO_WINDOW
    near_change = np.zeros(count, dtype=bool)
    for j in idx:
        near_change[max(0, j - 2) : min(count, j + 3)] = True
    suspected = theta[small & ~near_change]
    return UnitCircleRootCount(
        crossings=tuple(float(r) for r in np.sort(roots)),
        suspected_double=tuple(float(s) for s in suspected),
    )


def count_unit_circle_roots(k: QKernel) -> int:
    """Number of zeros of Q on [0, 2pi), counting suspected tangential
    touches twice.  Advisory; exactness lives in polycore."""
    return unit_circle_root_scan(k).total


class RootFindingError(RuntimeError):
    """Simultaneous iteration failed to converge or verify."""


RESIDUAL_TOL = 1e-10


def complex_roots(p: IntPoly, tol: float = 1e-13, max_iterations: int = 400) -> list[complex]:
    """All deg(p) complex roots by Aberth simultaneous iteration.

    Starts from a slightly perturbed circle, stops when the largest
    coordinate update drops below tol, then verifies the scaled
    residual and the coefficient reconstruction before returning.
    """
    if p.degree < 1:
        raise ValueError("polynomial must be nonconstant")
    coeffs = np.array([float(c) for c in p.coeffs])  # ascending
    deg = p.degree
    lead = coeffs[-1]
    dcoeffs = coeffs[1:] * np.arange(1, deg + 1)

    def horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(z)
        for a in c[::-1]:
            acc = acc * z + a
        return acc

    radius = max(1.0, (abs(coeffs[0] / lead)) ** (1.0 / deg))
    angles = 2 * np.pi * (np.arange(deg) + 0.25) / deg + 0.13
    z = radius * np.exp(1j * angles) * (1 + 1e-3 * np.cos(7 * angles))

    converged = False
    for _ in range(max_iterations):
        pv = horner(coeffs, z)
        dv = horner(dcoeffs, z)
        dv = np.where(dv == 0, 1e-300, dv)
        w = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        sums = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - w * sums
        denom = np.where(denom == 0, 1e-300, denom)
        correction = w / denom
        z = z - correction
        if np.max(np.abs(correction)) < tol:
            converged = True
            break
    if not converged:
        raise RootFindingError(f"no convergence after {max_iterations} iterations")

    residual = np.abs(horner(coeffs, z)) / (1.0 + np.abs(z)) ** deg
    if np.max(residual) > RESIDUAL_TOL:
        raise RootFindingError(f"residual {np.max(residual):.3e} above {RESIDUAL_TOL}")
    rebuilt = np.atleast_1d(np.poly(_balanced_order(z)))[::-1] * lead  # ascending
    recon_error = np.max(np.abs(rebuilt - coeffs)) / max(1.0, np.max(np.abs(coeffs)))
    if recon_error > 1e-6:
        raise RootFindingError(f"coefficient reconstruction off by {recon_error:.3e}")
    return [complex(r) for r in z]


def _balanced_order(z: np.ndarray) -> np.ndarray:
    """Angle-sort then bit-reverse so sequential products of roots near
    the unit circle keep every partial product's coefficients small;
    contiguous-arc order makes intermediates astronomically large."""
    by_angle = z[np.argsort(np.angle(z))]
    n = len(z)
    bits = max(1, math.ceil(math.log2(n)))
    reversed_idx = [int(format(i, f"0{bits}b")[::-1], 2) for i in range(1 << bits)]
    return by_angle[[i for i in reversed_idx if i < n]]


@dataclass(frozen=True)
class BandReport:
    n: int
    band_low: float
    band_high: float
    max_band_violation: float
    passed: bool


BAND_EPSILON = 1e-8


def theorem7_band_check(n: int) -> BandReport:
    """Check that every root of x^{2n} - x^{2n-1} + x^n - x + 1 has
    modulus within (log n)^2 / n of 1 (natural log); requires n >= 12."""
    if n < 12:
        raise ValueError("band check requires n >= 12")
    halfwidth = math.log(n) ** 2 / n
    poly = family_band_polynomial(n)
    moduli = [abs(z) for z in complex_roots(poly)]
    violation = max(max(m - (1 + halfwidth) for m in moduli), max((1 - halfwidth) - m for m in moduli))
    return BandReport(
        n=n,
        band_low=1 - halfwidth,
        band_high=1 + halfwidth,
        max_band_violation=violation,
        passed=violation <= BAND_EPSILON,
    )


def family_band_polynomial(n: int) -> IntPoly:
    """x^{2n} - x^{2n-1} + x^n - x + 1, the t = 0 family polynomial."""
    coeffs = [0] * (2 * n + 1)
    coeffs[0] = 1
    coeffs[1] = -1
    coeffs[n] = 1
    coeffs[2 * n - 1] = -1
    coeffs[2 * n] = 1
    return IntPoly(coeffs)
