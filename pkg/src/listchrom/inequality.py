"""Exact verification of the combinatorial counting inequality that caps
the number of bad hub subsets, together with its monotonicity companion
and the convolution identities used alongside it.

Everything is integer arithmetic; the 1/2 in the bound is handled by a
doubled comparison so no rationals or floats enter the verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InvalidParams


def binom_plus(p: int, q: int) -> int:
    """Binomial coefficient extended by 0 whenever q < 0 or p < q."""
    if q < 0 or p < q:
        return 0
    return comb(p, q)


@dataclass(frozen=True)
class ParamTuple:
    """One grid point (m, ell, tau, x, y) of the inequality sweep."""

    m: int
    ell: int
    tau: int
    x: int
    y: int

    def __post_init__(self):
        m, ell, tau, x, y = self.m, self.ell, self.tau, self.x, self.y
        if m < 1:
            raise InvalidParams(f"m must be >= 1, got {m}")
        if ell % 2 or tau % 2:
            raise InvalidParams(f"ell and tau must be even, got {ell},{tau}")
        if not (0 <= ell <= 4 * m):
            raise InvalidParams(f"need 0 <= ell <= 4m, got ell={ell}, m={m}")
        if not (0 <= tau <= 2 * m - 2):
            raise InvalidParams(f"need 0 <= tau <= 2m-2, got tau={tau}, m={m}")
        if ell + tau < 2 * m + 2:
            raise InvalidParams(f"need ell+tau >= 2m+2, got {ell}+{tau}, m={m}")
        if x < 0 or y < 0 or x + y > ell:
            raise InvalidParams(f"need x,y >= 0 and x+y <= ell, got x={x}, y={y}")

    @property
    def k(self) -> int:
        return (2 * self.m - self.tau) // 2

    @property
    def ell_half(self) -> int:
        return self.ell // 2

    @property
    def z(self) -> int:
        return self.ell - self.x - self.y

    def to_json(self) -> dict:
        return {"m": self.m, "ell": self.ell, "tau": self.tau, "x": self.x, "y": self.y}


def _threshold(t: ParamTuple) -> int:
    m, ell, tau, x, y = t.m, t.ell, t.tau, t.x, t.y
    return max(2 * x + y + 2 * m + 1 - ell - tau, 2 * m + 1 - tau)


def count_blocking_selections(t: ParamTuple) -> int:
    """The capped-damage count F: selections (a, b, rest) whose weighted
    size 2a+b clears the slack threshold.  Threshold-driven loops."""
    cap = 2 * t.m - t.tau
    thr = _threshold(t)
    total = 0
    for a in range(0, min(t.x, cap) + 1):
        b_lo = max(0, thr - 2 * a)
        b_hi = min(t.y, cap - a)
        for b in range(b_lo, b_hi + 1):
            total += comb(t.x, a) * comb(t.y, b) * binom_plus(t.z, cap - a - b)
    return total


def count_blocking_selections_rect(t: ParamTuple) -> int:
    """Same count by scanning the full (a, b) rectangle with the
    constraints applied as filters; cross-checks the loop bounds above."""
    cap = 2 * t.m - t.tau
    thr = _threshold(t)
    total = 0
    for a in range(0, 4 * t.m + 1):
        for b in range(0, 4 * t.m + 1):
            if a > t.x or b > t.y:
                continue
            if a + b > cap or 2 * a + b < thr:
                continue
            total += (
                binom_plus(t.x, a)
                * binom_plus(t.y, b)
                * binom_plus(t.z, cap - a - b)
            )
    return total


def check_half_bound(t: ParamTuple) -> tuple[bool, Fraction]:
    """Does F stay at or below half the subset count minus one?

    Returns the verdict and the exact margin (bound minus F); the verdict
    uses the doubled integer comparison 2F <= C(ell, 2m-tau) - 2.
    """
    f = count_blocking_selections(t)
    c = comb(t.ell, 2 * t.m - t.tau)
    return 2 * f <= c - 2, Fraction(c - 2 * f - 2, 2)


def valid_ell_tau(m: int):
    for ell in range(0, 4 * m + 1, 2):
        for tau in range(0, 2 * m - 1, 2):
            if ell + tau >= 2 * m + 2:
                yield ell, tau


def grid(max_m: int):
    """All valid parameter tuples with m <= max_m, lexicographic order."""
    for m in range(1, max_m + 1):
        for ell, tau in valid_ell_tau(m):
            for x in range(0, ell + 1):
                for y in range(0, ell - x + 1):
                    yield ParamTuple(m, ell, tau, x, y)


def check_monotonicity(m: int, ell: int, tau: int, x0: int) -> bool:
    """F(x0, .) decreases once y reaches ell - 2*x0 and increases below it."""
    ParamTuple(m, ell, tau, x0, 0)  # validates the slice
    pivot = ell - 2 * x0
    for y in range(0, ell - x0):
        f_here = count_blocking_selections(ParamTuple(m, ell, tau, x0, y))
        f_next = count_blocking_selections(ParamTuple(m, ell, tau, x0, y + 1))
        if y >= pivot:
            if f_next > f_here:
                return False
        else:
            if f_here > f_next:
                return False
    return True


def convolution_term(ell: int, k: int, t: int, x: int) -> int:
    """C(t, x): selections of weighted size t from the split x | ell-2x | x."""
    return sum(
        binom_plus(x, a)
        * binom_plus(ell - 2 * x, t - 2 * a)
        * binom_plus(x, 2 * k + a - t)
        for a in range(0, t // 2 + 1)
    )


def check_convolution_identities(m: int, ell: int, tau: int, x: int) -> bool:
    """The three facts about C(t, x) used in the boundary case y = ell-2x:
    total sum, symmetry about 2k, and the central value being >= 2."""
    if tau % 2 or ell % 2:
        raise InvalidParams("ell and tau must be even")
    k = (2 * m - tau) // 2
    if not (1 <= x < ell // 2):
        raise InvalidParams(f"need 1 <= x < ell/2, got x={x}, ell={ell}")
    total = sum(convolution_term(ell, k, t, x) for t in range(0, 4 * k + 1))
    if total != comb(ell, 2 * k):
        return False
    for t in range(0, 2 * k + 1):
        if convolution_term(ell, k, t, x) != convolution_term(ell, k, 4 * k - t, x):
            return False
    return convolution_term(ell, k, 2 * k, x) >= 2
