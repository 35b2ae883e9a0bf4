"""Closed-form lower and upper bounds and their aggregation.

All arithmetic is exact: integers throughout, rationals where a rounding
rule is involved.  The rounding used by the refined upper bounds is the
largest integer *strictly* below x (an integer a < x satisfies exactly
a <= strict_floor(x)), implemented as ceil(x - 1) on Fractions.

The kappa function gives the maximum size of a subset of the binary cube
with bounded diameter (Kleitman's diameter theorem, with Bezrukov's odd
case); the greedy profile optimizer and the refined parity-case formulas
are built on top of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional

from .constructions import m_value, mbar_value


class NoValidSplit(ValueError):
    """Raised when no split parameter t exists (only happens at k = d)."""


def strict_floor(x: Fraction) -> int:
    """Largest integer strictly less than x."""
    return math.ceil(x - 1)


def kappa(s: int, d: int) -> int:
    """Maximum size of a subset of {0,1}^d with diameter at most s.

    2^d once s >= d; otherwise the ball value for even s and the
    two-adjacent-balls value for odd s.
    """
    if s < 0 or d < 1:
        raise ValueError("requires s >= 0 and d >= 1")
    if s >= d:
        return 1 << d
    half = s // 2
    ball = sum(comb(d, j) for j in range(half + 1))
    if s % 2 == 0:
        return ball
    return comb(d - 1, half) + ball


def alon_lower(k: int, d: int) -> int:
    """Product lower bound: prod over i < k of (floor((d+i)/k) + 1)."""
    _check_kd(k, d)
    out = 1
    for i in range(k):
        out *= (d + i) // k + 1
    return out


def alon_upper(k: int, d: int) -> int:
    """Binomial sum upper bound: sum over i <= k of 2^i * C(d, i)."""
    _check_kd(k, d)
    return sum((1 << i) * comb(d, i) for i in range(k + 1))


def huang_sudakov_upper(k: int, d: int) -> int:
    """Sharpened binomial sum: 1 + sum over 1 <= i <= k of 2^(i-1) * C(d, i)."""
    _check_kd(k, d)
    return 1 + sum((1 << (i - 1)) * comb(d, i) for i in range(1, k + 1))


def ball_lower(k: int, d: int) -> int:
    """Size of the radius-floor(k/2) Hamming ball; valid for k <= d-1."""
    if not 1 <= k <= d - 1:
        raise ValueError("requires 1 <= k <= d-1")
    return sum(comb(d, i) for i in range(k // 2 + 1))


def split_upper(k: int, d: int, t: int) -> int:
    """Upper bound 2^(d-t) + sum_{i <= ceil((k+2t-2)/2)} C(d, i).

    Strings with at least t jokers are bounded by disjoint-volume counting,
    the rest through the diameter bound; t trades the two terms off.
    """
    _check_kd(k, d)
    if t < 1 or k + 2 * t - 2 > d - 1:
        raise ValueError("requires t >= 1 and k + 2t - 2 <= d - 1")
    top = -(-(k + 2 * t - 2) // 2)
    return (1 << (d - t)) + sum(comb(d, i) for i in range(top + 1))


def split_upper_best(k: int, d: int) -> tuple[int, int]:
    """Minimum of split_upper over all valid t, with the smallest
    minimizing t.  No t is valid exactly when k = d."""
    _check_kd(k, d)
    t_max = (d - 1 - k) // 2 + 1
    if t_max < 1:
        raise NoValidSplit(f"no valid split parameter for k={k}, d={d}")
    best: Optional[tuple[int, int]] = None
    for t in range(1, t_max + 1):
        value = split_upper(k, d, t)
        if best is None or value < best[0]:
            best = (value, t)
    return best


@dataclass(frozen=True)
class GreedyProfile:
    """A feasible count profile: a[i] strings with exactly i jokers."""

    a: tuple[int, ...]
    total: int

    def __post_init__(self):
        if self.total != sum(self.a):
            raise ValueError("total must equal sum(a)")


def greedy_kappa_upper(k: int, d: int) -> tuple[int, GreedyProfile]:
    """Maximize the total count subject to the prefix constraints
    sum_{l <= i} 2^l a_l <= kappa(k + 2i, d), greedily from i = 0.

    The greedy profile is the lexicographically largest optimum: kappa is
    nondecreasing, so filling low indices first stays feasible, and moving
    a unit of budget to a lower index never lowers the count.
    """
    _check_kd(k, d)
    a = []
    weighted = 0
    for i in range(d):
        room = kappa(k + 2 * i, d) - weighted
        ai = max(room >> i, 0)
        a.append(ai)
        weighted += ai << i
    return sum(a), GreedyProfile(tuple(a), sum(a))


def refined_upper(k: int, d: int) -> int:
    """Closed-form evaluation of the greedy kappa optimum, split by the
    parities of k and d.  Defined for 1 <= k <= d-1."""
    if not 1 <= k <= d - 1:
        raise ValueError("requires 1 <= k <= d-1")
    half = Fraction(1, 2)
    if k % 2 == 0:
        head = sum(comb(d, s) for s in range(k // 2 + 1))
        if d % 2 == 0:
            mid = sum(
                strict_floor(Fraction(comb(d, k // 2 + i), 1 << i) + half)
                for i in range(1, (d - k) // 2)
            )
            last = strict_floor(
                (1 << ((d + k) // 2 - 1))
                + Fraction(comb(d, d // 2), 1 << ((d - k) // 2 + 1))
                + half
            )
            return head + mid + last
        lam = 1 << (d - (d - k) // 2 - 2)
        mid = sum(
            strict_floor(Fraction(comb(d, k // 2 + i), 1 << i) + half)
            for i in range(1, (d - k) // 2 + 1)
        )
        return lam + head + mid
    head = comb(d - 1, k // 2) + sum(comb(d, s) for s in range(k // 2 + 1))
    if d % 2 == 0:
        lam = 1 << (d - (d - k) // 2 - 2)
        mid = sum(
            strict_floor(Fraction(comb(d - 1, k // 2 + i), 1 << (i - 1)) + half)
            for i in range(1, (d - k) // 2 + 1)
        )
        return lam + head + mid
    mid = sum(
        strict_floor(Fraction(comb(d - 1, k // 2 + i), 1 << (i - 1)) + half)
        for i in range(1, (d - k) // 2)
    )
    last = strict_floor(
        (1 << ((d + k) // 2 - 1))
        + Fraction(comb(d - 1, (d - 1) // 2), 1 << ((d - k) // 2))
        + half
    )
    return head + mid + last


class Bound(NamedTuple):
    value: int
    method: str


@dataclass(frozen=True)
class BoundsEntry:
    """Best known lower and upper bounds for one (k, d) cell."""

    k: int
    d: int
    lower: Bound
    upper: Bound

    def __post_init__(self):
        if not (1 <= self.lower.value <= self.upper.value <= (1 << self.d)):
            raise ValueError("requires 1 <= lower <= upper <= 2^d")

    @property
    def exact(self) -> bool:
        return self.lower.value == self.upper.value

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "lower": {"value": self.lower.value, "method": self.lower.method},
            "upper": {"value": self.upper.value, "method": self.upper.method},
            "exact": self.exact,
        }


def best_bounds(k: int, d: int) -> BoundsEntry:
    """Aggregate every applicable method; methods are recorded so tables
    can tell exact values from bounds.

    k = 1, k = d-1 and k = d are routed to their exactly known values
    before any formula of restricted validity is consulted.
    """
    _check_kd(k, d)
    if k == d:
        exact = Bound(1 << d, "exact:2^d")
        return BoundsEntry(k, d, exact, exact)
    if k == d - 1 and d >= 2:
        exact = Bound(3 << (d - 2), "exact:3*2^(d-2)")
        return BoundsEntry(k, d, exact, exact)
    if k == 1:
        exact = Bound(d + 1, "exact:d+1")
        return BoundsEntry(k, d, exact, exact)

    lowers = [
        Bound(alon_lower(k, d), "product"),
        Bound(ball_lower(k, d), "ball"),
        Bound(m_value(k, d).value, "fragmented"),
        Bound(mbar_value(k, d).value, "fragmented-product"),
    ]
    lower = lowers[0]
    for cand in lowers[1:]:
        if cand.value > lower.value:
            lower = cand

    uppers = [Bound(1 << d, "trivial"), Bound(alon_upper(k, d), "alon"),
              Bound(huang_sudakov_upper(k, d), "huang-sudakov")]
    value, t = split_upper_best(k, d)
    uppers.append(Bound(value, f"split(t={t})"))
    uppers.append(Bound(greedy_kappa_upper(k, d)[0], "greedy-kappa"))
    uppers.append(Bound(refined_upper(k, d), "refined"))
    upper = uppers[0]
    for cand in uppers[1:]:
        if cand.value < upper.value:
            upper = cand

    return BoundsEntry(k, d, lower, upper)


def bounds_table(kmax: int, dmax: int, threads: int = 1) -> list[BoundsEntry]:
    """All cells with 1 <= k <= min(d, kmax) and k <= d <= dmax.

    Cells are independent, so they may be computed on a thread pool; the
    output order (and content) does not depend on the thread count.
    """
    if kmax < 1 or dmax < 1:
        raise ValueError("kmax and dmax must be positive")
    cells = [(k, d) for d in range(1, dmax + 1) for k in range(1, min(d, kmax) + 1)]
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda kd: best_bounds(*kd), cells))
    return [best_bounds(k, d) for k, d in cells]


@dataclass(frozen=True)
class PascalFinding:
    """One audited cell of the triangle inequality
    lower(k, d) <= upper(k-1, d-1) + upper(k, d-1)."""

    k: int
    d: int
    lhs: int
    rhs: int

    @property
    def violated(self) -> bool:
        return self.lhs > self.rhs

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs

    def as_dict(self) -> dict:
        return {"k": self.k, "d": self.d, "lhs": self.lhs, "rhs": self.rhs,
                "slack": self.slack, "violated": self.violated}


def pascal_audit(table: list[BoundsEntry]) -> list[PascalFinding]:
    """Audit a bounds grid against the triangle inequality.

    The table must cover the full grid it spans (all cells with
    k <= min(d, kmax), d <= dmax).  For k = d the out-of-domain term
    upper(k, d-1) is taken as the trivially exact 2^(d-1).  A violation
    would falsify the conjectured inequality for the true values; slack is
    reported otherwise.  Consistency of bounds, not a proof.
    """
    cells = {(e.k, e.d): e for e in table}
    if not cells:
        return []
    kmax = max(k for k, _ in cells)
    dmax = max(d for _, d in cells)
    for d in range(1, dmax + 1):
        for k in range(1, min(d, kmax) + 1):
            if (k, d) not in cells:
                raise ValueError(f"grid is missing entry (k={k}, d={d})")
    findings = []
    for d in range(2, dmax + 1):
        for k in range(2, min(d, kmax) + 1):
            left = cells[(k - 1, d - 1)].upper.value
            if k <= d - 1:
                right = cells[(k, d - 1)].upper.value
            else:
                right = 1 << (d - 1)  # k > d-1: every distinct-string family works
            findings.append(PascalFinding(k, d, cells[(k, d)].lower.value, left + right))
    return findings


def _check_kd(k: int, d: int) -> None:
    if not 1 <= k <= d:
        raise ValueError(f"requires 1 <= k <= d, got k={k}, d={d}")
