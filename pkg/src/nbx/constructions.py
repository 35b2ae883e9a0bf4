"""Explicit k-neighborly families and the optimizers over them.

The builders: the canonical 1-neighborly chain family, Hamming-ball
families, concatenation products, the fragmented construction (a union of
block products tagged by k-subsets of [m]), and the extremal family for
k = d-1.  On top of the fragmented construction sit two optimizers:
``m_value`` maximizes the fragmented size for one block plan, and
``mbar_value`` maximizes products of fragmented families over all ways of
splitting (k, d) into parts.

Outputs are verified against their advertised neighborliness at
construction time (skipped above ``VERIFY_LIMIT`` members, where the
quadratic check would dominate the build).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional

from .families import Family, verify_neighborly
from .strings import TernaryString, all_jokers

VERIFY_LIMIT = 4000

# Compositions of the coordinate budget scanned per block count in
# ``m_value``; the balanced split is always evaluated regardless.
DEFAULT_COMPOSITION_CAP = 100_000


def _checked(family: Family, k: int, expected_size: Optional[int] = None) -> Family:
    if expected_size is not None and len(family) != expected_size:
        raise AssertionError(f"construction produced {len(family)} members, expected {expected_size}")
    if len(family) <= VERIFY_LIMIT:
        report = verify_neighborly(family, k)
        if not report.is_valid:
            raise AssertionError(f"construction is not {k}-neighborly: {report.violations[:3]}")
    return family


def canonical(d: int) -> Family:
    """The chain family of size d+1: each new dimension prepends 0 to the
    previous members and adds the string 1**...*."""
    if d < 1:
        raise ValueError("d must be at least 1")
    members = [TernaryString.parse("0"), TernaryString.parse("1")]
    zero = TernaryString.parse("0")
    for length in range(2, d + 1):
        members = [zero + m for m in members]
        members.append(TernaryString(length, 0, 1))  # 1 followed by jokers
    return _checked(Family(d, tuple(members)), 1, d + 1)


def ball_family(k: int, d: int) -> Family:
    """All binary strings within Hamming distance floor(k/2) of 0^d."""
    if not 1 <= k <= d - 1:
        raise ValueError("requires 1 <= k <= d-1")
    radius = k // 2
    full = (1 << d) - 1
    members = []
    for wt in range(radius + 1):
        for pos in itertools.combinations(range(d), wt):
            ones = 0
            for p in pos:
                ones |= 1 << p
            members.append(TernaryString(d, full & ~ones, ones))
    size = sum(comb(d, i) for i in range(radius + 1))
    return _checked(Family(d, tuple(members)), k, size)


def product(f: Family, g: Family) -> Family:
    """All concatenations uv with u from f and v from g.  Concatenating a
    k1-neighborly with a k2-neighborly family yields a (k1+k2)-neighborly
    one in the summed dimension."""
    members = tuple(u + v for u in f.members for v in g.members)
    return Family(f.dimension + g.dimension, members)


@dataclass(frozen=True)
class FragmentPlan:
    """Block plan for the fragmented construction.

    ``a`` holds the m block lengths; the total dimension is
    sum(a) + C(m, k) - 1, with the extra C(m, k) - 1 coordinates used as a
    disambiguating prefix.  k = 1 is allowed as the degenerate single-block
    case (the plan then just reproduces a product of chain families).
    """

    k: int
    d: int
    m: int
    a: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= self.m <= self.d:
            raise ValueError("requires 1 <= k <= m <= d")
        if len(self.a) != self.m:
            raise ValueError("a must have exactly m entries")
        if any(x < 1 for x in self.a):
            raise ValueError("all block lengths must be positive")
        c = comb(self.m, self.k)
        if self.d < c - 1 + self.m:
            raise ValueError("d too small for this (m, k)")
        if sum(self.a) != self.d - c + 1:
            raise ValueError(f"block lengths must sum to {self.d - c + 1}")

    def size(self) -> int:
        """Number of strings the plan produces: the k-th elementary
        symmetric polynomial of (a_i + 1)."""
        return _esym(self.k, [x + 1 for x in self.a])


def _esym(k: int, values: list[int]) -> int:
    coeff = [1] + [0] * k
    for v in values:
        for j in range(min(k, len(coeff) - 1), 0, -1):
            coeff[j] += coeff[j - 1] * v
    return coeff[k]


def _colex_subsets(m: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(1, m + 1), k), key=lambda b: tuple(reversed(b)))


def fragmented_parts(plan: FragmentPlan) -> list[tuple[tuple[int, ...], Family]]:
    """The per-subset subfamilies of the fragmented construction.

    For each k-subset B of [m] (in colex order) the blocks indexed by B are
    filled with a chain family and the rest with jokers; a per-B prefix
    string keeps strings from different subsets at distance >= 1.
    """
    subsets = _colex_subsets(plan.m, plan.k)
    n_subsets = comb(plan.m, plan.k)
    if n_subsets > 1:
        prefixes = canonical(n_subsets - 1).members
    else:
        prefixes = (TernaryString(0, 0, 0),)
    blocks = [canonical(length) for length in plan.a]
    parts = []
    for prefix, subset in zip(prefixes, subsets):
        fam = Family(0, (TernaryString(0, 0, 0),))
        for i, block in enumerate(blocks, start=1):
            piece = block if i in subset else Family(block.dimension, (all_jokers(block.dimension),))
            fam = product(fam, piece)
        fam = Family(plan.d, tuple(prefix + member for member in fam.members))
        parts.append((subset, fam))
    return parts


def fragmented(plan: FragmentPlan) -> Family:
    """Union of the per-subset subfamilies; k-neighborly of the size given
    by the plan."""
    members = []
    for _, fam in fragmented_parts(plan):
        members.extend(fam.members)
    return _checked(Family(plan.d, tuple(members)), plan.k, plan.size())


def extremal_dminus1(d: int) -> Family:
    """The maximum (d-1)-neighborly family: the 0-sided half cube plus all
    strings 1*b3..bd.  Size 3*2^(d-2); always a partition."""
    if d < 2:
        raise ValueError("d must be at least 2")
    full = (1 << d) - 1
    members = []
    for ones in range(0, 1 << (d - 1)):
        # first coordinate is bit 0; keep it 0
        members.append(TernaryString(d, full & ~(ones << 1), ones << 1))
    for ones in range(0, 1 << (d - 2)):
        one_mask = 1 | (ones << 2)  # 1 at coordinate 1, joker at coordinate 2
        members.append(TernaryString(d, full & ~one_mask & ~2, one_mask))
    return _checked(Family(d, tuple(members)), d - 1, 3 << (d - 2))


@dataclass(frozen=True)
class MValueResult:
    """Optimal value together with the plan(s) achieving it.

    ``plan`` is set for single-plan optimization, ``parts`` for the split
    optimizer.  ``balanced_matches`` records whether an evenly-split block
    vector already achieves the optimum (the scan over uneven splits exists
    to validate that empirically).
    """

    value: int
    plan: Optional[FragmentPlan] = None
    parts: Optional[tuple[FragmentPlan, ...]] = None
    balanced_matches: Optional[bool] = None

    def as_dict(self) -> dict:
        if self.parts is not None:
            return {
                "value": self.value,
                "parts": [{"k": p.k, "d": p.d, "m": p.m, "a": list(p.a)} for p in self.parts],
            }
        return {"value": self.value, "m": self.plan.m, "a": list(self.plan.a)}


def _descending_compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive integer tuples of the given length summing
    to total, at most ``cap`` of them."""
    count = 0

    def rec(remaining: int, slots: int, maxpart: int, prefix: tuple[int, ...]):
        nonlocal count
        if count >= cap:
            return
        if slots == 1:
            if 1 <= remaining <= maxpart:
                count += 1
                yield prefix + (remaining,)
            return
        top = min(maxpart, remaining - (slots - 1))
        for first in range(top, 0, -1):
            yield from rec(remaining - first, slots - 1, first, prefix + (first,))

    yield from rec(total, parts, total, ())


def _balanced_split(total: int, parts: int) -> tuple[int, ...]:
    q, r = divmod(total, parts)
    return tuple([q + 1] * r + [q] * (parts - r))


@lru_cache(maxsize=None)
def _m_value_cached(k: int, d: int, cap: int) -> MValueResult:
    if not 1 <= k <= d:
        raise ValueError("no feasible plan: requires 1 <= k <= d")
    best: Optional[tuple[int, FragmentPlan]] = None
    balanced_best = 0
    m = k
    while comb(m, k) + m - 1 <= d:
        budget = d - comb(m, k) + 1
        balanced = _balanced_split(budget, m)
        best_here: Optional[tuple[int, tuple[int, ...]]] = None
        seen_balanced = False
        for a in _descending_compositions(budget, m, cap):
            val = _esym(k, [x + 1 for x in a])
            if a == balanced:
                seen_balanced = True
            if best_here is None or val > best_here[0] or (val == best_here[0] and a > best_here[1]):
                best_here = (val, a)
        if not seen_balanced:
            val = _esym(k, [x + 1 for x in balanced])
            if best_here is None or val > best_here[0]:
                best_here = (val, balanced)
        balanced_best = max(balanced_best, _esym(k, [x + 1 for x in balanced]))
        if best is None or best_here[0] > best[0]:
            best = (best_here[0], FragmentPlan(k, d, m, best_here[1]))
        m += 1
    if best is None:
        raise ValueError(f"no feasible block count for k={k}, d={d}")
    return MValueResult(best[0], plan=best[1], balanced_matches=(balanced_best == best[0]))


def m_value(k: int, d: int, composition_cap: int = DEFAULT_COMPOSITION_CAP) -> MValueResult:
    """Best fragmented-construction size for (k, d), with a witness plan.

    All block counts m with C(m, k) + m - 1 <= d are scanned, and for each
    the non-increasing splits of the coordinate budget (up to the cap; the
    balanced split is always included).  Ties prefer smaller m, then the
    lexicographically largest split.
    """
    return _m_value_cached(k, d, composition_cap)


@lru_cache(maxsize=None)
def _mbar_cached(k: int, d: int, cap: int) -> tuple[int, tuple[FragmentPlan, ...]]:
    single = _m_value_cached(k, d, cap)
    best_value = single.value
    best_parts: tuple[FragmentPlan, ...] = (single.plan,)
    for k1 in range(1, k):
        k2 = k - k1
        for d1 in range(k1, d):
            d2 = d - d1
            if d2 < k2:
                continue
            head = _m_value_cached(k1, d1, cap)
            tail_value, tail_parts = _mbar_cached(k2, d2, cap)
            value = head.value * tail_value
            if value > best_value:
                best_value = value
                best_parts = (head.plan,) + tail_parts
    return best_value, best_parts


def mbar_value(k: int, d: int, composition_cap: int = DEFAULT_COMPOSITION_CAP) -> MValueResult:
    """Best product of fragmented sizes over all splits k = sum k_i,
    d = sum d_i with k_i <= d_i, by dynamic programming over the parts."""
    if not 1 <= k <= d:
        raise ValueError("requires 1 <= k <= d")
    value, parts = _mbar_cached(k, d, composition_cap)
    return MValueResult(value, parts=parts)


def realize_mbar(k: int, d: int) -> Family:
    """A concrete k-neighborly family in dimension d whose size is
    mbar_value(k, d); the product of the witness parts, verified."""
    result = mbar_value(k, d)
    fam: Optional[Family] = None
    for plan in result.parts:
        piece = fragmented(plan)
        fam = piece if fam is None else product(fam, piece)
    return _checked(fam, k, result.value)
