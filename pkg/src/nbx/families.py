"""Families of ternary strings: verification and structure.

A family is an ordered, duplicate-free list of equal-length strings.  The
verifiers here are all exhaustive and exact: k-neighborliness, volume and
partitions, laminations and total laminations, the signed-sum identity on
partitions, and the twin-merge reduction of a partition down to the
single all-joker string.

Everything is read-only over immutable inputs, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .strings import SYMBOLS, TernaryString


@dataclass(frozen=True)
class Family:
    """Ordered duplicate-free collection of strings of one length."""

    dimension: int
    members: tuple[TernaryString, ...]

    def __post_init__(self):
        seen = set()
        for m in self.members:
            if m.length != self.dimension:
                raise ValueError(f"member {m} has length {m.length}, expected {self.dimension}")
            key = (m.zero_mask, m.one_mask)
            if key in seen:
                raise ValueError(f"duplicate member {m}")
            seen.add(key)

    # -- construction -------------------------------------------------

    @classmethod
    def of(cls, members: Iterable, dimension: Optional[int] = None) -> "Family":
        """Build from strings or their text forms; dimension inferred if omitted."""
        parsed = tuple(
            m if isinstance(m, TernaryString) else TernaryString.parse(str(m)) for m in members
        )
        if dimension is None:
            if not parsed:
                raise ValueError("cannot infer dimension of an empty family")
            dimension = parsed[0].length
        return cls(dimension, parsed)

    @classmethod
    def from_nbx(cls, text: str, dimension: Optional[int] = None) -> "Family":
        """Parse the one-string-per-line text format.

        Blank lines are ignored and lines whose first non-space character
        is ``#`` are comments.
        """
        members = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                members.append(TernaryString.parse(line))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        return cls.of(members, dimension)

    def to_nbx(self) -> str:
        return "".join(f"{m}\n" for m in self.members)

    def texts(self) -> list[str]:
        return [str(m) for m in self.members]

    # -- container protocol -------------------------------------------

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[TernaryString]:
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __contains__(self, x: TernaryString) -> bool:
        return any(m == x for m in self.members)

    # -- slicing -------------------------------------------------------

    def slice(self, i: int, symbol: str) -> "Family":
        """Members carrying ``symbol`` at 1-based coordinate i."""
        if not 1 <= i <= self.dimension:
            raise ValueError(f"coordinate {i} out of range 1..{self.dimension}")
        if symbol not in ("0", "1", "*"):
            raise ValueError(f"symbol must be one of {SYMBOLS!r}")
        return Family(self.dimension, tuple(m for m in self.members if m.symbol(i) == symbol))

    def delete_coord(self, i: int) -> "Family":
        """Delete coordinate i from every member (may create duplicates,
        which is then an error)."""
        return Family(self.dimension - 1, tuple(m.delete(i) for m in self.members))


@dataclass(frozen=True)
class NeighborlinessReport:
    """Outcome of a pairwise distance check against a window [1, k]."""

    is_valid: bool
    min_distance: Optional[int]
    max_distance: Optional[int]
    violations: tuple[tuple[int, int, int], ...]

    def as_dict(self) -> dict:
        return {
            "valid": self.is_valid,
            "min_distance": self.min_distance,
            "max_distance": self.max_distance,
            "violations": [list(v) for v in self.violations],
        }


def verify_neighborly(family: Family, k: int) -> NeighborlinessReport:
    """Check that every pairwise distance lies in [1, k].

    Violating pairs are reported as (i, j, distance) with 0-based member
    indices.  A single-member family is vacuously valid.
    """
    if len(family) < 1:
        raise ValueError("family must have at least one member")
    if not 1 <= k <= family.dimension:
        raise ValueError(f"k must be in 1..{family.dimension}")
    zs = [m.zero_mask for m in family.members]
    os_ = [m.one_mask for m in family.members]
    n = len(zs)
    lo: Optional[int] = None
    hi: Optional[int] = None
    violations = []
    for i in range(n):
        zi, oi = zs[i], os_[i]
        for j in range(i + 1, n):
            dist = ((zi & os_[j]) | (oi & zs[j])).bit_count()
            if lo is None or dist < lo:
                lo = dist
            if hi is None or dist > hi:
                hi = dist
            if dist == 0 or dist > k:
                violations.append((i, j, dist))
    return NeighborlinessReport(not violations, lo, hi, tuple(violations))


def volume(family: Family) -> int:
    """Total number of cube points covered, counted with multiplicity:
    the sum of 2^(jokers) over the members."""
    return sum(1 << m.jokers for m in family.members)


def _pairwise_disjoint(family: Family) -> bool:
    zs = [m.zero_mask for m in family.members]
    os_ = [m.one_mask for m in family.members]
    n = len(zs)
    for i in range(n):
        zi, oi = zs[i], os_[i]
        for j in range(i + 1, n):
            if not ((zi & os_[j]) | (oi & zs[j])):
                return False
    return True


def is_partition(family: Family) -> bool:
    """True iff the subcubes are pairwise disjoint and cover the whole cube
    (volume 2^d)."""
    return volume(family) == (1 << family.dimension) and _pairwise_disjoint(family)


def is_lamination(family: Family) -> Optional[int]:
    """Smallest coordinate at which a partition splits into its 0- and
    1-sides (every member non-joker there), or None."""
    if not is_partition(family):
        return None
    for i in range(1, family.dimension + 1):
        bit = 1 << (i - 1)
        if all(m.prop_mask & bit for m in family.members):
            return i
    return None


def is_total_lamination(family: Family) -> bool:
    """True iff the family splits recursively, coordinate by coordinate,
    down to all-joker singletons or full binary cubes.

    The split coordinate is existential at every level; results are
    memoized on the canonicalized member set to keep the recursion cheap.
    """
    key = frozenset((m.zero_mask, m.one_mask) for m in family.members)
    return _total_lamination(family.dimension, key)


@lru_cache(maxsize=None)
def _total_lamination(d: int, key: frozenset) -> bool:
    members = sorted(key)
    n = len(members)
    full = (1 << d) - 1
    if n == 1:
        z, o = members[0]
        if z == 0 and o == 0:
            return True  # all-joker singleton (covers d == 0 too)
    if n == 1 << d and all((z | o) == full for z, o in members):
        return True  # the full binary cube
    # must be a partition
    if sum(1 << (d - (z | o).bit_count()) for z, o in members) != 1 << d:
        return False
    for i_ in range(n):
        zi, oi = members[i_]
        for j_ in range(i_ + 1, n):
            zj, oj = members[j_]
            if not ((zi & oj) | (oi & zj)):
                return False
    for c in range(d):
        bit = 1 << c
        if not all((z | o) & bit for z, o in members):
            continue
        low = bit - 1

        def drop(mask: int) -> int:
            return (mask & low) | ((mask >> 1) & ~low)

        side0 = frozenset((drop(z), drop(o)) for z, o in members if z & bit)
        side1 = frozenset((drop(z), drop(o)) for z, o in members if o & bit)
        if len(side0) + len(side1) != n:
            return False  # deletion collided; cannot happen for partitions
        if _total_lamination(d - 1, side0) and _total_lamination(d - 1, side1):
            return True
    return False


def reduce_to_trivial(family: Family) -> list[Family]:
    """Merge twin pairs until a single all-joker string remains.

    Each step picks the member with the fewest jokers (first on ties),
    finds a twin for it, and replaces the pair by their union, which keeps
    the family a partition and shrinks it by one.  The returned trace
    starts with the input and ends with the singleton.  For partitions with
    pairwise distances at most 2 a twin always exists; if none is found the
    precondition was violated and a ValueError is raised.
    """
    if not is_partition(family):
        raise ValueError("reduce_to_trivial requires a partition")
    trace = [family]
    current = list(family.members)
    while len(current) > 1:
        pivot_idx = min(range(len(current)), key=lambda idx: current[idx].jokers)
        pivot = current[pivot_idx]
        twin_idx = None
        for idx, cand in enumerate(current):
            if idx != pivot_idx and pivot.is_twin(cand):
                twin_idx = idx
                break
        if twin_idx is None:
            raise ValueError(f"no twin found for {pivot}; the family is not reducible")
        lo, hi = sorted((pivot_idx, twin_idx))
        merged = current[lo].twin_union(current[hi])
        current = current[:lo] + [merged] + current[lo + 1 : hi] + current[hi + 1 :]
        trace.append(Family(family.dimension, tuple(current)))
    return trace


def sgn_sum(family: Family) -> int:
    """Signed count of the members sharing the non-joker coordinate set of
    a member with the fewest jokers (first on ties).  Zero on every
    partition with a second member; the bare all-joker family sums to +1.
    """
    if not is_partition(family):
        raise ValueError("sgn_sum requires a partition")
    pivot = min(family.members, key=lambda m: m.jokers)
    prop = pivot.prop_mask
    return sum(m.sign for m in family.members if m.prop_mask == prop)


def max_joker_ok(family: Family, k: int) -> bool:
    """True iff every member has at most d-k jokers (a necessary condition
    for membership in a maximum k-neighborly family)."""
    limit = family.dimension - k
    return all(m.jokers <= limit for m in family.members)


def diameter(points: Iterable[TernaryString]) -> int:
    """Largest pairwise Hamming distance of a nonempty set of joker-free
    strings."""
    pts = list(points)
    if not pts:
        raise ValueError("diameter of an empty set")
    d = pts[0].length
    for p in pts:
        if p.length != d:
            raise ValueError("length mismatch")
        if not p.is_binary:
            raise ValueError("diameter is defined for joker-free strings")
    ones = [p.one_mask for p in pts]
    best = 0
    for i in range(len(ones)):
        oi = ones[i]
        for j in range(i + 1, len(ones)):
            h = (oi ^ ones[j]).bit_count()
            if h > best:
                best = h
    return best
