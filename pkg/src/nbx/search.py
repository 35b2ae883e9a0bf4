"""Exact maximum-family search for small (k, d).

The problem is a maximum clique instance: vertices are the candidate
strings, with an edge where the pairwise distance lies in [1, k].
Candidate sets, adjacency and partial solutions all live in Python-int
bitmasks.  The solver is a sequential, deterministic branch and bound
with three admissible prunes:

* greedy coloring of the candidate set (classic clique bound);
* disjoint-volume counting: the chosen subcubes plus the cheapest
  extension must fit in the 2^d cube points;
* a global cutoff at the best closed-form upper bound, which also ends
  the search early once an incumbent meets it.

Candidates with more than d-k jokers can be dropped up front (no maximum
family contains one: splitting its joker into a twin pair gives a strictly
larger family); the toggle exists so the claim can be tested empirically.
Optional symmetry fixing roots one subsearch per joker-count orbit of the
coordinate-permutation / 0-1-swap group.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .bounds import best_bounds
from .constructions import realize_mbar
from .families import Family, verify_neighborly
from .strings import TernaryString, all_strings


class CapacityExceeded(RuntimeError):
    """Candidate set larger than the configured capacity."""


class EnumerationCapExceeded(RuntimeError):
    """More maximum families than the enumeration cap."""


@dataclass
class SearchConfig:
    budget_nodes: Optional[int] = None
    budget_secs: Optional[float] = None
    joker_prune: bool = True
    symmetry: bool = True
    deterministic: bool = True
    max_candidates: int = 60_000
    use_bounds_cutoff: bool = True
    seed_incumbent: bool = True

    def __post_init__(self):
        if self.budget_nodes is not None and self.budget_nodes <= 0:
            raise ValueError("budget_nodes must be positive")
        if self.budget_secs is not None and self.budget_secs <= 0:
            raise ValueError("budget_secs must be positive")


@dataclass(frozen=True)
class SearchResult:
    k: int
    d: int
    optimum: int
    witness: Family
    proven_optimal: bool
    stats: dict = field(compare=False)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "optimum": self.optimum,
            "proven_optimal": self.proven_optimal,
            "witness": [str(m) for m in self.witness],
            "stats": dict(self.stats),
        }


def enumerate_candidates(k: int, d: int) -> list[TernaryString]:
    """All strings that can appear in a maximum k-neighborly family:
    those with at most d-k jokers.  Sorted by joker count, then text."""
    if not 1 <= k <= d:
        raise ValueError("requires 1 <= k <= d")
    return _candidates(k, d, joker_prune=True)


def _candidates(k: int, d: int, joker_prune: bool) -> list[TernaryString]:
    limit = d - k if joker_prune else d
    out = [s for s in all_strings(d) if s.jokers <= limit]
    out.sort(key=lambda s: (s.jokers, str(s)))
    return out


class _Done(Exception):
    pass


class _BudgetExhausted(Exception):
    def __init__(self, reason: str):
        self.reason = reason


class _Engine:
    """Branch-and-bound state over one ordered candidate list."""

    def __init__(self, adj, vols, cube_volume, cutoff, budget_nodes, budget_secs):
        self.adj = adj
        self.vols = vols
        self.cube_volume = cube_volume
        self.cutoff = cutoff
        self.budget_nodes = budget_nodes
        self.budget_secs = budget_secs
        self.start = time.monotonic()
        self.nodes = 0
        self.best = 0
        self.witness: list[int] = []
        # candidates bucketed by subcube volume, for the volume bound
        self.buckets: list[int] = []
        for v, vol in enumerate(vols):
            j = vol.bit_length() - 1
            while len(self.buckets) <= j:
                self.buckets.append(0)
            self.buckets[j] |= 1 << v

    def _tick(self):
        self.nodes += 1
        if self.budget_nodes is not None and self.nodes > self.budget_nodes:
            raise _BudgetExhausted("node-budget")
        if self.budget_secs is not None and self.nodes & 1023 == 0:
            if time.monotonic() - self.start > self.budget_secs:
                raise _BudgetExhausted("time-budget")

    def _improve(self, stack: list[int]):
        self.best = len(stack)
        self.witness = list(stack)
        if self.best >= self.cutoff:
            raise _Done

    def _volume_room(self, pool: int, cap: int) -> int:
        """Upper bound on how many pool members any disjoint extension can
        add within the remaining cube capacity (cheapest volumes first)."""
        extra = 0
        for j, bucket in enumerate(self.buckets):
            if cap < (1 << j):
                break
            hit = pool & bucket
            if not hit:
                continue
            c = hit.bit_count()
            fit = cap >> j
            if fit >= c:
                extra += c
                cap -= c << j
            else:
                extra += fit
                break
        return extra

    def _color_order(self, pool: int) -> list[tuple[int, int]]:
        """Greedy coloring by peeling independent sets; returns (vertex,
        color) with colors ascending."""
        adj = self.adj
        order = []
        color = 0
        while pool:
            color += 1
            avail = pool
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                avail &= ~adj[v] & ~low
                pool &= ~low
        return order

    def expand(self, stack: list[int], pool: int, used_volume: int):
        self._tick()
        depth = len(stack)
        if depth + pool.bit_count() <= self.best:
            return
        if depth + self._volume_room(pool, self.cube_volume - used_volume) <= self.best:
            return
        order = self._color_order(pool)
        adj = self.adj
        for v, c in reversed(order):
            if depth + c <= self.best:
                return
            sub = pool & adj[v]
            stack.append(v)
            if depth + 1 > self.best:
                self._improve(stack)
            if sub:
                self.expand(stack, sub, used_volume + self.vols[v])
            stack.pop()
            pool &= ~(1 << v)


def _build_graph(strings: list[TernaryString], k: int):
    """Order candidates (degree desc, jokers asc, text asc) and return the
    ordered strings with adjacency bitmasks."""
    n = len(strings)
    zs = [s.zero_mask for s in strings]
    os_ = [s.one_mask for s in strings]
    adj = [0] * n
    for i in range(n):
        zi, oi = zs[i], os_[i]
        for j in range(i + 1, n):
            dist = ((zi & os_[j]) | (oi & zs[j])).bit_count()
            if 1 <= dist <= k:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    order = sorted(range(n), key=lambda i: (-adj[i].bit_count(), strings[i].jokers, str(strings[i])))
    ordered = [strings[i] for i in order]
    pos = {old: new for new, old in enumerate(order)}
    new_adj = [0] * n
    for old_i, mask in enumerate(adj):
        bits = 0
        while mask:
            low = mask & -mask
            bits |= 1 << pos[low.bit_length() - 1]
            mask ^= low
        new_adj[pos[old_i]] = bits
    return ordered, new_adj


def max_family(k: int, d: int, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Exact maximum k-neighborly family in dimension d.

    Returns the proven optimum, or the best family found when a budget ran
    out (proven_optimal False).  Deterministic for a fixed configuration.
    """
    if not 1 <= k <= d:
        raise ValueError("requires 1 <= k <= d")
    cfg = cfg or SearchConfig()
    strings = _candidates(k, d, cfg.joker_prune)
    if len(strings) > cfg.max_candidates:
        raise CapacityExceeded(
            f"{len(strings)} candidates exceed the configured capacity {cfg.max_candidates}"
        )
    ordered, adj = _build_graph(strings, k)
    index_of = {(s.zero_mask, s.one_mask): i for i, s in enumerate(ordered)}
    vols = [1 << s.jokers for s in ordered]
    cutoff = best_bounds(k, d).upper.value if cfg.use_bounds_cutoff else (1 << d) + 1

    engine = _Engine(adj, vols, 1 << d, cutoff, cfg.budget_nodes, cfg.budget_secs)
    stopped = "complete"
    try:
        if cfg.seed_incumbent:
            _seed(engine, index_of, adj, k, d)
        if cfg.symmetry:
            full = (1 << len(ordered)) - 1
            max_jokers = d - k if cfg.joker_prune else d
            for j in range(max_jokers + 1):
                rep = TernaryString.parse("0" * (d - j) + "*" * j)
                rep_i = index_of[(rep.zero_mask, rep.one_mask)]
                allowed = 0
                for i, s in enumerate(ordered):
                    if s.jokers >= j:
                        allowed |= 1 << i
                stack = [rep_i]
                if 1 > engine.best:
                    engine._improve(stack)
                pool = adj[rep_i] & allowed & full
                if pool:
                    engine.expand(stack, pool, vols[rep_i])
        else:
            engine.expand([], (1 << len(ordered)) - 1, 0)
    except _Done:
        stopped = "cutoff"
    except _BudgetExhausted as exc:
        stopped = exc.reason

    members = tuple(sorted((ordered[i] for i in engine.witness), key=str))
    witness = Family(d, members)
    if len(witness) and not verify_neighborly(witness, k).is_valid:
        raise AssertionError("internal error: witness fails verification")
    proven = stopped in ("complete", "cutoff")
    stats = {
        "nodes": engine.nodes,
        "elapsed_secs": time.monotonic() - engine.start,
        "candidates": len(ordered),
        "upper_cutoff": cutoff if cfg.use_bounds_cutoff else None,
        "stopped": stopped,
        "budget_nodes": cfg.budget_nodes,
        "budget_secs": cfg.budget_secs,
    }
    return SearchResult(k, d, engine.best, witness, proven, stats)


def _seed(engine: _Engine, index_of, adj, k: int, d: int) -> None:
    """Warm-start the incumbent with the best constructed family, when it
    maps onto the candidate set."""
    try:
        constructed = realize_mbar(k, d)
    except (ValueError, AssertionError):
        return
    idxs = []
    for m in constructed.members:
        key = (m.zero_mask, m.one_mask)
        if key not in index_of:
            return
        idxs.append(index_of[key])
    if len(idxs) > engine.best:
        engine._improve(idxs)


def enumerate_max_families(
    k: int, d: int, cfg: Optional[SearchConfig] = None, cap: int = 100_000
) -> list[Family]:
    """Every maximum k-neighborly family in dimension d, as member sets.

    Runs the optimizer first (it must prove the optimum), then re-walks the
    search space keeping all branches that can still reach the optimum.
    Symmetry fixing is ignored here: representatives only would be found.
    """
    cfg = cfg or SearchConfig()
    base = max_family(k, d, cfg)
    if not base.proven_optimal:
        raise RuntimeError("optimum not proven within budget; cannot enumerate")
    target = base.optimum
    strings = _candidates(k, d, cfg.joker_prune)
    ordered, adj = _build_graph(strings, k)
    vols = [1 << s.jokers for s in ordered]
    engine = _Engine(adj, vols, 1 << d, (1 << d) + 1, cfg.budget_nodes, cfg.budget_secs)
    found: list[tuple[int, ...]] = []

    def walk(stack: list[int], pool: int, used_volume: int):
        engine._tick()
        if len(stack) == target:
            found.append(tuple(stack))
            if len(found) > cap:
                raise EnumerationCapExceeded(f"more than {cap} maximum families")
            return
        need = target - len(stack)
        if pool.bit_count() < need:
            return
        if engine._volume_room(pool, engine.cube_volume - used_volume) < need:
            return
        order = engine._color_order(pool)
        if order and order[-1][1] < need:
            return
        for v, c in reversed(order):
            if c < need:
                return
            sub = pool & adj[v]
            stack.append(v)
            walk(stack, sub, used_volume + vols[v])
            stack.pop()
            pool &= ~(1 << v)

    try:
        walk([], (1 << len(ordered)) - 1, 0)
    except _BudgetExhausted as exc:
        raise RuntimeError(f"enumeration stopped by {exc.reason} before completing") from None
    families = []
    for idxs in sorted(sorted(t) for t in found):
        members = tuple(sorted((ordered[i] for i in idxs), key=str))
        families.append(Family(d, members))
    return families


def verify_certificate(result: SearchResult) -> bool:
    """Re-check a search result from its raw members, independently of the
    search internals: size, distinctness, and pairwise distances."""
    try:
        members = list(result.witness)
        if len(members) != result.optimum or not members:
            return False
        seen = set()
        for m in members:
            if m.length != result.d:
                return False
            key = (m.zero_mask, m.one_mask)
            if key in seen:
                return False
            seen.add(key)
        for i, x in enumerate(members):
            for y in members[i + 1 :]:
                dist = ((x.zero_mask & y.one_mask) | (x.one_mask & y.zero_mask)).bit_count()
                if dist == 0 or dist > result.k:
                    return False
        return True
    except Exception:
        return False
