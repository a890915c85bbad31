"""Exact conjugacy width inside the finite window S_n = Sym{1..n}.

``exact_lambda(g, h)`` is the length of the shortest product of elements of
the S_n-class of h that equals g.  The generating set is a union of conjugacy
classes, so distance from the identity in the Cayley graph is constant on
classes; the main search therefore runs breadth-first over cycle types, taking
one representative per class and multiplying it by every class element.  A
witness factor list is rebuilt by conjugating stored parent products onto g.

``bidirectional_lambda`` is an independent route: a state-level
meet-in-the-middle search over all n! permutations, with dense visited tables
indexed by Lehmer rank.  It returns only the length and is used to cross-check
the class-level search.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import IdentityInput, UniverseTooSmall, Unreachable
from .perm import (
    CycleType,
    Permutation,
    conjugate,
    conjugator,
    cycle_type,
    is_even,
    product,
)

MAX_UNIVERSE = 12
DEFAULT_MAX_DEPTH = 12
DEFAULT_UNIVERSE_CAP = 10


@dataclass(frozen=True)
class UniverseSpec:
    n: int
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        if not 1 <= self.n <= MAX_UNIVERSE:
            raise UniverseTooSmall(f"universe size must lie in 1..{MAX_UNIVERSE}, got {self.n}")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")


@dataclass(frozen=True)
class ExactLambda:
    """Exact width in a bounded universe; ``value is None`` means unreachable."""

    value: int | None
    universe: UniverseSpec
    stabilized: bool = False
    reason: str = ""
    witness: tuple[Permutation, ...] = field(default=(), repr=False, compare=False)

    @property
    def reachable(self) -> bool:
        return self.value is not None


def class_size(t: CycleType, n: int) -> int:
    """Number of permutations of 1..n with cycle type t."""
    if t.degree > n:
        return 0
    counts = Counter(t.lengths)
    counts[1] = n - t.degree
    denom = 1
    for length, m in counts.items():
        denom *= length**m * math.factorial(m)
    return math.factorial(n) // denom


def _class_images(t: CycleType, n: int) -> Iterator[list[int]]:
    # Image lists on 0..n-1.  Each cycle starts at the smallest unassigned
    # point, so every permutation is produced exactly once.
    lengths = Counter(t.lengths)
    fixed = n - t.degree
    img = [-1] * n

    def rec(free: list[int], fixed_left: int):
        if not free:
            yield list(img)
            return
        start, rest = free[0], free[1:]
        if fixed_left:
            img[start] = start
            yield from rec(rest, fixed_left - 1)
            img[start] = -1
        for L in sorted(lengths):
            if not lengths[L]:
                continue
            lengths[L] -= 1
            for others in itertools.permutations(rest, L - 1):
                cyc = (start,) + others
                for i, x in enumerate(cyc):
                    img[x] = cyc[(i + 1) % L]
                remaining = [x for x in rest if x not in others]
                yield from rec(remaining, fixed_left)
                for x in cyc:
                    img[x] = -1
            lengths[L] += 1

    yield from rec(list(range(n)), fixed)


def enumerate_class(t: CycleType, universe: UniverseSpec | int) -> Iterator[Permutation]:
    """Every permutation of 1..n with cycle type t, each exactly once."""
    n = universe.n if isinstance(universe, UniverseSpec) else universe
    if t.degree > n:
        raise UniverseTooSmall(f"cycle type {t} needs {t.degree} points, universe has {n}")
    for img in _class_images(t, n):
        yield Permutation._trusted({i + 1: y + 1 for i, y in enumerate(img) if i != y})


@lru_cache(maxsize=32)
def _class_array(t: CycleType, n: int) -> np.ndarray:
    arr = np.array(list(_class_images(t, n)), dtype=np.int8)
    arr.setflags(write=False)
    return arr


def _to_array(p: Permutation, n: int) -> np.ndarray:
    a = np.arange(n, dtype=np.int8)
    for x, y in p.mapping.items():
        a[x - 1] = y - 1
    return a


def _from_array(a) -> Permutation:
    return Permutation._trusted({i + 1: int(y) + 1 for i, y in enumerate(a) if i != y})


def _cycle_counts(arr: np.ndarray) -> np.ndarray:
    """Row i holds, at column L, the number of L-cycles of permutation i."""
    rows, n = arr.shape
    ident = np.arange(n, dtype=arr.dtype)
    lengths = np.zeros((rows, n), dtype=np.int16)
    cur = arr
    for m in range(1, n + 1):
        hit = (cur == ident) & (lengths == 0)
        lengths[hit] = m
        if m < n:
            cur = np.take_along_axis(arr, cur.astype(np.intp), axis=1)
    counts = np.zeros((rows, n + 1), dtype=np.int16)
    for L in range(2, n + 1):
        counts[:, L] = (lengths == L).sum(axis=1) // L
    return counts


def _counts_to_type(row) -> CycleType:
    lengths = []
    for L, m in enumerate(row):
        if L >= 2:
            lengths.extend([L] * int(m))
    return CycleType(tuple(lengths))


@dataclass
class _ClassGraph:
    """BFS over the classes of S_n with the class of ``base`` as generators."""

    n: int
    base: CycleType
    dist: dict[CycleType, int]
    # child class -> (parent class, index into the generator array)
    parent: dict[CycleType, tuple[CycleType, int]]


_CHUNK = 1 << 16


@lru_cache(maxsize=256)
def _class_graph(base: CycleType, n: int) -> _ClassGraph:
    gens = _class_array(base, n)
    gens_idx = gens.astype(np.intp)
    start = CycleType(())
    dist = {start: 0}
    parent: dict[CycleType, tuple[CycleType, int]] = {}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for K in frontier:
            rep = _to_array(K.representative(), n)
            for lo in range(0, len(gens_idx), _CHUNK):
                prods = rep[gens_idx[lo:lo + _CHUNK]]
                counts = _cycle_counts(prods)
                uniq, first = np.unique(counts, axis=0, return_index=True)
                for row, j in zip(uniq, first):
                    t = _counts_to_type(row)
                    if t not in dist:
                        dist[t] = depth
                        parent[t] = (K, lo + int(j))
                        nxt.append(t)
        frontier = sorted(nxt, key=lambda t: t.lengths)
    return _ClassGraph(n, base, dist, parent)


def _witness(graph: _ClassGraph, g: Permutation) -> tuple[Permutation, ...]:
    gens = _class_array(graph.base, graph.n)
    factors = []
    cur = g
    while not cur.is_identity():
        K, j = graph.parent[cycle_type(cur)]
        rep = K.representative()
        y = _from_array(gens[j])
        a = conjugator(product([rep, y]), cur)
        factors.append(conjugate(y, a))
        cur = conjugate(rep, a)
    factors.reverse()
    return tuple(factors)


def default_universe(g: Permutation, h: Permutation, max_depth: int = DEFAULT_MAX_DEPTH) -> UniverseSpec:
    """``|supp g u supp h| + 4`` points capped at 10, never below the largest moved point."""
    union = set(g.support) | set(h.support)
    n = min(len(union) + 4, DEFAULT_UNIVERSE_CAP)
    n = max(n, g.max_point, h.max_point)
    if n > MAX_UNIVERSE:
        raise UniverseTooSmall(f"supports reach point {n}; exhaustive search is limited to {MAX_UNIVERSE}")
    return UniverseSpec(n, max_depth)


def _check_fits(g: Permutation, h: Permutation, universe: UniverseSpec):
    if g.max_point > universe.n or h.max_point > universe.n:
        raise UniverseTooSmall(f"supports of {g} and {h} do not fit in 1..{universe.n}")


def _solve(g: Permutation, h: Permutation, universe: UniverseSpec, with_witness: bool) -> ExactLambda:
    if g.is_identity() or h.is_identity():
        raise IdentityInput("g and h must be nontrivial")
    _check_fits(g, h, universe)
    if not is_even(g) and is_even(h):
        return ExactLambda(None, universe, reason="parity")
    graph = _class_graph(cycle_type(h), universe.n)
    d = graph.dist.get(cycle_type(g))
    if d is None:
        return ExactLambda(None, universe, reason="not generated in universe")
    if d > universe.max_depth:
        return ExactLambda(None, universe, reason=f"depth cutoff {universe.max_depth}")
    witness = _witness(graph, g) if with_witness else ()
    return ExactLambda(d, universe, witness=witness)


def exact_lambda(
    g: Permutation,
    h: Permutation,
    universe: UniverseSpec | None = None,
    *,
    check_stability: bool = True,
    with_witness: bool = True,
) -> ExactLambda:
    """Shortest product of elements of the class of h that equals g, inside S_n.

    Odd g with even h is reported unreachable without searching.  When
    ``check_stability`` is set and the universe can grow by two points, the
    search is repeated there and ``stabilized`` records whether the value held.
    """
    if universe is None:
        universe = default_universe(g, h)
    res = _solve(g, h, universe, with_witness)
    if check_stability and universe.n + 2 <= MAX_UNIVERSE:
        bigger = _solve(g, h, replace(universe, n=universe.n + 2), False)
        res = replace(res, stabilized=bigger.value == res.value)
    return res


def exact_d(g: Permutation, h: Permutation, universe: UniverseSpec | None = None) -> float:
    """Natural log of the larger of the two exact widths between the classes of g and h."""
    if universe is None:
        universe = default_universe(g, h)
    a = exact_lambda(g, h, universe, check_stability=False, with_witness=False)
    b = exact_lambda(h, g, universe, check_stability=False, with_witness=False)
    for r, (x, y) in ((a, (g, h)), (b, (h, g))):
        if not r.reachable:
            raise Unreachable(f"{x} is not a product of conjugates of {y} in S_{universe.n} ({r.reason})")
    return math.log(max(a.value, b.value))


# ---------------------------------------------------------------------------
# Independent state-level route
# ---------------------------------------------------------------------------

def _lehmer_rank(arr: np.ndarray) -> np.ndarray:
    rows, n = arr.shape
    rank = np.zeros(rows, dtype=np.int64)
    for i in range(n):
        smaller = (arr[:, i + 1:] < arr[:, i:i + 1]).sum(axis=1)
        rank += smaller * math.factorial(n - 1 - i)
    return rank


def bidirectional_lambda(g: Permutation, h: Permutation, universe: UniverseSpec) -> int | None:
    """Meet-in-the-middle BFS over the n! states; None when unreachable within max_depth."""
    if g.is_identity() or h.is_identity():
        raise IdentityInput("g and h must be nontrivial")
    _check_fits(g, h, universe)
    n = universe.n
    gens = _class_array(cycle_type(h), n).astype(np.intp)
    size = math.factorial(n)
    seen = [np.full(size, -1, dtype=np.int16), np.full(size, -1, dtype=np.int16)]
    fronts = [np.arange(n, dtype=np.intp)[None, :], _to_array(g, n).astype(np.intp)[None, :]]
    depth = [0, 0]
    for side in (0, 1):
        seen[side][_lehmer_rank(fronts[side])] = 0
    hit = seen[0][_lehmer_rank(fronts[1])]
    if (hit >= 0).any():
        return 0
    while depth[0] + depth[1] < universe.max_depth:
        side = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        if len(fronts[side]) == 0:
            return None
        depth[side] += 1
        new_states = []
        step = max(1, _CHUNK // max(1, len(gens)))
        best = None
        for lo in range(0, len(fronts[side]), step):
            block = fronts[side][lo:lo + step]
            # x o y for every state x and generator y (the class is inverse-closed).
            prods = np.take_along_axis(
                block[:, None, :].repeat(len(gens), axis=1), gens[None, :, :].repeat(len(block), axis=0), axis=2
            ).reshape(-1, n)
            ranks = _lehmer_rank(prods)
            ranks, idx = np.unique(ranks, return_index=True)
            fresh = seen[side][ranks] < 0
            ranks, idx = ranks[fresh], idx[fresh]
            seen[side][ranks] = depth[side]
            new_states.append(prods[idx])
            other = seen[1 - side][ranks]
            met = other[other >= 0]
            if len(met):
                cand = depth[side] + int(met.min())
                best = cand if best is None else min(best, cand)
        if best is not None:
            return best if best <= universe.max_depth else None
        fronts[side] = np.concatenate(new_states) if new_states else np.empty((0, n), dtype=np.intp)
    return None
