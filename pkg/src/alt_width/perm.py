"""Finite-support permutations of the positive integers.

Products follow the right-factor-first convention: ``compose(a, b)`` is the map
``x -> a(b(x))``, so in a written product ``h1 h2 ... hn`` the factor ``hn`` acts
first.  Every value is immutable and every function here is pure.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import CycleSyntaxError, TypeMismatch

MAX_POINT = 2**32 - 1


class Permutation:
    """A bijection of {1, 2, 3, ...} that moves finitely many points.

    Only moved points are stored; everything else is fixed.  Construction
    validates the mapping, so an instance always satisfies the bijectivity
    invariants.
    """

    __slots__ = ("_map", "_hash", "_cycles")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        clean = {}
        for x, y in (mapping or {}).items():
            if type(x) is not int or type(y) is not int or x < 1 or y < 1:
                raise ValueError(f"points must be positive integers, got {x!r} -> {y!r}")
            if x != y:
                clean[x] = y
        if set(clean) != set(clean.values()):
            raise ValueError("mapping is not a bijection on its support")
        self._map = clean
        self._hash = None
        self._cycles = None

    @classmethod
    def _trusted(cls, mapping: dict[int, int]) -> Permutation:
        # Caller guarantees a fixed-point-free bijection on the key set.
        p = object.__new__(cls)
        p._map = mapping
        p._hash = None
        p._cycles = None
        return p

    @classmethod
    def identity(cls) -> Permutation:
        return cls._trusted({})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build the product of pairwise disjoint cycles."""
        m: dict[int, int] = {}
        for c in cycles:
            if len(c) < 2:
                continue
            for i, x in enumerate(c):
                if x in m:
                    raise ValueError(f"point {x} repeated across cycles")
                m[x] = c[(i + 1) % len(c)]
        return cls(m)

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self._map)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._map))

    @property
    def max_point(self) -> int:
        """Largest moved point, 0 for the identity."""
        return max(self._map, default=0)

    def is_identity(self) -> bool:
        return not self._map

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles rotated to start at their minimum, ordered by minimum."""
        if self._cycles is None:
            rem = dict(self._map)
            pop = rem.pop
            out = []
            for start in sorted(rem):
                x = pop(start, None)
                if x is None:
                    continue
                cyc = [start]
                while x != start:
                    cyc.append(x)
                    x = pop(x)
                out.append(tuple(cyc))
            self._cycles = out
        return list(self._cycles)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r})"


@dataclass(frozen=True)
class CycleType:
    """Descending multiset of cycle lengths >= 2; labels a class [g] of S-infinity."""

    lengths: tuple[int, ...] = ()

    def __post_init__(self):
        lengths = tuple(sorted(self.lengths, reverse=True))
        if any(type(x) is not int or x < 2 for x in lengths):
            raise ValueError(f"cycle lengths must be integers >= 2, got {self.lengths!r}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def word_length(self) -> int:
        return sum(x - 1 for x in self.lengths)

    @property
    def degree(self) -> int:
        """Number of moved points."""
        return sum(self.lengths)

    def representative(self, start: int = 1) -> Permutation:
        """Cycles on consecutive points, longest first, beginning at ``start``."""
        m = {}
        p = start
        for L in self.lengths:
            for i in range(L - 1):
                m[p + i] = p + i + 1
            m[p + L - 1] = p
            p += L
        return Permutation._trusted(m)

    def __str__(self):
        return "+".join(map(str, self.lengths)) if self.lengths else "1"

    @classmethod
    def parse(cls, text: str) -> CycleType:
        """Inverse of ``str``: ``"3+2+2"``; ``"1"`` or ``""`` is the identity type."""
        text = text.strip()
        if text in ("", "1"):
            return cls(())
        try:
            parts = [int(t) for t in text.split("+")]
        except ValueError:
            raise CycleSyntaxError(f"bad cycle type {text!r}") from None
        try:
            return cls(tuple(parts))
        except ValueError as e:
            raise CycleSyntaxError(str(e)) from None


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SEP_RE = re.compile(r"\s*,\s*|\s+")


def parse_cycles(text: str, max_point: int = MAX_POINT) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"`` or ``"()"``.

    Cycles must be pairwise disjoint and each must list at least two points.
    """
    s = text.strip()
    if s == "()":
        return Permutation.identity()
    if not s:
        raise CycleSyntaxError("empty input")
    m: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        match = _CYCLE_RE.match(s, pos)
        if not match:
            raise CycleSyntaxError(f"expected '(' at offset {pos} in {text!r}")
        body = match.group(1).strip()
        tokens = _SEP_RE.split(body) if body else []
        if len(tokens) < 2:
            raise CycleSyntaxError(f"cycle {match.group(0)!r} needs at least two points")
        pts = []
        seen = set()
        for tok in tokens:
            if not tok.isdigit():
                raise CycleSyntaxError(f"bad point {tok!r} in {text!r}")
            x = int(tok)
            if x < 1 or x > max_point:
                raise CycleSyntaxError(f"point {x} outside 1..{max_point}")
            if x in m or x in seen:
                raise CycleSyntaxError(f"point {x} repeated in {text!r}")
            pts.append(x)
            seen.add(x)
        for i, x in enumerate(pts):
            m[x] = pts[(i + 1) % len(pts)]
        pos = match.end()
    return Permutation._trusted(m)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(left: Permutation, right: Permutation) -> Permutation:
    """The map ``x -> left(right(x))``."""
    lget, rget = left._map.get, right._map.get
    out = {}
    for x in right._map.keys() | left._map.keys():
        y = rget(x, x)
        y = lget(y, y)
        if y != x:
            out[x] = y
    return Permutation._trusted(out)


def product(factors: Iterable[Permutation]) -> Permutation:
    """Compose a sequence left to right in written order, ``f1 f2 ... fn``.

    Work is proportional to the total support of the factors rather than to
    the support of the running product.
    """
    acc: dict[int, int] = {}
    for f in factors:
        # acc <- acc o f; only points moved by f change their image.
        updates = [(x, acc.get(y, y)) for x, y in f._map.items()]
        for x, y in updates:
            if x == y:
                acc.pop(x, None)
            else:
                acc[x] = y
    return Permutation._trusted(acc)


def inverse(p: Permutation) -> Permutation:
    return Permutation._trusted({y: x for x, y in p._map.items()})


def conjugate(p: Permutation, c: Permutation) -> Permutation:
    """``c p c^-1``: every point x in the cycles of p is renamed c(x)."""
    get = c._map.get
    return Permutation._trusted({get(x, x): get(y, y) for x, y in p._map.items()})


def relabel(p: Permutation, mapping: Mapping[int, int]) -> Permutation:
    """Rename the points of p through an injective map defined on supp(p)."""
    return Permutation._trusted({mapping[x]: mapping[y] for x, y in p._map.items()})


def shift(p: Permutation, offset: int) -> Permutation:
    return Permutation._trusted({x + offset: y + offset for x, y in p._map.items()})


def _cycle_lengths(p: Permutation) -> list[int]:
    if p._cycles is not None:
        return [len(c) for c in p._cycles]
    rem = dict(p._map)
    pop = rem.pop
    out = []
    while rem:
        start, x = rem.popitem()
        n = 1
        while x != start:
            x = pop(x)
            n += 1
        out.append(n)
    return out


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(_cycle_lengths(p)))


def word_length(p: Permutation) -> int:
    """Minimum number of transpositions whose product is p."""
    return len(p._map) - len(_cycle_lengths(p))


def parity(p: Permutation) -> Parity:
    return Parity.EVEN if word_length(p) % 2 == 0 else Parity.ODD


def is_even(p: Permutation) -> bool:
    return word_length(p) % 2 == 0


@lru_cache(maxsize=1024)
def iota(k: int) -> Permutation:
    """(1 2)(3 4)...(2k-1 2k); the identity for k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = {}
    for i in range(1, 2 * k + 1, 2):
        m[i] = i + 1
        m[i + 1] = i
    return Permutation._trusted(m)


def transpositions(points: Sequence[int]) -> Permutation:
    """(p1 p2)(p3 p4)... over consecutive pairs of distinct points."""
    m = {}
    for a, b in zip(points[::2], points[1::2]):
        m[a] = b
        m[b] = a
    return Permutation._trusted(m)


def fresh_points(count: int, *perms: Permutation) -> list[int]:
    """The ``count`` smallest points above every support involved."""
    top = max((p.max_point for p in perms), default=0)
    return list(range(top + 1, top + 1 + count))


def extend_to_bijection(partial: Mapping[int, int]) -> Permutation:
    """Complete an injective partial map to a finite-support permutation.

    Points that are images but not in the domain are sent, in increasing
    order, to the points of the domain left without a preimage.
    """
    domain = set(partial)
    image = set(partial.values())
    if len(image) != len(partial):
        raise ValueError("partial map is not injective")
    full = dict(partial)
    for y, x in zip(sorted(image - domain), sorted(domain - image)):
        full[y] = x
    return Permutation._trusted({x: y for x, y in full.items() if x != y})


def _aligned_cycles(p: Permutation) -> dict[int, list[tuple[int, ...]]]:
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in p.cycles():
        by_len.setdefault(len(c), []).append(c)
    return by_len


def conjugator(src: Permutation, dst: Permutation) -> Permutation:
    """Some c with ``conjugate(src, c) == dst``.

    Cycles of equal length are paired in canonical order (by minimum point)
    and mapped positionally from their minimum-first rotations.
    """
    if src == dst:
        return Permutation.identity()
    a, b = _aligned_cycles(src), _aligned_cycles(dst)
    if {k: len(v) for k, v in a.items()} != {k: len(v) for k, v in b.items()}:
        raise TypeMismatch(f"{src} and {dst} have different cycle types")
    partial = {}
    for L, cycles in a.items():
        for cs, cd in zip(cycles, b[L]):
            partial.update(zip(cs, cd))
    return extend_to_bijection(partial)


def even_conjugator(src: Permutation, dst: Permutation) -> Permutation:
    """An even c with ``conjugate(src, c) == dst``.

    If the positional conjugator is odd it is multiplied on the left by a
    transposition of two points outside every support involved; that
    transposition commutes with dst, so the result still transports src.
    """
    c = conjugator(src, dst)
    if is_even(c):
        return c
    a, b = fresh_points(2, src, dst, c)
    return compose(transpositions([a, b]), c)
