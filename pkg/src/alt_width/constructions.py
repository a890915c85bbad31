"""Explicit factorizations that bound conjugacy width in the infinite alternating group.

The pipeline writes an even permutation g as a product of at most
``4 * wl(g) / wl(h) + 4`` permutations with the cycle type of h, where ``wl`` is
the transposition word length:

* ``lemma_a``: a product of ``2l`` disjoint transpositions ``iota(2l)`` as two
  elements shaped like h, with ``4l >= wl(h)``;
* ``lemma_b``: ``iota(2nl)`` as n disjoint blocks each shaped like ``iota(2l)``;
* ``lemma_c``: g as two elements shaped like ``iota(k)`` for any ``k >= wl(g)/2``.

``decompose`` chains the three with explicit conjugators and returns a
``Certificate`` that ``verify_certificate`` checks independently.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    IdentityInput,
    InvalidArgument,
    KTooSmall,
    NotACycle,
    OddPermutation,
    ParityObstruction,
)
from .perm import (
    CycleType,
    Permutation,
    conjugate,
    conjugator,
    compose,
    cycle_type,
    even_conjugator,
    extend_to_bijection,
    format_cycles,
    fresh_points,
    iota,
    is_even,
    parse_cycles,
    product,
    shift,
    transpositions,
    word_length,
)

CONVENTION = "right-factor-first"


class Chirality(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class FactorPair:
    first: Permutation
    second: Permutation
    ell_or_k: int

    @property
    def product(self) -> Permutation:
        return compose(self.first, self.second)


# ---------------------------------------------------------------------------
# Transposition-block construction (two conjugates of h give iota(2l))
# ---------------------------------------------------------------------------

def table_row(wl: int) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Return cycles ``(A, B, l)`` with ``inverse(A) * B == iota(2l)``.

    Both cycles have length ``wl + 1``.  ``wl == 1`` is the transposition row;
    otherwise ``l = (wl + 1) // 3`` and the row family is chosen by ``wl mod 3``.
    """
    if wl < 1:
        raise InvalidArgument("word length must be positive")
    if wl == 1:
        return (1, 2), (3, 4), 1
    k = (wl + 1) // 3
    extra = wl - (3 * k - 1)
    a = [x for x in range(1, 4 * k) if x % 4 != 0]
    b = [x for x in range(1, 4 * k + 1) if x % 4 != 2]
    tail = list(range(4 * k + 1, 4 * k + 1 + extra))
    return tuple(a + tail), tuple(b + tail), k


def lemma_a(h: Permutation) -> FactorPair:
    """Write ``iota(2l)`` as ``f1 * f2`` with f1, f2 of the same cycle type as h.

    Every cycle of h gets its own table row on a disjoint window of
    ``4 l_i + 2`` points; a final relabeling packs the resulting transpositions
    onto 1..4l so the product is exactly ``iota(2l)`` with ``l = sum l_i``.
    """
    if h.is_identity():
        raise IdentityInput("h must be nontrivial")
    f1: dict[int, int] = {}
    f2: dict[int, int] = {}
    moved: list[int] = []
    offset = 0
    ell = 0
    for cyc in h.cycles():
        a, b, li = table_row(len(cyc) - 1)
        # first factor is the inverse of cycle a
        for i, x in enumerate(a):
            f1[a[(i + 1) % len(a)] + offset] = x + offset
        for i, x in enumerate(b):
            f2[x + offset] = b[(i + 1) % len(b)] + offset
        moved.extend(range(offset + 1, offset + 4 * li + 1))
        offset += 4 * li + 2
        ell += li
    first, second = Permutation._trusted(f1), Permutation._trusted(f2)
    # The window products are transpositions on the first 4 l_i points of
    # each window; pack those onto 1..4l and park the leftover points after.
    rest = sorted((f1.keys() | f2.keys()) - set(moved))
    target = {x: i for i, x in enumerate(moved, start=1)}
    target.update({x: i for i, x in enumerate(rest, start=len(moved) + 1)})
    c = extend_to_bijection(target)
    return FactorPair(conjugate(first, c), conjugate(second, c), ell)


def lemma_b(ell: int, n: int) -> list[Permutation]:
    """n disjoint blocks of ``2 ell`` transpositions whose product is ``iota(2 n ell)``."""
    if ell < 1 or n < 1:
        raise InvalidArgument("ell and n must be positive")
    return [shift(iota(2 * ell), 4 * ell * i) for i in range(n)]


# ---------------------------------------------------------------------------
# Cycles as products of two transposition blocks
# ---------------------------------------------------------------------------

def _odd_block(n: int) -> Permutation:
    # (2 3)(4 5)...(2n 2n+1)
    return shift(iota(n), 1)


def sublemma_pair(n: int, form: int) -> tuple[Permutation, Permutation]:
    """Left and right factors of the three canonical cycle identities at size n.

    ``form`` 1: ``(2 3)..(2n 2n+1) * iota(n)``;
    ``form`` 2: ``(2 3)..(2n 2n+1) * iota(n+1)``;
    ``form`` 3: ``iota(n+1) * (2 3)..(2n 2n+1)``.
    """
    if form == 1:
        return _odd_block(n), iota(n)
    if form == 2:
        return _odd_block(n), iota(n + 1)
    if form == 3:
        return iota(n + 1), _odd_block(n)
    raise InvalidArgument(f"unknown form {form}")


def sublemma_cycle(n: int, form: int) -> tuple[int, ...]:
    """Point sequence of the cycle produced by ``sublemma_pair(n, form)``."""
    odds_up = list(range(1, 2 * n + 2, 2))
    if form == 1:
        return tuple(odds_up + list(range(2 * n, 0, -2)))
    if form == 2:
        return tuple(odds_up + list(range(2 * n + 2, 0, -2)))
    if form == 3:
        return tuple([1] + list(range(2, 2 * n + 3, 2)) + list(range(2 * n + 1, 2, -2)))
    raise InvalidArgument(f"unknown form {form}")


def sublemma_factor(cycle: Permutation, chirality: Chirality = Chirality.A) -> FactorPair:
    """Split a single cycle into two products of disjoint transpositions.

    A cycle of word length 2n splits as (iota(n)-shaped, iota(n)-shaped).  Word
    length 2n+1 splits as (n, n+1) transpositions for chirality A and (n+1, n)
    for chirality B.  A transposition is the n = 0 case.  The returned
    ``ell_or_k`` is the transposition count of the first factor.
    """
    cycles = cycle.cycles()
    if len(cycles) != 1:
        raise NotACycle(f"{cycle} is not a single cycle")
    first, second = _split_cycle(cycles[0], chirality)
    return FactorPair(Permutation._trusted(first), Permutation._trusted(second), len(first) // 2)


def _split_cycle(pts: tuple[int, ...], chirality: Chirality) -> tuple[dict[int, int], dict[int, int]]:
    wl = len(pts) - 1
    n = wl // 2
    if wl % 2 == 0:
        form = 1
    else:
        form = 2 if chirality is Chirality.A else 3
    left, right = sublemma_pair(n, form)
    mapping = dict(zip(sublemma_cycle(n, form), pts))
    return (
        {mapping[x]: mapping[y] for x, y in left._map.items()},
        {mapping[x]: mapping[y] for x, y in right._map.items()},
    )


def lemma_c(g: Permutation, k: int) -> FactorPair:
    """Write even g as ``f1 * f2`` with both factors shaped like ``iota(k)``.

    Odd-word-length cycles alternate chirality A, B, A, ... in canonical order,
    so each half carries exactly ``wl(g)/2`` transpositions.  Both halves are
    then padded with the same ``k - wl(g)/2`` transpositions on fresh points,
    which cancel in the product.
    """
    if g.is_identity():
        raise IdentityInput("g must be nontrivial")
    wl = word_length(g)
    if wl % 2:
        raise OddPermutation(f"{g} is odd")
    half = wl // 2
    if k < half:
        raise KTooSmall(f"k = {k} < wl(g)/2 = {half}")
    f1: dict[int, int] = {}
    f2: dict[int, int] = {}
    chir = Chirality.A
    for cyc in g.cycles():
        a, b = _split_cycle(cyc, chir)
        if (len(cyc) - 1) % 2:
            chir = Chirality.B if chir is Chirality.A else Chirality.A
        f1.update(a)
        f2.update(b)
    first, second = Permutation._trusted(f1), Permutation._trusted(f2)
    r = k - half
    if r:
        pad = transpositions(fresh_points(2 * r, g, first, second))
        first, second = compose(first, pad), compose(pad, second)
    return FactorPair(first, second, k)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Witness that ``target == factors[0] * factors[1] * ... * factors[-1]``."""

    target: Permutation
    base_type: CycleType
    factors: tuple[Permutation, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "target": format_cycles(self.target),
            "base": format_cycles(self.base_type.representative()),
            "factors": [format_cycles(f) for f in self.factors],
            "convention": CONVENTION,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        conv = data.get("convention", CONVENTION)
        if conv != CONVENTION:
            raise InvalidArgument(f"unsupported convention {conv!r}")
        return cls(
            target=parse_cycles(data["target"]),
            base_type=cycle_type(parse_cycles(data["base"])),
            factors=tuple(parse_cycles(f) for f in data["factors"]),
        )

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class VerificationReport:
    product_ok: bool
    types_ok: bool
    count: int
    bound: Fraction | None
    within_bound: bool

    @property
    def passed(self) -> bool:
        return self.product_ok and self.types_ok

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "product_ok": self.product_ok,
            "types_ok": self.types_ok,
            "count": self.count,
            "bound": None if self.bound is None else str(self.bound),
            "within_bound": self.within_bound,
        }


def width_bound(wl_g: int, wl_h: int) -> Fraction:
    """``4 wl_g / wl_h + 4`` as an exact rational."""
    return Fraction(4 * wl_g, wl_h) + 4


def verify_certificate(cert: Certificate) -> VerificationReport:
    product_ok = product(cert.factors) == cert.target
    types_ok = all(cycle_type(f) == cert.base_type for f in cert.factors)
    wl_h = cert.base_type.word_length
    bound = width_bound(word_length(cert.target), wl_h) if wl_h else None
    within = bound is not None and len(cert.factors) <= bound
    return VerificationReport(product_ok, types_ok, len(cert.factors), bound, within)


def plan(wl_g: int, h: Permutation) -> tuple[int, int, int]:
    """``(l, n, k)`` used by ``decompose``; the certificate has ``4n`` factors."""
    ell = sum(max(1, len(c) // 3) for c in h.cycles())
    n = max(1, math.ceil(Fraction(wl_g, 4 * ell)))
    return ell, n, 2 * n * ell


def decompose(g: Permutation, h: Permutation) -> Certificate:
    """Write even g as ``4n <= 4 wl(g)/wl(h) + 4`` factors with the cycle type of h."""
    if g.is_identity() or h.is_identity():
        raise IdentityInput("g and h must be nontrivial")
    if not is_even(g):
        if is_even(h):
            raise ParityObstruction(f"{g} is odd and {h} is even: not in the normal closure")
        raise OddPermutation(f"{g} is odd; only even targets are decomposed")
    transport = even_conjugator if is_even(h) else conjugator

    pair_a = lemma_a(h)
    ell = pair_a.ell_or_k
    n = max(1, math.ceil(Fraction(word_length(g), 4 * ell)))
    k = 2 * n * ell
    halves = lemma_c(g, k)
    blocks = lemma_b(ell, n)
    block_base = iota(2 * ell)
    big_base = iota(k)
    block_maps = [transport(block_base, b) for b in blocks]

    factors = []
    for half in (halves.first, halves.second):
        c_half = transport(big_base, half)
        for d in block_maps:
            for f in (pair_a.first, pair_a.second):
                factors.append(conjugate(conjugate(f, d), c_half))
    return Certificate(g, cycle_type(h), tuple(factors))
