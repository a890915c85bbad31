"""Class metric on the nontrivial classes of the infinite alternating group.

A class is labelled by its cycle type.  ``psi`` sends a class to the log of its
word length; the class distance is sandwiched between two-sided width bounds,
and ``experiment_quasi_isometry`` checks on sampled pairs that the distance
stays within ``log 8`` of ``|psi(g) - psi(h)|``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from .constructions import decompose, verify_certificate, width_bound
from .errors import InvalidArgument, InvalidRange
from .perm import CycleType

CERTIFICATE_LIMIT = 2**12
QI_CONSTANT = math.log(8)
FLOAT_TOL = 1e-9

CSV_FIELDS = ("class_g", "class_h", "lambda_g", "lambda_h", "psi_g", "psi_h", "d_lower", "d_upper", "gap")


@dataclass(frozen=True)
class ClassId:
    cycle_type: CycleType

    def __post_init__(self):
        wl = self.cycle_type.word_length
        if wl < 2 or wl % 2:
            raise InvalidArgument(f"{self.cycle_type} is not a nontrivial even class (word length {wl})")

    @classmethod
    def parse(cls, text: str) -> ClassId:
        return cls(CycleType.parse(text))

    def __str__(self):
        return str(self.cycle_type)


@dataclass(frozen=True)
class BoundsInterval:
    lower: Fraction
    upper: Fraction
    upper_source: str  # "certificate" or "formula"


@dataclass(frozen=True)
class DBounds:
    g_by_h: BoundsInterval  # width of [g] over generators [h]
    h_by_g: BoundsInterval
    d_lower: float
    d_upper: float


def lambda_class(c: ClassId) -> int:
    return c.cycle_type.word_length


def psi(c: ClassId) -> float:
    return math.log(lambda_class(c))


def width_interval(g: ClassId, h: ClassId, certificate_limit: int = CERTIFICATE_LIMIT) -> BoundsInterval:
    """Bounds on the width of [g] over [h].

    The upper bound is the length of a constructed and verified certificate on
    canonical representatives, or the closed-form bound above the size limit.
    """
    wl_g, wl_h = lambda_class(g), lambda_class(h)
    lower = Fraction(max(1, -(-wl_g // wl_h)))
    formula = width_bound(wl_g, wl_h)
    if max(wl_g, wl_h) <= certificate_limit:
        cert = decompose(g.cycle_type.representative(), h.cycle_type.representative())
        report = verify_certificate(cert)
        if not (report.passed and report.within_bound):
            raise AssertionError(f"certificate for {g} over {h} failed verification: {report}")
        return BoundsInterval(lower, Fraction(report.count), "certificate")
    return BoundsInterval(lower, formula, "formula")


def d_bounds(g: ClassId, h: ClassId, certificate_limit: int = CERTIFICATE_LIMIT) -> DBounds:
    gh = width_interval(g, h, certificate_limit)
    hg = width_interval(h, g, certificate_limit)
    return DBounds(
        gh,
        hg,
        math.log(max(gh.lower, hg.lower)),
        math.log(max(gh.upper, hg.upper)),
    )


def _random_type(rng: random.Random, wl: int) -> CycleType:
    # Uniform random composition of wl: each of the wl-1 gaps is cut with
    # probability 1/2; a part p becomes a cycle of length p + 1.
    parts = []
    run = 1
    for _ in range(wl - 1):
        if rng.random() < 0.5:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return CycleType(tuple(p + 1 for p in parts))


def sample_classes(count: int, lambda_min: int, lambda_max: int, seed: int) -> list[ClassId]:
    """Seeded random even classes with word length uniform over the even values in range."""
    if count < 1 or lambda_min < 2 or lambda_min > lambda_max:
        raise InvalidRange(f"need count >= 1 and 2 <= lambda_min <= lambda_max, got {count}, {lambda_min}, {lambda_max}")
    lo = lambda_min + (lambda_min % 2)
    if lo > lambda_max:
        raise InvalidRange(f"no even word length in [{lambda_min}, {lambda_max}]")
    rng = random.Random(seed)
    evens = range(lo, lambda_max + 1, 2)
    return [ClassId(_random_type(rng, rng.choice(evens))) for _ in range(count)]


@dataclass(frozen=True)
class ExperimentRow:
    class_g: ClassId
    class_h: ClassId
    lambda_g: int
    lambda_h: int
    psi_g: float
    psi_h: float
    d_lower: float
    d_upper: float
    gap: float

    @property
    def lower_ok(self) -> bool:
        return self.d_lower >= abs(self.psi_g - self.psi_h) - FLOAT_TOL

    @property
    def upper_ok(self) -> bool:
        return self.gap <= QI_CONSTANT + FLOAT_TOL

    def as_record(self) -> dict:
        rec = asdict(self)
        rec["class_g"] = str(self.class_g)
        rec["class_h"] = str(self.class_h)
        return rec


def experiment_row(g: ClassId, h: ClassId, certificate_limit: int = CERTIFICATE_LIMIT) -> ExperimentRow:
    b = d_bounds(g, h, certificate_limit)
    pg, ph = psi(g), psi(h)
    return ExperimentRow(
        g, h, lambda_class(g), lambda_class(h), pg, ph, b.d_lower, b.d_upper, b.d_upper - abs(pg - ph)
    )


@dataclass
class ExperimentResult:
    rows: list[ExperimentRow]
    seed: int

    @property
    def max_gap(self) -> float:
        return max((r.gap for r in self.rows), default=0.0)

    @property
    def passed(self) -> bool:
        return all(r.lower_ok and r.upper_ok for r in self.rows)

    def summary(self) -> dict:
        return {"max_gap": self.max_gap, "pair_count": len(self.rows), "seed": self.seed}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            rec = r.as_record()
            w.writerow([_fmt(rec[k]) for k in CSV_FIELDS])
        return buf.getvalue()

    def to_json(self, **kw) -> str:
        rows = [{k: _json_val(v) for k, v in r.as_record().items()} for r in self.rows]
        return json.dumps({"rows": rows, "summary": self.summary()}, **kw)


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _json_val(v):
    return float(f"{v:.12g}") if isinstance(v, float) else v


def experiment_quasi_isometry(
    count: int = 1000,
    lambda_min: int = 2,
    lambda_max: int = 4096,
    seed: int = 7,
    certificate_limit: int = CERTIFICATE_LIMIT,
    pairs: Sequence[tuple[ClassId, ClassId]] | None = None,
) -> ExperimentResult:
    """Evaluate ``count`` seeded class pairs (or the explicit ``pairs``)."""
    if pairs is None:
        classes = sample_classes(2 * count, lambda_min, lambda_max, seed)
        pairs = list(zip(classes[::2], classes[1::2]))
    rows = [experiment_row(g, h, certificate_limit) for g, h in pairs]
    return ExperimentResult(rows, seed)
