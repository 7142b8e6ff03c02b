"""Executable checks of the sum rules, the cross-method oracle and the vanishing census."""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field

import numpy as np

from .fusion import FusionRing, alcove, fusion_matrices
from .modular import DEFAULT_EPS, s_matrix, sigma_sums, verlinde_raw
from .rootdata import build_cartan_data, level_of, parse_algebra
from .symmetry import RepType, conjugate, forcing_automorphism, rep_type
from .tensor import total_multiplicity


@dataclass(frozen=True)
class Sample:
    """Which weight pairs to test: all of them up to ``limit``, else a seeded subset.

    Classical checks draw weights with labels at most ``max_label`` and, when
    ``max_level`` is set, of level at most ``max_level``.
    """

    max_label: int = 2
    limit: int = 400
    seed: int = 0
    max_level: int | None = None

    def pairs(self, weights):
        allpairs = list(itertools.combinations_with_replacement(weights, 2))
        if len(allpairs) <= self.limit:
            return allpairs
        return random.Random(self.seed).sample(allpairs, self.limit)


@dataclass
class TheoremReport:
    theorem: str
    alg: str
    level: int | None
    cases: int = 0
    max_residual: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict
        out["failures"] = [[list(map(list, w)), list(v)] for w, v in self.failures]
        return out

    def __str__(self):
        where = self.alg if self.level is None else f"{self.alg} k={self.level}"
        line = f"{self.theorem:<10} {where:<10} cases={self.cases:<6} residual={self.max_residual:.2e} {self.verdict}"
        for weights, values in self.failures[:5]:
            line += f"\n    {weights}: {values}"
        return line


def _labels_upto(rank, top):
    return list(itertools.product(range(top + 1), repeat=rank))


def check_theorem1(alg, sample: Sample = Sample()) -> TheoremReport:
    """``sum_nu N(lam, mu; nu) == sum_nu N(conj lam, mu; nu)`` on classical pairs."""
    data = build_cartan_data(alg)
    report = TheoremReport("theorem1", data.alg.name, None)
    weights = _labels_upto(data.rank, sample.max_label)
    if sample.max_level is not None:
        weights = [w for w in weights if level_of(data.alg, w) <= sample.max_level]
    if all(conjugate(data.alg, w) == w for w in weights):
        return report
    for lam, mu in sample.pairs(weights):
        bar = conjugate(data.alg, lam)
        if bar == lam:
            continue
        a, b = total_multiplicity(data.alg, lam, mu), total_multiplicity(data.alg, bar, mu)
        report.cases += 1
        if a != b:
            report.failures.append(((lam, mu), (a, b)))
    return report


def check_theorem2(ring: FusionRing, sample: Sample = Sample()) -> TheoremReport:
    """The same identity for level-k fusion coefficients."""
    report = TheoremReport("theorem2", ring.alg.name, ring.level)
    totals = fusion_matrices(ring).sum(axis=2)
    conj = ring.conjugation
    for lam, mu in sample.pairs(ring.alcove):
        i, j = ring.index[lam], ring.index[mu]
        if conj[i] == i:
            continue
        report.cases += 1
        a, b = int(totals[i, j]), int(totals[conj[i], j])
        if a != b:
            report.failures.append(((lam, mu), (a, b)))
    return report


def check_theorem3_4(ring: FusionRing, eps: float = DEFAULT_EPS) -> TheoremReport:
    """``Sigma(kappa)`` vanishes for every complex or quaternionic ``kappa``."""
    md = s_matrix(ring, eps)
    sig = np.abs(sigma_sums(md))
    thr = md.zero_threshold
    report = TheoremReport("theorem3-4", ring.alg.name, ring.level)
    for i, w in enumerate(ring.alcove):
        if rep_type(ring.alg, w) is RepType.REAL:
            continue
        report.cases += 1
        report.max_residual = max(report.max_residual, float(sig[i]))
        if sig[i] >= thr:
            report.failures.append(((w,), (float(sig[i]),)))
    return report


def check_oracles(ring: FusionRing, sample: Sample = Sample(limit=10**9), eps: float = DEFAULT_EPS) -> TheoremReport:
    """Affine Racah-Speiser, Kac-Walton and rounded Verlinde agree."""
    rs, kw = fusion_matrices(ring, "rs"), fusion_matrices(ring, "kw")
    raw = verlinde_raw(s_matrix(ring, eps))
    rounded = np.rint(raw.real).astype(np.int64)
    report = TheoremReport("oracles", ring.alg.name, ring.level)
    for lam, mu in sample.pairs(ring.alcove):
        i, j = ring.index[lam], ring.index[mu]
        report.cases += 1
        report.max_residual = max(report.max_residual, float(np.abs(raw[i, j] - rounded[i, j]).max()))
        if not (np.array_equal(rs[i, j], kw[i, j]) and np.array_equal(rs[i, j], rounded[i, j])):
            report.failures.append(((lam, mu), ("rs", "kw", "verlinde disagree")))
    if report.max_residual >= 1e-6:
        report.failures.append(((), ("verlinde rounding residual", report.max_residual)))
    return report


@dataclass(frozen=True)
class CensusEntry:
    weight: tuple
    rep_type: RepType
    abs_sigma: float
    vanished: bool
    explained_by: str | None


@dataclass(frozen=True)
class VanishingCensus:
    alg: str
    level: int
    size: int
    entries: tuple

    def vanishing(self) -> list:
        return [e for e in self.entries if e.vanished]

    def by_reason(self, reason: str) -> list:
        return [e.weight for e in self.entries if e.explained_by == reason]

    @property
    def accidental(self) -> list:
        return self.by_reason("accidental")

    def to_dict(self) -> dict:
        return {
            "alg": self.alg,
            "level": self.level,
            "size": self.size,
            "vanishing": len(self.vanishing()),
            "accidental": [list(w) for w in self.accidental],
            "entries": [
                {
                    "weight": list(e.weight),
                    "rep_type": str(e.rep_type),
                    "abs_sigma": e.abs_sigma,
                    "vanished": e.vanished,
                    "explained_by": e.explained_by,
                }
                for e in self.entries
            ],
        }


def vanishing_census(ring: FusionRing, eps: float = DEFAULT_EPS) -> VanishingCensus:
    """Classify every zero of ``Sigma(kappa)`` by what forces it, if anything."""
    md = s_matrix(ring, eps)
    sig = np.abs(sigma_sums(md))
    thr = md.zero_threshold
    entries = []
    for i, w in enumerate(ring.alcove):
        kind = rep_type(ring.alg, w)
        vanished = bool(sig[i] < thr)
        reason = None
        if vanished:
            if kind is RepType.COMPLEX:
                reason = "complex"
            elif kind is RepType.QUATERNIONIC:
                reason = "quaternionic"
            elif forcing_automorphism(ring.alg, w) is not None:
                reason = "automorphism-grading"
            else:
                reason = "accidental"
        entries.append(CensusEntry(w, kind, float(sig[i]), vanished, reason))
    return VanishingCensus(ring.alg.name, ring.level, len(ring), tuple(entries))


# (algebra, largest label for classical pairs, levels for the fusion checks);
# an optional fourth entry caps the level of the classical weights
DEFAULT_GRID = (
    ("A1", 3, range(1, 7)),
    ("A2", 3, range(1, 5)),
    ("A3", 2, range(1, 4)),
    ("A4", 1, range(1, 3)),
    ("B2", 2, range(1, 4)),
    ("B3", 1, range(1, 3)),
    ("C2", 2, range(1, 4)),
    ("C3", 1, range(1, 3)),
    ("D4", 1, range(1, 3)),
    ("D5", 1, range(1, 3)),
    ("G2", 2, range(1, 4)),
    ("F4", 1, range(1, 3)),
    ("E6", 1, range(1, 4)),
)

QUICK_GRID = (
    ("A1", 3, range(1, 4)),
    ("A2", 2, range(1, 3)),
    ("D5", 1, range(1, 2)),
    ("E6", 1, range(1, 3), 3),
)

GRIDS = {"default": DEFAULT_GRID, "quick": QUICK_GRID}


def run_grid(name: str = "default", seed: int = 0, limit: int = 200, eps: float = DEFAULT_EPS) -> list[TheoremReport]:
    reports = []
    for alg_name, top, levels, *cap in GRIDS[name]:
        alg = parse_algebra(alg_name)
        reports.append(check_theorem1(alg, Sample(top, limit, seed, *cap)))
        for k in levels:
            ring = alcove(alg, k)
            reports.append(check_theorem2(ring, Sample(0, limit, seed)))
            reports.append(check_theorem3_4(ring, eps))
            reports.append(check_oracles(ring, Sample(0, limit, seed), eps))
    return reports
