"""Tensor-product decomposition by Racah-Speiser reflection."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .rootdata import build_cartan_data, check_weight
from .weightsys import reduce_shifted_batch, weight_system


class CancellationError(RuntimeError):
    """Signed contributions left a negative multiplicity (an internal bug)."""


@dataclass(frozen=True)
class Diagnostics:
    """Bookkeeping of the shifted weights ``sigma = l' + mu + rho``.

    ``phi``/``psi`` count (with multiplicity) shifted weights contributing with
    sign +1/-1. ``nonneg`` counts those with no negative label before any
    reflection, ``nonneg_wall`` those among them already on a wall; ``negative``
    and ``negative_wall`` are the analogues for weights that need reflecting.
    """

    phi: int
    psi: int
    nonneg: int
    nonneg_wall: int
    negative: int
    negative_wall: int
    positive_part: dict = field(repr=False)
    negative_part: dict = field(repr=False)


@dataclass(frozen=True)
class Decomposition:
    """Dominant weight -> multiplicity."""

    terms: dict
    diagnostics: Diagnostics | None = None

    def total(self) -> int:
        return sum(self.terms.values())

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(-x for x in kv[0]))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Decomposition):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == other
        return NotImplemented

    def __str__(self):
        return ", ".join(f"({','.join(map(str, w))}):{m}" for w, m in self.items())


def _signed_sum(rows: np.ndarray, weights: np.ndarray):
    """Group equal rows and add their integer weights."""
    if len(rows) == 0:
        return rows.reshape(0, rows.shape[1] if rows.ndim == 2 else 0), weights[:0]
    uniq, inv = np.unique(rows, axis=0, return_inverse=True)
    return uniq, np.bincount(inv.ravel(), weights=weights, minlength=len(uniq)).round().astype(np.int64)


def _as_dict(rows, values) -> dict:
    return {tuple(int(x) for x in r): int(v) for r, v in zip(rows, values) if v}


def combine(data, reduced, signs, mults, context: str) -> dict:
    """Net multiplicities ``sum sign * mult`` per reduced weight, minus rho."""
    keep = signs != 0
    rows = reduced[keep] - np.array(data.rho, dtype=np.int64)
    uniq, net = _signed_sum(rows, (signs[keep] * mults[keep]).astype(float))
    if (net < 0).any():
        bad = uniq[net < 0][0]
        raise CancellationError(f"{context}: multiplicity {int(net[net < 0][0])} for {tuple(int(x) for x in bad)}")
    return _as_dict(uniq, net)


def _part(data, reduced, signs, mults, which):
    sel = signs == which
    uniq, tot = _signed_sum(reduced[sel] - np.array(data.rho, dtype=np.int64), mults[sel].astype(float))
    return _as_dict(uniq, tot)


def racah_speiser(data, lam, mu, level: int | None = None, diagnostics: bool = False) -> Decomposition:
    """Shared classical/affine Racah-Speiser driver; iterates over ``[lam]``."""
    W, mults = weight_system(data.alg, lam).arrays
    rho = np.array(data.rho, dtype=np.int64)
    sig = W + np.array(mu, dtype=np.int64) + rho
    reduced, signs = reduce_shifted_batch(data, sig, level)
    ctx = f"{data.alg} {lam} x {mu}" + ("" if level is None else f" at level {level}")
    terms = combine(data, reduced, signs, mults, ctx)
    diag = None
    if diagnostics:
        if level is None:
            labels = sig
        else:
            h = level + data.dual_coxeter
            labels = np.concatenate([(h - sig @ data.level_array)[:, None], sig], axis=1)
        nonneg = (labels >= 0).all(axis=1)
        on_wall = (labels == 0).any(axis=1)
        diag = Diagnostics(
            phi=int(mults[signs > 0].sum()),
            psi=int(mults[signs < 0].sum()),
            nonneg=int(mults[nonneg].sum()),
            nonneg_wall=int(mults[nonneg & on_wall].sum()),
            negative=int(mults[~nonneg].sum()),
            negative_wall=int(mults[~nonneg & (signs == 0)].sum()),
            positive_part=_part(data, reduced, signs, mults, 1),
            negative_part=_part(data, reduced, signs, mults, -1),
        )
    return Decomposition(terms, diag)


def tensor_decompose(alg, lam, mu, diagnostics: bool = False) -> Decomposition:
    """Decompose ``lam (x) mu`` into irreps.

    Runs over the smaller of the two weight systems unless ``diagnostics`` is
    requested, in which case the sum runs over ``[lam]`` so the counters refer
    to the left factor.
    """
    data = build_cartan_data(alg)
    lam = check_weight(data.alg, lam, dominant=True)
    mu = check_weight(data.alg, mu, dominant=True)
    if not diagnostics and len(weight_system(data.alg, mu)) < len(weight_system(data.alg, lam)):
        lam, mu = mu, lam
    return racah_speiser(data, lam, mu, None, diagnostics)


def total_multiplicity(alg, lam, mu) -> int:
    return tensor_decompose(alg, lam, mu).total()


def tensor_matrix(alg, lam, weights) -> np.ndarray:
    """``M[i, j] = N_{lam, weights[i]}^{weights[j]}`` restricted to ``weights``."""
    weights = [tuple(w) for w in weights]
    index = {w: i for i, w in enumerate(weights)}
    M = np.zeros((len(weights), len(weights)), dtype=np.int64)
    for i, w in enumerate(weights):
        for nu, m in tensor_decompose(alg, lam, w).terms.items():
            j = index.get(nu)
            if j is not None:
                M[i, j] = m
    return M
