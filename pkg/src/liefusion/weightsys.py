"""Weight systems, Weyl reductions, dimensions and character polynomials."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from . import cache
from .rootdata import Weight, build_cartan_data, check_weight


class ReductionError(RuntimeError):
    """The Weyl reduction loop ran past its iteration bound."""


def to_dominant(alg, weight) -> Weight:
    """Dominant representative of the Weyl orbit of ``weight``."""
    data = build_cartan_data(alg)
    A = data.cartan
    w = list(weight)
    n = len(w)
    while True:
        for i in range(n):
            if w[i] < 0:
                c = w[i]
                row = A[i]
                for j in range(n):
                    w[j] -= c * row[j]
                break
        else:
            return tuple(w)


@lru_cache(maxsize=4096)
def orbit(alg, weight) -> tuple:
    """All weights in the Weyl orbit of a dominant weight."""
    data = build_cartan_data(alg)
    A = data.cartan
    n = data.rank
    start = tuple(weight)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                c = w[i]
                if c > 0:
                    row = A[i]
                    v = tuple(w[j] - c * row[j] for j in range(n))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return tuple(sorted(seen, reverse=True))


def _dominant_weights(data, hw):
    """Dominant weights below ``hw`` with their depth (height of ``hw - mu``)."""
    roots = data.positive_roots_labels
    heights = [sum(r) for r in data.positive_roots]
    depth = {hw: 0}
    frontier = [hw]
    while frontier:
        nxt = []
        for mu in frontier:
            for r, h in zip(roots, heights):
                v = tuple(a - b for a, b in zip(mu, r))
                if min(v) >= 0 and v not in depth:
                    depth[v] = depth[mu] + h
                    nxt.append(v)
        frontier = nxt
    return depth


def freudenthal(alg, hw) -> dict:
    """Multiplicities of the dominant weights of the irrep ``hw``."""
    data = build_cartan_data(alg)
    hw = check_weight(alg, hw, dominant=True)
    stored = cache.load_dominant(data, hw)
    if stored is not None:
        return stored
    G = data.int_form
    n = data.rank
    roots = data.positive_roots_labels
    Gl = [[int(x) for x in row] for row in G]

    def ip(x, y):
        return sum(x[i] * Gl[i][j] * y[j] for i in range(n) for j in range(n))

    rho = data.rho
    hr = tuple(a + 1 for a in hw)
    top = ip(hr, hr)
    depth = _dominant_weights(data, hw)
    mult = {hw: 1}
    for mu in sorted(depth, key=lambda w: (depth[w], tuple(-x for x in w))):
        if mu == hw:
            continue
        total = 0
        for r in roots:
            j = 1
            while True:
                v = tuple(a + j * b for a, b in zip(mu, r))
                m = mult.get(to_dominant(data.alg, v))
                if not m:
                    break
                total += m * ip(v, r)
                j += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = top - ip(mr, mr)
        value, rem = divmod(2 * total, den)
        assert rem == 0, f"Freudenthal produced a non-integer multiplicity at {mu}"
        if value:
            mult[mu] = value
    cache.store_dominant(data, hw, mult)
    return mult


@dataclass(frozen=True, eq=False)
class WeightSystem:
    """Weights of one irrep and their multiplicities."""

    alg: object
    hw: Weight
    dominant: dict = field(repr=False)

    @cached_property
    def entries(self) -> dict:
        out = {}
        for mu, m in self.dominant.items():
            for w in orbit(self.alg, mu):
                out[w] = m
        return out

    @cached_property
    def arrays(self):
        """``(weights, multiplicities)`` as int64 arrays, one row per distinct weight."""
        ws, ms = [], []
        for mu, m in sorted(self.dominant.items(), reverse=True):
            orb = orbit(self.alg, mu)
            ws.extend(orb)
            ms.extend([m] * len(orb))
        return np.array(ws, dtype=np.int64).reshape(len(ws), len(self.hw)), np.array(ms, dtype=np.int64)

    @property
    def dimension(self) -> int:
        return int(self.arrays[1].sum())

    def __len__(self):
        return len(self.arrays[1])


@lru_cache(maxsize=2048)
def _weight_system(alg, hw) -> WeightSystem:
    return WeightSystem(alg, hw, freudenthal(alg, hw))


def weight_system(alg, hw) -> WeightSystem:
    data = build_cartan_data(alg)
    hw = check_weight(data.alg, hw, dominant=True)
    return _weight_system(data.alg, hw)


@dataclass(frozen=True)
class ReducedWeight:
    dominant: Weight
    sign: int


def reduce_shifted(alg, sigma, level: int | None = None) -> ReducedWeight:
    """Bring a rho-shifted weight into the fundamental chamber (or alcove).

    Reflects repeatedly at the most negative label, lowest index first. With
    ``level`` given, the affine label ``sigma_0 = level + h - <sigma, theta>``
    takes part as index 0 and ``s_0`` moves ``sigma`` by ``sigma_0 * theta``.
    Any label hitting zero along the way gives sign 0.
    """
    data = build_cartan_data(alg)
    sigma = check_weight(data.alg, sigma)
    d, s = reduce_shifted_batch(data, np.array([sigma], dtype=np.int64), level)
    return ReducedWeight(tuple(int(x) for x in d[0]), int(s[0]))


def reduce_shifted_batch(data, sigmas: np.ndarray, level: int | None = None):
    """Vectorised :func:`reduce_shifted` over the rows of ``sigmas``.

    Returns ``(reduced, signs)``; rows with sign 0 keep whatever value they
    had when a wall was detected.
    """
    A = data.cartan_array
    n = data.rank
    sig = np.array(sigmas, dtype=np.int64, copy=True).reshape(-1, n)
    m = len(sig)
    sign = np.ones(m, dtype=np.int64)
    active = np.ones(m, dtype=bool)
    theta = np.array(data.theta_labels, dtype=np.int64)
    lf = data.level_array
    height = None if level is None else level + data.dual_coxeter
    bound = 10 * (height or data.dual_coxeter + 1) * n + 10 * len(data.positive_roots) + 10
    for _ in range(bound):
        idx = np.nonzero(active)[0]
        if len(idx) == 0:
            return sig, sign
        cur = sig[idx]
        if height is None:
            labels = cur
        else:
            labels = np.concatenate([(height - cur @ lf)[:, None], cur], axis=1)
        wall = (labels == 0).any(axis=1)
        sign[idx[wall]] = 0
        active[idx[wall]] = False
        keep = ~wall
        idx, cur, labels = idx[keep], cur[keep], labels[keep]
        pos = labels.argmin(axis=1)
        low = labels[np.arange(len(idx)), pos]
        done = low > 0
        active[idx[done]] = False
        move = ~done
        idx, cur, pos, low = idx[move], cur[move], pos[move], low[move]
        if len(idx) == 0:
            continue
        if height is None:
            sig[idx] = cur - low[:, None] * A[pos]
        else:
            aff = pos == 0
            fin = ~aff
            out = cur.copy()
            out[aff] = cur[aff] + low[aff][:, None] * theta
            out[fin] = cur[fin] - low[fin][:, None] * A[pos[fin] - 1]
            sig[idx] = out
        sign[idx] = -sign[idx]
    raise ReductionError(f"Weyl reduction did not terminate within {bound} steps")


def weyl_dimension(alg, hw) -> int:
    """Weyl dimension formula, exact."""
    data = build_cartan_data(alg)
    hw = check_weight(data.alg, hw, dominant=True)
    G = data.quadratic_form
    n = data.rank
    num = Fraction(1)
    for r in data.positive_roots_labels:
        # <lambda + rho, alpha> / <rho, alpha>
        a = sum((hw[i] + 1) * G[i][j] * r[j] for i in range(n) for j in range(n))
        b = sum(G[i][j] * r[j] for i in range(n) for j in range(n))
        num *= a / b
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True)
class CharacterPolynomial:
    """Laurent polynomial in ``t_1..t_n``; exponents are Dynkin labels."""

    terms: dict

    @classmethod
    def constant(cls, rank: int, value: int = 1):
        return cls({(0,) * rank: value})

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return CharacterPolynomial({e: c for e, c in out.items() if c})

    def __mul__(self, other):
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return CharacterPolynomial({e: c for e, c in out.items() if c})

    def __sub__(self, other):
        return self + CharacterPolynomial({e: -c for e, c in other.terms.items()})

    def dimension(self) -> int:
        return sum(self.terms.values())

    def __str__(self):
        def mono(e, c):
            parts = []
            for i, x in enumerate(e, 1):
                if x == 1:
                    parts.append(f"t{i}")
                elif x:
                    parts.append(f"t{i}^{x}")
            body = "*".join(parts)
            if not body:
                return str(c)
            return body if c == 1 else f"{c}*{body}"

        return " + ".join(mono(e, c) for e, c in sorted(self.terms.items(), reverse=True)) or "0"


def character_polynomial(alg, hw) -> CharacterPolynomial:
    return CharacterPolynomial(dict(weight_system(alg, hw).entries))


def evaluate_at_level(alg, poly: CharacterPolynomial, mu, k: int) -> complex:
    """``sum a * exp(2 pi i <l, mu> / (h + k))`` over the terms ``a t^l``."""
    if k < 1:
        raise ValueError("level must be >= 1")
    data = build_cartan_data(alg)
    mu = check_weight(data.alg, mu)
    if not poly.terms:
        return 0j
    exps = np.array(list(poly.terms), dtype=float)
    coef = np.array(list(poly.terms.values()), dtype=float)
    phase = exps @ data.float_form @ np.array(mu, dtype=float)
    return complex(np.sum(coef * np.exp(2j * math.pi * phase / (data.dual_coxeter + k))))

