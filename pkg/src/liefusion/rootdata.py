"""Root-system constants for the simple Lie algebras.

Weights are plain integer tuples of Dynkin labels. The root length convention
is ``(long root, long root) = 2`` so that the level ``<lambda, theta>`` is an
integer on the weight lattice.

Node ordering is Bourbaki for A-D, E8, F4 and G2 (``alpha_1`` short in G2).
E6 is the chain 1-2-3-4-5 with node 6 attached to node 3, and E7 is the chain
1-...-6 with node 7 attached to node 4; in both the highest root is
``omega_6``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

Weight = tuple  # tuple[int, ...] of Dynkin labels


class InvalidAlgebraError(ValueError):
    pass


class WeightError(ValueError):
    """A weight violates a precondition (wrong length, not dominant, above level)."""


SERIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class AlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s not in SERIES:
            raise InvalidAlgebraError(f"unknown series {s!r}")
        if not isinstance(n, int) or n < 1:
            raise InvalidAlgebraError(f"rank must be a positive integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[s]
        if not ok:
            raise InvalidAlgebraError(f"{s}{n} is not a simple Lie algebra in the supported range")

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self):
        return self.name


def parse_algebra(text: str) -> AlgebraId:
    """Parse names such as ``"A2"``, ``"e6"`` or ``"D5"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
    if not m:
        raise InvalidAlgebraError(f"cannot parse algebra name {text!r}")
    return AlgebraId(m.group(1).upper(), int(m.group(2)))


def parse_weight(text: str) -> Weight:
    """Parse comma separated Dynkin labels, e.g. ``"1,0,0,0,2,0"``."""
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise WeightError(f"cannot parse weight {text!r}") from None


def _as_algebra(alg) -> AlgebraId:
    if isinstance(alg, AlgebraId):
        return alg
    if isinstance(alg, str):
        return parse_algebra(alg)
    raise TypeError(f"expected AlgebraId or name, got {type(alg).__name__}")


def _diagram(alg: AlgebraId):
    """Squared root lengths and edges (0-based) of the Dynkin diagram."""
    s, n = alg.series, alg.rank
    two, one = Fraction(2), Fraction(1)
    chain = [(i, i + 1) for i in range(n - 1)]
    if s == "A":
        return [two] * n, chain
    if s == "B":
        return [two] * (n - 1) + [one], chain
    if s == "C":
        return [one] * (n - 1) + [two], chain
    if s == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return [two] * n, edges
    if s == "E":
        if n == 6:
            edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
        elif n == 7:
            edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
        else:  # Bourbaki E8: chain 1-3-4-5-6-7-8, node 2 on node 4
            edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
        return [two] * n, edges
    if s == "F":
        return [two, two, one, one], chain
    # G2
    return [Fraction(2, 3), two], chain


def _exact_inverse(mat):
    import sympy

    inv = sympy.Matrix(mat).inv()
    n = len(mat)
    return tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n)) for i in range(n))


def _exact_det(mat) -> int:
    import sympy

    return int(sympy.Matrix(mat).det())


@dataclass(frozen=True, eq=False)
class CartanData:
    """Constants of one simple Lie algebra.

    ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` holds the Dynkin
    labels of the simple root ``alpha_i``. ``quadratic_form[i][j]`` is
    ``<omega_i, omega_j>``. Positive roots are stored in simple-root
    coordinates, sorted by height.
    """

    alg: AlgebraId
    cartan: tuple
    root_lengths: tuple
    quadratic_form: tuple
    positive_roots: tuple
    theta_labels: Weight
    theta_roots: tuple
    rho: Weight
    dual_coxeter: int
    dim_g: int
    center_order: int
    level_form: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.alg.rank

    # float/int arrays for the numeric paths
    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def form_denominator(self) -> int:
        den = 1
        for row in self.quadratic_form:
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
        return den

    @cached_property
    def int_form(self) -> np.ndarray:
        """``form_denominator * quadratic_form`` as an exact integer array."""
        d = self.form_denominator
        return np.array([[int(x * d) for x in row] for row in self.quadratic_form], dtype=np.int64)

    @cached_property
    def float_form(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.quadratic_form])

    @cached_property
    def positive_roots_labels(self) -> tuple:
        """Positive roots as Dynkin-label vectors (same order as ``positive_roots``)."""
        A = self.cartan
        n = self.rank
        return tuple(tuple(sum(c[i] * A[i][j] for i in range(n)) for j in range(n)) for c in self.positive_roots)

    @cached_property
    def level_array(self) -> np.ndarray:
        return np.array(self.level_form, dtype=np.int64)

    def to_root_coordinates(self, weight) -> tuple:
        """Coordinates of ``weight`` along the simple roots (exact rationals)."""
        inv = _exact_inverse(self.cartan)
        n = self.rank
        return tuple(sum(Fraction(weight[i]) * inv[i][j] for i in range(n)) for j in range(n))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _positive_roots(cartan, n):
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            labels = [sum(beta[i] * cartan[i][j] for i in range(n)) for j in range(n)]
            for i in range(n):
                # alpha_i string through beta: q = p - <beta, alpha_i^vee>
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - labels[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        roots.extend(nxt)
        layer = nxt
    roots.sort(key=lambda r: (sum(r), tuple(-x for x in r)))
    return tuple(roots)


@lru_cache(maxsize=None)
def _build(alg: AlgebraId) -> CartanData:
    n = alg.rank
    lengths, edges = _diagram(alg)
    bil = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        bil[i][i] = lengths[i]
    for i, j in edges:
        bil[i][j] = bil[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = tuple(tuple(int(2 * bil[i][j] / bil[j][j]) for j in range(n)) for i in range(n))
    inv = _exact_inverse(cartan)
    form = tuple(tuple(inv[i][j] * lengths[j] / 2 for j in range(n)) for i in range(n))
    proots = _positive_roots(cartan, n)
    theta_roots = max(proots, key=sum)
    theta = tuple(sum(theta_roots[i] * cartan[i][j] for i in range(n)) for j in range(n))
    level_form = tuple(sum(form[i][j] * theta[j] for j in range(n)) for i in range(n))
    assert all(x.denominator == 1 for x in level_form)
    level_form = tuple(int(x) for x in level_form)
    rho = (1,) * n
    h_dual = 1 + sum(level_form)
    return CartanData(
        alg=alg,
        cartan=cartan,
        root_lengths=tuple(lengths),
        quadratic_form=form,
        positive_roots=proots,
        theta_labels=theta,
        theta_roots=theta_roots,
        rho=rho,
        dual_coxeter=h_dual,
        dim_g=n + 2 * len(proots),
        center_order=_exact_det(cartan),
        level_form=level_form,
    )


def build_cartan_data(alg) -> CartanData:
    """Return the (cached) :class:`CartanData` of ``alg`` (an id or a name)."""
    return _build(_as_algebra(alg))


def check_weight(alg, weight, dominant: bool = False) -> Weight:
    data = build_cartan_data(alg)
    w = tuple(int(x) for x in weight)
    if len(w) != data.rank:
        raise WeightError(f"weight {w} has {len(w)} labels, {data.alg} needs {data.rank}")
    if dominant and any(x < 0 for x in w):
        raise WeightError(f"weight {w} is not dominant")
    return w


def inner(alg, x, y) -> Fraction:
    """Exact value of the invariant form ``<x, y>`` on Dynkin-label vectors."""
    data = build_cartan_data(alg)
    x = check_weight(alg, x)
    y = check_weight(alg, y)
    G = data.quadratic_form
    n = data.rank
    return sum((x[i] * G[i][j] * y[j] for i in range(n) for j in range(n)), Fraction(0))


def level_of(alg, weight) -> int:
    """The level ``<lambda, theta>`` of a weight."""
    data = build_cartan_data(alg)
    w = check_weight(alg, weight)
    return sum(a * b for a, b in zip(data.level_form, w))
