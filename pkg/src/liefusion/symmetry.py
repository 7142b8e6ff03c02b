"""Conjugation, center automorphisms of the alcove, and representation types."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .rootdata import build_cartan_data, check_weight, level_of


class RepType(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNIONIC = "quaternionic"

    def __str__(self):
        return self.value


def conjugate(alg, lam) -> tuple:
    data = build_cartan_data(alg)
    lam = check_weight(data.alg, lam)
    s, n = data.alg.series, data.rank
    if s == "A":
        return lam[::-1]
    if s == "D" and n % 2 == 1:
        return lam[:-2] + (lam[-1], lam[-2])
    if s == "E" and n == 6:
        l1, l2, l3, l4, l5, l6 = lam
        return (l5, l4, l3, l2, l1, l6)
    return lam


@dataclass(frozen=True)
class Automorphism:
    """A center automorphism of the level-k alcove.

    ``perm`` acts on affine labels ``(lam_0, lam_1, ..., lam_n)``: the image
    has label ``old[perm[j]]`` at node ``j``. ``tau`` returns the grading in
    ``Z_modulus`` so that ``S[sigma(mu), kappa] = exp(2 pi i tau(kappa) / modulus) S[mu, kappa]``.
    """

    name: str
    alg: object
    perm: tuple
    modulus: int
    coefficients: tuple
    tabulated: tuple = ()

    def __call__(self, lam, k: int) -> tuple:
        lam = check_weight(self.alg, lam)
        aff = (k - level_of(self.alg, lam),) + lam
        return tuple(aff[self.perm[j]] for j in range(1, len(aff)))

    def inverse(self, lam, k: int) -> tuple:
        lam = check_weight(self.alg, lam)
        aff = (k - level_of(self.alg, lam),) + lam
        out = [0] * len(aff)
        for j, p in enumerate(self.perm):
            out[p] = aff[j]
        return tuple(out[1:])

    def power(self, lam, k: int, p: int) -> tuple:
        for _ in range(p % self.order):
            lam = self(lam, k)
        return tuple(lam)

    @property
    def order(self) -> int:
        seen, p, order = list(range(len(self.perm))), list(self.perm), 1
        while p != seen:
            p = [self.perm[x] for x in p]
            order += 1
        return order

    def tau(self, lam) -> int:
        lam = check_weight(self.alg, lam)
        return sum(c * x for c, x in zip(self.coefficients, lam)) % self.modulus

    def tabulated_tau(self, lam) -> int:
        lam = check_weight(self.alg, lam)
        return sum(c * x for c, x in zip(self.tabulated, lam)) % self.modulus


def _perm(n, mapping):
    p = list(range(n + 1))
    for j, v in mapping.items():
        p[j] = v
    return tuple(p)


def _neg(coeffs, modulus):
    return tuple(-c % modulus for c in coeffs)


def automorphisms(alg) -> list[Automorphism]:
    """Generators of the center action, with gradings (empty for E8, F4, G2).

    ``coefficients`` are fixed by the S-matrix phase in this package's sign
    convention; ``tabulated`` keeps the reference-table values. They differ by
    an overall sign for A_n, odd D_n and E6 and by a swap of the two spinor
    charges for D_n with n = 0 mod 4.
    """
    data = build_cartan_data(alg)
    a = data.alg
    s, n = a.series, a.rank
    odd = lambda upto: [1 if (j % 2 == 1 and j <= upto) else 0 for j in range(1, n + 1)]  # noqa: E731
    if s == "A":
        perm = _perm(n, {0: n, **{j: j - 1 for j in range(1, n + 1)}})
        table = tuple(range(1, n + 1))
        return [Automorphism("sigma", a, perm, n + 1, _neg(table, n + 1), table)]
    if s == "B":
        c = (0,) * (n - 1) + (1,)
        return [Automorphism("sigma", a, _perm(n, {0: 1, 1: 0}), 2, c, c)]
    if s == "C":
        c = tuple(odd(n))
        return [Automorphism("sigma", a, tuple(n - j for j in range(n + 1)), 2, c, c)]
    if s == "D" and n % 2 == 1:
        perm = _perm(n, {0: n - 1, 1: n, n: 0, **{j: n - j for j in range(2, n)}})
        c = [2 * x for x in odd(n - 2)]
        c[n - 2], c[n - 1] = (1, 3) if n % 4 == 1 else (3, 1)
        return [Automorphism("sigma", a, perm, 4, _neg(c, 4), tuple(c))]
    if s == "D":
        base = [2 * x for x in odd(n - 3)]
        c1 = list(base)
        c1[n - 1] = 2
        c2 = list(base)
        c2[n - 2] = 2
        c3 = [0] * n
        c3[n - 2] = c3[n - 1] = 2
        c1, c2, c3 = tuple(c1), tuple(c2), tuple(c3)
        used1, used2 = (c2, c1) if n % 4 == 0 else (c1, c2)
        p1 = _perm(n, {0: n, n: 0, **{j: n - j for j in range(1, n)}})
        p2 = _perm(n, {0: n - 1, n - 1: 0, 1: n, n: 1, **{j: n - j for j in range(2, n - 1)}})
        p3 = _perm(n, {0: 1, 1: 0, n - 1: n, n: n - 1})
        return [
            Automorphism("sigma'", a, p1, 4, used1, c1),
            Automorphism("sigma''", a, p2, 4, used2, c2),
            Automorphism("sigma'''", a, p3, 4, c3, c3),
        ]
    if s == "E" and n == 6:
        perm = _perm(6, {0: 5, 1: 0, 2: 6, 3: 3, 4: 2, 5: 1, 6: 4})
        table = (2, 1, 0, 2, 1, 0)
        return [Automorphism("sigma", a, perm, 3, _neg(table, 3), table)]
    if s == "E" and n == 7:
        # only the first component is tabulated; the rest is the reflection of
        # the extended diagram 0-6-5-4-3-2-1 (node 7 on node 4)
        perm = _perm(7, {0: 1, 1: 0, 2: 6, 6: 2, 3: 5, 5: 3})
        c = (1, 0, 1, 0, 0, 0, 1)
        return [Automorphism("sigma", a, perm, 2, c, c)]
    return []


def rep_type(alg, lam) -> RepType:
    """Real / complex / quaternionic type of the irrep ``lam``."""
    data = build_cartan_data(alg)
    lam = check_weight(data.alg, lam, dominant=True)
    s, n = data.alg.series, data.rank
    if conjugate(data.alg, lam) != lam:
        return RepType.COMPLEX
    quaternionic = False
    if s == "A" and n % 4 == 1:
        quaternionic = lam[(n + 1) // 2 - 1] % 2 == 1
    elif s == "B" and n % 4 in (1, 2):
        quaternionic = lam[n - 1] % 2 == 1
    elif s == "C":
        quaternionic = sum(lam[0::2]) % 2 == 1
    elif s == "D" and n % 4 == 2:
        quaternionic = (lam[n - 2] + lam[n - 1]) % 2 == 1
    elif s == "E" and n == 7:
        quaternionic = (lam[0] + lam[2] + lam[6]) % 2 == 1
    return RepType.QUATERNIONIC if quaternionic else RepType.REAL


def grading_nonzero_for_quaternionic(alg, lam) -> Automorphism:
    """An automorphism whose grading does not vanish on a quaternionic ``lam``."""
    if rep_type(alg, lam) is not RepType.QUATERNIONIC:
        raise ValueError(f"{lam} is not of quaternionic type")
    for auto in automorphisms(alg):
        if auto.tau(lam):
            return auto
    raise AssertionError(f"no automorphism with nonzero grading on quaternionic {lam}")


def forcing_automorphism(alg, lam) -> Automorphism | None:
    """First automorphism with nonzero grading on ``lam``, if any."""
    for auto in automorphisms(alg):
        if auto.tau(lam):
            return auto
    return None
