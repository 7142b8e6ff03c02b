"""Modular data of a level-k fusion ring.

S is assembled from classical characters evaluated on the shifted alcove,
``S[lam, mu] / S[0, 0] = dim_q(mu) * chi(lam)[mu + rho]``, where evaluating a
monomial ``t^l`` at ``x`` gives ``exp(2 pi i <l, x> / (k + h))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fusion import FusionRing
from .symmetry import RepType, rep_type
from .tensor import Decomposition
from .weightsys import freudenthal, orbit

DEFAULT_EPS = 1e-8
ROUNDING_TOL = 1e-6


class ModularInvariantError(RuntimeError):
    """A modular identity failed beyond tolerance (a convention bug)."""


class RoundingError(RuntimeError):
    """A quantity expected to be an integer was not close to one."""


@dataclass(frozen=True, eq=False)
class ModularData:
    ring: FusionRing
    S: np.ndarray
    T_diag: np.ndarray
    qdim: np.ndarray
    conj_perm: np.ndarray
    eps: float = DEFAULT_EPS

    @property
    def zero_threshold(self) -> float:
        return self.eps * math.sqrt(len(self.ring))

    @property
    def T(self) -> np.ndarray:
        return np.diag(self.T_diag)

    def C(self) -> np.ndarray:
        return self.ring.conjugation_matrix().astype(float)

    def residuals(self) -> dict:
        S, T, C = self.S, self.T, self.C()
        n = len(S)
        ST = S @ T
        return {
            "symmetric": float(np.abs(S - S.T).max()),
            "unitary": float(np.abs(S @ S.conj().T - np.eye(n)).max()),
            "S2=C": float(np.abs(S @ S - C).max()),
            "S4=1": float(np.abs(np.linalg.matrix_power(S, 4) - np.eye(n)).max()),
            "(ST)3=S2": float(np.abs(ST @ ST @ ST - S @ S).max()),
            "(ST)3=S4": float(np.abs(ST @ ST @ ST - np.linalg.matrix_power(S, 4)).max()),
            "row0": float(max(np.abs(S[0].imag).max(), -min(0.0, S[0].real.min()))),
            "T unimodular": float(np.abs(np.abs(self.T_diag) - 1).max()),
        }


def _conformal_weights(ring: FusionRing) -> np.ndarray:
    data = ring.data
    G = data.float_form
    W = np.array(ring.alcove, dtype=float)
    two_rho = 2 * np.array(data.rho, dtype=float)
    num = np.einsum("ij,jk,ik->i", W, G, W + two_rho)
    return num / (2.0 * (ring.level + data.dual_coxeter))


def conformal_weight(ring: FusionRing, nu) -> float:
    """``<nu, nu + 2 rho> / (<theta, theta> (k + h))``."""
    return float(_conformal_weights(ring)[ring.index[ring.check(nu)]])


def central_charge(ring: FusionRing) -> float:
    data = ring.data
    return data.dim_g * ring.level / (ring.level + data.dual_coxeter)


def t_matrix(ring: FusionRing) -> np.ndarray:
    """Diagonal of T: ``exp(2 pi i (h(nu) - c / 24))``."""
    return np.exp(2j * math.pi * (_conformal_weights(ring) - central_charge(ring) / 24))


def character_values(ring: FusionRing) -> np.ndarray:
    """``chi[lam, mu] = chi(lam)[mu + rho]`` over the alcove."""
    data = ring.data
    n = len(ring)
    shifted = np.array(ring.alcove, dtype=float) + 1.0
    scale = 2 * math.pi / (ring.level + data.dual_coxeter)
    G = data.float_form
    # every dominant weight of an alcove irrep lies in the alcove
    orbit_sums = np.empty((n, n), dtype=complex)
    for i, nu in enumerate(ring.alcove):
        orb = np.array(orbit(ring.alg, nu), dtype=float)
        orbit_sums[i] = np.exp(1j * scale * (orb @ G @ shifted.T)).sum(axis=0)
    mults = np.zeros((n, n))
    for i, lam in enumerate(ring.alcove):
        for nu, m in freudenthal(ring.alg, lam).items():
            mults[i, ring.index[nu]] = m
    return mults @ orbit_sums


def _assemble(ring, S, eps, check):
    md = ModularData(ring, S, t_matrix(ring), S[:, 0].real / S[0, 0].real, ring.conjugation, eps)
    if check:
        res = md.residuals()
        required = ["symmetric", "unitary", "S2=C", "(ST)3=S4", "row0", "T unimodular"]
        bad = {k: v for k, v in res.items() if k in required and v > eps}
        if bad:
            raise ModularInvariantError(f"{ring.alg} level {ring.level}: {bad}")
    return md


@lru_cache(maxsize=64)
def _s_matrix(ring, eps, check):
    chi = character_values(ring)
    qdim = chi[:, 0].real
    s00 = 1.0 / math.sqrt(float((qdim**2).sum()))
    S = s00 * chi * qdim[None, :]
    return _assemble(ring, S, eps, check)


def s_matrix(ring: FusionRing, eps: float = DEFAULT_EPS, check: bool = True) -> ModularData:
    """Modular data of ``ring``; raises :class:`ModularInvariantError` on a failed identity."""
    return _s_matrix(ring, float(eps), bool(check))


def weyl_group(data) -> tuple[np.ndarray, np.ndarray]:
    """All Weyl group elements as matrices acting on Dynkin-label row vectors, with signs."""
    n = data.rank
    A = data.cartan_array
    eye = np.eye(n, dtype=np.int64)
    # v -> v - v_i alpha_i, as right multiplication of a row vector
    refl = [eye - np.outer(eye[i], A[i]) for i in range(n)]
    rho = np.array(data.rho, dtype=np.int64)
    mats = [np.eye(n, dtype=np.int64)]
    signs = [1]
    seen = {tuple(rho)}
    frontier = [mats[0]]
    sign = 1
    while frontier:
        sign = -sign
        nxt = []
        for M in frontier:
            for R in refl:
                P = M @ R
                key = tuple(rho @ P)
                if key not in seen:
                    seen.add(key)
                    nxt.append(P)
        mats.extend(nxt)
        signs.extend([sign] * len(nxt))
        frontier = nxt
    return np.array(mats), np.array(signs)


def kac_peterson_s(ring: FusionRing, eps: float = DEFAULT_EPS) -> ModularData:
    """S from the alternating Weyl-group sum; an independent route for small groups."""
    data = ring.data
    mats, signs = weyl_group(data)
    shifted = np.array(ring.alcove, dtype=float) + 1.0
    G = data.float_form
    scale = 2 * math.pi / (ring.level + data.dual_coxeter)
    A = np.zeros((len(ring), len(ring)), dtype=complex)
    for M, s in zip(mats, signs):
        A += s * np.exp(1j * scale * ((shifted @ M) @ G @ shifted.T))
    A0 = A[0] / A[0, 0]
    s00 = 1.0 / math.sqrt(float(np.sum(np.abs(A0) ** 2)))
    return _assemble(ring, A * (s00 / A[0, 0]), eps, True)


def quantum_dimension(ring: FusionRing, mu) -> float:
    return float(s_matrix(ring).qdim[ring.index[ring.check(mu)]])


def _rounded(x: np.ndarray, tol: float, what: str) -> np.ndarray:
    r = np.rint(x.real)
    res = max(float(np.abs(x.real - r).max(initial=0.0)), float(np.abs(x.imag).max(initial=0.0)))
    if res > tol:
        raise RoundingError(f"{what}: rounding residual {res:.3g} exceeds {tol:g}")
    return r.astype(np.int64)


def verlinde_raw(md: ModularData) -> np.ndarray:
    """Unrounded ``N[lam, mu, nu] = sum_k S[lam,k] S[mu,k] conj(S[nu,k]) / S[0,k]``."""
    S = md.S
    return np.einsum("ak,bk,ck->abc", S, S / S[0][None, :], S.conj())


def verlinde_matrices(ring: FusionRing, tol: float = ROUNDING_TOL) -> np.ndarray:
    return _rounded(verlinde_raw(s_matrix(ring)), tol, f"Verlinde {ring.alg} level {ring.level}")


def verlinde(ring: FusionRing, lam, mu, tol: float = ROUNDING_TOL) -> Decomposition:
    """Fusion coefficients from the Verlinde formula, rounded with a residual check."""
    md = s_matrix(ring)
    i, j = ring.index[ring.check(lam)], ring.index[ring.check(mu)]
    S = md.S
    raw = (S[i] * S[j] / S[0]) @ S.conj().T
    row = _rounded(raw, tol, f"Verlinde {lam} x {mu}")
    return Decomposition({ring.alcove[c]: int(m) for c, m in enumerate(row) if m})


def sigma_sums(md: ModularData) -> np.ndarray:
    """``Sigma(kappa) = sum_nu S[nu, kappa]`` for every alcove weight."""
    return md.S.sum(axis=0)


def sigma_sum(ring: FusionRing, kappa) -> complex:
    return complex(sigma_sums(s_matrix(ring))[ring.index[ring.check(kappa)]])


def fusion_character_table(ring: FusionRing) -> np.ndarray:
    """``chi[mu, nu] = S[mu, nu] / S[0, nu]``."""
    S = s_matrix(ring).S
    return S / S[0][None, :]


def s1_s2(ring: FusionRing) -> tuple[float, float]:
    """Sum of quantum dimensions and sum of their squares."""
    q = s_matrix(ring).qdim
    return float(q.sum()), float((q**2).sum())


def _fs_forms(md: ModularData, N_mu: np.ndarray) -> tuple[complex, complex]:
    S = md.S
    T = md.T_diag
    Sinv = S.conj().T
    recast = (Sinv @ np.diag(T * T) @ N_mu @ np.diag(1 / (T * T)) @ S)[0, 0]
    iota2 = np.exp(4j * math.pi * _conformal_weights(md.ring))
    s0 = S[0]
    double = np.einsum("s,vs,v,s,v->", s0, N_mu, s0, iota2, 1 / iota2)
    return complex(recast), complex(double)


def frobenius_schur_forms(ring: FusionRing, mu, fusion: np.ndarray | None = None) -> tuple[complex, complex]:
    """Both indicator expressions, unrounded."""
    if fusion is None:
        fusion = verlinde_matrices(ring)
    md = s_matrix(ring)
    return _fs_forms(md, fusion[ring.index[ring.check(mu)]].astype(float))


def frobenius_schur(ring: FusionRing, mu, fusion: np.ndarray | None = None, tol: float = ROUNDING_TOL) -> int:
    """Frobenius-Schur indicator: +1 real, 0 complex, -1 quaternionic."""
    a, b = frobenius_schur_forms(ring, mu, fusion)
    ia = int(_rounded(np.array([a]), tol, f"FS indicator of {mu}")[0])
    ib = int(_rounded(np.array([b]), tol, f"FS indicator (double sum) of {mu}")[0])
    if ia != ib or abs(a - b) > tol:
        raise ModularInvariantError(f"FS indicator forms disagree for {mu}: {a} vs {b}")
    return ia


FS_TYPE = {1: RepType.REAL, 0: RepType.COMPLEX, -1: RepType.QUATERNIONIC}


def classical_fs(alg, mu) -> int:
    return {RepType.REAL: 1, RepType.COMPLEX: 0, RepType.QUATERNIONIC: -1}[rep_type(alg, mu)]
