import numpy as np
import pytest

from golden_e6 import MU, W2, W4
from liefusion.fusion import alcove, fusion_decompose
from liefusion.modular import kac_peterson_s, sigma_sums
from liefusion.symmetry import RepType
from liefusion.tensor import total_multiplicity
from liefusion.verify import (
    GRIDS,
    Sample,
    TheoremReport,
    check_oracles,
    check_theorem1,
    check_theorem2,
    check_theorem3_4,
    run_grid,
    vanishing_census,
)

# witnesses found by the census; frozen after the Weyl-group S matrix agreed
G2_ACCIDENTAL = {4: [(1, 1), (2, 1)]}
F4_ACCIDENTAL = {3: [(1, 0, 0, 1), (0, 0, 1, 1)], 4: [(0, 0, 1, 1)]}


def test_report_verdict_and_serialisation():
    r = TheoremReport("theorem1", "A2", None, cases=3)
    assert r.verdict == "pass"
    r.failures.append((((1, 0), (0, 1)), (2, 3)))
    d = r.to_dict()
    assert d["verdict"] == "fail" and d["failures"] == [[[[1, 0], [0, 1]], [2, 3]]]
    assert "theorem1" in str(r) and "(1, 0)" in str(r)


def test_sample_is_exhaustive_then_seeded():
    ws = [(i,) for i in range(5)]
    assert len(Sample(limit=100).pairs(ws)) == 15
    a = Sample(limit=4, seed=3).pairs(ws)
    assert a == Sample(limit=4, seed=3).pairs(ws) and len(a) == 4


def test_theorem1_e6_worked_pair():
    assert total_multiplicity("E6", W2, MU) == total_multiplicity("E6", W4, MU) == 17


def test_theorem1_a2_exhaustive():
    r = check_theorem1("A2", Sample(max_label=3, limit=10**6))
    assert r.verdict == "pass" and r.cases > 0


def test_theorem1_self_conjugate_is_trivial():
    r = check_theorem1("B3", Sample(max_label=1))
    assert r.verdict == "pass" and r.cases == 0


def test_theorem2_worked_pairs():
    for k, total in [(3, 4), (4, 13)]:
        ring = alcove("E6", k)
        assert fusion_decompose(ring, W2, MU).total() == fusion_decompose(ring, W4, MU).total() == total


def test_theorem2_a2_k3_exhaustive():
    r = check_theorem2(alcove("A2", 3), Sample(limit=10**6))
    assert r.verdict == "pass" and r.cases > 0


def test_theorem3_4_su2():
    ring = alcove("A1", 5)
    assert check_theorem3_4(ring).verdict == "pass"
    c = vanishing_census(ring)
    assert [e.weight for e in c.vanishing()] == [(1,), (3,), (5,)]


@pytest.mark.parametrize("k, vanishing, size", [(3, 16, 20), (4, 34, 42)])
def test_e6_vanishing_counts(k, vanishing, size):
    c = vanishing_census(alcove("E6", k))
    assert (len(c.vanishing()), c.size) == (vanishing, size)
    assert c.accidental == []


def test_c2_level2_quaternionic():
    ring = alcove("C2", 2)
    c = vanishing_census(ring)
    quat = [e for e in c.entries if e.rep_type is RepType.QUATERNIONIC]
    assert quat and all(e.vanished and e.explained_by == "quaternionic" for e in quat)
    assert check_theorem3_4(ring).verdict == "pass"


def test_census_frozen_witnesses():
    for k, ws in G2_ACCIDENTAL.items():
        assert vanishing_census(alcove("G2", k)).accidental == ws
    for k, ws in F4_ACCIDENTAL.items():
        assert vanishing_census(alcove("F4", k)).accidental == ws


@pytest.mark.parametrize("alg, k", [("G2", 4), ("F4", 3), ("F4", 4)])
def test_accidental_zeros_survive_independent_route(alg, k):
    ring = alcove(alg, k)
    md = kac_peterson_s(ring)
    sig = np.abs(sigma_sums(md))
    for w in vanishing_census(ring).accidental:
        assert sig[ring.index[w]] < md.zero_threshold


def test_census_invariant():
    c = vanishing_census(alcove("G2", 8))
    for e in c.entries:
        if e.explained_by == "accidental":
            assert e.rep_type is RepType.REAL and e.vanished
        assert e.vanished == (e.explained_by is not None)
    d = c.to_dict()
    assert d["vanishing"] == len(c.vanishing()) and len(d["entries"]) == c.size


def test_oracles_small():
    r = check_oracles(alcove("A1", 4))
    assert r.verdict == "pass" and r.max_residual < 1e-6 and r.cases == 15


def test_quick_grid_passes():
    reports = run_grid("quick")
    assert reports and all(r.verdict == "pass" for r in reports)
    assert set(GRIDS) == {"default", "quick"}


@pytest.mark.slow
def test_default_grid_passes():
    reports = run_grid("default")
    failed = [str(r) for r in reports if r.failures]
    assert not failed, "\n".join(failed)
