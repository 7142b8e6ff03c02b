from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liefusion.rootdata import (
    AlgebraId,
    InvalidAlgebraError,
    WeightError,
    build_cartan_data,
    check_weight,
    inner,
    level_of,
    parse_algebra,
    parse_weight,
)
from liefusion.weightsys import weyl_dimension

ALL = ["A1", "A2", "A3", "A5", "B2", "B3", "B5", "C2", "C3", "C4", "D3", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"]

# textbook values: dual Coxeter number, dimension, order of the center
TABLE = {
    "A1": (2, 3, 2), "A2": (3, 8, 3), "A3": (4, 15, 4), "A5": (6, 35, 6),
    "B2": (3, 10, 2), "B3": (5, 21, 2), "B5": (9, 55, 2),
    "C2": (3, 10, 2), "C3": (4, 21, 2), "C4": (5, 36, 2),
    "D3": (4, 15, 4), "D4": (6, 28, 4), "D5": (8, 45, 4), "D6": (10, 66, 4),
    "E6": (12, 78, 3), "E7": (18, 133, 2), "E8": (30, 248, 1), "F4": (9, 52, 1), "G2": (4, 14, 1),
}


@pytest.mark.parametrize("name", ALL)
def test_classical_constants(name):
    d = build_cartan_data(name)
    assert (d.dual_coxeter, d.dim_g, d.center_order) == TABLE[name]


@pytest.mark.parametrize("name", ALL)
def test_theta_normalisation_and_dual_coxeter(name):
    d = build_cartan_data(name)
    assert inner(name, d.theta_labels, d.theta_labels) == 2
    assert inner(name, d.rho, d.theta_labels) == d.dual_coxeter - 1
    assert level_of(name, d.theta_labels) == 2


@pytest.mark.parametrize("name", ALL)
def test_adjoint_dimension(name):
    d = build_cartan_data(name)
    assert weyl_dimension(name, d.theta_labels) == d.dim_g


@pytest.mark.parametrize("name", ALL)
def test_form_positive_definite(name):
    import sympy

    G = sympy.Matrix(build_cartan_data(name).quadratic_form)
    assert G == G.T
    assert all(G[:i, :i].det() > 0 for i in range(1, G.rows + 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_type_a_positive_roots(n):
    # e_i - e_j for i < j, written in simple-root coordinates
    expected = {tuple(int(i <= t < j) for t in range(n)) for i in range(n) for j in range(i + 1, n + 1)}
    d = build_cartan_data(f"A{n}")
    assert set(d.positive_roots) == expected
    assert len(d.positive_roots) == len(set(d.positive_roots)) == n * (n + 1) // 2


def test_a2():
    d = build_cartan_data("A2")
    assert set(d.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert d.rho == (1, 1)
    assert d.dual_coxeter == 3


def test_a1():
    d = build_cartan_data("A1")
    assert d.cartan == ((2,),)
    assert d.theta_labels == (2,)
    assert inner("A1", (1,), (1,)) == Fraction(1, 2)


def test_e6_conventions():
    d = build_cartan_data("E6")
    assert d.theta_labels == (0, 0, 0, 0, 0, 1)
    assert d.theta_roots == (1, 2, 3, 2, 1, 2)
    assert d.level_form == (1, 2, 3, 2, 1, 2)
    assert level_of("E6", (1, 0, 0, 0, 2, 0)) == 3
    assert level_of("E6", (0, 1, 0, 0, 0, 0)) == 2


@pytest.mark.parametrize(
    "name, form",
    [
        ("A4", (1, 1, 1, 1)),
        ("D5", (1, 2, 2, 1, 1)),
        ("D7", (1, 2, 2, 2, 2, 1, 1)),
        ("B4", (1, 2, 2, 1)),
        ("C3", (1, 1, 1)),
        ("E7", (1, 2, 3, 4, 3, 2, 2)),
        ("G2", (1, 2)),
        ("F4", (2, 3, 2, 1)),
    ],
)
def test_level_forms(name, form):
    assert build_cartan_data(name).level_form == form


def test_short_and_long_roots():
    assert build_cartan_data("B3").root_lengths[-1] == 1
    assert build_cartan_data("C3").root_lengths[-1] == 2
    assert build_cartan_data("C3").root_lengths[0] == 1
    assert build_cartan_data("G2").root_lengths == (Fraction(2, 3), 2)


@pytest.mark.parametrize("bad", ["E5", "D2", "F3", "G3", "B1", "X4", "A0", "A", ""])
def test_invalid_algebras(bad):
    with pytest.raises(InvalidAlgebraError):
        parse_algebra(bad)


def test_parse_forms():
    assert parse_algebra(" e6 ") == AlgebraId("E", 6)
    assert parse_algebra("D_5").name == "D5"
    assert parse_weight("1,0, 0,0,2,0") == (1, 0, 0, 0, 2, 0)
    with pytest.raises(WeightError):
        parse_weight("1,x")


def test_weight_checks():
    with pytest.raises(WeightError, match="labels"):
        check_weight("A2", (1, 0, 0))
    with pytest.raises(WeightError, match="dominant"):
        check_weight("A2", (1, -1), dominant=True)
    assert check_weight("A2", (1, -1)) == (1, -1)


@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6), st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_inner_symmetric_bilinear(x, y):
    assert inner("E6", x, y) == inner("E6", y, x)
    assert inner("E6", [0] * 6, y) == 0
    doubled = [2 * a for a in x]
    assert inner("E6", doubled, y) == 2 * inner("E6", x, y)


@given(st.lists(st.integers(0, 6), min_size=4, max_size=4))
def test_level_is_inner_with_theta(w):
    d = build_cartan_data("F4")
    assert level_of("F4", w) == inner("F4", w, d.theta_labels)
