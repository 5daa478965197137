import pytest

from algebra.exact_scalars import Level
from representations.handlebody import (
    HandlebodySkein, check_curves, doubled_diagram, express, gram_matrix, loop, pairing, ring,
)
from representations.solid_torus import t_vector
from representations.spines import enumerate_basis, ladder_spine, vacuum
from skein.diagram import validate
from utilities.errors import InvalidCurve


def _indicator(i, n):
    return [1 if k == i else 0 for k in range(n)]


def test_curve_rendering():
    assert str(ring(2)) == "RING 2"
    assert str(loop(1, 3)) == "LOOP 1 3"
    assert loop(2).holes == (2, 2)


def test_check_curves_rejects_bad_input():
    spine = ladder_spine(3)
    with pytest.raises(InvalidCurve):
        check_curves(spine, [ring(6)])
    with pytest.raises(InvalidCurve):
        check_curves(spine, [loop(0)])
    with pytest.raises(InvalidCurve):
        check_curves(spine, [loop(1, 2), loop(2, 3)])
    check_curves(spine, [loop(1, 3), loop(2), ring(4)])


@pytest.mark.parametrize("genus, r", [(1, 3), (1, 5), (2, 3)])
def test_doubled_diagrams_are_closed_and_well_typed(genus, r):
    level = Level(r)
    basis = enumerate_basis(genus, level)
    x = HandlebodySkein(genus, basis[-1], (loop(1),))
    assert validate(doubled_diagram(x, basis[0], level), r) == []


@pytest.mark.parametrize("genus, r", [(1, 3), (1, 5), (2, 3), pytest.param(2, 5, marks=pytest.mark.slow)])
def test_gram_matrix_is_diagonal_and_nondegenerate(genus, r):
    gram = gram_matrix(genus, Level(r))
    assert gram.is_diagonal()
    assert gram == gram.transpose()
    assert all(not d.is_zero() for d in gram.diagonal_entries())


def test_pairing_of_vacua_is_nonzero(level5):
    assert not pairing(HandlebodySkein(2, vacuum(2)), vacuum(2), level5).is_zero()


@pytest.mark.parametrize("genus, r", [(1, 5), (2, 3), pytest.param(2, 5, marks=pytest.mark.slow)])
def test_express_recovers_basis_vectors(genus, r):
    level = Level(r)
    basis = enumerate_basis(genus, level)
    for i, v in enumerate(basis):
        assert express(HandlebodySkein(genus, v), level) == _indicator(i, len(basis))


@pytest.mark.parametrize("b", [0, 1, 2])
def test_parallel_loops_in_the_solid_torus_are_twist_vectors(level5, b):
    skein = HandlebodySkein(1, vacuum(1), (loop(1, copies=b),))
    assert express(skein, level5) == list(t_vector(b, level5).coefficients)


def test_engines_agree_on_a_pairing(level3):
    x = HandlebodySkein(2, (0, 1, 1), (loop(1),))
    w = (1, 1, 0)
    assert pairing(x, w, level3, "accel") == pairing(x, w, level3, "naive")
