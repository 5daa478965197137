import pytest

from algebra.exact_scalars import Level
from representations.spines import enumerate_basis, ladder_spine, spine_for, vacuum, verlinde_dimension
from utilities.errors import UnsupportedGenus


def test_genus_two_spine_is_a_theta_graph():
    spine = ladder_spine(2)
    assert len(spine.edges) == 3
    assert spine.vertices == ((0, 1, 2), (0, 1, 2))
    assert spine.middle_edges == (0, 1, 2)


def test_genus_three_spine_shape():
    spine = ladder_spine(3)
    assert len(spine.edges) == 6 and len(spine.vertices) == 4
    assert spine.graph.number_of_nodes() == 4
    assert spine.top_rail(0) == 0 and spine.top_rail(2) == 3
    assert spine.top_rail(1) == 4 and spine.bottom_rail(1) == 5


def test_genus_one_spine_is_a_single_loop():
    spine = ladder_spine(1)
    assert spine.edges == ("e0",) and spine.vertices == ()
    assert vacuum(1) == (0,)


@pytest.mark.parametrize("genus, r, size", [(1, 5, 4), (2, 3, 4), (2, 5, 20), (3, 3, 8), (1, 7, 6)])
def test_basis_size_matches_verlinde(genus, r, size):
    basis = enumerate_basis(genus, Level(r))
    assert len(basis) == size
    assert verlinde_dimension(genus, r) == pytest.approx(size, abs=1e-6)


def test_genus_two_basis_order(level3):
    assert enumerate_basis(2, level3) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_vacuum_is_the_first_basis_vector(level5):
    assert enumerate_basis(2, level5)[0] == vacuum(2)


def test_genus_limit(monkeypatch, level3):
    with pytest.raises(UnsupportedGenus):
        spine_for(4)
    monkeypatch.setenv("SKEINREP_MAX_GENUS", "4")
    assert len(spine_for(4).edges) == 9
    with pytest.raises(UnsupportedGenus):
        ladder_spine(0)
