import pytest

from algebra.exact_scalars import Level
from algebra.matrices import RepMatrix
from representations.handlebody import loop, ring
from representations.mcg_rep import (
    dehn_twist_matrix, generator_matrices, generator_names, longitude_matrix, named_curves,
    omega_span_rank, pants_eigentuple_check, pants_twist_matrix, parse_curve_text, resolve_curve, s_matrix,
    t_matrix, transverse_unitarity, unitarity_defect, vacuum_orbit_rank,
)
from utilities.errors import DimensionMismatch, InvalidCurve


def test_named_curves():
    assert named_curves(1) == {"meridian": ring(0), "longitude": loop(1)}
    curves = named_curves(2)
    assert curves["pants2"] == ring(2)
    assert curves["handle1"] == loop(2)
    assert curves["outer"] == loop(1, 2)


def test_generator_names():
    assert generator_names(1) == ["meridian", "longitude"]
    assert generator_names(2) == ["pants0", "handle0", "pants1", "handle1", "pants2"]
    assert generator_names(3)[-1] == "pants4"


def test_parse_curve_text():
    spec = parse_curve_text("# twist\nLOOP 1 2\n", 2)
    assert spec.curve == loop(1, 2)
    assert parse_curve_text("RING 1", 2).curve == ring(1)
    with pytest.raises(InvalidCurve):
        parse_curve_text("RING 1\nRING 2\n", 2)
    with pytest.raises(InvalidCurve):
        parse_curve_text("TWIST 1", 2)
    with pytest.raises(InvalidCurve):
        parse_curve_text("LOOP 3", 2)


def test_resolve_curve_by_name_and_file(tmp_path):
    assert resolve_curve("handle0", 2).curve == loop(1)
    path = tmp_path / "outer.curve"
    path.write_text("LOOP 1 2\n")
    spec = resolve_curve(str(path), 2)
    assert spec.name == "outer" and spec.curve == loop(1, 2)
    with pytest.raises(InvalidCurve):
        resolve_curve("nowhere", 2)


@pytest.mark.parametrize("r", [3, 5])
def test_engine_meridian_twist_is_t(r):
    level = Level(r)
    assert dehn_twist_matrix(ring(0), 1, level).projectively_equal(t_matrix(level))


@pytest.mark.parametrize("r", [3, 5])
def test_engine_longitude_twist(r):
    level = Level(r)
    engine = dehn_twist_matrix(loop(1), 1, level)
    assert engine.projectively_equal(longitude_matrix(level))


@pytest.mark.parametrize("r", [3, 4, 5])
def test_longitude_is_conjugate_to_t(r):
    level = Level(r)
    s, t = s_matrix(level), t_matrix(level)
    assert longitude_matrix(level).projectively_equal(s @ t @ s.inverse())


def test_engine_pants_twist_matches_closed_form(level3):
    for edge in range(3):
        engine = dehn_twist_matrix(ring(edge), 2, level3)
        assert engine.projectively_equal(pants_twist_matrix(edge, 2, level3))


@pytest.mark.parametrize("r", [3, 5])
def test_modular_relations(r):
    level = Level(r)
    s, t = s_matrix(level), t_matrix(level)
    assert (s ** 4).projectively_equal(RepMatrix.identity(s.n, level))
    assert ((s @ t) ** 3).projectively_equal(s @ s)


@pytest.mark.slow
def test_modular_relations_at_r7(level7):
    s, t = s_matrix(level7), t_matrix(level7)
    assert (s ** 4).projectively_equal(RepMatrix.identity(s.n, level7))
    assert ((s @ t) ** 3).projectively_equal(s @ s)


def test_generators_are_invertible(level3):
    for name, m in generator_matrices(2, level3):
        assert not m.determinant().is_zero(), name


@pytest.mark.parametrize("genus, r, depth, rank", [(1, 3, 3, 2), (1, 5, 6, 4), (1, 5, 0, 1), (2, 3, 6, 4)])
def test_vacuum_orbit_rank(genus, r, depth, rank):
    assert vacuum_orbit_rank(genus, Level(r), depth) == rank


def test_vacuum_orbit_rank_rejects_negative_depth(level3):
    with pytest.raises(ValueError):
        vacuum_orbit_rank(1, level3, -1)


@pytest.mark.parametrize("genus, r", [(1, 3), (1, 5), (1, 7), (2, 3), (2, 5)])
def test_pants_eigentuples_are_distinct_at_prime_r(genus, r):
    assert pants_eigentuple_check(genus, Level(r)).distinct


@pytest.mark.parametrize("r, collisions", [(4, []), (6, [((0,), (4,))]), (8, [((1,), (5,))]), (9, [])])
def test_twist_eigenvalue_collisions(r, collisions):
    assert pants_eigentuple_check(1, Level(r)).collisions == collisions


@pytest.mark.parametrize("genus, r", [(1, 3), (1, 5), (2, 3), pytest.param(2, 5, marks=pytest.mark.slow)])
def test_transverse_twists_are_unitary(genus, r):
    defects = transverse_unitarity(genus, Level(r))
    assert defects
    assert max(defects.values()) < 1e-8


def test_unitarity_needs_matching_shapes(level3):
    with pytest.raises(DimensionMismatch):
        unitarity_defect(RepMatrix.identity(2, level3), RepMatrix.identity(3, level3))


def test_a_shear_is_not_unitary(level3):
    shear = RepMatrix.from_integers([[1, 1], [0, 1]], level3)
    assert unitarity_defect(shear, RepMatrix.identity(2, level3)) > 0.5


def test_omega_span_fills_the_solid_torus(level5):
    assert omega_span_rank(1, level5, copies=3) == 4


def test_pants_twists_commute(level5):
    mats = [pants_twist_matrix(e, 2, level5) for e in range(3)]
    for a in mats:
        for b in mats:
            assert a.commutator(b).is_zero()
