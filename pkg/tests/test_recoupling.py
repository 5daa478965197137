from functools import reduce

import pytest

from algebra.exact_scalars import Level, eta, power_of_A
from skein import recoupling as rc
from skein.accel_engine import eval_accel
from skein.diagram import kinked_unknot
from skein.naive_engine import eval_naive
from utilities.errors import OutOfRange


def _factorial(n, level):
    return reduce(lambda acc, k: acc * rc.quantum_integer(k, level), range(1, n + 1), power_of_A(0, level))


def _theta_closed_form(a, b, c, level):
    m, n, p = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
    top = _factorial(m + n + p + 1, level) * _factorial(m, level) * _factorial(n, level) * _factorial(p, level)
    bottom = _factorial(m + n, level) * _factorial(n + p, level) * _factorial(m + p, level)
    value = top / bottom
    return -value if (m + n + p) % 2 else value


def test_delta_low_colors(level5):
    assert rc.delta(0, level5) == 1
    assert rc.delta(1, level5) == -power_of_A(2, level5) - power_of_A(-2, level5)
    assert rc.delta(3, level5) == -1


def test_delta_vanishes_just_past_the_last_color(level5):
    assert rc.quantum_dimension(level5.r - 1, level5).is_zero()
    with pytest.raises(OutOfRange):
        rc.delta(level5.r - 1, level5)


def test_xi_values(level3):
    assert rc.xi(0, level3) == 1
    assert rc.xi(1, level3) == -power_of_A(3, level3)
    assert rc.xi(1, level3).numeric() == pytest.approx(-1j)


def test_color_range():
    level = Level(4)
    assert list(rc.colors(level)) == [0, 1, 2]
    with pytest.raises(OutOfRange):
        rc.delta(3, level)


def test_fusion_channels_respect_the_level(level5):
    assert rc.fusion_channels(1, 1, level5) == [0, 2]
    assert rc.fusion_channels(2, 2, level5) == [0, 2]
    assert rc.fusion_channels(3, 3, level5) == [0]
    assert not rc.admissible(1, 1, 1, level5)


def test_omega_coefficients(level5):
    w = rc.omega(level5)
    assert len(w) == 4
    for a in rc.colors(level5):
        assert w[a] == eta(level5) * rc.delta(a, level5)
    framed = w.with_framing(-1)
    assert framed[1] == w[1] / rc.xi(1, level5)


@pytest.mark.parametrize("r", [4, 5, 6])
def test_theta_matches_closed_form(r):
    level = Level(r)
    for a in rc.colors(level):
        for b in rc.colors(level):
            for c in rc.colors(level):
                if rc.admissible(a, b, c, level):
                    assert rc.theta(a, b, c, level) == _theta_closed_form(a, b, c, level)


@pytest.mark.parametrize("r", [3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_theta_vanishes_exactly_off_admissible_triples(r):
    level = Level(r)
    for a in rc.colors(level):
        for b in rc.colors(level):
            for c in rc.colors(level):
                assert (not rc.theta(a, b, c, level).is_zero()) == rc.admissible(a, b, c, level), (a, b, c)


def test_theta_special_cases(level5):
    assert rc.theta(1, 1, 2, level5) == rc.delta(2, level5)
    assert rc.theta(1, 1, 0, level5) == rc.delta(1, level5)
    assert rc.theta(1, 1, 1, level5).is_zero()


@pytest.mark.parametrize("labels", [(1, 1, 1, 1, 2, 2), (1, 2, 1, 2, 1, 1), (2, 2, 2, 2, 2, 2)])
def test_raw_tetrahedron_is_relabeling_invariant(level5, labels):
    value = rc.raw_tetrahedron(*labels, level5)
    assert not value.is_zero()
    for relabeled in set(rc.tetrahedral_relabelings(labels)):
        assert rc.raw_tetrahedron(*relabeled, level5) == value


def test_tetrahedron_with_a_zero_edge_is_a_theta(level5):
    assert rc.tetrahedron(1, 1, 1, 1, 0, 2, level5) == rc.theta(1, 1, 2, level5)


@pytest.mark.parametrize("r", [4, 5])
def test_six_j_moves_are_mutually_inverse(r):
    level = Level(r)
    cs = list(rc.colors(level))
    for a in cs:
        for b in cs:
            for c in cs:
                for d in cs:
                    channels = [e for e in cs if rc.admissible(a, b, e, level) and rc.admissible(e, c, d, level)]
                    for e in channels:
                        for e2 in channels:
                            total = sum(
                                (rc.sixj(a, b, c, d, e, f, level) * rc.sixj_inverse(a, b, c, d, e2, f, level)
                                 for f in cs),
                                power_of_A(0, level) * 0,
                            )
                            assert total == (1 if e == e2 else 0)


def test_half_twist_on_two_fundamental_strands(level5):
    assert rc.half_twist(1, 1, 0, True, level5) == -power_of_A(-3, level5)
    assert rc.half_twist(1, 1, 2, True, level5) == power_of_A(1, level5)


@pytest.mark.parametrize("r", [4, 5])
def test_half_twist_closed_form_and_inverse(r):
    level = Level(r)
    for a in range(1, level.max_color + 1):
        for b in range(1, level.max_color + 1):
            for c in rc.fusion_channels(a, b, level):
                over = rc.half_twist(a, b, c, True, level)
                sign = -1 if ((a + b - c) // 2) % 2 else 1
                exponent = (c * (c + 2) - a * (a + 2) - b * (b + 2)) // 2
                assert over == power_of_A(exponent, level) * sign
                assert over * rc.half_twist(a, b, c, False, level) == 1


def test_hopf_values(level5):
    for a in rc.colors(level5):
        for b in rc.colors(level5):
            expected = rc.quantum_integer((a + 1) * (b + 1), level5)
            if (a + b) % 2:
                expected = -expected
            assert rc.hopf_value(a, b, level5) == expected


@pytest.mark.parametrize("r", [3, 5])
def test_kinked_unknot_picks_up_the_twist(r):
    level = Level(r)
    for a in rc.colors(level):
        expected = rc.xi(a, level) * rc.delta(a, level)
        assert eval_naive(kinked_unknot(a), level).value == expected
        assert eval_accel(kinked_unknot(a), level).value == expected


def test_tables_layout(level4):
    found = rc.tables(level4)
    assert [row[0] for row in found["delta"]] == [0, 1, 2]
    assert all(a <= b <= c for a, b, c, _ in found["theta"])
    assert (1, 1, 2, rc.theta(1, 1, 2, level4)) in found["theta"]
