import pytest

from algebra.exact_scalars import Level, power_of_A
from algebra.temperley_lieb import (
    TLDiagram, TLElement, compose_diagrams, enumerate_diagrams, jones_wenzl, loop_value, markov_trace,
    tl_compose,
)
from skein.recoupling import delta
from utilities.errors import OutOfRange, StrandMismatch


@pytest.mark.parametrize("n, catalan", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)])
def test_diagram_count_is_catalan(n, catalan):
    assert len(enumerate_diagrams(n)) == catalan


def test_crossing_pairing_is_rejected():
    with pytest.raises(ValueError):
        TLDiagram(2, (3, 2, 1, 0))


def test_hook_squares_to_loop_value(level5):
    e1 = TLElement.hook(1, 2, level5)
    assert tl_compose(e1, e1) == e1.scale(loop_value(level5))


def test_hook_relations(level5):
    e1, e2 = TLElement.hook(1, 3, level5), TLElement.hook(2, 3, level5)
    assert tl_compose(tl_compose(e1, e2), e1) == e1
    assert tl_compose(tl_compose(e2, e1), e2) == e2


def test_compose_counts_closed_loops():
    hook = TLDiagram.hook(1, 2)
    glued, loops = compose_diagrams(hook, hook)
    assert glued == hook and loops == 1
    glued, loops = compose_diagrams(TLDiagram.identity(2), hook)
    assert glued == hook and loops == 0


def test_strand_mismatch(level3):
    with pytest.raises(StrandMismatch):
        tl_compose(TLElement.identity(2, level3), TLElement.identity(3, level3))
    with pytest.raises(StrandMismatch):
        TLDiagram.hook(3, 3)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_jones_wenzl_is_idempotent_and_killed_by_hooks(r):
    level = Level(r)
    for a in range(2, r - 1):
        f = jones_wenzl(a, level)
        assert tl_compose(f, f) == f
        for i in range(1, a):
            hook = TLElement.hook(i, a, level)
            assert tl_compose(hook, f).is_zero()
            assert tl_compose(f, hook).is_zero()


@pytest.mark.parametrize("r", [3, 5, 7])
def test_jones_wenzl_trace_is_quantum_dimension(r):
    level = Level(r)
    for a in range(r - 1):
        assert markov_trace(jones_wenzl(a, level)) == delta(a, level)


def test_jones_wenzl_two_strands(level5):
    f2 = jones_wenzl(2, level5)
    expected = TLElement.identity(2, level5) - TLElement.hook(1, 2, level5).scale(1 / loop_value(level5))
    assert f2 == expected


def test_jones_wenzl_index_range(level5):
    with pytest.raises(OutOfRange):
        jones_wenzl(5, level5)
    with pytest.raises(OutOfRange):
        jones_wenzl(-1, level5)


def test_loop_value(level3):
    assert loop_value(level3) == -power_of_A(2, level3) - power_of_A(-2, level3)
    assert markov_trace(TLElement.identity(1, level3)) == loop_value(level3)
