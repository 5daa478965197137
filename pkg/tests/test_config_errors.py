import pytest

from utilities.config import DEFAULT_TERM_BUDGET, RunConfig, max_genus, term_budget
from utilities.errors import DivisionByZero, InvalidDiagram, OutOfRange, SkeinRepError


def test_term_budget_default_and_override(monkeypatch):
    monkeypatch.delenv("SKEINREP_BUDGET", raising=False)
    assert term_budget() == DEFAULT_TERM_BUDGET
    monkeypatch.setenv("SKEINREP_BUDGET", "500")
    assert term_budget() == 500
    monkeypatch.setenv("SKEINREP_BUDGET", "0")
    with pytest.raises(ValueError):
        term_budget()


def test_max_genus_override(monkeypatch):
    monkeypatch.delenv("SKEINREP_MAX_GENUS", raising=False)
    assert max_genus() == 3
    monkeypatch.setenv("SKEINREP_MAX_GENUS", "5")
    assert max_genus() == 5


@pytest.mark.parametrize("overrides", [{"command": "draw"}, {"r": 2}, {"genus": 0}, {"fmt": "xml"},
                                       {"strategy": "magic"}, {"depth": 0}, {"bound": -1}])
def test_run_config_validation(overrides):
    fields = {"command": "basis", **overrides}
    with pytest.raises(ValueError):
        RunConfig(**fields)


def test_errors_carry_their_module():
    assert OutOfRange("color 9").qualified() == "recoupling_data: color 9"
    assert DivisionByZero("x", module="custom").qualified() == "custom: x"
    assert isinstance(DivisionByZero("x"), ZeroDivisionError)
    assert issubclass(InvalidDiagram, SkeinRepError)


def test_invalid_diagram_lists_defects():
    error = InvalidDiagram(["NotClosed", "ColorMismatch at slice 2"])
    assert str(error) == "NotClosed; ColorMismatch at slice 2"
    assert error.defects == ["NotClosed", "ColorMismatch at slice 2"]
