"""Command-line surface: one handler per command, each returning a payload dict.

Exit status: 0 on success, 1 on invalid input, 2 when an evaluation exceeds the
term budget, 3 when `check` finds a failing property.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from algebra.exact_scalars import Level
from algebra.matrices import RepMatrix
from algebra.temperley_lieb import TLElement, jones_wenzl, markov_trace, tl_compose
from analysis.commutant import counterexample_demo, irreducibility_verdict
from analysis.modular import modular_invariants
from representations.mcg_rep import (
    dehn_twist_matrix, generator_matrices, pants_eigentuple_check, resolve_curve, s_matrix, t_matrix,
    transverse_unitarity, vacuum_orbit_rank,
)
from representations.solid_torus import pairing_normalization, twist_basis_matrix
from representations.spines import enumerate_basis, verlinde_dimension
from skein.diagram import load_diagram
from skein.evaluation import evaluate
from skein.recoupling import colors, delta, tables
from utilities.config import (
    COMMANDS, DEFAULT_DIGITS, DEFAULT_INVARIANT_BOUND, DEFAULT_ORBIT_DEPTH, FORMATS, STRATEGIES, RunConfig,
    term_budget,
)
from utilities.errors import ResourceLimit, SkeinRepError
from utilities.serialization import matrix_payload, render, scalar_payload

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_RESOURCE, EXIT_CHECK_FAILED = 0, 1, 2, 3
UNITARITY_TOLERANCE = 1e-8


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the invalid-input status rather than argparse's 2."""

    def error(self, message: str):
        raise ValueError(message)


class CheckFailed(Exception):
    def __init__(self, payload: Dict[str, Any]):
        super().__init__("property check failed")
        self.payload = payload


def run_tables(config: RunConfig) -> Dict[str, Any]:
    """Delta, xi and theta tables."""
    level = Level(config.r)
    rows = []
    for kind, entries in tables(level).items():
        for entry in entries:
            *labels, value = entry
            rows.append({"kind": kind, "labels": list(labels), "value": scalar_payload(value, config.digits)})
    return {"r": config.r, "rows": rows}


def run_basis(config: RunConfig) -> Dict[str, Any]:
    """Admissible spine labelings with the Verlinde cross-check."""
    level = Level(config.r)
    basis = enumerate_basis(config.genus, level)
    return {
        "r": config.r,
        "genus": config.genus,
        "dimension": len(basis),
        "verlinde": round(verlinde_dimension(config.genus, config.r), 6),
        "rows": [{"index": i, "labeling": list(v)} for i, v in enumerate(basis)],
    }


def run_rep(config: RunConfig) -> Dict[str, Any]:
    """Twist matrices of the standard generators or of --curve."""
    level = Level(config.r)
    if config.curve:
        spec = resolve_curve(config.curve, config.genus)
        named = [(spec.name, dehn_twist_matrix(spec, config.genus, level, config.strategy, config.budget))]
    else:
        named = generator_matrices(config.genus, level, config.strategy, config.budget)
    return {
        "r": config.r,
        "genus": config.genus,
        "basis": [list(v) for v in enumerate_basis(config.genus, level)],
        "matrices": [{"name": name, "matrix": matrix_payload(m, config.digits)} for name, m in named],
    }


def run_irr(config: RunConfig) -> Dict[str, Any]:
    """Commutant of the generators and the irreducibility verdict."""
    level = Level(config.r)
    report = irreducibility_verdict(config.genus, level, config.strategy, config.budget)
    payload = report.summary()
    payload.update({"r": config.r, "genus": config.genus})
    payload["commutant_basis"] = [matrix_payload(m, config.digits) for m in report.basis]
    return payload


def run_invariants(config: RunConfig) -> Dict[str, Any]:
    """Bounded modular invariants commuting with S and T."""
    found = modular_invariants(Level(config.r), config.bound)
    return {
        "r": config.r,
        "bound": config.bound,
        "count": len(found),
        "rows": [{"index": i, "diagonal": z.is_diagonal, "matrix": [list(row) for row in z.entries]}
                 for i, z in enumerate(found)],
    }


def run_eval(config: RunConfig) -> Dict[str, Any]:
    """Evaluate a closed diagram file."""
    if not config.diagram_file:
        raise ValueError("eval needs --file")
    diagram = load_diagram(config.diagram_file)
    r = diagram.r if diagram.r is not None else config.r
    level = Level(r)
    result = evaluate(diagram, level, config.strategy, config.budget)
    return {
        "r": r,
        "file": Path(config.diagram_file).name,
        "strategy": config.strategy,
        "value": scalar_payload(result.value, config.digits),
        "stats": dict(sorted(result.stats.items())),
    }


def _jones_wenzl_contract(level: Level) -> bool:
    for a in colors(level):
        f = jones_wenzl(a, level)
        if tl_compose(f, f) != f or markov_trace(f) != delta(a, level):
            return False
        for i in range(1, a):
            if not tl_compose(TLElement.hook(i, a, level), f).is_zero():
                return False
    return True


def _modular_relations(level: Level) -> bool:
    s, t = s_matrix(level), t_matrix(level)
    st = s @ t
    return (s ** 4).projectively_equal(RepMatrix.identity(s.n, level)) and (st ** 3).projectively_equal(s @ s)


def run_check(config: RunConfig) -> Dict[str, Any]:
    """Run the property suite at one level and genus."""
    level = Level(config.r)
    genus = config.genus
    dimension = len(enumerate_basis(genus, level))
    checks: List[Dict[str, Any]] = []

    def record(name: str, test: Callable[[], Any]):
        value = test()
        checks.append({"name": name, "passed": bool(value), "detail": value if not isinstance(value, bool) else ""})

    record("jones_wenzl_contract", lambda: _jones_wenzl_contract(level))
    record("twist_basis_invertible", lambda: not twist_basis_matrix(level).determinant().is_zero())
    record("pairing_normalization", lambda: pairing_normalization(level).consistent)
    record("modular_relations", lambda: _modular_relations(level))
    record("verlinde_dimension", lambda: abs(verlinde_dimension(genus, config.r) - dimension) < 1e-6)
    record("pants_eigentuples_distinct", lambda: pants_eigentuple_check(genus, level).distinct)
    record("vacuum_orbit_full", lambda: vacuum_orbit_rank(genus, level, config.depth, strategy=config.strategy,
                                                          budget=config.budget) == dimension)
    record("transverse_twists_unitary", lambda: max(transverse_unitarity(genus, level, config.strategy, config.budget)
                                                    .values()) < UNITARITY_TOLERANCE)
    record("irreducible", lambda: irreducibility_verdict(genus, level, config.strategy, config.budget).irreducible)
    demo = counterexample_demo(level)
    checks.append({"name": "counterexample_reducible", "passed": demo.orbit_rank == 2 and not demo.irreducible,
                   "detail": demo.summary()})
    payload = {"r": config.r, "genus": genus, "rows": checks, "passed": all(c["passed"] for c in checks)}
    if not payload["passed"]:
        raise CheckFailed(payload)
    return payload


HANDLERS: Dict[str, Callable[[RunConfig], Dict[str, Any]]] = {
    "tables": run_tables,
    "basis": run_basis,
    "rep": run_rep,
    "irr": run_irr,
    "invariants": run_invariants,
    "eval": run_eval,
    "check": run_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--r", type=int, default=5, help="level: A is a primitive 4r-th root of unity")
    common.add_argument("--genus", type=int, default=1)
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
    common.add_argument("--budget", type=int, default=None, help="term budget (default SKEINREP_BUDGET or 10^7)")
    common.add_argument("--depth", type=int, default=DEFAULT_ORBIT_DEPTH, help="orbit search depth")
    common.add_argument("--bound", type=int, default=DEFAULT_INVARIANT_BOUND, help="largest entry of a modular invariant")
    common.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="digits of the numeric renderings")
    common.add_argument("--strategy", choices=STRATEGIES, default="accel")
    common.add_argument("--curve", help="named curve or curve file (rep)")
    common.add_argument("--file", dest="diagram_file", help="diagram file (eval)")
    common.add_argument("--log-level", default="WARNING")

    parser = _Parser(prog="skeinrep", description="Exact SU(2) skein-theoretic TQFT workbench.")
    commands = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        commands.add_parser(name, parents=[common], help=HANDLERS[name].__doc__)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    logging.basicConfig(
        level=getattr(logging, str(args.pop("log_level")).upper(), logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    if args["budget"] is None:
        args["budget"] = term_budget()
    return RunConfig(**args)


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(config: RunConfig) -> int:
    try:
        payload = HANDLERS[config.command](config)
    except CheckFailed as failed:
        _emit(render(failed.payload, config.fmt), config.output)
        return EXIT_CHECK_FAILED
    except ResourceLimit as exc:
        print(f"error: {exc.qualified()}", file=sys.stderr)
        return EXIT_RESOURCE
    except SkeinRepError as exc:
        print(f"error: {exc.qualified()}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(render(payload, config.fmt), config.output)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    logger.info("running %s at r=%d, genus %d", config.command, config.r, config.genus)
    return run(config)
