from typing import Optional

from algebra.exact_scalars import Level
from skein.accel_engine import eval_accel
from skein.diagram import GraphDiagram
from skein.naive_engine import EvalResult, eval_naive

ENGINES = {"accel": eval_accel, "naive": eval_naive}


def evaluate(diagram: GraphDiagram, level: Level, strategy: str = "accel",
             budget: Optional[int] = None) -> EvalResult:
    try:
        engine = ENGINES[strategy]
    except KeyError:
        raise ValueError(f"unknown evaluation strategy {strategy!r}") from None
    return engine(diagram, level, budget)
