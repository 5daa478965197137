"""Exception hierarchy shared by every package in the workbench."""
from typing import List, Optional


class SkeinRepError(Exception):
    module = "skeinrep"

    def __init__(self, message: str, module: Optional[str] = None):
        super().__init__(message)
        if module is not None:
            self.module = module

    def qualified(self) -> str:
        return f"{self.module}: {self}"


class DivisionByZero(SkeinRepError, ZeroDivisionError):
    module = "exact_scalars"


class StrandMismatch(SkeinRepError, ValueError):
    module = "temperley_lieb"


class OutOfRange(SkeinRepError, ValueError):
    module = "recoupling_data"


class DegenerateDenominator(SkeinRepError, ArithmeticError):
    module = "temperley_lieb"


class InvalidDiagram(SkeinRepError, ValueError):
    module = "diagram_engine"

    def __init__(self, defects: List["object"], message: Optional[str] = None):
        self.defects = list(defects)
        text = message or "; ".join(str(d) for d in self.defects) or "invalid diagram"
        super().__init__(text)


class ResourceLimit(SkeinRepError, RuntimeError):
    module = "diagram_engine"


class RewriteStuck(SkeinRepError, RuntimeError):
    module = "diagram_engine"


class ZeroTheta(SkeinRepError, ArithmeticError):
    module = "recoupling_data"


class UnsupportedGenus(SkeinRepError, ValueError):
    module = "rep_spaces"


class SingularGram(SkeinRepError, ArithmeticError):
    module = "rep_spaces"


class InvalidCurve(SkeinRepError, ValueError):
    module = "mcg_rep"


class DimensionMismatch(SkeinRepError, ValueError):
    module = "analysis"
