"""Deterministic JSON, CSV and text renderings of command results.

Exact scalars are written in both forms: the serialized coefficient vectors
(authoritative) and a rounded complex value (advisory).
"""
import csv
import io
import json
from typing import Any, Dict, List, Sequence

from algebra.exact_scalars import CycloScalar, embed_numeric
from algebra.matrices import RepMatrix
from utilities.config import DEFAULT_DIGITS, FORMATS


def scalar_payload(x: CycloScalar, digits: int = DEFAULT_DIGITS) -> Dict[str, Any]:
    value = embed_numeric(x, digits)
    return {"exact": x.to_dict(), "numeric": [round(value.real, digits), round(value.imag, digits)]}


def load_scalar(payload: Dict[str, Any]) -> CycloScalar:
    return CycloScalar.from_dict(payload["exact"])


def matrix_payload(m: RepMatrix, digits: int = DEFAULT_DIGITS) -> Dict[str, Any]:
    numeric = m.numeric(digits)
    return {
        "shape": list(m.shape),
        "exact": m.to_lists(),
        "numeric": [[[round(z.real, digits), round(z.imag, digits)] for z in row] for row in numeric],
    }


def load_matrix(payload: Dict[str, Any]) -> RepMatrix:
    return RepMatrix.from_lists(payload["exact"])


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _flatten(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def to_csv(payload: Dict[str, Any]) -> str:
    """Tabular payloads (a "rows" list of dicts) become one CSV row each; anything
    else is written as key,value pairs."""
    out = io.StringIO()
    rows: Sequence[Dict[str, Any]] = payload.get("rows") or []
    if rows:
        fields = sorted({key for row in rows for key in row})
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _flatten(v) for k, v in row.items()})
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key in sorted(payload):
            writer.writerow([key, _flatten(payload[key])])
    return out.getvalue()


def _text_lines(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        if set(value) == {"exact", "numeric"} and not isinstance(value["numeric"][0], list):
            re, im = value["numeric"]
            return [f"{pad}{re:+.6f}{im:+.6f}i"]
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            lines.extend(_text_lines(item, indent) if isinstance(item, dict) else [f"{pad}- {_flatten(item)}"])
        return lines
    return [f"{pad}{value}"]


def to_text(payload: Dict[str, Any]) -> str:
    return "\n".join(_text_lines(payload)) + "\n"


def render(payload: Dict[str, Any], fmt: str) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {', '.join(FORMATS)}")
    return {"json": to_json, "csv": to_csv, "text": to_text}[fmt](payload)
