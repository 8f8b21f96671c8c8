"""
Game Files and Solve Reports for CoopGamePy

Reads and writes GameSpec documents (a JSON object describing a bimatrix
game) and assembles the machine-readable report of a solve run.
"""

import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .. import __version__
from ..config import DEFAULT_LAMBDA_BRACKET, DEFAULT_LAMBDA_TOL, REPORT_DIGITS
from ..coop.solutions import (
    Bimatrix,
    lambda_transfer,
    ntu_nash,
    pure_nash,
    tu_solution,
)
from ..exceptions import InputError

METHODS = ("nash", "tu", "ntu-nash", "ntu-lambda", "all")


@dataclass(frozen=True)
class GameSpec:
    """Serialized description of a bimatrix game."""

    name: str
    rows: int
    cols: int
    A: List[List[float]]
    B: List[List[float]]
    row_labels: Optional[List[str]] = None
    col_labels: Optional[List[str]] = None
    threat: Optional[Tuple[float, float]] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GameSpec":
        """
        Validate a decoded JSON object.

        Raises:
            InputError: On missing fields, wrong shapes or non-finite numbers
        """
        if not isinstance(data, dict):
            raise InputError("Game file must contain a JSON object")
        missing = [key for key in ("name", "rows", "cols", "A", "B") if key not in data]
        if missing:
            raise InputError(f"Game file is missing field(s): {', '.join(missing)}")

        name = data["name"]
        if not isinstance(name, str):
            raise InputError("'name' must be a string")
        rows = _positive_int(data["rows"], "rows")
        cols = _positive_int(data["cols"], "cols")
        a = _matrix(data["A"], rows, cols, "A")
        b = _matrix(data["B"], rows, cols, "B")
        row_labels = _labels(data.get("row_labels"), rows, "row_labels")
        col_labels = _labels(data.get("col_labels"), cols, "col_labels")

        threat = data.get("threat")
        if threat is not None:
            if not isinstance(threat, (list, tuple)) or len(threat) != 2:
                raise InputError("'threat' must be a pair of numbers")
            threat = (_number(threat[0], "threat"), _number(threat[1], "threat"))

        return cls(name=name, rows=rows, cols=cols, A=a, B=b,
                   row_labels=row_labels, col_labels=col_labels, threat=threat)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "rows": self.rows,
            "cols": self.cols,
            "A": [[_rounded(x) for x in row] for row in self.A],
            "B": [[_rounded(x) for x in row] for row in self.B],
        }
        if self.row_labels is not None:
            data["row_labels"] = list(self.row_labels)
        if self.col_labels is not None:
            data["col_labels"] = list(self.col_labels)
        if self.threat is not None:
            data["threat"] = [_rounded(x) for x in self.threat]
        return data

    def to_bimatrix(self) -> Bimatrix:
        return Bimatrix(A=self.A, B=self.B, row_labels=self.row_labels, col_labels=self.col_labels)

    @classmethod
    def from_bimatrix(cls, g: Bimatrix, name: str,
                      threat: Optional[Sequence[float]] = None) -> "GameSpec":
        return cls(
            name=name,
            rows=g.rows,
            cols=g.cols,
            A=g.A.tolist(),
            B=g.B.tolist(),
            row_labels=list(g.row_labels) if g.row_labels else None,
            col_labels=list(g.col_labels) if g.col_labels else None,
            threat=tuple(float(x) for x in threat) if threat is not None else None,
        )


def _positive_int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InputError(f"'{field}' must be a positive integer, got {value!r}")
    return value


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"'{field}' entries must be numbers, got {value!r}")
    try:
        number = float(value)
    except OverflowError:
        raise InputError(f"'{field}' entries must be finite, got an integer too large for a float") from None
    if not math.isfinite(number):
        raise InputError(f"'{field}' entries must be finite, got {value!r}")
    return number


def _matrix(value: Any, rows: int, cols: int, field: str) -> List[List[float]]:
    if not isinstance(value, list) or len(value) != rows:
        raise InputError(f"'{field}' must be a list of {rows} rows")
    out = []
    for row in value:
        if not isinstance(row, list) or len(row) != cols:
            raise InputError(f"every row of '{field}' must have {cols} entries")
        out.append([_number(x, field) for x in row])
    return out


def _labels(value: Any, size: int, field: str) -> Optional[List[str]]:
    if value is None:
        return None
    if not isinstance(value, list) or len(value) != size or not all(isinstance(x, str) for x in value):
        raise InputError(f"'{field}' must be a list of {size} strings")
    return list(value)


def _rounded(x: float) -> float:
    """Round to REPORT_DIGITS significant digits, with -0.0 written as 0.0."""
    value = float(f"{float(x):.{REPORT_DIGITS}g}")
    return 0.0 if value == 0.0 else value


def _point(p) -> List[float]:
    return [_rounded(p[0]), _rounded(p[1])]


def load_game_spec(path: Union[str, Path]) -> GameSpec:
    """
    Load a GameSpec from a JSON file, or from standard input when ``path`` is "-".

    Raises:
        InputError: If the file cannot be read or does not describe a game
    """
    try:
        if str(path) == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"Cannot read game file {path}: {e}") from e

    try:
        data = json.loads(text)
    except ValueError as e:
        # JSONDecodeError, or an integer literal past the int-to-str digit limit
        raise InputError(f"Game file {path} is not valid JSON: {e}") from e
    return GameSpec.from_dict(data)


def dump_game_spec(spec: GameSpec) -> str:
    return json.dumps(spec.to_dict(), indent=2, ensure_ascii=False) + "\n"


def build_solve_report(spec: GameSpec, method: str = "all",
                       threat: Optional[Sequence[float]] = None,
                       bracket: Tuple[float, float] = DEFAULT_LAMBDA_BRACKET,
                       tol: float = DEFAULT_LAMBDA_TOL) -> Dict[str, Any]:
    """
    Run the requested solution method(s) on a game and collect the results.

    Args:
        spec: Game description
        method: One of "nash", "tu", "ntu-nash", "ntu-lambda", "all"
        threat: Threat point override for the bargaining solution; falls back
            to the file's threat, then to the TU disagreement point
        bracket: Lambda search interval
        tol: Lambda tolerance

    Returns:
        Report dictionary ready for JSON encoding
    """
    if method not in METHODS:
        raise InputError(f"Unknown method {method!r}; choose from {', '.join(METHODS)}")

    g = spec.to_bimatrix()
    if threat is None:
        threat = spec.threat
    wanted = METHODS[:-1] if method == "all" else (method,)
    results: Dict[str, Any] = {}

    if "nash" in wanted:
        results["nash"] = [
            {"row": eq.row, "col": eq.col, "payoff": _point(eq.payoff)}
            for eq in pure_nash(g)
        ]

    if "tu" in wanted:
        tu = tu_solution(g)
        results["tu"] = {
            "sigma": _rounded(tu.sigma),
            "delta": _rounded(tu.delta),
            "row_threat": [_rounded(x) for x in tu.row_threat.probs],
            "col_threat": [_rounded(x) for x in tu.col_threat.probs],
            "disagreement": _point(tu.disagreement),
            "phi": _point(tu.phi),
            "coop_cell": list(tu.coop_cell),
            "side_payment": _rounded(tu.side_payment),
        }

    if "ntu-nash" in wanted:
        ntu = ntu_nash(g, threat)
        results["ntu-nash"] = {
            "point": _point(ntu.point),
            "threat": _point(ntu.threat),
            "nash_product": _rounded(ntu.nash_product),
            "degenerate": ntu.degenerate,
        }

    if "ntu-lambda" in wanted:
        lam = lambda_transfer(g, bracket=bracket, tol=tol)
        results["ntu-lambda"] = {
            "lambda_star": _rounded(lam.lambda_star),
            "point": _point(lam.point),
            "sigma_of_lambda": _rounded(lam.sigma_of_lambda),
            "delta_of_lambda": _rounded(lam.delta_of_lambda),
            "iterations": lam.iterations,
            "multiple_roots": lam.multiple_roots,
        }

    return {
        "tool": "coopgamepy",
        "version": __version__,
        "method": method,
        "input": {
            "game": spec.to_dict(),
            "threat": _point(threat) if threat is not None else None,
            "lambda_bracket": [_rounded(x) for x in bracket],
            "tol": _rounded(tol),
        },
        "results": results,
    }


def dump_report(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def load_report(text: str) -> Dict[str, Any]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Report is not valid JSON: {e}") from e
