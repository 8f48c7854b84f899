"""Exact computations with jet groups, prolongations and G-structures.

``run`` dispatches any command by name; the helpers below wrap the common
ones. Rational inputs may be ``int``, ``str`` ("p/q") or ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from ._core import (
    PreconditionError,
    SchemaError,
    command_names,
    finite_type,
    prolongation_dim,
    rank,
    run_json,
    signature,
)
from ._core import nullspace as _nullspace

__all__ = [
    "CommandError",
    "PreconditionError",
    "SchemaError",
    "command_names",
    "decompose",
    "finite_type",
    "levi_civita",
    "nullspace",
    "prolongation_dim",
    "rank",
    "recompose",
    "run",
    "signature",
]


class CommandError(RuntimeError):
    """A command finished with status "error"; ``code`` is "schema" or "precondition"."""

    def __init__(self, code, diagnostics, exit_code):
        super().__init__(f"{code}: {'; '.join(diagnostics)}")
        self.code = code
        self.diagnostics = diagnostics
        self.exit_code = exit_code


def _encode(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _matrix(rows):
    return [[str(Fraction(x)) for x in row] for row in rows]


def run(command, payload, *, tolerance=1e-12, k_max=4, seed=0):
    """Run a command and return its ``data``; raises CommandError on failure."""
    text, code = run_json(command, json.dumps(_encode(payload)), tolerance, k_max, seed)
    envelope = json.loads(text)
    if envelope["status"] != "ok":
        raise CommandError(envelope.get("code"), envelope.get("diagnostics", []), code)
    return envelope["data"]


def nullspace(matrix, cols=None):
    """Exact kernel basis as lists of Fractions."""
    width = cols if cols is not None else (len(matrix[0]) if matrix else 0)
    return [[Fraction(x) for x in v] for v in _nullspace(_matrix(matrix), width)]


def decompose(g, q=None):
    payload = {"g": _matrix(g)}
    if q is not None:
        payload["q"] = q
    return run("decompose", payload)


def recompose(data):
    return run("recompose", data)


def levi_civita(g, x):
    """Christoffel symbols of a constant or polynomial metric at x (JSON field layout)."""
    return run("levi-civita", {"g": g, "x": [str(Fraction(c)) for c in x]})
