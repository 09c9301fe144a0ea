"""Algebra files: JSON with sparse structure-constant entries.

Format:
    {"name": str, "dim": int,
     "prec": [[i, j, k, "p/q"], ...], "succ": [...], "dot": [...]}
Indices are zero-based; an entry gives the coefficient of e_k in e_i op e_j;
unlisted coefficients are zero.  Coefficients are rational strings (or
integers); floats are rejected.  Serialization is canonical (entries merged,
zeros dropped, sorted by index), so canonicalize(canonicalize(f)) ==
canonicalize(f).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import TriDendAlgebra

_TABLE_KEYS = ("prec", "succ", "dot")


class AlgebraFileError(ValueError):
    """Malformed algebra file; the message names the offending field."""


def _parse_coeff(raw, where: str) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise AlgebraFileError(f"{where}: coefficient must be an integer or a rational string, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraFileError(f"{where}: malformed rational {raw!r} ({exc})") from exc
    raise AlgebraFileError(f"{where}: coefficient must be an integer or a rational string, got {type(raw).__name__}")


def _parse_table(obj, key: str, dim: int):
    entries = obj.get(key)
    if entries is None:
        raise AlgebraFileError(f"missing table {key!r}")
    if not isinstance(entries, list):
        raise AlgebraFileError(f"{key}: expected a list of entries")
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for pos, entry in enumerate(entries):
        where = f"{key}[{pos}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise AlgebraFileError(f"{where}: expected [i, j, k, coefficient]")
        i, j, k, raw = entry
        for label, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise AlgebraFileError(f"{where}: index {label} must be an integer, got {idx!r}")
            if not 0 <= idx < dim:
                raise AlgebraFileError(f"{where}: index {label}={idx} out of range for dim {dim}")
        table[i][j][k] += _parse_coeff(raw, where)
    return table


def parse_algebra(obj) -> tuple[str, TriDendAlgebra]:
    """Build (name, algebra) from a decoded JSON object."""
    if not isinstance(obj, dict):
        raise AlgebraFileError("top level must be a JSON object")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise AlgebraFileError("name: expected a nonempty string")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise AlgebraFileError("dim: expected a nonnegative integer")
    unknown = set(obj) - {"name", "dim", *_TABLE_KEYS}
    if unknown:
        raise AlgebraFileError(f"unknown keys: {sorted(unknown)}")
    tables = {key: _parse_table(obj, key, dim) for key in _TABLE_KEYS}
    return name, TriDendAlgebra(dim=dim, prec=tables["prec"], succ=tables["succ"], dot=tables["dot"])


def load_algebra(path) -> tuple[str, TriDendAlgebra]:
    """Load (name, algebra) from a JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise AlgebraFileError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_algebra(obj)


def algebra_to_obj(name: str, alg: TriDendAlgebra) -> dict:
    """Canonical JSON object: sorted sparse entries, rationals as strings."""
    out = {"name": name, "dim": alg.dim}
    for key in _TABLE_KEYS:
        table = getattr(alg, key)
        entries = []
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k in range(alg.dim):
                    c = table[i][j][k]
                    if c:
                        entries.append([i, j, k, str(c)])
        out[key] = entries
    return out


def dump_algebra(name: str, alg: TriDendAlgebra, path) -> None:
    Path(path).write_text(json.dumps(algebra_to_obj(name, alg), indent=2, sort_keys=True) + "\n")
