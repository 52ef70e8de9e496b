"""Reading and writing simplicial complexes.

JSON: ``{"m": 4, "facets": [[1,3],[2,3],[2,4],[1,4]]}``.
Text: first line ``m=<int>``, then one facet per line as space-separated
vertices.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .complexes import SimplicialComplex


class ParseError(ValueError):
    pass


def parse_json(text: str, allow_ghost: bool = False) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict) or "m" not in data or "facets" not in data:
        raise ParseError('expected an object with keys "m" and "facets"')
    m, facets = data["m"], data["facets"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise ParseError('"m" must be an integer')
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError('"facets" must be a list of vertex lists')
    return SimplicialComplex.from_facets(m, facets, allow_ghost=allow_ghost)


def parse_text(text: str, allow_ghost: bool = False) -> SimplicialComplex:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].replace(" ", "").startswith("m="):
        raise ParseError("first line must be m=<int>")
    try:
        m = int(lines[0].split("=", 1)[1])
        facets = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as e:
        raise ParseError(f"bad integer: {e}") from e
    return SimplicialComplex.from_facets(m, facets, allow_ghost=allow_ghost)


def loads(text: str, allow_ghost: bool = False) -> SimplicialComplex:
    if text.lstrip().startswith("{"):
        return parse_json(text, allow_ghost)
    return parse_text(text, allow_ghost)


def load(path, allow_ghost: bool = False) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return loads(text, allow_ghost)


def to_dict(K: SimplicialComplex) -> dict:
    return {"m": K.m, "facets": K.facet_lists()}


def dumps(K: SimplicialComplex) -> str:
    return json.dumps(to_dict(K), separators=(",", ":"))


def complex_hash(K: SimplicialComplex) -> str:
    return hashlib.sha256(dumps(K).encode()).hexdigest()[:16]
