"""JSON reading and writing for quivers, representations and morphisms.

Schema problems raise :class:`InputError` whose message starts with the JSON
path of the offending field, e.g. ``$.core.arrows[0].from``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import jsonschema

from .linalg import Matrix, format_rational, parse_rational
from .quiver import (
    Arrow,
    FiniteQuiver,
    QuiverPresentation,
    QuiverStructureError,
    TailArrow,
    TailSpec,
    TailVertex,
    parse_tail_ref,
)
from .rep import StableRep


class InputError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


_ID = {"type": "string", "minLength": 1}

QUIVER_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["core", "tails"],
    "properties": {
        "core": {
            "type": "object",
            "additionalProperties": False,
            "required": ["vertices", "arrows"],
            "properties": {
                "vertices": {"type": "array", "items": _ID},
                "arrows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["id", "from", "to"],
                        "properties": {"id": _ID, "from": _ID, "to": _ID},
                    },
                },
            },
        },
        "tails": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["attach", "preperiod", "period"],
                "properties": {
                    "attach": _ID,
                    "preperiod": {"type": "string", "pattern": "^[OI]*$"},
                    "period": {"type": "string", "pattern": "^[OI]+$"},
                },
            },
        },
    },
}

_RATIONAL = {"type": "string", "pattern": r"^\s*-?\d+(/\d+)?\s*$"}

REP_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["window_depths", "dims", "maps", "tags"],
    "properties": {
        "window_depths": {
            "type": "object",
            "additionalProperties": {"type": "integer", "minimum": 1},
        },
        "dims": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "maps": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
        },
        "tags": {
            "type": "object",
            "additionalProperties": {
                "oneOf": [
                    {"const": "zero"},
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["stable"],
                        "properties": {"stable": {"type": "integer", "minimum": 1}},
                    },
                ]
            },
        },
    },
}


def _check(doc, schema) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise InputError(e.json_path, e.message)


def load_json(path: str | Path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError("$", f"not valid JSON ({e.msg} at line {e.lineno})") from None
    except OSError as e:
        raise InputError("$", f"cannot read {path}: {e.strerror}") from None


# -- quivers --------------------------------------------------------------------


def quiver_from_json(doc) -> QuiverPresentation:
    _check(doc, QUIVER_SCHEMA)
    vertices = tuple(doc["core"]["vertices"])
    known = set(vertices)
    arrows = []
    for i, a in enumerate(doc["core"]["arrows"]):
        for key in ("from", "to"):
            if a[key] not in known:
                raise InputError(f"$.core.arrows[{i}].{key}", f"unknown vertex {a[key]!r}")
        arrows.append(Arrow(a["id"], a["from"], a["to"]))
    tails = tuple(TailSpec(t["attach"], t["preperiod"], t["period"]) for t in doc["tails"])
    try:
        return QuiverPresentation(FiniteQuiver(vertices, tuple(arrows)), tails)
    except QuiverStructureError as e:
        raise InputError("$", str(e)) from None


def quiver_to_json(qp: QuiverPresentation) -> dict:
    return {
        "core": {
            "vertices": list(qp.core.vertices),
            "arrows": [{"id": a.id, "from": a.source, "to": a.target} for a in qp.core.arrows],
        },
        "tails": [{"attach": t.attach, "preperiod": t.preperiod, "period": t.period} for t in qp.tails],
    }


def load_quiver(path: str | Path) -> QuiverPresentation:
    return quiver_from_json(load_json(path))


# -- representations --------------------------------------------------------------


def _vertex_from_key(qp: QuiverPresentation, key: str, path: str):
    ref = parse_tail_ref(key)
    if ref is not None:
        k, d = ref
        if not (0 <= k < len(qp.tails) and d >= 1):
            raise InputError(path, f"no tail vertex {key!r}")
        return TailVertex(k, d)
    if key not in qp.core.index:
        raise InputError(path, f"unknown vertex {key!r}")
    return key


def _arrow_from_key(qp: QuiverPresentation, key: str, path: str):
    ref = parse_tail_ref(key)
    if ref is not None:
        k, d = ref
        if not (0 <= k < len(qp.tails) and d >= 1):
            raise InputError(path, f"no tail arrow {key!r}")
        return TailArrow(k, d)
    if key not in qp.core.arrow_by_id:
        raise InputError(path, f"unknown arrow {key!r}")
    return key


def matrix_to_json(m: Matrix) -> list:
    return [[format_rational(x) for x in r] for r in m.rows]


def rep_from_json(qp: QuiverPresentation, doc) -> StableRep:
    _check(doc, REP_SCHEMA)
    n = len(qp.tails)
    depths = [None] * n
    for key, d in doc["window_depths"].items():
        if not key.isdigit() or int(key) >= n:
            raise InputError(f"$.window_depths.{key}", "keys must be tail indices")
        depths[int(key)] = d
    for k, d in enumerate(depths):
        if d is None:
            raise InputError("$.window_depths", f"missing depth for tail {k}")
    tags = [0] * n
    for key, t in doc["tags"].items():
        if not key.isdigit() or int(key) >= n:
            raise InputError(f"$.tags.{key}", "keys must be tail indices")
        tags[int(key)] = 0 if t == "zero" else t["stable"]
    dims = {}
    for key, d in doc["dims"].items():
        dims[_vertex_from_key(qp, key, f"$.dims.{key}")] = d
    maps = {}
    for key, rows in doc["maps"].items():
        aid = _arrow_from_key(qp, key, f"$.maps.{key}")
        a = qp.arrow(aid)
        shape = (dims.get(a.target, 0), dims.get(a.source, 0))
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise InputError(f"$.maps.{key}", f"expected a {shape[0]}x{shape[1]} matrix")
        maps[aid] = Matrix([[parse_rational(x) for x in r] for r in rows], shape[1])
    try:
        return StableRep(qp, depths, dims, maps, tags)
    except ValueError as e:
        raise InputError("$", str(e)) from None


def rep_to_json(m: StableRep) -> dict:
    return {
        "window_depths": {str(k): d for k, d in enumerate(m.depths)},
        "dims": {str(v): d for v, d in m.dims.items() if d},
        "maps": {str(a): matrix_to_json(mat) for a, mat in m.maps.items() if mat.nrows and mat.ncols},
        "tags": {str(k): ("zero" if t == 0 else {"stable": t}) for k, t in enumerate(m.tags)},
    }


def load_rep(qp: QuiverPresentation, path: str | Path) -> StableRep:
    return rep_from_json(qp, load_json(path))


def morphism_to_json(f) -> dict:
    return {str(v): matrix_to_json(c) for v, c in f.comps.items() if c.nrows and c.ncols}


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False, default=_default)


def _default(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (TailVertex, TailArrow)):
        return str(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")
