"""JSON problem files: a grading group, a bicharacter, a graded space and
a list of homogeneous generators.

Rationals are encoded as strings "p/q" (or "p"); bare JSON integers are
also accepted.  Floats are rejected everywhere, so no value ever passes
through floating point.  Degrees are integer arrays, free coordinates
first and torsion coordinates after.

Example document::

    {
      "group": {"free_rank": 0, "torsion_moduli": [3]},
      "bicharacter": [["1"]],
      "space": [{"degree": [0], "dim": 1}, {"degree": [1], "dim": 1}],
      "generators": [
        {"degree": [1], "blocks": [{"source": [0], "matrix": [["1"]]}]}
      ]
    }
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .grading import Bicharacter, GroupSpec, make_bicharacter, make_group
from .graded import GradedSpace, HomogeneousMap, make_map, make_space

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


@dataclass(frozen=True)
class ProblemFile:
    group: GroupSpec
    bicharacter: Bicharacter
    space: GradedSpace
    generators: tuple[HomogeneousMap, ...]


def _fail(where: str, message: str):
    raise ParseError(f"{where}: {message}" if where else message)


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        _fail(where, "expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        _fail(where, "floating-point values are not accepted; use \"p/q\" strings")
    if isinstance(value, str):
        if not _RATIONAL.match(value):
            _fail(where, f"malformed rational {value!r}; expected \"p\" or \"p/q\"")
        return Fraction(value)
    _fail(where, f"expected a rational, got {type(value).__name__}")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(where, f"expected an integer, got {value!r}")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        _fail(where, f"expected a list, got {type(value).__name__}")
    return value


def _dict(value, where: str) -> dict:
    if not isinstance(value, dict):
        _fail(where, f"expected an object, got {type(value).__name__}")
    return value


def _degree(group: GroupSpec, value, where: str):
    coords = [_int(c, f"{where}[{i}]") for i, c in enumerate(_list(value, where))]
    if len(coords) != group.generator_count:
        _fail(
            where,
            f"degree needs {group.generator_count} coordinates, got {len(coords)}",
        )
    return group.element(coords)


def _matrix(value, where: str) -> list[list[Fraction]]:
    rows = _list(value, where)
    return [
        [_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(_list(row, f"{where}[{i}]"))]
        for i, row in enumerate(rows)
    ]


def parse_problem(data, where: str = "") -> ProblemFile:
    """Build validated domain objects from a decoded JSON document.

    Schema errors raise ParseError anchored to the JSON path; semantic
    errors (bad bicharacter, wrong block shapes) propagate from the
    underlying constructors.
    """
    doc = _dict(data, where)
    for key in ("group", "bicharacter", "space", "generators"):
        if key not in doc:
            _fail(where, f"missing required key {key!r}")

    gspec = _dict(doc["group"], "group")
    group = make_group(
        _int(gspec.get("free_rank", 0), "group.free_rank"),
        [
            _int(m, f"group.torsion_moduli[{i}]")
            for i, m in enumerate(_list(gspec.get("torsion_moduli", []), "group.torsion_moduli"))
        ],
    )

    bichar = make_bicharacter(group, _matrix(doc["bicharacter"], "bicharacter"))

    dims = {}
    for i, entry in enumerate(_list(doc["space"], "space")):
        e = _dict(entry, f"space[{i}]")
        g = _degree(group, e.get("degree"), f"space[{i}].degree")
        if g in dims:
            _fail(f"space[{i}].degree", f"duplicate degree {g}")
        dims[g] = _int(e.get("dim"), f"space[{i}].dim")
    space = make_space(group, dims)

    generators = []
    for i, entry in enumerate(_list(doc["generators"], "generators")):
        e = _dict(entry, f"generators[{i}]")
        degree = _degree(group, e.get("degree"), f"generators[{i}].degree")
        blocks = {}
        for j, blk in enumerate(_list(e.get("blocks", []), f"generators[{i}].blocks")):
            b = _dict(blk, f"generators[{i}].blocks[{j}]")
            src = _degree(group, b.get("source"), f"generators[{i}].blocks[{j}].source")
            if src in blocks:
                _fail(f"generators[{i}].blocks[{j}].source", f"duplicate source {src}")
            blocks[src] = _matrix(b.get("matrix"), f"generators[{i}].blocks[{j}].matrix")
        generators.append(make_map(space, degree, blocks))

    return ProblemFile(group, bichar, space, tuple(generators))


def load_problem(path) -> ProblemFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}")
    return parse_problem(data)


def _degree_coords(g) -> list[int]:
    return list(g.coords())


def serialize_problem(problem: ProblemFile) -> dict:
    """Canonical JSON document; parsing it back yields equal objects."""
    return {
        "group": {
            "free_rank": problem.group.free_rank,
            "torsion_moduli": list(problem.group.torsion_moduli),
        },
        "bicharacter": [
            [str(x) for x in row] for row in problem.bicharacter.values
        ],
        "space": [
            {"degree": _degree_coords(g), "dim": n}
            for g, n in problem.space.dims
        ],
        "generators": [
            {
                "degree": _degree_coords(f.degree),
                "blocks": [
                    {
                        "source": _degree_coords(h),
                        "matrix": [[str(x) for x in row] for row in b.data],
                    }
                    for h, b in f.blocks
                ],
            }
            for f in problem.generators
        ],
    }
