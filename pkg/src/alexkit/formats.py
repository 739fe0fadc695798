"""TOML files for Seifert pairs, A-ribbon presentations, block data and
module presentations.

Every file has a ``kind`` key:

``seifert``
    ``v_plus``, ``v_minus`` (row lists), optional ``h1_labels``/``h2_labels``.
``aribbon``
    ``n``, ``eps``, ``lk_matrix``, optional ``star_plus``/``star_minus`` and
    ``eta_linkings`` (one ``[boundary, interior]`` pair per singularity),
    optional ``epsilon_y``/``epsilon_hat`` (checked against the positions), and
    two arrays of tables ``boundary_positions`` / ``interior_positions`` with
    keys ``i``, ``j``, ``region`` (``"ball"`` or ``"torus"``) and ``k``.
    Boundary positions cover every ``i != j``, interior positions every
    ``(i, j)``; indices are 0-based.
``blocks``
    ``u_plus``, ``u_minus``, ``w_plus``, ``w_minus``, optional star blocks.
``module``
    ``matrix``: rows of polynomial strings.

All kinds accept an optional ``name``.  :func:`dumps` is deterministic and
``dumps(loads(text)) == text`` for any text it produced.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .aribbon import ARibbonPresentation, Position, Region, SeifertBlocks
from .intlinalg import IntMatrix
from .laurent import PolySyntaxError, parse, to_str
from .modulecalc import ModulePresentation
from .seifert import LaurentMatrix, SeifertPair


class ParseError(ValueError):
    pass


# reading


def _matrix(data, key, n=None, required=True):
    if key not in data:
        if required:
            raise ParseError(f"missing key {key!r}")
        return None
    rows = data[key]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError(f"{key} must be a list of rows")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
        raise ParseError(f"{key} entries must be integers")
    cols = len(rows[0]) if rows else 0
    if n is not None and (len(rows) != n or cols != n):
        raise ParseError(f"{key} must be {n}x{n}")
    try:
        return IntMatrix.from_rows(rows, cols)
    except ValueError as e:
        raise ParseError(f"{key}: {e}") from None


def _positions(data, key, n, diagonal):
    table = [[None] * n for _ in range(n)]
    for entry in data.get(key, []):
        try:
            i, j = int(entry["i"]), int(entry["j"])
            pos = Position(Region(entry["region"]), int(entry.get("k", 1)))
        except (KeyError, ValueError, TypeError) as e:
            raise ParseError(f"bad entry in {key}: {entry!r} ({e})") from None
        if not (0 <= i < n and 0 <= j < n) or (i == j and not diagonal):
            raise ParseError(f"{key}: index ({i}, {j}) not allowed for n={n}")
        if table[i][j] is not None:
            raise ParseError(f"{key}: duplicate entry for ({i}, {j})")
        table[i][j] = pos
    for i in range(n):
        for j in range(n):
            if (i != j or diagonal) and table[i][j] is None:
                raise ParseError(f"{key}: missing entry for ({i}, {j})")
    return table


def from_dict(data: dict):
    kind = data.get("kind")
    name = data.get("name")
    try:
        if kind == "seifert":
            vp = _matrix(data, "v_plus")
            vm = _matrix(data, "v_minus", vp.rows)
            return SeifertPair(vp, vm, data.get("h1_labels"), data.get("h2_labels"), name=name)
        if kind == "aribbon":
            n = data.get("n")
            if not isinstance(n, int) or n < 0:
                raise ParseError("n must be a nonnegative integer")
            eta = data.get("eta_linkings")
            return ARibbonPresentation(
                n,
                tuple(data.get("eps", [])),
                _positions(data, "boundary_positions", n, diagonal=False),
                _positions(data, "interior_positions", n, diagonal=True),
                _matrix(data, "lk_matrix", n) if n else IntMatrix.zeros(0),
                _matrix(data, "star_plus", n, required=False),
                _matrix(data, "star_minus", n, required=False),
                tuple(tuple(p) for p in eta) if eta is not None else None,
                data.get("epsilon_y"),
                data.get("epsilon_hat"),
                name=name,
            )
        if kind == "blocks":
            up = _matrix(data, "u_plus")
            n = up.rows
            return SeifertBlocks(
                up,
                _matrix(data, "u_minus", n),
                _matrix(data, "w_plus", n),
                _matrix(data, "w_minus", n),
                _matrix(data, "star_plus", n, required=False),
                _matrix(data, "star_minus", n, required=False),
                name=name,
            )
        if kind == "module":
            rows = data.get("matrix")
            if not isinstance(rows, list):
                raise ParseError("module files need a 'matrix' list")
            return ModulePresentation(
                LaurentMatrix([[parse(str(x)) for x in r] for r in rows]), name=name
            )
    except ParseError:
        raise
    except (PolySyntaxError, ValueError, TypeError, KeyError) as e:
        raise ParseError(f"invalid {kind} data: {e}") from None
    raise ParseError(f"unknown or missing kind {kind!r}")


def loads(text: str):
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"not valid TOML: {e}") from None
    return from_dict(data)


def load(path):
    if str(path) == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


# writing


def _str(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _rows(m: IntMatrix) -> str:
    if m.rows == 0:
        return "[]"
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in m.to_rows()) + "]"


def _list(xs) -> str:
    return "[" + ", ".join(xs) + "]"


def dumps(obj) -> str:
    lines = []

    def kv(key, value):
        lines.append(f"{key} = {value}")

    if isinstance(obj, SeifertPair):
        kv("kind", _str("seifert"))
        if obj.name:
            kv("name", _str(obj.name))
        kv("v_plus", _rows(obj.v_plus))
        kv("v_minus", _rows(obj.v_minus))
        if obj.h1_labels is not None:
            kv("h1_labels", _list(_str(x) for x in obj.h1_labels))
        if obj.h2_labels is not None:
            kv("h2_labels", _list(_str(x) for x in obj.h2_labels))
    elif isinstance(obj, ARibbonPresentation):
        kv("kind", _str("aribbon"))
        if obj.name:
            kv("name", _str(obj.name))
        kv("n", str(obj.n))
        kv("eps", _list(str(e) for e in obj.eps))
        kv("lk_matrix", _rows(obj.lk_matrix))
        if obj.star_plus is not None:
            kv("star_plus", _rows(obj.star_plus))
        if obj.star_minus is not None:
            kv("star_minus", _rows(obj.star_minus))
        if obj.eta_linkings is not None:
            kv("eta_linkings", _list(_list(str(x) for x in p) for p in obj.eta_linkings))
        for key in ("epsilon_y", "epsilon_hat"):
            if getattr(obj, key) is not None:
                kv(key, _list(str(e) for e in getattr(obj, key)))
        for key, table in (("boundary_positions", obj.pos_boundary),
                           ("interior_positions", obj.pos_interior)):
            for i in range(obj.n):
                for j in range(obj.n):
                    pos = table[i][j]
                    if pos is None:
                        continue
                    lines += ["", f"[[{key}]]"]
                    kv("i", str(i))
                    kv("j", str(j))
                    kv("region", _str(pos.region.value))
                    kv("k", str(pos.k))
    elif isinstance(obj, SeifertBlocks):
        kv("kind", _str("blocks"))
        if obj.name:
            kv("name", _str(obj.name))
        for key in ("u_plus", "u_minus", "w_plus", "w_minus", "star_plus", "star_minus"):
            m = getattr(obj, key)
            if m is not None:
                kv(key, _rows(m))
    elif isinstance(obj, ModulePresentation):
        kv("kind", _str("module"))
        if obj.name:
            kv("name", _str(obj.name))
        rows = obj.matrix.rows
        kv("matrix", _list(_list(_str(to_str(x)) for x in r) for r in rows) if rows else "[]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def dump(obj, path):
    text = dumps(obj)
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def example_files() -> dict:
    """Shipped example files, keyed by stem (``"spun_six_one"``, ...)."""
    root = resources.files("alexkit") / "data"
    return {Path(p.name).stem: Path(str(p)) for p in sorted(root.iterdir(), key=lambda p: p.name)
            if p.name.endswith(".toml")}


def load_example(name: str):
    try:
        return load(example_files()[name])
    except KeyError:
        raise ParseError(f"no shipped example {name!r}") from None
