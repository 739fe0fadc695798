"""Seifert matrices of classical knots and Artin spinning.

Spinning a classical knot gives a 2-knot whose Seifert pair is ``(V, V^T)``,
so it has the same Alexander polynomial as the knot it came from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import IntMatrix, as_matrix
from .laurent import LaurentPoly, parse
from .seifert import SeifertPair, alexander


class InvalidSeifertMatrix(ValueError):
    pass


class UnknownKnot(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matrix: IntMatrix
    alexander: LaurentPoly  # expected canonical form
    note: str


# (name, Seifert matrix, canonical Alexander polynomial, provenance)
_ENTRIES = [
    ("unknot", [], "1", "empty Seifert surface (disk)"),
    ("trefoil", [[-1, 1], [0, -1]], "t^2 - t + 1",
     "genus-1 surface of the left-handed trefoil; Delta = t^2 - t + 1"),
    ("figure_eight", [[1, 1], [0, -1]], "-t^2 + 3*t - 1",
     "genus-1 surface of 4_1; Delta ~ t^2 - 3t + 1"),
    ("six_one", [[1, 1], [0, -2]], "-2*t^2 + 5*t - 2",
     "stevedore knot 6_1, a ribbon knot; Delta ~ (2t - 1)(2 - t)"),
    ("square_knot", [[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]],
     "t^4 - 2*t^3 + 3*t^2 - 2*t + 1",
     "trefoil # mirror trefoil, a ribbon knot; Delta = (t^2 - t + 1)^2"),
]


def is_seifert_matrix(V) -> bool:
    V = as_matrix(V)
    return V.is_square() and abs((V - V.T).det()) == 1


def spun(V) -> SeifertPair:
    """Seifert pair ``(V, V^T)`` of the spun 2-knot."""
    V = as_matrix(V)
    if not is_seifert_matrix(V):
        raise InvalidSeifertMatrix(f"|det(V - V^T)| != 1 for V = {V}")
    return SeifertPair(V, V.T)


def _build():
    table = {}
    for name, rows, delta, note in _ENTRIES:
        V = IntMatrix.from_rows(rows) if rows else IntMatrix.zeros(0)
        entry = CatalogEntry(name, V, parse(delta), note)
        got = alexander(spun(V))
        if got != entry.alexander:
            raise AssertionError(f"catalog entry {name}: Delta = {got}, expected {entry.alexander}")
        table[name] = entry
    return table


CATALOG = _build()


def catalog(name: str) -> IntMatrix:
    """Seifert matrix of a named knot (self-checked at import)."""
    try:
        return CATALOG[name].matrix
    except KeyError:
        raise UnknownKnot(f"unknown knot {name!r}; known: {', '.join(sorted(CATALOG))}") from None


def catalog_names() -> list:
    return sorted(CATALOG)


def spun_knot(name: str) -> SeifertPair:
    s = spun(catalog(name))
    return SeifertPair(s.v_plus, s.v_minus, name=f"spun {name}")
