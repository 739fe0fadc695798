"""Seifert pairs of 2-knots and the Levine presentation ``t*V_plus - V_minus``.

Rows of ``V_plus`` / ``V_minus`` are indexed by the H_2 basis of the
Seifert hypersurface and columns by the H_1 basis; entry ``(i, j)`` is the
linking number of the i-th surface with the push-off of the j-th curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .intlinalg import IntMatrix, as_matrix, block
from .laurent import ONE, ZERO, LaurentPoly, canonicalize, exact_divide, involute


class ZeroDeterminant(ValueError):
    """The presentation matrix is singular, so it does not come from a 2-knot."""


class InvalidPair(ValueError):
    pass


class LaurentMatrix:
    """Square matrix over Z[t, t^-1]."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(_as_poly(x) for x in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("LaurentMatrix must be square")
        self._rows = rows

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"LaurentMatrix([{body}])"

    def map(self, fn) -> "LaurentMatrix":
        return LaurentMatrix([[fn(x) for x in r] for r in self._rows])

    def transpose(self) -> "LaurentMatrix":
        n = self.size
        return LaurentMatrix([[self._rows[j][i] for j in range(n)] for i in range(n)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "LaurentMatrix":
        if len(rows) != len(cols):
            raise ValueError("minors need as many rows as columns")
        return LaurentMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def det(self) -> LaurentPoly:
        return laurent_det(self._rows)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


def laurent_det(rows) -> LaurentPoly:
    """Determinant over Z[t^±1] by fraction-free (Bareiss) elimination.

    Each row is first multiplied by a power of ``t`` so that every entry is
    an ordinary polynomial; the shift is undone at the end.
    """
    n = len(rows)
    if n == 0:
        return ONE
    shift = 0
    a = []
    for r in rows:
        lo = min((x.min_exp for x in r if x.coeffs), default=0)
        shift += lo
        a.append([x.shift(-lo) for x in r])
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k].coeffs:
            for r in range(k + 1, n):
                if a[r][k].coeffs:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = exact_divide(a[i][j] * piv - aik * a[k][j], prev)
        prev = piv
    return a[n - 1][n - 1].scale(sign).shift(shift)


def block_diagonal(*mats: LaurentMatrix) -> LaurentMatrix:
    n = sum(m.size for m in mats)
    out = [[ZERO] * n for _ in range(n)]
    off = 0
    for m in mats:
        for i in range(m.size):
            for j in range(m.size):
                out[off + i][off + j] = m[i, j]
        off += m.size
    return LaurentMatrix(out)


@dataclass(frozen=True)
class SeifertPair:
    """Positive and negative Seifert matrices ``(V_plus, V_minus)``.

    ``h2_labels`` name the row basis (surfaces), ``h1_labels`` the column
    basis (curves); both are optional.
    """

    v_plus: IntMatrix
    v_minus: IntMatrix
    h1_labels: tuple | None = None
    h2_labels: tuple | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        vp, vm = as_matrix(self.v_plus), as_matrix(self.v_minus)
        if not vp.is_square() or vp.shape != vm.shape:
            raise InvalidPair(f"V+ {vp.shape} and V- {vm.shape} must be square of equal size")
        object.__setattr__(self, "v_plus", vp)
        object.__setattr__(self, "v_minus", vm)
        for attr in ("h1_labels", "h2_labels"):
            labels = getattr(self, attr)
            if labels is not None:
                labels = tuple(str(x) for x in labels)
                if len(labels) != vp.rows:
                    raise InvalidPair(f"{attr} has {len(labels)} names for size {vp.rows}")
                object.__setattr__(self, attr, labels)

    @property
    def n(self) -> int:
        return self.v_plus.rows

    @classmethod
    def empty(cls) -> "SeifertPair":
        return cls(IntMatrix.zeros(0), IntMatrix.zeros(0), name="unknot")


def levine_matrix(s: SeifertPair) -> LaurentMatrix:
    n = s.n
    return LaurentMatrix(
        [[LaurentPoly((-s.v_minus[i, j], s.v_plus[i, j]), 0) for j in range(n)] for i in range(n)]
    )


def alexander(s: SeifertPair) -> LaurentPoly:
    """Canonical Alexander polynomial ``det(t V+ - V-)``."""
    d = levine_matrix(s).det()
    if not d.coeffs:
        raise ZeroDeterminant("det(t V+ - V-) vanishes; not a Seifert pair of a 2-knot")
    return canonicalize(d)


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    det: int

    def __bool__(self):
        return self.ok


def validate(s: SeifertPair) -> ValidityReport:
    """Check ``|det(V+ - V-)| == 1``, i.e. the Alexander polynomial is ±1 at t=1."""
    d = (s.v_plus - s.v_minus).det()
    return ValidityReport(abs(d) == 1, d)


@dataclass(frozen=True)
class TorsionCertificate:
    certified: bool
    delta_at_one: int
    reason: str


def z_torsion_certificate(s: SeifertPair) -> TorsionCertificate:
    """Certificate that the Alexander module presented by ``s`` has no Z-torsion.

    The argument only needs ``Delta(1) = ±1``: if ``k a = M b`` then
    ``k Cof(M) a = Delta b`` and ``Delta(1) = ±1`` forces ``k | b``.  The pair
    must be torsion-free data (H_1 of the hypersurface torsion-free), which is
    assumed of every ``SeifertPair``.
    """
    d1 = (s.v_plus - s.v_minus).det()
    if abs(d1) == 1:
        return TorsionCertificate(True, d1, "Delta(1) = ±1")
    return TorsionCertificate(False, d1, f"Delta(1) = {d1}; the cofactor argument does not apply")


def mirror_name(name):
    # mirroring twice restores the original name
    if not name:
        return name
    return name[len("mirror of "):] if name.startswith("mirror of ") else "mirror of " + name


def sum_name(a, b):
    return f"{a} # {b}" if a and b else None


def mirror_pair(s: SeifertPair) -> SeifertPair:
    """Seifert pair of the mirror image: ``(V-, V+)``.

    ``t V- - V+`` equals ``-t`` times ``V(t^-1)``, so it presents the module
    of the mirror knot.
    """
    return SeifertPair(s.v_minus, s.v_plus, s.h1_labels, s.h2_labels, name=mirror_name(s.name))


def direct_sum(a: SeifertPair, b: SeifertPair) -> SeifertPair:
    """Block-diagonal pair presenting the connected sum."""
    za = IntMatrix.zeros(a.n, b.n)
    zb = IntMatrix.zeros(b.n, a.n)
    vp = block([[a.v_plus, za], [zb, b.v_plus]]) if a.n + b.n else IntMatrix.zeros(0)
    vm = block([[a.v_minus, za], [zb, b.v_minus]]) if a.n + b.n else IntMatrix.zeros(0)
    labels1 = labels2 = None
    if a.h1_labels and b.h1_labels:
        labels1 = a.h1_labels + b.h1_labels
    if a.h2_labels and b.h2_labels:
        labels2 = a.h2_labels + b.h2_labels
    return SeifertPair(vp, vm, labels1, labels2, name=sum_name(a.name, b.name))


def involute_matrix(P: LaurentMatrix) -> LaurentMatrix:
    return P.map(involute)
