"""Combinatorial A-ribbon ball presentations.

An A-ribbon 3-ball with singularities ``R_0 .. R_{n-1}`` is described by
where each pre-singularity sits relative to each boundary pre-singularity.
Every boundary pre-singularity ``R_i^bd`` cuts the preimage ball into a ball
``B(R_i)`` and a homology torus ``T(R_i)``; a pre-singularity ``R_j^*`` lying
in ``T(R_i)`` carries the integer ``k`` with ``c(R_j^*) = k c(R_i^bd)`` in
``H_1(T(R_i))``.  Together with the orientation signs ``eps`` and the
linking matrix ``Lk_S`` of the interior cores this is enough to write down
the Seifert matrix blocks ``U_±`` and ``W_±`` of the associated Seifert
hypersurface, and hence its Alexander polynomial.

Indices are 0-based throughout.  Geometric realizability of a presentation
is not checked beyond the local constraints (ball positions have ``k = 1``,
``Lk_S`` symmetric).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .intlinalg import IntMatrix, as_matrix, block, cokernel_invariants, rank
from .laurent import LaurentPoly, canonicalize, involute
from .seifert import LaurentMatrix, SeifertPair, alexander

PLUS, MINUS = +1, -1
BOUNDARY, INTERIOR = "boundary", "interior"


class PresentationError(ValueError):
    pass


class NonzeroLinkingMatrix(PresentationError):
    """Seifert blocks only exist when the interior cores are pairwise unlinked."""


class SelfBoundaryQuery(PresentationError):
    pass


class LinkingsConditionFails(PresentationError):
    pass


class MissingEtaData(PresentationError):
    pass


class Region(enum.Enum):
    BALL = "ball"
    TORUS = "torus"


@dataclass(frozen=True)
class Position:
    """Where a pre-singularity sits with respect to some ``R_i^bd``."""

    region: Region
    k: int = 1

    def __post_init__(self):
        region = Region(self.region)
        object.__setattr__(self, "region", region)
        if region is Region.BALL and self.k != 1:
            raise PresentationError(f"a pre-singularity in B(R) has class multiple 1, not {self.k}")

    @classmethod
    def ball(cls) -> "Position":
        return cls(Region.BALL, 1)

    @classmethod
    def torus(cls, k: int = 1) -> "Position":
        return cls(Region.TORUS, k)

    @property
    def in_ball(self) -> bool:
        return self.region is Region.BALL

    @property
    def linking(self) -> int:
        """``l_i(R_j^*)``: 1 in the ball, the class multiple in the torus."""
        return 1 if self.in_ball else self.k


BALL = Position.ball()


@dataclass(frozen=True)
class ARibbonPresentation:
    """Position and orientation data of an A-ribbon 3-ball.

    ``pos_boundary[i][j]`` is the position of ``R_j^bd`` relative to ``R_i``
    (the diagonal is unused and stored as ``None``); ``pos_interior[i][j]``
    the position of ``R_j^int`` relative to ``R_i``.  ``eps[i] = -1`` iff
    the positive normal of ``R_i^bd`` points into ``B(R_i)``.
    ``eta_linkings[i]`` is ``(lk(R_i^bd, eta), lk(R_i^int, eta))``.

    The arc signs are derived from the positions.  Passing ``epsilon_y`` or
    ``epsilon_hat`` explicitly turns on a strict check: a mismatch with the
    derived values raises :class:`PresentationError`.
    """

    n: int
    eps: tuple
    pos_boundary: tuple
    pos_interior: tuple
    lk_matrix: IntMatrix
    star_plus: IntMatrix | None = None
    star_minus: IntMatrix | None = None
    eta_linkings: tuple | None = None
    epsilon_y: tuple | None = None
    epsilon_hat: tuple | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n
        eps = tuple(int(e) for e in self.eps)
        if len(eps) != n or any(e not in (1, -1) for e in eps):
            raise PresentationError("eps must list n signs ±1")
        object.__setattr__(self, "eps", eps)
        pb = tuple(
            tuple(None if i == j else _as_position(self.pos_boundary[i][j]) for j in range(n))
            for i in range(n)
        )
        pi = tuple(tuple(_as_position(self.pos_interior[i][j]) for j in range(n)) for i in range(n))
        object.__setattr__(self, "pos_boundary", pb)
        object.__setattr__(self, "pos_interior", pi)
        lk = as_matrix(self.lk_matrix) if n else IntMatrix.zeros(0)
        if lk.shape != (n, n):
            raise PresentationError(f"lk_matrix must be {n}x{n}")
        if not lk.is_symmetric():
            raise PresentationError("lk_matrix must be symmetric")
        object.__setattr__(self, "lk_matrix", lk)
        for attr in ("star_plus", "star_minus"):
            m = getattr(self, attr)
            if m is not None:
                m = as_matrix(m) if n else IntMatrix.zeros(0)
                if m.shape != (n, n):
                    raise PresentationError(f"{attr} must be {n}x{n}")
                object.__setattr__(self, attr, m)
        if self.eta_linkings is not None:
            eta = tuple(tuple(int(x) for x in pair) for pair in self.eta_linkings)
            if len(eta) != n or any(len(pair) != 2 for pair in eta):
                raise PresentationError("eta_linkings must hold one (boundary, interior) pair per singularity")
            object.__setattr__(self, "eta_linkings", eta)
        for attr, derive in (("epsilon_y", derive_epsilon_y), ("epsilon_hat", derive_epsilon_hat)):
            given = getattr(self, attr)
            if given is None:
                continue
            given = tuple(int(e) for e in given)
            expected = tuple(derive(self, i) for i in range(n))
            if given != expected:
                raise PresentationError(f"{attr} = {given} contradicts the positions, which give {expected}")
            object.__setattr__(self, attr, given)

    def position(self, i: int, j: int, star: str) -> Position:
        """Position of ``R_j^star`` relative to ``R_i``; ``R_i^bd`` itself is in no region."""
        self._check_index(i)
        self._check_index(j)
        if star == BOUNDARY:
            if i == j:
                raise SelfBoundaryQuery(f"R_{i}^bd has no position relative to itself")
            return self.pos_boundary[i][j]
        if star == INTERIOR:
            return self.pos_interior[i][j]
        raise ValueError(f"unknown pre-singularity type {star!r}")

    def linking(self, i: int, j: int, star: str) -> int:
        """``l_i(R_j^star)``, with ``l_i(R_i^bd) = 1``."""
        if star == BOUNDARY and i == j:
            self._check_index(i)
            return 1
        return self.position(i, j, star).linking

    def _check_index(self, i):
        if not 0 <= i < self.n:
            raise IndexError(f"singularity index {i} out of range for n={self.n}")


def _as_position(p) -> Position:
    if isinstance(p, Position):
        return p
    if isinstance(p, dict):
        return Position(Region(p["region"]), int(p.get("k", 1)))
    if isinstance(p, (tuple, list)):
        return Position(Region(p[0]), int(p[1]) if len(p) > 1 else 1)
    if isinstance(p, str):
        return Position(Region(p))
    raise PresentationError(f"cannot read a position from {p!r}")


# sign data derived from positions


def derive_epsilon_y(p: ARibbonPresentation, i: int) -> int:
    """Sign of the arc ``y_i`` against the positive normal at its end on ``R_i^bd``.

    ``y_i`` runs from ``R_i^int`` to ``R_i^bd`` inside the region holding
    ``R_i^int``; it crosses from ball to torus side iff that region is the ball.
    """
    p._check_index(i)
    return p.eps[i] if p.pos_interior[i][i].in_ball else -p.eps[i]


def derive_epsilon_hat(p: ARibbonPresentation, i: int) -> int:
    # Y_i^bd is a disk in B(R_i): its collar is on the positive side iff eps_i = -1
    p._check_index(i)
    return -p.eps[i]


def intersection_R_y(p: ARibbonPresentation, i: int, j: int) -> int:
    """``<R_i^bd, y_j>`` in the preimage ball, for ``i != j``."""
    if i == j:
        raise ValueError("intersection_R_y is defined for i != j only")
    b = p.position(i, j, BOUNDARY).in_ball
    o = p.position(i, j, INTERIOR).in_ball
    if b == o:
        return 0
    return p.eps[i] if o else -p.eps[i]


def intersection_Y_cocore(p: ARibbonPresentation, j: int, star: str, i: int) -> int:
    """``<Y_j^star, cocore(R_i^bd)>`` for ``(j, star) != (i, bd)``."""
    pos = p.position(i, j, star)
    return 0 if pos.in_ball else p.eps[i] * pos.k


def _require_unlinked(p: ARibbonPresentation):
    if not p.lk_matrix.is_zero():
        raise NonzeroLinkingMatrix("Lk_S must vanish for the Seifert blocks U, W to exist")


def build_U(p: ARibbonPresentation, sign: int) -> IntMatrix:
    """``U_sign[i][j] = lk(X_i, y_j^sign)``."""
    _require_unlinked(p)
    n = p.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                rows[i][j] = intersection_R_y(p, i, j)
        from_pos_side = derive_epsilon_y(p, i) == -1
        if sign == PLUS:
            rows[i][i] = -1 if from_pos_side else 0
        else:
            rows[i][i] = 0 if from_pos_side else 1
    return IntMatrix.from_rows(rows, n)


def build_W(p: ARibbonPresentation, sign: int) -> IntMatrix:
    """``W_sign[i][j] = lk(Y_i, x_j^sign)``."""
    _require_unlinked(p)
    n = p.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                rows[i][j] = intersection_Y_cocore(p, i, BOUNDARY, j) - intersection_Y_cocore(
                    p, i, INTERIOR, j
                )
        collar_positive = derive_epsilon_hat(p, i) == 1
        if sign == PLUS:
            rho = 0 if collar_positive else 1
        else:
            rho = -1 if collar_positive else 0
        rows[i][i] = -intersection_Y_cocore(p, i, INTERIOR, i) + rho
    return IntMatrix.from_rows(rows, n)


@dataclass(frozen=True)
class SeifertBlocks:
    """The nonzero blocks of ``V_± = [[0, U_±], [W_±, S_±]]``."""

    u_plus: IntMatrix
    u_minus: IntMatrix
    w_plus: IntMatrix
    w_minus: IntMatrix
    star_plus: IntMatrix | None = None
    star_minus: IntMatrix | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        for attr in ("u_plus", "u_minus", "w_plus", "w_minus", "star_plus", "star_minus"):
            m = getattr(self, attr)
            if m is not None:
                object.__setattr__(self, attr, as_matrix(m))
        n = self.u_plus.rows
        for attr in ("u_plus", "u_minus", "w_plus", "w_minus", "star_plus", "star_minus"):
            m = getattr(self, attr)
            if m is not None and m.shape != (n, n):
                raise PresentationError(f"{attr} must be {n}x{n}")

    @property
    def n(self) -> int:
        return self.u_plus.rows

    def with_star(self, star_plus, star_minus) -> "SeifertBlocks":
        return SeifertBlocks(self.u_plus, self.u_minus, self.w_plus, self.w_minus,
                             star_plus, star_minus, self.name)

    def seifert_pair(self) -> SeifertPair:
        n = self.n
        if n == 0:
            return SeifertPair.empty()
        z = IntMatrix.zeros(n)
        sp = self.star_plus if self.star_plus is not None else z
        sm = self.star_minus if self.star_minus is not None else z
        return SeifertPair(
            block([[z, self.u_plus], [self.w_plus, sp]]),
            block([[z, self.u_minus], [self.w_minus, sm]]),
            h1_labels=[f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)],
            h2_labels=[f"X{i}" for i in range(n)] + [f"Y{i}" for i in range(n)],
        )

    def matrix_check(self) -> bool:
        """``W_+ = U_-^T`` and ``W_- = U_+^T``."""
        return self.w_plus == self.u_minus.T and self.w_minus == self.u_plus.T

    def f_poly(self) -> LaurentPoly:
        """``det(t U_+ - U_-)``, not canonicalized."""
        return _levine_det(self.u_plus, self.u_minus)

    def g_poly(self) -> LaurentPoly:
        """``det(t W_+ - W_-)``, not canonicalized."""
        return _levine_det(self.w_plus, self.w_minus)

    def alexander(self) -> LaurentPoly:
        """Canonical ``det(t U_+ - U_-) * det(t W_+ - W_-)``.

        The zero upper-left block of ``V_±`` makes the star blocks irrelevant.
        """
        return canonicalize(self.f_poly() * self.g_poly())


def _levine_det(vp: IntMatrix, vm: IntMatrix) -> LaurentPoly:
    n = vp.rows
    return LaurentMatrix(
        [[LaurentPoly((-vm[i, j], vp[i, j]), 0) for j in range(n)] for i in range(n)]
    ).det()


def seifert_blocks(p: ARibbonPresentation) -> SeifertBlocks:
    return SeifertBlocks(
        build_U(p, PLUS), build_U(p, MINUS), build_W(p, PLUS), build_W(p, MINUS),
        p.star_plus, p.star_minus,
    )


def assemble_seifert_pair(p: ARibbonPresentation) -> SeifertPair:
    return seifert_blocks(p).seifert_pair()


def alexander_of_presentation(p: ARibbonPresentation) -> LaurentPoly:
    return seifert_blocks(p).alexander()


@dataclass(frozen=True)
class LinkingsReport:
    holds: bool
    matrix_check: bool | None
    witness: tuple | None
    lk_trivial: bool

    @property
    def consistent(self) -> bool:
        """Whether the definitional and matrix verdicts agree (None if not comparable)."""
        return self.matrix_check is None or self.matrix_check == self.holds


def check_linkings_condition(p: ARibbonPresentation) -> LinkingsReport:
    """Definitional check ``l_i(R_j^bd) = l_i(R_j^int)`` plus ``Lk_S = 0``,
    alongside the matrix criterion ``W_± = U_∓^T`` when the blocks exist.

    ``witness`` is the first ``(i, j)`` where the linkings differ.
    """
    witness = None
    for i in range(p.n):
        for j in range(p.n):
            if p.linking(i, j, BOUNDARY) != p.linking(i, j, INTERIOR):
                witness = (i, j)
                break
        if witness:
            break
    lk_trivial = p.lk_matrix.is_zero()
    holds = witness is None and lk_trivial
    matrix = seifert_blocks(p).matrix_check() if lk_trivial else None
    return LinkingsReport(holds, matrix, witness, lk_trivial)


@dataclass(frozen=True)
class ConcentricityReport:
    holds: bool
    failing: tuple
    lk_trivial: bool


def check_concentricity(p: ARibbonPresentation) -> ConcentricityReport:
    """All supplied ``lk(R_i^*, eta)`` equal 1 and ``Lk_S = 0``.

    ``failing`` lists ``(i, "boundary"|"interior")`` entries that are not 1.
    """
    if p.eta_linkings is None:
        raise MissingEtaData("presentation carries no eta linking numbers")
    failing = tuple(
        (i, star)
        for i, (b, o) in enumerate(p.eta_linkings)
        for star, v in ((BOUNDARY, b), (INTERIOR, o))
        if v != 1
    )
    lk_trivial = p.lk_matrix.is_zero()
    return ConcentricityReport(not failing and lk_trivial, failing, lk_trivial)


@dataclass(frozen=True)
class HomologySummary:
    """``H_1 = Z^h1_free_rank + sum Z/h1_torsion``, ``H_2 = Z^h2_rank``."""

    h1_free_rank: int
    h1_torsion: tuple
    h2_rank: int

    def __str__(self):
        def free(r):
            return "0" if r == 0 else ("Z" if r == 1 else f"Z^{r}")

        h1 = [free(self.h1_free_rank)] if self.h1_free_rank or not self.h1_torsion else []
        h1 += [f"Z/{d}" for d in self.h1_torsion]
        return f"H1 = {' + '.join(h1)}, H2 = {free(self.h2_rank)}"


def homology(p: ARibbonPresentation) -> HomologySummary:
    """Homology of the Seifert hypersurface: ``H_1 = Z^n + coker(Lk_S)``,
    ``H_2 = Z^(2n - rank Lk_S)``."""
    free, torsion = cokernel_invariants(p.lk_matrix)
    return HomologySummary(p.n + free, tuple(torsion), 2 * p.n - rank(p.lk_matrix))


def fox_milnor_from_linkings(p: ARibbonPresentation) -> LaurentPoly:
    """``f = det(t U_+ - U_-)``; under the linkings condition ``Delta ~ f(t) f(t^-1)``."""
    report = check_linkings_condition(p)
    if not report.holds:
        raise LinkingsConditionFails(
            f"linkings condition fails (witness {report.witness}, Lk_S trivial: {report.lk_trivial})"
        )
    f = seifert_blocks(p).f_poly()
    if canonicalize(f * involute(f)) != alexander_of_presentation(p):
        raise AssertionError("factorization identity failed")
    return f


def alexander_via_pair(p: ARibbonPresentation) -> LaurentPoly:
    """Alexander polynomial through the full ``2n x 2n`` Seifert pair."""
    return alexander(assemble_seifert_pair(p))


# random presentations for property checks and demos


def random_presentation(
    rng: random.Random,
    n: int,
    *,
    k_range=(-3, 3),
    linkings: bool = False,
    p_ball: float = 0.5,
    star_range: tuple | None = None,
) -> ARibbonPresentation:
    """Random presentation with ``Lk_S = 0``.

    With ``linkings=True`` the positions are drawn so that the linkings
    condition holds: both pre-singularities of ``R_j`` get the same linking
    with respect to each ``R_i``.
    """
    lo, hi = k_range

    def pos_with(ell):
        if ell == 1 and rng.random() < p_ball:
            return BALL
        return Position.torus(ell)

    def any_pos():
        return BALL if rng.random() < p_ball else Position.torus(rng.randint(lo, hi))

    pb = [[None] * n for _ in range(n)]
    pi = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if linkings:
                if i == j:
                    pi[i][i] = pos_with(1)
                    continue
                ell = 1 if rng.random() < p_ball else rng.randint(lo, hi)
                pb[i][j] = pos_with(ell)
                pi[i][j] = pos_with(ell)
            else:
                pi[i][j] = any_pos()
                if i != j:
                    pb[i][j] = any_pos()
    eps = tuple(rng.choice((1, -1)) for _ in range(n))
    sp = sm = None
    if star_range is not None:
        a, b = star_range
        sp = IntMatrix(n, n, [rng.randint(a, b) for _ in range(n * n)])
        sm = IntMatrix(n, n, [rng.randint(a, b) for _ in range(n * n)])
    return ARibbonPresentation(n, eps, pb, pi, IntMatrix.zeros(n), sp, sm)
