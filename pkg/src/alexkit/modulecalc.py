"""Alexander module presentations over Z[t^±1].

Elementary ideals use the convention ``E_k`` = ideal of the
``(N-k+1)``-minors of an ``N x N`` presentation matrix, so ``E_1 = (Delta)``.
Ideal membership is not decided; ideals are probed through evaluation
homomorphisms ``Z[t^±1] -> Z``, ``t -> ±1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .factor import DEFAULT_MAX_DEGREE, MAX_PAIRING_FACTORS, reciprocal_factorizations
from .laurent import ONE, LaurentPoly, ZeroEvaluationPoint, canonicalize, eval_at, involute
from .seifert import (
    LaurentMatrix,
    SeifertPair,
    ZeroDeterminant,
    block_diagonal,
    levine_matrix,
    mirror_name,
    sum_name,
)

OBSTRUCTED = "OBSTRUCTED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ModulePresentation:
    matrix: LaurentMatrix
    name: str | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return self.matrix.size

    def det(self) -> LaurentPoly:
        return self.matrix.det()

    def alexander(self) -> LaurentPoly:
        d = self.det()
        if not d.coeffs:
            raise ZeroDeterminant("presentation matrix is singular")
        return canonicalize(d)


def from_seifert(s: SeifertPair) -> ModulePresentation:
    return ModulePresentation(levine_matrix(s), name=s.name)


def mirror(P: ModulePresentation) -> ModulePresentation:
    return ModulePresentation(P.matrix.map(involute), name=mirror_name(P.name))


def connected_sum(P1: ModulePresentation, P2: ModulePresentation) -> ModulePresentation:
    return ModulePresentation(block_diagonal(P1.matrix, P2.matrix), name=sum_name(P1.name, P2.name))


def elementary_ideal(P: ModulePresentation, k: int) -> list:
    """Generators of ``E_k``: canonical nonzero ``(N-k+1)``-minors, deduplicated.

    For ``k > N`` the minors are empty and ``E_k`` is the whole ring.
    """
    if k < 1:
        raise IndexError(f"elementary ideals are indexed from 1, got {k}")
    N = P.size
    m = N - k + 1
    if m <= 0:
        return [ONE]
    gens = set()
    idx = range(N)
    for rows in combinations(idx, m):
        for cols in combinations(idx, m):
            d = P.matrix.submatrix(rows, cols).det()
            if d.coeffs:
                gens.add(canonicalize(d))
    return sorted(gens, key=lambda g: (len(g.coeffs), g.coeffs))


def evaluate_ideal(gens, t0: int) -> int:
    """Nonnegative generator ``d`` of the image ``dZ`` of the ideal under ``t -> t0``.

    Meant for ``t0 = ±1``, where units of ``Z[t^±1]`` go to units of Z.  For
    other integers the canonical generators (lowest exponent 0) are
    evaluated as ordinary polynomials.
    """
    if t0 == 0:
        raise ZeroEvaluationPoint("t0 must be nonzero")
    d = 0
    for g in gens:
        g = canonicalize(g) if g.coeffs else g
        d = gcd(d, abs(int(eval_at(g, t0))))
    return d


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str
    alexander: LaurentPoly
    e2_images: dict          # t0 -> d with E_2(t0) = dZ
    pairings: tuple          # canonical g with Delta ~ g(t) g(t^-1)
    pairing_gcds: dict       # (g, t0) -> gcd(|g(t0)|, |g(1/t0)|)
    witness_point: int | None
    explanation: str

    @property
    def obstructed(self) -> bool:
        return self.verdict == OBSTRUCTED


HYPOTHESIS = (
    "assumes the summand J has a square presentation matrix of its integral "
    "Alexander module"
)


def mirror_sum_obstruction(
    P: ModulePresentation,
    points=(-1,),
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> ObstructionReport:
    """Test whether ``P`` can present ``J # mirror(J)``.

    A block presentation ``diag(V(t), V(t^-1))`` has all ``(2n-1)``-minors
    divisible by ``det V(t)`` or ``det V(t^-1)``.  So if ``E_2(P)`` maps onto
    Z at ``t0`` while every factorization ``Delta ~ g(t) g(t^-1)`` has
    ``gcd(g(t0), g(1/t0)) > 1``, no such decomposition exists.
    """
    for t0 in points:
        if t0 not in (1, -1):
            raise ValueError("the obstruction argument needs t0 = ±1 (units must map to units)")
    delta = P.det()
    if not delta.coeffs:
        raise ZeroDeterminant("presentation matrix is singular")
    delta = canonicalize(delta)
    e2 = elementary_ideal(P, 2)
    images = {t0: evaluate_ideal(e2, t0) for t0 in points}
    pairings = tuple(reciprocal_factorizations(delta, max_degree, MAX_PAIRING_FACTORS))
    gcds = {}
    for g in pairings:
        for t0 in points:
            gcds[(g, t0)] = gcd(abs(int(eval_at(g, t0))), abs(int(eval_at(involute(g), t0))))
    if not pairings:
        return ObstructionReport(
            INCONCLUSIVE, delta, images, pairings, gcds, None,
            "Delta has no factorization f(t)f(t^-1); the mirror-sum test does not apply",
        )
    for t0 in points:
        if images[t0] == 1 and all(gcds[(g, t0)] > 1 for g in pairings):
            return ObstructionReport(
                OBSTRUCTED, delta, images, pairings, gcds, t0,
                f"E_2 maps onto Z at t={t0} but every pairing g has gcd(g({t0}), g~({t0})) > 1 "
                f"with g~(t) = g(t^-1); "
                f"not of the form J # mirror(J) ({HYPOTHESIS})",
            )
    return ObstructionReport(
        INCONCLUSIVE, delta, images, pairings, gcds, None,
        "no evaluation point separates E_2 from the pairings",
    )
