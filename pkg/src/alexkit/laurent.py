"""Integer Laurent polynomials in one variable ``t``.

A :class:`LaurentPoly` stores a dense coefficient tuple together with the
exponent of its first coefficient, so ``LaurentPoly((2, -1), -1)`` is
``2*t^-1 - 1``.  Values are immutable and hashable; arithmetic is exact
(Python integers throughout).

Alexander polynomials are only defined up to multiplication by a unit
``±t^k``.  :func:`canonicalize` picks one representative per unit orbit and
every equality of invariants in this package goes through it.

The text syntax accepted by :func:`parse` and produced by :func:`to_str` is::

    -2*t^2 + 5*t - 2        # terms c*t^k joined by + / -
    [0; -2,5,-2]            # compact form: [min_exp; c0,c1,...]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable


class ZeroPolynomial(ValueError):
    """Operation requires a nonzero polynomial."""


class ZeroEvaluationPoint(ValueError):
    """Laurent polynomials cannot be evaluated at t = 0."""


class NotDivisible(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class PolySyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    """``sum(coeffs[i] * t**(min_exp + i))``.

    The constructor trims zero coefficients at both ends, so the stored form
    is unique: ``coeffs`` is empty exactly for the zero polynomial (whose
    ``min_exp`` is then 0).
    """

    coeffs: tuple = ()
    min_exp: int = 0

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        c = c[lo:hi]
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "min_exp", int(self.min_exp) + lo if c else 0)

    # constructors

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls((c,), 0)

    @classmethod
    def monomial(cls, c: int, k: int) -> "LaurentPoly":
        return cls((c,), k)

    @classmethod
    def from_dict(cls, d: dict) -> "LaurentPoly":
        d = {int(k): int(v) for k, v in d.items() if v}
        if not d:
            return cls()
        lo, hi = min(d), max(d)
        return cls(tuple(d.get(k, 0) for k in range(lo, hi + 1)), lo)

    # basic queries

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    @property
    def degree_span(self) -> int:
        """Width ``max_exp - min_exp`` (the degree once shifted to start at t^0)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def trailing(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def terms(self):
        """Yield ``(exponent, coefficient)`` for nonzero terms, ascending."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple(-c for c in self.coeffs), self.min_exp)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit():
                raise ValueError("negative powers are only defined for units")
            # (±t^k)^-1 = ±t^-k
            return LaurentPoly(self.coeffs, -self.min_exp) ** -e
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_exp + k)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(tuple(c * x for x in self.coeffs), self.min_exp)

    def __call__(self, t0):
        return eval_at(self, t0)

    def __str__(self):
        return to_str(self)

    def __repr__(self):
        return f"LaurentPoly({to_str(self)!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly((1,), 0)
T = LaurentPoly((1,), 1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.coeffs:
        return b
    if not b.coeffs:
        return a
    lo = min(a.min_exp, b.min_exp)
    hi = max(a.max_exp, b.max_exp)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(a.coeffs):
        out[a.min_exp - lo + i] += c
    for i, c in enumerate(b.coeffs):
        out[b.min_exp - lo + i] += c
    return LaurentPoly(tuple(out), lo)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return LaurentPoly(tuple(out), a.min_exp + b.min_exp)


def involute(p: LaurentPoly) -> LaurentPoly:
    """Return ``p(t^-1)``."""
    if not p.coeffs:
        return p
    return LaurentPoly(p.coeffs[::-1], -p.max_exp)


def eval_at(p: LaurentPoly, t0) -> Fraction | int:
    """Exact value of ``p`` at a nonzero integer or rational ``t0``.

    Integers are returned when the value is integral.
    """
    if t0 == 0:
        raise ZeroEvaluationPoint("cannot evaluate a Laurent polynomial at t=0")
    t0 = Fraction(t0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t0 + c
    acc *= t0 ** p.min_exp if p.coeffs else 1
    return int(acc) if acc.denominator == 1 else acc


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """Unique representative of ``{±t^k * p}``.

    Shifted so the lowest exponent is 0; the sign makes ``p(1) > 0``, or
    the leading coefficient positive when ``p(1) == 0``.
    """
    if not p.coeffs:
        raise ZeroPolynomial("the zero polynomial has no canonical form")
    s = sum(p.coeffs)
    sign = (s > 0) - (s < 0) if s else (1 if p.coeffs[-1] > 0 else -1)
    if sign < 0:
        return LaurentPoly(tuple(-c for c in p.coeffs), 0)
    return LaurentPoly(p.coeffs, 0)


def associates(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True when ``a = ±t^k * b``."""
    if not a.coeffs or not b.coeffs:
        return not a.coeffs and not b.coeffs
    return canonicalize(a) == canonicalize(b)


def divmod_poly(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Long division of ordinary polynomials (``min_exp`` must be >= 0).

    The quotient must stay integral, so every step requires the leading
    coefficient of ``b`` to divide the current leading coefficient of the
    remainder; otherwise :class:`NotDivisible` is raised.
    """
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.min_exp < 0 or b.min_exp < 0:
        raise ValueError("divmod_poly needs ordinary polynomials")
    num = [0] * a.min_exp + list(a.coeffs) if a.coeffs else []
    den = [0] * b.min_exp + list(b.coeffs)
    db = len(den) - 1
    lc = den[-1]
    if len(num) - 1 < db:
        return ZERO, a
    q = [0] * (len(num) - db)
    for k in range(len(num) - 1, db - 1, -1):
        c = num[k]
        if c == 0:
            continue
        if c % lc:
            raise NotDivisible(f"{lc} does not divide {c}")
        f = c // lc
        q[k - db] = f
        for i, d in enumerate(den):
            num[k - db + i] -= f * d
    return LaurentPoly(tuple(q), 0), LaurentPoly(tuple(num), 0)


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * b == a`` in the Laurent ring, or raise NotDivisible."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.coeffs:
        return ZERO
    a0 = LaurentPoly(a.coeffs, 0)
    b0 = LaurentPoly(b.coeffs, 0)
    try:
        q, r = divmod_poly(a0, b0)
    except NotDivisible:
        raise NotDivisible(f"{b} does not divide {a}") from None
    if r.coeffs:
        raise NotDivisible(f"{b} does not divide {a}")
    return q.shift(a.min_exp - b.min_exp)


# text I/O

_COMPACT = re.compile(r"^\s*\[\s*(-?\d+)\s*;\s*([-+\d,\s]*)\]\s*$")
_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<c1>\d+)\s*\*\s*t(?:\s*\^\s*(?P<e1>\(?\s*[+-]?\d+\s*\)?))?
        | t(?:\s*\^\s*(?P<e2>\(?\s*[+-]?\d+\s*\)?))?
        | (?P<c3>\d+)
        )\s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Parse ``-2*t^2 + 5*t - 2``, ``2*t^-1``, ``t^(-3)`` or ``[min_exp; c0,c1,...]``."""
    if not isinstance(text, str):
        raise PolySyntaxError(f"expected a string, got {type(text).__name__}")
    m = _COMPACT.match(text)
    if m:
        body = m.group(2).strip()
        try:
            coeffs = tuple(int(x) for x in body.split(",")) if body else ()
        except ValueError:
            raise PolySyntaxError(f"bad compact polynomial: {text!r}") from None
        return LaurentPoly(coeffs, int(m.group(1)))
    s = text.strip()
    if not s:
        raise PolySyntaxError("empty polynomial")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"cannot parse {text!r} at offset {pos}")
        sign = m.group("sign")
        if sign is None and not first:
            raise PolySyntaxError(f"missing operator in {text!r} at offset {pos}")
        first = False
        if m.group("c3") is not None:
            c, e = int(m.group("c3")), 0
        else:
            c = int(m.group("c1")) if m.group("c1") is not None else 1
            raw = m.group("e1") if m.group("c1") is not None else m.group("e2")
            e = int(raw.strip("() ")) if raw is not None else 1
        if sign == "-":
            c = -c
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly.from_dict(terms)


def to_str(p: LaurentPoly) -> str:
    """Descending-exponent text form, e.g. ``-2*t^2 + 5*t - 2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e, c in reversed(list(p.terms())):
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "t" if e == 1 else f"t^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def to_compact(p: LaurentPoly) -> str:
    return f"[{p.min_exp}; {','.join(str(c) for c in p.coeffs)}]"


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for q in polys:
        out = out * q
    return out
