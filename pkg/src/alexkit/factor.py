"""Factorization of integer Laurent polynomials and the Fox-Milnor test.

The factorizer strips the unit ``±t^k`` and the integer content, splits the
remaining primitive polynomial into square-free parts, and factors
each part with Kronecker's interpolation method.  Before any interpolation
the candidate factor degrees are restricted using distinct-degree
factorizations modulo a handful of small primes: a factor of degree ``d``
over the integers must be a product of irreducible factors mod ``p``, so
``d`` has to be a subset sum of the mod-``p`` degree pattern for every
usable ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import gcd, isqrt

from .laurent import LaurentPoly, ZeroPolynomial, canonicalize, involute, mul

DEFAULT_MAX_DEGREE = 12
MAX_PAIRING_FACTORS = 16

_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


class DegreeTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    """``unit_sign * t**unit_exp * content * prod(f**m for f, m in factors)``.

    Factors are primitive, start at ``t^0`` with a nonzero constant term,
    have positive leading coefficient, and are sorted by ``(degree, coeffs)``.
    ``content`` is the positive integer content of the input.
    """

    unit_sign: int
    unit_exp: int
    factors: tuple
    content: int = 1

    def expand(self) -> LaurentPoly:
        out = LaurentPoly((self.unit_sign * self.content,), self.unit_exp)
        for f, m in self.factors:
            out = out * f**m
        return out

    def irreducibles(self) -> list:
        """Factors repeated according to multiplicity."""
        return [f for f, m in self.factors for _ in range(m)]

    def __str__(self):
        parts = [f"({f})" + (f"^{m}" if m > 1 else "") for f, m in self.factors]
        head = ("-" if self.unit_sign < 0 else "") + (
            f"t^{self.unit_exp}" if self.unit_exp else "1"
        )
        if self.content != 1:
            head += f"*{self.content}"
        return " * ".join([head] + parts)


# --- dense integer polynomials, ascending coefficient lists -----------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _primitive(a):
    g = _content(a)
    if g == 0:
        return []
    a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdiv_exact(a, b):
    """Quotient of a by b over Z, or None if b does not divide a."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None if any(a) else []
    lc = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        if c % lc:
            return None
        f = c // lc
        q[k - db] = f
        for i, d in enumerate(b):
            a[k - db + i] -= f * d
    if any(a):
        return None
    return q


def _qgcd(a, b):
    """Primitive gcd of two integer polynomials (Euclid over Q)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b:
        # remainder of a by b over Q
        a = list(a)
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            s = len(a) - len(b)
            for i, d in enumerate(b):
                a[s + i] -= f * d
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return []
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive([int(c * den) for c in a])


def _deriv(a):
    return [i * c for i, c in enumerate(a)][1:]


def _squarefree_decomposition(f):
    """Square-free split by repeated gcds: [(a_i, i)] with f = prod a_i^i."""
    out = []
    i = 1
    rest = f
    while len(rest) > 1:
        g = _qgcd(rest, _deriv(rest))
        sqf = _pdiv_exact(rest, g) if len(g) > 1 else rest
        sqf = _primitive(sqf)
        # sqf is the product of all distinct factors of rest
        nxt = _qgcd(sqf, g) if len(g) > 1 else [1]
        a_i = _primitive(_pdiv_exact(sqf, nxt)) if len(nxt) > 1 else sqf
        if len(a_i) > 1:
            out.append((a_i, i))
        rest = _primitive(_pdiv_exact(rest, sqf)) if len(g) > 1 else [1]
        i += 1
    return out


# --- arithmetic over F_p ------------------------------------------------------


def _mtrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mmod(a, m, p):
    a = [c % p for c in a]
    _mtrim(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        f = a[-1] * inv % p
        s = len(a) - 1 - dm
        for i, d in enumerate(m):
            a[s + i] = (a[s + i] - f * d) % p
        _mtrim(a)
    return a


def _mmul(a, b, m, p):
    return _mmod(_pmul(a, b), m, p)


def _mgcd(a, b, p):
    a = _mtrim([c % p for c in a])
    b = _mtrim([c % p for c in b])
    while b:
        a, b = b, _mmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _mdivexact(a, b, p):
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        f = a[k] * inv % p
        q[k - db] = f
        for i, d in enumerate(b):
            a[k - db + i] = (a[k - db + i] - f * d) % p
    return _mtrim(q)


def _ddf_degrees(f, p):
    """Degrees of the irreducible factors of square-free f mod p."""
    f = _mtrim([c % p for c in f])
    inv = pow(f[-1], p - 2, p)
    f = [c * inv % p for c in f]
    degrees = []
    h = [0, 1]
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        # h = x^(p^i) mod f
        h = _mmod(h, f, p)
        res = [1]
        base, e = h, p
        while e:
            if e & 1:
                res = _mmul(res, base, f, p)
            base = _mmul(base, base, f, p)
            e >>= 1
        h = res
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _mgcd(f, _mtrim(diff), p)
        if len(g) > 1:
            degrees += [i] * ((len(g) - 1) // i)
            f = _mdivexact(f, g, p)
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return degrees


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def possible_factor_degrees(f, primes=_PRIMES, tries=5):
    """Degrees a nontrivial factor of square-free primitive f could have."""
    n = len(f) - 1
    allowed = set(range(1, n // 2 + 1))
    used = 0
    for p in primes:
        if f[-1] % p == 0:
            continue
        fp = _mtrim([c % p for c in f])
        if len(_mgcd(fp, _mtrim([c % p for c in _deriv(f)]), p)) > 1:
            continue
        allowed &= _subset_sums(_ddf_degrees(f, p))
        used += 1
        if not allowed or used >= tries:
            break
    return sorted(allowed)


# --- Kronecker --------------------------------------------------------------


def _factorint(n):
    n = abs(n)
    fs = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs[d] = fs.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fs[n] = fs.get(n, 0) + 1
    return fs


def _divisors(n):
    divs = [1]
    for q, e in _factorint(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _interpolate(xs, vs):
    """Newton interpolation; integer coefficient list or None."""
    k = len(xs)
    dd = [Fraction(v) for v in vs]
    coef = [dd[0]]
    for level in range(1, k):
        dd = [
            (dd[i + 1] - dd[i]) / (xs[i + level] - xs[i]) for i in range(k - level)
        ]
        coef.append(dd[0])
    # expand Newton form
    poly = [Fraction(0)]
    for i in range(k - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            new[j + 1] += c
            new[j] -= c * xs[i]
        new[0] += coef[i]
        poly = new
    if any(c.denominator != 1 for c in poly):
        return None
    return _trim([int(c) for c in poly])


def _pick_points(f, count):
    pool = [0]
    x = 1
    while len(pool) < 3 * count + 6:
        pool += [x, -x]
        x += 1
    scored = []
    for x in pool:
        v = _peval(f, x)
        if v == 0:
            return None, x
        scored.append((len(_divisors(v)), abs(x), x, v))
    scored.sort()
    chosen = scored[:count]
    return [(x, v) for _, _, x, v in chosen], None


def _kronecker_find(f, d):
    """A factor of f of exact degree d, or None."""
    pts, root = _pick_points(f, d + 1)
    if pts is None:
        if d == 1:
            return [-root, 1]
        raise AssertionError("integer root should have been split off already")
    xs = [x for x, _ in pts]
    choices = []
    for i, (_, v) in enumerate(pts):
        divs = _divisors(v)
        choices.append(divs if i == 0 else [s * q for q in divs for s in (1, -1)])
    lc, c0 = f[-1], f[0]
    vals = [0] * (d + 1)
    # leading coefficient of the interpolant is sum(v_i * weights_i) / denom
    prods = []
    for i, xi in enumerate(xs):
        pr = 1
        for j, xj in enumerate(xs):
            if j != i:
                pr *= xi - xj
        prods.append(pr)
    denom = 1
    for pr in prods:
        denom = denom * abs(pr) // gcd(denom, abs(pr))
    weights = [denom // pr for pr in prods]

    def dfs(k):
        if k == d + 1:
            num = sum(v * w for v, w in zip(vals, weights))
            if num == 0 or num % denom or lc % (num // denom):
                return None
            g = _interpolate(xs, vals)
            if g is None or len(g) != d + 1:
                return None
            if lc % g[-1] or c0 % g[0]:
                return None
            if _pdiv_exact(f, g) is None:
                return None
            return g
        xk = xs[k]
        for v in choices[k]:
            if all((v - vals[j]) % (xk - xs[j]) == 0 for j in range(k)):
                vals[k] = v
                g = dfs(k + 1)
                if g is not None:
                    return g
        return None

    return dfs(0)


def _rational_root_factor(f):
    """A linear factor (q*t - r) of f, or None."""
    for q in _divisors(f[-1]):
        for r in _divisors(f[0]):
            for s in (1, -1):
                if gcd(q, r) != 1:
                    continue
                # f(s*r/q) == 0  <=>  sum c_i (s r)^i q^(n-i) == 0
                n = len(f) - 1
                acc = sum(c * (s * r) ** i * q ** (n - i) for i, c in enumerate(f))
                if acc == 0:
                    return [-s * r, q]
    return None


def _factor_squarefree(f):
    """Irreducible factors of a square-free primitive polynomial with f(0) != 0."""
    if len(f) <= 2:
        return [f]
    g = _rational_root_factor(f)
    if g is not None:
        rest = _pdiv_exact(f, g)
        return [g] + (_factor_squarefree(_primitive(rest)) if len(rest) > 1 else [])
    for d in possible_factor_degrees(f):
        if d == 1:
            continue
        g = _kronecker_find(f, d)
        if g is not None:
            g = _primitive(g)
            rest = _primitive(_pdiv_exact(f, g))
            # g has minimal degree among factors, so it is irreducible
            return [g] + _factor_squarefree(rest)
    return [f]


def factor(p: LaurentPoly, max_degree: int = DEFAULT_MAX_DEGREE) -> Factorization:
    """Complete factorization of ``p`` into irreducibles of ``Z[t]``, up to ``±t^k``."""
    if not p.coeffs:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    n = len(p.coeffs) - 1
    if n > max_degree:
        raise DegreeTooLarge(f"degree span {n} exceeds the bound {max_degree}")
    c = list(p.coeffs)
    content = _content(c)
    sign = 1 if c[-1] > 0 else -1
    prim = _primitive(c)
    counts: dict = {}
    if len(prim) > 1:
        for a, mult in _squarefree_decomposition(prim):
            for g in _factor_squarefree(a):
                key = tuple(_primitive(g))
                counts[key] = counts.get(key, 0) + mult
    factors = tuple(
        (LaurentPoly(k, 0), m)
        for k, m in sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0]))
    )
    result = Factorization(sign, p.min_exp, factors, content)
    if result.expand() != p:
        raise AssertionError(f"factorization of {p} does not reassemble")
    return result


# --- Fox-Milnor ---------------------------------------------------------------


def _reciprocal_key(q: LaurentPoly) -> LaurentPoly:
    r = canonicalize(involute(q))
    return LaurentPoly(r.coeffs if r.leading() > 0 else tuple(-c for c in r.coeffs), 0)


def _preferred(q: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Deterministic choice of one member of a reciprocal pair."""
    def key(x):
        return (abs(x.leading()) > abs(x.trailing()), x.coeffs[::-1])

    return q if key(q) >= key(r) else r


def fox_milnor_witness(p: LaurentPoly, max_degree: int = DEFAULT_MAX_DEGREE):
    """Return ``f`` with ``f(t) f(t^-1) ~ p`` (up to ``±t^k``), or ``None``.

    Irreducible factors are matched with their reciprocals; a factor that is
    associate to its own reciprocal must occur with even multiplicity, and
    the integer content must be a perfect square.
    """
    fz = factor(p, max_degree)
    root = isqrt(fz.content)
    if root * root != fz.content:
        return None
    mult = {f: m for f, m in fz.factors}
    f = LaurentPoly.const(root)
    seen = set()
    for q, m in fz.factors:
        if q in seen:
            continue
        r = _reciprocal_key(q)
        if r == q:
            if m % 2:
                return None
            f = f * q ** (m // 2)
            seen.add(q)
            continue
        if mult.get(r) != m:
            return None
        f = f * _preferred(q, r) ** m
        seen.update((q, r))
    f = canonicalize(f)
    if canonicalize(mul(f, involute(f))) != canonicalize(p):
        raise AssertionError("Fox-Milnor witness failed verification")
    return f


def reciprocal_factorizations(p: LaurentPoly, max_degree: int = DEFAULT_MAX_DEGREE,
                              cap: int = MAX_PAIRING_FACTORS):
    """All canonical ``g`` (up to units) with ``p ~ g(t) g(t^-1)``.

    Enumerates sub-multisets of the irreducible factors; ``cap`` bounds the
    total number of irreducible factors (with multiplicity) considered.
    """
    fz = factor(p, max_degree)
    root = isqrt(fz.content)
    if root * root != fz.content:
        return []
    if sum(m for _, m in fz.factors) > cap:
        raise DegreeTooLarge(f"more than {cap} irreducible factors")
    target = canonicalize(p)
    found = set()
    ranges = [range(m + 1) for _, m in fz.factors]
    for exps in iproduct(*ranges):
        g = LaurentPoly.const(root)
        for (q, _), e in zip(fz.factors, exps):
            if e:
                g = g * q**e
        g = canonicalize(g)
        if canonicalize(mul(g, involute(g))) == target:
            found.add(g)
    return sorted(found, key=lambda g: (len(g.coeffs), g.coeffs))


__all__ = [
    "DEFAULT_MAX_DEGREE",
    "DegreeTooLarge",
    "Factorization",
    "factor",
    "fox_milnor_witness",
    "possible_factor_degrees",
    "reciprocal_factorizations",
]
