"""Exact local computations on plane curves.

Polynomials are dictionaries mapping exponent triples ``(i, j, k)`` of
``x^i y^j z^k`` to ``Fraction`` coefficients.  Parsing, gcds and resultants
go through sympy; the power-series branch and the vanishing-order
computation are done here with exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ..semigroup import VanishingSequence
from . import series as ps

__all__ = [
    "INFINITE",
    "CurveError",
    "Poly",
    "PlanePointedCurve",
    "PowerSeriesBranch",
    "VanishingResult",
    "parse_polynomial",
    "parse_point",
    "poly_to_text",
    "evaluate",
    "gradient",
    "is_smooth",
    "branch_expand",
    "vanishing_data",
    "vanishing_sequence_at_point",
    "order_along_branch",
    "intersection_multiplicity",
    "monomials",
]

INFINITE = math.inf
X, Y, Z = sympy.symbols("x y z")
_SYMS = (X, Y, Z)
_TRANSFORMS = standard_transformations + (convert_xor,)

Poly = dict


class CurveError(ValueError):
    pass


# -- polynomial plumbing -------------------------------------------------------

def parse_polynomial(text: str) -> Poly:
    """Parse ``"x^5 + 1/2*y^5 - z^5"``-style input (explicit ``*``, ``^`` for powers)."""
    local = {"x": X, "y": Y, "z": Z}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS, evaluate=True)
    except Exception as exc:  # sympy raises a zoo of types here
        raise CurveError(f"cannot parse polynomial {text!r}: {exc}") from None
    return from_sympy(expr)


def from_sympy(expr) -> Poly:
    extra = expr.free_symbols - set(_SYMS)
    if extra:
        raise CurveError(f"unknown symbols {sorted(map(str, extra))}; only x, y, z are allowed")
    try:
        P = sympy.Poly(expr, *_SYMS, domain="QQ")
    except sympy.PolynomialError as exc:
        raise CurveError(f"not a polynomial: {exc}") from None
    return {mon: Fraction(int(c.p), int(c.q)) for mon, c in P.terms() if c}


def to_sympy(f: Mapping[tuple[int, int, int], Fraction]):
    return sum((sympy.Rational(c.numerator, c.denominator) * X**i * Y**j * Z**k
                for (i, j, k), c in f.items()), sympy.Integer(0))


def poly_to_text(f: Mapping) -> str:
    return str(sympy.expand(to_sympy(f))).replace("**", "^")


def parse_point(text: str | Sequence) -> tuple[Fraction, ...]:
    if isinstance(text, str):
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        pt = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise CurveError(f"cannot parse point {text!r}: {exc}") from None
    if len(pt) not in (2, 3):
        raise CurveError("a point needs 2 affine or 3 projective coordinates")
    if len(pt) == 3 and not any(pt):
        raise CurveError("(0:0:0) is not a projective point")
    return pt


def degree(f: Mapping) -> int:
    return max(sum(m) for m in f) if f else -1


def is_homogeneous(f: Mapping) -> bool:
    return len({sum(m) for m in f}) <= 1


def evaluate(f: Mapping, pt: Sequence) -> Fraction:
    pt = tuple(pt) + (Fraction(1),) * (3 - len(pt))
    return sum((c * pt[0] ** i * pt[1] ** j * pt[2] ** k for (i, j, k), c in f.items()), Fraction(0))


def derivative(f: Mapping, var: int) -> Poly:
    out = {}
    for mon, c in f.items():
        e = mon[var]
        if e:
            m = list(mon)
            m[var] -= 1
            out[tuple(m)] = out.get(tuple(m), 0) + c * e
    return {m: c for m, c in out.items() if c}


def gradient(f: Mapping, pt: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(evaluate(derivative(f, v), pt) for v in range(3))


def monomials(deg: int) -> list[tuple[int, int, int]]:
    """Exponent triples of degree ``deg``, x-heavy first."""
    out = []
    for i in range(deg, -1, -1):
        for j in range(deg - i, -1, -1):
            out.append((i, j, deg - i - j))
    return out


# -- global smoothness -----------------------------------------------------------

_PRIMES = (10007, 10009, 10037, 10039, 10061)


def _smooth_mod_p(f: Mapping, p: int) -> bool | None:
    """True if the reduction mod p is smooth, False if singular, None if p is unusable."""
    if any(c.denominator % p == 0 for c in f.values()):
        return None
    d = degree(f)
    if d % p == 0:
        return None
    red = {m: c.numerator * pow(c.denominator, -1, p) % p for m, c in f.items()}
    red = {m: c for m, c in red.items() if c}
    if degree(red) != d:
        return None
    F = sum((c * X**i * Y**j * Z**k for (i, j, k), c in red.items()), sympy.Integer(0))
    partials = [sympy.diff(F, v) for v in _SYMS]
    charts = [
        ({Z: 1}, (X, Y)),
        ({Z: 0, Y: 1}, (X,)),
        ({Z: 0, Y: 0, X: 1}, ()),
    ]
    for subs, gens in charts:
        eqs = [sympy.expand(q.subs(subs)) for q in partials]
        eqs = [e for e in eqs if e != 0]
        if not gens:
            if not eqs:
                return False
            continue
        if not eqs:
            return False
        G = sympy.groebner(eqs, *gens, modulus=p, order="grevlex")
        if list(G.exprs) != [1]:
            return False
    return True


def is_smooth(f: Mapping) -> bool:
    """Whether the plane curve ``f = 0`` is smooth.

    A curve smooth modulo a prime is smooth over the rationals, since a
    singular point would reduce to a singular point.  A few primes are
    tried before falling back to an exact Groebner basis over QQ.
    """
    for p in _PRIMES:
        verdict = _smooth_mod_p(f, p)
        if verdict:
            return True
    F = to_sympy(f)
    partials = [sympy.diff(F, v) for v in _SYMS]
    for subs, gens in (({Z: 1}, (X, Y)), ({Z: 0, Y: 1}, (X,))):
        eqs = [e for e in (sympy.expand(q.subs(subs)) for q in partials) if e != 0]
        if not eqs or list(sympy.groebner(eqs, *gens, order="grevlex").exprs) != [1]:
            return False
    return any(evaluate(derivative(f, v), (1, 0, 0)) for v in range(3))


# -- pointed curves and branches ---------------------------------------------------

@dataclass(frozen=True)
class PlanePointedCurve:
    poly: tuple[tuple[tuple[int, int, int], Fraction], ...]
    point: tuple[Fraction, Fraction, Fraction]

    @classmethod
    def make(cls, poly: Mapping | str, point: Sequence | str) -> "PlanePointedCurve":
        f = parse_polynomial(poly) if isinstance(poly, str) else {m: Fraction(c) for m, c in poly.items() if c}
        pt = parse_point(point)
        if len(pt) != 3:
            raise CurveError("a plane curve point needs three projective coordinates")
        if not f or not is_homogeneous(f):
            raise CurveError("curve equation must be a nonzero homogeneous polynomial")
        if evaluate(f, pt) != 0:
            raise CurveError(f"point {tuple(map(str, pt))} does not lie on the curve")
        if not any(gradient(f, pt)):
            raise CurveError("the point is singular on the curve")
        return cls(tuple(sorted(f.items())), pt)

    @property
    def f(self) -> Poly:
        return dict(self.poly)

    @property
    def degree(self) -> int:
        return degree(self.f)

    @property
    def genus(self) -> int:
        d = self.degree
        return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class PowerSeriesBranch:
    """Local parametrization of the curve at the point.

    In the affine chart ``coords[chart] = 1`` the two remaining coordinates are
    ``point + (t, phi(t))`` for the free variable and the solved one.
    ``phi`` has zero constant term and is exact modulo ``t**precision``.
    """

    chart: int
    free: int
    solved: int
    point: tuple[Fraction, Fraction, Fraction]
    phi: tuple[Fraction, ...]

    @property
    def precision(self) -> int:
        return len(self.phi)

    def coordinate_series(self) -> list[list[Fraction]]:
        n = self.precision
        out = [None, None, None]
        out[self.chart] = ps.const(1, n)
        free = ps.const(self.point[self.free], n)
        if n > 1:
            free[1] += 1
        out[self.free] = free
        out[self.solved] = ps.add(ps.const(self.point[self.solved], n), list(self.phi))
        return out


def _normalized(pt: Sequence[Fraction], chart: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) / pt[chart] for c in pt)


def _choose_chart(f: Mapping, pt: Sequence[Fraction]) -> tuple[int, int, int, tuple]:
    best = None
    for chart in range(3):
        if pt[chart] == 0:
            continue
        q = _normalized(pt, chart)
        grad = gradient(f, q)
        others = [v for v in range(3) if v != chart]
        for solved in others:
            free = others[0] if solved == others[1] else others[1]
            score = abs(grad[solved])
            if score and (best is None or score > best[0]):
                best = (score, chart, free, solved, q)
    if best is None:
        raise CurveError("no affine chart with a nonvertical tangent; the point is singular")
    _, chart, free, solved, q = best
    return chart, free, solved, q


def _local_equation(f: Mapping, chart: int, free: int, solved: int, q: Sequence[Fraction]):
    """Coefficients of f(point + (s, t)) in the chart, as {(a, b): c} with s free, t solved."""
    F = to_sympy(f)
    s, t = sympy.symbols("s t")
    subs = {_SYMS[chart]: 1,
            _SYMS[free]: sympy.Rational(q[free].numerator, q[free].denominator) + s,
            _SYMS[solved]: sympy.Rational(q[solved].numerator, q[solved].denominator) + t}
    P = sympy.Poly(sympy.expand(F.subs(subs, simultaneous=True)), s, t, domain="QQ")
    return {mon: Fraction(int(c.p), int(c.q)) for mon, c in P.terms() if c}


def _d_dt(coeffs: Mapping[tuple[int, int], Fraction]):
    return {(a, b - 1): c * b for (a, b), c in coeffs.items() if b}


def branch_expand(C: PlanePointedCurve, N: int) -> PowerSeriesBranch:
    """Newton iteration for the branch ``t = phi(s)`` of C at its point, modulo ``s**N``."""
    if N < 1:
        raise CurveError("precision must be positive")
    f = C.f
    chart, free, solved, q = _choose_chart(f, C.point)
    loc = _local_equation(f, chart, free, solved, q)
    dloc = _d_dt(loc)
    phi = ps.zeros(N)
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        s_series = ps.zeros(prec)
        if prec > 1:
            s_series[1] = Fraction(1)
        cur = phi[:prec]
        val = ps.evaluate_bivariate(loc, s_series, cur)
        der = ps.evaluate_bivariate(dloc, s_series, cur)
        step = ps.mul(val, ps.inverse(der))
        phi[:prec] = ps.add(cur, ps.scale(step, -1))
    return PowerSeriesBranch(chart, free, solved, tuple(q), tuple(phi))


def _residual(C: PlanePointedCurve, branch: PowerSeriesBranch) -> list[Fraction]:
    coords = branch.coordinate_series()
    return _eval_form(C.f, coords)


def _eval_form(f: Mapping, coords: Sequence[Sequence[Fraction]], tables=None) -> list[Fraction]:
    n = len(coords[0])
    top = degree(f)
    if tables is None:
        tables = [ps.power_table(c, max(top, 0)) for c in coords]
    out = ps.zeros(n)
    for (i, j, k), c in f.items():
        term = ps.mul(ps.mul(tables[0][i], tables[1][j]), tables[2][k])
        out = ps.add(out, ps.scale(term, c))
    return out


def order_along_branch(G: Mapping, branch: PowerSeriesBranch) -> int | float:
    """Vanishing order of the form G along the branch (INFINITE if zero to full precision)."""
    o = ps.order(_eval_form(G, branch.coordinate_series()))
    return INFINITE if o is None else o


@dataclass(frozen=True)
class VanishingResult:
    sequence: VanishingSequence
    forms: tuple[Poly, ...]
    precision: int

    @property
    def top_form(self) -> Poly:
        return self.forms[-1]


def _echelon_orders(C: PlanePointedCurve, N: int):
    """Distinct vanishing orders of degree-(d-3) forms along the branch, with witnesses."""
    d = C.degree
    mons = monomials(d - 3)
    branch = branch_expand(C, N)
    coords = branch.coordinate_series()
    tables = [ps.power_table(c, d - 3) for c in coords]
    pivots: dict[int, tuple[list[Fraction], dict]] = {}
    for mon in mons:
        row = ps.mul(ps.mul(tables[0][mon[0]], tables[1][mon[1]]), tables[2][mon[2]])
        comb = {mon: Fraction(1)}
        while True:
            o = ps.order(row)
            if o is None or o not in pivots:
                break
            prow, pcomb = pivots[o]
            factor = row[o] / prow[o]
            row = [a - factor * b for a, b in zip(row, prow)]
            for m, c in pcomb.items():
                comb[m] = comb.get(m, 0) - factor * c
        if o is not None:
            pivots[o] = (row, {m: c for m, c in comb.items() if c})
    orders = sorted(pivots)
    return orders, [pivots[o][1] for o in orders]


def vanishing_data(C: PlanePointedCurve, check_smooth: bool = True) -> VanishingResult:
    """Vanishing sequence of the canonical series at the marked point.

    The canonical series of a smooth plane curve of degree d is cut out by the
    forms of degree d - 3.  Their restrictions to the branch are reduced to
    distinct leading orders.  Precision starts at ``2g`` and doubles until two
    consecutive precisions give the same complete sequence; ``8g`` is the
    ceiling.
    """
    d = C.degree
    if d < 4:
        raise CurveError("the canonical series oracle needs degree >= 4")
    if check_smooth and not is_smooth(C.f):
        raise CurveError("the curve is not smooth")
    g = C.genus
    N = 2 * g
    previous = None
    while N <= 8 * g:
        orders, forms = _echelon_orders(C, N)
        if len(orders) == g and orders == previous:
            return VanishingResult(VanishingSequence(tuple(orders)), tuple(forms), N)
        previous = orders if len(orders) == g else None
        N *= 2
    raise CurveError(f"vanishing orders did not stabilize below precision {8 * g}")


def vanishing_sequence_at_point(C: PlanePointedCurve, check_smooth: bool = True) -> VanishingSequence:
    return vanishing_data(C, check_smooth).sequence


# -- intersection multiplicity via resultants ------------------------------------

def _affine_at_origin(F, point: Sequence[Fraction]):
    """Dehomogenize (if needed) and move the point to the origin; returns (expr, u, v)."""
    u, v = sympy.symbols("u v")
    if len(point) == 3:
        chart = next(i for i in range(3) if point[i] != 0)
        q = _normalized(point, chart)
        others = [i for i in range(3) if i != chart]
        subs = {_SYMS[chart]: 1,
                _SYMS[others[0]]: sympy.Rational(q[others[0]].numerator, q[others[0]].denominator) + u,
                _SYMS[others[1]]: sympy.Rational(q[others[1]].numerator, q[others[1]].denominator) + v}
    else:
        subs = {X: sympy.Rational(point[0].numerator, point[0].denominator) + u,
                Y: sympy.Rational(point[1].numerator, point[1].denominator) + v}
    return sympy.expand(F.subs(subs, simultaneous=True)), u, v


def intersection_multiplicity(F: Mapping | str, G: Mapping | str, point: Sequence | str) -> int | float:
    """Local intersection number of ``F = 0`` and ``G = 0`` at the point.

    Returns ``INFINITE`` when the curves share a component through the point.
    After a shear ``u -> u + lam*v`` the order at ``u = 0`` of
    ``Res_v(F, G)`` counts every intersection on one line through the point;
    only finitely many slopes meet another intersection point, so the minimum
    over more slopes than there are intersection points is exact.
    """
    f = parse_polynomial(F) if isinstance(F, str) else F
    g = parse_polynomial(G) if isinstance(G, str) else G
    pt = parse_point(point)
    Fa, u, v = _affine_at_origin(to_sympy(f), pt)
    Ga, _, _ = _affine_at_origin(to_sympy(g), pt)
    origin = {u: 0, v: 0}
    if Fa.subs(origin) != 0 or Ga.subs(origin) != 0:
        raise CurveError("the point does not lie on both curves")
    common = sympy.gcd(Fa, Ga)
    if sympy.Poly(common, u, v).total_degree() > 0:
        if common.subs(origin) == 0:
            return INFINITE
        Fa = sympy.cancel(Fa / common)
        Ga = sympy.cancel(Ga / common)
    PF = sympy.Poly(Fa, u, v, domain="QQ")
    PG = sympy.Poly(Ga, u, v, domain="QQ")
    bezout = PF.total_degree() * PG.total_degree()
    best = None
    lam = 0
    tried = 0
    while tried <= bezout:
        lam += 1
        Fs = sympy.Poly(sympy.expand(Fa.subs(u, u + lam * v)), u, v, domain="QQ")
        Gs = sympy.Poly(sympy.expand(Ga.subs(u, u + lam * v)), u, v, domain="QQ")
        # the leading v-coefficients must be nonzero constants
        if Fs.degree(v) != PF.total_degree() or Gs.degree(v) != PG.total_degree():
            continue
        tried += 1
        R = sympy.Poly(sympy.resultant(Fs.as_expr(), Gs.as_expr(), v), u, domain="QQ")
        o = min(m[0] for m in R.monoms()) if not R.is_zero else None
        if o is None:
            continue
        best = o if best is None else min(best, o)
    if best is None:
        raise CurveError("resultant vanished identically for every shear")
    return best
