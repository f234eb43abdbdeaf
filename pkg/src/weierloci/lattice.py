"""Intersection theory on iterated blowups of the projective plane.

Classes are integer vectors ``(d; m_1, ..., m_k)`` standing for
``d H + sum m_i e_i`` where ``e_i`` is the *total* transform of the i-th
exceptional divisor.  In that basis the intersection form is
``diag(1, -1, ..., -1)`` whatever the infinitely-near structure is; the
structure only matters when passing to proper transforms.

Only lattice questions are answered.  Whether a class is effective or
irreducible on an actual surface depends on point positions, which are never
stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

__all__ = [
    "PLANE",
    "LatticeError",
    "BlowupConfig",
    "DivisorClass",
    "FIXTURES",
    "fixture",
    "plane_points",
    "config_for_deltas",
    "intersection_pairing",
    "canonical_class",
    "adjunction_genus",
    "anticanonical_h0",
    "negative_curves",
    "exceptional_classes",
    "lattice_roots",
    "blowdown_quadruples",
    "proper_transform_basis",
    "to_proper_basis",
    "from_proper_basis",
    "delta_invariant",
    "singularity_budget",
    "HEIGHT_BOUND",
    "format_coeffs",
]

PLANE = None
HEIGHT_BOUND = 6
MAX_BLOWUPS_FOR_SEARCH = 8
MAX_AM_INDEX = 8


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class BlowupConfig:
    """Blowup data: ``parents[i]`` is ``PLANE`` or the index of the blowup whose
    exceptional divisor contains point ``i``.

    ``big_and_nef`` is the asserted status of ``-K``; it is never computed.
    """

    parents: tuple[int | None, ...]
    name: str = ""
    labels: tuple[str, ...] = ()
    big_and_nef: bool = True

    def __post_init__(self):
        for i, p in enumerate(self.parents):
            if p is not PLANE and not (isinstance(p, int) and 0 <= p < i):
                raise LatticeError(f"parent of point {i} must be PLANE or an earlier index, got {p!r}")
        if self.labels and len(self.labels) != self.k:
            raise LatticeError("one label per blowup is required")

    @property
    def k(self) -> int:
        return len(self.parents)

    @property
    def rank(self) -> int:
        return self.k + 1

    def children(self, i: int) -> list[int]:
        return [j for j, p in enumerate(self.parents) if p == i]

    def basis_labels(self, proper: bool = False) -> list[str]:
        if self.labels:
            names = list(self.labels)
        else:
            names = [f"E{i + 1}" for i in range(self.k)]
        if not proper:
            names = [n[0].lower() + n[1:] for n in names]
        return ["H"] + names

    @property
    def is_ordinary(self) -> bool:
        return all(p is PLANE for p in self.parents)


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords:
            raise LatticeError("a divisor class needs at least the H coordinate")
        if not all(isinstance(c, int) for c in self.coords):
            raise LatticeError("divisor coordinates must be integers")

    @classmethod
    def of(cls, d: int, *m: int) -> "DivisorClass":
        return cls((d, *m))

    @classmethod
    def hyperplane(cls, k: int) -> "DivisorClass":
        return cls((1,) + (0,) * k)

    @classmethod
    def exceptional(cls, i: int, k: int) -> "DivisorClass":
        m = [0] * k
        m[i] = 1
        return cls((0, *m))

    @property
    def d(self) -> int:
        return self.coords[0]

    @property
    def m(self) -> tuple[int, ...]:
        return self.coords[1:]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_rank(self, other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def format(self, names: Sequence[str]) -> str:
        return format_coeffs(self.coords, names)


def format_coeffs(coeffs: Sequence[int], names: Sequence[str]) -> str:
    terms = []
    for c, n in zip(coeffs, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append((sign, mag + n))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


def _same_rank(a: DivisorClass, b: DivisorClass) -> None:
    if len(a.coords) != len(b.coords):
        raise LatticeError(f"rank mismatch: {len(a.coords)} vs {len(b.coords)}")


def _check_cfg(D: DivisorClass, cfg: BlowupConfig | None) -> None:
    if cfg is not None and len(D.coords) != cfg.rank:
        raise LatticeError(f"class of rank {len(D.coords)} does not match configuration rank {cfg.rank}")


def intersection_pairing(D1: DivisorClass, D2: DivisorClass, cfg: BlowupConfig | None = None) -> int:
    _same_rank(D1, D2)
    _check_cfg(D1, cfg)
    return D1.d * D2.d - sum(a * b for a, b in zip(D1.m, D2.m))


def canonical_class(cfg: BlowupConfig) -> DivisorClass:
    """``-3H + sum e_i`` in the total-transform basis."""
    return DivisorClass((-3,) + (1,) * cfg.k)


def adjunction_genus(D: DivisorClass, cfg: BlowupConfig) -> int:
    """Arithmetic genus ``1 + (D.D + D.K)/2`` of a curve in class D."""
    K = canonical_class(cfg)
    twice = intersection_pairing(D, D, cfg) + intersection_pairing(D, K, cfg)
    if twice % 2:
        raise LatticeError("D^2 + D.K is odd; not an integral class")
    pa = 1 + twice // 2
    if pa < 0:
        raise LatticeError(f"adjunction gives negative genus {pa}; D is not the class of a curve")
    return pa


def anticanonical_h0(cfg: BlowupConfig, d: int) -> int:
    """``h^0(-dK)`` from Riemann-Roch, assuming higher cohomology vanishes.

    The vanishing needs ``-K`` big and nef, which is taken from the
    configuration flag.
    """
    if d < 1:
        raise LatticeError("d must be a positive integer")
    K = canonical_class(cfg)
    K2 = intersection_pairing(K, K, cfg)
    if K2 <= 0:
        raise LatticeError(f"K^2 = {K2} <= 0; -K is not big, vanishing does not apply")
    if not cfg.big_and_nef:
        raise LatticeError(f"configuration {cfg.name!r} is not flagged with -K big and nef")
    return 1 + d * (d + 1) // 2 * K2


def _solutions(k: int, square: int, kdeg: int, d_range) -> list[DivisorClass]:
    """Classes with D.D = square and D.K = kdeg, for d in ``d_range``."""
    out = []
    for d in d_range:
        norm = d * d - square           # sum of m_i^2
        total = -3 * d - kdeg           # sum of m_i
        if norm < 0:
            continue

        def rec(prefix, left_norm, left_total, slots):
            if slots == 0:
                if left_norm == 0 and left_total == 0:
                    out.append(DivisorClass((d, *prefix)))
                return
            # Cauchy-Schwarz: (sum m)^2 <= slots * sum m^2
            if left_total * left_total > slots * left_norm:
                return
            bound = int(left_norm ** 0.5) + 1
            for v in range(-bound, bound + 1):
                if v * v <= left_norm:
                    rec(prefix + (v,), left_norm - v * v, left_total - v, slots - 1)

        rec((), norm, total, k)
    return out


def exceptional_classes(cfg: BlowupConfig) -> list[DivisorClass]:
    """All lattice classes with D.D = -1 and D.K = -1 (for k <= 8 these have 0 <= d <= 6)."""
    _search_guard(cfg)
    return sorted(_solutions(cfg.k, -1, -1, range(0, HEIGHT_BOUND + 1)), key=_order)


def lattice_roots(cfg: BlowupConfig) -> list[DivisorClass]:
    """All lattice classes with D.D = -2 and D.K = 0, both signs of d."""
    _search_guard(cfg)
    return sorted(_solutions(cfg.k, -2, 0, range(-HEIGHT_BOUND, HEIGHT_BOUND + 1)), key=_order)


def _search_guard(cfg: BlowupConfig) -> None:
    if cfg.k > MAX_BLOWUPS_FOR_SEARCH:
        raise LatticeError(f"negative-curve search needs k <= {MAX_BLOWUPS_FOR_SEARCH}, got {cfg.k}")


def _order(D: DivisorClass):
    return (D.d, [-x for x in D.m])


def negative_curves(cfg: BlowupConfig) -> tuple[list[DivisorClass], list[DivisorClass]]:
    """(-1)-classes and the (-2)-classes forced by the configuration.

    The first list holds every lattice solution of D.D = D.K = -1 with d >= 0.
    The second holds the proper transforms ``e_i - e_j`` of exceptional curves
    carrying exactly one infinitely near point; with points in general
    position these are the only (-2)-curves, so an ordinary configuration
    gives none.  :func:`lattice_roots` lists every lattice root.
    """
    _search_guard(cfg)
    minus_two = []
    for i in range(cfg.k):
        kids = cfg.children(i)
        if len(kids) == 1:
            m = [0] * cfg.k
            m[i] = 1
            m[kids[0]] = -1
            minus_two.append(DivisorClass((0, *m)))
    return exceptional_classes(cfg), minus_two


def blowdown_quadruples(cfg: BlowupConfig) -> list[tuple[DivisorClass, ...]]:
    """Sets of four pairwise disjoint (-1)-classes on the quintic del Pezzo lattice."""
    if not (cfg.k == 4 and cfg.is_ordinary):
        raise LatticeError("blowdown quadruples are defined for four points in the plane")
    lines = exceptional_classes(cfg)
    return [
        quad for quad in combinations(lines, 4)
        if all(intersection_pairing(a, b, cfg) == 0 for a, b in combinations(quad, 2))
    ]


def proper_transform_basis(cfg: BlowupConfig) -> tuple[tuple[int, ...], ...]:
    """Rows are the proper-transform basis ``H, E_1, ..., E_k`` in total coordinates.

    ``E_i = e_i - sum of e_j`` over points j lying directly on the i-th
    exceptional divisor.  The matrix is unitriangular, hence unimodular.
    """
    n = cfg.rank
    rows = []
    for r in range(n):
        row = [0] * n
        row[r] = 1
        if r > 0:
            for j in cfg.children(r - 1):
                row[j + 1] -= 1
        rows.append(tuple(row))
    return tuple(rows)


def to_proper_basis(D: DivisorClass, cfg: BlowupConfig) -> tuple[int, ...]:
    """Coefficients c with ``D = sum c_r * row_r`` of :func:`proper_transform_basis`."""
    _check_cfg(D, cfg)
    P = proper_transform_basis(cfg)
    n = cfg.rank
    c = list(D.coords)
    # P is upper unitriangular, so solve c P = D by forward substitution
    out = [0] * n
    for col in range(n):
        val = c[col] - sum(out[r] * P[r][col] for r in range(col))
        out[col] = val
    return tuple(out)


def from_proper_basis(coeffs: Sequence[int], cfg: BlowupConfig) -> DivisorClass:
    P = proper_transform_basis(cfg)
    if len(coeffs) != cfg.rank:
        raise LatticeError("coefficient count does not match configuration rank")
    return DivisorClass(tuple(sum(c * P[r][col] for r, c in enumerate(coeffs)) for col in range(cfg.rank)))


def delta_invariant(m: int) -> int:
    """Genus drop of an A_m double point ``y^2 = x^(m+1)``: ``floor((m+1)/2)``."""
    if m < 1:
        raise LatticeError("A_m needs m >= 1")
    return (m + 1) // 2


def singularity_budget(degree: int, target_genus: int, include_mild: bool = False) -> list[tuple[int, ...]]:
    """Multisets of double-point delta invariants that drop a plane curve to ``target_genus``.

    Parts come from A_m with m <= 8, so each delta lies in 1..4.  Unless
    ``include_mild`` is set, only multisets with a part >= 2 (something worse
    than a node or cusp) are returned.
    """
    if degree < 3:
        raise LatticeError("degree must be at least 3")
    total = comb(degree - 1, 2) - target_genus
    if total < 0:
        raise LatticeError(f"target genus {target_genus} exceeds the arithmetic genus")
    top = delta_invariant(MAX_AM_INDEX)
    out = []

    def rec(left, cap, parts):
        if left == 0:
            out.append(tuple(parts))
            return
        for p in range(min(left, cap), 0, -1):
            rec(left - p, p, parts + [p])

    rec(total, top, [])
    if not include_mild:
        out = [ms for ms in out if ms and ms[0] >= 2]
    return out


# -- named configurations -----------------------------------------------------

def plane_points(k: int, name: str = "") -> BlowupConfig:
    """Blowup at k distinct points of the plane in general position."""
    return BlowupConfig((PLANE,) * k, name=name or f"plane_{k}")


def config_for_deltas(deltas: Sequence[int], name: str = "") -> BlowupConfig:
    """Resolve double points with the given delta invariants.

    An A_m point is resolved by ``delta`` successive blowups, each at the
    point of the newest exceptional curve where the curve still passes.
    """
    parents: list[int | None] = []
    labels: list[str] = []
    letters = "EFGH"
    for s, delta in enumerate(deltas):
        for level in range(delta):
            parents.append(PLANE if level == 0 else len(parents) - 1)
            labels.append(f"{letters[level] if level < 4 else 'X'}{s + 1}")
    return BlowupConfig(tuple(parents), name=name or "deltas_" + "_".join(map(str, deltas)),
                        labels=tuple(labels))


FIXTURES: dict[str, BlowupConfig] = {
    "dp5": BlowupConfig((PLANE,) * 4, name="dp5"),
    # two tacnodes: blow up each point, then the infinitely near tangent direction
    "tacnode_pair": BlowupConfig((PLANE, 0, PLANE, 2), name="tacnode_pair",
                                 labels=("E1", "F1", "E2", "F2")),
    # A3 and A4 resolve with the same blowup pattern
    "a3a4": BlowupConfig((PLANE, 0, PLANE, 2), name="a3a4", labels=("E1", "F1", "E2", "F2")),
}


def fixture(name: str) -> BlowupConfig:
    try:
        return FIXTURES[name]
    except KeyError:
        raise LatticeError(f"unknown configuration {name!r}; known: {', '.join(FIXTURES)}") from None
