"""Dimension counts for Weierstrass loci of genus 6.

Every count is a small data record evaluated by one formula.  For a
construction over a parameter stratum of pairs (T, p) (plus auxiliary data),
the family of sextic sections has dimension

    stratum + (h0(-2K) - conditions)

and the image in the moduli space has that dimension minus the dimension
of the fibers (scalars acting on the chosen sections, plus automorphisms of
the surface when it has any).  A component of the locus for a semigroup of
weight w is dimensionally proper when its dimension is ``dim M_{6,1} - w``.

Each record carries an ``anchor``: a stable key naming the step of the
argument the number comes from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .enumeration import paper_table
from .lattice import anticanonical_h0, fixture
from .semigroup import expected_dimension, from_generators, semigroup_from_vanishing, weight

__all__ = [
    "LedgerError",
    "CountEntry",
    "ComponentEstimate",
    "MODULI_DIM",
    "SPECIAL_T_CASES",
    "EXCLUDED_CASES",
    "ledger_main",
    "ledger_special_T",
    "ledger_weak_dp5",
    "ledger_excluded",
    "irreducibility_report",
    "RowReport",
]

GENUS = 6
MODULI_DIM = 3 * GENUS - 2                       # dim M_{6,1}
SURFACE_DIM = 2
V1 = anticanonical_h0(fixture("dp5"), 1)         # sections of -K
V2 = anticanonical_h0(fixture("dp5"), 2)         # sections of -2K


class LedgerError(ValueError):
    pass


@dataclass(frozen=True)
class CountEntry:
    """An itemized count compared against a bound.

    ``relation`` is ``"<"`` when the count must be strictly below ``bound``
    and ``"=="`` for a cited dimension that must agree with it.
    """

    name: str
    contributions: tuple[tuple[str, int], ...]
    bound: int | None = None
    relation: str = "<"
    anchor: str = ""
    note: str = ""

    @property
    def total(self) -> int:
        return sum(v for _, v in self.contributions)

    @property
    def holds(self) -> bool:
        if self.bound is None:
            return True
        if self.relation == "<":
            return self.total < self.bound
        if self.relation == "==":
            return self.total == self.bound
        raise LedgerError(f"unknown relation {self.relation!r}")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "contributions": [[label, v] for label, v in self.contributions],
            "total": self.total,
            "bound": self.bound,
            "relation": self.relation,
            "holds": self.holds,
            "anchor": self.anchor,
            "note": self.note,
        }


@dataclass(frozen=True)
class ComponentEstimate:
    name: str
    n: int
    stratum_dim: int
    conditions: int
    fiber_dim: int
    weight: int
    anchor: str = ""
    bound_only: bool = False
    stratum_items: tuple[tuple[str, int], ...] = field(default=(), compare=False)
    compared_to: int | None = None

    @property
    def parameter_dim(self) -> int:
        return self.stratum_dim + (V2 - self.conditions)

    @property
    def component_dim(self) -> int:
        return self.parameter_dim - self.fiber_dim

    @property
    def dimensionally_proper(self) -> bool:
        return self.component_dim == MODULI_DIM - self.weight

    @property
    def strictly_smaller(self) -> bool | None:
        if self.compared_to is None:
            return None
        return self.component_dim < self.compared_to

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "stratum_dim": self.stratum_dim,
            "stratum_items": [[label, v] for label, v in self.stratum_items],
            "conditions": self.conditions,
            "parameter_dim": self.parameter_dim,
            "fiber_dim": self.fiber_dim,
            "component_dim": self.component_dim,
            "weight": self.weight,
            "dimensionally_proper": self.dimensionally_proper,
            "bound_only": self.bound_only,
            "compared_to": self.compared_to,
            "strictly_smaller": self.strictly_smaller,
            "anchor": self.anchor,
        }


# -- main constructions ---------------------------------------------------------

MAIN_RANGES = {"En": range(1, 5), "Dn": range(1, 4)}


def _main_data(case: str):
    if case == "En":
        # pairs (tau, p) with tau(p) = 0: a rank (V1 - 1) bundle over the surface
        items = (("point p on the surface", SURFACE_DIM), ("tau vanishing at p", V1 - 1))
        return items, 2, "En.hyperplane-section-bundle"
    if case == "Dn":
        # point + nonzero tangent vector, then U singular at p with a branch along w
        # (4 + 3 + 1 conditions on plane cubics leave rank 2), then T meeting U to order 5
        items = (
            ("point p off the ten lines", SURFACE_DIM),
            ("nonzero tangent vector w", SURFACE_DIM),
            ("upsilon singular at p, order 3 along w", V1 - 4),
            ("tau with (T.U)_p >= 5, order 2 along w", V1 - 4),
        )
        return items, 4, "Dn.tangent-vector-tower"
    raise LedgerError(f"unknown main case {case!r}; expected 'En' or 'Dn'")


def ledger_main(case: str, n: int) -> ComponentEstimate:
    """Dimension of the component built from sextic sections meeting T to order 5 + n.

    ``En`` covers ramification ``0,0,0,0,0,n`` (1 <= n <= 4) with fibers the
    scalars on (sigma, tau); ``Dn`` covers ``0,0,0,0,1,n`` (1 <= n <= 3) with
    scalars on (sigma, tau, upsilon, w).
    """
    items, fiber, anchor = _main_data(case)
    if n not in MAIN_RANGES[case]:
        r = MAIN_RANGES[case]
        raise LedgerError(f"{case} needs {r.start} <= n <= {r.stop - 1}, got {n}")
    w = n if case == "En" else n + 1
    return ComponentEstimate(
        name=f"{case}(n={n})", n=n,
        stratum_dim=sum(v for _, v in items),
        conditions=5 + n, fiber_dim=fiber, weight=w,
        anchor=anchor, stratum_items=items,
    )


# -- singular auxiliary curve T ---------------------------------------------------

# case -> (drop in dim of (T, p) data, conditions imposed by (S.T)_p >= 5 + n)
SPECIAL_T_CASES = {
    "singular_elsewhere": (1, lambda n: 5 + n),
    "node_cusp": (2, lambda n: 4 + n),
    "tacnode": (4, lambda n: 3 + n),
    "triple_point": (5, lambda n: 3 + n),
    "nonreduced_smooth": (5, lambda n: math.ceil((5 + n) / 2)),
    "nonreduced_nodal": (6, lambda n: math.ceil((4 + n) / 2)),
}


def ledger_special_T(case: str, n: int, main: str = "En") -> ComponentEstimate:
    """Bound for the stratum where T is singular, compared with ``ledger_main(main, n)``.

    ``singular_elsewhere`` is T singular away from p (one dimension lost).  The
    other cases have T singular at p.  Over ``Dn`` the auxiliary curves are
    chosen in the other order, which only gives an upper bound, so those
    estimates are flagged ``bound_only``.
    """
    try:
        drop, cond = SPECIAL_T_CASES[case]
    except KeyError:
        raise LedgerError(f"unknown special-T case {case!r}; known: {', '.join(SPECIAL_T_CASES)}") from None
    if main == "En" and not 1 <= n <= 4:
        raise LedgerError(f"special-T cases need 1 <= n <= 4, got {n}")
    base = ledger_main(main, n)
    items = base.stratum_items + ((f"{case} drop", -drop),)
    return ComponentEstimate(
        name=f"{main}/{case}(n={n})", n=n,
        stratum_dim=base.stratum_dim - drop,
        conditions=cond(n), fiber_dim=base.fiber_dim, weight=base.weight,
        anchor=f"special-T.{case}", bound_only=(main == "Dn"),
        stratum_items=items, compared_to=base.component_dim,
    )


def ledger_weak_dp5(main: str, n: int, aut_dim: int = 1, moduli_excess: int = 0) -> ComponentEstimate:
    """Same count on a weak quintic del Pezzo surface.

    The surface has a positive-dimensional automorphism group, which enlarges
    the fibers.  Neither ``aut_dim`` nor ``moduli_excess`` (extra moduli of the
    surface when an infinitely near point imposes no condition) is computed;
    the defaults are the conservative values and the entry is ``bound_only``.
    """
    if aut_dim < 1:
        raise LedgerError("weak del Pezzo surfaces have positive-dimensional automorphism groups")
    base = ledger_main(main, n)
    items = base.stratum_items + (("surface moduli excess", moduli_excess),)
    return ComponentEstimate(
        name=f"{main}/weak_dp5(n={n})", n=n,
        stratum_dim=base.stratum_dim + moduli_excess,
        conditions=base.conditions, fiber_dim=base.fiber_dim + aut_dim,
        weight=base.weight, anchor="weak-dp5.automorphisms", bound_only=True,
        stratum_items=items, compared_to=base.component_dim,
    )


# -- loci outside the del Pezzo description --------------------------------------

def _smallest_table_dimension() -> int:
    return min(expected_dimension(row.semigroup) for row in paper_table() if row.semigroup.genus == GENUS)


def _trigonal(vanishing: tuple[int, ...], dim: int, params: str) -> CountEntry:
    H = semigroup_from_vanishing(vanishing)
    return CountEntry(
        name="trigonal_" + ",".join(map(str, vanishing)),
        contributions=(("trigonal locus (cited)", dim),),
        bound=expected_dimension(H), anchor="excluded.trigonal", note=params,
    )


def _plane_quintic() -> CountEntry:
    return CountEntry(
        name="plane_quintic",
        contributions=(
            ("point p", 2),
            ("smooth conic Z", math.comb(2 + 2, 2) - 1),
            ("Z through p", -1),
            ("smooth quintic C", math.comb(5 + 2, 2) - 1),
            ("(C.Z)_p = 9", -9),
            ("PGL_3", -8),
            ("dim G^2_5(C)", 0),
        ),
        bound=MODULI_DIM - 4, anchor="excluded.plane-quintic-conic",
        note="vanishing 0,1,2,3,4,9 on a smooth plane quintic",
    )


def _excluded_table() -> dict[str, CountEntry]:
    table = {
        "bielliptic": CountEntry(
            "bielliptic", (("bielliptic curves, 2g - 2", 2 * GENUS - 2),),
            bound=_smallest_table_dimension(), anchor="excluded.bielliptic",
        ),
        "plane_quintic": _plane_quintic(),
        "plane_quintic_weierstrass": CountEntry(
            "plane_quintic_weierstrass",
            (("plane quintics", math.comb(5 + 2, 2) - 1), ("PGL_3", -8), ("finitely many Weierstrass points", 0)),
            bound=MODULI_DIM - 3, anchor="excluded.plane-quintic-moduli",
            note="bounds every semigroup of weight <= 3",
        ),
        "trigonal_0,1,2,3,5,7": _trigonal((0, 1, 2, 3, 5, 7), 11, "rho=s_E=m=1, t_E=t=epsilon=0"),
        "trigonal_0,1,2,3,5,6": _trigonal((0, 1, 2, 3, 5, 6), 12,
                                          "rho=epsilon=alpha=1, t=t_E=s_E=0, m=2, r=4"),
        "W46": CountEntry("W46", (("W_{4,g} = 2g + 1", 2 * GENUS + 1),),
                          bound=expected_dimension(from_generators([4, 9, 10, 11])),
                          relation="==", anchor="cited.W4g"),
        "W56": CountEntry("W56", (("W_{5,g} = 2g + 2", 2 * GENUS + 2),),
                          bound=expected_dimension(from_generators([5, 8, 9, 11, 12])),
                          relation="==", anchor="cited.W5g"),
    }
    for n in (2, 3, 4):
        entry = _trigonal((0, 1, 2, 3, 4, 5 + n), 14 - n, f"rho=epsilon=1, t=t_E=s_E=0, m=2, r=5, alpha={n}")
        table[entry.name] = entry
    return table


EXCLUDED_CASES = tuple(_excluded_table())


def ledger_excluded(case: str) -> CountEntry:
    table = _excluded_table()
    try:
        return table[case]
    except KeyError:
        raise LedgerError(f"unknown excluded case {case!r}; known: {', '.join(table)}") from None


# -- per-semigroup report ---------------------------------------------------------

_CITED = {
    "N(5)_8": ("irreducible (cited: general Weierstrass point, full monodromy)",
               "open (possible exception)"),
    "N(6)_5": ("irreducible (cited: W_{4,6})", "rational (cited)"),
    "N(6)_22": ("irreducible (cited: subcanonical result)", "open (possible exception)"),
}


@dataclass(frozen=True)
class RowReport:
    label: str
    generators: tuple[int, ...]
    vanishing: tuple[int, ...]
    weight: int
    classification: dict
    expected_dim: int
    construction: str | None
    component: ComponentEstimate | None
    competitors: tuple[ComponentEstimate | CountEntry, ...]
    verdict: str
    stable_rationality: str

    @property
    def all_competitors_smaller(self) -> bool:
        return all(
            c.holds if isinstance(c, CountEntry) else c.strictly_smaller
            for c in self.competitors
        )

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "generators": list(self.generators),
            "vanishing": list(self.vanishing),
            "weight": self.weight,
            "classification": self.classification,
            "expected_dim": self.expected_dim,
            "construction": self.construction,
            "component": self.component.as_dict() if self.component else None,
            "competitors": [c.as_dict() for c in self.competitors],
            "all_competitors_smaller": self.all_competitors_smaller,
            "verdict": self.verdict,
            "stable_rationality": self.stable_rationality,
        }


def _construction(ram: tuple[int, ...]) -> tuple[str, int] | None:
    if len(ram) != GENUS:
        return None
    head, tail = ram[:4], ram[4:]
    if any(head):
        return None
    if tail[0] == 0 and 1 <= tail[1] <= 4:
        return "En", tail[1]
    if tail[0] == 1 and 1 <= tail[1] <= 3:
        return "Dn", tail[1]
    return None


def _competitors(case: str, n: int, vanishing: tuple[int, ...], w: int) -> list:
    out: list = [ledger_special_T(c, n, main=case) for c in SPECIAL_T_CASES]
    out.append(ledger_weak_dp5(case, n))
    out.append(ledger_excluded("bielliptic"))
    out.append(ledger_excluded("plane_quintic" if w == 4 else "plane_quintic_weierstrass"))
    trig = "trigonal_" + ",".join(map(str, vanishing))
    if trig in _excluded_table():
        out.append(ledger_excluded(trig))
    return out


def irreducibility_report(g: int) -> list[RowReport]:
    """One report per table semigroup of genus at most ``g`` (g in {5, 6})."""
    from .enumeration import classify

    if g not in (5, 6):
        raise LedgerError("the report covers genus 5 and 6")
    rows = []
    for row in paper_table():
        H = row.semigroup
        if H.genus > g:
            continue
        w = weight(H)
        built = _construction(row.ramification)
        component = ledger_main(*built) if built else None
        competitors = _competitors(built[0], built[1], row.vanishing, w) if built else []
        if row.label in _CITED:
            verdict, rationality = _CITED[row.label]
        elif component and component.dimensionally_proper and all(
            c.holds if isinstance(c, CountEntry) else c.strictly_smaller for c in competitors
        ):
            verdict = "irreducible: single dimensionally-proper component"
            rationality = "stably rational"
        else:
            verdict, rationality = "undetermined", "undetermined"
        rows.append(RowReport(
            label=row.label,
            generators=H.minimal_generators,
            vanishing=row.vanishing,
            weight=w,
            classification=classify(H).as_dict(),
            expected_dim=expected_dimension(H),
            construction=f"{built[0]}(n={built[1]})" if built else None,
            component=component,
            competitors=tuple(competitors),
            verdict=verdict,
            stable_rationality=rationality,
        ))
    return rows
