"""Enumeration and classification of numerical semigroups by genus."""

from __future__ import annotations

import enum
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from . import _kernels
from .semigroup import (
    NumericalSemigroup,
    from_gaps,
    from_generators,
    is_symmetric,
    weight,
)

__all__ = [
    "DEFAULT_GENUS_BOUND",
    "BRUTE_FORCE_BOUND",
    "GenusTreeNode",
    "Case",
    "ClassificationVerdict",
    "TableRow",
    "EnumerationError",
    "enumerate_genus",
    "count_by_genus",
    "brute_force_enumerate",
    "tree_node",
    "classify",
    "paper_table",
    "table_semigroups",
    "resolution_status",
]

DEFAULT_GENUS_BOUND = 25
BRUTE_FORCE_BOUND = 10
THREADS_ENV = "WEIERLOCI_THREADS"


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenusTreeNode:
    semigroup: NumericalSemigroup
    removable: tuple[int, ...]

    def children(self) -> list["GenusTreeNode"]:
        gaps = self.semigroup.gaps
        return [tree_node(from_gaps(gaps + (k,), check=False)) for k in self.removable]


def tree_node(H: NumericalSemigroup) -> GenusTreeNode:
    """Wrap H with its minimal generators above the Frobenius number."""
    return GenusTreeNode(H, tuple(k for k in H.minimal_generators if k > H.frobenius))


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, workers)


def _subtree(args):
    root, g = args
    return _kernels.enumerate_tree(root, g)


def _gap_lists(g: int, workers: int | None) -> list[tuple[int, ...]]:
    workers = _workers(workers)
    if workers == 1 or g < 4:
        return _kernels.enumerate_tree((), g)
    # independent subtrees rooted at depth 2
    roots = _kernels.enumerate_tree((), 2)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_subtree, [(r, g) for r in roots])
        return [gaps for part in parts for gaps in part]


def enumerate_genus(g: int, bound: int = DEFAULT_GENUS_BOUND,
                    workers: int | None = None) -> list[NumericalSemigroup]:
    """All semigroups of genus ``g``, sorted lexicographically by gap list.

    The descent removes, from each semigroup, a minimal generator larger than
    its Frobenius number.  ``workers`` (or ``$WEIERLOCI_THREADS``) above 1
    splits the tree at depth 2 across processes.
    """
    if g < 0:
        raise EnumerationError("genus must be nonnegative")
    if g > bound:
        raise EnumerationError(f"genus {g} exceeds the configured bound {bound}")
    gap_lists = sorted(_gap_lists(g, workers))
    return [from_gaps(gaps, check=False) for gaps in gap_lists]


def count_by_genus(max_genus: int, bound: int = DEFAULT_GENUS_BOUND) -> list[int]:
    """Number of semigroups of each genus ``0..max_genus`` (no objects built)."""
    if max_genus > bound:
        raise EnumerationError(f"genus {max_genus} exceeds the configured bound {bound}")
    return _kernels.count_tree((), max_genus)


def brute_force_enumerate(g: int) -> list[NumericalSemigroup]:
    """Independent check of :func:`enumerate_genus` by exhausting candidate gap sets.

    Every gap lies in ``1..2g-1``, so test each ``g``-subset of that range for
    an additively closed complement.
    """
    if g < 0:
        raise EnumerationError("genus must be nonnegative")
    if g > BRUTE_FORCE_BOUND:
        raise EnumerationError(f"brute force is limited to genus <= {BRUTE_FORCE_BOUND}")
    found = []
    for gaps in combinations(range(1, 2 * g), g):
        gapset = set(gaps)
        top = gaps[-1] if gaps else 0
        non = [n for n in range(1, top) if n not in gapset]
        if all(a + b not in gapset for i, a in enumerate(non) for b in non[i:]):
            found.append(gaps)
    found.sort()
    return [from_gaps(gaps, check=False) for gaps in found]


# -- fixture table -----------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    label: str
    semigroup: NumericalSemigroup
    vanishing: tuple[int, ...]
    ramification: tuple[int, ...]
    printed_generators: tuple[int, ...] | None = None

    @property
    def weight(self) -> int:
        return sum(self.ramification)


@lru_cache(maxsize=None)
def _fixture() -> dict:
    text = resources.files("weierloci").joinpath("data/genus6_table.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def paper_table() -> tuple[TableRow, ...]:
    """The nine semigroups of genus at most 6 whose loci are not settled by earlier results."""
    rows = []
    for row in _fixture()["rows"]:
        printed = row.get("printed_generators")
        rows.append(TableRow(
            label=row["label"],
            semigroup=from_generators(row["generators"]),
            vanishing=tuple(row["vanishing"]),
            ramification=tuple(row["ramification"]),
            printed_generators=tuple(printed) if printed else None,
        ))
    return tuple(rows)


@lru_cache(maxsize=None)
def table_semigroups() -> dict[NumericalSemigroup, str]:
    return {row.semigroup: row.label for row in paper_table()}


@lru_cache(maxsize=None)
def _labels() -> dict[NumericalSemigroup, str]:
    labels = {from_generators(row["generators"]): row["label"] for row in _fixture()["other_labels"]}
    labels.update(table_semigroups())
    return labels


class Case(str, enum.Enum):
    WPS_R_LE_3 = "WPS_r_le_3"
    WPS_R4_SYMMETRIC = "WPS_r4_symmetric"
    R4_NONSYMMETRIC = "r4_nonsymmetric"
    R_GE_5 = "r_ge_5"
    TABLE_CASE = "table_case"


@dataclass(frozen=True)
class ClassificationVerdict:
    case: Case
    label: str | None
    genus: int
    r: int
    weight: int
    symmetric: bool
    generator_case: Case

    @property
    def in_table(self) -> bool:
        return self.case is Case.TABLE_CASE

    def as_dict(self) -> dict:
        return {
            "case": self.case.value,
            "generator_case": self.generator_case.value,
            "label": self.label,
            "genus": self.genus,
            "r": self.r,
            "weight": self.weight,
            "symmetric": self.symmetric,
            "in_table": self.in_table,
        }


def classify(H: NumericalSemigroup) -> ClassificationVerdict:
    """Sort H by generator count and symmetry.

    Semigroups with at most three generators, or four generators and a
    symmetric gap set, have loci that are open in a weighted projective space.
    The nine table semigroups get ``case = TABLE_CASE``; ``generator_case``
    always holds the generator-count class.  ``label`` is set for every
    semigroup the fixture names.
    """
    sym = is_symmetric(H)
    if H.r <= 3:
        by_gens = Case.WPS_R_LE_3
    elif H.r == 4:
        by_gens = Case.WPS_R4_SYMMETRIC if sym else Case.R4_NONSYMMETRIC
    else:
        by_gens = Case.R_GE_5
    case = Case.TABLE_CASE if H in table_semigroups() else by_gens
    return ClassificationVerdict(case, _labels().get(H), H.genus, H.r, weight(H), sym, by_gens)


def resolution_status(H: NumericalSemigroup) -> str:
    """How the irreducibility of the locus for H (genus <= 6) is settled.

    One of ``weighted_projective``, ``general_point``, ``resolved_cited`` and
    ``table_case``.  The four-generator cases settled by earlier computer
    work are a cited list in the fixture, not re-derived here.
    """
    if H.genus > 6:
        raise EnumerationError("resolution status is only tabulated for genus <= 6")
    verdict = classify(H)
    if verdict.in_table:
        return "table_case"
    if verdict.case in (Case.WPS_R_LE_3, Case.WPS_R4_SYMMETRIC):
        return "weighted_projective"
    if H.gaps == tuple(range(1, H.genus + 1)):
        return "general_point"
    cited = {tuple(gens) for gens in _fixture()["resolved_cited"]["four_generator"]["generators"]}
    if H.minimal_generators in cited:
        return "resolved_cited"
    return "unresolved"

