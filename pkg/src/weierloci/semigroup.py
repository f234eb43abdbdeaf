"""Numerical semigroups and the sequences attached to a Weierstrass point.

A numerical semigroup H is stored by its gap list (the finite complement of
H in the nonnegative integers) together with its minimal generators.  The
vanishing sequence of the canonical series at a point is ``gap - 1`` for each
gap, and the ramification sequence subtracts the index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "NumericalSemigroup",
    "VanishingSequence",
    "RamificationSequence",
    "SemigroupError",
    "from_generators",
    "from_gaps",
    "vanishing_sequence",
    "ramification_and_weight",
    "is_symmetric",
    "minimal_generators",
    "named_semigroups",
    "expected_dimension",
    "ordinary_weierstrass_count",
    "semigroup_from_vanishing",
    "to_record",
]

# quantities must stay inside a signed 64-bit word for every supported genus
INT64_MAX = 2**63 - 1
MAX_GENUS = 60


class SemigroupError(ValueError):
    """Raised for inputs that do not describe a numerical semigroup."""


def _check_int64(*values: int) -> None:
    for v in values:
        if abs(v) > INT64_MAX:
            raise OverflowError(f"{v} does not fit in a signed 64-bit integer")


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup in canonical form.

    ``gaps`` is strictly increasing and ``minimal_generators`` is the unique
    minimal generating set.  Use :func:`from_generators` or :func:`from_gaps`
    rather than calling the constructor directly.
    """

    minimal_generators: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def r(self) -> int:
        return len(self.minimal_generators)

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        if n > self.frobenius:
            return True
        return n not in self._gapset

    @property
    def _gapset(self) -> frozenset[int]:
        # cached on first use; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_gapset_cache"]
        except KeyError:
            s = frozenset(self.gaps)
            object.__setattr__(self, "_gapset_cache", s)
            return s

    def elements(self, upto: int | None = None) -> list[int]:
        """Elements of H in ``[0, upto]`` (default: up to the conductor)."""
        if upto is None:
            upto = self.conductor
        return [n for n in range(upto + 1) if n in self]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.minimal_generators)) + ">"


@dataclass(frozen=True)
class VanishingSequence:
    a: tuple[int, ...]

    def __post_init__(self):
        a = self.a
        if any(y <= x for x, y in zip(a, a[1:])):
            raise SemigroupError(f"vanishing sequence {a} is not strictly increasing")
        if a:
            g = len(a)
            if a[0] != 0:
                raise SemigroupError("vanishing sequence must start at 0")
            if a[-1] > 2 * g - 2 and g > 1:
                raise SemigroupError(f"top vanishing order {a[-1]} exceeds 2g-2 = {2 * g - 2}")

    @property
    def genus(self) -> int:
        return len(self.a)

    @property
    def degenerate(self) -> bool:
        return not self.a

    def __iter__(self):
        return iter(self.a)

    def __len__(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class RamificationSequence:
    alpha: tuple[int, ...]

    def __post_init__(self):
        al = self.alpha
        g = len(al)
        if any(y < x for x, y in zip(al, al[1:])):
            raise SemigroupError(f"ramification sequence {al} is not non-decreasing")
        if any(x < 0 or x > g - 1 for x in al):
            raise SemigroupError(f"ramification entries of {al} must lie in [0, {g - 1}]")

    @property
    def weight(self) -> int:
        return sum(self.alpha)

    def __iter__(self):
        return iter(self.alpha)


def _sieve_gaps(gens: Sequence[int]) -> list[int]:
    """Gaps of the semigroup generated by ``gens`` (gcd 1 assumed)."""
    m = min(gens)
    # every residue class mod m is reached below this Frobenius-type bound
    bound = m * max(gens)
    member = bytearray(bound + 1)
    member[0] = 1
    for n in range(1, bound + 1):
        for k in gens:
            if k <= n and member[n - k]:
                member[n] = 1
                break
    gaps = [n for n in range(1, bound + 1) if not member[n]]
    return gaps


def _minimal_generators_from_gaps(gaps: Sequence[int]) -> tuple[int, ...]:
    gapset = set(gaps)
    frob = max(gaps) if gaps else -1
    if not gaps:
        return (1,)
    m = next(n for n in range(1, frob + 2) if n not in gapset)
    # minimal generators lie below conductor + multiplicity
    top = frob + 1 + m
    nonzero = [n for n in range(1, top) if n not in gapset]
    nz = set(nonzero)
    gens = []
    for k in nonzero:
        if not any((k - a) in nz for a in nonzero if a <= k // 2 and k - a > 0):
            gens.append(k)
    return tuple(gens)


def _check_closed(gaps: Sequence[int]) -> None:
    gapset = set(gaps)
    frob = max(gaps) if gaps else -1
    non = [n for n in range(1, frob + 1) if n not in gapset]
    for i, a in enumerate(non):
        for b in non[i:]:
            if a + b in gapset:
                raise SemigroupError(f"complement of {tuple(gaps)} is not closed: {a}+{b}")


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Canonical semigroup generated by ``gens`` (any order, redundancy allowed)."""
    gens = sorted(set(int(k) for k in gens))
    if not gens:
        raise SemigroupError("generator list is empty")
    if gens[0] <= 0:
        raise SemigroupError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise SemigroupError(f"gcd of {gens} is not 1; the complement is infinite")
    _check_int64(*gens)
    gaps = _sieve_gaps(gens)
    return NumericalSemigroup(_minimal_generators_from_gaps(gaps), tuple(gaps))


def from_gaps(gaps: Iterable[int], check: bool = True) -> NumericalSemigroup:
    """Semigroup with the given gap set."""
    gaps = tuple(sorted(set(int(n) for n in gaps)))
    if gaps and gaps[0] <= 0:
        raise SemigroupError("gaps must be positive integers")
    if check:
        _check_closed(gaps)
    return NumericalSemigroup(_minimal_generators_from_gaps(gaps), gaps)


def semigroup_from_vanishing(a: Iterable[int]) -> NumericalSemigroup:
    """Inverse dictionary: vanishing orders -> semigroup with gaps ``a_i + 1``."""
    return from_gaps(x + 1 for x in a)


def vanishing_sequence(H: NumericalSemigroup) -> VanishingSequence:
    """Vanishing sequence ``a_i = gap_i - 1``; genus 0 gives an empty, degenerate sequence."""
    return VanishingSequence(tuple(n - 1 for n in H.gaps))


def ramification_and_weight(V: VanishingSequence) -> RamificationSequence:
    return RamificationSequence(tuple(a - i for i, a in enumerate(V.a)))


def weight(H: NumericalSemigroup) -> int:
    return sum(n - 1 - i for i, n in enumerate(H.gaps))


def is_symmetric(H: NumericalSemigroup) -> bool:
    """True iff, for 0 <= i <= c, i is a gap exactly when c - i lies in H."""
    c = H.frobenius
    return all((i not in H) == ((c - i) in H) for i in range(c + 1))


def minimal_generators(H: NumericalSemigroup) -> tuple[tuple[int, ...], int]:
    """Minimal generators of H recomputed from its element list, with their count r."""
    gens = _minimal_generators_from_gaps(H.gaps)
    return gens, len(gens)


def named_semigroups(g: int, kind: str) -> NumericalSemigroup:
    """``general_point``: <g+1,...,2g+1>; ``general_weierstrass``: <g, g+2, ..., 2g+1>."""
    if g < 2:
        raise SemigroupError(f"named semigroups need g >= 2, got {g}")
    if kind == "general_point":
        return from_generators(range(g + 1, 2 * g + 2))
    if kind == "general_weierstrass":
        return from_generators([g, *range(g + 2, 2 * g + 2)])
    raise SemigroupError(f"unknown semigroup kind {kind!r}")


def expected_dimension(H: NumericalSemigroup) -> int:
    """``3g - 2 - weight``: every component of the locus has at least this dimension."""
    if H.genus < 2:
        raise SemigroupError("expected dimension is defined for genus >= 2")
    return 3 * H.genus - 2 - weight(H)


def ordinary_weierstrass_count(g: int) -> int:
    """Number of weight-one Weierstrass points on a general curve of genus g."""
    if g < 2:
        raise SemigroupError(f"g must be at least 2, got {g}")
    n = (g - 1) * g * (g + 1)
    _check_int64(n)
    return n


def to_record(H: NumericalSemigroup) -> dict:
    """Serializable record; the key set is the documented semigroup schema."""
    V = vanishing_sequence(H)
    R = ramification_and_weight(V)
    return {
        "generators": list(H.minimal_generators),
        "gaps": list(H.gaps),
        "genus": H.genus,
        "frobenius": H.frobenius,
        "vanishing": list(V.a),
        "ramification": list(R.alpha),
        "weight": R.weight,
        "symmetric": is_symmetric(H),
    }
