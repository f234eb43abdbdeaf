"""Riemann-Roch counts for line bundles on curves of low genus."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["LineBundleData", "RiemannRochError", "h0_generic", "h0", "conditions_imposed", "torsion_count"]


class RiemannRochError(ValueError):
    pass


@dataclass(frozen=True)
class LineBundleData:
    """A degree-d bundle on a genus-gamma curve.

    ``special`` records whether the bundle is ``O(d p)`` for the marked point p.
    For degree 0 this is the trivial bundle.
    """

    curve_genus: int
    degree: int
    special: bool = False


def h0_generic(gamma: int, d: int, special: bool = False) -> int:
    """``h^0`` of a degree-d bundle wherever Riemann-Roch pins it down.

    Below degree ``2 gamma - 1`` this is only determined for genus 0 and 1;
    on a genus-1 curve the degree-0 answer depends on triviality (``special``).
    """
    if gamma < 0:
        raise RiemannRochError("genus must be nonnegative")
    if d < 0:
        return 0
    if gamma == 0:
        return d + 1
    if gamma == 1:
        if d == 0:
            return 1 if special else 0
        return d
    if d >= 2 * gamma - 1:
        return d + 1 - gamma
    raise RiemannRochError(f"h0 of a degree-{d} bundle on a genus-{gamma} curve is not determined")


def h0(L: LineBundleData) -> int:
    return h0_generic(L.curve_genus, L.degree, L.special)


def conditions_imposed(gamma: int, d: int, m: int, special: bool) -> int:
    """Conditions imposed on sections of a degree-d bundle L by vanishing to order m at p.

    Equal to ``h0(L) - h0(L(-m p))``.  Only genus 1 with ``1 <= m <= d`` is
    supported.  When ``m == d`` the twist has degree 0 and is trivial exactly
    when L is ``O(d p)``: then order d - 1 already forces order d.
    """
    if gamma != 1 or not 1 <= m <= d:
        raise RiemannRochError("supported range is genus 1 with 1 <= m <= d")
    return h0_generic(1, d) - h0_generic(1, d - m, special=special and m == d)


def torsion_count(gamma: int, d: int) -> int:
    """Points p on a genus-1 curve with ``L = O(d p)`` for a fixed degree-d bundle L.

    They form a coset of the d-torsion subgroup, so there are ``d**2``.
    """
    if gamma != 1:
        raise RiemannRochError("torsion count is for genus-1 curves")
    if d < 1:
        raise RiemannRochError("degree must be positive")
    return d * d
