"""Truncated power series over the rationals.

A series is a plain list of ``Fraction`` coefficients; ``s[i]`` is the
coefficient of ``t**i`` and the list length is the precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

Series = list


def zeros(n: int) -> Series:
    return [Fraction(0)] * n


def const(c, n: int) -> Series:
    s = zeros(n)
    if n:
        s[0] = Fraction(c)
    return s


def add(a: Sequence, b: Sequence) -> Series:
    return [x + y for x, y in zip(a, b)]


def scale(a: Sequence, c) -> Series:
    return [c * x for x in a]


def mul(a: Sequence, b: Sequence) -> Series:
    n = min(len(a), len(b))
    out = zeros(n)
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(n - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def inverse(a: Sequence) -> Series:
    if not a or a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    n = len(a)
    inv0 = 1 / Fraction(a[0])
    out = zeros(n)
    out[0] = inv0
    for k in range(1, n):
        acc = sum((a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
        out[k] = -acc * inv0
    return out


def order(a: Sequence) -> int | None:
    """Index of the first nonzero coefficient, or None if zero to this precision."""
    for i, x in enumerate(a):
        if x:
            return i
    return None


def power_table(a: Sequence, top: int) -> list[Series]:
    n = len(a)
    table = [const(1, n)]
    for _ in range(top):
        table.append(mul(table[-1], a))
    return table


def evaluate_bivariate(coeffs: Mapping[tuple[int, int], Fraction], s_series: Sequence,
                       t_series: Sequence) -> Series:
    """Substitute two series into ``sum c[a, b] s^a t^b`` (truncated)."""
    n = min(len(s_series), len(t_series))
    if not coeffs:
        return zeros(n)
    top_a = max(a for a, _ in coeffs)
    top_b = max(b for _, b in coeffs)
    sp = power_table(s_series[:n], top_a)
    tp = power_table(t_series[:n], top_b)
    out = zeros(n)
    for (a, b), c in coeffs.items():
        if c:
            out = add(out, scale(mul(sp[a], tp[b]), c))
    return out
