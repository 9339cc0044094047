"""Rational equivariant loop-space homology of a rational n-sphere.

Two independent routes to the same Betti numbers b_k of the quotient pair
(free loops mod rotation, point curves mod rotation):

* `betti_number` applies the combinatorial rule: b_k is nonzero iff
  k = n - 1 (mod 2) and k >= n - 1, with b_k = 2 exactly at
  k = (2j+1)(n-1), j >= 1 for even n and k = j(n-1), j >= 2 for odd n.

* `poincare_coefficients` expands the closed-form generating function

      t^{n-1} * [ 1/(1-t^2) + t^{2n-2}/(1-t^{2n-2}) ]   (n even)
      t^{n-1} * [ 1/(1-t^2) + t^{n-1}/(1-t^{n-1})   ]   (n odd)

  by exact integer power-series division.

Their degree-by-degree agreement is a standing cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BettiTable:
    n: int
    max_degree: int
    ranks: tuple[int, ...]


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"n = {n} must be >= 3")


def betti_number(n: int, k: int) -> int:
    """b_k of the equivariant loop-space pair for the rational n-sphere."""
    _check_n(n)
    if k < 0:
        raise ValueError(f"k = {k} must be >= 0")
    if k < n - 1 or (k - (n - 1)) % 2 != 0:
        return 0
    if n % 2 == 0:
        j, r = divmod(k, n - 1)
        if r == 0 and j % 2 == 1 and j >= 3:
            return 2
    else:
        j, r = divmod(k, n - 1)
        if r == 0 and j >= 2:
            return 2
    return 1


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] += bi
    return out


def _series_div(num: list[int], den: list[int], max_degree: int) -> list[int]:
    """Coefficients of num/den up to max_degree; den must be monic at t^0."""
    assert den[0] == 1
    coeffs = [0] * (max_degree + 1)
    for k in range(max_degree + 1):
        c = num[k] if k < len(num) else 0
        for i in range(1, min(k, len(den) - 1) + 1):
            c -= den[i] * coeffs[k - i]
        coeffs[k] = c
    return coeffs


def _monomial(degree: int, coefficient: int = 1) -> list[int]:
    poly = [0] * (degree + 1)
    poly[degree] = coefficient
    return poly


def poincare_coefficients(n: int, max_degree: int) -> BettiTable:
    """Expand the closed-form Poincare series to the requested degree."""
    _check_n(n)
    if max_degree < 0:
        raise ValueError(f"max_degree = {max_degree} must be >= 0")
    s = 2 * n - 2 if n % 2 == 0 else n - 1
    one_minus_t2 = [1, 0, -1]
    one_minus_ts = _poly_add(_monomial(0), _monomial(s, -1))
    # 1/(1-t^2) + t^s/(1-t^s) over the common denominator (1-t^2)(1-t^s).
    numerator = _poly_add(one_minus_ts, _poly_mul(_monomial(s), one_minus_t2))
    numerator = _poly_mul(_monomial(n - 1), numerator)
    denominator = _poly_mul(one_minus_t2, one_minus_ts)
    ranks = _series_div(numerator, denominator, max_degree)
    return BettiTable(n=n, max_degree=max_degree, ranks=tuple(ranks))


def betti_table(n: int, max_degree: int) -> BettiTable:
    """Rule-based table over 0..max_degree (same shape as the series route)."""
    return BettiTable(
        n=n,
        max_degree=max_degree,
        ranks=tuple(betti_number(n, k) for k in range(max_degree + 1)),
    )


def average_euler_number(n: int) -> Fraction:
    """Normalized limit of the alternating Betti sums, lim S_N / N.

    The b_k pattern is periodic with period 2(n-1) once k is past the
    small degrees, so the limit is one period's alternating sum divided
    by the period length.  Equals -n/(2n-2) for even n and (n+1)/(2n-2)
    for odd n.
    """
    _check_n(n)
    period = 2 * (n - 1)
    start = 2 * period  # safely inside the periodic regime
    signed = sum((-1) ** k * betti_number(n, k) for k in range(start, start + period))
    return Fraction(signed, period)
