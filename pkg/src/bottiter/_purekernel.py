"""Pure-Python Bott-sum kernel (reference backend).

Same contract as the compiled `_fastkernel`; arbitrary-precision, so it
also serves as the fallback when 64-bit bounds would overflow.

The m-th index is

    ind(c^m) = I_1 + [m even] * I_{l+1} + 2 * sum_{1 <= j < m/2} I(j/m)

and the inner sum is evaluated by counting lattice points j with
t_{k-1} < j/m < t_k per arc, i.e. with exact floor arithmetic rather
than per-point lookups.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PhaseCollision


def _check_collision(pnum: list[int], pden: list[int], m: int) -> None:
    # j/m == p/q (lowest terms) has a solution 1 <= j < m/2 iff q | m.
    for idx, q in enumerate(pden):
        if m % q == 0:
            raise PhaseCollision(Fraction(pnum[idx], q), idx, m)


def index_at(arcs: list[int], pnum: list[int], pden: list[int], m: int) -> int:
    """ind(c^m) for the profile with the given arcs and phases."""
    _check_collision(pnum, pden, m)
    half_count = (m - 1) // 2
    total = 0
    prev_floor = 0
    for k in range(len(pnum)):
        f = (m * pnum[k]) // pden[k]
        total += arcs[k] * (f - prev_floor)
        prev_floor = f
    total += arcs[-1] * (half_count - prev_floor)
    index = arcs[0] + 2 * total
    if m % 2 == 0:
        index += arcs[-1]
    return index


def index_sequence(arcs: list[int], pnum: list[int], pden: list[int], m_max: int) -> list[int]:
    """[ind(c^1), ..., ind(c^m_max)]; raises PhaseCollision at the first bad m."""
    return [index_at(arcs, pnum, pden, m) for m in range(1, m_max + 1)]
