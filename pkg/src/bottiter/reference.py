"""Brute-force reference engine, kept independent of the optimized path.

`naive_index` walks every m-th root of unity, folds it onto [0, 1/2] by
conjugation, and finds the arc by linear scan over Fractions.  No lattice
counting, no symmetry shortcut, no shared code with `bottiter.kernel`;
this is the oracle the fast engines are checked against.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PhaseCollision
from .profile import IndexProfile


def naive_value_at(p: IndexProfile, t: Fraction) -> int:
    """Index function at e(t) for any t in [0, 1), by linear arc scan."""
    if t > Fraction(1, 2):
        t = 1 - t
    for j, phase in enumerate(p.phases):
        if t == phase:
            raise PhaseCollision(t, j)
        if t < phase:
            return p.arc_values[j]
    return p.arc_values[-1]


def naive_index(p: IndexProfile, m: int) -> int:
    """ind(c^m) summed point by point over all m-th roots of unity."""
    total = 0
    for j in range(m):
        total += naive_value_at(p, Fraction(j, m))
    return total
