"""Critical-group bookkeeping and the Morse-inequality recursion.

For a non-degenerate iterate c^m the equivariant critical group is one-
dimensional in degree ind(c^m) when m is even or the parity invariant has
magnitude 1, and trivial otherwise.  Aggregating over m gives the counts
w_k, which the Morse inequalities tie to the Betti numbers through

    w_k = b_k + q_k + q_{k-1},   q_{-1} = 0,   q_k >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import PrecondViolation
from .iteration import bott_index, bott_index_sequence
from .profile import IndexProfile, average_index, gamma_invariant


@dataclass(frozen=True)
class MorseReport:
    max_degree: int
    w: tuple[int, ...]
    q: tuple[int, ...]
    feasible: bool
    first_violation: int | None


def critical_group_dim(p: IndexProfile, m: int, k: int) -> int:
    """dim of the degree-k equivariant critical group of c^m (0 or 1)."""
    if k < 0:
        raise PrecondViolation(f"k = {k} must be >= 0")
    if m % 2 == 1 and abs(gamma_invariant(p)) != 1:
        return 0
    return 1 if bott_index(p, m) == k else 0


def iterate_cutoff(p: IndexProfile, max_degree: int) -> int:
    """Smallest m-range guaranteed to contain every contributor <= max_degree.

    Since |ind(c^m) - m*alpha| <= n - 1, any m beyond (K + n - 1)/alpha has
    index above K; the ceiling is taken so the bound is safe for
    non-monotone profiles as well.
    """
    alpha = average_index(p)
    if alpha <= 0:
        raise PrecondViolation("aggregation requires a positive average index")
    return max(1, math.ceil((max_degree + p.n - 1) / alpha))


def aggregate_w(p: IndexProfile, max_degree: int) -> list[int]:
    """w_k = number of iterates whose critical group lives in degree k,
    for k = 0..max_degree."""
    if max_degree < 0:
        raise PrecondViolation(f"max_degree = {max_degree} must be >= 0")
    cutoff = iterate_cutoff(p, max_degree)
    sequence = bott_index_sequence(p, cutoff)
    odd_counts = abs(gamma_invariant(p)) == 1
    w = [0] * (max_degree + 1)
    for m, index in enumerate(sequence, start=1):
        if m % 2 == 1 and not odd_counts:
            continue
        if index <= max_degree:
            w[index] += 1
    return w


def morse_q_recursion(w: Sequence[int], b: Sequence[int]) -> MorseReport:
    """Solve w_k = b_k + q_k + q_{k-1} for q and report feasibility."""
    if len(w) != len(b):
        raise PrecondViolation(f"length mismatch: {len(w)} counts vs {len(b)} Betti numbers")
    q: list[int] = []
    prev = 0
    feasible = True
    first_violation = None
    for k, (wk, bk) in enumerate(zip(w, b)):
        qk = wk - bk - prev
        q.append(qk)
        if qk < 0 and feasible:
            feasible = False
            first_violation = k
        prev = qk
    return MorseReport(
        max_degree=len(w) - 1,
        w=tuple(w),
        q=tuple(q),
        feasible=feasible,
        first_violation=first_violation,
    )
