"""Shared fixtures: the running n=4 profile and a random-profile generator."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bottiter import IndexProfile


@pytest.fixture
def running_profile() -> IndexProfile:
    """The staircase profile used throughout: n=4, phases over 97."""
    return IndexProfile(4, (3, 2, 1, 2), ("10/97", "13/97", "31/97"), (1, 1, 1))


@pytest.fixture
def flat_profile() -> IndexProfile:
    return IndexProfile(3, (2, 2, 2), ("1/5", "2/5"), (1, 1))


@pytest.fixture
def constant_profile() -> IndexProfile:
    """l = 0: globally constant index function."""
    return IndexProfile(3, (2,))


def make_random_profile(rng: random.Random, denominators=(11, 23, 97, 499, 9973)) -> IndexProfile:
    """A uniformly messy but valid profile: bounded-variation arcs, random
    phases (possibly with small, collision-prone denominators)."""
    n = rng.randint(2, 8)
    l = rng.randint(0, n - 1)
    q = rng.choice([d for d in denominators if (d - 1) // 2 >= l])
    numerators = rng.sample(range(1, (q - 1) // 2 + 1), l) if l else []
    phases = tuple(Fraction(a, q) for a in sorted(numerators))
    budget = n - 1
    arcs = [rng.randint(0, 2 * (n - 1))]
    nulls = []
    for _ in range(l):
        step_budget = budget - (l - len(nulls) - 1)  # keep 1 per remaining phase
        step = rng.randint(-min(step_budget, arcs[-1]), step_budget)
        nxt = arcs[-1] + step
        nxt = max(0, min(nxt, 2 * (n - 1)))
        step = nxt - arcs[-1]
        arcs.append(nxt)
        cost = max(1, abs(step))
        nulls.append(cost)
        budget -= cost
    return IndexProfile(n, arcs, phases, nulls)
