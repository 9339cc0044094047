"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction


class PhaseCollision(Exception):
    """An evaluation point j/m landed exactly on a stored rotation phase.

    Rational phases are stand-ins for the irrational rotation numbers of a
    non-degenerate geodesic; an exact hit means the surrogate cannot model
    such a geodesic at this evaluation, so we refuse loudly instead of
    picking a side of the jump.
    """

    def __init__(self, point: Fraction, phase_index: int, m: int | None = None):
        self.point = point
        self.phase_index = phase_index
        self.m = m
        where = f" while summing over {m}-th roots of unity" if m else ""
        super().__init__(
            f"evaluation point {point} collides with phase t_{phase_index + 1}{where}"
        )


class PrecondViolation(ValueError):
    """An operation was called outside its stated domain."""


class HypothesesNotMet(Exception):
    """The profile does not satisfy the hypotheses of the staircase
    proposition; the check is inapplicable rather than failed."""


class ProfileFormatError(ValueError):
    """A profile document could not be parsed; the message names the first
    violated constraint."""
