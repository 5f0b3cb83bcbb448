"""Pignistic probability transformation and betting-commitment distances.

The pignistic transformation turns a BBA into a probability distribution
for decision making by splitting each focal mass evenly over the set's
members. The betting commitment of a subset is its probability under that
distribution; ``dif_betp`` measures how far apart two BBAs can bet.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import MASS_SUM_TOLERANCE, Bba, FocalSet, Frame, build_bba
from .errors import FrameMismatchError, ValidationError


class BetPMode(Enum):
    """Scope of the maximization in the betting-commitment distance.

    ALL_SUBSETS ranges over every subset of the frame (the default),
    SINGLETONS over single grades only, FOCAL_SETS over the focal sets of
    either compared BBA. The restricted modes exist so reports can state
    exactly which scope produced a number; they are not interchangeable.
    """

    ALL_SUBSETS = "all"
    SINGLETONS = "singleton"
    FOCAL_SETS = "focal"


@dataclass(frozen=True)
class PignisticDistribution:
    """Probability over a frame's grades, indexed by 1-based position."""

    frame: Frame
    probabilities: tuple[float, ...]

    def __post_init__(self):
        if len(self.probabilities) != self.frame.size:
            raise ValidationError(
                f"expected {self.frame.size} probabilities, got {len(self.probabilities)}"
            )
        for p in self.probabilities:
            if not -1e-12 <= p <= 1.0 + MASS_SUM_TOLERANCE:
                raise ValidationError(f"probability {p!r} outside [0, 1]")
        total = sum(self.probabilities)
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise ValidationError(
                f"probabilities sum to {total!r}, expected 1 within {MASS_SUM_TOLERANCE}"
            )

    def to_bba(self) -> Bba:
        """The BBA carrying this distribution on singleton focal sets."""
        return build_bba(
            self.frame,
            [
                (self.frame.singleton(i + 1), p)
                for i, p in enumerate(self.probabilities)
                if p > 0.0
            ],
        )


def ppt(bba: Bba) -> PignisticDistribution:
    """Pignistic probability transformation.

    Every focal mass is split evenly across the set's members; a grade's
    probability is the sum of its shares. Mass on the empty set is ruled
    out at construction, so no renormalization is needed here.
    """
    probabilities = [0.0] * bba.frame.size
    for focal_set, mass in bba.entries:
        share = mass / len(focal_set)
        for position in focal_set.members:
            probabilities[position - 1] += share
    return PignisticDistribution(bba.frame, tuple(probabilities))


def betp_of_subset(distribution: PignisticDistribution, subset: FocalSet) -> float:
    """Betting commitment of a subset: the sum of its members' probabilities."""
    if subset.frame != distribution.frame:
        raise FrameMismatchError("subset belongs to a different frame")
    return sum(distribution.probabilities[i - 1] for i in subset.members)


def dif_betp(m1: Bba, m2: Bba, mode: BetPMode = BetPMode.ALL_SUBSETS) -> float:
    """Largest betting-commitment gap between two BBAs, in [0, 1].

    In ALL_SUBSETS mode the gap is maximized over every subset of the
    frame without enumerating them: for two probability vectors the
    maximum equals the sum of the positive coordinates of their
    difference (their total variation). The other modes scan only the
    stated subsets.
    """
    if m1.frame != m2.frame:
        raise FrameMismatchError("BBAs are defined on different frames")
    p1 = ppt(m1).probabilities
    p2 = ppt(m2).probabilities
    diff = [a - b for a, b in zip(p1, p2)]
    if mode is BetPMode.ALL_SUBSETS:
        return sum(d for d in diff if d > 0.0)
    if mode is BetPMode.SINGLETONS:
        return max(abs(d) for d in diff)
    scanned = {fs.bits: fs for fs, _ in m1.entries}
    scanned.update((fs.bits, fs) for fs, _ in m2.entries)
    return max(
        abs(sum(diff[i - 1] for i in fs.members)) for fs in scanned.values()
    )
