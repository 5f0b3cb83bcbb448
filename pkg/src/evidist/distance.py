"""Evidence distance measures.

Three measures between BBAs on a shared frame:

* ``jousselme_distance`` weights mass differences by Jaccard similarity of
  the focal sets, so partially overlapping sets count as partially equal.
* ``dif_betp`` (in :mod:`evidist.pignistic`) compares betting commitments.
* ``red_distance`` is the ranking evidence distance: the only one of the
  three that sees the frame's grade order. Both BBAs pass through the
  pignistic transformation and the resulting probability difference is
  measured in the quadratic form of a grade-closeness correlation matrix,
  so disagreement between neighbouring grades costs less than
  disagreement between distant ones.

All three are symmetric, nonnegative and zero on equal inputs; the two
quadratic-form measures also satisfy the triangle inequality. The ranking
measure is a pseudo-metric on BBAs: it is zero exactly when the two
pignistic distributions coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .core import Bba, FocalSet, focal_sort_key, mass_of
from .errors import FrameMismatchError, NumericalError, ValidationError
from .pignistic import BetPMode, dif_betp, ppt

# Quadratic forms of positive semidefinite matrices are nonnegative;
# anything below this is a fault, anything above but negative is rounding.
RADICAND_TOLERANCE = 1e-12


def jaccard_similarity(a: FocalSet, b: FocalSet) -> float:
    """|A n B| / |A u B|: 1 on identical sets, 0 on disjoint ones."""
    if a.frame != b.frame:
        raise FrameMismatchError("focal sets belong to different frames")
    return (a.bits & b.bits).bit_count() / (a.bits | b.bits).bit_count()


def _sqrt_half_quadratic(diff: np.ndarray, matrix: np.ndarray) -> float:
    radicand = float(diff @ matrix @ diff)
    if radicand < -RADICAND_TOLERANCE:
        raise NumericalError(
            f"quadratic form produced {radicand!r}; expected a nonnegative value"
        )
    return math.sqrt(0.5 * max(radicand, 0.0))


def _joint_focal_list(m1: Bba, m2: Bba) -> list[FocalSet]:
    joint = {fs.bits: fs for fs, _ in m1.entries}
    joint.update((fs.bits, fs) for fs, _ in m2.entries)
    return sorted(joint.values(), key=focal_sort_key)


def jousselme_distance(m1: Bba, m2: Bba) -> float:
    """Jaccard-weighted quadratic-form distance between two BBAs, in [0, 1].

    Evaluated over the union of the two BBAs' focal sets rather than the
    full powerset basis: absent sets carry zero mass and cannot contribute
    to the form, so the result is identical and large frames stay cheap.
    """
    if m1.frame != m2.frame:
        raise FrameMismatchError("BBAs are defined on different frames")
    focal = _joint_focal_list(m1, m2)
    v1 = np.array([mass_of(m1, fs) for fs in focal])
    v2 = np.array([mass_of(m2, fs) for fs in focal])
    weights = np.array(
        [[jaccard_similarity(a, b) for b in focal] for a in focal]
    )
    return _sqrt_half_quadratic(v1 - v2, weights)


@lru_cache(maxsize=None)
def _correlation_matrix_cached(size: int) -> np.ndarray:
    if size == 1:
        matrix = np.ones((1, 1))
    else:
        positions = np.arange(size)
        matrix = 1.0 - np.abs(positions[:, None] - positions[None, :]) / (size - 1)
    matrix.flags.writeable = False
    return matrix


def correlation_matrix(size: int) -> np.ndarray:
    """Grade-closeness matrix S with entries 1 - |i - j| / (N - 1).

    Symmetric, Toeplitz, unit diagonal, linearly decaying to 0 at the
    maximal grade distance, and positive semidefinite. For a single-grade
    frame the 1x1 identity. Instances are cached per size and returned
    read-only; concurrent callers always see a fully constructed matrix.
    """
    if size < 1:
        raise ValidationError("frame size must be at least 1")
    return _correlation_matrix_cached(int(size))


def _pignistic_difference(m1: Bba, m2: Bba) -> np.ndarray:
    if m1.frame != m2.frame:
        raise FrameMismatchError("BBAs are defined on different frames")
    return np.array(ppt(m1).probabilities) - np.array(ppt(m2).probabilities)


def red_distance(m1: Bba, m2: Bba) -> float:
    """Ranking evidence distance, in [0, 1].

    Both BBAs are pignistically transformed first, always; on singleton
    vectors the Jaccard weighting collapses to the identity and the grade
    order enters solely through the correlation matrix. For categorical
    BBAs on grades i and j this reduces to sqrt(|i - j| / (N - 1)), which
    is what makes the measure strictly order-monotone where the other two
    measures saturate.
    """
    diff = _pignistic_difference(m1, m2)
    return _sqrt_half_quadratic(diff, correlation_matrix(m1.frame.size))


def red_reduces_to_jousselme(m1: Bba, m2: Bba) -> tuple[float, float]:
    """Diagnostic pair for the no-order degenerate case.

    Returns (the ranking distance recomputed with the identity in place of
    the correlation matrix, the Jousselme distance between the two
    pignistic singleton BBAs). Without a closeness structure the ranking
    measure degenerates to Jousselme on pignistic masses, so the two
    components must agree to rounding.
    """
    diff = _pignistic_difference(m1, m2)
    with_identity = _sqrt_half_quadratic(diff, np.eye(m1.frame.size))
    on_pignistic = jousselme_distance(ppt(m1).to_bba(), ppt(m2).to_bba())
    return with_identity, on_pignistic


_MEASURE_KINDS = ("jousselme", "betp", "red")


@dataclass(frozen=True)
class DistanceMeasure:
    """A selectable BBA distance: jousselme, betp (with a scan mode), or red."""

    kind: str
    mode: Optional[BetPMode] = None

    def __post_init__(self):
        if self.kind not in _MEASURE_KINDS:
            raise ValidationError(
                f"unknown measure {self.kind!r} (use one of {', '.join(_MEASURE_KINDS)})"
            )
        if self.kind == "betp":
            if self.mode is None:
                object.__setattr__(self, "mode", BetPMode.ALL_SUBSETS)
        elif self.mode is not None:
            raise ValidationError(f"measure {self.kind!r} does not take a mode")

    @classmethod
    def parse(cls, text: str) -> "DistanceMeasure":
        """Parse a measure name: red, jousselme, or betp[:all|singleton|focal]."""
        name, separator, mode_text = text.partition(":")
        if not separator:
            return cls(name)
        if name != "betp":
            raise ValidationError(f"measure {name!r} does not take a mode")
        try:
            mode = BetPMode(mode_text)
        except ValueError:
            raise ValidationError(
                f"unknown betp mode {mode_text!r} (use all, singleton, or focal)"
            ) from None
        return cls(name, mode)

    @property
    def label(self) -> str:
        if self.kind == "betp":
            return f"betp:{self.mode.value}"
        return self.kind

    def evaluate(self, m1: Bba, m2: Bba) -> float:
        if self.kind == "jousselme":
            return jousselme_distance(m1, m2)
        if self.kind == "red":
            return red_distance(m1, m2)
        return dif_betp(m1, m2, self.mode)
