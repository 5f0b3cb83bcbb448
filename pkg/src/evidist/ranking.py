"""Rank candidate BBAs by their distance to a reference BBA."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Union

from .core import Bba
from .distance import DistanceMeasure
from .errors import FrameMismatchError, ValidationError

TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RankedCandidate:
    name: str
    distance: float
    rank: int
    tied: bool


@dataclass(frozen=True)
class RankingResult:
    """Candidates in ascending distance order, ranked 1..K."""

    measure: str
    reference: str
    entries: tuple[RankedCandidate, ...]


Candidates = Union[Mapping[str, Bba], Sequence[tuple[str, Bba]]]


def rank_by_distance(
    reference: Bba,
    candidates: Candidates,
    measure: DistanceMeasure,
    *,
    reference_name: str = "reference",
) -> RankingResult:
    """Score every candidate against the reference and sort ascending.

    Smaller distance ranks higher. Candidates whose distances agree within
    TIE_TOLERANCE keep their input order and are flagged as tied rather
    than silently ordered: a tie means the measure cannot separate them.
    """
    items = list(candidates.items()) if isinstance(candidates, Mapping) else list(candidates)
    if not items:
        raise ValidationError("no candidates to rank")
    for name, bba in items:
        if bba.frame != reference.frame:
            raise FrameMismatchError(
                f"candidate {name!r} is defined on a different frame"
            )
    scored = [
        (measure.evaluate(reference, bba), index, name)
        for index, (name, bba) in enumerate(items)
    ]
    scored.sort(key=lambda t: (t[0], t[1]))

    # Cluster near-equal distances, restore input order inside each cluster.
    clusters: list[list[tuple[float, int, str]]] = []
    for item in scored:
        if clusters and item[0] - clusters[-1][-1][0] <= TIE_TOLERANCE:
            clusters[-1].append(item)
        else:
            clusters.append([item])
    entries = []
    position = 1
    for cluster in clusters:
        cluster.sort(key=lambda t: t[1])
        tied = len(cluster) > 1
        for distance, _, name in cluster:
            entries.append(RankedCandidate(name, distance, position, tied))
            position += 1
    return RankingResult(measure.label, reference_name, tuple(entries))
