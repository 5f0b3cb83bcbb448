"""Frames of discernment, focal sets, and basic belief assignments.

These are the value types the rest of the package operates on. All of
them are immutable once constructed and every construction path runs the
same validation, so a ``Bba`` in hand is always well formed: positive
masses on non-empty subsets of its frame, summing to one.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Union

from .errors import FrameMismatchError, ValidationError

MAX_FRAME_SIZE = 64
MASS_SUM_TOLERANCE = 1e-9

Member = Union[str, int]


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment.

    The label order is semantic: the position distance between two grades
    is what the order-aware distance measure feeds on. Positions are
    1-based.
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValidationError("a frame needs at least one label")
        if len(self.labels) > MAX_FRAME_SIZE:
            raise ValidationError(
                f"frame has {len(self.labels)} labels, maximum is {MAX_FRAME_SIZE}"
            )
        for label in self.labels:
            if not isinstance(label, str):
                raise ValidationError(f"labels must be strings, got {label!r}")
        if len(set(self.labels)) != len(self.labels):
            dupes = sorted({x for x in self.labels if self.labels.count(x) > 1})
            raise ValidationError("duplicate labels: " + ", ".join(dupes))
        object.__setattr__(
            self, "_positions", {x: i + 1 for i, x in enumerate(self.labels)}
        )

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, member: Member) -> int:
        """Resolve a label or 1-based position to a 1-based position."""
        if isinstance(member, bool):
            raise ValidationError(f"invalid frame member {member!r}")
        if isinstance(member, str):
            position = self._positions.get(member)
            if position is None:
                raise ValidationError(f"unknown label {member!r}")
            return position
        if isinstance(member, int):
            if not 1 <= member <= self.size:
                raise ValidationError(
                    f"index {member} out of range 1..{self.size}"
                )
            return member
        raise ValidationError(f"invalid frame member {member!r}")

    def label(self, index: int) -> str:
        if not 1 <= index <= self.size:
            raise ValidationError(f"index {index} out of range 1..{self.size}")
        return self.labels[index - 1]

    def subset(self, members: Iterable[Member]) -> FocalSet:
        """Build a focal set from labels and/or 1-based positions."""
        bits = 0
        for member in members:
            bits |= 1 << (self.index_of(member) - 1)
        return FocalSet(self, bits)

    def singleton(self, member: Member) -> FocalSet:
        return FocalSet(self, 1 << (self.index_of(member) - 1))

    def full_set(self) -> FocalSet:
        return FocalSet(self, (1 << self.size) - 1)


@dataclass(frozen=True)
class FocalSet:
    """A non-empty subset of a frame, stored as a bitmask over positions.

    Bit ``i - 1`` is set exactly when position ``i`` belongs to the set,
    which keeps intersections, unions and cardinalities exact and cheap
    for frames up to MAX_FRAME_SIZE elements.
    """

    frame: Frame
    bits: int

    def __post_init__(self):
        if self.bits <= 0:
            raise ValidationError("a focal set must be non-empty")
        if self.bits >> self.frame.size:
            raise ValidationError("focal set has members outside its frame")

    @property
    def members(self) -> tuple[int, ...]:
        """Member positions, ascending and 1-based."""
        return tuple(
            i + 1 for i in range(self.frame.size) if self.bits >> i & 1
        )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.frame.labels[i - 1] for i in self.members)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, member: Member):
        return bool(self.bits >> (self.frame.index_of(member) - 1) & 1)

    def __repr__(self):
        return "{" + ",".join(self.labels) + "}"


def focal_sort_key(focal_set: FocalSet) -> tuple[int, tuple[int, ...]]:
    """Canonical display and storage order: by cardinality, then members."""
    return (len(focal_set), focal_set.members)


@dataclass(frozen=True)
class Bba:
    """A basic belief assignment.

    ``entries`` holds (focal set, mass) pairs in canonical order, with
    strictly positive masses that sum to one within MASS_SUM_TOLERANCE.
    The empty set never appears, so no mass sits outside the frame.
    """

    frame: Frame
    entries: tuple[tuple[FocalSet, float], ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.entries, key=lambda e: focal_sort_key(e[0])))
        object.__setattr__(self, "entries", ordered)
        total = 0.0
        seen = set()
        for focal_set, mass in ordered:
            if focal_set.frame != self.frame:
                raise FrameMismatchError(
                    f"focal set {focal_set!r} belongs to a different frame"
                )
            if not mass > 0.0:
                raise ValidationError(
                    f"focal masses must be positive, got {mass!r} on {focal_set!r}"
                )
            if focal_set.bits in seen:
                raise ValidationError(f"duplicate focal set {focal_set!r}")
            seen.add(focal_set.bits)
            total += mass
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise ValidationError(
                f"masses sum to {total!r}, expected 1 within {MASS_SUM_TOLERANCE}"
            )
        object.__setattr__(
            self, "_by_bits", {fs.bits: mass for fs, mass in ordered}
        )

    @property
    def focal_sets(self) -> tuple[FocalSet, ...]:
        return tuple(fs for fs, _ in self.entries)

    def __repr__(self):
        body = ", ".join(f"{fs!r}: {mass:g}" for fs, mass in self.entries)
        return f"Bba({body})"


def build_frame(labels: Iterable[str]) -> Frame:
    """Build a frame whose grade order is the given label order."""
    return Frame(tuple(labels))


SetLike = Union[FocalSet, Iterable[Member]]


def build_bba(
    frame: Frame,
    entries: Union[Mapping[SetLike, float], Iterable[tuple[SetLike, float]]],
    *,
    renormalize: bool = False,
) -> Bba:
    """Build a validated BBA from (set, mass) pairs.

    Sets may be FocalSet instances or iterables of labels / 1-based
    positions. Pairs naming the same set merge by summing their masses;
    zero-mass pairs drop out. With ``renormalize`` the merged masses are
    scaled to sum to one, otherwise the sum must already be 1 within
    MASS_SUM_TOLERANCE.
    """
    if isinstance(entries, Mapping):
        entries = entries.items()
    merged: dict[int, float] = {}
    for set_like, mass in entries:
        focal_set = set_like if isinstance(set_like, FocalSet) else frame.subset(set_like)
        if focal_set.frame != frame:
            raise FrameMismatchError(
                f"focal set {focal_set!r} belongs to a different frame"
            )
        mass = float(mass)
        if mass < 0.0:
            raise ValidationError(
                f"focal masses must be nonnegative, got {mass!r} on {focal_set!r}"
            )
        merged[focal_set.bits] = merged.get(focal_set.bits, 0.0) + mass
    positive = {bits: mass for bits, mass in merged.items() if mass > 0.0}
    if renormalize:
        total = sum(positive.values())
        if total <= 0.0:
            raise ValidationError("cannot renormalize: total mass is zero")
        positive = {bits: mass / total for bits, mass in positive.items()}
    return Bba(
        frame,
        tuple((FocalSet(frame, bits), mass) for bits, mass in positive.items()),
    )


def vacuous_bba(frame: Frame) -> Bba:
    """Total ignorance: all mass on the full frame."""
    return Bba(frame, ((frame.full_set(), 1.0),))


def mass_of(bba: Bba, focal_set: FocalSet) -> float:
    """Mass assigned to a set, 0.0 when the set is not focal."""
    if focal_set.frame != bba.frame:
        raise FrameMismatchError("queried set belongs to a different frame")
    return bba._by_bits.get(focal_set.bits, 0.0)
