"""Shared test helpers: deterministic random frames, BBAs, and oracles."""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np
from hypothesis import strategies as st

from evidist.core import Bba, FocalSet, Frame, build_bba, build_frame


def brute_force_max_gap(diff) -> float:
    """Max |sum over A of diff| over all non-empty subsets, by enumeration."""
    n = len(diff)
    index = np.arange(1 << n, dtype=np.int64)
    sums = np.zeros(1 << n)
    for b in range(n):
        sums += np.where(index >> b & 1, diff[b], 0.0)
    return float(np.abs(sums).max())


@lru_cache(maxsize=None)
def make_frame(size: int) -> Frame:
    return build_frame([f"g{i}" for i in range(1, size + 1)])


def random_bba(
    rng: random.Random,
    frame: Frame,
    max_focal: int = 6,
    include_full: bool = False,
) -> Bba:
    """A valid BBA with random focal sets and integer-weight masses.

    ``include_full`` guarantees mass on the whole frame, which keeps any
    pair of such BBAs combinable (conflict strictly below 1).
    """
    space = (1 << frame.size) - 1
    count = rng.randint(1, max_focal)
    bits = {rng.randint(1, space) for _ in range(count)}
    if include_full:
        bits.add(space)
    weights = {b: rng.randint(1, 100) for b in bits}
    total = sum(weights.values())
    return build_bba(
        frame, [(FocalSet(frame, b), w / total) for b, w in weights.items()]
    )


def random_bba_pair(rng, size, **kwargs):
    frame = make_frame(size)
    return random_bba(rng, frame, **kwargs), random_bba(rng, frame, **kwargs)


@st.composite
def bbas_on(draw, frame: Frame, max_focal: int = 6, include_full: bool = False):
    space = (1 << frame.size) - 1
    drawn = draw(
        st.lists(
            st.tuples(st.integers(1, space), st.integers(1, 100)),
            min_size=1,
            max_size=max_focal,
        )
    )
    weights: dict[int, int] = {}
    for bits, weight in drawn:
        weights[bits] = weights.get(bits, 0) + weight
    if include_full:
        weights[space] = weights.get(space, 0) + draw(st.integers(1, 100))
    total = sum(weights.values())
    return build_bba(
        frame, [(FocalSet(frame, b), w / total) for b, w in weights.items()]
    )


@st.composite
def bba_pairs(draw, min_size=2, max_size=8, include_full=False):
    """Two BBAs on one shared frame."""
    frame = make_frame(draw(st.integers(min_size, max_size)))
    return (
        draw(bbas_on(frame, include_full=include_full)),
        draw(bbas_on(frame, include_full=include_full)),
    )


@st.composite
def bba_triples(draw, min_size=2, max_size=8, include_full=False):
    frame = make_frame(draw(st.integers(min_size, max_size)))
    return tuple(
        draw(bbas_on(frame, include_full=include_full)) for _ in range(3)
    )
