"""Uniform sampling grids and the 0/1 indicator series built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numtheory import EventSequence

__all__ = ["GridSpec", "MangoldtSeries", "sample_index", "build_series"]


@dataclass(frozen=True)
class GridSpec:
    """Sampling description: period delta, sample count length, origin.

    Sample index k sits at location origin + k*delta for k = 0..length-1.
    """

    delta: float
    length: int
    origin: float = 0.0

    def __post_init__(self):
        if self.delta <= 0.0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if self.length < 2:
            raise ValueError(f"length must be >= 2, got {self.length}")

    @classmethod
    def for_events(cls, events: EventSequence, delta: float = 1.0,
                   origin: float = 0.0) -> "GridSpec":
        """Smallest grid covering every event: length ceil((max-origin)/delta)+1."""
        if len(events) == 0:
            return cls(delta=delta, length=2, origin=origin)
        top = float(events.events[-1])
        length = max(2, int(math.ceil((top - origin) / delta)) + 1)
        return cls(delta=delta, length=length, origin=origin)

    def locations(self) -> np.ndarray:
        return self.origin + self.delta * np.arange(self.length, dtype=float)

    @property
    def span(self) -> float:
        """Total covered extent length*delta, in location units."""
        return self.length * self.delta


def sample_index(x: float, grid: GridSpec) -> int | None:
    """Nearest sample index for location x, ties rounded half-up.

    Returns None when the nearest index falls outside 0..length-1.
    """
    idx = math.floor((x - grid.origin) / grid.delta + 0.5)
    if idx < 0 or idx >= grid.length:
        return None
    return idx


@dataclass(frozen=True)
class MangoldtSeries:
    """Indicator series: value 1 at marked sample indices, 0 elsewhere."""

    values: np.ndarray
    grid: GridSpec
    marked_indices: frozenset[int]

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.shape != (self.grid.length,):
            raise ValueError(
                f"values shape {arr.shape} does not match grid length "
                f"{self.grid.length}")
        marked = frozenset(int(i) for i in self.marked_indices)
        expect = np.zeros(self.grid.length)
        expect[sorted(marked)] = 1.0
        if not np.array_equal(arr, expect):
            raise ValueError("values must be 0/1 with ones exactly at "
                             "marked_indices")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "marked_indices", marked)

    @property
    def mark_count(self) -> int:
        return len(self.marked_indices)

    def __len__(self) -> int:
        return self.grid.length


def build_series(events: EventSequence, grid: GridSpec) -> MangoldtSeries:
    """Mark the nearest in-range sample of every event with weight one.

    Marking is a set insert: two events in one cell still give value 1.
    """
    marked = set()
    for x in events:
        idx = sample_index(float(x), grid)
        if idx is not None:
            marked.add(idx)
    values = np.zeros(grid.length)
    if marked:
        values[sorted(marked)] = 1.0
    return MangoldtSeries(values=values, grid=grid,
                          marked_indices=frozenset(marked))
