"""Sample grids over C^2, viewed as boxes in (re1, im1, re2, im2).

Grids iterate in lexicographic order of the real 4-tuple, which fixes the
tie-break order for every argmax reduction downstream.  A GridSpec can also
draw a fixed number of uniform random points (seeded); those are sorted
into the same lexicographic order after sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import EmptyGrid

Point = tuple[complex, complex]


@dataclass(frozen=True)
class Axis:
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("axis count must be >= 1")
        if self.lo > self.hi:
            raise ValueError("axis lo must be <= hi")

    def values(self) -> list[float]:
        if self.count == 1:
            return [0.5 * (self.lo + self.hi)]
        step = (self.hi - self.lo) / (self.count - 1)
        return [self.lo + k * step for k in range(self.count)]


@dataclass(frozen=True)
class GridSpec:
    re1: Axis
    im1: Axis
    re2: Axis
    im2: Axis
    random_count: int | None = None
    seed: int = 0

    def points(self) -> list[Point]:
        if self.random_count is not None:
            rng = random.Random(self.seed)
            raw = sorted(
                (rng.uniform(self.re1.lo, self.re1.hi),
                 rng.uniform(self.im1.lo, self.im1.hi),
                 rng.uniform(self.re2.lo, self.re2.hi),
                 rng.uniform(self.im2.lo, self.im2.hi))
                for _ in range(self.random_count)
            )
            return [(complex(a, b), complex(c, d)) for a, b, c, d in raw]
        out = []
        for a in self.re1.values():
            for b in self.im1.values():
                for c in self.re2.values():
                    for d in self.im2.values():
                        out.append((complex(a, b), complex(c, d)))
        return out

    def size(self) -> int:
        if self.random_count is not None:
            return self.random_count
        return self.re1.count * self.im1.count * self.re2.count * self.im2.count

    def to_json(self) -> dict:
        out = {name: [axis.lo, axis.hi, axis.count]
               for name, axis in (("re1", self.re1), ("im1", self.im1),
                                  ("re2", self.re2), ("im2", self.im2))}
        if self.random_count is not None:
            out["random"] = {"count": self.random_count, "seed": self.seed}
        return out

    @staticmethod
    def from_json(data: dict) -> "GridSpec":
        axes = {}
        for name in ("re1", "im1", "re2", "im2"):
            lo, hi, count = data.get(name, [-1.0, 1.0, 8])
            axes[name] = Axis(float(lo), float(hi), int(count))
        rnd = data.get("random")
        if rnd:
            return GridSpec(**axes, random_count=int(rnd["count"]),
                            seed=int(rnd.get("seed", 0)))
        return GridSpec(**axes)


def default_grid() -> GridSpec:
    """8 points per axis, uniform over [-1, 1]^4."""
    axis = Axis(-1.0, 1.0, 8)
    return GridSpec(axis, axis, axis, axis)


def as_points(grid) -> list[Point]:
    """Accept a GridSpec or any iterable of (z1, z2) pairs."""
    if isinstance(grid, GridSpec):
        return grid.points()
    points = [(complex(p[0]), complex(p[1])) for p in grid]
    return points


def require_points(grid) -> list[Point]:
    points = as_points(grid)
    if not points:
        raise EmptyGrid("no sample points")
    return points
