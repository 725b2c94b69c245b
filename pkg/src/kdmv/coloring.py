"""Coloring and solver-result records.

A Coloring is a total map vertex -> class index, stored 0-based and
normalized: classes are numbered by first occurrence in vertex order, which
coincides with numbering classes by their smallest member.  Two colorings
describing the same partition therefore compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import bit


def normalize_colors(colors: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", normalize_colors(self.colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def num_classes(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Coloring":
        colors = [-1] * n
        for idx, cl in enumerate(classes):
            for v in cl:
                if colors[v] != -1:
                    raise ValueError(f"vertex {v} appears in two classes")
                colors[v] = idx
        if any(c == -1 for c in colors):
            missing = [v for v, c in enumerate(colors) if c == -1]
            raise ValueError(f"vertices {missing} not covered by any class")
        return cls(tuple(colors))

    def class_lists(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def class_masks(self) -> list[int]:
        out = [0] * self.num_classes
        for v, c in enumerate(self.colors):
            out[c] |= bit(v)
        return out

    def to_json(self) -> list[list[int]]:
        return self.class_lists()


EXACT = "Exact"
BOUNDS_ONLY = "BoundsOnly"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    ``value`` is always the objective of the returned witness.  ``lower`` and
    ``upper`` are proven bounds; status is Exact exactly when they meet.  For
    minimization problems an exhausted budget leaves value == upper, for
    maximization value == lower.
    """

    value: int
    witness: Coloring | tuple[int, ...] | None
    status: str
    lower: int
    upper: int
    nodes: int

    @classmethod
    def exact(cls, value: int, witness, nodes: int) -> "SolveResult":
        return cls(value, witness, EXACT, value, value, nodes)

    @classmethod
    def bounds(cls, value: int, witness, lower: int, upper: int, nodes: int) -> "SolveResult":
        if lower == upper:
            return cls(value, witness, EXACT, lower, upper, nodes)
        return cls(value, witness, BOUNDS_ONLY, lower, upper, nodes)

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT

    def witness_json(self):
        if isinstance(self.witness, Coloring):
            return self.witness.to_json()
        if self.witness is None:
            return None
        return sorted(self.witness)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "status": self.status,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "witness": self.witness_json(),
        }
