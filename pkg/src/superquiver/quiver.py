"""Coloured quivers on the path graph 1 - 2 - ... - k.

Vertices are labelled ``1..k``.  Edge ``e`` (``1 <= e < k``) joins ``e`` and
``e + 1`` and is stored as its oriented pair ``(source, target)``.  An
orientation is written as a string of ``'<'`` / ``'>'`` read left to right,
so ``"<<"`` is ``1 <- 2 <- 3``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

EVEN_GLYPH = "○"
ODD_GLYPH = "⊗"


def glyph(parity: int, ascii: bool = False) -> str:
    if ascii:
        return "(x)" if parity else "o"
    return ODD_GLYPH if parity else EVEN_GLYPH


def arrow_glyph(char: str, ascii: bool = False) -> str:
    if char == "<":
        return "<-" if ascii else "←"
    return "->" if ascii else "→"


class QuiverError(ValueError):
    """Raised for malformed quivers or violated sink/source preconditions."""


@dataclass(frozen=True)
class ColouredQuiver:
    parity: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        k = len(self.parity)
        if k < 1:
            raise QuiverError("a quiver needs at least one vertex")
        if any(p not in (0, 1) for p in self.parity):
            raise QuiverError("vertex parities must be 0 or 1")
        if len(self.edges) != k - 1:
            raise QuiverError(f"a path on {k} vertices has {k - 1} edges")
        for e, (s, t) in enumerate(self.edges, start=1):
            if {s, t} != {e, e + 1}:
                raise QuiverError(f"edge {e} must join {e} and {e + 1}, got {s}->{t}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_orientation(cls, parity, orientation: str) -> ColouredQuiver:
        parity = tuple(int(p) for p in parity)
        if len(orientation) != len(parity) - 1 or set(orientation) - {"<", ">"}:
            raise QuiverError(
                f"orientation {orientation!r} must be {len(parity) - 1} chars of '<'/'>'"
            )
        edges = tuple((e, e + 1) if ch == ">" else (e + 1, e)
                      for e, ch in enumerate(orientation, start=1))
        return cls(parity, edges)

    @classmethod
    def uncoloured(cls, orientation: str) -> ColouredQuiver:
        return cls.from_orientation((0,) * (len(orientation) + 1), orientation)

    # -- structure --------------------------------------------------------
    @property
    def k(self) -> int:
        return len(self.parity)

    @property
    def vertices(self) -> range:
        return range(1, self.k + 1)

    @property
    def orientation(self) -> str:
        return "".join(">" if s < t else "<" for s, t in self.edges)

    def colour(self, i: int) -> int:
        return self.parity[i - 1]

    def edge(self, e: int) -> tuple[int, int]:
        return self.edges[e - 1]

    def edge_degree(self, e: int) -> int:
        s, t = self.edge(e)
        return (self.colour(s) + self.colour(t)) % 2

    def neighbours(self, i: int) -> list[int]:
        return [j for j in (i - 1, i + 1) if 1 <= j <= self.k]

    def incident_edges(self, i: int) -> Iterator[tuple[int, int, int]]:
        """Yield ``(edge, source, target)`` for edges touching ``i``, in edge order."""
        for e in (i - 1, i):
            if 1 <= e < self.k:
                s, t = self.edges[e - 1]
                yield e, s, t

    def in_edges(self, i: int) -> list[tuple[int, int]]:
        """``(edge, source)`` pairs for arrows ending at ``i``."""
        return [(e, s) for e, s, t in self.incident_edges(i) if t == i]

    def out_edges(self, i: int) -> list[tuple[int, int]]:
        """``(edge, target)`` pairs for arrows leaving ``i``."""
        return [(e, t) for e, s, t in self.incident_edges(i) if s == i]

    def is_sink(self, i: int) -> bool:
        return not self.out_edges(i)

    def is_source(self, i: int) -> bool:
        return not self.in_edges(i)

    def with_parity(self, parity) -> ColouredQuiver:
        return ColouredQuiver(tuple(parity), self.edges)

    def uncolour(self) -> ColouredQuiver:
        return self.with_parity((0,) * self.k)

    # -- rendering --------------------------------------------------------
    def render(self, ascii: bool = False) -> str:
        parts = [glyph(self.colour(1), ascii)]
        for e, ch in enumerate(self.orientation, start=1):
            parts += [arrow_glyph(ch, ascii), glyph(self.colour(e + 1), ascii)]
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {"parity": list(self.parity), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> ColouredQuiver:
        return cls(tuple(data["parity"]), tuple(tuple(e) for e in data["edges"]))

    def to_dot(self, name: str = "quiver") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for i in self.vertices:
            if self.colour(i):
                lines.append(f'  {i} [shape=circle, label="{ODD_GLYPH}", xlabel="{i}"];')
            else:
                lines.append(f'  {i} [shape=circle, label="", xlabel="{i}"];')
        for s, t in self.edges:
            lines.append(f"  {s} -> {t};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def sinks(q: ColouredQuiver) -> list[int]:
    return [i for i in q.vertices if q.is_sink(i)]


def sources(q: ColouredQuiver) -> list[int]:
    return [i for i in q.vertices if q.is_source(i)]


def reflect_quiver(q: ColouredQuiver, i: int) -> ColouredQuiver:
    """Reverse every arrow at the sink/source ``i``; an odd ``i`` recolours its neighbours."""
    if i not in q.vertices:
        raise QuiverError(f"vertex {i} not in quiver")
    if not (q.is_sink(i) or q.is_source(i)):
        raise QuiverError(f"vertex {i} is neither a sink nor a source")
    edges = list(q.edges)
    for e, s, t in q.incident_edges(i):
        edges[e - 1] = (t, s)
    parity = list(q.parity)
    if q.colour(i):
        for j in q.neighbours(i):
            parity[j - 1] ^= 1
    return ColouredQuiver(tuple(parity), tuple(edges))


def all_orientations(k: int) -> list[str]:
    """Every orientation of the path on ``k`` vertices, in lexicographic order."""
    out = [""]
    for _ in range(k - 1):
        out = [o + c for o in out for c in "<>"]
    return out


# ---------------------------------------------------------------------------
# height functions

@dataclass(frozen=True)
class HeightFunction:
    """Heights in Z/2h for the path on ``k`` vertices (h = k + 1)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        mod = self.modulus
        object.__setattr__(self, "values", tuple(v % mod for v in self.values))
        for a, b in zip(self.values, self.values[1:]):
            if (a - b) % mod not in (1, mod - 1):
                raise QuiverError(f"heights {self.values} differ by more than 1 along an edge")

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def coxeter_number(self) -> int:
        return len(self.values) + 1

    @property
    def modulus(self) -> int:
        return 2 * (len(self.values) + 1)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]


def orientation_from_height(h: HeightFunction) -> str:
    """``i -> j`` exactly when ``h(j) = h(i) + 1``."""
    out = []
    for a, b in zip(h.values, h.values[1:]):
        out.append(">" if (b - a) % h.modulus == 1 else "<")
    return "".join(out)


def height_from_orientation(orientation: str) -> HeightFunction:
    """Heights rising by one along each arrow, normalised so the minimum is 0."""
    vals = [0]
    for ch in orientation:
        vals.append(vals[-1] + (1 if ch == ">" else -1))
    lo = min(vals)
    return HeightFunction(tuple(v - lo for v in vals))


def dumps(q: ColouredQuiver) -> str:
    return json.dumps(q.to_json(), sort_keys=True)
