"""The translation quiver ZA_inf and its quasi-wings.

Vertices are ``(i, l)`` with level ``l >= 1``; arrows are ``(i, l) -> (i, l+1)``
and ``(i, l+1) -> (i+1, l)``; translation is ``(i, l) -> (i-1, l)``.  The
quasi-simple vertices form level 1 and are indexed ``a_i = (-i, 1)`` so that
``a_i`` is the ``i``-th translate of ``a_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .quiver import Arrow, FiniteQuiver


@dataclass(frozen=True)
class Interval:
    """A non-empty interval of integers; ``None`` marks an open end."""

    lo: int | None = None
    hi: int | None = None

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def is_finite(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def kind(self) -> str:
        if self.is_finite:
            return "finite"
        if self.lo is None and self.hi is None:
            return "all"
        return "right_infinite" if self.lo is None else "left_infinite"

    def __len__(self) -> int:
        if not self.is_finite:
            raise ValueError("unbounded interval")
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


@dataclass(frozen=True)
class Bounds:
    """A finite box of ZA_inf: columns ``i_min..i_max`` and levels ``1..max_level``."""

    i_min: int
    i_max: int
    max_level: int

    def __post_init__(self):
        if self.i_min > self.i_max or self.max_level < 1:
            raise ValueError("empty window")

    def contains(self, v) -> bool:
        i, l = v
        return self.i_min <= i <= self.i_max and 1 <= l <= self.max_level


def quasi_simple(i: int) -> tuple[int, int]:
    return (-i, 1)


def za_successors(v) -> list:
    i, l = v
    out = [(i, l + 1)]
    if l > 1:
        out.append((i + 1, l - 1))
    return out


def za_predecessors(v) -> list:
    i, l = v
    out = [(i - 1, l + 1)]
    if l > 1:
        out.append((i, l - 1))
    return out


def tau(v):
    return (v[0] - 1, v[1])


@dataclass(frozen=True)
class Fragment:
    """A finite full subquiver of ZA_inf, listed in (level, column) order."""

    vertices: tuple

    @cached_property
    def arrows(self) -> tuple:
        vs = set(self.vertices)
        return tuple((u, w) for u in self.vertices for w in za_successors(u) if w in vs)

    def to_quiver(self) -> FiniteQuiver:
        names = {v: f"({v[0]},{v[1]})" for v in self.vertices}
        arrows = tuple(Arrow(f"{names[u]}->{names[w]}", names[u], names[w]) for u, w in self.arrows)
        return FiniteQuiver(tuple(names[v] for v in self.vertices), arrows)

    def __len__(self) -> int:
        return len(self.vertices)


def _sorted(vs) -> tuple:
    return tuple(sorted(vs, key=lambda v: (v[1], v[0])))


def za_band(bounds: Bounds) -> Fragment:
    return Fragment(
        _sorted((i, l) for i in range(bounds.i_min, bounds.i_max + 1) for l in range(1, bounds.max_level + 1))
    )


def in_wing(interval: Interval, v) -> bool:
    """``(i, l)`` lies between two quasi-simples of the interval.

    It is reached from ``a_j = (-j, 1)`` iff ``-j <= i`` and reaches ``a_j'``
    iff ``i + l - 1 <= -j'``.
    """
    i, l = v
    if l < 1:
        return False
    if interval.hi is not None and i < -interval.hi:
        return False
    if interval.lo is not None and i + l - 1 > -interval.lo:
        return False
    return True


def quasi_wing(interval: Interval, bounds: Bounds | None = None) -> Fragment:
    """The quasi-wing ``W_I``, whole for finite ``I``, cut to ``bounds`` otherwise."""
    if interval.is_finite and bounds is None:
        lo, hi = -interval.hi, -interval.lo
        verts = [(i, l) for i in range(lo, hi + 1) for l in range(1, hi - i + 2)]
        return Fragment(_sorted(v for v in verts if in_wing(interval, v)))
    if bounds is None:
        raise ValueError(f"the quasi-wing {interval} is infinite; give a window")
    return Fragment(_sorted(v for v in za_band(bounds).vertices if in_wing(interval, v)))


def _reach(start, ambient: set, step) -> set:
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in step(u):
            if w in ambient and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def convexity_violations(fragment: Fragment, within: Bounds | None = None, margin: int = 2) -> list[str]:
    """Check fullness and convexity of ``fragment`` by path enumeration.

    Every vertex lying on a path between two fragment vertices must belong to
    the fragment.  Paths are followed inside ``within`` (for a windowed cut of
    an infinite wing) or else inside a box large enough to contain every such
    intermediate vertex.
    """
    if not fragment.vertices:
        return []
    vs = set(fragment.vertices)
    if within is None:
        i_min = min(i for i, _ in vs) - margin
        i_max = max(i for i, _ in vs) + margin
        top = max(l for _, l in vs) + (i_max - i_min) + margin
        within = Bounds(i_min, i_max, top)
    ambient = set(za_band(within).vertices)
    if not vs <= ambient:
        return ["fragment leaves the window"]
    out = []
    for u, w in fragment.arrows:
        if w not in za_successors(u):
            out.append(f"{u} -> {w} is not an arrow of ZA_inf")
    expected = {(u, w) for u in vs for w in za_successors(u) if w in vs}
    if expected != set(fragment.arrows):
        out.append("fragment is not full")
    down = {u: _reach(u, ambient, za_successors) for u in vs}
    up = {w: _reach(w, ambient, za_predecessors) for w in vs}
    for u in vs:
        for w in vs:
            if w in down[u]:
                for x in down[u] & up[w]:
                    if x not in vs:
                        out.append(f"{x} lies on a path {u} ~> {w} but is missing")
    return sorted(set(out))


def wing_generators(interval: Interval, bounds: Bounds | None = None) -> list:
    """Quasi-simples of the interval that land in the materialized fragment."""
    frag = quasi_wing(interval, bounds)
    return [v for v in frag.vertices if v[1] == 1]
