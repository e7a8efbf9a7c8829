"""Knitting the preprojective and preinjective components slice by slice.

Coordinates are pairs ``(n, x)``: slice ``n`` and quiver vertex ``x``.  The
immediate successors of ``(n, x)`` are ``(n, y)`` for every arrow ``y -> x``
and ``(n + 1, z)`` for every arrow ``x -> z``; translation sends ``(n + 1, x)``
to ``(n, x)``.  Dimension data lives on a window of radius ``R`` and every
vertex whose mesh would need data we do not have is reported as UNRESOLVED
instead of being guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .quiver import QuiverPresentation, TailVertex, Window, require_valid
from .rep import StableRep, injective_at, projective_at
from .status import presentation_status


class KnitStatus(str, Enum):
    RESOLVED = "resolved"
    UNRESOLVED = "unresolved"


@dataclass
class KnitVertex:
    slice: int
    vertex: object
    status: KnitStatus
    dims: tuple[int, ...] | None = None  # aligned with the window vertex order
    tags: tuple[int, ...] | None = None

    @property
    def resolved(self) -> bool:
        return self.status is KnitStatus.RESOLVED

    @property
    def key(self) -> tuple:
        return (self.slice, self.vertex)


@dataclass
class KnittedComponent:
    """A finite piece of a preprojective (``sign=+1``) or preinjective (``sign=-1``) component."""

    qp: QuiverPresentation
    window: Window
    sign: int
    vertices: dict = field(default_factory=dict)  # (n, x) -> KnitVertex, slice-major
    arrows: list = field(default_factory=list)  # ((n, x), (m, y)) with multiplicity

    def resolved(self) -> list[KnitVertex]:
        return [v for v in self.vertices.values() if v.resolved]

    def unresolved(self) -> list[KnitVertex]:
        return [v for v in self.vertices.values() if not v.resolved]

    def dim_vector(self, key) -> dict:
        kv = self.vertices[key]
        return dict(zip(self.window.vertices, kv.dims))

    def labelled_arrows(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Arrows between resolved vertices, keyed by dimension vectors, with multiplicities."""
        counts: dict = {}
        for s, t in self.arrows:
            a, b = self.vertices[s], self.vertices[t]
            if a.resolved and b.resolved:
                k = (a.dims, b.dims)
                counts[k] = counts.get(k, 0) + 1
        return sorted((a, b, m) for (a, b), m in counts.items())

    def predecessors(self, key) -> list:
        return [s for s, t in self.arrows if t == key]

    def successors(self, key) -> list:
        return [t for s, t in self.arrows if s == key]

    def is_closed(self) -> bool:
        """Predecessor closed (preprojective) or successor closed (preinjective) resolved part."""
        near = self.predecessors if self.sign > 0 else self.successors
        return all(self.vertices[u].resolved for kv in self.resolved() for u in near(kv.key))

    def mesh_violations(self) -> list[str]:
        """Check ``dim tau X + dim X = sum of the middle terms`` at every resolved mesh."""
        out = []
        for (n, x), kv in self.vertices.items():
            prev = self.vertices.get((n - self.sign, x))
            if not kv.resolved or prev is None or not prev.resolved:
                continue
            # the mesh runs from the earlier vertex to the later one
            early, late = (prev, kv) if self.sign > 0 else (kv, prev)
            mids = self.successors(early.key)
            if any(not self.vertices[m].resolved for m in mids):
                out.append(f"mesh at {late.key} has unresolved middle terms")
                continue
            total = [0] * len(kv.dims)
            for m in mids:
                total = [a + b for a, b in zip(total, self.vertices[m].dims)]
            if [a + b for a, b in zip(early.dims, late.dims)] != total:
                out.append(f"mesh additivity fails at {late.key}")
        return out

    def to_json(self) -> dict:
        verts = []
        for kv in self.vertices.values():
            item = {"slice": kv.slice, "vertex": str(kv.vertex), "status": kv.status.value}
            if kv.resolved:
                item["dims"] = {str(v): d for v, d in zip(self.window.vertices, kv.dims) if d}
                item["tags"] = list(kv.tags)
            verts.append(item)
        return {
            "kind": "preprojective" if self.sign > 0 else "preinjective",
            "window_depths": list(self.window.depths),
            "vertices": verts,
            "arrows": [[[s[0], str(s[1])], [t[0], str(t[1])]] for s, t in self.arrows],
        }


def _depth(v) -> int:
    return v.depth if isinstance(v, TailVertex) else 0


def _data(m: StableRep, window: Window, radius: int) -> tuple[tuple, tuple, bool]:
    """Window dimensions, tags, and whether the tags describe everything past the window."""
    dims = tuple(m.dim(v) for v in window.vertices)
    exact = True
    for k, tag in enumerate(m.tags):
        for d in range(radius + 1, max(radius, m.depths[k]) + 2):
            if m.dim(TailVertex(k, d)) != tag:
                exact = False
    return dims, tuple(m.tags), exact


def knit_preprojective(qp: QuiverPresentation, depth: int, radius: int | None = None) -> KnittedComponent:
    """Slices ``0..depth`` of the preprojective component, starting from the projectives.

    ``(n + 1, x)`` is computed by mesh additivity from ``(n, x)`` when that vertex
    is finitely co-presented (checked on the projective itself in slice 0,
    finite support later) and is not injective.  For ``n >= 0`` a vertex at tail
    depth ``> R - (n + 1)``, or one whose mesh reaches outside the window or
    through an unresolved vertex, is marked UNRESOLVED.
    """
    require_valid(qp)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if qp.tails:
        if radius is None or radius < 1:
            raise ValueError("a window radius of at least 1 is needed for a quiver with tails")
        window = Window(qp, (radius,) * len(qp.tails))
    else:
        radius = 0
        window = Window(qp, ())
    inside = set(window.vertices)
    order = window.quiver.topological_order()
    if order is None:
        raise ValueError("quiver has an oriented cycle")
    sinks_first = list(reversed(order))
    comp = KnittedComponent(qp, window, +1)
    V = comp.vertices

    injectives = []
    for y in window.vertices:
        d, t, exact = _data(injective_at(qp, y), window, radius)
        injectives.append((d, t, exact))

    fcp0 = {}
    for x in window.vertices:
        p = projective_at(qp, x)
        d, t, exact = _data(p, window, radius)
        V[(0, x)] = KnitVertex(0, x, KnitStatus.RESOLVED, d, t)
        # finite-dimensional representations are finitely co-presented
        fcp0[x] = p.is_finite_dimensional or presentation_status(p).fcp
        if not exact:
            V[(0, x)].status = KnitStatus.UNRESOLVED

    for n in range(depth):
        added = False
        for x in sinks_first:
            cur = V.get((n, x))
            if cur is None:
                continue
            ys = [a.source for a in qp.in_arrows(x)]
            zs = [a.target for a in qp.out_arrows(x)]
            blocked = (
                not cur.resolved
                or (qp.tails and _depth(x) > radius - (n + 1))
                or any(w not in inside for w in ys + zs)
                or any((n, y) in V and not V[(n, y)].resolved for y in ys)
                or any((n + 1, z) in V and not V[(n + 1, z)].resolved for z in zs)
            )
            if blocked:
                V[(n + 1, x)] = KnitVertex(n + 1, x, KnitStatus.UNRESOLVED)
                added = True
                continue
            if n == 0:
                if not fcp0[x]:
                    continue
            elif any(cur.tags):
                # only finite-dimensional vertices are known to be finitely co-presented
                V[(n + 1, x)] = KnitVertex(n + 1, x, KnitStatus.UNRESOLVED)
                added = True
                continue
            match = [exact for d, t, exact in injectives if d == cur.dims and t == cur.tags]
            if any(match):
                continue
            if match:
                V[(n + 1, x)] = KnitVertex(n + 1, x, KnitStatus.UNRESOLVED)
                added = True
                continue
            dims = [-a for a in cur.dims]
            tags = [-a for a in cur.tags]
            for w in [(n, y) for y in ys] + [(n + 1, z) for z in zs]:
                kv = V.get(w)
                if kv is None:
                    continue
                dims = [a + b for a, b in zip(dims, kv.dims)]
                tags = [a + b for a, b in zip(tags, kv.tags)]
            if any(a < 0 for a in dims + tags) or not any(dims + tags):
                raise ArithmeticError(f"mesh at ({n + 1}, {x}) produced dimension vector {dims}")
            V[(n + 1, x)] = KnitVertex(n + 1, x, KnitStatus.RESOLVED, tuple(dims), tuple(tags))
            added = True
        if not added:
            break

    # reorder slice-major and attach arrows
    ordered = {}
    for n in sorted({k[0] for k in V}):
        for x in window.vertices:
            if (n, x) in V:
                ordered[(n, x)] = V[(n, x)]
    comp.vertices = ordered
    for (n, x) in ordered:
        for a in sorted(qp.in_arrows(x), key=lambda a: str(a.id)):
            if (n, a.source) in ordered:
                comp.arrows.append(((n, x), (n, a.source)))
        for a in sorted(qp.out_arrows(x), key=lambda a: str(a.id)):
            if (n + 1, a.target) in ordered:
                comp.arrows.append(((n, x), (n + 1, a.target)))
    return comp


def knit_preinjective(qp: QuiverPresentation, depth: int, radius: int | None = None) -> KnittedComponent:
    """Dual knitting: the preprojective component of the opposite quiver, read backwards.

    Duality keeps dimension vectors and reverses irreducible maps, so
    ``(n, x) -> (m, y)`` over the opposite quiver becomes ``(-m, y) -> (-n, x)``.
    """
    op = knit_preprojective(qp.opposite(), depth, radius)
    window = Window(qp, op.window.depths)
    comp = KnittedComponent(qp, window, -1)
    for n in sorted({k[0] for k in op.vertices}, reverse=True):
        for x in window.vertices:
            kv = op.vertices.get((n, x))
            if kv is not None:
                comp.vertices[(-n, x)] = KnitVertex(-n, x, kv.status, kv.dims, kv.tags)
    comp.arrows = sorted(
        (((-t[0], t[1]), (-s[0], s[1])) for s, t in op.arrows),
        key=lambda e: (e[0][0], str(e[0][1]), e[1][0], str(e[1][1])),
    )
    return comp


def knit_finite(qp: QuiverPresentation) -> KnittedComponent:
    """The full preprojective component of a finite quiver, knitted until it stops."""
    if qp.tails:
        raise ValueError("knit_finite needs a quiver without tails")
    n = len(qp.core.vertices)
    return knit_preprojective(qp, n * n + 1)
