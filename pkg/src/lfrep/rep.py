"""Locally finite dimensional representations in the stable-window model.

A :class:`StableRep` stores exact matrices on a finite window and, for each
tail, a tag ``m``: beyond the window every tail vertex carries ``k^m`` and
every tail arrow acts as the identity (``m == 0`` means the tail is eventually
zero).  The stored window always ends inside the stable region: on each tail
the last two window vertices have dimension ``m`` and the last window arrow is
the identity.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import ONE, ZERO, Matrix, block_diag
from .quiver import (
    QuiverPresentation,
    TailArrow,
    TailVertex,
    Walk,
    Window,
    resolve_vertex,
)


class NotStableError(ValueError):
    """The requested object exists but is not eventually constant along some tail."""


def tag_label(m: int) -> str:
    return "zero" if m == 0 else f"stable({m})"


class StableRep:
    """Representation of a strongly locally finite quiver, stable beyond a window.

    Attributes:
        qp: the quiver.
        depths: per-tail window depth.
        dims: dimension at every window vertex.
        maps: matrix of every window arrow (shape ``dim(head) x dim(tail)``).
        tags: per-tail eventual dimension (0 for eventually zero).
    """

    __slots__ = ("qp", "depths", "dims", "maps", "tags", "__dict__")

    def __init__(
        self,
        qp: QuiverPresentation,
        depths: Sequence[int],
        dims: Mapping,
        maps: Mapping,
        tags: Sequence[int],
        *,
        check: bool = True,
    ):
        self.qp = qp
        self.depths = tuple(int(d) for d in depths)
        self.tags = tuple(int(t) for t in tags)
        win = Window(qp, self.depths)
        self.dims = {v: int(dims.get(v, 0)) for v in win.vertices}
        full = {}
        for a in win.arrows:
            m = maps.get(a.id)
            full[a.id] = Matrix.zeros(self.dims[a.target], self.dims[a.source]) if m is None else m
        self.maps = full
        if check:
            problems = self.problems()
            if problems:
                raise ValueError("invalid stable representation: " + "; ".join(problems))

    # -- structure --------------------------------------------------------

    @cached_property
    def window(self) -> Window:
        return Window(self.qp, self.depths)

    def problems(self) -> list[str]:
        out = []
        if len(self.tags) != len(self.qp.tails):
            out.append(f"expected {len(self.qp.tails)} tail tags, got {len(self.tags)}")
            return out
        for v, d in self.dims.items():
            if d < 0:
                out.append(f"negative dimension at {v}")
        for a in self.window.arrows:
            m = self.maps[a.id]
            if m.shape != (self.dims[a.target], self.dims[a.source]):
                out.append(f"arrow {a.id} has shape {m.shape}, expected {(self.dims[a.target], self.dims[a.source])}")
        for k, (d, m) in enumerate(zip(self.depths, self.tags)):
            if m < 0:
                out.append(f"tail {k} has negative tag")
                continue
            lo, hi = self.qp.tail_vertex(k, d - 1), TailVertex(k, d)
            if self.dims[lo] != m or self.dims[hi] != m:
                out.append(f"tail {k}: window must end in the stable region (dims {m} at depths {d - 1} and {d})")
            elif not self.maps[TailArrow(k, d)].is_identity():
                out.append(f"tail {k}: last window arrow must be the identity")
        return out

    @cached_property
    def stab_depths(self) -> tuple[int, ...]:
        """Per tail, the least depth from which dimensions equal the tag and maps are identities."""
        out = []
        for k, (d, m) in enumerate(zip(self.depths, self.tags)):
            s = d
            while s >= 1:
                lo = self.qp.tail_vertex(k, s - 1)
                if self.dims[lo] == m and self.maps[TailArrow(k, s)].is_identity() and self.dims[TailVertex(k, s)] == m:
                    s -= 1
                else:
                    break
            out.append(s)
        return tuple(out)

    def dim(self, v) -> int:
        v = resolve_vertex(self.qp, v)
        if isinstance(v, TailVertex):
            if v.depth > self.depths[v.tail]:
                return self.tags[v.tail]
        return self.dims[v]

    def map(self, arrow_id) -> Matrix:
        if isinstance(arrow_id, TailArrow) and arrow_id.depth > self.depths[arrow_id.tail]:
            return Matrix.identity(self.tags[arrow_id.tail])
        return self.maps[arrow_id]

    def path_map(self, path: Sequence) -> Matrix:
        """Matrix of a path given as arrow ids in traversal order."""
        if not path:
            raise ValueError("use an explicit identity for trivial paths")
        out = self.map(path[0])
        for a in path[1:]:
            out = self.map(a) @ out
        return out

    @property
    def is_zero(self) -> bool:
        return not any(self.dims.values()) and not any(self.tags)

    @property
    def is_finite_dimensional(self) -> bool:
        return not any(self.tags)

    def total_dim(self) -> int | None:
        """Total dimension, or ``None`` when infinite."""
        return sum(self.dims.values()) if self.is_finite_dimensional else None

    def dim_vector(self, depths: Sequence[int] | None = None) -> dict:
        """Dimensions on the window with the given depths (default: own window)."""
        win = Window(self.qp, depths if depths is not None else self.depths)
        return {v: self.dim(v) for v in win.vertices}

    def support(self) -> list:
        return [v for v, d in self.dims.items() if d]

    # -- window changes ---------------------------------------------------

    def extend(self, depths: Sequence[int]) -> "StableRep":
        depths = tuple(max(a, b) for a, b in zip(self.depths, depths))
        if depths == self.depths:
            return self
        dims = dict(self.dims)
        maps = dict(self.maps)
        for k, (old, new) in enumerate(zip(self.depths, depths)):
            m = self.tags[k]
            for i in range(old + 1, new + 1):
                dims[TailVertex(k, i)] = m
                maps[TailArrow(k, i)] = Matrix.identity(m)
        return StableRep(self.qp, depths, dims, maps, self.tags, check=False)

    def enlarged(self, extra: int) -> "StableRep":
        return self.extend(tuple(d + extra for d in self.depths))

    def trimmed(self) -> "StableRep":
        """Same representation on the smallest admissible window."""
        depths = tuple(max(1, s + 1) for s in self.stab_depths)
        if depths == self.depths:
            return self
        keep = Window(self.qp, depths)
        dims = {v: self.dims[v] for v in keep.vertices}
        maps = {a.id: self.maps[a.id] for a in keep.arrows}
        return StableRep(self.qp, depths, dims, maps, self.tags, check=False)

    def restricted_to(self, depths: Sequence[int]) -> "StableRep":
        """Cut to a window that must still contain the stable region."""
        depths = tuple(depths)
        win = Window(self.qp, depths)
        rep = self.extend(depths)
        dims = {v: rep.dims[v] for v in win.vertices}
        maps = {a.id: rep.maps[a.id] for a in win.arrows}
        return StableRep(self.qp, depths, dims, maps, self.tags)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StableRep):
            return NotImplemented
        if self.qp != other.qp or self.tags != other.tags:
            return False
        a, b = common_extension(self, other)
        return a.dims == b.dims and a.maps == b.maps

    __hash__ = None

    def __repr__(self) -> str:
        dims = ", ".join(f"{v}:{d}" for v, d in self.dims.items() if d)
        tags = ", ".join(tag_label(m) for m in self.tags)
        return f"StableRep(dims={{{dims}}}, tags=[{tags}])"


def common_depths(*reps: StableRep) -> tuple[int, ...]:
    qp = reps[0].qp
    for r in reps[1:]:
        if r.qp != qp:
            raise ValueError("representations live on different quivers")
    if not qp.tails:
        return ()
    return tuple(max(ds) for ds in zip(*(r.depths for r in reps)))


def common_extension(*reps: StableRep) -> list[StableRep]:
    depths = common_depths(*reps)
    return [r.extend(depths) for r in reps]


def build_rep(
    qp: QuiverPresentation,
    depths: Sequence[int],
    dims: Mapping,
    maps: Mapping,
    tags: Sequence[int],
) -> StableRep:
    """Validate and trim; the usual way constructors return results."""
    return StableRep(qp, depths, dims, maps, tags).trimmed()


# -- paths and projectives --------------------------------------------------


def _generous_depths(qp: QuiverPresentation, *anchors) -> tuple[int, ...]:
    extra = [0] * len(qp.tails)
    for v in anchors:
        if isinstance(v, TailVertex):
            extra[v.tail] = max(extra[v.tail], v.depth)
    return tuple(max(e, t.settle_depth) + len(t.period) + 2 for e, t in zip(extra, qp.tails))


def path_basis(qp: QuiverPresentation, a, depths: Sequence[int]) -> dict:
    """Directed paths from ``a`` to each window vertex, in a fixed order.

    Paths are tuples of arrow ids.  The order is inherited along arrows, so a
    vertex with a single incoming arrow lists its paths in the same order as
    the tail of that arrow.
    """
    win = Window(qp, depths)
    q = win.quiver
    order = q.topological_order()
    out = {v: [] for v in q.vertices}
    out[a] = [()]
    for v in order:
        if v == a:
            continue
        acc = []
        for arr in q.in_arrows(v):
            acc.extend(p + (arr.id,) for p in out[arr.source])
        out[v] = acc
    return out


def _path_rep(qp: QuiverPresentation, a, depths: Sequence[int], basis: dict) -> StableRep:
    win = Window(qp, depths)
    dims = {v: len(ps) for v, ps in basis.items()}
    maps = {}
    for arr in win.arrows:
        src = {p: i for i, p in enumerate(basis[arr.source])}
        tgt = {p: i for i, p in enumerate(basis[arr.target])}
        rows = [[ZERO] * len(src) for _ in tgt]
        for p, j in src.items():
            rows[tgt[p + (arr.id,)]][j] = ONE
        maps[arr.id] = Matrix(rows, len(src))
    tags = [dims[TailVertex(k, d)] for k, d in enumerate(depths)]
    return StableRep(qp, depths, dims, maps, tags)


def projective_at(qp: QuiverPresentation, a) -> StableRep:
    """The indecomposable projective ``P_a``: paths out of ``a``."""
    a = _vertex(qp, a)
    depths = _generous_depths(qp, a)
    return _path_rep(qp, a, depths, path_basis(qp, a, depths)).trimmed()


def injective_at(qp: QuiverPresentation, a) -> StableRep:
    """The indecomposable injective ``I_a``: dual of paths into ``a``."""
    return dualize(projective_at(qp.opposite(), a))


def simple_at(qp: QuiverPresentation, a) -> StableRep:
    a = _vertex(qp, a)
    depths = [2] * len(qp.tails)
    if isinstance(a, TailVertex):
        depths[a.tail] = a.depth + 2
    return build_rep(qp, depths, {a: 1}, {}, [0] * len(qp.tails))


def _vertex(qp: QuiverPresentation, a):
    try:
        a = resolve_vertex(qp, a)
    except KeyError:
        raise KeyError(f"unknown vertex {a!r}") from None
    if not qp.has_vertex(a):
        raise KeyError(f"unknown vertex {a!r}")
    return a


# -- thin representations -----------------------------------------------------


def thin_rep(
    qp: QuiverPresentation,
    depths: Sequence[int],
    support: Iterable,
    arrows: Iterable | None = None,
    stable_tails: Iterable[int] = (),
) -> StableRep:
    """Dimension 1 on ``support``; arrows in ``arrows`` act as 1, other arrows as 0.

    ``arrows`` defaults to every window arrow with both ends in the support.
    """
    win = Window(qp, depths)
    support = set(support)
    inside = [a for a in win.arrows if a.source in support and a.target in support]
    active = {a.id for a in inside} if arrows is None else set(arrows)
    maps = {a.id: Matrix([[ONE if a.id in active else ZERO]], 1) for a in inside}
    stable = set(stable_tails)
    tags = [1 if k in stable else 0 for k in range(len(qp.tails))]
    return build_rep(qp, depths, {v: 1 for v in support}, maps, tags)


def walk_rep(qp: QuiverPresentation, w: Walk) -> StableRep:
    """The thin representation ``M(w)`` of a simple walk."""
    if w.qp != qp:
        raise ValueError("walk belongs to a different quiver")
    if not w.is_simple:
        raise ValueError("walk representations need a simple walk")
    reach = w.reach()
    depths = []
    for k in range(len(qp.tails)):
        d = reach[k] + 2
        for end, v in ((w.tail_in, w.start), (w.tail_out, w.end)):
            if end == k:
                d = max(d, (v.depth if isinstance(v, TailVertex) else 0) + 2)
        depths.append(d)
    stable = [k for k in (w.tail_in, w.tail_out) if k is not None]
    return thin_rep(qp, depths, w.support(depths), w.arrows_used(depths), stable)


# -- duality and sums ---------------------------------------------------------


def dualize(m: StableRep) -> StableRep:
    """Vector-space dual, living on the opposite quiver; matrices are transposed."""
    maps = {a: mat.T for a, mat in m.maps.items()}
    return StableRep(m.qp.opposite(), m.depths, m.dims, maps, m.tags, check=False)


def direct_sum(*reps: StableRep) -> StableRep:
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    reps = common_extension(*reps)
    first = reps[0]
    dims = {v: sum(r.dims[v] for r in reps) for v in first.dims}
    maps = {a: block_diag([r.maps[a] for r in reps]) for a in first.maps}
    tags = [sum(r.tags[k] for r in reps) for k in range(len(first.tags))]
    return StableRep(first.qp, first.depths, dims, maps, tags).trimmed()


def zero_rep(qp: QuiverPresentation) -> StableRep:
    return StableRep(qp, [1] * len(qp.tails), {}, {}, [0] * len(qp.tails))


def eventual_direction_ok(rep: StableRep, k: int, direction: str) -> bool:
    """True when tail ``k`` is eventually zero or eventually points ``direction``."""
    return rep.tags[k] == 0 or rep.qp.tails[k].eventual_direction == direction
