"""Finite encodings of strongly locally finite quivers.

A :class:`QuiverPresentation` is a finite acyclic *core* plus finitely many
linear *tails*.  Tail ``k`` hangs off a core vertex and has vertices
``TailVertex(k, 1), TailVertex(k, 2), ...``; the edge between depth ``d-1`` and
depth ``d`` is ``TailArrow(k, d)``.  Its direction is read from an eventually
periodic word over ``O`` (points away from the core) and ``I`` (points toward
the core).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Sequence

OUT = "O"
IN = "I"


class QuiverStructureError(ValueError):
    """Malformed input: something that cannot even be checked for validity."""


class InvalidPresentation(ValueError):
    """A presentation failed :func:`validate_presentation` where validity is required."""


class TailVertex(NamedTuple):
    tail: int
    depth: int

    def __str__(self) -> str:
        return f"@{self.tail}:{self.depth}"


class TailArrow(NamedTuple):
    tail: int
    depth: int

    def __str__(self) -> str:
        return f"@{self.tail}:{self.depth}"


def parse_tail_ref(text: str) -> tuple[int, int] | None:
    """``"@k:d"`` -> ``(k, d)``; ``None`` for anything else."""
    if not isinstance(text, str) or not text.startswith("@"):
        return None
    try:
        k, d = text[1:].split(":")
        return int(k), int(d)
    except ValueError:
        return None


def vertex_key(v) -> str:
    return str(v)


@dataclass(frozen=True)
class Arrow:
    id: Hashable
    source: Hashable
    target: Hashable


@dataclass(frozen=True)
class FiniteQuiver:
    vertices: tuple = ()
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))

    @cached_property
    def _out(self) -> dict:
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out.setdefault(a.source, []).append(a)
        return out

    @cached_property
    def _in(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc.setdefault(a.target, []).append(a)
        return inc

    @cached_property
    def arrow_by_id(self) -> dict:
        return {a.id: a for a in self.arrows}

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def out_arrows(self, v) -> list[Arrow]:
        return self._out.get(v, [])

    def in_arrows(self, v) -> list[Arrow]:
        return self._in.get(v, [])

    def neighbours(self, v) -> list:
        return [a.target for a in self.out_arrows(v)] + [a.source for a in self.in_arrows(v)]

    def degree(self, v) -> int:
        return len(self.out_arrows(v)) + len(self.in_arrows(v))

    def topological_order(self) -> list | None:
        """Kahn order of the vertices, or ``None`` if there is a directed cycle."""
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for a in self.out_arrows(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
        return order if len(order) == len(self.vertices) else None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def paths(self, source, target) -> list[tuple]:
        """All directed paths ``source -> target`` as tuples of arrow ids."""
        out = []

        def walk(v, acc):
            if v == target:
                out.append(tuple(acc))
            for a in self.out_arrows(v):
                walk(a.target, acc + [a.id])

        walk(source, [])
        return out

    def opposite(self) -> "FiniteQuiver":
        return FiniteQuiver(self.vertices, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))


def _primitive_root(word: str) -> str:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


def normalize_word(preperiod: str, period: str) -> tuple[str, str]:
    """Minimal preperiod and minimal period describing ``preperiod + period^inf``."""
    if not period:
        raise QuiverStructureError("tail period must be nonempty")
    period = _primitive_root(period)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1] + period[:-1]
    return preperiod, period


@dataclass(frozen=True)
class TailSpec:
    attach: Hashable
    preperiod: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise QuiverStructureError("tail period must be nonempty")
        bad = set(self.preperiod + self.period) - {OUT, IN}
        if bad:
            raise QuiverStructureError(f"tail word letters must be 'O' or 'I', got {sorted(bad)}")

    def direction(self, depth: int) -> str:
        """Direction of the edge between depth ``depth-1`` and ``depth`` (``depth >= 1``)."""
        if depth < 1:
            raise ValueError("tail edges start at depth 1")
        i = depth - 1
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def normalized(self) -> "TailSpec":
        return TailSpec(self.attach, *normalize_word(self.preperiod, self.period))

    @property
    def is_normalized(self) -> bool:
        return (self.preperiod, self.period) == normalize_word(self.preperiod, self.period)

    @property
    def eventual_direction(self) -> str | None:
        """``'O'`` or ``'I'`` if the word is eventually constant, else ``None``."""
        p = _primitive_root(self.period)
        return p if len(p) == 1 else None

    @property
    def settle_depth(self) -> int:
        """Depth after which the edge pattern is purely periodic."""
        return len(self.preperiod)

    def opposite(self) -> "TailSpec":
        flip = str.maketrans({OUT: IN, IN: OUT})
        return TailSpec(self.attach, self.preperiod.translate(flip), self.period.translate(flip))


@dataclass(frozen=True)
class QuiverPresentation:
    core: FiniteQuiver
    tails: tuple[TailSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tails", tuple(self.tails))
        known = set(self.core.vertices)
        for a in self.core.arrows:
            for end in (a.source, a.target):
                if end not in known:
                    raise QuiverStructureError(f"arrow {a.id!r} has dangling endpoint {end!r}")

    @property
    def is_finite(self) -> bool:
        return not self.tails

    def opposite(self) -> "QuiverPresentation":
        return QuiverPresentation(self.core.opposite(), tuple(t.opposite() for t in self.tails))

    def normalized(self) -> "QuiverPresentation":
        return QuiverPresentation(self.core, tuple(t.normalized() for t in self.tails))

    def has_vertex(self, v) -> bool:
        if isinstance(v, TailVertex):
            return 0 <= v.tail < len(self.tails) and v.depth >= 1
        return v in self.core.index

    def tail_of(self, v) -> tuple[int, int] | None:
        return (v.tail, v.depth) if isinstance(v, TailVertex) else None

    def tail_vertex(self, k: int, depth: int):
        """Vertex at ``depth`` on tail ``k``; depth 0 is the attachment vertex."""
        return self.tails[k].attach if depth == 0 else TailVertex(k, depth)

    def tail_arrow(self, k: int, depth: int) -> Arrow:
        lo, hi = self.tail_vertex(k, depth - 1), TailVertex(k, depth)
        if self.tails[k].direction(depth) == OUT:
            return Arrow(TailArrow(k, depth), lo, hi)
        return Arrow(TailArrow(k, depth), hi, lo)

    def arrow(self, arrow_id) -> Arrow:
        if isinstance(arrow_id, TailArrow):
            return self.tail_arrow(arrow_id.tail, arrow_id.depth)
        try:
            return self.core.arrow_by_id[arrow_id]
        except KeyError:
            raise KeyError(f"unknown arrow {arrow_id!r}") from None

    def incident_arrows(self, v) -> list[Arrow]:
        """All arrows of the infinite quiver touching ``v``."""
        if isinstance(v, TailVertex):
            return [self.tail_arrow(v.tail, v.depth), self.tail_arrow(v.tail, v.depth + 1)]
        arrows = list(self.core.out_arrows(v)) + list(self.core.in_arrows(v))
        for k, t in enumerate(self.tails):
            if t.attach == v:
                arrows.append(self.tail_arrow(k, 1))
        return arrows

    def out_arrows(self, v) -> list[Arrow]:
        return [a for a in self.incident_arrows(v) if a.source == v]

    def in_arrows(self, v) -> list[Arrow]:
        return [a for a in self.incident_arrows(v) if a.target == v]

    def materialize(self, depths: Sequence[int]) -> FiniteQuiver:
        depths = tuple(depths)
        cache = self.__dict__.setdefault("_materialized", {})
        if depths not in cache:
            cache[depths] = self._materialize(depths)
        return cache[depths]

    def _materialize(self, depths: tuple[int, ...]) -> FiniteQuiver:
        vertices = list(self.core.vertices)
        arrows = list(self.core.arrows)
        for k, d in enumerate(depths):
            for i in range(1, d + 1):
                vertices.append(TailVertex(k, i))
                arrows.append(self.tail_arrow(k, i))
        return FiniteQuiver(tuple(vertices), tuple(arrows))


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


def validate_presentation(qp: QuiverPresentation) -> ValidationReport:
    """Collect every semantic problem with ``qp``.

    Validity means the core is a finite acyclic quiver with unique identifiers,
    each tail hangs off a core vertex and has a normalized word.  Linear tails
    attached at single vertices then make the whole quiver locally finite and
    interval finite.
    """
    out: list[Violation] = []
    seen = set()
    for v in qp.core.vertices:
        if v in seen:
            out.append(Violation("duplicate_vertex", f"vertex {v!r} appears more than once"))
        seen.add(v)
        if isinstance(v, str) and v.startswith("@"):
            out.append(Violation("reserved_identifier", f"vertex {v!r} uses the reserved '@' prefix"))
    seen_arrows = set()
    for a in qp.core.arrows:
        if a.id in seen_arrows:
            out.append(Violation("duplicate_arrow", f"arrow {a.id!r} appears more than once"))
        seen_arrows.add(a.id)
        if isinstance(a.id, str) and a.id.startswith("@"):
            out.append(Violation("reserved_identifier", f"arrow {a.id!r} uses the reserved '@' prefix"))
    if qp.core.topological_order() is None:
        out.append(Violation("directed_cycle", "the core contains an oriented cycle"))
    for k, t in enumerate(qp.tails):
        if t.attach not in seen:
            out.append(Violation("missing_attachment", f"tail {k} attaches to unknown vertex {t.attach!r}"))
        if not t.is_normalized:
            pre, per = normalize_word(t.preperiod, t.period)
            out.append(
                Violation(
                    "non_normalized_word",
                    f"tail {k} word ({t.preperiod!r}, {t.period!r}) should be ({pre!r}, {per!r})",
                )
            )
    return ValidationReport(tuple(out))


def require_valid(qp: QuiverPresentation) -> None:
    report = validate_presentation(qp)
    if not report.valid:
        raise InvalidPresentation("; ".join(v.detail for v in report.violations))


# -- windows ----------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    """Core plus every tail cut at its own depth; always full and convex."""

    qp: QuiverPresentation
    depths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "depths", tuple(int(d) for d in self.depths))
        if len(self.depths) != len(self.qp.tails):
            raise ValueError(f"need one depth per tail ({len(self.qp.tails)}), got {len(self.depths)}")
        if any(d < 1 for d in self.depths):
            raise ValueError("window depths must be at least 1")

    @cached_property
    def quiver(self) -> FiniteQuiver:
        return self.qp.materialize(self.depths)

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def boundary(self) -> tuple[TailVertex, ...]:
        return tuple(TailVertex(k, d) for k, d in enumerate(self.depths))

    def contains(self, v) -> bool:
        if isinstance(v, TailVertex):
            return 0 <= v.tail < len(self.depths) and 1 <= v.depth <= self.depths[v.tail]
        return v in self.qp.core.index

    def grow(self, depths: Sequence[int]) -> "Window":
        return Window(self.qp, tuple(max(a, b) for a, b in zip(self.depths, depths)))

    def enlarged(self, extra: int) -> "Window":
        return Window(self.qp, tuple(d + extra for d in self.depths))


def materialize_window(qp: QuiverPresentation, depths: Sequence[int]) -> Window:
    require_valid(qp)
    for d in depths:
        if d < 1:
            raise ValueError("window depth must be at least 1")
    return Window(qp, tuple(depths))


def common_window(*windows: Window) -> Window:
    qp = windows[0].qp
    for w in windows[1:]:
        if w.qp != qp:
            raise ValueError("windows belong to different quivers")
    depths = tuple(max(ds) for ds in zip(*(w.depths for w in windows))) if qp.tails else ()
    return Window(qp, depths)


# -- classification ---------------------------------------------------------


class Dynkin(str, Enum):
    A_INF = "A_inf"
    D_INF = "D_inf"
    A_INF_INF = "A_inf_inf"
    NONE = "none"


@dataclass(frozen=True)
class StarWitness:
    gamma: Window | None
    gamma_depths: tuple[int, ...]
    ray_roots: tuple  # S(->): vertices of Gamma where a ray starts
    coray_roots: tuple  # (->)S: vertices of Gamma where a coray ends

    def to_json(self) -> dict:
        return {
            "gamma_depths": list(self.gamma_depths),
            "ray_roots": [str(v) for v in self.ray_roots],
            "coray_roots": [str(v) for v in self.coray_roots],
        }


@dataclass(frozen=True)
class ClassificationReport:
    is_star: bool
    dynkin: Dynkin
    has_infinite_sourced_paths: bool
    has_infinite_sinked_paths: bool
    star_witness: StarWitness | None = None

    def to_json(self) -> dict:
        return {
            "star": self.is_star,
            "dynkin": self.dynkin.value,
            "sourced": self.has_infinite_sourced_paths,
            "sinked": self.has_infinite_sinked_paths,
        }


def _underlying_degrees(qp: QuiverPresentation) -> dict:
    deg = {v: qp.core.degree(v) for v in qp.core.vertices}
    for t in qp.tails:
        deg[t.attach] += 1
    return deg


def _core_is_forest(qp: QuiverPresentation) -> bool:
    # Connected core: tree iff |E| = |V| - 1 (parallel arrows count as cycles).
    return len(qp.core.arrows) == len(qp.core.vertices) - 1


def dynkin_type(qp: QuiverPresentation) -> Dynkin:
    """Infinite Dynkin type read off the underlying graph (orientation ignored)."""
    if not _core_is_forest(qp):
        return Dynkin.NONE
    deg = _underlying_degrees(qp)
    n_tails = len(qp.tails)
    # tail vertices all have degree 2, so only core degrees matter
    if max(deg.values()) <= 2:
        if n_tails == 1:
            return Dynkin.A_INF
        if n_tails == 2:
            return Dynkin.A_INF_INF
        return Dynkin.NONE
    if n_tails != 1:
        return Dynkin.NONE
    branch = [v for v, d in deg.items() if d >= 3]
    if len(branch) != 1 or deg[branch[0]] != 3:
        return Dynkin.NONE
    b = branch[0]
    leaves = [w for w in qp.core.neighbours(b) if deg[w] == 1]
    return Dynkin.D_INF if len(leaves) >= 2 else Dynkin.NONE


def star_witness(qp: QuiverPresentation) -> StarWitness | None:
    """Gamma = core plus each tail's preperiod segment, or ``None`` if not a star quiver.

    When two tails would start at the same vertex of Gamma, the colliding tails
    are pushed one step further out so the roots stay distinct.
    """
    if any(t.eventual_direction is None for t in qp.tails):
        return None
    depths = [t.settle_depth for t in qp.tails]
    while True:
        roots = [qp.tail_vertex(k, d) for k, d in enumerate(depths)]
        clash = {r for r in roots if roots.count(r) > 1}
        if not clash:
            break
        for k, r in enumerate(roots):
            if r in clash:
                depths[k] += 1
    rays = tuple(r for r, t in zip(roots, qp.tails) if t.eventual_direction == OUT)
    corays = tuple(r for r, t in zip(roots, qp.tails) if t.eventual_direction == IN)
    gamma = Window(qp, tuple(depths)) if all(d >= 1 for d in depths) else None
    return StarWitness(gamma, tuple(depths), rays, corays)


def classify_quiver(qp: QuiverPresentation) -> ClassificationReport:
    require_valid(qp)
    if not qp.tails:
        raise ValueError("classification targets infinite quivers; this presentation has no tails")
    if not qp.core.is_connected():
        raise ValueError("quiver is disconnected; split it into components first")
    eventual = [t.eventual_direction for t in qp.tails]
    witness = star_witness(qp)
    return ClassificationReport(
        is_star=witness is not None,
        dynkin=dynkin_type(qp),
        has_infinite_sourced_paths=OUT in eventual,
        has_infinite_sinked_paths=IN in eventual,
        star_witness=witness,
    )


def check_star_definition(qp: QuiverPresentation, gamma_depths: Sequence[int], extra: int = 2) -> bool:
    """Literal check of the star-quiver definition on a finite window.

    Gamma consists of the core and tail ``k`` up to ``gamma_depths[k]``.  Every
    window vertex outside Gamma must sit on a ray (arrows pointing outward from
    its root) or a coray (arrows pointing inward), with distinct roots.
    """
    depths = [d + extra for d in gamma_depths]
    win = qp.materialize(depths)
    gamma = set(qp.core.vertices) | {TailVertex(k, i) for k, d in enumerate(gamma_depths) for i in range(1, d + 1)}
    roots = set()
    for k, d in enumerate(gamma_depths):
        root = qp.tail_vertex(k, d)
        if root not in gamma or root in roots:
            return False
        roots.add(root)
        dirs = {qp.tails[k].direction(i) for i in range(d + 1, depths[k] + 1)}
        if len(dirs) != 1:
            return False
    # Gamma must be convex: no path leaves Gamma and comes back.
    for v in win.vertices:
        if v in gamma:
            continue
        into = any(a.source in gamma for a in win.in_arrows(v))
        outof = any(a.target in gamma for a in win.out_arrows(v))
        if into and outof:
            return False
    return True


# -- walks --------------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    arrow: Hashable
    inverse: bool = False

    def __str__(self) -> str:
        return f"{self.arrow}^-1" if self.inverse else str(self.arrow)


@dataclass(frozen=True)
class Walk:
    """A walk ``... step_2 step_1`` starting at ``start``.

    ``tail_out`` makes the walk continue from its last vertex outward along that
    tail forever; ``tail_in`` makes it arrive from infinity along that tail
    before ``start``.  Both set gives a two-sided infinite walk.
    """

    qp: QuiverPresentation
    start: Hashable
    steps: tuple[Step, ...] = ()
    tail_in: int | None = None
    tail_out: int | None = None

    @cached_property
    def finite_vertices(self) -> tuple:
        vs = [self.start]
        v = self.start
        for s in self.steps:
            a = self.qp.arrow(s.arrow)
            t, h = (a.target, a.source) if s.inverse else (a.source, a.target)
            if t != v:
                raise ValueError(f"step {s} does not start at {v!r}")
            v = h
            vs.append(v)
        return tuple(vs)

    @property
    def end(self):
        return self.finite_vertices[-1]

    @property
    def is_infinite(self) -> bool:
        return self.tail_in is not None or self.tail_out is not None

    @property
    def is_reduced(self) -> bool:
        return all(
            not (a.arrow == b.arrow and a.inverse != b.inverse) for a, b in zip(self.steps, self.steps[1:])
        )

    def _end_depth(self, v, k: int) -> int | None:
        if v == self.qp.tails[k].attach:
            return 0
        if isinstance(v, TailVertex) and v.tail == k:
            return v.depth
        return None

    @property
    def is_simple(self) -> bool:
        vs = self.finite_vertices
        if len(set(vs)) != len(vs):
            return False
        if self.tail_in is not None and self.tail_in == self.tail_out:
            return False
        for k, v in ((self.tail_in, self.start), (self.tail_out, self.end)):
            if k is None:
                continue
            d0 = self._end_depth(v, k)
            if d0 is None:
                return False
            if any(isinstance(w, TailVertex) and w.tail == k and w.depth > d0 for w in vs):
                return False
        return True

    @property
    def ends_in_path(self) -> bool:
        """True when some infinite end is eventually a directed path (sourced or sinked)."""
        ends = [k for k in (self.tail_in, self.tail_out) if k is not None]
        return any(self.qp.tails[k].eventual_direction is not None for k in ends)

    def support(self, depths: Sequence[int]) -> set:
        """Walk vertices inside the window with the given tail depths."""
        vs = set(self.finite_vertices)
        for k, v in ((self.tail_in, self.start), (self.tail_out, self.end)):
            if k is not None:
                d0 = self._end_depth(v, k)
                vs.update(TailVertex(k, d) for d in range(d0 + 1, depths[k] + 1))
        return {v for v in vs if not isinstance(v, TailVertex) or v.depth <= depths[v.tail]}

    def arrows_used(self, depths: Sequence[int]) -> set:
        used = {s.arrow for s in self.steps}
        for k, v in ((self.tail_in, self.start), (self.tail_out, self.end)):
            if k is not None:
                d0 = self._end_depth(v, k)
                used.update(TailArrow(k, d) for d in range(d0 + 1, depths[k] + 1))
        return used

    def reach(self) -> list[int]:
        """Deepest finite-part depth on each tail (0 when untouched)."""
        out = [0] * len(self.qp.tails)
        for w in self.finite_vertices:
            if isinstance(w, TailVertex):
                out[w.tail] = max(out[w.tail], w.depth)
        return out


def _parse_step(qp: QuiverPresentation, s) -> Step:
    if isinstance(s, Step):
        return s
    if isinstance(s, tuple):
        arrow, sign = s
        return Step(_resolve_arrow_id(qp, arrow), sign in (-1, True, "-1"))
    if isinstance(s, str):
        inv = s.endswith("^-1")
        return Step(_resolve_arrow_id(qp, s[:-3] if inv else s), inv)
    raise QuiverStructureError(f"cannot read walk step {s!r}")


def _resolve_arrow_id(qp: QuiverPresentation, a):
    if isinstance(a, TailArrow):
        return a
    ref = parse_tail_ref(a) if isinstance(a, str) else None
    if ref is not None:
        return TailArrow(*ref)
    if a not in qp.core.arrow_by_id:
        raise QuiverStructureError(f"unknown arrow {a!r}")
    return a


def resolve_vertex(qp: QuiverPresentation, v):
    if isinstance(v, TailVertex):
        return v
    ref = parse_tail_ref(v) if isinstance(v, str) else None
    if ref is not None:
        return TailVertex(*ref)
    if v not in qp.core.index:
        raise KeyError(f"unknown vertex {v!r}")
    return v


def make_walk(
    qp: QuiverPresentation,
    steps: Iterable = (),
    *,
    start=None,
    tail_in: int | None = None,
    tail_out: int | None = None,
    simple: bool = True,
) -> Walk:
    """Build a walk from steps such as ``"a"``, ``"a^-1"``, ``("a", -1)`` or ``Step``.

    ``start`` may be omitted when there is at least one step.  With
    ``simple=True`` (the default) non-simple walks are rejected.
    """
    parsed = tuple(_parse_step(qp, s) for s in steps)
    for s in parsed:
        if isinstance(s.arrow, TailArrow) and not (0 <= s.arrow.tail < len(qp.tails) and s.arrow.depth >= 1):
            raise QuiverStructureError(f"unknown arrow {s.arrow}")
    if start is None:
        if not parsed:
            raise QuiverStructureError("an empty walk needs a start vertex")
        a = qp.arrow(parsed[0].arrow)
        start = a.target if parsed[0].inverse else a.source
    start = resolve_vertex(qp, start)
    for k in (tail_in, tail_out):
        if k is not None and not 0 <= k < len(qp.tails):
            raise QuiverStructureError(f"unknown tail {k}")
    w = Walk(qp, start, parsed, tail_in, tail_out)
    try:
        w.finite_vertices
    except ValueError as e:
        raise QuiverStructureError(str(e)) from None
    if simple and not w.is_simple:
        why = "not reduced" if not w.is_reduced else "repeats a vertex"
        raise ValueError(f"walk is not simple ({why})")
    return w


def ray_walk(qp: QuiverPresentation, tail: int, from_depth: int = 0) -> Walk:
    """The infinite walk leaving ``TailVertex(tail, from_depth)`` outward along ``tail``."""
    return make_walk(qp, start=qp.tail_vertex(tail, from_depth), tail_out=tail)
