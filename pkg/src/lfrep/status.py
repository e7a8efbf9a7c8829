"""Finitely generated / presented status, projective covers and rrep membership."""

from __future__ import annotations

from dataclasses import dataclass

from .homs import (
    RepMorphism,
    canonical_basis,
    find_isomorphism,
    morphism_parts,
    subrep,
    top_and_radical,
)
from .linalg import Matrix, hstack
from .quiver import IN, OUT, TailVertex
from .rep import (
    StableRep,
    _vertex,
    common_depths,
    common_extension,
    direct_sum,
    dualize,
    path_basis,
    projective_at,
    simple_at,
)


@dataclass(frozen=True)
class StatusFlags:
    fg: bool
    fp: bool
    fcg: bool
    fcp: bool

    def to_json(self) -> dict:
        return {"fg": self.fg, "fp": self.fp, "fcg": self.fcg, "fcp": self.fcp}

    def swapped(self) -> "StatusFlags":
        return StatusFlags(fg=self.fcg, fp=self.fcp, fcg=self.fg, fcp=self.fp)


def _tails_point(m: StableRep, direction: str) -> bool:
    return all(tag == 0 or t.eventual_direction == direction for tag, t in zip(m.tags, m.qp.tails))


def is_finitely_generated(m: StableRep) -> bool:
    """Every stable tail must eventually point away from the core."""
    return _tails_point(m, OUT)


def is_finitely_cogenerated(m: StableRep) -> bool:
    return _tails_point(m, IN)


def yoneda_morphism(p: StableRep, a, m: StableRep, x: Matrix) -> RepMorphism:
    """The morphism ``P_a -> M`` sending the trivial path to the column ``x`` of ``M(a)``."""
    p, m = common_extension(p, m)
    paths = path_basis(m.qp, a, p.depths)
    comps = {}
    for v in p.window.vertices:
        cols = []
        for path in paths[v]:
            cols.append((m.path_map(path) @ x).columns()[0] if path else x.columns()[0])
        comps[v] = Matrix.from_columns(cols, m.dims[v])
    return RepMorphism(p, m, comps, check=False)


@dataclass
class SimplePresentation:
    """``0 -> sum of P_h(alpha) -> P_a -> S_a -> 0`` over the arrows ``alpha`` leaving ``a``."""

    simple: StableRep
    projective: StableRep
    heads: list  # h(alpha) for each arrow alpha out of a, in arrow order
    kernel: StableRep
    inclusion: RepMorphism
    projection: RepMorphism

    def is_exact(self) -> bool:
        if not (self.inclusion.is_mono() and self.projection.is_epi()):
            return False
        if not self.inclusion.then(self.projection).is_zero():
            return False
        k, p, s = common_extension(self.kernel, self.projective, self.simple)
        return all(p.dims[v] == k.dims[v] + s.dims[v] for v in p.window.vertices)


def simple_presentation(qp, a) -> SimplePresentation:
    """The projective presentation of the simple at ``a``, with explicit morphisms."""
    a = _vertex(qp, a)
    out = qp.out_arrows(a)
    pa = projective_at(qp, a)
    heads = [arr.target for arr in out]
    projs = [projective_at(qp, b) for b in heads]
    s = simple_at(qp, a)
    depths = common_depths(pa, s, *projs)
    depths = tuple(d + 1 for d in depths)
    pa, s = pa.extend(depths), s.extend(depths)
    projection = yoneda_morphism(pa, a, s, Matrix([[1]], 1)).extend(depths)
    basis = path_basis(qp, a, depths)
    pieces = []
    for arr, p in zip(out, projs):
        x = Matrix([[1 if path == (arr.id,) else 0] for path in basis[arr.target]], 1)
        pieces.append(yoneda_morphism(p.extend(depths), arr.target, pa, x))
    if pieces:
        kernel = direct_sum(*(f.source for f in pieces)).extend(depths)
        comps = {w: hstack([f.comps[w] for f in pieces], pa.dims[w]) for w in pa.window.vertices}
    else:
        kernel = StableRep(qp, depths, {}, {}, [0] * len(qp.tails))
        comps = {w: Matrix.zeros(pa.dims[w], 0) for w in pa.window.vertices}
    inclusion = RepMorphism(kernel, pa, comps)
    return SimplePresentation(s, pa, heads, kernel, inclusion, projection)


@dataclass
class ProjectiveCover:
    cover: StableRep
    morphism: RepMorphism
    generators: list  # (vertex, column of M(vertex))


def projective_cover(m: StableRep) -> ProjectiveCover:
    """``sum P_v -> M`` over lifts of a basis of ``top M`` (vertex order, then coordinate).

    Only meaningful for finitely generated ``M``, where ``top M`` is finitely supported.
    """
    if not is_finitely_generated(m):
        raise ValueError("projective covers are built for finitely generated representations only")
    tr = top_and_radical(m)
    if any(tr.top.tags):
        raise ValueError("top is not finitely supported")
    gens = []
    for v in tr.top.window.vertices:
        lift = tr.lifts[v]
        for j in range(lift.ncols):
            gens.append((v, lift.select_columns([j])))
    if not gens:
        zero = StableRep(m.qp, m.depths, {}, {}, [0] * len(m.tags))
        return ProjectiveCover(zero, RepMorphism(zero, m, {}, check=False), [])
    projs = [projective_at(m.qp, v) for v, _ in gens]
    depths = common_depths(m, *projs)
    target = m.extend(depths)
    maps = [yoneda_morphism(p.extend(depths), v, target, x) for p, (v, x) in zip(projs, gens)]
    cover = direct_sum(*(f.source for f in maps)).extend(depths)
    comps = {w: hstack([f.comps[w] for f in maps], target.dims[w]) for w in target.window.vertices}
    return ProjectiveCover(cover, RepMorphism(cover, target, comps), [(v, x.columns()[0]) for v, x in gens])


def presentation_status(m: StableRep) -> StatusFlags:
    fg = is_finitely_generated(m)
    fcg = is_finitely_cogenerated(m)
    fp = fg and _kernel_of_cover_fg(m)
    fcp = fcg and _kernel_of_cover_fg(dualize(m))
    return StatusFlags(fg=fg, fp=fp, fcg=fcg, fcp=fcp)


def _kernel_of_cover_fg(m: StableRep) -> bool:
    pc = projective_cover(m)
    if not pc.morphism.is_epi():
        raise AssertionError("projective cover failed to be surjective")
    return is_finitely_generated(morphism_parts(pc.morphism).kernel)


def is_in_rrep(m: StableRep) -> bool:
    """Tail criterion: every stable tail must eventually keep a single direction."""
    return all(tag == 0 or t.eventual_direction is not None for tag, t in zip(m.tags, m.qp.tails))


@dataclass
class RrepWitness:
    """A finitely generated projective subrepresentation ``L`` with ``M/L`` finitely co-presented."""

    sub: StableRep
    inclusion: RepMorphism
    summands: list  # vertices v with L = sum of P_v


def rrep_witness(m: StableRep) -> RrepWitness | None:
    """Construct ``L`` as the image of rays started inside the stable region of outward tails.

    Returns ``None`` when no such construction applies (stable tails that never
    settle on one direction).
    """
    if not is_in_rrep(m):
        return None
    m = m.enlarged(1)
    spaces = {}
    summands = []
    for v in m.window.vertices:
        spaces[v] = Matrix.zeros(m.dims[v], 0)
    for k, (tag, t) in enumerate(zip(m.tags, m.qp.tails)):
        if tag == 0 or t.eventual_direction != OUT:
            continue
        # the edge into ``start`` must already point outward
        start = max(m.stab_depths[k], t.settle_depth + 1)
        for d in range(start, m.depths[k] + 1):
            spaces[TailVertex(k, d)] = Matrix.identity(tag)
        summands.extend([TailVertex(k, start)] * tag)
    sub, inc = subrep(m, {v: canonical_basis(s) for v, s in spaces.items()})
    return RrepWitness(sub.trimmed(), inc, summands)


def check_rrep_witness(m: StableRep, w: RrepWitness) -> bool:
    """``L`` is a sum of the named projectives and ``M/L`` is finitely co-presented."""
    if w.summands:
        proj = direct_sum(*(projective_at(m.qp, v) for v in w.summands))
    else:
        proj = StableRep(m.qp, [1] * len(m.tags), {}, {}, [0] * len(m.tags))
    if find_isomorphism(proj, w.sub) is None:
        return False
    quo = morphism_parts(w.inclusion).cokernel
    return presentation_status(quo).fcp


def projective_summands(k: StableRep) -> list | None:
    """If ``K`` is a finite sum of projectives ``P_b``, the list of the ``b``; else ``None``.

    Decided by building the projective cover from ``top K`` and checking that it
    is an isomorphism.
    """
    if not is_finitely_generated(k):
        return None
    pc = projective_cover(k)
    if not pc.morphism.is_iso():
        return None
    return [v for v, _ in pc.generators]
