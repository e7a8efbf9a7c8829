"""Morphisms, hom spaces, kernels and cokernels, endomorphism algebras."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    ZERO,
    Matrix,
    complement_basis,
    hstack,
    inverse,
    is_invertible,
    nullspace,
    rref,
    solve,
    sparse_nullspace,
)
from .quiver import TailVertex
from .rep import NotStableError, StableRep, common_depths, common_extension


class RepMorphism:
    """A family of matrices ``f_v: M(v) -> N(v)`` on a shared window.

    Beyond the window each tail component equals the boundary component; this
    is forced by commutation with the identity maps of the stable region.
    """

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: StableRep, target: StableRep, comps: Mapping, *, check: bool = True):
        if source.depths != target.depths:
            source, target = common_extension(source, target)
        self.source = source
        self.target = target
        full = {}
        for v in source.window.vertices:
            c = comps.get(v)
            full[v] = Matrix.zeros(target.dims[v], source.dims[v]) if c is None else c
        self.comps = full
        if check:
            problems = self.problems()
            if problems:
                raise ValueError("invalid morphism: " + "; ".join(problems))

    @property
    def depths(self) -> tuple[int, ...]:
        return self.source.depths

    def problems(self) -> list[str]:
        out = []
        M, N = self.source, self.target
        for v, c in self.comps.items():
            if c.shape != (N.dims[v], M.dims[v]):
                out.append(f"component at {v} has shape {c.shape}")
        if out:
            return out
        for a in M.window.arrows:
            if self.comps[a.target] @ M.maps[a.id] != N.maps[a.id] @ self.comps[a.source]:
                out.append(f"does not commute with arrow {a.id}")
        return out

    def component(self, v) -> Matrix:
        if isinstance(v, TailVertex) and v.depth > self.depths[v.tail]:
            return self.comps[TailVertex(v.tail, self.depths[v.tail])]
        return self.comps[v]

    def extend(self, depths: Sequence[int]) -> "RepMorphism":
        depths = tuple(max(a, b) for a, b in zip(self.depths, depths))
        if depths == self.depths:
            return self
        src, tgt = self.source.extend(depths), self.target.extend(depths)
        comps = {v: self.component(v) for v in src.window.vertices}
        return RepMorphism(src, tgt, comps, check=False)

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for v in self.source.window.vertices for x in self.comps[v].flat())

    def then(self, g: "RepMorphism") -> "RepMorphism":
        """The composite ``g . self``."""
        f = self
        depths = common_depths(f.source, f.target, g.source, g.target)
        f, g = f.extend(depths), g.extend(depths)
        if f.target.dims != g.source.dims:
            raise ValueError("morphisms are not composable")
        comps = {v: g.comps[v] @ f.comps[v] for v in f.comps}
        return RepMorphism(f.source, g.target, comps, check=False)

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        depths = common_depths(self.source, other.source)
        a, b = self.extend(depths), other.extend(depths)
        return RepMorphism(a.source, a.target, {v: a.comps[v] + b.comps[v] for v in a.comps}, check=False)

    def scale(self, c) -> "RepMorphism":
        return RepMorphism(self.source, self.target, {v: m.scale(c) for v, m in self.comps.items()}, check=False)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps.values())

    def is_mono(self) -> bool:
        return all(c.rank() == c.ncols for c in self.comps.values())

    def is_epi(self) -> bool:
        return all(c.rank() == c.nrows for c in self.comps.values())

    def is_iso(self) -> bool:
        return all(is_invertible(c) for c in self.comps.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMorphism):
            return NotImplemented
        depths = common_depths(self.source, other.source, self.target, other.target)
        a, b = self.extend(depths), other.extend(depths)
        return a.source == b.source and a.target == b.target and a.comps == b.comps

    __hash__ = None

    def __repr__(self) -> str:
        nz = ", ".join(f"{v}:{c!r}" for v, c in self.comps.items() if c.nrows and c.ncols)
        return f"RepMorphism({nz})"


def identity_morphism(m: StableRep) -> RepMorphism:
    return RepMorphism(m, m, {v: Matrix.identity(d) for v, d in m.dims.items()}, check=False)


def zero_morphism(m: StableRep, n: StableRep) -> RepMorphism:
    return RepMorphism(m, n, {}, check=False)


# -- hom spaces ----------------------------------------------------------------


@dataclass
class HomSpace:
    """Basis of ``Hom(M, N)`` computed on a common window.

    Each basis element has a 1 in one *free* coordinate and 0 in the others,
    so the coordinates of any morphism are its entries at the free positions.
    """

    source: StableRep
    target: StableRep
    basis: list[RepMorphism]
    free: list[int] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, f: RepMorphism) -> list[Fraction]:
        f = f.extend(self.source.depths)
        if f.depths != self.source.depths:
            raise ValueError("morphism lives on a larger window than the hom space")
        flat = f.flat()
        return [flat[i] for i in self.free]

    def combination(self, coeffs: Sequence) -> RepMorphism:
        comps = {v: Matrix.zeros(self.target.dims[v], self.source.dims[v]) for v in self.source.dims}
        for c, b in zip(coeffs, self.basis):
            if c:
                comps = {v: comps[v] + b.comps[v].scale(c) for v in comps}
        return RepMorphism(self.source, self.target, comps, check=False)


def _layout(m: StableRep, n: StableRep) -> tuple[dict, int]:
    offsets = {}
    pos = 0
    for v in m.window.vertices:
        offsets[v] = pos
        pos += n.dims[v] * m.dims[v]
    return offsets, pos


def hom_system(m: StableRep, n: StableRep) -> HomSpace:
    m, n = common_extension(m, n)
    offsets, nvars = _layout(m, n)
    if nvars == 0:
        return HomSpace(m, n, [], [])

    def var(v, i, j):
        return offsets[v] + i * m.dims[v] + j

    equations = []
    for a in m.window.arrows:
        c, d = a.source, a.target
        ma, na = m.maps[a.id], n.maps[a.id]
        for i in range(n.dims[d]):
            for j in range(m.dims[c]):
                eq: dict[int, Fraction] = {}
                # (f_d M(a))[i, j]
                for k in range(m.dims[d]):
                    x = ma.rows[k][j]
                    if x:
                        key = var(d, i, k)
                        eq[key] = eq.get(key, ZERO) + x
                # -(N(a) f_c)[i, j]
                for k in range(n.dims[c]):
                    x = na.rows[i][k]
                    if x:
                        key = var(c, k, j)
                        eq[key] = eq.get(key, ZERO) - x
                if eq:
                    equations.append(eq)
    vectors, free = sparse_nullspace(equations, nvars, with_free=True)
    basis = []
    for vec in vectors:
        comps = {}
        for v in m.window.vertices:
            r, s = n.dims[v], m.dims[v]
            o = offsets[v]
            comps[v] = Matrix._make(tuple(tuple(vec[o + i * s : o + (i + 1) * s]) for i in range(r)), s)
        basis.append(RepMorphism(m, n, comps, check=False))
    return HomSpace(m, n, basis, free)


def hom_space(m: StableRep, n: StableRep) -> list[RepMorphism]:
    """Exact basis of ``Hom(M, N)``."""
    return hom_system(m, n).basis


def hom_dim(m: StableRep, n: StableRep) -> int:
    return len(hom_system(m, n).basis)


# -- kernels, images, cokernels --------------------------------------------------


def canonical_basis(cols: Matrix) -> Matrix:
    """Reduced basis of the column space; depends only on the subspace."""
    if cols.ncols == 0:
        return Matrix.zeros(cols.nrows, 0)
    red, _ = rref(cols.T)
    return Matrix.from_columns(red, cols.nrows)


def subrep(m: StableRep, spaces: Mapping) -> tuple[StableRep, RepMorphism]:
    """Subrepresentation spanned by column bases ``spaces[v]``; returns it with its inclusion.

    The bases must be closed under the arrow maps and constant at the last two
    window vertices of each tail.
    """
    dims = {v: spaces[v].ncols for v in m.window.vertices}
    maps = {}
    for a in m.window.arrows:
        x = solve(spaces[a.target], m.maps[a.id] @ spaces[a.source])
        if x is None:
            raise ValueError(f"subspaces are not closed under arrow {a.id}")
        maps[a.id] = x
    tags = [dims[v] for v in m.window.boundary]
    sub = StableRep(m.qp, m.depths, dims, maps, tags)
    return sub, RepMorphism(sub, m, dict(spaces), check=False)


def quotient(m: StableRep, spaces: Mapping) -> tuple[StableRep, RepMorphism]:
    """Quotient by the subrepresentation spanned by ``spaces``, with its projection."""
    lifts, proj = {}, {}
    for v in m.window.vertices:
        u = spaces[v]
        q = complement_basis(u)
        n = m.dims[v]
        if n == 0:
            lifts[v], proj[v] = q, Matrix.zeros(0, 0)
            continue
        full = inverse(hstack([u, q], n))
        proj[v] = full.select_rows(range(u.ncols, n))
        lifts[v] = q
    dims = {v: lifts[v].ncols for v in m.window.vertices}
    maps = {a.id: proj[a.target] @ m.maps[a.id] @ lifts[a.source] for a in m.window.arrows}
    tags = [dims[v] for v in m.window.boundary]
    quo = StableRep(m.qp, m.depths, dims, maps, tags)
    return quo, RepMorphism(m, quo, proj, check=False)


@dataclass
class MorphismParts:
    kernel: StableRep
    kernel_inclusion: RepMorphism
    image: StableRep
    image_inclusion: RepMorphism
    coimage_projection: RepMorphism
    cokernel: StableRep
    cokernel_projection: RepMorphism


def morphism_parts(f: RepMorphism) -> MorphismParts:
    """Kernel, image and cokernel of ``f`` with their canonical morphisms.

    Work one step beyond the given window so that every subspace family is
    already constant on the last two window vertices.
    """
    f = f.extend(tuple(d + 1 for d in f.depths))
    M, N = f.source, f.target
    ker = {v: canonical_basis(nullspace(c)) for v, c in f.comps.items()}
    img = {v: canonical_basis(c) for v, c in f.comps.items()}
    K, k_inc = subrep(M, ker)
    I, i_inc = subrep(N, img)
    coim = {}
    for v, c in f.comps.items():
        x = solve(img[v], c)
        coim[v] = x
    C, c_proj = quotient(N, img)
    return MorphismParts(
        kernel=K,
        kernel_inclusion=k_inc,
        image=I,
        image_inclusion=i_inc,
        coimage_projection=RepMorphism(M, I, coim, check=False),
        cokernel=C,
        cokernel_projection=c_proj,
    )


def kernel(f: RepMorphism) -> StableRep:
    return morphism_parts(f).kernel.trimmed()


def cokernel(f: RepMorphism) -> StableRep:
    return morphism_parts(f).cokernel.trimmed()


# -- radical and top -----------------------------------------------------------


@dataclass
class TopRadical:
    radical: StableRep
    inclusion: RepMorphism
    top: StableRep
    projection: RepMorphism
    lifts: dict  # vertex -> columns in M(v) lifting a basis of top(v)


def top_and_radical(m: StableRep) -> TopRadical:
    """``rad M`` is the sum of images of incoming arrows; ``top M = M / rad M``.

    Raises:
        NotStableError: a stable tail changes direction forever, so the radical
            alternates between full and zero and leaves the stable model.
    """
    for k, t in enumerate(m.qp.tails):
        if m.tags[k] and t.eventual_direction is None:
            raise NotStableError(f"radical is not eventually constant along tail {k}")
    m = m.enlarged(1)
    spaces = {}
    boundary = set(m.window.boundary)
    for v in m.window.vertices:
        images = [m.maps[a.id] for a in m.window.quiver.in_arrows(v)]
        if v in boundary and m.tags[v.tail] and m.qp.tails[v.tail].direction(v.depth + 1) == "I":
            images.append(Matrix.identity(m.dims[v]))
        cols = hstack(images, m.dims[v]) if images else Matrix.zeros(m.dims[v], 0)
        spaces[v] = canonical_basis(cols)
    rad, inc = subrep(m, spaces)
    top, proj = quotient(m, spaces)
    lifts = {v: complement_basis(spaces[v]) for v in m.window.vertices}
    return TopRadical(rad, inc, top, proj, lifts)


# -- endomorphisms, indecomposability, isomorphism -----------------------------


def _coords_in(space: HomSpace, f: RepMorphism) -> list[Fraction]:
    flat = f.flat()
    return [flat[i] for i in space.free]


def structure_constants(space: HomSpace) -> list[list[list[Fraction]]]:
    """``c[i][j]`` = coordinates of ``b_i . b_j`` (apply ``b_j`` first)."""
    b = space.basis
    return [[_coords_in(space, b[j].then(b[i])) for j in range(len(b))] for i in range(len(b))]


def endomorphism_radical_rank(m: StableRep) -> tuple[int, int]:
    """``(dim End M, dim End M / J)`` with ``J`` the radical of the trace form.

    Over a field of characteristic zero, the radical of ``(x, y) -> tr(L_{xy})``
    is the Jacobson radical of the algebra.
    """
    space = hom_system(m, m)
    d = space.dim
    if d == 0:
        return 0, 0
    c = structure_constants(space)
    traces = [sum(c[i][j][j] for j in range(d)) for i in range(d)]
    gram = Matrix([[sum(c[i][j][k] * traces[k] for k in range(d)) for j in range(d)] for i in range(d)], d)
    return d, gram.rank()


def is_indecomposable(m: StableRep) -> bool:
    """True when ``End(M)`` is local; the zero representation is not indecomposable."""
    if m.is_zero:
        return False
    _, top = endomorphism_radical_rank(m)
    return top == 1


def endomorphism_radical_basis(m: StableRep) -> list[RepMorphism]:
    space = hom_system(m, m)
    d = space.dim
    if d == 0:
        return []
    c = structure_constants(space)
    traces = [sum(c[i][j][j] for j in range(d)) for i in range(d)]
    gram = Matrix([[sum(c[i][j][k] * traces[k] for k in range(d)) for j in range(d)] for i in range(d)], d)
    return [space.combination(col) for col in nullspace(gram).columns()]


def find_isomorphism(m: StableRep, n: StableRep, *, tries: int = 4, seed: int = 0) -> RepMorphism | None:
    """An isomorphism ``M -> N`` or ``None``.

    A random combination of a hom basis is invertible with high probability
    whenever any element is; a few seeded tries make failure negligible.
    """
    if m.qp != n.qp or m.tags != n.tags:
        return None
    m, n = common_extension(m, n)
    if m.dims != n.dims:
        return None
    space = hom_system(m, n)
    if not space.basis:
        return None if not m.is_zero else identity_morphism(m)
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [Fraction(rng.randint(-10**6, 10**6)) for _ in space.basis]
        f = space.combination(coeffs)
        if f.is_iso():
            return f
    return None


def is_isomorphic(m: StableRep, n: StableRep) -> bool:
    return find_isomorphism(m, n) is not None
