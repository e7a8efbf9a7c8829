"""Brute-force Auslander-Reiten data for finite quivers of type A.

The indecomposables of a linear quiver are exactly its interval modules, so
the catalog below is complete without any Auslander-Reiten machinery.  Hom
spaces, radicals and almost split sequences are then computed by exact linear
algebra; nothing here consults the knitting code it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .homs import (
    HomSpace,
    RepMorphism,
    endomorphism_radical_basis,
    find_isomorphism,
    hom_system,
    identity_morphism,
    is_indecomposable,
    morphism_parts,
)
from .linalg import hstack, in_span
from .quiver import QuiverPresentation, require_valid
from .rep import StableRep, direct_sum, injective_at, projective_at, thin_rep
from .status import presentation_status

MAX_ORACLE_N = 12


def linear_order(qp: QuiverPresentation) -> list:
    """Vertices of a finite linear quiver from one end to the other.

    Raises:
        ValueError: tails present, or the underlying graph is not a path.
    """
    require_valid(qp)
    if qp.tails:
        raise ValueError("the oracle handles finite quivers only")
    q = qp.core
    n = len(q.vertices)
    if n == 0:
        raise ValueError("empty quiver")
    if len(q.arrows) != n - 1 or not q.is_connected() or any(q.degree(v) > 2 for v in q.vertices):
        raise ValueError("the oracle handles linear (type A) quivers only")
    start = next(v for v in q.vertices if q.degree(v) <= 1)
    order = [start]
    while len(order) < n:
        order.append(next(w for w in q.neighbours(order[-1]) if w not in order[-2:-1] and w != order[-1]))
    return order


@dataclass
class IndecomposableCatalog:
    qp: QuiverPresentation
    order: list
    intervals: list[tuple[int, int]]
    objects: list[StableRep]
    _homs: dict = field(default_factory=dict, repr=False)
    _special_sets: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.objects)

    def name(self, i: int) -> str:
        a, b = self.intervals[i]
        return f"M[{self.order[a]},{self.order[b]}]"

    def hom(self, i: int, j: int) -> HomSpace:
        key = (i, j)
        if key not in self._homs:
            self._homs[key] = hom_system(self.objects[i], self.objects[j])
        return self._homs[key]

    def dim_vector(self, i: int) -> tuple[int, ...]:
        return tuple(self.objects[i].dims[v] for v in self.qp.core.vertices)

    def index_of(self, m: StableRep) -> int | None:
        """Catalog position of an object isomorphic to ``m``."""
        dv = tuple(m.dims[v] for v in self.qp.core.vertices)
        for i in range(len(self.objects)):
            if self.dim_vector(i) == dv and find_isomorphism(self.objects[i], m) is not None:
                return i
        return None

    def is_projective(self, i: int) -> bool:
        return i in self._special("projective")

    def is_injective(self, i: int) -> bool:
        return i in self._special("injective")

    def _special(self, kind: str) -> set[int]:
        if kind not in self._special_sets:
            make = projective_at if kind == "projective" else injective_at
            self._special_sets[kind] = {self.index_of(make(self.qp, v)) for v in self.qp.core.vertices}
        return self._special_sets[kind]


def build_catalog(qp: QuiverPresentation) -> IndecomposableCatalog:
    order = linear_order(qp)
    n = len(order)
    if n > MAX_ORACLE_N:
        raise ValueError(f"oracle catalogs are capped at n = {MAX_ORACLE_N}")
    intervals = [(a, b) for a in range(n) for b in range(a, n)]
    objects = [thin_rep(qp, (), order[a : b + 1]) for a, b in intervals]
    if len(objects) != n * (n + 1) // 2:
        raise AssertionError("catalog is incomplete")
    return IndecomposableCatalog(qp, order, intervals, objects)


# -- radicals ---------------------------------------------------------------------


def _vec(f: RepMorphism) -> tuple[Fraction, ...]:
    return f.flat()


def _compose(f: RepMorphism, g: RepMorphism) -> RepMorphism:
    """``g . f`` for finite quivers (no window bookkeeping needed)."""
    return RepMorphism(f.source, g.target, {v: g.comps[v] @ c for v, c in f.comps.items()}, check=False)


def radical_basis(cat: IndecomposableCatalog, i: int, j: int) -> list[RepMorphism]:
    if i == j:
        return endomorphism_radical_basis(cat.objects[i])
    return cat.hom(i, j).basis


@dataclass
class RadicalFiltration:
    rad: dict  # (i, j) -> dim rad
    rad2: dict  # (i, j) -> dim rad^2
    _rad_basis: dict = field(default_factory=dict, repr=False)
    _rad2_vectors: dict = field(default_factory=dict, repr=False)

    def arrows(self, i: int, j: int) -> int:
        return self.rad[(i, j)] - self.rad2[(i, j)]

    def arrow_list(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, self.arrows(i, j)) for (i, j) in self.rad if self.arrows(i, j) > 0)


def radical_filtration(cat: IndecomposableCatalog) -> RadicalFiltration:
    """``rad`` and ``rad^2`` dimensions for every ordered pair of catalog objects.

    ``rad^2(X, Y)`` is spanned by composites ``g . f`` through any catalog
    object with ``f``, ``g`` radical; the search for a pair stops once the
    span fills ``rad(X, Y)``.
    """
    n = len(cat)
    rb = {(i, j): radical_basis(cat, i, j) for i in range(n) for j in range(n)}
    rad = {k: len(v) for k, v in rb.items()}
    rad2, vectors = {}, {}
    for i in range(n):
        for j in range(n):
            target = rad[(i, j)]
            vecs: list = []
            rank = 0
            if target:
                length = len(_vec(rb[(i, j)][0]))
                for z in range(n):
                    if not rb[(i, z)] or not rb[(z, j)]:
                        continue
                    for f in rb[(i, z)]:
                        for g in rb[(z, j)]:
                            v = _vec(_compose(f, g))
                            if any(v) and not in_span(vecs, v):
                                vecs.append(v)
                                rank += 1
                        if rank == target:
                            break
                    if rank == target:
                        break
            rad2[(i, j)] = rank
            vectors[(i, j)] = vecs
    return RadicalFiltration(rad, rad2, rb, vectors)


def arrow_counts_both_sides(cat: IndecomposableCatalog, filt: RadicalFiltration, i: int, j: int) -> tuple[Fraction, Fraction]:
    """``dim rad/rad^2`` as a right ``End(X)/J``-space and as a left ``End(Y)/J``-space."""
    from .homs import endomorphism_radical_rank

    _, top_i = endomorphism_radical_rank(cat.objects[i])
    _, top_j = endomorphism_radical_rank(cat.objects[j])
    a = filt.arrows(i, j)
    return Fraction(a, top_i), Fraction(a, top_j)


def is_acyclic(n: int, arrows) -> bool:
    succ = {i: set() for i in range(n)}
    for i, j, _ in arrows:
        succ[i].add(j)
    state = [0] * n

    def visit(v) -> bool:
        state[v] = 1
        for w in succ[v]:
            if state[w] == 1 or (state[w] == 0 and not visit(w)):
                return False
        state[v] = 2
        return True

    return all(state[v] or visit(v) for v in range(n))


# -- irreducibility ---------------------------------------------------------------


def in_radical_square(cat: IndecomposableCatalog, filt: RadicalFiltration, i: int, j: int, f: RepMorphism) -> bool:
    vecs = filt._rad2_vectors[(i, j)]
    return in_span(vecs, _vec(f))


def in_radical(cat: IndecomposableCatalog, filt: RadicalFiltration, i: int, j: int, f: RepMorphism) -> bool:
    return in_span([_vec(b) for b in filt._rad_basis[(i, j)]], _vec(f))


def certify_irreducible(cat: IndecomposableCatalog, filt: RadicalFiltration, i: int, j: int, f: RepMorphism) -> bool:
    """``f`` lies in ``rad`` but not in ``rad^2``."""
    return in_radical(cat, filt, i, j, f) and not in_radical_square(cat, filt, i, j, f)


def _solvable(targets: list[RepMorphism], goal: RepMorphism) -> bool:
    return in_span([_vec(t) for t in targets], _vec(goal))


def is_section(cat: IndecomposableCatalog, i: int, j: int, f: RepMorphism) -> bool:
    """Some ``u: Y -> X`` has ``u . f = id``."""
    ident = identity_morphism(cat.objects[i])
    return _solvable([_compose(f, u) for u in cat.hom(j, i).basis], ident)


def is_retraction(cat: IndecomposableCatalog, i: int, j: int, f: RepMorphism) -> bool:
    """Some ``v: Y -> X`` has ``f . v = id``."""
    ident = identity_morphism(cat.objects[j])
    return _solvable([_compose(v, f) for v in cat.hom(j, i).basis], ident)


def irreducible_by_search(cat: IndecomposableCatalog, i: int, j: int, f: RepMorphism, *, max_summands: int = 2) -> bool:
    """Definitional test: neither split, and no factorization through a sum of
    at most ``max_summands`` catalog objects with non-split factors.

    Between indecomposables a map into (out of) ``Z`` is split exactly when it
    is invertible, so factors are drawn from hom spaces minus isomorphisms.
    Through ``Z1 + ... + Zr`` the factorizations ``f = sum g_t h_t`` sweep out
    the span of the individual composites.
    """
    if f.is_zero() or is_section(cat, i, j, f) or is_retraction(cat, i, j, f):
        return False
    n = len(cat)

    def nonsplit(a: int, b: int) -> list[RepMorphism]:
        if a == b:
            return endomorphism_radical_basis(cat.objects[a])
        return cat.hom(a, b).basis

    composites = {}
    for z in range(n):
        comp = [_compose(h, g) for h in nonsplit(i, z) for g in nonsplit(z, j)]
        if comp:
            composites[z] = comp
    keys = sorted(composites)
    for r in range(1, max_summands + 1):
        for zs in combinations(keys, r):
            if _solvable([c for z in zs for c in composites[z]], f):
                return False
    return True


# -- almost split sequences ---------------------------------------------------------


@dataclass
class AlmostSplitSequence:
    left: int
    right: int
    middle: list[int]  # catalog indices with multiplicity
    L: StableRep
    E: StableRep
    N: StableRep
    mono: RepMorphism
    epi: RepMorphism
    components_in: list[RepMorphism]  # L -> E_t
    components_out: list[RepMorphism]  # E_t -> N


class ProjectiveEndError(ValueError):
    pass


def almost_split_sequence_ending_at(cat: IndecomposableCatalog, filt: RadicalFiltration, j: int) -> AlmostSplitSequence:
    """``0 -> L -> E -> N -> 0`` with ``E = sum M^(arrows(M, N))``.

    The map ``E -> N`` collects one irreducible map per arrow (basis of rad
    modulo rad^2); ``L`` is its kernel, matched back into the catalog.
    """
    if cat.is_projective(j):
        raise ProjectiveEndError("no almost split sequence ends at a projective")
    N = cat.objects[j]
    middle, outs = [], []
    for i in range(len(cat)):
        a = filt.arrows(i, j)
        if a <= 0:
            continue
        picked = []
        for b in filt._rad_basis[(i, j)]:
            if len(picked) == a:
                break
            vecs = filt._rad2_vectors[(i, j)] + [_vec(p) for p in picked]
            if not in_span(vecs, _vec(b)):
                picked.append(b)
        for b in picked:
            middle.append(i)
            outs.append(b)
    E = direct_sum(*(cat.objects[i] for i in middle))
    comps = {v: hstack([f.comps[v] for f in outs], N.dims[v]) for v in N.dims}
    epi = RepMorphism(E, N, comps)
    parts = morphism_parts(epi)
    left = cat.index_of(parts.kernel)
    if left is None:
        raise AssertionError(f"kernel of the sink map into {cat.name(j)} is not in the catalog")
    L = cat.objects[left]
    mono = find_isomorphism(L, parts.kernel).then(parts.kernel_inclusion)
    ins = []
    for t, i in enumerate(middle):
        d = cat.objects[i].dims
        comps = {}
        for v in d:
            start = sum(cat.objects[s].dims[v] for s in middle[:t])
            comps[v] = mono.comps[v].select_rows(range(start, start + d[v]))
        ins.append(RepMorphism(L, cat.objects[i], comps, check=False))
    return AlmostSplitSequence(left, j, middle, L, E, N, mono, epi, ins, outs)


@dataclass
class SequenceReport:
    exact: bool
    ends_indecomposable: bool
    non_split: bool
    mesh_additive: bool
    right_almost_split: bool
    left_almost_split: bool
    right_end_fp: bool
    left_end_fcp: bool
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(
            (
                self.exact,
                self.ends_indecomposable,
                self.non_split,
                self.mesh_additive,
                self.right_almost_split,
                self.left_almost_split,
                self.right_end_fp,
                self.left_end_fcp,
            )
        )


def check_sequence(cat: IndecomposableCatalog, filt: RadicalFiltration, seq: AlmostSplitSequence) -> SequenceReport:
    L, E, N = seq.L, seq.E, seq.N
    witnesses = []
    composite_zero = all((seq.epi.comps[v] @ seq.mono.comps[v]).is_zero() for v in N.dims)
    exact = seq.mono.is_mono() and seq.epi.is_epi() and composite_zero
    additive = all(L.dims[v] + N.dims[v] == E.dims[v] for v in N.dims)
    # non-split: the identity of N does not lift through E -> N
    lifts = [_compose(b, p) for t, p in zip(seq.middle, seq.components_out) for b in cat.hom(seq.right, t).basis]
    non_split = not _solvable(lifts, identity_morphism(N))
    right_ok = True
    for x in range(len(cat)):
        targets = [_compose(b, p) for t, p in zip(seq.middle, seq.components_out) for b in cat.hom(x, t).basis]
        for h in radical_basis(cat, x, seq.right):
            if not _solvable(targets, h):
                right_ok = False
                witnesses.append(("right", cat.name(x)))
    left_ok = True
    for y in range(len(cat)):
        targets = [_compose(q, b) for t, q in zip(seq.middle, seq.components_in) for b in cat.hom(t, y).basis]
        for h in radical_basis(cat, seq.left, y):
            if not _solvable(targets, h):
                left_ok = False
                witnesses.append(("left", cat.name(y)))
    return SequenceReport(
        exact=exact,
        ends_indecomposable=is_indecomposable(L) and is_indecomposable(N),
        non_split=non_split,
        mesh_additive=additive,
        right_almost_split=right_ok,
        left_almost_split=left_ok,
        right_end_fp=presentation_status(N).fp,
        left_end_fcp=presentation_status(L).fcp,
        witnesses=witnesses,
    )


# -- the oracle Auslander-Reiten quiver ------------------------------------------------


@dataclass
class OracleARQuiver:
    catalog: IndecomposableCatalog
    filtration: RadicalFiltration
    sequences: dict  # right end -> AlmostSplitSequence
    tau: dict  # right end -> left end

    def vertices(self) -> list[tuple[int, ...]]:
        return [self.catalog.dim_vector(i) for i in range(len(self.catalog))]

    def arrows(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        dv = self.catalog.dim_vector
        return sorted((dv(i), dv(j), m) for i, j, m in self.filtration.arrow_list())


def oracle_ar_quiver(cat: IndecomposableCatalog, *, sequences: bool = True) -> OracleARQuiver:
    """Vertices and arrows from the radical filtration; optionally every almost split sequence."""
    filt = radical_filtration(cat)
    seqs, tau = {}, {}
    if sequences:
        for j in range(len(cat)):
            if cat.is_projective(j):
                continue
            s = almost_split_sequence_ending_at(cat, filt, j)
            seqs[j] = s
            tau[j] = s.left
    return OracleARQuiver(cat, filt, seqs, tau)


def all_orientations(n: int) -> list[str]:
    if n < 1:
        raise ValueError("n must be positive")
    out = [""]
    for _ in range(n - 1):
        out = [w + c for w in out for c in "RL"]
    return out
