"""Growing linear chains of irreducible maps among thin representations.

Outside rrep the irreducible maps around an indecomposable form a line: at
most one arrow in and one arrow out.  ``chain_explore`` walks that line inside
a finite family of thin representations, accepting a neighbour only when it
passes every test we can run and refusing to choose when two pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .homs import RepMorphism, find_isomorphism, hom_space, is_indecomposable, morphism_parts
from .linalg import in_span
from .quiver import QuiverPresentation, TailVertex, Window, require_valid
from .rep import StableRep, common_extension, thin_rep
from .status import is_in_rrep, presentation_status


@dataclass
class FamilyMember:
    rep: StableRep
    support: frozenset  # window vertices carrying k
    stable_tails: tuple[int, ...]
    label: str
    in_rrep: bool


def _connected_subsets(window: Window, limit: int) -> list[frozenset]:
    """Every connected vertex set of the window's underlying graph.

    Each set is produced once, grown from its first vertex in window order
    while only adding later vertices.
    """
    q = window.quiver
    order = {v: i for i, v in enumerate(q.vertices)}
    nbrs = {v: set(q.neighbours(v)) for v in q.vertices}
    out: list[frozenset] = []

    def grow(current: frozenset, frontier: frozenset, banned: frozenset):
        out.append(current)
        if len(out) > limit:
            raise ValueError(f"thin family exceeds {limit} members; use a smaller radius")
        banned = set(banned)
        for v in sorted(frontier, key=order.get):
            banned.add(v)
            new = current | {v}
            extra = {w for w in nbrs[v] if w not in new and w not in banned and order[w] > order[root]}
            grow(new, (frontier | extra) - banned, frozenset(banned))

    for root in q.vertices:
        start = {w for w in nbrs[root] if order[w] > order[root]}
        grow(frozenset([root]), frozenset(start), frozenset())
    return out


def _label(qp: QuiverPresentation, support: frozenset, stable: tuple[int, ...]) -> str:
    core = [str(v) for v in qp.core.vertices if v in support]
    tails = []
    for k in range(len(qp.tails)):
        ds = sorted(v.depth for v in support if isinstance(v, TailVertex) and v.tail == k)
        if ds:
            tails.append(f"@{k}:{ds[0]}..{'inf' if k in stable else ds[-1]}")
    return "thin{" + ",".join(core + tails) + "}"


def thin_family(qp: QuiverPresentation, radius: int, *, limit: int = 20000) -> list[FamilyMember]:
    """Thin representations on the connected vertex sets of the radius-``R`` window.

    A set that reaches the last vertex of a tail is read as running on forever
    along that tail, which makes the member infinite-dimensional there.
    """
    require_valid(qp)
    n = len(qp.tails)
    window = Window(qp, (radius,) * n)
    depths = (radius + 1,) * n
    members = []
    for s in _connected_subsets(window, limit):
        stable = tuple(k for k in range(n) if TailVertex(k, radius) in s)
        full = set(s) | {TailVertex(k, radius + 1) for k in stable}
        rep = thin_rep(qp, depths, full, stable_tails=stable)
        members.append(FamilyMember(rep, s, stable, _label(qp, s, stable), is_in_rrep(rep)))
    return members


@dataclass
class Link:
    source: StableRep
    target: StableRep
    morphism: RepMorphism
    kind: str  # "mono" or "epi"


@dataclass
class Chain:
    members: list  # StableRep, left to right
    labels: list
    links: list  # Link between members[i] and members[i + 1]
    left_end: str = "open"  # open | terminated | ambiguous | steps
    right_end: str = "open"
    ambiguities: list = field(default_factory=list)  # (side, label of end, candidate labels)

    def arrows(self) -> list[tuple[str, str]]:
        return [(self.labels[i], self.labels[i + 1]) for i in range(len(self.links))]

    def to_json(self) -> dict:
        return {
            "members": list(self.labels),
            "arrows": [list(a) for a in self.arrows()],
            "links": [l.kind for l in self.links],
            "left_end": self.left_end,
            "right_end": self.right_end,
            "ambiguities": [{"side": s, "at": a, "candidates": c} for s, a, c in self.ambiguities],
        }


def _same(m: StableRep, n: StableRep) -> bool:
    if m.tags != n.tags:
        return False
    a, b = common_extension(m, n)
    return a.dims == b.dims and find_isomorphism(a, b) is not None


def _factors_through(f: RepMorphism, z: StableRep) -> bool:
    """``f`` is a sum of composites ``X -> Z -> Y``."""
    g = hom_space(f.source, z)
    if not g:
        return False
    h = hom_space(z, f.target)
    if not h:
        return False
    composites = [a.then(b) for a in g for b in h]
    depths = tuple(max(x) for x in zip(f.depths, *(c.depths for c in composites)))
    target = f.extend(depths).flat()
    return in_span([c.extend(depths).flat() for c in composites], target)


def passes_irreducibility_tests(f: RepMorphism) -> str | None:
    """``"mono"``/``"epi"`` when ``f`` is a monomorphism with finitely presented
    cokernel or an epimorphism with finitely co-presented kernel; else ``None``.
    """
    if f.is_mono():
        coker = morphism_parts(f).cokernel.trimmed()
        return "mono" if presentation_status(coker).fp else None
    if f.is_epi():
        ker = morphism_parts(f).kernel.trimmed()
        return "epi" if presentation_status(ker).fcp else None
    return None


def neighbours(x: StableRep, side: str, family: list[FamilyMember]) -> list[tuple[FamilyMember, RepMorphism, str]]:
    """Family members ``N`` with a candidate irreducible map ``N -> x`` (left) or ``x -> N`` (right)."""
    found = []
    for cand in family:
        if cand.in_rrep or _same(cand.rep, x):
            continue
        src, tgt = (cand.rep, x) if side == "left" else (x, cand.rep)
        forward = hom_space(src, tgt)
        if len(forward) != 1 or hom_space(tgt, src):
            continue
        f = forward[0]
        kind = passes_irreducibility_tests(f)
        if kind is None:
            continue
        if any(
            _factors_through(f, z.rep)
            for z in family
            if z is not cand and not _same(z.rep, src) and not _same(z.rep, tgt)
        ):
            continue
        found.append((cand, f, kind))
    return found


def default_radius(seed: StableRep, steps: int) -> int:
    return max(seed.depths + (1,)) + 2 * steps + 2


def chain_explore(
    qp: QuiverPresentation,
    seed: StableRep,
    steps: int,
    *,
    radius: int | None = None,
    seed_label: str | None = None,
    family: list[FamilyMember] | None = None,
) -> Chain:
    """Extend ``seed`` by ``steps`` neighbours, alternating left and right.

    An end stops when it has no neighbour (``terminated``) or more than one
    (``ambiguous``, recorded with the candidates).  A side that has stopped
    hands its remaining steps to the other side.

    Raises:
        ValueError: the seed is decomposable or lies in rrep.
    """
    if seed.qp != qp:
        raise ValueError("seed lives on a different quiver")
    if is_in_rrep(seed):
        raise ValueError("seed lies in rrep; linear chains live outside it")
    if not is_indecomposable(seed):
        raise ValueError("seed is not indecomposable")
    if family is None:
        family = thin_family(qp, radius or default_radius(seed, steps))
    label = seed_label
    if label is None:
        label = next((m.label for m in family if _same(m.rep, seed)), "seed")
    chain = Chain([seed], [label], [])
    open_sides = ["left", "right"]
    turn = 0
    taken = 0
    while taken < steps and open_sides:
        side = "left" if turn % 2 == 0 else "right"
        if side not in open_sides:
            side = open_sides[0]
        end = chain.members[0] if side == "left" else chain.members[-1]
        found = neighbours(end, side, family)
        stop = None
        if not found:
            stop = "terminated"
        elif len(found) > 1:
            stop = "ambiguous"
            end_label = chain.labels[0] if side == "left" else chain.labels[-1]
            chain.ambiguities.append((side, end_label, [c.label for c, _, _ in found]))
        if stop:
            setattr(chain, f"{side}_end", stop)
            open_sides.remove(side)
            continue
        cand, f, kind = found[0]
        if side == "left":
            chain.members.insert(0, cand.rep)
            chain.labels.insert(0, cand.label)
            chain.links.insert(0, Link(cand.rep, end, f, kind))
        else:
            chain.members.append(cand.rep)
            chain.labels.append(cand.label)
            chain.links.append(Link(end, cand.rep, f, kind))
        taken += 1
        turn += 1
    for side in open_sides:
        setattr(chain, f"{side}_end", "steps")
    return chain


def repeated_classes(members: list[StableRep]) -> list[tuple[int, int]]:
    """Pairs of positions holding isomorphic representations."""
    return [(i, j) for i, j in combinations(range(len(members)), 2) if _same(members[i], members[j])]
