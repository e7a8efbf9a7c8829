"""Verification suites shared by the command line and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from .fixtures import FIXTURES, a_n
from .homs import morphism_parts
from .inventory import component_inventory, inventory_from_representations
from .knitting import knit_finite, knit_preinjective, knit_preprojective
from .oracle import (
    all_orientations,
    build_catalog,
    certify_irreducible,
    check_sequence,
    in_radical_square,
    is_acyclic,
    oracle_ar_quiver,
)
from .linalg import in_span
from .quiver import check_star_definition, classify_quiver
from .status import presentation_status

# (star, dynkin, infinite sourced path, infinite sinked path)
EXPECTED_CLASSIFICATION = {
    "ray": (True, "A_inf", True, False),
    "coray": (True, "A_inf", False, True),
    "zigzag": (False, "A_inf", False, False),
    "example2": (False, "A_inf_inf", True, False),
    "dinf": (True, "D_inf", True, False),
    "figure1-star": (True, "none", True, True),
    "comb": (False, "none", False, False),
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteResult:
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checks": [c.to_json() for c in self.checks],
            "violations": [c.to_json() for c in self.violations],
        }


# -- irreducible maps and their kernels / cokernels ----------------------------------


def irreducible_maps(cat, filt) -> list[tuple[int, int, object]]:
    """For each arrow of the oracle quiver, basis maps of ``rad`` independent modulo ``rad^2``."""
    out = []
    for i, j, m in filt.arrow_list():
        picked = []
        for b in filt._rad_basis[(i, j)]:
            if len(picked) == m:
                break
            if not in_radical_square(cat, filt, i, j, b) and not in_span(
                filt._rad2_vectors[(i, j)] + [p.flat() for p in picked], b.flat()
            ):
                picked.append(b)
        out.extend((i, j, f) for f in picked)
    return out


def end_term_violations(f, *, source_indecomposable: bool, target_indecomposable: bool) -> list[str]:
    """The cokernel of an irreducible mono is fg (fp from an indecomposable source); dually for epis."""
    out = []
    if f.is_mono() and not f.is_iso():
        st = presentation_status(morphism_parts(f).cokernel.trimmed())
        if not st.fg:
            out.append("cokernel of an irreducible monomorphism is not finitely generated")
        if source_indecomposable and not st.fp:
            out.append("cokernel of an irreducible monomorphism with indecomposable source is not finitely presented")
    if f.is_epi() and not f.is_iso():
        st = presentation_status(morphism_parts(f).kernel.trimmed())
        if not st.fcg:
            out.append("kernel of an irreducible epimorphism is not finitely co-generated")
        if target_indecomposable and not st.fcp:
            out.append("kernel of an irreducible epimorphism with indecomposable target is not finitely co-presented")
    return out


# -- oracle suite --------------------------------------------------------------------


def knit_matches_oracle(ar, comp) -> tuple[bool, str]:
    kv = sorted(v.dims for v in comp.resolved())
    ov = sorted(ar.vertices())
    if comp.unresolved():
        return False, f"{len(comp.unresolved())} unresolved vertices"
    if kv != ov:
        return False, f"vertices differ: knitted {len(kv)}, oracle {len(ov)}"
    if comp.labelled_arrows() != ar.arrows():
        return False, "arrows differ"
    return True, f"{len(kv)} vertices, {len(ar.arrows())} arrows"


def oracle_suite(n: int, *, orientations=None, sequences: bool = True) -> SuiteResult:
    """Knitting against brute force, almost split sequences, end terms of
    irreducible maps and acyclicity, for every orientation of ``A_n``."""
    res = SuiteResult()
    for o in orientations if orientations is not None else all_orientations(n):
        qp = a_n(o)
        tag = f"A_{n}[{o or '-'}]"
        cat = build_catalog(qp)
        ar = oracle_ar_quiver(cat, sequences=sequences)
        comp = knit_finite(qp)
        ok, detail = knit_matches_oracle(ar, comp)
        res.add(f"{tag} knitting equals oracle", ok and len(ar.vertices()) == n * (n + 1) // 2, detail)
        res.add(f"{tag} mesh additivity", not comp.mesh_violations(), "; ".join(comp.mesh_violations()))
        res.add(f"{tag} acyclic", is_acyclic(len(cat), ar.filtration.arrow_list()))
        bad = []
        for i, j, f in irreducible_maps(cat, ar.filtration):
            if not certify_irreducible(cat, ar.filtration, i, j, f):
                bad.append(f"{cat.name(i)}->{cat.name(j)} not certified")
            bad += end_term_violations(f, source_indecomposable=True, target_indecomposable=True)
        res.add(f"{tag} irreducible maps", not bad, "; ".join(bad[:5]))
        if sequences:
            bad = []
            for j, seq in sorted(ar.sequences.items()):
                rep = check_sequence(cat, ar.filtration, seq)
                if not rep.ok:
                    bad.append(f"sequence ending at {cat.name(j)} fails: {rep}")
                bad += end_term_violations(seq.mono, source_indecomposable=True, target_indecomposable=False)
                bad += end_term_violations(seq.epi, source_indecomposable=False, target_indecomposable=True)
            expected = sum(1 for j in range(len(cat)) if not cat.is_projective(j))
            if len(ar.sequences) != expected:
                bad.append(f"{len(ar.sequences)} sequences for {expected} non-projectives")
            res.add(f"{tag} almost split sequences", not bad, "; ".join(bad[:5]))
    return res


# -- fixture suite ---------------------------------------------------------------------


def fixture_suite(radius: int = 6, depth: int = 3) -> SuiteResult:
    res = SuiteResult()
    for name, make in FIXTURES.items():
        qp = make()
        rep = classify_quiver(qp)
        got = (rep.is_star, rep.dynkin.value, rep.has_infinite_sourced_paths, rep.has_infinite_sinked_paths)
        res.add(f"{name} classification", got == EXPECTED_CLASSIFICATION[name], f"got {got}")
        if rep.is_star:
            w = rep.star_witness
            res.add(f"{name} star witness", check_star_definition(qp, w.gamma_depths))
        a, b = component_inventory(qp), inventory_from_representations(qp)
        res.add(f"{name} inventory routes agree", a == b, "" if a == b else f"{a} vs {b}")
        for comp in (knit_preprojective(qp, depth, radius), knit_preinjective(qp, depth, radius)):
            kind = "preprojective" if comp.sign > 0 else "preinjective"
            mv = comp.mesh_violations()
            res.add(f"{name} {kind} mesh additivity", not mv, "; ".join(mv))
            res.add(f"{name} {kind} resolved part closed", comp.is_closed())
    return res

