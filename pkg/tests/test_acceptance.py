"""Acceptance criteria, each run at its stated tolerance.

Every test records one PASS/FAIL line (see ``report.py``); the lines are
repeated in the terminal summary.
"""

import time

import pytest

import test_properties as props
from lfrep.chains import _factors_through, chain_explore, repeated_classes, thin_family
from lfrep.fixtures import FIXTURES, a_n, example2, example2_full, example2_module, zigzag, zigzag_module
from lfrep.homs import hom_dim, hom_space, is_isomorphic
from lfrep.inventory import OMEGA, component_inventory
from lfrep.knitting import knit_finite
from lfrep.oracle import all_orientations, build_catalog, oracle_ar_quiver
from lfrep.quiver import classify_quiver
from lfrep.verify import EXPECTED_CLASSIFICATION, end_term_violations, knit_matches_oracle, oracle_suite
from report import record

ORACLE_NS = range(2, 9)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.fixture(scope="module")
def oracle_results():
    """Full oracle suite, almost split sequences included, for every orientation of A_2..A_8."""
    with Timer() as t:
        res = {n: oracle_suite(n, sequences=True) for n in ORACLE_NS}
    return res, t.seconds


@pytest.fixture(scope="module")
def example1():
    with Timer() as t:
        qp = zigzag()
        mods = [zigzag_module(i, qp) for i in range(11)]
        chain = chain_explore(qp, mods[0], 4)
    return qp, mods, chain, t.seconds


@pytest.fixture(scope="module")
def example2_chains():
    with Timer() as t:
        qp = example2()
        from_full = chain_explore(qp, example2_full(qp), 3)
        from_zero = chain_explore(qp, example2_module(0, qp), 4)
    return qp, from_full, from_zero, t.seconds


def _checks(results, suffix):
    return [c for res in results.values() for c in res.checks if c.name.endswith(suffix)]


# -- 1 -----------------------------------------------------------------------------------


def test_criterion_1_classification():
    with Timer() as t:
        got = {}
        for name, make in FIXTURES.items():
            r = classify_quiver(make())
            got[name] = (r.is_star, r.dynkin.value, r.has_infinite_sourced_paths, r.has_infinite_sinked_paths)
    wrong = [n for n in got if got[n] != EXPECTED_CLASSIFICATION[n]]
    ok = not wrong and t.seconds < 1
    record("1", ok, t.seconds, f"{len(got)} fixtures" + (f", wrong: {wrong}" if wrong else ""))
    assert ok


# -- 2 -----------------------------------------------------------------------------------

WINGS = {"A_inf": 0, "D_inf": 1, "A_inf_inf": 2, "none": OMEGA}


def test_criterion_2_inventory():
    bad = []
    with Timer() as t:
        for name, make in FIXTURES.items():
            star, dynkin, sourced, sinked = EXPECTED_CLASSIFICATION[name]
            inv = component_inventory(make())
            expect = (not sourced, not sinked, WINGS[dynkin], not star)
            got = (inv.preprojective_full, inv.preinjective_full, inv.quasi_wings, inv.linear_components)
            if got != expect:
                bad.append(name)
    ok = not bad and t.seconds < 1
    record("2", ok, t.seconds, ", ".join(bad))
    assert ok


# -- 3 -----------------------------------------------------------------------------------

# Example-1 chain  ... M_4 -> M_2 -> M_0 -> M_1 -> M_3 -> ...
CHAIN_POS = {i: (-(i // 2) if i % 2 == 0 else (i + 1) // 2) for i in range(11)}


def _chain_arrow(i, j):
    """``M_i -> M_j`` is an arrow of the linear component."""
    return CHAIN_POS[j] == CHAIN_POS[i] + 1


def _adjacent(i, j):
    return _chain_arrow(i, j) or _chain_arrow(j, i)


def _example1_common(example1):
    qp, m, chain, seconds = example1
    problems = []
    with Timer() as t:
        for i in range(9):
            src, tgt = (i + 2, i) if i % 2 == 0 else (i, i + 2)
            if hom_dim(m[src], m[tgt]) != 1 or hom_dim(m[tgt], m[src]) != 0:
                problems.append(f"Hom between M_{src} and M_{tgt}")
        if hom_dim(m[0], m[1]) != 1:
            problems.append("Hom(M_0, M_1)")
        expect = [m[i] for i in (4, 2, 0, 1, 3)]
        if len(chain.members) != 5 or not all(is_isomorphic(a, b) for a, b in zip(chain.members, expect)):
            problems.append(f"chain {chain.labels}")
    return problems, seconds + t.seconds


@pytest.mark.xfail(strict=True, reason="the literal clause is false: Hom(M_4, M_0) = 1; see the corrected check")
def test_criterion_3_as_stated(example1):
    qp, m, chain, _ = example1
    problems, seconds = _example1_common(example1)
    with Timer() as t:
        nonzero = [(i, j) for i in range(11) for j in range(11) if i != j and not _adjacent(i, j) and hom_dim(m[i], m[j])]
    seconds += t.seconds
    if nonzero:
        problems.append(f"{len(nonzero)} non-adjacent ordered pairs with nonzero Hom, e.g. Hom(M_{nonzero[0][0]}, M_{nonzero[0][1]})")
    ok = not problems and seconds < 5
    record("3 (as stated)", ok, seconds, "; ".join(problems))
    assert ok


def test_criterion_3_corrected(example1):
    """Non-adjacent pairs: Hom vanishes against the chain direction, and along it
    every map factors through the next chain member, so none is irreducible."""
    qp, m, chain, _ = example1
    problems, seconds = _example1_common(example1)
    nxt = {CHAIN_POS[i]: i for i in range(11)}
    with Timer() as t:
        for i in range(11):
            for j in range(11):
                if i == j or _adjacent(i, j):
                    continue
                maps = hom_space(m[i], m[j])
                if not maps:
                    continue
                if CHAIN_POS[j] < CHAIN_POS[i]:
                    problems.append(f"Hom(M_{i}, M_{j}) against the chain")
                    continue
                k = nxt.get(CHAIN_POS[i] + 1)
                if k is None or not all(_factors_through(f, m[k]) for f in maps):
                    problems.append(f"Hom(M_{i}, M_{j}) does not factor")
    seconds += t.seconds
    ok = not problems and seconds < 5
    record("3 (corrected)", ok, seconds, "; ".join(problems))
    assert ok


# -- 4 -----------------------------------------------------------------------------------


def test_criterion_4_example2(example2_chains):
    qp, from_full, from_zero, seconds = example2_chains
    problems = []
    with Timer() as t:
        expect = [example2_module(i, qp) for i in (6, 4, 2)] + [example2_full(qp)]
        if from_full.right_end != "terminated" or len(from_full.members) != 4:
            problems.append(f"chain from M_inf: {from_full.labels}, right end {from_full.right_end}")
        elif not all(is_isomorphic(a, b) for a, b in zip(from_full.members, expect)):
            problems.append("chain from M_inf has the wrong members")
        expect = [example2_module(i, qp) for i in (-2, -1, 0, 1, 3)]
        if len(from_zero.members) != 5 or not all(is_isomorphic(a, b) for a, b in zip(from_zero.members, expect)):
            problems.append(f"chain from M_0: {from_zero.labels}")
        radius = 5
        named = [example2_module(i, qp) for i in range(-radius, radius + 1)] + [example2_full(qp)]
        for member in thin_family(qp, radius):
            is_named = any(is_isomorphic(member.rep, x) for x in named)
            if member.in_rrep == is_named:
                problems.append(f"{member.label}: in rrep = {member.in_rrep}")
    seconds += t.seconds
    ok = not problems and seconds < 5
    record("4", ok, seconds, "; ".join(problems[:3]))
    assert ok


# -- 5 -----------------------------------------------------------------------------------


def test_criterion_5_knitting_equals_oracle():
    bad = []
    count = 0
    with Timer() as t:
        for n in ORACLE_NS:
            for o in all_orientations(n):
                qp = a_n(o)
                ar = oracle_ar_quiver(build_catalog(qp), sequences=False)
                ok, detail = knit_matches_oracle(ar, knit_finite(qp))
                count += 1
                if not ok or len(ar.vertices()) != n * (n + 1) // 2:
                    bad.append(f"A_{n}[{o}]: {detail}")
    ok = not bad and t.seconds < 30
    record("5", ok, t.seconds, f"{count} orientations" + (f"; {bad[:3]}" if bad else ""))
    assert ok


# -- 6 -----------------------------------------------------------------------------------


def test_criterion_6_almost_split_sequences(oracle_results):
    results, seconds = oracle_results
    checks = _checks(results, "almost split sequences")
    bad = [c.name for c in checks if not c.passed]
    ok = len(checks) == sum(2 ** (n - 1) for n in ORACLE_NS) and not bad
    record("6", ok, seconds, f"{len(checks)} orientations, {len(bad)} with violations")
    assert ok, bad[:5]


# -- 7 -----------------------------------------------------------------------------------


def test_criterion_7_irreducible_end_terms(oracle_results, example1):
    results, seconds = oracle_results
    checks = _checks(results, "irreducible maps")
    bad = [c.name for c in checks if not c.passed]
    with Timer() as t:
        _, _, chain, _ = example1
        for link in chain.links:
            bad += end_term_violations(link.morphism, source_indecomposable=True, target_indecomposable=True)
        kinds = [l.kind for l in chain.links]
    ok = not bad and len(checks) == sum(2 ** (n - 1) for n in ORACLE_NS) and kinds == ["mono", "mono", "epi", "epi"]
    record("7", ok, seconds + t.seconds, f"{len(checks)} catalogs, {len(chain.links)} chain links, {len(bad)} violations")
    assert ok, bad[:5]


# -- 8 -----------------------------------------------------------------------------------


def test_criterion_8_property_suites():
    before = sum(props.EXAMPLES.values())
    failures = []
    with Timer() as t:
        for fn in (
            props.test_double_dual_is_isomorphic_and_flags_swap,
            props.test_yoneda,
            props.test_invariant_under_window_enlargement,
            props.test_exact_sequences_are_additive,
        ):
            try:
                fn()
            except Exception as e:  # noqa: BLE001 - reported as the failing property
                failures.append(f"{fn.__name__}: {e}")
    drawn = sum(props.EXAMPLES.values()) - before
    ok = not failures and drawn >= 200 and t.seconds < 60
    record("8", ok, t.seconds, f"{drawn} random representations" + (f"; {failures}" if failures else ""))
    assert ok


# -- 9 -----------------------------------------------------------------------------------


def test_criterion_9_acyclicity(oracle_results, example1, example2_chains):
    results, seconds = oracle_results
    checks = _checks(results, "acyclic")
    bad = [c.name for c in checks if not c.passed]
    with Timer() as t:
        chains = [example1[2], example2_chains[1], example2_chains[2]]
        for c in chains:
            if repeated_classes(c.members):
                bad.append(f"chain {c.labels} repeats {repeated_classes(c.members)}")
    ok = not bad and len(checks) == sum(2 ** (n - 1) for n in ORACLE_NS)
    record("9", ok, seconds + t.seconds, f"{len(checks)} oracle quivers, {len(chains)} chains")
    assert ok, bad[:5]
