"""Acceptance suite: one test per criterion, one printed verdict line each.

Every expected value here is frozen: the exact integers come from hand
computation with the binomial/quadratic formulas, the brute-force scans are
independent of the code paths they check, and the finite-field tables use
fixed primes and seeds.  Time budgets are asserted where stated.
"""

import itertools
import random
import time

import pytest

from fatpoints import (
    BlowupContext,
    DivisorClass,
    OracleBudget,
    SpecialityTag,
    arithmetic_genus,
    canonical_class,
    classify_asymptotic,
    effectivity_verdict,
    Effectivity,
    hyperplane,
    is_nef_few_points,
    minus_k,
    minus_one_orbit,
    nef_cone_membership,
    null_class_extension,
    orthogonal_gram,
    pair,
    sample_cubic_torsion,
    sample_nodal_quartic,
    screen_nef_surface,
    speciality_witness,
    standard_class_kind,
    StandardClassKind,
    vdim,
    vdim_quadratic,
)
from fatpoints.oracle import p4_quadric_table, torsion_parity_table
from fatpoints.cli import _signed_sorted_tuples, _sorted_tuples

from tests_support import additivity_pairs

PRIME = 65537


@pytest.fixture
def report(capfd):
    """Print one pass/fail line per criterion on the live terminal."""

    def _report(number: int, name: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {name}"
        if detail:
            line += f" ({detail})"
        with capfd.disabled():
            print(line, flush=True)
        assert ok, line

    return _report


def test_criterion_01_fourteen_points_table(report):
    start = time.time()
    rows = p4_quadric_table(prime=PRIME, seeds=(1, 2, 3), m_max=6)
    elapsed = time.time() - start
    by_m = {row["m"]: row for row in rows}
    ok = [by_m[m]["vdim"] for m in (1, 2, 3, 4)] == [0, -1, -1, 4]
    ok &= by_m[1]["h0"] == 1
    ok &= by_m[2]["h0"] >= 1 and by_m[3]["h0"] >= 1
    ok &= by_m[4]["h0"] == 5
    ok &= all(not by_m[m]["special"] for m in (4, 5, 6))
    ok &= all(by_m[m]["special"] for m in (2, 3))
    ok &= elapsed < 60
    report(1, "quadric through 14 points of P^4: multiples table", ok,
           f"h0 = {[by_m[m]['h0'] for m in (1, 2, 3, 4, 5, 6)]}, {elapsed:.1f}s")


def test_criterion_02_torsion_parity(report):
    start = time.time()
    rows = torsion_parity_table(prime=PRIME, curve_seeds=(1, 2), n_max=4)
    elapsed = time.time() - start
    curves = {row["curve"] for row in rows}
    ok = len(curves) >= 2
    for row in rows:
        ok &= row["h1"] == (0 if row["n"] % 2 == 1 else 1)
    ok &= PRIME <= 1 << 20
    ok &= elapsed < 120
    report(2, "2-torsion cubic configuration: h1 parity 0,1,0,1", ok,
           f"{len(curves)} curves, {elapsed:.1f}s")


def test_criterion_03_standard_class_dichotomy(report):
    start = time.time()
    counterexamples = 0
    checked = 0
    for r in range(0, 11):
        ctx = BlowupContext(2, r)
        K = canonical_class(ctx)
        for d in range(0, 13):
            for m in _sorted_tuples(r, d):
                D = DivisorClass(ctx, d, m)
                if pair(D, D) > 0 or pair(D, K) > 0:
                    continue
                checked += 1
                if standard_class_kind(D) is StandardClassKind.COUNTEREXAMPLE:
                    counterexamples += 1
    elapsed = time.time() - start
    ok = counterexamples == 0 and checked > 0 and elapsed < 60
    report(3, "standard nonpositive classes: multiples of H-E1 or -K9", ok,
           f"{checked} classes, {counterexamples} counterexamples, {elapsed:.1f}s")


def test_criterion_04_orbit_equals_brute_force(report):
    start = time.time()
    ok = True
    total = 0
    for r in range(1, 10):
        ctx = BlowupContext(2, r)
        K = canonical_class(ctx)
        scans = {}
        for bound in range(1, 6):
            orbit = minus_one_orbit(ctx, bound)
            total += len(orbit)
            for C in orbit:
                ok &= pair(C, C) == -1 and pair(C, K) == -1
            got = {(int(C.d), tuple(int(x) for x in C.m)) for C in orbit}
            brute = set()
            for d in range(0, bound + 1):
                if d not in scans:
                    scans[d] = _brute_minus_one_classes(ctx, d)
                brute |= scans[d]
            ok &= got == brute
    elapsed = time.time() - start
    ok &= elapsed < 60
    report(4, "(-1)-orbit soundness and completeness vs lattice scan", ok,
           f"r <= 9, bound <= 5, {total} classes checked, {elapsed:.1f}s")


def _brute_minus_one_classes(ctx, d):
    """All integer classes with C^2 = C.K = -1 of degree d that reduce to
    exceptional shape, expanded over permutations."""
    from itertools import permutations

    from fatpoints import is_minus_one_class

    out = set()
    for m_sorted in _signed_sorted_tuples(ctx.r, 3 * d - 1, d * d + 1):
        D = DivisorClass(ctx, d, m_sorted)
        if is_minus_one_class(D):
            for perm in set(permutations(m_sorted)):
                out.add((d, perm))
    return out


def test_criterion_05_hodge_negative_pivots(report):
    rng = random.Random(20240905)
    violations = 0
    count = 0
    while count < 1000:
        r = rng.randint(1, 12)
        ctx = BlowupContext(2, r)
        D = DivisorClass(ctx, rng.randint(1, 9),
                         [rng.randint(-4, 6) for _ in range(r)])
        if pair(D, D) <= 0 or D.d <= 0:
            continue
        count += 1
        gb = orthogonal_gram(D)
        if not all(p < 0 for p in gb.pivots):
            violations += 1
    report(5, "Hodge index: exact LDL pivots on D-perp all negative", violations == 0,
           f"1000 classes, {violations} violations")


def test_criterion_06_cone_duality(report):
    disagreements = 0
    for r in range(0, 5):
        ctx = BlowupContext(3, r)
        for d in range(-3, 4):
            for m in itertools.product(range(-3, 4), repeat=r):
                D = DivisorClass(ctx, d, m)
                if nef_cone_membership(D).inside != is_nef_few_points(D):
                    disagreements += 1
    rng = random.Random(20240906)
    ctx = BlowupContext(4, 14)
    for _ in range(1000):
        D = DivisorClass(ctx, rng.randint(-2, 9),
                         [rng.randint(-2, 6) for _ in range(14)])
        if nef_cone_membership(D).inside != is_nef_few_points(D):
            disagreements += 1
    report(6, "Mori-dual membership agrees with the nef inequalities",
           disagreements == 0,
           f"exhaustive n=3 r<=4 box + 1000 random (4,14), {disagreements} disagreements")


def test_criterion_07_vdim_identity(report):
    rng = random.Random(20240907)
    failures = 0
    for _ in range(500):
        r = rng.randint(0, 12)
        ctx = BlowupContext(2, r)
        D = DivisorClass(ctx, rng.randint(0, 30),
                         [rng.randint(0, 12) for _ in range(r)])
        if vdim_quadratic(D) != vdim(D):
            failures += 1
    report(7, "binomial vdim equals the surface quadratic form", failures == 0,
           f"500 classes, {failures} failures")


def test_criterion_08_additivity_on_nef_plus_fixed_part(report):
    failures = 0
    pairs = additivity_pairs(200, seed=20240908, bound=3)
    for M, F in pairs:
        if vdim(M + F) != vdim(M):
            failures += 1
    report(8, "vdim(M + F) = vdim(M) for orthogonal (-1)-sums", failures == 0,
           f"200 pairs, {failures} failures")


def test_criterion_09_quadratic_null_family(report):
    rng = random.Random(20240909)
    ctx8 = BlowupContext(2, 8)
    checked = 0
    attempts = 0
    ok = True
    while checked < 100 and attempts < 20000:
        attempts += 1
        k = rng.randint(3, 12)
        m = [k + rng.randint(-1, 1) for _ in range(8)]
        d = 3 * k + rng.randint(-1, 1)
        B = DivisorClass(ctx8, d, m)
        bk = pair(B, canonical_class(ctx8))
        if 2 * pair(B, B) - bk * bk <= 0:
            continue
        rep = null_class_extension(B)
        ok &= rep.self_intersection.rational == 0
        ok &= rep.self_intersection.coefficient == 0
        ok &= rep.canonical_pairing.rational == 0
        ok &= rep.canonical_pairing.coefficient == 0
        checked += 1
    ok &= checked == 100
    integer_rep = null_class_extension(DivisorClass(ctx8, 6, (2,) * 8))
    ok &= integer_rep.integer_class is not None
    ok &= screen_nef_surface(integer_rep.integer_class, 10).passed
    report(9, "null extensions vanish exactly in Q(sqrt(b))", ok,
           f"100 random bases + integer instance at bound 10")


def test_criterion_10_classifier_behavior(report):
    ok = True
    details = []

    verdict = classify_asymptotic(hyperplane(BlowupContext(2, 2)), degree_bound=5)
    ok &= verdict.tag is SpecialityTag.ASYMPTOTICALLY_NON_SPECIAL
    ok &= not verdict.evidence.undecided
    details.append(verdict.tag.value)

    ctx10 = BlowupContext(2, 10)
    D_mix = DivisorClass(ctx10, 10, (3,) * 10)
    cubic_cfg = sample_cubic_torsion(PRIME, seed=1)
    verdict = classify_asymptotic(D_mix, degree_bound=5,
                                  budget=OracleBudget(config=cubic_cfg))
    ok &= verdict.tag is SpecialityTag.INDETERMINATE
    ok &= verdict.evidence.witnesses == (minus_k(ctx10),)
    details.append(verdict.tag.value)

    # a certified-effective genus-2 negative class: the strict transform of
    # a nodal quartic through the 14 blown-up points
    ctx14 = BlowupContext(2, 14)
    C = DivisorClass(ctx14, 4, (2,) + (1,) * 13)
    assert pair(C, C) == -1 and arithmetic_genus(C) == 2
    quartic_cfg = sample_nodal_quartic(PRIME, seed=3)
    eff = effectivity_verdict(C, OracleBudget(config=quartic_cfg))
    ok &= eff.status is Effectivity.EFFECTIVE
    D = speciality_witness(C, degree_bound=5)
    verdict = classify_asymptotic(D, degree_bound=5,
                                  budget=OracleBudget(config=quartic_cfg))
    ok &= verdict.tag is SpecialityTag.ASYMPTOTICALLY_SPECIAL
    ok &= any(arithmetic_genus(w) >= 2 for w in verdict.evidence.witnesses)
    details.append(verdict.tag.value)

    # Unknown never co-occurs with a definite tag: with no oracle budget the
    # undecided candidate forces the Unknown tag, never NonSpecial.
    verdict = classify_asymptotic(D_mix, degree_bound=5, budget=None)
    ok &= verdict.tag is SpecialityTag.UNKNOWN
    ok &= bool(verdict.evidence.undecided)

    report(10, "classifier: NonSpecial / Indeterminate / Special with witnesses",
           ok, ", ".join(details))
