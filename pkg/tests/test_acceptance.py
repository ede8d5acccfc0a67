"""End-to-end acceptance checks, one test per criterion, each with a wall-clock limit.

Every test prints a single ``[criterion N] PASS/FAIL`` line, visible even without ``-s``.
"""
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from hurwitz_sunits.analysis import abelianization
from hurwitz_sunits.congruence import congruence_image, find_splitting, neighbor_label, projective_line
from hurwitz_sunits.hurwitz import IDENTITY, SPrimeSet
from hurwitz_sunits.io import fixture_names, load_fixture
from hurwitz_sunits.norms import elements_of_norm, prime_transversal, unit_transversal
from hurwitz_sunits.presentation import build_main, build_oracle, verify_presentation
from hurwitz_sunits.tietze import simplify

BUILDER_SETS = [(3,), (5,), (3, 5), (3, 7), (5, 7), (3, 11), (3, 5, 7)]


def closed_form_counts(primes):
    return {
        "1": 121,
        "2": sum(p + 1 for p in primes),
        "3": sum((p + 1) * (q + 1) for q, p in combinations(sorted(primes), 2)),
        "4": 11 * sum(p + 1 for p in primes),
    }


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        result = {"ok": False}
        try:
            yield result
        finally:
            elapsed = time.perf_counter() - start
            ok = result["ok"] and elapsed < limit
            with capsys.disabled():
                status = "PASS" if ok else "FAIL"
                print(f"\n[criterion {number}] {status} {title} ({elapsed:.2f}s, limit {limit}s)")
        assert result["ok"], f"criterion {number} check failed"
        assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s"

    return run


def test_criterion_1_unit_structure(criterion):
    with criterion(1, "unit structure", 1.0) as r:
        r["ok"] = len(elements_of_norm(1)) == 24 and len(unit_transversal()) == 12


def test_criterion_2_jacobi_counts(criterion):
    with criterion(2, "norm counts 24(p+1)", 5.0) as r:
        r["ok"] = all(len(elements_of_norm(p)) == 24 * (p + 1) for p in (3, 5, 7, 11, 13, 37, 43))


def test_criterion_3_neighbor_bijection(criterion):
    with criterion(3, "transversal labels cover the projective line", 5.0) as r:
        ok = True
        for p in (3, 5, 7, 11, 13):
            members = prime_transversal(p)
            split = find_splitting(p)
            labels = [neighbor_label(m, split) for m in members]
            ok &= len(members) == p + 1
            ok &= len(set(labels)) == p + 1 and set(labels) == set(projective_line(p))
        r["ok"] = ok


def test_criterion_4_builder_soundness(criterion):
    with criterion(4, "main builder soundness and relation counts", 60.0) as r:
        ok = True
        for primes in BUILDER_SETS:
            pres = build_main(SPrimeSet(primes))
            ok &= all(pres.word_class(w) == IDENTITY for w in pres.relators)
            ok &= pres.provenance["type_counts"] == closed_form_counts(primes)
        r["ok"] = ok


def test_criterion_5_fixtures_verify(criterion):
    with criterion(5, "all six fixtures verify", 10.0) as r:
        names = fixture_names()
        r["ok"] = len(names) == 6 and all(verify_presentation(load_fixture(n)).passed for n in names)


def test_criterion_6_oracle_equivalence(criterion):
    with criterion(6, "abelianization agrees across builders, fixture and simplifier", 120.0) as r:
        ok = True
        for primes in ((3,), (3, 5)):
            s = SPrimeSet(primes)
            ok &= abelianization(build_main(s)) == abelianization(build_oracle(s))
        main35 = build_main(SPrimeSet.of(3, 5))
        inv = abelianization(main35)
        ok &= inv == abelianization(load_fixture("s3_5"))
        ok &= inv == abelianization(simplify(main35))
        r["ok"] = ok


def test_criterion_7_congruence_mod7(criterion):
    with criterion(7, "S={3,5} fixture mod 7: scalar relators, order divisible by 168", 30.0) as r:
        report = congruence_image(load_fixture("s3_5"), 7, 1)
        r["ok"] = not report.nonscalar_relators and report.image_order % 168 == 0


def test_criterion_8_simplifier_safety(criterion):
    with criterion(8, "simplifier keeps witnesses sound and abelianization fixed", 120.0) as r:
        ok = True
        for primes in BUILDER_SETS:
            pres = build_main(SPrimeSet(primes))
            out = simplify(pres)
            ok &= out.ngens <= pres.ngens
            ok &= abelianization(out) == abelianization(pres)
            ok &= verify_presentation(out).passed
        r["ok"] = ok
