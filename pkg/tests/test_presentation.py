from fractions import Fraction
from itertools import combinations

import pytest

import hurwitz_sunits.presentation as presentation
from hurwitz_sunits.hurwitz import (
    IDENTITY,
    ONE,
    NoOddPrimes,
    SPrimeSet,
    canonical_class,
    multiply,
)
from hurwitz_sunits.io import load_fixture, to_json
from hurwitz_sunits.norms import prime_transversal, right_orbit_transversal, unit_transversal
from hurwitz_sunits.presentation import (
    Generator,
    GeneratorId,
    MatchNotFound,
    Presentation,
    SizeLimitExceeded,
    build_main,
    build_oracle,
    relator_scalar,
    verify_presentation,
)


def closed_form_counts(primes):
    return {
        "1": 121,
        "2": sum(p + 1 for p in primes),
        "3": sum((p + 1) * (q + 1) for q, p in combinations(sorted(primes), 2)),
        "4": 11 * sum(p + 1 for p in primes),
    }


def test_main_35_counts():
    pres = build_main(SPrimeSet.of(3, 5))
    assert pres.ngens == 21
    assert pres.provenance["type_counts"] == {"1": 121, "2": 10, "3": 24, "4": 110}
    assert len(pres.relators) == 265


def test_main_single_prime():
    pres = build_main(SPrimeSet.of(3))
    assert pres.ngens == 15
    assert pres.provenance["type_counts"]["3"] == 0


def test_main_357():
    pres = build_main(SPrimeSet.of(3, 5, 7))
    assert pres.ngens == 29
    # 4*6 + 4*8 + 6*8
    assert pres.provenance["type_counts"]["3"] == 104


SUBSETS = [s for k in (1, 2, 3) for s in combinations((3, 5, 7, 11, 13), k)]


@pytest.mark.parametrize("primes", SUBSETS, ids=lambda s: "_".join(map(str, s)))
def test_main_soundness(primes):
    pres = build_main(SPrimeSet(primes))
    report = verify_presentation(pres)
    assert report.passed, report.summary()
    assert pres.provenance["type_counts"] == closed_form_counts(primes)
    for word in pres.relators:
        assert pres.word_class(word) == IDENTITY


@pytest.mark.parametrize("primes", [(3,), (5,), (7,), (3, 5)])
def test_oracle_soundness(primes):
    pres = build_oracle(SPrimeSet(primes))
    assert verify_presentation(pres).passed


def test_oracle_generator_counts():
    assert build_oracle(SPrimeSet.of(3)).ngens == 59
    assert build_oracle(SPrimeSet.of(3, 5)).ngens == 419


def test_oracle_cap():
    with pytest.raises(SizeLimitExceeded):
        build_oracle(SPrimeSet.of(3, 5), cap=100)


def test_no_primes():
    with pytest.raises(NoOddPrimes):
        build_main(SPrimeSet(()))
    with pytest.raises(NoOddPrimes):
        build_oracle(SPrimeSet(()))
    with pytest.raises(NoOddPrimes):
        build_main(SPrimeSet.of(2, 3))


def test_type2_pairing_is_an_involution():
    for p in (3, 5, 7, 11):
        tp = prime_transversal(p)
        units = set(unit_transversal())
        partner = {}
        for i, s in enumerate(tp):
            hits = [j for j, t in enumerate(tp) if s * t in units]
            assert len(hits) == 1
            partner[i] = hits[0]
            assert tp[hits[0]] == s.inverse()
            assert s * tp[hits[0]] == IDENTITY
        assert all(partner[partner[i]] == i for i in partner)


def test_type4_matches_unique_and_exact():
    units = unit_transversal()
    for p in (3, 5):
        tp = prime_transversal(p)
        for sigma in tp:
            for nu in units[1:]:
                lhs = multiply(nu.rep, sigma.rep)
                found = [
                    (tau, mu)
                    for tau in tp
                    for mu in units
                    if canonical_class(multiply(tau.rep, mu.rep)) == canonical_class(lhs)
                ]
                assert len(found) == 1
                tau, mu = found[0]
                # equal norms: the two products agree up to sign, not just up to scalars
                rhs = multiply(tau.rep, mu.rep)
                assert rhs == lhs or rhs == -lhs


def test_type3_products_agree_up_to_sign():
    units = unit_transversal()
    t3, t5 = prime_transversal(3), prime_transversal(5)
    for sigma in t5:
        for tau in t3:
            lhs = multiply(sigma.rep, tau.rep)
            found = [
                (n, a, b)
                for n in units
                for a in t3
                for b in t5
                if canonical_class(multiply(multiply(n.rep, a.rep), b.rep)) == canonical_class(lhs)
            ]
            assert len(found) == 1
            n, a, b = found[0]
            rhs = multiply(multiply(n.rep, a.rep), b.rep)
            assert rhs in (lhs, -lhs)


def test_one_sided_transversal_breaks_type3(monkeypatch):
    monkeypatch.setattr(presentation, "prime_transversal", right_orbit_transversal)
    with pytest.raises(MatchNotFound) as err:
        build_main(SPrimeSet.of(5, 13))
    assert err.value.relation_type == 3


def test_witnesses_in_s_units():
    pres = build_main(SPrimeSet.of(5, 7))
    assert not verify_presentation(pres).bad_witnesses


def test_verify_flags_bad_relator_and_witness():
    pres = build_main(SPrimeSet.of(3))
    pres.relators.append((12,))  # a norm-3 generator alone is not trivial
    report = verify_presentation(pres)
    assert not report.passed
    assert report.failed_relators == [len(pres.relators) - 1]
    pres2 = Presentation(
        SPrimeSet.of(3),
        [Generator(GeneratorId("named", 1), "a", canonical_class(2 * ONE))],
        [],
    )
    assert verify_presentation(pres2).passed  # 2*ONE is the identity class
    bad = Presentation(
        SPrimeSet.of(3),
        [Generator(GeneratorId("named", 1), "a", canonical_class(prime_transversal(5)[0].rep))],
        [],
    )
    assert verify_presentation(bad).bad_witnesses == [1]


def test_trivial_presentation():
    pres = Presentation(SPrimeSet.of(3), [Generator(GeneratorId("named", 1), "a", IDENTITY)], [(1, -1)])
    report = verify_presentation(pres)
    assert report.passed
    assert report.scalars == [Fraction(1)]


def test_fixture_relator_scalar():
    pres = load_fixture("s3_7")
    # r1 = b a b a^-2 b a b^-1 a^-1 b^-1 a^2 b^-1 a^-1
    scalar = relator_scalar(pres, pres.relators[0])
    assert scalar is not None
    assert scalar == Fraction(1)


def test_determinism():
    primes = SPrimeSet.of(3, 7)
    assert to_json(build_main(primes)) == to_json(build_main(primes))


def test_identity_generator_is_omitted():
    pres = build_main(SPrimeSet.of(3))
    assert all(not g.witness.is_identity() for g in pres.generators)
    assert [g.id for g in pres.generators[:11]] == [GeneratorId("unit", i) for i in range(1, 12)]
    # inverse pairs inside the unit group show up as two-letter relators
    assert any(len(r) == 2 for r in pres.relators[:121])
