import pytest

from hurwitz_sunits.congruence import find_splitting, neighbor_label
from hurwitz_sunits.hurwitz import (
    ONE,
    HurwitzElement,
    canonical_class,
    conjugate,
    multiply,
    reduced_norm,
)
from hurwitz_sunits.norms import (
    elements_of_norm,
    left_orbit,
    locate_unit_class,
    prime_transversal,
    right_orbit,
    right_orbit_transversal,
    unit_transversal,
)


def brute_force_count(n):
    """Count (w,x,y,z) with equal parity and sum of squares 4n by a plain box search."""
    bound = 2 * int(n ** 0.5) + 2
    rng = range(-bound, bound + 1)
    return sum(
        1
        for w in rng
        for x in rng
        for y in rng
        for z in rng
        if w * w + x * x + y * y + z * z == 4 * n and w % 2 == x % 2 == y % 2 == z % 2
    )


def sigma(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


# frozen from brute_force_count, equal to 24 * sigma(n) for odd n
BRUTE_COUNTS = {1: 24, 3: 96, 5: 144, 7: 192, 9: 312, 11: 288, 13: 336, 15: 576, 21: 768, 35: 1152}


def test_brute_force_oracle_small():
    for n in (1, 3, 15):
        assert brute_force_count(n) == BRUTE_COUNTS[n]


@pytest.mark.parametrize("n", sorted(BRUTE_COUNTS))
def test_jacobi_counts(n):
    assert len(elements_of_norm(n)) == BRUTE_COUNTS[n] == 24 * sigma(n)


def test_elements_are_valid_and_sorted():
    elems = elements_of_norm(15)
    assert elems == sorted(elems)
    assert all(e.is_valid and reduced_norm(e) == 15 for e in elems)
    assert len(set(elems)) == len(elems)


def test_unit_transversal():
    units = unit_transversal()
    assert len(units) == 12
    assert units[0].is_identity()
    members = set(units)
    for a in units:
        for b in units:
            assert a * b in members


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_orbit_partition(p):
    elems = elements_of_norm(p)
    assert len(elems) == 24 * (p + 1)
    units = elements_of_norm(1)
    orbits = {frozenset(multiply(e, u) for u in units) for e in elems}
    assert len(orbits) == p + 1
    assert all(len(o) == 24 for o in orbits)
    members = prime_transversal(p).members
    assert len(members) == p + 1
    for orbit in orbits:
        hits = [m for m in members if m.rep in orbit or (-m.rep) in orbit]
        assert len(hits) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 23, 37, 43])
def test_transversal_is_two_sided(p):
    members = prime_transversal(p).members
    assert all(m.norm == p for m in members)
    assert len({min(right_orbit(m)) for m in members}) == p + 1
    assert len({min(left_orbit(m)) for m in members}) == p + 1
    assert list(members) == sorted(members)
    assert {m.inverse() for m in members} == set(members)


def test_lexicographic_right_transversal_is_not_always_two_sided():
    # why prime_transversal matches left and right orbits simultaneously
    members = right_orbit_transversal(13).members
    assert len({min(right_orbit(m)) for m in members}) == 14
    assert len({min(left_orbit(m)) for m in members}) < 14


def test_transversal_sizes():
    assert len(prime_transversal(3)) == 4
    assert len(prime_transversal(5)) == 6
    t13 = prime_transversal(13)
    assert len(t13) == 14 and all(m.norm == 13 for m in t13)


def test_neighbor_labels_distinct_for_transversal():
    s = find_splitting(3)
    labels = {neighbor_label(m, s) for m in prime_transversal(3)}
    assert len(labels) == 4


@pytest.mark.parametrize("p", [3, 5, 7])
def test_conjugation_closure(p):
    elems = set(elements_of_norm(p))
    assert all(conjugate(e) in elems for e in elems)


def test_determinism():
    assert elements_of_norm(21) == elements_of_norm(21)
    prime_transversal.cache_clear()
    first = prime_transversal(11)
    prime_transversal.cache_clear()
    assert prime_transversal(11) == first


def test_locate_unit_class():
    assert locate_unit_class(ONE) == 0
    t = prime_transversal(3)[1].rep
    assert locate_unit_class(multiply(t, conjugate(t))) == 0
    assert locate_unit_class(HurwitzElement.from_integral(1, 1, 0, 0)) is None
    for i, u in enumerate(unit_transversal()):
        assert locate_unit_class(u.rep) == i
        assert locate_unit_class(5 * u.rep) == i


def test_bad_inputs():
    with pytest.raises(ValueError):
        elements_of_norm(0)
    with pytest.raises(ValueError):
        prime_transversal(2)
    with pytest.raises(ValueError):
        prime_transversal(15)
