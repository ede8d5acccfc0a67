"""Hurwitz elements of a fixed reduced norm and the transversals built from them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Optional

from .hurwitz import (
    HurwitzElement,
    ProjectiveClass,
    canonical_class,
    is_prime,
    reduced_norm,
)


def elements_of_norm(n: int) -> list[HurwitzElement]:
    """All Hurwitz elements of reduced norm ``n``, sorted lexicographically."""
    if n < 1:
        raise ValueError("norm must be positive")
    return list(_elements_of_norm(n))


@lru_cache(maxsize=None)
def _elements_of_norm(n: int) -> tuple[HurwitzElement, ...]:
    m = 4 * n
    out = []
    bound = isqrt(m)
    for w in range(-bound, bound + 1):
        r1 = m - w * w
        b1 = isqrt(r1)
        for x in range(-b1, b1 + 1):
            if (x - w) & 1:
                continue
            r2 = r1 - x * x
            b2 = isqrt(r2)
            for y in range(-b2, b2 + 1):
                if (y - w) & 1:
                    continue
                r3 = r2 - y * y
                z = isqrt(r3)
                if z * z != r3 or (z - w) & 1:
                    continue
                out.append(HurwitzElement(w, x, y, -z))
                if z:
                    out.append(HurwitzElement(w, x, y, z))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Transversal:
    norm: int
    members: tuple[ProjectiveClass, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> ProjectiveClass:
        return self.members[i]

    def index(self, c: ProjectiveClass) -> int:
        return self.members.index(c)


@lru_cache(maxsize=None)
def unit_transversal() -> Transversal:
    """The twelve projective unit classes, identity first."""
    classes = sorted({canonical_class(u) for u in _elements_of_norm(1)})
    # the identity (2,0,0,0) is the lexicographic maximum
    classes.sort(key=lambda c: (not c.is_identity(), c.rep))
    return Transversal(1, tuple(classes))


@lru_cache(maxsize=None)
def _unit_index() -> dict[ProjectiveClass, int]:
    return {c: i for i, c in enumerate(unit_transversal())}


def locate_unit_class(a: HurwitzElement) -> Optional[int]:
    """Index of the class of ``a`` among the projective units, or None."""
    if a == (0, 0, 0, 0):
        return None
    c = canonical_class(a)
    if c.norm != 1:
        return None
    return _unit_index()[c]


def right_orbit(c: ProjectiveClass) -> frozenset[ProjectiveClass]:
    return frozenset(c * u for u in unit_transversal())


def left_orbit(c: ProjectiveClass) -> frozenset[ProjectiveClass]:
    return frozenset(u * c for u in unit_transversal())


@lru_cache(maxsize=None)
def prime_transversal(p: int) -> Transversal:
    """One class per right unit orbit of norm-``p`` elements.

    The chosen set is closed under conjugation.  Conjugation swaps right
    orbits with left orbits, so the set is a transversal of the left orbits
    too, and the partner of each member in a product ``sigma * tau = p`` is
    its own conjugate.  Members are found by a depth-first search over the
    orbits in order, trying classes lexicographically.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    classes = sorted({canonical_class(e) for e in _elements_of_norm(p)})
    orbit_of = {c: min(right_orbit(c)) for c in classes}
    orbits = sorted(set(orbit_of.values()))
    options: dict[ProjectiveClass, list[tuple[ProjectiveClass, ProjectiveClass]]] = {
        o: [] for o in orbits
    }
    for c in classes:
        bar = c.inverse()
        if bar == c or orbit_of[bar] != orbit_of[c]:
            options[orbit_of[c]].append((c, bar))

    chosen: dict[ProjectiveClass, ProjectiveClass] = {}

    def search(k: int) -> bool:
        while k < len(orbits) and orbits[k] in chosen:
            k += 1
        if k == len(orbits):
            return True
        here = orbits[k]
        for c, bar in options[here]:
            there = orbit_of[bar]
            if there != here and there in chosen:
                continue
            chosen[here] = c
            chosen[there] = bar
            if search(k + 1):
                return True
            del chosen[here]
            chosen.pop(there, None)
        return False

    if not search(0):
        raise RuntimeError(f"no conjugation-closed transversal for p={p}")
    members = tuple(sorted(chosen.values()))
    assert len(members) == p + 1 and all(reduced_norm(m.rep) == p for m in members)
    return Transversal(p, members)


def right_orbit_transversal(p: int) -> Transversal:
    """Lexicographically first member of each right unit orbit (one-sided)."""
    classes = sorted({canonical_class(e) for e in _elements_of_norm(p)})
    seen: set[ProjectiveClass] = set()
    members = []
    for c in classes:
        if c in seen:
            continue
        members.append(c)
        seen |= right_orbit(c)
    return Transversal(p, tuple(members))
