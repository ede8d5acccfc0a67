"""Presentations of projective S-unit groups of the Hurwitz order.

Relators are tuples of signed, 1-based generator indices: ``(3, -1)`` is
the word ``g3 * g1^-1``.  Every generator carries a quaternion witness, so
any relator can be checked by multiplying witnesses out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .hurwitz import (
    ONE,
    HurwitzElement,
    NoOddPrimes,
    ProjectiveClass,
    SPrimeSet,
    canonical_class,
    class_in_projective_sunits,
    conjugate,
    multiply,
)
from .norms import elements_of_norm, prime_transversal, unit_transversal

Word = tuple[int, ...]


class MatchNotFound(RuntimeError):
    """A relation search found no (or several) matching transversal products."""

    def __init__(self, relation_type: int, operands):
        self.relation_type = relation_type
        self.operands = operands
        super().__init__(f"type {relation_type} match failed for {operands}")


class SizeLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorId:
    """Where a generator came from.

    ``kind`` is ``"unit"`` (index 1..11 into the projective units),
    ``"prime"`` (index 0..p into the transversal at ``prime``), ``"class"``
    for the one-generator-per-class builder, or ``"named"`` for generators
    read from files.
    """

    kind: str
    index: int
    prime: int = 0

    def __str__(self) -> str:
        if self.kind == "unit":
            return f"u{self.index}"
        if self.kind == "prime":
            return f"p{self.prime}.{self.index}"
        if self.kind == "class":
            return f"x{self.index}"
        return f"g{self.index}"

    @classmethod
    def parse(cls, text: str) -> "GeneratorId":
        head, rest = text[0], text[1:]
        if head == "u":
            return cls("unit", int(rest))
        if head == "p":
            prime, index = rest.split(".")
            return cls("prime", int(index), int(prime))
        if head == "x":
            return cls("class", int(rest))
        if head == "g":
            return cls("named", int(rest))
        raise ValueError(f"bad generator id {text!r}")


@dataclass(frozen=True)
class Generator:
    id: GeneratorId
    label: str
    witness: ProjectiveClass


@dataclass
class Presentation:
    primes: SPrimeSet
    generators: list[Generator]
    relators: list[Word]
    provenance: dict = field(default_factory=dict)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def witness_of(self, letter: int) -> HurwitzElement:
        rep = self.generators[abs(letter) - 1].witness.rep
        return rep if letter > 0 else conjugate(rep)

    def evaluate(self, word: Sequence[int]) -> HurwitzElement:
        """Multiply witnesses along ``word``, inverting by conjugation.

        The result is the true product times the positive integer
        ``denominator(word)``.
        """
        out = ONE
        for letter in word:
            out = multiply(out, self.witness_of(letter))
        return out

    def denominator(self, word: Sequence[int]) -> int:
        d = 1
        for letter in word:
            if letter < 0:
                d *= self.generators[-letter - 1].witness.norm
        return d

    def word_class(self, word: Sequence[int]) -> ProjectiveClass:
        return canonical_class(self.evaluate(word))

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        parts = []
        for letter in word:
            name = self.generators[abs(letter) - 1].label
            parts.append(name if letter > 0 else f"{name}^-1")
        return " ".join(parts)


def _require_odd(primes: SPrimeSet) -> None:
    if not len(primes):
        raise NoOddPrimes("at least one odd prime is required")


def _letter(gen: Optional[int], exponent: int = 1) -> tuple[int, ...]:
    # unit index 0 is the identity and has no generator
    if not gen:
        return ()
    return (gen * exponent,)


def build_main(primes: SPrimeSet) -> Presentation:
    """Presentation on the eleven unit classes and one generator per tree neighbour."""
    _require_odd(primes)
    units = unit_transversal()
    unit_pos = {c: i for i, c in enumerate(units)}

    generators = [
        Generator(GeneratorId("unit", i), f"u{i}", units[i]) for i in range(1, len(units))
    ]
    offset: dict[int, int] = {}
    transversals = {}
    for p in primes:
        tp = prime_transversal(p)
        transversals[p] = tp
        offset[p] = len(generators)
        for i, c in enumerate(tp):
            generators.append(Generator(GeneratorId("prime", i, p), f"p{p}_{i}", c))

    def gen(p, i):
        return offset[p] + i + 1

    relators: list[Word] = []
    counts = {1: 0, 2: 0, 3: 0, 4: 0}

    # type 1: products inside the unit group
    for s in range(1, len(units)):
        for t in range(1, len(units)):
            nu = unit_pos[units[s] * units[t]]
            relators.append((s, t) + _letter(nu, -1))
            counts[1] += 1

    # type 2: sigma * tau lands in p times a unit
    for p, tp in transversals.items():
        for i, sigma in enumerate(tp):
            hits = 0
            for j, tau in enumerate(tp):
                nu = unit_pos.get(sigma * tau)
                if nu is None:
                    continue
                relators.append((gen(p, i), gen(p, j)) + _letter(nu, -1))
                counts[2] += 1
                hits += 1
            if hits != 1:
                raise MatchNotFound(2, (p, i))

    # type 3: sigma in A_p, tau in A_q with q < p; sigma*tau = nu*alpha*beta
    plist = list(primes)
    for qi, q in enumerate(plist):
        for p in plist[qi + 1:]:
            table: dict[ProjectiveClass, list[tuple[int, int, int]]] = {}
            for n, nu in enumerate(units):
                for a, alpha in enumerate(transversals[q]):
                    na = nu * alpha
                    for b, beta in enumerate(transversals[p]):
                        table.setdefault(na * beta, []).append((n, a, b))
            for t, tau in enumerate(transversals[q]):
                for s, sigma in enumerate(transversals[p]):
                    found = table.get(sigma * tau, [])
                    if len(found) != 1:
                        raise MatchNotFound(3, (p, s, q, t))
                    n, a, b = found[0]
                    relators.append(
                        (gen(p, s), gen(q, t), -gen(p, b), -gen(q, a)) + _letter(n, -1)
                    )
                    counts[3] += 1

    # type 4: nu * sigma = tau * mu
    for p, tp in transversals.items():
        table4: dict[ProjectiveClass, list[tuple[int, int]]] = {}
        for t, tau in enumerate(tp):
            for m, mu in enumerate(units):
                table4.setdefault(tau * mu, []).append((t, m))
        for s, sigma in enumerate(tp):
            for n in range(1, len(units)):
                found = table4.get(units[n] * sigma, [])
                if len(found) != 1:
                    raise MatchNotFound(4, (p, n, s))
                t, m = found[0]
                relators.append((n, gen(p, s)) + _letter(m, -1) + (-gen(p, t),))
                counts[4] += 1

    provenance = {"algorithm": "main", "type_counts": {str(k): v for k, v in counts.items()}}
    return Presentation(primes, generators, relators, provenance)


def build_oracle(primes: SPrimeSet, cap: int = 5000) -> Presentation:
    """One generator per class of norm dividing m_S, one relator per product triple."""
    _require_odd(primes)
    m = primes.m
    units = unit_transversal()
    classes = [units[i] for i in range(1, len(units))]
    for d in range(2, m + 1):
        if m % d == 0:
            classes.extend(sorted({canonical_class(e) for e in elements_of_norm(d)}))
            if len(classes) > cap:
                raise SizeLimitExceeded(f"more than {cap} generators for S={primes}")
    position = {c: i + 1 for i, c in enumerate(classes)}
    generators = [
        Generator(GeneratorId("class", i + 1), f"x{i + 1}", c) for i, c in enumerate(classes)
    ]
    relators: list[Word] = []
    for i, sigma in enumerate(classes, start=1):
        for j, tau in enumerate(classes, start=1):
            nu = sigma * tau
            if m % nu.norm:
                continue
            k = position.get(nu)  # None means the identity class
            relators.append((i, j) + _letter(k, -1))
    provenance = {"algorithm": "oracle", "relators": len(relators)}
    return Presentation(primes, generators, relators, provenance)


@dataclass
class VerificationReport:
    scalars: list[Optional[Fraction]]
    bad_witnesses: list[int]

    @property
    def failed_relators(self) -> list[int]:
        return [i for i, s in enumerate(self.scalars) if s is None]

    @property
    def passed(self) -> bool:
        return not self.bad_witnesses and not self.failed_relators

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}: {len(self.scalars)} relators, "
            f"{len(self.failed_relators)} non-scalar, "
            f"{len(self.bad_witnesses)} witnesses outside the S-unit group"
        )


def relator_scalar(pres: Presentation, word: Sequence[int]) -> Optional[Fraction]:
    """The rational number a relator evaluates to, or None if it is not scalar."""
    value = pres.evaluate(word)
    if not value.is_scalar():
        return None
    return Fraction(value.w, 2 * pres.denominator(word))


def verify_presentation(pres: Presentation) -> VerificationReport:
    bad = [
        i + 1
        for i, g in enumerate(pres.generators)
        if not class_in_projective_sunits(g.witness, pres.primes)
    ]
    scalars = [relator_scalar(pres, r) for r in pres.relators]
    return VerificationReport(scalars, bad)
