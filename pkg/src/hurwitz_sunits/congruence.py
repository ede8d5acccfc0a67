"""Splittings of the quaternion algebra at odd primes and reduction maps.

At an odd prime p, pick a, b with a^2 + b^2 + 1 = 0 mod p^k and send

    I -> [[a, b], [b, -a]],    J -> [[0, 1], [-1, 0]].

This identifies the Hurwitz order with 2x2 matrices modulo p^k.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import CapExceeded, closure_order
from .hurwitz import HurwitzElement, ProjectiveClass, is_prime, reduced_norm


class InvalidPrime(ValueError):
    pass


class NormMismatch(ValueError):
    pass


class PrimeInS(ValueError):
    pass


@dataclass(frozen=True)
class SplittingData:
    p: int
    k: int
    a: int
    b: int

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    def check(self) -> bool:
        return (self.a * self.a + self.b * self.b + 1) % self.modulus == 0


@dataclass(frozen=True)
class ResidueMatrix:
    entries: tuple[int, int, int, int]  # row-major
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(v % self.modulus for v in self.entries))

    def __matmul__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return ResidueMatrix((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h), self.modulus)

    def __add__(self, other: "ResidueMatrix") -> "ResidueMatrix":
        return ResidueMatrix(tuple(x + y for x, y in zip(self.entries, other.entries)), self.modulus)

    def det(self) -> int:
        a, b, c, d = self.entries
        return (a * d - b * c) % self.modulus

    def is_scalar(self) -> bool:
        a, b, c, d = self.entries
        return b == 0 and c == 0 and a == d

    def is_zero(self) -> bool:
        return not any(self.entries)

    @classmethod
    def identity(cls, modulus: int) -> "ResidueMatrix":
        return cls((1, 0, 0, 1), modulus)


def _hensel_lift(root: int, const: int, p: int, k: int) -> int:
    """Lift a simple root of t^2 + const mod p to mod p^k."""
    mod = p
    for _ in range(1, k):
        mod *= p
        f = root * root + const
        root = (root - f * pow(2 * root, -1, mod)) % mod
    return root


def find_splitting(p: int, k: int = 1, choice: int = 0) -> SplittingData:
    """Solve a^2 + b^2 + 1 = 0 mod p^k.

    Solutions mod p are searched with ``a`` then ``b`` increasing and the
    ``choice``-th one is lifted; the coordinate with a unit derivative is
    the one that moves.
    """
    if p == 2:
        raise InvalidPrime("the quaternion algebra does not split at 2")
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("precision must be positive")
    seen = 0
    for a in range(p):
        for b in range(p):
            if (a * a + b * b + 1) % p:
                continue
            if seen < choice:
                seen += 1
                continue
            mod = p ** k
            if b % p:
                b = _hensel_lift(b, a * a + 1, p, k)
            else:
                a = _hensel_lift(a, b * b + 1, p, k)
            data = SplittingData(p, k, a % mod, b % mod)
            assert data.check()
            return data
    raise ValueError(f"only {seen} splittings mod {p}")


def basis_images(s: SplittingData) -> tuple[ResidueMatrix, ...]:
    n = s.modulus
    one = ResidueMatrix((1, 0, 0, 1), n)
    i = ResidueMatrix((s.a, s.b, s.b, -s.a), n)
    j = ResidueMatrix((0, 1, -1, 0), n)
    return one, i, j, i @ j


def rho(x: HurwitzElement, s: SplittingData) -> ResidueMatrix:
    n = s.modulus
    half = pow(2, -1, n)
    images = basis_images(s)
    acc = [0, 0, 0, 0]
    for coeff, m in zip(x, images):
        for t in range(4):
            acc[t] += coeff * m.entries[t]
    return ResidueMatrix(tuple(v * half for v in acc), n)  # type: ignore[arg-type]


def normalize_line(u: int, v: int, p: int) -> tuple[int, int]:
    u, v = u % p, v % p
    if u:
        return (1, v * pow(u, -1, p) % p)
    if v:
        return (0, 1)
    raise ValueError("zero vector has no line")


def neighbor_label(c: ProjectiveClass, s: SplittingData) -> tuple[int, int]:
    """The line mod p spanned by the columns of rho(rep).

    For rep of norm p, rho(rep) has rank one mod p and its column space is
    the reduction of the image lattice, which names the neighbouring vertex.
    """
    p = s.p
    if c.norm != p:
        raise NormMismatch(f"class has norm {c.norm}, expected {p}")
    m = rho(c.rep, SplittingData(p, 1, s.a % p, s.b % p))
    a, b, cc, d = m.entries
    if a or cc:
        return normalize_line(a, cc, p)
    return normalize_line(b, d, p)


def projective_line(p: int) -> list[tuple[int, int]]:
    return [(1, t) for t in range(p)] + [(0, 1)]


@dataclass
class CongruenceReport:
    q: int
    power: int
    images: list[ResidueMatrix]
    nonscalar_relators: list[int]
    image_order: Optional[int]

    @property
    def passed(self) -> bool:
        return not self.nonscalar_relators

    def summary(self) -> str:
        order = self.image_order if self.image_order is not None else "cap exceeded"
        return (
            f"q={self.q} r={self.power}: {len(self.nonscalar_relators)} non-scalar relator images; "
            f"projective image order mod {self.q} = {order}"
        )


def congruence_image(pres, q: int, power: int = 1, cap: int = 10**6, raise_on_cap: bool = True) -> CongruenceReport:
    """Push a presentation through rho mod q^power and check every relator."""
    if q in pres.primes:
        raise PrimeInS(f"{q} is in S")
    s = find_splitting(q, power)
    images = [rho(g.witness.rep, s) for g in pres.generators]
    inverse_images = [rho(g.witness.inverse().rep, s) for g in pres.generators]
    bad = []
    for idx, word in enumerate(pres.relators):
        m = ResidueMatrix.identity(s.modulus)
        for letter in word:
            m = m @ (images[letter - 1] if letter > 0 else inverse_images[-letter - 1])
        if not m.is_scalar():
            bad.append(idx)
    mod_q = [ResidueMatrix(m.entries, q) for m in images]
    try:
        order = closure_order(mod_q, projectivize=True, cap=cap, modulus=q)
    except CapExceeded:
        if raise_on_cap:
            raise
        order = None
    return CongruenceReport(q, power, images, bad, order)


def det_matches_norm(x: HurwitzElement, s: SplittingData) -> bool:
    return (rho(x, s).det() - reduced_norm(x)) % s.modulus == 0
