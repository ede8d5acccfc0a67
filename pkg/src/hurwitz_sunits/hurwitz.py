"""Exact arithmetic in the Hurwitz order and its projective classes.

Elements are stored in doubled coordinates: the tuple ``(w, x, y, z)``
stands for ``(w + x*I + y*J + z*IJ) / 2``.  A tuple lies in the Hurwitz
order exactly when all four entries share a parity, so everything stays
integral and ``(1, 1, 1, 1)`` is the half-integral basis element.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, NamedTuple


class ZeroElement(ValueError):
    """Raised when a projective class is requested for the zero quaternion."""


class HurwitzElement(NamedTuple):
    w: int
    x: int
    y: int
    z: int

    @classmethod
    def from_integral(cls, a: int, b: int, c: int, d: int) -> "HurwitzElement":
        """Build ``a + b*I + c*J + d*IJ`` from ordinary integer coordinates."""
        return cls(2 * a, 2 * b, 2 * c, 2 * d)

    @property
    def is_valid(self) -> bool:
        p = self.w & 1
        return (self.x & 1) == p and (self.y & 1) == p and (self.z & 1) == p

    def is_scalar(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, HurwitzElement):
            return multiply(self, other)
        if isinstance(other, int):
            return HurwitzElement(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "HurwitzElement":
        return HurwitzElement(-self.w, -self.x, -self.y, -self.z)

    def __str__(self) -> str:
        if self.w % 2 == 0:
            coeffs = [c // 2 for c in self]
            suffix = ""
        else:
            coeffs = list(self)
            suffix = "/2"
        terms = []
        for c, unit in zip(coeffs, ("", "I", "J", "IJ")):
            if c == 0:
                continue
            mag = abs(c)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(f"{sign}{body}" if not terms else f" {sign} {body}")
        text = "".join(terms) or "0"
        return f"({text}){suffix}" if suffix else text


ONE = HurwitzElement(2, 0, 0, 0)
I = HurwitzElement(0, 2, 0, 0)
J = HurwitzElement(0, 0, 2, 0)
IJ = HurwitzElement(0, 0, 0, 2)
OMEGA = HurwitzElement(1, 1, 1, 1)


def multiply(a: HurwitzElement, b: HurwitzElement) -> HurwitzElement:
    # Hamilton product on doubled coordinates; the raw product carries a factor 4,
    # and halving it keeps the result in doubled coordinates.
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return HurwitzElement(
        (aw * bw - ax * bx - ay * by - az * bz) // 2,
        (aw * bx + ax * bw + ay * bz - az * by) // 2,
        (aw * by - ax * bz + ay * bw + az * bx) // 2,
        (aw * bz + ax * by - ay * bx + az * bw) // 2,
    )


def product(elements: Iterable[HurwitzElement]) -> HurwitzElement:
    return reduce(multiply, elements, ONE)


def conjugate(a: HurwitzElement) -> HurwitzElement:
    return HurwitzElement(a.w, -a.x, -a.y, -a.z)


def reduced_norm(a: HurwitzElement) -> int:
    return (a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z) // 4


@dataclass(frozen=True, order=True)
class ProjectiveClass:
    """An element of H*/Q* restricted to classes meeting the Hurwitz order.

    ``rep`` is the primitive, sign-normalised Hurwitz element of the class,
    so equality of classes is equality of representatives.
    """

    rep: HurwitzElement

    @property
    def norm(self) -> int:
        return reduced_norm(self.rep)

    def __mul__(self, other: "ProjectiveClass") -> "ProjectiveClass":
        return canonical_class(multiply(self.rep, other.rep))

    def inverse(self) -> "ProjectiveClass":
        return canonical_class(conjugate(self.rep))

    def is_identity(self) -> bool:
        return self.rep == ONE

    def __str__(self) -> str:
        return str(self.rep)


def canonical_class(a: HurwitzElement) -> ProjectiveClass:
    """Primitive representative with the first nonzero coordinate positive."""
    g = gcd(*a)
    if g == 0:
        raise ZeroElement("the zero quaternion has no projective class")
    rep = HurwitzElement(*(c // g for c in a))
    if not rep.is_valid:
        rep = rep * 2
    for c in rep:
        if c:
            if c < 0:
                rep = -rep
            break
    return ProjectiveClass(rep)


IDENTITY = ProjectiveClass(ONE)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class NoOddPrimes(ValueError):
    """The prime set is empty or contains something other than odd primes."""


@dataclass(frozen=True)
class SPrimeSet:
    primes: tuple[int, ...]

    def __post_init__(self):
        primes = tuple(sorted(set(int(p) for p in self.primes)))
        for p in primes:
            if p == 2:
                raise NoOddPrimes("primes must be odd")
            if not is_prime(p):
                raise NoOddPrimes(f"{p} is not prime")
        object.__setattr__(self, "primes", primes)

    @classmethod
    def of(cls, *primes: int) -> "SPrimeSet":
        return cls(tuple(primes))

    @classmethod
    def parse(cls, text: str) -> "SPrimeSet":
        parts = [t for t in text.replace(" ", "").split(",") if t]
        return cls(tuple(int(t) for t in parts))

    @property
    def m(self) -> int:
        out = 1
        for p in self.primes:
            out *= p
        return out

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.primes)) + "}"


def is_smooth(n: int, primes: Iterable[int]) -> bool:
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


def class_in_projective_sunits(c: ProjectiveClass, s: SPrimeSet) -> bool:
    return is_smooth(c.norm, s.primes)
