"""Reading and writing presentations: JSON, GAP and Magma scripts, fixture files."""
from __future__ import annotations

import json
import re
from typing import Sequence

from .fixtures import FIXTURES
from .hurwitz import HurwitzElement, SPrimeSet, canonical_class
from .presentation import Generator, GeneratorId, Presentation, Word

JSON_VERSION = 1

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(IJ|I|J|)")


def parse_quaternion(text: str) -> HurwitzElement:
    """Parse ``a + b I + c J + d I J`` with integer coefficients."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty quaternion")
    coeffs = {"": 0, "I": 0, "J": 0, "IJ": 0}
    pos = 0
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse quaternion {text!r}")
        sign, digits, unit = m.groups()
        if not digits and not unit:
            raise ValueError(f"cannot parse quaternion {text!r}")
        value = int(digits) if digits else 1
        coeffs[unit] += -value if sign == "-" else value
        pos = m.end()
    return HurwitzElement.from_integral(coeffs[""], coeffs["I"], coeffs["J"], coeffs["IJ"])


_TOKEN = re.compile(r"\s*(?:(\^)\s*\{?\s*(-?\d+)\s*\}?|([A-Za-z]\w*)|([(),]))")


def _tokenize(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        caret, power, name, punct = m.groups()
        if caret:
            yield ("pow", int(power))
        elif name:
            yield ("gen", name)
        else:
            yield (punct, punct)
        pos = m.end()


def _inv(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


def _power(word: Word, n: int) -> Word:
    return word * n if n >= 0 else _inv(word) * (-n)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse a relator such as ``(b^-1 a)^3 (a, b^-1)`` into signed indices.

    ``(x, y)`` is the commutator ``x^-1 y^-1 x y``.
    """
    index = {n: i + 1 for i, n in enumerate(names)}
    tokens = list(_tokenize(text))
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def sequence() -> Word:
        out: Word = ()
        while peek() in ("gen", "("):
            out += factor()
        return out

    def factor() -> Word:
        kind, value = take()
        if kind == "gen":
            if value not in index:
                raise ValueError(f"unknown generator {value!r}")
            base: Word = (index[value],)
        else:
            first = sequence()
            if peek() == ",":
                take()
                second = sequence()
                base = _inv(first) + _inv(second) + first + second
            else:
                base = first
            if peek() != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            take()
        while peek() == "pow":
            base = _power(base, take()[1])
        return base

    word = sequence()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return word


def load_fixture(name: str) -> Presentation:
    try:
        entry = FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
    names = [g for g, _ in entry["generators"]]
    generators = [
        Generator(GeneratorId("named", i + 1), g, canonical_class(parse_quaternion(q)))
        for i, (g, q) in enumerate(entry["generators"])
    ]
    relators = [parse_word(r, names) for r in entry["relators"]]
    return Presentation(
        SPrimeSet(tuple(entry["primes"])), generators, relators, {"algorithm": "fixture", "name": name}
    )


def fixture_names() -> list[str]:
    return list(FIXTURES)


def to_json(pres: Presentation) -> str:
    doc = {
        "version": JSON_VERSION,
        "primes": list(pres.primes.primes),
        "generators": [
            {"id": str(g.id), "label": g.label, "coords": list(g.witness.rep)}
            for g in pres.generators
        ],
        "relators": [list(r) for r in pres.relators],
        "provenance": pres.provenance,
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def from_json(text: str) -> Presentation:
    doc = json.loads(text)
    if doc.get("version") != JSON_VERSION:
        raise ValueError(f"unsupported presentation version {doc.get('version')!r}")
    generators = []
    for g in doc["generators"]:
        rep = HurwitzElement(*map(int, g["coords"]))
        if not rep.is_valid:
            raise ValueError(f"coordinates {g['coords']} are not a Hurwitz element")
        generators.append(Generator(GeneratorId.parse(g["id"]), g["label"], canonical_class(rep)))
    n = len(generators)
    relators = []
    for r in doc["relators"]:
        word = tuple(int(x) for x in r)
        if any(x == 0 or abs(x) > n for x in word):
            raise ValueError(f"relator {r} refers to a missing generator")
        relators.append(word)
    return Presentation(SPrimeSet(tuple(doc["primes"])), generators, relators, doc.get("provenance", {}))


def _syllables(word: Word):
    out: list[list[int]] = []
    for letter in word:
        g, e = abs(letter), (1 if letter > 0 else -1)
        if out and out[-1][0] == g and (out[-1][1] > 0) == (e > 0):
            out[-1][1] += e
        else:
            out.append([g, e])
    return out


def _format(word: Word, name, one: str) -> str:
    parts = []
    for g, e in _syllables(word):
        parts.append(name(g) if e == 1 else f"{name(g)}^{e}")
    return "*".join(parts) if parts else one


def to_magma(pres: Presentation) -> str:
    rels = ",".join(_format(r, lambda g: f"t[{g}]", "F!1") for r in pres.relators)
    return (
        f"F<[t]>:=FreeGroup({pres.ngens});\n"
        f"FP:=quo<F|[{rels}]>;\n"
        "R:=ReduceGenerators(FP);\n"
        "print R;\n"
    )


def to_gap(pres: Presentation) -> str:
    lines = [f"F := FreeGroup({pres.ngens});;"]
    rels = ",\n  ".join(_format(r, lambda g: f"F.{g}", "One(F)") for r in pres.relators)
    lines.append(f"G := F / [\n  {rels}\n];;" if pres.relators else "G := F / [];;")
    return "\n".join(lines) + "\n"


def export(pres: Presentation, fmt: str) -> str:
    if fmt == "json":
        return to_json(pres)
    if fmt == "magma":
        return to_magma(pres)
    if fmt == "gap":
        return to_gap(pres)
    raise ValueError(f"unknown format {fmt!r}")
