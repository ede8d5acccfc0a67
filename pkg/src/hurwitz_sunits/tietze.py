"""Tietze-move simplification of presentations that carry quaternion witnesses.

Only moves that preserve the group are used: reducing and de-duplicating
relators, eliminating a generator that occurs exactly once in a relator,
and shortening relators by substituting the shorter half of another
relator.  Eliminating a generator never touches the witnesses of the
others, so witness checks stay valid throughout.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

from .presentation import Presentation, Word

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplifyBudget:
    max_passes: int = 200
    max_relator_growth: int = 400
    max_eliminated_word_length: int = 12

    def __post_init__(self):
        if min(self.max_passes, self.max_relator_growth, self.max_eliminated_word_length) < 1:
            raise ValueError("budget entries must be positive")


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def free_and_cyclic_reduce(word: Sequence[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i > 1 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def cyclic_canonical(word: Sequence[int]) -> Word:
    """Least rotation of the word or its inverse; equal for conjugate/inverse relators."""
    if not word:
        return ()
    best = None
    for w in (tuple(word), invert(word)):
        for k in range(len(w)):
            r = w[k:] + w[:k]
            if best is None or r < best:
                best = r
    return best  # type: ignore[return-value]


def _tidy(relators: Sequence[Word]) -> list[Word]:
    seen = set()
    out = []
    for r in relators:
        r = free_and_cyclic_reduce(r)
        if not r:
            continue
        key = cyclic_canonical(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _substitute(word: Sequence[int], gen: int, image: Word) -> Word:
    out: list[int] = []
    inv = invert(image)
    for letter in word:
        if letter == gen:
            out.extend(image)
        elif letter == -gen:
            out.extend(inv)
        else:
            out.append(letter)
    return free_and_cyclic_reduce(out)


def _definition(relator: Word, gen: int) -> Word:
    """Solve ``relator = 1`` for the single occurrence of ``gen``."""
    for k, letter in enumerate(relator):
        if abs(letter) == gen:
            rest = relator[k + 1:] + relator[:k]  # relator ~ letter * rest
            return invert(rest) if letter > 0 else rest
    raise ValueError("generator does not occur")


def _renumber(word: Word, gone: int) -> Word:
    return tuple(x if abs(x) < gone else (x - 1 if x > 0 else x + 1) for x in word)


def eliminate_generator(pres: Presentation, gen: int, relator_index: int) -> Presentation:
    """Drop generator ``gen`` using the relator that contains it exactly once."""
    rel = pres.relators[relator_index]
    image = _definition(rel, gen)
    relators = []
    for i, r in enumerate(pres.relators):
        if i == relator_index:
            continue
        relators.append(_renumber(_substitute(r, gen, image), gen))
    gens = pres.generators[: gen - 1] + pres.generators[gen:]
    return replace(pres, generators=gens, relators=_tidy(relators))


def _elimination_candidates(relators: Sequence[Word], ngens: int):
    out = []
    for idx, r in enumerate(relators):
        counts: dict[int, int] = {}
        for letter in r:
            counts[abs(letter)] = counts.get(abs(letter), 0) + 1
        for g, c in counts.items():
            if c == 1:
                out.append((len(r), g, idx))
    out.sort()
    return out


def _try_eliminate(pres: Presentation, budget: SimplifyBudget) -> Optional[Presentation]:
    total = sum(map(len, pres.relators))
    for length, gen, idx in _elimination_candidates(pres.relators, pres.ngens):
        if length - 1 > budget.max_eliminated_word_length:
            break
        candidate = eliminate_generator(pres, gen, idx)
        growth = sum(map(len, candidate.relators)) - total
        if growth <= budget.max_relator_growth:
            return candidate
    return None


def _rewrite_rules(relator: Word) -> dict[Word, Word]:
    """Map each cyclic piece longer than half of ``relator`` to its shorter equivalent."""
    rules: dict[Word, Word] = {}
    n = len(relator)
    for w in (relator, invert(relator)):
        for k in range(n):
            rot = w[k:] + w[:k]
            for length in range(n // 2 + 1, n + 1):
                rules.setdefault(rot[:length], invert(rot[length:]))
    return rules


def _shorten(word: Word, rules: dict[Word, Word], lengths: list[int]) -> Optional[Word]:
    n = len(word)
    if not n:
        return None
    doubled = word + word
    for length in lengths:
        if length > n:
            continue
        for i in range(n):
            piece = doubled[i:i + length]
            repl = rules.get(piece)
            if repl is not None and len(repl) < length:
                rest = doubled[i + length:i + n]
                return free_and_cyclic_reduce(repl + rest)
    return None


def _substring_pass(pres: Presentation, budget: SimplifyBudget) -> Optional[Presentation]:
    relators = list(pres.relators)
    changed = False
    short = sorted(
        (i for i, r in enumerate(relators) if len(r) <= budget.max_eliminated_word_length),
        key=lambda i: (len(relators[i]), i),
    )
    for i in short:
        base = relators[i]
        if not base:
            continue
        rules = _rewrite_rules(base)
        lengths = sorted({len(k) for k in rules}, reverse=True)
        for j, r in enumerate(relators):
            if j == i:
                continue
            while True:
                new = _shorten(r, rules, lengths)
                if new is None:
                    break
                r = new
                changed = True
            relators[j] = r
    if not changed:
        return None
    return replace(pres, relators=_tidy(relators))


def simplify(
    pres: Presentation,
    budget: SimplifyBudget | None = None,
    on_move: Callable[[str, Presentation], None] | None = None,
) -> Presentation:
    """Shrink a presentation by Tietze moves, within ``budget``.

    ``on_move`` is called with a move name and the new presentation after
    each accepted move (tests use it to re-verify witnesses).
    """
    budget = budget or SimplifyBudget()
    current = replace(pres, relators=_tidy(pres.relators), provenance=dict(pres.provenance))
    if on_move:
        on_move("tidy", current)
    for _ in range(budget.max_passes):
        nxt = _try_eliminate(current, budget)
        move = "eliminate"
        if nxt is None:
            nxt = _substring_pass(current, budget)
            move = "rewrite"
        if nxt is None:
            break
        current = nxt
        if on_move:
            on_move(move, current)
    log.debug("simplified to %d generators, %d relators", current.ngens, len(current.relators))
    current.provenance["simplified"] = True
    return current
