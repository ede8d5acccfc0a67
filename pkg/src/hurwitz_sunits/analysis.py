"""Abelian invariants of presentations and orders of finite matrix groups."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "0"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _axpy(row: dict[int, int], k: int, other: dict[int, int]) -> None:
    # row += k * other, dropping zeros
    for c, v in other.items():
        nv = row.get(c, 0) + k * v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)


def _combine(s: int, a: dict[int, int], t: int, b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for c, v in a.items():
        out[c] = s * v
    for c, v in b.items():
        nv = out.get(c, 0) + t * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return {c: v for c, v in out.items() if v}


def echelon_rows(rows: Iterable[dict[int, int]]) -> dict[int, dict[int, int]]:
    """Row-echelon basis of the integer row lattice, keyed by pivot column.

    Rows are sparse ``{column: value}`` dicts.  Only unimodular row
    operations are used, so the lattice (and hence the cokernel) is
    unchanged.  This keeps the dense Smith step small even when a
    presentation has tens of thousands of relators.
    """
    pivots: dict[int, dict[int, int]] = {}
    for source in rows:
        row = {c: v for c, v in source.items() if v}
        while row:
            c = min(row)
            b = row[c]
            piv = pivots.get(c)
            if piv is None:
                if b < 0:
                    row = {k: -v for k, v in row.items()}
                pivots[c] = row
                break
            a = piv[c]
            if b % a == 0:
                _axpy(row, -(b // a), piv)
                continue
            g, s, t = _xgcd(a, b)
            new_piv = _combine(s, piv, t, row)
            rest = _combine(a // g, row, -(b // g), piv)
            if new_piv[c] < 0:
                new_piv = {k: -v for k, v in new_piv.items()}
            pivots[c] = new_piv
            row = rest
    return pivots


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix, in divisibility order."""
    a = [list(map(int, r)) for r in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # pivot of least absolute value in the remaining block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, ncols):
                            ai[j] -= q * at[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for r in a[t:]:
                            r[j] -= q * r[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # row and column cleared; enforce divisibility on the block
                bad = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                at, ab = a[t], a[bad]
                for j in range(t, ncols):
                    at[j] += ab[j]
                continue
            # move the smallest remainder into the pivot slot and repeat
            best = (abs(p), t, t)
            for i in range(t + 1, nrows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, ncols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def eliminate_unit_columns(rows: Iterable[dict[int, int]]) -> tuple[list[dict[int, int]], int]:
    """Use rows with a +-1 entry to eliminate their column, sparsely.

    Returns the leftover rows (no +-1 entries, eliminated columns gone) and
    the number of columns eliminated.  Shortest rows are used first to keep
    fill-in down.
    """
    store: dict[int, dict[int, int]] = {}
    where: dict[int, set[int]] = {}
    heap: list[tuple[int, int]] = []
    for rid, source in enumerate(rows):
        row = {c: v for c, v in source.items() if v}
        if not row:
            continue
        store[rid] = row
        for c in row:
            where.setdefault(c, set()).add(rid)
        heapq.heappush(heap, (len(row), rid))
    eliminated = 0
    while heap:
        size, rid = heapq.heappop(heap)
        row = store.get(rid)
        if row is None:
            continue
        if len(row) != size:
            heapq.heappush(heap, (len(row), rid))
            continue
        units = [c for c, v in row.items() if v in (1, -1)]
        if not units:
            continue
        c = min(units)
        sign = row[c]
        del store[rid]
        for k in row:
            where[k].discard(rid)
        for other_id in sorted(where.pop(c, ())):
            other = store[other_id]
            k = other[c] * sign
            for col, v in row.items():
                nv = other.get(col, 0) - k * v
                if nv:
                    if col not in other:
                        where.setdefault(col, set()).add(other_id)
                    other[col] = nv
                else:
                    other.pop(col, None)
                    if col != c:
                        where[col].discard(other_id)
            if not other:
                del store[other_id]
            else:
                heapq.heappush(heap, (len(other), other_id))
        eliminated += 1
    return [store[r] for r in sorted(store)], eliminated


def invariants_from_rows(rows: Iterable[dict[int, int]], ncols: int) -> AbelianInvariants:
    rest, eliminated = eliminate_unit_columns(rows)
    pivots = echelon_rows(rest)
    cols = sorted({c for r in pivots.values() for c in r})
    colpos = {c: k for k, c in enumerate(cols)}
    dense = []
    for c in sorted(pivots):
        line = [0] * len(cols)
        for k, v in pivots[c].items():
            line[colpos[k]] = v
        dense.append(line)
    diag = smith_diagonal(dense) if dense else []
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion, ncols - eliminated - len(diag))


def exponent_rows(relators: Iterable[Sequence[int]]) -> list[dict[int, int]]:
    rows = []
    for word in relators:
        row: dict[int, int] = {}
        for letter in word:
            g = abs(letter) - 1
            row[g] = row.get(g, 0) + (1 if letter > 0 else -1)
        rows.append({c: v for c, v in row.items() if v})
    return rows


def abelianization(pres) -> AbelianInvariants:
    """Invariant factors of the abelianised group of ``pres``."""
    return invariants_from_rows(exponent_rows(pres.relators), pres.ngens)


class CapExceeded(RuntimeError):
    pass


class SingularGenerator(ValueError):
    pass


def _normalize(m: tuple[int, int, int, int], q: int) -> tuple[int, int, int, int]:
    for v in m:
        if v:
            inv = pow(v, -1, q)
            return tuple(x * inv % q for x in m)  # type: ignore[return-value]
    raise SingularGenerator("zero matrix")


def _mat_mul(a, b, q):
    return (
        (a[0] * b[0] + a[1] * b[2]) % q,
        (a[0] * b[1] + a[1] * b[3]) % q,
        (a[2] * b[0] + a[3] * b[2]) % q,
        (a[2] * b[1] + a[3] * b[3]) % q,
    )


def closure_order(gens, projectivize: bool = True, cap: int = 10**6, modulus: int | None = None) -> int:
    """Order of the group generated by 2x2 residue matrices, by breadth-first closure.

    ``gens`` are objects with ``entries`` (a, b, c, d) and ``modulus``, or
    plain 4-tuples together with ``modulus``.  Projectivising (dividing out
    scalars) needs a prime modulus.
    """
    mats = []
    for g in gens:
        entries = tuple(getattr(g, "entries", g))
        q = getattr(g, "modulus", modulus)
        if modulus is None:
            modulus = q
        elif q != modulus:
            raise ValueError("generators have different moduli")
        mats.append(tuple(v % modulus for v in entries))
    if modulus is None:
        return 1
    q = modulus
    for m in mats:
        if gcd(m[0] * m[3] - m[1] * m[2], q) != 1:
            raise SingularGenerator(f"{m} is not invertible mod {q}")
    norm = (lambda m: _normalize(m, q)) if projectivize else (lambda m: m)
    mats = [norm(m) for m in mats]
    start = norm((1, 0, 0, 1))
    seen = {start}
    frontier = deque([start])
    while frontier:
        x = frontier.popleft()
        for g in mats:
            y = norm(_mat_mul(x, g, q))
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeds {cap} elements")
                frontier.append(y)
    return len(seen)
