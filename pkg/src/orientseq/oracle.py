"""Brute-force ground truth for small q and n.

Nothing here shares code with the constructions or the counting tables:
counts come from scanning every tuple, and longest sequences from a
depth-first search over the windows themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .core import RingSequence

DEFAULT_CAP = 256

ORIENTABLE = "orientable"
NEGATIVE_ORIENTABLE = "negative_orientable"

# Longest NOS_3(3), found by exhaustive_max in about 2 ms and confirmed by an
# unpruned scan of every ternary ring up to length 11 (about 1.2 s).  The
# upper bound is 11, so it is not attained.
MAX_NOS_3_3 = 10


class SearchCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchResult:
    q: int
    n: int
    property: str
    max_period: int
    witness: Optional[RingSequence]


def _check_cap(q: int, n: int, cap: int) -> None:
    if q**n > cap:
        raise SearchCapExceeded(f"q^n = {q ** n} exceeds the search cap {cap}")


def exhaustive_count(q: int, n: int, predicate: str, value=None, cap: int = 1 << 20) -> int:
    """Count n-tuples by direct scan.

    ``predicate`` is ``"negasymmetric"``, ``"pseudoweight"`` (equal to
    ``value``) or ``"zerofree_weight"`` (zero-free with weight ``value``).
    """
    _check_cap(q, n, cap)
    count = 0
    for u in product(range(q), repeat=n):
        if predicate == "negasymmetric":
            hit = all((u[i] + u[n - 1 - i]) % q == 0 for i in range(n))
        elif predicate == "pseudoweight":
            hit = sum(Fraction(q, 2) if x == 0 else x for x in u) == Fraction(value)
        elif predicate == "zerofree_weight":
            hit = 0 not in u and sum(u) == value
        else:
            raise ValueError(f"unknown predicate {predicate!r}")
        count += hit
    return count


def exhaustive_max(q: int, n: int, prop: str, cap: int = DEFAULT_CAP) -> SearchResult:
    """Longest cyclic sequence whose n-windows satisfy ``prop``.

    Windows are arcs of the order-n de Bruijn digraph, so a sequence is a
    closed trail.  The trail starts at its lexicographically least window
    (all later windows must exceed it) and branches are cut when even
    taking one window from every untouched conjugate pair could not beat
    the best period found.
    """
    _check_cap(q, n, cap)
    if prop == ORIENTABLE:
        def partner(w):
            return w[::-1]
    elif prop == NEGATIVE_ORIENTABLE:
        def partner(w):
            return tuple((-x) % q for x in reversed(w))
    else:
        raise ValueError(f"unknown property {prop!r}")

    allw = list(product(range(q), repeat=n))
    conj = {w: partner(w) for w in allw}
    usable = [w for w in allw if conj[w] != w]
    best_len = 0
    best_seq: Optional[tuple] = None

    for start in usable:
        # windows that may still appear: greater than start, conjugate also not start
        blocked = {start, conj[start]}
        avail = {w for w in usable if w > start and w not in blocked}
        pairs = {min(w, conj[w]) for w in avail}
        if 1 + len(pairs) <= best_len:
            continue
        closing = start[:-1]
        path = [start]
        used = set(blocked)

        def free_pairs() -> int:
            return sum(1 for p in pairs if p not in used and conj[p] not in used)

        def dfs(last: tuple) -> None:
            nonlocal best_len, best_seq
            tail = last[1:]
            if tail == closing and len(path) > best_len:
                best_len = len(path)
                best_seq = tuple(w[0] for w in path)
            if len(path) + free_pairs() <= best_len:
                return
            for x in range(q):
                w = tail + (x,)
                if w in used or w <= start or conj[w] == w:
                    continue
                used.add(w)
                used.add(conj[w])
                path.append(w)
                dfs(w)
                path.pop()
                used.discard(w)
                used.discard(conj[w])

        dfs(start)

    witness = RingSequence(q, best_seq) if best_seq else None
    return SearchResult(q, n, prop, best_len, witness)
