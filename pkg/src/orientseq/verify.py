"""Property checks: n-window, orientable, negative orientable, good.

Every check returns a :class:`Verdict`; a failing verdict carries the first
violating pair of window indices in scan order (i ascending, then j).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import RingSequence, Tuple, is_negasymmetric, negrev, reverse, windows

N_WINDOW = "n_window"
ORIENTABLE = "orientable"
NEGATIVE_ORIENTABLE = "negative_orientable"
GOOD = "good"

PROPERTIES = (N_WINDOW, ORIENTABLE, NEGATIVE_ORIENTABLE, GOOD)


@dataclass(frozen=True)
class Verdict:
    property: str
    holds: bool
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"{self.property}: holds"
        return f"{self.property}: fails, witness {self.witness}"


@dataclass
class RunProfile:
    """Cyclic maximal runs of every symbol present in a sequence.

    ``runs[a]`` lists ``(start, length)`` pairs with starts in ascending order.
    A run that wraps past the end of the ring is reported at its start index.
    """

    runs: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    def max_run(self, a: int) -> int:
        return max((length for _, length in self.runs.get(a, ())), default=0)

    @property
    def max_runs(self) -> dict[int, int]:
        return {a: self.max_run(a) for a in self.runs}


def _index(wins: list[Tuple]) -> dict[Tuple, list[int]]:
    where: dict[Tuple, list[int]] = defaultdict(list)
    for i, w in enumerate(wins):
        where[w].append(i)
    return where


def _window_check(wins: list[Tuple], where: dict[Tuple, list[int]]) -> Optional[tuple[int, int]]:
    first = None
    for w, idx in where.items():
        if len(idx) > 1 and (first is None or idx[0] < first[0]):
            first = (idx[0], idx[1])
    return first


def _paired_check(
    seq: RingSequence, n: int, prop: str, partner: Callable[[Tuple], Tuple]
) -> Verdict:
    wins = windows(seq, n)
    where = _index(wins)
    dup = _window_check(wins, where)
    if dup is not None:
        return Verdict(prop, False, dup)
    for i, w in enumerate(wins):
        hits = where.get(partner(w))
        if hits:
            return Verdict(prop, False, (i, hits[0]))
    return Verdict(prop, True)


def is_n_window(seq: RingSequence, n: int) -> Verdict:
    if n < 1:
        raise ValueError("n must be >= 1")
    wins = windows(seq, n)
    dup = _window_check(wins, _index(wins))
    return Verdict(N_WINDOW, dup is None, dup)


def is_orientable(seq: RingSequence, n: int) -> Verdict:
    """Distinct windows, and no window equals the reverse of any window.

    Palindromic windows count as violations (witness ``(i, i)``).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _paired_check(seq, n, ORIENTABLE, reverse)


def is_negative_orientable(seq: RingSequence, n: int) -> Verdict:
    if n < 1:
        raise ValueError("n must be >= 1")
    q = seq.q
    return _paired_check(seq, n, NEGATIVE_ORIENTABLE, lambda w: negrev(w, q))


def run_profile(seq: RingSequence) -> RunProfile:
    s = seq.symbols
    m = len(s)
    if all(x == s[0] for x in s):
        raise ValueError("a constant sequence has no bordered runs")
    # rotate so position 0 begins a run
    start = next(i for i in range(m) if s[i] != s[i - 1])
    runs: dict[int, list[tuple[int, int]]] = defaultdict(list)
    i = 0
    while i < m:
        j = i
        sym = s[(start + i) % m]
        while j < m and s[(start + j) % m] == sym:
            j += 1
        runs[sym].append(((start + i) % m, j - i))
        i = j
    return RunProfile({a: sorted(r) for a, r in sorted(runs.items())})


def is_good(seq: RingSequence, n: int) -> Verdict:
    """Every run of 0 has length at most n - 2.

    The witness of a failure is ``(run start, run length)``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if 0 not in seq.symbols:
        return Verdict(GOOD, True)
    if all(x == 0 for x in seq.symbols):
        return Verdict(GOOD, False, (0, len(seq)))
    for start, length in run_profile(seq).runs[0]:
        if length > n - 2:
            return Verdict(GOOD, False, (start, length))
    return Verdict(GOOD, True)


def check(seq: RingSequence, n: int, prop: str) -> Verdict:
    if prop == N_WINDOW:
        return is_n_window(seq, n)
    if prop == ORIENTABLE:
        return is_orientable(seq, n)
    if prop == NEGATIVE_ORIENTABLE:
        return is_negative_orientable(seq, n)
    if prop == GOOD:
        return is_good(seq, n)
    raise ValueError(f"unknown property {prop!r}")


def parity_check(seq: RingSequence, n: int) -> bool:
    """For each negasymmetric (n-1)-tuple v, the windows of S and of -S^R
    starting with v are even in number.

    Only meaningful for negative orientable sequences; anything else is
    rejected.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not is_negative_orientable(seq, n):
        raise ValueError("parity_check requires a negative orientable sequence")
    q = seq.q
    prefixes: Counter[Tuple] = Counter()
    for w in windows(seq, n):
        prefixes[w[:-1]] += 1
        prefixes[negrev(w, q)[:-1]] += 1
    return all(c % 2 == 0 for v, c in prefixes.items() if is_negasymmetric(v, q))
