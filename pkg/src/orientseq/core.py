"""Tuples and ring sequences over Z_q, plus the elementary transforms.

Tuples are plain Python tuples of ints; the modulus is passed alongside
where it matters.  A :class:`RingSequence` stores one period of a periodic
sequence together with its modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from fractions import Fraction
from typing import Iterable, Sequence

Tuple = tuple[int, ...]


def check_modulus(q: int, minimum: int = 2) -> None:
    if not isinstance(q, int) or q < minimum:
        raise ValueError(f"modulus q must be an integer >= {minimum}, got {q!r}")


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An exact multiple of 1/2, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value: "HalfInt | int | float | Fraction | str") -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        doubled = Fraction(value) * 2
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a multiple of 1/2")
        return cls(int(doubled))

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.doubled == other.doubled
        if isinstance(other, (int, float, Fraction)):
            return Fraction(self.doubled, 2) == other
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.doubled < other.doubled
        if isinstance(other, (int, float, Fraction)):
            return Fraction(self.doubled, 2) < other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(Fraction(self.doubled, 2))

    def __float__(self) -> float:
        return self.doubled / 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled / 2:.1f}"


def make_tuple(symbols: Iterable[int], q: int) -> Tuple:
    t = tuple(int(s) for s in symbols)
    for s in t:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} out of range for q={q}")
    return t


def reverse(t: Sequence[int]) -> Tuple:
    return tuple(reversed(t))


def negate(t: Sequence[int], q: int) -> Tuple:
    return tuple((-s) % q for s in t)


def negrev(t: Sequence[int], q: int) -> Tuple:
    """The negated reverse ``-t^R``."""
    return tuple((-s) % q for s in reversed(t))


def is_negasymmetric(t: Sequence[int], q: int) -> bool:
    return tuple(t) == negrev(t, q)


def is_uniform(t: Sequence[int], c: int | None = None) -> bool:
    if not t:
        return False
    first = t[0] if c is None else c
    return all(s == first for s in t)


def count_negasymmetric(q: int, n: int) -> int:
    """Number of q-ary negasymmetric n-tuples (n >= 2)."""
    check_modulus(q)
    if n < 2:
        raise ValueError("n must be >= 2")
    if n % 2 == 0:
        return q ** (n // 2)
    half = q ** ((n - 1) // 2)
    return half if q % 2 else 2 * half


def weight(t: Sequence[int]) -> int:
    return sum(t)


def pseudoweight(t: Sequence[int], q: int) -> HalfInt:
    # zero counts as q/2
    return HalfInt(sum(q if s == 0 else 2 * s for s in t))


def is_zero_free(t: Sequence[int]) -> bool:
    return 0 not in t


@dataclass(frozen=True)
class RingSequence:
    """One period of a periodic sequence over Z_q."""

    q: int
    symbols: Tuple

    def __post_init__(self) -> None:
        check_modulus(self.q)
        object.__setattr__(self, "symbols", make_tuple(self.symbols, self.q))
        if not self.symbols:
            raise ValueError("a ring sequence needs at least one symbol")

    @classmethod
    def parse(cls, text: str, q: int) -> "RingSequence":
        """Build from a digit string such as ``"0122 1201"`` or ``"[110]"``.

        Commas switch to decimal-integer parsing, needed for q > 10.
        """
        body = text.strip().strip("[]")
        if "," in body:
            return cls(q, tuple(int(tok) for tok in body.split(",")))
        return cls(q, tuple(int(ch) for ch in body if not ch.isspace()))

    @property
    def period(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i % len(self.symbols)]

    def __str__(self) -> str:
        if self.q <= 10:
            return "[" + "".join(map(str, self.symbols)) + "]"
        return "[" + ",".join(map(str, self.symbols)) + "]"

    def weight(self) -> int:
        return sum(self.symbols)

    def weight_mod_q(self) -> int:
        return sum(self.symbols) % self.q

    def negate(self) -> "RingSequence":
        return RingSequence(self.q, negate(self.symbols, self.q))

    def reverse(self) -> "RingSequence":
        return RingSequence(self.q, reverse(self.symbols))

    def translate(self, b: int) -> "RingSequence":
        return RingSequence(self.q, tuple((s + b) % self.q for s in self.symbols))

    def shift(self, k: int) -> "RingSequence":
        k %= len(self.symbols)
        return RingSequence(self.q, self.symbols[k:] + self.symbols[:k])

    def canonical(self) -> "RingSequence":
        """Lexicographically least rotation."""
        s = self.symbols
        best = min(s[i:] + s[:i] for i in range(len(s)))
        return RingSequence(self.q, best)

    def is_rotation_of(self, other: "RingSequence") -> bool:
        if self.q != other.q or len(self) != len(other):
            return False
        return self.canonical().symbols == other.canonical().symbols

    def least_period(self) -> int:
        m = len(self.symbols)
        for d in range(1, m + 1):
            if m % d == 0 and self.symbols == self.symbols[d:] + self.symbols[:d]:
                return d
        return m


def windows(seq: RingSequence, n: int) -> list[Tuple]:
    """All m cyclic n-windows of ``seq``, in index order."""
    if n < 1:
        raise ValueError("window length must be >= 1")
    s = seq.symbols
    m = len(s)
    ext = s * (n // m + 2) if n > m else s + s[: n - 1]
    return [ext[i : i + n] for i in range(m)]


def seq_weight_mod_q(seq: RingSequence) -> int:
    return seq.weight_mod_q()


def transform(seq: RingSequence, kind: str, arg: int = 0) -> RingSequence:
    """Apply ``negate``, ``reverse``, ``translate`` (by ``arg``) or ``shift``."""
    if kind == "negate":
        return seq.negate()
    if kind == "reverse":
        return seq.reverse()
    if kind == "translate":
        return seq.translate(arg)
    if kind == "shift":
        return seq.shift(arg)
    raise ValueError(f"unknown transform {kind!r}")
