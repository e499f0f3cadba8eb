"""Tuple counts by (pseudo)weight and the period bounds built on them.

``r_count(q, n, s)`` counts q-ary n-tuples of pseudoweight ``s`` and
``k_count(q, n, w)`` counts zero-free n-tuples of weight ``w``.  Both come
from memoized tables keyed by (n, doubled weight) and filled row by row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import comb, gcd

from .core import HalfInt, check_modulus, count_negasymmetric

PSEUDOWEIGHT = "pseudoweight_r"
ZEROFREE = "zerofree_k"


@dataclass
class CountTable:
    """Counts for one (kind, q), keyed by ``(n, doubled weight)``."""

    kind: str
    q: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    _rows: list[dict[int, int]] = field(default_factory=list, repr=False)

    def _base(self) -> dict[int, int]:
        q = self.q
        row = {2 * i: 1 for i in range(1, q)}
        if self.kind == PSEUDOWEIGHT:
            row[q] = row.get(q, 0) + 1  # the symbol 0 weighs q/2
        return row

    def row(self, n: int) -> dict[int, int]:
        """Nonzero entries of row n as ``{doubled weight: count}``."""
        if n < 1:
            raise ValueError("n must be >= 1")
        base = self._base()
        while len(self._rows) < n:
            if not self._rows:
                new = dict(base)
            else:
                new = {}
                for d, c in self._rows[-1].items():
                    for step, mult in base.items():
                        new[d + step] = new.get(d + step, 0) + c * mult
            self._rows.append(new)
            k = len(self._rows)
            self.entries.update(((k, d), c) for d, c in new.items())
        return self._rows[n - 1]

    def get(self, n: int, doubled: int) -> int:
        return self.row(n).get(doubled, 0)

    def total(self, n: int) -> int:
        return sum(self.row(n).values())


@cache
def count_table(kind: str, q: int) -> CountTable:
    check_modulus(q)
    if kind not in (PSEUDOWEIGHT, ZEROFREE):
        raise ValueError(f"unknown table kind {kind!r}")
    return CountTable(kind, q)


def r_count(q: int, n: int, s) -> int:
    """Number of q-ary n-tuples with pseudoweight exactly ``s``.

    ``s`` may be a :class:`HalfInt` or any number that is a multiple of 1/2;
    for even q it must be an integer.
    """
    check_modulus(q)
    if n < 1:
        raise ValueError("n must be >= 1")
    s = HalfInt.of(s)
    if q % 2 == 0 and not s.is_integer:
        raise ValueError(f"pseudoweight {s} is off the integer grid for even q={q}")
    return count_table(PSEUDOWEIGHT, q).get(n, s.doubled)


def k_count(q: int, n: int, w) -> int:
    """Number of zero-free q-ary n-tuples of weight exactly ``w`` (0 off range)."""
    check_modulus(q)
    if n < 1:
        raise ValueError("n must be >= 1")
    w = HalfInt.of(w)
    if not w.is_integer:
        return 0
    return count_table(ZEROFREE, q).get(n, w.doubled)


def polynomial_coefficient(m: int, r: int, k: int) -> int:
    """Coefficient of x^r in (1 + x + ... + x^m)^k.

    Evaluated by inclusion-exclusion over cells holding more than m objects,
    independently of the table recursions.
    """
    if m < 0 or k < 0:
        raise ValueError("m and k must be non-negative")
    if r < 0 or r > m * k:
        return 0
    if k == 0:
        return 1 if r == 0 else 0
    total = 0
    for j in range(r // (m + 1) + 1):
        term = comb(k, j) * comb(r - j * (m + 1) + k - 1, k - 1)
        total += -term if j % 2 else term
    return total


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("n must be >= 2")


def simple_nos_bound(q: int, n: int) -> int:
    check_modulus(q)
    _check_n(n)
    return (q**n - count_negasymmetric(q, n)) // 2


def nos_bound(q: int, n: int) -> int:
    """Upper bound on the period of a negative orientable sequence of order n."""
    check_modulus(q)
    _check_n(n)
    if q % 2:
        return (q**n - q ** (n // 2) - q ** ((n - 1) // 2) + 1) // 2
    if n % 2:
        return (q**n - 2 * q ** ((n - 1) // 2)) // 2 - 1
    return (q**n - q ** (n // 2)) // 2 - 1


def os2_max_period(q: int) -> int:
    check_modulus(q, 3)
    return q * (q - 1) // 2 if q % 2 else q * (q - 2) // 2


def construction2_period(q: int, n: int) -> int:
    """Number of n-tuples with pseudoweight below nq/2."""
    check_modulus(q, 3)
    _check_n(n)
    return (q**n - r_count(q, n, HalfInt(n * q))) // 2


def construction3_period(q: int, n: int) -> int:
    """Number of zero-free n-tuples with weight below nq/2."""
    check_modulus(q, 3)
    _check_n(n)
    if q % 2 and n % 2:
        return (q - 1) ** n // 2
    return ((q - 1) ** n - k_count(q, n, n * q // 2)) // 2


def construction3_weight(q: int, n: int) -> int:
    """Total symbol weight of a sequence holding every zero-free n-tuple of
    weight below nq/2 exactly once."""
    check_modulus(q, 3)
    _check_n(n)
    total = sum(w * k_count(q, n, w) for w in range(n, n * q) if 2 * w < n * q)
    if total % n:
        raise ArithmeticError(f"tuple weight total {total} not divisible by n={n}")
    return total // n


def table1(max_q: int = 5, max_n: int = 7) -> dict[tuple[int, int], int]:
    return {(q, n): nos_bound(q, n) for q in range(2, max_q + 1) for n in range(2, max_n + 1)}


# Lower bounds guaranteed by the lifting constructions.


def os3_lower_bound(q: int) -> int:
    check_modulus(q, 3)
    base = q * (q - 1) // 2
    if q % 2:
        return q * (base - 1)
    return q * (base - (3 if q == 6 else 2))


def osn_lower_bound(q: int, n: int) -> int:
    check_modulus(q, 3)
    if n < 3:
        raise ValueError("n must be >= 3")
    r = r_count(q, n - 1, HalfInt((n - 1) * q))
    return q * (q ** (n - 1) - r - (4 if q == 6 else 2)) // 2


def tower_seed_m2(q: int) -> int:
    check_modulus(q, 3)
    return (q - 1) * (q - 2) // 2 - (2 if q == 6 else 1)


def tower_seed_m3(q: int) -> int:
    check_modulus(q, 3)
    if q % 2:
        return (q - 1) ** 3 // 2 - 1
    return ((q - 1) ** 3 - (3 * q * q - 6 * q + 4) // 4) // 2 - (2 if q == 6 else 1)


def tower_period(m: int, q: int, s: int) -> int:
    """Period after s lift-and-extend steps from a seed of period m."""
    if m < 0 or s < 0:
        raise ValueError("need m >= 0 and s >= 0")
    return q**s * m + (q**s - 1) // (q - 1)


def is_unit(w: int, q: int) -> bool:
    return gcd(w % q, q) == 1
