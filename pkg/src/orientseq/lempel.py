"""The Lempel morphism, its inverse lift, and the recursions built on them.

``d_beta`` takes scaled first differences; ``inverse_lift`` integrates.  A
negative orientable sequence of order n with unit weight mod q lifts to an
orientable sequence of order n + 1 and q times the period.  The helpers
below make the weight a unit (by trimming uniform runs) and iterate
lift-then-extend to build towers of good sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from . import counting
from .construct import ConstructionError, ConstructionReport, nos2_construction1, nos_construction2
from .core import RingSequence, check_modulus
from .verify import is_good, is_negative_orientable, is_orientable, run_profile

OS = "OS"
NOS = "NOS"


def _require_unit(beta: int, q: int) -> None:
    if gcd(beta % q, q) != 1:
        raise ValueError(f"beta={beta} is not a unit mod {q}")


def d_beta(seq: RingSequence, beta: int = 1) -> RingSequence:
    """Term-wise ``beta * (s[j+1] - s[j]) mod q`` over one period."""
    q = seq.q
    _require_unit(beta, q)
    s = seq.symbols
    m = len(s)
    return RingSequence(q, tuple(beta * (s[(j + 1) % m] - s[j]) % q for j in range(m)))


def additive_order(w: int, q: int) -> int:
    return q // gcd(w % q, q)


@dataclass(frozen=True)
class LiftResult:
    input_period: int
    weight: int
    order: int
    sequence: RingSequence
    start: int

    @property
    def period(self) -> int:
        return self.sequence.period


def inverse_lift(
    seq: RingSequence, start: int = 0, beta: int = 1, order: Optional[int] = None
) -> LiftResult:
    """Integrate ``a[j+1] = a[j] + beta^-1 * s[j]`` from ``a[0] = start``.

    The output runs for h periods of the input, h being the additive order of
    its weight mod q.  With ``order`` given, the input must be negative
    orientable at that order, and a unit-weight input must lift to an
    orientable sequence of order ``order + 1`` (checked).
    """
    q = seq.q
    _require_unit(beta, q)
    if order is not None and not is_negative_orientable(seq, order):
        raise ValueError(f"input is not negative orientable at order {order}")
    inv = pow(beta, -1, q)
    w = seq.weight_mod_q()
    h = additive_order(w, q)
    m = seq.period
    out = [start % q]
    for j in range(h * m - 1):
        out.append((out[-1] + inv * seq.symbols[j % m]) % q)
    lifted = RingSequence(q, tuple(out))
    if order is not None and h == q and not is_orientable(lifted, order + 1):
        raise ConstructionError("unit-weight lift is not orientable")
    return LiftResult(m, w, h, lifted, start % q)


def find_unit_adjustment(q: int, w: int) -> list[int]:
    """Symbols to delete (one each, from uniform runs) so the weight becomes a unit."""
    check_modulus(q, 3)
    w %= q
    if gcd(w, q) == 1:
        return []
    if q == 6:
        return {0: [1], 2: [1], 3: [2], 4: [1, 2]}[w]
    for i in range(1, (q + 1) // 2):
        if gcd((w - i) % q, q) == 1:
            return [i]
    raise ArithmeticError(f"no unit adjustment for w={w} mod {q}")


def delete_from_uniform_run(seq: RingSequence, i: int, n: int) -> RingSequence:
    """Remove one ``i`` from the first run of ``i`` of length at least n.

    Removing a symbol inside a uniform n-tuple drops only that tuple, so
    negative orientability at order n is kept (re-checked when it held).
    """
    if seq.period == 1 or all(x == seq.symbols[0] for x in seq.symbols):
        raise ValueError("uniform tuple absent (constant sequence)")
    runs = run_profile(seq).runs.get(i, [])
    try:
        start = next(r for r, length in runs if length >= n)
    except StopIteration:
        raise ValueError(f"uniform tuple absent: no run of {i} with length >= {n}") from None
    s = seq.symbols
    out = RingSequence(seq.q, s[:start] + s[start + 1 :])
    if is_negative_orientable(seq, n) and not is_negative_orientable(out, n):
        raise ConstructionError("deletion broke negative orientability")
    return out


def make_unit_weight(seq: RingSequence, n: int) -> tuple[RingSequence, list[int]]:
    deletions = find_unit_adjustment(seq.q, seq.weight_mod_q())
    for i in deletions:
        seq = delete_from_uniform_run(seq, i, n)
    return seq, deletions


def maximal_run_starts(seq: RingSequence, a: int) -> list[int]:
    """Start indices, ascending, of the runs of ``a`` with maximal length."""
    if a not in seq.symbols:
        raise ValueError(f"symbol {a} does not occur in the sequence")
    runs = run_profile(seq).runs[a]
    longest = max(length for _, length in runs)
    return [start for start, length in runs if length == longest]


def insert_symbol(seq: RingSequence, r: int, a: int) -> RingSequence:
    s = seq.symbols
    return RingSequence(seq.q, s[:r] + (a,) + s[r:])


def extend_run(seq: RingSequence, a: int) -> RingSequence:
    """Lengthen by one the lowest-indexed run of ``a`` among those of maximal length."""
    return insert_symbol(seq, maximal_run_starts(seq, a)[0], a)


extend_run_Ea = extend_run


@dataclass(frozen=True)
class TraceRow:
    order: int
    period: int
    weight: int
    inserted: Optional[int]
    parity: str


@dataclass
class RecursionTrace:
    rows: list[TraceRow] = field(default_factory=list)

    def periods(self) -> list[int]:
        return [r.period for r in self.rows]


def _verifier(parity: str):
    return is_orientable if parity == OS else is_negative_orientable


def recursive_tower(
    seed: RingSequence, seed_order: int, target_order: int, parity: Optional[str] = None
) -> tuple[RingSequence, RecursionTrace]:
    """Iterate ``S <- E_a(lift(S))`` with ``a = 1 - w(lift(S))`` up to ``target_order``.

    The seed must be good, of unit weight, and negative orientable (or
    orientable) at ``seed_order``; ``parity`` picks which when both hold.
    Stages alternate between the two properties and every stage is checked.
    The extended run is the lowest-indexed maximal run of ``a`` whose
    extension passes that check.
    """
    q = seed.q
    check_modulus(q, 3)
    if target_order < seed_order:
        raise ValueError("target order below seed order")
    if parity is None:
        if is_negative_orientable(seed, seed_order):
            parity = NOS
        elif is_orientable(seed, seed_order):
            parity = OS
        else:
            raise ValueError("seed is neither orientable nor negative orientable")
    elif not _verifier(parity)(seed, seed_order):
        raise ValueError(f"seed fails the {parity} check at order {seed_order}")
    if not is_good(seed, seed_order):
        raise ValueError("seed is not good (a run of 0 is too long)")
    if not counting.is_unit(seed.weight_mod_q(), q):
        raise ValueError(
            f"seed weight {seed.weight_mod_q()} is not a unit mod {q} (unit-weight precondition)"
        )

    trace = RecursionTrace([TraceRow(seed_order, seed.period, seed.weight_mod_q(), None, parity)])
    current = seed
    for order in range(seed_order + 1, target_order + 1):
        lifted = inverse_lift(current).sequence
        a = (1 - lifted.weight_mod_q()) % q
        parity = OS if parity == NOS else NOS
        current = _extend_checked(lifted, a, order, parity)
        if current.period != q * trace.rows[-1].period + 1:
            raise ConstructionError("period recurrence violated")
        trace.rows.append(TraceRow(order, current.period, current.weight_mod_q(), a, parity))
    return current, trace


def _extend_checked(lifted: RingSequence, a: int, order: int, parity: str) -> RingSequence:
    # The lowest-indexed maximal run does not always keep the property at
    # higher orders; later maximal runs are tried in index order.
    check = _verifier(parity)
    for r in maximal_run_starts(lifted, a):
        cand = insert_symbol(lifted, r, a)
        if check(cand, order) and is_good(cand, order):
            return cand
    raise ConstructionError(f"no maximal run of {a} extends to a good {parity} at order {order}")


def predicted_tower_period(m: int, q: int, s: int) -> int:
    if m < 1:
        raise ValueError("seed period must be >= 1")
    return counting.tower_period(m, q, s)


def _lift_pipeline(seed: RingSequence, seed_order: int, method: str, lower: int):
    adjusted, _ = make_unit_weight(seed, seed_order)
    lift = inverse_lift(adjusted, order=seed_order)
    out = lift.sequence
    if not is_orientable(out, seed_order + 1):
        raise ConstructionError(f"{method}: lifted sequence is not orientable")
    if out.period < lower:
        raise ConstructionError(f"{method}: period {out.period} below guaranteed {lower}")
    report = ConstructionReport(
        method, out.q, seed_order + 1, out.period, out.weight_mod_q(),
        out.q * adjusted.period, None, lower,
    )
    return out, report


def build_os3(q: int) -> tuple[RingSequence, ConstructionReport]:
    """Orientable sequence of order 3 lifted from the maximal n = 2 construction."""
    seed, _ = nos2_construction1(q)
    return _lift_pipeline(seed, 2, "os3_lift", counting.os3_lower_bound(q))


def build_os_n(q: int, n: int) -> tuple[RingSequence, ConstructionReport]:
    """Orientable sequence of order n lifted from the pseudoweight construction at n - 1."""
    if n < 3:
        raise ValueError("n must be >= 3")
    seed, _ = nos_construction2(q, n - 1)
    return _lift_pipeline(seed, n - 1, "osn_lift", counting.osn_lower_bound(q, n))


def zero_free_tower(q: int, seed_order: int, target_order: int):
    """Tower grown from a unit-weight trim of the zero-free construction."""
    from .construct import nos_construction3

    seed, _ = nos_construction3(q, seed_order)
    seed, _ = make_unit_weight(seed, seed_order)
    return recursive_tower(seed, seed_order, target_order, parity=NOS)
