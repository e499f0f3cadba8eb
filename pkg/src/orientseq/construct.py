"""Generators for orientable and negative orientable sequences.

* :func:`maximal_os2` -- Euler circuit of K_q (q odd) or K_q minus a
  perfect matching (q even).
* :func:`nos2_construction1` -- union of explicit arc-disjoint circuits in
  the digraph G_q, joined by one Euler pass.
* :func:`nos_construction2` -- Euler circuit over all n-tuples of
  pseudoweight below nq/2.
* :func:`nos_construction3` -- Euler circuit over zero-free n-tuples of
  weight below nq/2.

Each returns ``(sequence, ConstructionReport)`` and checks its own output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional

from . import counting
from .core import RingSequence, Tuple, check_modulus, pseudoweight
from .graph import DirectedMultigraph, eulerian_circuit, replay, undirected_euler
from .verify import is_negative_orientable, is_orientable

OS2 = "os2"
NOS2_CIRCUITS = "nos2_circuits"
NOS_PSEUDOWEIGHT = "nos_pseudoweight"
NOS_ZEROFREE = "nos_zerofree"


class ConstructionError(RuntimeError):
    """A construction produced output that fails its own checks."""


@dataclass(frozen=True)
class ConstructionReport:
    method: str
    q: int
    n: int
    period: int
    weight_mod_q: int
    predicted_period: int
    bound: Optional[int] = None
    lower_bound: Optional[int] = None

    @property
    def gap(self) -> Optional[int]:
        return None if self.bound is None else self.bound - self.period

    def line(self) -> str:
        def fmt(x):
            return "-" if x is None else str(x)

        return f"{self.method} {self.period} {self.weight_mod_q} {fmt(self.bound)} {fmt(self.gap)}"


def _report(method, seq, n, predicted, bound=None, lower_bound=None) -> ConstructionReport:
    if seq.period != predicted:
        raise ConstructionError(
            f"{method}: period {seq.period} differs from predicted {predicted}"
        )
    return ConstructionReport(
        method, seq.q, n, seq.period, seq.weight_mod_q(), predicted, bound, lower_bound
    )


def _require_q(q: int) -> None:
    check_modulus(q)
    if q < 3:
        raise ValueError(f"construction needs q > 2, got q={q}")


# --- n = 2 orientable -------------------------------------------------------


def os2_edges(q: int) -> list[tuple[int, int]]:
    """Edges of K_q, minus the matching {2i, 2i+1} when q is even."""
    edges = [(a, b) for a in range(q) for b in range(a + 1, q)]
    if q % 2 == 0:
        edges = [(a, b) for a, b in edges if not (a % 2 == 0 and b == a + 1)]
    return edges


def maximal_os2(q: int) -> tuple[RingSequence, ConstructionReport]:
    _require_q(q)
    circuit = undirected_euler(q, os2_edges(q))
    seq = RingSequence(q, tuple(circuit.cycle))
    if not is_orientable(seq, 2):
        raise ConstructionError(f"os2 output {seq} is not orientable")
    bound = counting.os2_max_period(q)
    return seq, _report(OS2, seq, 2, bound, bound)


# --- Construction I ---------------------------------------------------------


def construction1_circuits(q: int) -> list[list[int]]:
    """The ring sequences C_0, C_1, ... whose arcs tile the construction.

    C_0 runs 0 -> j -> j -> 0 for 1 <= j < q/2.  For i >= 1, C_i visits
    i -> j -> i -> -j -> i for i < j < q/2 and, when q is even, closes with
    the excursion i -> q/2 -> i.
    """
    _require_q(q)
    top = (q - 1) // 2  # largest j with j < q/2
    circuits = [[x for j in range(1, top + 1) for x in (0, j, j)]]
    last = top if q % 2 == 0 else top - 1
    for i in range(1, last + 1):
        c = [x for j in range(i + 1, top + 1) for x in (i, j, i, (-j) % q)]
        if q % 2 == 0:
            c += [i, q // 2]
        circuits.append(c)
    return circuits


def _checked_circuit(g: DirectedMultigraph, start=None, tie_break=None):
    circuit = eulerian_circuit(g, start=start, tie_break=tie_break)
    if not replay(g, circuit):
        raise ConstructionError("walk does not use every arc exactly once")
    return circuit


def ring_arcs(ring: Iterable[int]) -> list[tuple[int, int]]:
    ring = list(ring)
    return [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]


def nos2_construction1(
    q: int, tie_break: Optional[Callable] = None
) -> tuple[RingSequence, ConstructionReport]:
    _require_q(q)
    g = DirectedMultigraph(range(q))
    for c in construction1_circuits(q):
        for u, v in ring_arcs(c):
            g.add_arc(u, v)
    circuit = _checked_circuit(g, start=0, tie_break=tie_break)
    seq = RingSequence(q, tuple(circuit.cycle))
    if not is_negative_orientable(seq, 2):
        raise ConstructionError(f"construction I output {seq} is not negative orientable")
    predicted = q * (q - 1) // 2 - (q + 1) % 2
    return seq, _report(NOS2_CIRCUITS, seq, 2, predicted, counting.nos_bound(q, 2))


# --- Constructions II and III -----------------------------------------------


def low_pseudoweight_tuples(q: int, n: int) -> list[Tuple]:
    """All n-tuples u with pseudoweight(u) < nq/2, in lexicographic order."""
    return [u for u in product(range(q), repeat=n) if pseudoweight(u, q).doubled < n * q]


def low_weight_zero_free_tuples(q: int, n: int) -> list[Tuple]:
    """All zero-free n-tuples u with weight(u) < nq/2, in lexicographic order."""
    return [u for u in product(range(1, q), repeat=n) if 2 * sum(u) < n * q]


def debruijn_subgraph(tuples: Iterable[Tuple]) -> DirectedMultigraph:
    """Each n-tuple becomes an arc from its (n-1)-prefix to its (n-1)-suffix."""
    g = DirectedMultigraph()
    for u in tuples:
        g.add_arc(u[:-1], u[1:])
    return g


def sequence_from_tuples(
    q: int, tuples: list[Tuple], tie_break: Optional[Callable] = None
) -> RingSequence:
    """Ring sequence whose n-windows are exactly ``tuples`` (an Euler circuit
    of the induced de Bruijn subgraph)."""
    circuit = _checked_circuit(debruijn_subgraph(tuples), tie_break=tie_break)
    return RingSequence(q, tuple(v[0] for v in circuit.cycle))


def nos_construction2(
    q: int, n: int, tie_break: Optional[Callable] = None
) -> tuple[RingSequence, ConstructionReport]:
    _require_q(q)
    if n < 2:
        raise ValueError("n must be >= 2")
    seq = sequence_from_tuples(q, low_pseudoweight_tuples(q, n), tie_break)
    if not is_negative_orientable(seq, n):
        raise ConstructionError(f"construction II output is not negative orientable (q={q}, n={n})")
    return seq, _report(
        NOS_PSEUDOWEIGHT, seq, n, counting.construction2_period(q, n), counting.nos_bound(q, n)
    )


def nos_construction3(
    q: int, n: int, tie_break: Optional[Callable] = None
) -> tuple[RingSequence, ConstructionReport]:
    _require_q(q)
    if n < 2:
        raise ValueError("n must be >= 2")
    seq = sequence_from_tuples(q, low_weight_zero_free_tuples(q, n), tie_break)
    if not is_negative_orientable(seq, n):
        raise ConstructionError(f"construction III output is not negative orientable (q={q}, n={n})")
    if seq.weight() != counting.construction3_weight(q, n):
        raise ConstructionError("construction III weight differs from the tuple-sum formula")
    return seq, _report(
        NOS_ZEROFREE, seq, n, counting.construction3_period(q, n), counting.nos_bound(q, n)
    )


GENERATORS = {
    OS2: lambda q, n=2, **kw: maximal_os2(q),
    NOS2_CIRCUITS: lambda q, n=2, **kw: nos2_construction1(q, **kw),
    NOS_PSEUDOWEIGHT: nos_construction2,
    NOS_ZEROFREE: nos_construction3,
}
