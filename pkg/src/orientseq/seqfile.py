"""Plain-text sequence files.

::

    q=4 n=3 period=22
    0,1,2,2,1,2,0,1,...
    compact=01221201...        (only when q <= 10)
    canonical=0,0,1,0,...      (least rotation)

ASCII, LF line endings, no trailing whitespace.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import RingSequence

_HEADER = re.compile(r"q=(\d+) n=(\d+) period=(\d+)")


class SequenceFileError(ValueError):
    pass


def dumps(seq: RingSequence, n: int, canonical: bool = True) -> str:
    lines = [f"q={seq.q} n={n} period={seq.period}", ",".join(map(str, seq.symbols))]
    if seq.q <= 10:
        lines.append("compact=" + "".join(map(str, seq.symbols)))
    if canonical:
        lines.append("canonical=" + ",".join(map(str, seq.canonical().symbols)))
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[RingSequence, int]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise SequenceFileError("expected a header line and a symbol line")
    m = _HEADER.fullmatch(lines[0])
    if not m:
        raise SequenceFileError(f"bad header {lines[0]!r}")
    q, n, period = map(int, m.groups())
    try:
        symbols = tuple(int(tok) for tok in lines[1].split(","))
        seq = RingSequence(q, symbols)
    except ValueError as exc:
        raise SequenceFileError(f"bad symbol line: {exc}") from None
    if seq.period != period:
        raise SequenceFileError(f"header period {period} but {seq.period} symbols")
    for line in lines[2:]:
        key, sep, value = line.partition("=")
        if not sep:
            raise SequenceFileError(f"unexpected line {line!r}")
        if key == "compact":
            if q > 10:
                raise SequenceFileError("compact form only allowed for q <= 10")
            if value != "".join(map(str, symbols)):
                raise SequenceFileError("compact line disagrees with the symbol list")
        elif key == "canonical":
            if value != ",".join(map(str, seq.canonical().symbols)):
                raise SequenceFileError("canonical line is not the least rotation")
        else:
            raise SequenceFileError(f"unknown key {key!r}")
    return seq, n


def read(path) -> tuple[RingSequence, int]:
    return loads(Path(path).read_text(encoding="ascii"))


def write(path, seq: RingSequence, n: int) -> None:
    Path(path).write_bytes(dumps(seq, n).encode("ascii"))
