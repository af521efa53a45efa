"""Reusable counted tape subroutines.

Every helper is a plain loop over TapeSet primitives, so step accounting is
identical to writing the primitive calls inline.  Suffix shifts carry a k-cell
host buffer (finite state, k <= 3 in all callers): cost is 3 primitives per
visited cell, one pass.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .tapevm import TapeSet
from .tokens import BEGIN, BLANK


def move_n(ts: TapeSet, t: int, n: int, direction: int) -> None:
    if direction > 0:
        for _ in range(n):
            ts.move_right(t)
    else:
        for _ in range(n):
            ts.move_left(t)


def scan_right_until(ts: TapeSet, t: int, stop: frozenset) -> str:
    """Move right one cell at a time; stop with the head on the first stop symbol."""
    while True:
        ts.move_right(t)
        sym = ts.read(t)
        if sym in stop:
            return sym


def read_here(ts: TapeSet, t: int) -> str:
    return ts.read(t)


def move_to_first_blank(ts: TapeSet, t: int) -> None:
    """Leave the head on the first blank at or right of the current cell."""
    while ts.read(t) != BLANK:
        ts.move_right(t)


def move_to_begin(ts: TapeSet, t: int) -> None:
    while ts.read(t) != BEGIN:
        ts.move_left(t)


def write_tokens(ts: TapeSet, t: int, toks: Sequence[str]) -> None:
    """Write toks starting at the head, leaving the head on the last written cell."""
    for i, tok in enumerate(toks):
        if i:
            ts.move_right(t)
        ts.write(t, tok)


def shift_suffix_right(ts: TapeSet, t: int, insert: Sequence[str]) -> None:
    """Insert len(insert) cells at the head position, shifting the suffix right.

    The head must sit on the first cell of the suffix (may be blank).  Single
    rightward pass with a len(insert)-cell buffer; ends past the moved content.
    """
    buf = deque(insert)
    k = len(buf)
    while True:
        old = ts.read(t)
        ts.write(t, buf.popleft())
        buf.append(old)
        if old == BLANK and all(b == BLANK for b in buf):
            return
        ts.move_right(t)
        if k == 0:  # pragma: no cover - degenerate
            return


def shift_suffix_left(ts: TapeSet, t: int, k: int) -> None:
    """Delete the k cells before the head, shifting the suffix at the head left by k.

    The head must sit on the first cell of the suffix; cells head-k .. head-1
    are overwritten.  Ends with the head on the copied terminator blank.
    """
    while True:
        sym = ts.read(t)
        for _ in range(k):
            ts.move_left(t)
        ts.write(t, sym)
        if sym == BLANK:
            return
        for _ in range(k + 1):
            ts.move_right(t)
