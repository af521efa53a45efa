"""Brute-force algebraic models of the three groups.

These are the ground truth every differential test compares against, so they
share no code with the normal-form machinery: wreath products are (lamp set,
position) pairs updated by the defining formulas, and Thompson's group acts by
exact dyadic piecewise-linear homeomorphisms of [0,1].

Dyadic rationals are (odd-or-zero numerator, exponent) pairs meaning n / 2**e,
with arbitrary-precision integers; breakpoint denominators grow with word
length and must never overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import NotInLanguage

# ---------------------------------------------------------------------------
# dyadic rationals as (numerator, exponent) with numerator odd or zero


def dy(n: int, e: int = 0) -> Tuple[int, int]:
    if n == 0:
        return (0, 0)
    while n % 2 == 0:
        n //= 2
        e -= 1
    return (n, e)


def dy_add(a, b):
    na, ea = a
    nb, eb = b
    if ea == eb:
        return dy(na + nb, ea)
    if ea > eb:
        return dy(na + (nb << (ea - eb)), ea)
    return dy((na << (eb - ea)) + nb, eb)


def dy_sub(a, b):
    return dy_add(a, (-b[0], b[1]))


def dy_mul(a, b):
    return dy(a[0] * b[0], a[1] + b[1])


def dy_shift(a, s: int):
    """a * 2**s"""
    if a[0] == 0:
        return a
    return (a[0], a[1] - s)


def dy_cmp(a, b) -> int:
    d = dy_sub(a, b)[0]
    return (d > 0) - (d < 0)


DY0 = (0, 0)
DY1 = (1, 0)

# ---------------------------------------------------------------------------
# wreath product oracles

Z2Point = Tuple[int, int]


@dataclass(frozen=True)
class LampConfigZ2:
    """Element of Z2 wr Z^2: finitely many lit lamps plus the lamplighter."""

    lit: frozenset
    pos: Z2Point


@dataclass(frozen=True)
class LampConfigF2:
    """Element of Z2 wr F2: lamps and lamplighter are freely reduced words."""

    lit: frozenset
    pos: str


IDENTITY_Z2 = LampConfigZ2(frozenset(), (0, 0))
IDENTITY_F2 = LampConfigF2(frozenset(), "")

_F2_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}
_Z2_STEP = {"a": (1, 0), "a-": (-1, 0), "b": (0, 1), "b-": (0, -1)}
_F2_STEP = {"a": "a", "a-": "A", "b": "b", "b-": "B"}


def f2_is_reduced(word: str) -> bool:
    return all(_F2_INV[x] != y for x, y in zip(word, word[1:]))


def f2_mul_letter(word: str, letter: str) -> str:
    """Right-multiply a reduced word by one letter, with free cancellation."""
    if word and _F2_INV[word[-1]] == letter:
        return word[:-1]
    return word + letter


def f2_reduce(word: str) -> str:
    out: list[str] = []
    for ch in word:
        if out and _F2_INV[out[-1]] == ch:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def wreath_mul_gen(config, gen: str):
    """Right multiplication by a generator: a, a-, b, b- move the lamplighter,
    c toggles the lamp under it."""
    if isinstance(config, LampConfigZ2):
        if gen == "c":
            lit = set(config.lit)
            lit.symmetric_difference_update({config.pos})
            return LampConfigZ2(frozenset(lit), config.pos)
        dx, dy_ = _Z2_STEP[gen]
        return LampConfigZ2(config.lit, (config.pos[0] + dx, config.pos[1] + dy_))
    if isinstance(config, LampConfigF2):
        if gen == "c":
            lit = set(config.lit)
            lit.symmetric_difference_update({config.pos})
            return LampConfigF2(frozenset(lit), config.pos)
        return LampConfigF2(config.lit, f2_mul_letter(config.pos, _F2_STEP[gen]))
    raise TypeError(f"not a lamp configuration: {config!r}")


# ---------------------------------------------------------------------------
# Thompson's group F as dyadic PL homeomorphisms


class DyadicPL:
    """Increasing PL homeomorphism of [0,1] with dyadic breakpoints and
    power-of-two slopes, in canonical form (no collinear middle breakpoints)."""

    __slots__ = ("pts",)

    def __init__(self, pts: Iterable[Tuple[Tuple[int, int], Tuple[int, int]]],
                 _canonical: bool = False):
        pts = tuple(pts)
        if not _canonical:
            pts = _canonicalize(pts)
        self.pts = pts

    def __eq__(self, other) -> bool:
        return isinstance(other, DyadicPL) and self.pts == other.pts

    def __hash__(self) -> int:
        return hash(self.pts)

    def __repr__(self) -> str:
        def fmt(d):
            n, e = d
            return f"{n}/2^{e}" if e > 0 else str(n * (1 << -e) if n else 0)
        return "DyadicPL[" + ", ".join(f"({fmt(x)},{fmt(y)})" for x, y in self.pts) + "]"

    def __call__(self, x: Tuple[int, int]) -> Tuple[int, int]:
        pts = self.pts
        lo, hi = 0, len(pts) - 1
        while lo + 1 < hi:  # rightmost breakpoint with x_i <= x
            mid = (lo + hi) // 2
            if dy_cmp(pts[mid][0], x) <= 0:
                lo = mid
            else:
                hi = mid
        (x1, y1), (x2, y2) = pts[lo], pts[lo + 1]
        s = _slope_exp(x1, y1, x2, y2)
        return dy_add(y1, dy_shift(dy_sub(x, x1), s))

    def inverse(self) -> "DyadicPL":
        return DyadicPL(tuple((y, x) for x, y in self.pts), _canonical=True)

    def breakpoints(self):
        return self.pts


def _slope_exp(x1, y1, x2, y2) -> int:
    rise = dy_sub(y2, y1)
    run = dy_sub(x2, x1)
    if rise[0] != run[0]:
        raise NotInLanguage("segment slope is not a power of two")
    return run[1] - rise[1]


def _canonicalize(pts):
    if len(pts) < 3:
        return tuple(pts)
    out = [pts[0]]
    for i in range(1, len(pts) - 1):
        x1, y1 = out[-1]
        x2, y2 = pts[i]
        x3, y3 = pts[i + 1]
        lhs = dy_mul(dy_sub(y2, y1), dy_sub(x3, x2))
        rhs = dy_mul(dy_sub(y3, y2), dy_sub(x2, x1))
        if lhs != rhs:
            out.append(pts[i])
    out.append(pts[-1])
    return tuple(out)


PL_IDENTITY = DyadicPL(((DY0, DY0), (DY1, DY1)), _canonical=True)


def pl_compose(f: DyadicPL, g: DyadicPL) -> DyadicPL:
    """Canonical map x -> g(f(x)), exact arithmetic throughout."""
    xs = [x for x, _ in f.pts]
    finv = f.inverse()
    xs.extend(finv(u) for u, _ in g.pts)
    xs = _sorted_unique(xs)
    pts = tuple((x, g(f(x))) for x in xs)
    return DyadicPL(pts)


def _sorted_unique(ds):
    # decorate with an exact comparable integer key: n / 2**e scaled by 2**E
    E = max(e for _, e in ds)
    dec = sorted({(n << (E - e), (n, e)) for n, e in ds})
    return [d for _, d in dec]


def pl_generator(which: str, sign: int) -> DyadicPL:
    """The fixed PL realizations of the two standard generators.

    x0 has breakpoints (0,0),(1/2,1/4),(3/4,1/2),(1,1); x1 is the identity on
    [0,1/2] with x0 rescaled into [1/2,1].  sign -1 returns the exact inverse.
    """
    if which == "x0":
        m = _nice_generator(0)
    elif which == "x1":
        m = _nice_generator(1)
    else:
        raise ValueError(f"unknown generator {which!r}")
    return m.inverse() if sign < 0 else m


def _nice_generator(i: int) -> DyadicPL:
    # identity on [0, 1 - 2**-i], then x0 squeezed into the final interval
    x0 = ((DY0, DY0), (dy(1, 1), dy(1, 2)), (dy(3, 2), dy(1, 1)), (DY1, DY1))
    if i == 0:
        return DyadicPL(x0, _canonical=True)
    left = dy_sub(DY1, dy(1, i))  # 1 - 2**-i
    pts = [(DY0, DY0), (left, left)]
    for x, y in x0[1:]:
        sx = dy_add(left, dy_shift(x, -i))
        sy = dy_add(left, dy_shift(y, -i))
        pts.append((sx, sy))
    return DyadicPL(tuple(pts), _canonical=True)


def pl_letter(index: int, sign: int) -> DyadicPL:
    """PL map of the infinite-presentation generator with the given index."""
    m = _nice_generator(index)
    return m.inverse() if sign < 0 else m


def _parse_blocks(u: str):
    # independent minimal parser: a^r b^s blocks separated by '#'
    blocks = []
    for block in u.split("#"):
        r = s = 0
        i = 0
        while i < len(block) and block[i] == "a":
            r += 1
            i += 1
        while i < len(block) and block[i] == "b":
            s += 1
            i += 1
        if i != len(block):
            raise NotInLanguage(f"malformed block {block!r}")
        blocks.append((r, s))
    return blocks


def pl_eval_normalform(u: str) -> DyadicPL:
    """The PL map of the group element a normal-form string denotes.

    Composes the generator maps of x0^r0 x1^r1 ... xM^{+-} ... x0^{-s0}; the
    first letter of the word is the outermost map.
    """
    if u == "":
        return PL_IDENTITY
    blocks = _parse_blocks(u)
    acc = PL_IDENTITY
    for i, (r, _) in enumerate(blocks):
        for _ in range(r):
            acc = pl_compose(pl_letter(i, +1), acc)
    for i in range(len(blocks) - 1, -1, -1):
        s = blocks[i][1]
        for _ in range(s):
            acc = pl_compose(pl_letter(i, -1), acc)
    return acc


def pl_mul_gen(elem: DyadicPL, gen: str) -> DyadicPL:
    """Right multiplication by x0/x1 (suffix '-' for inverse): the generator
    map is applied first, the accumulated element after it."""
    which, sign = (gen[:-1], -1) if gen.endswith("-") else (gen, +1)
    return pl_compose(pl_generator(which, sign), elem)
