"""Global token alphabet and ASCII tokenizers.

One enumeration of string tokens serves every group: tape cells hold these
tokens directly.  External text uses the ASCII renderings below, tokenized by
maximal munch (longest token first).
"""

from __future__ import annotations

from .errors import NotInLanguage

# Tape markers.  Unicode so they can never collide with the ASCII alphabets.
BEGIN = "⊞"  # immovable start marker at cell 0
BLANK = "⊡"  # blank cell

# Work symbols that only ever appear on auxiliary tapes.
TURN = "T"          # unary turn counter
MARK_LP = "(*"      # marked stack copies of the four brackets
MARK_LB = "[*"
MARK_RP = ")*"
MARK_RB = "]*"
CONV_B_HASH = "b#"  # convolution pairs (b-track, #-track)
CONV_B_NONE = "b_"
CONV_NONE_HASH = "_#"

# Z2 wr Z2 alphabet.
Z2Z2_SIGMA = ("0", "1", "C0", "C1")

# Z2 wr F2 alphabet: ten main symbols and fourteen additional ones.
Z2F2_SIGMA = (
    "0", "1", "D0", "D1", "E0", "E1", "(", ")", "[", "]",
    "D0A", "D1A", "D0B", "D1B", "D0C", "D1C", "E0C", "E1C",
    "A0", "A1", "B0", "B1", "C0", "C1",
)

# Thompson's F alphabet.
F_SIGMA = ("a", "b", "#")

_Z2F2_BY_LENGTH = sorted(Z2F2_SIGMA, key=len, reverse=True)


def tokenize_z2z2(text: str) -> list[str]:
    """Tokenize ASCII text over {0,1,C0,C1} by maximal munch."""
    out = []
    i = 0
    while i < len(text):
        if text[i] == "C":
            if i + 1 < len(text) and text[i + 1] in "01":
                out.append(text[i : i + 2])
                i += 2
                continue
            raise NotInLanguage(f"dangling 'C' at position {i}")
        if text[i] in "01":
            out.append(text[i])
            i += 1
            continue
        raise NotInLanguage(f"unknown symbol {text[i]!r} at position {i}")
    return out


def tokenize_z2f2(text: str) -> list[str]:
    """Tokenize ASCII text over the 24-symbol alphabet by maximal munch.

    Whitespace separates tokens and is otherwise ignored; the renderer emits a
    space only where a plain D/E token is followed by a superscripted one and
    bare concatenation would munch differently (e.g. D0 C0 versus D0C 0).
    """
    out = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        for tok in _Z2F2_BY_LENGTH:
            if text.startswith(tok, i):
                out.append(tok)
                i += len(tok)
                break
        else:
            raise NotInLanguage(f"unknown symbol {text[i]!r} at position {i}")
    return out


def render_z2f2(tokens: list[str]) -> str:
    """ASCII rendering that re-tokenizes to exactly the given sequence."""
    parts = []
    prev = ""
    for tok in tokens:
        if prev in ("D0", "D1", "E0", "E1") and (prev + tok[0]) in Z2F2_SIGMA:
            parts.append(" ")
        parts.append(tok)
        prev = tok
    return "".join(parts)


def tokenize_f(text: str) -> list[str]:
    """Tokenize ASCII text over {a,b,#}."""
    for i, ch in enumerate(text):
        if ch not in "ab#":
            raise NotInLanguage(f"unknown symbol {ch!r} at position {i}")
    return list(text)


def render(tokens: list[str]) -> str:
    """ASCII rendering of a token sequence (inverse of the tokenizers)."""
    return "".join(tokens)
