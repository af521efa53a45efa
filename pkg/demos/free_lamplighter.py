"""Bracketed normal forms for the lamplighter over the free group F2.

Lamps live on the Cayley graph of F2 = <a, b>.  The encoder scans the
horizontal line through the identity, then recursively expands every position
whose perpendicular subtree holds content: '(' groups enumerate vertical
lines, '[' groups horizontal ones.  The construction converges in finitely
many sweeps; each intermediate stream is printable.
"""

from tapegroups import z2wrf2
from tapegroups.oracle_groups import IDENTITY_F2, LampConfigF2, wreath_mul_gen

cfg = LampConfigF2(frozenset({"a", "ab", "abb", "B", "Ba"}), "ab")
print("lamps:", sorted(cfg.lit), "lamplighter:", cfg.pos)
for i, stream in enumerate(z2wrf2.encode_iterations(cfg), start=1):
    print(f"  iteration {i}: {stream}")

# Multiplication edits the string locally: moving along a line, entering a
# sibling group at its pivot, or sprouting/collapsing a two-token group.
nf = z2wrf2.encode(IDENTITY_F2)
print(f"\n{'gen':>3}  normal form")
print(f"{'':>3}  {nf}")
state = IDENTITY_F2
for gen in ["a", "c", "b", "c", "b-", "a-", "b-"]:
    nf, report = z2wrf2.apply_gen_report(nf, gen)
    state = wreath_mul_gen(state, gen)
    assert z2wrf2.decode(nf) == state
    print(f"{gen:>3}  {nf}   ({report.steps} steps)")

print("\nround trip: decode(encode(g)) == g for the element above:",
      z2wrf2.decode(z2wrf2.encode(cfg)) == cfg)
