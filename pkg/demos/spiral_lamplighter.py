"""Walking the square spiral: normal forms for the lamplighter over Z^2.

The plane is enumerated along a counter-clockwise square spiral, so a group
element (lamps + lamplighter position) flattens into a single string over
{0, 1, C0, C1}.  Right multiplication by a generator never re-encodes the
whole configuration: a two-tape program slides the C-mark by a jump whose
size depends only on the region of the plane and the number of completed
spiral turns.
"""

from tapegroups import spiral, z2wrz2
from tapegroups.framework import nonqg_diagonal_ratios
from tapegroups.oracle_groups import IDENTITY_Z2, wreath_mul_gen

# The first few spiral vertices.
print("spiral start:", [spiral.spiral_point(k) for k in range(1, 11)])

# Identity, then walk the lamplighter around while toggling lamps.
cfg = IDENTITY_Z2
nf = z2wrz2.encode(cfg)
print(f"\n{'word':>10}  normal form")
word = []
for gen in ["c", "a", "c", "b", "b", "c", "a-", "a-"]:
    word.append(gen)
    cfg = wreath_mul_gen(cfg, gen)
    nf, report = z2wrz2.apply_gen_report(nf, gen)
    assert nf == z2wrz2.encode(cfg)
    print(f"{' '.join(word):>20}  {nf}  ({report.steps} steps)")

# The step counts stay proportional to the string length even for big jumps.
print("\nsteps per symbol across sizes (generator a):")
for size in (64, 512, 4096):
    probe = "0" * (size - 1) + "C0"
    _out, report = z2wrz2.apply_gen_report(probe, "a")
    print(f"  |nf|={size:5d}  steps={report.steps:6d}  ratio={report.steps/size:.2f}")

# This normal form is not quasigeodesic: a single far-away lamp on the
# diagonal costs ~4k generators but a quadratically long string.
print("\ndiagonal lamp family, |nf| / (4k+2):")
for k, ratio in nonqg_diagonal_ratios([5, 10, 20, 50, 100]):
    print(f"  k={k:4d}  ratio={ratio:7.2f}")
