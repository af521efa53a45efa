"""Empirical certification: linear multiplication, quadratic normalization.

Every generator program reports its exact primitive-step count.  The bench
samples normal forms across sizes and watches the worst steps-per-symbol
ratio; the word-problem driver folds programs over a word and the total is
quadratic exactly when the normal form is quasigeodesic.
"""

from tapegroups import framework as fw

for make in (fw.representation_z2wrz2, fw.representation_z2wrf2,
             fw.representation_thompson_f):
    rep = make()
    gen = rep.generators[0]
    report = fw.linearity_bench(rep, gen, (64, 256, 1024, 4096), 3, seed=1)
    rows = "  ".join(f"{r.n}:{r.max_ratio:.1f}" for r in report.rows)
    print(f"{rep.group_id:10s} {gen:3s}  steps/|nf| by size  {rows}   "
          f"plateau: {report.verdict}")

print("\nword -> normal form, total steps vs n^2 (quasigeodesic groups):")
import random
for name in ("z2wrf2", "thompson-f"):
    rep = fw.REPRESENTATIONS[name]()
    rng = random.Random(3)
    for n in (128, 512, 2048):
        word = [rng.choice(rep.generators) for _ in range(n)]
        _nf, steps = fw.word_to_nf_report(rep, word)
        print(f"  {name:10s} n={n:5d}  steps={steps:9d}  steps/n^2={steps/n/n:.2f}")

print("\nword problem on the two defining relators of Thompson's F:")
F = fw.representation_thompson_f()
r1 = ["x1", "x0-", "x0-", "x1-", "x0", "x0", "x1-", "x0-", "x1", "x0"]
r2 = ["x1", "x0-", "x0-", "x0-", "x1-", "x0", "x0", "x0",
      "x1-", "x0-", "x0-", "x1", "x0", "x0"]
print("  [x0 x1^-1, x0^-1 x1 x0]    ->", "trivial" if fw.word_problem(F, r1) else "nontrivial")
print("  [x0 x1^-1, x0^-2 x1 x0^2]  ->", "trivial" if fw.word_problem(F, r2) else "nontrivial")
