import random

from tapegroups import z2wrf2 as z
from tapegroups.oracle_groups import IDENTITY_F2, LampConfigF2, wreath_mul_gen
from tapegroups.tokens import render_z2f2, tokenize_z2f2

INV = {"a": "a-", "a-": "a", "b": "b-", "b-": "b", "c": "c"}

FIG3_ITERATIONS = [
    "11D0AD01",
    "11(1E0D0AE0)(E0D0E1)1",
    "11(1[1E01]D0A[E0D1])([1E0]D0[1E1])1",
    "11(1[1E01]D0A[E0(C1D1)])([1E0]D0[1E1])1",
]


def test_tokenizer_maximal_munch():
    assert tokenize_z2f2("11D0AD01") == ["1", "1", "D0A", "D0", "1"]
    assert tokenize_z2f2("(C1D1)") == ["(", "C1", "D1", ")"]
    # the separator keeps pivot-then-marker unambiguous
    toks = ["(", "D0", "C0", ")"]
    assert tokenize_z2f2(render_z2f2(toks)) == toks
    assert tokenize_z2f2("D0C0") == ["D0C", "0"]


def test_encode_decode_basics():
    assert z.encode(IDENTITY_F2) == "B0"
    assert z.encode(LampConfigF2(frozenset(), "a")) == "A0C0"
    assert z.decode("B0") == IDENTITY_F2
    assert z.decode("B1") == LampConfigF2(frozenset({""}), "")
    assert z.decode("A0C0") == LampConfigF2(frozenset(), "a")


def test_decode_rejections():
    bad = [
        "",                # empty
        "C0",              # no identity anchor
        "A0",              # no lamplighter marker
        "B0B0",            # two anchors
        "A0C0C0",          # two markers
        "0A0C0",           # untrimmed zero at the top line start
        "A0C00",           # untrimmed zero at the top line end
        "(D0)B0",          # expanded group with empty interior
        "A0(C0",           # unbalanced bracket
        "A0(E0C])",        # mismatched pair
        "B0[1E01]",        # horizontal group at the top level
        "A0(0E0C)",        # untrimmed zero inside a group
    ]
    for s in bad:
        assert not z.validate(s), s


def test_fig3_decode_and_iteration_replay():
    cfg = z.decode(FIG3_ITERATIONS[-1])
    assert cfg.pos == "baB"
    assert cfg.pos in cfg.lit
    assert len(cfg.lit) == 11
    assert z.encode_iterations(cfg) == FIG3_ITERATIONS
    assert z.encode(cfg) == FIG3_ITERATIONS[-1]


def test_apply_examples():
    assert z.apply_gen("B0", "c") == "B1"
    assert z.apply_gen("A0C0", "c") == "A0C1"
    assert z.apply_gen("B0", "a") == "A0C0"
    assert z.apply_gen("A0C0", "a-") == "B0"
    assert z.apply_gen("B0", "b") == "(D0AC0)"
    assert z.apply_gen("(D0AC0)", "b-") == "B0"
    assert z.apply_gen("B0", "a-") == "C0A0"
    assert z.apply_gen("C0A0", "a") == "B0"


def test_sprout_and_collapse_inverse():
    # a leaf sprouting a group and the reverse collapse are exact inverses
    nf = z.encode(LampConfigF2(frozenset(), "a"))      # A0C0
    up = z.apply_gen(nf, "b")
    assert z.decode(up) == LampConfigF2(frozenset(), "ab")
    assert z.apply_gen(up, "b-") == nf


def test_bracket_mutation_rejected():
    good = FIG3_ITERATIONS[-1]
    mutated = good.replace("(", "[", 1)
    out = z.apply_gen(mutated, "a")
    assert not z.validate(out)  # halts without producing a member of L


def test_differential_walks():
    rng = random.Random(42)
    checked = 0
    for trial in range(150):
        nf = "B0"
        cfg = IDENTITY_F2
        for _ in range(rng.randint(1, 60)):
            gen = rng.choice(z.GENERATORS)
            out = z.apply_gen(nf, gen)
            cfg2 = wreath_mul_gen(cfg, gen)
            assert out == z.encode(cfg2), (trial, nf, gen)
            assert z.decode(out) == cfg2
            checked += 1
            nf, cfg = out, cfg2
    assert checked > 2000


def test_random_walk_closure_500():
    rng = random.Random(9)
    nf = "B0"
    cfg = IDENTITY_F2
    for _ in range(500):
        gen = rng.choice(z.GENERATORS)
        nf = z.apply_gen(nf, gen)
        cfg = wreath_mul_gen(cfg, gen)
        assert z.validate(nf)
        assert z.decode(nf) == cfg


def test_inverse_pairs():
    rng = random.Random(3)
    nf = "B0"
    for _ in range(300):
        gen = rng.choice(z.GENERATORS)
        out = z.apply_gen(nf, gen)
        assert z.apply_gen(out, INV[gen]) == nf, (nf, gen, out)
        nf = out


def test_quasigeodesic_necessary_direction():
    rng = random.Random(21)
    worst = 0.0
    for _ in range(6):
        nf = "B0"
        for k in range(1, 400):
            nf = z.apply_gen(nf, rng.choice(z.GENERATORS))
            worst = max(worst, len(tokenize_z2f2(nf)) / (k + 1))
    assert worst < 12.0  # a fixed constant bounds |nf| / (walk length + 1)


def test_total_on_invalid_inputs():
    # the programs must halt (not fault) on anything over the alphabet
    import random
    from tapegroups.tokens import Z2F2_SIGMA
    rng = random.Random(0)
    for _ in range(300):
        toks = [rng.choice(Z2F2_SIGMA) for _ in range(rng.randint(0, 12))]
        text = render_z2f2(toks)
        for gen in z.GENERATORS:
            z.apply_gen(text, gen)  # any output, no exception
