import random

import pytest

from tapegroups import spiral, z2wrz2 as z
from tapegroups.errors import NotInLanguage
from tapegroups.oracle_groups import IDENTITY_Z2, LampConfigZ2, wreath_mul_gen
from tapegroups.tapevm import init_tapes
from tapegroups.tokens import Z2Z2_SIGMA

INV = {"a": "a-", "a-": "a", "b": "b-", "b-": "b", "c": "c"}

LONG_VECTOR = "0100011000000100001000C1000101111000011000101100001"


def test_encode_identityish():
    assert z.encode(IDENTITY_Z2) == "C0"
    assert z.encode(LampConfigZ2(frozenset(), (1, 0))) == "0C0"
    # running the a-program on the identity gives the same string
    assert z.apply_gen("C0", "a") == "0C0"


def test_decode_examples():
    assert z.decode("C0") == IDENTITY_Z2
    assert z.decode("C1") == LampConfigZ2(frozenset({(0, 0)}), (0, 0))
    assert z.decode("1C0") == LampConfigZ2(frozenset({(0, 0)}), (1, 0))


def test_decode_rejections():
    for bad in ("", "0", "C0C0", "C00", "1C01C0", "C2"):
        with pytest.raises(NotInLanguage):
            z.decode(bad)
    assert not z.validate("C00")
    assert z.validate("C0")


def test_long_vector_roundtrip():
    assert z.encode(z.decode(LONG_VECTOR)) == LONG_VECTOR
    cfg = z.decode(LONG_VECTOR)
    assert cfg.pos == (0, -2)  # the lamplighter of the illustrated element


def test_apply_examples():
    assert z.apply_gen("0C0", "a") == "0" * 10 + "C0"
    assert z.apply_gen("C1", "c") == "C0"
    assert z.apply_gen("C0", "c") == "C1"
    out, rep = z.apply_gen_report("C0", "a")
    assert out == "0C0"
    assert rep.gen == "a" and rep.group == "z2wrz2" and rep.steps > 0


def test_jump_displacements_realized():
    # region L1 with one turn: the mark moves exactly 8i+9 = 17 cells
    nf = "0" * 9 + "C0"                      # mark at index 10, region L1, i=1
    out = z.apply_gen(nf, "a")
    assert out == "0" * 26 + "C0"            # mark at index 27
    # region D3 at the origin ring: 8i+5 = 5 cells leftward
    nf = "0" * 5 + "C0"                      # mark at index 6 = (-1,0) in D3
    assert z.apply_gen(nf, "a") == "C0"      # lands at the origin, tail erased


def test_scan_tracks_region_and_turns():
    # the first-iteration scan must stop with the turn counter i = turn_count(k)
    for k in list(range(1, 200)) + [677, 2500]:
        toks = ["0"] * (k - 1) + ["C0"]
        ts = init_tapes(toks, 2, sigma=Z2Z2_SIGMA)
        region = z._scan_to_mark(ts)
        assert region == spiral.classify(spiral.spiral_point(k)), k
        i = sum(1 for c in ts.tapes[1].cells if c == "T")
        assert i == spiral.turn_count(k), (k, i)


def test_erase_rule_keeps_language():
    # trailing zeros freed by a leftward move are erased
    cfg = LampConfigZ2(frozenset({(0, 0)}), (0, 1))   # index 4, region D2
    nf = z.encode(cfg)
    out = z.apply_gen(nf, "a")                        # to (1,1) = index 3
    assert out == z.encode(wreath_mul_gen(cfg, "a"))
    assert z.validate(out)


def _random_config(rng, bound):
    k = rng.randint(1, bound)
    lamps = frozenset(spiral.spiral_point(rng.randint(1, bound))
                      for _ in range(rng.randint(0, 6)))
    return LampConfigZ2(lamps, spiral.spiral_point(k))


def test_differential_against_oracle():
    rng = random.Random(42)
    for _ in range(1500):
        bound = int(10 ** rng.uniform(0, 3.3))
        cfg = _random_config(rng, bound)
        nf = z.encode(cfg)
        gen = rng.choice(z.GENERATORS)
        out = z.apply_gen(nf, gen)
        cfg2 = wreath_mul_gen(cfg, gen)
        assert out == z.encode(cfg2), (cfg, gen)
        assert z.decode(out) == cfg2


def test_inverse_pairs_and_closure():
    rng = random.Random(7)
    for _ in range(400):
        cfg = _random_config(rng, 500)
        nf = z.encode(cfg)
        for gen in z.GENERATORS:
            out = z.apply_gen(nf, gen)
            assert z.validate(out)
            assert z.apply_gen(out, INV[gen]) == nf, (nf, gen, out)


def test_no_mark_input_halts_unchanged():
    assert z.apply_gen("", "a") == ""


def test_nonquasigeodesic_family():
    def ratio(k):
        nf = z.encode(LampConfigZ2(frozenset({(k, k)}), (0, 0)))
        return len(z.tokenize_z2z2(nf)) / (4 * k + 2)
    assert ratio(50) > 10 * ratio(5)
    assert ratio(100) > 5 * ratio(10)


def test_total_on_invalid_inputs():
    rng = random.Random(0)
    for _ in range(400):
        toks = [rng.choice(Z2Z2_SIGMA) for _ in range(rng.randint(0, 14))]
        for gen in z.GENERATORS:
            z.apply_gen("".join(toks), gen)  # halts on anything
