import random

import pytest

from tapegroups import oracle_groups as og
from tapegroups.errors import NotInLanguage

GENS_W = ("a", "a-", "b", "b-", "c")
INV_W = {"a": "a-", "a-": "a", "b": "b-", "b-": "b", "c": "c"}


def test_dyadic_normalization():
    assert og.dy(4, 3) == (1, 1)
    assert og.dy(0, 5) == (0, 0)
    assert og.dy_add(og.dy(1, 1), og.dy(1, 2)) == (3, 2)
    assert og.dy_mul(og.dy(3, 2), og.dy(1, 1)) == (3, 3)
    assert og.dy_cmp(og.dy(1, 1), og.dy(3, 2)) < 0


def test_wreath_examples():
    c0 = og.IDENTITY_Z2
    c1 = og.wreath_mul_gen(c0, "c")
    assert c1 == og.LampConfigZ2(frozenset({(0, 0)}), (0, 0))
    c2 = og.wreath_mul_gen(c1, "a")
    assert c2 == og.LampConfigZ2(frozenset({(0, 0)}), (1, 0))
    f = og.LampConfigF2(frozenset(), "a")
    assert og.wreath_mul_gen(f, "a-") == og.IDENTITY_F2


def test_free_reduction():
    assert og.f2_reduce("aA") == ""
    assert og.f2_reduce("abBA") == ""
    assert og.f2_reduce("abb") == "abb"
    w = og.f2_reduce("aBbAabB")
    assert og.f2_is_reduced(w)
    assert og.f2_reduce(w) == w  # idempotent


def test_wreath_group_laws_random():
    rng = random.Random(11)
    cfg = og.IDENTITY_Z2
    cfgf = og.IDENTITY_F2
    for _ in range(4000):
        g = rng.choice(GENS_W)
        assert og.wreath_mul_gen(og.wreath_mul_gen(cfg, g), INV_W[g]) == cfg
        assert og.wreath_mul_gen(og.wreath_mul_gen(cfgf, g), INV_W[g]) == cfgf
        cfg = og.wreath_mul_gen(cfg, g)
        cfgf = og.wreath_mul_gen(cfgf, g)


def test_pl_generator_fixed_values():
    x0 = og.pl_generator("x0", +1)
    assert x0(og.dy(1, 1)) == og.dy(1, 2)          # x0(1/2) = 1/4
    x1 = og.pl_generator("x1", +1)
    assert x1(og.dy(1, 2)) == og.dy(1, 2)          # identity below 1/2
    assert og.pl_compose(og.pl_generator("x0", -1), x0) == og.PL_IDENTITY
    assert og.pl_compose(x0, og.pl_generator("x0", -1)) == og.PL_IDENTITY
    assert og.pl_compose(og.PL_IDENTITY, x0) == x0


def _fold(maps):
    acc = og.PL_IDENTITY
    for m in maps:
        acc = og.pl_compose(m, acc)
    return acc


def test_defining_relators_evaluate_to_identity():
    x0 = og.pl_generator("x0", +1)
    x0i = og.pl_generator("x0", -1)
    x1 = og.pl_generator("x1", +1)
    x1i = og.pl_generator("x1", -1)
    g, gi = [x0, x1i], [x1, x0i]
    h, hi = [x0i, x1, x0], [x0i, x1i, x0]
    h2, h2i = [x0i, x0i, x1, x0, x0], [x0i, x0i, x1i, x0, x0]
    assert _fold(gi + hi + g + h) == og.PL_IDENTITY
    assert _fold(gi + h2i + g + h2) == og.PL_IDENTITY


def test_associativity_spot_checks():
    rng = random.Random(5)
    gens = [og.pl_generator(w, s) for w in ("x0", "x1") for s in (+1, -1)]
    for _ in range(40):
        f, g, h = (rng.choice(gens) for _ in range(3))
        assert og.pl_compose(og.pl_compose(f, g), h) == og.pl_compose(f, og.pl_compose(g, h))


def test_nice_letter_maps_match_expansion():
    x0 = og.pl_generator("x0", +1)
    x0i = og.pl_generator("x0", -1)
    x1 = og.pl_generator("x1", +1)
    for i in (2, 3, 5):
        word = [x0i] * (i - 1) + [x1] + [x0] * (i - 1)
        assert _fold(word) == og.pl_letter(i, +1)
        assert og.pl_letter(i, -1) == og.pl_letter(i, +1).inverse()


def test_eval_normalform_examples():
    assert og.pl_eval_normalform("") == og.PL_IDENTITY
    assert og.pl_eval_normalform("a") == og.pl_generator("x0", +1)
    x0i = og.pl_generator("x0", -1)
    x1i = og.pl_generator("x1", -1)
    assert og.pl_eval_normalform("b##b") == _fold([x0i, x1i])


def test_eval_rejects_garbage():
    with pytest.raises(NotInLanguage):
        og.pl_eval_normalform("ba")


def test_eval_injective_on_samples():
    # distinct normal forms must map to distinct homeomorphisms; includes the
    # pair that collapses under a reversed composition convention
    forms = ["", "a", "b", "ab#a", "a#a", "a###a", "b##b", "#b", "#a",
             "aa#b", "b#b", "ab#b", "#ab#a"]
    seen = {}
    for u in forms:
        m = og.pl_eval_normalform(u)
        assert m not in seen, (u, seen[m])
        seen[m] = u


def test_slope_validation():
    with pytest.raises(NotInLanguage):
        og.DyadicPL(((og.dy(0), og.dy(0)), (og.dy(1, 1), og.dy(1, 2)),
                     (og.dy(1), og.dy(1))))(og.dy(3, 2))
