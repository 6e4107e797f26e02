import pytest

from openbook.errors import MoveError, ParseError
from openbook.heegaard import (
    AttachingCurve, HeegaardDiagram, Pass, canonical_punctured_handlebody as canonical, lens_diagram,
)
from openbook.invariants import homology, intersection_form, invariant_bundle
from openbook.kirby import (
    FramedComponent, KirbyDiagram, algorithm2, algorithm3, euler_characteristic, stabilize,
)
from openbook.monodromy import Sphere, TwistWord
from openbook.moves import (
    apply_moves, cancel_12, cancel_23, crossing_change, normalize_framing, parse_script, slide,
)

from _gen import random_hd, random_word, rng

DUMBBELL = HeegaardDiagram(1, (AttachingCurve("a1", (Pass(1),)),))


def hopf(n):
    return algorithm3(canonical(0, 1), TwistWord((Sphere(1, n),), 0, 1))


def test_slide_over_meridian_changes_framing_by_two():
    kd = algorithm2(lens_diagram(3, 2))
    out = slide(kd, 1, 2, -1)
    assert out.component(1).framing == 0
    assert out.component(1).word == kd.component(1).word
    assert out.lk(1, 2) == 1
    assert out.log == ("slide 1 2 -",)


def test_slide_hopf_partner():
    out = slide(hopf(3), 2, 1, 1)
    assert out.component(2).framing == 5 and out.lk(1, 2) == 1


def test_identity_effect_slide():
    kd = KirbyDiagram(0, (FramedComponent("a", (), 2), FramedComponent("b")), ((2, 0), (0, 0)))
    assert slide(kd, 1, 2, 1) == kd


def test_slide_errors():
    kd = hopf(0)
    with pytest.raises(MoveError):
        slide(kd, 1, 1, 1)
    with pytest.raises(MoveError):
        slide(kd, 1, 3, 1)


def test_crossing_change():
    kd = algorithm2(lens_diagram(3, 1))
    once = crossing_change(kd, 1)
    assert once == kd and len(once.log) == 1
    twice = crossing_change(once, 1)
    assert twice == kd and len(twice.log) == 2
    lone = KirbyDiagram(0, (FramedComponent("a", (), 1),), ((1,),))
    with pytest.raises(MoveError):
        crossing_change(lone, 1)


def test_dumbbell_cancels_to_s4():
    kd = algorithm2(DUMBBELL)
    kd = cancel_12(kd, 1, 1)
    assert kd.balls == 0 and len(kd.components) == 1
    kd = cancel_23(kd, 1)
    assert kd == algorithm2(canonical(0, 0))
    assert kd.closed and kd.components == () and kd.three_handles == 0


def test_first_example_cancels_to_blank():
    hd, w = stabilize(canonical(0, 0), TwistWord((), 0, 0))
    kd = algorithm3(hd, w)
    kd = cancel_23(cancel_12(kd, 1, 2), 1)
    assert kd == algorithm2(canonical(0, 0))


def test_cancel_preconditions():
    kd = KirbyDiagram(2, (FramedComponent("a", ((1, 1), (2, 1))),), ((0,),), 2, 1)
    with pytest.raises(MoveError):
        cancel_12(kd, 1, 1)
    with pytest.raises(MoveError):
        cancel_23(hopf(0), 2)
    no3 = KirbyDiagram(0, (FramedComponent("a"),), ((0,),), 0, 1)
    with pytest.raises(MoveError, match="3-handle"):
        cancel_23(no3, 1)


def test_cancel_12_reroutes():
    kd = KirbyDiagram(2, (FramedComponent("a", ((1, 1),)), FramedComponent("b", ((1, -1), (2, 1), (1, 1)))),
                      ((0, 0), (0, 0)), 2, 1)
    out = cancel_12(kd, 1, 1)
    assert out.balls == 1 and out.components[0].word == ((1, 1),)
    assert "rerouted" in out.log[-1]


@pytest.mark.parametrize("n", range(0, 7))
def test_hopf_parity_normalization(n):
    out = normalize_framing(hopf(n), 2, 1)
    assert out == hopf(n % 2)
    assert intersection_form(out).parity == intersection_form(hopf(n)).parity


def random_closed(r):
    g, n = r.randint(0, 3), r.randint(1, 3)
    hd = random_hd(r, g, n)
    if r.random() < 0.5:
        return algorithm2(hd)
    return algorithm3(canonical(g, n), random_word(r, g, n))


def form_data(kd):
    if kd.balls or kd.three_handles:
        return None
    f = intersection_form(kd)
    return f.parity, f.determinant, f.signature


def test_slide_invariance():
    r = rng(31)
    for _ in range(200):
        kd = random_closed(r)
        before = (euler_characteristic(kd), homology(kd), invariant_bundle(kd), form_data(kd))
        m = len(kd.components)
        if m < 2:
            continue
        for _ in range(r.randint(1, 10)):
            i, j = r.sample(range(1, m + 1), 2)
            kd = slide(kd, i, j, r.choice((1, -1)))
        after = (euler_characteristic(kd), homology(kd), invariant_bundle(kd), form_data(kd))
        assert after == before


def test_slide_inverse_restores():
    r = rng(32)
    for _ in range(200):
        kd = random_closed(r)
        m = len(kd.components)
        if m < 2:
            continue
        i, j = r.sample(range(1, m + 1), 2)
        s = r.choice((1, -1))
        assert slide(slide(kd, i, j, s), i, j, -s) == kd


def test_script_parsing():
    moves = parse_script("slide 1 2 +\n# comment\ncancel12 1 2\ncancel23 1\ncrossing 3\n")
    assert moves == [("slide", 1, 2, 1), ("cancel12", 1, 2), ("cancel23", 1), ("crossing", 3)]
    with pytest.raises(ParseError) as info:
        parse_script("slide 1 2 +\nslide 1 x -\n")
    assert info.value.lineno == 2


def test_apply_script():
    kd = apply_moves(algorithm2(DUMBBELL), parse_script("crossing 1\ncancel12 1 1\ncancel23 1"))
    assert kd == algorithm2(canonical(0, 0)) and len(kd.log) == 3
