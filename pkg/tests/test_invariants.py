import random

import numpy as np
import pytest

from openbook.errors import OpenBookError
from openbook.heegaard import canonical_punctured_handlebody as canonical, lens_diagram
from openbook.invariants import (
    AbelianGroup, GroupPresentation, fundamental_group, homology, intersection_form,
    invariant_bundle, kernel_form, signature,
)
from openbook.kirby import algorithm1, algorithm2, algorithm3
from openbook.monodromy import Sphere, TwistWord, parse_twistword

from _gen import random_hd, random_word, rng

Z, ZERO = AbelianGroup(1), AbelianGroup(0)


def hopf(n):
    return algorithm3(canonical(0, 1), TwistWord((Sphere(1, n),), 0, 1) if n else TwistWord((), 0, 1))


def test_abelian_group_checks():
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    with pytest.raises(OpenBookError):
        AbelianGroup(0, (2, 3))
    with pytest.raises(OpenBookError):
        AbelianGroup(0, (1,))


def test_fundamental_group_examples():
    assert fundamental_group(algorithm2(lens_diagram(5, 2))) == GroupPresentation(1, ((1,) * 5,))
    free = fundamental_group(algorithm2(canonical(3, 0)))
    assert free.generators == 3 and free.relators == ()
    assert fundamental_group(algorithm2(canonical(0, 4))) == GroupPresentation(0, ())
    # open diagrams get the 2-skeleton presentation
    assert fundamental_group(algorithm1(lens_diagram(3, 1))).relators == ((1, 1, 1),)


def test_homology_examples():
    h = homology(algorithm2(canonical(0, 1)))
    assert h.groups == (Z, ZERO, AbelianGroup(2), ZERO, Z) and h.euler == 4
    h = homology(algorithm2(lens_diagram(5, 2)))
    assert h.groups == (Z, AbelianGroup(0, (5,)), AbelianGroup(0, (5,)), ZERO, Z) and h.euler == 2
    h = homology(algorithm2(canonical(2, 0)))
    assert h.groups == (Z, AbelianGroup(2), ZERO, AbelianGroup(2), Z) and h.euler == -2
    with pytest.raises(OpenBookError, match="open diagram"):
        homology(algorithm1(canonical(0, 1)))


def test_intersection_form_hopf():
    f = intersection_form(hopf(0))
    assert (f.parity, f.determinant, f.signature) == ("even", -1, 0)
    f = intersection_form(hopf(1))
    assert (f.parity, f.determinant, f.signature) == ("odd", -1, 0)
    for n in range(-4, 9):
        assert intersection_form(hopf(n)).parity == ("even" if n % 2 == 0 else "odd")


def test_intersection_form_refused_with_handles():
    with pytest.raises(OpenBookError, match="form undefined"):
        intersection_form(algorithm2(lens_diagram(3, 1)))
    with pytest.raises(OpenBookError, match="form undefined"):
        intersection_form(algorithm1(canonical(0, 1)))


def eig_signature(S):
    if not S:
        return 0
    w = np.linalg.eigvalsh(np.array(S, dtype=float))
    return int((w > 1e-9).sum() - (w < -1e-9).sum())


def test_signature_against_eigenvalues():
    r = random.Random(8)
    for _ in range(300):
        k = r.randint(0, 6)
        S = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                S[i][j] = S[j][i] = r.choice([0, 0, r.randint(-4, 4)])
        assert signature(S) == eig_signature(S)


def test_known_signatures():
    E8 = [[2, -1, 0, 0, 0, 0, 0, 0], [-1, 2, -1, 0, 0, 0, 0, 0], [0, -1, 2, -1, 0, 0, 0, 0],
          [0, 0, -1, 2, -1, 0, 0, 0], [0, 0, 0, -1, 2, -1, 0, -1], [0, 0, 0, 0, -1, 2, -1, 0],
          [0, 0, 0, 0, 0, -1, 2, 0], [0, 0, 0, 0, -1, 0, 0, 2]]
    assert signature(E8) == 8
    assert signature([[0, 1], [1, 0]]) == 0
    assert signature([[-1, 0], [0, -1]]) == -2


def test_bundle_examples():
    assert invariant_bundle(algorithm2(lens_diagram(7, 3))) == invariant_bundle(
        algorithm3(canonical(1, 1), parse_twistword("t(1,1)^7 s(1)^3", 1, 1)))
    assert invariant_bundle(algorithm2(lens_diagram(5, 1))) == invariant_bundle(algorithm2(lens_diagram(5, 4)))
    a, b = invariant_bundle(hopf(0)), invariant_bundle(hopf(1))
    assert a != b and a.differences(b) == ["form"]


def test_kernel_form_matches_linking_when_ball_free():
    r = rng(21)
    for _ in range(60):
        n = r.randint(1, 4)
        kd = algorithm2(random_hd(r, 0, n))
        W = kernel_form(kd)
        f = intersection_form(kd)
        assert len(W) == 2 * n
        assert (signature(W), abs(f.determinant)) == (f.signature, 1)


def closed_random(r):
    g, n = r.randint(0, 3), r.randint(0, 3)
    hd = random_hd(r, g, n)
    if r.random() < 0.5:
        return algorithm2(hd)
    return algorithm3(canonical(g, n), random_word(r, g, n))


def test_homology_consistency_on_algorithm_outputs():
    r = rng(22)
    for _ in range(200):
        kd = closed_random(r)
        h = homology(kd)
        ranks = [g.rank for g in h.groups]
        assert ranks[0] - ranks[1] + ranks[2] - ranks[3] + ranks[4] == h.euler
        assert h[2].rank >= 0 and h[2].torsion == h[1].torsion
        assert fundamental_group(kd).abelianization() == h[1]
        if not kd.balls:
            f = intersection_form(kd)
            assert abs(f.signature) <= len(kd.components)
