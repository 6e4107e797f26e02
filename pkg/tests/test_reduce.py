import pytest

from openbook.errors import OpenBookError
from openbook.heegaard import (
    AttachingCurve, HeegaardDiagram, Kink, Pass, canonical_punctured_handlebody as canonical,
    lens_diagram,
)
from openbook.invariants import invariant_bundle
from openbook.kirby import algorithm2, algorithm3, stabilize
from openbook.monodromy import Sphere, Torus, TwistWord
from openbook.reduce import (
    reduce, rolfsen_normalize, spun_lens_bundle, spun_lens_equivalent, verify_reduce,
)

from _gen import random_hd, rng

COPRIME = [(p, q) for p in range(1, 10) for q in range(1, p) if __import__("math").gcd(p, q) == 1]


@pytest.mark.parametrize("p,q", [(2, 1), (3, 1), (5, 2), (5, 4), (7, 3)])
def test_lens_words(p, q):
    g, n, w = reduce(lens_diagram(p, q))
    assert (g, n) == (1, 1)
    assert w.factors == (Torus(1, 1),) * p + (Sphere(1, q),)
    assert verify_reduce(lens_diagram(p, q)).verdict


def test_kinks_only():
    hd = HeegaardDiagram(0, (AttachingCurve("a1", (Kink(-1), Kink(-1))),))
    assert reduce(hd)[2].factors == (Sphere(1, -2),)
    assert reduce(canonical(2, 3))[2].is_identity


def test_negative_pass_keeps_sign():
    hd = HeegaardDiagram(1, (AttachingCurve("a1", (Pass(1), Pass(1, -1))),))
    w = reduce(hd)[2]
    assert w.factors == (Torus(1, 1, 1), Torus(1, 1, -1))
    assert verify_reduce(hd).verdict


def test_reduce_random_pages():
    r = rng(51)
    for _ in range(150):
        hd = random_hd(r, r.randint(0, 3), r.randint(0, 3))
        g, n, w = reduce(hd)
        tori = [f for f in w.factors if isinstance(f, Torus)]
        spheres = [f for f in w.factors if isinstance(f, Sphere)]
        assert len(tori) == sum(len(c.passes) for c in hd.curves)
        assert len(spheres) <= n
        assert verify_reduce(hd).verdict


def test_reduce_after_stabilization():
    r = rng(52)
    for _ in range(40):
        hd = random_hd(r, r.randint(0, 2), r.randint(0, 2))
        g, n, w = reduce(hd)
        hd2, _ = stabilize(hd, TwistWord((), g, n))
        g2, n2, w2 = reduce(hd2)
        assert (g2, n2) == (g + 1, n + 1)
        assert w2.factors == w.factors
        twisted = w2 * TwistWord((Torus(n2, g2),), g2, n2)
        assert invariant_bundle(algorithm3(canonical(g2, n2), twisted)) == \
            invariant_bundle(algorithm2(hd))


@pytest.mark.parametrize("pq,expected", [((2, 3), (2, 1)), ((5, 9), (5, 4)), ((7, 3), (7, 3)),
                                         ((1, 5), (1, 0)), ((5, -1), (5, 4))])
def test_rolfsen(pq, expected):
    assert rolfsen_normalize(*pq) == expected


def test_rolfsen_rejects():
    with pytest.raises(OpenBookError, match="not coprime"):
        rolfsen_normalize(4, 2)


def test_lens_modulo_p_same_diagram_invariants():
    assert spun_lens_bundle(2, 3) == spun_lens_bundle(2, 1)


def test_spun_lens_equivalence_relation():
    verdict = {(a, b): spun_lens_equivalent(*a, *b)[0] for a in COPRIME for b in COPRIME}
    for a in COPRIME:
        assert verdict[a, a]
        for b in COPRIME:
            assert verdict[a, b] == verdict[b, a] == (a[0] == b[0])
            for c in COPRIME:
                if verdict[a, b] and verdict[b, c]:
                    assert verdict[a, c]


def test_distinguishing_evidence():
    ok, ev = spun_lens_equivalent(3, 1, 5, 1)
    assert not ok and ev.certificate is None
    assert ("h1", "Z/3", "Z/5") in ev.distinguishing
