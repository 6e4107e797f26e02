"""
Trading an arbitrary page with trivial monodromy for a punctured handlebody.

Ob(M, id) is rebuilt as Ob(H_{g,n}, phi): every time the j-th curve runs
through the l-th 1-handle, phi gets a torus twist t(j,l); a sphere twist
s(j)^w then restores the blackboard framing w of that curve. The geometric
isotopy behind this is not materialized. Instead :func:`verify_reduce`
compares invariants of both Kirby diagrams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braids import braids_equivalent, lens_braid
from .errors import OpenBookError
from .heegaard import canonical_punctured_handlebody, lens_diagram, require_valid
from .invariants import invariant_bundle
from .kirby import algorithm2, algorithm3
from .monodromy import Sphere, Torus, TwistWord


def reduce(hd):
    """Return ``(g, n, word)`` with Ob(H_{g,n}, word) matching Ob(hd, id)."""
    require_valid(hd)
    factors = []
    for j, curve in enumerate(hd.curves, 1):
        factors.extend(Torus(j, e.handle, e.sign) for e in curve.passes)
        if curve.writhe:
            factors.append(Sphere(j, curve.writhe))
    return hd.genus, hd.n, TwistWord(tuple(factors), hd.genus, hd.n)


@dataclass(frozen=True)
class ReduceReport:
    g: int
    n: int
    word: TwistWord
    original: object
    reduced: object

    @property
    def verdict(self):
        return self.original == self.reduced

    def to_dict(self):
        return {"g": self.g, "n": self.n, "word": str(self.word), "verdict": self.verdict,
                "original": self.original.to_dict(), "reduced": self.reduced.to_dict()}


def verify_reduce(hd):
    g, n, word = reduce(hd)
    before = invariant_bundle(algorithm2(hd))
    after = invariant_bundle(algorithm3(canonical_punctured_handlebody(g, n), word))
    return ReduceReport(g, n, word, before, after)


def _check_coprime(p, q):
    if p < 1 or math.gcd(p, q) != 1:
        raise OpenBookError(f"not coprime: ({p}, {q})")


def rolfsen_normalize(p, q):
    """L(p, q) = L(p, q + kp): pick 1 <= q' < p (q' = 0 only for p = 1)."""
    _check_coprime(p, q)
    return p, q % p


def spun_lens_bundle(p, q):
    return invariant_bundle(algorithm2(lens_diagram(p, q)))


@dataclass(frozen=True)
class LensEvidence:
    bundles: tuple
    certificate: object = None
    distinguishing: tuple = ()


def spun_lens_equivalent(p, q, p2, q2):
    """Whether the spins of L(p, q) and L(p2, q2) agree, with evidence.

    Returns ``(verdict, LensEvidence)``. For equal p the evidence holds both
    invariant bundles and a braid certificate relating the p-braids; for
    different p it names the invariant that tells them apart.
    """
    _check_coprime(p, q)
    _check_coprime(p2, q2)
    b1, b2 = spun_lens_bundle(p, q), spun_lens_bundle(p2, q2)
    if p != p2:
        diff = tuple((name, str(getattr(b1, name)), str(getattr(b2, name)))
                     for name in b1.differences(b2))
        return False, LensEvidence((b1, b2), None, diff)
    ok, cert = braids_equivalent(lens_braid(p, q), lens_braid(p2, q2))
    return ok and b1 == b2, LensEvidence((b1, b2), cert)
