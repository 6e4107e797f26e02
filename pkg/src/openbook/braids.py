"""
Braids, their permutations, and the equivalence of braid-shaped Kirby diagrams.

Permutations compose left to right: in ``a * b`` the permutation ``a`` acts
first. A braid's permutation records where the strand starting at position
``k`` ends up, reading the Artin word left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import OpenBookError, ParseError


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise OpenBookError(f"not a bijection on 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, p):
        return cls(tuple(range(1, p + 1)))

    @classmethod
    def transposition(cls, p, a, b):
        images = list(range(1, p + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycle(cls, p, cycle):
        images = list(range(1, p + 1))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
        return cls(tuple(images))

    @property
    def size(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        return Permutation(tuple(other(self(x)) for x in range(1, self.size + 1)))

    def inverse(self):
        inv = [0] * self.size
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def conjugate(self, t):
        """``t^-1 * self * t`` (for a transposition, ``t self t``)."""
        return t.inverse() * self * t

    def cycles(self):
        seen, out = set(), []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class Braid:
    strands: int
    word: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if self.strands < 1:
            raise OpenBookError("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise OpenBookError(f"generator s{abs(g)} out of range for {self.strands} strands")

    def __mul__(self, other):
        if self.strands != other.strands:
            raise OpenBookError("braids on different numbers of strands")
        return Braid(self.strands, self.word + other.word)

    def __str__(self):
        return " ".join(f"s{abs(g)}" + ("" if g > 0 else "^-1") for g in self.word)


def parse_braid(text, strands=None):
    """Parse ``s<k>`` / ``s<k>^-1`` tokens; strands default to the largest index + 1."""
    word = []
    for tok in text.split():
        m = re.fullmatch(r"s(\d+)(\^-1)?", tok)
        if not m or int(m.group(1)) < 1:
            raise ParseError(f"malformed braid generator {tok!r}")
        word.append(-int(m.group(1)) if m.group(2) else int(m.group(1)))
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    return Braid(strands, tuple(word))


def lens_braid(p, q):
    """(s1 s2 ... s_{p-1})^q, whose closure is a knot exactly when gcd(p, q) = 1."""
    return Braid(p, tuple(range(1, p)) * q)


def braid_permutation(b):
    perm = Permutation.identity(b.strands)
    for g in b.word:
        k = abs(g)
        perm = perm * Permutation.transposition(b.strands, k, k + 1)
    return perm


def is_single_cycle(perm):
    return len(perm.cycles()) == 1


def closure_is_knot(b):
    return is_single_cycle(braid_permutation(b))


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Moves relating two braid-shaped diagrams.

    ``conjugations`` are transpositions ``(a, b)``; conjugating the first
    braid's permutation by each in turn gives the second's. ``crossing_changes``
    marks that the braid words still differ and are matched by crossing
    changes over the 0-framed meridian.
    """

    conjugations: tuple = ()
    crossing_changes: bool = False

    @property
    def empty(self):
        return not self.conjugations and not self.crossing_changes

    def replay(self, perm):
        for a, b in self.conjugations:
            perm = perm.conjugate(Permutation.transposition(perm.size, a, b))
        return perm

    def __str__(self):
        parts = [f"conj({a} {b})" for a, b in self.conjugations]
        if self.crossing_changes:
            parts.append("crossing-changes")
        return " ".join(parts) or "(empty)"


def _swaps_between(src, dst):
    """Transpositions (as value pairs) that turn the sequence src into dst, few as possible."""
    cur = list(src)
    where = {v: i for i, v in enumerate(cur)}
    swaps = []
    for i, want in enumerate(dst):
        have = cur[i]
        if have != want:
            k = where[want]
            cur[i], cur[k] = want, have
            where[want], where[have] = i, k
            swaps.append((min(have, want), max(have, want)))
    return swaps


def conjugating_transpositions(c1, c2):
    """Shortest list of transpositions conjugating the p-cycle c1 into c2.

    Conjugating (a1 ... ap) by s gives (s(a1) ... s(ap)), so we look for the
    rotation of c2's cycle notation needing the fewest swaps.
    """
    (seq1,) = c1.cycles()
    (seq2,) = c2.cycles()
    best = None
    for r in range(len(seq2)):
        rot = seq2[r:] + seq2[:r]
        swaps = _swaps_between(seq1, rot)
        if best is None or len(swaps) < len(best):
            best = swaps
    return best


def braids_equivalent(b1, b2):
    """Decide whether two knot-closure braids give equivalent Kirby diagrams.

    All p-braids whose closure is a knot are equivalent, so the verdict is just
    ``b1.strands == b2.strands``; the certificate spells out the moves.
    Returns ``(verdict, certificate)``.
    """
    for b in (b1, b2):
        if not closure_is_knot(b):
            raise OpenBookError(f"closure of braid [{b}] on {b.strands} strands is not a knot")
    if b1.strands != b2.strands:
        return False, EquivalenceCertificate()
    p1, p2 = braid_permutation(b1), braid_permutation(b2)
    swaps = conjugating_transpositions(p1, p2)
    cert = EquivalenceCertificate(tuple(swaps), b1.word != b2.word)
    assert cert.replay(p1) == p2
    return True, cert
