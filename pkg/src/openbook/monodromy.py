"""
Monodromies of punctured handlebodies H_{g,n} written as twist words.

A twist word is a list of factors applied left to right:

    Torus(j, l)     push the j-th puncture once around the l-th 1-handle
    Sphere(j, k)    twist k times along the sphere around the j-th puncture

The only data that reaches a Kirby diagram is where each 2-handle cocore is
sent: the sequence of 1-handles its image runs through, and the extra framing
picked up from sphere twists. That is :class:`CocoreImage`.

Text grammar (whitespace separated, leftmost applied first)::

    t(j,l)  t(j,l)^k  s(j)  s(j)^k
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import OpenBookError, ParseError


@dataclass(frozen=True)
class Torus:
    j: int
    l: int
    # Orientation of the push; -1 is the inverse torus twist.
    sign: int = 1

    def __str__(self):
        return f"t({self.j},{self.l})" + ("" if self.sign > 0 else "^-1")


@dataclass(frozen=True)
class Sphere:
    j: int
    exponent: int = 1

    def __str__(self):
        return f"s({self.j})" + ("" if self.exponent == 1 else f"^{self.exponent}")


@dataclass(frozen=True)
class TwistWord:
    factors: tuple
    g: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if not 1 <= f.j <= self.n:
                raise OpenBookError(f"2-handle index out of range: {f} on H_{{{self.g},{self.n}}}")
            if isinstance(f, Torus):
                if not 1 <= f.l <= self.g:
                    raise OpenBookError(f"1-handle index out of range: {f} on H_{{{self.g},{self.n}}}")
                if f.sign not in (1, -1):
                    raise OpenBookError(f"torus twist sign must be +1 or -1: {f!r}")

    @classmethod
    def identity(cls, g, n):
        return cls((), g, n)

    @property
    def is_identity(self):
        return not self.factors

    def __mul__(self, other):
        """``self * other`` applies ``self`` first, then ``other``."""
        if (self.g, self.n) != (other.g, other.n):
            raise OpenBookError("twist words act on different punctured handlebodies")
        return TwistWord(self.factors + other.factors, self.g, self.n)

    def __str__(self):
        return " ".join(str(f) for f in self.factors)


_TOKEN = re.compile(
    r"\s*(?:t\(\s*(\d+)\s*,\s*(\d+)\s*\)|s\(\s*(\d+)\s*\))(?:\^\s*(-?\d+))?\s*"
)


def parse_twistword(text, g, n):
    """Parse a twist word acting on H_{g,n}.

    ``t(j,l)^k`` expands to |k| torus factors (inverse ones when k < 0);
    ``s(j)^k`` becomes a single ``Sphere(j, k)``.
    """
    factors = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"malformed twist token at {text[pos:pos + 12]!r}")
        pos = m.end()
        power = int(m.group(4)) if m.group(4) is not None else 1
        if m.group(1) is not None:
            j, l = int(m.group(1)), int(m.group(2))
            if power == 0:
                continue
            sign = 1 if power > 0 else -1
            factors.extend([Torus(j, l, sign)] * abs(power))
        else:
            factors.append(Sphere(int(m.group(3)), power))
    for f in factors:
        if not 1 <= f.j <= n:
            raise OpenBookError(f"2-handle index out of range: {f} with n={n}")
        if isinstance(f, Torus) and not 1 <= f.l <= g:
            raise OpenBookError(f"1-handle index out of range: {f} with g={g}")
    return TwistWord(tuple(factors), g, n)


@dataclass(frozen=True)
class CocoreImage:
    """Per 2-handle: passes of the image arc and its framing offset.

    ``pass_words[j-1]`` is a tuple of ``(handle, sign)``.
    """

    pass_words: tuple
    framing_offsets: tuple

    def __post_init__(self):
        object.__setattr__(self, "pass_words", tuple(tuple(map(tuple, w)) for w in self.pass_words))
        object.__setattr__(self, "framing_offsets", tuple(self.framing_offsets))
        if len(self.pass_words) != len(self.framing_offsets):
            raise OpenBookError("cocore table needs one word and one offset per 2-handle")

    @classmethod
    def identity(cls, n):
        return cls(((),) * n, (0,) * n)

    @property
    def n(self):
        return len(self.pass_words)

    def pass_word(self, j):
        return self.pass_words[j - 1]

    def framing_offset(self, j):
        return self.framing_offsets[j - 1]


def cocore_images(w):
    words = [[] for _ in range(w.n)]
    offsets = [0] * w.n
    for f in w.factors:
        if isinstance(f, Torus):
            words[f.j - 1].append((f.l, f.sign))
        else:
            offsets[f.j - 1] += f.exponent
    return CocoreImage(tuple(map(tuple, words)), tuple(offsets))


def isotopy_normalize(w):
    """Reduce every sphere-twist exponent mod 2.

    The sphere twist has order two in the mapping class group, so this keeps
    the mapping class. Torus factors are left alone.
    """
    out = []
    for f in w.factors:
        if isinstance(f, Sphere):
            if f.exponent % 2:
                out.append(Sphere(f.j, 1))
        else:
            out.append(f)
    return TwistWord(tuple(out), w.g, w.n)


def spun_lens_twistword(p, q):
    """p torus twists then q sphere twists on H_{1,1}."""
    if p < 1 or math.gcd(p, q) != 1:
        raise OpenBookError(f"not coprime: ({p}, {q})")
    return TwistWord((Torus(1, 1),) * p + (Sphere(1, q),), 1, 1)
