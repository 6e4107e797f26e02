"""
Heegaard diagrams of compact 3-manifolds with boundary.

A diagram has one 0-handle, ``genus`` 1-handles and a list of 2-handle
attaching curves. Pictures are replaced by event words: each curve is the
cyclic sequence of things met while walking along it,

- ``Pass(l, s)``: runs through the l-th 1-handle (``s`` = direction),
- ``Kink(s)``: a self-crossing of sign ``s``,
- ``Cross(other, role, s, id)``: a crossing with another curve.

Every inter-curve crossing shows up twice, once on each curve, with opposite
roles and the same sign and id. Indices of 1-handles are 1-based.
"""

from __future__ import annotations

import math
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidDiagram, OpenBookError, ParseError

__all__ = [
    "Pass", "Kink", "Cross", "Event", "AttachingCurve", "HeegaardDiagram",
    "Violation", "validate", "canonical_punctured_handlebody", "lens_diagram",
    "euler_char_page", "parse_hd", "format_hd",
]


def _check_sign(sign):
    if sign not in (1, -1):
        raise OpenBookError(f"sign must be +1 or -1, got {sign!r}")


@dataclass(frozen=True)
class Pass:
    handle: int
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)

    def key(self):
        return (0, self.handle, self.sign)


@dataclass(frozen=True)
class Kink:
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)

    def key(self):
        return (1, self.sign)


@dataclass(frozen=True)
class Cross:
    other: str
    role: str
    sign: int
    crossing_id: int

    def __post_init__(self):
        _check_sign(self.sign)
        if self.role not in ("over", "under"):
            raise OpenBookError(f"crossing role must be 'over' or 'under', got {self.role!r}")

    def key(self):
        return (2, self.other, self.role, self.sign, self.crossing_id)


Event = Union[Pass, Kink, Cross]


def _min_rotation(keys):
    if not keys:
        return ()
    return min(tuple(keys[i:] + keys[:i]) for i in range(len(keys)))


@dataclass(frozen=True, eq=False)
class AttachingCurve:
    """A 2-handle attaching curve. Equality is up to cyclic rotation."""

    name: str
    events: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def writhe(self):
        return sum(e.sign for e in self.events if isinstance(e, Kink))

    @property
    def passes(self):
        """The Pass events in reading order."""
        return [e for e in self.events if isinstance(e, Pass)]

    def rotated(self, k):
        k %= max(len(self.events), 1)
        return AttachingCurve(self.name, self.events[k:] + self.events[:k])

    def reversed(self):
        """Traverse the curve the other way; pass directions flip."""
        events = []
        for e in reversed(self.events):
            events.append(Pass(e.handle, -e.sign) if isinstance(e, Pass) else e)
        return AttachingCurve(self.name, tuple(events))

    def _canonical(self):
        return (self.name, _min_rotation([e.key() for e in self.events]))

    def __eq__(self, other):
        if not isinstance(other, AttachingCurve):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())


@dataclass(frozen=True)
class HeegaardDiagram:
    genus: int
    curves: tuple = ()
    handle_labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.genus < 0:
            raise OpenBookError("genus must be non-negative")
        object.__setattr__(self, "curves", tuple(self.curves))
        if not self.handle_labels:
            labels = tuple(f"h{l}" for l in range(1, self.genus + 1))
            object.__setattr__(self, "handle_labels", labels)

    @property
    def n(self):
        return len(self.curves)

    def curve_index(self, name):
        for i, c in enumerate(self.curves):
            if c.name == name:
                return i
        raise KeyError(name)

    def is_canonical(self):
        """True when every curve is an eventless unknot (a punctured handlebody)."""
        return all(not c.events for c in self.curves)

    def linking_numbers(self):
        """Pairwise linking numbers of the curves, as an n x n list of lists.

        Each crossing is counted once (from its ``over`` occurrence); the
        linking number is half the signed count. Diagonal entries are 0.
        """
        index = {c.name: i for i, c in enumerate(self.curves)}
        n = len(self.curves)
        twice = [[0] * n for _ in range(n)]
        for i, c in enumerate(self.curves):
            for e in c.events:
                if isinstance(e, Cross) and e.role == "over":
                    j = index[e.other]
                    twice[i][j] += e.sign
                    twice[j][i] += e.sign
        return [[v // 2 for v in row] for row in twice]


@dataclass(frozen=True)
class Violation:
    message: str
    curve: str = None
    position: int = None

    def __str__(self):
        where = ""
        if self.curve is not None:
            where = f" (curve {self.curve}"
            where += f", event {self.position})" if self.position is not None else ")"
        return self.message + where


def validate(hd):
    """Return every invariant violation of ``hd``; an empty list means valid."""
    out = []
    names = [c.name for c in hd.curves]
    for name, count in Counter(names).items():
        if count > 1:
            out.append(Violation("duplicate curve name", name))
    known = set(names)

    occurrences = defaultdict(list)
    for c in hd.curves:
        for pos, e in enumerate(c.events):
            if isinstance(e, Pass):
                if not 1 <= e.handle <= hd.genus:
                    out.append(Violation("handle index out of range", c.name, pos))
            elif isinstance(e, Cross):
                if e.other == c.name:
                    out.append(Violation("self-crossing must be a kink", c.name, pos))
                elif e.other not in known:
                    out.append(Violation(f"crossing with unknown curve {e.other!r}", c.name, pos))
                occurrences[e.crossing_id].append((c.name, pos, e))

    pair_counts = Counter()
    for cid in sorted(occurrences):
        occ = occurrences[cid]
        name, pos, _ = occ[0]
        if len(occ) == 1:
            out.append(Violation(f"unpaired crossing {cid}", name, pos))
            continue
        if len(occ) > 2:
            out.append(Violation(f"crossing {cid} appears {len(occ)} times", name, pos))
            continue
        (n1, p1, e1), (n2, p2, e2) = occ
        if {e1.role, e2.role} != {"over", "under"}:
            out.append(Violation(f"crossing {cid} needs one over and one under", n1, p1))
        if e1.other != n2 or e2.other != n1:
            out.append(Violation(f"crossing {cid} names the wrong curves", n1, p1))
        if e1.sign != e2.sign:
            out.append(Violation(f"crossing {cid} has inconsistent signs", n1, p1))
        if n1 != n2:
            pair_counts[frozenset((n1, n2))] += 1

    for pair, count in sorted(pair_counts.items(), key=lambda kv: sorted(kv[0])):
        if count % 2:
            a, b = sorted(pair)
            out.append(Violation(f"odd number of crossings between {a} and {b}", a))
    return out


def require_valid(hd):
    violations = validate(hd)
    if violations:
        raise InvalidDiagram(violations)
    return hd


def canonical_punctured_handlebody(g, n):
    """Diagram of H_{g,n}: g 1-handles and n eventless unknots."""
    if g < 0 or n < 0:
        raise OpenBookError("g and n must be non-negative")
    return HeegaardDiagram(g, tuple(AttachingCurve(f"a{j}") for j in range(1, n + 1)))


def lens_diagram(p, q):
    """Diagram of L(p,q) minus a ball: one curve through the 1-handle p times,
    wrapping q times (one positive kink per wrap)."""
    if p < 1 or q < 1:
        raise OpenBookError("lens parameters must be positive")
    if math.gcd(p, q) != 1:
        raise OpenBookError(f"not coprime: gcd({p}, {q}) = {math.gcd(p, q)}")
    events = (Pass(1, 1),) * p + (Kink(1),) * q
    return HeegaardDiagram(1, (AttachingCurve("a1", events),))


def euler_char_page(hd):
    return 1 - hd.genus + hd.n


# -- .hd text format ---------------------------------------------------------

_SIGN = {"+": 1, "-": -1}
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.']*$")


def _parse_event(text, lineno):
    tok = text.split()
    try:
        if tok[0] == "pass" and len(tok) == 3:
            return Pass(int(tok[1]), _SIGN[tok[2]])
        if tok[0] == "kink" and len(tok) == 2:
            return Kink(_SIGN[tok[1]])
        if tok[0] == "cross" and len(tok) == 5 and tok[2] in ("over", "under"):
            return Cross(tok[1], tok[2], _SIGN[tok[3]], int(tok[4]))
    except (KeyError, ValueError, IndexError):
        pass
    raise ParseError(f"malformed event {text.strip()!r}", lineno)


def parse_hd(text, check=True):
    """Parse the ``.hd`` text format. With ``check`` the result is validated."""
    genus = None
    curves = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("page"):
            m = re.fullmatch(r"page\s+g\s*=\s*(\d+)", line)
            if not m:
                raise ParseError(f"malformed page line {line!r}", lineno)
            if genus is not None:
                raise ParseError("duplicate page line", lineno)
            genus = int(m.group(1))
        elif line.startswith("curve"):
            if genus is None:
                raise ParseError("curve before page line", lineno)
            head, sep, body = line[len("curve"):].partition(":")
            name = head.strip()
            if not sep or not _NAME.match(name):
                raise ParseError(f"malformed curve line {line!r}", lineno)
            events = []
            if body.strip():
                events = [_parse_event(part, lineno) for part in body.split(";")]
            curves.append(AttachingCurve(name, tuple(events)))
        else:
            raise ParseError(f"unknown statement {line.split()[0]!r}", lineno)
    if genus is None:
        raise ParseError("missing page line")
    hd = HeegaardDiagram(genus, tuple(curves))
    if check:
        require_valid(hd)
    return hd


def _format_event(e):
    s = "+" if e.sign > 0 else "-"
    if isinstance(e, Pass):
        return f"pass {e.handle} {s}"
    if isinstance(e, Kink):
        return f"kink {s}"
    return f"cross {e.other} {e.role} {s} {e.crossing_id}"


def format_hd(hd):
    lines = [f"page g={hd.genus}"]
    for c in hd.curves:
        body = " ; ".join(_format_event(e) for e in c.events)
        lines.append(f"curve {c.name} : {body}".rstrip())
    return "\n".join(lines) + "\n"
