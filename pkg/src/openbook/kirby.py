"""
Kirby diagrams of half open books and open books.

A :class:`KirbyDiagram` keeps only the algebraic shadow of a picture:
dotted-ball count, the framed components (each with its word in the balls),
the linking matrix, and the 3-/4-handle counts. Every invariant computed in
this package factors through that shadow.

Construction from a Heegaard diagram of the page ``M``:

- :func:`algorithm1` half open book: balls for 1-handles, blackboard-framed
  curves for 2-handles;
- :func:`algorithm2` Ob(M, id): add a 0-framed meridian to every curve;
- :func:`algorithm3` Ob(M, phi): the meridian is replaced by the monodromy
  image of the 2-handle cocore.

Indices of balls and components are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .errors import OpenBookError, ParseError
from .heegaard import AttachingCurve, HeegaardDiagram, format_hd, require_valid
from .monodromy import CocoreImage, Torus, TwistWord, cocore_images

PAGE = "page"
DUAL = "dual"


def invert_word(word):
    return tuple((l, -s) for l, s in reversed(word))


@dataclass(frozen=True)
class FramedComponent:
    name: str
    word: tuple = ()
    framing: int = 0
    role: str = PAGE

    def __post_init__(self):
        object.__setattr__(self, "word", tuple((int(l), int(s)) for l, s in self.word))
        if self.role not in (PAGE, DUAL):
            raise OpenBookError(f"unknown component role {self.role!r}")


@dataclass(frozen=True)
class KirbyDiagram:
    balls: int
    components: tuple = ()
    linking: tuple = ()
    three_handles: int = 0
    four_handles: int = 0
    provenance: tuple = field(default=(), compare=False)
    log: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "linking", tuple(tuple(int(v) for v in row) for row in self.linking))
        object.__setattr__(self, "provenance", tuple(tuple(kv) for kv in self.provenance))
        object.__setattr__(self, "log", tuple(self.log))
        m = len(self.components)
        if len(self.linking) != m or any(len(row) != m for row in self.linking):
            raise OpenBookError("linking matrix must be square with one row per component")
        for i in range(m):
            if self.linking[i][i] != self.components[i].framing:
                raise OpenBookError(f"linking diagonal disagrees with framing of component {i + 1}")
            for k in range(i):
                if self.linking[i][k] != self.linking[k][i]:
                    raise OpenBookError("linking matrix is not symmetric")
        for c in self.components:
            for l, s in c.word:
                if not 1 <= l <= self.balls:
                    raise OpenBookError(f"component {c.name} passes through missing ball {l}")
                if s not in (1, -1):
                    raise OpenBookError(f"component {c.name} has a pass with sign {s}")
        if self.four_handles not in (0, 1):
            raise OpenBookError("a diagram has at most one 4-handle")
        if self.three_handles < 0 or self.balls < 0:
            raise OpenBookError("handle counts must be non-negative")

    @property
    def closed(self):
        return self.four_handles == 1

    def lk(self, i, j):
        return self.linking[i - 1][j - 1]

    def component(self, i):
        return self.components[i - 1]

    def meta(self, key, default=None):
        return dict(self.provenance).get(key, default)

    def with_log(self, *entries):
        return replace(self, log=self.log + entries)


def _page_components(hd):
    comps = []
    for c in hd.curves:
        word = tuple((e.handle, e.sign) for e in c.passes)
        comps.append(FramedComponent(c.name, word, c.writhe, PAGE))
    return comps


def algorithm1(hd):
    """Kirby diagram of the half open book with page ``hd``.

    Blackboard framing is the writhe of each curve; linking numbers come from
    the inter-curve crossings. The result is open (no 3- or 4-handles).
    """
    require_valid(hd)
    comps = _page_components(hd)
    lk = hd.linking_numbers()
    for i, c in enumerate(comps):
        lk[i][i] = c.framing
    return KirbyDiagram(hd.genus, tuple(comps), lk, 0, 0,
                        provenance=(("algorithm", "1"), ("page", format_hd(hd))))


def _close_with_duals(hob, hd, image, algorithm, mono_text):
    n = hd.n
    half = hob.linking
    m = 2 * n
    lk = [[0] * m for _ in range(m)]
    for i in range(n):
        for k in range(n):
            lk[i][k] = half[i][k]
    duals = []
    for j in range(n):
        word = image.pass_words[j]
        framing = image.framing_offsets[j]
        duals.append(FramedComponent(f"{hd.curves[j].name}*", word, framing, DUAL))
        lk[n + j][n + j] = framing
        lk[j][n + j] = lk[n + j][j] = 1
    prov = [("algorithm", algorithm), ("page", format_hd(hd))]
    if mono_text is not None:
        prov.append(("mono", mono_text))
    return KirbyDiagram(hob.balls, hob.components + tuple(duals), lk,
                        three_handles=hd.genus, four_handles=1, provenance=tuple(prov))


def algorithm2(hd):
    """Kirby diagram of Ob(M, id): a 0-framed meridian on every curve."""
    hob = algorithm1(hd)
    return _close_with_duals(hob, hd, CocoreImage.identity(hd.n), "2", None)


def algorithm3(hd, mono):
    """Kirby diagram of Ob(M, mono).

    ``mono`` is either a :class:`TwistWord` (only for punctured-handlebody
    pages whose (g, n) it matches) or an explicit :class:`CocoreImage` table
    giving the image of every 2-handle cocore.
    """
    hob = algorithm1(hd)
    if isinstance(mono, TwistWord):
        if (mono.g, mono.n) != (hd.genus, hd.n):
            raise OpenBookError(
                f"context mismatch: twist word acts on H_{{{mono.g},{mono.n}}}, "
                f"page has g={hd.genus}, n={hd.n}")
        if not hd.is_canonical():
            raise OpenBookError(
                "context mismatch: twist words act on punctured handlebodies only; "
                "pass an explicit cocore image table for this page")
        image, text = cocore_images(mono), str(mono)
    elif isinstance(mono, CocoreImage):
        if mono.n != hd.n:
            raise OpenBookError(f"context mismatch: table has {mono.n} images, page has {hd.n} curves")
        for word in mono.pass_words:
            for l, _ in word:
                if not 1 <= l <= hd.genus:
                    raise OpenBookError(f"cocore image passes through missing 1-handle {l}")
        image, text = mono, None
    else:
        raise TypeError(f"expected TwistWord or CocoreImage, got {type(mono).__name__}")
    return _close_with_duals(hob, hd, image, "3", text)


def euler_characteristic(kd):
    return 1 - kd.balls + len(kd.components) - kd.three_handles + kd.four_handles


def stabilize(hd, mono):
    """Connected sum of the page with a punctured solid torus, plus one torus twist.

    The open book changes by a connected sum with S^4.
    """
    if (mono.g, mono.n) != (hd.genus, hd.n):
        raise OpenBookError("context mismatch: monodromy is not defined on this page")
    names = {c.name for c in hd.curves}
    k = hd.n + 1
    while f"a{k}" in names:
        k += 1
    new_hd = HeegaardDiagram(hd.genus + 1, hd.curves + (AttachingCurve(f"a{k}"),))
    g, n = hd.genus + 1, hd.n + 1
    # widen the context first so the new factor validates
    widened = TwistWord(mono.factors, g, n)
    return new_hd, widened * TwistWord((Torus(n, g),), g, n)


# -- .kd serialization -------------------------------------------------------

def to_json(kd):
    doc = {
        "balls": kd.balls,
        "components": [
            {"name": c.name, "word": [list(p) for p in c.word], "framing": c.framing, "role": c.role}
            for c in kd.components
        ],
        "linking": [list(row) for row in kd.linking],
        "three_handles": kd.three_handles,
        "four_handles": kd.four_handles,
        "provenance": {k: v for k, v in kd.provenance},
        "log": list(kd.log),
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno) from None
    try:
        comps = tuple(
            FramedComponent(c["name"], tuple(tuple(p) for p in c["word"]), c["framing"], c["role"])
            for c in doc["components"]
        )
        return KirbyDiagram(
            doc["balls"], comps, doc["linking"], doc["three_handles"], doc["four_handles"],
            provenance=tuple(doc.get("provenance", {}).items()),
            log=tuple(doc.get("log", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, OpenBookError):
            raise
        raise ParseError(f"malformed .kd document: {exc!r}") from None
