"""
Kirby moves acting on the algebraic shadow of a diagram.

Moves never touch a planar picture: a handle slide is a band sum on words,
framings and linking numbers; cancellations delete handle pairs and perform
the matching Tietze substitution. Each result carries the input's move log
extended by one entry. Indices are 1-based.

Move scripts have one move per line::

    slide i j +|-
    cancel12 l i
    cancel23 i
    crossing i
"""

from __future__ import annotations

from dataclasses import replace

from .errors import MoveError, ParseError
from .kirby import DUAL, KirbyDiagram, invert_word


def _check_component(kd, i):
    if not 1 <= i <= len(kd.components):
        raise MoveError(f"component index {i} out of range 1..{len(kd.components)}")


def _append_reduced(word, tail):
    """Concatenate, cancelling inverse pairs only where the two words meet."""
    out = list(word)
    for letter in tail:
        if out and out[-1] == (letter[0], -letter[1]):
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def slide(kd, i, j, sign):
    """Slide component ``i`` over component ``j``; ``sign`` picks the band orientation.

    framing_i += framing_j + 2*sign*lk(i, j) and row i of the linking matrix
    gains ``sign`` times row j. Component j is untouched.
    """
    _check_component(kd, i)
    _check_component(kd, j)
    if i == j:
        raise MoveError("cannot slide a component over itself")
    if sign not in (1, -1):
        raise MoveError("slide sign must be +1 or -1")
    a, b = i - 1, j - 1
    L = [list(row) for row in kd.linking]
    ci, cj = kd.components[a], kd.components[b]
    framing = ci.framing + cj.framing + 2 * sign * L[a][b]
    for k in range(len(L)):
        if k != a:
            L[a][k] += sign * L[b][k]
            L[k][a] = L[a][k]
    L[a][a] = framing
    tail = cj.word if sign > 0 else invert_word(cj.word)
    comps = list(kd.components)
    comps[a] = replace(ci, word=_append_reduced(ci.word, tail), framing=framing)
    s = "+" if sign > 0 else "-"
    return replace(kd, components=tuple(comps), linking=tuple(map(tuple, L)),
                   log=kd.log + (f"slide {i} {j} {s}",))


def meridian_partner(kd, i):
    """Index of a 0-framed, wordless dual component linking ``i`` once, or None."""
    for k, c in enumerate(kd.components, 1):
        if k != i and c.role == DUAL and not c.word and c.framing == 0 and kd.lk(i, k) == 1:
            return k
    return None


def crossing_change(kd, i):
    """Change a crossing of component ``i`` by sliding it over its 0-framed meridian.

    At shadow level nothing changes; the move is only logged.
    """
    _check_component(kd, i)
    k = meridian_partner(kd, i)
    if k is None:
        raise MoveError(f"component {i} has no 0-framed meridian to slide over")
    return kd.with_log(f"crossing {i} (via meridian {k})")


def _delete_component(kd, a, comps):
    L = [[v for c, v in enumerate(row) if c != a] for r, row in enumerate(kd.linking) if r != a]
    del comps[a]
    return L


def cancel_12(kd, l, i):
    """Cancel ball ``l`` against component ``i``, which must pass through it exactly once."""
    _check_component(kd, i)
    if not 1 <= l <= kd.balls:
        raise MoveError(f"ball index {l} out of range 1..{kd.balls}")
    comp = kd.components[i - 1]
    if len(comp.word) != 1 or comp.word[0][0] != l:
        raise MoveError(
            f"component {i} must pass exactly once, through ball {l}; its word is {list(comp.word)}")
    comps = list(kd.components)
    a = i - 1
    L = _delete_component(kd, a, comps)
    rerouted = False
    new = []
    for c in comps:
        word = []
        for ball, s in c.word:
            if ball == l:
                rerouted = True
                continue
            word.append((ball - 1 if ball > l else ball, s))
        new.append(replace(c, word=tuple(word)))
    for r in range(len(L)):
        L[r][r] = new[r].framing
    entry = f"cancel12 {l} {i}" + (" (rerouted; linking kept at shadow level)" if rerouted else "")
    return KirbyDiagram(kd.balls - 1, tuple(new), L, kd.three_handles, kd.four_handles,
                        provenance=kd.provenance, log=kd.log + (entry,))


def cancel_23(kd, i):
    """Cancel a 0-framed unlinked wordless component against a 3-handle."""
    _check_component(kd, i)
    comp = kd.components[i - 1]
    if kd.three_handles < 1:
        raise MoveError("no 3-handle left to cancel against")
    if comp.word or comp.framing != 0:
        raise MoveError(f"component {i} must be a 0-framed unknot away from the balls")
    if any(kd.lk(i, k) for k in range(1, len(kd.components) + 1) if k != i):
        raise MoveError(f"component {i} links another component")
    comps = list(kd.components)
    L = _delete_component(kd, i - 1, comps)
    return KirbyDiagram(kd.balls, tuple(comps), L, kd.three_handles - 1, kd.four_handles,
                        provenance=kd.provenance, log=kd.log + (f"cancel23 {i}",))


def normalize_framing(kd, i, j):
    """Slide ``i`` over ``j`` until framing_i is 0 or 1.

    ``j`` must be 0-framed with lk(i, j) = +-1, so each slide moves framing_i
    by exactly two; this is the parity normalization of a Hopf link.
    """
    cj = kd.component(j)
    lk = kd.lk(i, j)
    if cj.framing != 0 or abs(lk) != 1:
        raise MoveError("normalization needs a 0-framed partner linking once")
    while kd.component(i).framing not in (0, 1):
        f = kd.component(i).framing
        sign = -lk if f > 1 else lk
        kd = slide(kd, i, j, sign)
    return kd


def parse_script(text):
    moves = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        op, args = line[0], line[1:]
        try:
            if op == "slide" and len(args) == 3 and args[2] in ("+", "-"):
                moves.append(("slide", int(args[0]), int(args[1]), 1 if args[2] == "+" else -1))
            elif op == "cancel12" and len(args) == 2:
                moves.append(("cancel12", int(args[0]), int(args[1])))
            elif op == "cancel23" and len(args) == 1:
                moves.append(("cancel23", int(args[0])))
            elif op == "crossing" and len(args) == 1:
                moves.append(("crossing", int(args[0])))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"malformed move {raw.strip()!r}", lineno) from None
    return moves


_APPLY = {"slide": slide, "cancel12": cancel_12, "cancel23": cancel_23, "crossing": crossing_change}


def apply_moves(kd, moves):
    for op, *args in moves:
        kd = _APPLY[op](kd, *args)
    return kd
