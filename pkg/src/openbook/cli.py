"""
Command-line front end.

Diagrams travel over files or standard streams; ``.hd`` text and ``.kd`` JSON
are told apart by their first token, so commands pipe into each other::

    openbook lens 3 1 | openbook double | openbook invariants

Exit status is 0 on success, 1 on domain or input errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .braids import braid_permutation, braids_equivalent, closure_is_knot, lens_braid, parse_braid
from .errors import OpenBookError
from .heegaard import HeegaardDiagram, format_hd, lens_diagram, parse_hd
from .invariants import fundamental_group, homology, intersection_form, invariant_bundle
from .kirby import (
    KirbyDiagram, algorithm1, algorithm2, algorithm3, euler_characteristic, from_json, stabilize,
    to_json,
)
from .monodromy import CocoreImage, parse_twistword
from .moves import apply_moves, parse_script
from .plotting import component_table, render_svg
from .reduce import reduce, verify_reduce


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise OpenBookError(f"cannot read {path}: {exc.strerror}") from None


def parse_any(text):
    """Parse ``.kd`` JSON or ``.hd`` text, whichever the leading token says."""
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("{"):
            return from_json(text)
        if stripped.startswith("page"):
            return parse_hd(text)
        break
    raise OpenBookError("unrecognized input: expected a .hd page or a .kd JSON document")


def _load_hd(path):
    obj = parse_any(_read(path))
    if not isinstance(obj, HeegaardDiagram):
        raise OpenBookError("expected a Heegaard diagram (.hd), got a Kirby diagram")
    return obj


def _load_kd(path):
    obj = parse_any(_read(path))
    if not isinstance(obj, KirbyDiagram):
        raise OpenBookError("expected a Kirby diagram (.kd), got a Heegaard diagram")
    return obj


def _emit(text, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def roundtrip(path):
    """Parse, serialize, parse again; True when both parses agree."""
    text = _read(path)
    first = parse_any(text)
    again = format_hd(first) if isinstance(first, HeegaardDiagram) else to_json(first)
    return parse_any(again) == first


# -- report builders (module level so worker processes can pickle them) --------

def invariants_report(kd, fmt="json"):
    pi1 = fundamental_group(kd)
    doc = {"euler": euler_characteristic(kd), "pi1": pi1.to_dict(), "H": None, "form": None,
           "kernel_form": None}
    if kd.closed:
        doc["H"] = homology(kd).to_list()
        doc["kernel_form"] = invariant_bundle(kd).form.to_dict()
        if not kd.balls and not kd.three_handles:
            doc["form"] = intersection_form(kd).to_dict()
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"euler: {doc['euler']}", f"pi1: {pi1}"]
    if kd.closed:
        lines.append("H: (" + ", ".join(str(g) for g in homology(kd).groups) + ")")
    else:
        lines.append("H: undefined (open diagram)")
    if doc["form"]:
        f = doc["form"]
        lines.append(f"form: {f['parity']}, det {f['det']}, signature {f['signature']}")
    else:
        lines.append("form: undefined")
    if doc["kernel_form"]:
        f = doc["kernel_form"]
        lines.append(f"kernel form: rank {f['rank']}, {f['parity']}, det {f['det']}, "
                     f"signature {f['signature']}")
    return "\n".join(lines) + "\n"


def reduce_report(hd, verify=False, fmt="text"):
    g, n, word = reduce(hd)
    doc = {"g": g, "n": n, "word": str(word)}
    if verify:
        rep = verify_reduce(hd)
        doc["verdict"] = rep.verdict
        doc["original"] = rep.original.to_dict()
        doc["reduced"] = rep.reduced.to_dict()
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"page: H_{{{g},{n}}}", f"word: {word}"]
    if verify:
        lines.append(f"verdict: {'true' if doc['verdict'] else 'false'}")
        lines.append(f"original: {json.dumps(doc['original'], sort_keys=True)}")
        lines.append(f"reduced: {json.dumps(doc['reduced'], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _invariants_job(args):
    path, fmt = args
    return invariants_report(_load_kd(path), fmt)


def _reduce_job(args):
    path, verify, fmt = args
    return reduce_report(_load_hd(path), verify, fmt)


def _batch(job, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(job, items))
    return [job(item) for item in items]


# -- subcommands ---------------------------------------------------------------

def cmd_hob(a):
    _emit(to_json(algorithm1(_load_hd(a.file))), a.out)


def cmd_double(a):
    _emit(to_json(algorithm2(_load_hd(a.file))), a.out)


def cmd_ob(a):
    hd = _load_hd(a.file)
    mono = parse_twistword(a.mono, hd.genus, hd.n)
    _emit(to_json(algorithm3(hd, mono)), a.out)


def cmd_invariants(a):
    files = a.files or ["-"]
    _emit("".join(_batch(_invariants_job, [(f, a.format or "json") for f in files], a.jobs)), a.out)


def cmd_reduce(a):
    files = a.files or ["-"]
    items = [(f, a.verify, a.format or "text") for f in files]
    _emit("".join(_batch(_reduce_job, items, a.jobs)), a.out)


def cmd_lens(a):
    hd = lens_diagram(a.p, a.q)
    if a.twisted:
        image = CocoreImage(((),), (1,))
        _emit(to_json(algorithm3(hd, image)), a.out)
    else:
        _emit(format_hd(hd), a.out)


def cmd_braid_canon(a):
    b = parse_braid(a.word, a.strands)
    perm = braid_permutation(b)
    knot = closure_is_knot(b)
    doc = {"strands": b.strands, "word": str(b), "permutation": list(perm.images),
           "cycles": str(perm), "knot": knot}
    if knot:
        canon = lens_braid(b.strands, 1)
        _, cert = braids_equivalent(b, canon)
        doc["canonical"] = str(canon)
        doc["conjugations"] = [list(t) for t in cert.conjugations]
        doc["crossing_changes"] = cert.crossing_changes
    if (a.format or "text") == "json":
        _emit(json.dumps(doc, indent=2) + "\n", a.out)
        return
    lines = [f"strands: {b.strands}", f"permutation: {perm}",
             f"closure: {'knot' if knot else f'{len(perm.cycles())}-component link'}"]
    if knot:
        lines.append(f"canonical: {doc['canonical']}")
        lines.append(f"certificate: {cert}")
    _emit("\n".join(lines) + "\n", a.out)


def cmd_moves(a):
    moves = parse_script(_read(a.script))
    _emit(to_json(apply_moves(_load_kd(a.file), moves)), a.out)


def cmd_stabilize(a):
    hd = _load_hd(a.file)
    mono = parse_twistword(a.mono or "", hd.genus, hd.n)
    new_hd, new_mono = stabilize(hd, mono)
    if (a.format or "text") == "json":
        _emit(json.dumps({"hd": format_hd(new_hd), "mono": str(new_mono)}, indent=2) + "\n", a.out)
    else:
        _emit(format_hd(new_hd) + f"# mono: {new_mono}\n", a.out)


def cmd_render(a):
    kd = _load_kd(a.file)
    render_svg(kd, a.out)
    sys.stdout.write(component_table(kd))


def cmd_roundtrip(a):
    ok = roundtrip(a.file)
    sys.stdout.write("true\n" if ok else "false\n")
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="openbook", description=__doc__.split("\n\n")[1].strip())
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", nargs="?", default="-", help="input path, '-' for stdin")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("hob", cmd_hob, "Kirby diagram of the half open book (algorithm 1)")
    add("double", cmd_double, "Kirby diagram of Ob(M, id) (algorithm 2)")
    add("ob", cmd_ob, "Kirby diagram of Ob(M, mono) (algorithm 3)").add_argument(
        "--mono", required=True, help="twist word, e.g. 't(1,1)^3 s(1)'")

    sp = add("invariants", cmd_invariants, "invariants of a .kd diagram", file=False)
    sp.add_argument("files", nargs="*")
    sp.add_argument("--format", choices=("json", "text"))
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("reduce", cmd_reduce, "punctured-handlebody twist word for Ob(M, id)", file=False)
    sp.add_argument("files", nargs="*")
    sp.add_argument("--verify", action="store_true", help="compare invariant bundles")
    sp.add_argument("--format", choices=("json", "text"))
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("lens", cmd_lens, "Heegaard diagram of L(p,q) minus a ball", file=False)
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--twisted", action="store_true",
                    help="emit the Kirby diagram of the twisted spin instead")

    sp = add("braid-canon", cmd_braid_canon, "permutation and normalization certificate of a braid",
             file=False)
    sp.add_argument("word", help="e.g. 's1 s2^-1 s1'")
    sp.add_argument("--strands", type=int)
    sp.add_argument("--format", choices=("json", "text"))

    moves = sub.add_parser("moves", help="Kirby moves on a .kd diagram")
    msub = moves.add_subparsers(dest="action", required=True)
    sp = msub.add_parser("apply", help="apply a move script")
    sp.add_argument("script")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_moves)

    sp = add("stabilize", cmd_stabilize, "add a punctured solid torus and a torus twist")
    sp.add_argument("--mono", default="", help="monodromy of the input (default identity)")
    sp.add_argument("--format", choices=("json", "text"))

    sp = add("render", cmd_render, "schematic SVG of a .kd shadow")
    sp.set_defaults(out=None)
    sp._option_string_actions["--out"].required = True

    add("roundtrip", cmd_roundtrip, "check parse/serialize/parse stability")
    return p


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args)
    except OpenBookError as exc:
        sys.stderr.write(f"openbook: error: {exc}\n")
        return 1
    return status or 0


def main(argv=None):
    try:
        sys.exit(run(argv))
    except BrokenPipeError:
        sys.exit(1)
