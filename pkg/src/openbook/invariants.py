"""
Invariants read off a closed Kirby diagram's shadow.

Handles give a chain complex; the dotted balls generate pi_1 and the
component words are the relators. H_1 comes from the Smith normal form of
the exponent matrix. H_2 and H_3 are not computed from explicit 3-/4-handle
boundary maps (the diagrams do not record them); for a closed, connected,
oriented 4-manifold Poincare duality and universal coefficients give

    H_3 = Z^{b1},   H_2 = Z^{b2} + Tors(H_1),   b2 = chi - 2 + 2 b1.

None of this certifies a diffeomorphism. Equal invariants are necessary,
never sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OpenBookError
from .kirby import euler_characteristic
from .smith import det, kernel_basis, matmul, smith_normal_form, transpose

__all__ = [
    "GroupPresentation", "AbelianGroup", "HomologyProfile", "IntersectionForm", "FormData",
    "InvariantBundle", "fundamental_group", "exponent_matrix", "homology",
    "intersection_form", "signature", "kernel_form", "invariant_bundle", "smith_normal_form",
]


@dataclass(frozen=True)
class AbelianGroup:
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.rank < 0:
            raise OpenBookError("rank must be non-negative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise OpenBookError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise OpenBookError("torsion coefficients must be at least 2")

    @classmethod
    def from_relations(cls, matrix, ngens):
        """Z^ngens modulo the column span of ``matrix`` (ngens x r)."""
        D, _, _ = smith_normal_form(matrix, None) if matrix else ([], None, None)
        diag = [D[i][i] for i in range(min(len(D), len(D[0]) if D and D[0] else 0))]
        nonzero = [d for d in diag if d]
        return cls(ngens - len(nonzero), tuple(d for d in nonzero if d > 1))

    def to_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupPresentation:
    generators: int
    relators: tuple

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        for r in self.relators:
            if any(not 1 <= abs(x) <= self.generators for x in r):
                raise OpenBookError(f"relator {r} uses an unknown generator")

    def abelianization(self):
        cols = []
        for r in self.relators:
            col = [0] * self.generators
            for x in r:
                col[abs(x) - 1] += 1 if x > 0 else -1
            cols.append(col)
        return AbelianGroup.from_relations(transpose(cols) if cols else [], self.generators)

    def to_dict(self):
        return {"generators": [f"x{i}" for i in range(1, self.generators + 1)],
                "relators": [list(r) for r in self.relators]}

    def __str__(self):
        def spell(r):
            return " ".join(f"x{abs(x)}" + ("" if x > 0 else "^-1") for x in r) or "1"
        gens = ", ".join(f"x{i}" for i in range(1, self.generators + 1))
        rels = ", ".join(spell(r) for r in self.relators)
        return f"<{' ' + gens if gens else ''} |{' ' + rels if rels else ''} >"


def fundamental_group(kd):
    """Presentation of pi_1: one generator per ball, one relator per non-empty word.

    Accepted for open diagrams too, where it presents pi_1 of the 2-handlebody.
    """
    rels = tuple(tuple(l * s for l, s in c.word) for c in kd.components if c.word)
    return GroupPresentation(kd.balls, rels)


def exponent_matrix(kd):
    """balls x components matrix of signed pass counts."""
    E = [[0] * len(kd.components) for _ in range(kd.balls)]
    for c, comp in enumerate(kd.components):
        for l, s in comp.word:
            E[l - 1][c] += s
    return E


@dataclass(frozen=True)
class HomologyProfile:
    groups: tuple
    euler: int

    def __getitem__(self, k):
        return self.groups[k]

    def to_list(self):
        return [g.to_dict() for g in self.groups]


def homology(kd):
    if not kd.closed:
        raise OpenBookError("open diagram: homology needs a closed diagram (one 4-handle)")
    E = exponent_matrix(kd)
    h1 = AbelianGroup.from_relations(E if kd.components else [], kd.balls)
    chi = euler_characteristic(kd)
    b1 = h1.rank
    b2 = chi - 2 + 2 * b1
    if b2 < 0:
        raise OpenBookError(f"diagram is not a closed connected 4-manifold (b2 = {b2})")
    groups = (AbelianGroup(1), h1, AbelianGroup(b2, h1.torsion), AbelianGroup(b1), AbelianGroup(1))
    return HomologyProfile(groups, chi)


def signature(S):
    """Signature of a symmetric integer matrix by exact congruence diagonalization."""
    M = [[Fraction(v) for v in row] for row in S]
    pos = neg = 0
    while M:
        k = len(M)
        i = next((i for i in range(k) if M[i][i]), None)
        if i is None:
            pair = next(((a, b) for a in range(k) for b in range(k) if M[a][b]), None)
            if pair is None:
                break
            a, b = pair
            # e_a += e_b makes the a-th diagonal entry 2*M[a][b] != 0
            M[a] = [x + y for x, y in zip(M[a], M[b])]
            for row in M:
                row[a] += row[b]
            i = a
        p = M[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(k) if r != i]
        M = [[M[r][c] - M[r][i] * M[i][c] / p for c in rest] for r in rest]
    return pos - neg


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple
    parity: str
    determinant: int
    signature: int

    def to_dict(self):
        return {"parity": self.parity, "det": self.determinant, "signature": self.signature}


def _parity(S):
    return "even" if all(S[i][i] % 2 == 0 for i in range(len(S))) else "odd"


def intersection_form(kd):
    """The linking matrix read as the intersection form.

    Only for closed diagrams without 1- and 3-handles, where H_2 is freely
    generated by the components.
    """
    if not kd.closed:
        raise OpenBookError("form undefined for this diagram: diagram is open")
    if kd.balls or kd.three_handles:
        raise OpenBookError("form undefined for this diagram: 1- or 3-handles present")
    S = [list(row) for row in kd.linking]
    return IntersectionForm(kd.linking, _parity(S), det(S), signature(S))


def kernel_form(kd):
    """Nondegenerate part of the linking form on 2-chains with no net passes.

    Restricts the linking matrix to the kernel of the exponent matrix and
    divides out the radical. For ball-free diagrams with unimodular linking
    matrix this is the linking matrix itself.
    """
    m = len(kd.components)
    basis = kernel_basis(exponent_matrix(kd), m) if kd.balls else [
        [int(i == j) for i in range(m)] for j in range(m)]
    if not basis:
        return []
    B = transpose(basis)
    K = matmul(transpose(B), matmul([list(r) for r in kd.linking], B))
    D, _, V = smith_normal_form(K)
    r = sum(1 for i in range(len(D)) if D[i][i])
    W = matmul(transpose(V), matmul(K, V))
    return [row[:r] for row in W[:r]]


@dataclass(frozen=True)
class FormData:
    rank: int
    parity: str
    determinant: int
    signature: int

    def to_dict(self):
        return {"rank": self.rank, "parity": self.parity, "det": self.determinant,
                "signature": self.signature}


@dataclass(frozen=True)
class InvariantBundle:
    euler: int
    h1: AbelianGroup
    homology: HomologyProfile
    form: FormData

    def to_dict(self):
        return {"euler": self.euler, "H1": self.h1.to_dict(), "H": self.homology.to_list(),
                "form": self.form.to_dict()}

    def differences(self, other):
        """Names of the fields in which two bundles differ."""
        return [name for name in ("euler", "h1", "homology", "form")
                if getattr(self, name) != getattr(other, name)]


def invariant_bundle(kd):
    h = homology(kd)
    W = kernel_form(kd)
    form = FormData(len(W), _parity(W), det(W), signature(W))
    return InvariantBundle(h.euler, h[1], h, form)
