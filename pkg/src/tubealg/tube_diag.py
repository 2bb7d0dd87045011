"""The tube algebra of a finite group with a normalized 3-cocycle.

The basis is ``a(g1, s, g2)`` with ``g1 s = s g2``; products, the
involution ``#`` and the canonical trace are given by explicit
``omega``-phases::

    a(g2,t,g3) . a(g1,s,g2) = w(g1,s,t) w(s,g2,t)^-1 w(s,t,g3) a(g1,st,g3)
    a(g1,s,g2)^#            = w(g1,s,s^-1)^-1 w(s,g2,s^-1) w(s,s^-1,g1)^-1
                              a(g2, s^-1, g1)
    trace a(g1,s,g2)        = [g1 == g2][s == e]

The whole algebra is isomorphic, as a *-algebra, to a direct sum over
conjugacy classes C of (matrices indexed by C) tensor (the group
algebra of the centralizer of the class representative, twisted by the
derived 2-cocycle).  ``phi_iso`` realizes the isomorphism on basis
elements, with the transport cochain supplying the scalar;
``verify_star_iso`` checks multiplicativity and *-preservation
exhaustively and exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .coho import gamma, phi_class
from .grp import ClassData, GroupTable, conjugacy_data
from .phase import CheckResult, Cocycle2, Cocycle3, Phase, is_normalized, phase_prod
from .rep import TwistedGroupAlgebra, center_dimension
from .staralg import MonomialStarAlgebra


@dataclass(frozen=True)
class TubeBasisElement:
    """Label a(g1, s, g2); the constraint g1 s = s g2 is kept redundant."""

    g1: int
    s: int
    g2: int


@dataclass(frozen=True)
class BlockImage:
    """scalar * E[row, col] tensor [element], inside one class block."""

    class_index: int
    scalar: Phase
    row: object
    col: object
    element: int


class TubeAlgebra(MonomialStarAlgebra):
    """Structure constants and block decomposition for one (G, omega)."""

    def __init__(self, group: GroupTable, omega: Cocycle3):
        omega.ensure_valid()
        if not is_normalized(omega):
            raise ValueError("tube algebra needs a normalized cocycle")
        self.group = group
        self.omega = omega
        self._labels = [self.basis_label(g1, s)
                        for g1 in group.elements() for s in group.elements()]
        self._class_data: Optional[ClassData] = None
        self._blocks: Optional[BlockAlgebra] = None

    def basis_label(self, g1: int, s: int) -> TubeBasisElement:
        G = self.group
        g2 = G.mul(G.inverse(s), G.mul(g1, s))
        return TubeBasisElement(g1, s, g2)

    def validate_label(self, a: TubeBasisElement) -> None:
        G = self.group
        if G.mul(a.g1, a.s) != G.mul(a.s, a.g2):
            raise ValueError(f"malformed tube label {a}")

    def labels(self) -> list[TubeBasisElement]:
        return self._labels

    def mult_basis(self, left: TubeBasisElement,
                   right: TubeBasisElement) -> Optional[tuple[Phase, TubeBasisElement]]:
        self.validate_label(left)
        self.validate_label(right)
        if right.g2 != left.g1:
            return None
        G, w = self.group, self.omega
        g1, s = right.g1, right.s
        g2, t, g3 = left.g1, left.s, left.g2
        scalar = phase_prod(w(g1, s, t), w.bar(s, g2, t), w(s, t, g3))
        return scalar, TubeBasisElement(g1, G.mul(s, t), g3)

    def star_basis(self, a: TubeBasisElement) -> tuple[Phase, TubeBasisElement]:
        G, w = self.group, self.omega
        si = G.inverse(a.s)
        scalar = phase_prod(w.bar(a.g1, a.s, si), w(a.s, a.g2, si),
                            w.bar(a.s, si, a.g1))
        return scalar, TubeBasisElement(a.g2, si, a.g1)

    def trace_basis(self, a: TubeBasisElement) -> bool:
        return a.g1 == a.g2 and a.s == 0

    def unit_labels(self) -> list[TubeBasisElement]:
        return [TubeBasisElement(g, 0, g) for g in self.group.elements()]

    # -- block decomposition ------------------------------------------------

    @property
    def class_data(self) -> ClassData:
        if self._class_data is None:
            self._class_data = conjugacy_data(self.group)
        return self._class_data

    def block_algebra(self) -> "BlockAlgebra":
        if self._blocks is None:
            cd = self.class_data
            twists = [phi_class(self.group, self.omega, cd, c)
                      for c in range(cd.num_classes())]
            index_sets = [list(cls) for cls in cd.classes]
            self._blocks = BlockAlgebra(self.group, cd, index_sets, twists)
        return self._blocks

    def phi_iso(self, a: TubeBasisElement) -> BlockImage:
        """Image of a basis element in the block-sum algebra."""
        self.validate_label(a)
        G, cd = self.group, self.class_data
        c = cd.class_of[a.g1]
        assert cd.class_of[a.g2] == c
        w1, w2 = cd.transport[a.g1], cd.transport[a.g2]
        u = G.mul(G.inverse(w1), G.mul(a.s, w2))
        gc = cd.reps[c]
        assert G.mul(u, gc) == G.mul(gc, u), "transported middle must centralize"
        scalar = gamma(G, self.omega, gc, w1, w2, u).inv()
        return BlockImage(c, scalar, row=a.g2, col=a.g1, element=G.inverse(u))

    def phi_iso_inverse(self, c: int, row, col, element: int) -> tuple[Phase, TubeBasisElement]:
        """Preimage of E[row, col] tensor [element] as scalar * basis label."""
        G, cd = self.group, self.class_data
        g2, g1 = row, col
        w1, w2 = cd.transport[g1], cd.transport[g2]
        u = G.inverse(element)
        s = G.mul(w1, G.mul(u, G.inverse(w2)))
        gc = cd.reps[c]
        scalar = gamma(G, self.omega, gc, w1, w2, u)
        label = TubeBasisElement(g1, s, g2)
        self.validate_label(label)
        return scalar, label

    def support_projector_label(self, c: int) -> TubeBasisElement:
        gc = self.class_data.reps[c]
        return TubeBasisElement(gc, 0, gc)

    def support_block_index(self, c: int) -> int:
        return self.class_data.reps[c]


class BlockAlgebra:
    """Direct sum over classes of matrix units tensor a twisted group algebra."""

    def __init__(self, group: GroupTable, class_data: ClassData,
                 index_sets: list[list], twists: list[Cocycle2]):
        self.group = group
        self.class_data = class_data
        self.index_sets = index_sets
        self.twists = twists

    def mult(self, x: BlockImage, y: BlockImage) -> Optional[BlockImage]:
        """x . y, with y acting first; zero unless the matrix units chain."""
        if x.class_index != y.class_index or x.col != y.row:
            return None
        tw = self.twists[x.class_index]
        scalar = phase_prod(x.scalar, y.scalar, tw(x.element, y.element))
        return BlockImage(x.class_index, scalar, x.row, y.col,
                          self.group.mul(x.element, y.element))

    def star(self, x: BlockImage) -> BlockImage:
        tw = self.twists[x.class_index]
        vi = self.group.inverse(x.element)
        scalar = phase_prod(x.scalar.inv(), tw(vi, x.element).inv())
        return BlockImage(x.class_index, scalar, x.col, x.row, vi)

    def basis_labels(self) -> Iterator[tuple[int, object, object, int]]:
        for c, idx in enumerate(self.index_sets):
            for row in idx:
                for col in idx:
                    for v in self.twists[c].elements:
                        yield (c, row, col, v)

    def total_dimension(self) -> int:
        return sum(len(idx) ** 2 * len(tw.elements)
                   for idx, tw in zip(self.index_sets, self.twists))


def tube_mult(alg: TubeAlgebra, left: TubeBasisElement,
              right: TubeBasisElement) -> Optional[tuple[Phase, TubeBasisElement]]:
    """Product left . right on basis labels (right acts first)."""
    return alg.mult_basis(left, right)


def tube_star(alg: TubeAlgebra, a: TubeBasisElement) -> tuple[Phase, TubeBasisElement]:
    return alg.star_basis(a)


def tube_trace(alg: TubeAlgebra, x) -> complex:
    """Canonical trace of a linear element."""
    return alg.trace_element(x)


def tube_inner(alg: TubeAlgebra, x, y) -> complex:
    """<x, y> = trace(y^# x)."""
    return alg.inner(x, y)


def verify_star_iso(group: GroupTable, omega: Cocycle3) -> CheckResult:
    """Exhaustively check the block map: multiplicative, *-preserving, bijective."""
    alg = TubeAlgebra(group, omega)
    blocks = alg.block_algebra()
    labels = alg.labels()
    images = {a: alg.phi_iso(a) for a in labels}

    if blocks.total_dimension() != len(labels):
        return CheckResult(False, "block-dimension-audit",
                           (blocks.total_dimension(), len(labels)))
    seen = {(im.class_index, im.row, im.col, im.element) for im in images.values()}
    if len(seen) != len(labels):
        return CheckResult(False, "phi-bijection", ())

    for b in labels:
        for a in labels:
            prod = alg.mult_basis(b, a)
            block_prod = blocks.mult(images[b], images[a])
            if prod is None:
                if block_prod is not None:
                    return CheckResult(False, "phi-mult-zero", (b, a))
                continue
            ph, lab = prod
            expect = images[lab]
            if block_prod is None or block_prod.class_index != expect.class_index \
                    or block_prod.row != expect.row or block_prod.col != expect.col \
                    or block_prod.element != expect.element \
                    or block_prod.scalar.q != (ph.q + expect.scalar.q) % 1:
                return CheckResult(False, "phi-mult", (b, a))

    for a in labels:
        ph, lab = alg.star_basis(a)
        expect = images[lab]
        got = blocks.star(images[a])
        if got.class_index != expect.class_index or got.row != expect.row \
                or got.col != expect.col or got.element != expect.element \
                or got.scalar.q != (ph.q + expect.scalar.q) % 1:
            return CheckResult(False, "phi-star", (a,))
    return CheckResult(True, "star-isomorphism")


@dataclass
class SimpleCount:
    per_class: dict
    total: int


def simple_count(group: GroupTable, omega: Cocycle3) -> SimpleCount:
    """Number of irreducible representations, summed over class blocks.

    Counts the exact center dimension of each twisted centralizer
    algebra; for the regular-representation cross-check see
    :func:`tubealg.rep.decompose`.
    """
    alg = TubeAlgebra(group, omega)
    return block_simple_count(alg.block_algebra())


def block_simple_count(blocks: BlockAlgebra) -> SimpleCount:
    per = {}
    total = 0
    for c, tw in enumerate(blocks.twists):
        talg = TwistedGroupAlgebra(blocks.group, tw.elements, tw)
        d = center_dimension(talg)
        per[blocks.class_data.reps[c]] = d
        total += d
    return SimpleCount(per_class=per, total=total)


def structure_constants_json(alg: TubeAlgebra) -> list[dict]:
    """Wire dump of all nonzero products of basis elements."""
    out = []
    for left in alg.labels():
        for right in alg.labels():
            hit = alg.mult_basis(left, right)
            if hit is None:
                continue
            ph, lab = hit
            out.append({
                "left": [left.g1, left.s, left.g2],
                "right": [right.g1, right.s, right.g2],
                "scalar": str(ph),
                "result": [lab.g1, lab.s, lab.g2],
            })
    return out
