"""Annular algebra over a weight set indexed by G, for G = <H, K>.

Morphisms between weight objects are spanned by boxes
``(h1, g1, g2, h2)`` with ``h1 g1 = g2 h2`` (nonzero only inside one
H-H double coset); the annular algebra itself has basis
``A(h1, g1, s, h2, g2)`` with ``h1 g1 s = s h2 g2`` and structure
constants::

    A(h2,g2,t,h3,g3) . A(h1,g1,s,h2,g2)
        = w(s,t,h3 g3) w(s, h2 g2, t)^-1 w(h1 g1, s, t) A(h1,g1,st,h3,g3)
    A(h1,g1,s,h2,g2)^#
        = w(h1 g1, s, s^-1)^-1 w(s, h2 g2, s^-1) w(s, s^-1, h1 g1)^-1
          A(h2,g2,s^-1,h1,g1)
    trace A(h1,g,s,h2,g) = [h1 == h2][s == e]

so the pair labels behave exactly like tube weights for the products
``h1 g1``.  The block map sends ``A(...)`` to a matrix unit indexed by
the pairs ``(h, g)`` with ``h g`` in a fixed conjugacy class, tensor a
twisted centralizer algebra; ``bh_verify_star_iso`` checks the map
under both candidate twist conventions and reports which ones work.

The final corner construction cuts the weight set down to H-H
double-coset representatives.  The identity endomorphism of each weight
pushes to the unit of its corner, so the cut-down is the subalgebra on
representative weights; endomorphism algebras of single weights are the
twisted algebras produced by :func:`end_xg_algebra`, and their minimal
idempotent splittings index the simple weight objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .coho import BHSetup, gamma, phi_class, phi_class_plain_conjugate
from .grp import ClassData, GroupTable, conjugacy_data
from .phase import CheckResult, Cocycle2, Phase, cocycle2_check, phase_prod
from .rep import center_dimension, decompose, TwistedGroupAlgebra
from .staralg import MonomialStarAlgebra
from .tube_diag import BlockAlgebra, BlockImage, SimpleCount, TubeAlgebra, \
    block_simple_count


@dataclass(frozen=True)
class ABasisElement:
    """Label A(h1, g1, s, h2, g2); constraint h1 g1 s = s h2 g2."""

    h1: int
    g1: int
    s: int
    h2: int
    g2: int


@dataclass(frozen=True)
class BoxMorphism:
    """A basis morphism between weights g1 and g2; constraint h1 g1 = g2 h2."""

    h1: int
    g1: int
    g2: int
    h2: int


class AnnularAlgebra(MonomialStarAlgebra):
    """Structure constants and block decomposition for one valid setup."""

    def __init__(self, setup: BHSetup, validate: bool = True):
        # validate=False only makes sense for formula-level comparisons
        # where the caller vouches for the setup (e.g. trivial H)
        if validate:
            setup.validate()
        self.setup = setup
        self.group = setup.group
        self.H = tuple(setup.H)
        self.omega = setup.omega
        G = self.group
        self._labels = []
        for h1 in self.H:
            for g1 in G.elements():
                for s in G.elements():
                    for h2 in self.H:
                        self._labels.append(self.basis_label(h1, g1, s, h2))
        self._class_data: Optional[ClassData] = None
        self._blocks: dict[str, BlockAlgebra] = {}

    def basis_label(self, h1: int, g1: int, s: int, h2: int) -> ABasisElement:
        G = self.group
        # g2 is forced: h1 g1 s = s h2 g2
        g2 = G.mul(G.inverse(h2), G.mul(G.inverse(s), G.mul(G.mul(h1, g1), s)))
        return ABasisElement(h1, g1, s, h2, g2)

    def validate_label(self, a: ABasisElement) -> None:
        G = self.group
        if a.h1 not in self.H or a.h2 not in self.H:
            raise ValueError(f"labels {a.h1}, {a.h2} must lie in H")
        lhs = G.mul(G.mul(a.h1, a.g1), a.s)
        rhs = G.mul(a.s, G.mul(a.h2, a.g2))
        if lhs != rhs:
            raise ValueError(f"malformed annular label {a}")

    def labels(self) -> list[ABasisElement]:
        return self._labels

    def mult_basis(self, left: ABasisElement,
                   right: ABasisElement) -> Optional[tuple[Phase, ABasisElement]]:
        self.validate_label(left)
        self.validate_label(right)
        if (left.h1, left.g1) != (right.h2, right.g2):
            return None
        G, w = self.group, self.omega
        s, t = right.s, left.s
        a = G.mul(right.h1, right.g1)
        b = G.mul(right.h2, right.g2)
        c = G.mul(left.h2, left.g2)
        scalar = phase_prod(w(s, t, c), w.bar(s, b, t), w(a, s, t))
        return scalar, ABasisElement(right.h1, right.g1, G.mul(s, t),
                                     left.h2, left.g2)

    def star_basis(self, x: ABasisElement) -> tuple[Phase, ABasisElement]:
        G, w = self.group, self.omega
        a = G.mul(x.h1, x.g1)
        b = G.mul(x.h2, x.g2)
        si = G.inverse(x.s)
        scalar = phase_prod(w.bar(a, x.s, si), w(x.s, b, si), w.bar(x.s, si, a))
        return scalar, ABasisElement(x.h2, x.g2, si, x.h1, x.g1)

    def trace_basis(self, x: ABasisElement) -> bool:
        return x.g1 == x.g2 and x.h1 == x.h2 and x.s == 0

    def unit_labels(self) -> list[ABasisElement]:
        return [ABasisElement(h, g, 0, h, g)
                for h in self.H for g in self.group.elements()]

    # -- block decomposition --------------------------------------------------

    @property
    def class_data(self) -> ClassData:
        if self._class_data is None:
            self._class_data = conjugacy_data(self.group)
        return self._class_data

    def sc_index(self) -> list[list[tuple[int, int]]]:
        """Per class, the ordered pairs (h, g) in H x G with h g in the class."""
        cd = self.class_data
        G = self.group
        sets: list[list[tuple[int, int]]] = [[] for _ in cd.classes]
        for h in self.H:
            for g in G.elements():
                sets[cd.class_of[G.mul(h, g)]].append((h, g))
        return sets

    def block_algebra(self, convention: str = "op-inverse") -> BlockAlgebra:
        """Block sum with the chosen twist convention.

        ``op-inverse`` uses phi_C(s, t) = conj(phi_{g_C}(t^-1, s^-1));
        ``plain-conjugate`` uses the pointwise conjugate of phi_{g_C}.
        """
        if convention not in self._blocks:
            cd = self.class_data
            builder = {"op-inverse": phi_class,
                       "plain-conjugate": phi_class_plain_conjugate}[convention]
            twists = [builder(self.group, self.omega, cd, c)
                      for c in range(cd.num_classes())]
            self._blocks[convention] = BlockAlgebra(
                self.group, cd, self.sc_index(), twists)
        return self._blocks[convention]

    def phi_iso(self, x: ABasisElement) -> BlockImage:
        self.validate_label(x)
        G, cd = self.group, self.class_data
        a = G.mul(x.h1, x.g1)
        b = G.mul(x.h2, x.g2)
        c = cd.class_of[a]
        assert cd.class_of[b] == c
        wa, wb = cd.transport[a], cd.transport[b]
        u = G.mul(G.inverse(wa), G.mul(x.s, wb))
        gc = cd.reps[c]
        assert G.mul(u, gc) == G.mul(gc, u)
        scalar = gamma(G, self.omega, gc, wa, wb, u).inv()
        return BlockImage(c, scalar, row=(x.h2, x.g2), col=(x.h1, x.g1),
                          element=G.inverse(u))

    def phi_iso_inverse(self, c: int, row: tuple[int, int], col: tuple[int, int],
                        element: int) -> tuple[Phase, ABasisElement]:
        G, cd = self.group, self.class_data
        h1, g1 = col
        h2, g2 = row
        a = G.mul(h1, g1)
        b = G.mul(h2, g2)
        wa, wb = cd.transport[a], cd.transport[b]
        u = G.inverse(element)
        s = G.mul(wa, G.mul(u, G.inverse(wb)))
        scalar = gamma(G, self.omega, cd.reps[c], wa, wb, u)
        label = ABasisElement(h1, g1, s, h2, g2)
        self.validate_label(label)
        return scalar, label

    def support_projector_label(self, c: int) -> ABasisElement:
        gc = self.class_data.reps[c]
        return ABasisElement(0, gc, 0, 0, gc)

    def support_block_index(self, c: int) -> tuple[int, int]:
        return (0, self.class_data.reps[c])

    # -- box calculus ----------------------------------------------------------

    def box_compose(self, outer: BoxMorphism,
                    inner: BoxMorphism) -> tuple[Phase, BoxMorphism]:
        """outer . inner, defined when inner's target weight is outer's source."""
        if inner.g2 != outer.g1:
            raise ValueError("box gradings do not match")
        G, w = self.group, self.omega
        h3, g2, g3, h4 = outer.h1, outer.g1, outer.g2, outer.h2
        h1, g1, _, h2 = inner.h1, inner.g1, inner.g2, inner.h2
        scalar = phase_prod(w.bar(h3, h1, g1), w(h3, g2, h2), w.bar(g3, h4, h2))
        out = BoxMorphism(G.mul(h3, h1), g1, g3, G.mul(h4, h2))
        self.validate_box(out)
        return scalar, out

    def box_star(self, b: BoxMorphism) -> tuple[Phase, BoxMorphism]:
        G, w = self.group, self.omega
        scalar = w.bar(b.h1, b.g1, G.inverse(b.h2))
        out = BoxMorphism(G.inverse(b.h1), b.g2, b.g1, G.inverse(b.h2))
        self.validate_box(out)
        return scalar, out

    def box_basis(self, g1: int, g2: int) -> list[BoxMorphism]:
        """All boxes from weight g1 to weight g2; empty across double cosets."""
        G = self.group
        out = []
        for h1 in self.H:
            for h2 in self.H:
                if G.mul(h1, g1) == G.mul(g2, h2):
                    out.append(BoxMorphism(h1, g1, g2, h2))
        return out

    def validate_box(self, b: BoxMorphism) -> None:
        G = self.group
        if b.h1 not in self.H or b.h2 not in self.H or \
                G.mul(b.h1, b.g1) != G.mul(b.g2, b.h2):
            raise ValueError(f"malformed box {b}")

    def identity_box(self, g: int) -> BoxMorphism:
        return BoxMorphism(0, g, g, 0)


def bh_phi_iso(alg: AnnularAlgebra, x: ABasisElement) -> BlockImage:
    """Image of an annular basis element in the block-sum algebra."""
    return alg.phi_iso(x)


def bh_phi_iso_inverse(alg: AnnularAlgebra, c: int, row, col, element: int):
    return alg.phi_iso_inverse(c, row, col, element)


def a_mult(alg: AnnularAlgebra, left: ABasisElement, right: ABasisElement):
    return alg.mult_basis(left, right)


def a_star(alg: AnnularAlgebra, x: ABasisElement):
    return alg.star_basis(x)


def a_trace(alg: AnnularAlgebra, x) -> complex:
    return alg.trace_element(x)


def box_compose(alg: AnnularAlgebra, outer: BoxMorphism, inner: BoxMorphism):
    return alg.box_compose(outer, inner)


def box_star(alg: AnnularAlgebra, b: BoxMorphism):
    return alg.box_star(b)


def box_basis(alg: AnnularAlgebra, g1: int, g2: int) -> list[BoxMorphism]:
    return alg.box_basis(g1, g2)


def box_checks(alg: AnnularAlgebra) -> list[CheckResult]:
    """Exhaustive unitarity, involution and associativity of the box calculus."""
    G = alg.group
    boxes = [b for g1 in G.elements() for g2 in G.elements()
             for b in alg.box_basis(g1, g2)]
    for b in boxes:
        ph1, bs = alg.box_star(b)
        ph2, bss = alg.box_star(bs)
        if bss != b or (ph1.inv().q + ph2.q) % 1 != 0:
            return [CheckResult(False, "box-star-involution", (b,))]
        # b* . b must be the identity box of the source weight, scalar 1
        ph_c, prod = alg.box_compose(bs, b)
        if prod != alg.identity_box(b.g1) or \
                (ph1.q + ph_c.q) % 1 != 0:
            return [CheckResult(False, "box-unitarity", (b,))]
        ph_c, prod = alg.box_compose(b, bs)
        if prod != alg.identity_box(b.g2) or (ph1.q + ph_c.q) % 1 != 0:
            return [CheckResult(False, "box-unitarity", (b,))]
    out = [CheckResult(True, "box-star-involution"),
           CheckResult(True, "box-unitarity")]
    by_source: dict[int, list[BoxMorphism]] = {}
    for b in boxes:
        by_source.setdefault(b.g1, []).append(b)
    for a in boxes:
        for b in by_source.get(a.g2, ()):
            ph_ba, ba = alg.box_compose(b, a)
            for c in by_source.get(b.g2, ()):
                ph_cb, cb = alg.box_compose(c, b)
                ph_l, left = alg.box_compose(cb, a)
                ph_r, right = alg.box_compose(c, ba)
                if left != right or \
                        (ph_cb.q + ph_l.q) % 1 != (ph_ba.q + ph_r.q) % 1:
                    out.append(CheckResult(False, "box-associativity", (c, b, a)))
                    return out
    out.append(CheckResult(True, "box-associativity"))
    return out


@dataclass
class BHIsoReport:
    results: dict
    passing: list[str]
    basis_count: int
    block_count: int

    @property
    def ok(self) -> bool:
        return bool(self.passing)


def bh_verify_star_iso(setup: BHSetup) -> BHIsoReport:
    """Exhaustive block-map check under both twist conventions.

    Each convention is tested for multiplicativity on every basis pair
    and *-preservation on every basis element; the report names the
    conventions that pass rather than silently preferring one.
    """
    alg = AnnularAlgebra(setup)
    labels = alg.labels()
    images = {x: alg.phi_iso(x) for x in labels}
    results = {}
    for convention in ("op-inverse", "plain-conjugate"):
        blocks = alg.block_algebra(convention)
        res = _check_block_map(alg, blocks, labels, images)
        results[convention] = res
    passing = [c for c, r in results.items() if r.ok]
    blocks = alg.block_algebra("op-inverse")
    return BHIsoReport(results=results, passing=passing,
                       basis_count=len(labels),
                       block_count=blocks.total_dimension())


def _check_block_map(alg, blocks, labels, images) -> CheckResult:
    if blocks.total_dimension() != len(labels):
        return CheckResult(False, "block-dimension-audit",
                           (blocks.total_dimension(), len(labels)))
    seen = {(im.class_index, im.row, im.col, im.element)
            for im in images.values()}
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
            if block_prod is None or block_prod.row != expect.row \
                    or block_prod.col != expect.col \
                    or block_prod.element != expect.element \
                    or block_prod.class_index != expect.class_index \
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


def end_xg_algebra(setup: BHSetup, g: int) -> Cocycle2:
    """The endomorphism twist of the weight g, on H^g = H meet g^-1 H g.

    mu(h1, h2) = w(g h1 g^-1, g h2 g^-1, g)^-1 * w(g h1 g^-1, g, h2)
                 * w(g, h1, h2)^-1
    """
    G, w = setup.group, setup.omega
    Hs = set(setup.H)
    gi = G.inverse(g)
    hg = tuple(sorted(h for h in setup.H
                      if G.mul(G.mul(g, h), gi) in Hs))
    values = []
    for h1 in hg:
        c1 = G.mul(G.mul(g, h1), gi)
        for h2 in hg:
            c2 = G.mul(G.mul(g, h2), gi)
            values.append(phase_prod(w.bar(c1, c2, g), w(c1, g, h2),
                                     w.bar(g, h1, h2)))
    out = Cocycle2(G, hg, values)
    res = cocycle2_check(out)
    if not res.ok:
        raise ValueError(f"endomorphism twist fails at {res.witness}")
    return out


def double_cosets(group: GroupTable, H: Sequence[int]) -> list[tuple[int, ...]]:
    """H-H double cosets, each sorted, listed by minimal representative."""
    seen = set()
    out = []
    for g in group.elements():
        if g in seen:
            continue
        coset = sorted({group.mul(group.mul(h1, g), h2)
                        for h1 in H for h2 in H})
        seen.update(coset)
        out.append(tuple(coset))
    return out


class CutdownAlgebra(MonomialStarAlgebra):
    """The annular algebra restricted to double-coset representative weights."""

    def __init__(self, annular: AnnularAlgebra,
                 weights: Optional[Sequence[int]] = None):
        self.annular = annular
        if weights is None:
            weights = [c[0] for c in double_cosets(annular.group, annular.H)]
        self.weights = tuple(sorted(weights))
        wset = set(self.weights)
        self._labels = [x for x in annular.labels()
                        if x.g1 in wset and x.g2 in wset]

    def labels(self) -> list[ABasisElement]:
        return self._labels

    def mult_basis(self, left, right):
        return self.annular.mult_basis(left, right)

    def star_basis(self, x):
        return self.annular.star_basis(x)

    def trace_basis(self, x) -> bool:
        return self.annular.trace_basis(x)

    def unit_labels(self):
        return [ABasisElement(h, g, 0, h, g)
                for h in self.annular.H for g in self.weights]


@dataclass
class EndSplitting:
    weight: int
    subgroup: tuple[int, ...]
    blocks: list
    minimal_projections: int


@dataclass
class CutdownReport:
    weights: tuple[int, ...]
    corner_dims: dict
    end_data: list[EndSplitting]
    simple_objects: int
    simple_count_full: SimpleCount
    simple_count_cutdown: int
    counts_agree: bool


def tube_cutdown(setup: BHSetup, seed: int = 0) -> CutdownReport:
    """Corner description of the annular algebra on double-coset weights.

    The unit of each weight corner is the image of the identity
    endomorphism of that weight, so cutting by the identity splittings
    of :func:`end_xg_algebra` leaves the subalgebra on representative
    weights.  Reports corner dimensions, the minimal idempotent
    splitting of each weight endomorphism algebra (these index the
    simple weight objects), and the simple count of the corner algebra,
    computed exactly and compared against the full algebra's count.
    """
    annular = AnnularAlgebra(setup)
    cut = CutdownAlgebra(annular)
    G = annular.group
    corner_dims = {}
    for d1 in cut.weights:
        for d2 in cut.weights:
            corner_dims[(d1, d2)] = sum(
                1 for x in cut.labels() if x.g1 == d1 and x.g2 == d2)
    end_data = []
    total_simple_objects = 0
    for g in cut.weights:
        tw = end_xg_algebra(setup, g)
        talg = TwistedGroupAlgebra(G, tw.elements, tw)
        blocks = decompose(talg, seed=seed)
        # the identity of a sum of matrix blocks splits into dim-many
        # minimal projections per block
        nmin = sum(b.dimension for b in blocks)
        end_data.append(EndSplitting(
            weight=g, subgroup=tw.elements,
            blocks=[(b.dimension, b.multiplicity) for b in blocks],
            minimal_projections=nmin))
        total_simple_objects += nmin
    full = block_simple_count(annular.block_algebra("op-inverse"))
    cut_count = center_dimension(cut)
    return CutdownReport(
        weights=cut.weights,
        corner_dims=corner_dims,
        end_data=end_data,
        simple_objects=total_simple_objects,
        simple_count_full=full,
        simple_count_cutdown=cut_count,
        counts_agree=(cut_count == full.total),
    )


def compare_cutdown_diagonal(setup: BHSetup) -> CheckResult:
    """With trivial H the cut-down must be the tube algebra on the nose.

    Matches every structure constant, involution scalar and trace value
    under A(e, g1, s, e, g2) <-> a(g1, s, g2).
    """
    if tuple(setup.H) != (0,):
        raise ValueError("exact comparison requires trivial H")
    setup.omega.ensure_valid()
    annular = AnnularAlgebra(setup, validate=False)
    cut = CutdownAlgebra(annular)
    tube = TubeAlgebra(setup.group, setup.omega)
    if len(cut.labels()) != len(tube.labels()):
        return CheckResult(False, "cutdown-diagonal-size",
                           (len(cut.labels()), len(tube.labels())))

    def to_tube(x: ABasisElement):
        from .tube_diag import TubeBasisElement
        return TubeBasisElement(x.g1, x.s, x.g2)

    for left in cut.labels():
        phs, labs = cut.star_basis(left)
        pht, labt = tube.star_basis(to_tube(left))
        if phs.q != pht.q or to_tube(labs) != labt:
            return CheckResult(False, "cutdown-diagonal-star", (left,))
        if cut.trace_basis(left) != tube.trace_basis(to_tube(left)):
            return CheckResult(False, "cutdown-diagonal-trace", (left,))
        for right in cut.labels():
            pc = cut.mult_basis(left, right)
            pt = tube.mult_basis(to_tube(left), to_tube(right))
            if (pc is None) != (pt is None):
                return CheckResult(False, "cutdown-diagonal-mult", (left, right))
            if pc is not None and (pc[0].q != pt[0].q
                                   or to_tube(pc[1]) != pt[1]):
                return CheckResult(False, "cutdown-diagonal-mult", (left, right))
    return CheckResult(True, "cutdown-diagonal")
