"""Tube algebra structure constants, trace, and the block isomorphism."""

import random

import pytest

from tubealg.coho import gamma
from tubealg.phase import Phase, standard_cyclic_cocycle, trivial_cocycle
from tubealg.tube_diag import (TubeAlgebra, TubeBasisElement, simple_count,
                               structure_constants_json, tube_inner, tube_mult,
                               tube_star, tube_trace, verify_star_iso)
from tubealg.rep import TwistedGroupAlgebra, decompose

from conftest import symmetric_group

ONE = Phase.of(0)


def mult_oracle(omega, right, left):
    """The three cocycle factors of a product, written out directly."""
    G = omega.group
    g1, s = right.g1, right.s
    g2, t, g3 = left.g1, left.s, left.g2
    return omega(g1, s, t) * omega(s, g2, t).inv() * omega(s, t, g3)


def star_oracle(omega, a):
    G = omega.group
    si = G.inverse(a.s)
    return omega(a.g1, a.s, si).inv() * omega(a.s, a.g2, si) * \
        omega(a.s, si, a.g1).inv()


@pytest.fixture
def semion_algebra():
    omega = standard_cyclic_cocycle(2, 1)
    return TubeAlgebra(omega.group, omega)


def test_mult_trivial_cocycle_is_label_composition():
    g, _ = symmetric_group(3)
    alg = TubeAlgebra(g, trivial_cocycle(g))
    for right in alg.labels():
        for t in g.elements():
            left = alg.basis_label(right.g2, t)
            ph, lab = alg.mult_basis(left, right)
            assert ph == ONE
            assert lab == TubeBasisElement(right.g1, g.mul(right.s, t), left.g2)


def test_mult_semion_square(semion_algebra):
    a = TubeBasisElement(1, 1, 1)
    ph, lab = tube_mult(semion_algebra, a, a)
    assert ph == Phase.of(1, 2)
    assert lab == TubeBasisElement(1, 0, 1)
    assert ph == mult_oracle(semion_algebra.omega, a, a)


def test_mult_mismatched_middle_is_zero(semion_algebra):
    left = TubeBasisElement(0, 1, 0)
    right = TubeBasisElement(1, 1, 1)
    assert tube_mult(semion_algebra, left, right) is None


def test_mult_validates_labels(semion_algebra):
    with pytest.raises(ValueError):
        tube_mult(semion_algebra, TubeBasisElement(1, 1, 0),
                  TubeBasisElement(1, 1, 1))


def test_star_diagonal_identity_fixed(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    for g in small_fixture.group.elements():
        ph, lab = tube_star(alg, TubeBasisElement(g, 0, g))
        assert ph == ONE and lab == TubeBasisElement(g, 0, g)


def test_star_semion(semion_algebra):
    ph, lab = tube_star(semion_algebra, TubeBasisElement(1, 1, 1))
    assert ph == Phase.of(1, 2)
    assert lab == TubeBasisElement(1, 1, 1)
    assert ph == star_oracle(semion_algebra.omega, TubeBasisElement(1, 1, 1))


def test_exact_basis_laws(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    for res in alg.check_all():
        assert res.ok, (small_fixture.name, res.name, res.witness)


def test_associativity_sampled_s4(s4_sign_fixture):
    alg = TubeAlgebra(s4_sign_fixture.group, s4_sign_fixture.omega)
    res = alg.check_associativity(exhaustive_limit=10000, samples=100000,
                                  seed=11)
    assert res.ok


def test_trace_values(semion_algebra):
    assert tube_trace(semion_algebra,
                      semion_algebra.basis_element(TubeBasisElement(0, 0, 0))) == 1
    assert tube_trace(semion_algebra,
                      semion_algebra.basis_element(TubeBasisElement(1, 1, 1))) == 0


def test_trace_positivity_sampled(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    rng = random.Random(3)
    for _ in range(10):
        x = alg.random_element(rng)
        val = tube_trace(alg, alg.mult_elements(alg.star_element(x), x))
        assert val.real > 0
        assert abs(val.imag) < 1e-9


def test_inner_product_basics(semion_algebra):
    alg = semion_algebra
    a = alg.basis_element(TubeBasisElement(1, 1, 1))
    b = alg.basis_element(TubeBasisElement(0, 1, 0))
    zero = alg.element({})
    assert tube_inner(alg, zero, a) == 0
    assert abs(tube_inner(alg, a, a) - 1) < 1e-12
    assert tube_inner(alg, a, b) == 0
    # sesquilinearity spot checks
    x = a.scale(2j)
    assert abs(tube_inner(alg, x, b + a) -
               (2j * tube_inner(alg, a, b) + 2j * tube_inner(alg, a, a))) < 1e-12


def test_block_dimension_audit(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    blocks = alg.block_algebra()
    assert blocks.total_dimension() == small_fixture.group.order ** 2


def test_phi_iso_class_representative_unit(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    for c, gc in enumerate(alg.class_data.reps):
        im = alg.phi_iso(TubeBasisElement(gc, 0, gc))
        assert im.class_index == c and im.scalar == ONE
        assert im.row == gc and im.col == gc and im.element == 0


def test_phi_iso_trivial_cocycle_scalars():
    g, _ = symmetric_group(3)
    alg = TubeAlgebra(g, trivial_cocycle(g))
    assert all(alg.phi_iso(a).scalar == ONE for a in alg.labels())


def test_phi_iso_semion_scalar_is_transport_value(semion_algebra):
    alg = semion_algebra
    a = TubeBasisElement(1, 1, 1)
    im = alg.phi_iso(a)
    cd = alg.class_data
    w1, w2 = cd.transport[1], cd.transport[1]
    u = alg.group.mul(alg.group.inverse(w1), alg.group.mul(1, w2))
    assert im.scalar == gamma(alg.group, alg.omega, cd.reps[1], w1, w2, u).inv()
    assert (im.row, im.col, im.element) == (1, 1, 1)


def test_phi_iso_roundtrip(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    for a in alg.labels():
        im = alg.phi_iso(a)
        ph, back = alg.phi_iso_inverse(im.class_index, im.row, im.col,
                                       im.element)
        assert back == a
        assert ph * im.scalar == ONE
    blocks = alg.block_algebra()
    for (c, row, col, v) in blocks.basis_labels():
        ph, label = alg.phi_iso_inverse(c, row, col, v)
        im = alg.phi_iso(label)
        assert (im.class_index, im.row, im.col, im.element) == (c, row, col, v)
        assert im.scalar == ph.inv()


def test_star_iso_fixtures(small_fixture):
    res = verify_star_iso(small_fixture.group, small_fixture.omega)
    assert res.ok, (small_fixture.name, res.name, res.witness)


def test_simple_counts():
    s3, _ = symmetric_group(3)
    assert simple_count(s3, trivial_cocycle(s3)).total == 8
    sem = standard_cyclic_cocycle(2, 1)
    counts = simple_count(sem.group, sem)
    assert counts.total == 4
    assert counts.per_class == {0: 2, 1: 2}
    from tubealg.grp import cyclic_group
    z3 = cyclic_group(3)
    assert simple_count(z3, trivial_cocycle(z3)).total == 9


def test_simple_count_trivial_group():
    from tubealg.grp import cyclic_group
    z1 = cyclic_group(1)
    assert simple_count(z1, trivial_cocycle(z1)).total == 1


def test_semion_blocks_all_one_dimensional():
    sem = standard_cyclic_cocycle(2, 1)
    alg = TubeAlgebra(sem.group, sem)
    for tw in alg.block_algebra().twists:
        talg = TwistedGroupAlgebra(sem.group, tw.elements, tw)
        assert all(b.dimension == 1 for b in decompose(talg))


def test_structure_constant_dump(semion_algebra):
    dump = structure_constants_json(semion_algebra)
    # composable pairs: |G|^3
    assert len(dump) == 8
    entry = next(d for d in dump if d["left"] == [1, 1, 1]
                 and d["right"] == [1, 1, 1])
    assert entry["scalar"] == "1/2"
    assert entry["result"] == [1, 0, 1]
