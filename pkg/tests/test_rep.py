"""Twisted group algebras, centers, decomposition, induction, restriction."""

import numpy as np
import pytest

from tubealg.coho import phi_class
from tubealg.grp import conjugacy_data, cyclic_group
from tubealg.phase import (Cocycle2, Phase, standard_cyclic_cocycle,
                           trivial_cocycle)
from tubealg.rep import (Representation,
                         TwistedGroupAlgebra, center_dimension, decompose,
                         induce, regular_representation, rep_from_json,
                         rep_to_json, restrict, support_decompose,
                         twisted_algebra)
from tubealg.tube_diag import TubeAlgebra, simple_count

from conftest import symmetric_group

ONE = Phase.of(0)
MINUS = Phase.of(1, 2)


def _z2_twisted():
    z2 = cyclic_group(2)
    phi = Cocycle2(z2, (0, 1), [ONE, ONE, ONE, MINUS])
    return TwistedGroupAlgebra(z2, (0, 1), phi)


def test_untwisted_is_group_algebra():
    z3 = cyclic_group(3)
    phi = Cocycle2(z3, (0, 1, 2), [ONE] * 9)
    alg = twisted_algebra(z3, (0, 1, 2), phi)
    for g in range(3):
        for h in range(3):
            ph, lab = alg.mult_basis(g, h)
            assert ph == ONE and lab == (g + h) % 3


def test_twisted_z2_square_rule():
    alg = _z2_twisted()
    ph, lab = alg.mult_basis(1, 1)
    assert ph == MINUS and lab == 0


def test_non_cocycle_rejected_with_witness():
    z2 = cyclic_group(2)
    bad = Cocycle2(z2, (0, 1), [ONE, ONE, MINUS, ONE])
    with pytest.raises(ValueError) as exc:
        twisted_algebra(z2, (0, 1), bad)
    assert "triple" in str(exc.value)


def test_center_dimensions():
    z2 = cyclic_group(2)
    plain = TwistedGroupAlgebra(z2, (0, 1), Cocycle2(z2, (0, 1), [ONE] * 4))
    assert center_dimension(plain) == 2
    assert center_dimension(_z2_twisted()) == 2
    s3, _ = symmetric_group(3)
    cd = conjugacy_data(s3)
    phi = phi_class(s3, trivial_cocycle(s3), cd, 0)
    assert center_dimension(TwistedGroupAlgebra(s3, phi.elements, phi)) == 3


def test_decompose_twisted_z2_blocks():
    alg = _z2_twisted()
    blocks = decompose(alg, seed=1)
    assert [(b.dimension, b.multiplicity) for b in blocks] == [(1, 1), (1, 1)]
    # the generator acts as +i on one block and -i on the other
    vals = sorted((b.character[1] for b in blocks), key=lambda z: z.imag)
    assert abs(vals[0] + 1j) < 1e-6 and abs(vals[1] - 1j) < 1e-6


def test_decompose_one_dimensional_algebra():
    z1 = cyclic_group(1)
    alg = TwistedGroupAlgebra(z1, (0,), Cocycle2(z1, (0,), [ONE]))
    blocks = decompose(alg)
    assert [(b.dimension, b.multiplicity) for b in blocks] == [(1, 1)]


def test_decompose_regular_s3():
    s3, _ = symmetric_group(3)
    cd = conjugacy_data(s3)
    phi = phi_class(s3, trivial_cocycle(s3), cd, 0)
    alg = TwistedGroupAlgebra(s3, phi.elements, phi)
    blocks = decompose(alg, seed=2)
    assert [(b.dimension, b.multiplicity) for b in blocks] == \
        [(1, 1), (1, 1), (2, 2)]


def test_block_dimension_sum_rule(small_fixture):
    # sum of squared irreducible dimensions fills each twisted algebra
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    for tw in alg.block_algebra().twists:
        talg = TwistedGroupAlgebra(small_fixture.group, tw.elements, tw)
        blocks = decompose(talg, seed=4)
        assert sum(b.dimension ** 2 for b in blocks) == talg.dimension
        assert all(b.multiplicity == b.dimension for b in blocks)


def test_center_count_matches_regular_decomposition(small_fixture):
    # two independent computations of the number of irreducibles
    counts = simple_count(small_fixture.group, small_fixture.omega)
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    blocks = decompose(alg, seed=6)
    assert counts.total == len(blocks)


def test_regular_representation_is_star_rep(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    for tw in alg.block_algebra().twists:
        talg = TwistedGroupAlgebra(small_fixture.group, tw.elements, tw)
        reg = regular_representation(talg)
        assert reg.check(talg).ok


def _semion_context():
    omega = standard_cyclic_cocycle(2, 1)
    alg = TubeAlgebra(omega.group, omega)
    tw = alg.block_algebra().twists[1]
    talg = TwistedGroupAlgebra(omega.group, tw.elements, tw)
    return alg, talg


def test_induce_trivial_class():
    s3, _ = symmetric_group(3)
    alg = TubeAlgebra(s3, trivial_cocycle(s3))
    tw = alg.block_algebra().twists[0]
    talg = TwistedGroupAlgebra(s3, tw.elements, tw)
    pi = Representation(labels=list(tw.elements), dim=1,
                        matrices={v: np.eye(1, dtype=complex)
                                  for v in tw.elements})
    assert pi.check(talg).ok
    Pi = induce(alg, 0, pi)
    assert Pi.dim == 1  # the identity class is a singleton
    assert Pi.check(alg).ok


def test_induce_semion_one_dimensional():
    alg, talg = _semion_context()
    pi = Representation(labels=[0, 1], dim=1,
                        matrices={0: np.eye(1, dtype=complex),
                                  1: 1j * np.eye(1, dtype=complex)})
    assert pi.check(talg).ok
    Pi = induce(alg, 1, pi)
    assert Pi.dim == 1
    assert Pi.check(alg).ok


def test_induce_regular_has_product_dimension(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    blocks = alg.block_algebra()
    for c, tw in enumerate(blocks.twists):
        talg = TwistedGroupAlgebra(small_fixture.group, tw.elements, tw)
        Pi = induce(alg, c, regular_representation(talg))
        assert Pi.dim == len(blocks.index_sets[c]) * talg.dimension
        assert Pi.check(alg).ok


def test_restrict_after_induce_is_exact(small_fixture):
    alg = TubeAlgebra(small_fixture.group, small_fixture.omega)
    blocks = alg.block_algebra()
    for c, tw in enumerate(blocks.twists):
        talg = TwistedGroupAlgebra(small_fixture.group, tw.elements, tw)
        pi = regular_representation(talg)
        back = restrict(alg, c, induce(alg, c, pi))
        assert back.dim == pi.dim
        for v in tw.elements:
            assert np.array_equal(back.matrices[v], pi.matrices[v])


def test_induce_after_restrict_character_equal():
    alg, talg = _semion_context()
    pi = regular_representation(talg)
    Pi = induce(alg, 1, pi)
    again = induce(alg, 1, restrict(alg, 1, Pi))
    for lab in alg.labels():
        assert abs(np.trace(Pi.matrices[lab]) -
                   np.trace(again.matrices[lab])) < 1e-9


def _direct_sum(alg, reps):
    dim = sum(r.dim for r in reps)
    mats = {}
    for lab in alg.labels():
        blocks_ = [r.matrices[lab] for r in reps]
        M = np.zeros((dim, dim), dtype=complex)
        at = 0
        for b in blocks_:
            M[at:at + b.shape[0], at:at + b.shape[0]] = b
            at += b.shape[0]
        mats[lab] = M
    return Representation(labels=list(alg.labels()), dim=dim, matrices=mats)


def test_support_decompose_single_induction():
    alg, talg = _semion_context()
    Pi = induce(alg, 1, regular_representation(talg))
    sd = support_decompose(alg, Pi)
    assert sd.dims[1] == Pi.dim and sd.dims[0] == 0


def test_support_decompose_two_inductions():
    alg, _ = _semion_context()
    blocks = alg.block_algebra()
    reps = []
    for c, tw in enumerate(blocks.twists):
        talg = TwistedGroupAlgebra(alg.group, tw.elements, tw)
        reps.append(induce(alg, c, regular_representation(talg)))
    S = _direct_sum(alg, reps)
    sd = support_decompose(alg, S)
    assert sd.dims == {0: reps[0].dim, 1: reps[1].dim}
    assert sd.total == S.dim


def test_support_decompose_zero_representation():
    alg, _ = _semion_context()
    zero = Representation(labels=list(alg.labels()), dim=0,
                          matrices={lab: np.zeros((0, 0), dtype=complex)
                                    for lab in alg.labels()})
    sd = support_decompose(alg, zero)
    assert all(d == 0 for d in sd.dims.values())


def test_induce_restrict_annular_context():
    from tubealg.annular_bh import AnnularAlgebra
    from conftest import bh_setup_s3
    alg = AnnularAlgebra(bh_setup_s3())
    blocks = alg.block_algebra()
    c = 1
    tw = blocks.twists[c]
    talg = TwistedGroupAlgebra(alg.group, tw.elements, tw)
    pi = regular_representation(talg)
    Pi = induce(alg, c, pi)
    assert Pi.dim == len(blocks.index_sets[c]) * pi.dim
    back = restrict(alg, c, Pi)
    for v in tw.elements:
        assert np.array_equal(back.matrices[v], pi.matrices[v])


def test_rep_json_roundtrip():
    _, talg = _semion_context()
    reg = regular_representation(talg)
    back = rep_from_json(rep_to_json(reg), list(talg.els))
    for v in talg.els:
        assert np.allclose(back.matrices[v], reg.matrices[v])


def test_rep_json_rejects_bad_shape():
    _, talg = _semion_context()
    payload = rep_to_json(regular_representation(talg))
    payload["dimension"] = 3
    with pytest.raises(ValueError):
        rep_from_json(payload, list(talg.els))
