"""Group tables, conjugacy data, and the canonical choices they fix."""

import pytest

from tubealg.grp import (GroupError, centralizer, conjugacy_data, cyclic_group,
                         direct_product, element_order, group_from_json,
                         group_from_permutations, group_from_table,
                         group_to_json, subgroup_closure)

from conftest import symmetric_group


def brute_force_classes(group):
    """Independent conjugacy oracle by exhaustive conjugation."""
    classes = set()
    for g in group.elements():
        classes.add(frozenset(group.conjugate(x, g) for x in group.elements()))
    return classes


def test_trivial_group():
    g = group_from_table(1, [[0]])
    assert g.order == 1 and g.inv == (0,)


def test_z4_table():
    mult = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    g = group_from_table(4, mult)
    assert g.inv[1] == 3


def test_missing_inverse():
    with pytest.raises(GroupError) as exc:
        group_from_table(2, [[0, 1], [1, 1]])
    assert exc.value.witness == (1,)


def test_non_associative():
    with pytest.raises(GroupError) as exc:
        group_from_table(3, [[0, 1, 2], [1, 0, 0], [2, 0, 0]])
    a, b, c = exc.value.witness
    mult = [[0, 1, 2], [1, 0, 0], [2, 0, 0]]
    assert mult[mult[a][b]][c] != mult[a][mult[b][c]]


def test_missing_identity():
    with pytest.raises(GroupError):
        group_from_table(2, [[1, 0], [0, 1]])


def test_bad_shape():
    with pytest.raises(GroupError):
        group_from_table(2, [[0, 1]])
    with pytest.raises(GroupError):
        group_from_table(2, [[0, 5], [1, 0]])


def test_perm_closure_s3():
    g = group_from_permutations(3, [(1, 0, 2), (1, 2, 0)])
    # oracle: the closure of a transposition and a 3-cycle is everything
    assert g.order == 6


def test_perm_empty_generators():
    g = group_from_permutations(3, [])
    assert g.order == 1


def test_perm_single_transposition():
    g = group_from_permutations(2, [(1, 0)])
    assert g.order == 2


def test_perm_rejects_non_permutation():
    with pytest.raises(GroupError):
        group_from_permutations(3, [(0, 0, 1)])


def test_perm_closure_bound():
    with pytest.raises(GroupError):
        group_from_permutations(4, [(1, 0, 2, 3), (1, 2, 3, 0)], max_order=10)


def test_conjugacy_s3():
    g, _ = symmetric_group(3)
    cd = conjugacy_data(g)
    assert sorted(len(c) for c in cd.classes) == [1, 2, 3]
    assert sorted(len(c) for c in cd.centralizers) == [2, 3, 6]
    assert {frozenset(c) for c in cd.classes} == brute_force_classes(g)


def test_conjugacy_abelian():
    g = cyclic_group(6)
    cd = conjugacy_data(g)
    assert all(len(c) == 1 for c in cd.classes)
    assert all(w == 0 for w in cd.transport)
    assert all(len(c) == 6 for c in cd.centralizers)


def test_conjugacy_z2():
    cd = conjugacy_data(cyclic_group(2))
    assert cd.classes == ((0,), (1,))


def test_transport_properties(small_fixture):
    g = small_fixture.group
    cd = conjugacy_data(g)
    for x in g.elements():
        c = cd.class_of[x]
        w = cd.transport[x]
        assert g.conjugate(w, cd.reps[c]) == x
    for c, gc in enumerate(cd.reps):
        assert cd.transport[gc] == 0
        assert cd.centralizers[c] == tuple(
            s for s in g.elements()
            if g.conjugate(s, gc) == gc)


def test_class_membership_iff_conjugate(s4_sign_fixture):
    g = s4_sign_fixture.group
    cd = conjugacy_data(g)
    for a in g.elements():
        for b in g.elements():
            conjugate = any(g.conjugate(x, a) == b for x in g.elements())
            assert conjugate == (cd.class_of[a] == cd.class_of[b])


def test_orbit_stabilizer(small_fixture):
    g = small_fixture.group
    cd = conjugacy_data(g)
    assert sum(len(c) for c in cd.classes) == g.order
    for c, cls in enumerate(cd.classes):
        assert len(cls) * len(cd.centralizers[c]) == g.order


def test_conjugacy_deterministic():
    g1, _ = symmetric_group(3)
    g2, _ = symmetric_group(3)
    assert conjugacy_data(g1) == conjugacy_data(g2)


def test_subgroup_closure_s3():
    g, _ = symmetric_group(3)
    h = subgroup_closure(g, [1])
    k = subgroup_closure(g, [2])
    assert len(h) == 2 and len(k) == 3
    assert subgroup_closure(g, list(h) + list(k)) == tuple(range(6))


def test_subgroup_closure_trivial():
    g = cyclic_group(4)
    assert subgroup_closure(g, []) == (0,)
    assert subgroup_closure(g, [1]) == (0, 1, 2, 3)


def test_centralizer_identity(small_fixture):
    g = small_fixture.group
    assert centralizer(g, 0) == tuple(g.elements())


def test_centralizer_transposition():
    g, _ = symmetric_group(3)
    cent = centralizer(g, 1)
    # oracle: exhaustive commutation filter
    assert cent == tuple(s for s in g.elements()
                         if g.mul(s, 1) == g.mul(1, s))
    assert cent == (0, 1)


def test_centralizer_abelian():
    g = cyclic_group(5)
    for a in g.elements():
        assert centralizer(g, a) == tuple(range(5))


def test_direct_product_v4():
    g = direct_product(cyclic_group(2), cyclic_group(2))
    assert g.order == 4
    assert all(g.inv[x] == x for x in g.elements())


def test_direct_product_with_trivial():
    base = cyclic_group(5)
    g = direct_product(cyclic_group(1), base)
    assert g.mult == base.mult


def test_direct_product_z2_z3_is_cyclic():
    g = direct_product(cyclic_group(2), cyclic_group(3))
    z6 = cyclic_group(6)
    orders = sorted(element_order(g, x) for x in g.elements())
    assert orders == sorted(element_order(z6, x) for x in z6.elements())
    assert max(orders) == 6  # has a generator, hence cyclic


def test_group_json_roundtrip():
    g, _ = symmetric_group(3)
    assert group_from_json(group_to_json(g)) == g
    assert group_from_json({"type": "perm", "degree": 3,
                            "generators": [[1, 0, 2], [1, 2, 0]]}).order == 6


def test_group_json_unknown_type():
    with pytest.raises(KeyError):
        group_from_json({"type": "nope"})
