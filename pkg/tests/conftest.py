"""Shared fixture registry: groups, cocycles, and two-subgroup setups."""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from tubealg.coho import BHSetup
from tubealg.grp import (GroupTable, cyclic_group, group_from_permutations,
                         subgroup_closure)
from tubealg.phase import (Cocycle3, inflate_cocycle, product_type_cocycle,
                           standard_cyclic_cocycle, trivial_cocycle,
                           two_factor_cocycle)


def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def _perm_elements(degree, gens):
    """Replicates the breadth-first enumeration used by the group builder."""
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = _compose(x, tuple(g))
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
    return elements


def _parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def symmetric_group(degree: int) -> tuple[GroupTable, list[int]]:
    """The symmetric group on ``degree`` points, plus the sign map."""
    gens = [tuple([1, 0] + list(range(2, degree))),
            tuple(list(range(1, degree)) + [0])]
    group = group_from_permutations(degree, gens)
    signs = [_parity(p) for p in _perm_elements(degree, gens)]
    return group, signs


@dataclass
class Fixture:
    name: str
    group: GroupTable
    omega: Cocycle3


def _build_fixtures() -> dict[str, Fixture]:
    out = {}
    z1 = cyclic_group(1)
    out["z1_trivial"] = Fixture("z1_trivial", z1, trivial_cocycle(z1))
    sem = standard_cyclic_cocycle(2, 1)
    out["z2_semion"] = Fixture("z2_semion", sem.group, sem)
    z3 = cyclic_group(3)
    out["z3_trivial"] = Fixture("z3_trivial", z3, trivial_cocycle(z3))
    z4 = standard_cyclic_cocycle(4, 1)
    out["z4_std"] = Fixture("z4_std", z4.group, z4)
    v4, prod = product_type_cocycle()
    out["v4_product"] = Fixture("v4_product", v4, prod)
    s3, s3_sign = symmetric_group(3)
    out["s3_trivial"] = Fixture("s3_trivial", s3, trivial_cocycle(s3))
    out["s3_sign"] = Fixture(
        "s3_sign", s3, inflate_cocycle(standard_cyclic_cocycle(2, 1), s3, s3_sign))
    return out


_FIXTURES = _build_fixtures()
SMALL_NAMES = ["z1_trivial", "z2_semion", "z3_trivial", "z4_std",
               "v4_product", "s3_trivial", "s3_sign"]


@pytest.fixture(params=SMALL_NAMES)
def small_fixture(request) -> Fixture:
    """All registered fixtures of order at most 8."""
    return _FIXTURES[request.param]


@pytest.fixture
def fixtures() -> dict[str, Fixture]:
    return _FIXTURES


@pytest.fixture(scope="session")
def s4_sign_fixture() -> Fixture:
    s4, signs = symmetric_group(4)
    omega = inflate_cocycle(standard_cyclic_cocycle(2, 1), s4, signs)
    return Fixture("s4_sign", s4, omega)


@pytest.fixture
def s3_and_sign():
    return symmetric_group(3)


def bh_setup_s3() -> BHSetup:
    s3, _ = symmetric_group(3)
    H = subgroup_closure(s3, [1])     # a transposition
    K = subgroup_closure(s3, [2])     # a 3-cycle
    return BHSetup(s3, H, K, trivial_cocycle(s3))


def bh_setup_v4() -> BHSetup:
    v4, prod = product_type_cocycle()
    return BHSetup(v4, (0, 2), (0, 1), prod)


def bh_setup_z1() -> BHSetup:
    z1 = cyclic_group(1)
    return BHSetup(z1, (0,), (0,), trivial_cocycle(z1))


def bh_setup_z2z4() -> BHSetup:
    """Order-8 abelian setup whose block twists separate the conventions."""
    G, omega = two_factor_cocycle(2, 4, 1)
    return BHSetup(G, (0, 4), (0, 1, 2, 3), omega)


@pytest.fixture
def bh_s3() -> BHSetup:
    return bh_setup_s3()


@pytest.fixture
def bh_v4() -> BHSetup:
    return bh_setup_v4()


@pytest.fixture
def bh_z1() -> BHSetup:
    return bh_setup_z1()
