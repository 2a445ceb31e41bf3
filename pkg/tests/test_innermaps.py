import pytest
from hypothesis import given, settings

import oracles
from conftest import all_loops, label_lookup, right_loops
from rightloops.constructions import projection_loop
from rightloops.errors import PreconditionError
from rightloops.innermaps import (
    check_prop2_identities, check_sigma_automorphism, check_sigma_homomorphism, inner_group,
    inner_map, left_inverse_maps_trivial, sigma,
)
from rightloops.permgroup import Perm, alternating_group, cyclic_group, isomorphic, parse_perm, symmetric_group
from rightloops.rightloop import RightLoopTable, from_group

# order-5 right loop found by enumeration on which sigma_2 is not multiplicative
STAIRCASE = RightLoopTable([
    [0, 1, 2, 3, 4], [1, 0, 0, 0, 0], [2, 2, 1, 1, 1], [3, 3, 3, 2, 2], [4, 4, 4, 4, 3],
])


def p(t, text):
    return parse_perm(text, t.labels)


def test_example_inner_maps(ex53):
    lab = label_lookup(ex53)
    assert inner_map(ex53, lab["2"], lab["4"]) == p(ex53, "(2 3 4)")
    assert inner_map(ex53, lab["4"], lab["5"]) == p(ex53, "(2 3)(4 5)")
    for y in range(5):
        assert inner_map(ex53, y, 0).is_identity()
        assert inner_map(ex53, 0, y).is_identity()


def test_example_inner_group(ex53):
    idx = inner_group(ex53)
    assert idx.gs.order == 12
    assert isomorphic(idx.gs, alternating_group(4))


@pytest.mark.parametrize("g", [cyclic_group(4), symmetric_group(3), alternating_group(4)])
def test_groups_have_trivial_inner_group(g):
    assert inner_group(from_group(g)).gs.order == 1


@pytest.mark.parametrize("n, order", [(3, 2), (4, 6), (5, 24)])
def test_projection_loop_inner_group_is_full(n, order):
    assert inner_group(projection_loop(n)).gs.order == order


def test_sigma_examples(ex53):
    lab = label_lookup(ex53)
    h = p(ex53, "(2 3 4)")
    assert sigma(ex53, 0, h) == h
    assert sigma(ex53, lab["3"], Perm.identity(5)).is_identity()
    assert sigma(ex53, lab["4"], h) == p(ex53, "(2 4 3)")


def test_sigma_needs_identity_fixed(ex53):
    with pytest.raises(PreconditionError):
        sigma(ex53, 1, p(ex53, "(1 2)"))


@pytest.mark.parametrize("make", [lambda: from_group(cyclic_group(4)), lambda: from_group(symmetric_group(3))])
def test_identity_suite_on_groups(make):
    assert check_prop2_identities(inner_group(make())).holds


def test_identity_suite_on_example(ex53):
    rep = check_prop2_identities(inner_group(ex53))
    assert rep.holds
    assert set(rep.checked) == {"(i)", "(ii)", "(iii)", "sigma(I)=I", "(iv)"}
    assert rep.checked["(iv)"] == 125


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_suite_matches_oracle_exhaustively(n):
    for t in all_loops(n):
        assert check_prop2_identities(inner_group(t)).holds
        assert oracles.inner_identities_hold([list(r) for r in t.op])


@settings(max_examples=40, deadline=None)
@given(right_loops(min_order=5, max_order=5))
def test_identity_suite_random_order_5(t):
    assert check_prop2_identities(inner_group(t)).holds


@given(right_loops())
def test_inner_maps_match_scan(t):
    op = [list(r) for r in t.op]
    idx = inner_group(t)
    for y in range(t.order):
        for z in range(t.order):
            assert idx.f[y][z].images == oracles.inner(op, y, z)


def test_sigma_homomorphism_on_example(ex53):
    idx = inner_group(ex53)
    lab = label_lookup(ex53)
    assert check_sigma_homomorphism(idx, lab["4"])
    assert check_sigma_automorphism(idx, lab["4"])


def test_sigma_on_groups_trivial():
    idx = inner_group(from_group(symmetric_group(3)))
    assert all(check_sigma_automorphism(idx, y) for y in range(6))


def test_sigma_homomorphism_can_fail():
    idx = inner_group(STAIRCASE)
    v = check_sigma_homomorphism(idx, 1)
    assert not v
    h, k = v.witness
    assert sigma(STAIRCASE, 1, h * k) != sigma(STAIRCASE, 1, h) * sigma(STAIRCASE, 1, k)


def test_left_inverse_maps(ex53):
    assert left_inverse_maps_trivial(inner_group(ex53))
    assert not left_inverse_maps_trivial(inner_group(STAIRCASE))
