import pytest

from conftest import trgs
from rightloops.constructions import projection_loop
from rightloops.errors import InvalidInput, PreconditionError
from rightloops.enumeration import enumerate_right_loops
from rightloops.extension import (
    build_extension, check_round_trip, classify_transversal, decompose, induce_trg, round_trip,
)
from rightloops.permgroup import cyclic_group, isomorphic, symmetric_group
from rightloops.rightloop import from_group, is_associative, to_group
from rightloops.twistedaut import is_twisted_right_gyrogroup


def s3_with_labels():
    g = symmetric_group(3)
    return g, {g.label(i): i for i in range(g.order)}


def test_example_extension_has_order_60(ex53):
    ext = build_extension(is_twisted_right_gyrogroup(ex53))
    assert ext.order == 60
    assert ext.table.order == 60
    # S sits inside as the elements I*x
    assert [ext.table.label(i) for i in ext.embed_s] == ["I*1", "I*2", "I*3", "I*4", "I*5"]


@pytest.mark.parametrize("g", [cyclic_group(4), symmetric_group(3)])
def test_group_extension_is_the_group(g):
    ext = build_extension(is_twisted_right_gyrogroup(from_group(g)))
    assert ext.order == g.order
    assert isomorphic(ext.table, g)


def test_projection_extension_order():
    ext = build_extension(is_twisted_right_gyrogroup(projection_loop(4)))
    assert ext.order == 24


def test_extension_rejects_non_trg():
    bad = next(t for t in enumerate_right_loops(3) if not is_twisted_right_gyrogroup(t).is_trg)
    with pytest.raises(PreconditionError):
        build_extension(is_twisted_right_gyrogroup(bad))


def test_decompose_s3_over_transposition():
    g, lab = s3_with_labels()
    ta = decompose(g, [lab["I"], lab["(0 1)"]], [lab["I"], lab["(0 1 2)"], lab["(0 2 1)"]])
    assert is_associative(ta.induced_op)
    assert isomorphic(to_group(ta.induced_op), cyclic_group(3))


def test_decompose_trivial_subgroup_gives_the_group():
    g, _ = s3_with_labels()
    ta = decompose(g, [g.id], range(6))
    assert is_associative(ta.induced_op)
    cls = classify_transversal(ta)
    assert cls.gyrotransversal
    an = induce_trg(ta, {g.id: g.id})
    assert an.is_trg and an.gs.order == 1


def test_decompose_rejects_bad_input():
    g, lab = s3_with_labels()
    with pytest.raises(InvalidInput):
        decompose(g, [lab["I"], lab["(0 1 2)"]], range(6))  # {I, (0 1 2)} is not closed
    with pytest.raises(InvalidInput):
        decompose(g, [lab["I"], lab["(0 1)"]], [lab["I"], lab["(0 2)"], lab["(0 1 2)"], lab["(0 1)"]])
    with pytest.raises(InvalidInput):
        decompose(g, [lab["I"], lab["(0 1)"]], [lab["(0 2)"], lab["(1 2)"], lab["(0 1 2)"]])


def test_example_round_trip(ex53):
    an = is_twisted_right_gyrogroup(ex53)
    ext, ta, back = round_trip(an)
    assert back.loop.op == ex53.op
    cls = classify_transversal(ta)
    assert cls.kind == "twisted-only"
    assert ext.eta_ids in cls.twisted_etas
    # the defining condition at x = e forces eta = identity, so it fails here
    assert cls.holds_at_identity == [False] * len(cls.twisted_etas)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip_all_small_trgs(n):
    for t in trgs(n):
        rep = check_round_trip(is_twisted_right_gyrogroup(t))
        assert rep.holds, rep.to_dict()


def test_induce_rejects_inadmissible_eta(ex53):
    ext, ta, _ = round_trip(is_twisted_right_gyrogroup(ex53))
    ident = {h: h for h in ta.subgroup}
    with pytest.raises(PreconditionError):
        induce_trg(ta, ident)
