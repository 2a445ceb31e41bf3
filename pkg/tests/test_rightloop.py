import pytest
from hypothesis import given, strategies as st

from conftest import label_lookup, right_loops
from rightloops.constructions import projection_loop
from rightloops.errors import InvalidInput, InvalidTable, PreconditionError
from rightloops.fileformats import format_group, format_loop, parse_group, parse_loop
from rightloops.permgroup import Perm, cyclic_group, direct_product, symmetric_group
from rightloops.rightloop import (
    from_group, has_aip, has_left_alternative, is_associative, is_loop, relabel, right_divide,
    to_group, validate_table,
)


def test_example_table_inverses(ex53):
    lab = label_lookup(ex53)
    inv = ex53.two_sided_inverse
    assert inv is not None
    pairs = {ex53.labels[x]: ex53.labels[inv[x]] for x in range(5)}
    assert pairs == {"1": "1", "2": "3", "3": "2", "4": "4", "5": "5"}
    assert ex53.labels[0] == "1" and lab["1"] == 0


def test_cyclic_table_is_valid():
    t = from_group(cyclic_group(3))
    assert t.two_sided_inverse == (0, 2, 1)
    assert is_loop(t) and is_associative(t)


def test_repeated_entry_in_column_rejected():
    raw = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]
    with pytest.raises(InvalidTable, match="column 2 not bijective"):
        validate_table(raw)


def test_identity_axiom_rejected():
    with pytest.raises(InvalidTable, match="identity axiom"):
        validate_table([[0, 1], [0, 1]])


def test_identity_moved_to_front():
    # Z3 written with identity labelled c in position 2
    raw = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    t = validate_table(raw, identity=2, labels=["a", "b", "c"])
    assert t.labels[0] == "c"
    assert t.op[0] == (0, 1, 2) or list(t.op[0]) == [0, 1, 2]


def test_right_divide(ex53):
    lab = label_lookup(ex53)
    assert right_divide(ex53, lab["2"], lab["3"]) == lab["3"]
    for b in range(5):
        assert right_divide(ex53, b, 0) == b
    z4 = from_group(cyclic_group(4))
    assert right_divide(z4, 0, 1) == 3


def test_loop_status(ex53):
    assert not is_loop(ex53)
    assert is_loop(from_group(symmetric_group(3)))
    assert not is_loop(projection_loop(4))


def test_aip_and_left_alternative(ex53):
    for g in (cyclic_group(5), direct_product(cyclic_group(2), cyclic_group(2))):
        t = from_group(g)
        assert has_aip(t) and has_left_alternative(t)
    # exhaustive scan of the example: (a o a) o b = a o (a o b) fails
    assert has_aip(ex53)
    assert not has_left_alternative(ex53)


def test_aip_needs_inverses():
    t = validate_table([[0, 1, 2], [1, 0, 0], [2, 2, 1]])
    assert t.two_sided_inverse is None
    with pytest.raises(PreconditionError):
        has_aip(t)


@given(right_loops())
def test_every_generated_table_validates(t):
    again = validate_table(t.op)
    assert again == t
    for a in range(t.order):
        assert sorted(t.right_translation(a).images) == list(range(t.order))
        for b in range(t.order):
            assert t.op[right_divide(t, b, a)][a] == b


@given(right_loops(min_order=2), st.data())
def test_relabel_preserves_properties(t, data):
    rest = data.draw(st.permutations(list(range(1, t.order))))
    pi = Perm((0, *rest))
    u = relabel(t, pi)
    assert is_loop(u) == is_loop(t)
    assert is_associative(u) == is_associative(t)
    assert (u.two_sided_inverse is None) == (t.two_sided_inverse is None)
    for x in range(t.order):
        for y in range(t.order):
            assert u.op[pi(x)][pi(y)] == pi(t.op[x][y])


def test_to_group_round_trip():
    g = symmetric_group(3)
    assert to_group(from_group(g)).order == 6
    with pytest.raises(PreconditionError):
        to_group(projection_loop(3))


# ---------------------------------------------------------------------------
# file formats


def test_loop_file_round_trip(ex53):
    text = format_loop(ex53)
    assert parse_loop(text) == ex53
    assert parse_loop(text).labels == ex53.labels


def test_loop_file_identity_elsewhere():
    text = "elements: a b c\nidentity: c\ntable:\nb c a\nc a b\na b c\n"
    t = parse_loop(text)
    assert t.labels[0] == "c" and is_associative(t)


@pytest.mark.parametrize("text, msg", [
    ("elements: a b\ntable:\na b\n", "rows"),
    ("elements: a a\ntable:\na a\na a\n", "duplicate"),
    ("elements: a b\nidentity: z\ntable:\na b\nb a\n", "not an element"),
    ("elements: a b\ntable:\na q\nb a\n", "unknown element"),
    ("colour: red\n", "unknown key"),
    ("elements: a b\n", "table"),
])
def test_loop_file_errors(text, msg):
    with pytest.raises(InvalidInput, match=msg):
        parse_loop(text)


def test_group_file_round_trip():
    g = symmetric_group(3)
    h = parse_group(format_group(g))
    assert h.order == 6 and [list(r) for r in h.mul] == [list(r) for r in g.mul]


def test_group_file_requires_type_and_associativity():
    with pytest.raises(InvalidInput, match="type: group"):
        parse_group("elements: a b\ntable:\na b\nb a\n")
    # a right loop that is not associative
    text = format_loop(projection_loop(3)).replace("elements", "type: group\nelements")
    with pytest.raises(InvalidInput):
        parse_group(text)
