"""Cayley-table right loops.

Entry ``op[x][y]`` is ``x o y`` (row = left operand) and the identity is always
element 0.  A table is a right loop when the identity row and column are
identity maps and every column ``x -> x o y`` is a permutation.
"""
from __future__ import annotations

from typing import Sequence

from .errors import InvalidTable, PreconditionError
from .permgroup import FiniteGroupTable, Perm


class RightLoopTable:
    """A validated right loop; build it with :func:`validate_table`."""

    __slots__ = ("order", "op", "labels", "rdiv", "left_inverse", "two_sided_inverse")

    def __init__(self, op: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        # trusts its input; validate_table is the checked entry point
        n = len(op)
        self.order = n
        self.op = tuple(tuple(row) for row in op)
        self.labels = tuple(str(s) for s in labels) if labels is not None else tuple(str(i) for i in range(n))
        rdiv = [[0] * n for _ in range(n)]
        for x in range(n):
            row = self.op[x]
            for y in range(n):
                rdiv[y][row[y]] = x
        # rdiv[a][b] is the unique s with s o a = b
        self.rdiv = tuple(tuple(r) for r in rdiv)
        left = tuple(self.rdiv[x][0] for x in range(n))
        self.left_inverse = left
        two = all(self.op[x][left[x]] == 0 for x in range(n))
        self.two_sided_inverse = left if two else None

    @property
    def has_unique_inverses(self) -> bool:
        return self.two_sided_inverse is not None

    def inverse(self, x: int) -> int:
        if self.two_sided_inverse is None:
            raise PreconditionError("right loop does not have unique two-sided inverses")
        return self.two_sided_inverse[x]

    def mul(self, x: int, y: int) -> int:
        return self.op[x][y]

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InvalidTable(f"unknown element {label!r}") from None

    def right_translation(self, a: int) -> Perm:
        return Perm([self.op[x][a] for x in range(self.order)], check=False)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.op for v in row)

    def __eq__(self, other):
        return isinstance(other, RightLoopTable) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def __repr__(self):
        return f"RightLoopTable(order={self.order}, op={self.op})"


def validate_table(raw, identity: int = 0, labels: Sequence[str] | None = None) -> RightLoopTable:
    """Check the right-loop axioms and return the table with ``identity`` moved to id 0."""
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise InvalidTable("empty table")
    labels = [str(s) for s in labels] if labels is not None else [str(i) for i in range(n)]
    if len(labels) != n or len(set(labels)) != n:
        raise InvalidTable("labels must be distinct and match the table size")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise InvalidTable(f"row {labels[x]} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidTable(f"entry {v!r} in row {labels[x]} out of range")
    if not 0 <= identity < n:
        raise InvalidTable(f"identity {identity} out of range")
    if identity != 0:
        order = [identity] + [x for x in range(n) if x != identity]
        pos = {old: new for new, old in enumerate(order)}
        rows = [[pos[rows[a][b]] for b in order] for a in order]
        labels = [labels[a] for a in order]
    for x in range(n):
        if rows[0][x] != x:
            raise InvalidTable(f"identity axiom fails at cell ({labels[0]}, {labels[x]})")
        if rows[x][0] != x:
            raise InvalidTable(f"identity axiom fails at cell ({labels[x]}, {labels[0]})")
    for y in range(n):
        if len({rows[x][y] for x in range(n)}) != n:
            raise InvalidTable(f"column {labels[y]} not bijective")
    return RightLoopTable(rows, labels)


def right_divide(t: RightLoopTable, b: int, a: int) -> int:
    """The unique ``s`` with ``s o a = b``."""
    return t.rdiv[a][b]


def is_loop(t: RightLoopTable) -> bool:
    return all(len(set(row)) == t.order for row in t.op)


def is_associative(t: RightLoopTable) -> bool:
    op = t.op
    r = range(t.order)
    return all(op[op[x][y]][z] == op[x][op[y][z]] for x in r for y in r for z in r)


def has_aip(t: RightLoopTable) -> bool:
    """``(a o b)' = a' o b'`` for all a, b."""
    if t.two_sided_inverse is None:
        raise PreconditionError("AIP needs unique two-sided inverses")
    inv = t.two_sided_inverse
    op = t.op
    r = range(t.order)
    return all(inv[op[a][b]] == op[inv[a]][inv[b]] for a in r for b in r)


def has_left_alternative(t: RightLoopTable) -> bool:
    """``(a o a) o b = a o (a o b)`` for all a, b."""
    op = t.op
    r = range(t.order)
    return all(op[op[a][a]][b] == op[a][op[a][b]] for a in r for b in r)


def relabel(t: RightLoopTable, pi: Perm) -> RightLoopTable:
    """The isomorphic copy with element ``x`` renamed ``pi(x)``; ``pi`` must fix 0."""
    if pi(0) != 0:
        raise PreconditionError("relabelling must fix the identity")
    n = t.order
    inv = pi.inverse().images
    p = pi.images
    op = [[p[t.op[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
    labels = [t.labels[inv[a]] for a in range(n)]
    return RightLoopTable(op, labels)


def from_group(gt: FiniteGroupTable) -> RightLoopTable:
    """A group table viewed as a right loop (identity moved to id 0)."""
    labels = [gt.label(x) for x in range(gt.order)]
    return validate_table([list(r) for r in gt.mul], identity=gt.id, labels=labels)


def to_group(t: RightLoopTable) -> FiniteGroupTable:
    if not is_associative(t) or not is_loop(t):
        raise PreconditionError("right loop is not a group")
    return FiniteGroupTable.from_mul(t.op, labels=t.labels, verify=False)
