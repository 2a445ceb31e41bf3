"""Exhaustive generation of small right loops.

Tables are built column by column: column ``y`` is the right translation
``x -> x o y``, a permutation sending e to y.  Emission order is lexicographic
on the tuple of columns.  Inverse-type predicates are pruned during the
search; the remaining predicates are tested on complete tables.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator

import numpy as np

from .config import LIMITS
from .errors import CapExceeded, InvalidInput
from .rightloop import RightLoopTable

PREDICATES = (
    "unique-inverses",       # x' o x = x o x' = e
    "left-inverse-trivial",  # f(x', x) = I
    "trg",                   # twisted right gyrogroup
    "ar",                    # every f(y, z) is an automorphism
    "twisted-gyrogroup",     # trg plus f(x, y) = f(x, x o y)
    "aip",
    "left-alternative",
    "loop",
    "group",
)

# predicates whose truth forces the pruned inverse conditions
_NEEDS_INVERSES = {"unique-inverses", "left-inverse-trivial", "trg", "twisted-gyrogroup", "aip"}
_NEEDS_TRIVIAL_LEFT = {"left-inverse-trivial", "trg", "twisted-gyrogroup"}


def _check_n(n: int, cap) -> None:
    cap = LIMITS.enumerate if cap is None else cap
    if n < 1:
        raise InvalidInput("order must be positive")
    if n > cap:
        raise CapExceeded("right-loop enumeration order", cap, n)


def _check_filters(filters: Iterable[str]) -> frozenset[str]:
    fs = frozenset(filters)
    unknown = fs - set(PREDICATES)
    if unknown:
        raise InvalidInput(f"unknown filter(s): {', '.join(sorted(unknown))}")
    return fs


def column_candidates(n: int, c: int) -> list[tuple[int, ...]]:
    """All right translations R_c (as image tuples), in lexicographic order."""
    if c == 0:
        return [tuple(range(n))]
    return [(c,) + rest for rest in permutations([x for x in range(n) if x != c])]


def _table_from_columns(cols) -> RightLoopTable:
    n = len(cols)
    return RightLoopTable([[cols[y][x] for y in range(n)] for x in range(n)])


# ---------------------------------------------------------------------------
# predicate evaluation on raw tables


def _inner_maps(op, rd, n):
    f = {}
    for y in range(n):
        for z in range(n):
            yz = op[y][z]
            f[y, z] = tuple(rd[yz][op[op[x][y]][z]] for x in range(n))
    return f


def _is_aut(op, h, n):
    return all(h[op[x][y]] == op[h[x]][h[y]] for x in range(n) for y in range(n))


def _is_taut(op, inv, h, n):
    return all(h[op[x][y]] == op[inv[h[inv[x]]]][h[y]] for x in range(n) for y in range(1, n))


def predicates(t: RightLoopTable) -> dict[str, bool]:
    """Truth value of every name in :data:`PREDICATES` for ``t``."""
    op, rd, n = t.op, t.rdiv, t.order
    inv = t.two_sided_inverse
    ident = tuple(range(n))
    f = _inner_maps(op, rd, n)
    out = {"unique-inverses": inv is not None}
    out["left-inverse-trivial"] = all(f[t.left_inverse[y], y] == ident for y in range(n))
    maps = set(f.values())
    out["ar"] = all(_is_aut(op, h, n) for h in maps)
    out["trg"] = out["left-inverse-trivial"] and all(_is_taut(op, inv, h, n) for h in maps)
    out["twisted-gyrogroup"] = out["trg"] and all(
        f[x, y] == f[x, op[x][y]] for x in range(n) for y in range(n))
    out["aip"] = inv is not None and all(
        inv[op[a][b]] == op[inv[a]][inv[b]] for a in range(n) for b in range(n))
    out["left-alternative"] = all(op[op[a][a]][b] == op[a][op[a][b]] for a in range(n) for b in range(n))
    out["loop"] = all(len(set(row)) == n for row in op)
    out["group"] = all(f[y, z] == ident for y in range(n) for z in range(n))
    return out


def _accepts(t: RightLoopTable, fs: frozenset[str]) -> bool:
    if not fs:
        return True
    p = predicates(t)
    return all(p[k] for k in fs)


# ---------------------------------------------------------------------------
# generation


def enumerate_right_loops(n: int, filters: Iterable[str] = (), cap=None) -> Iterator[RightLoopTable]:
    """Every right loop on ``{0..n-1}`` with identity 0 satisfying ``filters``."""
    _check_n(n, cap)
    fs = _check_filters(filters)
    need_inv = bool(fs & _NEEDS_INVERSES)
    need_trivial = bool(fs & _NEEDS_TRIVIAL_LEFT)
    cands = [column_candidates(n, c) for c in range(n)]
    cols: list[tuple[int, ...] | None] = [None] * n
    cols[0] = cands[0][0]

    def inverse_of(col):
        out = [0] * n
        for i, v in enumerate(col):
            out[v] = i
        return tuple(out)

    def rec(c, forced):
        if c == n:
            t = _table_from_columns(cols)
            if _accepts(t, fs):
                yield t
            return
        rows, full = forced.get(c, ({}, None))
        options = [full] if full is not None else cands[c]
        for col in options:
            if full is not None and col[0] != c:
                continue
            if any(col[r] != v for r, v in rows.items()):
                continue
            new = forced
            if need_inv or need_trivial:
                ci = col.index(0)  # left inverse c' of c
                # c o c' = e means column c' has e in row c
                if need_trivial:
                    want = inverse_of(col)
                    if ci < c and cols[ci] != want:
                        continue
                    if ci == c and want != col:
                        continue
                    if ci > c:
                        r0, f0 = forced.get(ci, ({}, None))
                        if f0 is not None and f0 != want:
                            continue
                        if any(want[r] != v for r, v in r0.items()):
                            continue
                        new = dict(forced)
                        new[ci] = (r0, want)
                else:
                    if ci < c and cols[ci][c] != 0:
                        continue
                    if ci > c:
                        r0, f0 = forced.get(ci, ({}, None))
                        if r0.get(c, 0) != 0:
                            continue
                        new = dict(forced)
                        new[ci] = ({**r0, c: 0}, f0)
            cols[c] = col
            yield from rec(c + 1, new)
        cols[c] = None

    if n == 1:
        t = RightLoopTable([[0]])
        if _accepts(t, fs):
            yield t
        return
    yield from rec(1, {})


def naive_right_loops(n: int, filters: Iterable[str] = ()) -> Iterator[RightLoopTable]:
    """Generate-and-test over all column tuples; the oracle for the pruned search."""
    fs = _check_filters(filters)
    cands = [column_candidates(n, c) for c in range(n)]
    for cols in product(*cands):
        t = _table_from_columns(cols)
        if _accepts(t, fs):
            yield t


def count_right_loops(n: int) -> int:
    """((n-1)!)^(n-1): each non-identity column is a permutation with one fixed image."""
    import math
    return math.factorial(n - 1) ** (n - 1)


# ---------------------------------------------------------------------------
# isomorphism classes (relabellings fixing e)


def _relabellings(n: int) -> np.ndarray:
    return np.array([(0,) + p for p in permutations(range(1, n))], dtype=np.int64)


def _table_codes(tables: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    return tables.reshape(len(tables), n * n).astype(np.int64) @ weights


def _decode(code: int, n: int) -> list[list[int]]:
    digits = []
    for _ in range(n * n):
        code, d = divmod(int(code), n)
        digits.append(d)
    digits.reverse()
    return [digits[i * n:(i + 1) * n] for i in range(n)]


def canonical_codes(tables: np.ndarray, n: int) -> np.ndarray:
    """Least row-major code over all relabellings fixing 0, for each table in a batch."""
    best = None
    for pi in _relabellings(n):
        inv = np.argsort(pi)
        # relabelled[a][b] = pi(t[pi^-1 a][pi^-1 b])
        rel = pi[tables[:, inv][:, :, inv]]
        codes = _table_codes(rel, n)
        best = codes if best is None else np.minimum(best, codes)
    return best


def canonical_form(t: RightLoopTable) -> RightLoopTable:
    n = t.order
    code = canonical_codes(np.array([t.op], dtype=np.int64), n)[0]
    return RightLoopTable(_decode(code, n))


def all_tables_array(n: int) -> np.ndarray:
    """Every right loop of order n as an (N, n, n) array, in emission order."""
    cands = [np.array(column_candidates(n, c), dtype=np.int8) for c in range(n)]
    if n == 1:
        return np.zeros((1, 1, 1), dtype=np.int8)
    grids = np.meshgrid(*[np.arange(len(cands[c])) for c in range(1, n)], indexing="ij")
    choice = np.stack([g.ravel() for g in grids], axis=1)     # (N, n-1)
    N = len(choice)
    tables = np.empty((N, n, n), dtype=np.int8)
    tables[:, :, 0] = np.arange(n)
    for c in range(1, n):
        tables[:, :, c] = cands[c][choice[:, c - 1]]
    return tables


def isomorphism_classes(n: int, cap=None) -> list[tuple[RightLoopTable, int]]:
    """One canonical representative per class with the class size; sizes sum
    to the raw count."""
    _check_n(n, cap)
    tables = all_tables_array(n).astype(np.int64)
    codes = canonical_codes(tables, n)
    uniq, counts = np.unique(codes, return_counts=True)
    return [(RightLoopTable(_decode(c, n)), int(k)) for c, k in zip(uniq, counts)]


# ---------------------------------------------------------------------------
# census


@dataclass
class Census:
    order: int
    total: int = 0
    classes: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)
    predicate_counts: Counter = field(default_factory=Counter)

    def to_dict(self) -> dict:
        rows = []
        for key in sorted(self.classes):
            rows.append({"predicates": list(key), "count": self.classes[key],
                         "witness": [list(r) for r in self.witnesses[key].op]})
        return {"order": self.order, "total": self.total,
                "predicate_counts": {p: self.predicate_counts[p] for p in PREDICATES},
                "classes": rows}


def census(n: int, cap=None, tables: Iterable[RightLoopTable] | None = None) -> Census:
    """Counts per combination of true predicates, one witness per nonempty class."""
    _check_n(n, cap)
    out = Census(n)
    source = tables if tables is not None else enumerate_right_loops(n, cap=cap)
    for t in source:
        p = predicates(t)
        key = tuple(k for k in PREDICATES if p[k])
        out.total += 1
        out.classes[key] += 1
        out.witnesses.setdefault(key, t)
        for k in key:
            out.predicate_counts[k] += 1
    return out
