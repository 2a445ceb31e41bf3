"""Permutations, closed permutation groups and small abstract groups.

Composition is apply-left-first: ``(p * q)(x) == q(p(x))``.  Written with the
right-action notation ``x.(pq) = (x.p).q`` this is ordinary left-to-right
reading, and it is the convention used for every product in this package.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .config import LIMITS
from .errors import CapExceeded, InvalidInput, PreconditionError


class Perm:
    """A bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        self.images = tuple(images)
        if check and sorted(self.images) != list(range(len(self.images))):
            raise InvalidInput(f"not a permutation: {self.images}")
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Perm":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n:
                    raise InvalidInput(f"point {a} out of range for degree {n}")
                if a in seen:
                    raise InvalidInput(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.degree)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Perm(inv, check=False)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def fixes(self, x: int) -> bool:
        return self.images[x] == x

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({list(self.images)})"

    def __str__(self):
        return format_perm(self)


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise InvalidInput(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Perm([qi[x] for x in p.images], check=False)


def format_perm(p: Perm, labels: Sequence[str] | None = None, compact: bool = False) -> str:
    """Cycle notation with fixed points omitted; the identity renders as ``I``.

    ``compact`` drops the spaces inside cycles, e.g. ``(234)`` instead of
    ``(2 3 4)``; it only applies when every label is a single character.
    """
    cycles = p.cycles()
    if not cycles:
        return "I"
    names = labels if labels is not None else [str(i) for i in range(p.degree)]
    sep = "" if compact and all(len(str(names[c])) == 1 for cyc in cycles for c in cyc) else " "
    return "".join("(" + sep.join(str(names[c]) for c in cyc) + ")" for cyc in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, labels: Sequence[str] | None = None, degree: int | None = None) -> Perm:
    """Inverse of :func:`format_perm`; accepts ``I``, ``()`` and compact cycles."""
    if labels is None:
        if degree is None:
            raise InvalidInput("parse_perm needs labels or a degree")
        labels = [str(i) for i in range(degree)]
    n = len(labels)
    index = {str(lab): i for i, lab in enumerate(labels)}
    text = text.strip()
    if text in ("I", "()", "id", ""):
        return Perm.identity(n)
    if _CYCLE_RE.sub("", text).strip():
        raise InvalidInput(f"bad cycle notation: {text!r}")
    single = all(len(k) == 1 for k in index)
    cycles = []
    for body in _CYCLE_RE.findall(text):
        tokens = body.replace(",", " ").split()
        if len(tokens) == 1 and single and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            cycles.append([index[t] for t in tokens])
        except KeyError as exc:
            raise InvalidInput(f"unknown element {exc.args[0]!r} in {text!r}") from None
    return Perm.from_cycles(cycles, n)


@dataclass(frozen=True)
class PermGroupData:
    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    complete: bool = True  # False marks a lower-bound subgroup returned beyond a cap
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._members

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def index(self, p: Perm) -> int:
        return self.elements.index(p)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)


def close(generators: Iterable[Perm], degree: int | None = None, cap: int | None = None) -> PermGroupData:
    """Breadth-first closure of ``generators`` under composition."""
    cap = LIMITS.closure if cap is None else cap
    gens = tuple(dict.fromkeys(generators))
    if degree is None:
        if not gens:
            degree = 0
        else:
            degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise InvalidInput(f"degree mismatch: {g.degree} vs {degree}")
    ident = Perm.identity(degree)
    seen = {ident}
    frontier = deque([ident])
    useful = [g for g in gens if not g.is_identity()]
    while frontier:
        x = frontier.popleft()
        for g in useful:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded("permutation closure", cap)
                frontier.append(y)
    return PermGroupData(degree, gens, tuple(sorted(seen)))


def symmetric_group_on(points: Sequence[int], degree: int) -> PermGroupData:
    """Sym(points) as permutations of ``degree`` points fixing everything else."""
    pts = list(points)
    gens = []
    if len(pts) >= 2:
        gens.append(Perm.from_cycles([pts[:2]], degree))
    if len(pts) >= 3:
        gens.append(Perm.from_cycles([pts], degree))
    return close(gens, degree=degree)


def orbit(g: PermGroupData, point: int) -> set[int]:
    out = {point}
    todo = [point]
    while todo:
        x = todo.pop()
        for gen in g.generators:
            y = gen(x)
            if y not in out:
                out.add(y)
                todo.append(y)
    return out


def is_transitive_on(g: PermGroupData, points: Iterable[int]) -> bool:
    pts = set(points)
    if not pts:
        raise InvalidInput("is_transitive_on needs a nonempty point set")
    return pts <= orbit(g, min(pts))


def involutions(g: PermGroupData) -> list[Perm]:
    return [p for p in g.elements if not p.is_identity() and (p * p).is_identity()]


def centralizer(g: PermGroupData, p: Perm) -> PermGroupData:
    if p not in g:
        raise PreconditionError(f"{format_perm(p)} is not in the group")
    elems = tuple(q for q in g.elements if q * p == p * q)
    return PermGroupData(g.degree, elems, elems)


def element_order_profile(orders: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(orders).items()))


def perm_order_profile(g: PermGroupData) -> dict[int, int]:
    return element_order_profile(p.order() for p in g.elements)


# ---------------------------------------------------------------------------
# abstract groups given by multiplication tables


def _check_associative(mul: np.ndarray) -> tuple[int, int, int] | None:
    m = mul.shape[0]
    block = max(1, 2_000_000 // max(1, m * m))
    for lo in range(0, m, block):
        rows = mul[lo:lo + block]                     # a*b for a in block
        left = mul[rows]                              # (a*b)*c
        right = rows[:, mul]                          # a*(b*c) = mul[a, mul[b, c]]
        # rows[:, mul] indexes row a by mul[b, c]
        bad = np.argwhere(left != right)
        if bad.size:
            a, b, c = bad[0]
            return lo + int(a), int(b), int(c)
    return None


@dataclass(frozen=True)
class FiniteGroupTable:
    order: int
    mul: tuple[tuple[int, ...], ...]
    id: int
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_mul(cls, mul, labels: Sequence[str] | None = None, verify: bool = True,
                 cap: int | None = None) -> "FiniteGroupTable":
        """Validate a multiplication table (``mul[a][b] = ab``) as a group."""
        cap = LIMITS.associativity if cap is None else cap
        arr = np.asarray(mul, dtype=np.int64)
        m = len(arr)
        if arr.shape != (m, m):
            raise InvalidInput("group table must be square")
        if m == 0:
            raise InvalidInput("empty group table")
        if arr.min() < 0 or arr.max() >= m:
            raise InvalidInput("group table entry out of range")
        ids = [e for e in range(m) if (arr[e] == np.arange(m)).all() and (arr[:, e] == np.arange(m)).all()]
        if not ids:
            raise InvalidInput("group table has no two-sided identity")
        e = ids[0]
        inv = []
        for x in range(m):
            sols = np.flatnonzero(arr[x] == e)
            if len(sols) != 1 or arr[sols[0], x] != e:
                raise InvalidInput(f"element {_lab(labels, x)} has no two-sided inverse")
            inv.append(int(sols[0]))
        if verify:
            if m > cap:
                raise CapExceeded("associativity verification", cap, m)
            bad = _check_associative(arr)
            if bad is not None:
                a, b, c = (_lab(labels, t) for t in bad)
                raise InvalidInput(f"group table not associative at ({a}, {b}, {c})")
        return cls(m, tuple(tuple(int(v) for v in row) for row in arr), e, tuple(inv),
                   tuple(str(s) for s in labels) if labels is not None else None)

    def label(self, x: int) -> str:
        return _lab(self.labels, x)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.id:
            y = self.mul[y][x]
            k += 1
        return k

    def order_profile(self) -> dict[int, int]:
        return element_order_profile(self.element_order(x) for x in range(self.order))

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(a))

    def power(self, x: int, k: int) -> int:
        y = self.id
        for _ in range(k):
            y = self.mul[y][x]
        return y

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {self.id}
        todo = [self.id]
        while todo:
            x = todo.pop()
            for g in gens:
                y = self.mul[x][g]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if self.id not in s:
            return False
        return all(self.mul[a][b] in s for a in s for b in s)

    def generating_set(self) -> list[int]:
        """A small generating set, chosen greedily by decreasing element order."""
        by_order = sorted(range(self.order), key=lambda x: (-self.element_order(x), x))
        gens: list[int] = []
        sub = frozenset([self.id])
        for x in by_order:
            if len(sub) == self.order:
                break
            if x not in sub:
                gens.append(x)
                sub = self.generated(gens)
        return gens


def _lab(labels, x):
    return str(labels[x]) if labels is not None else str(x)


def group_table(g: PermGroupData) -> FiniteGroupTable:
    """Multiplication table of a closed permutation group (ids follow ``g.elements``)."""
    idx = {p: i for i, p in enumerate(g.elements)}
    mul = [[idx[a * b] for b in g.elements] for a in g.elements]
    labels = [format_perm(p) for p in g.elements]
    return FiniteGroupTable.from_mul(mul, labels=labels, verify=False)


def center(gt: FiniteGroupTable) -> set[int]:
    m = gt.mul
    return {z for z in range(gt.order) if all(m[z][x] == m[x][z] for x in range(gt.order))}


def _extend(a: FiniteGroupTable, b: FiniteGroupTable, gens, images, phi, used):
    """Propagate ``phi`` along the Cayley graph of the assigned generators.

    Returns the extended (phi, used) or None on a conflict or a collision.
    """
    phi = list(phi)
    used = set(used)
    todo = [x for x in range(a.order) if phi[x] >= 0]
    while todo:
        x = todo.pop()
        px = phi[x]
        for g, pg in zip(gens, images):
            y = a.mul[x][g]
            img = b.mul[px][pg]
            if phi[y] < 0:
                if img in used:
                    return None
                phi[y] = img
                used.add(img)
                todo.append(y)
            elif phi[y] != img:
                return None
    return phi, used


def _isomorphisms(a: FiniteGroupTable, b: FiniteGroupTable, first_only: bool = False):
    gens = a.generating_set()
    b_orders = [b.element_order(y) for y in range(b.order)]
    cands = [[y for y in range(b.order) if b_orders[y] == a.element_order(g)] for g in gens]
    found = []

    def rec(i, images, phi, used):
        if i == len(gens):
            if all(v >= 0 for v in phi):
                found.append(tuple(phi))
                return first_only
            return False
        for c in cands[i]:
            # greedy generators lie outside the subgroup built so far
            if c in used:
                continue
            nphi = list(phi)
            nphi[gens[i]] = c
            res = _extend(a, b, gens[:i + 1], images + [c], nphi, used | {c})
            if res is not None and rec(i + 1, images + [c], *res):
                return True
        return False

    phi0 = [-1] * a.order
    phi0[a.id] = b.id
    rec(0, [], phi0, {b.id})
    return found


def automorphisms(gt: FiniteGroupTable, cap: int | None = None) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples over element ids, sorted."""
    cap = LIMITS.aut_search if cap is None else cap
    if gt.order > cap:
        raise CapExceeded("automorphism search", cap, gt.order)
    return sorted(_isomorphisms(gt, gt))


def find_isomorphism(a: FiniteGroupTable, b: FiniteGroupTable, cap: int | None = None):
    cap = LIMITS.isomorphism if cap is None else cap
    if max(a.order, b.order) > cap:
        raise CapExceeded("isomorphism search", cap, max(a.order, b.order))
    if a.order != b.order or a.order_profile() != b.order_profile():
        return None
    if a.is_abelian() != b.is_abelian():
        return None
    found = _isomorphisms(a, b, first_only=True)
    return found[0] if found else None


def isomorphic(a, b, cap: int | None = None) -> bool:
    """Isomorphism test; permutation groups are converted to tables first."""
    if isinstance(a, PermGroupData):
        a = group_table(a)
    if isinstance(b, PermGroupData):
        b = group_table(b)
    return find_isomorphism(a, b, cap) is not None


# ---------------------------------------------------------------------------
# small named groups


def cyclic_group(n: int) -> FiniteGroupTable:
    return FiniteGroupTable.from_mul([[(a + b) % n for b in range(n)] for a in range(n)],
                                     labels=[str(i) for i in range(n)], verify=False)


def direct_product(a: FiniteGroupTable, b: FiniteGroupTable) -> FiniteGroupTable:
    pairs = [(x, y) for x in range(a.order) for y in range(b.order)]
    idx = {p: i for i, p in enumerate(pairs)}
    mul = [[idx[(a.mul[x1][x2], b.mul[y1][y2])] for (x2, y2) in pairs] for (x1, y1) in pairs]
    labels = [f"({a.label(x)},{b.label(y)})" for x, y in pairs]
    return FiniteGroupTable.from_mul(mul, labels=labels, verify=False)


def symmetric_group(k: int) -> FiniteGroupTable:
    elems = tuple(sorted(Perm(p) for p in permutations(range(k))))
    return group_table(PermGroupData(k, elems, elems))


def alternating_group(k: int) -> FiniteGroupTable:
    elems = tuple(sorted(p for p in (Perm(q) for q in permutations(range(k)))
                         if sum(len(c) - 1 for c in p.cycles()) % 2 == 0))
    return group_table(PermGroupData(k, elems, elems))


def dihedral_group(k: int) -> FiniteGroupTable:
    """Symmetries of a k-gon, order 2k."""
    r = Perm([(i + 1) % k for i in range(k)])
    s = Perm([(-i) % k for i in range(k)])
    return group_table(close([r, s], degree=k))


def quaternion_group() -> FiniteGroupTable:
    # regular representation of Q8 from its unit quaternions
    units = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    base = {("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}

    def mul(a, b):
        sa, ua = (a[0] == "-"), a.lstrip("-")
        sb, ub = (b[0] == "-"), b.lstrip("-")
        sign = sa != sb
        if ua == "1":
            r = ub
        elif ub == "1":
            r = ua
        elif ua == ub:
            r, sign = "1", not sign
        else:
            r = base[ua, ub]
            if r.startswith("-"):
                r, sign = r[1:], not sign
        return ("-" if sign else "") + r

    idx = {u: i for i, u in enumerate(units)}
    return FiniteGroupTable.from_mul([[idx[mul(a, b)] for b in units] for a in units], labels=units)


def _catalog() -> dict[int, list[tuple[str, FiniteGroupTable]]]:
    z2 = cyclic_group(2)
    entries = [("1", cyclic_group(1))]
    entries += [(f"Z{k}", cyclic_group(k)) for k in range(2, 13)]
    entries += [
        ("Z2xZ2", direct_product(z2, z2)), ("S3", symmetric_group(3)),
        ("Z2xZ4", direct_product(z2, cyclic_group(4))), ("Z2xZ2xZ2", direct_product(z2, direct_product(z2, z2))),
        ("D4", dihedral_group(4)), ("Q8", quaternion_group()), ("Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3))),
        ("D5", dihedral_group(5)), ("A4", alternating_group(4)), ("D6", dihedral_group(6)),
        ("Z2xZ6", direct_product(z2, cyclic_group(6))), ("S4", symmetric_group(4)), ("A5", alternating_group(5)),
        ("S5", symmetric_group(5)),
    ]
    out: dict[int, list] = {}
    for name, g in entries:
        out.setdefault(g.order, []).append((name, g))
    return out


_CATALOG = None


def identify_group(g) -> str:
    """Name from a small catalogue of groups, or ``order m`` when unknown."""
    global _CATALOG
    if isinstance(g, PermGroupData):
        g = group_table(g)
    if g.order > LIMITS.isomorphism:
        return f"order {g.order}"
    if _CATALOG is None:
        _CATALOG = _catalog()
    for name, ref in _CATALOG.get(g.order, []):
        if find_isomorphism(g, ref) is not None:
            return name
    return f"order {g.order}"


def display_key(p: Perm) -> tuple:
    """Sort key for listing permutations: fewer moved points first, then by cycles."""
    return (sum(len(c) for c in p.cycles()), p.cycles())


def format_perm_set(perms: Iterable[Perm], labels: Sequence[str] | None = None) -> str:
    return "{" + ",".join(format_perm(p, labels) for p in sorted(perms, key=display_key)) + "}"
