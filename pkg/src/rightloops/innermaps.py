"""Right inner mappings f(y, z), the inner mapping group G_S and the maps sigma_y.

``f(y, z)`` is defined by ``f(y, z)(x) o (y o z) = (x o y) o z`` and
``sigma_y(h)`` by ``h(x o y) = sigma_y(h)(x) o h(y)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .permgroup import Perm, PermGroupData, close, format_perm
from .report import CheckReport, Verdict
from .rightloop import RightLoopTable


def inner_map(t: RightLoopTable, y: int, z: int) -> Perm:
    op, rd = t.op, t.rdiv
    yz = op[y][z]
    return Perm([rd[yz][op[op[x][y]][z]] for x in range(t.order)], check=False)


def inner_map_table(t: RightLoopTable) -> tuple[tuple[Perm, ...], ...]:
    n = t.order
    return tuple(tuple(inner_map(t, y, z) for z in range(n)) for y in range(n))


@dataclass(frozen=True)
class InnerMapIndex:
    loop: RightLoopTable
    f: tuple[tuple[Perm, ...], ...]
    gs: PermGroupData

    def distinct_maps(self) -> list[Perm]:
        return sorted({p for row in self.f for p in row})


def inner_group(t: RightLoopTable, cap: int | None = None) -> InnerMapIndex:
    f = inner_map_table(t)
    gens = sorted({p for row in f for p in row if not p.is_identity()})
    return InnerMapIndex(t, f, close(gens, degree=t.order, cap=cap))


def sigma(t: RightLoopTable, y: int, h: Perm) -> Perm:
    if h(0) != 0:
        raise PreconditionError(f"{format_perm(h, t.labels)} moves the identity")
    op, rd = t.op, t.rdiv
    hy = h(y)
    return Perm([rd[hy][h(op[x][y])] for x in range(t.order)], check=False)


# ---------------------------------------------------------------------------
# vectorised sweeps


def _codes(arr: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(arr.shape[-1] - 1, -1, -1, dtype=np.int64)
    return arr.astype(np.int64) @ weights


class _GroupArrays:
    """G_S as an (m, n) image array with a lookup from image tuples to indices."""

    def __init__(self, g: PermGroupData):
        self.n = g.degree
        self.H = np.array([p.images for p in g.elements], dtype=np.int64).reshape(len(g.elements), g.degree)
        self.codes = _codes(self.H, self.n)   # sorted, because elements are lex-sorted

    def lookup(self, arr: np.ndarray) -> np.ndarray:
        """Indices of the permutations in ``arr`` (last axis = images); -1 if absent."""
        c = _codes(arr, self.n)
        pos = np.searchsorted(self.codes, c)
        pos = np.minimum(pos, len(self.codes) - 1)
        return np.where(self.codes[pos] == c, pos, -1)

    def products(self) -> np.ndarray:
        # (hk)(x) = k(h(x))
        m = len(self.H)
        comp = self.H[np.arange(m)[None, :, None], self.H[:, None, :]]
        return self.lookup(comp)


def _sigma_array(t: RightLoopTable, H: np.ndarray) -> np.ndarray:
    """sig[y, h, x] = sigma_y(h)(x) for every h given as a row of ``H``."""
    OP = np.array(t.op, dtype=np.int64)
    RD = np.array(t.rdiv, dtype=np.int64)
    A = H[:, OP]                         # (m, x, y): h(x o y)
    B = np.broadcast_to(H[:, None, :], A.shape)  # h(y)
    return RD[B, A].transpose(2, 0, 1)


def check_prop2_identities(idx: InnerMapIndex) -> CheckReport:
    """Exhaustive check of the basic inner-mapping identities.

    (i)   f(x, e) = f(e, x) = I
    (ii)  sigma_e(h) = h for h in G_S
    (iii) sigma_y(hk) = sigma_y(h) sigma_{h(y)}(k) for h, k in G_S
    (iv)  f(x, y) f(x o y, z) = sigma_x(f(y, z)) f(f(y, z)(x), y o z)
    """
    t = idx.loop
    n = t.order
    rep = CheckReport("inner-mapping identities")
    OP = np.array(t.op, dtype=np.int64)
    F = np.array([[p.images for p in row] for row in idx.f], dtype=np.int64).reshape(n, n, n)
    ident = np.arange(n)

    rep.count("(i)", 2 * n)
    for x in range(n):
        for a, b in ((x, 0), (0, x)):
            if not (F[a, b] == ident).all():
                rep.fail("(i)", (a, b), f"f({t.labels[a]}, {t.labels[b]}) is not I")

    ga = _GroupArrays(idx.gs)
    m = len(ga.H)
    sig = _sigma_array(t, ga.H)
    rep.count("(ii)", m)
    bad = np.flatnonzero((sig[0] != ga.H).any(axis=1))
    if bad.size:
        rep.fail("(ii)", (int(bad[0]),), "sigma_e(h) != h")

    P = ga.products()
    rep.count("(iii)", n * m * m)
    hy = ga.H.T                                         # hy[y, h] = h(y)
    for y in range(n):
        lhs = sig[y][P]                                 # (h, k, x)
        s_yh = sig[y]                                   # (h, x)
        rhs = sig[hy[y][:, None], np.arange(m)[None, :]]  # (h, k, x): sigma_{h(y)}(k)
        rhs = np.take_along_axis(rhs, np.broadcast_to(s_yh[:, None, :], rhs.shape), axis=2)
        diff = np.argwhere((lhs != rhs).any(axis=2))
        if diff.size:
            h, k = diff[0]
            rep.fail("(iii)", (y, int(h), int(k)),
                     f"y={t.labels[y]}, h={format_perm(idx.gs.elements[h], t.labels)}, "
                     f"k={format_perm(idx.gs.elements[k], t.labels)}")
            break
    iid = ga.lookup(ident[None, :])[0]
    if iid >= 0:
        rep.count("sigma(I)=I", n)
        if not (sig[:, iid, :] == ident).all():
            rep.fail("sigma(I)=I", (int(np.argwhere((sig[:, iid, :] != ident).any(axis=1))[0][0]),))

    # (iv) over all x, y, z; arrays are indexed [x, y, z, w]
    X = np.arange(n)[:, None, None]
    Y = np.arange(n)[None, :, None]
    Z = np.arange(n)[None, None, :]
    W = np.arange(n)[None, None, None, :]
    xy = OP[X, Y]                                        # (x, y, 1)
    lhs = F[xy[..., None], Z[..., None], F[X, Y]]
    fyz = F[Y, Z]                                        # (1, y, z, w): f(y,z)(w)
    fyz_x = F[Y, Z, X]                                   # f(y,z)(x)
    RD = np.array(t.rdiv, dtype=np.int64)
    # sigma_x(f(y,z))(w) = rdiv[f(y,z)(x)][f(y,z)(w o x)]
    w_ox = OP[W, X[..., None]]                           # (x, 1, 1, w)
    s = RD[fyz_x[..., None], np.take_along_axis(np.broadcast_to(fyz, (n, n, n, n)),
                                                 np.broadcast_to(w_ox, (n, n, n, n)), axis=3)]
    rhs = F[fyz_x[..., None], OP[Y, Z][..., None], s]
    rep.count("(iv)", n ** 3)
    diff = np.argwhere((lhs != rhs).any(axis=3))
    if diff.size:
        x, y, z = (int(v) for v in diff[0])
        rep.fail("(iv)", (x, y, z), f"x={t.labels[x]}, y={t.labels[y]}, z={t.labels[z]}")
    rep.facts["gs_order"] = m
    return rep


def sigma_map(idx: InnerMapIndex, y: int) -> dict[Perm, Perm]:
    return {h: sigma(idx.loop, y, h) for h in idx.gs.elements}


def check_sigma_homomorphism(idx: InnerMapIndex, y: int) -> Verdict:
    """sigma_y maps G_S into G_S and sigma_y(hk) = sigma_y(h) sigma_y(k)."""
    s = sigma_map(idx, y)
    for h, v in s.items():
        if v not in idx.gs:
            return Verdict(False, (h,), "sigma_y(h) not in G_S")
    els = idx.gs.elements
    for h in els:
        for k in els:
            if s[h * k] != s[h] * s[k]:
                return Verdict(False, (h, k), "sigma_y(hk) != sigma_y(h) sigma_y(k)")
    return Verdict(True)


def check_sigma_automorphism(idx: InnerMapIndex, y: int) -> Verdict:
    v = check_sigma_homomorphism(idx, y)
    if not v:
        return v
    if len(set(sigma_map(idx, y).values())) != idx.gs.order:
        return Verdict(False, None, "sigma_y is not injective on G_S")
    return Verdict(True)


def left_inverse_maps_trivial(idx: InnerMapIndex) -> Verdict:
    """f(y', y) = I for every y, with y' the left inverse of y."""
    t = idx.loop
    for y in range(t.order):
        if not idx.f[t.left_inverse[y]][y].is_identity():
            return Verdict(False, (y,), f"f({t.labels[t.left_inverse[y]]}, {t.labels[y]}) != I")
    return Verdict(True)
