"""Slow, direct re-implementations used to cross-check the fast code paths.

Nothing here imports the package's inner-mapping or automorphism code; every
value is recomputed from the raw Cayley table by scanning.
"""
from itertools import permutations


def solve_right(op, a, b):
    """The unique s with op[s][a] == b, found by scanning column a."""
    hits = [s for s in range(len(op)) if op[s][a] == b]
    assert len(hits) == 1
    return hits[0]


def inner(op, y, z):
    yz = op[y][z]
    return tuple(solve_right(op, yz, op[op[x][y]][z]) for x in range(len(op)))


def compose(p, q):
    # p first, then q
    return tuple(q[p[x]] for x in range(len(p)))


def inverse_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def generated(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    todo = [ident]
    while todo:
        a = todo.pop()
        for g in gens:
            b = compose(a, g)
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def sigma(op, y, h):
    # h(x o y) = sigma_y(h)(x) o h(y)
    return tuple(solve_right(op, h[y], h[op[x][y]]) for x in range(len(op)))


def inner_identities_hold(op):
    """Direct check of f(x,e) = f(e,x) = I, sigma_e = id, the sigma cocycle rule
    and f(x,y) f(x o y, z) = sigma_x(f(y,z)) f(f(y,z)(x), y o z)."""
    n = len(op)
    ident = tuple(range(n))
    f = {(y, z): inner(op, y, z) for y in range(n) for z in range(n)}
    if any(f[x, 0] != ident or f[0, x] != ident for x in range(n)):
        return False
    gs = generated(set(f.values()), n)
    for h in gs:
        if sigma(op, 0, h) != h:
            return False
    for y in range(n):
        for h in gs:
            for k in gs:
                lhs = sigma(op, y, compose(h, k))
                rhs = compose(sigma(op, y, h), sigma(op, h[y], k))
                if lhs != rhs:
                    return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                fyz = f[y, z]
                lhs = compose(f[x, y], f[op[x][y], z])
                rhs = compose(sigma(op, x, fyz), f[fyz[x], op[y][z]])
                if lhs != rhs:
                    return False
    return True


def two_sided_inverse(op):
    n = len(op)
    inv = []
    for x in range(n):
        cands = [y for y in range(n) if op[y][x] == 0 and op[x][y] == 0]
        if len(cands) != 1:
            return None
        inv.append(cands[0])
    return inv


def brute_aut(op):
    n = len(op)
    out = []
    for rest in permutations(range(1, n)):
        h = (0,) + rest
        if all(h[op[x][y]] == op[h[x]][h[y]] for x in range(n) for y in range(n)):
            out.append(h)
    return out


def brute_taut(op):
    """Every permutation of S (identity not assumed fixed) satisfying the
    twisted automorphism equation."""
    n = len(op)
    inv = two_sided_inverse(op)
    out = []
    for h in permutations(range(n)):
        if all(h[op[x][y]] == op[inv[h[inv[x]]]][h[y]] for x in range(n) for y in range(1, n)):
            out.append(h)
    return out


def is_trg(op):
    n = len(op)
    inv = two_sided_inverse(op)
    if inv is None:
        return False
    ident = tuple(range(n))
    if any(inner(op, inv[y], y) != ident for y in range(n)):
        return False
    taut = set(brute_taut(op))
    return all(inner(op, y, z) in taut for y in range(n) for z in range(n))


def raw_identity_sweep(tables, drop_sigma=False, chunk=8192):
    """Vectorised check of f(x,e) = f(e,x) = I and of
    f(x,y) f(x o y, z) = sigma_x(f(y,z)) f(f(y,z)(x), y o z)
    over a batch of Cayley tables of shape (N, n, n).

    Returns (number of tables failing the first identity, number failing the
    second).  ``drop_sigma`` replaces sigma_x(f(y,z)) by f(y,z); it exists only
    to show the sweep can detect a wrong identity.
    """
    import numpy as np

    T = np.asarray(tables, dtype=np.intp)
    n = T.shape[1]
    ar = np.arange(n)
    bad_i = bad_iv = 0
    Y, Z, X = np.meshgrid(ar, ar, ar, indexing="ij")
    Xg, Yg, Zg, W = np.meshgrid(ar, ar, ar, ar, indexing="ij")
    for s in range(0, len(T), chunk):
        op = T[s:s + chunk]
        B = len(op)
        rd = np.empty_like(op)  # rd[b, a, op[b, s, a]] = s
        rd[np.arange(B)[:, None, None], ar[None, None, :], op] = ar[None, :, None]
        b3 = np.arange(B)[:, None, None, None]
        f = rd[b3, op[b3, Y, Z], op[b3, op[b3, X, Y], Z]]  # f[b, y, z, x]
        bad_i += int(((f[:, :, 0, :] != ar).any(axis=(1, 2)) | (f[:, 0, :, :] != ar).any(axis=(1, 2))).sum())
        b4 = np.arange(B)[:, None, None, None, None]
        # left side evaluated at w: apply f(x,y), then f(x o y, z)
        lhs = f[b4, op[b4, Xg, Yg], Zg, f[b4, Xg, Yg, W]]
        hx = f[b4, Yg, Zg, Xg]
        if drop_sigma:
            first = f[b4, Yg, Zg, W]
        else:
            # sigma_x(h)(w) = h(x) \ h(w o x), the right quotient
            first = rd[b4, hx, f[b4, Yg, Zg, op[b4, W, Xg]]]
        rhs = f[b4, hx, op[b4, Yg, Zg], first]
        bad_iv += int((lhs != rhs).any(axis=(1, 2, 3, 4)).sum())
    return bad_i, bad_iv
