"""Example factories: the projection right loop, the rho-deformation of a right
gyrogroup, and the transversal S_h = {h x : x in S \\ {e}} u {e}.

A right gyrogroup is taken to mean: unique inverses, f(y', y) = I for all y, and
every right inner mapping an automorphism.  A gyrotransversal is an
inverse-closed right transversal stable under conjugation by the subgroup.
"""
from __future__ import annotations

from .errors import InternalError, InvalidInput, PreconditionError
from .extension import TransversalAnalysis, classify_transversal, decompose
from .innermaps import inner_group, inner_map_table
from .permgroup import FiniteGroupTable, Perm, center, format_perm
from .report import CheckReport
from .rightloop import RightLoopTable, validate_table
from .twistedaut import is_automorphism, is_twisted_automorphism, is_twisted_right_gyrogroup


def is_right_gyrogroup(t: RightLoopTable) -> bool:
    if t.two_sided_inverse is None:
        return False
    f = inner_map_table(t)
    if any(not f[t.left_inverse[y]][y].is_identity() for y in range(t.order)):
        return False
    return all(is_automorphism(t, p) for p in {p for row in f for p in row})


def projection_loop(n: int) -> RightLoopTable:
    """e, x1, ..., x_{n-1} with x_i o x_j = x_i (i != j) and x_i o x_i = e."""
    if n < 2:
        raise InvalidInput("projection loop needs n >= 2")
    op = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == 0:
                op[i][j] = j
            elif j == 0:
                op[i][j] = i
            else:
                op[i][j] = 0 if i == j else i
    return validate_table(op, labels=["e"] + [f"x{i}" for i in range(1, n)])


def deform_rho(t: RightLoopTable, rho: Perm) -> RightLoopTable:
    """x o_rho y = rho(x) o y for y != e, and x o_rho e = x.

    Checks that the result is a twisted right gyrogroup with inverses
    ``rho(x')`` and inner mappings ``f_rho(y, z) = f(rho(y), z) rho`` for
    y, z != e and y != z'_rho, and that ``f_rho(y'_rho, y) = I``.
    """
    if not is_right_gyrogroup(t):
        raise PreconditionError("deformation needs a right gyrogroup")
    if rho.degree != t.order or not is_automorphism(t, rho) or not (rho * rho).is_identity():
        raise PreconditionError(f"{format_perm(rho, t.labels)} is not an automorphism with rho^2 = I")
    n = t.order
    op = [[t.op[rho(x)][y] if y else x for y in range(n)] for x in range(n)]
    d = validate_table(op, labels=t.labels)
    inv, dinv = t.two_sided_inverse, d.two_sided_inverse
    if dinv is None or any(dinv[x] != rho(inv[x]) for x in range(n)):
        raise InternalError("inverse in (S, o_rho) is not rho(x')")
    f, fr = inner_map_table(t), inner_map_table(d)
    for y in range(1, n):
        for z in range(1, n):
            if y != dinv[z] and fr[y][z] != f[rho(y)][z] * rho:
                raise InternalError(f"f_rho({t.labels[y]}, {t.labels[z]}) != f(rho(y), z) rho")
    if any(not fr[dinv[y]][y].is_identity() for y in range(n)):
        raise InternalError("f_rho(y'_rho, y) != I")
    if not is_twisted_right_gyrogroup(d).is_trg:
        raise InternalError("(S, o_rho) is not a twisted right gyrogroup")
    return d


def aut_in_taut_of_deformed(t: RightLoopTable, rho: Perm, h: Perm) -> CheckReport:
    """h in Aut(S, o) lies in TAut(S, o_rho), and lies in Aut(S, o_rho) exactly
    when it commutes with rho."""
    if not is_automorphism(t, h):
        raise PreconditionError(f"{format_perm(h, t.labels)} is not an automorphism of (S, o)")
    d = deform_rho(t, rho)
    rep = CheckReport("Aut(S, o) inside TAut(S, o_rho)")
    in_taut = is_twisted_automorphism(d, h)
    in_aut = is_automorphism(d, h)
    commutes = h * rho == rho * h
    rep.facts.update(in_taut=in_taut, in_aut=in_aut, commutes=commutes)
    rep.count("h in TAut(o_rho)")
    if not in_taut:
        rep.fail("h in TAut(o_rho)", (h,))
    rep.count("h in Aut(o_rho) <=> h rho = rho h")
    if in_aut != commutes:
        rep.fail("h in Aut(o_rho) <=> h rho = rho h", (h,))
    return rep


def s_h_transversal(ta: TransversalAnalysis, h: int) -> tuple[TransversalAnalysis, CheckReport]:
    """S_h for a non-central involution h of H, with eta(k) = h k h.

    Returns the new analysis and a report checking ``eta(k)^-1 (h x) k in S_h``
    for all k in H and x in S \\ {e}, inverse-closure of S_h, and that S_h
    is a twisted gyrotransversal but not a gyrotransversal.
    """
    G = ta.group
    cls = classify_transversal(ta)
    if not cls.gyrotransversal:
        raise PreconditionError("S is not a gyrotransversal")
    H = ta.subgroup
    if h not in H:
        raise PreconditionError(f"{G.label(h)} is not in H")
    if h == G.id or G.mul[h][h] != G.id:
        raise PreconditionError(f"{G.label(h)} is not an involution")
    sub = {x: i for i, x in enumerate(H)}
    Ht = FiniteGroupTable.from_mul([[sub[G.mul[a][b]] for b in H] for a in H], verify=False)
    if sub[h] in center(Ht):
        raise PreconditionError(f"{G.label(h)} is central in H (no non-central involution)")
    sh = [G.id] + [G.mul[h][x] for x in ta.transversal[1:]]
    new = decompose(G, H, sh)
    eta = {k: G.mul[G.mul[h][k]][h] for k in H}
    rep = CheckReport("S_h twisted gyrotransversal")
    sset = set(sh)
    for x in ta.transversal[1:]:
        hx = G.mul[h][x]
        for k in H:
            rep.count("eta(k)^-1 (h x) k in S_h")
            if G.mul[G.mul[G.inv[eta[k]]][hx]][k] not in sset:
                rep.fail("eta(k)^-1 (h x) k in S_h", (x, k))
    rep.count("S_h inverse-closed")
    if not all(G.inv[s] in sset for s in sh):
        rep.fail("S_h inverse-closed", ())
    ncls = classify_transversal(new)
    rep.facts["classification"] = ncls.kind
    rep.count("eta admissible")
    if eta not in new.eta_candidates:
        rep.fail("eta admissible", ())
    rep.count("not a gyrotransversal")
    if ncls.gyrotransversal:
        rep.fail("not a gyrotransversal", ())
    return new, rep


def is_ar_loop(t: RightLoopTable) -> bool:
    """Every right inner mapping is an automorphism."""
    idx = inner_group(t)
    return all(is_automorphism(t, p) for p in idx.distinct_maps())
