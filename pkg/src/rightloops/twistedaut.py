"""Twisted automorphisms, Aut and TAut of a right loop, twisted right gyrogroups
and the involution eta.

A bijection h is a twisted automorphism when ``h(x o y) = h(x')' o h(y)`` for
all x and all y != e.  For a twisted right gyrogroup, eta is given on all of
Sym(S \\ {e}) by ``eta(h)(x) = h(x')'``; on G_S it is an involutory
automorphism satisfying ``h(x o y) = eta(h)(x) o h(y)`` for y != e.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

from .config import LIMITS
from .errors import CapExceeded, InternalError, PreconditionError
from .innermaps import InnerMapIndex, inner_group, sigma
from .permgroup import FiniteGroupTable, Perm, PermGroupData, close, display_key, format_perm
from .report import CheckReport
from .rightloop import RightLoopTable, from_group, has_aip, has_left_alternative


def _require_inverses(t: RightLoopTable) -> tuple[int, ...]:
    if t.two_sided_inverse is None:
        raise PreconditionError("twisted automorphisms need a right loop with unique inverses")
    return t.two_sided_inverse


def _is_taut_images(op, inv, h, n) -> bool:
    for x in range(n):
        hx = inv[h[inv[x]]]
        row = op[x]
        orow = op[hx]
        for y in range(1, n):
            if h[row[y]] != orow[h[y]]:
                return False
    return True


def _is_aut_images(op, h, n) -> bool:
    for x in range(n):
        row = op[x]
        orow = op[h[x]]
        for y in range(n):
            if h[row[y]] != orow[h[y]]:
                return False
    return True


def is_twisted_automorphism(t: RightLoopTable, h: Perm) -> bool:
    inv = _require_inverses(t)
    if h.degree != t.order:
        raise PreconditionError("degree mismatch")
    return _is_taut_images(t.op, inv, h.images, t.order)


def is_automorphism(t: RightLoopTable, h: Perm) -> bool:
    return _is_aut_images(t.op, h.images, t.order)


def _check_cap(t: RightLoopTable, cap):
    cap = LIMITS.taut if cap is None else cap
    size = math.factorial(t.order - 1)
    if size > cap:
        raise CapExceeded("brute-force search over Sym(S\\{e})", cap, size)


def _fixing_identity(n):
    for rest in permutations(range(1, n)):
        yield (0,) + rest


def twisted_automorphisms(t: RightLoopTable, fix_identity: bool = True, cap=None) -> list[Perm]:
    """All twisted automorphisms by brute force.

    With ``fix_identity=False`` every permutation of S is tested, which is how
    the fact that twisted automorphisms fix e is checked rather than assumed.
    """
    inv = _require_inverses(t)
    _check_cap(t, cap)
    n = t.order
    space = _fixing_identity(n) if fix_identity else permutations(range(n))
    return [Perm(h, check=False) for h in space if _is_taut_images(t.op, inv, h, n)]


def taut_group(t: RightLoopTable, cap=None, allow_incomplete: bool = False) -> PermGroupData:
    """TAut(S, o).  Beyond the cap, ``allow_incomplete`` returns the subgroup
    generated by the inner mappings that are twisted automorphisms, marked
    ``complete=False``."""
    inv = _require_inverses(t)
    try:
        elems = twisted_automorphisms(t, cap=cap)
    except CapExceeded:
        if not allow_incomplete:
            raise
        idx = inner_group(t)
        gens = [p for p in idx.distinct_maps() if _is_taut_images(t.op, inv, p.images, t.order)]
        g = close(gens, degree=t.order)
        return PermGroupData(g.degree, g.generators, g.elements, complete=False)
    elems = tuple(sorted(elems))
    return PermGroupData(t.order, elems, elems)


def aut_group(t: RightLoopTable, cap=None) -> PermGroupData:
    _check_cap(t, cap)
    n = t.order
    elems = tuple(Perm(h, check=False) for h in _fixing_identity(n) if _is_aut_images(t.op, h, n))
    return PermGroupData(n, elems, elems)


# ---------------------------------------------------------------------------
# twisted right gyrogroups


def eta_of(t: RightLoopTable, h: Perm) -> Perm:
    """eta(h)(x) = h(x')' ; defined for any h on a loop with unique inverses."""
    inv = _require_inverses(t)
    hi = h.images
    return Perm([inv[hi[inv[x]]] for x in range(t.order)], check=False)


@dataclass
class TwistedGyroAnalysis:
    loop: RightLoopTable
    idx: InnerMapIndex
    is_trg: bool
    reasons: list[str] = field(default_factory=list)
    witness: tuple | None = None
    eta_on_gs: dict[Perm, Perm] | None = None

    @property
    def gs(self) -> PermGroupData:
        return self.idx.gs

    def eta(self, h: Perm) -> Perm:
        return eta_of(self.loop, h)

    def theta(self, x: int, h: Perm) -> int:
        # right action x.h = h(x)
        return h(x)

    def eta_pairs(self) -> list[tuple[Perm, Perm]]:
        """The transposed pairs of eta on G_S, each pair and the list in canonical order."""
        if self.eta_on_gs is None:
            raise PreconditionError("eta on G_S exists only for twisted right gyrogroups")
        pairs = []
        for h in self.gs.elements:
            k = self.eta_on_gs[h]
            if display_key(h) < display_key(k):
                pairs.append((h, k))
        return sorted(pairs, key=lambda pr: display_key(pr[0]))

    def format_eta(self, compact: bool = True) -> str:
        labels = self.loop.labels
        return "".join(f"({format_perm(a, labels, compact)}, {format_perm(b, labels, compact)})"
                       for a, b in self.eta_pairs()) or "I"


def is_twisted_right_gyrogroup(t: RightLoopTable, idx: InnerMapIndex | None = None) -> TwistedGyroAnalysis:
    """Decide the two defining conditions and, when they hold, build eta on G_S
    and verify that it is an involutory automorphism of G_S with
    ``(x o y).h = x.eta(h) o y.h`` for y != e."""
    idx = idx if idx is not None else inner_group(t)
    an = TwistedGyroAnalysis(t, idx, False)
    n = t.order
    for y in range(n):
        if not idx.f[t.left_inverse[y]][y].is_identity():
            an.reasons.append(f"f({t.labels[t.left_inverse[y]]}, {t.labels[y]}) != I")
            an.witness = ("left-inverse", y)
            return an
    inv = t.two_sided_inverse
    if inv is None:
        raise InternalError("f(y', y) = I for all y but inverses are not two-sided")
    for y in range(n):
        for z in range(n):
            if not _is_taut_images(t.op, inv, idx.f[y][z].images, n):
                an.reasons.append(f"f({t.labels[y]}, {t.labels[z]}) is not a twisted automorphism")
                an.witness = ("inner-map", y, z)
                return an
    an.is_trg = True
    an.eta_on_gs = {h: eta_of(t, h) for h in idx.gs.elements}
    _verify_eta(an)
    return an


def _verify_eta(an: TwistedGyroAnalysis) -> None:
    t, gs, eta = an.loop, an.gs, an.eta_on_gs
    for h, k in eta.items():
        if k not in gs:
            raise InternalError(f"eta({format_perm(h, t.labels)}) leaves G_S")
        if eta[k] != h:
            raise InternalError(f"eta is not involutory at {format_perm(h, t.labels)}")
    els = gs.elements
    for h in els:
        for k in els:
            if eta[h * k] != eta[h] * eta[k]:
                raise InternalError("eta is not a homomorphism of G_S")
    op = t.op
    for h in els:
        hi, ei = h.images, eta[h].images
        for x in range(t.order):
            for y in range(1, t.order):
                if hi[op[x][y]] != op[ei[x]][hi[y]]:
                    raise InternalError("(x o y).h != x.eta(h) o y.h")


# ---------------------------------------------------------------------------
# theorem checks


def check_group_taut_collapse(gt: FiniteGroupTable, cap=None) -> bool:
    """TAut = Aut for a group."""
    t = from_group(gt)
    return set(twisted_automorphisms(t, cap=cap)) == set(aut_group(t, cap=cap).elements)


def check_aip_la_collapse(t: RightLoopTable, cap=None) -> bool:
    """TAut = Aut for a right loop with the AIP and the left alternative law."""
    _require_inverses(t)
    if not has_aip(t) or not has_left_alternative(t):
        raise PreconditionError("needs the automorphic inverse property and the left alternative law")
    return set(twisted_automorphisms(t, cap=cap)) == set(aut_group(t, cap=cap).elements)


def check_odd_abelian(an: TwistedGyroAnalysis, cap=None) -> CheckReport:
    """When G_S meets Aut(S, o) trivially: G_S is abelian of odd order and
    ``(x o y).h = x.h^-1 o y.h``."""
    rep = CheckReport("odd abelian G_S")
    if not an.is_trg:
        raise PreconditionError("not a twisted right gyrogroup")
    t, gs = an.loop, an.gs
    meet = [h for h in gs.elements if not h.is_identity() and is_automorphism(t, h)]
    rep.facts["gs_order"] = gs.order
    if meet:
        rep.applicable = False
        rep.note = f"hypothesis not met: {format_perm(meet[0], t.labels)} lies in G_S and Aut"
        return rep
    rep.count("odd order")
    if gs.order % 2 == 0:
        rep.fail("odd order", (gs.order,))
    rep.count("abelian")
    if not gs.is_abelian():
        rep.fail("abelian", ())
    op = t.op
    for h in gs.elements:
        hi, ii = h.images, h.inverse().images
        for x in range(t.order):
            for y in range(1, t.order):
                rep.count("(x o y).h = x.h^-1 o y.h")
                if hi[op[x][y]] != op[ii[x]][hi[y]]:
                    rep.fail("(x o y).h = x.h^-1 o y.h", (h, x, y))
    return rep


def check_trg_theorems(an: TwistedGyroAnalysis, taut: PermGroupData | None = None) -> CheckReport:
    """For a twisted right gyrogroup: eta is an involutory automorphism of G_S,
    G_S <= TAut, the formula ``eta(f(y,z)) = f(y'.f(y,z), y o z)^-1`` for y, z != e,
    ``h in Aut <=> eta(h) = h`` on G_S, and sigma_y = eta for y != e."""
    if not an.is_trg:
        raise PreconditionError("not a twisted right gyrogroup")
    t, idx, eta = an.loop, an.idx, an.eta_on_gs
    rep = CheckReport("twisted right gyrogroup theorems")
    gs = an.gs
    inv = t.two_sided_inverse
    rep.count("eta involutory automorphism", len(gs.elements))
    try:
        _verify_eta(an)
    except InternalError as exc:
        rep.fail("eta involutory automorphism", (), str(exc))
    taut_set = set(taut.elements) if taut is not None else None
    for h in gs.elements:
        rep.count("G_S <= TAut")
        ok = h in taut_set if taut_set is not None else is_twisted_automorphism(t, h)
        if not ok:
            rep.fail("G_S <= TAut", (h,))
        rep.count("h in Aut <=> eta(h) = h")
        if is_automorphism(t, h) != (eta[h] == h):
            rep.fail("h in Aut <=> eta(h) = h", (h,))
    n = t.order
    for y in range(1, n):
        for z in range(1, n):
            f = idx.f[y][z]
            rep.count("eta(f(y,z)) = f(y'.f(y,z), y o z)^-1")
            if eta[f] != idx.f[f(inv[y])][t.op[y][z]].inverse():
                rep.fail("eta(f(y,z)) = f(y'.f(y,z), y o z)^-1", (y, z))
    for y in range(1, n):
        for h in gs.elements:
            rep.count("sigma_y = eta")
            if sigma(t, y, h) != eta[h]:
                rep.fail("sigma_y = eta", (y, h))
    return rep
