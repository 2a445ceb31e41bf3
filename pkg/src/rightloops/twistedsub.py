"""Twisted subgroups, twisted gyrogroups and their equivalence through G_S S."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInput, PreconditionError
from .extension import build_extension
from .permgroup import FiniteGroupTable
from .report import CheckReport, Verdict
from .twistedaut import TwistedGyroAnalysis


@dataclass(frozen=True)
class SubsetInGroup:
    group: FiniteGroupTable
    subset: frozenset[int]

    @classmethod
    def of(cls, group: FiniteGroupTable, subset: Iterable[int]) -> "SubsetInGroup":
        s = frozenset(subset)
        if not all(0 <= x < group.order for x in s):
            raise InvalidInput("subset element out of range")
        return cls(group, s)


def is_twisted_subgroup(s: SubsetInGroup) -> Verdict:
    """1 in S and xyx in S for all x, y in S."""
    G = s.group
    if G.id not in s.subset:
        return Verdict(False, (), "identity not in subset")
    for x in sorted(s.subset):
        for y in sorted(s.subset):
            if G.mul[G.mul[x][y]][x] not in s.subset:
                return Verdict(False, (x, y), f"{G.label(x)} {G.label(y)} {G.label(x)} not in subset")
    return Verdict(True)


def _require_trg(an: TwistedGyroAnalysis) -> None:
    if not an.is_trg:
        raise PreconditionError("not a twisted right gyrogroup")


def is_twisted_gyrogroup(an: TwistedGyroAnalysis) -> Verdict:
    """The right loop property f(x, y) = f(x, x o y)."""
    _require_trg(an)
    t, f = an.loop, an.idx.f
    for x in range(t.order):
        for y in range(t.order):
            if f[x][y] != f[x][t.op[x][y]]:
                return Verdict(False, (x, y), f"f({t.labels[x]}, {t.labels[y]}) != f(x, x o y)")
    return Verdict(True)


def check_tgg_identities(an: TwistedGyroAnalysis) -> CheckReport:
    """The five inversion identities of a twisted gyrogroup plus the corollary
    that every f(x, x) has order at most 2.  Violations would be bugs."""
    if not is_twisted_gyrogroup(an):
        raise PreconditionError("not a twisted gyrogroup")
    t, f, eta = an.loop, an.idx.f, an.eta_on_gs
    op, inv = t.op, t.two_sided_inverse
    rep = CheckReport("twisted gyrogroup identities")
    names = ("f(x,y)^-1 = f(x o y, y')", "f(x,y)^-1 = f(x o y, x)", "f(x,y)^-1 = eta(f(y', x'))",
             "f(x,y) = eta(f(y' o x', y'))", "f(x,y)^-1 = f(y, x)")
    for x in range(t.order):
        for y in range(t.order):
            fxy = f[x][y]
            fi = fxy.inverse()
            xy = op[x][y]
            xp, yp = inv[x], inv[y]
            checks = (fi == f[xy][yp], fi == f[xy][x], fi == eta[f[yp][xp]],
                      fxy == eta[f[op[yp][xp]][yp]], fi == f[y][x])
            for name, ok in zip(names, checks):
                rep.count(name)
                if not ok:
                    rep.fail(name, (x, y))
        rep.count("f(x,x)^2 = I")
        if not (f[x][x] * f[x][x]).is_identity():
            rep.fail("f(x,x)^2 = I", (x,))
    return rep


def check_equivalence_theorem(an: TwistedGyroAnalysis) -> CheckReport:
    """Twisted gyrogroup <=> (S twisted subgroup of G_S S and f(x,y)^-1 = f(y,x))."""
    _require_trg(an)
    t, f = an.loop, an.idx.f
    ext = build_extension(an)
    G = ext.table
    left = is_twisted_gyrogroup(an)
    sub = is_twisted_subgroup(SubsetInGroup.of(G, ext.embed_s))
    swap = all(f[x][y].inverse() == f[y][x] for x in range(t.order) for y in range(t.order))
    right = bool(sub) and swap
    rep = CheckReport("twisted gyrogroup equivalence")
    rep.facts.update(twisted_gyrogroup=bool(left), twisted_subgroup=bool(sub),
                     inverse_swap=swap, extension_order=G.order)
    rep.count("L <=> R")
    if bool(left) != right:
        rep.fail("L <=> R", (), f"left={bool(left)}, right={right}")
    sset = set(ext.embed_s)
    rep.count("S inverse-closed in G_S S")
    if not all(G.inv[s] in sset for s in ext.embed_s):
        rep.fail("S inverse-closed in G_S S", ())
    if left:
        es = ext.embed_s
        for x in range(t.order):
            for y in range(t.order):
                rep.count("x y x = (x o y) o x")
                if G.mul[G.mul[es[x]][es[y]]][es[x]] != es[t.op[t.op[x][y]][x]]:
                    rep.fail("x y x = (x o y) o x", (x, y))
    return rep
