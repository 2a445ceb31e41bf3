"""Twisted gyrotransversals and the group G_S S built from a twisted right gyrogroup.

The product on pairs ``ax`` (a in G_S, x in S) is

    ax . by = a eta(b) f(x.b, y) ((x.b) o y)   for x != e
    ae . by = ab y

where ``x.b`` is the right action ``b(x)``.  Conversely, a subgroup H with a
right transversal S of a finite group induces ``x y = g(x, y) (x o y)`` on S.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import LIMITS
from .errors import CapExceeded, InternalError, InvalidInput, PreconditionError
from .innermaps import sigma
from .permgroup import FiniteGroupTable, Perm, automorphisms, format_perm
from .report import CheckReport
from .rightloop import RightLoopTable, validate_table
from .twistedaut import TwistedGyroAnalysis, is_twisted_right_gyrogroup


@dataclass
class ExtensionGroup:
    base: TwistedGyroAnalysis
    gs_elements: tuple[Perm, ...]
    elements: tuple[tuple[int, int], ...]   # (index into gs_elements, x)
    table: FiniteGroupTable
    embed_h: tuple[int, ...]                # G_S index -> pair id
    embed_s: tuple[int, ...]                # x -> pair id
    eta_ids: dict[int, int] = field(default_factory=dict)  # eta on embedded G_S, by pair id

    @property
    def order(self) -> int:
        return self.table.order

    def pair_id(self, a: int, x: int) -> int:
        return a * self.base.loop.order + x


def build_extension(an: TwistedGyroAnalysis, cap: int | None = None) -> ExtensionGroup:
    """Construct G_S S for a twisted right gyrogroup and verify it is a group
    containing S as a twisted gyrotransversal that induces the original table."""
    if not an.is_trg:
        raise PreconditionError("not a twisted right gyrogroup: " + "; ".join(an.reasons))
    cap = LIMITS.extension if cap is None else cap
    t = an.loop
    n = t.order
    els = an.gs.elements
    k = len(els)
    m = k * n
    if m > cap:
        raise CapExceeded("extension group order", cap, m)
    gi = {p: i for i, p in enumerate(els)}
    prod = [[gi[a * b] for b in els] for a in els]
    eta = [gi[an.eta_on_gs[p]] for p in els]
    f = [[gi[p] for p in row] for row in an.idx.f]
    op = t.op
    pairs = tuple((a, x) for a in range(k) for x in range(n))
    mul = [[0] * m for _ in range(m)]
    for i, (a, x) in enumerate(pairs):
        row = mul[i]
        for j, (b, y) in enumerate(pairs):
            if x != 0:
                xb = els[b](x)
                c = prod[prod[a][eta[b]]][f[xb][y]]
                row[j] = c * n + op[xb][y]
            else:
                row[j] = prod[a][b] * n + y
    labels = [_pair_label(els[a], x, t) for a, x in pairs]
    try:
        table = FiniteGroupTable.from_mul(mul, labels=labels, verify=True, cap=max(cap, m))
    except InvalidInput as exc:
        raise InternalError(f"G_S S is not a group: {exc}") from exc
    ident = gi[Perm.identity(n)]
    ext = ExtensionGroup(an, els, pairs, table,
                         tuple(a * n for a in range(k)),
                         tuple(ident * n + x for x in range(n)))
    ext.eta_ids = {a * n: eta[a] * n for a in range(k)}
    _verify_extension(ext, prod, eta, f, ident)
    return ext


def _pair_label(a: Perm, x: int, t: RightLoopTable) -> str:
    # whitespace-free, so the group can be written as a table file
    return f"{format_perm(a, t.labels).replace(' ', ',')}*{t.labels[x]}"


def _verify_extension(ext: ExtensionGroup, prod, eta, f, ident) -> None:
    an, tab = ext.base, ext.table
    t = an.loop
    n = t.order
    els = ext.gs_elements
    gi = {p: i for i, p in enumerate(els)}
    mul = tab.mul
    if tab.id != ident * n:
        raise InternalError("identity of G_S S is not I e")
    inv_a = [gi[p.inverse()] for p in els]
    xinv = t.two_sided_inverse
    for a in range(len(els)):
        for x in range(n):
            pid = a * n + x
            if x == 0:
                expect = inv_a[a] * n
            else:
                ai = els[inv_a[a]]
                xp = xinv[x]
                # f(x', x)^-1 eta(a^-1) (x'.a^-1), with f(x', x) = I
                c = prod[gi[els[f[xp][x]].inverse()]][eta[inv_a[a]]]
                expect = c * n + ai(xp)
            if tab.inv[pid] != expect:
                raise InternalError(f"inverse formula fails at {tab.label(pid)}")
    for x in range(1, n):
        sx = ext.embed_s[x]
        if tab.inv[sx] != ext.embed_s[xinv[x]]:
            raise InternalError("x^-1 != x' in G_S S")
        for a, h in enumerate(els):
            lhs = mul[sx][ext.embed_h[a]]
            rhs = mul[ext.embed_h[eta[a]]][ext.embed_s[h(x)]]
            if lhs != rhs:
                raise InternalError("x h != eta(h) (x.h)")
    for x in range(n):
        for y in range(n):
            lhs = mul[ext.embed_s[x]][ext.embed_s[y]]
            rhs = mul[f[x][y] * n][ext.embed_s[t.op[x][y]]]
            if lhs != rhs:
                raise InternalError("x y != f(x, y) (x o y)")
    # both product cases are the single rule a sigma_x(b) f(x.b, y) ((x.b) o y)
    for i, (a, x) in enumerate(ext.elements):
        for j, (b, y) in enumerate(ext.elements):
            xb = els[b](x)
            c = prod[prod[a][gi[sigma(t, x, els[b])]]][f[xb][y]]
            if mul[i][j] != c * n + t.op[xb][y]:
                raise InternalError("product differs from the sigma_x form")


# ---------------------------------------------------------------------------
# subgroups with right transversals


@dataclass
class TransversalAnalysis:
    group: FiniteGroupTable
    subgroup: tuple[int, ...]
    transversal: tuple[int, ...]          # identity first; index i <-> induced element i
    coset_decomp: dict[int, tuple[int, int]]   # g -> (h, s) with g = h s
    induced_op: RightLoopTable
    cocycle: dict[tuple[int, int], int]   # (i, j) -> g(x_i, x_j) in H
    eta_candidates: list[dict[int, int]] | None = None

    def s_index(self, g: int) -> int:
        return self.transversal.index(g)

    def theta(self, i: int, h: int, eta: dict[int, int]) -> int:
        """x_i . h = eta(h)^-1 x_i h (an element of S), with e . h = e."""
        if i == 0:
            return 0
        G = self.group
        g = G.mul[G.mul[G.inv[eta[h]]][self.transversal[i]]][h]
        hh, s = self.coset_decomp[g]
        if hh != G.id:
            raise PreconditionError("eta(h)^-1 x h leaves the transversal")
        return self.s_index(s)


def _twisted_condition(G: FiniteGroupTable, H: Sequence[int], S: Sequence[int], sset: set[int],
                       eta: dict[int, int]) -> bool:
    for x in S[1:]:
        for h in H:
            if G.mul[G.mul[G.inv[eta[h]]][x]][h] not in sset:
                return False
    return True


def subgroup_automorphisms(G: FiniteGroupTable, H: Sequence[int], cap: int | None = None) -> list[dict[int, int]]:
    Hs = sorted(H)
    pos = {h: i for i, h in enumerate(Hs)}
    sub = FiniteGroupTable.from_mul([[pos[G.mul[a][b]] for b in Hs] for a in Hs], verify=False)
    return [{Hs[i]: Hs[v] for i, v in enumerate(img)} for img in automorphisms(sub, cap=cap)]


def decompose(group: FiniteGroupTable, H: Iterable[int], S: Iterable[int],
              find_eta: bool = True, cap: int | None = None) -> TransversalAnalysis:
    """Decompose ``group`` along the subgroup ``H`` and right transversal ``S``."""
    G = group
    Hs = tuple(sorted(set(H)))
    Sl = list(dict.fromkeys(S))
    if not G.is_subgroup(Hs):
        raise InvalidInput("H is not a subgroup")
    if G.id not in Sl:
        raise InvalidInput("the transversal must contain the identity")
    Sl.remove(G.id)
    St = (G.id, *Sl)
    decomp: dict[int, tuple[int, int]] = {}
    for h in Hs:
        for s in St:
            g = G.mul[h][s]
            if g in decomp:
                raise InvalidInput("S meets some right coset of H more than once")
            decomp[g] = (h, s)
    if len(decomp) != G.order:
        raise InvalidInput("S does not meet every right coset of H")
    sidx = {s: i for i, s in enumerate(St)}
    n = len(St)
    op = [[0] * n for _ in range(n)]
    cocycle = {}
    for i, x in enumerate(St):
        for j, y in enumerate(St):
            h, s = decomp[G.mul[x][y]]
            op[i][j] = sidx[s]
            cocycle[i, j] = h
    try:
        loop = validate_table(op, labels=[G.label(s) for s in St])
    except InvalidInput as exc:
        raise InternalError(f"induced operation is not a right loop: {exc}") from exc
    ta = TransversalAnalysis(G, Hs, St, decomp, loop, cocycle)
    if find_eta:
        cap = LIMITS.aut_search if cap is None else cap
        if len(Hs) <= cap:
            sset = set(St)
            ta.eta_candidates = [
                eta for eta in subgroup_automorphisms(G, Hs, cap)
                if all(eta[eta[h]] == h for h in Hs) and _twisted_condition(G, Hs, St, sset, eta)
            ]
    return ta


@dataclass
class Classification:
    inverse_closed: bool
    gyrotransversal: bool
    twisted_etas: list[dict[int, int]]
    holds_at_identity: list[bool]   # per twisted eta: condition also true at x = e
    kind: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "inverse_closed": self.inverse_closed,
                "gyrotransversal": self.gyrotransversal,
                "twisted_eta_count": len(self.twisted_etas),
                "holds_at_identity": self.holds_at_identity}


def classify_transversal(ta: TransversalAnalysis, cap: int | None = None) -> Classification:
    """Gyrotransversal (eta = identity works) versus twisted gyrotransversal
    (some involutory eta != identity works)."""
    G = ta.group
    if ta.eta_candidates is None:
        cap = LIMITS.aut_search if cap is None else cap
        raise CapExceeded("automorphism search on H", cap, len(ta.subgroup))
    sset = set(ta.transversal)
    inverse_closed = all(G.inv[x] in sset for x in ta.transversal)
    identity = {h: h for h in ta.subgroup}
    gyro = inverse_closed and identity in ta.eta_candidates
    twisted = [eta for eta in ta.eta_candidates if eta != identity] if inverse_closed else []
    at_e = [all(G.mul[G.inv[eta[h]]][h] in sset for h in ta.subgroup) for eta in twisted]
    if not inverse_closed:
        kind = "not inverse-closed"
    elif gyro and twisted:
        kind = "both"
    elif gyro:
        kind = "gyrotransversal"
    elif twisted:
        kind = "twisted-only"
    else:
        kind = "neither"
    return Classification(inverse_closed, gyro, twisted, at_e, kind)


def induce_trg(ta: TransversalAnalysis, eta: dict[int, int]) -> TwistedGyroAnalysis:
    """The twisted right gyrogroup induced on S, with the bridging identities
    between the group and the induced operation verified exhaustively."""
    G = ta.group
    H = ta.subgroup
    sset = set(ta.transversal)
    if ta.eta_candidates is not None:
        if eta not in ta.eta_candidates:
            raise PreconditionError("eta is not an admissible involutory automorphism of H")
    elif not (all(eta[eta[h]] == h for h in H) and _twisted_condition(G, H, ta.transversal, sset, eta)):
        raise PreconditionError("eta is not an admissible involutory automorphism of H")
    if not all(G.inv[x] in sset for x in ta.transversal):
        raise PreconditionError("transversal is not inverse-closed")
    t = ta.induced_op
    n = t.order
    op = t.op
    inv = t.two_sided_inverse
    if inv is None:
        raise InternalError("induced loop of an inverse-closed transversal lacks unique inverses")
    theta = {(i, h): ta.theta(i, h, eta) for i in range(n) for h in H}
    g = ta.cocycle

    def tw(x, k):
        # the H-part of x k, i.e. x k = tw(x, k) (x.k): eta(k) off e, k at e
        return k if x == 0 else eta[k]

    for h in H:
        eh = eta[h]
        for x in range(n):
            xe = theta[x, eh]
            for y in range(1, n):
                yh = theta[y, h]
                # x (y h) = (x y) h read off in H
                if G.mul[tw(x, eh)][g[xe, yh]] != G.mul[g[x, y]][tw(op[x][y], h)]:
                    raise InternalError("cocycle identity fails at "
                                        f"x={t.labels[x]}, y={t.labels[y]}, h={G.label(h)}")
                # h g(x.eta(h), y.h) = g(x, y) eta(h) needs x != e and x o y != e
                if x != 0 and op[x][y] != 0 and G.mul[h][g[xe, yh]] != G.mul[g[x, y]][eh]:
                    raise InternalError("h g(x.eta(h), y.h) != g(x, y) eta(h)")
                if op[xe][yh] != theta[op[x][y], h]:
                    raise InternalError("x.eta(h) o y.h != (x o y).h")
            if x != 0 and xe != inv[theta[inv[x], h]]:
                raise InternalError("x.eta(h) != (x'.h)'")
    an = is_twisted_right_gyrogroup(t)
    for x in range(n):
        for y in range(n):
            f = an.idx.f[x][y]
            if any(theta[z, g[x, y]] != f(z) for z in range(n)):
                raise InternalError("action of g(x, y) on S differs from f(x, y)")
    if not an.is_trg:
        raise InternalError("induced loop is not a twisted right gyrogroup: " + "; ".join(an.reasons))
    return an


def round_trip(an: TwistedGyroAnalysis) -> tuple[ExtensionGroup, TransversalAnalysis, TwistedGyroAnalysis]:
    """build_extension -> decompose -> induce_trg."""
    ext = build_extension(an)
    ta = decompose(ext.table, ext.embed_h, ext.embed_s)
    back = induce_trg(ta, ext.eta_ids)
    return ext, ta, back


def check_round_trip(an: TwistedGyroAnalysis) -> CheckReport:
    rep = CheckReport("representation round trip")
    ext, ta, back = round_trip(an)
    rep.facts["extension_order"] = ext.order
    cls = classify_transversal(ta)
    rep.facts["classification"] = cls.kind
    rep.count("embedded S is a twisted gyrotransversal")
    if ext.eta_ids not in ta.eta_candidates or not cls.inverse_closed:
        rep.fail("embedded S is a twisted gyrotransversal", ())
    rep.count("induced table identical")
    if back.loop.op != an.loop.op:
        rep.fail("induced table identical", ())
    return rep
