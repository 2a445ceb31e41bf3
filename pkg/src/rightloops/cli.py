"""Command-line front end.

Every subcommand builds one JSON-serialisable dict; ``--json`` prints it and
the default text mode renders the same dict line by line.

Exit codes: 0 success, 1 property false, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import enumeration
from .config import LIMITS
from .constructions import deform_rho, projection_loop, s_h_transversal
from .errors import CapExceeded, InternalError, InvalidInput, PreconditionError
from .extension import build_extension, classify_transversal, decompose, induce_trg
from .fileformats import format_group, format_loop, read_group, read_loop
from .innermaps import check_prop2_identities, check_sigma_automorphism, inner_group, sigma
from .permgroup import (
    format_perm,
    format_perm_set,
    group_table,
    identify_group,
    is_transitive_on,
    parse_perm,
)
from .rightloop import has_aip, has_left_alternative, is_associative, is_loop
from .twistedaut import aut_group, is_twisted_right_gyrogroup, taut_group
from .twistedsub import SubsetInGroup, check_equivalence_theorem, is_twisted_subgroup

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
_LIST_SEP = re.compile(r",(?![^()]*\))")


class Result:
    def __init__(self, data: dict, lines: list[str], code: int = EXIT_OK):
        self.data, self.lines, self.code = data, lines, code


def _labels_arg(values: list[str]) -> list[str]:
    # accept "1 2 3", "1,2,3" or a mix; commas inside parentheses belong to a label
    return [tok for v in values for part in _LIST_SEP.split(v) for tok in part.split()]


def _group_ids(g, labels: list[str]) -> list[int]:
    index = {g.label(i): i for i in range(g.order)}
    try:
        return [index[x] for x in labels]
    except KeyError as exc:
        raise InvalidInput(f"unknown group element {exc.args[0]!r}") from None


def _fmt_eta(eta: dict[int, int], g) -> str:
    pairs = [(h, k) for h, k in sorted(eta.items()) if h < k]
    return "".join(f"({g.label(h)}, {g.label(k)})" for h, k in pairs) or "I"


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> Result:
    t = read_loop(args.file)
    data = {"valid": True, "order": t.order, "labels": list(t.labels),
            "identity": t.labels[0], "loop": is_loop(t)}
    lines = [f"valid right loop of order {t.order}", f"identity: {t.labels[0]}",
             f"loop: {'yes' if data['loop'] else 'no'}"]
    return Result(data, lines)


def _gs_summary(t, idx) -> dict:
    gs = idx.gs
    gens = [p for p in idx.distinct_maps() if not p.is_identity()]
    gt = group_table(gs)
    small = [gs.elements[i] for i in gt.generating_set()]
    return {
        "order": gs.order,
        "generators": [format_perm(p, t.labels) for p in small],
        "inner_maps": [format_perm(p, t.labels) for p in gens],
        "type": identify_group(gt),
        "abelian": gs.is_abelian(),
        "transitive_on_nonidentity": is_transitive_on(gs, range(1, t.order)) if t.order > 1 else True,
    }


def cmd_analyze(args) -> Result:
    t = read_loop(args.file)
    L = t.labels
    n = t.order
    idx = inner_group(t)
    data: dict = {"order": n, "labels": list(L), "identity": L[0]}
    lines = [f"right loop of order {n}, identity {L[0]}"]

    inv = t.two_sided_inverse
    data["unique_inverses"] = inv is not None
    data["left_inverses"] = {L[x]: L[t.left_inverse[x]] for x in range(n)}
    if inv is not None:
        lines.append("inverses: " + " ".join(f"{L[x]}'={L[inv[x]]}" for x in range(n)))
    else:
        lines.append("inverses: not unique; left inverses "
                     + " ".join(f"{L[x]}'={L[t.left_inverse[x]]}" for x in range(n)))
    data["loop"] = is_loop(t)
    data["group"] = is_associative(t)
    lines.append(f"loop: {'yes' if data['loop'] else 'no'}")
    lines.append(f"group: {'yes' if data['group'] else 'no'}")

    f_tab = {f"{L[y]},{L[z]}": format_perm(idx.f[y][z], L) for y in range(1, n) for z in range(1, n)}
    data["f"] = f_tab
    lines.append("inner mappings f(y,z) for y, z != e:")
    for key, val in f_tab.items():
        lines.append(f"  f({key}) = {val}")

    gs = _gs_summary(t, idx)
    data["gs"] = gs
    lines.append(f"G_S order {gs['order']}")
    lines.append("G_S generators: " + ", ".join(gs["generators"]))
    lines.append(f"G_S type: {gs['type']}")
    lines.append(f"G_S transitive on S\\{{e}}: {'yes' if gs['transitive_on_nonidentity'] else 'no'}")

    if inv is not None:
        aut = aut_group(t)
        data["aut"] = {"order": aut.order, "elements": [format_perm(p, L) for p in aut.elements]}
        lines.append(f"Aut order {aut.order}")
        lines.append("Aut = " + format_perm_set(aut.elements, L))
        taut = taut_group(t, allow_incomplete=True)
        data["taut"] = {"order": taut.order, "complete": taut.complete, "type": identify_group(taut)}
        bound = "" if taut.complete else " (lower bound: search cap exceeded)"
        lines.append(f"TAut order {taut.order}{bound}")
        lines.append(f"TAut type: {data['taut']['type']}")
        data["aip"] = has_aip(t)
        data["left_alternative"] = has_left_alternative(t)
        lines.append(f"automorphic inverse property: {'yes' if data['aip'] else 'no'}")
        lines.append(f"left alternative: {'yes' if data['left_alternative'] else 'no'}")
    else:
        data["aut"] = data["taut"] = None
        lines.append("Aut, TAut: not defined without unique inverses")

    sig = {L[y]: check_sigma_automorphism(idx, y).holds for y in range(n)}
    data["sigma_automorphism"] = sig
    lines.append("sigma_y automorphism of G_S: "
                 + " ".join(f"{k}:{'yes' if v else 'no'}" for k, v in sig.items()))

    an = is_twisted_right_gyrogroup(t, idx)
    data["trg"] = an.is_trg
    data["trg_reasons"] = list(an.reasons)
    if an.is_trg:
        data["eta"] = an.format_eta(compact=True)
        lines.append("twisted right gyrogroup: yes")
        lines.append("eta = " + data["eta"])
    else:
        data["eta"] = None
        lines.append("twisted right gyrogroup: no (" + "; ".join(an.reasons) + ")")

    rep = check_prop2_identities(idx)
    data["identities"] = rep.to_dict()
    lines.append(f"inner-mapping identities (i)-(iv): {'hold' if rep.holds else 'FAIL'}")
    for v in rep.violations:
        lines.append(f"  violation {v.identity}: {v.detail}")
    return Result(data, lines, EXIT_OK if rep.holds else EXIT_FALSE)


def cmd_inner(args) -> Result:
    t = read_loop(args.file)
    y, z = t.index(args.y), t.index(args.z)
    p = inner_group(t).f[y][z]
    text = format_perm(p, t.labels)
    return Result({"y": args.y, "z": args.z, "f": text}, [f"f({args.y},{args.z}) = {text}"])


def cmd_sigma(args) -> Result:
    t = read_loop(args.file)
    y = t.index(args.y)
    h = parse_perm(args.perm, t.labels)
    try:
        s = sigma(t, y, h)
    except PreconditionError as exc:
        raise InvalidInput(str(exc)) from None
    h_text, s_text = format_perm(h, t.labels), format_perm(s, t.labels)
    return Result({"y": args.y, "h": h_text, "sigma": s_text},
                  [f"sigma_{args.y}({h_text}) = {s_text}"])


def cmd_eta(args) -> Result:
    t = read_loop(args.file)
    an = is_twisted_right_gyrogroup(t)
    if not an.is_trg:
        return Result({"trg": False, "reasons": an.reasons, "eta": None},
                      ["not a twisted right gyrogroup: " + "; ".join(an.reasons)], EXIT_FALSE)
    pairs = [[format_perm(a, t.labels), format_perm(b, t.labels)] for a, b in an.eta_pairs()]
    text = an.format_eta(compact=True)
    return Result({"trg": True, "eta": text, "pairs": pairs}, [f"eta = {text}"])


def cmd_extend(args) -> Result:
    t = read_loop(args.file)
    an = is_twisted_right_gyrogroup(t)
    if not an.is_trg:
        raise InvalidInput("not a twisted right gyrogroup: " + "; ".join(an.reasons))
    ext = build_extension(an)
    G = ext.table
    text = format_group(G)
    data = {"order": ext.order, "gs_order": len(ext.gs_elements), "verified": True,
            "embedded_s": [G.label(i) for i in ext.embed_s], "group_file": text}
    lines = [f"# G_S S of order {ext.order} (G_S order {len(ext.gs_elements)}), verified",
             "# embedded S: " + " ".join(data["embedded_s"])] + text.rstrip("\n").split("\n")
    return Result(data, lines)


def cmd_transversal(args) -> Result:
    G = read_group(args.file)
    H = _group_ids(G, _labels_arg(args.subgroup))
    S = _group_ids(G, _labels_arg(args.transversal))
    ta = decompose(G, H, S)
    cls = classify_transversal(ta)
    data = {"group_order": G.order, "subgroup_order": len(ta.subgroup),
            "classification": cls.to_dict(),
            "twisted_etas": [_fmt_eta(e, G) for e in cls.twisted_etas],
            "induced_table": format_loop(ta.induced_op)}
    lines = [f"group order {G.order}, subgroup order {len(ta.subgroup)}",
             f"classification: {cls.kind}"]
    for e, at_e in zip(cls.twisted_etas, cls.holds_at_identity):
        lines.append(f"  twisted eta {_fmt_eta(e, G)}"
                     + ("" if at_e else " (condition fails at x = e)"))
    etas = ([{h: h for h in ta.subgroup}] if cls.gyrotransversal else []) + list(cls.twisted_etas)
    data["induced_trg"] = None
    if etas:
        an = induce_trg(ta, etas[0])
        data["induced_trg"] = an.is_trg
        lines.append(f"induced twisted right gyrogroup: {'yes' if an.is_trg else 'no'}")
    lines.append("induced table:")
    lines += data["induced_table"].rstrip("\n").split("\n")
    return Result(data, lines)


def cmd_twisted_subgroup(args) -> Result:
    G = read_group(args.file)
    sub = _group_ids(G, _labels_arg(args.subset))
    v = is_twisted_subgroup(SubsetInGroup.of(G, sub))
    data = {"twisted_subgroup": v.holds, "reason": v.reason,
            "witness": [G.label(x) for x in v.witness] if v.witness else None}
    line = "twisted subgroup: yes" if v else f"twisted subgroup: no ({v.reason})"
    return Result(data, [line], EXIT_OK if v else EXIT_FALSE)


def cmd_equivalence(args) -> Result:
    t = read_loop(args.file)
    an = is_twisted_right_gyrogroup(t)
    if not an.is_trg:
        raise InvalidInput("not a twisted right gyrogroup: " + "; ".join(an.reasons))
    rep = check_equivalence_theorem(an)
    fx = rep.facts
    lines = [f"twisted gyrogroup: {'yes' if fx['twisted_gyrogroup'] else 'no'}",
             f"S twisted subgroup of G_S S: {'yes' if fx['twisted_subgroup'] else 'no'}",
             f"f(x,y)^-1 = f(y,x): {'yes' if fx['inverse_swap'] else 'no'}",
             f"G_S S order {fx['extension_order']}",
             f"equivalence: {'holds' if rep.holds else 'FAILS'}"]
    return Result(rep.to_dict(), lines, EXIT_OK if rep.holds else EXIT_FALSE)


def cmd_deform(args) -> Result:
    t = read_loop(args.file)
    rho = parse_perm(args.rho, t.labels)
    try:
        d = deform_rho(t, rho)
    except PreconditionError as exc:
        raise InvalidInput(str(exc)) from None
    L = d.labels
    aut, taut = aut_group(d), taut_group(d)
    data = {"rho": format_perm(rho, L), "table": format_loop(d),
            "aut": {"order": aut.order, "elements": [format_perm(p, L) for p in aut.elements]},
            "taut": {"order": taut.order, "type": identify_group(taut)}}
    lines = [f"# deformation by rho = {data['rho']}",
             f"# Aut order {aut.order}: " + format_perm_set(aut.elements, L),
             f"# TAut order {taut.order} ({data['taut']['type']})"]
    lines += format_loop(d).rstrip("\n").split("\n")
    return Result(data, lines)


def cmd_project(args) -> Result:
    t = projection_loop(args.n)
    text = format_loop(t)
    return Result({"order": t.order, "table": text}, text.rstrip("\n").split("\n"))


def cmd_sh(args) -> Result:
    G = read_group(args.file)
    H = _group_ids(G, _labels_arg(args.subgroup))
    S = _group_ids(G, _labels_arg(args.transversal))
    (h,) = _group_ids(G, [args.h])
    ta = decompose(G, H, S)
    try:
        new, rep = s_h_transversal(ta, h)
    except PreconditionError as exc:
        raise InvalidInput(str(exc)) from None
    data = rep.to_dict()
    data["s_h"] = [G.label(x) for x in new.transversal]
    data["induced_table"] = format_loop(new.induced_op)
    lines = ["S_h = {" + ",".join(data["s_h"]) + "}",
             f"classification: {rep.facts['classification']}",
             f"twisted gyrotransversal checks: {'hold' if rep.holds else 'FAIL'}"]
    lines += [f"  violation {v.identity}" for v in rep.violations]
    lines.append("induced table:")
    lines += data["induced_table"].rstrip("\n").split("\n")
    return Result(data, lines, EXIT_OK if rep.holds else EXIT_FALSE)


def cmd_enumerate(args) -> Result:
    n = args.n
    filters = _labels_arg(args.filter) if args.filter else []
    if args.census:
        tables = enumeration.enumerate_right_loops(n, filters) if filters else None
        c = enumeration.census(n, tables=tables)
        data = c.to_dict()
        data["filters"] = filters
        lines = [f"order {n}" + (f", filters: {', '.join(filters)}" if filters else ""),
                 f"total right loops: {c.total}"]
        for p in enumeration.PREDICATES:
            lines.append(f"  {p}: {c.predicate_counts[p]}")
        lines.append("classes (true predicates: count):")
        for row in data["classes"]:
            lines.append(f"  {','.join(row['predicates']) or '-'}: {row['count']}")
        if args.up_to_iso:
            classes = enumeration.isomorphism_classes(n)
            data["isomorphism_classes"] = len(classes)
            lines.append(f"isomorphism classes (relabelings fixing e): {len(classes)}")
        return Result(data, lines)
    if args.up_to_iso:
        reps = [t for t, _ in enumeration.isomorphism_classes(n)]
        if filters:
            reps = [t for t in reps if all(enumeration.predicates(t)[f] for f in filters)]
        tables = reps
    else:
        tables = list(enumeration.enumerate_right_loops(n, filters))
    data = {"order": n, "filters": filters, "count": len(tables),
            "tables": [[list(r) for r in t.op] for t in tables]}
    lines = [f"# {len(tables)} right loops of order {n}"]
    for t in tables:
        lines.append(" ".join("".join(str(v) for v in r) for r in t.op))
    return Result(data, lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rightloops", description="Analyse finite right loops given as Cayley tables.")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--cap", type=int, default=None, help="override the enumeration order cap")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the right loop axioms").add_argument("file")
    add("analyze", cmd_analyze, "full report for a right loop").add_argument("file")
    sp = add("inner", cmd_inner, "one inner mapping f(y,z)")
    sp.add_argument("file"); sp.add_argument("y"); sp.add_argument("z")
    sp = add("sigma", cmd_sigma, "sigma_y(h) for a permutation h fixing e")
    sp.add_argument("file"); sp.add_argument("y"); sp.add_argument("perm")
    add("eta", cmd_eta, "eta pairing of a twisted right gyrogroup").add_argument("file")
    add("extend", cmd_extend, "build G_S S and print it as a group file").add_argument("file")
    sp = add("transversal", cmd_transversal, "decompose a group along a subgroup and transversal")
    sp.add_argument("file")
    sp.add_argument("--subgroup", nargs="+", required=True)
    sp.add_argument("--transversal", nargs="+", required=True)
    sp = add("twisted-subgroup", cmd_twisted_subgroup, "test closure under xyx")
    sp.add_argument("file"); sp.add_argument("--subset", nargs="+", required=True)
    add("equivalence", cmd_equivalence, "twisted gyrogroup vs twisted subgroup check").add_argument("file")
    sp = add("deform", cmd_deform, "rho-deformation of a right gyrogroup")
    sp.add_argument("file"); sp.add_argument("--rho", required=True)
    sp = add("project", cmd_project, "projection right loop of order n")
    sp.add_argument("n", type=int)
    sp = add("sh", cmd_sh, "the transversal S_h for an involution h")
    sp.add_argument("file")
    sp.add_argument("--subgroup", nargs="+", required=True)
    sp.add_argument("--transversal", nargs="+", required=True)
    sp.add_argument("--h", required=True)
    sp = add("enumerate", cmd_enumerate, "exhaustive enumeration of right loops")
    sp.add_argument("n", type=int)
    sp.add_argument("--filter", nargs="+", metavar="PRED",
                    help="keep tables satisfying all of: " + ", ".join(enumeration.PREDICATES))
    sp.add_argument("--census", action="store_true", help="counts per predicate combination")
    sp.add_argument("--up-to-iso", action="store_true", help="one table per relabeling class")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = LIMITS.enumerate
    if args.cap is not None:
        LIMITS.enumerate = args.cap
    try:
        res = args.func(args)
    except CapExceeded as exc:
        return _error(args, "cap", str(exc), EXIT_CAP)
    except (InvalidInput, PreconditionError) as exc:
        return _error(args, "input", str(exc), EXIT_INPUT)
    except InternalError as exc:
        # a verified invariant failed; report it rather than printing a traceback
        return _error(args, "internal", str(exc), EXIT_FALSE)
    finally:
        LIMITS.enumerate = saved
    if args.json:
        print(json.dumps(res.data, indent=2, sort_keys=True))
    else:
        print("\n".join(res.lines))
    return res.code


def _error(args, kind: str, msg: str, code: int) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"error": kind, "reason": msg}))
    else:
        print(f"error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
