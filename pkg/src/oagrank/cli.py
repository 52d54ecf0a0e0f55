"""Command line entry point: ``oagrank`` or ``python -m oagrank``.

Exit status is 0 on success, 2 for bad input and 3 when an internal check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import INF, fmt_inf, is_inf
from .core import Element, H_n, H_n_minus, in_nG, require_finite
from .dsl import parse, to_text
from .errors import InputError, InvariantError, OagError
from .fields import dp_minimal_transfer, transfer_verdict
from .ladders import LadderSubgroup, add, decompose_crt, index, intersect
from . import report as rpt
from . import selftest


def _ladder_arg(g, text):
    try:
        moduli = [INF if t.strip() == "inf" else int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"bad ladder {text!r}; expected moduli like 2,1 or inf,1") from None
    return LadderSubgroup.from_moduli(g, moduli)


def _vector_arg(text):
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"bad coefficient vector {text!r}") from None


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_analyze(args):
    rep = rpt.build_report(args.expr, first_k=args.first_k)
    rk = rep["rank"]
    lines = [f"group           {rep['normalized']}"]
    P = rk["p_infinity"]
    lines.append(f"P_inf           {P if P == 'infinite' else '{' + ', '.join(map(str, P)) + '}'}")
    lines.append("p    [G:pG]  spine                           S_p^inf           k_p")
    for d in rk["primes"]:
        sp = d["spine"]
        sp_txt = (", ".join(f"tail({c})" for c in sp["members"]) if sp["finite"]
                  else f"infinite (block {sp['generator_block']})")
        si = "-" if d["s_infinity"] is None else ", ".join(f"tail({c})" for c in d["s_infinity"])
        k = "-" if d["k_p"] is None else d["k_p"]
        e = d["index_exponent"]
        idx = "inf" if e == "inf" else f"{d['p']}^{e}"
        lines.append(f"{d['p']:<4} {idx:<7} {sp_txt:<31} {si:<17} {k}")
    lines += [f"c_G             {rk['c_G']}",
              f"dp_rank_reduct  {rk['dp_rank_reduct']}",
              f"dp_rank         {rk['dp_rank']}",
              f"verdict         {rk['verdict']}"]
    for w in rk["witnesses"]:
        if w["type"] == "InpFamily":
            body = "; ".join(f"p={m['p']} e={m['exponent']} {_lad(m['ladder'])}" for m in w["members"])
            lines.append(f"witness family  {body}")
        elif w["type"] == "ProperContainer":
            lines.append(f"container       tail({w['subgroup']}) {_lad(w['ladder'])}")
        else:
            body = "; ".join(_lad(l) for l in w["ladders"])
            lines.append(f"spine chain     p={w['p']} {body}")
            lines.append(f"                on {w['description']}")
    _emit(args, rep, lines)


def _lad(moduli):
    return "(" + ",".join(str(m) for m in moduli) + ")"


def cmd_hn(args):
    g = parse(args.expr)
    require_finite(g)
    vec = _vector_arg(args.vector)
    x = Element.from_vector(vec)
    x.check(g)
    h, hm, inn = H_n(x, args.n, g), H_n_minus(x, args.n, g), in_nG(x, args.n, g)
    payload = {"group": to_text(g), "n": args.n, "element": vec,
               "in_nG": inn, "H_n": h.cut, "H_n_minus": hm.cut}
    _emit(args, payload, [f"x in {args.n}G    {inn}", f"H_{args.n}(x)      {h}",
                          f"H_{args.n}^-(x)     {hm}"])


def cmd_subgroup(args):
    g = parse(args.expr)
    require_finite(g)
    a = _ladder_arg(g, args.a)
    needs_two = args.op in ("intersect", "sum", "index")
    if needs_two and args.b is None:
        raise InputError(f"{args.op} needs two ladders")
    if not needs_two and args.b is not None:
        raise InputError(f"{args.op} takes one ladder")
    b = _ladder_arg(g, args.b) if needs_two else None
    if args.op == "intersect":
        r = intersect(a, b)
        payload, line = rpt.ladder_json(r), repr(r)
    elif args.op == "sum":
        r = add(a, b)
        payload, line = rpt.ladder_json(r), repr(r)
    elif args.op == "index":
        r = index(a, b)
        payload, line = ("inf" if is_inf(r) else r), str(fmt_inf(r))
    else:
        parts = decompose_crt(a)
        payload = [{"p": p, "ladder": rpt.ladder_json(l)} for p, l in parts]
        line = "\n".join(f"{p if p else '-'}: {l!r}" for p, l in parts)
    _emit(args, {"op": args.op, "group": to_text(g), "result": payload}, [line])


def cmd_field(args):
    try:
        text = Path(args.descriptor).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.descriptor}: {exc.strerror}") from None
    try:
        vf, dpmin = rpt.descriptor_from_json(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"descriptor is not valid JSON: {exc}") from None
    v = dp_minimal_transfer(vf, dpmin) if dpmin is not None else transfer_verdict(vf)
    payload = rpt.field_verdict_json(v)
    lines = [f"status  {v.status.value}"]
    if v.case:
        lines.append(f"case    {v.case}")
    lines += [f"  - {s}" for s in v.derivation]
    lines += [f"  ! {x}" for x in v.violations]
    if v.missing:
        lines.append("missing " + ", ".join(v.missing))
    for name in ("defectless", "algebraically_maximal", "kaplansky"):
        val = getattr(v, name)
        if val is not None:
            lines.append(f"{name:<22}{val}")
    _emit(args, payload, lines)


def cmd_selftest(args):
    res = selftest.run(args.seed, args.iters)
    payload = {"seed": res.seed, "iters": res.iters, "checks": res.checks,
               "discrepancies": res.discrepancies,
               "failures": [repr(f) for f in res.failures[:20]]}
    lines = [f"seed {res.seed}, {res.iters} instances, {res.checks} checks, "
             f"{res.discrepancies} discrepancies"]
    lines += [f"  {f!r}" for f in res.failures[:20]]
    _emit(args, payload, lines)
    if res.discrepancies:
        raise InvariantError(f"{res.discrepancies} discrepancies against the lattice model")


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS,
                     help="output format (default text)")
    p = argparse.ArgumentParser(prog="oagrank", parents=[fmt],
                                description="Invariants and dp-rank of presented ordered abelian groups.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[fmt], help="rank report for a group expression")
    s.add_argument("expr")
    s.add_argument("--first-k", type=int, default=4, help="length of infinite-spine chains")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("hn", parents=[fmt], help="H_n and H_n^- of an element")
    s.add_argument("expr")
    s.add_argument("n", type=int)
    s.add_argument("vector", help="comma-separated coefficients, e.g. 1,0,2")
    s.set_defaults(func=cmd_hn)

    s = sub.add_parser("subgroup", parents=[fmt], help="ladder subgroup arithmetic")
    s.add_argument("expr")
    s.add_argument("op", choices=("intersect", "sum", "index", "crt"))
    s.add_argument("a", help="moduli, e.g. 2,1 or inf,1")
    s.add_argument("b", nargs="?")
    s.set_defaults(func=cmd_subgroup)

    s = sub.add_parser("field", parents=[fmt], help="valued-field descriptors")
    fsub = s.add_subparsers(dest="field_command", required=True)
    c = fsub.add_parser("classify", parents=[fmt], help="transfer verdict for a descriptor file")
    c.add_argument("descriptor")
    c.set_defaults(func=cmd_field)

    s = sub.add_parser("selftest", parents=[fmt], help="fuzz ladders against the lattice model")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--iters", type=int, default=1000)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except OagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
