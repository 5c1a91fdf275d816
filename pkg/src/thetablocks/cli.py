"""Command-line front end: exact fusion dimensions, the trig oracle, branching
data, rank-level reports, Clifford evaluations, and the bundled golden-number
suite.  Reports are emitted as aligned text (default) or JSON (--json)."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from . import __version__, branching, fusion, verlinde
from .fock import blocks, grammar
from .fock.ranklevel import ranklevel_matrix
from .rootsys import Weight
from .weights import YoungDiagram

EXIT_PARSE = 1
EXIT_DISAGREE = 2
EXIT_UNREDUCIBLE = 3

DEFAULT_CACHE = ".theta-blocks-cache"


class EngineDisagreement(RuntimeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # parse errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


@dataclass
class Report:
    command: str
    inputs: dict
    outputs: dict
    engine: str
    version: str = __version__
    lines: list = field(default_factory=list)  # preformatted extras (text mode)

    def rendered(self, as_json: bool) -> str:
        if as_json:
            blob = {
                "command": self.command,
                "inputs": self.inputs,
                "outputs": self.outputs,
                "engine": self.engine,
                "version": self.version,
            }
            return json.dumps(blob, sort_keys=True, indent=2)
        out = [f"command : {self.command}"]
        for k, v in self.inputs.items():
            out.append(f"{k:8s}: {v}")
        for k, v in self.outputs.items():
            out.append(f"{k:8s}: {v}")
        out.extend(self.lines)
        out.append(f"engine  : {self.engine}")
        return "\n".join(out)


def parse_weights(text: str) -> list[Weight]:
    return [Weight.parse(part) for part in text.split(";") if part.strip()]


def _dims_both(g, lams, r, ell, method, cache_dir, dps):
    exact = trig = None
    if method in ("exact", "both"):
        exact = fusion.get_table(r, ell, cache_dir).dim_genus_g(g, lams)
    if method in ("trig", "both"):
        trig = verlinde.dim_trig(g, lams, r, ell, dps)
    if method == "both" and exact != trig:
        raise EngineDisagreement(
            f"fusion gives {exact}, trig gives {trig} for genus {g}, {lams}"
        )
    return exact if exact is not None else trig, exact, trig


def cmd_fusion(args) -> Report:
    lams = parse_weights(args.weights)
    if len(lams) != 3:
        raise _usage_error("fusion needs exactly three weights")
    value, exact, trig = _dims_both(
        0, lams, args.rank, args.level, args.method, args.cache_dir, args.precision
    )
    outputs = {"N": value}
    if args.method == "both":
        outputs.update({"N_exact": exact, "N_trig": trig})
    return Report(
        "fusion",
        {
            "rank": args.rank,
            "level": args.level,
            "weights": ";".join(str(w) for w in lams),
        },
        outputs,
        engine=args.method if args.method != "both" else "fusion+trig",
    )


def cmd_dim(args) -> Report:
    lams = parse_weights(args.weights) if args.weights else []
    value, exact, trig = _dims_both(
        args.genus, lams, args.rank, args.level, args.method, args.cache_dir,
        args.precision,
    )
    outputs = {"dim": value}
    if args.method == "both":
        outputs.update({"dim_exact": exact, "dim_trig": trig})
    return Report(
        "dim",
        {
            "rank": args.rank,
            "level": args.level,
            "genus": args.genus,
            "weights": ";".join(str(w) for w in lams),
        },
        outputs,
        engine=args.method if args.method != "both" else "fusion+trig",
    )


def cmd_branch(args) -> Report:
    tris = branching.branch_pairs(args.Lambda, args.r, args.s)
    outputs = {
        "count": len(tris),
        "pairs": [
            {
                "lam": str(t.lam),
                "mu": str(t.mu),
                "exponent": t.exponent,
                "rule": t.rule,
            }
            for t in tris
        ],
    }
    lines = [
        f"  ({t.lam})  ({t.mu})   m={t.exponent}   {t.rule}" for t in tris
    ]
    rep = Report(
        "branch",
        {"r": args.r, "s": args.s, "Lambda": args.Lambda},
        outputs,
        engine="fusion",
    )
    rep.lines = lines
    if not args.json:
        rep.outputs = {"count": len(tris)}
    return rep


def cmd_sewing(args) -> Report:
    lams = parse_weights(args.weights)
    if len(lams) != 2:
        raise _usage_error("sewing needs exactly two weights 'lam;mu'")
    m = branching.sewing_exponent(lams[0], lams[1], args.Lambda, args.r, args.s)
    return Report(
        "sewing",
        {
            "r": args.r,
            "s": args.s,
            "Lambda": args.Lambda,
            "weights": ";".join(str(w) for w in lams),
        },
        {"exponent": m},
        engine="fusion",
    )


def cmd_oxbury(args) -> Report:
    if args.rank is not None and args.level is not None:
        n0 = verlinde.n0_oxbury(args.genus, args.rank, args.level, args.precision)
        return Report(
            "oxbury",
            {"genus": args.genus, "rank": args.rank, "level": args.level},
            {"n0": n0, "twisted_total": 2 * n0},
            engine="trig",
        )
    if args.r is None or args.s is None:
        raise _usage_error("oxbury needs either --rank/--level or --r/--s")
    rep = verlinde.oxbury_check(args.genus, args.r, args.s, args.precision)
    return Report(
        "oxbury",
        {"genus": args.genus, "r": args.r, "s": args.s},
        {"lhs": rep.lhs, "rhs": rep.rhs, "equal": rep.equal},
        engine="trig",
    )


def cmd_ranklevel(args) -> Report:
    rep = branching.ranklevel_example(args.example, args.cache_dir)
    outputs = {
        "dim_source": rep.dim_source,
        "dim_target": rep.dim_target,
        "dim_level1": rep.dim_level1,
        "certificates": list(rep.certificates),
    }
    return Report(
        "ranklevel",
        {
            "example": args.example,
            "r": rep.r,
            "s": rep.s,
            "source": ";".join(str(w) for w in rep.source),
            "target": ";".join(str(w) for w in rep.target),
            "Lambda": ";".join(rep.Lambdas),
        },
        outputs,
        engine="fusion",
    )


def cmd_ranklevel_matrix(args) -> Report:
    y = YoungDiagram.parse(args.weights)
    m = ranklevel_matrix(y, args.r, args.s)
    return Report(
        "ranklevel-matrix",
        {"r": args.r, "s": args.s, "Y": str(y)},
        {
            "matrix": [[str(x) for x in row] for row in m.entries],
            "determinant": str(m.determinant),
            "determinant_zero": not m.determinant,
        },
        engine="fock",
    )


def cmd_clifford_eval(args) -> Report:
    value = grammar.evaluate(args.expr, args.r, args.s)
    if isinstance(value, blocks.QSqrt2):
        outputs = {"value": str(value)}
    else:
        outputs = {"vector": str(value)}
    return Report(
        "clifford-eval",
        {"expr": args.expr, "r": args.r, "s": args.s},
        outputs,
        engine="fock",
    )


def cmd_theta_counts(args) -> Report:
    total, even, odd = verlinde.theta_counts(args.genus)
    return Report(
        "theta-counts",
        {"genus": args.genus},
        {"total": total, "even": even, "odd": odd},
        engine="trig",
    )


def _golden_checks(cache_dir, dps):
    """Yield (name, ok, detail) for the bundled golden-number suite."""
    t2 = fusion.get_table(2, 1)
    for g in range(2, 6):
        got = t2.dim_genus_g(g, [Weight.fundamental(2, 1)])
        want = 2 ** (g - 1) * (2 ** g - 1)
        yield f"N_{g}(omega_1, level 1) = {want}", got == want, f"got {got}"
    for r in (2, 5):
        ring = fusion.level1_table(r)
        ok = True
        for g in range(0, 4):
            for n in range(1, 4):
                got = ring.dim_genus_g(g, [Weight.fundamental(r, r)] * (2 * n))
                ok = ok and got == 2 ** (2 * g + n - 1)
        yield f"N_g(2n spin weights, level 1) = 2^(2g+n-1), r={r}", ok, ""
    for g in (2, 3):
        tot = verlinde.twisted_total(g, 2, 1, dps)
        yield f"twisted total level 1, g={g}: 2^{2*g}", tot == 2 ** (2 * g), f"got {tot}"
    tc = verlinde.theta_counts(2)
    yield "theta counts g=2 = (16, 10, 6)", tc == (16, 10, 6), f"got {tc}"
    for (g, r, s) in ((2, 2, 2), (2, 2, 3), (3, 2, 2), (3, 2, 3)):
        rep = verlinde.oxbury_check(g, r, s, dps)
        yield (
            f"Oxbury-Wilson N_{g}^0(so({2*r+1}),{2*s+1}) = N_{g}^0(so({2*s+1}),{2*r+1})",
            rep.equal,
            f"{rep.lhs} vs {rep.rhs}",
        )
    wants = {1: (4, 5, 1), 2: (3, 4, 1), 3: (14, 20, 1)}
    for n, want in wants.items():
        rep = branching.ranklevel_example(n, cache_dir)
        got = (rep.dim_source, rep.dim_target, rep.dim_level1)
        yield f"rank-level failure example {n}: dims {want}", got == want, f"got {got}"
    ok = True
    tab = fusion.get_table(2, 3, cache_dir)
    for a in tab.weights():
        for b in tab.weights():
            for c in tab.weights():
                if tab.triple(a, b, c) != verlinde.dim_trig(0, [a, b, c], 2, 3, dps):
                    ok = False
    yield "dual-oracle agreement r=2, level 3 (full triple set)", ok, ""
    ok = True
    for lab in ("0", "1", "d"):
        for t in branching.branch_pairs(lab, 2, 2):
            ok = ok and t.exponent >= 0
    yield "sewing exponents at (r,s)=(2,2) all nonnegative integers", ok, ""
    m = ranklevel_matrix(YoungDiagram.parse("[1]"), 2, 2)
    yield "strange duality det A = 0 at (2,2), Y=[1]", not m.determinant, str(
        m.determinant
    )
    from .fock import NS, FockState, FockVector, apply_LR, clifford_apply, vacuum

    v1 = clifford_apply((-1, 1, 1), FockVector.unit(vacuum(NS)))
    want_v = clifford_apply((-1, 1, 0), FockVector.unit(vacuum(NS)))
    yield "Clifford: R(B^0_1) phi^{1,1}(-1/2) = phi^{1,0}(-1/2)", apply_LR(
        0, 1, 0, "R", v1, 2, 2
    ) == want_v, ""
    cur = FockVector.unit(vacuum(NS))
    for j in (3, 2, 1):
        cur = clifford_apply((-1, j, 1), cur)
    for _ in range(3):
        cur = apply_LR(0, 1, 0, "R", cur, 3, 2)
    lead_state = FockState(NS, ((-1, 1, 0), (-1, 2, 0), (-1, 3, 0)))
    lead = cur.coefficient(lead_state)
    others = {str(c) for st, c in cur.terms.items() if st != lead_state}
    yield "Clifford cubed R-action: leading 6, six cross terms -3", lead == 6 and others == {
        "-3"
    }, f"lead {lead}, others {others}"


def cmd_paper_check(args):
    failures = 0
    for name, ok, detail in _golden_checks(args.cache_dir, args.precision):
        status = "PASS" if ok else "FAIL"
        extra = f"   [{detail}]" if detail and not ok else ""
        print(f"{status}  {name}{extra}")
        if not ok:
            failures += 1
    if failures:
        print(f"{failures} golden check(s) FAILED")
        raise SystemExit(EXIT_DISAGREE)
    print("all golden checks passed")
    return None


def _usage_error(msg: str) -> SystemExit:
    print(f"error: {msg}", file=sys.stderr)
    return SystemExit(EXIT_PARSE)


def build_parser() -> _Parser:
    p = _Parser(prog="theta-blocks", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, *names):
        if "rank" in names or "rank?" in names:
            sp.add_argument("--rank", type=int, required="rank" in names)
        if "level" in names or "level?" in names:
            sp.add_argument("--level", type=int, required="level" in names)
        if "genus" in names:
            sp.add_argument("--genus", type=int, required=True)
        if "weights" in names or "weights?" in names:
            sp.add_argument("--weights", required="weights" in names)
        if "rs" in names or "rs?" in names:
            req = "rs" in names
            sp.add_argument("--r", type=int, required=req)
            sp.add_argument("--s", type=int, required=req)
        if "Lambda" in names:
            sp.add_argument("--Lambda", choices=("0", "1", "d"), required=True)
        if "method" in names:
            sp.add_argument(
                "--method", choices=("exact", "trig", "both"), default="exact"
            )
        sp.add_argument("--cache-dir", default=DEFAULT_CACHE)
        sp.add_argument("--precision", type=int, default=verlinde.DEFAULT_DPS)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("fusion", help="three-point fusion multiplicity")
    common(sp, "rank", "level", "weights", "method")
    sp.set_defaults(func=cmd_fusion)

    sp = sub.add_parser("dim", help="genus-g n-point dimension")
    common(sp, "rank", "level", "genus", "weights?", "method")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("branch", help="branching pairs B(Lambda)")
    common(sp, "rs", "Lambda")
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("sewing", help="sewing exponent of a branching pair")
    common(sp, "rs", "Lambda", "weights")
    sp.set_defaults(func=cmd_sewing)

    sp = sub.add_parser("oxbury", help="Oxbury-Wilson sums and the symmetry check")
    common(sp, "rank?", "level?", "genus", "rs?")
    sp.set_defaults(func=cmd_oxbury)

    sp = sub.add_parser("ranklevel", help="bundled rank-level comparison reports")
    sp.add_argument("--example", type=int, choices=(1, 2, 3), required=True)
    common(sp)
    sp.set_defaults(func=cmd_ranklevel)

    sp = sub.add_parser("ranklevel-matrix", help="the 2x2 elliptic matrix and det")
    common(sp, "rs", "weights")
    sp.set_defaults(func=cmd_ranklevel_matrix)

    sp = sub.add_parser("clifford-eval", help="evaluate a Clifford expression")
    sp.add_argument("expr")
    common(sp, "rs?")
    sp.set_defaults(func=cmd_clifford_eval)

    sp = sub.add_parser("theta-counts", help="theta-characteristic counts")
    common(sp, "genus")
    sp.set_defaults(func=cmd_theta_counts)

    sp = sub.add_parser("paper-check", help="run the bundled golden-number suite")
    common(sp)
    sp.set_defaults(func=cmd_paper_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except EngineDisagreement as exc:
        print(f"engine disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except blocks.UnreducibleError as exc:
        print(f"UNREDUCIBLE: {exc}", file=sys.stderr)
        return EXIT_UNREDUCIBLE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if report is not None:
        print(report.rendered(args.json))
    _save_tables(args)
    return 0


def _save_tables(args) -> None:
    cache_dir = getattr(args, "cache_dir", None)
    if not cache_dir:
        return
    for table in fusion.OPEN_TABLES:
        if table.cache_dir == cache_dir:
            table.save()


if __name__ == "__main__":
    raise SystemExit(main())
