"""Command-line entry point: ``freesummand <subcommand> ...``.

JSON is the default output and the machine contract; ``--format text`` prints
one human-readable answer. Malformed input exits with status 2, a violated
internal invariant with status 1.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .abelian import (
    AbGroupFQ,
    IntMatrix,
    PrimeSet,
    RationalMod1,
    brute_force_hom_count,
    completion_decomposition,
    divisibility_predicates,
    ext_completion,
    group_from_presentation,
    hom_count_formula,
    m_torsion,
    mod_m,
    partial_fraction_decompose,
    primary_part,
    smith_normal_form,
    sum_mod1,
)
from .abelian.enumeration import DEFAULT_BUDGET
from .chart import chart
from .exceptions import FreeSummandError, OutOfRange
from .james import james_number
from .ranges import (
    Assumptions,
    classify_sphere_unstable,
    classify_stable_realization,
    classify_stiefel_injective,
    classify_stiefel_surjective,
)
from .splitting import decide_section, free_summand_decision, verify_splitting_proof_inequalities


class InvariantViolation(RuntimeError):
    """Raised when a result fails its own consistency check."""


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _load_json_arg(text: str):
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise argparse.ArgumentTypeError(f"cannot read {text[1:]}: {exc.strerror}") from None
    return json.loads(text)


def group_json(text: str) -> AbGroupFQ:
    return AbGroupFQ.from_json(_load_json_arg(text))


def matrix_json(text: str) -> IntMatrix:
    data = _load_json_arg(text)
    if isinstance(data, list):
        return IntMatrix.from_rows(data)
    return IntMatrix.from_json(data)


def _emit(args, payload, text: str) -> None:
    sys.stdout.write(_dump(payload) if args.format == "json" else text.rstrip("\n") + "\n")


# -- handlers ---------------------------------------------------------------

def _james(args):
    b = james_number(args.q)
    _emit(args, b.to_json(), str(b))
    return 0


def _split(args):
    decision = decide_section(args.n, args.r)
    payload = decision.to_json()
    text = str(decision)
    status = 0
    if args.verify:
        try:
            trace = verify_splitting_proof_inequalities(args.n, args.r)
        except OutOfRange as exc:
            payload["trace"] = None
            payload["trace_skipped"] = str(exc)
            text += f"\nno proof trace: {exc}"
        else:
            payload["trace"] = trace.to_json()
            text += "\n" + str(trace)
            if not trace.passing:
                status = 1
    _emit(args, payload, text)
    if status:
        print("error: proof trace has a failing inequality", file=sys.stderr)
    return status


def _summand(args):
    decision = free_summand_decision(args.n, args.rank)
    _emit(args, decision.to_json(), str(decision))
    return 0


def _classify(args):
    asm = Assumptions(beilinson_soule=args.bs)
    if args.map == "sphere":
        query = {"x": args.x, "y": args.y, "d": args.d, "e": args.e}
        verdict = classify_sphere_unstable(args.x, args.y, args.d, args.e, asm)
    elif args.map == "stable":
        query = {"s": args.s, "w": args.w}
        verdict = classify_stable_realization(args.s, args.w, asm)
    else:
        query = {"n": args.n, "r": args.r, "d": args.d, "e": args.e}
        fn = classify_stiefel_surjective if args.map == "stiefel-surj" else classify_stiefel_injective
        verdict = fn(args.n, args.r, args.d, args.e, asm)
    payload = {"map": args.map, "query": query, "beilinson_soule": args.bs, **verdict.to_json()}
    _emit(args, payload, f"{args.map} {query}: {verdict}")
    return 0


def _chart(args):
    c = chart(args.x, args.y, (args.d0, args.d1), (args.e0, args.e1), Assumptions(args.bs))
    sys.stdout.write(c.to_svg() if args.format == "svg" else c.to_tsv())
    return 0


def _group(args):
    op = args.op
    if op in ("presentation", "snf"):
        m = args.matrix
        if op == "snf":
            d, u, v = smith_normal_form(m)
            if u @ m @ v != d or not d.is_diagonal():
                raise InvariantViolation("Smith normal form failed its own check")
            payload = {"diagonal": d.diagonal_entries(), "D": d.to_json(),
                       "U": u.to_json(), "V": v.to_json()}
            _emit(args, payload, "diagonal " + " ".join(map(str, d.diagonal_entries())))
            return 0
        g = group_from_presentation(m)
        _emit(args, g.to_json(), str(g))
        return 0
    if op == "pfd":
        parts = partial_fraction_decompose(args.fraction, args.primes)
        total = sum_mod1(list(parts.values()))
        if total != args.fraction:
            raise InvariantViolation("partial fractions do not sum back")
        payload = {"fraction": str(args.fraction), "primes": args.primes.to_json(),
                   "parts": {str(p): str(x) for p, x in parts.items()}, "sum": str(total)}
        text = f"{args.fraction} = " + (" + ".join(str(x) for x in parts.values()) or "0")
        _emit(args, payload, text)
        return 0
    g = args.group
    if op == "canonical":
        result = g
    elif op == "torsion":
        result = m_torsion(g, args.m)
    elif op == "mod":
        result = mod_m(g, args.m)
    elif op == "primary":
        result = AbGroupFQ(0, 0, primary_part(g, args.p))
    elif op == "predicates":
        result = divisibility_predicates(g, args.primes)
    elif op == "completion":
        result = ext_completion(g, args.primes)
    elif op == "decompose":
        result = completion_decomposition(g, args.primes)
        if result.reassembled() != g:
            raise InvariantViolation("decomposition does not reassemble the input")
        text = (f"kernel {result.kernel}; completion {result.completion}; "
                f"section image {result.section_image}")
        _emit(args, result.to_json(), text)
        return 0
    elif op == "hom":
        if not (g.is_finite and args.target.is_finite):
            raise ValueError("hom counting needs finite groups")
        count = brute_force_hom_count(g.torsion, args.target.torsion, args.budget)
        formula = hom_count_formula(g.torsion, args.target.torsion)
        if count != formula:
            raise InvariantViolation(f"enumeration gives {count}, gcd formula gives {formula}")
        payload = {"source": g.to_json(), "target": args.target.to_json(),
                   "count": str(count), "formula": str(formula)}
        _emit(args, payload, f"|Hom({g}, {args.target})| = {count}")
        return 0
    else:  # pragma: no cover - argparse restricts the choices
        raise InvariantViolation(f"unknown op {op}")
    if isinstance(result, AbGroupFQ):
        _emit(args, result.to_json(), str(result))
    else:
        payload = result.to_json()
        text = str(result) if op == "completion" else ", ".join(
            f"{k}={v}" for k, v in payload.items())
        _emit(args, payload, text)
    return 0


def _verify(args):
    from .verification import run_all

    results = run_all(quick=args.quick)
    passed = all(r.passed for r in results)
    payload = {
        "passed": passed,
        "quick": args.quick,
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
             "seconds": round(r.seconds, 3), "limit": r.limit}
            for r in results
        ],
    }
    _emit(args, payload, "\n".join(r.line() for r in results))
    return 0 if passed else 1


# -- parser -----------------------------------------------------------------

def _formats(*choices, default="json"):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=choices, default=default, help=f"output format (default {default})")
    return p


def build_parser() -> argparse.ArgumentParser:
    fmt = _formats("json", "text")
    parser = argparse.ArgumentParser(
        prog="freesummand",
        description="Exact decision procedures for comparison maps and Stiefel sections.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    p = sub.add_parser("james", parents=[fmt], help="James number b_q with its factorization")
    p.add_argument("q", type=int)
    p.set_defaults(handler=_james)

    p = sub.add_parser("split", parents=[fmt], help="does V_r(A^n) -> V_1(A^n) admit a section")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="replay the inequality chain of the proof")
    p.set_defaults(handler=_split)

    p = sub.add_parser("summand", parents=[fmt], help="free summand of rank t in the universal stably free module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(handler=_summand)

    p = sub.add_parser("classify", help="range classification of a comparison map")
    maps = p.add_subparsers(dest="map", required=True, metavar="map")
    bs = argparse.ArgumentParser(add_help=False)
    bs.add_argument("--bs", action="store_true", help="assume Beilinson-Soule vanishing")
    q = maps.add_parser("sphere", parents=[fmt, bs], help="unstable sphere S^{x,y}")
    for name in ("x", "y", "d", "e"):
        q.add_argument(f"--{name}", type=int, required=True)
    q = maps.add_parser("stable", parents=[fmt, bs], help="stable realization at stem s, weight w")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--w", type=int, required=True)
    for name in ("stiefel-surj", "stiefel-inj"):
        q = maps.add_parser(name, parents=[fmt, bs], help=f"Stiefel variety V_r(A^n), {name[8:]}")
        for arg in ("n", "r", "d", "e"):
            q.add_argument(f"--{arg}", type=int, required=True)
    p.set_defaults(handler=_classify)

    p = sub.add_parser("chart", parents=[_formats("tsv", "svg", default="tsv")],
                       help="region chart for S^{x,y} over a (d, e) box")
    for name in ("x", "y", "d0", "d1", "e0", "e1"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--bs", action="store_true", help="assume Beilinson-Soule vanishing")
    p.set_defaults(handler=_chart)

    p = sub.add_parser("group", help="finitely generated abelian group operations")
    ops = p.add_subparsers(dest="op", required=True, metavar="op")
    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", type=group_json, required=True,
                     help='JSON {"q_rank", "free_rank", "invariant_factors"} or @file')
    primes = argparse.ArgumentParser(add_help=False)
    primes.add_argument("--primes", type=PrimeSet.parse, default=PrimeSet.all(),
                        help='"all" (default) or a comma-separated list such as 2,3')
    ops.add_parser("canonical", parents=[fmt, grp], help="invariant-factor normal form")
    q = ops.add_parser("torsion", parents=[fmt, grp], help="m-torsion subgroup")
    q.add_argument("--m", type=int, required=True)
    q = ops.add_parser("mod", parents=[fmt, grp], help="quotient A/mA")
    q.add_argument("--m", type=int, required=True)
    q = ops.add_parser("primary", parents=[fmt, grp], help="p-primary part")
    q.add_argument("--p", type=int, required=True)
    ops.add_parser("predicates", parents=[fmt, grp, primes], help="I-divisibility predicates")
    ops.add_parser("completion", parents=[fmt, grp, primes], help="Ext-completion at I")
    ops.add_parser("decompose", parents=[fmt, grp, primes], help="split completion sequence")
    for name in ("presentation", "snf"):
        q = ops.add_parser(name, parents=[fmt], help="cokernel of a relation matrix" if name ==
                           "presentation" else "Smith normal form D = U M V")
        q.add_argument("--matrix", type=matrix_json, required=True,
                       help='JSON list of rows, {"rows", "cols", "entries"} or @file')
    q = ops.add_parser("hom", parents=[fmt, grp], help="count Hom(A, B) by enumeration")
    q.add_argument("--target", type=group_json, required=True)
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"maximum |A|*|B| to enumerate (default {DEFAULT_BUDGET})")
    q = ops.add_parser("pfd", parents=[fmt, primes], help="partial fractions of a/b in Q/Z")
    q.add_argument("--fraction", type=RationalMod1.parse, required=True)
    p.set_defaults(handler=_group)

    p = sub.add_parser("verify", parents=[fmt], help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="smaller sweeps, no runtime limits")
    p.set_defaults(handler=_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        try:
            return args.handler(args)
        except InvariantViolation as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return 1
        except (FreeSummandError, ValueError, OSError) as exc:
            parser.error(str(exc))
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
