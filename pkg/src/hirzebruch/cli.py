"""Command-line frontend.

Exit status: 0 on success, 1 on domain errors (inadmissible parameters,
inapplicable theorem, bad manifold data), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import bundles, conclusions, genera, manifolds, numeric, verify


class DomainError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {v}")
    return v


def _genus(text: str) -> numeric.Genus:
    try:
        return numeric.Genus.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(out: TextIO, payload, fmt: str, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_bernoulli(args, out):
    values = [(n, numeric.bernoulli(n)) for n in range(args.n + 1)] if args.all else [
        (args.n, numeric.bernoulli(args.n))
    ]
    if args.unsigned:
        values = [(n, abs(v)) for n, v in values]
    payload = {str(n): str(v) for n, v in values}
    _emit(out, payload, args.format, "\n".join(f"B_{n} = {v}" for n, v in values))


def cmd_series(args, out):
    s = numeric.char_series(args.genus, args.order)
    payload = {"genus": args.genus.value, "order": s.order, "coefficients": [str(c) for c in s.coefficients]}
    _emit(out, payload, args.format, f"Q_{args.genus.value}(z) = {s}")


def cmd_msequence(args, out):
    seq = genera.genus_sequence(args.genus, args.n)
    text = "\n".join(f"K_{n} = {seq[n]}" for n in range(1, args.n + 1))
    _emit(out, seq.to_json(), args.format, text)


def cmd_identity(args, out):
    seq = genera.genus_sequence(args.genus, max(args.i + args.j, 1))
    rep = genera.verify_product_identity(seq, args.i, args.j)
    payload = {"genus": args.genus.value, **rep.to_json()}
    text = (
        f"{args.genus.value}: c_{args.i} c_{args.j} = {rep.lhs}; "
        f"c_{args.i + args.j} + {rep.lam} c_({args.i},{args.j}) = {rep.rhs}; "
        f"{'holds' if rep.holds else 'FAILS'}"
    )
    _emit(out, payload, args.format, text)


def cmd_lemma24(args, out):
    rep = manifolds.lemma24_matrix(args.i, args.j)
    payload = rep.to_json()
    if args.pipj is not None:
        payload["zero_signature"] = manifolds.ahat_under_zero_signature(args.i, args.j, args.pipj).to_json()

    def mat(m):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in m) + "]"

    lines = [
        f"full matrix    {mat(rep.full_matrix)}  det {rep.full_det}",
        f"reduced matrix {mat(rep.reduced_matrix)}  det {rep.reduced_det}",
        f"nonsingular    {rep.nonsingular}",
    ]
    if args.pipj is not None:
        z = payload["zero_signature"]
        lines.append(f"signature 0 with p_i p_j = {z['pipj']}: p_top = {z['p_top']}, Ahat = {z['ahat']}")
    _emit(out, payload, args.format, "\n".join(lines))


def cmd_manifold(args, out):
    if args.file:
        raw = Path(args.file).read_text(encoding="utf-8")
    elif args.data:
        raw = args.data
    else:
        raw = sys.stdin.read()
    try:
        M = manifolds.FormalManifold.from_json(raw)
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"bad manifold data: {exc}") from exc
    sig, ah = manifolds.signature(M), manifolds.ahat(M)
    payload = {**M.to_json(), "signature": str(sig), "ahat": str(ah)}
    _emit(out, payload, args.format, f"dim {M.dim}: signature {sig}, Ahat {ah}")


def _params_text(bp: bundles.BundleParams) -> str:
    a, b = bp.base_dims
    return f"(p,q,i,j)=({bp.p},{bp.q},{bp.i},{bp.j})  base S^{a} x S^{b}  total dim {bp.total_dim}"


def cmd_bundle_search(args, out):
    found = bundles.search(args.dim)
    payload = [bp.to_json() for bp in found]
    text = "\n".join(_params_text(bp) for bp in found) or f"no admissible parameters for d={args.dim}"
    _emit(out, payload, args.format, text)


def cmd_bundle_table(args, out):
    row = bundles.table_row(args.dim)
    model = bundles.total_space_model(row.params, args.pipj)
    payload = {
        **row.to_json(),
        "closing": bundles.closing_check(row.params).to_json(),
        "model": model.to_json(),
        "kappa": {
            "degree": row.params.kappa_degree,
            "value": str(bundles.kappa_pairing(row.params, model)),
        },
    }
    lines = [
        f"d={args.dim} (row 8k+{row.residue}, k={row.k}): {_params_text(row.params)}",
        f"4i-p-1={row.degree_columns[0]}  4j-q-1={row.degree_columns[1]}",
        f"Ahat(E)={model.ahat} with p_i p_j={model.manifold.number((row.params.i, row.params.j))}",
        *(f"caveat: {c}" for c in row.caveats),
    ]
    _emit(out, payload, args.format, "\n".join(lines))


def cmd_conclude(args, out):
    rep = conclusions.theorem_conclusion(args.dim)
    lines = [
        f"d={args.dim}: {_params_text(rep.params)}",
        f"m in {sorted(rep.m_set)}; j in {sorted(rep.j_set)}",
        "at least one of: " + "; ".join(rep.alternatives),
    ]
    for kind, bp, alts in rep.extra:
        lines.append(f"also ({kind}, {bp.as_tuple()}): " + "; ".join(alts))
    if len(rep.diagonal_choices) > 1:
        lines.append(
            "diagonal choices: " + ", ".join(f"{bp.as_tuple()}->{sorted(ms)}" for bp, ms in rep.diagonal_choices)
        )
    lines.extend(f"side condition: {s}" for s in rep.side_conditions)
    _emit(out, rep.to_json(), args.format, "\n".join(lines))


def cmd_verify_all(args, out):
    results = list(verify.run_all())
    ok = all(c.passed for c in results)
    payload = {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in results],
        "passed": ok,
    }
    text = "\n".join(c.line() for c in results)
    text += f"\n{sum(c.passed for c in results)}/{len(results)} checks passed"
    _emit(out, payload, args.format, text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hirzebruch",
        description="Exact L- and Ahat-genus computations and bundle-parameter bookkeeping.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json"), default="table")
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     help="shorthand for --format json")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("bernoulli", parents=[fmt], help="Bernoulli numbers")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--all", action="store_true", help="print B_0 .. B_n")
    p.add_argument("--unsigned", action="store_true")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("series", parents=[fmt], help="characteristic series")
    p.add_argument("--genus", type=_genus, required=True)
    p.add_argument("--order", type=_natural, default=6)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("msequence", parents=[fmt], help="multiplicative sequence K_1..K_n")
    p.add_argument("--genus", type=_genus, required=True)
    p.add_argument("--n", type=_positive, default=genera.DEFAULT_N_MAX)
    p.set_defaults(func=cmd_msequence)

    p = sub.add_parser("identity", parents=[fmt], help="product identity at (i, j)")
    p.add_argument("--genus", type=_genus, required=True)
    p.add_argument("--i", type=_positive, required=True)
    p.add_argument("--j", type=_positive, required=True)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("lemma24", parents=[fmt], help="L/Ahat coefficient matrix at (i, j)")
    p.add_argument("--i", type=_positive, required=True)
    p.add_argument("--j", type=_positive, required=True)
    p.add_argument("--pipj", type=numeric.parse_rational, default=None,
                   help="also solve the signature-zero model with this p_i p_j")
    p.set_defaults(func=cmd_lemma24)

    p = sub.add_parser("manifold", parents=[fmt], help="signature and Ahat of a formal manifold")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--file")
    src.add_argument("--data", help="inline JSON")
    p.set_defaults(func=cmd_manifold)

    def add_search(sp):
        sp.add_argument("--dim", type=_positive, required=True)
        sp.set_defaults(func=cmd_bundle_search)

    def add_table(sp):
        sp.add_argument("--dim", type=_positive, required=True)
        sp.add_argument("--pipj", type=numeric.parse_rational, default=1)
        sp.set_defaults(func=cmd_bundle_table)

    add_search(sub.add_parser("bundle-search", parents=[fmt], help="all admissible (p,q,i,j)"))
    add_table(sub.add_parser("bundle-table", parents=[fmt], help="canonical choice for dimension d"))
    bundle = sub.add_parser("bundle", help="bundle search / table")
    bsub = bundle.add_subparsers(dest="bundle_command", metavar="ACTION")
    bsub.required = True
    add_search(bsub.add_parser("search", parents=[fmt]))
    add_table(bsub.add_parser("table", parents=[fmt]))

    p = sub.add_parser("conclude", parents=[fmt], help="homotopy conclusion in dimension d")
    p.add_argument("--dim", type=_positive, required=True)
    p.set_defaults(func=cmd_conclude)

    p = sub.add_parser("verify-all", parents=[fmt], help="run every check and print a ledger")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = args.func(args, out)
    except (DomainError, bundles.InvalidParameters, conclusions.NoConclusion, ValueError,
            ZeroDivisionError, OSError) as exc:
        if args.format == "json":
            out.write(json.dumps({"error": str(exc), "command": args.command}, indent=2) + "\n")
        err.write(f"error: {exc}\n")
        return 1
    return status or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
