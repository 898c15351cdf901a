"""Command line interface and machine-readable export.

Subcommands:
  gen       build a representation bundle and write it to JSON (or coo-text)
  dim       print the dimension of a representation
  verify    run the defining-relation and irreducibility suite
  identity  run the exact bracket sum-rule sweep

Exit codes are a stable contract: 0 pass, 1 verification failure, 2 usage or
signature error, 3 unsupported mode/format combination, 4 indeterminate
commutant rank.

Half-integers are accepted on the command line as "3/2", "1.5" or "2" and
are serialized exclusively as twice-integers, so files round-trip exactly.
Identical invocations produce byte-identical files: the basis order is fixed,
entries are sorted by (row, column), and floats use Python's shortest
round-trip decimal form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from .algebra_check import (
    IndeterminateCommutant,
    commutant_dimension,
    relation_suite,
    suite_max_workers_from_env,
)
from .gtbasis import GTPattern, Signature, dimension, validate_signature
from .qnum import CLASSICAL, EXACT, FLOAT, HalfInt, QMode
from .repmatrix import GeneratorMatrix, RepBundle, UnsupportedModeError, build_rep
from .sum_rule import identity_sweep

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_INDETERMINATE = 4


def parse_weight(text: str) -> list[HalfInt]:
    return [HalfInt.of(part.strip()) for part in text.split(",") if part.strip() != ""]


def _mode_from_args(args) -> QMode:
    if getattr(args, "classical", False):
        return QMode.classical()
    if getattr(args, "q_exact", None) is not None:
        return QMode.exact(Fraction(args.q_exact))
    if getattr(args, "q_polar", None) is not None:
        return QMode.polar(float(args.q_polar))
    return QMode.float_q(complex(args.q))


def _add_q_options(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", help="deformation parameter as a decimal or complex literal, e.g. 0.9 or 0.5+0.2j")
    group.add_argument("--q-polar", help="h for q = exp(i h) on the unit circle")
    group.add_argument("--q-exact", help="rational s = q^(1/2) for exact mode, e.g. 3 or 7/2")
    group.add_argument("--classical", action="store_true", help="q = 1 limit")


def _signature_or_exit(n: int, weight: str) -> Signature:
    try:
        sig = Signature(n, tuple(parse_weight(weight)))
        violation = validate_signature(sig)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if violation is not None:
        print(f"error: invalid signature: {violation}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return sig


def _q_export(mode: QMode) -> dict:
    if mode.kind == FLOAT:
        return {"mode": FLOAT, "value": repr(mode.q)}
    if mode.kind == EXACT:
        return {"mode": EXACT, "value": f"{mode.s.numerator}/{mode.s.denominator}"}
    return {"mode": CLASSICAL, "value": "1"}


def _mode_from_export(data: dict) -> QMode:
    if data["mode"] == FLOAT:
        return QMode.float_q(complex(data["value"]))
    if data["mode"] == EXACT:
        return QMode.exact(Fraction(data["value"]))
    return QMode.classical()


def export_bundle(bundle: RepBundle, checks=None) -> dict:
    """Lossless dict form of a bundle (twice-integer patterns, re/im floats)."""
    out = {
        "schema_version": SCHEMA_VERSION,
        "n": bundle.signature.n,
        "signature": [v.twice for v in bundle.signature.m],
        "q": _q_export(bundle.mode),
        "dim": bundle.dim,
        "basis": [[[v.twice for v in row.m] for row in pat.rows] for pat in bundle.basis],
        "generators": [
            {
                "k": g.k,
                "entries": [[r, c, v.real, v.imag] for r, c, v in g.entries],
            }
            for g in bundle.generators
        ],
    }
    if checks is not None:
        out["checks"] = [
            {
                "relation": rep.relation,
                "pair": list(rep.pair),
                "residual": rep.residual,
                "tolerance": rep.tolerance,
                "pass": rep.passed,
            }
            for rep in checks
        ]
    return out


def bundle_from_export(data: dict) -> RepBundle:
    """Inverse of :func:`export_bundle`; bit-exact for float entries."""
    n = data["n"]
    sig = Signature(n, tuple(HalfInt(t) for t in data["signature"]))
    mode = _mode_from_export(data["q"])
    basis = tuple(
        GTPattern(tuple(Signature(n - i, tuple(HalfInt(t) for t in row)) for i, row in enumerate(rows)))
        for rows in data["basis"]
    )
    gens = tuple(
        GeneratorMatrix(
            k=g["k"],
            dim=data["dim"],
            entries=tuple((r, c, complex(re, im)) for r, c, re, im in g["entries"]),
            mode=mode,
        )
        for g in data["generators"]
    )
    return RepBundle(signature=sig, basis=basis, generators=gens, mode=mode)


def emit_json(data: dict) -> str:
    return json.dumps(data, separators=(",", ":")) + "\n"


def emit_coo_text(bundle: RepBundle) -> str:
    """Matrix-market-style triplet text: one "k row col re im" line per entry."""
    lines = [
        "%% qsorep coo export, schema " + SCHEMA_VERSION,
        f"% n {bundle.signature.n}",
        "% signature_twice " + ",".join(str(v.twice) for v in bundle.signature.m),
        f"% q {_q_export(bundle.mode)['mode']} {_q_export(bundle.mode)['value']}",
        f"% dim {bundle.dim}",
    ]
    for g in bundle.generators:
        lines.append(f"% generator k={g.k} nnz={len(g.entries)}")
        for r, c, v in g.entries:
            lines.append(f"{g.k} {r} {c} {v.real!r} {v.imag!r}")
    return "\n".join(lines) + "\n"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qsorep-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_gen(args) -> int:
    sig = _signature_or_exit(args.n, args.weight)
    mode = _mode_from_args(args)
    try:
        bundle = build_rep(sig, mode)
    except UnsupportedModeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    checks = None
    if args.checks:
        checks = relation_suite(bundle, tolerance=args.tolerance, max_workers=suite_max_workers_from_env())
    if args.format == "json":
        text = emit_json(export_bundle(bundle, checks))
    else:
        text = emit_coo_text(bundle)
    _atomic_write(args.output, text)
    print(f"wrote {args.output} (dim {bundle.dim}, {len(bundle.generators)} generators)")
    return EXIT_OK


def cmd_dim(args) -> int:
    sig = _signature_or_exit(args.n, args.weight)
    print(dimension(sig))
    return EXIT_OK


def cmd_verify(args) -> int:
    sig = _signature_or_exit(args.n, args.weight)
    mode = _mode_from_args(args)
    if mode.kind == EXACT:
        print("error: verification needs assembled matrices; exact mode unsupported", file=sys.stderr)
        return EXIT_UNSUPPORTED
    bundle = build_rep(sig, mode)
    if mode.near_unity_order is not None:
        print(f"warning: q is numerically near a root of unity (order {mode.near_unity_order})")
    reports = relation_suite(bundle, tolerance=args.tolerance, max_workers=suite_max_workers_from_env())
    print(f"{'relation':<12} {'pair':<10} {'residual':<12} pass")
    for rep in reports:
        pair = f"({rep.pair[0]},{rep.pair[1]})"
        print(f"{rep.relation:<12} {pair:<10} {rep.residual:<12.3e} {'yes' if rep.passed else 'NO'}")
    failed = [rep for rep in reports if not rep.passed]

    commutant_note = ""
    indeterminate = False
    if mode.kind == FLOAT and bundle.dim <= args.commutant_cap:
        try:
            cdim = commutant_dimension(bundle, cap=args.commutant_cap)
        except IndeterminateCommutant as exc:
            commutant_note = f"commutant: indeterminate ({exc})"
            indeterminate = True
        else:
            commutant_note = f"commutant dimension: {cdim} ({'irreducible' if cdim == 1 else 'NOT irreducible'})"
            if cdim != 1:
                failed.append(cdim)
    elif mode.kind == FLOAT:
        commutant_note = f"commutant: skipped (dim {bundle.dim} > cap {args.commutant_cap})"
    if commutant_note:
        print(commutant_note)

    if failed:
        print(f"FAIL: {len(failed)} check(s) above tolerance {args.tolerance:g}")
        return EXIT_FAIL
    if indeterminate:
        return EXIT_INDETERMINATE
    print("all checks passed")
    return EXIT_OK


def cmd_identity(args) -> int:
    s_values = [Fraction(s) for s in args.s] if args.s else [Fraction(3), Fraction(7, 2), Fraction(11, 5)]
    report = identity_sweep(
        args.p_max,
        s_values,
        max_entry=HalfInt.of(args.max_entry),
        max_configs=args.samples if args.samples > 0 else None,
    )
    print(
        f"configs: {report.configs} (+{report.extension_configs} formal extensions), "
        f"evaluations: {report.evaluations}, skipped: {report.skipped}"
    )
    if report.failures:
        config, s, value = report.failures[0]
        print(f"FAIL: sum rule != 1 at s={s} for {config}: got {value}")
        return EXIT_FAIL
    print("sum rule holds exactly at every sampled configuration")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsorep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a representation bundle and export it")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--weight", required=True, help="comma list, e.g. 1,0 or 3/2,1/2")
    _add_q_options(gen)
    gen.add_argument("-o", "--output", required=True)
    gen.add_argument("--format", choices=("json", "coo-text"), default="json")
    gen.add_argument("--checks", action="store_true", help="embed relation residual reports")
    gen.add_argument("--tolerance", type=float, default=1e-10)
    gen.set_defaults(func=cmd_gen)

    dim = sub.add_parser("dim", help="print the representation dimension")
    dim.add_argument("--n", type=int, required=True)
    dim.add_argument("--weight", required=True)
    dim.set_defaults(func=cmd_dim)

    verify = sub.add_parser("verify", help="run the relation and irreducibility suite")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--weight", required=True)
    _add_q_options(verify)
    verify.add_argument("--tolerance", type=float, default=1e-10)
    verify.add_argument("--commutant-cap", type=int, default=64)
    verify.set_defaults(func=cmd_verify)

    identity = sub.add_parser("identity", help="exact sum-rule sweep")
    identity.add_argument("--p-max", type=int, default=2)
    identity.add_argument("--s", action="append", help="rational s value; repeatable")
    identity.add_argument("--samples", type=int, default=0, help="cap configs per p (0 = all)")
    identity.add_argument("--max-entry", default="2", help="largest signature entry for config generation")
    identity.set_defaults(func=cmd_identity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "identity" and not 1 <= args.p_max <= 4:
        parser.error("--p-max must be between 1 and 4")
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
