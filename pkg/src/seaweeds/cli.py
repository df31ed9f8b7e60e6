"""Command-line interface.

Subcommands: index, contact, stable, basis, classify, verify, meander.
Environment variables (SEAWEEDS_FAMILY, SEAWEEDS_SEED, SEAWEEDS_ATTEMPTS,
SEAWEEDS_BOUND, SEAWEEDS_TRIALS, SEAWEEDS_FORMAT) supply defaults; explicit
flags always win.  Exit codes: classify returns 0 on success, 2 when any
COUNTEREXAMPLE record exists, 3 under --strict when only UNRESOLVED records
spoil the run; contact/stable/basis return 1 when the search comes up empty;
verify returns 0 for valid, 1 for invalid, 2 for unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify as classify_mod
from .classify import LIMITS, classify, exit_status, report
from .construct import AmbientAlgebra, Composition, flag_seaweed, parse_pair, seaweed
from .contact import contact_basis, find_contact_form, find_stable_form
from .lie import index
from .meander import census, meander, meander_index, meander_svg
from .serialize import algebra_to_json, certificate_to_json, frac_to_str, verify_document


def _env_int(name, fallback):
    value = os.environ.get(name)
    return int(value) if value else fallback


def _env_str(name, fallback):
    return os.environ.get(name) or fallback


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(parser, *, formats=("text", "json"), with_search=False):
    parser.add_argument("--seed", type=int, default=_env_int("SEAWEEDS_SEED", 0))
    parser.add_argument("--bound", type=int, default=_env_int("SEAWEEDS_BOUND", 10**6))
    if with_search:
        parser.add_argument(
            "--attempts", type=int, default=_env_int("SEAWEEDS_ATTEMPTS", 64)
        )
    parser.add_argument(
        "--format",
        choices=formats,
        default=_env_str("SEAWEEDS_FORMAT", formats[0]),
    )
    parser.add_argument("--out", help="write output to this file instead of stdout")


def _add_algebra_args(parser):
    parser.add_argument(
        "pair", nargs="?", help='composition pair "TOP|BOTTOM", e.g. "2,1|3"'
    )
    parser.add_argument(
        "--family",
        choices=sorted(LIMITS),
        default=_env_str("SEAWEEDS_FAMILY", "GL"),
    )
    parser.add_argument("--top", help='top composition, e.g. "2,1"')
    parser.add_argument("--bot", help='bottom composition, e.g. "3"')
    parser.add_argument(
        "--n", type=int, help="rank parameter (required for SP/SO, optional check otherwise)"
    )


def _compositions(args):
    if args.pair:
        return parse_pair(args.pair)
    if args.top is None or args.bot is None:
        raise SystemExit("error: give a TOP|BOTTOM pair or both --top and --bot")
    return Composition.parse(args.top), Composition.parse(args.bot)


def _build_algebra(args):
    top, bottom = _compositions(args)
    family = args.family.upper()
    if family in ("GL", "SL"):
        n = args.n if args.n is not None else top.total
        return seaweed(family, n, top, bottom)
    if args.n is None:
        raise SystemExit(f"error: --n is required for family {family}")
    return flag_seaweed(AmbientAlgebra(family, args.n), top, bottom)


def _cmd_index(args):
    g = _build_algebra(args)
    rep = index(g, args.seed, trials=args.trials, bound=args.bound)
    if args.format == "json":
        doc = {
            "label": rep.label,
            "dim": g.dim,
            "index": rep.index,
            "witness_form": [frac_to_str(x) for x in rep.witness_form.coords],
            "samples_used": rep.samples_used,
            "seed": rep.seed,
            "trial_kernel_dims": list(rep.trial_kernel_dims),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(
            f"{rep.label}: index {rep.index} (dim {g.dim}, trials {rep.samples_used}, "
            f"bound {args.bound}, seed {rep.seed}, kernel dims {list(rep.trial_kernel_dims)})\n",
            args.out,
        )
    return 0


def _certificate_document(g, cert):
    return {
        "schema": 1,
        "algebra": algebra_to_json(g),
        "certificates": [certificate_to_json(cert)],
    }


def _cmd_contact(args):
    g = _build_algebra(args)
    cert = find_contact_form(g, args.seed, attempts=args.attempts, bound=args.bound)
    if cert is None:
        _emit(f"{g.label}: no contact form found in {args.attempts} attempts\n", args.out)
        return 1
    if args.format == "json":
        _emit(json.dumps(_certificate_document(g, cert), indent=2) + "\n", args.out)
    else:
        reeb = [frac_to_str(x) for x in cert.reeb.coords]
        _emit(f"{g.label}: contact form found; reeb {reeb}\n", args.out)
    return 0


def _cmd_stable(args):
    g = _build_algebra(args)
    cert = find_stable_form(g, args.seed, attempts=args.attempts, bound=args.bound)
    if cert is None:
        _emit(f"{g.label}: no stable form found in {args.attempts} attempts\n", args.out)
        return 1
    if args.format == "json":
        _emit(json.dumps(_certificate_document(g, cert), indent=2) + "\n", args.out)
    else:
        _emit(
            f"{g.label}: stable form found; kernel dim {cert.kernel.dim}, "
            f"bracket span dim {cert.bracket_span.dim}\n",
            args.out,
        )
    return 0


def _cmd_basis(args):
    g = _build_algebra(args)
    cert = find_contact_form(g, args.seed, attempts=args.attempts, bound=args.bound)
    if cert is None:
        _emit(f"{g.label}: no contact form found in {args.attempts} attempts\n", args.out)
        return 1
    basis = contact_basis(g, cert)
    if args.format == "json":
        doc = {
            "label": g.label,
            "form": [frac_to_str(x) for x in cert.form.coords],
            "elements": [[frac_to_str(x) for x in e.coords] for e in basis.elements],
            "dual_check": [[frac_to_str(x) for x in row] for row in basis.dual_check.rows],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [f"{g.label}: contact basis ({len(basis.elements)} elements)"]
        for pos, e in enumerate(basis.elements, start=1):
            lines.append(f"  E{pos} = {[frac_to_str(x) for x in e.coords]}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_meander(args):
    top, bottom = _compositions(args)
    graph = meander(top, bottom)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(meander_svg(graph))
    cycles, paths = census(graph)
    if args.format == "json":
        doc = {
            "n": graph.n,
            "top_edges": [list(e) for e in graph.top_edges],
            "bottom_edges": [list(e) for e in graph.bottom_edges],
            "cycles": cycles,
            "paths": paths,
            "index_gl": meander_index(graph, "GL"),
            "index_sl": meander_index(graph, "SL"),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(
            f"meander {top}|{bottom}: top arcs {list(graph.top_edges)}, "
            f"bottom arcs {list(graph.bottom_edges)}; {cycles} cycles, {paths} paths; "
            f"gl index {meander_index(graph, 'GL')}, sl index {meander_index(graph, 'SL')}\n",
            args.out,
        )
    return 0


def _cmd_classify(args):
    records = classify(
        args.family,
        args.n,
        seed=args.seed,
        attempts=args.attempts,
        bound=args.bound,
        trials=args.trials,
        force=args.force,
        embed_certificates=args.embed,
    )
    meta = {
        "family": args.family.upper(),
        "n": args.n,
        "seed": args.seed,
        "budgets": {"attempts": args.attempts, "bound": args.bound, "trials": args.trials},
    }
    _emit(report(records, args.format, meta=meta), args.out)
    return exit_status(records, strict=args.strict)


def _cmd_verify(args):
    try:
        with open(args.file) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read certificate file: {exc}", file=sys.stderr)
        return 2
    try:
        ok = verify_document(doc)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("valid" if ok else "INVALID")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seaweeds",
        description="Seaweed Lie algebras over exact rationals: index, contact "
        "and stability analysis, and exhaustive small-rank classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="randomized index of one seaweed")
    _add_algebra_args(p)
    _add_common(p)
    p.add_argument("--trials", type=int, default=_env_int("SEAWEEDS_TRIALS", 3))
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("contact", help="search for a contact form")
    _add_algebra_args(p)
    _add_common(p, with_search=True)
    p.set_defaults(func=_cmd_contact)

    p = sub.add_parser("stable", help="search for a stable form")
    _add_algebra_args(p)
    _add_common(p, with_search=True)
    p.set_defaults(func=_cmd_stable)

    p = sub.add_parser("basis", help="contact basis for a found contact form")
    _add_algebra_args(p)
    _add_common(p, with_search=True)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("meander", help="meander graph, census, and index")
    p.add_argument("pair", nargs="?", help='composition pair "TOP|BOTTOM"')
    p.add_argument("--top")
    p.add_argument("--bot")
    p.add_argument("--svg", help="write an SVG drawing to this path")
    p.add_argument(
        "--format", choices=("text", "json"), default=_env_str("SEAWEEDS_FORMAT", "text")
    )
    p.add_argument("--out")
    p.set_defaults(func=_cmd_meander)

    p = sub.add_parser("classify", help="sweep all composition pairs of a family")
    p.add_argument(
        "--family", choices=sorted(LIMITS), default=_env_str("SEAWEEDS_FAMILY", "GL")
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=_env_int("SEAWEEDS_SEED", 0))
    p.add_argument("--attempts", type=int, default=_env_int("SEAWEEDS_ATTEMPTS", 64))
    p.add_argument("--bound", type=int, default=_env_int("SEAWEEDS_BOUND", 10**6))
    p.add_argument("--trials", type=int, default=_env_int("SEAWEEDS_TRIALS", 3))
    p.add_argument(
        "--format", choices=("json", "csv", "text"), default=_env_str("SEAWEEDS_FORMAT", "json")
    )
    p.add_argument("--out")
    p.add_argument("--strict", action="store_true", help="exit 3 on unresolved records")
    p.add_argument("--embed", action="store_true", help="embed certificates in records")
    p.add_argument("--force", action="store_true", help="override the rank limits")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="re-check a certificate file or report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except classify_mod.LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
