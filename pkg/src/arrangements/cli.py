"""Command-line interface.

    arrangements charpoly FILE [--reduced] [--verify] [--json]
    arrangements chambers FILE [--verify] [--json]
    arrangements ziegler FILE --h0 K [--json]
    arrangements exponents FILE [--bound N] [--json]
    arrangements freeness FILE [--h0 K] [--bound N] [--method M] [--json]
    arrangements compare FILE --h0 K [--bound N] [--assert-tame] [--json]
    arrangements corpus list | corpus get NAME

FILE is a JSON arrangement file (see fileio) or `corpus:NAME` for a built-in
example.  --verify reruns the computation through the independent oracles and
exits 3 on any mismatch.  Exit codes: 0 ok/definitive, 2 Unknown verdict,
3 verification mismatch, 1 usage or input error.

The environment variable ARRANGEMENTS_DEGREE_BOUND supplies a default for
--bound when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus as corpus_data
from .core import form_to_string, var_names
from .criteria import abe_yoshinaga_free_check, compare_coefficients, yoshinaga_3d
from .derivations import FREE, UNKNOWN, find_free_basis
from .errors import ArrangementError, BadPrime, InputError
from .fileio import (
    ArrangementInput,
    fraction_to_json,
    load_arrangement,
    poly_coefficients,
    serialize_report,
    verdict_to_dict,
)
from .lattice import chamber_count, char_poly, reduced_char_poly
from .oracles import char_poly_recursion, finite_field_char_poly, region_count_recursion
from .restriction import _pivot, ziegler_restriction

ENV_BOUND = "ARRANGEMENTS_DEGREE_BOUND"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract reserves 2 for Unknown
    verdicts, so remap usage errors to exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _poly_str(poly, var="t"):
    if poly.degree < 0:
        return "0"
    parts = []
    for k in range(poly.degree, -1, -1):
        c = poly.coefficient(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        else:
            term = var if k == 1 else f"{var}^{k}"
            if mag != 1:
                term = f"{mag}{term}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def _load_input(spec):
    if spec.startswith("corpus:"):
        name = spec[len("corpus:") :]
        try:
            entry = corpus_data.get(name)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
        return ArrangementInput(
            arrangement=entry.arrangement, mult=entry.mult, labels=entry.labels()
        )
    return load_arrangement(spec)


def _require_simple(inp, command):
    if inp.mult and any(m != 1 for m in inp.mult):
        raise InputError(
            f"{command} works on simple arrangements; drop the 'mult' field"
        )


def _bound(args):
    if args.bound is not None:
        return args.bound
    raw = os.environ.get(ENV_BOUND)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(
                f"{ENV_BOUND} must be an integer, got {raw!r}"
            ) from None
    return None


def _header(arr):
    return f"dim {arr.dim}, {arr.n_hyperplanes} hyperplanes, rank {arr.rank()}"


# ---------------------------------------------------------------------------
# Subcommands.  Each returns the process exit code.


def _cmd_charpoly(args):
    arr = _load_input(args.file).arrangement
    chi = char_poly(arr)
    verified, mismatches = [], []
    if args.verify:
        rec = char_poly_recursion(arr)
        if rec == chi:
            verified.append("deletion-restriction recursion")
        else:
            mismatches.append(f"deletion-restriction recursion got {_poly_str(rec)}")
        try:
            ff = finite_field_char_poly(arr)
        except BadPrime as exc:
            print(f"note: finite-field oracle skipped: {exc}", file=sys.stderr)
        else:
            if ff == chi:
                verified.append("finite-field point counts")
            else:
                mismatches.append(f"finite-field oracle got {_poly_str(ff)}")
    poly = reduced_char_poly(arr) if args.reduced else chi
    name = "chi0" if args.reduced else "chi"
    if args.json:
        out = {
            "dim": arr.dim,
            "n_hyperplanes": arr.n_hyperplanes,
            "reduced": bool(args.reduced),
            "coefficients": poly_coefficients(poly),
        }
        if args.verify:
            out["verified_by"] = verified
            out["mismatches"] = mismatches
        print(json.dumps(out, indent=2))
    else:
        print(_header(arr))
        print(f"{name}(t) = {_poly_str(poly)}")
        if verified:
            print("verified by: " + ", ".join(verified))
    for item in mismatches:
        print(f"verification mismatch: {item}", file=sys.stderr)
    return 3 if mismatches else 0


def _cmd_chambers(args):
    arr = _load_input(args.file).arrangement
    count = chamber_count(arr)
    verified, mismatches = [], []
    if args.verify:
        rec = region_count_recursion(arr)
        if rec == count:
            verified.append("deletion-restriction recursion")
        else:
            mismatches.append(f"deletion-restriction recursion got {rec}")
        try:
            ff = finite_field_char_poly(arr)
        except BadPrime as exc:
            print(f"note: finite-field oracle skipped: {exc}", file=sys.stderr)
        else:
            ff_count = (-1) ** arr.dim * ff(-1)
            if ff_count == count:
                verified.append("finite-field point counts")
            else:
                mismatches.append(f"finite-field oracle got {ff_count}")
    if args.json:
        out = {
            "dim": arr.dim,
            "n_hyperplanes": arr.n_hyperplanes,
            "chambers": count,
        }
        if args.verify:
            out["verified_by"] = verified
            out["mismatches"] = mismatches
        print(json.dumps(out, indent=2))
    else:
        print(_header(arr))
        print(f"chambers: {count}")
        if verified:
            print("verified by: " + ", ".join(verified))
    for item in mismatches:
        print(f"verification mismatch: {item}", file=sys.stderr)
    return 3 if mismatches else 0


def _cmd_ziegler(args):
    inp = _load_input(args.file)
    _require_simple(inp, "ziegler")
    arr = inp.arrangement
    multi = ziegler_restriction(arr, args.h0)
    names = var_names(arr.dim)
    kept = [names[i] for i in range(arr.dim) if i != _pivot(arr.forms[args.h0])]
    labels = [form_to_string(f, kept) for f in multi.base.forms]
    if args.json:
        print(
            json.dumps(
                {
                    "dim": multi.dim,
                    "h0": args.h0,
                    "hyperplanes": [
                        [fraction_to_json(v) for v in f] for f in multi.base.forms
                    ],
                    "mult": list(multi.mult),
                    "total": multi.total,
                    "labels": labels,
                },
                indent=2,
            )
        )
    else:
        h0_label = form_to_string(arr.forms[args.h0], names)
        print(f"Ziegler restriction at h0={args.h0} ({h0_label} = 0)")
        print(
            f"dim {multi.dim}, {multi.base.n_hyperplanes} hyperplanes, "
            f"|m| = {multi.total}"
        )
        for label, m in zip(labels, multi.mult):
            print(f"  m={m}  {label} = 0")
    return 0


def _verdict_line(verdict):
    if verdict.is_free:
        exps = ", ".join(str(e) for e in verdict.exponents)
        return f"Free({exps})"
    if verdict.is_not_free:
        return f"NotFree ({verdict.witness})" if verdict.witness else "NotFree"
    return f"Unknown (degree bound {verdict.bound})"


def _cmd_exponents(args):
    inp = _load_input(args.file)
    multi = inp.multiarrangement()
    verdict = find_free_basis(multi, degree_bound=_bound(args))
    if args.json:
        print(json.dumps(verdict_to_dict(verdict), indent=2))
    else:
        print(
            f"dim {multi.dim}, {multi.base.n_hyperplanes} hyperplanes, "
            f"|m| = {multi.total}"
        )
        print(_verdict_line(verdict))
        if verdict.is_free and verdict.basis:
            for theta in verdict.basis:
                print(f"  {theta!r}")
    return 2 if verdict.is_unknown else 0


def _merge_verdicts(results):
    """Later definitive verdicts beat Unknown; definitive verdicts must agree."""
    merged = None
    for method, verdict in results.items():
        if verdict.status == UNKNOWN:
            continue
        if merged is None:
            merged = verdict
            continue
        if merged.status != verdict.status:
            raise RuntimeError(
                f"freeness criteria disagree: {merged.status} vs "
                f"{verdict.status} ({method})"
            )
        if merged.status == FREE and tuple(merged.exponents) != tuple(
            verdict.exponents
        ):
            raise RuntimeError(
                f"freeness criteria disagree on exponents: "
                f"{merged.exponents} vs {verdict.exponents} ({method})"
            )
        if verdict.basis is not None and merged.basis is None:
            merged = verdict
    if merged is None:
        merged = next(iter(results.values()))
    return merged


def _cmd_freeness(args):
    inp = _load_input(args.file)
    arr = inp.arrangement
    multi = inp.multiarrangement()
    simple = not inp.mult or all(m == 1 for m in inp.mult)
    bound = _bound(args)
    run_all = args.method == "all"
    methods = (
        ["yoshinaga", "abe-yoshinaga", "saito"] if run_all else [args.method]
    )

    results, notes = {}, []
    for method in methods:
        if method == "saito":
            results[method] = find_free_basis(multi, degree_bound=bound)
            continue
        # The two restriction criteria apply to simple arrangements only.
        if not simple:
            if run_all:
                notes.append(f"{method}: skipped (needs a simple arrangement)")
                continue
            raise InputError(f"{method} needs a simple arrangement")
        if method == "yoshinaga":
            if arr.dim != 3 or arr.rank() != 3:
                if run_all:
                    notes.append("yoshinaga: skipped (needs essential rank 3)")
                    continue
            results[method] = yoshinaga_3d(arr, args.h0)
        else:
            if arr.dim < 2:
                if run_all:
                    notes.append("abe-yoshinaga: skipped (needs dim >= 2)")
                    continue
            results[method] = abe_yoshinaga_free_check(
                arr, args.h0, degree_bound=bound
            )

    if not results:
        raise InputError("no applicable freeness method for this input")
    merged = _merge_verdicts(results)

    if args.json:
        print(
            json.dumps(
                {
                    "methods": {m: verdict_to_dict(v) for m, v in results.items()},
                    "skipped": notes,
                    "merged": verdict_to_dict(merged),
                },
                indent=2,
            )
        )
    else:
        print(
            f"dim {multi.dim}, {multi.base.n_hyperplanes} hyperplanes, "
            f"|m| = {multi.total}"
        )
        width = max(len(m) for m in results)
        for method, verdict in results.items():
            print(f"  {method:<{width}}  {_verdict_line(verdict)}")
        for note in notes:
            print(f"  {note}")
        if len(results) > 1:
            print(f"merged: {_verdict_line(merged)}")
    return 2 if merged.status == UNKNOWN else 0


def _compare_rows(report):
    rows = []
    for i, b in enumerate(report.table.b):
        status = report.table.sigma[i]
        sigma = status.value
        if sigma is None:
            comparison = "unresolved"
        elif report.inequality[i] is False:
            comparison = "VIOLATED"
        elif b == sigma:
            comparison = "equal"
        else:
            comparison = "strict"
        rows.append((i, b, "?" if sigma is None else sigma, status.method, comparison))
    return rows


def _cmd_compare(args):
    inp = _load_input(args.file)
    _require_simple(inp, "compare")
    report = compare_coefficients(
        inp.arrangement,
        args.h0,
        degree_bound=_bound(args),
        assert_tame=args.assert_tame,
    )
    if args.json:
        print(serialize_report(report))
    else:
        print(
            f"dim {report.dim}, {report.n_hyperplanes} hyperplanes, "
            f"h0 = {report.h0}"
        )
        tame_a, tame_r = report.tame_arrangement, report.tame_restriction
        print(
            f"tameness: arrangement {tame_a.status}"
            + (f" ({tame_a.reason})" if tame_a.reason else "")
            + f", restriction {tame_r.status}"
            + (f" ({tame_r.reason})" if tame_r.reason else "")
        )
        print(f"{'i':>3} {'b_i':>6} {'sigma_i':>8}  {'method':<18} comparison")
        for i, b, sigma, method, comparison in _compare_rows(report):
            print(f"{i:>3} {b:>6} {sigma:>8}  {method:<18} {comparison}")
        total_b, total_sigma = report.chamber_bound
        sigma_text = "?" if total_sigma is None else str(total_sigma)
        mca_text = {True: "yes", False: "no", None: "unknown"}[report.mca]
        print(f"chamber bound: sum b = {total_b}, sum sigma = {sigma_text}")
        print(f"MCA: {mca_text}")
    return 0 if report.all_sigma_exact else 2


def _cmd_corpus(args):
    if args.action == "list":
        entries = [corpus_data.get(name) for name in corpus_data.names()]
        if args.json:
            print(
                json.dumps(
                    [
                        {
                            "name": e.name,
                            "description": e.description,
                            "dim": e.arrangement.dim,
                            "n_hyperplanes": e.arrangement.n_hyperplanes,
                            "mult": list(e.mult) if e.mult else None,
                        }
                        for e in entries
                    ],
                    indent=2,
                )
            )
        else:
            width = max(len(e.name) for e in entries)
            for e in entries:
                shape = f"dim {e.arrangement.dim}, {e.arrangement.n_hyperplanes} hyperplanes"
                if e.mult:
                    shape += f", mult {list(e.mult)}"
                print(f"{e.name:<{width}}  {shape:<36}  {e.description}")
        return 0
    if not args.name:
        raise InputError("corpus get needs a NAME (see `corpus list`)")
    try:
        entry = corpus_data.get(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    print(json.dumps(entry.as_input(), indent=2))
    return 0


def _build_parser():
    parser = _Parser(
        prog="arrangements",
        description="Exact invariants of central rational hyperplane arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    p = add("charpoly", _cmd_charpoly, "characteristic polynomial")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--reduced", action="store_true", help="divide out (t - 1)")
    p.add_argument("--verify", action="store_true", help="cross-check via oracles")

    p = add("chambers", _cmd_chambers, "number of chambers")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--verify", action="store_true", help="cross-check via oracles")

    p = add("ziegler", _cmd_ziegler, "Ziegler restriction onto one hyperplane")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--h0", type=int, required=True, help="hyperplane index")

    p = add("exponents", _cmd_exponents, "multiarrangement exponents")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--bound", type=int, help="derivation degree bound")

    p = add("freeness", _cmd_freeness, "freeness criteria")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--h0", type=int, default=0, help="hyperplane index (default 0)")
    p.add_argument("--bound", type=int, help="derivation degree bound")
    p.add_argument(
        "--method",
        choices=["yoshinaga", "abe-yoshinaga", "saito", "all"],
        default="all",
    )

    p = add("compare", _cmd_compare, "b- vs sigma-coefficient comparison")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--h0", type=int, required=True, help="hyperplane index")
    p.add_argument("--bound", type=int, help="derivation degree bound")
    p.add_argument(
        "--assert-tame",
        action="store_true",
        help="record a user assertion that the input is tame",
    )

    p = add("corpus", _cmd_corpus, "built-in example arrangements")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?", metavar="NAME")

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArrangementError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
