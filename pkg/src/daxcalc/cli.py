"""``calc <command> --in FILE [--format text|json] [--orbit-bound N] [--drop-identity]``.

Exit codes: 0 success, 1 catalogue mismatch, 2 hypothesis diagnosis,
3 malformed input.
"""
from __future__ import annotations

import argparse
import sys

from .abelian import INFINITE
from .assembler import Diagnosis, ModuleError, augmented_report, theorem_c_report, theorem_d_report
from .catalogue import catalogue_check
from .dax import DaxQuotient, ParityContext, SpanSpec, dax_of_trace, md_image_quotient
from .descriptor import (InputError, dim, group_spec, homotopy_data, manifold_input, option_flag, option_str,
                         parse_file, span, trace)
from .frames import (admits_extension, bo_extension, bo_middle_curated, euler_image, splitting_exists,
                     stiefel_first, tangent_sw_constraint, z_kd)
from .groups import GroupError
from .render import Result, render_report
from .ring import format_ring_element
from .tables import UNKNOWN, TableError

COMMANDS = ("dax", "quotient", "stiefel", "bo-table", "theorem-c", "theorem-d", "augmented", "catalogue")
NEEDS_INPUT = {"dax", "quotient", "stiefel", "theorem-c", "theorem-d", "augmented"}

EXIT_OK, EXIT_MISMATCH, EXIT_DIAGNOSIS, EXIT_INPUT = 0, 1, 2, 3


def _context(desc) -> ParityContext:
    ell, d = dim(desc, "ell"), dim(desc, "d")
    try:
        return ParityContext(ell, d)
    except ValueError as exc:
        raise desc.error(str(exc), desc.one("dims", "ell")) from None


def cmd_dax(desc, args):
    spec, ctx = group_spec(desc), _context(desc)
    drop = args.drop_identity or option_flag(desc, "drop_identity")
    t = trace(desc, spec)
    da = dax_of_trace(ctx, spec, t, drop)
    target = ("Z[pi - 1]" if drop else "Z[pi]") + ("" if ctx.relations_trivial else "/R")
    return Result("Dax invariant of a trace", (
        ("group", spec.describe()), ("ell", ctx.ell), ("d", ctx.d), ("eps", ctx.sign),
        ("target", target), ("events", len(t.events)), ("Da", format_ring_element(spec, da.value)),
    ))


def cmd_quotient(desc, args):
    spec, ctx = group_spec(desc), _context(desc)
    drop = args.drop_identity or option_flag(desc, "drop_identity")
    md = span(desc, spec, "md")
    md = md or SpanSpec()
    q = DaxQuotient(ctx, spec, md, drop)
    fields = [("group", spec.describe()), ("ell", ctx.ell), ("d", ctx.d), ("eps", ctx.sign),
              ("span", tuple(format_ring_element(spec, q.reduce(x)) for x in md.generators))]
    notes = []
    if spec.has_finite_order:
        fields.append(("quotient", md_image_quotient(ctx, spec, md, drop)))
    else:
        fields.append(("quotient", q.describe()))
        notes.append("only the integer span of the listed generators is divided out")
    if desc.events:
        t = trace(desc, spec)
        x = t.as_ring_element()
        order = q.order(x)
        fields.append(("trace class", format_ring_element(spec, q.reduce(x))))
        fields.append(("trace class is zero", q.contains(x)))
        fields.append(("trace class order", "infinite" if order is INFINITE else order))
    return Result("Dax quotient", tuple(fields), notes=tuple(notes))


def cmd_stiefel(desc, args):
    k, d = dim(desc, "k"), dim(desc, "d")
    if not 1 <= k <= d:
        raise desc.error(f"need 1 <= k <= d, got k = {k}, d = {d}", desc.one("dims", "k"))
    boundary = option_flag(desc, "boundary")
    sw = option_str(desc, "sw_vanishes", "unknown", ("yes", "no", "unknown"))
    fields = [
        ("k", k), ("d", d),
        (f"pi_{d - k} V_{k}(R^{d})", stiefel_first(k, d)),
        ("vanishing range", f"pi_n V_{k}(R^{d}) = 0 for n <= {d - k - 1}" if d - k >= 1 else "none"),
        ("Z_kd", z_kd(k, d).value),
        (f"Euler image (ell = {k})", euler_image(k, d, boundary, sw).value),
    ]
    notes = []
    if k == d:
        notes.append("k = d: the first group is pi_0 O(d), a two-point set with its group structure")
    if k >= 2:
        fields.append(("tangent sw constraint", tangent_sw_constraint(k, d).value))
        for context in ("tangent_bundle_of_compact_manifold", "general"):
            verdict, rule = splitting_exists(k, d, context)
            fields.append((f"splitting ({context})", f"{verdict.value}: {rule}"))
    return Result("frame bundle groups", tuple(fields), notes=tuple(notes))


def cmd_bo_table(desc, args):
    top = dim(desc, "m", required=False) if desc is not None else None
    top = top or 24
    rows = []
    for m in range(1, top + 1):
        ext = bo_extension(m)
        curated = bo_middle_curated(m)
        if curated is UNKNOWN:
            check = "-"
        else:
            ok = admits_extension(ext.kernel.group, curated, ext.cokernel)
            if ext.middle is not None:
                ok = ok and ext.middle == curated
            check = "consistent" if ok else "INCONSISTENT"
        rows.append((str(m), ext.kernel.value, str(ext.cokernel),
                     "?" if ext.middle is None else str(ext.middle), ext.split,
                     "-" if curated is UNKNOWN else str(curated), check))
    notes = sorted({bo_extension(m).note for m in range(1, top + 1)} - {""})
    return Result("kernel >-> pi_(m-1) BO_(m-1) ->> pi_(m-1) BO",
                  columns=("m", "kernel", "cokernel", "middle", "split", "curated", "check"), rows=tuple(rows),
                  notes=tuple(notes))


def cmd_theorem_c(desc, args):
    spec = group_spec(desc)
    ell, d = dim(desc, "ell"), dim(desc, "d")
    return theorem_c_report(ell, d, spec, span(desc, spec, "md") or SpanSpec(), homotopy_data(desc))


def cmd_theorem_d(desc, args):
    return theorem_d_report(manifold_input(desc, args.orbit_bound))


def cmd_augmented(desc, args):
    spec = group_spec(desc)
    ell, d = dim(desc, "ell"), dim(desc, "d")
    return augmented_report(ell, d, spec, span(desc, spec, "md") or SpanSpec(), span(desc, spec, "md_eps"),
                            homotopy_data(desc))


def cmd_catalogue(desc, args):
    rows = []
    for section, cases in catalogue_check():
        for c in cases:
            rows.append(("pass" if c.passed else "FAIL", section, c.name, c.computed, c.expected))
    passed = sum(r[0] == "pass" for r in rows)
    return Result("catalogue of worked examples", (("cases", len(rows)), ("passed", passed)),
                  columns=("status", "section", "case", "computed", "expected"), rows=tuple(rows))


HANDLERS = {
    "dax": cmd_dax, "quotient": cmd_quotient, "stiefel": cmd_stiefel, "bo-table": cmd_bo_table,
    "theorem-c": cmd_theorem_c, "theorem-d": cmd_theorem_d, "augmented": cmd_augmented,
    "catalogue": cmd_catalogue,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="calc", description="Exact algebra for spaces of embedded disks.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--in", dest="input", metavar="FILE", help="input descriptor")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--orbit-bound", type=int, default=None, metavar="N",
                   help="word length for translates of the dual over a free group")
    p.add_argument("--drop-identity", action="store_true", help="work in Z[pi - 1]")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.orbit_bound is not None and args.orbit_bound < 0:
        print("calc: --orbit-bound must be >= 0", file=stderr)
        return EXIT_INPUT
    try:
        if args.command in NEEDS_INPUT and not args.input:
            raise InputError(f"{args.command} needs --in FILE")
        desc = parse_file(args.input) if args.input else None
        result = HANDLERS[args.command](desc, args)
    except (InputError, GroupError, ModuleError, TableError) as exc:
        print(f"calc: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write(render_report(result, args.format, args.command))
    stdout.flush()
    if isinstance(result, Diagnosis):
        return EXIT_DIAGNOSIS
    if args.command == "catalogue" and any(r[0] != "pass" for r in result.rows):
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
