"""Command-line interface.

Subcommands:

  report <file>         analyze one cover document (JSON), print text + JSONL
  enumerate             catalog admissible branch data up to a degree bound
  monodromy             run the loop tracker and print the puncture table
  fibers                print the singular-fiber reference tables
  verify-paper          re-run every pinned reference check, one line per check

Exit codes: 0 success, 1 internal check failure, 2 invalid input,
3 requested quantity unsupported (outside the tabulated cases).

Input documents are JSON objects carrying either bare branch data

    {"branch_data": {"n": 5, "x": [5], "y": [1, 4], "z": [1, 1, 1, 1, 1], "r": 1}}

or an explicit monodromy tuple in cycle notation (whitespace/commas both fine)

    {"cover": {"degree": 4,
               "quarter256": "(1 3)", "infinity": "(1 4 3 2)", "zero": "(1 2)(3 4)",
               "extras": []}}

with an optional {"options": {"output_format": "text" | "jsonl" | "both",
"search_limit": int, "max_candidates": int}}.  Structured output is
line-delimited JSON with a stable field order; all values are integers,
booleans or strings, so output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hodge, hurwitz, monodromy, verification
from .hurwitz import BranchData, HurwitzCover
from .permutations import Permutation, PermutationError

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_UNSUPPORTED = 3


class DocumentError(ValueError):
    """Schema violation in an input document, with field context."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# -- document parsing ------------------------------------------------------------


def _expect_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(path, f"expected an integer, got {value!r}")
    return value


def _expect_partition(value, path: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise DocumentError(path, f"expected a non-empty list of integers, got {value!r}")
    return tuple(_expect_int(v, f"{path}[{i}]") for i, v in enumerate(value))


def parse_branch_data(obj, path: str = "branch_data") -> BranchData:
    if not isinstance(obj, dict):
        raise DocumentError(path, "expected an object")
    unknown = set(obj) - {"n", "x", "y", "z", "r"}
    if unknown:
        raise DocumentError(path, f"unknown fields {sorted(unknown)}")
    try:
        return BranchData(
            n=_expect_int(obj.get("n"), f"{path}.n"),
            x=_expect_partition(obj.get("x"), f"{path}.x"),
            y=_expect_partition(obj.get("y"), f"{path}.y"),
            z=_expect_partition(obj.get("z"), f"{path}.z"),
            r=_expect_int(obj.get("r", 0), f"{path}.r"),
        )
    except hurwitz.HurwitzError as exc:
        raise DocumentError(path, str(exc)) from None


def parse_cover(obj, path: str = "cover") -> HurwitzCover:
    if not isinstance(obj, dict):
        raise DocumentError(path, "expected an object")
    unknown = set(obj) - {"degree", "quarter256", "infinity", "zero", "extras"}
    if unknown:
        raise DocumentError(path, f"unknown fields {sorted(unknown)}")
    degree = _expect_int(obj.get("degree"), f"{path}.degree")

    def perm(field: str, text) -> Permutation:
        if text is None:
            return Permutation.identity(degree)
        if not isinstance(text, str):
            raise DocumentError(f"{path}.{field}", f"expected a cycle string, got {text!r}")
        try:
            return Permutation.from_cycle_string(degree, text)
        except PermutationError as exc:
            raise DocumentError(f"{path}.{field}", str(exc)) from None

    extras_obj = obj.get("extras", [])
    if not isinstance(extras_obj, list):
        raise DocumentError(f"{path}.extras", "expected a list of cycle strings")
    extras = tuple(
        perm(f"extras[{i}]", text) for i, text in enumerate(extras_obj)
    )
    return HurwitzCover.make(
        degree,
        quarter256=perm("quarter256", obj.get("quarter256")),
        infinity=perm("infinity", obj.get("infinity")),
        zero=perm("zero", obj.get("zero")),
        extras=extras,
    )


def load_document(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise DocumentError(path, f"cannot read: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(path, f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("$", "document must be a JSON object")
    has_data = "branch_data" in doc
    has_cover = "cover" in doc
    if has_data == has_cover:
        raise DocumentError("$", "provide exactly one of 'branch_data' or 'cover'")
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise DocumentError("options", "expected an object")
    known = {"output_format", "search_limit", "max_candidates", "precision_bits", "step_scale"}
    unknown = set(options) - known
    if unknown:
        raise DocumentError("options", f"unknown fields {sorted(unknown)}")
    for field in ("search_limit", "max_candidates", "precision_bits", "step_scale"):
        if field in options:
            _expect_int(options[field], f"options.{field}")
    return doc, options


# -- rendering -------------------------------------------------------------------


def _inventory_dict(inv: hodge.FiberInventory) -> dict:
    return {
        "over_zero": [
            {"x": x, "components": count} for x, count in inv.zero_fibers
        ],
        "over_infinity": [
            {
                "y": y,
                "components": count,
                "multiplicities": [list(pair) for pair in mults] if mults else None,
            }
            for y, count, mults in inv.infinity_fibers
        ],
        "over_quarter256": [
            {"z": z, "terminal_points": count, "type": f"cA_{z - 1}" if count else None}
            for z, count in inv.quarter_points
        ],
    }


def report_record(r: hodge.CYReport) -> dict:
    return {
        "branch_data": {
            "n": r.branch.n,
            "x": list(r.branch.x),
            "y": list(r.branch.y),
            "z": list(r.branch.z),
            "r": r.branch.r,
        },
        "cy": r.cy,
        "guaranteed_smooth": r.guaranteed_smooth,
        "terminal_singularities": r.inventory.terminal_singularity_count(),
        "fibers": _inventory_dict(r.inventory),
        "fixed_curve": None
        if r.s is None
        else {"components": r.s, "genera": list(r.genera), "p_g": r.p_g},
        "c": list(r.c) if r.c else None,
        "h11": r.h11,
        "h21": r.h21,
        "euler": r.euler,
        "unsupported": r.unsupported,
        "ambiguous": r.ambiguous,
        "search_truncated": r.search_truncated,
    }


def render_report_text(r: hodge.CYReport) -> str:
    b = r.branch
    lines = [
        f"branch data       (k,l,m,n,r) = ({b.k},{b.l},{b.m},{b.n},{b.r})   "
        f"x={list(b.x)} y={list(b.y)} z={list(b.z)}",
        f"trivial canonical {'yes' if r.cy else 'no'}",
        f"smoothness        {'guaranteed (unramified over 1/256)' if r.guaranteed_smooth else 'not guaranteed by the criterion'}",
        f"terminal points   {r.inventory.terminal_singularity_count()}"
        + (
            "  (" + ", ".join(f"cA_{z - 1} x{c}" for z, c in r.inventory.quarter_points if c) + ")"
            if r.inventory.terminal_singularity_count()
            else ""
        ),
    ]
    for x, count in r.inventory.zero_fibers:
        lines.append(f"fiber over 0      x={x}: {count} components")
    for y, count, _ in r.inventory.infinity_fibers:
        lines.append(
            f"fiber over inf    y={y}: "
            + (f"{count} components" if count is not None else "no tabulated resolution")
        )
    if r.s is not None:
        lines.append(
            f"fixed curve       {r.s} components, genera {list(r.genera)}, p_g = {r.p_g}"
        )
    if r.h11 is not None:
        lines.append(f"hodge numbers     h11 = {r.h11}, h21 = {r.h21}, e = {r.euler}")
    if r.unsupported:
        lines.append(f"unsupported       {r.unsupported}")
    if r.ambiguous:
        lines.append("ambiguous         multiple outcomes realize this branch data")
    if r.search_truncated:
        lines.append("note              tuple search truncated; outcomes may be missing")
    return "\n".join(lines)


def _emit(reports: list[hodge.CYReport], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt in ("text", "both"):
        for i, r in enumerate(reports):
            if len(reports) > 1:
                out.write(f"--- outcome {i + 1} of {len(reports)} ---\n")
            out.write(render_report_text(r) + "\n")
    if fmt in ("jsonl", "both"):
        for r in reports:
            out.write(json.dumps(report_record(r), separators=(", ", ": ")) + "\n")


# -- subcommands ------------------------------------------------------------------


def cmd_report(args) -> int:
    try:
        doc, options = load_document(args.file)
        fmt = options.get("output_format", "both")
        if fmt not in ("text", "jsonl", "both"):
            raise DocumentError("options.output_format", f"unknown format {fmt!r}")
        limit = options.get("search_limit", 16)
        max_candidates = options.get("max_candidates", 2_000_000)
        if "cover" in doc:
            cover = parse_cover(doc["cover"])
            problems = hurwitz.validate(cover)
            if problems:
                for p in problems:
                    sys.stderr.write(f"invalid cover: {p}\n")
                return EXIT_INVALID_INPUT
            reports = [hodge.analyze_cover(cover)]
        else:
            data = parse_branch_data(doc["branch_data"])
            reports = hodge.analyze_branch_data(
                data, limit=limit, max_candidates=max_candidates
            )
    except DocumentError as exc:
        sys.stderr.write(f"invalid document: {exc}\n")
        return EXIT_INVALID_INPUT
    _emit(reports, fmt)
    if any(r.unsupported and r.cy for r in reports):
        return EXIT_UNSUPPORTED
    return EXIT_OK


def _partitions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or first >= rest[0]:
                yield (first,) + rest


def admissible_branch_data(max_degree: int) -> list[BranchData]:
    """All branch data with n <= max_degree passing the Calabi-Yau condition."""
    out = []
    for n in range(1, max_degree + 1):
        parts = list(_partitions(n))
        ys = [p for p in parts if (len(p) == 2 and all(v in (1, 2, 4) for v in p)) or p == (8,)]
        for y in ys:
            for x in parts:
                for z in parts:
                    r = len(x) + len(y) + len(z) - n - 2
                    if r < 0:
                        continue
                    out.append(BranchData(n=n, x=x, y=y, z=z, r=r))
    out.sort(key=lambda b: (b.n, b.x, b.y, b.z, b.r))
    return [b for b in out if hodge.cy_condition(b)]


def cmd_enumerate(args) -> int:
    if args.max_degree < 1 or args.max_degree > 12:
        sys.stderr.write("enumerate: --max-degree must be between 1 and 12\n")
        return EXIT_INVALID_INPUT
    catalog = admissible_branch_data(args.max_degree)
    for b in catalog:
        if args.no_search:
            reports = [
                hodge.CYReport(
                    branch=b,
                    cy=True,
                    guaranteed_smooth=hodge.smoothness(b),
                    inventory=hodge.fiber_inventory(b),
                    unsupported="tuple search skipped",
                )
            ]
        else:
            reports = hodge.analyze_branch_data(
                b, limit=args.limit, max_candidates=args.max_candidates
            )
        _emit(reports, "jsonl")
    sys.stderr.write(f"enumerate: {len(catalog)} admissible branch data\n")
    return EXIT_OK


def cmd_monodromy(args) -> int:
    try:
        table = monodromy.puncture_table(
            precision_bits=args.precision, initial_steps=args.steps
        )
    except monodromy.MonodromyError as exc:
        sys.stderr.write(f"monodromy failed: {exc}\n")
        return EXIT_CHECK_FAILURE
    rho = verification.find_relabeling(table)
    print(f"base point        lambda = -257/256, precision {args.precision} bits")
    for mark, perm in table.as_dict().items():
        print(f"loop around {mark:<11} {perm.cycle_string():<18} cycle type {list(perm.cycle_type())}")
    product = table.around_zero * table.around_infinity * table.around_quarter256
    print(f"product (0 after inf after 1/256): {product.cycle_string()}")
    if rho is None:
        print("reference match   FAILED: no relabeling reproduces the pinned table")
        return EXIT_CHECK_FAILURE
    print(f"reference match   via relabeling {rho.cycle_string()}")
    return EXIT_OK if product.is_identity else EXIT_CHECK_FAILURE


def cmd_fibers(args) -> int:
    print("fiber over 0 with ramification x: x^2+1 components (x odd), x^2+2 (x even)")
    for x in range(1, args.max_x + 1):
        print(f"  x = {x:>2}: {hodge.components_over_zero(x):>4} components")
    print("fiber over infinity with ramification y:")
    for y in (1, 2, 4, 8):
        mults = ", ".join(
            f"{count} of multiplicity {mult}"
            for mult, count in hodge.MULTIPLICITIES_BY_Y[y]
        )
        print(f"  y = {y}: {hodge.COMPONENTS_BY_Y[y]} components ({mults})")
    print("point over 1/256 with ramification z:")
    print("  z = 1: no singular point; z > 1: two isolated terminal points of type cA_{z-1}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.only:
        unknown = set(args.only) - set(verification.check_keys())
        if unknown:
            sys.stderr.write(
                f"unknown check keys {sorted(unknown)}; available: "
                f"{', '.join(verification.check_keys())}\n"
            )
            return EXIT_INVALID_INPUT
    results = verification.run_all(args.only or None)
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.key:<24} {result.description} [{result.seconds:.2f}s]")
        if not result.passed:
            print(f"      expected: {result.expected}")
            print(f"      actual:   {result.actual}")
            failures += 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILURE


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="kumfib",
        description="Kummer-fibred Calabi-Yau threefold calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="analyze a cover document")
    p_report.add_argument("file", help="JSON document (see module docstring)")
    p_report.set_defaults(fn=cmd_report)

    p_enum = sub.add_parser("enumerate", help="catalog admissible branch data")
    p_enum.add_argument("--max-degree", type=int, required=True)
    p_enum.add_argument("--limit", type=int, default=8, help="tuples kept per datum")
    p_enum.add_argument(
        "--max-candidates", type=int, default=20_000, help="search budget per datum"
    )
    p_enum.add_argument("--no-search", action="store_true", help="skip tuple searches")
    p_enum.set_defaults(fn=cmd_enumerate)

    p_mono = sub.add_parser("monodromy", help="track the six roots around the punctures")
    p_mono.add_argument("--precision", type=int, default=128, metavar="BITS")
    p_mono.add_argument("--steps", type=int, default=256, metavar="N")
    p_mono.set_defaults(fn=cmd_monodromy)

    p_fib = sub.add_parser("fibers", help="print the singular-fiber reference tables")
    p_fib.add_argument("--max-x", type=int, default=8)
    p_fib.set_defaults(fn=cmd_fibers)

    p_verify = sub.add_parser(
        "verify-paper", help="re-run every pinned reference check"
    )
    p_verify.add_argument(
        "--only", nargs="*", metavar="KEY", help="restrict to the named checks"
    )
    p_verify.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
