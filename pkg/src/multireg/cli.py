"""Command line front end.

Subcommands: bound, en-shape, ltg, lineartoreg, msgen, reg-sum, scan,
verify.  Problem files are JSON (see problemfile); output is a human
table by default and exact JSON with --json.  Exit codes: 0 success,
1 verify failure, 2 validation error, 3 excluded-case bound, 4 growth
test failure, 5 scan boundary uncertainty.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cohom import FieldConfig, regularity_scan
from .glp import curve_regularity_bound, en_complex_shape
from .plot import ascii_staircase, save_staircase, write_corner_table
from .problemfile import Problem, ProblemError, load_problem, parse_window
from .regions import Region, twist_sum_region
from .twistcx import LinearGrowthError, complex_region_bound, leading_term_bound, linear_twist_growth
from .verify import run_checks

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_VALIDATION = 2
EXIT_EXCLUDED = 3
EXIT_GROWTH = 4
EXIT_BOUNDARY = 5

HYPOTHESIS_NOTE = (
    "assumes the complex is exact away from a locus of dimension at most one; "
    "the shape alone cannot verify this"
)


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)


def _require(problem: Problem, kind: str, command: str) -> None:
    if problem.kind != kind:
        raise ProblemError(f"{command} needs a {kind} payload, got {problem.kind}")


def _region_json(region: Region) -> dict:
    return region.to_json()


def cmd_bound(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "curve", "bound")
    advisory = args.advisory or problem.options.advisory
    result = curve_regularity_bound(problem.curve)
    code = EXIT_EXCLUDED if result.excluded_p1xp1 and not advisory else EXIT_OK
    report = {
        "command": "bound",
        "ambient": list(problem.ambient.r),
        "degree": list(problem.curve.d),
        "sections": result.sections,
        "source_ranks": list(result.ranks),
        "bound": list(result.bound),
        "excluded_p1xp1": result.excluded_p1xp1,
        "advisory": advisory,
        "exit_code": code,
    }
    lines = [
        f"auxiliary sections a = {result.sections}",
        f"source ranks        {list(result.ranks)}",
        f"regularity bound    {list(result.bound)}",
        f"the cone {tuple(result.bound)} + N^n lies in the regularity region of the ideal sheaf,",
        f"so the curve is cut out scheme-theoretically by equations of multidegree "
        f"{tuple(result.bound)}, and already by generators of magnitude at most {result.sections}.",
    ]
    if result.excluded_p1xp1:
        lines.append(
            "warning: P^1 x P^1 is the excluded ambient for this bound "
            "(a counterexample exists); the value above is advisory only."
        )
    return _finish(args, report, lines, code)


def cmd_en_shape(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "curve", "en-shape")
    classical = args.classical_en or problem.options.classical_en
    shape = en_complex_shape(problem.curve, classical_ranks=classical)
    report = {
        "command": "en-shape",
        "ambient": list(problem.ambient.r),
        "sections": shape.sections,
        "source_ranks": list(shape.ranks),
        "classical_ranks": shape.classical,
        "terms": [
            [[list(m), rank] for m, rank in term] for term in shape.complex.terms
        ],
        "exit_code": EXIT_OK,
    }
    lines = [
        f"auxiliary sections a = {shape.sections}, source ranks {list(shape.ranks)}"
        + (", classical rank multipliers on" if shape.classical else ""),
        f"{len(shape.complex.terms)} terms; twists in term i have magnitude a + i",
    ]
    for i, term in enumerate(shape.complex.terms):
        body = "  ".join(f"{m}^{rank}" for m, rank in term)
        lines.append(f"  E{i}: {body}")
    return _finish(args, report, lines, EXIT_OK)


def cmd_ltg(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "complex", "ltg")
    outcome = linear_twist_growth(problem.complex)
    code = EXIT_OK if outcome.ok else EXIT_GROWTH
    report = {
        "command": "ltg",
        "ok": outcome.ok,
        "offender": None if outcome.ok else [outcome.offender[0], list(outcome.offender[1])],
        "witnesses": [
            [[k, list(m)], list(base)] for (k, m), base in outcome.witnesses
        ],
        "exit_code": code,
    }
    if outcome.ok:
        lines = ["linear twist growth holds"]
        for (k, m), base in outcome.witnesses:
            lines.append(f"  term {k}: {m} anchored by {base} in the leading term")
    else:
        k, m = outcome.offender
        lines = [f"linear twist growth fails: twist {m} in term {k} has no anchor"]
    return _finish(args, report, lines, code)


def cmd_lineartoreg(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "complex", "lineartoreg")
    try:
        region = leading_term_bound(problem.complex)
    except LinearGrowthError as exc:
        k, m = exc.offender
        report = {
            "command": "lineartoreg",
            "ok": False,
            "offender": [k, list(m)],
            "exit_code": EXIT_GROWTH,
        }
        lines = [f"refused: {exc}"]
        return _finish(args, report, lines, EXIT_GROWTH)
    report = {
        "command": "lineartoreg",
        "ok": True,
        "region": _region_json(region),
        "note": HYPOTHESIS_NOTE,
        "exit_code": EXIT_OK,
    }
    lines = [
        f"leading-term region: corners {[list(c) for c in region.corners]}",
        f"note: {HYPOTHESIS_NOTE}",
    ]
    return _finish(args, report, lines, EXIT_OK)


def cmd_msgen(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "complex", "msgen")
    n = problem.ambient.n
    terms = problem.complex.terms
    overrides = problem.options.regions or ()
    count = max(len(terms), len(overrides))
    regs = []
    for i in range(count):
        override = overrides[i] if i < len(overrides) else None
        if override is not None:
            regs.append(override)
        elif i < len(terms):
            regs.append(twist_sum_region(n, terms[i]))
        else:
            regs.append(Region.whole(n))
    region = complex_region_bound(regs, problem.ambient)
    report = {
        "command": "msgen",
        "term_regions": [_region_json(r) for r in regs],
        "region": _region_json(region),
        "note": HYPOTHESIS_NOTE,
        "exit_code": EXIT_OK,
    }
    lines = [
        f"combined region: corners {[list(c) for c in region.corners]}"
        if not region.everything
        else "combined region: everything",
        f"note: {HYPOTHESIS_NOTE}",
    ]
    return _finish(args, report, lines, EXIT_OK)


def cmd_reg_sum(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "sum", "reg-sum")
    region = twist_sum_region(problem.ambient.n, problem.sum)
    report = {
        "command": "reg-sum",
        "region": _region_json(region),
        "exit_code": EXIT_OK,
    }
    lines = [
        "regularity region: everything"
        if region.everything
        else f"regularity region: corners {[list(c) for c in region.corners]}"
    ]
    return _finish(args, report, lines, EXIT_OK)


def cmd_scan(args) -> int:
    problem = load_problem(args.problem)
    _require(problem, "presentation", "scan")
    n = problem.ambient.n
    if args.window is not None:
        window = parse_window(args.window, n)
    elif problem.options.window is not None:
        window = problem.options.window
    else:
        raise ProblemError("scan needs a window (flag --window or file option)")
    prime = args.prime if args.prime is not None else problem.options.prime
    field = FieldConfig(prime) if prime is not None else FieldConfig()
    result = regularity_scan(problem.presentation, window, field)
    code = EXIT_OK if result.certified else EXIT_BOUNDARY
    report = {"command": "scan", "ambient": list(problem.ambient.r)}
    report.update(result.to_json())
    report["exit_code"] = code

    lines = [
        f"window {', '.join(f'{lo}..{hi}' for lo, hi in window)}  "
        f"characteristic {field.characteristic}",
        f"corners: {[list(c) for c in result.region.corners]}",
        f"members in window: {len(result.members)}",
    ]
    for w in result.warnings():
        lines.append(f"warning: {w}")
    if n == 2 and not args.json:
        lines.append(ascii_staircase(result.region, window))

    if args.svg:
        if n != 2:
            raise ProblemError("staircase plots are only drawn for two factors")
        save_staircase(args.svg, result.region, window,
                       title=os.path.basename(args.problem))
        csv_path = os.path.splitext(args.svg)[0] + ".csv"
        write_corner_table(csv_path, result.region)
        report["svg"] = args.svg
        report["corners_csv"] = csv_path
        lines.append(f"wrote {args.svg} and {csv_path}")
    return _finish(args, report, lines, code)


def cmd_verify(args) -> int:
    results, all_ok = run_checks(only=args.only, prime=args.prime)
    code = EXIT_OK if all_ok else EXIT_VERIFY
    report = {
        "command": "verify",
        "prime": args.prime if args.prime is not None else 32003,
        "checks": [
            {"group": group, "name": name, "ok": ok, "detail": detail}
            for group, name, ok, detail in results
        ],
        "ok": all_ok,
        "exit_code": code,
    }
    lines = []
    for group, name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        lines.append(f"[{group:7}] {status}  {name}: {detail}")
    passed = sum(1 for _, _, ok, _ in results if ok)
    lines.append(f"{passed}/{len(results)} checks passed")
    return _finish(args, report, lines, code)


def _finish(args, report: dict, lines: list[str], code: int) -> int:
    _emit(args, report, lines)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multireg",
        description="Regularity regions, curve bounds, and exact cohomology "
        "scans on products of projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, problem=True):
        p = sub.add_parser(name, help=help_text)
        if problem:
            p.add_argument("problem", help="path to a JSON problem file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("bound", cmd_bound, "regularity bound vector for a curve")
    p.add_argument("--advisory", action="store_true",
                   help="exit 0 even for the excluded P^1 x P^1 ambient")

    p = add("en-shape", cmd_en_shape, "twist/rank table of the curve's complex")
    p.add_argument("--classical-en", action="store_true",
                   help="apply the classical symmetric-power rank multipliers")

    add("ltg", cmd_ltg, "linear twist growth test for a complex")
    add("lineartoreg", cmd_lineartoreg, "leading-term regularity bound")
    add("msgen", cmd_msgen, "shifted-intersection region from per-term regions")
    add("reg-sum", cmd_reg_sum, "regularity region of a direct sum of twists")

    p = add("scan", cmd_scan, "exact regularity-region scan of a presentation")
    p.add_argument("--window", help="inclusive box, e.g. 0..8,0..8")
    p.add_argument("--prime", type=int, help="field characteristic (default 32003)")
    p.add_argument("--svg", help="write a staircase figure here (plus corner CSV)")

    p = add("verify", cmd_verify, "replay the published benchmark values", problem=False)
    p.add_argument("--only", help="run a single check group")
    p.add_argument("--prime", type=int, help="field characteristic for the scans")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LinearGrowthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GROWTH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
