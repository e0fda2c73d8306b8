"""Command-line entry point: ``spinhdet <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
usage errors (including malformed rationals).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import cayley, fock, geometry, hyperdet, invariants, roots
from .polynomial import format_rational, parse_rational

OK, MISMATCH, USAGE = 0, 1, 2
FOUR_QUBIT_VALUE = 22861440000  # prod over i<j of (i-j)^2 (i+j)^2 on 1,2,3,4


class UsageError(Exception):
    pass


def _rational(text: str, what: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"{what}: malformed rational {text!r} ({e})") from None


def _rationals(texts, what: str, n: int = 8) -> list:
    if len(texts) != n:
        raise UsageError(f"{what}: expected {n} rationals, got {len(texts)}")
    return [_rational(t, f"{what}[{i}]") for i, t in enumerate(texts)]


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines = []

    def json(self, obj):
        self.lines.append(json.dumps(obj, indent=2, sort_keys=False))

    def text(self, line=""):
        self.lines.append(line)

    def emit(self, obj, text_lines):
        if self.fmt == "json":
            self.json(obj)
        else:
            self.lines.extend(text_lines)

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


# -- subcommands -------------------------------------------------------------


def cmd_roots(args, out: Output) -> int:
    if args.basis == "x":
        rs = roots.generate_e8_roots()
        out.emit(
            {"basis": "x", "count": len(rs), "roots": [[format_rational(c) for c in r] for r in rs]},
            [" ".join(f"{format_rational(c):>4}" for c in r) for r in rs] + [f"# {len(rs)} roots"],
        )
    else:
        counts = roots.normalized_form_counts()
        forms = sorted(counts, key=lambda f: f.sort_key())
        out.emit(
            {
                "basis": "y",
                "count": len(forms),
                "forms": [{"coeffs": list(f.coeffs), "mult": counts[f]} for f in forms],
            },
            [f"{counts[f]}  {f}" for f in forms] + [f"# {len(forms)} forms"],
        )
    return OK


def cmd_power_sum(args, out: Output) -> int:
    if args.degree < 1:
        raise UsageError(f"degree: must be >= 1, got {args.degree}")
    x_roots = invariants.half_sums_unscaled_roots() if args.unscaled_half_sums else None
    if args.verify:
        if args.degree not in invariants.FUNDAMENTAL_DEGREES:
            raise UsageError(f"degree: --verify needs one of {invariants.FUNDAMENTAL_DEGREES}")
        report = invariants.verify_power_sum(args.degree, x_roots=x_roots, jobs=args.jobs)
        lines = [report.summary()]
        for k, c, t in report.mismatched:
            lines.append(f"  differs {k}: computed {format_rational(c)} table {format_rational(t)}")
        lines += [f"  missing {k}" for k in report.missing]
        lines += [f"  extra {k}" for k in report.extra]
        out.emit(report.to_json_obj(), lines)
        return OK if report.ok else MISMATCH
    p = invariants.power_sum(args.degree, x_roots=x_roots, jobs=args.jobs)
    out.emit(p.to_json_obj(), [p.to_str()])
    return OK


def cmd_hdet(args, out: Output) -> int:
    if args.action == "build":
        h = hyperdet.build_hdet()
        out.emit(
            h.to_json_obj(),
            [f"scalar {format_rational(h.scalar)}; {len(h)} forms, degree {h.total_degree}"]
            + [f"({f})^{m}" for f, m in h.factors],
        )
        return OK
    if args.action == "eval":
        if not args.point:
            raise UsageError("point: eval needs a JSON array of 8 rationals")
        try:
            raw = json.loads(args.point)
        except json.JSONDecodeError as e:
            raise UsageError(f"point: not valid JSON ({e})") from None
        if not isinstance(raw, list):
            raise UsageError("point: expected a JSON array")
        pt = _rationals([str(x) for x in raw], "point")
        v = hyperdet.eval_hdet(hyperdet.build_hdet(), pt)
        out.emit({"value": format_rational(v)}, [format_rational(v)])
        return OK
    report = hyperdet.restrict_to_wedge4()
    cmp = hyperdet.compare_wedge4_fixture(report)
    obj = report.to_json_obj()
    obj["fixture"] = {k: r.to_json_obj() for k, r in cmp.items()}
    lines = [
        f"Q: {report.q_degree} forms x{report.q_multiplicity}  "
        f"T: {report.t_degree} forms x{report.t_multiplicity}  total degree {report.total_degree}",
        f"fixture Q {'ok' if cmp['Q'].ok else 'MISMATCH'}, T {'ok' if cmp['T'].ok else 'MISMATCH'}",
    ]
    out.emit(obj, lines)
    return OK if all(r.ok for r in cmp.values()) else MISMATCH


def cmd_geometry(args, out: Output) -> int:
    if args.action == "planes":
        planes = geometry.enumerate_planes()
        out.emit(
            [p.to_json_obj() for p in planes],
            [f"{p.covector} . z = {p.constant}: {p.points} ({p.kind})" for p in planes],
        )
    elif args.action == "lines":
        lines = geometry.enumerate_lines()
        out.emit([list(ln.points) for ln in lines], [str(ln.points) for ln in lines])
    elif args.action == "fano":
        fano, affine = geometry.project_from_center()
        problems = geometry.check_fano(fano)
        out.emit(
            {"lines": [list(ln.points) for ln in fano], "affine": [list(a) for a in affine], "problems": problems},
            [f"line {ln.points}" for ln in fano] + [f"affine {a}" for a in affine] + problems,
        )
        return MISMATCH if problems else OK
    else:
        counts = geometry.forms_from_geometry()
        forms = sorted(counts, key=lambda f: f.sort_key())
        out.emit(
            [{"coeffs": list(f.coeffs), "mult": counts[f]} for f in forms],
            [str(f) for f in forms] + [f"# {len(forms)} forms"],
        )
    return OK


def cmd_cayley(args, out: Output) -> int:
    if args.action == "eval":
        A = cayley.Tensor222(_rationals(args.entries, "entries"))
        v = cayley.hdet222_explicit(A)
        out.emit({"value": format_rational(v)}, [format_rational(v)])
        return OK
    p = cayley.explicit_polynomial() if args.source == "explicit" else cayley.hdet222_combinatorial()
    out.emit(p.to_json_obj(cayley.VAR_NAMES), [p.to_str(cayley.VAR_NAMES)])
    return OK


def _spin_checks(seed: int = 0):
    rng = random.Random(seed)
    gens = [fock.SpinGenerator.random(rng) for _ in range(50)]
    states = [fock.random_state(rng, parity=k % 2) for k in range(50)]
    failures, n = [], 0
    for k, (g, s) in enumerate(zip(gens, states)):
        r = fock.parity_check([g], [s])
        n += r.checked
        failures += [f"pair {k}"] * len(r.failures)
    parity = fock.CheckReport("parity", n, failures)
    pairs = [(fock.SpinGenerator.random(rng), fock.SpinGenerator.random(rng)) for _ in range(5)]
    rep = fock.representation_check(pairs, [fock.random_state(rng) for _ in range(3)])
    return parity, rep


def cmd_fock(args, out: Output) -> int:
    if args.action == "car-check":
        r = fock.car_check()
        out.emit(r.to_json_obj(), [f"CAR: {r.checked} identities, {'ok' if r.ok else 'FAIL'}"] + r.failures[:20])
        return OK if r.ok else MISMATCH
    if args.action == "spin-check":
        parity, rep = _spin_checks()
        u = rep.uniform_ratio
        out.emit(
            {"parity": parity.to_json_obj(), "representation": rep.to_json_obj()},
            [
                f"parity: {parity.checked} checks, {'ok' if parity.ok else 'FAIL'}",
                f"representation: {rep.checked} checks, {'ok' if rep.ok else 'FAIL'}"
                + ("" if rep.ok or u is None else f" ([O1,O2] = {u} * O_[s1,s2])"),
            ],
        )
        return OK if parity.ok and rep.ok else MISMATCH
    y = _rationals(args.y, "y")
    s = fock.cartan_state(y, args.e7_variant)
    out.emit(s.to_json_obj(), [f"{m:08b}  {c}" for m, c in s.items()])
    return OK


def verify_all(args) -> tuple[list, bool]:
    """(name, ok, detail) rows for every check."""
    rows = []
    for d in invariants.FUNDAMENTAL_DEGREES:
        r = invariants.verify_power_sum(d, jobs=args.jobs)
        rows.append((f"power-sum f{d}", r.ok, r.summary()))
    fs = roots.verify_factor_set()
    geo = roots.compare_form_sets(geometry.forms_from_geometry().keys(), roots.normalized_form_counts().keys())
    rows.append(("factor-set", fs.ok and geo.ok, f"{len(roots.normalized_form_counts())} forms"))
    rep = hyperdet.restrict_to_wedge4()
    cmp = hyperdet.compare_wedge4_fixture(rep)
    rows.append(
        (
            "wedge4 Q/T",
            all(c.ok for c in cmp.values()),
            f"Q {rep.q_degree} x{rep.q_multiplicity}, T {rep.t_degree} x{rep.t_multiplicity}, degree {rep.total_degree}",
        )
    )
    four = hyperdet.restrict_to_4qubit()
    value = hyperdet.eval_factored(four, [1, 2, 3, 4, 0, 0, 0, 0])
    rows.append(
        (
            "4-qubit",
            len(four) == 12 and four.total_degree == 24 and value == FOUR_QUBIT_VALUE,
            f"{len(four)} forms, degree {four.total_degree}, value at (1,2,3,4) {value}",
        )
    )
    cay = cayley.explicit_polynomial() == cayley.hdet222_combinatorial()
    rows.append(("cayley", cay, "explicit == combinatorial"))
    car = fock.car_check()
    rows.append(("fock CAR", car.ok, f"{car.checked} identities"))
    parity, rp = _spin_checks()
    rows.append(("fock parity", parity.ok, f"{parity.checked} checks"))
    u = rp.uniform_ratio
    rows.append(("fock representation", rp.ok, "exact" if rp.ok else f"observed ratio {u}"))
    cr = fock.cartan_report(args.e7_variant)
    rows.append(("cartan states", cr.independent and cr.all_even, f"{cr.distinct_masks} masks, rank {cr.rank}"))
    return rows, all(ok for _, ok, _ in rows)


def cmd_verify_all(args, out: Output) -> int:
    rows, ok = verify_all(args)
    out.emit(
        {"ok": ok, "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in rows]},
        [f"{'PASS' if o else 'FAIL'}  {n:<20} {d}" for n, o, d in rows]
        + [f"{sum(o for _, o, _ in rows)}/{len(rows)} checks passed"],
    )
    return OK if ok else MISMATCH


# -- parser ------------------------------------------------------------------


def _add_common(p, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json"), default=d("text"))
    p.add_argument("--out", metavar="PATH", default=d(None), help="write output here instead of stdout")
    p.add_argument("--e7-variant", choices=sorted(fock.E7_VARIANTS), default=d("printed"))
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for power sums")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinhdet", description="Exact Spin(16) hyperdeterminant toolkit.")
    _add_common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="E8 roots or their normalized y-forms")
    p.add_argument("--basis", choices=("x", "y"), default="x")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("power-sum", parents=[common], help="sum of alpha^d over the roots")
    p.add_argument("degree", type=int)
    p.add_argument("--verify", action="store_true", help="compare with the reference table")
    p.add_argument(
        "--unscaled-half-sums",
        action="store_true",
        help="diagnostic: use the half-sum roots without their 1/2 factor",
    )
    p.set_defaults(func=cmd_power_sum)

    p = sub.add_parser("hdet", parents=[common], help="factored hyperdeterminant")
    p.add_argument("action", choices=("build", "eval", "restrict"))
    p.add_argument("point", nargs="?", help='for eval: JSON array of 8 rationals, e.g. \'["1","2/3",...]\'')
    p.set_defaults(func=cmd_hdet)

    p = sub.add_parser("geometry", parents=[common], help="cube and Fano plane incidence")
    p.add_argument("action", choices=("planes", "lines", "fano", "forms"))
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("cayley", parents=[common], help="2x2x2 hyperdeterminant")
    p.add_argument("action", choices=("eval", "poly"))
    p.add_argument("entries", nargs="*", help="for eval: 8 rationals, (i,j,k) lexicographic")
    p.add_argument("--source", choices=("explicit", "combinatorial"), default="explicit")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("fock", parents=[common], help="Fock space checks and Cartan states")
    p.add_argument("action", choices=("car-check", "spin-check", "cartan"))
    p.add_argument("y", nargs="*", help="for cartan: 8 rationals")
    p.set_defaults(func=cmd_fock)

    p = sub.add_parser("verify-all", parents=[common], help="run every check")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return USAGE
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    text = out.render()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
