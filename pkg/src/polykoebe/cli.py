"""Command-line front end.

Coefficients are passed as ``--coeffs a2,a3,...`` (``a_1 = 1`` implied) or
``--poly 1,a2,a3,...``; entries may be decimals or exact fractions such as
``7/6``. A family member can be named instead with ``--kind`` and
``--degree``.
"""

import argparse
import csv
from fractions import Fraction
import io
import json
import math
import sys

import numpy as np

from . import circle, cubic, polyfamily, univalence

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2
EXIT_NOT_UNIVALENT = 3
EXIT_INCONCLUSIVE = 4

ON_BOUNDARY = 1e-6
RATIO_FLAG_TOL = 1e-8


class UsageError(Exception):
    pass


def parse_number(text):
    text = text.strip()
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        try:
            return float(text)
        except ValueError:
            raise UsageError(f"cannot parse number {text!r}") from None


def parse_list(text):
    if text is None or not text.strip():
        return []
    return [parse_number(t) for t in text.split(",")]


def fmt(x, digits=12):
    if isinstance(x, complex):
        return f"({fmt(x.real, digits)}, {fmt(x.imag, digits)})"
    if isinstance(x, float):
        return f"{x:.{digits}g}"
    return str(x)


def poly_string(p):
    terms = []
    for k, a in enumerate(p.coeffs, start=1):
        if a == 0 and k > 1:
            continue
        z = "z" if k == 1 else f"z^{k}"
        terms.append(z if a == 1 else f"{fmt(float(a))} {z}")
    return " + ".join(terms).replace("+ -", "- ")


def _polynomial(args):
    if getattr(args, "poly", None) is not None:
        c = parse_list(args.poly)
        if not c or c[0] != 1.0:
            raise UsageError("--poly must start with the coefficient a_1 = 1")
        return polyfamily.RealPolynomial(c)
    if getattr(args, "coeffs", None) is not None:
        return polyfamily.RealPolynomial.from_tail(parse_list(args.coeffs))
    if getattr(args, "kind", None) is not None and getattr(args, "degree", None) is not None:
        return polyfamily.family_coeffs(args.kind, _degree(args.degree))
    raise UsageError("give --coeffs, --poly, or --kind with --degree")


def _degree(d):
    if d is None or d < 1:
        raise UsageError(f"degree must be a positive integer, got {d!r}")
    return d


class Output:
    """Collects one command's results and renders them in the requested format."""

    def __init__(self, command, args):
        self.command = command
        self.format = args.format
        self.inputs = {k: v for k, v in vars(args).items()
                       if k not in ("func", "format", "command", "cubic_command") and v is not None}
        self.results = {}
        self.warnings = []
        self.text_lines = []
        self.csv_header = None
        self.csv_rows = []

    def line(self, *parts):
        self.text_lines.append(" ".join(str(p) for p in parts))

    def table(self, header, rows):
        self.csv_header = list(header)
        self.csv_rows = [list(r) for r in rows]

    def render(self, stream):
        if self.format == "json":
            doc = {"command": self.command, "inputs": self.inputs,
                   "results": self.results, "warnings": self.warnings}
            stream.write(json.dumps(doc, indent=2) + "\n")
        elif self.format == "csv":
            header, rows = self.csv_header, self.csv_rows
            if header is None:
                header, rows = ["key", "value"], [[k, _csv_value(v)] for k, v in self.results.items()]
            write_csv(stream, header, rows)
        else:
            for w in self.warnings:
                self.text_lines.append(f"warning: {w if isinstance(w, str) else json.dumps(w)}")
            stream.write("\n".join(self.text_lines) + "\n")


def _csv_value(v):
    if isinstance(v, float):
        return f"{v:.15g}"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return v


def write_csv(stream, header, rows):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_csv_value(v) for v in r])


def cmd_family(args, out):
    N = _degree(args.degree)
    kind = polyfamily.FamilyKind(args.kind)
    p = polyfamily.family_coeffs(kind, N)
    at_minus_one = polyfamily.evaluate(p, -1.0).real
    m = circle.min_modulus(p, grid_size=max(4096, 8 * N))
    out.results = {
        "kind": kind.value,
        "degree": N,
        "coefficients": p.coeffs.tolist(),
        "p_minus_one": at_minus_one,
        "conjectured_radius": polyfamily.conjectured_radius(N),
        "min_modulus": m.value,
    }
    out.line(f"{'q' if kind is polyfamily.FamilyKind.SUFFRIDGE else 'p'}_{N}(z) = {poly_string(p)}")
    out.line("coefficients:", ", ".join(fmt(float(a)) for a in p.coeffs))
    out.line("p(-1) =", fmt(at_minus_one))
    out.line("m =", fmt(m.value))
    out.line("conjectured radius =", fmt(polyfamily.conjectured_radius(N)))
    if kind is polyfamily.FamilyKind.SUFFRIDGE:
        closed = polyfamily.suffridge_minus_one(N)
        out.results["closed_form_minus_one"] = closed
        out.results["closed_form_delta"] = abs(closed - at_minus_one)
        out.line("closed-form q_N(-1) =", fmt(closed), " delta =", fmt(abs(closed - at_minus_one), 3))
    out.table(["k", "coefficient"], [[k, float(a)] for k, a in enumerate(p.coeffs, start=1)])
    return EXIT_OK


def cmd_minmod(args, out):
    p = _polynomial(args)
    grid = args.grid or max(4096, 8 * p.degree)
    res = circle.min_modulus(p, grid_size=grid, tol=args.tol)
    out.results = res.to_dict()
    out.line("m =", fmt(res.value))
    if res.whole_circle:
        out.line("constant modulus on the whole circle")
    for z in res.minimizers:
        out.line("minimizer", fmt(z))
    if p.degree == 3:
        q = cubic.CubicPoint(float(p.coeffs[1]), float(p.coeffs[2]))
        closed = cubic.min_modulus_closed_form(q)
        tag = cubic.classify_type(q)
        out.results.update(type=tag.value, closed_form=closed, delta=abs(closed - res.value))
        out.line(f"type {tag.value}, closed form {fmt(closed)}, delta {fmt(abs(closed - res.value), 3)}")
    out.table(["re", "im"], [[z.real, z.imag] for z in res.minimizers])
    return EXIT_OK


def cmd_mu(args, out):
    p = _polynomial(args)
    mu = circle.mu_functional(p)
    out.results = {"mu": mu, "degree": p.degree, "bound": -polyfamily.conjectured_radius(p.degree)}
    out.line("mu =", fmt(mu))
    out.line(f"upper bound over degree {p.degree} =", fmt(out.results["bound"]))
    return EXIT_OK


def _cubic_point(args):
    vals = parse_list(args.coeffs)
    if len(vals) != 2:
        raise UsageError("cubic membership needs --coeffs a2,a3")
    return cubic.CubicPoint(*vals)


def cmd_cubic_membership(args, out):
    q = _cubic_point(args)
    inside = cubic.in_univalence_region(q)
    dist = cubic.boundary_distance(q)
    out.results = {
        "a2": q.a2, "a3": q.a3,
        "in_region": inside,
        "boundary_distance": dist,
        "on_boundary": dist < ON_BOUNDARY,
        "type": cubic.classify_type(q).value,
        "min_modulus_closed_form": cubic.min_modulus_closed_form(q),
    }
    out.line("in univalence region:", str(inside).lower())
    out.line("distance to boundary:", fmt(dist, 6), "(on boundary)" if dist < ON_BOUNDARY else "")
    out.line(f"type {out.results['type']}, m = {fmt(out.results['min_modulus_closed_form'])}")
    return EXIT_OK


def _scan(args, out):
    scan = cubic.extremal_scan(args.resolution)
    out.warnings.extend(scan.warnings)
    rows = [[e.point.a2, e.point.a3, e.m, e.segment.value, e.type_tag.value] for e in scan.entries]
    out.table(["a2", "a3", "m", "segment", "type"], rows)
    if args.out:
        _write_file(args.out, lambda f: write_csv(f, out.csv_header, out.csv_rows))
    if args.plot:
        from .plotting import plot_cubic_scan
        plot_cubic_scan(scan.entries, args.plot)
    return scan


def cmd_cubic_scan(args, out):
    scan = _scan(args, out)
    top = scan.entries[: args.top]
    out.results = {"count": len(scan.entries), "ranked": [e.to_dict() for e in scan.entries]}
    out.line(f"{len(scan.entries)} boundary points, {len(scan.warnings)} disagreements")
    for e in top:
        out.line(f"{e.segment.value:4s} a2={fmt(e.point.a2, 10)} a3={fmt(e.point.a3, 10)} m={fmt(e.m)} type {e.type_tag.value}")
    return EXIT_OK


def cmd_cubic_extremal(args, out):
    scan = _scan(args, out)
    infima = {seg.value: cubic.gamma_infimum(seg) for seg in (cubic.GammaSegment.G1, cubic.GammaSegment.G2, cubic.GammaSegment.G3)}
    ordered = infima["G2"][0] < infima["G3"][0] < infima["G1"][0]
    best = scan.entries[:2]
    out.results = {
        "segment_infima": {k: {"value": v, "minimizer": q.to_dict()} for k, (v, q) in infima.items()},
        "ordering_holds": ordered,
        "global_minimizers": [e.to_dict() for e in best],
        "count": len(scan.entries),
    }
    for k, (v, q) in infima.items():
        out.line(f"inf m over {k}: {fmt(v)} at ({fmt(q.a2)}, {fmt(q.a3)})")
    out.line("ordering G2 < G3 < G1:", "holds" if ordered else "VIOLATED")
    for e in best:
        out.line(f"scan minimum {e.segment.value}: ({fmt(e.point.a2, 10)}, {fmt(e.point.a3, 10)}) m={fmt(e.m)}")
    if not args.out:
        out.table(["segment", "infimum", "a2", "a3"], [[k, v, q.a2, q.a3] for k, (v, q) in infima.items()])
    return EXIT_OK if ordered else EXIT_FAILED_CHECK


def cmd_univalence(args, out):
    p = _polynomial(args)
    radii = parse_list(args.radii) if args.radii else list(univalence.DEFAULT_RADII)
    try:
        rep = univalence.escalate_radius(p, radii)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.results = rep.to_dict()
    out.line("verdict:", rep.verdict.value, f"(radius {fmt(rep.boundary_radius)})")
    out.line("reason:", rep.reason)
    out.line("critical point moduli:", ", ".join(fmt(m, 8) for m in rep.derivative_root_moduli) or "none")
    if rep.witness:
        z1, z2 = rep.witness
        out.line("witness:", fmt(z1), fmt(z2))
    else:
        out.line("injectivity margin:", fmt(rep.injectivity_margin, 4))
    return {
        univalence.Verdict.UNIVALENT_OPEN_DISK: EXIT_OK,
        univalence.Verdict.NOT_UNIVALENT: EXIT_NOT_UNIVALENT,
        univalence.Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[rep.verdict]


def radius_table(max_degree):
    rows = []
    for N in range(1, max_degree + 1):
        p = polyfamily.pn_coeffs(N)
        pm1 = abs(polyfamily.evaluate(p, -1.0))
        m = circle.min_modulus(p, grid_size=max(4096, 8 * N)).value
        rows.append({
            "N": N,
            "rho": polyfamily.conjectured_radius(N),
            "abs_pn_minus_one": pm1,
            "m_pn": m,
            "mu_pn": circle.mu_functional(p),
            "qn_minus_one": polyfamily.suffridge_minus_one(N),
            "flag": abs(m - pm1) > RATIO_FLAG_TOL,
        })
    return rows


def cmd_radius_table(args, out):
    rows = radius_table(_degree(args.degree))
    out.results = {"rows": rows}
    cols = ["N", "rho", "abs_pn_minus_one", "m_pn", "mu_pn", "qn_minus_one", "flag"]
    out.table(cols, [[r[c] for c in cols] for r in rows])
    out.line(f"{'N':>4} {'rho':>16} {'|p_N(-1)|':>16} {'m(p_N)':>16} {'mu(p_N)':>16} {'q_N(-1)':>16}")
    for r in rows:
        out.line(f"{r['N']:>4} " + " ".join(f"{fmt(r[c]):>16}" for c in cols[1:6])
                 + ("  m(p_N) != |p_N(-1)|" if r["flag"] else ""))
    flagged = [r["N"] for r in rows if r["flag"]]
    if flagged:
        out.warnings.append({"kind": "min_not_at_minus_one", "N": flagged})
    if args.plot:
        from .plotting import plot_radius_table
        plot_radius_table(rows, args.plot)
    return EXIT_OK


def cmd_boundary(args, out):
    p = _polynomial(args)
    samples = args.samples
    pts = circle.boundary_curve(p, samples)
    theta = 2.0 * math.pi * np.arange(samples) / samples
    rows = [[t, z.real, z.imag] for t, z in zip(theta, pts)]
    out.table(["theta", "re", "im"], rows)
    out.results = {"samples": samples, "points": [[z.real, z.imag] for z in pts]}
    if args.out:
        _write_file(args.out, lambda f: write_csv(f, ["theta", "re", "im"], rows))
        out.line(f"wrote {samples} points to {args.out}")
    else:
        buf = io.StringIO()
        write_csv(buf, ["theta", "re", "im"], rows)
        out.text_lines.append(buf.getvalue().rstrip("\n"))
    if args.plot:
        from .plotting import plot_boundary_curve
        m = circle.min_modulus(p, grid_size=max(4096, 8 * p.degree)).value
        plot_boundary_curve(pts, args.plot, min_modulus=m, title=poly_string(p))
    return EXIT_OK


def _write_file(path, writer):
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer(f)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, help="RNG seed, recorded in the output inputs")

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--coeffs", help="a2,a3,...,aN (a1 = 1 implied); fractions like 7/6 allowed")
    poly.add_argument("--poly", help="full list 1,a2,...,aN")
    poly.add_argument("--kind", choices=[k.value for k in polyfamily.FamilyKind])
    poly.add_argument("--degree", type=int)

    parser = argparse.ArgumentParser(prog="polykoebe", description="Polynomial Koebe problem toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="coefficients of q_N or p_N")
    p.add_argument("--kind", choices=[k.value for k in polyfamily.FamilyKind], default="pn")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("minmod", parents=[common, poly], help="minimum modulus on the unit circle")
    p.add_argument("--grid", type=int)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_minmod)

    p = sub.add_parser("mu", parents=[common, poly], help="smallest real crossing of the image curve")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("cubic", help="degree-3 univalence region and extremal problem")
    csub = p.add_subparsers(dest="cubic_command", required=True)
    c = csub.add_parser("membership", parents=[common])
    c.add_argument("--coeffs", required=True, help="a2,a3")
    c.set_defaults(func=cmd_cubic_membership)
    for name, func in (("scan", cmd_cubic_scan), ("extremal", cmd_cubic_extremal)):
        c = csub.add_parser(name, parents=[common])
        c.add_argument("--resolution", type=int, default=10_000)
        c.add_argument("--out", help="write the ranked scan as CSV")
        c.add_argument("--plot", help="write a figure of the scanned boundary")
        c.add_argument("--top", type=int, default=10)
        c.set_defaults(func=func)

    p = sub.add_parser("univalence", parents=[common, poly], help="numerical univalence check")
    p.add_argument("--radii", help="ascending radii in [0.9, 1), default 0.99,0.999,0.9999")
    p.set_defaults(func=cmd_univalence)

    p = sub.add_parser("radius-table", parents=[common], help="conjectured Koebe radii against numerics")
    p.add_argument("--degree", type=int, required=True, help="largest N in the table")
    p.add_argument("--plot", help="write a figure of the table")
    p.set_defaults(func=cmd_radius_table)

    p = sub.add_parser("boundary", parents=[common, poly], help="sample the image of the unit circle")
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--out", help="CSV path (theta,re,im)")
    p.add_argument("--plot", help="figure path")
    p.set_defaults(func=cmd_boundary)
    return parser


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    name = args.command if args.command != "cubic" else f"cubic {args.cubic_command}"
    out = Output(name, args)
    try:
        code = args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"polykoebe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.render(stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
