"""Command-line front end: coefficient tables, verification suites and sweeps.

Exit status is 0 when every verdict passes, 1 when one fails and 2 on a usage
error.  Tables go to stdout as CSV; ``--plot PATH`` also writes a figure.
"""

import argparse
import csv
import json
import sys

from . import genfun as gf
from . import harness
from .injection import lemma_for, verify_injection, weight_bound
from .semigroup import FIXED_SETS, lex_min_solution, solve_fixed, two_gen


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _param(text):
    """``key=value`` with value an int, a comma list of ints, or a string."""
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    k, v = text.split("=", 1)
    try:
        val = [int(x) for x in v.split(",")] if "," in v else int(v)
    except ValueError:
        val = v
    return k.strip(), val


def cmd_coeffs(a, out):
    spec = gf.SeriesSpec(a.L, a.s, a.k)
    if a.format == "json":
        out.write(gf.to_json(spec, a.order, a.series) + "\n")
    else:
        out.write(gf.to_csv(spec, a.order))
    if a.plot:
        from .plotting import plot_coefficients
        s = (gf.G_closed(a.L, a.s, a.order) if a.series == "G"
             else gf.H_closed(a.L, a.s, spec.k, a.order))
        plot_coefficients(s, a.plot, title=f"{a.series} L={a.L} s={a.s}")
    return 0


def cmd_verify(a, out):
    params = dict(a.param or [])
    try:
        chk = harness.run(a.check, params)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"bad params for {a.check}: {exc}")
    out.write(chk.to_json() + "\n")
    return 0 if chk.passed else 1


def cmd_corrections(a, out):
    if a.Lmin > a.Lmax:
        raise UsageError("--Lmin exceeds --Lmax")
    table = harness.explore_corrections(a.s, a.Lmin, a.Lmax, a.order)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["L", "degree", "correction"])
    for r in table["rows"]:
        w.writerow([r["L"], "" if r["degree"] is None else r["degree"], r["correction"]])
    out.write(f"# stabilization candidate (swept range only): L0={table['stabilization_candidate']}\n")
    if a.plot:
        from .plotting import plot_corrections
        plot_corrections(table, a.plot)
    return 0


def cmd_injection(a, out):
    lemma_for(a.L)  # raises for L < 4
    Nmax = a.N if a.Nmax is None else a.Nmax
    if a.N < weight_bound(a.L):
        raise UsageError(f"N={a.N} is below the bound {weight_bound(a.L)} for L={a.L}")
    reports = [verify_injection(a.L, N, method=a.method) for N in range(a.N, Nmax + 1)]
    if a.format == "json":
        out.write(json.dumps([r.as_dict() for r in reports], sort_keys=True, indent=2) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["L", "N", "lemma", "method", "domain", "image", "codomain", "coefficient",
                    "total", "injective", "weight", "codomain_ok", "witness", "passed",
                    "first_failure"])
        for r in reports:
            w.writerow([r.L, r.N, r.lemma, r.method, r.domain_size, r.image_size,
                        r.codomain_size, r.coefficient, r.total, r.injective,
                        r.weight_preserved, r.codomain_ok,
                        "" if r.witnesses_excluded is None else r.witnesses_excluded,
                        r.passed, "" if r.first_failure is None else json.dumps(r.first_failure)])
    if a.plot:
        from .plotting import plot_injection
        plot_injection(reports, a.plot)
    return 0 if all(r.passed for r in reports) else 1


def cmd_semigroup(a, out):
    gens = tuple(sorted(a.gens))
    if len(gens) < 2 or min(gens) < 1:
        raise UsageError("need at least two positive generators")
    w = csv.writer(out, lineterminator="\n")
    if len(gens) == 2:
        count, sol = two_gen(gens[0], gens[1], a.n)
        w.writerow(["gens", "n", "count", "solution"])
        w.writerow([",".join(map(str, gens)), a.n, count,
                    "" if sol is None else " ".join(map(str, sol))])
        return 0
    if gens in FIXED_SETS:
        sol = solve_fixed(gens, a.n)
        sol = None if sol is None else tuple(sol)
    else:
        sol = lex_min_solution(gens, a.n)
    w.writerow(["gens", "n", "solution"])
    w.writerow([",".join(map(str, gens)), a.n, "" if sol is None else " ".join(map(str, sol))])
    return 0


def cmd_bounds(a, out):
    rep = gf.bounds(a.L, a.s, a.digit_cap)
    out.write(json.dumps(rep.as_dict(), sort_keys=True, indent=2) + "\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="smallpart", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("coeffs", help="coefficient table of G or H")
    c.add_argument("--series", choices=["G", "H"], default="G")
    c.add_argument("--L", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--order", type=int, default=100)
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("--plot", metavar="PATH")
    c.set_defaults(func=cmd_coeffs)

    v = sub.add_parser("verify", help="run a named suite")
    v.add_argument("--check", required=True, choices=sorted(harness.SUITES))
    v.add_argument("--param", action="append", type=_param, metavar="KEY=VALUE")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("corrections", help="minimal corrections over an L range")
    r.add_argument("--s", type=int, required=True)
    r.add_argument("--Lmin", type=int, required=True)
    r.add_argument("--Lmax", type=int, required=True)
    r.add_argument("--order", type=int, default=500)
    r.add_argument("--plot", metavar="PATH")
    r.set_defaults(func=cmd_corrections)

    i = sub.add_parser("injection", help="verify an injection over weight classes")
    i.add_argument("--L", type=int, required=True)
    i.add_argument("--N", type=int, required=True)
    i.add_argument("--Nmax", type=int, default=None)
    i.add_argument("--method", choices=["auto", "set", "kernel"], default="auto")
    i.add_argument("--format", choices=["csv", "json"], default="csv")
    i.add_argument("--plot", metavar="PATH")
    i.set_defaults(func=cmd_injection)

    g = sub.add_parser("semigroup", help="solve sum g_i x_i = n")
    g.add_argument("--gens", type=_int_list, required=True)
    g.add_argument("--n", type=int, required=True)
    g.set_defaults(func=cmd_semigroup)

    b = sub.add_parser("bounds", help="P, gamma, Gamma, delta and N_L")
    b.add_argument("--L", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--digit-cap", type=int, default=gf.DEFAULT_DIGIT_CAP)
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad usage
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"smallpart: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
