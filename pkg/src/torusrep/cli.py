"""Command-line frontend: every verification as a reproducible batch job.

Each command emits a machine-readable report {"meta": ..., "results": ...}
in json (default), csv, or md.  Reports carry exact rational-string
coordinates alongside floating previews; the exact values are the
contract, the floats are for humans.  A fixed seed makes every
randomized verification bit-reproducible (reports contain no
timestamps or environment-dependent fields).

Exit codes: 0 all asserted checks pass, 1 a check failed, 2 usage error.
"""

import argparse
import json
import random
import sys

from . import __version__
from .jeffrey import compare, integrality_report, jeffrey_matrix, jeffrey_t_power
from .rep import (FIG8_MATRIX, denominator_profile, evaluate, fig8_periods,
                  group_closure, matrix_order, projective_order,
                  sample_classes, verify_denominators)
from .sl2z import Mat2Z
from .theory import s_matrix, t_matrix, theory

SIGMA_CONVENTION = "sigma(meridian, longitude, meridian+longitude) = +1"


def _meta(args, p=None, extra=None):
    meta = {
        "tool": "torusrep",
        "version": __version__,
        "command": args.command,
        "sigma_convention": SIGMA_CONVENTION,
        "denominator_host": (
            "denominator tests run on the power basis of Z[zeta_N], a ring "
            "containing the theory's coefficient ring; bounds are necessary "
            "conditions for the stated memberships"
        ),
    }
    if getattr(args, "seed", None) is not None:
        meta["seed"] = args.seed
    if p is not None:
        th = theory(p)
        meta.update({"p": p, "N": th.N, "s": th.s, "u_exponent": th.e,
                     "parity": th.parity, "dim": th.dim})
    if extra:
        meta.update(extra)
    levels = meta.pop("levels", None)
    if levels is not None:
        meta["levels"] = [
            {"p": q, "N": theory(q).N, "s": theory(q).s,
             "u_exponent": theory(q).e} for q in levels
        ]
    return meta


def _cyc_preview(x):
    z = x.embed()
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _matrix_payload(mat):
    return {
        "matrix": mat.to_dict(),
        "preview": [[_cyc_preview(e) for e in row] for row in mat.entries],
        "denominator_bound": mat.denominator_lcm(),
    }


def _emit(report, args):
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        text = _render_csv(report)
    else:
        text = _render_md(report)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_of(report):
    results = report["results"]
    if isinstance(results, list) and results and isinstance(results[0], dict):
        keys = sorted({k for r in results for k in r})
        return keys, [[_plain(r.get(k)) for k in keys] for r in results]
    return ["value"], [[_plain(results)]]


def _plain(v):
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, sort_keys=True, default=str)
    return "" if v is None else str(v)


def _render_csv(report):
    import csv as _csv
    import io

    keys, rows = _rows_of(report)
    buf = io.StringIO()
    w = _csv.writer(buf)
    w.writerow(keys)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _render_md(report):
    keys, rows = _rows_of(report)
    lines = ["| " + " | ".join(keys) + " |",
             "| " + " | ".join("---" for _ in keys) + " |"]
    for row in rows:
        lines.append("| " + " | ".join(str(v) for v in row) + " |")
    meta = ", ".join(f"{k}={v}" for k, v in sorted(report["meta"].items())
                     if k not in ("denominator_host", "sigma_convention"))
    return f"<!-- {meta} -->\n" + "\n".join(lines) + "\n"


def _parse_matrix(text):
    return Mat2Z.parse(text)


def _scalar_payload(c):
    if c is None:
        return None
    from .rep import root_of_unity_exponent

    k = root_of_unity_exponent(c)
    if k is not None:
        return {"root_of_unity": {"order": c.order, "exponent": k},
                "preview": _cyc_preview(c)}
    return {"coords": c.to_dict(), "preview": _cyc_preview(c)}


# ---------- command handlers (return (exit_code, report)) ----------


def cmd_stmat(args):
    th = theory(args.p)
    basis = args.basis or ("signed" if th.parity == "even" else "colored")
    s = s_matrix(th, basis)
    t = t_matrix(th, basis)
    report = {
        "meta": _meta(args, args.p, {"basis": basis}),
        "results": {"S": _matrix_payload(s), "T": _matrix_payload(t)},
    }
    return 0, report


def cmd_rho(args):
    th = theory(args.p)
    f = _parse_matrix(args.matrix)
    mat = evaluate(th, f, args.weight)
    prof = denominator_profile(mat, args.p)
    report = {
        "meta": _meta(args, args.p, {"f": f.entries(), "weight": args.weight,
                                     "basis": mat.basis}),
        "results": {**_matrix_payload(mat),
                    "bound_divides_p": prof.divides_p},
    }
    return 0, report


def cmd_order(args):
    th = theory(args.p)
    f = _parse_matrix(args.matrix)
    mat = evaluate(th, f, args.weight)
    exact = matrix_order(mat, args.cap)
    proj, scal = projective_order(mat, args.cap)
    report = {
        "meta": _meta(args, args.p, {"f": f.entries(), "weight": args.weight,
                                     "cap": args.cap}),
        "results": {"order": exact, "projective_order": proj,
                    "scalar": _scalar_payload(scal)},
    }
    fail = exact is None and proj is None
    return (1 if fail else 0), report


def cmd_fig8(args):
    rows = fig8_periods(args.pmin, args.pmax, args.cap)
    results = []
    ok = True
    for r in rows:
        row = dict(r)
        row["scalar"] = _scalar_payload(r["scalar"])
        if r["listed"] is not None:
            passed = r.get("match") is not None
            row["pass"] = bool(passed)
            ok = ok and passed
        results.append(row)
    report = {"meta": _meta(args, extra={"pmin": args.pmin, "pmax": args.pmax,
                                         "cap": args.cap,
                                         "monodromy": FIG8_MATRIX.entries(),
                                         "levels": list(range(args.pmin,
                                                              args.pmax + 1))}),
              "results": results}
    return (0 if ok else 1), report


def cmd_verify_denominators(args):
    rng = random.Random(args.seed)
    results = []
    ok = True
    for p in args.p:
        th = theory(p)
        classes = sample_classes(rng, args.samples, max_height=args.height)
        rows = verify_denominators(th, classes)
        failures = [r for r in rows if not r["ok"]]
        ok = ok and not failures
        results.append({
            "p": p, "samples": args.samples, "height": args.height,
            "failures": len(failures),
            "bounds_seen": sorted({r["bound"] for r in rows}),
            "subring_checked": th.s is not None,
            "ok": not failures,
        })
    report = {"meta": _meta(args, extra={"levels": args.p}),
              "results": results}
    return (0 if ok else 1), report


def cmd_jeffrey(args):
    f = _parse_matrix(args.matrix)
    if f.c == 0:
        # c = 0 means f = +-T^k; -I contributes the square of the value at S
        mat = jeffrey_t_power(args.p, f.b if f.a == 1 else -f.b)
        if f.a == -1:
            js = jeffrey_matrix(args.p, Mat2Z(0, -1, 1, 0))
            mat = (js * js) * mat
        report = {"meta": _meta(args, args.p, {"f": f.entries(), "path": "t-power"}),
                  "results": _matrix_payload(mat)}
        return 0, report
    mat = jeffrey_matrix(args.p, f)
    integ = integrality_report(args.p, f, mat)
    report = {
        "meta": _meta(args, args.p, {"f": f.entries(), "path": "closed-formula",
                                     "host_order": mat.order}),
        "results": {**_matrix_payload(mat), "integrality": integ},
    }
    return (0 if integ["ok"] else 1), report


def cmd_compare(args):
    rng = random.Random(args.seed)
    results = []
    ok = True
    for p in args.p:
        if args.matrix:
            classes = [_parse_matrix(args.matrix)]
        else:
            classes = sample_classes(rng, args.samples, max_height=args.height,
                                     require_c=True)
        for f in classes:
            r = compare(p, f)
            integ = integrality_report(p, f)
            row = {"p": p, "f": f.entries(), "match": r["match"],
                   "scalar": _scalar_payload(r.get("scalar")),
                   "scalar_order": r.get("scalar_order"),
                   "integrality": integ}
            ok = ok and r["match"] and integ["ok"]
            results.append(row)
    report = {"meta": _meta(args, extra={"levels": args.p,
                                         "samples": args.samples,
                                         "height": args.height}),
              "results": results}
    return (0 if ok else 1), report


def cmd_image_order(args):
    th = theory(args.p)
    res = group_closure(th, cap=args.cap, census=not args.no_census)
    report = {
        "meta": _meta(args, args.p, {"cap": args.cap}),
        "results": res if res is not None else {"order": None,
                                                "note": "cap exceeded"},
    }
    return (0 if res is not None else 1), report


def cmd_selfcheck(args):
    from fractions import Fraction
    from math import gcd as _gcd

    from .extension import LagLine, WeightedClass, compose, wall_sigma
    from .sl2z import dedekind_sum, rademacher_phi, random_mapping_class
    from .cyclotomic import sqrt_integer

    rng = random.Random(args.seed)
    checks = []

    def check(name, fn):
        try:
            fn()
            checks.append({"check": name, "ok": True})
        except AssertionError as exc:
            checks.append({"check": name, "ok": False, "detail": str(exc)})

    def eta_identities():
        for p in range(3, 21):
            theory(p)  # constructor asserts u^2, eta^2, psi-image

    def gauss():
        for t in range(1, 26):
            x = sqrt_integer(t)
            assert x * x == t
            assert abs(x.embed() - t ** 0.5) < 1e-9

    def dedekind():
        for k in range(1, 31):
            for h in range(1, k):
                if _gcd(h, k) == 1:
                    lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
                    rhs = Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h)
                                             + Fraction(1, h * k)) / 12
                    assert lhs == rhs

    def cocycles():
        def sign(x):
            return (x > 0) - (x < 0)
        done = 0
        while done < 100:
            a = random_mapping_class(rng, max_height=2000)
            b = random_mapping_class(rng, max_height=2000)
            c = a * b
            if a.c and b.c and c.c:
                assert rademacher_phi(c) == (rademacher_phi(a) + rademacher_phi(b)
                                             - 3 * sign(a.c * b.c * c.c))
                done += 1
        for _ in range(200):
            ws = [WeightedClass(random_mapping_class(rng, max_height=500),
                                rng.randrange(-3, 4)) for _ in range(3)]
            assert compose(ws[2], compose(ws[1], ws[0])) == \
                compose(compose(ws[2], ws[1]), ws[0])
        ls = [LagLine(rng.randrange(-9, 10) or 1, rng.randrange(-9, 10))
              for _ in range(50)]
        for _ in range(200):
            tri = [rng.choice(ls) for _ in range(3)]
            assert wall_sigma(*tri) in (-1, 0, 1)

    check("eta_and_framing_identities_p3_20", eta_identities)
    check("gauss_sum_square_roots", gauss)
    check("dedekind_reciprocity", dedekind)
    check("cocycle_properties", cocycles)
    ok = all(c["ok"] for c in checks)
    report = {"meta": _meta(args), "results": checks}
    return (0 if ok else 1), report


# ---------- parser ----------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="torusrep",
        description="Exact torus mapping class group representations: "
                    "evaluation, integrality and finite-image verification.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--format", choices=("json", "csv", "md"),
                       default="json")
        p.add_argument("--out", help="write the report to this path")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    def level(p, multi=False):
        if multi:
            p.add_argument("--p", type=int, nargs="+", required=True,
                           help="theory level(s), each >= 3")
        else:
            p.add_argument("--p", type=int, required=True,
                           help="theory level, >= 3")

    sp = sub.add_parser("stmat", help="emit the S and T generator matrices")
    level(sp)
    sp.add_argument("--basis", choices=("colored", "signed"))
    common(sp, seed=False)
    sp.set_defaults(func=cmd_stmat)

    sp = sub.add_parser("rho", help="evaluate the representation at (f, n)")
    level(sp)
    sp.add_argument("-m", "--matrix", required=True, help='form "a,b;c,d"')
    sp.add_argument("--weight", type=int, default=0)
    common(sp, seed=False)
    sp.set_defaults(func=cmd_rho)

    sp = sub.add_parser("order", help="exact and projective matrix order")
    level(sp)
    sp.add_argument("-m", "--matrix", required=True)
    sp.add_argument("--weight", type=int, default=0)
    sp.add_argument("--cap", type=int, default=100000)
    common(sp, seed=False)
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("fig8-table",
                        help="figure-eight monodromy period table")
    sp.add_argument("--pmin", type=int, default=3)
    sp.add_argument("--pmax", type=int, default=20)
    sp.add_argument("--cap", type=int, default=100000)
    common(sp, seed=False)
    sp.set_defaults(func=cmd_fig8)

    sp = sub.add_parser("verify-denominators",
                        help="sample mapping classes and check p * rho integral")
    level(sp, multi=True)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--height", type=int, default=1000)
    common(sp)
    sp.set_defaults(func=cmd_verify_denominators)

    sp = sub.add_parser("jeffrey", help="closed-formula matrix for even p")
    level(sp)
    sp.add_argument("-m", "--matrix", required=True)
    common(sp, seed=False)
    sp.set_defaults(func=cmd_jeffrey)

    sp = sub.add_parser("compare",
                        help="closed formula vs generator words (even p)")
    level(sp, multi=True)
    sp.add_argument("-m", "--matrix",
                    help="single matrix; omit to sample randomly")
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--height", type=int, default=200)
    common(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("image-order",
                        help="breadth-first closure of the image group")
    level(sp)
    sp.add_argument("--cap", type=int, default=10**6)
    sp.add_argument("--no-census", action="store_true")
    common(sp, seed=False)
    sp.set_defaults(func=cmd_image_order)

    sp = sub.add_parser("selfcheck", help="fast internal identity suite")
    common(sp)
    sp.set_defaults(func=cmd_selfcheck)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code, report = args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
