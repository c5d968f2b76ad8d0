"""Command-line front end: ``dscx <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from . import census as cz
from . import charpoly as cp
from . import counting as ct
from . import hodge as hg
from .complex import Model, build, dumps
from .errors import DscxError, ResourceGuardError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DSCX_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, parallel when DSCX_THREADS > 1."""
    workers = min(_threads(), len(items)) or 1
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def parse_range(text: str | None) -> list[int] | None:
    """``"5"`` -> [5]; ``"2..6"`` -> [2, 3, 4, 5, 6]."""
    if text is None:
        return None
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad integer or range {text!r}") from None


def _model(text: str) -> Model:
    try:
        return Model.parse(text)
    except DscxError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- generate --


def cmd_generate(args) -> int:
    model = _model(args.model)
    (n,) = parse_range(args.n)[-1:]
    c = build(n, model, ack_resources=args.ack_resources)
    print(" ".join(map(str, c.fvector())))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(c))
    return EXIT_OK


# -- fvector --


def cmd_fvector(args) -> int:
    model = _model(args.model)
    ns = parse_range(args.n)
    table = ct.CountTable(model)
    records = []
    failures = 0
    for n in ns:
        row = table.row(n)
        rec = {"model": model.name, "n": n, "fvector": row}
        if args.check_closed_forms:
            checks = _closed_form_checks(model, n, row)
            rec["checks"] = checks
            failures += sum(1 for v in checks.values() if not v)
        records.append(rec)
    if args.format == "json":
        text = json.dumps(
            [{**r, "fvector": [str(v) for v in r["fvector"]]} for r in records], indent=None
        ) + "\n"
    else:
        buf = io.StringIO()
        extra = sorted(records[0].get("checks", {})) if records else []
        buf.write("model,n,d,N_d" + "".join("," + k for k in extra) + "\n")
        for r in records:
            for d, v in enumerate(r["fvector"]):
                cells = "".join("," + str(int(r["checks"][k])) for k in extra)
                buf.write(f"{r['model']},{r['n']},{d},{v}{cells}\n")
        text = buf.getvalue()
    _emit(args, text)
    return EXIT_FAIL if failures else EXIT_OK


def _closed_form_checks(model: Model, n: int, row: list[int]) -> dict[str, bool]:
    out: dict[str, bool] = {}
    if model.m is None:
        out["vertex_closed_form"] = row[0] == ct.n0_closed(n)
        out["total_telescope"] = sum(row) == ct.total_simplices(n)
        out["series"] = all(ct.nd_by_series(d, n) == v for d, v in enumerate(row)) if n <= 40 else True
        out["codiagonal"] = all(ct.codiagonal(n, p) == row[n - p] for p in range(min(5, n) + 1))
    elif model.m == 1:
        out["tree_counts"] = row == ([1] if n == 0 else [2**n, 2**n - 1])
    elif model.m == 2:
        row = row + [0] * (3 - len(row))
        out["edge_identity"] = n == 0 or row[1] == row[0] + row[2] - 1
        out["total_identity"] = n == 0 or sum(row) == 2 * row[1] + 1
        out["edge_closed_form"] = n == 0 or _dsc2_edges(n) == row[1]
    return out


def _dsc2_edges(n: int) -> int:
    """``(g+^n - g-^n)/sqrt 5`` computed exactly in Z[sqrt 5]."""
    # (5 + s)/2 and (5 - s)/2 with s = sqrt 5; track (a + b s)/2^n with integers
    a, b = 1, 0
    for _ in range(n):
        a, b = 5 * a + 5 * b, a + 5 * b
    # g+^n = (a + b s)/2^n, difference over sqrt 5 is 2 b / 2^n
    num = 2 * b
    assert num % 2**n == 0
    return num // 2**n


# -- census --


def _complexes(model: Model, ns: Iterable[int], ack: bool) -> dict:
    out = {}
    ns = sorted(ns)
    c = build(ns[0], model, ack_resources=ack)
    out[ns[0]] = c
    for n in ns[1:]:
        out[n] = build(n, model, ack_resources=ack)
    return out


def cmd_census(args) -> int:
    model = _model(args.model)
    ns = parse_range(args.n)
    ds = parse_range(args.d)
    complexes = _complexes(model, ns, args.ack_resources)
    items = [(n, d) for n in ns for d in (ds if ds is not None else range(complexes[n].max_dim + 1))]
    for n, d in items:
        if not 0 <= d <= complexes[n].max_dim:
            raise UsageError(f"dimension {d} outside 0..{complexes[n].max_dim} at n={n}")
    results = _pmap(lambda nd: cz.census(complexes[nd[0]], nd[1]), items)
    if args.format == "json":
        text = "[" + ",".join(r.to_json() for r in results) + "]\n"
    else:
        buf = io.StringIO()
        buf.write("model,n,d,degree,multiplicity\n")
        for r in results:
            for k, m in r.entries:
                buf.write(f"{r.model},{r.n},{r.d},{k},{m}\n")
        text = buf.getvalue()
    _emit(args, text)
    status = EXIT_OK
    if args.verify:
        if model.m is not None:
            raise UsageError("--verify runs the unconstrained-model conjecture suite; use --model dsc")
        n_max = max(ns)
        rep = cz.verify_degree_conjectures(n_max, {n: complexes[n] for n in ns})
        for identity, (ok, bad) in rep.summary().items():
            _note(f"{'PASS' if not bad else 'FAIL'} {identity}: {ok} passed, {bad} failed")
        for row in rep.failures:
            _note(f"  counterexample {row.identity} n={row.n} d={row.d}: expected {row.expected}, got {row.actual}")
        status = EXIT_OK if rep.passed else EXIT_FAIL
    return status


# -- spectrum --


def cmd_spectrum(args) -> int:
    model = _model(args.model)
    ns = parse_range(args.n)
    if args.engine == "poly":
        if model.m != 1:
            raise UsageError("--engine poly is available for the tree model only (dsc1)")
        rows = []
        for n in ns:
            r = cp.lambda2_exact(n)
            rows.append({"n": n, "lambda2": r.value, "scaled": r.scaled, "lower": str(r.lower), "upper": str(r.upper)})
        if args.format == "json":
            text = json.dumps(rows) + "\n"
        else:
            text = "model,n,lambda2,lambda2_times_2^n\n" + "".join(
                f"{model.name},{r['n']},{r['lambda2']:.17g},{r['scaled']:.17g}\n" for r in rows
            )
        _emit(args, text)
        return EXIT_OK
    ds = parse_range(args.d)
    items = []
    for n in ns:
        c = build(n, model, ack_resources=args.ack_resources)
        for d in ds if ds is not None else range(c.max_dim + 1):
            if not 0 <= d <= c.max_dim:
                raise UsageError(f"dimension {d} outside 0..{c.max_dim} at n={n}")
            if args.lambda2_only and d != 0:
                continue
            items.append((c, d))
    cap = 10**9 if args.ack_resources else hg.MAX_DENSE_SIZE
    reports = _pmap(lambda cd: hg.complex_spectrum(cd[0], cd[1], max_size=cap), items)
    for r in reports:
        _note(f"{r.model} n={r.n} d={r.d} N={r.size} zeros={r.zero_count} lambda2={r.lambda2} lambda_max={r.lambda_max}")
    if args.lambda2_only:
        text = "model,n,lambda2\n" + "".join(f"{r.model},{r.n},{r.lambda2:.17g}\n" for r in reports)
    elif args.format == "json":
        text = json.dumps(
            [
                {
                    "model": r.model, "n": r.n, "d": r.d, "size": r.size,
                    "zero_count": r.zero_count, "lambda2": r.lambda2, "lambda_max": r.lambda_max,
                    "eigenvalues": [float(v) for v in r.eigenvalues],
                }
                for r in reports
            ]
        ) + "\n"
    elif args.staircase:
        text = hg.staircase_csv(reports)
    else:
        text = hg.spectrum_csv(reports)
    _emit(args, text)
    return EXIT_OK


# -- charpoly --


def cmd_charpoly(args) -> int:
    ns = parse_range(args.n)
    limit = 10**6 if args.ack_resources else None
    lines = []
    failures = 0
    n = max(ns)
    if args.kind == "laplacian":
        bundle = cp.laplacian_charpoly_bundle(n, max_generation=limit)
        lines = [line for i, line in enumerate(bundle.export_lines(), 1) if i in ns]
        if args.check:
            for k in ns:
                if k >= 3:
                    rep = cp.pi_coeff_check(k, bundle)
                    failures += not rep.passed
                    _note(f"{'PASS' if rep.passed else 'FAIL'} laplacian coefficients n={k}")
    else:
        ups = cp.adjacency_sequence(n, max_generation=limit)
        lines = [f"U {k} : " + " ".join(map(str, ups[k - 1].coeffs)) for k in ns]
        if args.check:
            for k in ns:
                if k >= 4:
                    rep = cp.adjacency_coeff_check(k)
                    failures += not rep.passed
                    _note(f"{'PASS' if rep.passed else 'FAIL'} adjacency coefficients n={k}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_FAIL if failures else EXIT_OK


# -- verify-all --


def _suite() -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    from .goldens import ADJACENCY_FACTORS, FVECTORS, PI_FACTORS
    from .growth import g_plus
    from .polynomial import IntPolynomial

    def fvectors():
        bad = [n for n, f in FVECTORS.items() if ct.fvector_recursive(n) != f]
        enum_bad = [n for n in range(7) if build(n).fvector() != ct.fvector_recursive(n)]
        return not bad and not enum_bad, f"mismatch at n={bad + enum_bad}" if bad or enum_bad else "n<=9"

    def series():
        ok = all(
            ct.nd_by_series(d, n) == ct.fvector_recursive(n)[d] for n in range(13) for d in range(n + 1)
        )
        ok &= all(ct.codiagonal(n, p) == ct.fvector_recursive(n)[n - p] for n in range(15) for p in range(min(5, n) + 1))
        return ok, "series and co-diagonal closed forms"

    def census_suite():
        rep = cz.verify_degree_conjectures(8)
        return rep.passed, f"{len(rep.rows)} checks, {len(rep.failures)} failures"

    def boundary_and_betti():
        bad = []
        for model, nmax in ((None, 4), (Model(2), 5)):
            for n in range(1, nmax + 1):
                c = build(n, model)
                for d in range(c.max_dim + 1):
                    if 1 <= d < c.max_dim and not hg.boundary_composition_is_zero(c, d):
                        bad.append(("boundary", c.model_name, n, d))
                    expected = 1 if d == 0 else 0
                    if hg.betti(c, d) != expected:
                        bad.append(("betti", c.model_name, n, d))
        return not bad, str(bad) if bad else "dsc n<=4, dsc(2) n<=5"

    def polynomials():
        b = cp.laplacian_charpoly_bundle(9)
        ok = all(list(b.factor(i).coeffs) == PI_FACTORS[i] for i in range(1, 8))
        ok &= all(cp.pi_digest(b.factor(i)) == cp.PI_DIGESTS[i] for i in (8, 9))
        ok &= all(
            cp.adjacency_charpoly(n) == IntPolynomial(ADJACENCY_FACTORS[n][0]) * IntPolynomial(ADJACENCY_FACTORS[n][1])
            for n in range(1, 5)
        )
        ok &= all(cp.adjacency_coeff_check(n).passed for n in range(4, 10))
        ok &= all(cp.pi_coeff_check(n, b).passed for n in range(3, 10))
        return ok, "factors 1..7, digests 8..9, coefficient formulas"

    def lambda2_constants():
        vals = {n: cp.lambda2_exact(n).scaled for n in (12, 13)}
        ok = all(abs(v - cp.LAMBDA2_LIMIT) <= 1e-3 for v in vals.values())
        ok &= all(cp.staircase_identity_check(a, b).passed for b in range(1, 11) for a in range(1, b + 1))
        return ok, ", ".join(f"n={n}: {v:.6f}" for n, v in vals.items())

    def growth_rates():
        g2 = float(g_plus(2))
        g3 = float(g_plus(3))
        ok = abs(g2 - (5 + 5**0.5) / 2) < 1e-12 and abs(g3 - 5.491) <= 1e-3
        return ok, f"g+(2)={g2:.12f}, g+(3)={g3:.6f}"

    return [
        ("fvector_goldens", fvectors),
        ("series_closed_forms", series),
        ("census_and_conjectures", census_suite),
        ("boundary_and_betti", boundary_and_betti),
        ("polynomial_goldens", polynomials),
        ("lambda2_constants", lambda2_constants),
        ("growth_rates", growth_rates),
    ]


def cmd_verify_all(args) -> int:
    results = []
    for name, fn in _suite():
        try:
            ok, detail = fn()
        except DscxError as exc:
            ok, detail = False, f"error: {exc}"
        results.append({"check": name, "passed": bool(ok), "detail": detail})
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}", flush=True)
    all_ok = all(r["passed"] for r in results)
    if args.json:
        print(json.dumps({"passed": all_ok, "checks": results}))
    return EXIT_OK if all_ok else EXIT_FAIL


# -- parser --


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dscx", description="Deterministic simplicial complexes: counts, degrees, spectra.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, d=True, fmt=True):
        sp.add_argument("--model", default="dsc", help="dsc, dsc1, dsc2 or dsc(m)")
        sp.add_argument("--n", required=True, help="generation N or range A..B")
        if d:
            sp.add_argument("--d", default=None, help="dimension D or range A..B (default: all)")
        sp.add_argument("--out", default=None, help="write output to this file")
        if fmt:
            sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--ack-resources", action="store_true", help="lift desk-scale resource guards")

    g = sub.add_parser("generate", help="grow a complex and print its f-vector")
    common(g, d=False, fmt=False)
    g.set_defaults(func=cmd_generate)

    f = sub.add_parser("fvector", help="exact f-vectors")
    common(f, d=False)
    f.add_argument("--check-closed-forms", action="store_true")
    f.set_defaults(func=cmd_fvector)

    c = sub.add_parser("census", help="upper-degree censuses")
    common(c)
    c.add_argument("--verify", action="store_true", help="run the degree conjecture suite")
    c.set_defaults(func=cmd_census)

    s = sub.add_parser("spectrum", help="Hodge Laplacian spectra")
    common(s)
    s.add_argument("--engine", choices=("matrix", "poly"), default="matrix")
    s.add_argument("--lambda2-only", action="store_true")
    s.add_argument("--staircase", action="store_true", help="emit cumulative density instead of eigenvalues")
    s.set_defaults(func=cmd_spectrum)

    k = sub.add_parser("charpoly", help="tree characteristic polynomials")
    k.add_argument("--n", required=True)
    k.add_argument("--kind", choices=("laplacian", "adjacency"), default="laplacian")
    k.add_argument("--check", action="store_true", help="verify the coefficient formulas")
    k.add_argument("--out", default=None)
    k.add_argument("--ack-resources", action="store_true")
    k.set_defaults(func=cmd_charpoly)

    v = sub.add_parser("verify-all", help="run every golden and property suite")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        _note(f"dscx: refused: {exc}")
        return EXIT_GUARD
    except (UsageError, DscxError) as exc:
        _note(f"dscx: error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
