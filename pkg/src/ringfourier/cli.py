"""``ringfourier`` command line: ring info, Salem constants, sweeps and the verification suite."""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from ._backend import BudgetExceeded, check_budget, set_backend, set_threads
from .characters import trace_frequency
from .fourier import METHODS, salem_constant, salem_lower_bound, variety_spectrum
from .ncpoly import Graph, PolynomialSyntaxError, paraboloid, parse_poly
from .rings import MatrixRing, NotTraceAdmissible, RingSpecError, is_prime, make_ring, prime_power
from .structure import all_ideals, jacobson_radical
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
FAMILIES = ("fields", "zmod-prime-powers", "mat2", "mat3", "products")
SWEEP_COLUMNS = ["ring", "size", "characteristic", "d", "variety", "variety_size", "C", "lower_bound",
                 "argmax"]


class UsageError(Exception):
    pass


def _poly(text, d):
    if text.strip().lower() in ("parab", "paraboloid"):
        return paraboloid(d)
    return parse_poly(text)


def _ring(text):
    try:
        return make_ring(text)
    except (RingSpecError, ValueError) as exc:
        raise UsageError(f"bad ring spec {text!r}: {exc}") from exc


# --------------------------------------------------------------------------
# ring info


def ring_info(ring):
    info = ring.to_json()
    if ring.has_tables:
        for side in ("left", "right", "two-sided"):
            info[f"ideals_{side}"] = len(all_ideals(ring, side))
        rad = jacobson_radical(ring)
        info["radical_size"] = rad.size
        info["quotient_size"] = rad.quotient.size
    return info


def cmd_ring_info(args):
    info = ring_info(_ring(args.spec))
    if args.text:
        for k, v in info.items():
            print(f"{k:16s} {v}")
    else:
        print(json.dumps(info, sort_keys=True))
    return EXIT_OK


# --------------------------------------------------------------------------
# salem


def _probe_elements(ring, text):
    out = []
    for item in text.split(","):
        item = item.strip().lower()
        if item.startswith("e") and len(item) == 3 and item[1:].isdigit():
            if not isinstance(ring, MatrixRing):
                raise UsageError(f"{item} needs a matrix ring")
            out.append(ring.unit_matrix(int(item[1]), int(item[2])))
        elif item.isdigit():
            out.append(ring.element(int(item)))
        else:
            raise UsageError(f"bad probe element {item!r}")
    return out


def cmd_salem(args):
    ring = _ring(args.spec)
    f = _poly(args.poly, args.d)
    if f.nvars > args.d - 1:
        raise UsageError(f"polynomial uses {f.nvars} variables but d - 1 = {args.d - 1}")
    if args.probe:
        freqs = [trace_frequency(ring, (A,) * args.d) for A in _probe_elements(ring, args.probe)]
        rep = salem_lower_bound(f, args.c, ring, args.d, freqs, force=args.force)
    else:
        spec = variety_spectrum(Graph(f, args.c), ring, args.d, args.method, force=args.force)
        rep = salem_constant(spec)
        if args.spectrum:
            with open(args.spectrum, "w", newline="") as fh:
                spec.to_csv(fh)
    print(rep.to_json())
    return EXIT_OK


# --------------------------------------------------------------------------
# sweep


def _prime_powers(limit, min_k=1):
    out = []
    for q in range(2, limit + 1):
        pk = prime_power(q)
        if pk and pk[1] >= min_k:
            out.append(q)
    return out


def family_specs(family, max_size):
    if family == "fields":
        return [f"gf({q})" for q in _prime_powers(max_size)]
    if family == "zmod-prime-powers":
        return [f"zmod({q})" for q in _prime_powers(max_size, 2)]
    if family == "mat2":
        return [f"mat(2,gf({q}))" for q in _prime_powers(max_size)]
    if family == "mat3":
        return [f"mat(3,gf({q}))" for q in _prime_powers(max_size)]
    if family == "products":
        parts = [f"gf({q})" for q in _prime_powers(max_size)] + \
            [f"zmod({p * p})" for p in range(2, max_size + 1) if is_prime(p) and p * p <= max_size]
        sizes = {s: make_ring(s).size for s in parts}
        out = []
        for i, a in enumerate(parts):
            for b in parts[i:]:
                if sizes[a] * sizes[b] <= max_size:
                    out.append(f"prod({a},{b})")
        return out
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def probe_frequencies(ring, d):
    """Trace frequencies (A, ..., A) and (0, ..., 0, B) with A = E11 (or 1) and B = each E_ij (or 1)."""
    if isinstance(ring, MatrixRing):
        first = ring.unit_matrix(1, 1)
        lasts = [ring.unit_matrix(i, j) for i in range(1, ring.n + 1) for j in range(1, ring.n + 1)]
    else:
        first = ring.one()
        lasts = [ring.one()]
    zero = ring.zero()
    freqs = [trace_frequency(ring, (first,) * d)]
    freqs += [trace_frequency(ring, (zero,) * (d - 1) + (b,)) for b in lasts]
    return freqs


def sweep_row(spec, f, d, force=False):
    ring = make_ring(spec)
    variety = Graph(f, 0)
    t0 = time.perf_counter()
    q = ring.size
    try:
        check_budget("full spectrum", float(q) ** d * sum(ring.factors) * d)
        rep = salem_constant(variety_spectrum(variety, ring, d))
    except BudgetExceeded:
        rep = salem_lower_bound(f, 0, ring, d, probe_frequencies(ring, d), force=force)
    row = {
        "ring": str(ring.spec), "size": q, "characteristic": ring.characteristic, "d": d,
        "variety": str(variety), "variety_size": q ** (d - 1), "C": repr(rep.C),
        "lower_bound": str(rep.lower_bound).lower(), "argmax": rep.argmax,
    }
    return row, time.perf_counter() - t0


def run_sweep(family, max_size, f, d, force=False, timings=False):
    rows = []
    for spec in family_specs(family, max_size):
        row, dt = sweep_row(spec, f, d, force)
        if timings:
            row["wall_time"] = f"{dt:.3f}"
        rows.append(row)
    rows.sort(key=lambda r: (r["size"], r["ring"]))
    return rows


def cmd_sweep(args):
    rows = run_sweep(args.family, args.max_size, _poly(args.poly, args.d), args.d, args.force, args.timings)
    cols = SWEEP_COLUMNS + (["wall_time"] if args.timings else [])
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def cmd_verify(args):
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    records = run_suite(args.suite, seed=args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict(args.timings), sort_keys=True) + "\n")
    failed = [r for r in records if not r.passed and not r.skipped]
    print(f"{'name':24s} {'rings':40s} {'status':8s} deviation")
    for r in records:
        status = "skip" if r.skipped else ("pass" if r.passed else "FAIL")
        rings = ",".join(r.rings)
        rings = rings if len(rings) <= 40 else rings[:37] + "..."
        print(f"{r.name:24s} {rings:40s} {status:8s} {r.deviation:.3g}")
    print(f"{len(records)} checks, {len(failed)} failed, {sum(r.skipped for r in records)} skipped")
    for r in failed:
        print(f"FAILED {r.name} {r.rings}: measured={r.measured} expected={r.expected}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="ringfourier", description=__doc__)
    p.add_argument("--threads", type=int, default=0, help="cap kernel worker threads")
    p.add_argument("--backend", choices=("numba", "numpy"), help="kernel implementation")
    p.add_argument("--force", action="store_true", help="ignore the work budget")
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="ring inspection")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    info = ring_sub.add_parser("info", help="size, units, ideals and radical")
    info.add_argument("spec")
    info.add_argument("--text", action="store_true", help="aligned text instead of JSON")
    info.set_defaults(func=cmd_ring_info)

    s = sub.add_parser("salem", help="Salem constant of a graph variety")
    s.add_argument("spec")
    s.add_argument("--poly", default="parab", help="'parab' or a polynomial such as 'x1*x2 + 2*x1^2'")
    s.add_argument("-d", type=int, default=2)
    s.add_argument("-c", type=int, default=0)
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--spectrum", metavar="CSV", help="write the full spectrum")
    s.add_argument("--probe", metavar="A-LIST", help="probe trace frequencies (A,...,A), e.g. e11")
    s.set_defaults(func=cmd_salem)

    w = sub.add_parser("sweep", help="Salem constants across a ring family")
    w.add_argument("--family", required=True, choices=FAMILIES)
    w.add_argument("--max-size", type=int, required=True,
                   help="largest |R| (for mat2/mat3: largest base field)")
    w.add_argument("--poly", default="parab")
    w.add_argument("-d", type=int, default=2)
    w.add_argument("--out", metavar="CSV")
    w.add_argument("--timings", action="store_true", help="add a wall_time column")
    w.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--suite", default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", metavar="JSONL")
    v.add_argument("--timings", action="store_true", help="include runtimes in JSONL")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads:
        set_threads(args.threads)
    if args.backend:
        set_backend(args.backend)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, RingSpecError, PolynomialSyntaxError, NotTraceAdmissible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
