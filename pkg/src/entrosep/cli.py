"""Command-line front end: experiment subcommands, CSV emission, manifests.

CSV schemas (floats printed with 17 significant digits):

* volume-curve / coincidence-curve: ``q,axis,bin_center,n_total,n_event,p,std_err``
* global-vs-q: ``q,inv_q,p,std_err,n``
* dim-scan: ``n_a,n_b,n_total_dim,p_entropic_inf,se_entropic,p_ppt,se_ppt,n``
* c2-scatter: ``delta,c_squared``

Every CSV gets an adjacent ``<out>.manifest.json`` with the resolved
configuration (flat keys, string values); re-running with those values
reproduces the CSV byte for byte. Exit codes: 0 success, 2 usage error,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .entanglement import concurrence, spin_flip
from .errors import ResourceLimitError
from .entropy import EntropicParameter, conditional_tsallis
from .separability import classify, entropic_positive, is_ppt
from .states import BipartiteDims, bell_psi_minus, maximally_mixed, partial_transpose, werner_state
from .survey import (
    AXIS_LMAX,
    AXIS_R,
    DEFAULT_BIN_COUNT,
    DEFAULT_Q_GRID,
    SurveyConfig,
    run_c2_scatter,
    run_coincidence_curve,
    run_dimension_scan,
    run_global_coincidence_vs_q,
    run_positive_volume_curve,
)

DEFAULT_DIM_SCAN_PAIRS = ((2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (4, 4))


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def write_csv(path: Path, header: list[str], rows) -> None:
    """Write newline-terminated CSV with 17-significant-digit floats."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_manifest(path: Path, entries: dict) -> None:
    """Adjacent flat key-value manifest (all values as strings)."""
    flat = {key: str(value) for key, value in entries.items()}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(flat, fh, indent=2)
        fh.write("\n")


def manifest_path(out: Path) -> Path:
    return Path(str(out) + ".manifest.json")


def _parse_q_list(text: str) -> tuple[EntropicParameter, ...]:
    try:
        return tuple(EntropicParameter.parse(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _inv_q(p: EntropicParameter) -> float:
    if p.kind == "infinity":
        return 0.0
    if p.kind == "von_neumann":
        return 1.0
    assert p.q is not None
    return 1.0 / p.q


def _curve_rows(curves):
    for curve in curves:
        p = curve.p
        se = curve.std_err
        for i, center in enumerate(curve.centers):
            yield (
                curve.label,
                curve.axis,
                float(center),
                int(curve.n_total[i]),
                int(curve.n_event[i]),
                float(p[i]),
                float(se[i]),
            )


def _add_common(sub: argparse.ArgumentParser, default_q: str) -> None:
    sub.add_argument("--dims", nargs=2, type=int, default=[2, 2], metavar=("A", "B"),
                     help="subsystem dimensions (default: 2 2)")
    sub.add_argument("--samples", type=int, default=100_000,
                     help="number of sampled states (default: 100000)")
    sub.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    sub.add_argument("--q", type=_parse_q_list, default=_parse_q_list(default_q),
                     metavar="LIST", help=f"comma-separated q tokens (default: {default_q})")
    sub.add_argument("--workers", type=int, default=1, help="process count (default: 1)")
    sub.add_argument("--out", type=Path, required=True, help="output CSV path")


def _add_binned(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--axis", choices=[AXIS_R, AXIS_LMAX], default=AXIS_R,
                     help="mixedness axis (default: R)")
    sub.add_argument("--bins", type=int, default=DEFAULT_BIN_COUNT,
                     help=f"bin count (default: {DEFAULT_BIN_COUNT})")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entrosep",
        description="Monte Carlo surveys of entropic separability criteria "
        "on random bipartite mixed states.",
    )
    parser.add_argument("--version", action="version", version=f"entrosep {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("volume-curve", help="P(positive conditional q-entropies) per mixedness bin")
    _add_common(p, "1,2,5,inf")
    _add_binned(p)
    p.set_defaults(func=_cmd_volume_curve)

    p = subs.add_parser("coincidence-curve", help="P(entropic test agrees with Peres) per bin")
    _add_common(p, "1,2,5,inf")
    _add_binned(p)
    p.set_defaults(func=_cmd_coincidence_curve)

    p = subs.add_parser("global-vs-q", help="global coincidence probability across a q grid")
    _add_common(p, ",".join(q.token for q in DEFAULT_Q_GRID))
    p.set_defaults(func=_cmd_global_vs_q)

    p = subs.add_parser("dim-scan", help="q=inf entropic and PPT probabilities vs dimensions")
    p.add_argument("--pair", nargs=2, type=int, action="append", metavar=("A", "B"),
                   help="dimension pair, repeatable (default: standard family set)")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-dim", type=int, default=36,
                   help="refuse pairs with total dimension above this (default: 36)")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=_cmd_dim_scan)

    p = subs.add_parser("c2-scatter", help="concurrence^2 vs conditional-entropy violation (2x2)")
    _add_common(p, "inf")
    p.set_defaults(func=_cmd_c2_scatter)

    p = subs.add_parser("selftest", help="run the analytic Werner/Bell oracle suite")
    p.set_defaults(func=_cmd_selftest)
    return parser


def _make_dims(parser: argparse.ArgumentParser, pair) -> BipartiteDims:
    n_a, n_b = int(pair[0]), int(pair[1])
    if n_a < 2 or n_b < 2:
        parser.error(f"subsystem dimensions must be >= 2, got {n_a} {n_b}")
    return BipartiteDims(n_a, n_b)


def _survey_config(args, axis=None, bins=None) -> SurveyConfig:
    return SurveyConfig(
        dims=args.dims,
        samples=args.samples,
        seed=args.seed,
        q_list=args.q,
        axis=axis if axis is not None else AXIS_R,
        bin_count=bins if bins is not None else DEFAULT_BIN_COUNT,
        workers=args.workers,
    )


def _base_manifest(args, wall_time: float) -> dict:
    entries = {"subcommand": args.subcommand}
    if hasattr(args, "dims"):
        entries["n_a"] = args.dims.n_a
        entries["n_b"] = args.dims.n_b
    for key in ("samples", "seed", "workers"):
        if hasattr(args, key):
            entries[key] = getattr(args, key)
    if hasattr(args, "q"):
        entries["q"] = ",".join(p.token for p in args.q)
    if hasattr(args, "axis"):
        entries["axis"] = args.axis
    if hasattr(args, "bins"):
        entries["bins"] = args.bins
    entries["out"] = args.out
    entries["wall_time_s"] = f"{wall_time:.3f}"
    entries["version"] = __version__
    return entries


_CURVE_HEADER = ["q", "axis", "bin_center", "n_total", "n_event", "p", "std_err"]


def _cmd_volume_curve(args) -> int:
    start = time.perf_counter()
    curves = run_positive_volume_curve(_survey_config(args, args.axis, args.bins))
    wall = time.perf_counter() - start
    write_csv(args.out, _CURVE_HEADER, _curve_rows(curves))
    write_manifest(manifest_path(args.out), _base_manifest(args, wall))
    print(f"volume-curve: {args.samples} samples of {args.dims.n_a}x{args.dims.n_b} "
          f"-> {args.out} ({wall:.1f}s)")
    return 0


def _cmd_coincidence_curve(args) -> int:
    start = time.perf_counter()
    curves, minima = run_coincidence_curve(_survey_config(args, args.axis, args.bins))
    wall = time.perf_counter() - start
    write_csv(args.out, _CURVE_HEADER, _curve_rows(curves))
    write_manifest(manifest_path(args.out), _base_manifest(args, wall))
    for m in minima:
        print(f"minimum q={m.label}: axis={m.r_m:.6g} p={m.p_m:.6g}")
    print(f"coincidence-curve: {args.samples} samples -> {args.out} ({wall:.1f}s)")
    return 0


def _cmd_global_vs_q(args) -> int:
    start = time.perf_counter()
    points = run_global_coincidence_vs_q(_survey_config(args), q_grid=args.q)
    wall = time.perf_counter() - start
    rows = [(p.q.token, _inv_q(p.q), p.p, p.std_err, p.n) for p in points]
    write_csv(args.out, ["q", "inv_q", "p", "std_err", "n"], rows)
    write_manifest(manifest_path(args.out), _base_manifest(args, wall))
    for p in points:
        print(f"q={p.q.token}: p={p.p:.4f} +- {p.std_err:.4f}")
    return 0


def _cmd_dim_scan(args) -> int:
    start = time.perf_counter()
    points = run_dimension_scan(
        args.pairs, args.samples, args.seed, workers=args.workers, max_total_dim=args.max_dim
    )
    wall = time.perf_counter() - start
    rows = [
        (p.dims.n_a, p.dims.n_b, p.dims.total, p.p_entropic_inf, p.se_entropic,
         p.p_ppt, p.se_ppt, p.n)
        for p in points
    ]
    write_csv(
        args.out,
        ["n_a", "n_b", "n_total_dim", "p_entropic_inf", "se_entropic", "p_ppt", "se_ppt", "n"],
        rows,
    )
    entries = {
        "subcommand": args.subcommand,
        "pairs": ",".join(f"{p.dims.n_a}x{p.dims.n_b}" for p in points),
        "samples": args.samples,
        "seed": args.seed,
        "workers": args.workers,
        "max_dim": args.max_dim,
        "out": args.out,
        "wall_time_s": f"{wall:.3f}",
        "version": __version__,
    }
    write_manifest(manifest_path(args.out), entries)
    for p in points:
        print(f"{p.dims.n_a}x{p.dims.n_b}: entropic_inf={p.p_entropic_inf:.4f} ppt={p.p_ppt:.4f}")
    return 0


def _cmd_c2_scatter(args) -> int:
    if (args.dims.n_a, args.dims.n_b) != (2, 2):
        print("error: c2-scatter requires --dims 2 2", file=sys.stderr)
        return 2
    if len(args.q) != 1:
        print("error: c2-scatter takes a single q token", file=sys.stderr)
        return 2
    start = time.perf_counter()
    points = run_c2_scatter(_survey_config(args), args.q[0])
    wall = time.perf_counter() - start
    write_csv(args.out, ["delta", "c_squared"], ((p.delta, p.c_squared) for p in points))
    write_manifest(manifest_path(args.out), _base_manifest(args, wall))
    print(f"c2-scatter: kept {len(points)} of {args.samples} states -> {args.out}")
    return 0


# ---------------------------------------------------------------------------
# selftest: the analytic Werner/Bell oracle suite
# ---------------------------------------------------------------------------


def _bisect_transition(predicate, lo: float, hi: float, tol: float = 1e-9) -> float:
    """Locate the flip point of a monotone boolean predicate on [lo, hi]."""
    if predicate(lo) == predicate(hi):
        raise ValueError("predicate does not change over the bracket")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if predicate(mid) == predicate(lo):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _selftest_checks():
    from .entropy import INFINITY

    bell = bell_psi_minus()
    q2 = EntropicParameter.finite(2.0)

    yield ("bell PT min eigenvalue = -1/2",
           abs(float(np.min(np.linalg.eigvalsh(partial_transpose(bell)))) + 0.5) < 1e-12)
    yield ("bell concurrence = 1", abs(concurrence(bell).concurrence - 1.0) < 1e-8)
    yield ("bell eof = 1 bit", abs(concurrence(bell).eof - 1.0) < 1e-8)
    yield ("bell conditional Tsallis (q=2, on B) = -1",
           abs(conditional_tsallis(bell, "B", 2.0) + 1.0) < 1e-12)
    yield ("bell spin-flip invariant",
           float(np.max(np.abs(spin_flip(bell) - bell.matrix))) < 1e-12)

    ppt_flip = _bisect_transition(lambda p: is_ppt(werner_state(p)), 0.0, 1.0)
    yield ("werner PPT threshold = 1/3", abs(ppt_flip - 1.0 / 3.0) < 1e-9)
    inf_flip = _bisect_transition(lambda p: entropic_positive(werner_state(p), INFINITY), 0.0, 1.0)
    yield ("werner q=inf entropic threshold = 1/3", abs(inf_flip - 1.0 / 3.0) < 1e-9)
    q2_flip = _bisect_transition(lambda p: entropic_positive(werner_state(p), q2), 0.0, 1.0)
    yield ("werner q=2 entropic threshold = 1/sqrt(3)", abs(q2_flip - 3.0**-0.5) < 1e-9)

    w_half = concurrence(werner_state(0.5))
    yield ("werner(1/2) concurrence = 1/4", abs(w_half.concurrence - 0.25) < 1e-12)
    yield ("werner(0.45, q=2) not coincident",
           not classify(werner_state(0.45), q2).coincident)

    mixed = maximally_mixed(BipartiteDims(2, 2))
    c = classify(mixed, q2)
    yield ("maximally mixed coincident-separable", c.ppt and c.entropic_positive and c.coincident)


def _cmd_selftest(args) -> int:
    failures = 0
    for name, ok in _selftest_checks():
        print(f"{'PASS' if ok else 'FAIL'}: {name}")
        if not ok:
            failures += 1
    if failures:
        print(f"selftest: {failures} check(s) failed", file=sys.stderr)
        return 1
    print("selftest: all checks passed")
    return 0


def parse_and_dispatch(argv=None) -> int:
    """Parse arguments, run the selected subcommand, and return an exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "dims"):
            args.dims = _make_dims(parser, args.dims)
        if args.subcommand == "dim-scan":
            raw_pairs = args.pair if args.pair else [list(p) for p in DEFAULT_DIM_SCAN_PAIRS]
            args.pairs = [_make_dims(parser, p) for p in raw_pairs]
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(parse_and_dispatch())


if __name__ == "__main__":
    main()
