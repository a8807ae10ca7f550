"""Command-line entry point: ``inducedmatch <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .blockfn import induced_block_function
from .dtw import dtw_distance, euclidean_distance
from .errors import InducedMatchError, ParseError
from .matching import induced_matching, induced_matching_distance, sorted_wasserstein
from .persistence import vr_zero_pers
from .pipeline import WindowConfig, matching_signal, summarize_signals
from .synthetic import KINDS, gen_synthetic
from .trajio import load_trajectories_csv, read_signal_csv, signal_to_csv, summary_to_csv, write_trajectories
from .types import Barcode, PointBijection, Pose, parse_matrix_text, validate_dissimilarity


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_space(path: str):
    return validate_dissimilarity(parse_matrix_text(_read_text(path)))


def _load_perm(path: str | None, n: int) -> PointBijection:
    if path is None:
        return PointBijection.identity(n)
    try:
        perm = [int(tok) for tok in _read_text(path).split()]
    except ValueError:
        raise ParseError(f"{path}: permutation entries must be integers") from None
    return PointBijection(tuple(perm))


def _load_barcode(path: str) -> Barcode:
    try:
        return Barcode.from_json(json.loads(_read_text(path)))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from None


def _load_series(path: str):
    """Read a CSV series: ``x,y,alpha`` columns give poses, anything else numeric vectors."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r]
    if not rows:
        raise ParseError(f"{path}: empty series file")
    header = [h.strip() for h in rows[0]]
    try:
        values = [[float(v) for v in r] for r in rows[1:]]
    except ValueError:
        raise ParseError(f"{path}: non-numeric entry") from None
    if any(len(r) != len(header) for r in values):
        raise ParseError(f"{path}: ragged rows")
    if header == ["x", "y", "alpha"]:
        return [Pose(*r) for r in values], None
    return values, euclidean_distance


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_barcode(args) -> None:
    tmt, bar = vr_zero_pers(_load_space(args.matrix))
    if args.json:
        payload = bar.to_json()
        if args.tmt:
            payload = {"barcode": payload, "tmt": tmt.to_json()}
        _emit(_dumps(payload), args.out)
        return
    lines = [f"{v!r} {m}" for v, m in bar.bars]
    if args.tmt:
        lines += [f"({t.j}, {t.death!r}, {t.elder})" for t in tmt.triplets]
    _emit("".join(ln + "\n" for ln in lines), args.out)


def _block_from_args(args):
    x, z = _load_space(args.matrix_x), _load_space(args.matrix_z)
    f = _load_perm(args.perm, x.n)
    (tx, bx), (tz, bz) = vr_zero_pers(x), vr_zero_pers(z)
    return induced_block_function(tx, tz, f), bx, bz


def cmd_block(args) -> None:
    block, _, _ = _block_from_args(args)
    if args.json:
        _emit(_dumps(block.to_json()), args.out)
    else:
        _emit("".join(f"{a!r} {b!r} {c}\n" for (a, b), c in block.items()), args.out)


def cmd_distance(args) -> None:
    block, bx, bz = _block_from_args(args)
    if args.json:
        _emit(_dumps(induced_matching(block, bx, bz).to_json(args.q)), args.out)
    else:
        _emit(f"{induced_matching_distance(block, args.q)!r}\n", args.out)


def cmd_wasserstein(args) -> None:
    value = sorted_wasserstein(_load_barcode(args.barcode_x), _load_barcode(args.barcode_z), args.q)
    _emit(f"{value!r}\n", args.out)


def cmd_dtw(args) -> None:
    s, metric = _load_series(args.series_a)
    t, metric_t = _load_series(args.series_b)
    if (metric is None) != (metric_t is None):
        raise ParseError("both series must be pose series or both plain vectors")
    _emit(f"{dtw_distance(s, t, args.angle_weight, metric)!r}\n", args.out)


def cmd_signal(args) -> None:
    cfg = WindowConfig(
        sample_count=args.samples,
        intra_stride=args.intra_stride,
        compare_lag=args.lag,
        q=args.q,
        angle_weight=args.angle_weight,
    )
    dataset = load_trajectories_csv(args.trajectories)
    _emit(signal_to_csv(matching_signal(dataset.agents, cfg, workers=args.workers)), args.out)


def cmd_summarize(args) -> None:
    _emit(summary_to_csv(summarize_signals([read_signal_csv(p) for p in args.signals])), args.out)


def cmd_gen(args) -> None:
    dataset = gen_synthetic(args.kind, args.agents, args.steps, args.seed)
    if args.out is None:
        write_trajectories(dataset, sys.stdout)
    else:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write_trajectories(dataset, fh)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inducedmatch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    p = add("barcode", cmd_barcode, "0-dim barcode of a dissimilarity matrix")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tmt", action="store_true", help="also print the triplet merge tree")

    for name, func, help in [
        ("block", cmd_block, "induced block function between two matrices"),
        ("distance", cmd_distance, "induced matching distance between two matrices"),
    ]:
        p = add(name, func, help)
        p.add_argument("matrix_x")
        p.add_argument("matrix_z")
        p.add_argument("--perm", help="file with the 1-based target of each source point")
        p.add_argument("--json", action="store_true")
        if name == "distance":
            p.add_argument("--q", type=int, required=True)

    p = add("wasserstein", cmd_wasserstein, "sorted bar-to-bar distance between two barcode JSON files")
    p.add_argument("barcode_x")
    p.add_argument("barcode_z")
    p.add_argument("--q", type=int, required=True)

    p = add("dtw", cmd_dtw, "DTW distance between two CSV series")
    p.add_argument("series_a")
    p.add_argument("series_b")
    p.add_argument("--angle-weight", type=float, default=1.0)

    p = add("signal", cmd_signal, "induced matching signal of a trajectory CSV")
    p.add_argument("trajectories")
    p.add_argument("--samples", type=int, default=6)
    p.add_argument("--intra-stride", type=int, default=10)
    p.add_argument("--lag", type=int, default=50)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--angle-weight", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1)

    p = add("summarize", cmd_summarize, "per-frame median and quartiles of signal CSVs")
    p.add_argument("signals", nargs="+")

    p = add("gen", cmd_gen, "write a synthetic trajectory CSV")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--agents", type=int, default=10)
    p.add_argument("--steps", type=int, default=900)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InducedMatchError as exc:
        print(exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"InvalidInput: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
