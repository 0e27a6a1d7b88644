"""Benchmark CLI, a thin client over the service layer.

The CLI only parses flags, loads the dataset, and renders the report; the
actual work happens in the same request executor the HTTP service uses.
By default the request runs in process. With ``--server`` it is POSTed to a
running service instead, with identical semantics (file datasets are loaded
locally and shipped inline either way).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import emit_table
from .data import DatasetSpec, fixture_names, load_csv
from .service import ops
from .service.schemas import BenchmarkReport, BenchmarkRequest, InlineDataset


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmeanslab-bench",
        description="Benchmark k-means center-seeding strategies on a dataset.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--data", metavar="PATH", help="CSV dataset to load")
    source.add_argument("--fixture", metavar="NAME",
                        help=f"builtin dataset ({', '.join(fixture_names())})")
    parser.add_argument("--label-col", choices=["first", "last", "none"], default="none",
                        help="which CSV column holds class labels (default: none)")
    parser.add_argument("--delimiter", default=",", help="CSV delimiter (default: ,)")
    parser.add_argument("--skip-header", action="store_true",
                        help="ignore the first CSV row")
    parser.add_argument("--k", type=int, required=True, help="number of clusters")
    parser.add_argument("--trials", type=int, default=100,
                        help="independent runs per strategy (default: 100)")
    parser.add_argument("--algos", default="kmeans,kmeans++",
                        help="comma-separated strategies: kmeans, kmeans++, "
                             "alpha:<float>, alpha:eps, norandom")
    parser.add_argument("--seed", type=int, default=42, help="master seed (default: 42)")
    parser.add_argument("--alpha-threshold", type=float, default=0.80,
                        help="label-agreement threshold counted as a correct "
                             "clustering (default: 0.80)")
    parser.add_argument("--max-iters", type=int, default=300,
                        help="Lloyd iteration cap (default: 300)")
    parser.add_argument("--standardize", action="store_true",
                        help="z-score each feature column before clustering")
    parser.add_argument("--format", choices=["md", "csv", "json"], default="md",
                        help="output format (default: md)")
    parser.add_argument("--out", metavar="PATH", help="write the table here instead of stdout")
    parser.add_argument("--server", metavar="URL",
                        help="POST the benchmark to a running service instead of "
                             "executing in process")
    return parser


def _build_request(args: argparse.Namespace) -> BenchmarkRequest:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    # parse early so bad strategy strings fail before any data is touched
    ops.parse_strategies(algos)
    inline = None
    fixture = args.fixture
    if args.data is not None:
        spec = DatasetSpec(path=args.data, label_column=args.label_col,
                           delimiter=args.delimiter, skip_header=args.skip_header)
        ds = load_csv(spec)
        inline = InlineDataset(
            name=ds.name,
            points=[[float(v) for v in row] for row in ds.points],
            labels=ds.labels,
        )
    return BenchmarkRequest(
        data=inline,
        fixture=fixture,
        k=args.k,
        trials=args.trials,
        algos=algos,
        master_seed=args.seed,
        correctness_threshold=args.alpha_threshold,
        max_iterations=args.max_iters,
        standardize=args.standardize,
    )


def _post_to_server(url: str, request: BenchmarkRequest) -> BenchmarkReport:
    import httpx

    response = httpx.post(
        url.rstrip("/") + "/benchmark",
        json=request.model_dump(exclude_none=True),
        timeout=600.0,
    )
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except json.JSONDecodeError:
            detail = response.text
        raise ValueError(f"server returned {response.status_code}: {detail}")
    return BenchmarkReport.model_validate(response.json())


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        request = _build_request(args)
        if args.server:
            report = _post_to_server(args.server, request)
        else:
            report = ops.execute_benchmark(request)
        text = emit_table(ops.benchmark_table(report), args.format)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
