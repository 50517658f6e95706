"""Command-line entry point: ``coursecluster {cluster,compare,generate}``."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from .data import Orientation, extract_items, standardize_zscore
from .dendro import DEFAULT_CUT, ByCount, ByHeight, compare_linkages
from .distance import pairwise
from .engine import Linkage, cluster_nn_chain
from .errors import ClusteringError, ParseError
from .formats import (dendrogram_to_json, dendrogram_to_newick, matrix_to_csv,
                      parse_csv, render_svg, report_to_json)
from .synth import generate

EXIT_OK, EXIT_IO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        _write_atomic(path, text)


def _load(path):
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return parse_csv(data)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except ClusteringError as exc:
        raise InputError(f"{path}: {exc}") from None


def _cut(args):
    if args.cut_count is not None:
        return ByCount(args.cut_count)
    if args.cut_height is not None:
        return ByHeight(args.cut_height)
    return DEFAULT_CUT


def cmd_cluster(args):
    if args.linkage == "both":
        raise InputError("cluster takes one linkage; use 'compare' for both")
    fmt = args.format or "json"
    if fmt == "report":
        raise InputError("format 'report' is only valid for 'compare'")
    m = _load(args.input)
    try:
        items = extract_items(m, args.orientation)
    except ClusteringError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    if args.standardize:
        items = standardize_zscore(items)
    dendro = cluster_nn_chain(pairwise(items), args.linkage)
    if fmt == "json":
        text = dendrogram_to_json(dendro) + "\n"
    elif fmt == "newick":
        text = dendrogram_to_newick(dendro) + "\n"
    else:
        text = render_svg(dendro)
    _emit(args.output, text)
    return EXIT_OK


def cmd_compare(args):
    if args.format not in (None, "report"):
        raise InputError("compare only writes the 'report' format")
    m = _load(args.input)
    try:
        report = compare_linkages(m, _cut(args), dataset_id=os.path.basename(args.input),
                                  orientation=args.orientation,
                                  standardize=args.standardize)
    except ClusteringError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    if args.output is not None:
        _write_atomic(args.output, report_to_json(report))
    print(report.summary())
    return EXIT_OK


def cmd_generate(args):
    m = generate(seed=args.seed, respondents=args.respondents)
    _emit(args.output, matrix_to_csv(m))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coursecluster",
        description="Single vs complete linkage clustering of course-frequency tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--output", metavar="PATH")
        p.add_argument("--orientation", choices=[o.value for o in Orientation],
                       default=Orientation.COURSES.value)
        p.add_argument("--standardize", action="store_true")
        p.add_argument("--format", choices=["json", "newick", "svg", "report"])
        cut = p.add_mutually_exclusive_group()
        cut.add_argument("--cut-count", type=int, metavar="K")
        cut.add_argument("--cut-height", type=float, metavar="H")

    p = sub.add_parser("cluster", help="cluster one table under one linkage")
    common(p)
    p.add_argument("--linkage", choices=["single", "complete", "both"],
                   default=Linkage.SINGLE.value)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("compare", help="compare single and complete linkage")
    common(p)
    p.add_argument("--linkage", choices=["both"], default="both")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a seeded synthetic survey table")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--respondents", type=int, default=30, metavar="N")
    p.add_argument("--seed", type=int, default=42, metavar="S")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "respondents", 1) < 1:
        parser.error("--respondents must be >= 1")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
