#!/usr/bin/env python3
"""Compare the full saturation against the single colon-ideal step.

The locus ideal can be computed as (relations : certificates^infinity) or,
cheaper but potentially coarser, as the single quotient
(relations : <certificates>).  On many presentations the two already agree;
this harness runs both modes over the bundled corpus (or any presentation
files given on the command line) and reports verdicts, counts, and timing.

    python3 scripts/compare_quotient_modes.py
    python3 scripts/compare_quotient_modes.py -n 2 algebras/s3.alg
"""

import argparse
import sys
import time
from pathlib import Path

from repcount import (
    DecisionInput,
    InfiniteRepresentations,
    Outcome,
    ResourceLimits,
    RunOptions,
    count_from_run,
    parse_presentation,
    run_pipeline,
)

DEFAULT_CASES = [
    ("idempotent", 1),
    ("imaginary_unit", 1),
    ("double_point", 1),
    ("s3", 1),
    ("free2", 1),
    ("weyl", 2),
    ("commuting_plane", 2),
    ("s3", 2),
    ("qplane", 2),
]


def summarize(run):
    verdict = run.verdict
    if verdict.outcome is Outcome.FINITE:
        try:
            return "finite:%d" % count_from_run(run).count
        except InfiniteRepresentations:  # pragma: no cover - cannot happen
            return "finite:?"
    if verdict.outcome is Outcome.INFINITE:
        return "infinite:%s" % verdict.witness.render()
    return "inconclusive"


def run_case(presentation, n, max_seconds):
    cells = {}
    for mode in ("saturate", "single"):
        options = RunOptions(quotient_mode=mode,
                             limits=ResourceLimits(max_seconds=max_seconds,
                                                   max_degree=60, max_basis=20000))
        t0 = time.perf_counter()
        run = run_pipeline(DecisionInput(presentation, n, options))
        cells[mode] = (summarize(run), time.perf_counter() - t0)
    return cells


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("paths", nargs="*", help="presentation files (default: bundled corpus)")
    parser.add_argument("-n", "--dimension", type=int, default=None,
                        help="dimension for the given files (required with paths)")
    parser.add_argument("--max-seconds", type=float, default=300.0)
    args = parser.parse_args(argv)

    corpus = Path(__file__).resolve().parent.parent / "algebras"
    if args.paths:
        if args.dimension is None:
            parser.error("-n is required when files are given")
        cases = [(Path(p), args.dimension) for p in args.paths]
    else:
        cases = [(corpus / (name + ".alg"), n) for name, n in DEFAULT_CASES]

    print("%-20s %-4s %-24s %-24s %s" % ("case", "n", "saturate", "single", "verdicts"))
    disagreements = 0
    for path, n in cases:
        presentation = parse_presentation(path.read_text(), name=path.stem)
        cells = run_case(presentation, n, args.max_seconds)
        (sat, sat_t), (single, single_t) = cells["saturate"], cells["single"]
        status = "agree" if sat == single else "DIFFER"
        if status == "DIFFER":
            disagreements += 1
        print("%-20s %-4d %-24s %-24s %s"
              % (path.stem, n, "%s (%.2fs)" % (sat, sat_t),
                 "%s (%.2fs)" % (single, single_t), status))
    print("\n%d case(s), %d disagreement(s)" % (len(cases), disagreements))
    return 0


if __name__ == "__main__":
    sys.exit(main())
