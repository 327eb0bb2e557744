"""Command-line front end: parse a presentation file, run the detector,
print a human or JSON report."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .detector import Answer, Verdict, detect
from .freealg import (Presentation, PresentationError, PresentationInputError,
                      PresentationSyntaxError, parse_field_name,
                      parse_presentation)
from .poly import GrevLex

EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_INPUT_ERROR = 3


def build_report(pres: Presentation, dim: int, verdict: Verdict,
                 wall: float) -> dict:
    gens = pres.generator_names
    report = {
        "tool": "repfinite",
        "version": __version__,
        "presentation": {
            "field": str(pres.field),
            "generators": list(gens),
            "relations": [r.to_str(gens) for r in pres.relations],
        },
        "dimension": dim,
        "field": str(pres.field),
        "verdict": verdict.answer.value,
        "witness": None,
        "num_words": verdict.num_words,
        "num_candidates": verdict.num_candidates,
        "max_generator_degree": verdict.max_generator_degree,
        "degree_bound": verdict.degree_bound,
        "log": [
            {
                "word": "*".join(gens[l - 1] for l in o.candidate.source_word),
                "coef_index": o.candidate.coef_index,
                "degree": o.candidate.degree,
                "algebraic": o.algebraic,
                "seconds": round(o.seconds, 4),
                "annihilator": (o.annihilator.to_str() if o.annihilator
                                is not None else None),
            }
            for o in verdict.log
        ],
        "total_seconds": round(wall, 4),
    }
    if verdict.witness is not None:
        w = verdict.witness
        report["witness"] = {
            "word": "*".join(gens[l - 1] for l in w.source_word),
            "coef_index": w.coef_index,
            "degree": w.degree,
            "polynomial": w.poly.to_str(),
            "nondeterministic": verdict.concurrent,
        }
    return report


def format_human(report: dict) -> str:
    lines = []
    lines.append(f"field: {report['field']}   dimension: {report['dimension']}")
    lines.append("generators: " + " ".join(report["presentation"]["generators"]))
    for r in report["presentation"]["relations"]:
        lines.append(f"relation: {r}")
    lines.append(f"words tested: {report['num_words']}, "
                 f"candidate coefficients: {report['num_candidates']}")
    if report["verdict"] == "infinite":
        w = report["witness"]
        lines.append(f"INFINITE — witness: coefficient {w['coef_index']} of "
                     f"the characteristic polynomial of {w['word']}")
    else:
        lines.append("FINITE — every candidate coefficient is algebraic "
                     "modulo the relation ideal")
    lines.append(f"total time: {report['total_seconds']}s")
    return "\n".join(lines)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="repfinite",
        description="Decide whether a finitely presented algebra has "
                    "infinitely many equivalence classes of semisimple "
                    "n-dimensional representations.")
    ap.add_argument("--input", required=True,
                    help="presentation file ('-' for stdin)")
    ap.add_argument("--dim", type=int, default=None,
                    help="representation dimension (overrides the file)")
    ap.add_argument("--field", default=None,
                    help="coefficient field: q or f<p> (overrides the file)")
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    ap.add_argument("--all", action="store_true",
                    help="test every coefficient instead of stopping at the "
                         "first witness")
    ap.add_argument("--no-cyclic-dedup", action="store_true",
                    help="test all words, not one per cyclic class")
    ap.add_argument("--threads", type=int, default=1,
                    help="number of worker processes for coefficient tests")
    ap.add_argument("--verbose", action="store_true",
                    help="trace basis computations to stderr")
    ap.add_argument("--version", action="version",
                    version=f"repfinite {__version__}")
    return ap


def run_cli(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        print(f"error: cannot read {args.input}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        pres, dim = parse_presentation(text)
    except PresentationSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except PresentationInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        if args.field is not None:
            pres = pres.with_field(parse_field_name(args.field))
        if args.dim is not None:
            dim = args.dim
        if dim is None or dim < 1:
            raise PresentationInputError("dimension must be a positive integer")
        if args.threads < 1:
            raise PresentationInputError("--threads must be >= 1")
    except PresentationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    trace = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    t0 = time.monotonic()
    verdict = detect(pres, dim,
                     all_coefficients=args.all,
                     cyclic_dedup=not args.no_cyclic_dedup,
                     threads=args.threads,
                     trace=trace)
    report = build_report(pres, dim, verdict, time.monotonic() - t0)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(format_human(report))
    return EXIT_OK


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
