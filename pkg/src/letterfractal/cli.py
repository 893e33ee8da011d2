"""letterfractal command line: fetch, analyze, compare, export-plot."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import workbench
from .corpus import fetch_remote, normalize, strip_boilerplate
from .dimensions import RANK_CONVENTIONS
from .errors import LetterFractalError

log = logging.getLogger("letterfractal")


def _common(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--config", help="plain-text key = value config file")
    ap.add_argument("--cache-dir", help="download cache (default: $LETTERFRACTAL_CACHE_DIR)")
    ap.add_argument("--url-template", help="archive URL with an {id} placeholder")
    ap.add_argument(
        "--fold-diacritics", action="store_true", default=None,
        help="reduce accented letters to their base letter instead of dropping them",
    )
    ap.add_argument(
        "--strip-boilerplate", dest="strip_local", action="store_true", default=None,
        help="also strip archive START/END boilerplate from local files",
    )
    ap.add_argument(
        "--rank-convention", choices=RANK_CONVENTIONS,
        help="Zipf rank direction (default: ascending, rarest letter = rank 1)",
    )
    ap.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="letterfractal",
        description="Fractal dimension and Zipf statistics of the letters in a text.",
    )
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fetch", help="download archive texts into the cache")
    _common(p)
    p.add_argument("ids", nargs="+", help="numeric archive ids")

    p = sub.add_parser("analyze", help="analyze one or more manuscripts")
    _common(p)
    p.add_argument("--format", dest="output_format", choices=workbench.OUTPUT_FORMATS)
    p.add_argument("--jobs", type=int, help="manuscripts analyzed in parallel")
    p.add_argument(
        "inputs", nargs="+",
        help="local file, fixture:NAME or gutenberg:ID",
    )

    p = sub.add_parser("compare", help="compare manuscripts ordered by length")
    _common(p)
    p.add_argument("--format", dest="output_format", choices=workbench.OUTPUT_FORMATS)
    p.add_argument("--jobs", type=int)
    p.add_argument("--plot-out", help="also write D_Z and D_f+1 plot points here")
    p.add_argument(
        "inputs", nargs="+",
        help="as for analyze, plus table:NAME (published row) or a saved JSON export",
    )

    p = sub.add_parser("export-plot", help="write the points behind one figure")
    _common(p)
    p.add_argument("input")
    p.add_argument("plot", help=f"one of: {', '.join(sorted(workbench.PLOTS))}")
    return ap


def _config(args) -> workbench.RunConfig:
    return workbench.RunConfig.load(
        args.config,
        cache_dir=args.cache_dir,
        url_template=args.url_template,
        fold_diacritics=args.fold_diacritics,
        strip_local=args.strip_local,
        rank_convention=args.rank_convention,
        output_format=getattr(args, "output_format", None),
        jobs=getattr(args, "jobs", None),
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _error(msg: str) -> None:
    print(f"letterfractal: error: {msg}", file=sys.stderr)


def cmd_fetch(args, config) -> int:
    status = 0
    for archive_id in args.ids:
        try:
            doc = strip_boilerplate(fetch_remote(archive_id, config.cache_dir, config.url_template))
            letters = len(normalize(doc, config.policy))
        except LetterFractalError as exc:
            _error(f"{archive_id}: {exc}")
            status = 1
            continue
        print(f"{archive_id}\t{doc.title}\t{letters} letters")
    return status


def cmd_analyze(args, config) -> int:
    outcomes = workbench.analyze_inputs(args.inputs, config)
    reports = [o.report for o in outcomes if o.ok]
    failed = [o for o in outcomes if not o.ok]
    for o in failed:
        _error(f"{o.input}: {type(o.error).__name__}: {o.error}")
    _emit(workbench.format_reports(reports, config.output_format, failed), args.output)
    return 1 if failed else 0


def cmd_compare(args, config) -> int:
    reports = []
    for spec in args.inputs:
        reports.extend(workbench.load_reports(spec, config))
    if len(reports) < 2:
        _error("compare needs at least two manuscripts")
        return 2
    table = workbench.build_comparison(reports)
    _emit(workbench.format_comparison(table, config.output_format), args.output)
    if args.plot_out:
        Path(args.plot_out).write_text(workbench.render_fig6(table), encoding="utf-8")
    return 0


def cmd_export_plot(args, config) -> int:
    t = workbench.load_tally(args.input, config)
    data = workbench.plot_data(t, args.plot, config.rank_convention)
    _emit(workbench.render_plot(data, args.input), args.output)
    return 0


COMMANDS = {
    "fetch": cmd_fetch,
    "analyze": cmd_analyze,
    "compare": cmd_compare,
    "export-plot": cmd_export_plot,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except (LetterFractalError, ValueError, OSError) as exc:
        _error(f"{type(exc).__name__}: {exc}" if isinstance(exc, LetterFractalError) else str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
