"""
cli.py — Command-line interface for springstack.

Commands:
    springstack stack            Stack one standard tableau per Levi block
    springstack induce           Induced partition μ^Σ with the oracle cross-check
    springstack enumerate        All standard tableaux of a shape, in order
    springstack enumerate-fibre  Springer fibre point counts over F_p, per tableau
    springstack render           Draw a tableau
    springstack verify           Run a verification campaign

Usage::

    springstack stack --levi "2,1;1,1" --tableaux tuple.json
    springstack induce --levi "3,3;2,2,1;1,1,1,1" --lambda "6,5,4"
    springstack enumerate --shape 3,2 --format json
    springstack enumerate-fibre --e zero --n 3 --p 2
    springstack enumerate-fibre --jordan 3,2 --p 3 --ceiling 100000
    springstack render --tableau "[[1,3,5],[2,4]]"
    springstack verify --max-n 5 --p 2 --output campaign.json
    springstack verify --acceptance --workers 4

Exit codes: 0 success, 1 a claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

from springstack.errors import SpringstackError
from springstack.partitions import LeviDatum, Partition
from springstack.tableaux import StandardTableau

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2


def _emit(args: argparse.Namespace, text: str, data: object) -> None:
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(text)


def _status(message: str) -> None:
    print(f"[springstack] {message}", file=sys.stderr)


def _read_json(source: str) -> object:
    """JSON from a file path, or from stdin when the path is ``-``."""
    raw = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SpringstackError(f"{source}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def _levi(args: argparse.Namespace) -> LeviDatum:
    return LeviDatum.parse(args.levi, args.levi_shape)


# Keys under which the commands' own JSON output carries tableaux.
_TABLEAU_KEYS = ("tableau", "stacked")
_TABLEAUX_KEYS = ("tableaux", "classes")


def _is_rows(data: object) -> bool:
    return (
        isinstance(data, list)
        and bool(data)
        and all(isinstance(row, list) and not any(isinstance(x, (list, dict)) for x in row) for row in data)
    )


def _tableau(data: object, source: str) -> StandardTableau:
    """One tableau: a list of rows, or an object with a ``tableau`` or ``stacked`` key."""
    if isinstance(data, dict):
        key = next((k for k in _TABLEAU_KEYS if k in data), None)
        if key is None:
            raise SpringstackError(f'{source}: expected a "tableau" or "stacked" key, got {sorted(data)}')
        data = data[key]
    return StandardTableau.from_json(data)


def _tableaux(data: object, source: str, *, prefer_list: bool) -> list[StandardTableau]:
    """Tableaux from a list, a single tableau, or any JSON object this CLI prints.

    An object holding both a single tableau and a list (``stack`` output) gives
    the list when ``prefer_list`` is set and the single tableau otherwise.
    """
    if isinstance(data, dict):
        list_key = next((k for k in _TABLEAUX_KEYS if k in data), None)
        has_single = any(k in data for k in _TABLEAU_KEYS)
        if list_key is not None and (prefer_list or not has_single):
            data = data[list_key]
        elif has_single:
            return [_tableau(data, source)]
        else:
            raise SpringstackError(f"{source}: no tableaux in an object with keys {sorted(data)}")
    if _is_rows(data):
        return [StandardTableau.from_json(data)]
    if not isinstance(data, list):
        raise SpringstackError(f"{source}: expected a JSON list of tableaux")
    return [_tableau(t, source) for t in data]


# ── stack ──────────────────────────────────────────────────────────────────────

def cmd_stack(args: argparse.Namespace) -> int:
    """Stack a tuple of tableaux read from JSON: a list of tableaux, or ``stack`` output."""
    from springstack import render
    from springstack.tableaux import stack

    d = _levi(args)
    tabs = _tableaux(_read_json(args.tableaux), args.tableaux, prefer_list=True)
    stacked = stack(d, tabs)
    text = f"stk = {stacked}\n{render.render_tableau(stacked)}"
    _emit(args, text, {"levi": d.to_json(), "tableaux": [t.to_json() for t in tabs], "stacked": stacked.to_json()})
    return EXIT_OK


# ── induce ─────────────────────────────────────────────────────────────────────

def cmd_induce(args: argparse.Namespace) -> int:
    from springstack import render
    from springstack.partitions import induced_partition_oracle, mu_sigma

    d = _levi(args)
    mu, oracle = mu_sigma(d), induced_partition_oracle(d)
    _emit(
        args,
        render.render_induce(mu, oracle),
        {"levi": d.to_json(), "mu_sigma": mu.to_json(), "oracle": oracle.to_json(), "agree": mu == oracle},
    )
    return EXIT_OK


# ── enumerate ──────────────────────────────────────────────────────────────────

def cmd_enumerate(args: argparse.Namespace) -> int:
    from springstack import render
    from springstack.tableaux import enumerate_standard

    shape = Partition.parse(args.shape)
    tabs = enumerate_standard(shape)
    text = render.render_tableaux(tabs, f"Std{shape}: {len(tabs)} tableaux, ascending")
    _emit(args, text, {"shape": shape.to_json(), "count": len(tabs), "tableaux": [t.to_json() for t in tabs]})
    return EXIT_OK


# ── enumerate-fibre ────────────────────────────────────────────────────────────

def cmd_enumerate_fibre(args: argparse.Namespace) -> int:
    from springstack import render
    from springstack.exactlinalg import PrimeFieldMatrix
    from springstack.springer import build_representative, enumerate_fibre

    if args.matrix:
        data = _read_json(args.matrix)
        if not isinstance(data, dict):
            raise SpringstackError("the matrix file must hold {\"p\": ..., \"rows\": [...]}")
        e = PrimeFieldMatrix.from_json({"p": args.p, **data})
    else:
        if args.jordan:
            lam = Partition.parse(args.jordan)
        elif args.n is None:
            raise SpringstackError(f"--e {args.e} needs --n")
        elif args.e == "zero":
            lam = Partition((1,) * args.n)
        else:
            lam = Partition((args.n,))
        e = build_representative(LeviDatum.of([lam]), args.p).e
    fibre = enumerate_fibre(e)
    counts = fibre.counts()
    _emit(args, render.render_fibre(counts), counts.to_json())
    return EXIT_OK


# ── render ─────────────────────────────────────────────────────────────────────

def cmd_render(args: argparse.Namespace) -> int:
    from springstack import render

    if args.tableau:
        tabs = [StandardTableau.parse(args.tableau)]
    else:
        tabs = _tableaux(_read_json(args.file), args.file, prefer_list=False)
    if not tabs:
        raise SpringstackError(f"{args.file}: no tableaux to render")
    found = [
        {"tableau": t.to_json(), "shape": t.shape.to_json(), "column_word": list(t.column_word)}
        for t in tabs
    ]
    _emit(
        args,
        "\n\n".join(render.render_tableau(t) for t in tabs),
        found[0] if len(found) == 1 else {"tableaux": found},
    )
    return EXIT_OK


# ── verify ─────────────────────────────────────────────────────────────────────

def cmd_verify(args: argparse.Namespace) -> int:
    from springstack import render
    from springstack.harness import CampaignConfig, run_campaign
    from springstack.reports import ReportLedger

    claims = [c for chunk in (args.claims or []) for c in chunk.split(",") if c]
    chosen: dict[str, object] = {
        "ceiling": args.ceiling, "seed": args.seed, "claims": tuple(claims), "workers": args.workers,
    }
    if args.max_n is not None:
        chosen["max_n"] = args.max_n
    if args.p:
        chosen["primes"] = tuple(args.p)
    if args.samples is not None:
        chosen["random_samples"] = args.samples
    base = CampaignConfig.acceptance() if args.acceptance else CampaignConfig()
    cfg = dataclasses.replace(base, **chosen)
    ledger = ReportLedger(config=cfg.to_json(), version=_version())
    if args.format == "text":
        ledger.add_hook(
            lambda r: _status(f"{r.claim_id}: {r.status} ({r.instances:,} instances)")
        )
    run_campaign(cfg, ledger)

    if args.output:
        ledger.save(args.output, timings=args.timings)
        _status(f"report written to {Path(args.output).resolve()}")
    _emit(args, render.render_campaign(ledger.reports(), timings=args.timings), ledger.to_json(args.timings))
    if args.annotate:
        from springstack.ci import annotate_campaign

        annotate_campaign(ledger.reports())
    return EXIT_OK if ledger.all_passed() else EXIT_CLAIM_FAILED


# ── main ───────────────────────────────────────────────────────────────────────

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress (-v) or debug detail (-vv) to stderr")

    parser = argparse.ArgumentParser(
        prog="springstack",
        description="Stacking of standard tableaux, induced nilpotent orbits and Springer fibres",
    )
    parser.add_argument("--version", action="version", version=f"springstack {_version()}")
    sub = parser.add_subparsers(dest="command", metavar="<command>")

    # stack
    s = sub.add_parser("stack", parents=[common], help="Stack one tableau per Levi block")
    s.add_argument("--levi", required=True, help='Block partitions, e.g. "3,3;2,2,1;1,1,1,1"')
    s.add_argument("--lambda", dest="levi_shape", default=None, metavar="COMPOSITION",
                   help='Levi shape, e.g. "6,5,4" (default: block weights)')
    s.add_argument("--tableaux", required=True, metavar="FILE", help="JSON list of tableaux, or stack JSON output; - for stdin")
    s.set_defaults(func=cmd_stack)

    # induce
    i = sub.add_parser("induce", parents=[common], help="Induced partition μ^Σ")
    i.add_argument("--levi", required=True)
    i.add_argument("--lambda", dest="levi_shape", default=None, metavar="COMPOSITION")
    i.set_defaults(func=cmd_induce)

    # enumerate
    e = sub.add_parser("enumerate", parents=[common], help="All standard tableaux of a shape")
    e.add_argument("--shape", required=True, help='Partition, e.g. "3,2"')
    e.set_defaults(func=cmd_enumerate)

    # enumerate-fibre
    f = sub.add_parser("enumerate-fibre", parents=[common], help="Springer fibre over F_p")
    f.add_argument("--e", choices=["zero", "regular"], default="zero",
                   help="Nilpotent to use with --n (default: zero)")
    f.add_argument("--n", type=int, default=None, help="Dimension for --e")
    f.add_argument("--jordan", default=None, metavar="PARTITION", help="Nilpotent in Jordan form of this type")
    f.add_argument("--matrix", default=None, metavar="FILE", help='JSON {"p": .., "rows": [[..]]}')
    f.add_argument("--p", type=int, default=2, help="Field characteristic (default: 2)")
    f.add_argument("--ceiling", type=int, default=None, help="Maximum number of flags")
    f.set_defaults(func=cmd_enumerate_fibre)

    # render
    r = sub.add_parser("render", parents=[common], help="Draw a tableau")
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("--tableau", default=None, help='JSON rows, e.g. "[[1,3],[2]]"')
    src.add_argument("--file", default=None, metavar="FILE",
                     help="JSON tableau, list of tableaux, or any springstack JSON output; - for stdin")
    r.set_defaults(func=cmd_render)

    # verify
    v = sub.add_parser("verify", parents=[common], help="Run a verification campaign")
    v.add_argument("--max-n", type=int, default=None, help="Largest N swept (default: 5, or 8 with --acceptance)")
    v.add_argument("--p", type=int, action="append", help="Prime to use; repeatable (default: 2)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--claims", action="append", metavar="IDS",
                   help="Claim ids or prefixes, comma-separated; repeatable (default: all)")
    v.add_argument("--ceiling", type=int, default=None, help="Maximum flags per enumeration")
    v.add_argument("--samples", type=int, default=None,
                   help="Random samples per sampled claim (default: 200, or 1000 with --acceptance)")
    v.add_argument("--acceptance", action="store_true",
                   help="Run every claim at its full bounds; explicit options still override")
    v.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")
    v.add_argument("--output", default=None, metavar="FILE", help="Write the JSON report here")
    v.add_argument("--timings", action="store_true", help="Include wall times in the report")
    v.add_argument("--annotate", action="store_true", help="Emit GitHub Actions annotations")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_OK
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            format="[springstack] %(name)s: %(message)s",
            stream=sys.stderr,
        )
    try:
        if getattr(args, "ceiling", None) is not None:
            from springstack.settings import init

            init(max_flags=args.ceiling)
        return args.func(args)
    except SpringstackError as exc:
        _status(f"error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _status(f"error: {exc}")
        return EXIT_USAGE


def _version() -> str:
    try:
        from springstack import __version__

        return __version__
    except Exception:
        return "unknown"


if __name__ == "__main__":
    sys.exit(main())
