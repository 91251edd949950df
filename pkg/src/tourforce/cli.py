"""Command-line entry point: ``tourforce <subcommand> ...``.

Every subcommand prints one JSON document (``sweep`` prints one per line).
Errors go to stderr as a single JSON line; exit code 2 means bad input,
3 means a size cap was hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .counting import bundle
from .decide import is_locally_forcing
from .embeddings import count_embeddings, mc_estimate_embeddings
from .errors import DomainError, ParseError, ResourceError, TourforceError
from .generators import sample_bip, sample_cliq, sample_triangle_tournament
from .designs import TrianglePartition, partition_with_leftovers, steiner_triple_system
from .metrics import necessary_conditions
from .report import analyze, dumps_canonical, serialize
from .rng import as_probability, check_seed
from .tournament import LABELLED_CAP, Tournament, enumerate_all

EXAMPLES = """examples:
  tourforce analyze --code "n=3;bits=101"
  tourforce decide --file h.txt
  tourforce generate --model triangle --sts 7 --seed 42
  tourforce generate --model cliq --n 15 --alpha 1/2 --seed 1
  tourforce count --host "n=5;bits=1100110111" --pattern "n=3;bits=101"
  tourforce count --host big.txt --pattern "n=3;bits=101" --mc 20000 --seed 3
  tourforce enumerate --h 5 --iso
  tourforce sweep --h 5 --iso
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_tournament(source: str) -> Tournament:
    """A tournament code, or a path to a file holding a code or an adjacency matrix."""
    s = source.strip()
    if s.startswith("n="):
        return Tournament.from_code(s)
    path = Path(source)
    if not path.is_file():
        raise ParseError(f"{source!r} is neither a tournament code nor a readable file")
    text = path.read_text().strip()
    if text.startswith("n="):
        return Tournament.from_code(text)
    return Tournament.from_adjacency_text(text)


def _input(args) -> Tournament:
    if args.code is not None:
        return Tournament.from_code(args.code)
    return load_tournament(args.file)


def _seed(args) -> int:
    if args.seed is None:
        raise UsageError(f"'{args.cmd}' is randomized here and requires --seed")
    return check_seed(args.seed)


def _u64(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _subset(text: str) -> list[int]:
    try:
        vs = [int(t) - 1 for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None
    if any(v < 0 for v in vs):
        raise argparse.ArgumentTypeError("vertices are 1-based")
    return vs


def build_parser() -> argparse.ArgumentParser:
    shared = _Parser(add_help=False)
    shared.add_argument("--out", help="write output here instead of stdout")
    shared.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes")
    shared.add_argument("--seed", type=_u64, help="unsigned 64-bit seed")

    single = _Parser(add_help=False)
    src = single.add_mutually_exclusive_group(required=True)
    src.add_argument("--code", help='tournament code, e.g. "n=3;bits=101"')
    src.add_argument("--file", help="file with a code or an adjacency matrix over {0,1,-}")

    p = _Parser(
        prog="tourforce",
        description="Exact analysis of locally forcing tournaments.",
        epilog=EXAMPLES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[shared, single], help="full envelope: verdicts, metrics, polynomials")
    a.add_argument("--poly-text", action="store_true", help="print only the labelled polynomial lines")
    sub.add_parser("decide", parents=[shared, single], help="cliq/bip/local forcing verdicts")
    sub.add_parser("metrics", parents=[shared, single], help="degree, ordering and cut statistics")

    g = sub.add_parser("generate", parents=[shared], help="sample a tournament")
    g.add_argument("--model", choices=["cliq", "bip", "triangle"], required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--alpha", default="1/2", help="exact rational p/q")
    where = g.add_mutually_exclusive_group()
    where.add_argument("--sts", type=int, metavar="H", help="use a Steiner triple system on H points")
    where.add_argument("--partition", help="partition file with 'tri a b c' / 'edge a b' lines")

    c = sub.add_parser("count", parents=[shared], help="labelled embeddings of a pattern in a host")
    c.add_argument("--host", required=True)
    c.add_argument("--pattern", required=True)
    c.add_argument("--subset", type=_subset, help="1-based host vertices, e.g. 1,4,7")
    c.add_argument("--mc", type=int, metavar="SAMPLES", help="Monte Carlo with this many samples")

    e = sub.add_parser("enumerate", parents=[shared], help="list tournaments on h vertices")
    e.add_argument("--h", type=int, required=True)
    e.add_argument("--iso", action="store_true", help="one representative per isomorphism class")

    s = sub.add_parser("sweep", parents=[shared], help="analyze every tournament on h vertices")
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--iso", action="store_true")
    s.add_argument("--no-metrics", action="store_true")
    return p


def _cmd_analyze(args):
    H = _input(args)
    if args.poly_text:
        return "\n".join(f"{k} {v}" for k, v in bundle(H).labelled_texts())
    return serialize(analyze(H))


def _cmd_generate(args):
    seed = _seed(args)
    alpha = as_probability(args.alpha)
    prov = {"model": args.model, "seed": seed}
    if args.model in ("cliq", "bip"):
        if args.n is None:
            raise UsageError(f"--model {args.model} needs --n")
        sampler = sample_cliq if args.model == "cliq" else sample_bip
        T = sampler(args.n, alpha, seed)
        prov.update(n=args.n, alpha=f"{alpha.numerator}/{alpha.denominator}")
    else:
        if args.sts is not None:
            P = steiner_triple_system(args.sts)
        elif args.partition is not None:
            P = TrianglePartition.from_text(Path(args.partition).read_text())
        elif args.n is not None:
            P = partition_with_leftovers(args.n, seed=seed)
        else:
            raise UsageError("--model triangle needs --sts, --partition or --n")
        T = sample_triangle_tournament(P, seed)
        prov.update(n=P.h, triangles=P.L, leftover_edges=P.F)
    return dumps_canonical({"code": T.code, "provenance": dict(sorted(prov.items()))})


def _cmd_count(args):
    T = load_tournament(args.host)
    H = load_tournament(args.pattern)
    if args.mc is not None:
        res = mc_estimate_embeddings(T, H, args.subset, samples=args.mc, seed=_seed(args))
    else:
        res = count_embeddings(T, H, args.subset, threads=max(1, args.threads))
    return dumps_canonical(res.to_dict())


def _family(args):
    if args.h < 1:
        raise DomainError("h must be positive")
    return list(enumerate_all(args.h, up_to_iso=args.iso))


def _cmd_enumerate(args):
    codes = [T.code for T in _family(args)]
    return dumps_canonical({"h": args.h, "iso": args.iso, "count": len(codes), "codes": codes})


def _sweep_one(job):
    code, with_metrics = job
    return serialize(analyze(Tournament.from_code(code), with_metrics=with_metrics))


def _cmd_sweep(args):
    if not args.iso and args.h > LABELLED_CAP:
        raise ResourceError(f"labelled sweep is capped at h={LABELLED_CAP}; use --iso")
    jobs = [(T.code, not args.no_metrics) for T in _family(args)]
    if args.threads > 1 and len(jobs) > 64:
        with ProcessPoolExecutor(max_workers=args.threads) as ex:
            lines = list(ex.map(_sweep_one, jobs, chunksize=64))
    else:
        lines = [_sweep_one(j) for j in jobs]
    return "\n".join(lines)


COMMANDS = {
    "analyze": _cmd_analyze,
    "decide": lambda a: dumps_canonical(is_locally_forcing(_input(a)).to_dict()),
    "metrics": lambda a: dumps_canonical(necessary_conditions(_input(a)).to_dict()),
    "generate": _cmd_generate,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "sweep": _cmd_sweep,
}


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = COMMANDS[args.cmd](args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except ResourceError as exc:
        return _fail("resource", str(exc), 3)
    except (ParseError, DomainError) as exc:
        return _fail(type(exc).__name__, str(exc), 2)
    except (OSError, TourforceError) as exc:
        return _fail(type(exc).__name__, str(exc), 2)
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        sys.stdout.write(out + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
