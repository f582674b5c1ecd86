"""Command-line interface: FASTA in, avoided-word report out.

Exit codes: 0 success, 1 usage error, 2 input or output error,
3 internal consistency failure.  By default the analysis runs in
process; with --server it is delegated to a running service instance
and the returned report is written unchanged.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import httpx

from .dna import is_self_complementary, mark_palindromes, reverse_complement
from .errors import InputError, InternalConsistencyError
from .fasta_io import (InputPolicy, format_report_block,
                       format_report_header, read_fasta)
from .pipeline import analyze_sequence

__all__ = ["run", "entry", "reverse_complement", "is_self_complementary",
           "mark_palindromes"]

_AMBIGUOUS_FLAG = {
    "reject": "reject",
    "skip": "skip-record",
    "split": "split-at-ambiguous",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="avoided-words",
        description="Report words a sequence avoids: words whose observed "
                    "count falls short of the Markov estimate from their "
                    "longest proper prefix, suffix and infix counts.")
    parser.add_argument("-i", "--input", required=True,
                        help="input (multi-)FASTA file")
    parser.add_argument("-o", "--output", default=None,
                        help="output report path (default: stdout)")
    parser.add_argument("-k", type=int, default=None,
                        help="word length, an integer greater than 2")
    parser.add_argument("-r", "--rho", type=float, default=None,
                        help="deviation threshold, a negative real")
    parser.add_argument("--all-lengths", action="store_true",
                        help="report words of every length >= 3 instead "
                             "of one fixed length")
    parser.add_argument("--alphabet", choices=("dna", "protein", "auto"),
                        default="dna", help="alphabet the records must use")
    parser.add_argument("--ambiguous", choices=("reject", "skip", "split"),
                        default="split",
                        help="out-of-alphabet symbols: reject the file, "
                             "skip the record, or split the record there")
    parser.add_argument("--mark-palindromes", action="store_true",
                        help="add a column flagging self-complementary "
                             "words (dna alphabet only)")
    parser.add_argument("--threads", type=int, default=1,
                        help="number of sequences to analyze concurrently")
    parser.add_argument("--precision", type=int, default=6,
                        help="decimal places for the E and std columns")
    parser.add_argument("--server", default=None, metavar="URL",
                        help="delegate the analysis to a service instance "
                             "at this base URL")
    return parser


def _validate(args) -> None:
    if args.all_lengths and args.k is not None:
        raise _UsageError("-k conflicts with --all-lengths")
    if not args.all_lengths and args.k is None:
        raise _UsageError("-k is required unless --all-lengths is given")
    if args.k is not None and args.k <= 2:
        raise _UsageError(f"-k must exceed 2, got {args.k}")
    if args.rho is None:
        raise _UsageError("-r is required")
    if not args.rho < 0:
        raise _UsageError(f"-r must be negative, got {args.rho}")
    if args.mark_palindromes and args.alphabet != "dna":
        raise _UsageError("--mark-palindromes needs --alphabet dna")
    if args.threads < 1:
        raise _UsageError(f"--threads must be positive, got {args.threads}")
    if not 1 <= args.precision <= 17:
        raise _UsageError(
            f"--precision must be in 1..17, got {args.precision}")


def _open_output(path: Optional[str]):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def _run_local(args) -> int:
    policy = InputPolicy(args.alphabet, _AMBIGUOUS_FLAG[args.ambiguous])
    seqs = read_fasta(args.input, policy)

    def blocks():
        if args.threads > 1:
            from .pipeline import analyze_sequences
            results = analyze_sequences(seqs, args.rho, args.k,
                                        args.all_lengths, args.threads)
        else:
            results = ((s.id, analyze_sequence(s, args.rho, args.k,
                                               args.all_lengths))
                       for s in seqs)
        for seq_id, words in results:
            if args.mark_palindromes:
                words = mark_palindromes(words)
            yield format_report_block(seq_id, words, args.precision)

    stream, owned = _open_output(args.output)
    try:
        stream.write(format_report_header(args.mark_palindromes))
        for block in blocks():
            stream.write(block)
    finally:
        if owned:
            stream.close()
    return 0


def _run_remote(args, transport=None) -> int:
    with open(args.input, "r", encoding="ascii") as handle:
        fasta = handle.read()
    payload = {
        "fasta": fasta,
        "k": args.k,
        "rho": args.rho,
        "all_lengths": args.all_lengths,
        "alphabet": args.alphabet,
        "ambiguous": args.ambiguous,
        "mark_palindromes": args.mark_palindromes,
        "precision": args.precision,
    }
    with httpx.Client(base_url=args.server, transport=transport,
                      timeout=600.0) as client:
        response = client.post("/report", json=payload)
    if response.status_code == 200:
        stream, owned = _open_output(args.output)
        try:
            stream.write(response.text)
        finally:
            if owned:
                stream.close()
        return 0
    print(f"server error {response.status_code}: {response.text}",
          file=sys.stderr)
    return 3 if response.status_code >= 500 else 2


def run(argv, transport=None) -> int:
    """Parse arguments and execute; returns the process exit code.

    transport optionally routes --server traffic through an in-process
    HTTP transport (used by tests).
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args)
    except _UsageError as err:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {err}", file=sys.stderr)
        return 1
    except SystemExit as err:
        return int(err.code or 0)
    try:
        if args.server is not None:
            return _run_remote(args, transport)
        return _run_local(args)
    except (InputError, OSError) as err:
        print(f"{parser.prog}: {err}", file=sys.stderr)
        return 2
    except httpx.HTTPError as err:
        print(f"{parser.prog}: cannot reach server: {err}", file=sys.stderr)
        return 2
    except InternalConsistencyError as err:
        print(f"{parser.prog}: internal consistency failure: {err}",
              file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(run(sys.argv[1:]))
