"""Synthetic-sequence generation and a timing/memory harness.

Timings are taken in a spawned child process per run so that peak
memory (max resident set size) reflects that run alone; the compiled
kernels are warmed up in the child before the clock starts.  Assertions
about performance belong in tests and are ratio-based only; this module
just measures.
"""

from __future__ import annotations

import multiprocessing
import statistics
import string
import sys
import time
import traceback
from dataclasses import dataclass

import numpy as np

from .avoided import Params, avoided_words, nodes_considered
from .maw import compute_maws
from .sequence import Sequence
from .suffix_index import build

__all__ = ["TimingRecord", "generate", "time_run", "entry"]


@dataclass(frozen=True)
class TimingRecord:
    n: int
    sigma: int
    k: int
    rho: float
    seconds: float
    peak_bytes: int
    nodes_considered: int

    def tsv_row(self) -> str:
        return (f"{self.n}\t{self.sigma}\t{self.k}\t{self.rho:g}"
                f"\t{self.seconds:.6f}\t{self.peak_bytes}"
                f"\t{self.nodes_considered}\n")


TSV_HEADER = "# n\tsigma\tk\trho\tseconds\tpeak_bytes\tnodes_considered\n"


def generate(n: int, sigma: int, seed: int) -> Sequence:
    """Uniform i.i.d. sequence over the first sigma upper-case letters,
    drawn from a PCG64 generator seeded with seed."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if not 2 <= sigma <= 26:
        raise ValueError(f"alphabet size must be in 2..26, got {sigma}")
    rng = np.random.Generator(np.random.PCG64(seed))
    codes = rng.integers(0, sigma, size=n, dtype=np.uint8)
    data = (codes + np.uint8(ord("A"))).tobytes().decode("ascii")
    alphabet = tuple(string.ascii_uppercase[:sigma])
    return Sequence(f"synthetic-n{n}-sigma{sigma}-seed{seed}", data, alphabet)


def _pipeline(seq: Sequence, k: int, rho: float):
    index = build(seq)
    maws = compute_maws(index)
    words = avoided_words(index, maws, Params(k, rho))
    return index, words


def _measure(n: int, sigma: int, k: int, rho: float, seed: int,
             conn) -> None:
    """Child-process body: warm up, run once, report over the pipe."""
    try:
        import resource

        _pipeline(generate(2048, sigma, seed=0), k, rho)
        seq = generate(n, sigma, seed)
        started = time.perf_counter()
        index, words = _pipeline(seq, k, rho)
        elapsed = time.perf_counter() - started
        conn.send({
            "seconds": elapsed,
            "peak_bytes": resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
                          * 1024,
            "nodes_considered": nodes_considered(index, k),
            "words": len(words),
        })
    except Exception:
        conn.send({"error": traceback.format_exc()})
    finally:
        conn.close()


def time_run(n: int, sigma: int, k: int, rho: float,
             repetitions: int = 3, seed: int = 20240901) -> TimingRecord:
    """Median wall time and peak memory of the full pipeline.

    Every repetition runs the same generated sequence in a fresh
    process; the node diagnostic counts explicit internal nodes at
    word-depth k - 1, the work the occurring scan performs.
    """
    if repetitions < 1:
        raise ValueError(f"repetitions must be positive, got {repetitions}")
    ctx = multiprocessing.get_context("spawn")
    seconds = []
    peaks = []
    nodes = 0
    for _ in range(repetitions):
        receiver, sender = ctx.Pipe(duplex=False)
        proc = ctx.Process(target=_measure, args=(n, sigma, k, rho, seed,
                                                  sender))
        proc.start()
        sender.close()
        try:
            result = receiver.recv()
        except EOFError:
            proc.join()
            raise RuntimeError(
                f"benchmark child exited without a result "
                f"(exit code {proc.exitcode})") from None
        finally:
            receiver.close()
        proc.join()
        if "error" in result:
            raise RuntimeError(f"benchmark child failed:\n{result['error']}")
        seconds.append(result["seconds"])
        peaks.append(result["peak_bytes"])
        nodes = result["nodes_considered"]
    return TimingRecord(n, sigma, k, rho, statistics.median(seconds),
                        int(statistics.median(peaks)), nodes)


def entry() -> None:
    import argparse

    parser = argparse.ArgumentParser(
        prog="avoided-words-bench",
        description="Time the pipeline on synthetic sequences and emit a "
                    "plot-ready TSV.")
    parser.add_argument("--n", required=True,
                        help="comma-separated sequence lengths, e.g. "
                             "1000000,8000000")
    parser.add_argument("--sigma", type=int, default=4)
    parser.add_argument("--k", type=int, default=8)
    parser.add_argument("--rho", type=float, default=-10.0)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=20240901)
    parser.add_argument("--out", default=None,
                        help="output TSV path (default: stdout)")
    args = parser.parse_args()
    lengths = [int(float(part)) for part in args.n.split(",") if part]

    stream = open(args.out, "w") if args.out else sys.stdout
    try:
        stream.write(TSV_HEADER)
        for n in lengths:
            record = time_run(n, args.sigma, args.k, args.rho, args.reps,
                              args.seed)
            stream.write(record.tsv_row())
            stream.flush()
    finally:
        if args.out:
            stream.close()
