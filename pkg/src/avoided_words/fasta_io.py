"""FASTA ingestion with alphabet policies, and TSV report writing.

Reading applies one policy along each axis: which alphabet the records
are validated against (dna, protein, or auto = the symbols each record
actually uses) and what to do with out-of-alphabet symbols (reject the
file, skip the record, or split the record at such symbols).  Sequence
data is always folded to upper case.

Reports are tab-separated with a fixed column set and 6-decimal fixed
notation for the two real columns by default, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import IO, Iterable, Union

from .errors import InputError
from .sequence import DNA_ALPHABET, PROTEIN_ALPHABET, Sequence

__all__ = [
    "InputPolicy",
    "read_fasta",
    "write_fasta",
    "write_report",
    "format_report_header",
    "format_report_block",
]

log = logging.getLogger(__name__)

_ALPHABET_MODES = ("dna", "protein", "auto")
_AMBIGUOUS_MODES = ("reject", "skip-record", "split-at-ambiguous")

PathOrStream = Union[str, os.PathLike, IO[str]]


@dataclass(frozen=True)
class InputPolicy:
    """How records are validated; case folding is always to upper."""

    alphabet_mode: str = "dna"
    ambiguous_mode: str = "split-at-ambiguous"

    def __post_init__(self):
        if self.alphabet_mode not in _ALPHABET_MODES:
            raise ValueError(f"unknown alphabet mode {self.alphabet_mode!r}")
        if self.ambiguous_mode not in _AMBIGUOUS_MODES:
            raise ValueError(f"unknown ambiguous mode {self.ambiguous_mode!r}")

    @property
    def alphabet(self):
        """Declared alphabet, or None in auto mode."""
        if self.alphabet_mode == "dna":
            return DNA_ALPHABET
        if self.alphabet_mode == "protein":
            return PROTEIN_ALPHABET
        return None


def _records_to_sequences(rid: str, data: str, line: int,
                          policy: InputPolicy) -> list:
    """Apply the policy to one raw record; may yield 0..many sequences."""
    alphabet = policy.alphabet
    if alphabet is None:
        return [Sequence(rid, data)] if data else []
    allowed = set(alphabet)
    bad_at = next((p for p, a in enumerate(data) if a not in allowed), None)
    if bad_at is None:
        return [Sequence(rid, data, alphabet)]
    if policy.ambiguous_mode == "reject":
        raise InputError(
            f"record {rid!r} (line {line}): symbol {data[bad_at]!r} at "
            f"position {bad_at + 1} is outside the "
            f"{policy.alphabet_mode} alphabet")
    if policy.ambiguous_mode == "skip-record":
        log.warning("skipping record %r: out-of-alphabet symbol %r",
                    rid, data[bad_at])
        return []
    segments = []
    start = None
    for p, a in enumerate(data):
        if a in allowed:
            if start is None:
                start = p
        elif start is not None:
            segments.append(data[start:p])
            start = None
    if start is not None:
        segments.append(data[start:])
    return [Sequence(f"{rid}/{ordinal}", segment, alphabet)
            for ordinal, segment in enumerate(segments, start=1)]


def read_fasta(source: PathOrStream, policy: InputPolicy) -> list:
    """Parse a (multi-)FASTA source into validated Sequence records."""
    if hasattr(source, "read"):
        return _read_stream(source, policy)
    with open(source, "r", encoding="ascii") as handle:
        return _read_stream(handle, policy)


def _read_stream(stream: IO[str], policy: InputPolicy) -> list:
    out = []
    rid = None
    rid_line = 0
    chunks: list = []

    def flush():
        if rid is None:
            return
        data = "".join(chunks)
        if not data:
            raise InputError(
                f"record {rid!r} (line {rid_line}) has no sequence data")
        out.extend(_records_to_sequences(rid, data, rid_line, policy))

    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            flush()
            fields = line[1:].split()
            if not fields:
                raise InputError(f"line {lineno}: header with empty id")
            rid = fields[0]
            rid_line = lineno
            chunks = []
        else:
            if rid is None:
                raise InputError(
                    f"line {lineno}: sequence data before any '>' header")
            chunks.append(line.upper())
    flush()
    if rid is None:
        raise InputError("no FASTA records found")
    return out


def write_fasta(seqs: Iterable[Sequence], dest: PathOrStream,
                width: int = 70) -> None:
    if hasattr(dest, "write"):
        _write_fasta_stream(seqs, dest, width)
        return
    with open(dest, "w", encoding="ascii") as handle:
        _write_fasta_stream(seqs, handle, width)


def _write_fasta_stream(seqs, stream, width: int) -> None:
    for seq in seqs:
        stream.write(f">{seq.id}\n")
        for at in range(0, seq.n, width):
            stream.write(seq.data[at:at + width] + "\n")


def format_report_header(palindromes: bool = False) -> str:
    columns = "# word\tlength\tclass\tf\tE\tstd"
    if palindromes:
        columns += "\tpalindrome"
    return columns + "\n"


def format_report_block(seq_id: str, words, precision: int = 6) -> str:
    """One report block: the id line plus one row per avoided word.

    Rows are AvoidedWord values, or (AvoidedWord, bool) pairs when the
    palindrome column is wanted.
    """
    lines = [f">{seq_id}\n"]
    for row in words:
        if isinstance(row, tuple):
            w, palin = row
            extra = "\ttrue" if palin else "\tfalse"
        else:
            w, extra = row, ""
        s = w.stats
        lines.append(
            f"{w.word}\t{len(w.word)}\t{w.word_class}\t{s.f}"
            f"\t{s.expected:.{precision}f}\t{s.std:.{precision}f}{extra}\n")
    return "".join(lines)


def write_report(results, dest: PathOrStream, precision: int = 6) -> None:
    """Write blocks of (sequence id, avoided words) as one TSV report.

    The palindrome column appears exactly when the first row of the
    first non-empty block is an (AvoidedWord, bool) pair; blocks must
    not mix the two row shapes.
    """
    if hasattr(dest, "write"):
        _write_report_stream(results, dest, precision)
        return
    with open(dest, "w", encoding="ascii") as handle:
        _write_report_stream(results, handle, precision)


def _write_report_stream(results, stream, precision: int) -> None:
    results = list(results)
    with_palindromes = any(
        isinstance(row, tuple) for _, words in results for row in words)
    stream.write(format_report_header(with_palindromes))
    for seq_id, words in results:
        if with_palindromes and any(not isinstance(r, tuple) for r in words):
            raise ValueError("mixed report rows: palindrome flags are "
                             "present for some words but not all")
        stream.write(format_report_block(seq_id, words, precision))
