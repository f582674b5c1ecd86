"""Validated symbol sequences over an explicit alphabet."""

from __future__ import annotations

from dataclasses import dataclass, field

DNA_ALPHABET = ("A", "C", "G", "T")
PROTEIN_ALPHABET = tuple("ACDEFGHIKLMNPQRSTVWY")

# Rendering of the construction-time terminator; never part of an alphabet.
SENTINEL = "$"


@dataclass(frozen=True)
class Sequence:
    """A text over a declared, ordered alphabet.

    The alphabet may be a superset of the symbols actually present (e.g. a
    declared DNA alphabet over a record that happens to lack one base), but
    every symbol of ``data`` must belong to it.
    """

    id: str
    data: str
    alphabet: tuple[str, ...] = field(default=())

    def __post_init__(self):
        alphabet = self.alphabet
        if not alphabet:
            alphabet = tuple(sorted(set(self.data)))
            object.__setattr__(self, "alphabet", alphabet)
        if len(alphabet) == 0:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet symbols must be distinct")
        for sym in alphabet:
            if len(sym) != 1:
                raise ValueError(f"alphabet entries must be single symbols, got {sym!r}")
        if SENTINEL in alphabet:
            raise ValueError(f"alphabet may not contain the reserved terminator {SENTINEL!r}")
        allowed = set(alphabet)
        if set(self.data) - allowed:
            pos, sym = next((p, s) for p, s in enumerate(self.data)
                            if s not in allowed)
            raise ValueError(
                f"sequence {self.id!r}: symbol {sym!r} at position {pos} is not in the alphabet"
            )

    @property
    def n(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)
