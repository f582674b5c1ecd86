"""Shared test data builders."""

import string

from avoided_words.sequence import Sequence

EXAMPLE_X = "AGCGCGACGTCTGTGT"

DNA = ("A", "C", "G", "T")


def example_sequence() -> Sequence:
    return Sequence("x", EXAMPLE_X, DNA)


def alphabet_of(sigma: int) -> tuple:
    if sigma == 4:
        return DNA
    return tuple(string.ascii_uppercase[:sigma])


def random_sequence(rng, n: int, sigma: int, label: str = "r") -> Sequence:
    alphabet = alphabet_of(sigma)
    data = "".join(rng.choice(alphabet) for _ in range(n))
    return Sequence(label, data, alphabet)


def spike_family(n: int, sigma: int = 2) -> Sequence:
    """Constructions rich in minimal absent words.

    sigma = 2: a2 a1^(n-2) a2, which has at least n - 2 of them.
    sigma >= 3: a2 a1^k a3 a1^k ... a_sigma a1^k padded with a1 to
    length n, where k = floor(n / (sigma-1)) - 1, which has at least
    (sigma-1)(sigma-2)(k+1) - (sigma-2) of them.
    """
    alphabet = alphabet_of(sigma)
    a1 = alphabet[0]
    if sigma == 2:
        return Sequence("spike", alphabet[1] + a1 * (n - 2) + alphabet[1],
                        alphabet)
    k = n // (sigma - 1) - 1
    parts = [alphabet[i] + a1 * k for i in range(1, sigma)]
    pad = n - (sigma - 1) * (k + 1)
    data = "".join(parts) + a1 * pad
    assert len(data) == n
    return Sequence("spike", data, alphabet)
