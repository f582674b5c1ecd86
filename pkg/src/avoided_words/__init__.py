"""Avoided words: words a sequence under-represents.

A word is avoided at threshold rho < 0 when its deviation score
(observed count minus the Markov estimate from its longest proper
prefix, suffix and infix counts, normalized) is at most rho.  The
package builds an annotated suffix tree per sequence, derives the
minimal absent words, and enumerates avoided words of one fixed
length or of all lengths >= 3, in time near-linear in the sequence
length.
"""

from .avoided import (AvoidedWord, Params, WordStats, all_avoided,
                      avoided_words, expected_frequency, occurring_avoided,
                      absent_avoided, std_value)
from .dna import is_self_complementary, mark_palindromes, reverse_complement
from .errors import AvoidedWordsError, InputError, InternalConsistencyError
from .fasta_io import InputPolicy, read_fasta, write_fasta, write_report
from .maw import MawList, MawTuple, compute_maws, maws_of_length
from .pipeline import analyze_sequence, analyze_sequences
from .sequence import DNA_ALPHABET, PROTEIN_ALPHABET, Sequence
from .suffix_index import (Locus, NodeView, SuffixIndex, build, child,
                           frequency, locate_factor, suffix_link_of)

__version__ = "0.1.0"

__all__ = [
    "AvoidedWord", "AvoidedWordsError", "DNA_ALPHABET", "InputError",
    "InputPolicy", "InternalConsistencyError", "Locus", "MawList",
    "MawTuple", "NodeView", "PROTEIN_ALPHABET", "Params", "Sequence",
    "SuffixIndex", "WordStats", "absent_avoided", "all_avoided",
    "analyze_sequence", "analyze_sequences", "avoided_words", "build",
    "child", "compute_maws", "expected_frequency", "frequency",
    "is_self_complementary", "locate_factor", "mark_palindromes",
    "maws_of_length", "occurring_avoided", "read_fasta",
    "reverse_complement", "std_value", "suffix_link_of", "write_fasta",
    "write_report", "__version__",
]
