"""Bijections between 000-avoiding inversion sequences and non-derangements.

The main map :func:`phi` sends a length-``n`` inversion sequence with no
three consecutive equal entries to a permutation of ``[n]`` or ``[n-1]``
with at least one fixed point.  :mod:`.recurrences` holds the bijections
behind two recurrences for non-derangement numbers, and :mod:`.oracle`
verifies everything exhaustively against brute-force counts.
"""

from ._kernels import BACKEND
from .invseq import R, avoiders, avoids_000, decode_word, encode_word
from .perm import MarkedPermutation, Permutation, parse_marked, parse_permutation
from .phi import (
    TaggedNonDerangement,
    ext_bijection,
    ext_inverse,
    extend,
    phi,
    phi_cyclewise,
    phi_inverse,
    phi_trace,
)
from .recurrences import (
    SplitPair,
    derangement_split,
    derangement_split_inverse,
    theta,
    theta_inverse,
    varphi,
    varphi_alt,
    varphi_alt_inverse,
    varphi_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "R",
    "MarkedPermutation",
    "Permutation",
    "SplitPair",
    "TaggedNonDerangement",
    "avoiders",
    "avoids_000",
    "decode_word",
    "derangement_split",
    "derangement_split_inverse",
    "encode_word",
    "ext_bijection",
    "ext_inverse",
    "extend",
    "parse_marked",
    "parse_permutation",
    "phi",
    "phi_cyclewise",
    "phi_inverse",
    "phi_trace",
    "theta",
    "theta_inverse",
    "varphi",
    "varphi_alt",
    "varphi_alt_inverse",
    "varphi_inverse",
]
