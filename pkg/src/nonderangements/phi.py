"""The bijection from 000-avoiding inversion sequences to non-derangements.

``phi`` sends ``e`` of length ``n`` to a non-derangement of ``[n]`` or of
``[n-1]``; the ground-set size says which summand of the disjoint union
the image lies in.  ``phi`` runs the one-line transposition rule through
the kernels, ``phi_cyclewise`` performs the equivalent cycle surgery, and
the two are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from .invseq import (
    R,
    InversionSequence,
    InversionSequenceError,
    avoids_000,
    encode_word,
    is_inversion_sequence,
    render_sequence,
)
from .perm import (
    Permutation,
    apply_transposition,
    embed,
    fixed_points,
    identity,
    is_non_derangement,
    render_cycles,
    render_one_line,
)

__all__ = [
    "TaggedNonDerangement",
    "TraceRow",
    "phi",
    "phi_cyclewise",
    "phi_trace",
    "phi_inverse",
    "extend",
    "ext_bijection",
    "ext_inverse",
]


@dataclass(frozen=True, order=True)
class TaggedNonDerangement:
    """An element of the disjoint union of non-derangements of ``[n]`` and of ``[n-1]``."""

    n: int
    perm: Permutation

    def __post_init__(self):
        if self.perm.n not in (self.n, self.n - 1) or not self.perm.is_standard:
            raise ValueError(f"{self.perm} is a permutation of neither [{self.n}] nor [{self.n - 1}]")
        if not is_non_derangement(self.perm):
            raise ValueError(f"{self.perm} is a derangement")

    @property
    def component(self) -> int:
        """Size of the summand the permutation belongs to (``n`` or ``n - 1``)."""
        return self.perm.n

    def label(self) -> str:
        return f"Dbar_{self.component}"


@dataclass(frozen=True)
class TraceRow:
    k: int
    letter: int | str | None
    sigma: Permutation

    @property
    def one_line(self) -> str:
        return render_one_line(self.sigma)

    @property
    def cycles(self) -> str:
        return render_cycles(self.sigma)


def _check_avoider(e: Sequence[int]) -> InversionSequence:
    e = tuple(e)
    if not e:
        raise InversionSequenceError("phi needs n >= 1")
    if not is_inversion_sequence(e):
        raise InversionSequenceError(f"{e} is not an inversion sequence")
    if not avoids_000(e):
        raise InversionSequenceError(f"{render_sequence(e)} contains 000")
    return e


def phi(e: Sequence[int]) -> TaggedNonDerangement:
    e = _check_avoider(e)
    return TaggedNonDerangement(len(e), Permutation(_kernels.phi(e)))


def _steps(e: InversionSequence):
    """Yield ``(k, w_k, sigma_k)`` using the one-line transposition rule."""
    w = (None, *encode_word(e))  # w[k-1] is w_k
    sigma = identity(1)
    yield 1, None, sigma
    for k in range(2, len(e) + 1):
        letter = w[k - 1]
        if letter != R:
            prev_r = k > 2 and w[k - 2] == R
            if not prev_r and any(x != letter for x in fixed_points(sigma)):
                sigma = apply_transposition(letter, k, embed(sigma, k))
            else:
                sigma = apply_transposition(letter, k - 1, embed(sigma, k))
        yield k, letter, sigma


def phi_trace(e: Sequence[int]) -> list[TraceRow]:
    """Row-by-row record of the construction: ``k``, ``w_k`` and ``sigma_k``."""
    e = _check_avoider(e)
    return [TraceRow(k, letter, sigma) for k, letter, sigma in _steps(e)]


def phi_cyclewise(e: Sequence[int]) -> TaggedNonDerangement:
    """Same map as :func:`phi`, computed by inserting into cycles.

    The cycles live in successor/predecessor lists (index 0 unused) so
    that each insertion is constant time.
    """
    e = _check_avoider(e)
    w = (None, *encode_word(e))
    nxt, prv = [0, 1], [0, 1]
    m = 1  # sigma acts on [m]

    def before(x, target):
        # x -> target, spliced in after target's predecessor
        p = prv[target]
        nxt[p], prv[x] = x, p
        nxt[x], prv[target] = target, x

    def fixed(x):
        nxt[x] = prv[x] = x

    for k in range(2, len(e) + 1):
        letter = w[k - 1]
        if letter == R:
            continue
        nxt.extend((0,) * (k + 1 - len(nxt)))
        prv.extend((0,) * (k + 1 - len(prv)))
        if k > 2 and w[k - 2] == R:
            fixed(k - 1)
            if letter != k - 1:
                before(k - 1, letter)
        elif any(nxt[x] == x and x != letter for x in range(1, m + 1)):
            before(k, letter)
            m = k
            continue
        elif letter != k - 1:
            # cut letter out of its cycle, then put it right before k-1
            nxt[prv[letter]], prv[nxt[letter]] = nxt[letter], prv[letter]
            before(letter, k - 1)
        fixed(k)
        m = k
    return TaggedNonDerangement(len(e), Permutation(nxt[1 : m + 1]))


def phi_inverse(p: TaggedNonDerangement | Permutation, n: int | None = None) -> InversionSequence:
    """Invert :func:`phi`.  A bare permutation needs ``n`` unless it is in the ``[n]`` summand."""
    if isinstance(p, Permutation):
        p = TaggedNonDerangement(p.n if n is None else n, p)
    elif n is not None and n != p.n:
        raise ValueError(f"tag n={p.n} does not match n={n}")
    return _kernels.phi_inverse(p.perm.images, p.n)


def extend(a: int, e: Sequence[int]) -> InversionSequence:
    """Append ``a`` if it exceeds the last entry, else ``a - 1``."""
    e = _check_avoider(e)
    n = len(e)
    if not 1 <= a <= n:
        raise ValueError(f"a={a} is not in [{n}]")
    return (*e, a if a > e[-1] else a - 1)


def ext_bijection(a: int, e: Sequence[int]) -> Permutation:
    """Map ``[n] x I_n(000)`` onto the non-derangements of ``[n+1]``."""
    return phi(extend(a, e)).perm


def ext_inverse(p: Permutation) -> tuple[int, InversionSequence]:
    if not p.is_standard or p.n < 2:
        raise ValueError(f"{p} is not a permutation of [n+1] with n >= 1")
    full = phi_inverse(TaggedNonDerangement(p.n, p))
    e, last = full[:-1], full[-1]
    return (last if last > e[-1] else last + 1), e
