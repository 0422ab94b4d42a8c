"""Inversion sequences avoiding three consecutive equal entries, and their R-word code.

Sequences are plain tuples ``(e_1, ..., e_n)``.  An R-word is the tuple
``(w_2, ..., w_n)`` whose letters are positive integers or the string
:data:`R`.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence, Union

__all__ = [
    "R",
    "InversionSequenceError",
    "is_inversion_sequence",
    "avoids_000",
    "inversion_sequences",
    "avoiders",
    "is_rword",
    "rwords",
    "encode_word",
    "decode_word",
    "parse_sequence",
    "render_sequence",
    "parse_word",
    "render_word",
]

R = "R"

Letter = Union[int, str]
InversionSequence = tuple[int, ...]
RWord = tuple[Letter, ...]


class InversionSequenceError(ValueError):
    pass


def is_inversion_sequence(e: Sequence[int]) -> bool:
    return all(type(x) is int and 0 <= x < i for i, x in enumerate(e, 1))


def _check(e: Sequence[int]) -> InversionSequence:
    e = tuple(e)
    if not is_inversion_sequence(e):
        raise InversionSequenceError(f"{e} is not an inversion sequence")
    return e


def avoids_000(e: Sequence[int]) -> bool:
    """True iff no three consecutive entries of ``e`` are equal."""
    return not any(e[i] == e[i + 1] == e[i + 2] for i in range(len(e) - 2))


def inversion_sequences(n: int) -> Iterator[InversionSequence]:
    """All inversion sequences of length ``n``, in lexicographic order."""
    return product(*(range(i) for i in range(1, n + 1)))


def avoiders(n: int) -> Iterator[InversionSequence]:
    """Inversion sequences of length ``n`` avoiding 000, in lexicographic order.

    Generated depth-first with pruning, so no forbidden prefix is extended.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prefix: list[int] = []

    def rec(i: int) -> Iterator[InversionSequence]:
        if i > n:
            yield tuple(prefix)
            return
        for x in range(i):
            if i >= 3 and prefix[-1] == prefix[-2] == x:
                continue
            prefix.append(x)
            yield from rec(i + 1)
            prefix.pop()

    return rec(1)


def is_rword(w: Sequence[Letter]) -> bool:
    """Check ``w = w_2 ... w_n``: letters in ``[k-1]`` or ``R``, no two adjacent ``R``."""
    prev_r = False
    for k, x in enumerate(w, 2):
        if x == R:
            if prev_r:
                return False
            prev_r = True
        elif type(x) is int and 1 <= x <= k - 1:
            prev_r = False
        else:
            return False
    return True


def rwords(n: int) -> Iterator[RWord]:
    """All valid R-words for sequences of length ``n`` (so of length ``n - 1``)."""
    if n <= 1:
        yield ()
        return
    for w in product(*([R, *range(1, k)] for k in range(2, n + 1))):
        if is_rword(w):
            yield w


def encode_word(e: Sequence[int]) -> RWord:
    e = _check(e)
    if not avoids_000(e):
        raise InversionSequenceError(f"{render_sequence(e)} contains 000")
    out: list[Letter] = []
    for prev, cur in zip(e, e[1:]):
        if cur == prev:
            out.append(R)
        elif cur > prev:
            out.append(cur)
        else:
            out.append(cur + 1)
    return tuple(out)


def decode_word(w: Sequence[Letter]) -> InversionSequence:
    if not is_rword(w):
        raise InversionSequenceError(f"{tuple(w)} is not a valid R-word")
    e = [0]
    for x in w:
        if x == R:
            e.append(e[-1])
        elif x > e[-1]:
            e.append(x)
        else:
            e.append(x - 1)
    return tuple(e)


def parse_sequence(text: str) -> InversionSequence:
    text = text.strip()
    if "," in text:
        toks = text.split(",")
    elif text.isdigit() or text == "":
        toks = list(text)
    else:
        raise InversionSequenceError(f"malformed sequence text: {text!r}")
    try:
        return _check(int(t) for t in toks)
    except ValueError as exc:
        raise InversionSequenceError(f"malformed sequence text: {text!r}") from exc


def render_sequence(e: Sequence[int]) -> str:
    if all(x <= 9 for x in e):
        return "".join(map(str, e))
    return ",".join(map(str, e))


def parse_word(text: str) -> RWord:
    text = text.strip()
    toks = text.split(",") if "," in text else list(text)
    out: list[Letter] = []
    for t in toks:
        t = t.strip()
        if t == R:
            out.append(R)
        elif t.isdigit():
            out.append(int(t))
        else:
            raise InversionSequenceError(f"malformed R-word text: {text!r}")
    if not is_rword(out):
        raise InversionSequenceError(f"{text!r} is not a valid R-word")
    return tuple(out)


def render_word(w: Sequence[Letter]) -> str:
    if all(x == R or x <= 9 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))
