"""Permutations on finite sets of positive integers, with cycle surgery.

A :class:`Permutation` acts on a *ground set*, normally ``[n] = {1..n}``.
Removing elements never relabels the survivors, so after
:func:`remove_elements` the ground set may have holes; every other
constructor produces a permutation of ``[n]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Permutation",
    "MarkedPermutation",
    "PermutationError",
    "identity",
    "from_cycles",
    "apply_transposition",
    "fixed_points",
    "is_derangement",
    "is_non_derangement",
    "remove_elements",
    "insert_before",
    "insert_after",
    "adjoin_fixed_point",
    "embed",
    "inverse",
    "standardize",
    "parse_permutation",
    "parse_marked",
    "render_one_line",
    "render_cycles",
    "render_marked",
]


class PermutationError(ValueError):
    """Raised for malformed permutations or invalid surgery requests."""


Cycles = tuple[tuple[int, ...], ...]


class Permutation:
    """A bijection of a finite set of positive integers onto itself.

    ``Permutation([2, 1, 5, 4, 3])`` is the permutation of ``[5]`` written
    ``21543`` in one-line notation.  Pass ``ground`` to build a permutation
    of an arbitrary finite set; ``images[i]`` is then the image of
    ``ground[i]``.
    """

    __slots__ = ("ground", "images", "_hash")

    ground: tuple[int, ...]
    images: tuple[int, ...]

    def __init__(self, images: Iterable[int], ground: Iterable[int] | None = None):
        images = tuple(images)
        if ground is None:
            ground = tuple(range(1, len(images) + 1))
        else:
            pairs = sorted(zip(ground, images, strict=True))
            ground = tuple(x for x, _ in pairs)
            images = tuple(y for _, y in pairs)
        if any(type(x) is not int or x < 1 for x in ground):
            raise PermutationError(f"ground set must hold positive integers: {ground}")
        if len(set(ground)) != len(ground):
            raise PermutationError(f"repeated ground element in {ground}")
        if tuple(sorted(images)) != ground:
            raise PermutationError(f"{images} is not a bijection of {set(ground) or '{}'}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash((ground, images)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> Permutation:
        return cls(mapping.values(), mapping.keys())

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return len(self.ground)

    @property
    def is_standard(self) -> bool:
        """True when the ground set is exactly ``[n]``."""
        return not self.ground or self.ground[-1] == len(self.ground)

    def __call__(self, x: int) -> int:
        if self.is_standard:
            if 1 <= x <= len(self.images):
                return self.images[x - 1]
        else:
            for g, y in zip(self.ground, self.images):
                if g == x:
                    return y
        raise PermutationError(f"{x} is not in the ground set")

    def __contains__(self, x: object) -> bool:
        return x in self.ground

    def mapping(self) -> dict[int, int]:
        return dict(zip(self.ground, self.images))

    def cycles(self) -> Cycles:
        """Canonical cycle form: each cycle min-first, cycles sorted by first element."""
        m = self.mapping()
        seen: set[int] = set()
        out = []
        for start in self.ground:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = m[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = m[x]
            out.append(tuple(cyc))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.ground == other.ground and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return (self.n, self.ground, self.images) < (other.n, other.ground, other.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.ground)

    def __repr__(self) -> str:
        if self.is_standard:
            return f"Permutation({list(self.images)})"
        return f"Permutation.from_cycles({render_cycles(self)!r})"

    def __str__(self) -> str:
        return render_cycles(self)


@dataclass(frozen=True, order=True)
class MarkedPermutation:
    """A permutation with one distinguished fixed point and at least one other fixed point."""

    perm: Permutation
    mark: int

    def __post_init__(self):
        if self.mark not in self.perm or self.perm(self.mark) != self.mark:
            raise PermutationError(f"mark {self.mark} is not a fixed point of {self.perm}")
        if len(fixed_points(self.perm)) < 2:
            raise PermutationError(f"{self.perm} has no unmarked fixed point")

    @property
    def n(self) -> int:
        return self.perm.n

    def unmarked_fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x in fixed_points(self.perm) if x != self.mark)

    def __str__(self) -> str:
        return render_marked(self)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def from_cycles(cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation from (not necessarily canonical) disjoint cycles."""
    m: dict[int, int] = {}
    for cyc in cycles:
        if not cyc:
            raise PermutationError("empty cycle")
        for i, x in enumerate(cyc):
            if x in m:
                raise PermutationError(f"element {x} appears twice")
            m[x] = cyc[(i + 1) % len(cyc)]
    return Permutation.from_mapping(m)


def apply_transposition(a: int, b: int, p: Permutation) -> Permutation:
    """Return ``(a,b)p``: the one-line notation of ``p`` with entries ``a`` and ``b`` switched."""
    if a not in p or b not in p:
        raise PermutationError(f"({a},{b}) is not a transposition of {set(p.ground)}")
    if a == b:
        return p
    swap = {a: b, b: a}
    return Permutation((swap.get(y, y) for y in p.images), p.ground)


def fixed_points(p: Permutation) -> tuple[int, ...]:
    return tuple(x for x, y in zip(p.ground, p.images) if x == y)


def is_derangement(p: Permutation) -> bool:
    return all(x != y for x, y in zip(p.ground, p.images))


def is_non_derangement(p: Permutation) -> bool:
    return not is_derangement(p)


def remove_elements(p: Permutation, s: Iterable[int]) -> Permutation:
    """Delete the elements of ``s`` from the cycle notation of ``p`` (``p`` minus ``s``).

    Each surviving ``x`` maps to the first of ``p(x), p(p(x)), ...`` outside ``s``.
    No relabeling takes place.
    """
    s = set(s)
    if not s <= set(p.ground):
        raise PermutationError(f"{sorted(s - set(p.ground))} not in the ground set")
    m = p.mapping()
    out = {}
    for x in p.ground:
        if x in s:
            continue
        y = m[x]
        while y in s:
            y = m[y]
        out[x] = y
    return Permutation.from_mapping(out)


def insert_before(p: Permutation, x: int, target: int) -> Permutation:
    """Insert new element ``x`` right before ``target`` in its cycle, so ``x -> target``."""
    if x in p:
        raise PermutationError(f"{x} is already in the ground set")
    m = p.mapping()
    if target not in m:
        raise PermutationError(f"{target} is not in the ground set")
    pre = next(y for y, z in m.items() if z == target)
    m[pre] = x
    m[x] = target
    return Permutation.from_mapping(m)


def insert_after(p: Permutation, x: int, target: int) -> Permutation:
    """Insert new element ``x`` right after ``target`` in its cycle, so ``target -> x``."""
    if x in p:
        raise PermutationError(f"{x} is already in the ground set")
    m = p.mapping()
    if target not in m:
        raise PermutationError(f"{target} is not in the ground set")
    m[x] = m[target]
    m[target] = x
    return Permutation.from_mapping(m)


def adjoin_fixed_point(p: Permutation, x: int) -> Permutation:
    if x in p:
        raise PermutationError(f"{x} is already in the ground set")
    m = p.mapping()
    m[x] = x
    return Permutation.from_mapping(m)


def embed(p: Permutation, n: int) -> Permutation:
    """View ``p`` inside ``S_n`` by fixing every element of ``[n]`` it does not move."""
    if p.ground and p.ground[-1] > n:
        raise PermutationError(f"cannot embed a permutation of {set(p.ground)} into S_{n}")
    m = p.mapping()
    return Permutation(m.get(i, i) for i in range(1, n + 1))


def inverse(p: Permutation) -> Permutation:
    return Permutation(p.ground, p.images)


def standardize(p: Permutation) -> Permutation:
    """Relabel the ground set order-preservingly onto ``[n]``."""
    rank = {x: i for i, x in enumerate(p.ground, 1)}
    return Permutation(rank[y] for y in p.images)


# -- text formats -----------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_int(tok: str) -> int:
    tok = tok.strip()
    if not tok.isdigit():
        raise PermutationError(f"not a positive integer: {tok!r}")
    return int(tok)


def _parse_cycles(text: str) -> tuple[list[list[int]], list[int]]:
    """Return the cycles and the list of starred (marked) elements."""
    body = "".join(text.split())
    if body in ("", "()"):
        return [], []
    pos = 0
    cycles, marks = [], []
    for match in _CYCLE_RE.finditer(body):
        if match.start() != pos:
            raise PermutationError(f"malformed cycle text: {text!r}")
        pos = match.end()
        cyc = []
        for tok in match.group(1).split(","):
            if tok.startswith("*"):
                tok = tok[1:]
                marks.append(_parse_int(tok))
            cyc.append(_parse_int(tok))
        cycles.append(cyc)
    if pos != len(body):
        raise PermutationError(f"malformed cycle text: {text!r}")
    return cycles, marks


def parse_permutation(text: str) -> Permutation:
    """Parse one-line (``21543`` or ``2,1,5,4,3``) or cycle (``(2,1)(5,3)(4)``) text."""
    text = text.strip()
    if text.startswith("("):
        cycles, marks = _parse_cycles(text)
        if marks:
            raise PermutationError(f"unexpected mark in {text!r}")
        return from_cycles(cycles)
    if text == "":
        images = []
    elif "," in text:
        images = [_parse_int(tok) for tok in text.split(",")]
    elif text.isdigit() and "0" not in text:
        images = [int(c) for c in text]
    else:
        raise PermutationError(f"malformed one-line text: {text!r}")
    return Permutation(images)


def parse_marked(text: str) -> MarkedPermutation:
    """Parse cycle text with exactly one starred fixed point, e.g. ``(1)(*2)(3,4)``."""
    cycles, marks = _parse_cycles(text)
    if len(marks) != 1:
        raise PermutationError(f"expected exactly one marked fixed point in {text!r}")
    (mark,) = marks
    if [mark] not in cycles:
        raise PermutationError(f"marked element {mark} is not a fixed point in {text!r}")
    return MarkedPermutation(from_cycles(cycles), mark)


def render_one_line(p: Permutation) -> str:
    if not p.is_standard:
        raise PermutationError("one-line notation needs the ground set [n]")
    if p.n <= 9:
        return "".join(map(str, p.images))
    return ",".join(map(str, p.images))


def _render(cycles: Cycles, mark: int | None = None) -> str:
    if not cycles:
        return "()"
    parts = []
    for cyc in cycles:
        if cyc == (mark,):
            parts.append(f"(*{mark})")
        else:
            parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts)


def render_cycles(p: Permutation) -> str:
    return _render(p.cycles())


def render_marked(mp: MarkedPermutation) -> str:
    return _render(mp.perm.cycles(), mp.mark)
