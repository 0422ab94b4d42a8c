"""Bijections behind the two non-derangement recurrences.

``varphi`` splits a non-derangement of ``[n]`` into a label in ``[n-1]``
and a smaller non-derangement; ``theta`` matches non-derangements with
marked permutations up to one exceptional element whose side depends on
the parity of ``n``.  These functions follow the cycle-surgery
definitions literally; the fast one-line versions live in ``_kernels`` and
are checked against them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .perm import (
    MarkedPermutation,
    Permutation,
    PermutationError,
    adjoin_fixed_point,
    apply_transposition,
    embed,
    fixed_points,
    from_cycles,
    insert_after,
    insert_before,
    inverse,
    is_derangement,
    is_non_derangement,
    parse_permutation,
    remove_elements,
    render_cycles,
    standardize,
)

__all__ = [
    "SplitPair",
    "derangement_split",
    "derangement_split_inverse",
    "varphi",
    "varphi_inverse",
    "varphi_alt",
    "varphi_alt_inverse",
    "theta",
    "theta_inverse",
    "theta_case",
    "theta_inverse_case",
    "theta_excluded_domain",
    "theta_excluded_codomain",
    "in_theta_domain",
    "in_theta_codomain",
    "parse_split_pair",
]


@dataclass(frozen=True, order=True)
class SplitPair:
    """``(label, perm)`` in ``[n-1] x X_{n-1}`` or ``[n-1] x X_{n-2}``.

    ``n`` is the size of the permutation the pair came from; the summand
    is read off ``perm.n``.
    """

    n: int
    label: int
    perm: Permutation

    def __post_init__(self):
        if not 1 <= self.label <= self.n - 1:
            raise ValueError(f"label {self.label} is not in [{self.n - 1}]")
        if self.perm.n not in (self.n - 1, self.n - 2) or not self.perm.is_standard:
            raise ValueError(f"{self.perm} is a permutation of neither [{self.n - 1}] nor [{self.n - 2}]")

    def __str__(self) -> str:
        return f"({self.label}, {render_cycles(self.perm)})"


_PAIR_RE = re.compile(r"^\(\s*(\d+)\s*,\s*(.*)\)$")


def parse_split_pair(text: str, n: int) -> SplitPair:
    """Parse ``(i, <permutation>)``, e.g. ``(3, (3)(1,2))``."""
    m = _PAIR_RE.match(text.strip())
    if not m:
        raise PermutationError(f"malformed pair: {text!r}")
    return SplitPair(n, int(m.group(1)), parse_permutation(m.group(2)))


# -- classical split of derangements ----------------------------------------


def derangement_split(p: Permutation) -> SplitPair:
    """``(p(n), p')``: drop ``n``'s 2-cycle (relabeling the rest onto ``[n-2]``), else drop ``n``."""
    n = p.n
    if n < 2 or not p.is_standard or not is_derangement(p):
        raise ValueError(f"{p} is not a derangement of [n] with n >= 2")
    i = p(n)
    if p(i) == n:
        return SplitPair(n, i, standardize(remove_elements(p, {i, n})))
    return SplitPair(n, i, remove_elements(p, {n}))


def derangement_split_inverse(s: SplitPair) -> Permutation:
    n, i, sigma = s.n, s.label, s.perm
    if not is_derangement(sigma):
        raise ValueError(f"{sigma} is not a derangement")
    if sigma.n == n - 1:
        return insert_before(sigma, n, i)
    up = {x: x if x < i else x + 1 for x in range(1, n - 1)}
    lifted = Permutation((up[y] for y in sigma.images), (up[x] for x in sigma.ground))
    return embed(Permutation.from_mapping({**lifted.mapping(), i: n, n: i}), n)


# -- first recurrence ---------------------------------------------------------


def _check_nd(p: Permutation) -> int:
    if p.n < 2 or not p.is_standard or not is_non_derangement(p):
        raise ValueError(f"{p} is not a non-derangement of [n] with n >= 2")
    return p.n


def varphi(p: Permutation) -> SplitPair:
    n = _check_nd(p)
    if p(n) != n:
        return SplitPair(n, p(n), remove_elements(p, {n}))
    rest = remove_elements(p, {n, n - 1})
    if fixed_points(rest):
        return SplitPair(n, p(n - 1), rest)
    j = inverse(p)(n - 1)
    return SplitPair(n, j, adjoin_fixed_point(remove_elements(p, {n, j}), j))


def varphi_alt(p: Permutation) -> SplitPair:
    """Variant of :func:`varphi` using ``p(n-1)`` instead of its preimage in the last case."""
    n = _check_nd(p)
    if p(n) != n or fixed_points(remove_elements(p, {n, n - 1})):
        return varphi(p)
    i = p(n - 1)
    return SplitPair(n, i, adjoin_fixed_point(remove_elements(p, {n, i}), i))


def _check_pair(s: SplitPair) -> tuple[int, int, Permutation]:
    if not is_non_derangement(s.perm):
        raise ValueError(f"{s.perm} is a derangement")
    return s.n, s.label, s.perm


def varphi_inverse(s: SplitPair) -> Permutation:
    n, i, sigma = _check_pair(s)
    if sigma.n == n - 1 and any(x != i for x in fixed_points(sigma)):
        return apply_transposition(i, n, embed(sigma, n))
    return apply_transposition(i, n - 1, embed(sigma, n))


def varphi_alt_inverse(s: SplitPair) -> Permutation:
    n, i, sigma = _check_pair(s)
    if sigma.n == n - 2 or any(x != i for x in fixed_points(sigma)):
        return varphi_inverse(s)
    # i is the only fixed point of sigma
    if i == n - 1:
        return embed(sigma, n)
    return adjoin_fixed_point(insert_after(remove_elements(sigma, {i}), i, n - 1), n)


# -- second recurrence --------------------------------------------------------


def theta_excluded_domain(n: int) -> Permutation | None:
    """``(1,2)(3,4)...(n-2,n-1)(n)`` for odd ``n``; nothing is excluded for even ``n``."""
    if n % 2 == 0:
        return None
    return from_cycles([*((i, i + 1) for i in range(1, n - 1, 2)), (n,)])


def theta_excluded_codomain(n: int) -> MarkedPermutation | None:
    """``(*1)(2,3)...(n-2,n-1)(n)`` for even ``n``; nothing is excluded for odd ``n``."""
    if n % 2 == 1 or n < 2:
        return None
    return MarkedPermutation(from_cycles([(1,), *((i, i + 1) for i in range(2, n - 1, 2)), (n,)]), 1)


def in_theta_domain(p: Permutation) -> bool:
    return p.is_standard and p.n >= 1 and is_non_derangement(p) and p != theta_excluded_domain(p.n)


def in_theta_codomain(s: MarkedPermutation) -> bool:
    return s.perm.is_standard and s != theta_excluded_codomain(s.n)


def _pair_prefix(cycles, start: int) -> int:
    """Count leading cycles ``(start, start+1)(start+2, start+3)...``."""
    k = 0
    for cyc in cycles:
        a = start + 2 * k
        if cyc != (a, a + 1):
            break
        k += 1
    return k


def theta_case(p: Permutation) -> tuple[str, int | None]:
    """Return the case (``"A"``, ``"B.i"``, ``"B.ii"``, ``"C"``) and, in case B, ``k``."""
    if not in_theta_domain(p):
        raise ValueError(f"{p} is not in the domain of theta")
    n = p.n
    if p(n) != n:
        return "C", None
    if len(fixed_points(p)) > 1:
        return "A", None
    cycles = p.cycles()
    k = _pair_prefix(cycles, 1)
    return ("B.i" if len(cycles[k]) >= 3 else "B.ii"), k


def theta(p: Permutation) -> MarkedPermutation:
    case, k = theta_case(p)
    n = p.n
    if case == "A":
        return MarkedPermutation(p, n)
    if case == "C":
        x = p(n)
        return MarkedPermutation(adjoin_fixed_point(remove_elements(p, {x}), x), x)
    cycles = list(p.cycles())
    if case == "B.i":
        c, a1, *tail = cycles[k]
        if k == 0:
            return MarkedPermutation(from_cycles([(a1,), (1, *tail), *cycles[1:]]), a1)
        head = [(1,), *((2 * t, 2 * t + 1) for t in range(1, k)), (2 * k, a1), (c, *tail)]
        return MarkedPermutation(from_cycles(head + cycles[k + 1 :]), 1)
    (_, a1), (d, *tail) = cycles[k], cycles[k + 1]
    head = [(1,), *((2 * t, 2 * t + 1) for t in range(1, k + 1)), (d, a1, *tail)]
    return MarkedPermutation(from_cycles(head + cycles[k + 2 :]), 1)


def theta_inverse_case(s: MarkedPermutation) -> tuple[str, int | None]:
    """Case of ``theta_inverse`` and, when the mark is 1 in case B, ``k'``."""
    if not in_theta_codomain(s):
        raise ValueError(f"{s} is not in the codomain of theta")
    n = s.n
    if s.mark == n:
        return "A", None
    if s.unmarked_fixed_points() != (n,):
        return "C", None
    if s.mark != 1:
        return "B", None
    cycles = s.perm.cycles()
    kp = 1 + _pair_prefix(cycles[1:], 2)
    return ("B.i" if len(cycles[kp]) == 2 else "B.ii"), kp


def theta_inverse(s: MarkedPermutation) -> Permutation:
    case, kp = theta_inverse_case(s)
    p, ell, n = s.perm, s.mark, s.n
    if case == "A":
        return p
    if case == "C":
        return insert_after(remove_elements(p, {ell}), ell, n)
    if case == "B":
        return insert_after(remove_elements(p, {ell}), ell, 1)
    cycles = list(p.cycles())
    if case == "B.i":
        (_, a1), (d, *tail) = cycles[kp], cycles[kp + 1]
        head = [*((2 * t - 1, 2 * t) for t in range(1, kp + 1)), (d, a1, *tail)]
        return from_cycles(head + cycles[kp + 2 :])
    c, a1, *tail = cycles[kp]
    head = [*((2 * t - 1, 2 * t) for t in range(1, kp)), (c - 1, a1), (c, *tail)]
    return from_cycles(head + cycles[kp + 1 :])
