"""Enumeration combinatorics: multipartitions, bounded composition pairs,
hook shapes, tableau counts, and the standard-element generator words.

Conventions: partitions and compositions are tuples of strictly positive
integers; a multipartition is an m-tuple of partitions.  Every enumeration
returns a sorted, duplicate-free list so output is deterministic.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

__all__ = [
    "GradedPair",
    "partitions",
    "compositions",
    "list_multipartitions",
    "list_graded_pairs",
    "pair_stats",
    "list_hook_multipartitions",
    "count_semistandard",
    "count_standard_multitableaux",
    "word_group",
    "word_hecke",
    "mp_size",
    "mp_length",
    "mp_num_nonzero",
    "parse_multipartition",
    "format_multipartition",
]


def partitions(n: int, max_part: int | None = None):
    """Yield the partitions of n, largest parts first (descending lex)."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(total: int, max_parts: int):
    """Yield the compositions of ``total`` into at most ``max_parts``
    strictly positive parts."""
    if total == 0:
        yield ()
        return
    if max_parts <= 0:
        return
    for first in range(total, 0, -1):
        for rest in compositions(total - first, max_parts - 1):
            yield (first,) + rest


def list_multipartitions(m: int, n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All m-tuples of partitions of total size n, in canonical order."""
    if m < 1:
        raise ValueError("need at least one component")
    if n < 0:
        raise ValueError("size must be nonnegative")

    def rec(components: int, left: int):
        if components == 1:
            for lam in partitions(left):
                yield (lam,)
            return
        for a in range(left, -1, -1):
            for lam in partitions(a):
                for rest in rec(components - 1, left - a):
                    yield (lam,) + rest

    return sorted(rec(m, n), reverse=True)


def mp_size(mu) -> int:
    return sum(sum(comp) for comp in mu)


def mp_length(mu) -> int:
    return sum(len(comp) for comp in mu)


def mp_num_nonzero(mu) -> int:
    return sum(1 for comp in mu if comp)


def parse_multipartition(text: str, m: int | None = None):
    """Parse the ``[[3,1],[],[2]]`` text form into a multipartition."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed multipartition {text!r}: {exc}") from None
    if not isinstance(obj, list) or not obj:
        raise ValueError(f"malformed multipartition {text!r}")
    mu = []
    for comp in obj:
        if not isinstance(comp, list):
            raise ValueError(f"malformed multipartition {text!r}")
        parts = tuple(comp)
        if not all(isinstance(p, int) and p > 0 for p in parts):
            raise ValueError(f"parts must be positive integers in {text!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing in {text!r}")
        mu.append(parts)
    mu = tuple(mu)
    if m is not None and len(mu) != m:
        raise ValueError(f"expected {m} components, got {len(mu)}")
    return mu


def format_multipartition(mu) -> str:
    return json.dumps([list(comp) for comp in mu], separators=(",", ","))


@dataclass(frozen=True)
class GradedPair:
    """A pair (alpha; beta) of m-tuples of positive-part compositions."""

    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        """Total number of parts across both tuples."""
        return sum(len(c) for c in self.alpha) + sum(len(c) for c in self.beta)

    @property
    def last_occupied(self) -> int:
        """Largest 1-based component index carrying any part."""
        last = 0
        for i, (a, b) in enumerate(zip(self.alpha, self.beta), start=1):
            if a or b:
                last = i
        if not last:
            raise ValueError("empty pair has no occupied component")
        return last

    @property
    def beta_size(self) -> int:
        return sum(sum(c) for c in self.beta)

    @property
    def beta_length(self) -> int:
        return sum(len(c) for c in self.beta)


def pair_stats(pair: GradedPair) -> tuple[int, int, int, int]:
    """(total length, last occupied component, |beta|, length of beta)."""
    return pair.length, pair.last_occupied, pair.beta_size, pair.beta_length


def list_graded_pairs(a: int, k, l) -> list[GradedPair]:
    """All pairs of m-tuples of compositions with total size ``a`` whose
    component lengths are bounded by ``k`` (alpha side) and ``l`` (beta side)."""
    k = tuple(int(x) for x in k)
    l = tuple(int(x) for x in l)
    if len(k) != len(l):
        raise ValueError("length-bound vectors must have equal length")
    if a < 1:
        raise ValueError("total size must be at least 1")
    if any(x < 0 for x in k + l):
        raise ValueError("length bounds must be nonnegative")
    m = len(k)
    bounds = k + l
    found: list[tuple[tuple[int, ...], ...]] = []

    def rec(slot: int, left: int, acc):
        if slot == 2 * m:
            if left == 0:
                found.append(acc)
            return
        for size in range(left + 1):
            for comp in compositions(size, bounds[slot]):
                rec(slot + 1, left - size, acc + (comp,))

    rec(0, a, ())
    pairs = [GradedPair(t[:m], t[m:]) for t in found]
    pairs.sort(key=lambda p: (p.alpha, p.beta))
    return pairs


def list_hook_multipartitions(n: int, k, l) -> list[tuple[tuple[int, ...], ...]]:
    """Multipartitions of n whose component i fits a (k_i, l_i)-hook, i.e.
    row k_i + 1 has at most l_i boxes."""
    k = tuple(int(x) for x in k)
    l = tuple(int(x) for x in l)
    if len(k) != len(l):
        raise ValueError("hook-bound vectors must have equal length")
    out = []
    for mu in list_multipartitions(len(k), n):
        ok = True
        for comp, ki, li in zip(mu, k, l):
            if len(comp) > ki and comp[ki] > li:
                ok = False
                break
        if ok:
            out.append(mu)
    return out


def _hook_fillings(shape: tuple[int, ...], n_even: int, n_odd: int) -> int:
    # Exhaustive backtracking over row-major cells.  Even letters must form a
    # top-left partition sub-shape, weakly increasing in rows and strictly
    # increasing down columns; odd letters fill the complementary skew shape,
    # strictly increasing in rows and weakly increasing down columns.
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    if not cells:
        return 1
    grid: dict[tuple[int, int], tuple[int, int]] = {}

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        left = grid.get((r, c - 1)) if c else None
        up = grid.get((r - 1, c)) if r else None
        total = 0
        if not (left and left[0]) and not (up and up[0]):
            for letter in range(1, n_even + 1):
                if left and left[0] == 0 and left[1] > letter:
                    continue
                if up and up[0] == 0 and up[1] >= letter:
                    continue
                grid[(r, c)] = (0, letter)
                total += place(idx + 1)
        for letter in range(1, n_odd + 1):
            if left and left[0] == 1 and left[1] >= letter:
                continue
            if up and up[0] == 1 and up[1] > letter:
                continue
            grid[(r, c)] = (1, letter)
            total += place(idx + 1)
        grid.pop((r, c), None)
        return total

    return place(0)


def count_semistandard(mu, k, l) -> int:
    """Number of graded semistandard fillings of the multipartition, with
    k_i even and l_i odd letters available for component i."""
    k = tuple(int(x) for x in k)
    l = tuple(int(x) for x in l)
    if not len(mu) == len(k) == len(l):
        raise ValueError("component count mismatch")
    total = 1
    for comp, ki, li in zip(mu, k, l):
        total *= _hook_fillings(tuple(comp), ki, li)
        if not total:
            return 0
    return total


def _conjugate(shape) -> tuple[int, ...]:
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > c) for c in range(shape[0]))


def standard_tableau_count(shape) -> int:
    """Standard fillings of a single partition via the hook-length formula."""
    shape = tuple(shape)
    n = sum(shape)
    if n == 0:
        return 1
    conj = _conjugate(shape)
    hooks = 1
    for r, width in enumerate(shape):
        for c in range(width):
            hooks *= shape[r] - c + conj[c] - r - 1
    return math.factorial(n) // hooks


def count_standard_multitableaux(mu) -> int:
    """Standard fillings of a multipartition: a multinomial choice of which
    labels land in each component times the per-component counts."""
    n = mp_size(mu)
    total = math.factorial(n)
    for comp in mu:
        total //= math.factorial(sum(comp))
    for comp in mu:
        total *= standard_tableau_count(comp)
    return total


def _t_word(b: int) -> list[tuple[str, int]]:
    # t_b = s_{b-1} ... s_1 s_0 s_1 ... s_{b-1}
    down = [("s", j) for j in range(b - 1, 0, -1)]
    up = [("s", j) for j in range(1, b)]
    return down + [("s", 0)] + up


def word_group(mu) -> tuple[tuple[str, int], ...]:
    """Reflection-group word for the standard element of a multipartition.

    Blocks tile 1..n left to right; a block of size a ending at position b in
    component r contributes t_b**(r-1) (fully expanded through s_0) followed
    by the transpositions strictly interior to the block.
    """
    syms: list[tuple[str, int]] = []
    pos = 0
    for r, comp in enumerate(mu, start=1):
        for part in comp:
            start, end = pos, pos + part
            for _ in range(r - 1):
                syms.extend(_t_word(end))
            for j in range(end - 1, start, -1):
                syms.append(("s", j))
            pos = end
    return tuple(syms)


def word_hecke(mu) -> tuple[tuple, ...]:
    """Hecke-algebra word for the standard element of a multipartition.

    A block of size a ending at position b in component r contributes the
    color scaling xi_b**(r-1) (omitted for r = 1) followed by the braid
    generators strictly interior to the block, b-1 down to block start + 1.
    """
    syms: list[tuple] = []
    pos = 0
    for r, comp in enumerate(mu, start=1):
        for part in comp:
            start, end = pos, pos + part
            if r > 1:
                syms.append(("xi", end, r - 1))
            for j in range(end - 1, start, -1):
                syms.append(("g", j))
            pos = end
    return tuple(syms)
