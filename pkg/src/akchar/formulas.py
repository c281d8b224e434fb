"""Closed-form character evaluators.

The generic value of a standard element factors over the parts of the
multipartition; each factor is a sum over bounded composition pairs with a
sign, a power of (1-q), a color variable, and binomial multiplicities.
Specializations: values at roots of unity (group algebra), first-order
expansions around q = 1, single-hook coefficient slices, and the literal
two-component comparison formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .combinat import list_graded_pairs, mp_length, mp_size, pair_stats
from .rings import CycloElem, MultiPoly, TruncSeries, expand_at_q1

__all__ = [
    "CharSpec",
    "bracket",
    "theta",
    "character_value",
    "group_character_value",
    "theta_j",
    "theta1_closed",
    "theta2_closed",
    "coef",
    "coef_first_order",
    "hook_sum_rhs",
    "wreath_hook_value",
    "pair_regev_rhs",
]


@dataclass(frozen=True)
class CharSpec:
    """Shape of a character problem: color counts and an optional size/tag."""

    m: int
    k: tuple[int, ...]
    l: tuple[int, ...]
    n: int | None = None
    tag: str = "generic"

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        object.__setattr__(self, "l", tuple(int(x) for x in self.l))
        if len(self.k) != self.m or len(self.l) != self.m:
            raise ValueError("k and l must both have length m")
        if any(x < 0 for x in self.k + self.l):
            raise ValueError("letter counts must be nonnegative")
        if sum(self.k) + sum(self.l) < 1:
            raise ValueError("need at least one letter overall")
        if self.n is not None and self.n < 1:
            raise ValueError("size must be positive when given")

    @classmethod
    def ones(cls, m: int, n: int | None = None) -> "CharSpec":
        return cls(m, (1,) * m, (1,) * m, n)


def bracket(a: int, sign: str, m: int = 0) -> MultiPoly:
    """The q-integer: sum of q**j ("q") or (-q)**j ("-q") for j < a."""
    if a < 0:
        raise ValueError("bracket argument must be nonnegative")
    if sign not in ("q", "-q"):
        raise ValueError('sign must be "q" or "-q"')
    terms = {}
    for j in range(a):
        coeff = 1 if sign == "q" or j % 2 == 0 else -1
        terms[(j,) + (0,) * m] = coeff
    return MultiPoly(m, terms)


def _neg_q_power(e: int, m: int) -> MultiPoly:
    # (-q)**e for any integer e
    p = MultiPoly.q_power(e, m)
    return -p if e % 2 else p


@lru_cache(maxsize=None)
def _theta(r: int, a: int, m: int, k, l) -> MultiPoly:
    one_minus_q = MultiPoly.one(m) - MultiPoly.q_power(1, m)
    power_cache = [MultiPoly.one(m)]
    total = MultiPoly.zero(m)
    for pair in list_graded_pairs(a, k, l):
        length, last, beta_size, beta_length = pair_stats(pair)
        mult = 1
        for i in range(m):
            mult *= math.comb(k[i], len(pair.alpha[i]))
            mult *= math.comb(l[i], len(pair.beta[i]))
        while len(power_cache) <= length - 1:
            power_cache.append(power_cache[-1] * one_minus_q)
        term = MultiPoly.const(mult, m)
        term = term * MultiPoly.u_power(last, m, r - 1)
        term = term * _neg_q_power(beta_size - beta_length, m)
        term = term * power_cache[length - 1]
        total = total + term
    return total


def theta(r: int, a: int, spec: CharSpec) -> MultiPoly:
    """Trace contribution of one standard block of size ``a`` in color ``r``."""
    if not 1 <= r <= spec.m:
        raise ValueError(f"color {r} out of range 1..{spec.m}")
    if a < 1:
        raise ValueError("block size must be positive")
    return _theta(r, a, spec.m, spec.k, spec.l)


def character_value(mu, spec: CharSpec) -> MultiPoly:
    """Closed-form character value of the standard element of ``mu``:
    the product of per-part block traces."""
    mu = tuple(tuple(comp) for comp in mu)
    if len(mu) != spec.m:
        raise ValueError(f"expected {spec.m} components, got {len(mu)}")
    if spec.n is not None and mp_size(mu) != spec.n:
        raise ValueError(f"multipartition size {mp_size(mu)} != n={spec.n}")
    result = MultiPoly.one(spec.m)
    for r, comp in enumerate(mu, start=1):
        for part in comp:
            result = result * _theta(r, part, spec.m, spec.k, spec.l)
    return result


def group_character_value(mu, spec: CharSpec) -> CycloElem:
    """Character value in the reflection-group specialization (q = 1 and
    u_i the powers of a primitive m-th root of unity)."""
    mu = tuple(tuple(comp) for comp in mu)
    if len(mu) != spec.m:
        raise ValueError(f"expected {spec.m} components, got {len(mu)}")
    if spec.n is not None and mp_size(mu) != spec.n:
        raise ValueError(f"multipartition size {mp_size(mu)} != n={spec.n}")
    m = spec.m
    result = CycloElem.from_int(m, 1)
    for r, comp in enumerate(mu, start=1):
        for part in comp:
            sign = -1 if part % 2 else 1
            factor = CycloElem.from_int(m, 0)
            for i in range(1, m + 1):
                weight = spec.k[i - 1] - sign * spec.l[i - 1]
                if weight:
                    factor = factor + weight * CycloElem.x_power(m, (r - 1) * (i - 1))
            result = result * factor
    return result


def _bounded_tuples(length: int, total: int):
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _bounded_tuples(length - 1, total - first):
            yield (first,) + rest


def theta_j(j: int, i: int, a: int) -> MultiPoly:
    """Length-j slice of the single-hook block trace: one even and one odd
    letter per color, last occupied color fixed at ``i``."""
    if i < 1 or a < 1:
        raise ValueError("need i >= 1 and a >= 1")
    if not 1 <= j <= 2 * i:
        raise ValueError(f"length {j} out of range 1..{2 * i}")
    one_minus_q = MultiPoly.one(0) - MultiPoly.q_power(1, 0)
    prefactor = one_minus_q ** (j - 1)
    total = MultiPoly.zero(0)
    for s in range(a + 1):
        for alpha in _bounded_tuples(i, s):
            la = sum(1 for x in alpha if x)
            if la > j:
                continue
            for beta in _bounded_tuples(i, a - s):
                lb = sum(1 for x in beta if x)
                if la + lb != j:
                    continue
                if alpha[-1] + beta[-1] == 0:
                    continue
                total = total + _neg_q_power((a - s) - lb, 0) * prefactor
    return total


def theta1_closed(a: int) -> MultiPoly:
    """Length-1 slice in closed form: 1 + (-q)**(a-1)."""
    if a < 1:
        raise ValueError("need a >= 1")
    return MultiPoly.one(0) + _neg_q_power(a - 1, 0)


def theta2_closed(i: int, a: int) -> MultiPoly:
    """Length-2 slice in closed form:
    (1-q) * ((i-1)(a-1)(1 + (-q)**(a-2)) + (2i-1) * [a-1]_{-q})."""
    if i < 1 or a < 1:
        raise ValueError("need i >= 1 and a >= 1")
    one_minus_q = MultiPoly.one(0) - MultiPoly.q_power(1, 0)
    inner = MultiPoly.const((i - 1) * (a - 1), 0) * (
        MultiPoly.one(0) + _neg_q_power(a - 2, 0)
    )
    inner = inner + MultiPoly.const(2 * i - 1, 0) * bracket(a - 1, "-q")
    return one_minus_q * inner


def coef(a: int, i: int) -> MultiPoly:
    """Coefficient of u_i**(r-1) in the single-hook block trace (independent
    of the color r): the sum of all length slices."""
    if i < 1 or a < 1:
        raise ValueError("need i >= 1 and a >= 1")
    total = MultiPoly.zero(0)
    for j in range(1, 2 * i + 1):
        total = total + theta_j(j, i, a)
    return total


def coef_first_order(a: int, i: int) -> MultiPoly:
    """First-order model of ``coef``: 2[a]_{-q} + 2(i-1)a(1-q)[a-1]_{-q};
    exact for i = 1, and exact mod (1-q)^2 in general."""
    one_minus_q = MultiPoly.one(0) - MultiPoly.q_power(1, 0)
    return (
        MultiPoly.const(2, 0) * bracket(a, "-q")
        + MultiPoly.const(2 * (i - 1) * a, 0) * one_minus_q * bracket(a - 1, "-q")
    )


def hook_sum_rhs(mu, m: int, order: int = 2) -> TruncSeries:
    """Truncated expansion of the weighted hook-character sum: the product
    over parts x of 2 * sum_i ([x]_{-q} + x(i-1)(1-q)[x-1]_{-q}) u_i**(r-1),
    expanded around q = 1."""
    mu = tuple(tuple(comp) for comp in mu)
    if len(mu) != m:
        raise ValueError(f"expected {m} components, got {len(mu)}")
    one_minus_q = MultiPoly.one(m) - MultiPoly.q_power(1, m)
    poly = MultiPoly.const(2 ** mp_length(mu), m)
    for r, comp in enumerate(mu, start=1):
        for part in comp:
            inner = MultiPoly.zero(m)
            for i in range(1, m + 1):
                summand = bracket(part, "-q", m) + (
                    MultiPoly.const(part * (i - 1), m)
                    * one_minus_q
                    * bracket(part - 1, "-q", m)
                )
                inner = inner + summand * MultiPoly.u_power(i, m, r - 1)
            poly = poly * inner
    return expand_at_q1(poly, order)


def wreath_hook_value(mu, m: int) -> int:
    """Weighted hook-character sum in the reflection group: (2m)**len when
    only the first component is occupied and all its parts are odd, else 0."""
    mu = tuple(tuple(comp) for comp in mu)
    if len(mu) != m:
        raise ValueError(f"expected {m} components, got {len(mu)}")
    if any(comp for comp in mu[1:]):
        return 0
    if any(part % 2 == 0 for part in mu[0]):
        return 0
    return (2 * m) ** len(mu[0])


def pair_regev_rhs(mu, order: int = 2) -> tuple[TruncSeries, int]:
    """Literal evaluation of the stated two-component shortcut (u_1 = 1,
    u_2 kept as the free variable): the truncated series and the group-case
    number.  For comparison reporting only; the constants are not asserted
    against the oracle."""
    mu = tuple(tuple(comp) for comp in mu)
    if len(mu) != 2:
        raise ValueError("the pair formula needs exactly two components")
    if mp_size(mu) < 1:
        raise ValueError("the pair must be nonempty")
    m = 2
    one_minus_q = MultiPoly.one(m) - MultiPoly.q_power(1, m)
    poly = MultiPoly.const(2 ** (mp_length(mu) - 1), m)
    for part in mu[0]:
        poly = poly * (
            bracket(part, "-q", m)
            + MultiPoly.const(part, m) * one_minus_q * bracket(part - 1, "-q", m)
        )
    for part in mu[1]:
        poly = poly * (
            bracket(part, "-q", m)
            + MultiPoly.const(part, m)
            * one_minus_q
            * bracket(part - 1, "-q", m)
            * MultiPoly.u_power(2, m)
        )
    group_value = (2 * m) ** mp_length(mu) // 2
    return expand_at_q1(poly, order), group_value
