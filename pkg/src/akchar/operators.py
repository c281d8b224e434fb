"""The graded tensor space and its operator calculus.

Operators are never materialized as matrices.  A generator word is applied
symbol by symbol (rightmost symbol first) to each basis vector, with sparse
accumulation of output coefficients; each quantum-swap symbol branches a
basis word into at most two words.  Coefficients travel through the hot loop
as plain dicts keyed by packed integer exponents and are converted to
``MultiPoly`` at the boundary.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .combinat import mp_size, word_hecke
from .rings import MultiPoly

__all__ = [
    "GradedAlphabet",
    "TensorState",
    "apply_generator",
    "trace_of_word",
    "char_value_oracle",
    "vandermonde_data",
    "check_ak_presentation",
    "check_shoji_presentation",
]

_FIELD_BITS = 8
_EQ_OFFSET = 128


class GradedAlphabet:
    """Letters 1..k+l with a color in 1..m and a parity in {0, 1}.

    Within each color the even letters come first; letters are totally
    ordered by (color, position), so color is weakly increasing in the
    letter index.
    """

    __slots__ = (
        "k", "l", "m", "size", "colors", "parities", "offsets",
        "_shift", "_zero_key", "_tables", "_omega_cache",
    )

    def __init__(self, k, l):
        k = tuple(int(x) for x in k)
        l = tuple(int(x) for x in l)
        if len(k) != len(l) or not k:
            raise ValueError("color vectors must be nonempty and equally long")
        if any(x < 0 for x in k + l):
            raise ValueError("letter counts must be nonnegative")
        if sum(k) + sum(l) < 1:
            raise ValueError("the alphabet needs at least one letter")
        self.k = k
        self.l = l
        self.m = len(k)
        colors: list[int] = [0]  # index 0 unused; letters are 1-based
        parities: list[int] = [0]
        offsets = []
        total = 0
        for i, (ki, li) in enumerate(zip(k, l), start=1):
            colors.extend([i] * (ki + li))
            parities.extend([0] * ki + [1] * li)
            total += ki + li
            offsets.append(total)
        self.size = total
        self.colors = tuple(colors)
        self.parities = tuple(parities)
        self.offsets = tuple(offsets)
        self._shift = _FIELD_BITS * self.m
        self._zero_key = _EQ_OFFSET << self._shift
        self._tables = None
        self._omega_cache: dict[int, tuple] = {}

    def color_of(self, letter: int) -> int:
        if not 1 <= letter <= self.size:
            raise ValueError(f"letter {letter} out of range 1..{self.size}")
        return self.colors[letter]

    def parity_of(self, letter: int) -> int:
        if not 1 <= letter <= self.size:
            raise ValueError(f"letter {letter} out of range 1..{self.size}")
        return self.parities[letter]

    # -- packed-exponent helpers --------------------------------------

    def _encode(self, eq: int, eu) -> int:
        # fields are 8 bits wide; desk-scale exponents stay far below that
        if not -_EQ_OFFSET <= eq < _EQ_OFFSET:
            raise ValueError(f"q-exponent {eq} too large for the packed engine")
        key = (eq + _EQ_OFFSET) << self._shift
        for i, e in enumerate(eu):
            if e >= 1 << _FIELD_BITS:
                raise ValueError(f"u-exponent {e} too large for the packed engine")
            key |= e << (_FIELD_BITS * i)
        return key

    def _decode(self, key: int) -> tuple[int, ...]:
        eu = tuple(
            (key >> (_FIELD_BITS * i)) & 0xFF for i in range(self.m)
        )
        eq = (key >> self._shift) - _EQ_OFFSET
        return (eq,) + eu

    def poly_to_raw(self, p: MultiPoly) -> dict[int, int]:
        if p.m != self.m:
            raise ValueError(f"u-variable count mismatch: {p.m} != {self.m}")
        return {self._encode(key[0], key[1:]): c for key, c in p.terms.items()}

    def poly_from_raw(self, raw: dict[int, int]) -> MultiPoly:
        return MultiPoly._raw(self.m, {self._decode(k): c for k, c in raw.items()})

    def u_raw(self, color: int, e: int = 1) -> dict[int, int]:
        return {self._zero_key + (e << (_FIELD_BITS * (color - 1))): 1}

    def _omega_factors(self, e: int):
        # per-letter diagonal factors for a color scaling of power e
        cached = self._omega_cache.get(e)
        if cached is None:
            cached = (None,) + tuple(
                self.u_raw(self.colors[letter], e)
                for letter in range(1, self.size + 1)
            )
            self._omega_cache[e] = cached
        return cached

    def _ensure_tables(self):
        if self._tables is not None:
            return self._tables
        zk = self._zero_key
        qk = (_EQ_OFFSET + 1) << self._shift
        qik = (_EQ_OFFSET - 1) << self._shift
        p_one = {zk: 1}
        p_neg_one = {zk: -1}
        p_one_minus_q = {zk: 1, qk: -1}
        p_q = {qk: 1}
        p_neg_q = {qk: -1}
        p_qinv = {qik: 1}
        p_neg_qinv = {qik: -1}
        p_one_minus_qinv = {zk: 1, qik: -1}
        K = self.size
        t_tab = [None] * (K + 1)
        tinv_tab = [None] * (K + 1)
        s_tab = [None] * (K + 1)
        for a in range(1, K + 1):
            t_row = [None] * (K + 1)
            tinv_row = [None] * (K + 1)
            s_row = [None] * (K + 1)
            for b in range(1, K + 1):
                sign = p_neg_one if self.parities[a] and self.parities[b] else p_one
                sign_q = p_neg_q if sign is p_neg_one else p_q
                sign_qinv = p_neg_qinv if sign is p_neg_one else p_qinv
                if a < b:
                    # ascending swap is q-free; the descending swap carries q,
                    # which is what makes T^2 = (1-q)T + q and T T^-1 = 1 hold
                    t_entry = (((a, b), p_one_minus_q), ((b, a), sign))
                    tinv_entry = (((b, a), sign_qinv),)
                elif a == b:
                    diag = p_neg_q if self.parities[a] else p_one
                    diag_inv = p_neg_qinv if self.parities[a] else p_one
                    t_entry = (((a, a), diag),)
                    tinv_entry = (((a, a), diag_inv),)
                else:
                    t_entry = (((b, a), sign_q),)
                    tinv_entry = (
                        ((a, b), p_one_minus_qinv),
                        ((b, a), sign),
                    )
                if self.colors[a] == self.colors[b]:
                    s_entry = t_entry
                else:
                    # cross-color swap: T without its (1-q) diagonal part; the
                    # descending branch keeps the same q as T, which is what
                    # gives the composite cyclotomic generator eigenvalues
                    # u_1, ..., u_m
                    s_entry = (((b, a), sign if a < b else sign_q),)
                t_row[b] = t_entry
                tinv_row[b] = tinv_entry
                s_row[b] = s_entry
            t_tab[a] = t_row
            tinv_tab[a] = tinv_row
            s_tab[a] = s_row
        self._tables = (t_tab, tinv_tab, s_tab)
        return self._tables

    def __repr__(self) -> str:
        return f"GradedAlphabet(k={self.k}, l={self.l})"


# -- raw coefficient helpers ------------------------------------------------

def _pmul(a: dict, b: dict, zk: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict[int, int] = {}
    for kb, vb in b.items():
        kb0 = kb - zk
        for ka, va in a.items():
            key = ka + kb0
            new = out.get(key, 0) + va * vb
            if new:
                out[key] = new
            elif key in out:
                del out[key]
    return out


def _padd_into(acc: dict, p: dict) -> None:
    for key, value in p.items():
        new = acc.get(key, 0) + value
        if new:
            acc[key] = new
        elif key in acc:
            del acc[key]


def _state_scale(state: dict, factor: dict, zk: int) -> dict:
    return {w: _pmul(c, factor, zk) for w, c in state.items()}


def _state_add(a: dict, b: dict) -> dict:
    out = {w: dict(c) for w, c in a.items()}
    for w, c in b.items():
        acc = out.get(w)
        if acc is None:
            out[w] = dict(c)
        else:
            _padd_into(acc, c)
            if not acc:
                del out[w]
    return out


def _state_sub(a: dict, b: dict, zk: int) -> dict:
    return _state_add(a, _state_scale(b, {zk: -1}, zk))


# -- word compilation and application ---------------------------------------

def _g0_expansion(n: int) -> list[tuple]:
    # product order: Tinv_1 .. Tinv_{n-1}  S_{n-1} .. S_1  omega_1
    word: list[tuple] = [("ginv", i) for i in range(1, n)]
    word += [("swap", i) for i in range(n - 1, 0, -1)]
    word.append(("xi", 1, 1))
    return word


def _compile_word(word, n: int, alph: GradedAlphabet, *, hecke_only: bool = False):
    """Translate a generator word into application-order steps."""
    t_tab, tinv_tab, s_tab = alph._ensure_tables()
    steps: list[tuple] = []

    def emit(sym):
        tag = sym[0]
        if tag == "g" or tag == "ginv" or tag == "swap":
            if hecke_only and tag != "g":
                raise ValueError(f"symbol {sym!r} is not valid in a Hecke trace")
            i = sym[1]
            if not 1 <= i <= n - 1:
                raise ValueError(f"braid index {i} out of range for n={n}")
            table = t_tab if tag == "g" else tinv_tab if tag == "ginv" else s_tab
            steps.append(("pair", i - 1, table))
        elif tag == "xi":
            j, e = sym[1], sym[2]
            if not 1 <= j <= n:
                raise ValueError(f"position {j} out of range for n={n}")
            if e < 1:
                raise ValueError("color-scaling exponents must be positive")
            steps.append(("diag", j - 1, alph._omega_factors(e)))
        elif tag == "g0":
            if hecke_only:
                raise ValueError("the cyclotomic generator is not part of a Hecke word")
            for part in _g0_expansion(n):
                emit(part)
        elif tag == "s":
            raise ValueError(
                "group-generator words act only through specialization"
            )
        else:
            raise ValueError(f"unknown generator symbol {sym!r}")

    for sym in word:
        emit(sym)
    steps.reverse()  # rightmost symbol acts first
    return steps


def _apply_steps(state: dict, steps, zk: int) -> dict:
    for step in steps:
        if not state:
            break
        kind = step[0]
        pos = step[1]
        if kind == "diag":
            factors = step[2]
            new = {}
            for w, c in state.items():
                new[w] = _pmul(c, factors[w[pos]], zk)
            state = new
        else:
            table = step[2]
            new = {}
            for w, c in state.items():
                for (x, y), f in table[w[pos]][w[pos + 1]]:
                    w2 = w[:pos] + (x, y) + w[pos + 2:]
                    prod = _pmul(c, f, zk)
                    acc = new.get(w2)
                    if acc is None:
                        new[w2] = prod
                    else:
                        _padd_into(acc, prod)
                        if not acc:
                            del new[w2]
            state = new
    return state


class TensorState:
    """Sparse vector in the tensor power: basis words with MultiPoly weights."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if len(word) != n:
                raise ValueError(f"basis word {word} does not have length {n}")
            if not isinstance(coeff, MultiPoly):
                raise ValueError("coefficients must be MultiPoly values")
            if coeff:
                clean[word] = coeff
        self.n = n
        self.terms = clean

    @classmethod
    def unit(cls, word, m: int) -> "TensorState":
        word = tuple(word)
        return cls(len(word), {word: MultiPoly.one(m)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorState):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{word}: {coeff.to_text()}" for word, coeff in sorted(self.terms.items())
        )
        return f"TensorState(n={self.n}, {{{inner}}})"


def apply_generator(sym, state: TensorState, alphabet: GradedAlphabet) -> TensorState:
    """Apply one operator symbol: ('g', i), ('ginv', i), ('swap', i),
    ('xi', j, e) or ('g0',)."""
    for word in state.terms:
        for letter in word:
            if not 1 <= letter <= alphabet.size:
                raise ValueError(f"letter {letter} outside the alphabet")
    steps = _compile_word((sym,), state.n, alphabet)
    zk = alphabet._zero_key
    raw = {w: alphabet.poly_to_raw(c) for w, c in state.terms.items()}
    raw = _apply_steps(raw, steps, zk)
    return TensorState(
        state.n, {w: alphabet.poly_from_raw(c) for w, c in raw.items()}
    )


def trace_of_word(word, n: int, alphabet: GradedAlphabet) -> MultiPoly:
    """Exact trace of a Hecke generator word over all basis words of the
    n-th tensor power."""
    steps = _compile_word(word, n, alphabet, hecke_only=True)
    zk = alphabet._zero_key
    total: dict[int, int] = {}
    for basis in itertools.product(range(1, alphabet.size + 1), repeat=n):
        state = _apply_steps({basis: {zk: 1}}, steps, zk)
        diag = state.get(basis)
        if diag:
            _padd_into(total, diag)
    return alphabet.poly_from_raw(total)


@lru_cache(maxsize=None)
def _char_value_oracle(mu, k, l) -> MultiPoly:
    alphabet = GradedAlphabet(k, l)
    return trace_of_word(word_hecke(mu), mp_size(mu), alphabet)


def char_value_oracle(mu, k, l) -> MultiPoly:
    """Brute-force character value: trace of the standard word on the full
    tensor power."""
    mu = tuple(tuple(comp) for comp in mu)
    n = mp_size(mu)
    if n < 1:
        raise ValueError("the multipartition must have positive size")
    return _char_value_oracle(mu, tuple(k), tuple(l))


# -- Vandermonde data ---------------------------------------------------------

def _det(matrix: list[list[MultiPoly]]) -> MultiPoly:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    m = matrix[0][0].m
    total = MultiPoly.zero(m)
    for col in range(size):
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = matrix[0][col] * _det(minor)
        total = total - term if col % 2 else total + term
    return total


def vandermonde_data(m: int):
    """Determinant of the power matrix in u_1..u_m together with the rows of
    its adjugate, read as interpolation polynomials F_c with
    F_c(u_d) = delta_cd * determinant."""
    if m < 1:
        raise ValueError("need at least one variable")
    V = [[MultiPoly.u_power(b, m, a) for b in range(1, m + 1)] for a in range(m)]
    delta = _det(V)
    adj = []
    for i in range(m):
        row = []
        for j in range(m):
            minor = [
                [V[r][c] for c in range(m) if c != i]
                for r in range(m) if r != j
            ]
            cof = _det(minor) if minor else MultiPoly.one(m)
            row.append(-cof if (i + j) % 2 else cof)
        adj.append(row)
    return delta, adj


# -- presentation checks ------------------------------------------------------

def _relation(report, name, alph, n, lhs, rhs):
    # lhs/rhs: callables mapping a basis word to a raw operator-output state
    for basis in itertools.product(range(1, alph.size + 1), repeat=n):
        if lhs(basis) != rhs(basis):
            report.append(
                {"relation": name, "status": "fail", "witness": list(basis)}
            )
            return
    report.append({"relation": name, "status": "pass", "witness": None})


def _runner(word, n, alph):
    steps = _compile_word(word, n, alph)
    zk = alph._zero_key

    def run(basis):
        return _apply_steps({basis: {zk: 1}}, steps, zk)

    return run


def check_ak_presentation(n: int, k, l) -> list[dict]:
    """Verify the cyclotomic-generator presentation as operator identities on
    every basis word; failures are reported with a witness, never raised."""
    if n < 1:
        raise ValueError("need n >= 1")
    alph = GradedAlphabet(k, l)
    zk = alph._zero_key
    m = alph.m
    report: list[dict] = []
    g0_steps = _compile_word((("g0",),), n, alph)

    def cyclotomic_lhs(basis):
        state = {basis: {zk: 1}}
        for c in range(1, m + 1):
            applied = _apply_steps(state, g0_steps, zk)
            state = _state_sub(applied, _state_scale(state, alph.u_raw(c), zk), zk)
        return state

    _relation(report, "cyclotomic-g0", alph, n, cyclotomic_lhs, lambda basis: {})

    if n >= 2:
        lhs = _runner((("g0",), ("g", 1), ("g0",), ("g", 1)), n, alph)
        rhs = _runner((("g", 1), ("g0",), ("g", 1), ("g0",)), n, alph)
        _relation(report, "braid-g0-g1", alph, n, lhs, rhs)

    one_minus_q = {zk: 1, (_EQ_OFFSET + 1) << alph._shift: -1}
    q_raw = {(_EQ_OFFSET + 1) << alph._shift: 1}
    for i in range(1, n):
        run_one = _runner((("g", i),), n, alph)
        run_two = _runner((("g", i), ("g", i)), n, alph)

        def rhs(basis, run_one=run_one):
            unit = {basis: {zk: 1}}
            return _state_add(
                _state_scale(run_one(basis), one_minus_q, zk),
                _state_scale(unit, q_raw, zk),
            )

        _relation(report, f"quadratic-g{i}", alph, n, run_two, rhs)

    for i in range(1, n):
        for j in range(i + 2, n):
            lhs = _runner((("g", i), ("g", j)), n, alph)
            rhs = _runner((("g", j), ("g", i)), n, alph)
            _relation(report, f"commute-g{i}-g{j}", alph, n, lhs, rhs)

    for i in range(1, n - 1):
        lhs = _runner((("g", i), ("g", i + 1), ("g", i)), n, alph)
        rhs = _runner((("g", i + 1), ("g", i), ("g", i + 1)), n, alph)
        _relation(report, f"braid-g{i}-g{i + 1}", alph, n, lhs, rhs)

    return report


def check_shoji_presentation(n: int, k, l) -> list[dict]:
    """Verify the braid/color-scaling presentation, with the squared
    Vandermonde determinant multiplied through the two exchange relations so
    that every side is an honest polynomial operator."""
    if n < 2:
        raise ValueError("need n >= 2")
    alph = GradedAlphabet(k, l)
    zk = alph._zero_key
    m = alph.m
    report: list[dict] = []

    one_minus_q = {zk: 1, (_EQ_OFFSET + 1) << alph._shift: -1}
    q_raw = {(_EQ_OFFSET + 1) << alph._shift: 1}
    for i in range(1, n):
        run_one = _runner((("g", i),), n, alph)
        run_two = _runner((("g", i), ("g", i)), n, alph)

        def rhs(basis, run_one=run_one):
            unit = {basis: {zk: 1}}
            return _state_add(
                _state_scale(run_one(basis), one_minus_q, zk),
                _state_scale(unit, q_raw, zk),
            )

        _relation(report, f"quadratic-g{i}", alph, n, run_two, rhs)

    for i in range(1, n - 1):
        lhs = _runner((("g", i), ("g", i + 1), ("g", i)), n, alph)
        rhs = _runner((("g", i + 1), ("g", i), ("g", i + 1)), n, alph)
        _relation(report, f"braid-g{i}-g{i + 1}", alph, n, lhs, rhs)

    for i in range(1, n):
        for j in range(i + 2, n):
            lhs = _runner((("g", i), ("g", j)), n, alph)
            rhs = _runner((("g", j), ("g", i)), n, alph)
            _relation(report, f"commute-g{i}-g{j}", alph, n, lhs, rhs)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = _runner((("xi", i, 1), ("xi", j, 1)), n, alph)
            rhs = _runner((("xi", j, 1), ("xi", i, 1)), n, alph)
            _relation(report, f"commute-xi{i}-xi{j}", alph, n, lhs, rhs)

    for i in range(1, n + 1):
        xi_steps = _compile_word((("xi", i, 1),), n, alph)

        def cyclo_lhs(basis, xi_steps=xi_steps):
            state = {basis: {zk: 1}}
            for c in range(1, m + 1):
                applied = _apply_steps(state, xi_steps, zk)
                state = _state_sub(applied, _state_scale(state, alph.u_raw(c), zk), zk)
            return state

        _relation(report, f"cyclotomic-xi{i}", alph, n, cyclo_lhs, lambda basis: {})

    for j in range(1, n):
        for i in range(1, n + 1):
            if abs(i - j) < 2:
                continue
            lhs = _runner((("g", j), ("xi", i, 1)), n, alph)
            rhs = _runner((("xi", i, 1), ("g", j)), n, alph)
            _relation(report, f"commute-g{j}-xi{i}", alph, n, lhs, rhs)

    # exchange relations, cleared by the squared Vandermonde determinant
    delta, adj = vandermonde_data(m)
    delta_sq = alph.poly_to_raw(delta * delta)
    f_at_u = [
        [
            alph.poly_to_raw(
                sum(
                    (adj[c][i] * MultiPoly.u_power(d, m, i) for i in range(m)),
                    MultiPoly.zero(m),
                )
            )
            for d in range(1, m + 1)
        ]
        for c in range(m)
    ]
    one_minus_q_poly = MultiPoly.one(m) - MultiPoly.q_power(1, m)
    corr = [[None] * (m + 1) for _ in range(m + 1)]
    for c1 in range(1, m + 1):
        for c2 in range(1, m + 1):
            total: dict[int, int] = {}
            for a in range(1, m + 1):
                for b in range(a + 1, m + 1):
                    u_diff = alph.poly_to_raw(
                        (MultiPoly.u_power(a, m) - MultiPoly.u_power(b, m))
                        * one_minus_q_poly
                    )
                    term = _pmul(
                        _pmul(u_diff, f_at_u[a - 1][c1 - 1], zk),
                        f_at_u[b - 1][c2 - 1],
                        zk,
                    )
                    _padd_into(total, term)
            corr[c1][c2] = total

    for j in range(1, n):
        run_g_xi_j = _runner((("g", j), ("xi", j, 1)), n, alph)
        run_xi_j1_g = _runner((("xi", j + 1, 1), ("g", j)), n, alph)
        run_g_xi_j1 = _runner((("g", j), ("xi", j + 1, 1)), n, alph)
        run_xi_j_g = _runner((("xi", j, 1), ("g", j)), n, alph)

        def corr_state(basis, sign, j=j):
            c1 = alph.colors[basis[j - 1]]
            c2 = alph.colors[basis[j]]
            factor = corr[c1][c2]
            if sign < 0:
                factor = {key: -v for key, v in factor.items()}
            return {basis: dict(factor)} if factor else {}

        def lhs_a(basis, run=run_g_xi_j):
            return _state_scale(run(basis), delta_sq, zk)

        def rhs_a(basis, run=run_xi_j1_g):
            return _state_add(_state_scale(run(basis), delta_sq, zk), corr_state(basis, +1))

        _relation(report, f"exchange-raise-g{j}", alph, n, lhs_a, rhs_a)

        def lhs_b(basis, run=run_g_xi_j1):
            return _state_scale(run(basis), delta_sq, zk)

        def rhs_b(basis, run=run_xi_j_g):
            return _state_add(_state_scale(run(basis), delta_sq, zk), corr_state(basis, -1))

        _relation(report, f"exchange-lower-g{j}", alph, n, lhs_b, rhs_b)

    return report
