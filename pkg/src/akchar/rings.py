"""Exact coefficient arithmetic for character computations.

Three value types share one set of conventions: ``MultiPoly`` (integer
Laurent polynomials in q, ordinary polynomials in u_1..u_m), ``CycloElem``
(residues modulo the m-th cyclotomic polynomial, i.e. integer combinations
of powers of a fixed primitive m-th root of unity), and ``TruncSeries``
(expansions in t = 1 - q truncated at a fixed order).  All values are
immutable once constructed, all arithmetic is exact, and coefficients are
arbitrary-precision integers.
"""
from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "MultiPoly",
    "CycloElem",
    "TruncSeries",
    "cyclotomic_polynomial",
    "cyclotomic_degree",
    "specialize_to_group",
    "expand_at_q1",
]


class MultiPoly:
    """Laurent polynomial in q with polynomial variables u_1..u_m over Z.

    ``terms`` maps exponent keys ``(e_q, e_1, ..., e_m)`` to nonzero integer
    coefficients.  The q-exponent may be negative; u-exponents may not.  No
    zero coefficient is ever stored, so equality is structural and the
    sorted-key serialization is canonical.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        if m < 0:
            raise ValueError("number of u-variables must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        for key, coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise ValueError(f"coefficient {coeff!r} is not an integer")
            key = tuple(int(e) for e in key)
            if len(key) != m + 1:
                raise ValueError(f"exponent key {key} does not match m={m}")
            if any(e < 0 for e in key[1:]):
                raise ValueError(f"negative u-exponent in key {key}")
            if coeff:
                clean[key] = coeff
        self.m = m
        self.terms = clean

    @classmethod
    def _raw(cls, m, terms):
        # Internal fast path: ``terms`` must already be canonical.
        self = object.__new__(cls)
        self.m = m
        self.terms = terms
        return self

    @classmethod
    def zero(cls, m: int) -> "MultiPoly":
        return cls._raw(m, {})

    @classmethod
    def const(cls, value: int, m: int) -> "MultiPoly":
        value = int(value)
        if not value:
            return cls._raw(m, {})
        return cls._raw(m, {(0,) * (m + 1): value})

    @classmethod
    def one(cls, m: int) -> "MultiPoly":
        return cls.const(1, m)

    @classmethod
    def q_power(cls, e: int, m: int) -> "MultiPoly":
        """The Laurent monomial q**e (e may be negative)."""
        return cls._raw(m, {(int(e),) + (0,) * m: 1})

    @classmethod
    def u_power(cls, i: int, m: int, e: int = 1) -> "MultiPoly":
        """The monomial u_i**e for 1 <= i <= m, e >= 0."""
        if not 1 <= i <= m:
            raise ValueError(f"u-index {i} out of range for m={m}")
        if e < 0:
            raise ValueError("u-exponents may not be negative")
        if e == 0:
            return cls.one(m)
        key = [0] * (m + 1)
        key[i] = e
        return cls._raw(m, {tuple(key): 1})

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def as_int(self) -> int:
        """The value of a constant polynomial (ValueError otherwise)."""
        if not self.terms:
            return 0
        zero_key = (0,) * (self.m + 1)
        if len(self.terms) == 1 and zero_key in self.terms:
            return self.terms[zero_key]
        raise ValueError(f"{self.to_text()} is not a constant")

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.m != self.m:
                raise ValueError(
                    f"u-variable count mismatch: {self.m} != {other.m}"
                )
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.m)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            elif key in out:
                del out[key]
        return MultiPoly._raw(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for kb, vb in b.items():
            for ka, va in a.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                new = out.get(key, 0) + va * vb
                if new:
                    out[key] = new
                elif key in out:
                    del out[key]
        return MultiPoly._raw(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(
                "only nonnegative integer powers are defined; build q**-1 "
                "with q_power"
            )
        result = MultiPoly.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- variable manipulation -------------------------------------------

    def embed(self, m_new: int) -> "MultiPoly":
        """Reinterpret in a ring with more u-variables (the extra ones unused)."""
        if m_new < self.m:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (m_new - self.m)
        return MultiPoly._raw(m_new, {k + pad: c for k, c in self.terms.items()})

    def substitute_u_one(self, i: int) -> "MultiPoly":
        """Set u_i = 1, keeping the variable count (the slot goes unused)."""
        if not 1 <= i <= self.m:
            raise ValueError(f"u-index {i} out of range for m={self.m}")
        out: dict[tuple[int, ...], int] = {}
        for key, coeff in self.terms.items():
            new_key = key[:i] + (0,) + key[i + 1:]
            new = out.get(new_key, 0) + coeff
            if new:
                out[new_key] = new
            elif new_key in out:
                del out[new_key]
        return MultiPoly._raw(self.m, out)

    # -- serialization ----------------------------------------------------

    def _monomial_text(self, key) -> str:
        parts = []
        eq = key[0]
        if eq:
            parts.append("q" if eq == 1 else f"q^{eq}")
        for i, e in enumerate(key[1:], start=1):
            if e:
                parts.append(f"u{i}" if e == 1 else f"u{i}^{e}")
        return "*".join(parts)

    def to_text(self) -> str:
        """Canonical text form: terms sorted by (e_q, e_1, ..., e_m)."""
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            mono = self._monomial_text(key)
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    @classmethod
    def from_text(cls, text: str, m: int) -> "MultiPoly":
        """Parse the canonical text form back into a polynomial."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero(m)
        chunks: list[tuple[int, str]] = []
        sign, cur = 1, []
        for idx, ch in enumerate(s):
            if ch in "+-" and idx == 0:
                sign = 1 if ch == "+" else -1
            elif ch in "+-" and s[idx - 1] not in "^*":
                chunks.append((sign, "".join(cur)))
                cur = []
                sign = 1 if ch == "+" else -1
            else:
                cur.append(ch)
        chunks.append((sign, "".join(cur)))
        terms: dict[tuple[int, ...], int] = {}
        for sign, chunk in chunks:
            if not chunk:
                raise ValueError(f"malformed polynomial text {text!r}")
            coeff = sign
            key = [0] * (m + 1)
            for factor in chunk.split("*"):
                if not factor:
                    raise ValueError(f"malformed term in {text!r}")
                base, _, exp = factor.partition("^")
                if base.lstrip("-").isdigit():
                    if exp:
                        raise ValueError(f"integer factor with exponent in {text!r}")
                    coeff *= int(base)
                    continue
                e = int(exp) if exp else 1
                if base == "q":
                    key[0] += e
                elif base.startswith("u") and base[1:].isdigit():
                    i = int(base[1:])
                    if not 1 <= i <= m:
                        raise ValueError(f"u-index {i} out of range for m={m}")
                    if e < 0:
                        raise ValueError("negative u-exponent")
                    key[i] += e
                else:
                    raise ValueError(f"unknown factor {factor!r} in {text!r}")
            k = tuple(key)
            new = terms.get(k, 0) + coeff
            if new:
                terms[k] = new
            elif k in terms:
                del terms[k]
        return cls(m, terms)

    def to_json(self) -> dict:
        """Canonical JSON form: {"terms": [{"c", "eq", "eu"}, ...]}."""
        return {
            "terms": [
                {"c": self.terms[key], "eq": key[0], "eu": list(key[1:])}
                for key in sorted(self.terms)
            ]
        }

    @classmethod
    def from_json(cls, obj: dict, m: int | None = None) -> "MultiPoly":
        entries = obj["terms"]
        if m is None:
            if not entries:
                raise ValueError("cannot infer variable count from empty terms")
            m = len(entries[0]["eu"])
        terms = {}
        for entry in entries:
            key = (int(entry["eq"]),) + tuple(int(e) for e in entry["eu"])
            terms[key] = terms.get(key, 0) + int(entry["c"])
        return cls(m, terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r}, m={self.m})"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Computed by exact division of x**m - 1 by the cyclotomic polynomials of
    the proper divisors of m.
    """
    if m < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def cyclotomic_degree(m: int) -> int:
    """deg of the m-th cyclotomic polynomial (Euler phi of m)."""
    return len(cyclotomic_polynomial(m)) - 1


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, constant term first.
    num = list(num)
    deg_d = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - deg_d)
    for d in range(len(num) - 1, deg_d - 1, -1):
        c = num[d]
        if c == 0:
            continue
        if c % lead:
            raise ValueError("inexact polynomial division")
        f = c // lead
        quot[d - deg_d] = f
        for j, dj in enumerate(den):
            num[d - deg_d + j] -= f * dj
    if any(num):
        raise ValueError("inexact polynomial division")
    return quot


def _cyclo_reduce(coeffs: list[int], m: int) -> tuple[int, ...]:
    # Remainder of an integer polynomial modulo the (monic) m-th cyclotomic
    # polynomial; returned with fixed width = its degree.
    phi_poly = cyclotomic_polynomial(m)
    deg = len(phi_poly) - 1
    cs = list(coeffs)
    if len(cs) < deg:
        cs += [0] * (deg - len(cs))
    for d in range(len(cs) - 1, deg - 1, -1):
        c = cs[d]
        if c:
            for j, pj in enumerate(phi_poly):
                cs[d - deg + j] -= c * pj
    return tuple(cs[:deg])


class CycloElem:
    """Residue class in Z[x]/Phi_m(x), x a fixed primitive m-th root of unity.

    ``coeffs`` has fixed length deg Phi_m; for m = 1 the type reduces to
    plain integers.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        if m < 1:
            raise ValueError("modulus must be a positive integer")
        self.m = m
        self.coeffs = _cyclo_reduce([int(c) for c in coeffs], m)

    @classmethod
    def _raw(cls, m, coeffs):
        self = object.__new__(cls)
        self.m = m
        self.coeffs = coeffs
        return self

    @classmethod
    def from_int(cls, m: int, value: int) -> "CycloElem":
        return cls(m, (value,))

    @classmethod
    def x_power(cls, m: int, e: int) -> "CycloElem":
        """The class of x**e; exponents reduce mod m since x**m = 1."""
        if e < 0:
            raise ValueError("negative root powers are written as x**(m - e)")
        e %= max(m, 1)
        return cls(m, (0,) * e + (1,))

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.m != self.m:
                raise ValueError(f"cyclotomic modulus mismatch: {self.m} != {other.m}")
            return other
        if isinstance(other, int):
            return CycloElem.from_int(self.m, other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloElem._raw(
            self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._raw(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1 or 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return CycloElem(self.m, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = CycloElem.from_int(self.m, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self.to_text()} is not a rational integer")
        return self.coeffs[0]

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for e, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "CycloElem":
        return cls(int(obj["m"]), [int(c) for c in obj["coeffs"]])

    def __repr__(self) -> str:
        return f"CycloElem({self.to_text()!r}, m={self.m})"


class TruncSeries:
    """Truncated expansion in t = 1 - q: sum of c_j * t**j for j < order.

    Coefficients are integer polynomials in u_1..u_m with no q left in them.
    """

    __slots__ = ("order", "m", "coeffs")

    def __init__(self, order: int, m: int, coeffs=()):
        if order < 1:
            raise ValueError("truncation order must be at least 1")
        coeffs = list(coeffs)
        if len(coeffs) > order:
            raise ValueError("more coefficients than the truncation order")
        for c in coeffs:
            if not isinstance(c, MultiPoly) or c.m != m:
                raise ValueError("series coefficients must be MultiPoly with matching m")
            if any(key[0] for key in c.terms):
                raise ValueError("series coefficients may not contain q")
        coeffs += [MultiPoly.zero(m)] * (order - len(coeffs))
        self.order = order
        self.m = m
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, m: int, order: int) -> "TruncSeries":
        return cls(order, m)

    @classmethod
    def const(cls, value: int, m: int, order: int) -> "TruncSeries":
        return cls(order, m, [MultiPoly.const(value, m)])

    @classmethod
    def t_power(cls, m: int, order: int, e: int = 1) -> "TruncSeries":
        if e < 0:
            raise ValueError("t-exponents are nonnegative")
        coeffs = [MultiPoly.zero(m)] * min(e, order)
        if e < order:
            coeffs.append(MultiPoly.one(m))
        return cls(order, m, coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.m != self.m or other.order != self.order:
                raise ValueError("series order or variable count mismatch")
            return other
        if isinstance(other, int):
            return TruncSeries.const(other, self.m, self.order)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries) and (
            other.m != self.m or other.order != self.order
        ):
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncSeries(
            self.order, self.m,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = [MultiPoly.zero(self.m) for _ in range(self.order)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.order, self.m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = TruncSeries.const(1, self.m, self.order)
        for _ in range(e):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def to_text(self) -> str:
        pieces = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            ct = c.to_text()
            if j == 0:
                pieces.append(ct)
                continue
            t = "t" if j == 1 else f"t^{j}"
            if ct == "1":
                body = t
            elif len(c.terms) > 1 or ct.startswith("-"):
                body = f"({ct})*{t}"
            else:
                body = f"{ct}*{t}"
            pieces.append(body)
        return " + ".join(pieces) if pieces else "0"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    def __repr__(self) -> str:
        return f"TruncSeries({self.to_text()!r}, order={self.order}, m={self.m})"


def specialize_to_group(p: MultiPoly, m: int) -> CycloElem:
    """Ring map q -> 1 and u_i -> x**(i-1) into Z[x]/Phi_m(x).

    The polynomial must live over exactly m u-variables.
    """
    if p.m != m:
        raise ValueError(f"u-variable count mismatch: polynomial has {p.m}, modulus {m}")
    acc = [0] * m
    for key, coeff in p.terms.items():
        e = sum((i - 1) * key[i] for i in range(1, m + 1)) % m
        acc[e] += coeff
    return CycloElem(m, acc)


def _binomial_series(e: int, order: int) -> tuple[int, ...]:
    # Coefficients of (1 - t)**e mod t**order, e any integer.
    if e >= 0:
        return tuple(
            (-1) ** j * math.comb(e, j) if j <= e else 0 for j in range(order)
        )
    r = -e
    return tuple(math.comb(r - 1 + j, j) for j in range(order))


def expand_at_q1(p: MultiPoly, order: int) -> TruncSeries:
    """Substitute q = 1 - t and truncate mod t**order (a ring map).

    Negative q-powers expand through the geometric series.
    """
    if order < 1:
        raise ValueError("truncation order must be at least 1")
    raw = [dict() for _ in range(order)]
    series_cache: dict[int, tuple[int, ...]] = {}
    for key, coeff in p.terms.items():
        eq = key[0]
        series = series_cache.get(eq)
        if series is None:
            series = _binomial_series(eq, order)
            series_cache[eq] = series
        u_key = (0,) + key[1:]
        for j, s in enumerate(series):
            if s:
                d = raw[j]
                new = d.get(u_key, 0) + coeff * s
                if new:
                    d[u_key] = new
                elif u_key in d:
                    del d[u_key]
    return TruncSeries(order, p.m, [MultiPoly._raw(p.m, d) for d in raw])
