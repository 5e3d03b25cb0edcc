"""Truncated multivariate polynomials over the rationals.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, with
positive exponents only.  The empty tuple is the constant monomial.  A
series keeps every monomial of total degree at most ``order`` and never
stores a zero coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]

ONE_MONO: Monomial = ()


@lru_cache(maxsize=None)
def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=1 << 20)
def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, e in m2:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


def mono_key(m: Monomial):
    """Graded-lex sort key: total degree first, then exponents by variable."""
    return (mono_degree(m), tuple((name, -e) for name, e in m))


def mono_text(m: Monomial) -> str:
    parts = []
    for name, e in m:
        parts.append(name if e == 1 else f"{name}^{e}")
    return " * ".join(parts)


class TruncSeries:
    """Polynomial in named variables, truncated at total degree ``order``."""

    __slots__ = ("order", "terms", "_hash")

    def __init__(self, order: int, terms: Mapping[Monomial, Scalar] | None = None):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c and mono_degree(m) <= order:
                    clean[m] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, order: int, terms: Dict[Monomial, Fraction]) -> "TruncSeries":
        # trusted constructor: terms already truncated and zero-free
        obj = cls.__new__(cls)
        obj.order = order
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar, order: int) -> "TruncSeries":
        return cls(order, {ONE_MONO: c})

    @classmethod
    def var(cls, name: str, order: int, power: int = 1) -> "TruncSeries":
        if power < 0:
            raise ValueError("negative power")
        if power == 0:
            return cls.const(1, order)
        return cls(order, {((name, power),): 1})

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls._raw(order, {})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get(ONE_MONO, Fraction(0))

    def valuation(self) -> int | None:
        """Lowest total degree present, or None for the zero series."""
        if not self.terms:
            return None
        return min(mono_degree(m) for m in self.terms)

    def variables(self) -> set:
        return {name for m in self.terms for name, _ in m}

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(m)), Fraction(0))

    def max_abs(self) -> Fraction:
        return max((abs(c) for c in self.terms.values()), default=Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: mono_key(kv[0]))

    def leading_term(self):
        """First (monomial, coefficient) in graded-lex order, or None."""
        items = self.sorted_terms()
        return items[0] if items else None

    def truncate(self, order: int) -> "TruncSeries":
        order = min(order, self.order)
        return TruncSeries._raw(order, {m: c for m, c in self.terms.items()
                                        if mono_degree(m) <= order})

    def with_order(self, order: int) -> "TruncSeries":
        """Reinterpret at a different order (dropping terms above it)."""
        return TruncSeries._raw(order, {m: c for m, c in self.terms.items()
                                        if mono_degree(m) <= order})

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.const(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = {m: c for m, c in self.terms.items() if mono_degree(m) <= order}
        for m, c in other.terms.items():
            if mono_degree(m) > order:
                continue
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TruncSeries._raw(order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "TruncSeries":
        if not c:
            return TruncSeries.zero(self.order)
        c = Fraction(c)
        return TruncSeries._raw(self.order, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return ts_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = TruncSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.const(other, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- text --------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text, e.g. ``1 + eps_a - 1/2 * eps_a^2``."""
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            body = mono_text(m)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag} * {body}"
            if i == 0:
                out.append(("-" if neg else "") + piece)
            else:
                out.append((" - " if neg else " + ") + piece)
        return "".join(out)

    def __repr__(self):
        return f"TruncSeries(D={self.order}: {self.to_text()})"

    __str__ = to_text


def ts_mul(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    order = min(x.order, y.order)
    if not x.terms or not y.terms:
        return TruncSeries.zero(order)
    ys = [(m, mono_degree(m), c) for m, c in y.terms.items()]
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in x.terms.items():
        d1 = mono_degree(m1)
        if d1 > order:
            continue
        for m2, d2, c2 in ys:
            if d1 + d2 > order:
                continue
            m = mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return TruncSeries._raw(order, {m: c for m, c in out.items() if c})


def ts_exp(x: TruncSeries) -> TruncSeries:
    """exp(x) for x without constant term; the sum stops at x^D / D!."""
    if x.constant_term() != 0:
        raise ValueError("exp needs zero constant term for an exact result")
    out = TruncSeries.const(1, x.order)
    term = out
    for m in range(1, x.order + 1):
        term = (term * x).scale(Fraction(1, m))
        if term.is_zero():
            break
        out = out + term
    return out


def ts_inv(x: TruncSeries) -> TruncSeries:
    """Multiplicative inverse via the geometric series around the constant."""
    c0 = x.constant_term()
    if c0 == 0:
        raise ValueError("inverse needs a nonzero constant term")
    inv_c0 = Fraction(1) / c0
    # x = c0 (1 - u), 1/x = inv_c0 * sum u^m
    u = TruncSeries.const(1, x.order) - x.scale(inv_c0)
    out = TruncSeries.const(1, x.order)
    power = out
    for _ in range(x.order):
        power = power * u
        if power.is_zero():
            break
        out = out + power
    return out.scale(inv_c0)


def ts_sum(items: Iterable[TruncSeries], order: int) -> TruncSeries:
    out: Dict[Monomial, Fraction] = {}
    for s in items:
        for m, c in s.terms.items():
            if mono_degree(m) <= order:
                out[m] = out.get(m, 0) + c
    return TruncSeries._raw(order, {m: c for m, c in out.items() if c})
