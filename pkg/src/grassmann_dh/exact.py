"""Exact arithmetic: rationals, sparse multivariate polynomials, truncated series.

Rationals are :class:`fractions.Fraction`.  Polynomial coefficients are kept as
``int`` whenever they are integral (a Fraction with denominator 1 is demoted on
construction), which keeps the integer-heavy determinant work fast without
changing any value.
"""
from __future__ import annotations

import operator
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence, Union

from .errors import InexactDivisionError, InputError, PrecisionError

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise InputError(f"not an exact rational: {x!r}")
    return Fraction(x)


def fmt_rational(x) -> str:
    """Canonical "p/q" form; the denominator is omitted when it is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    match = _RATIONAL_RE.match(s)
    if match is None:
        raise InputError(f"malformed rational {s!r} (expected 'p' or 'p/q')")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise InputError(f"zero denominator in {s!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class MultiPoly:
    """Immutable sparse polynomial in variables m1..m_nvars over the rationals.

    ``terms`` maps exponent tuples to nonzero coefficients.  Iteration via
    :meth:`sorted_terms` is graded-lexicographic, leading term first.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Sequence = ()):
        if not isinstance(nvars, int) or nvars < 1:
            raise InputError(f"nvars must be a positive integer, got {nvars!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars or any(not isinstance(e, int) or e < 0 for e in exp):
                raise InputError(f"bad exponent vector {exp!r} for {nvars} variables")
            if not _is_scalar(c):
                raise InputError(f"coefficient {c!r} is not an exact rational")
            acc[exp] = acc.get(exp, 0) + c
        self.nvars = nvars
        self._terms = {e: _norm(c) for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        # trusted constructor: terms already pruned and normalized
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MultiPoly":
        """The variable m_{i+1} (0-based index)."""
        if not 0 <= i < nvars:
            raise InputError(f"variable index {i} out of range")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, nvars: int, exp, c=1) -> "MultiPoly":
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def gens(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.var(nvars, i) for i in range(nvars)]

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coeff(self, exp) -> Fraction:
        return Fraction(self._terms.get(tuple(exp), 0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def leading_term(self):
        if not self._terms:
            raise InputError("zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if _is_scalar(other):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise InputError(f"mismatched nvars: {self.nvars} vs {other.nvars}")
            return other
        if _is_scalar(other):
            return MultiPoly.constant(self.nvars, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        if not _is_scalar(c):
            raise InputError(f"not an exact rational: {c!r}")
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: _norm(v * c) for e, v in self._terms.items()})

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        other = self._coerce(other)
        if len(self._terms) < len(other._terms):
            self, other = other, self
        if not other._terms:
            return MultiPoly.zero(self.nvars)
        add = operator.add
        if len(other._terms) == 1:
            ((e2, c2),) = other._terms.items()
            out = {tuple(map(add, e1, e2)): _norm(c1 * c2) for e1, c1 in self._terms.items()}
            return MultiPoly._raw(self.nvars, out)
        acc: dict = {}
        get = acc.get
        for e2, c2 in other._terms.items():
            for e1, c1 in self._terms.items():
                e = tuple(map(add, e1, e2))
                acc[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: _norm(c) for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InputError("polynomial powers must be nonnegative integers")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- evaluation and substitution ---------------------------------------

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise InputError(f"point has {len(point)} coordinates, expected {self.nvars}")
        xs = [as_rational(x) for x in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = Fraction(c)
            for x, e in zip(xs, exp):
                if e:
                    term *= x**e
            total += term
        return total

    def substitute(self, i: int, value: "MultiPoly") -> "MultiPoly":
        """Replace variable m_{i+1} by ``value`` (same variable set)."""
        value = self._coerce(value)
        powers = [MultiPoly.constant(self.nvars, 1)]
        out = MultiPoly.zero(self.nvars)
        for exp, c in self._terms.items():
            d = exp[i]
            while len(powers) <= d:
                powers.append(powers[-1] * value)
            rest = exp[:i] + (0,) + exp[i + 1:]
            out = out + powers[d] * MultiPoly._raw(self.nvars, {rest: c})
        return out

    def swap(self, i: int, j: int) -> "MultiPoly":
        """Exchange variables m_{i+1} and m_{j+1}."""
        out = {}
        for exp, c in self._terms.items():
            e = list(exp)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return MultiPoly._raw(self.nvars, out)

    def divide_exact(self, den: "MultiPoly") -> "MultiPoly":
        """Quotient ``q`` with ``q * den == self``; raises if the division leaves a remainder."""
        den = self._coerce(den)
        if not den:
            raise InputError("division by the zero polynomial")
        lead_exp, lead_c = den.leading_term()
        rem = dict(self._terms)
        quot: dict = {}
        sub = operator.sub
        while rem:
            exp = max(rem, key=grlex_key)
            qexp = tuple(map(sub, exp, lead_exp))
            if min(qexp) < 0:
                raise InexactDivisionError("polynomial division is not exact")
            qc = _norm(Fraction(rem[exp]) / lead_c)
            quot[qexp] = qc
            for e, c in den._terms.items():
                t = tuple(map(operator.add, e, qexp))
                v = rem.get(t, 0) - qc * c
                if v:
                    rem[t] = _norm(v)
                else:
                    rem.pop(t, None)
        return MultiPoly._raw(self.nvars, quot)

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coeff": fmt_rational(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "MultiPoly":
        try:
            nvars = data["nvars"]
            terms = [(tuple(t["exp"]), parse_rational(t["coeff"])) for t in data["terms"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed polynomial JSON: {exc}") from None
        return cls(nvars, terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"m{i + 1}" if e == 1 else f"m{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = fmt_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{fmt_rational(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {str(self)!r})"


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_eval(p: MultiPoly, point: Sequence) -> Fraction:
    return p.eval(point)


def poly_divide_exact(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    return num.divide_exact(den)


class TruncSeries:
    """Power series in t known exactly through t^order (inclusive).

    Coefficients live in any commutative ring supporting ``+ - *`` with exact
    scalars: rationals (numeric mode) or :class:`MultiPoly` (symbolic mode).
    Binary operations keep the smaller of the two orders.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise InputError("a truncated series needs at least the constant term")
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        zero = c - c
        return cls((c,) + (zero,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, p: int):
        if p < 0 or p > self.order:
            raise PrecisionError(f"coefficient of t^{p} requested from a series known to order {self.order}")
        return self.coeffs[p]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise PrecisionError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def _zero(self):
        c = self.coeffs[0]
        return c - c

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        o = min(self.order, other.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs[: o + 1], other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        o = min(self.order, other.order)
        return TruncSeries([a - b for a, b in zip(self.coeffs[: o + 1], other.coeffs)])

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs])

    def scale(self, c) -> "TruncSeries":
        return TruncSeries([a * c for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            if _is_scalar(other) or isinstance(other, MultiPoly):
                return self.scale(other)
            return NotImplemented
        o = min(self.order, other.order)
        a = self.coeffs
        b = other.coeffs
        out = [None] * (o + 1)
        for i in range(o + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(o + 1 - i):
                bj = b[j]
                if not bj:
                    continue
                cur = out[i + j]
                out[i + j] = ai * bj if cur is None else cur + ai * bj
        zero = self._zero() * other._zero()
        return TruncSeries([zero if c is None else c for c in out])

    def __rmul__(self, other):
        if _is_scalar(other) or isinstance(other, MultiPoly):
            return self.scale(other)
        return NotImplemented

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def series_scale(s: TruncSeries, c) -> TruncSeries:
    return s.scale(c)


def series_coeff(s: TruncSeries, p: int):
    return s.coeff(p)


def exp_lin(a, order: int) -> TruncSeries:
    """Truncation of exp(-a t) to order ``order``; ``a`` is a rational or a MultiPoly."""
    if order < 0:
        raise InputError("series order must be nonnegative")
    if isinstance(a, MultiPoly):
        term = MultiPoly.constant(a.nvars, 1)
    else:
        a = as_rational(a)
        term = Fraction(1)
    coeffs = [term]
    for r in range(1, order + 1):
        term = term * (-a) * Fraction(1, r)
        coeffs.append(term)
    return TruncSeries(coeffs)


def det_cofactor(matrix: Sequence[Sequence]):
    """Determinant over any commutative ring by Laplace expansion with memoized minors.

    Columns are consumed left to right; ``minors[mask]`` holds the determinant
    of the rows in ``mask`` against the first ``popcount(mask)`` columns.  Cost
    is n * 2^(n-1) ring multiplications instead of n!.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise InputError("determinant needs a nonempty square matrix")
    minors = {1 << r: matrix[r][0] for r in range(n) if matrix[r][0]}
    for c in range(1, n):
        nxt: dict = {}
        for mask, minor in minors.items():
            for r in range(n):
                bit = 1 << r
                if mask & bit:
                    continue
                entry = matrix[r][c]
                if not entry:
                    continue
                # r sits at position `pos` among the rows of mask|bit; column c is last
                pos = bin(mask & (bit - 1)).count("1")
                term = minor * entry
                new = mask | bit
                if (pos + c) % 2:
                    nxt[new] = nxt[new] - term if new in nxt else -term
                else:
                    nxt[new] = nxt[new] + term if new in nxt else term
        minors = nxt
    full = (1 << n) - 1
    if full in minors:
        return minors[full]
    probe = matrix[0][0]
    return probe - probe

