"""Vandermonde determinant, Schur polynomials, and the degree-3 Schur basis."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapExceededError, InputError
from .exact import MultiPoly, det_cofactor
from .tableaux import Partition

MAX_ALTERNANT_VARS = 7
DEFAULT_SSYT_SIZE_CAP = 6
DEFAULT_SSYT_VARS_CAP = 6


@lru_cache(maxsize=None)
def vandermonde(nvars: int) -> MultiPoly:
    """prod_{i<j} (m_i - m_j)."""
    if nvars < 1:
        raise InputError("vandermonde needs at least one variable")
    m = MultiPoly.gens(nvars)
    out = MultiPoly.constant(nvars, 1)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            out = out * (m[i] - m[j])
    return out


def vandermonde_value(point) -> Fraction:
    out = Fraction(1)
    for i in range(len(point)):
        for j in range(i + 1, len(point)):
            out *= point[i] - point[j]
    return out


def _partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def alternant(lam, nvars: int) -> MultiPoly:
    """det(m_j^(lambda_i + n - i))."""
    lam = _partition(lam)
    if nvars > MAX_ALTERNANT_VARS:
        raise CapExceededError(f"symbolic alternants are limited to {MAX_ALTERNANT_VARS} variables")
    exps = [p + nvars - 1 - i for i, p in enumerate(lam.padded(nvars))]
    rows = [
        [MultiPoly.monomial(nvars, [e if col == j else 0 for col in range(nvars)]) for j in range(nvars)]
        for e in exps
    ]
    return det_cofactor(rows)


@lru_cache(maxsize=None)
def _schur_bialternant(parts: tuple, nvars: int) -> MultiPoly:
    return alternant(parts, nvars).divide_exact(vandermonde(nvars))


def schur_bialternant(lam, nvars: int) -> MultiPoly:
    lam = _partition(lam)
    if len(lam) > nvars:
        raise InputError(f"{lam.parts} has more than {nvars} parts")
    return _schur_bialternant(lam.parts, nvars)


def schur_ssyt(
    lam,
    nvars: int,
    size_cap: int = DEFAULT_SSYT_SIZE_CAP,
    vars_cap: int = DEFAULT_SSYT_VARS_CAP,
) -> MultiPoly:
    """Sum of x^T over semistandard tableaux T of shape lambda with entries in 1..nvars."""
    lam = _partition(lam)
    if lam.size > size_cap or nvars > vars_cap:
        raise CapExceededError(
            f"SSYT enumeration capped at |lambda| <= {size_cap}, nvars <= {vars_cap}"
        )
    if nvars < 1:
        raise InputError("nvars must be positive")
    cells = [(i, j) for i, row in enumerate(lam.parts) for j in range(row)]
    filling: dict = {}
    content = [0] * nvars
    terms: dict = {}

    def fill(idx):
        if idx == len(cells):
            key = tuple(content)
            terms[key] = terms.get(key, 0) + 1
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, nvars + 1):
            filling[(i, j)] = v
            content[v - 1] += 1
            fill(idx + 1)
            content[v - 1] -= 1
        filling.pop((i, j), None)

    fill(0)
    return MultiPoly(nvars, terms)


def is_symmetric(p: MultiPoly) -> bool:
    # adjacent transpositions generate Sym_n
    return all(p.swap(i, i + 1) == p for i in range(p.nvars - 1))


@dataclass(frozen=True)
class SchurBasisCoeffs3:
    """Coefficients of S_(3), S_(2,1), S_(1,1,1)."""

    a: Fraction
    b: Fraction
    c: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def reconstruct(self, nvars: int) -> MultiPoly:
        out = schur_bialternant((3,), nvars) * self.a + schur_bialternant((2, 1), nvars) * self.b
        if nvars >= 3:
            out = out + schur_bialternant((1, 1, 1), nvars) * self.c
        return out


def decompose_deg3(p: MultiPoly) -> SchurBasisCoeffs3:
    """Write a symmetric cubic as a*S_3 + b*S_21 + c*S_111.

    Reads the coefficients of m1^3 (= a), m1^2 m2 (= a + b) and m1 m2 m3
    (= a + 2b + c).  With two variables S_111 vanishes and c is reported as 0.
    """
    n = p.nvars
    if n < 2:
        raise InputError("degree-3 Schur decomposition needs at least 2 variables")
    if not p.is_homogeneous(3) and p:
        raise InputError("input is not homogeneous of degree 3")
    if not is_symmetric(p):
        raise InputError("input is not a symmetric polynomial")

    def mono(*exps):
        return p.coeff(tuple(exps) + (0,) * (n - len(exps)))

    a = mono(3)
    b = mono(2, 1) - a
    c = mono(1, 1, 1) - a - 2 * b if n >= 3 else Fraction(0)
    out = SchurBasisCoeffs3(a, b, c)
    if out.reconstruct(n) != p:
        raise InputError("polynomial is not in the span of S_3, S_21, S_111")
    return out
