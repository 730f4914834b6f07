"""Series expansion of the exponential-Vandermonde determinant det(M(t)).

M(t) has k rows exp(-m_j t) m_j^i (i = 0..k-1) followed by n-k plain rows
m_j^i (i = 0..n-k-1).  Its determinant is expanded over the truncated series
ring with a generic memoized cofactor expansion; nothing here enumerates the
fixed points, so :func:`dh_series_determinant` is an independent route to the
localization series.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .errors import InputError, InternalError
from .exact import MultiPoly, TruncSeries, det_cofactor, exp_lin
from .localization import Direction, OrbitSpec, _as_direction, _check_direction
from .symmetric import SchurBasisCoeffs3, decompose_deg3, vandermonde, vandermonde_value
from .tableaux import c0

MAX_SYMBOLIC_N = 7


def sigma(N: int) -> int:
    """0 if N = 0, 1 (mod 4), else 1."""
    return 0 if N % 4 in (0, 1) else 1


def epsilon(k: int, n: int) -> int:
    """(-1)^(k(n-k) + sigma(k) + sigma(n-k))."""
    if not 1 <= k < n:
        raise InputError(f"need 1 <= k < n, got k={k}, n={n}")
    return -1 if (k * (n - k) + sigma(k) + sigma(n - k)) % 2 else 1


@dataclass(frozen=True)
class SeriesMatrix:
    rows: tuple[tuple[TruncSeries, ...], ...]
    k: int
    n: int
    order: int


def build_matrix(spec: OrbitSpec, m: Sequence | None, order: int, shifted: bool = False) -> SeriesMatrix:
    """The k exponential rows over n-k plain rows.

    ``m=None`` builds the symbolic matrix over MultiPoly in m_1..m_n.  With
    ``shifted=True`` the rows use exp(-mu1 m_j t) and exp(-mu2 m_j t) instead
    (the form read off the fixed-point sum); on trace-free m both determinants
    agree.
    """
    if order < 0:
        raise InputError("series order must be nonnegative")
    k, n = spec.k, spec.n
    if m is None:
        if n > MAX_SYMBOLIC_N:
            raise InputError(f"symbolic matrices are limited to n <= {MAX_SYMBOLIC_N}")
        entries = MultiPoly.gens(n)
    else:
        if len(m) != n:
            raise InputError(f"direction has {len(m)} entries, expected n = {n}")
        entries = [Fraction(x) for x in m]
    top_rate, bottom_rate = (spec.mu1, spec.mu2) if shifted else (1, None)
    rows = []
    for i in range(k):
        rows.append(tuple(exp_lin(x * top_rate, order) * x**i for x in entries))
    for i in range(n - k):
        if bottom_rate is None:
            rows.append(tuple(TruncSeries.constant(x**i, order) for x in entries))
        else:
            rows.append(tuple(exp_lin(x * bottom_rate, order) * x**i for x in entries))
    return SeriesMatrix(tuple(rows), k, n, order)


def det_series(mat: SeriesMatrix) -> TruncSeries:
    return det_cofactor(mat.rows)


@lru_cache(maxsize=None)
def symbolic_det(k: int, n: int, order: int) -> TruncSeries:
    return det_series(build_matrix(OrbitSpec(k, n), None, order))


def predicted_leading_coefficient(k: int, n: int) -> MultiPoly:
    """Predicted t^N coefficient eps_{k,n} V c0 / N!."""
    N = k * (n - k)
    return vandermonde(n).scale(epsilon(k, n) * c0(k, n) / factorial(N))


def leading_coefficient_check(k: int, n: int) -> bool:
    """Coefficients below t^N vanish and [t^N] det = eps V c0 / N!, symbolically."""
    N = k * (n - k)
    det = symbolic_det(k, n, N)
    if any(det.coeff(p) for p in range(N)):
        return False
    return det.coeff(N) == predicted_leading_coefficient(k, n)


def predicted_cubic_triple(k: int, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(c_300, c_210, c_111) from c0 and the three rational factors.

    The factors k(k+1)(k+2)/(n(n+1)(n+2)) etc. are ratios of binomials, which
    keeps c_111 = 0 well defined when n < 3 (then k < 3 as well).
    """
    N = k * (n - k)
    base = Fraction((N + 1) * (N + 2) * (N + 3)) * c0(k, n)
    c300 = base / 6 * Fraction(comb(k + 2, 3), comb(n + 2, 3))
    c210 = base / 3 * Fraction(comb(k + 1, 3), comb(n + 1, 3))
    c111 = base / 6 * (Fraction(comb(k, 3), comb(n, 3)) if k >= 3 else 0)
    return c300, c210, c111


@dataclass(frozen=True)
class CubicTripleResult:
    k: int
    n: int
    measured: SchurBasisCoeffs3
    predicted: tuple[Fraction, Fraction, Fraction]
    sign: int | None  # s with measured == s * predicted, None if no uniform sign exists

    @property
    def agrees(self) -> bool:
        return self.sign is not None


def cubic_triple_decompose(k: int, n: int) -> CubicTripleResult:
    """Measured Schur triple of (N+3)! [t^(N+3)] det / (eps V) against the predicted one."""
    N = k * (n - k)
    det = symbolic_det(k, n, N + 3)
    quotient = det.coeff(N + 3).divide_exact(vandermonde(n))
    scaled = quotient.scale(Fraction(factorial(N + 3), epsilon(k, n)))
    try:
        measured = decompose_deg3(scaled)
    except InputError as exc:
        raise InternalError(f"t^(N+3) coefficient is not a symmetric cubic: {exc}") from None
    predicted = predicted_cubic_triple(k, n)
    sign = None
    for s in (1, -1):
        if all(a == s * b for a, b in zip(measured.as_tuple(), predicted)):
            sign = s
            break
    return CubicTripleResult(k, n, measured, predicted, sign)


def dh_series_determinant(spec: OrbitSpec, d, order: int) -> TruncSeries:
    """eps_{k,n} N! t^-N det(M(t)) / V(m), through t^order."""
    d = _as_direction(d)
    _check_direction(spec, d)
    N = spec.N
    det = det_series(build_matrix(spec, d.m, N + order))
    for p in range(N):
        if det.coeff(p) != 0:
            raise InternalError(f"det(M(t)) has a nonzero t^{p} coefficient below t^{N}")
    prefactor = Fraction(epsilon(spec.k, spec.n) * factorial(N)) / vandermonde_value(d.m)
    return TruncSeries([c * prefactor for c in det.coeffs[N:]])


def moment_determinant(spec: OrbitSpec, d, p: int) -> Fraction:
    series = dh_series_determinant(spec, d, p)
    return (-1) ** p * factorial(p) * series.coeff(p)
