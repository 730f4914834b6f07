"""Fixed-point (Duistermaat-Heckman) evaluation of integrals over Gr_k(C^n).

The Grassmannian is the SU(n) orbit of xi = i*diag(mu1 x k, mu2 x (n-k)) with
mu1 = (n-k)/n, mu2 = -k/n.  A trace-free integer vector m with distinct entries
gives the Hamiltonian f(Z) = <Z, diag(m)> (the 2*pi of the torus generator is
dropped throughout).  Its critical points are indexed by k-subsets J of
{1..n}; at q_J the value is mu1*sum_J m + mu2*sum_{J^c} m and the weight is
prod_{j in J, l not in J} (m_j - m_l).

Orientation: with these weights the plain fixed-point sum returns (-1)^N times
the volume, so every series here carries a factor (-1)^N, N = k(n-k).  This
makes the t^0 coefficient the positive volume c0(k, n).

Reported moments are integrals of f^p against omega^N (not omega^N / N!).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Sequence

from .errors import CapExceededError, InputError, InternalError, RegularityError
from .exact import MultiPoly, TruncSeries, exp_lin
from .symmetric import schur_bialternant, vandermonde
from .tableaux import partitions

MAX_SYMBOLIC_N = 7
MAX_SYMBOLIC_P = 4


@dataclass(frozen=True)
class OrbitSpec:
    k: int
    n: int

    def __post_init__(self):
        k, n = self.k, self.n
        if isinstance(k, bool) or isinstance(n, bool) or not isinstance(k, int) or not isinstance(n, int):
            raise InputError(f"k and n must be integers, got k={k!r}, n={n!r}")
        if n < 2 or not 1 <= k < n:
            raise InputError(f"need 1 <= k < n and n >= 2, got k={k}, n={n}")

    @property
    def mu1(self) -> Fraction:
        return Fraction(self.n - self.k, self.n)

    @property
    def mu2(self) -> Fraction:
        return Fraction(-self.k, self.n)

    @property
    def N(self) -> int:
        """Complex dimension k(n-k)."""
        return self.k * (self.n - self.k)

    @property
    def xi(self) -> tuple[Fraction, ...]:
        """Diagonal of the orbit representative (imaginary parts)."""
        return (self.mu1,) * self.k + (self.mu2,) * (self.n - self.k)

    def dual(self) -> "OrbitSpec":
        return OrbitSpec(self.n - self.k, self.n)


@dataclass(frozen=True)
class Direction:
    """Regular, trace-free integer torus direction m."""

    m: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.m)
        object.__setattr__(self, "m", m)
        if not m or any(isinstance(x, bool) or not isinstance(x, int) for x in m):
            raise InputError(f"direction entries must be integers, got {m!r}")
        if sum(m) != 0:
            raise InputError(f"direction {m} is not trace-free (sum = {sum(m)})")
        if len(set(m)) != len(m):
            raise RegularityError(f"direction {m} has repeated entries; it is not regular")

    @classmethod
    def parse(cls, text: str) -> "Direction":
        try:
            entries = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise InputError(f"cannot parse direction {text!r}; expected comma-separated integers") from None
        return cls(entries)

    def __len__(self):
        return len(self.m)

    def permuted(self, perm: Sequence[int]) -> "Direction":
        return Direction(tuple(self.m[i] for i in perm))


def _check_direction(spec: OrbitSpec, d: Direction) -> None:
    if not isinstance(d, Direction):
        d = Direction(tuple(d))
    if len(d) != spec.n:
        raise InputError(f"direction has {len(d)} entries, expected n = {spec.n}")


def _as_direction(d) -> Direction:
    return d if isinstance(d, Direction) else Direction(tuple(d))


def random_direction(n: int, rng: random.Random, spread: int = 6) -> Direction:
    """A regular trace-free direction with entries drawn from [-spread, spread]."""
    while True:
        head = [rng.randint(-spread, spread) for _ in range(n - 1)]
        m = tuple(head) + (-sum(head),)
        if len(set(m)) == n:
            return Direction(m)


@dataclass(frozen=True)
class FixedPoint:
    subset: tuple[int, ...]  # 1-based, sorted
    value: Fraction
    weight: Fraction


def subsets(n: int, k: int):
    """k-subsets of {0..n-1} in lexicographic order."""
    return combinations(range(n), k)


def fixed_points(spec: OrbitSpec, d) -> list[FixedPoint]:
    d = _as_direction(d)
    _check_direction(spec, d)
    m = d.m
    mu1, mu2 = spec.mu1, spec.mu2
    out = []
    for J in subsets(spec.n, spec.k):
        inside = set(J)
        comp = [l for l in range(spec.n) if l not in inside]
        value = mu1 * sum(m[j] for j in J) + mu2 * sum(m[l] for l in comp)
        weight = 1
        for j in J:
            for l in comp:
                weight *= m[j] - m[l]
        out.append(FixedPoint(tuple(j + 1 for j in J), value, Fraction(weight)))
    return out


def _orientation(spec: OrbitSpec) -> int:
    return -1 if spec.N % 2 else 1


def _power_sums(points: list[FixedPoint], top: int) -> list[Fraction]:
    """[sum_q value(q)^r / weight(q) for r in 0..top], summed in subset order."""
    sums = [Fraction(0)] * (top + 1)
    for q in points:
        inv = 1 / q.weight
        term = inv
        for r in range(top + 1):
            sums[r] += term
            term *= q.value
    return sums


def localization_identity_check(spec: OrbitSpec, d) -> bool:
    """True iff sum_q value(q)^r / weight(q) = 0 for every 0 <= r < N."""
    if spec.N == 0:
        return True
    sums = _power_sums(fixed_points(spec, d), spec.N - 1)
    return all(s == 0 for s in sums)


def dh_series_localization(spec: OrbitSpec, d, order: int) -> TruncSeries:
    """(-1)^N N! t^-N sum_q exp(-t value(q)) / weight(q), through t^order.

    The raw sum is expanded to t^(N + order); its coefficients below t^N must
    cancel exactly and an :class:`InternalError` is raised if they do not.
    """
    if order < 0:
        raise InputError("series order must be nonnegative")
    N = spec.N
    raw = None
    for q in fixed_points(spec, d):
        term = exp_lin(q.value, N + order).scale(1 / q.weight)
        raw = term if raw is None else raw + term
    for p in range(N):
        if raw.coeff(p) != 0:
            raise InternalError(f"localization sum has a nonzero t^{p - N} coefficient")
    prefactor = _orientation(spec) * factorial(N)
    return TruncSeries([c * prefactor for c in raw.coeffs[N:]])


def moment(spec: OrbitSpec, d, p: int) -> Fraction:
    """Exact integral of f^p against omega^N."""
    if not isinstance(p, int) or p < 0:
        raise InputError(f"moment order must be a nonnegative integer, got {p!r}")
    series = dh_series_localization(spec, d, p)
    return (-1) ** p * factorial(p) * series.coeff(p)


def moments(spec: OrbitSpec, d, pmax: int) -> list[Fraction]:
    series = dh_series_localization(spec, d, pmax)
    return [(-1) ** p * factorial(p) * series.coeff(p) for p in range(pmax + 1)]


# -- symbolic moments ---------------------------------------------------------


def vandermonde_cofactor(n: int, J: Sequence[int]) -> tuple[int, dict]:
    """V / weight(q_J) as (sign, {exponent: coefficient}) without forming either side.

    V = prod_{i<j}(m_i - m_j) factors as sign * weight(q_J) * A_J * B_J with A_J,
    B_J the Vandermonde products inside J and inside its complement; sign
    counts the pairs j in J, l not in J with j > l.
    """
    inside = set(J)
    comp = [l for l in range(n) if l not in inside]
    inversions = sum(1 for j in J for l in comp if j > l)
    poly = MultiPoly.constant(n, 1)
    gens = MultiPoly.gens(n)
    for group in (list(J), comp):
        for a, b in combinations(group, 2):
            poly = poly * (gens[a] - gens[b])
    return (-1) ** inversions, dict(poly.terms)


def _linear_power_coeff(R: int, exps: Sequence[int], weights: Sequence[int]) -> int:
    """Coefficient of prod m_i^exps[i] in (sum_i weights[i] m_i)^R."""
    if sum(exps) != R:
        return 0
    value = factorial(R)
    for e in exps:
        value //= factorial(e)
    for e, w in zip(exps, weights):
        if e:
            value *= w**e
    return value


def _scaled_values(spec: OrbitSpec, J) -> list[int]:
    # n * value(q_J) = sum_i w_i m_i with integer weights
    inside = set(J)
    return [spec.n - spec.k if i in inside else -spec.k for i in range(spec.n)]


def _check_symbolic(spec: OrbitSpec, p: int) -> None:
    if not isinstance(p, int) or p < 0:
        raise InputError(f"moment order must be a nonnegative integer, got {p!r}")
    if p > MAX_SYMBOLIC_P or spec.n > MAX_SYMBOLIC_N:
        raise CapExceededError(
            f"symbolic moments are limited to p <= {MAX_SYMBOLIC_P}, n <= {MAX_SYMBOLIC_N}"
        )


def _symbolic_prefactor(spec: OrbitSpec, p: int) -> Fraction:
    # moment = (-1)^p p! * (-1)^N N! * [t^(N+p)] sum_J exp(-t value_J) cof_J / V,
    # and [t^R] exp(-t value_J) = (-1)^R (n value_J)^R / (n^R R!)
    N = spec.N
    R = N + p
    sign = (-1) ** (p + N + R)
    return Fraction(sign * factorial(p) * factorial(N), spec.n**R * factorial(R))


@lru_cache(maxsize=None)
def moment_polynomial(spec: OrbitSpec, p: int, method: str = "staircase") -> MultiPoly:
    """The moment of order p as a polynomial in symbolic m_1..m_n.

    Runs the fixed-point sum over the polynomial ring: sum_J (n value_J)^R V/weight_J
    (R = N + p) is antisymmetric, equal to V times the answer.

    ``method="staircase"`` reads only the coefficients of m^(lambda + delta)
    for partitions lambda of p; they are the Schur coefficients of the quotient.
    ``method="expand"`` forms the whole sum, checks that every power below
    t^N cancels, and divides by V exactly.  It is much slower and meant as a
    cross-check for small n.

    Only meaningful on the hyperplane sum(m) = 0.
    """
    _check_symbolic(spec, p)
    n, N = spec.n, spec.N
    R = N + p
    scale = _symbolic_prefactor(spec, p)
    cofactors = [(J, vandermonde_cofactor(n, J)) for J in subsets(n, spec.k)]
    if method == "staircase":
        delta = tuple(range(n - 1, -1, -1))
        out = MultiPoly.zero(n)
        for lam in partitions(p, max_parts=n):
            target = tuple(a + b for a, b in zip(lam.padded(n), delta))
            total = 0
            for J, (sign, cof) in cofactors:
                weights = _scaled_values(spec, J)
                for exp, c in cof.items():
                    rest = tuple(t - e for t, e in zip(target, exp))
                    if min(rest) < 0:
                        continue
                    total += sign * c * _linear_power_coeff(R, rest, weights)
            if total:
                out = out + schur_bialternant(lam, n) * total
        return out.scale(scale)
    if method == "expand":
        gens = MultiPoly.gens(n)
        sums = [MultiPoly.zero(n) for _ in range(R + 1)]
        for J, (sign, cof) in cofactors:
            form = sum((gens[i] * w for i, w in enumerate(_scaled_values(spec, J))), MultiPoly.zero(n))
            term = MultiPoly(n, cof).scale(sign)
            for r in range(R + 1):
                sums[r] = sums[r] + term
                term = term * form
        for r in range(N):
            if sums[r]:
                raise InternalError(f"symbolic localization sum has a nonzero t^{r - N} coefficient")
        return sums[R].divide_exact(vandermonde(n)).scale(scale)
    raise InputError(f"unknown method {method!r}")
