"""Instability verdicts for Gr_k(C^n) and the cubic-invariant gate for other types."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .determinant import predicted_cubic_triple, moment_determinant
from .errors import InputError, InternalError
from .localization import Direction, OrbitSpec, moment

NORMALIZATION_NOTE = (
    "values are integrals of f/(2 pi) cubed against omega^N (not omega^N/N!); "
    "only nonvanishing matters for the verdict"
)


class Verdict(enum.Enum):
    UNSTABLE_BY_KROENCKE = "unstable"
    CRITERION_VANISHES = "criterion_vanishes"


@dataclass(frozen=True)
class Certificate:
    direction: Direction
    i3: Fraction


@dataclass(frozen=True)
class StabilityReport:
    k: int
    n: int
    verdict: Verdict
    certificate: Certificate | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        from .exact import fmt_rational

        cert = None
        if self.certificate is not None:
            cert = {"d": list(self.certificate.direction.m), "i3": fmt_rational(self.certificate.i3)}
        return {
            "k": self.k,
            "n": self.n,
            "verdict": self.verdict.value,
            "certificate": cert,
            "notes": list(self.notes),
        }


def _check_kn(k, n) -> OrbitSpec:
    return OrbitSpec(k, n)


def closed_form_criterion(k: int, n: int) -> Fraction:
    """k(n-k)(2k-n); zero exactly when n = 2k."""
    _check_kn(k, n)
    return Fraction(k * (n - k) * (2 * k - n))


def consistency_identity(k: int, n: int) -> Fraction:
    """c_300 - c_210 + c_111.

    This is the obstruction to the cubic being S_1 times a quadric.  With
    n = 2 there is no m_i m_j m_l monomial, the system has two equations in two
    unknowns and is always solvable, so the obstruction is 0.
    """
    _check_kn(k, n)
    if n < 3:
        return Fraction(0)
    c300, c210, c111 = predicted_cubic_triple(k, n)
    return c300 - c210 + c111


def candidate_directions(n: int, norm: int):
    """Trace-free vectors with distinct entries and max-norm exactly ``norm``, lexicographic."""
    prefix: list[int] = []
    used: set[int] = set()

    def rec(partial_sum):
        slots = n - len(prefix)
        if slots == 0:
            if partial_sum == 0 and (norm in used or -norm in used):
                yield tuple(prefix)
            return
        for x in range(-norm, norm + 1):
            if x in used:
                continue
            rest = -(partial_sum + x)
            # the remaining slots - 1 entries each lie in [-norm, norm]
            if abs(rest) > (slots - 1) * norm:
                continue
            prefix.append(x)
            used.add(x)
            yield from rec(partial_sum + x)
            used.discard(x)
            prefix.pop()

    yield from rec(0)


def find_certificate(k: int, n: int, search_bound: int) -> Certificate | None:
    """First direction (by max-norm, then lexicographic) with a nonzero cubic moment."""
    spec = _check_kn(k, n)
    if search_bound < 1:
        raise InputError("search bound must be at least 1")
    # Weyl invariance: the moment only depends on the set of entries
    seen: dict[tuple, Fraction] = {}
    for norm in range(1, search_bound + 1):
        for m in candidate_directions(n, norm):
            key = tuple(sorted(m))
            if key not in seen:
                seen[key] = moment(spec, Direction(m), 3)
            if seen[key]:
                return Certificate(Direction(m), seen[key])
    return None


def verdict(k: int, n: int, bound: int | None = None) -> StabilityReport:
    spec = _check_kn(k, n)
    if n == 2 * k:
        notes = ["odd moments vanish: the duality Gr_k -> Gr_{n-k} is an involution reversing f"]
        if (k, n) == (1, 2):
            notes.append("Gr_1(C^2) = S^2 is dynamically stable (Hamilton)")
        else:
            notes.append("the cubic criterion is silent; stability of Gr_k(C^2k) is left open")
        return StabilityReport(k, n, Verdict.CRITERION_VANISHES, None, tuple(notes))

    bound = n if bound is None else bound
    # escalate rather than fail silently when the first bound is too small
    cert = None
    limit = max(bound, 4 * n)
    while cert is None:
        cert = find_certificate(k, n, bound)
        if cert is None:
            if bound >= limit:
                raise InternalError(f"no certificate for ({k}, {n}) within max-norm {bound}")
            bound = min(2 * bound, limit)
    recheck = moment_determinant(spec, cert.direction, 3)
    if recheck != cert.i3:
        raise InternalError(f"determinant route gives {recheck}, localization {cert.i3}")
    notes = [NORMALIZATION_NOTE]
    if k == 1 or k == n - 1:
        notes.append(f"Gr_{k}(C^{n}) = CP^{n - 1}")
    return StabilityReport(k, n, Verdict.UNSTABLE_BY_KROENCKE, cert, tuple(notes))


def duality_flip_check(k: int, n: int, d, pmax: int = 4) -> bool:
    """moment(n-k, n, d, p) == (-1)^p moment(k, n, d, p) for p = 0..pmax."""
    spec = _check_kn(k, n)
    dual = spec.dual()
    return all(moment(dual, d, p) == (-1) ** p * moment(spec, d, p) for p in range(pmax + 1))


# -- invariant-degree gate ------------------------------------------------------

_EXCEPTIONAL_DEGREES = {
    "e6": (2, 5, 6, 8, 9, 12),
    "e7": (2, 6, 8, 10, 12, 14, 18),
}


def invariant_degrees(family: str, rank: int | None = None) -> tuple[int, ...]:
    """Degrees of the generators of the Weyl-invariant polynomials on the torus."""
    family = family.lower()
    if family in _EXCEPTIONAL_DEGREES:
        expected = len(_EXCEPTIONAL_DEGREES[family])
        if rank is not None and rank != expected:
            raise InputError(f"{family.upper()} has rank {expected}, got {rank}")
        return _EXCEPTIONAL_DEGREES[family]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InputError(f"root system {family!r} needs an integer rank")
    if family == "a" and rank >= 1:
        return tuple(range(2, rank + 2))
    if family in ("b", "c") and rank >= 1:
        return tuple(range(2, 2 * rank + 1, 2))
    if family == "d" and rank >= 3:
        return tuple(sorted([*range(2, 2 * rank - 1, 2), rank]))
    raise InputError(f"no root system {family.upper()}_{rank}")


def has_cubic_invariant(family: str, rank: int | None = None) -> bool:
    return 3 in invariant_degrees(family, rank)


class SpaceFamily(enum.Enum):
    GRASSMANNIAN_A = "grassmannian"  # SU(n)/S(U(k) x U(n-k)), params (k, n)
    QUADRIC_BD = "quadric"  # Q_m = SO(m+2)/(SO(m) x SO(2)), params (m,)
    SP_UN = "sp_u"  # Sp(n)/U(n), params (n,)
    SO_UN = "so_u"  # SO(2n)/U(n), params (n,)
    E6_CASE = "e6"  # E6/(SO(10) x SO(2))
    E7_CASE = "e7"  # E7/(E6 x SO(2))


@dataclass(frozen=True)
class SymmetricSpaceType:
    family: SpaceFamily
    params: tuple[int, ...] = ()

    def root_system(self) -> tuple[str, int]:
        f, p = self.family, self.params
        try:
            if f is SpaceFamily.GRASSMANNIAN_A:
                k, n = p
                _check_kn(k, n)
                return "a", n - 1
            if f is SpaceFamily.QUADRIC_BD:
                (m,) = p
                if m < 1:
                    raise InputError("quadric dimension must be positive")
                group_n = m + 2
                return ("b", (group_n - 1) // 2) if group_n % 2 else ("d", group_n // 2)
            if f is SpaceFamily.SP_UN:
                (n,) = p
                return "c", n
            if f is SpaceFamily.SO_UN:
                (n,) = p
                return "d", n
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad parameters {p!r} for {f.value}") from None
        if f is SpaceFamily.E6_CASE:
            return "e6", 6
        return "e7", 7


def cst_gate(space: SymmetricSpaceType) -> bool:
    """True iff a degree-3 Weyl invariant exists, i.e. the cubic integral can be nonzero.

    Low-rank coincidences fall out of the table: SO(6) = D_3 has a cubic
    invariant because SO(6)/U(3) = CP^3 and Q_4 = Gr(2, 4) are type A.
    """
    return has_cubic_invariant(*space.root_system())
