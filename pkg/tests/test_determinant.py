import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from grassmann_dh.determinant import (
    build_matrix,
    cubic_triple_decompose,
    det_series,
    dh_series_determinant,
    epsilon,
    leading_coefficient_check,
    moment_determinant,
    predicted_cubic_triple,
    predicted_leading_coefficient,
    sigma,
    symbolic_det,
)
from grassmann_dh.errors import InputError
from grassmann_dh.exact import MultiPoly
from grassmann_dh.localization import OrbitSpec, dh_series_localization, random_direction
from grassmann_dh.symmetric import vandermonde


def sympy_det_coeffs(k, n, m, order):
    t = sympy.Symbol("t")
    rows = [[sympy.exp(-x * t) * x**i for x in m] for i in range(k)]
    rows += [[sympy.Integer(x) ** i for x in m] for i in range(n - k)]
    det = sympy.Matrix(rows).det()
    ser = sympy.series(det, t, 0, order + 1).removeO()
    return [Fraction(str(ser.coeff(t, p))) for p in range(order + 1)]


@pytest.mark.parametrize("k, n, m", [(1, 2, (1, -1)), (1, 3, (3, -1, -2)), (2, 4, (3, 1, -1, -3)), (2, 3, (4, -1, -3))])
def test_determinant_matches_sympy(k, n, m):
    order = k * (n - k) + 3
    ours = det_series(build_matrix(OrbitSpec(k, n), m, order))
    assert list(ours.coeffs) == sympy_det_coeffs(k, n, m, order)


def test_sign_table():
    assert [sigma(N) for N in range(8)] == [0, 0, 1, 1, 0, 0, 1, 1]
    assert epsilon(1, 2) == -1
    assert epsilon(1, 3) == -1
    assert epsilon(2, 4) == 1
    with pytest.raises(InputError):
        epsilon(3, 3)


def test_repeated_rows_at_zero():
    mat = build_matrix(OrbitSpec(2, 4), (3, 1, -1, -3), 0)
    assert det_series(mat).coeff(0) == 0


def test_two_point_expansion():
    # det = exp(-t) - exp(t)
    assert det_series(build_matrix(OrbitSpec(1, 2), (1, -1), 3)).coeffs == (0, -2, 0, Fraction(-1, 3))


def test_symbolic_leading_coefficients():
    det = symbolic_det(1, 3, 2)
    assert det.coeff(0) == 0 and det.coeff(1) == 0
    assert det.coeff(2) == vandermonde(3).scale(Fraction(-1, 2))
    x, y = MultiPoly.gens(2)
    assert symbolic_det(1, 2, 1).coeff(1) == -(x - y)
    assert predicted_leading_coefficient(1, 3) == vandermonde(3).scale(Fraction(-1, 2))
    assert leading_coefficient_check(1, 2)
    assert leading_coefficient_check(1, 3)
    assert leading_coefficient_check(2, 4)


def test_shifted_matrix_has_same_determinant():
    rng = random.Random(3)
    for k, n in [(1, 3), (2, 4), (2, 5)]:
        spec = OrbitSpec(k, n)
        d = random_direction(n, rng)
        order = spec.N + 3
        plain = det_series(build_matrix(spec, d.m, order))
        shifted = det_series(build_matrix(spec, d.m, order, shifted=True))
        assert plain == shifted


def test_route_examples():
    s = dh_series_determinant(OrbitSpec(1, 3), (3, -1, -2), 3)
    assert s.coeff(0) == 1
    assert s.coeff(3) == Fraction(-1, 10)
    assert moment_determinant(OrbitSpec(1, 3), (3, -1, -2), 3) == Fraction(3, 5)
    odd = dh_series_determinant(OrbitSpec(1, 2), (1, -1), 7)
    assert all(odd.coeff(p) == 0 for p in range(1, 8, 2))


def test_cubic_triple_examples():
    assert predicted_cubic_triple(2, 4) == (14, 14, 0)
    assert predicted_cubic_triple(1, 2)[2] == 0
    result = cubic_triple_decompose(1, 3)
    assert result.agrees and result.sign == -1
    assert result.measured.as_tuple() == tuple(-x for x in result.predicted)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.integers(1, n - 1), st.just(n))), st.integers(0, 10**6))
def test_routes_agree(kn, seed):
    k, n = kn
    spec = OrbitSpec(k, n)
    d = random_direction(n, random.Random(seed))
    assert dh_series_determinant(spec, d, 4) == dh_series_localization(spec, d, 4)
