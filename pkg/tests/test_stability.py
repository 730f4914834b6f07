import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grassmann_dh.errors import InputError
from grassmann_dh.localization import Direction, OrbitSpec, moment, random_direction
from grassmann_dh.stability import (
    SpaceFamily,
    SymmetricSpaceType,
    Verdict,
    candidate_directions,
    closed_form_criterion,
    consistency_identity,
    cst_gate,
    duality_flip_check,
    find_certificate,
    has_cubic_invariant,
    invariant_degrees,
    verdict,
)


def test_closed_form_criterion():
    assert closed_form_criterion(1, 2) == 0
    assert closed_form_criterion(1, 3) == -2
    assert closed_form_criterion(2, 4) == 0


def test_consistency_identity():
    assert consistency_identity(1, 3) == 1
    assert consistency_identity(2, 4) == 0
    assert consistency_identity(3, 6) == 0
    assert consistency_identity(1, 2) == 0


@pytest.mark.parametrize("n", range(3, 9))
def test_consistency_vanishes_with_criterion(n):
    for k in range(1, n):
        assert (consistency_identity(k, n) == 0) == (closed_form_criterion(k, n) == 0) == (n == 2 * k)


def test_candidates_are_valid_and_ordered():
    cands = list(candidate_directions(3, 3))
    assert cands == sorted(cands)
    for m in cands:
        d = Direction(m)
        assert max(map(abs, d.m)) == 3
    assert (-3, 1, 2) in cands and (3, -1, -2) in cands
    assert list(candidate_directions(3, 1)) == [(-1, 0, 1), (-1, 1, 0), (0, -1, 1), (0, 1, -1), (1, -1, 0), (1, 0, -1)]


def test_find_certificate():
    cert = find_certificate(1, 3, 3)
    assert cert is not None and cert.i3 != 0
    assert moment(OrbitSpec(1, 3), cert.direction, 3) == cert.i3
    assert moment(OrbitSpec(1, 3), (3, -1, -2), 3) == Fraction(3, 5)
    assert find_certificate(1, 2, 5) is None
    assert find_certificate(2, 4, 4) is None
    with pytest.raises(InputError):
        find_certificate(1, 3, 0)


def test_verdict_examples():
    r = verdict(1, 3)
    assert r.verdict is Verdict.UNSTABLE_BY_KROENCKE and r.certificate.i3 != 0
    assert verdict(2, 4).verdict is Verdict.CRITERION_VANISHES
    r = verdict(1, 2)
    assert r.verdict is Verdict.CRITERION_VANISHES and r.certificate is None
    assert any("Hamilton" in note for note in r.notes)
    with pytest.raises(InputError):
        verdict(2, 2)


def test_verdict_json_shape():
    d = verdict(1, 3).to_dict()
    assert set(d) == {"k", "n", "verdict", "certificate", "notes"}
    assert d["verdict"] == "unstable"
    assert set(d["certificate"]) == {"d", "i3"}
    assert verdict(2, 4).to_dict()["certificate"] is None


def test_small_bound_escalates():
    assert verdict(2, 5, bound=1).certificate is not None


def test_duality_examples():
    assert duality_flip_check(1, 3, (3, -1, -2))
    assert moment(OrbitSpec(2, 3), (3, -1, -2), 3) == Fraction(-3, 5)
    assert duality_flip_check(1, 2, (1, -1))
    assert duality_flip_check(2, 5, random_direction(5, random.Random(11)))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.integers(1, n - 1), st.just(n))), st.integers(0, 10**6))
def test_duality_flip_property(kn, seed):
    k, n = kn
    assert duality_flip_check(k, n, random_direction(n, random.Random(seed)))


def test_invariant_degree_table():
    assert invariant_degrees("a", 3) == (2, 3, 4)
    assert invariant_degrees("d", 3) == (2, 3, 4)
    assert invariant_degrees("b", 3) == (2, 4, 6)
    assert invariant_degrees("c", 2) == (2, 4)
    assert invariant_degrees("d", 4) == (2, 4, 4, 6)
    assert invariant_degrees("d", 5) == (2, 4, 5, 6, 8)
    assert invariant_degrees("e6") == (2, 5, 6, 8, 9, 12)
    assert invariant_degrees("e7", 7) == (2, 6, 8, 10, 12, 14, 18)
    for fam, rank in [("a", 0), ("d", 2), ("x", 3), ("e6", 5), ("b", None)]:
        with pytest.raises(InputError):
            invariant_degrees(fam, rank)


def test_cubic_invariant_only_in_type_a():
    assert all(has_cubic_invariant("a", r) for r in range(2, 10))
    assert not has_cubic_invariant("a", 1)
    assert not any(has_cubic_invariant(f, r) for f in "bc" for r in range(1, 10))
    assert not any(has_cubic_invariant("d", r) for r in range(4, 10))


def test_cst_gate_spaces():
    assert cst_gate(SymmetricSpaceType(SpaceFamily.GRASSMANNIAN_A, (1, 3)))
    assert cst_gate(SymmetricSpaceType(SpaceFamily.GRASSMANNIAN_A, (2, 5)))
    assert not cst_gate(SymmetricSpaceType(SpaceFamily.QUADRIC_BD, (5,)))  # SO(7)
    assert not cst_gate(SymmetricSpaceType(SpaceFamily.QUADRIC_BD, (6,)))  # SO(8)
    assert not cst_gate(SymmetricSpaceType(SpaceFamily.SP_UN, (3,)))
    assert not cst_gate(SymmetricSpaceType(SpaceFamily.SO_UN, (5,)))
    assert not cst_gate(SymmetricSpaceType(SpaceFamily.E6_CASE))
    assert not cst_gate(SymmetricSpaceType(SpaceFamily.E7_CASE))
    # low-rank coincidences: SO(6)/U(3) = CP^3 and Q_4 = Gr(2, 4)
    assert cst_gate(SymmetricSpaceType(SpaceFamily.SO_UN, (3,)))
    assert cst_gate(SymmetricSpaceType(SpaceFamily.QUADRIC_BD, (4,)))
    with pytest.raises(InputError):
        SymmetricSpaceType(SpaceFamily.QUADRIC_BD, (1, 2)).root_system()
