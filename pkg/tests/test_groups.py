"""Validation, (r, s, t) decompositions, isotropy data, class censuses."""

import pytest

from semicoh.errors import (
    NotFreeAction,
    NotSquareFree,
    NotUnimodular,
    WrongOrder,
)
from semicoh.fixtures import FLAGSHIP_MATRIX, companion_of_cyclotomic, fixture_by_name
from semicoh.groups import (
    GroupSpec,
    free_outside_origin,
    isotropy_data,
    max_finite_subgroup_census,
    rst_decompose,
    validate,
)
from semicoh.intmat import IntMatrix, det, invariant_factors, saturate_span

from conftest import random_companion_spec, random_unimodular


def span_equal(a: IntMatrix, b: IntMatrix) -> bool:
    """Same saturated column span (compare canonical saturations)."""
    if a.cols != b.cols:
        return False
    if a.cols == 0:
        return True
    from semicoh.intmat import solve_columns

    try:
        solve_columns(saturate_span(a), b)
        solve_columns(saturate_span(b), a)
    except Exception:  # noqa: BLE001
        return False
    return True


def test_validate_flagship():
    spec = GroupSpec(5, 6, FLAGSHIP_MATRIX)
    assert validate(spec) is spec


def test_validate_dihedral():
    validate(GroupSpec(1, 2, IntMatrix([[-1]])))


def test_validate_rejects_m4():
    with pytest.raises(NotSquareFree):
        validate(GroupSpec(3, 4, IntMatrix.identity(3)))


def test_validate_rejects_wrong_order():
    with pytest.raises(WrongOrder):
        validate(GroupSpec(2, 3, IntMatrix([[1, 1], [0, 1]])))


def test_validate_rejects_non_unimodular():
    with pytest.raises(NotUnimodular):
        validate(GroupSpec(1, 2, IntMatrix([[2]])))


def test_rst_flagship_p2():
    spec = fixture_by_name("z5_z6").spec
    rst = rst_decompose(spec, 2)
    assert (rst.r, rst.s, rst.t) == (2, 1, 1)
    e = IntMatrix
    assert span_equal(rst.t_basis, e([[1], [0], [0], [0], [0]]))
    assert span_equal(rst.r_basis, e([[0, 0], [0, 0], [0, 0], [1, 0], [0, 1]]))
    assert abs(det(rst.adapted_basis)) == 1
    assert rst.r_census.as_dict() == {3: 1}
    assert rst.t_census.as_dict() == {2: 1}


def test_rst_flagship_p3():
    spec = fixture_by_name("z5_z6").spec
    rst = rst_decompose(spec, 3)
    assert (rst.r, rst.s, rst.t) == (3, 0, 1)
    expected_t = IntMatrix([[0, 0], [0, 0], [0, 0], [1, 0], [0, 1]])
    assert span_equal(rst.t_basis, expected_t)
    assert abs(det(rst.adapted_basis)) == 1
    assert rst.t_census.as_dict() == {3: 1}


def test_rst_identity_action():
    spec = GroupSpec(3, 6, IntMatrix.identity(3))
    for p in (2, 3):
        rst = rst_decompose(spec, p)
        assert (rst.r, rst.s, rst.t) == (3, 0, 0)


def test_rst_counts_are_basis_stable(rng):
    for _ in range(8):
        spec = random_companion_spec(rng)
        conj = random_unimodular(rng, spec.n)
        conj_inv = None
        # build the inverse exactly via the contragredient of the transpose
        from semicoh.intmat import contragredient

        conj_inv = contragredient(conj).transpose()
        assert (conj @ conj_inv).is_identity()
        twisted = GroupSpec(spec.n, spec.m, conj @ spec.phi @ conj_inv)
        for p in spec.primes:
            a = rst_decompose(spec, p)
            b = rst_decompose(twisted, p)
            assert (a.r, a.s, a.t) == (b.r, b.s, b.t)
            assert a.r_census == b.r_census
            assert a.t_census == b.t_census


def test_rst_invariants_random(rng):
    for _ in range(20):
        spec = random_companion_spec(rng)
        for p in spec.primes:
            rst = rst_decompose(spec, p)
            assert rst.r + p * rst.s + (p - 1) * rst.t == spec.n
            assert abs(det(rst.adapted_basis)) == 1
            assert all(f == 1 for f in invariant_factors(rst.r_basis))
            iso = isotropy_data(spec, p, rst)
            assert sum(v for _, v in iso.m_d) == (p - 1) * rst.t
            for d, v in iso.m_d:
                assert v % (p - 1) == 0
                assert (spec.m // p) % d == 0


def test_isotropy_flagship():
    spec = fixture_by_name("z5_z6").spec
    iso2 = isotropy_data(spec, 2)
    assert iso2.divisors == (3,)
    assert iso2.k(3) == 1 and iso2.k(1) == 0
    iso3 = isotropy_data(spec, 3)
    assert iso3.divisors == (2,)
    assert iso3.k(2) == 1


def test_isotropy_t_zero():
    spec = GroupSpec(2, 3, IntMatrix.identity(2))
    iso = isotropy_data(spec, 3)
    assert iso.divisors == ()


def test_free_outside_origin():
    assert free_outside_origin(GroupSpec(1, 2, IntMatrix([[-1]]))).overall
    assert free_outside_origin(GroupSpec(2, 3, companion_of_cyclotomic(3))).overall
    report = free_outside_origin(fixture_by_name("z5_z6").spec)
    assert not report.overall
    assert report.per_prime == ((2, False), (3, False))


def test_max_finite_census_counts():
    mf = max_finite_subgroup_census(GroupSpec(1, 2, IntMatrix([[-1]])))
    assert mf.count(2) == 2
    mf = max_finite_subgroup_census(GroupSpec(2, 3, companion_of_cyclotomic(3)))
    assert mf.count(3) == 3
    assert dict(mf.nonzero_type_counts)[3] == 2  # closed form p(p^k - 1)/m
    with pytest.raises(NotFreeAction):
        max_finite_subgroup_census(fixture_by_name("z5_z6").spec)


def test_free_action_forces_pure_free_origin_type(rng):
    # wherever the prime acts freely outside the origin, the whole lattice
    # is free-origin type: (r, s, t) = (0, 0, n/(p-1))
    specs = [fixture_by_name(name).spec for name in ("dinfty", "p3", "phi5", "p6")]
    for _ in range(10):
        specs.append(random_companion_spec(rng))
    for spec in specs:
        report = free_outside_origin(spec)
        for p in spec.primes:
            if report.is_free(p):
                rst = rst_decompose(spec, p)
                assert (rst.r, rst.s, rst.t) == (0, 0, spec.n // (p - 1))


def test_max_finite_census_composite_m():
    mf = max_finite_subgroup_census(fixture_by_name("p6").spec)
    assert dict(mf.class_counts) == {2: 4, 3: 3, 6: 1}
    assert dict(mf.nonzero_type_counts) == {2: 1, 3: 1}
