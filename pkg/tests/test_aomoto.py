import random

import pytest

from arrcohom import catalog
from arrcohom.aomoto import (
    AomotoComplex,
    BadSizeError,
    NotInvertibleError,
    beta1_full,
    beta1_restricted,
    central_fixture,
    parallel_fixture,
    sum_zero_basis,
)
from arrcohom.geometry import decone
from arrcohom.orlik_solomon import OSAlgebra, QuotientOSOracle

PRIMES = (2, 3, 5, 7, 11, 13)


def test_fixture_shapes():
    c3 = central_fixture(3)
    assert c3.n == 3
    assert len(c3.finite_points) == 1
    assert len(c3.finite_points[0][1]) == 3
    assert OSAlgebra(c3, 2).dim2 == 2

    p2 = parallel_fixture(2)
    assert p2.n == 3
    assert [len(inc) for _, inc in p2.finite_points] == [2, 2]
    assert OSAlgebra(p2, 2).dim2 == 2

    assert OSAlgebra(central_fixture(2), 3).dim2 == 1

    with pytest.raises(BadSizeError):
        central_fixture(1)
    with pytest.raises(BadSizeError):
        parallel_fixture(0)


def test_complex_squares_to_zero():
    rng = random.Random(13)
    for arr in (catalog.braid_a3(), catalog.fig3(), catalog.generic(5)):
        aff = decone(arr, 0)
        for p in (2, 3, 5):
            alg = OSAlgebra(aff, p)
            for _ in range(10):
                xi = alg.deg1([rng.randrange(p) for _ in range(alg.n)])
                cx = AomotoComplex(alg, xi)
                assert (cx.d1 @ xi).is_zero()


def test_beta1_central_c3():
    alg = OSAlgebra(central_fixture(3), 3)
    res = beta1_full(alg, alg.ones())
    assert res.value == 1
    assert res.method == "full"
    assert res.certificate["dim_ker_d1"] == 2
    assert res.certificate["rank_d0"] == 1


def test_beta1_braid_deconed():
    aff = decone(catalog.braid_a3(), 2)
    alg3 = OSAlgebra(aff, 3)
    assert beta1_full(alg3, alg3.ones()).value == 1
    alg2 = OSAlgebra(aff, 2)
    assert beta1_full(alg2, alg2.ones()).value == 0


def test_beta1_certificate_consistency(members):
    for _, arr in members[:12]:
        aff = decone(arr, 0)
        for p in (2, 3):
            alg = OSAlgebra(aff, p)
            res = beta1_full(alg, alg.ones())
            cert = res.certificate
            assert res.value == cert["dim_ker_d1"] - cert["rank_d0"]
            assert cert["dim1"] == cert["rank_d1"] + cert["dim_ker_d1"]
            assert cert["h2"] == cert["dim2"] - cert["rank_d1"]


def test_beta1_zero_form():
    alg = OSAlgebra(decone(catalog.generic(4), 0), 3)
    zero = alg.deg1([0, 0, 0])
    res = beta1_full(alg, zero)
    assert res.certificate["rank_d0"] == 0
    assert res.value == alg.n


def test_sum_zero_basis_spans():
    b = sum_zero_basis(5, 7)
    assert b.shape == (5, 4)
    assert b.rank() == 4
    for j in range(4):
        assert b.column(j).sum() == 0


def test_restricted_matches_full_on_braid():
    aff = decone(catalog.braid_a3(), 2)
    alg = OSAlgebra(aff, 3)  # coefficient sum is 5, invertible mod 3
    nu = alg.ones()
    res = beta1_restricted(alg, nu)
    assert res.method == "restricted"
    assert res.value == beta1_full(alg, nu).value == 1


def test_restricted_requires_invertible_sum():
    alg = OSAlgebra(central_fixture(3), 3)
    with pytest.raises(NotInvertibleError):
        beta1_restricted(alg, alg.ones())
    alg5 = OSAlgebra(decone(catalog.braid_a3(), 0), 5)  # n = 5
    with pytest.raises(NotInvertibleError):
        beta1_restricted(alg5, alg5.ones())


def test_shortcut_consistency_sweep(members):
    for _, arr in members:
        aff = decone(arr, 0)
        for p in (2, 3, 5, 7):
            if aff.n % p == 0:
                continue
            alg = OSAlgebra(aff, p)
            nu = alg.ones()
            assert beta1_restricted(alg, nu).value == beta1_full(alg, nu).value


def test_central_sweep():
    for s in range(2, 13):
        aff = central_fixture(s)
        for p in PRIMES:
            if s % p == 0:
                continue
            alg = OSAlgebra(aff, p)
            assert beta1_full(alg, alg.ones()).value == 0


def test_central_divisible_case_not_zero():
    # when p divides s the pencil bound is positive, the exclusion is sharp
    alg = OSAlgebra(central_fixture(3), 3)
    assert beta1_full(alg, alg.ones()).value == 1
    alg = OSAlgebra(central_fixture(4), 2)
    assert beta1_full(alg, alg.ones()).value > 0


def test_parallel_sweep():
    for r in range(1, 13):
        aff = parallel_fixture(r)
        for p in PRIMES:
            alg = OSAlgebra(aff, p)
            assert beta1_full(alg, alg.ones()).value == 0


def test_full_agrees_with_quotient_oracle(members):
    for _, arr in members[:15]:
        aff = decone(arr, 0)
        for p in (2, 3, 5):
            alg = OSAlgebra(aff, p)
            assert beta1_full(alg, alg.ones()).value == QuotientOSOracle(aff, p).beta1(
                [1] * aff.n
            )


def test_deconing_invariance_braid():
    arr = catalog.braid_a3()
    for p in (2, 3):
        values = set()
        for infinity in range(6):
            alg = OSAlgebra(decone(arr, infinity), p)
            values.add(beta1_full(alg, alg.ones()).value)
        assert len(values) == 1


def test_pencil_deconing_degenerate_path():
    # all affine lines parallel: no degree 2, kernel is everything
    aff = decone(catalog.pencil(6), 0)
    assert aff.num_classes == 1
    alg = OSAlgebra(aff, 3)
    assert alg.dim2 == 0
    assert beta1_full(alg, alg.ones()).value == 4
