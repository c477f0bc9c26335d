import pytest

from burnzeta import (BurnsideElement, CyclotomicFactorization, PairClass, ResolutionData, StratumError,
                      StratumRecord, ValidationError, acampo_zeta, expand, fermat_s3_strata, orbifold_reduce,
                      quasihomogeneous_zeta, stratum_from_total_euler, validate_stratum)


def pair(lat, h, hhat):
    return PairClass.of(lat.resolve(h).representative, lat.resolve(hhat).representative)


def fermat_expected(lat, k):
    b = lambda name: BurnsideElement.basis(lat, name)
    return CyclotomicFactorization({
        6 * k: -b("S3") + b("Z2").scale(6 * k - 1) + b("e").scale(1 - 6 * k * k),
        3 * k: -b("e"),
        2 * k: -b("e"),
    }, lattice=lat)


def test_validate_ok(s3):
    lat = s3.lattice()
    validate_stratum(StratumRecord(6, pair(lat, "S3", "S3"), -1))
    validate_stratum(StratumRecord(6, pair(lat, "Z2", "e"), 1))


def test_validate_divisibility(s3):
    lat = s3.lattice()
    with pytest.raises(StratumError) as exc:
        validate_stratum(StratumRecord(3, pair(lat, "Z2", "e"), 1))
    assert any("does not divide" in p for p in exc.value.problems)


def test_validate_reports_each_problem(s3):
    lat = s3.lattice()
    # S3 / e is not cyclic; m = 4 is not a multiple of 6
    with pytest.raises(StratumError) as exc:
        validate_stratum(StratumRecord(4, pair(lat, "S3", "e"), 1))
    assert len(exc.value.problems) == 2
    with pytest.raises(StratumError):
        validate_stratum(StratumRecord(6, pair(lat, "S3", "Z2"), 1))  # not normal
    with pytest.raises(StratumError):
        validate_stratum(StratumRecord(0, pair(lat, "S3", "S3"), 1))


def test_hat_not_contained(s3):
    lat = s3.lattice()
    with pytest.raises(StratumError):
        validate_stratum(StratumRecord(6, pair(lat, "Z2", "Z3"), 1))


def test_pair_canonical(s3):
    lat = s3.lattice()
    z2 = lat.resolve("Z2")
    e = lat.trivial.representative
    assert len({PairClass.of(c, c) for c in z2.conjugates}) == 1
    assert len({PairClass.of(c, e) for c in z2.conjugates}) == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fermat_product(k):
    d = fermat_s3_strata(k)
    z = acampo_zeta(d)
    assert z == fermat_expected(d.lattice, k)
    assert z.is_integral()
    assert all(isinstance(e, BurnsideElement) for _, e in z.items())


def test_fermat_chi_values():
    assert [s.chi_quotient for s in fermat_s3_strata(1).strata] == [1, -5, 1, 1, 5]
    assert [s.chi_quotient for s in fermat_s3_strata(2).strata] == [1, -11, 1, 1, 23]
    with pytest.raises(ValidationError):
        fermat_s3_strata(0)


def test_fermat_text():
    assert str(acampo_zeta(fermat_s3_strata(1))) == (
        "(1-t^6)^{-[S3/S3] + 5[S3/Z2] - 5[S3/e]} (1-t^3)^{-[S3/e]} (1-t^2)^{-[S3/e]}")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fermat_orbifold_with_commuting_pairs(k):
    # [S3/S3] maps to the number of conjugacy classes of S3 (3), [S3/Z2] to 2, [S3/e] to 1
    z = orbifold_reduce(acampo_zeta(fermat_s3_strata(k)))
    assert z == CyclotomicFactorization({6 * k: -3 + 2 * (6 * k - 1) + (1 - 6 * k * k), 3 * k: -1, 2 * k: -1})


def test_exponent_of_t(s3):
    lat = s3.lattice()
    for h, hh, m, want in [("Z2", "e", 6, 3), ("Z3", "e", 6, 2), ("S3", "S3", 6, 6), ("S3", "Z3", 4, 2)]:
        assert StratumRecord(m, pair(lat, h, hh), 1).exponent_of_t == want


def test_single_and_empty(s3):
    lat = s3.lattice()
    d = ResolutionData(lat, [StratumRecord(5, pair(lat, "S3", "S3"), 3)])
    assert acampo_zeta(d) == CyclotomicFactorization({5: -BurnsideElement.one(lat).scale(3)}, lattice=lat)
    assert acampo_zeta(ResolutionData(lat, [])).is_trivial()


def test_duplicate_strata_rejected(s3):
    lat = s3.lattice()
    s = StratumRecord(6, pair(lat, "Z2", "e"), 1)
    with pytest.raises(ValidationError):
        ResolutionData(lat, [s, StratumRecord(6, pair(lat, "Z2", "e"), 2)])


def test_like_powers_merge(s3):
    lat = s3.lattice()
    d = ResolutionData(lat, [StratumRecord(3, pair(lat, "e", "e"), 1), StratumRecord(6, pair(lat, "Z2", "e"), 2)])
    assert acampo_zeta(d) == CyclotomicFactorization({3: -BurnsideElement.basis(lat, "e", 3)}, lattice=lat)


def test_total_euler_conversion(s3):
    lat = s3.lattice()
    s = stratum_from_total_euler(6, pair(lat, "Z2", "Z2"), -15)
    assert s.chi_quotient == -5
    with pytest.raises(ValidationError):
        stratum_from_total_euler(6, pair(lat, "Z2", "Z2"), 1)


def test_quasihomogeneous(s3):
    lat = s3.lattice()
    assert quasihomogeneous_zeta(BurnsideElement.zero(lat)).is_trivial()
    b = BurnsideElement.basis(lat, "Z2", 4)
    assert expand(quasihomogeneous_zeta(b), 1).coeffs[1] == b
    assert str(quasihomogeneous_zeta(BurnsideElement.one(lat))) == "(1-t)^{-[S3/S3]}"


def test_orbifold_of_constant():
    assert orbifold_reduce(CyclotomicFactorization()).is_trivial()
