import pytest
from hypothesis import given, settings, strategies as st

from burnzeta import (BurnsideElement, LatticeMismatchError, NonIntegralMarksError, NotDivisibleError,
                      RationalBurnside, ValidationError, burnside_class, character, coset_gset,
                      disjoint_union, empty_gset, equivariant_euler, equivariant_euler_from_strata,
                      from_marks, marks, mul, named_group, orbifold_euler, phi, product)
from burnzeta.burnside import divide

from conftest import random_gset
from oracles import orbifold_by_centralizers, solve_rational

GROUPS = {"S3": named_group("symmetric", 3), "Z6": named_group("cyclic", 6),
          "D4": named_group("dihedral", 4)}


def elements(lattice, lo=-6, hi=6):
    return st.lists(st.integers(lo, hi), min_size=len(lattice), max_size=len(lattice)).map(
        lambda c: BurnsideElement(lattice, c))


@st.composite
def group_and_elements(draw, count=3):
    g = GROUPS[draw(st.sampled_from(sorted(GROUPS)))]
    lat = g.lattice()
    return (lat, *[draw(elements(lat)) for _ in range(count)])


@settings(max_examples=150, deadline=None)
@given(group_and_elements())
def test_ring_axioms(data):
    lat, a, b, c = data
    one = BurnsideElement.one(lat)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * one == a
    assert a + BurnsideElement.zero(lat) == a
    assert a - a == BurnsideElement.zero(lat)


@settings(max_examples=150, deadline=None)
@given(group_and_elements(count=2))
def test_marks_round_trip_and_homomorphism(data):
    lat, a, b = data
    assert from_marks(lat, marks(a)) == a
    assert marks(a * b) == tuple(x * y for x, y in zip(marks(a), marks(b)))
    assert marks(a + b) == tuple(x + y for x, y in zip(marks(a), marks(b)))


@settings(max_examples=100, deadline=None)
@given(group_and_elements(count=2))
def test_character_is_ring_homomorphism(data):
    lat, a, b = data
    assert character(a * b) == tuple(x * y for x, y in zip(character(a), character(b)))
    assert character(a + b) == tuple(x + y for x, y in zip(character(a), character(b)))


@settings(max_examples=100, deadline=None)
@given(group_and_elements(count=2))
def test_phi_additive(data):
    lat, a, b = data
    assert phi(a + b) == phi(a) + phi(b)
    assert phi(a.scale(-3)) == -3 * phi(a)


@settings(max_examples=100, deadline=None)
@given(elements(GROUPS["Z6"].lattice()), elements(GROUPS["Z6"].lattice()))
def test_phi_abelian_on_basis_products(a, b):
    # Phi([G/H]) = |H| is additive; it is the value on classes, not a ring map
    lat = a.lattice
    assert phi(a) == sum(c * h.order for c, h in zip(a.coeffs, lat))


def test_phi_not_multiplicative(s3, z6):
    for g in (s3, z6):
        lat = g.lattice()
        one = BurnsideElement.one(lat)
        # the unit is a point: Phi counts conjugacy classes of G, so Phi(1)^2 != Phi(1*1)
        assert phi(one * one) == phi(one)
        assert phi(one) ** 2 != phi(one)


def test_marks_of_frozen_examples(s3):
    lat = s3.lattice()
    assert marks(BurnsideElement.basis(lat, "Z2")) == (3, 1, 0, 0)
    assert str(from_marks(lat, (9, 1, 0, 0))) == "[S3/Z2] + [S3/e]"


def test_from_marks_against_rational_solver(d4):
    lat = d4.lattice()
    b = BurnsideElement(lat, [3, -1, 0, 2, 0, 1, -2, 4])
    v = marks(b)
    sol = solve_rational(lat.marks.rows, v)
    assert [int(x) for x in sol] == list(b.coeffs)


def test_from_marks_non_integral(s3):
    with pytest.raises(NonIntegralMarksError) as exc:
        from_marks(s3.lattice(), (1, 0, 0, 0))
    assert exc.value.to_dict()["class"]


def test_burnside_class_examples(s3):
    lat = s3.lattice()
    assert burnside_class(coset_gset(lat, "e")) == BurnsideElement.basis(lat, "e")
    assert burnside_class(empty_gset(s3)) == BurnsideElement.zero(lat)


@pytest.mark.parametrize("gname", sorted(GROUPS))
def test_burnside_class_of_product(gname, rng):
    g = GROUPS[gname]
    for _ in range(10):
        x, y = random_gset(g, rng, 2), random_gset(g, rng, 2)
        assert burnside_class(product(x, y)) == mul(burnside_class(x), burnside_class(y))
        assert burnside_class(disjoint_union(x, y)) == burnside_class(x) + burnside_class(y)


def test_equivariant_euler_of_finite_set_is_class(s3, rng):
    for _ in range(10):
        x = random_gset(s3, rng)
        assert equivariant_euler(x) == burnside_class(x)


def test_equivariant_euler_from_strata(s3, rng):
    lat = s3.lattice()
    b = equivariant_euler_from_strata(lat, [("e", 5), ("Z2", -5)])
    assert str(b) == "-5[S3/Z2] + 5[S3/e]"
    with pytest.raises(ValidationError):
        equivariant_euler_from_strata(lat, [("Z2", 3), ("H1", 3)])
    # first form: chi(X^(H)) |H| / |G| per stratum
    from burnzeta import isotropy_stratum
    for _ in range(5):
        x = random_gset(s3, rng)
        data = [(h, len(isotropy_stratum(x, h)) * h.order // s3.order) for h in lat]
        assert equivariant_euler_from_strata(lat, data) == equivariant_euler(x)


def test_character_of_coset(s3):
    # classes ordered e, transpositions, 3-cycles
    assert character(BurnsideElement.basis(s3.lattice(), "Z2")) == (3, 1, 0)
    assert set(character(BurnsideElement.one(s3.lattice()))) == {1}


@pytest.mark.parametrize("gname", sorted(GROUPS))
def test_orbifold_euler_two_formulas(gname, rng):
    g = GROUPS[gname]
    for _ in range(10):
        x = random_gset(g, rng)
        assert orbifold_euler(x) == orbifold_by_centralizers(g, x.act, x.size)
        assert phi(burnside_class(x)) == orbifold_euler(x)


def test_phi_values(s3, z6, d4):
    assert [phi(BurnsideElement.basis(z6.lattice(), h)) for h in z6.lattice()] == [1, 2, 3, 6]
    # for a subgroup class the value is the number of conjugacy classes of H
    assert [phi(BurnsideElement.basis(s3.lattice(), h)) for h in s3.lattice()] == [1, 2, 3, 3]
    assert phi(BurnsideElement.one(d4.lattice())) == 5


def test_phi_of_rational(z6):
    lat = z6.lattice()
    from fractions import Fraction
    r = RationalBurnside(lat, [0, Fraction(1, 3), 0, 0])
    assert phi(r) == Fraction(2, 3)


def test_divide(z6):
    lat = z6.lattice()
    b = BurnsideElement.basis(lat, "Z2", 2)
    assert divide(b, 2) == BurnsideElement.basis(lat, "Z2")
    assert divide(b, 1) == b
    with pytest.raises(NotDivisibleError) as exc:
        divide(b, 6)
    d = exc.value.to_dict()
    assert d["remainder"] == 2 and d["divisor"] == 6


def test_mixing_lattices_rejected(s3, z6):
    with pytest.raises(LatticeMismatchError):
        BurnsideElement.one(s3.lattice()) + BurnsideElement.one(z6.lattice())


def test_serialization(s3):
    lat = s3.lattice()
    b = BurnsideElement(lat, [2, 0, -1, 1])
    assert BurnsideElement.from_mapping(lat, b.to_dict()) == b
    assert str(b) == "[S3/S3] - [S3/Z3] + 2[S3/e]"
    assert str(BurnsideElement.zero(lat)) == "0"


def test_positive_negative_parts(s3):
    lat = s3.lattice()
    b = BurnsideElement(lat, [2, 0, -1, 1])
    assert b.positive_part() - b.negative_part() == b
    assert b.positive_part().is_effective() and b.negative_part().is_effective()
    assert not b.is_effective()
