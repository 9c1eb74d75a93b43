from fractions import Fraction

import pytest

from cyclecones.cones import contains, cones_equal
from cyclecones.errors import DomainError, InputError
from cyclecones.projbundle import (
    HNProfile,
    class_basis,
    cone_coincidence,
    cones_at,
    degree_functional,
    eff_coordinates,
    epsilon,
    nu,
    pair_classes,
    sigma,
    zariski_decompose,
)
from cyclecones.vectors import ClassVector
from cyclecones.zariski import cone_geometry, decompose, verify_decomposition

from conftest import random_profile

F = Fraction

SPLIT = HNProfile(((2, 0), (2, 2)))
THREE = HNProfile(((1, -2), (1, 0), (2, 2)))


def test_profile_parsing_and_validation():
    assert HNProfile.parse("2:0,2:2") == SPLIT
    assert SPLIT.rank == 4 and SPLIT.degree == 2
    with pytest.raises(InputError):
        HNProfile.parse("2:2,2:0")  # slopes must strictly increase
    with pytest.raises(InputError):
        HNProfile.parse("0:1")
    with pytest.raises(InputError):
        HNProfile.parse("nonsense")


def test_polygon_endpoints_for_any_profile(rng):
    for _ in range(40):
        profile = random_profile(rng)
        assert epsilon(profile, 0) == -profile.degree
        assert epsilon(profile, profile.rank) == 0


def test_epsilon_table_for_split_bundle():
    assert [epsilon(SPLIT, k) for k in range(5)] == [-2, -2, -2, -1, 0]


def test_epsilon_semistable_is_linear():
    profile = HNProfile(((4, 2),))
    for k in range(5):
        assert epsilon(profile, k) == -2 + F(k) * F(2, 4)


def test_nu_values():
    assert nu(SPLIT, 2) == 0
    assert nu(SPLIT, 3) == 0
    semistable = HNProfile(((4, 2),))
    for k in range(1, 4):
        assert nu(semistable, k) == -semistable.degree - epsilon(semistable, 4 - k)
        assert nu(semistable, k) == -F(4 - k) * F(2, 4)


def test_sigma_values():
    assert sigma(SPLIT, 2) == -1
    assert sigma(THREE, 2) == -1
    # in dimension one the movable and nef constants coincide
    for profile in (SPLIT, THREE, HNProfile(((3, 1), (2, 4)))):
        assert sigma(profile, 1) == nu(profile, 1)


def test_cones_nesting():
    eff, nef, mov = cones_at(SPLIT, 2)
    v = ClassVector(class_basis(SPLIT, 2), (1, -1))
    assert contains(mov, v) and not contains(nef, v)
    assert contains(eff, v)


def test_semistable_cones_coincide():
    profile = HNProfile(((4, 2),))
    for k in range(1, 4):
        eff, nef, mov = cones_at(profile, k)
        assert cones_equal(eff, nef) and cones_equal(eff, mov)


def test_k_range_enforced():
    with pytest.raises(InputError):
        cones_at(SPLIT, 0)
    with pytest.raises(InputError):
        cones_at(SPLIT, 4)
    with pytest.raises(InputError):
        epsilon(SPLIT, 5)


def test_pairing_relations():
    basis2 = class_basis(THREE, 2)
    z = ClassVector(basis2, (1, -1))
    assert pair_classes(THREE, 2, z, z) == -2
    fiber = ClassVector(class_basis(SPLIT, 1), (0, 1))
    hyper = ClassVector(class_basis(SPLIT, 3), (1, 0))
    assert pair_classes(SPLIT, 1, fiber, hyper) == 1
    fiber3 = ClassVector(class_basis(SPLIT, 3), (0, 1))
    fiber1 = ClassVector(class_basis(SPLIT, 1), (0, 1))
    assert pair_classes(SPLIT, 3, fiber3, fiber1) == 0


def test_closed_form_decomposition_cases():
    basis = class_basis(SPLIT, 2)
    movable = zariski_decompose(SPLIT, 2, ClassVector(basis, (1, 0)))
    assert movable.negative.is_zero()
    boundary = zariski_decompose(SPLIT, 2, ClassVector(basis, (1, -2)))
    assert boundary.positive.is_zero()
    assert boundary.negative.coords == (1, -2)
    interior = zariski_decompose(SPLIT, 2, ClassVector(basis, (2, -3)))
    assert interior.positive.coords == (1, -1)
    assert interior.negative.coords == (1, -2)


def test_non_pseudoeffective_rejected_with_functional():
    basis = class_basis(SPLIT, 2)
    with pytest.raises(DomainError) as err:
        zariski_decompose(SPLIT, 2, ClassVector(basis, (-1, 0)))
    assert "separating_functional" in err.value.details


def test_coincidence_flags():
    assert cone_coincidence(SPLIT, 3) == (True, False)
    assert cone_coincidence(SPLIT, 2) == (False, False)
    semistable = HNProfile(((4, 2),))
    for k in range(1, 4):
        assert cone_coincidence(semistable, k) == (True, True)


def test_two_slope_profiles_never_have_nef_equal_eff(rng):
    # an effective class on the lower boundary pairs negatively with the
    # minimal section as soon as two slopes differ, in every dimension
    for _ in range(60):
        profile = random_profile(rng)
        if len(profile.pieces) == 1:
            continue
        for k in range(1, profile.rank):
            assert cone_coincidence(profile, k)[1] is False
            assert nu(profile, k) > epsilon(profile, k)


# -- randomized invariants ---------------------------------------------------


def test_polygon_convex_and_constants_ordered(rng):
    for _ in range(120):
        profile = random_profile(rng)
        n = profile.rank
        heights = [epsilon(profile, k) for k in range(n + 1)]
        slopes = [b - a for a, b in zip(heights, heights[1:])]
        assert all(x <= y for x, y in zip(slopes, slopes[1:]))
        for k in range(1, n):
            assert nu(profile, k) >= sigma(profile, k) >= epsilon(profile, k)
            gap_zero = sigma(profile, k) == epsilon(profile, k)
            assert gap_zero == (n - profile.pieces[-1][0] < k)


def test_closed_form_agrees_with_lp_engine(rng):
    # smaller companion to the acceptance-level 500-instance agreement run
    for _ in range(100):
        profile = random_profile(rng)
        k = rng.randint(1, profile.rank - 1)
        basis = class_basis(profile, k)
        a = F(rng.randint(0, 12), rng.randint(1, 3))
        b = F(rng.randint(0, 12), rng.randint(1, 3))
        eps = epsilon(profile, k)
        alpha = ClassVector(basis, (a, a * eps + b))
        closed = zariski_decompose(profile, k, alpha)
        eff, _, mov = cones_at(profile, k)
        geometry = cone_geometry(
            "agree", mov, eff, degree_functional(profile, k)
        )
        lp = decompose(geometry, alpha)
        assert lp.positive.coords == closed.positive.coords
        assert lp.negative.coords == closed.negative.coords
        assert lp.metadata["positive_part_status"] == "certified-preceq-maximum"
        assert verify_decomposition(geometry, lp)
        # the negative part is a multiple of the extremal effective ray
        a_neg, b_neg = eff_coordinates(profile, k, closed.negative)
        assert b_neg == 0 and a_neg >= 0
