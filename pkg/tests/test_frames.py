import pytest
from hypothesis import given
from hypothesis import strategies as st

from daxcalc.abelian import AbelianGroup, parse_abelian_group
from daxcalc.frames import (CoefficientGroup, EulerImage, ExtensionShape, Splitting, SwConstraint,
                            admits_extension, bo_extension, bo_middle_curated, euler_image, eta_w,
                            fiber_pi, splitting_exists, stiefel_first, stiefel_pi, tangent_sw_constraint,
                            unit_sphere_bundle_pi, z_kd, z_ld_immersion)
from daxcalc.tables import UNKNOWN

Z, Z2, ZERO = AbelianGroup(1), AbelianGroup(0, (2,)), AbelianGroup()


@pytest.mark.parametrize("k,d,expected", [(2, 4, "Z"), (2, 5, "Z/2"), (6, 6, "Z"), (1, 2, "Z/2")])
def test_z_kd(k, d, expected):
    assert z_kd(k, d).value == expected


@pytest.mark.parametrize("ell,d,expected", [(1, 3, "Z"), (2, 7, "Z/2"), (2, 6, "Z"), (1, 2, "Z")])
def test_z_ld_immersion(ell, d, expected):
    assert z_ld_immersion(ell, d).value == expected


def test_coefficient_ranges():
    with pytest.raises(ValueError):
        z_kd(3, 2)
    with pytest.raises(ValueError):
        z_ld_immersion(3, 5)
    assert CoefficientGroup.Z2.group == Z2


@pytest.mark.parametrize("k,d,expected", [(1, 3, Z), (2, 5, Z2), (3, 3, Z), (1, 4, Z)])
def test_stiefel_first(k, d, expected):
    assert stiefel_first(k, d) == expected


def test_stiefel_vanishing_and_unknown():
    assert stiefel_pi(3, 2, 6) == ZERO
    assert stiefel_pi(4, 2, 6) == Z
    assert stiefel_pi(5, 2, 6) is UNKNOWN


# kernel and cokernel cases typed from the case lists, not from the code
def expected_kernel(m):
    if m % 2:
        return "Z"
    return "0" if m in (2, 4, 8) else "Z/2"


def expected_cokernel(m):
    return {1: "Z", 5: "Z", 2: "Z/2", 3: "Z/2"}.get(m % 8, "0")


@pytest.mark.parametrize("m", range(1, 25))
def test_bo_case_tables(m):
    ext = bo_extension(m)
    assert ext.kernel.value == expected_kernel(m)
    assert str(ext.cokernel) == expected_cokernel(m)
    if ext.split == "yes":
        assert ext.splitting_witness
    if ext.middle is not None:
        assert admits_extension(ext.kernel.group, ext.middle, ext.cokernel)


@pytest.mark.parametrize("m,curated", [(2, "Z/2"), (3, "Z"), (4, "0"), (5, "Z^2"), (6, "Z/2")])
def test_bo_middle_consistent_with_curated(m, curated):
    ext = bo_extension(m)
    mid = bo_middle_curated(m)
    assert mid == parse_abelian_group(curated)
    assert admits_extension(ext.kernel.group, mid, ext.cokernel)
    if ext.middle is not None:
        assert ext.middle == mid


def test_bo_examples():
    e2, e3, e4 = bo_extension(2), bo_extension(3), bo_extension(4)
    assert (e2.kernel.value, str(e2.cokernel), e2.middle) == ("0", "Z/2", Z2)
    assert (e3.kernel.value, str(e3.cokernel)) == ("Z", "Z/2")
    assert (e4.kernel.value, str(e4.cokernel), e4.middle) == ("0", "0", ZERO)
    assert bo_extension(1).split == "unknown"
    with pytest.raises(ValueError):
        bo_extension(0)
    with pytest.raises(ValueError):
        ExtensionShape(CoefficientGroup.Z, Z, "yes")


def test_admits_extension_rejects():
    assert not admits_extension(Z, Z, Z)                       # ranks do not add
    assert not admits_extension(Z2, ZERO, ZERO)                # kernel torsion cannot embed
    assert not admits_extension(Z2, AbelianGroup(0, (8,)), Z2)  # order 8 > 2 * 2
    assert admits_extension(Z2, AbelianGroup(0, (4,)), Z2)
    assert admits_extension(Z2, AbelianGroup(0, (2, 2)), Z2)


@pytest.mark.parametrize("ell,d,boundary,sw,expected", [
    (2, 5, False, "unknown", "0"),
    (2, 8, False, "unknown", "2Z"),
    (2, 4, False, "no", "Z"),
    (2, 4, False, "yes", "2Z"),
    (2, 4, False, "unknown", "unknown"),
    (0, 4, True, "unknown", "0"),
    (0, 4, False, "unknown", "unknown"),
])
def test_euler_image(ell, d, boundary, sw, expected):
    assert euler_image(ell, d, boundary, sw).value == expected


@given(st.integers(0, 20), st.integers(0, 40), st.booleans(), st.sampled_from(["yes", "no", "unknown"]))
def test_euler_image_odd_codimension_vanishes(ell, d, boundary, sw):
    if ell <= d and (d - ell) % 2:
        assert euler_image(ell, d, boundary, sw) is EulerImage.ZERO


def test_tangent_sw_truth_table():
    # exceptions listed directly: k = d-1 >= 3, k = d-3 >= 5, k = d-7 >= 9
    for d in range(2, 13):
        for k in range(2, d + 1):
            exceptional = (k == d - 1 and k >= 3) or (k == d - 3 and k >= 5) or (k == d - 7 and k >= 9)
            want = SwConstraint.POSSIBLY_NONZERO if exceptional else SwConstraint.FORCED_ZERO
            assert tangent_sw_constraint(k, d) is want, (k, d)


def test_tangent_sw_examples():
    assert tangent_sw_constraint(3, 5) is SwConstraint.FORCED_ZERO
    assert tangent_sw_constraint(3, 4) is SwConstraint.POSSIBLY_NONZERO
    assert tangent_sw_constraint(2, 3) is SwConstraint.FORCED_ZERO


@pytest.mark.parametrize("e,w,expected", [(2, 0, 1), (0, 0, 0), (3, 1, 1), (-4, 2, -3)])
def test_eta_w(e, w, expected):
    assert eta_w(e, w) == expected


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_eta_w_additive(e, w):
    if (e - w) % 2 == 0:
        assert eta_w(e + 2, w) == eta_w(e, w) + 1
    else:
        with pytest.raises(ValueError, match="integral lift"):
            eta_w(e, w)


@pytest.mark.parametrize("k,d,context,expected", [
    (2, 8, "general", Splitting.YES_WITH_ETA),
    (2, 7, "general", Splitting.YES_ABSTRACT),
    (2, 6, "tangent_bundle_of_compact_manifold", Splitting.YES_WITH_ETA),
    (4, 8, "tangent_bundle_of_compact_manifold", Splitting.YES_WITH_ETA),
    (2, 4, "general", Splitting.NO_GENERAL_RULE),
    (3, 4, "general", Splitting.NO_GENERAL_RULE),
    (3, 4, "tangent_bundle_of_compact_manifold", Splitting.NO_GENERAL_RULE),
    (2, 3, "tangent_bundle_of_compact_manifold", Splitting.YES_ABSTRACT),
    (5, 8, "tangent_bundle_of_compact_manifold", Splitting.NO_GENERAL_RULE),
])
def test_splitting_exists(k, d, context, expected):
    verdict, rule = splitting_exists(k, d, context)
    assert verdict is expected and rule


def test_splitting_matches_exception_list_on_tangent_bundles():
    # odd d - k on tangent bundles splits except at the listed (k, d)
    for d in range(3, 20):
        for k in range(2, d + 1):
            if (d - k) % 2 == 0:
                continue
            exceptional = (k == d - 1 and k >= 3) or (k == d - 3 and k >= 5) or (k == d - 7 and k >= 9)
            verdict, _ = splitting_exists(k, d, "tangent_bundle_of_compact_manifold")
            assert (verdict is Splitting.NO_GENERAL_RULE) == exceptional, (k, d)


def test_unit_sphere_bundle_and_fibers():
    assert unit_sphere_bundle_pi(2, 3, ZERO) == Z
    assert unit_sphere_bundle_pi(3, 3, Z2) == AbelianGroup(1, (2,))
    assert unit_sphere_bundle_pi(40, 3, ZERO) is UNKNOWN
    assert unit_sphere_bundle_pi(2, 3, UNKNOWN) is UNKNOWN
    assert fiber_pi(1, 1, 2) == Z
    with pytest.raises(ValueError):
        unit_sphere_bundle_pi(0, 3, ZERO)
