from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from laplace_spectra.errors import DomainError, InputError, InvariantViolation
from laplace_spectra.rootsystem import lattice_from_spec, system_from_spec, weyl_group
from laplace_spectra.spheresym import (
    SphereSet,
    sphere_family,
    sphere_points,
    symmetry_group,
    verify_weyl_containment,
)
from oracles import gram_preserving_permutations, inner_product_profile


def sphere(name, a2, lattice="weight"):
    rs = system_from_spec(name)
    return rs, sphere_points(rs, lattice_from_spec(rs, lattice), Fraction(a2))


def test_frozen_orders():
    rs, ss = sphere("A1", Fraction(1, 2))
    assert len(ss) == 2 and symmetry_group(ss).order == 2
    rs, ss = sphere("A2", 2)
    g = symmetry_group(ss)
    assert len(ss) == 6 and g.order == 12 and g.transitive


@pytest.mark.parametrize("name,a2_max", [("A1", 20), ("A2", 12), ("B2", 14), ("G2", 14)])
def test_orders_match_exhaustive_permutation_search(name, a2_max):
    rs = system_from_spec(name)
    checked = 0
    for ss in sphere_family(rs, lattice_from_spec(rs, "weight"), a2_max):
        if len(ss) > 8 or not ss.spans_ambient:
            continue
        pts = [p.shifted for p in ss.points]
        assert symmetry_group(ss).order == gram_preserving_permutations(pts, rs.inner)
        checked += 1
    assert checked >= 2


def test_b2_sphere_25_2_is_not_transitive():
    """Two point classes on this sphere have different inner-product profiles.

    An orthogonal map permuting the set preserves every inner product, so it
    cannot move a point of one class onto the other.
    """
    rs, ss = sphere("B2", Fraction(25, 2))
    pts = [p.shifted for p in ss.points]
    assert sorted((abs(x), abs(y)) for x, y in pts) == sorted(
        [(Fraction(1, 2), Fraction(7, 2))] * 4 + [(Fraction(7, 2), Fraction(1, 2))] * 4
        + [(Fraction(5, 2), Fraction(5, 2))] * 4)
    profiles = {tuple(inner_product_profile(pts, rs.inner, i)) for i in range(len(pts))}
    assert len(profiles) == 2
    g = symmetry_group(ss)
    assert not g.transitive and len(g.orbits) == 2
    assert sorted(len(o) for o in g.orbits) == [4, 8]
    # the signed permutations of the two coordinates all preserve the set
    members = set(pts)
    signed = 0
    for perm, signs in product(permutations(range(2)), product((1, -1), repeat=2)):
        if all(tuple(signs[k] * p[perm[k]] for k in range(2)) in members for p in pts):
            signed += 1
    assert signed == 8 == g.order


def test_weyl_group_embeds():
    rs, ss = sphere("G2", 14)
    g = symmetry_group(ss)
    assert g.order % len(weyl_group(rs)) == 0
    assert g.lattice_preserving <= g.order


def test_containment_witnesses_are_empty():
    rs, ss = sphere("A2", Fraction(26, 3))
    ok, witnesses = verify_weyl_containment(rs, ss)
    assert ok and witnesses == []


def test_errors():
    rs = system_from_spec("A2")
    with pytest.raises(DomainError):
        sphere_points(rs, lattice_from_spec(rs, "weight"), 0)
    a1 = system_from_spec("A1")
    with pytest.raises(InvariantViolation):
        sphere_points(a1, lattice_from_spec(a1, "root"), 2)
    rs, ss = sphere("A2", 2)
    flat = SphereSet(ss.a_squared, ss.points[:1], False, ss.rs, ss.lattice)
    with pytest.raises(InputError):
        symmetry_group(flat)


@settings(max_examples=25)
@given(st.sampled_from(["A1", "A2", "B2", "G2", "C2"]), st.integers(1, 40))
def test_shifted_weyl_action_preserves_spheres(name, k):
    rs = system_from_spec(name)
    lat = lattice_from_spec(rs, "weight")
    for ss in sphere_family(rs, lat, Fraction(k, 2)):
        ok, _ = verify_weyl_containment(rs, ss)
        assert ok
        assert all(rs.norm2(p.shifted) == ss.a_squared for p in ss.points)
        assert ss.spans_ambient


@settings(max_examples=15)
@given(st.sampled_from(["A2", "B2", "G2"]), st.integers(1, 24))
def test_group_axioms(name, k):
    rs = system_from_spec(name)
    for ss in sphere_family(rs, lattice_from_spec(rs, "weight"), Fraction(k, 2))[-1:]:
        g = symmetry_group(ss)
        ids = set(g.elements)
        assert len(ids) == g.order
        assert sorted(i for o in g.orbits for i in o) == list(range(len(ss)))
        # orbits are unions of inner-product-profile classes
        pts = [p.shifted for p in ss.points]
        for orbit in g.orbits:
            assert len({tuple(inner_product_profile(pts, rs.inner, i)) for i in orbit}) == 1
