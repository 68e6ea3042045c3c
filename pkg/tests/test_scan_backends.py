from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from laplace_spectra import latticescan
from laplace_spectra.errors import InputError
from laplace_spectra.latticescan import available_backends, scan
from laplace_spectra.rootsystem import lattice_from_spec, system_from_spec

compiled = pytest.mark.skipif("compiled" not in available_backends(),
                              reason="compiled kernel not built")


def brute_force(rs, lattice, bound, radius):
    hits = set()
    for coeffs in product(range(-radius, radius + 1), repeat=rs.rank):
        mu = tuple(sum((c * b[k] for c, b in zip(coeffs, lattice.basis)), Fraction(0))
                   for k in range(rs.ambient_dim))
        shifted = tuple(m + d for m, d in zip(mu, rs.delta))
        if rs.norm2(shifted) <= bound:
            hits.add(mu)
            assert max(abs(c) for c in coeffs) < radius, "oracle box too small"
    return hits


@pytest.mark.parametrize("name,lattice,bound", [
    ("A1", "weight", 30), ("A1", "even", 30), ("A2", "weight", 20), ("A2", "root", 20),
    ("B2", "weight", 18), ("G2", "weight", 25), ("C2", "fw:1,1;0,2", 16), ("A3", "weight", 8),
])
def test_scan_matches_brute_force(name, lattice, bound):
    rs = system_from_spec(name)
    lat = lattice_from_spec(rs, lattice)
    result = scan(rs, lat, Fraction(bound), exact=False, backend="python")
    assert {mu for mu, _ in result.points} == brute_force(rs, lat, bound, 14)


@compiled
@given(st.sampled_from(["A1", "A2", "B2", "C2", "G2", "A3", "B3", "BC2"]),
       st.sampled_from(["weight", "root", "even"]),
       st.fractions(min_value=0, max_value=40, max_denominator=6), st.booleans())
def test_backends_agree(name, lattice, bound, exact):
    rs = system_from_spec(name)
    lat = lattice_from_spec(rs, lattice)
    py = scan(rs, lat, bound, exact=exact, backend="python")
    ext = scan(rs, lat, bound, exact=exact, backend="compiled")
    assert py.points == ext.points
    assert py.scanned == ext.scanned and py.box == ext.box


@compiled
def test_env_var_selects_backend(monkeypatch):
    rs = system_from_spec("A2")
    lat = lattice_from_spec(rs, "weight")
    monkeypatch.setenv("LAPLACE_SPECTRA_BACKEND", "python")
    assert latticescan.default_backend() == "python"
    assert scan(rs, lat, Fraction(10), exact=False).backend == "python"
    monkeypatch.setenv("LAPLACE_SPECTRA_BACKEND", "compiled")
    assert scan(rs, lat, Fraction(10), exact=False).backend == "compiled"


def test_unknown_backend_rejected():
    rs = system_from_spec("A1")
    with pytest.raises(InputError):
        scan(rs, lattice_from_spec(rs, "weight"), Fraction(5), exact=False, backend="gpu")


def test_exact_shell():
    rs = system_from_spec("A2")
    result = scan(rs, lattice_from_spec(rs, "weight"), Fraction(2), exact=True)
    assert len(result.points) == 6
    assert all(a2 == 2 for _, a2 in result.points)
