from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from laplace_spectra.errors import CapabilityError, DomainError, InvariantViolation
from laplace_spectra.reptype import (
    COMPLEX,
    QUATERNIONIC,
    REAL,
    RepType,
    a1_type_oracle,
    dual_weight,
    type_of,
)
from laplace_spectra.rootsystem import system_from_spec
from laplace_spectra.spectrum import weyl_dim


@pytest.mark.parametrize("m", range(33))
def test_a1_concordance(m):
    rs = system_from_spec("A1")
    t = type_of(rs, rs.from_dynkin([m]))
    assert t == a1_type_oracle(m)
    assert t.value == (QUATERNIONIC if m % 2 else REAL)


def test_known_types():
    a2 = system_from_spec("A2")
    assert type_of(a2, a2.from_dynkin([1, 0])).value == COMPLEX
    assert type_of(a2, a2.from_dynkin([1, 1])).value == REAL
    b2 = system_from_spec("B2")
    # Spin(5): the 4-dimensional spin module is quaternionic, the vector one real
    by_dim = {weyl_dim(b2, w): type_of(b2, w).value for w in b2.fundamental_weights}
    assert by_dim == {4: QUATERNIONIC, 5: REAL}
    c3 = system_from_spec("C3")
    # Sp(3): fundamental i is quaternionic for odd i
    assert [type_of(c3, w).value for w in c3.fundamental_weights] == [QUATERNIONIC, REAL, QUATERNIONIC]
    d4 = system_from_spec("D4")
    assert {type_of(d4, w).value for w in d4.fundamental_weights} == {REAL}
    a3 = system_from_spec("A3")
    # SU(4): omega_2 is the real 6-dimensional representation
    assert [type_of(a3, w).value for w in a3.fundamental_weights] == [COMPLEX, REAL, COMPLEX]


def test_errors():
    bc = system_from_spec("BC2", "short=2")
    with pytest.raises(CapabilityError):
        type_of(bc, bc.fundamental_weights[0])
    a2 = system_from_spec("A2")
    with pytest.raises(DomainError):
        type_of(a2, a2.from_dynkin([-1, 2]))
    with pytest.raises(DomainError):
        type_of(a2, a2.from_dynkin([Fraction(1, 2), 0]))
    with pytest.raises(InvariantViolation):
        RepType(REAL, False, None)
    with pytest.raises(InvariantViolation):
        RepType(QUATERNIONIC, True, 0)


@given(st.sampled_from(["A2", "A3", "B2", "C3", "D4", "G2", "D3"]), st.data())
def test_duality_properties(name, data):
    rs = system_from_spec(name)
    labels = data.draw(st.lists(st.integers(0, 4), min_size=rs.rank, max_size=rs.rank))
    mu = rs.from_dynkin(labels)
    dual = dual_weight(rs, mu)
    assert dual_weight(rs, dual) == mu
    t = type_of(rs, mu)
    assert (t.value == COMPLEX) == (dual != mu)
    assert type_of(rs, dual).value == t.value
