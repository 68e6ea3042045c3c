"""Exact spectra of invariant Laplacians from root-system and representation data."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapabilityError,
    CapacityError,
    DomainError,
    InputError,
    InvariantViolation,
    SpectraError,
)
from .rootsystem import build_root_system, lattice_from_spec, system_from_spec  # noqa: E402
from .spectrum import collisions, enumerate_spherical  # noqa: E402
from .reptype import type_of  # noqa: E402
from .spheresym import sphere_points, symmetry_group, verify_weyl_containment  # noqa: E402
from .su2lab import certify_generic_simple, d_operator  # noqa: E402
from .q8 import assemble, build_q8, simplicity_dictionary  # noqa: E402

__all__ = [
    "CapabilityError", "CapacityError", "DomainError", "InputError", "InvariantViolation",
    "SpectraError", "build_root_system", "lattice_from_spec", "system_from_spec",
    "collisions", "enumerate_spherical", "type_of", "sphere_points", "symmetry_group",
    "verify_weyl_containment", "certify_generic_simple", "d_operator", "assemble",
    "build_q8", "simplicity_dictionary",
]
