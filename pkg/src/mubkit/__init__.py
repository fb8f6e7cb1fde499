"""Exact constructions of mutually unbiased bases over finite fields and Galois rings."""

from .cyclotomic import CyclotomicInt, cyclotomic_polynomial, root_of_unity
from .entangle import (
    BellFamily,
    BellState,
    bell_basis,
    bell_composite,
    bell_even,
    bell_family,
    bell_odd,
    partial_trace_first,
    partial_trace_second,
    verify_bell_family,
)
from .finite_field import GF, FieldContext, FieldElement, find_modulus, trace
from .galois_ring import GR, QuotientRing, RingContext, RingElement, hensel_lift, sylow_decomposition, verify_subfield
from .geometry import (
    IncidencePlane,
    fano_from_gf8,
    find_isomorphism,
    lifted_fano,
    projective_plane,
    verify_plane_axioms,
)
from .mub import (
    MubSet,
    mub_composite,
    mub_even,
    mub_odd_prime_power,
    mub_prime_power,
    mub_set,
    phase_operator,
    verify_mub_set,
    verify_unbiased_pair,
    weil_sum,
)
from .pauli import clock_op, diagonalizes, pauli_mub_correspondence, shift_op
from .vectors import Basis, ExactMatrix, StateVector, canonical_phase, computational_basis

__version__ = "0.1.0"
