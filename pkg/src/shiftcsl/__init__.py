"""Coincidence site lattices of the square lattice and of its shifted copies."""

from .coincidence import (
    CONJUGATION,
    CSL,
    IDENTITY,
    Isometry,
    apply,
    compose,
    csl,
    enumerate_numerators,
    f,
    f_hat,
    inverse,
    isometry_from_exponents,
    make_isometry,
    point_group,
    sigma,
)
from .gaussian import (
    Factorization,
    GaussianInt,
    GaussianRational,
    canonical_associate,
    divides,
    extended_gcd,
    factor,
    gcd,
    norm,
    split_prime,
)
from .shifted import (
    AIrrBRat,
    ARatBIrr,
    BothIrrDependent,
    BothIrrIndependent,
    NotACoincidenceError,
    OCStructure,
    ShiftedCSL,
    count_fx,
    eps_z_minus_conj,
    group_structure,
    irrational_oc_group,
    is_coincidence_reflection,
    is_coincidence_rotation,
    oc_membership,
    reduce_shift,
    shifted_csl,
    socx_equals_soc,
    translation_vector,
)

__version__ = "0.1.0"
