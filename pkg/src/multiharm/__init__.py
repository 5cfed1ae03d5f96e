"""multiharm: exact arithmetic for multiple harmonic-like numbers.

Computes harmonic, odd-harmonic, multiple harmonic-like, Stirling (first
kind), hyperharmonic (integer and half-integer order), Fibonacci and Lucas
sequences over arbitrary-precision rationals, and mechanically verifies a
catalog of combinatorial identities relating them, with zero floating-point
error.  Every checked quantity has at least two independent computation
routes (recurrences vs generating-function coefficient extraction, plus a
brute-force composition oracle for the harmonic-like family).
"""

from multiharm._kernels import BACKEND as kernel_backend_name
from multiharm.identities import (
    IdentityDescriptor,
    UnknownIdentityError,
    VerificationReport,
    registry_catalog,
    registry_tags,
    telescope_harmonic_check,
    telescope_kollar_check,
    telescope_linear_check,
    telescope_reciprocal_check,
    verify_all,
    verify_identity,
)
from multiharm.rational import (
    Rational,
    binomial,
    factorial,
    format_rational,
    gen_binomial,
    parse_rational,
)
from multiharm.sequences import (
    FAMILY_NAMES,
    FeasibilityError,
    SeqSpec,
    clear_caches,
    fibonacci,
    half_harmonic_offset,
    harmonic,
    harmonic_like,
    harmonic_like_bruteforce,
    harmonic_order,
    hyperharmonic,
    hyperharmonic_closed,
    hyperharmonic_half,
    hyperharmonic_half_via_binomial,
    lucas,
    odd_harmonic,
    stirling1,
)
from multiharm.series import (
    TruncatedSeries,
    geometric,
    gf_harmonic_like,
    gf_hyperharmonic,
    gf_odd_central,
    gf_stirling_column,
    log_one_plus,
    neg_log_one_minus,
)
from multiharm.transforms import (
    AB_FIXTURES,
    binomial_sum_closed,
    binomial_sum_direct,
    binomial_sum_m1,
    binomial_sum_m2,
    binomial_sum_m3,
    binomial_transform,
    inverse_binomial_transform,
)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active kernel backend: "compiled" or "pure"."""
    return kernel_backend_name
