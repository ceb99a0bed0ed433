"""Minimal free resolutions over graded quotient rings, with supports and
dimensions of the syzygy modules and executable checks on their behaviour."""

__version__ = "0.1.0"

from .config import ResourceLimitExceeded, audit, limits
from .ring import GF, QQ, ParseError, Polynomial, PolynomialRing, QuotientRing, parse_poly
from .groebner import (
    GroebnerBasis, Ideal, annihilator_of_ideal_mod, buchberger, ideal_intersection, ideal_membership,
    ideal_quotient, ideals_equal, radical_membership, syzygy_basis,
)
from .resolution import (
    BettiSequence, ModulePresentation, Resolution, betti_sequence, graded_betti, resolve, syzygy_presentation,
)
from .geometry import (
    EMPTY, PrimeList, SupportHandle, fitting_ideal_0, height, krull_dim, min_primes,
    min_primes_containment_check, module_dim, supp_equal, supp_is_full, support_handle,
)
from .oracle import compare_with_resolution, graded_betti_oracle
from .checks import CheckReport, Instance, run_checks
from .instance import InstanceFile, fixture, load_instance
from .corpus import generate_corpus
