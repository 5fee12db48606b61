"""Modular group, B3 and loop braid group LB3 representations.

Classifies components of the representation varieties by their
eigenvalue-multiplicity labels, decides which components extend to LB3, and
builds explicit numerically verified matrix witnesses.
"""

from .components import (
    AlphaTuple,
    ComponentRecord,
    Density,
    UVW,
    UVWAssignment,
    b3_extends,
    b3_normal_form,
    component_dimension,
    enumerate_b3_components,
    enumerate_gamma_components,
    gamma_extends,
    mu6_generator_action,
    mu6_orbit,
)
from .extend import (
    LB3Rep,
    MultiplicityMismatch,
    ObstructionCertificate,
    assemble_lb3,
    build_involution_q,
    eigen_data_order3,
    extend_to_g,
    verify_lb3_relations,
)
from .irreducibility import burnside_dimension, commutant_dimension, is_irreducible
from .linalg import RHO, Tolerance
from .reps import B3Rep, GammaRep, braid_images, build_gamma_rep

__version__ = "0.1.0"
