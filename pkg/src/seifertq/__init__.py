"""Seifert-form invariants and the two-loop obstruction for knots with
trivial Alexander polynomial, presented by clasper surgery."""

from .errors import (
    BasisChangeError,
    DimensionError,
    NotInKernelError,
    ParseError,
    PreconditionError,
    SeifertQError,
    UnsupportedDegreeError,
)
from .laurent import LaurentPoly, det_over_laurent, poly_op
from .seifert import (
    GEOMETRIC,
    MINIMAL_SEIFERT,
    OTHER,
    TRIVIAL_ALEXANDER,
    SeifertMatrix,
    add_tube,
    alexander,
    classify_basis_form,
    congruence,
    intersection_matrix,
    is_symplectic,
    search_minimal_basis,
    seifert_rank,
    symplectic_form,
    symplectic_generators,
    triangular_dualize,
    tube_history_to_matrix,
)
from .ltheta import (
    AmbientPoly,
    ThetaElement,
    ambient_op,
    augment,
    canonical_orbit_triples,
    generator_element,
    membership,
    minimal_rank_generators,
    orbit_canonical,
    orbit_images,
    project,
    realize_decompose,
    recombine,
    window_rank_gap,
)
from .diagrams import (
    EyesDiagram,
    ThetaDiagram,
    eyes_value,
    holonomy_normalize,
    reduce_eyes,
    theta_normal_form,
    theta_value,
)
from .claspers import (
    Leaf,
    StandardSurface,
    WheelClasper,
    YClasper,
    YPair,
    claspers_from_json_obj,
    claspers_to_json_obj,
    contract,
    equivariant_lk,
    q_surgery,
    realize_claspers,
    wheel_value,
)

__version__ = "0.1.0"
