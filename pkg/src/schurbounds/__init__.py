"""Majorization extremal vectors under box and sum constraints, applied to second Zagreb index bounds."""
from .bounds import (
    BoundsReport,
    PendantClassSpec,
    build_constraint_set,
    closed_form_family,
    das_gutman_upper,
    family_sequence,
    zagreb_bounds,
)
from .errors import *  # noqa: F401,F403
from .graphs import (
    DegreeSequence,
    SimpleGraph,
    degree_sequence_of,
    enumerate_realizations,
    is_graphical,
    zagreb_exact,
)
from .majorization import (
    BoxedSumSet,
    ExtremalTrace,
    OrderedVector,
    TwoBlockSet,
    extremal_single_interval,
    extremal_special,
    integerize_minimal,
    majorizes,
    maximal_element,
    maximal_element_two_block,
    minimal_element,
    minimal_element_two_block,
    partial_sums,
)
from .oracle import (
    FeasibleSample,
    VerificationReport,
    enumerate_integer_feasible,
    sample_feasible,
    verify_extremal,
)

__version__ = "0.1.0"
