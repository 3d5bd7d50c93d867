"""McKay quivers, path dimensions and invariant rings for group gradings
on k<u,v>/(u^2 - v^2) with deg u = a, deg v = b."""

from .coaction import CoactionPair, alternating_list, validate_pair
from .dimensions import (
    AuslanderEvidence,
    DimensionResult,
    auslander_check,
    graded_dimension,
    lambda_mod_e1,
    quotient_dimension,
)
from .errors import (
    AbelianGroup,
    CosetLimitExceeded,
    McKayError,
    MethodDisagreement,
    MissingSquareRelation,
    NotInnerFaithful,
    PresentationSyntaxError,
    TrivialGroup,
    ValidationError,
)
from .group import Group, element_order, enumerate_group, generated_subgroup, group_from_text
from .invariants import (
    InvariantReport,
    OccurrenceMonoid,
    canonical_monomial,
    hilbert_basis,
    hilbert_series,
    invariant_report,
    occurrence_monoid,
    regularity_check,
    relation_search,
    smallest_invariant_u_power,
)
from .lattice import (
    McKayQuiver,
    ToroidalLattice,
    build_mckay_quiver,
    export_quiver,
    lattice_label,
    toroidal_grid,
)
from .presentation import Presentation, gamma_m_presentation, parse_presentation, parse_word

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
