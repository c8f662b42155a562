"""nomvote: veto structure and obvious-manipulation analysis for tops-only voting rules.

A tops-only rule reads only each agent's top alternative.  The package
evaluates the classic tops-only families (fixed-ballot medians, monotone
ballot families, committee and quota voting, status-quo and dictatorial
rules, arbitrary outcome tables), computes option sets and veto power,
searches exhaustively for obvious manipulations, and cross-validates
closed-form NOM characterizations against brute-force oracles.
"""

from ._backend import backend_name, compiled_available
from .analysis import (
    AgentVetoes,
    ManipulationWitness,
    ObviousScan,
    OptionSet,
    VetoReport,
    find_obvious_manipulations,
    find_profitable_manipulations,
    is_nom_veto,
    option_set,
    option_set_closed_gmv,
    option_set_closed_mvs,
    option_set_for_preference,
    scan_obvious_manipulations,
    veto_sets,
    veto_sets_closed,
)
from .characterization import (
    NomVerdict,
    family_predicate,
    nom_corollary_anon_efficient,
    nom_corollary_efficient,
    nom_predicate_gmv,
    nom_predicate_mvs,
    nom_predicate_quota,
    nom_predicate_vbc,
)
from .domain import (
    AlternativeSpace,
    Budget,
    Preference,
    Profile,
    TopVector,
    best_in,
    default_budget,
    enumerate_preferences,
    enumerate_top_vectors,
    is_separable,
    is_single_peaked,
    linear_space,
    preference_with_top_and_bottom,
    separable_filter,
    single_peaked_filter,
    subsets_space,
    worst_in,
)
from .errors import (
    AssumptionViolatedError,
    BudgetExceededError,
    DimensionMismatchError,
    HypothesisNotVerifiedError,
    NomvoteError,
    UnsupportedFamilyError,
    WrongSpaceKindError,
)
from .oracle import (
    AxiomVerdict,
    is_anonymous,
    is_dictatorial,
    is_efficient,
    is_nom_brute,
    is_strategy_proof,
)
from .rules import (
    Committees,
    Dictatorship,
    GeneralizedMedian,
    Median,
    Quota,
    Rule,
    StatusQuo,
    TopsOnlyTable,
    build_table,
    evaluate,
    gmv_from_median,
    is_onto_tops,
    quota_to_committees,
    validate,
)

__version__ = "0.1.0"
