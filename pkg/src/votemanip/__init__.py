"""Strategic-voting analysis when voters are unsure which method will be used.

A voter who knows the method in use can often gain by misreporting their
ranking.  This package asks what survives of that ability when the voter
only knows the method lies in some finite set: each insincere ballot then
yields one winner set per method, and the notions in
:mod:`votemanip.manipulation` grade a switch by how those outcomes compare
to the sincere ones.  :mod:`votemanip.census` counts witnessing profiles
over whole profile spaces, exactly or by sampling, and
:mod:`votemanip.pscf` treats the method set as a lottery instead.
"""

from .census import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    CensusReport,
    CensusResult,
    CensusSpec,
    EliminationScanReport,
    PairTable,
    elimination_scan,
    enumerate_profiles,
    pair_table,
    report_csv,
    report_json,
    run_census,
    sample_profiles,
)
from .core import (
    PairwiseTally,
    Profile,
    ProfileFormatError,
    Ranking,
    all_rankings,
    default_labels,
    format_profile_json,
    format_profile_text,
    pairwise_tally,
    parse_profile_json,
    parse_profile_text,
    read_profile_file,
)
from .dominance import KINDS, dominates_nonstrict, dominates_strict
from .manipulation import (
    NOTIONS,
    EliminationReport,
    ImprovementReport,
    MethodOutcome,
    UncertaintySet,
    Witness,
    add_24_voters,
    add_bottom_candidate,
    add_two_voters,
    classify_transition,
    eliminates,
    find_expected,
    find_harmless,
    find_manipulation,
    find_safe,
    find_sure,
    improves_on_all_subsets,
    less_susceptible,
    method_set,
    notion_holds,
    profile_witnesses,
)
from .methods import (
    METHOD_ORDER,
    METHODS,
    VotingMethod,
    baldwin,
    borda,
    condorcet,
    coombs,
    copeland,
    hare,
    maxmin,
    pairwise_dictator,
    parse_method,
    plurality,
    plurality_with_runoff,
    positional_winners,
    strict_nanson,
    tiebroken,
    weak_nanson,
)
from .pscf import (
    SDWitness,
    find_sd_manipulation,
    induced_lottery,
    lottery_strings,
    stochastically_dominates,
)
from .verify import TARGETS, VerifyReport, run_target

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CensusReport",
    "CensusResult",
    "CensusSpec",
    "DEFAULT_BUDGET",
    "EliminationReport",
    "EliminationScanReport",
    "ImprovementReport",
    "KINDS",
    "METHODS",
    "METHOD_ORDER",
    "MethodOutcome",
    "NOTIONS",
    "PairTable",
    "PairwiseTally",
    "Profile",
    "ProfileFormatError",
    "Ranking",
    "SDWitness",
    "TARGETS",
    "UncertaintySet",
    "VerifyReport",
    "VotingMethod",
    "Witness",
    "add_24_voters",
    "add_bottom_candidate",
    "add_two_voters",
    "all_rankings",
    "baldwin",
    "borda",
    "classify_transition",
    "condorcet",
    "coombs",
    "copeland",
    "default_labels",
    "dominates_nonstrict",
    "dominates_strict",
    "eliminates",
    "elimination_scan",
    "enumerate_profiles",
    "find_expected",
    "find_harmless",
    "find_manipulation",
    "find_safe",
    "find_sd_manipulation",
    "find_sure",
    "format_profile_json",
    "format_profile_text",
    "hare",
    "improves_on_all_subsets",
    "induced_lottery",
    "less_susceptible",
    "lottery_strings",
    "maxmin",
    "method_set",
    "notion_holds",
    "pair_table",
    "pairwise_dictator",
    "pairwise_tally",
    "parse_method",
    "parse_profile_json",
    "parse_profile_text",
    "plurality",
    "plurality_with_runoff",
    "positional_winners",
    "profile_witnesses",
    "read_profile_file",
    "report_csv",
    "report_json",
    "run_census",
    "run_target",
    "sample_profiles",
    "stochastically_dominates",
    "strict_nanson",
    "tiebroken",
    "weak_nanson",
]
