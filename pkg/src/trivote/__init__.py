"""Three-candidate voting rules and an exhaustive verification harness.

The package is organized in five layers: :mod:`trivote.core` (profiles,
margins, ordinal classification), :mod:`trivote.rules` (the voting rules,
table-driven where possible), :mod:`trivote.axioms` (finite exhaustive axiom
checkers with replayable witnesses), :mod:`trivote.enumeration` (profile
counting, irresoluteness frequencies, predicate search), and
:mod:`trivote.satgen` (CNF export and mechanical proof replays).  The
``trivote`` command line in :mod:`trivote.cli` fronts all of them.
"""

from .core import (
    ChoiceSet,
    Margins,
    Profile,
    choice_set_to_str,
    classify,
    combine,
    condorcet_winner,
    format_profile,
    margins,
    mcgarvey,
    parse_choice_set,
    parse_profile,
)
from .rules import ALL_RULE_IDS, TABLE_RULE_IDS, evaluate

__version__ = "0.1.0"

__all__ = [
    "ALL_RULE_IDS",
    "ChoiceSet",
    "Margins",
    "Profile",
    "TABLE_RULE_IDS",
    "__version__",
    "choice_set_to_str",
    "classify",
    "combine",
    "condorcet_winner",
    "evaluate",
    "format_profile",
    "margins",
    "mcgarvey",
    "parse_choice_set",
    "parse_profile",
]
