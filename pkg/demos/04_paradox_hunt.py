"""Hunt for paradoxes by brute force instead of trusting folklore.

Everything here is an exhaustive scan over anonymous profiles in a fixed
order, so "first witness" is a well-defined, reproducible object.

Run:  python3 demos/04_paradox_hunt.py
"""

from trivote import axioms, core, enumeration, rules
from trivote.core import format_profile, margins, parse_profile

# 1. scoring rules vs Condorcet winners ------------------------------------
# a profile where b out-scores a under EVERY strictly monotone score vector
# although a beats both rivals head to head
classic = parse_profile("30abc+1acb+29bac+10bca+10cab+1cba")
assert core.condorcet_winner(margins(classic)) == core.A
assert rules.dominates_all_scoring(classic, core.B, "strict")
print("81 voters: a is the Condorcet winner, every strict scoring rule picks b")


def weak_override(profile):
    w = core.condorcet_winner(margins(profile))
    if w is None:
        return False
    return any(rules.dominates_all_scoring(profile, x, "weak")
               for x in core.CANDIDATES if x != w)


hits = enumeration.search(weak_override, 11, mode="first")
print("smallest weak-mode analogue:", format_profile(hits[0]),
      f"({core.total_voters(hits[0])} voters; none exist below 11)")

# 2. more voters for you can mean you lose ----------------------------------
# Nanson: promoting the winner b by one adjacent swap makes it tie with a
report = axioms.check_responsiveness("nanson", "positive", 8, max_witnesses=1)
print()
print("nanson positive responsiveness:", report.verdict)
print("   ", report.witnesses[0].render())
print("    (b was winning and got promoted, yet failed to become the unique winner)")

# 3. showing up can hurt -----------------------------------------------------
# strict Nanson: a joining voter's top candidate was winning and stops
report = axioms.check_participation("strict_nanson", "positive_involvement", 7,
                                    max_witnesses=1)
w = report.witnesses[0]
print()
print("strict_nanson positive involvement:", report.verdict)
print("   ", w.render())

# the four headline refinements never do this (exhaustive to 8 voters)
for rule_id in ("maximin", "leximin", "nanson", "stable_voting"):
    assert axioms.check_participation(rule_id, "optimist", 8).holds
print("maximin / leximin / nanson / stable_voting: optimist participation to 8")

# 4. how often do rules tie, anyway? ----------------------------------------
print()
print("fraction of profiles with a tied outcome (even n):")
print("  n   maximin   nanson    leximin   black")
for n in (4, 10, 20, 30):
    row = [f"{float(enumeration.irresoluteness(r, n).fraction):.6f}"
           for r in ("maximin", "nanson", "leximin", "black")]
    print(f"  {n:<3d} " + "  ".join(row))
print("(leximin breaks almost every tie maximin leaves; all curves fall with n)")
