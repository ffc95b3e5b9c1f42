"""How far can a Condorcet extension stay consistent under merging?

Merging two electorates that agree on some winners should leave exactly the
agreed winners (reinforcement).  No Condorcet extension manages that in
general, but a purpose-built refinement of maximin holds out up to 7 voters
total and only breaks at 8.  This script walks its whole envelope.

Run:  python3 demos/03_consistency_frontier.py  (~20 s, exhaustive sweeps)
"""

import time

from trivote import axioms, core, rules
from trivote.core import choice_set_to_str, parse_profile, t_fold

t0 = time.perf_counter()
print("full reinforcement, all electorate pairs totaling <= 7:",
      axioms.check_reinforcement("artificial", "full", 7).verdict)
print("subset reinforcement, pairs totaling <= 8:           ",
      axioms.check_reinforcement("artificial", "subset", 8).verdict)
print(f"  ({time.perf_counter() - t0:.1f}s exhaustive)")

print()
broken = axioms.check_reinforcement("artificial", "full", 8, max_witnesses=3)
print(broken.render())

# consistency under merging fails, and so does consistency under cloning the
# electorate: doubling an 8-voter profile changes the outcome
print()
prof = parse_profile("2acb+2bac+2cab+2cba")
print("f(2acb+2bac+2cab+2cba)        =",
      choice_set_to_str(rules.evaluate("artificial", prof)))
print("f(doubled, 16 voters)          =",
      choice_set_to_str(rules.evaluate("artificial", t_fold(prof, 2))))

# yet the rule is no strawman: it is monotone and never punishes a voter for
# showing up (checked exhaustively to 7 voters)
print()
print("monotonicity to 7:        ",
      axioms.check_responsiveness("artificial", "monotonicity", 7).verdict)
print("optimist participation to 7:",
      axioms.check_participation("artificial", "optimist", 7).verdict)

# for the standard rules the frontier is far lower: only three survive pairs
# totaling 4, and each of the others breaks on a 4-voter merge
print()
for rule_id in rules.TABLE_RULE_IDS:
    if rule_id in rules.RULE_ALIASES:
        continue
    report = axioms.check_reinforcement(rule_id, "full", 4, max_witnesses=1)
    line = f"  {rule_id:16s} bound 4: {report.verdict}"
    if report.witnesses:
        w = report.witnesses[0]
        line += ("  e.g. " + core.format_profile(w.profiles[0]) + "  +  "
                 + core.format_profile(w.profiles[1]))
    print(line)
