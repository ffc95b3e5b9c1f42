"""Tour the rule zoo on one profile, then check the whole class table.

Run:  python3 demos/02_rule_tour.py
"""

from trivote import core, rules
from trivote.core import choice_set_to_str, margins, parse_profile

prof = parse_profile("4abc+2bca+3cab")  # 9 voters, majority cycle
print("profile 4abc+2bca+3cab, margins", margins(prof))
print()
for rule_id in rules.ALL_RULE_IDS:
    winners = rules.evaluate(rule_id, prof)
    print(f"  {rule_id:16s} {choice_set_to_str(winners)}")

# the coarse rules keep the whole cycle alive, maximin and below cut it to {a};
# scoring rules disagree with all of them here
print()
print("borda scores:", core.borda_scores(margins(prof)))

# the ordinal class table compresses all of this: on profiles without a
# Condorcet winner a rule's output only depends on the class (up to
# relabeling), so 12 columns describe each rule completely
print()
header = "rule".ljust(16) + " " + " ".join(c.center(3) for c in core.CLASS_LETTERS)
print(header)
for rule_id in rules.TABLE_RULE_IDS:
    if rule_id in rules.RULE_ALIASES:
        continue
    row = " ".join(cell.center(3) for cell in rules.table_cells(rule_id))
    print(rule_id.ljust(16) + " " + row)

# spot-check: evaluating on each class representative reproduces its column
for letter, rep in rules.CLASS_REPRESENTATIVES.items():
    for rule_id in ("maximin", "leximin", "nanson"):
        assert rules.evaluate(rule_id, rep) == rules.table_rule(rule_id, rep)
print()
print("table spot-check on the class representatives: ok")

# maximin travels under four other names
for twin in ("split_cycle", "beat_path", "ranked_pairs", "kemeny"):
    assert rules.evaluate(twin, prof) == rules.evaluate("maximin", prof)
print("split_cycle / beat_path / ranked_pairs / kemeny agree with maximin here")
