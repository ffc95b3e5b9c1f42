"""Poke at the margin layer: parse profiles, classify them, build them back.

Run:  python3 demos/01_margins_and_classes.py
"""

from trivote import core
from trivote.core import classify, format_profile, margins, mcgarvey, parse_profile

profile = parse_profile("3abc+1bca+2cab")
m = margins(profile)
print("profile:", format_profile(profile))
print("margins (m_ab, m_ac, m_bc):", m)
print("Condorcet winner:", core.condorcet_winner(m))

# no Condorcet winner -> the profile lands in one of 12 ordinal classes
cycle = parse_profile("1abc+1bca+1cab")
cls = classify(margins(cycle))
print()
print("profile:", format_profile(cycle))
print("margins:", margins(cycle), "-> class", cls.kind, "relabel", cls.relabel)

# every same-parity margin triple is hit by some profile (and the builder
# round-trips exactly, which is what makes margin-level search trustworthy)
for target in [(1, 1, 1), (-3, 5, 1), (0, 2, -4), (9, -9, 9)]:
    built = mcgarvey(target)
    assert margins(built) == target
    print(f"target {target}:  {format_profile(built)}  "
          f"({core.total_voters(built)} voters)")

# the classes of all 4-voter profiles, as a quick census
from collections import Counter

from trivote.enumeration import enumerate_profiles

census = Counter()
for p in enumerate_profiles(4):
    mm = margins(p)
    if core.condorcet_winner(mm) is not None:
        census["CW"] += 1
    else:
        census[classify(mm).kind] += 1
print()
print("4-voter profiles by class:", dict(sorted(census.items())))
