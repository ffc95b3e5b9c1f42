"""Two machine checks that no Condorcet extension is reinforcing.

First the human-readable route: scripted case analyses whose every claim is
re-verified by margin arithmetic at run time.  Then the machine route: compile
"Condorcet extension + reinforcement up to n voters" to CNF and watch it go
from satisfiable to unsatisfiable.

Run:  python3 demos/05_impossibility.py
"""

import time

from trivote import satgen

# --- scripted proofs --------------------------------------------------------
for script_id in satgen.SCRIPT_IDS:
    script = satgen.proof_replay(script_id)
    assert script.ok
    print(f"replay {script_id}: {len(script.steps)} steps pass")
print()
print(satgen.proof_replay("4.5").render())

# --- CNF route ---------------------------------------------------------------
# without neutrality the constraint is satisfiable surprisingly long: the
# hand-built rule from demo 03 is a model of the 7-voter instance
print()
inst7 = satgen.build_instance(7)
print(f"bound-7 instance: {inst7.num_vars} vars, {inst7.num_clauses} clauses")
print("hand-built rule is a model:", satgen.check_assignment(inst7, "artificial"))
print("leximin is a model of bound 4:",
      satgen.check_assignment(satgen.build_instance(4), "leximin"))

# with neutrality the 5-voter instance is already unsatisfiable -- that is the
# impossibility theorem, re-proved by the bundled DPLL solver in milliseconds
for bound in (4, 5):
    inst = satgen.build_instance(bound, neutrality=True)
    t0 = time.perf_counter()
    sat = satgen.solve_naive(inst)
    print(f"neutral bound-{bound} instance ({inst.num_vars} vars, "
          f"{inst.num_clauses} clauses): "
          f"{'satisfiable' if sat else 'UNSATISFIABLE'} "
          f"[{time.perf_counter() - t0:.2f}s]")

# anything bigger: export DIMACS and hand it to a real solver
text = satgen.dimacs_text(satgen.build_instance(5, neutrality=True))
print()
print("DIMACS export, first lines:")
for line in text.splitlines()[:6]:
    print("   ", line)
