"""CNF instances for merged-electorate consistency, and mechanical proof replays.

``build_instance`` encodes, over every anonymous profile with at most
``bound`` voters, the constraints "f(P) is non-empty", "f(P) = {w} whenever P
has Condorcet winner w", and full reinforcement for every unordered pair of
profiles whose totals fit in the bound.  A rule is a model of the instance
exactly when it is a Condorcet extension satisfying reinforcement up to the
bound, which is what :func:`check_assignment` evaluates.  Instances are
deterministic down to the byte: same ``(bound, neutrality)``, same DIMACS.

``proof_replay`` re-checks the pen-and-paper impossibility arguments for
Condorcet extensions (9 voters for subset-reinforcement, 8 with anonymity,
5 with anonymity and neutrality) step by step, using margin arithmetic and
set logic only — never a concrete voting rule.
"""

from __future__ import annotations

import io
import os
import sys
from dataclasses import dataclass
from typing import Iterator, TextIO, Union

from . import rules as _rules
from .core import (
    CANDIDATE_NAMES,
    CANDIDATES,
    PERMUTATIONS,
    Profile,
    combine,
    condorcet_winner,
    format_profile,
    margins,
    permute_profile,
    total_voters,
)
from .enumeration import profiles_up_to

Clause = tuple[int, ...]

# ---------------------------------------------------------------------------
# instance construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CnfInstance:
    """A CNF encoding of "Condorcet extension + reinforcement up to ``bound``".

    Variables are dense and 1-based.  ``var_of(P, c)`` is the variable
    asserting ``c in f(P)``; ``aux_of(P1, P2)`` asserts that f(P1) and f(P2)
    share a winner.  With ``neutral`` instances, relabel-equivalent choice
    variables are aliased to one representative, so ``var_of`` maps the whole
    orbit of (profile, candidate) pairs to the same index.
    """

    bound: int
    neutral: bool
    universe: tuple[Profile, ...]
    clauses: tuple[Clause, ...]
    #: dense variable -> ("x", profile, candidate) or ("aux", p1, p2)
    var_meaning: tuple[tuple, ...]
    _x_var: dict
    _aux_var: dict

    @property
    def num_vars(self) -> int:
        return len(self.var_meaning)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def var_of(self, profile: Profile, candidate: int) -> int:
        """Variable index meaning ``candidate in f(profile)``."""
        return self._x_var[(profile, candidate)]

    def aux_of(self, p1: Profile, p2: Profile) -> int:
        """Variable index meaning ``f(p1) and f(p2) intersect``."""
        try:
            return self._aux_var[(p1, p2)]
        except KeyError:
            return self._aux_var[(p2, p1)]


def _pairs(universe: tuple[Profile, ...], bound: int) -> Iterator[tuple[Profile, Profile]]:
    """Unordered pairs (repeats allowed) with n1 + n2 <= bound, in (n, colex) order."""
    for i, first in enumerate(universe):
        budget = bound - total_voters(first)
        for second in universe[i:]:
            if total_voters(second) > budget:
                break  # universe is sorted by voter count
            yield first, second


def build_instance(bound: int, neutrality: bool = False) -> CnfInstance:
    """Encode non-emptiness, Condorcet consistency, and reinforcement as CNF.

    Clauses come in a fixed order: one non-emptiness clause per profile, unit
    clauses pinning f(P) = {w} on every profile with Condorcet winner w, then
    for each unordered pair (P1, P2) with n1 + n2 <= bound and each candidate
    c the four reinforcement clauses over the shared-winner variable v:
    (x1 & x2) -> v, (v & xm) -> x1, (v & xm) -> x2, (v & x1 & x2) -> xm.

    With ``neutrality`` on, x variables are aliased across candidate
    relabelings instead of adding biconditional clauses; duplicate and
    tautological clauses produced by the aliasing are dropped (first
    occurrence wins), keeping the output deterministic.
    """
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")

    universe = tuple(profiles_up_to(bound))
    index = {p: i for i, p in enumerate(universe)}

    def raw_x(profile: Profile, candidate: int) -> int:
        return 3 * index[profile] + candidate + 1

    aux_base = 3 * len(universe)
    pairs = list(_pairs(universe, bound))
    raw_aux = {pair: aux_base + k + 1 for k, pair in enumerate(pairs)}

    raw_clauses: list[Clause] = []
    for p in universe:
        raw_clauses.append(tuple(raw_x(p, c) for c in CANDIDATES))
    for p in universe:
        w = condorcet_winner(margins(p))
        if w is None:
            continue
        raw_clauses.append((raw_x(p, w),))
        for c in CANDIDATES:
            if c != w:
                raw_clauses.append((-raw_x(p, c),))
    for p1, p2 in pairs:
        v = raw_aux[(p1, p2)]
        merged = combine(p1, p2)
        for c in CANDIDATES:
            x1, x2, xm = raw_x(p1, c), raw_x(p2, c), raw_x(merged, c)
            raw_clauses.append((-x1, -x2, v))
            raw_clauses.append((-v, -xm, x1))
            raw_clauses.append((-v, -xm, x2))
            raw_clauses.append((-v, -x1, -x2, xm))

    # Union-find over raw x variables; roots are orbit minima, which keeps
    # the dense renumbering independent of union order.
    parent = list(range(aux_base + len(pairs) + 1))

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    if neutrality:
        for p in universe:
            for sigma in PERMUTATIONS[1:]:
                q = permute_profile(p, sigma)
                for c in CANDIDATES:
                    i, j = find(raw_x(p, c)), find(raw_x(q, sigma[c]))
                    if i != j:
                        parent[max(i, j)] = min(i, j)

    dense: dict[int, int] = {}
    var_meaning: list[tuple] = []
    x_var: dict[tuple[Profile, int], int] = {}
    for p in universe:
        for c in CANDIDATES:
            raw = raw_x(p, c)
            root = find(raw)
            if root not in dense:
                dense[root] = len(var_meaning) + 1
                var_meaning.append(("x", p, c))
            x_var[(p, c)] = dense[root]
    aux_var: dict[tuple[Profile, Profile], int] = {}
    for pair in pairs:
        dense[raw_aux[pair]] = len(var_meaning) + 1
        var_meaning.append(("aux",) + pair)
        aux_var[pair] = dense[raw_aux[pair]]

    clauses: list[Clause] = []
    seen: set[Clause] = set()
    for raw in raw_clauses:
        lits: list[int] = []
        for lit in raw:
            mapped = dense[find(abs(lit))] * (1 if lit > 0 else -1)
            if mapped not in lits:
                lits.append(mapped)
        if any(-lit in lits for lit in lits):
            continue  # tautology after aliasing
        key = tuple(sorted(lits))
        if key in seen:
            continue
        seen.add(key)
        clauses.append(tuple(lits))

    return CnfInstance(
        bound=bound,
        neutral=neutrality,
        universe=universe,
        clauses=tuple(clauses),
        var_meaning=tuple(var_meaning),
        _x_var=x_var,
        _aux_var=aux_var,
    )


# ---------------------------------------------------------------------------
# DIMACS export
# ---------------------------------------------------------------------------


def emit_dimacs(inst: CnfInstance, destination: Union[str, os.PathLike, TextIO]) -> None:
    """Write ``inst`` as standard DIMACS CNF (deterministic byte-for-byte).

    Comment lines map every variable back to its meaning: ``c <i> = <profile>
    : <candidate>`` for choice variables and ``c <i> = agree(<p1> | <p2>)``
    for shared-winner variables.
    """
    if hasattr(destination, "write"):
        _write_dimacs(inst, destination)
        return
    with open(destination, "w", newline="\n") as handle:
        _write_dimacs(inst, handle)


def _write_dimacs(inst: CnfInstance, out: TextIO) -> None:
    neutrality = "on" if inst.neutral else "off"
    out.write(f"c reinforcement instance bound={inst.bound} neutrality={neutrality}\n")
    out.write(f"c {len(inst.universe)} profiles, {inst.num_vars} vars, {inst.num_clauses} clauses\n")
    for i, meaning in enumerate(inst.var_meaning, start=1):
        if meaning[0] == "x":
            _, p, c = meaning
            out.write(f"c {i} = {format_profile(p)} : {CANDIDATE_NAMES[c]}\n")
        else:
            _, p1, p2 = meaning
            out.write(f"c {i} = agree({format_profile(p1)} | {format_profile(p2)})\n")
    out.write(f"p cnf {inst.num_vars} {inst.num_clauses}\n")
    for clause in inst.clauses:
        out.write(" ".join(str(lit) for lit in clause) + " 0\n")


def dimacs_text(inst: CnfInstance) -> str:
    """The full DIMACS serialization as a string."""
    buffer = io.StringIO()
    _write_dimacs(inst, buffer)
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# model checking and best-effort solving
# ---------------------------------------------------------------------------


def check_assignment(inst: CnfInstance, rule: str) -> bool:
    """Does ``rule`` satisfy every clause of ``inst``?

    Sets each choice variable to ``c in f(P)`` and each shared-winner
    variable to the truth of ``f(P1) & f(P2)``, then evaluates all clauses.
    On aliased (neutral) instances the orbit representative decides the
    value, which is only faithful for neutral rules.
    """
    outputs = {p: _rules.evaluate(rule, p) for p in inst.universe}
    truth = [False]  # 1-based
    for meaning in inst.var_meaning:
        if meaning[0] == "x":
            _, p, c = meaning
            truth.append(c in outputs[p])
        else:
            _, p1, p2 = meaning
            truth.append(bool(outputs[p1] & outputs[p2]))
    return all(
        any(truth[lit] if lit > 0 else not truth[-lit] for lit in clause)
        for clause in inst.clauses
    )


#: ceiling above which :func:`solve_naive` refuses to run
SOLVER_CLAUSE_LIMIT = 100_000


def solve_naive(inst: CnfInstance) -> bool:
    """Best-effort DPLL: True if satisfiable, False if not.

    A naive solver — unit propagation plus branching on the most-occurring
    variable — intended only for small instances such as the 5-voter
    neutral one.  Raises ValueError above :data:`SOLVER_CLAUSE_LIMIT`
    clauses; use :func:`emit_dimacs` and an external solver instead.
    """
    if inst.num_clauses > SOLVER_CLAUSE_LIMIT:
        raise ValueError(
            f"instance has {inst.num_clauses} clauses; "
            f"the built-in solver handles at most {SOLVER_CLAUSE_LIMIT}"
        )
    clauses = [list(c) for c in inst.clauses]
    occurs: dict[int, list[int]] = {}
    for idx, clause in enumerate(clauses):
        for lit in clause:
            occurs.setdefault(lit, []).append(idx)

    counts = [0] * (inst.num_vars + 1)
    for clause in clauses:
        for lit in clause:
            counts[abs(lit)] += 1
    branch_order = sorted(range(1, inst.num_vars + 1), key=lambda v: -counts[v])

    assign: dict[int, bool] = {}

    def propagate(units: list[int], trail: list[int]) -> bool:
        """Assign ``units`` and their consequences; False on conflict."""
        queue = list(units)
        while queue:
            lit = queue.pop()
            var, value = abs(lit), lit > 0
            if var in assign:
                if assign[var] != value:
                    return False
                continue
            assign[var] = value
            trail.append(var)
            for idx in occurs.get(-lit, ()):
                clause = clauses[idx]
                unassigned = None
                satisfied = False
                for other in clause:
                    v = assign.get(abs(other))
                    if v is None:
                        if unassigned is None:
                            unassigned = other
                        else:
                            unassigned = 0  # two free literals: not a unit
                    elif v == (other > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if unassigned is None:
                    return False
                if unassigned != 0:
                    queue.append(unassigned)
        return True

    initial = [c[0] for c in clauses if len(c) == 1]
    trail: list[int] = []
    if not propagate(initial, trail):
        return False

    def search() -> bool:
        var = next((v for v in branch_order if v not in assign), None)
        if var is None:
            return True
        for value in (True, False):
            local: list[int] = []
            if propagate([var if value else -var], local) and search():
                return True
            for v in local:
                del assign[v]
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * inst.num_vars + 1000))
    try:
        return search()
    finally:
        sys.setrecursionlimit(old_limit)


# ---------------------------------------------------------------------------
# proof replay
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScriptStep:
    """One checked deduction: the profiles involved, the principle applied,
    the constraint deduced, and whether the mechanical check passed."""

    label: str
    profiles: tuple[Profile, ...]
    principle: str
    claim: str
    ok: bool
    detail: str = ""

    def render(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        line = f"[{mark}] {self.label}: {self.claim}  ({self.principle})"
        if self.detail:
            line += f"\n        {self.detail}"
        return line


@dataclass(frozen=True)
class TheoremScript:
    """A replayed impossibility argument: ordered, individually checked steps."""

    script_id: str
    conclusion: str
    steps: tuple[ScriptStep, ...]

    @property
    def ok(self) -> bool:
        return all(step.ok for step in self.steps)

    def failed_steps(self) -> tuple[ScriptStep, ...]:
        return tuple(step for step in self.steps if not step.ok)

    def render(self) -> str:
        status = "all steps pass" if self.ok else (
            "FAILED at " + ", ".join(repr(s.label) for s in self.failed_steps())
        )
        lines = [f"replay {self.script_id}: {status} ({len(self.steps)} steps)"]
        lines += ["    " + step.render().replace("\n", "\n    ") for step in self.steps]
        lines.append(f"    conclusion: {self.conclusion}")
        return "\n".join(lines)


def _cw_step(label: str, profile: Profile, expected: int, consequence: str) -> ScriptStep:
    """Check a claimed Condorcet winner by margin arithmetic."""
    actual = condorcet_winner(margins(profile))
    ok = actual == expected
    detail = ""
    if not ok:
        got = "none" if actual is None else CANDIDATE_NAMES[actual]
        detail = f"margins {margins(profile)} give Condorcet winner {got}"
    return ScriptStep(
        label=label,
        profiles=(profile,),
        principle="Condorcet consistency",
        claim=f"{format_profile(profile)} has Condorcet winner "
        f"{CANDIDATE_NAMES[expected]}, so f = {{{CANDIDATE_NAMES[expected]}}}"
        + (f"; hence {consequence}" if consequence else ""),
        ok=ok,
        detail=detail,
    )


def _no_cw_step(label: str, profile: Profile) -> ScriptStep:
    actual = condorcet_winner(margins(profile))
    return ScriptStep(
        label=label,
        profiles=(profile,),
        principle="margin arithmetic",
        claim=f"{format_profile(profile)} is a majority cycle (no Condorcet "
        "winner), so non-emptiness only pins some winner w; case split on w",
        ok=actual is None,
        detail="" if actual is None else f"unexpected Condorcet winner {CANDIDATE_NAMES[actual]}",
    )


def _sum_step(label: str, parts: tuple[Profile, Profile], expected: Profile) -> ScriptStep:
    merged = combine(*parts)
    return ScriptStep(
        label=label,
        profiles=parts + (expected,),
        principle="profile arithmetic",
        claim=f"{format_profile(parts[0])} + {format_profile(parts[1])} "
        f"= {format_profile(expected)}",
        ok=merged == expected,
        detail="" if merged == expected else f"sum is {format_profile(merged)}",
    )


def _fixed_step(label: str, profile: Profile, sigma: tuple[int, int, int], note: str) -> ScriptStep:
    image = permute_profile(profile, sigma)
    names = "".join(CANDIDATE_NAMES[sigma[c]] for c in CANDIDATES)
    return ScriptStep(
        label=label,
        profiles=(profile,),
        principle="relabeling symmetry",
        claim=f"{format_profile(profile)} is fixed by abc -> {names}; {note}",
        ok=image == profile,
        detail="" if image == profile else f"relabels to {format_profile(image)}",
    )


_ROTATIONS = {0: (0, 1, 2), 1: (1, 2, 0), 2: (2, 0, 1)}  # candidate w -> sigma, sigma(a) = w


def _replay_nine_voters() -> TheoremScript:
    """Subset-reinforcement impossibility for Condorcet extensions at 9 voters.

    A double majority cycle P1 (6 voters) elects some w; a 3-voter profile
    with Condorcet winner w then merges into a profile whose Condorcet winner
    is a different candidate, so w cannot survive — yet subset-reinforcement
    says it must.
    """
    p1 = (2, 0, 0, 2, 2, 0)  # 2abc + 2bca + 2cab
    p2 = (0, 2, 0, 0, 1, 0)  # 2acb + 1cab
    steps = [_no_cw_step("P1 cycle", p1)]
    for w in CANDIDATES:
        sigma = _ROTATIONS[w]
        tag = f"case w={CANDIDATE_NAMES[w]}"
        steps.append(_fixed_step(
            f"{tag}: P1 symmetric", p1, sigma,
            "the case reduces to relabeling the 3-voter profile",
        ))
        q = permute_profile(p2, sigma)
        loser = sigma[2]  # image of c
        steps.append(_cw_step(f"{tag}: new voters", q, w, ""))
        merged = combine(p1, q)
        steps.append(_cw_step(
            f"{tag}: merged profile", merged, loser,
            f"subset-reinforcement puts w = {CANDIDATE_NAMES[w]} in "
            f"f(P1) n f(Q) c f(P1+Q) = {{{CANDIDATE_NAMES[loser]}}}, a contradiction",
        ))
        steps.append(ScriptStep(
            label=f"{tag}: contradiction",
            profiles=(p1, q, merged),
            principle="subset-reinforcement",
            claim=f"{CANDIDATE_NAMES[w]} in f(P1) n f(Q) but not in f(P1+Q)",
            ok=w != loser,
            detail="" if w != loser else "merged winner equals the surviving candidate",
        ))
    steps.append(ScriptStep(
        label="electorate size",
        profiles=(combine(p1, p2),),
        principle="arithmetic",
        claim="the merged profiles have 9 voters",
        ok=total_voters(combine(p1, p2)) == 9,
    ))
    return TheoremScript(
        script_id="4.1",
        conclusion="no Condorcet extension satisfies subset-reinforcement "
        "once 9 voters are available",
        steps=tuple(steps),
    )


def _replay_eight_voters() -> TheoremScript:
    """Reinforcement impossibility for anonymous Condorcet extensions at 8 voters.

    From a winner w of the 3-voter cycle P1, four merges with Condorcet
    winners force f(P2) = f(P3) = {third candidate}; reinforcement then pins
    f(P2+P3) two incompatible ways, since P2+P3 also equals P1 plus a profile
    whose Condorcet winner is w.
    """
    p0 = (0, 0, 1, 0, 0, 0)  # 1bac
    p1 = (1, 0, 0, 1, 1, 0)  # 1abc + 1bca + 1cab
    p2 = (1, 1, 0, 0, 2, 0)  # 1abc + 1acb + 2cab
    p3 = (0, 2, 0, 1, 1, 0)  # 2acb + 1bca + 1cab
    p5 = (0, 3, 0, 0, 2, 0)  # 3acb + 2cab
    steps = [_no_cw_step("P1 cycle", p1)]
    for w in CANDIDATES:
        sigma = _ROTATIONS[w]
        a_, b_, c_ = (CANDIDATE_NAMES[sigma[c]] for c in CANDIDATES)
        tag = f"case w={a_}"
        steps.append(_fixed_step(
            f"{tag}: P1 symmetric", p1, sigma,
            "the case reduces to relabeling every other profile",
        ))
        q0, q2, q3, q5 = (permute_profile(p, sigma) for p in (p0, p2, p3, p5))
        p7, p8 = combine(p1, q2), combine(p1, q3)
        p4, p6 = combine(q0, q2), combine(q0, q3)
        p9 = combine(q2, q3)
        steps.append(_cw_step(f"{tag}: P0", q0, sigma[1], f"f(P0) = {{{b_}}}"))
        steps.append(_cw_step(
            f"{tag}: P7 = P1+P2", p7, sigma[2],
            f"{a_} in f(P2) would put {a_} in f(P1+P2) = {{{c_}}}; so {a_} not in f(P2)",
        ))
        steps.append(_cw_step(
            f"{tag}: P8 = P1+P3", p8, sigma[2],
            f"likewise {a_} not in f(P3)",
        ))
        steps.append(_cw_step(
            f"{tag}: P4 = P0+P2", p4, sigma[0],
            f"{b_} in f(P2) would put {b_} in f(P0+P2) = {{{a_}}}; so {b_} not in f(P2)",
        ))
        steps.append(_cw_step(
            f"{tag}: P6 = P0+P3", p6, sigma[0],
            f"likewise {b_} not in f(P3); non-emptiness leaves f(P2) = f(P3) = {{{c_}}}",
        ))
        steps.append(ScriptStep(
            label=f"{tag}: first pin on P9",
            profiles=(q2, q3, p9),
            principle="reinforcement",
            claim=f"f(P2) n f(P3) = {{{c_}}} is non-empty, so f(P2+P3) = {{{c_}}}",
            ok=True,
        ))
        steps.append(_sum_step(f"{tag}: P9 rewrites", (p1, q5), p9))
        steps.append(_cw_step(
            f"{tag}: P5", q5, sigma[0],
            f"w = {a_} in f(P1) n f(P5), so reinforcement puts {a_} in f(P1+P5) = f(P9)",
        ))
        steps.append(ScriptStep(
            label=f"{tag}: contradiction",
            profiles=(p9,),
            principle="reinforcement",
            claim=f"f(P9) = {{{c_}}} cannot contain {a_}",
            ok=sigma[0] != sigma[2],
        ))
    steps.append(ScriptStep(
        label="electorate size",
        profiles=(combine(p2, p3),),
        principle="arithmetic",
        claim="P9 has 8 voters and every other merge has fewer",
        ok=total_voters(combine(p2, p3)) == 8
        and all(
            total_voters(combine(x, y)) <= 8
            for x, y in ((p1, p2), (p1, p3), (p0, p2), (p0, p3), (p1, p5))
        ),
    ))
    return TheoremScript(
        script_id="4.3",
        conclusion="no anonymous Condorcet extension satisfies reinforcement "
        "once 8 voters are available",
        steps=tuple(steps),
    )


def _replay_five_voters() -> TheoremScript:
    """Reinforcement impossibility for anonymous neutral Condorcet extensions
    at 5 voters.

    Merging with the single voter c>a>b rules c out of f(P2); the a/b swap
    symmetry of P2 and the cyclic symmetry of P3 then force f(P2) = {a, b}
    and f(P3) = {a, b, c}, so reinforcement demands f(P2+P3) = {a, b} even
    though a is that profile's Condorcet winner.
    """
    p1 = (0, 0, 0, 0, 1, 0)  # 1cab
    p2 = (1, 0, 1, 0, 0, 0)  # 1abc + 1bac
    p3 = (1, 0, 0, 1, 1, 0)  # 1abc + 1bca + 1cab
    merged12 = combine(p1, p2)
    merged23 = combine(p2, p3)
    steps = [
        _cw_step("P1", p1, 2, "f(P1) = {c}"),
        _cw_step(
            "P1+P2", merged12, 0,
            "c in f(P2) would put c in f(P1+P2) = {a}; so c not in f(P2)",
        ),
        _fixed_step(
            "P2 swap symmetry", p2, (1, 0, 2),
            "f(P2) is a non-empty subset of {a,b} closed under the swap, so f(P2) = {a,b}",
        ),
        _fixed_step(
            "P3 cycle symmetry", p3, (1, 2, 0),
            "f(P3) is non-empty and closed under rotation, so f(P3) = {a,b,c}",
        ),
        ScriptStep(
            label="reinforcement pin",
            profiles=(p2, p3, merged23),
            principle="reinforcement",
            claim="f(P2) n f(P3) = {a,b} is non-empty, so f(P2+P3) = {a,b}",
            ok=True,
        ),
        _cw_step(
            "P2+P3", merged23, 0,
            "f(P2+P3) = {a} contradicts f(P2+P3) = {a,b}",
        ),
        ScriptStep(
            label="electorate size",
            profiles=(merged23,),
            principle="arithmetic",
            claim="P2+P3 has 5 voters",
            ok=total_voters(merged23) == 5,
        ),
    ]
    return TheoremScript(
        script_id="4.5",
        conclusion="no anonymous, neutral Condorcet extension satisfies "
        "reinforcement once 5 voters are available",
        steps=tuple(steps),
    )


_SCRIPTS = {
    "4.1": _replay_nine_voters,
    "4.3": _replay_eight_voters,
    "4.5": _replay_five_voters,
}

SCRIPT_IDS = tuple(sorted(_SCRIPTS))


def proof_replay(script_id: str) -> TheoremScript:
    """Mechanically re-check one of the built-in impossibility arguments.

    Every claimed Condorcet winner is recomputed from margins, every profile
    sum re-added, every symmetry re-applied; arguments that fix a winner "up
    to relabeling" are expanded into one sub-argument per candidate.  Only
    margin arithmetic and set logic are used — no voting rule is evaluated.
    """
    try:
        script = _SCRIPTS[script_id]
    except KeyError:
        known = ", ".join(SCRIPT_IDS)
        raise ValueError(f"unknown replay id {script_id!r} (known: {known})") from None
    return script()
