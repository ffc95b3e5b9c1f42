"""Command-line front door for the package.

Subcommands: ``winners`` (evaluate rules on a profile), ``table`` (the
12-class output table), ``verify`` (run an axiom checker), ``figure4``
(irresoluteness frequencies as CSV), ``satgen`` (export a CNF instance),
``replay`` (re-check a built-in impossibility argument), and ``search``
(scan small profiles for a named phenomenon).

Exit codes are uniform: 0 when the property holds or the command succeeds,
1 when a counterexample or violation is found, 2 on usage or parse errors.
Primary output goes to standard output; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import axioms, enumeration, rules, satgen
from .core import (
    CANDIDATES,
    CLASS_LETTERS,
    ORDER_NAMES,
    PERMUTATIONS,
    Profile,
    ORDER_RANKING,
    choice_set_to_str,
    condorcet_winner,
    format_profile,
    margins,
    parse_profile,
    permute_choice_set,
    permute_profile,
    t_fold,
)


def _profile_argument(text: str) -> Profile:
    try:
        return parse_profile(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# winners / table
# ---------------------------------------------------------------------------


def cmd_winners(args: argparse.Namespace) -> int:
    rule_ids = tuple(rules.ALL_RULE_IDS) if args.all else tuple(args.rule)
    lines = []
    for rule_id in rule_ids:
        try:
            winners = rules.evaluate(rule_id, args.profile)
        except rules.UnsupportedRuleError as exc:
            return _fail(str(exc))
        lines.append(f"{rule_id}: {choice_set_to_str(winners)}")
    print("\n".join(lines))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.representatives:
        print("class,profile")
        for letter in CLASS_LETTERS:
            print(f"{letter},{format_profile(rules.CLASS_REPRESENTATIVES[letter])}")
        return 0
    rule_ids = (
        [args.rule]
        if args.rule
        else [rid for rid in rules.TABLE_RULE_IDS if rid not in rules.RULE_ALIASES]
    )
    print("rule," + ",".join(CLASS_LETTERS))
    for rule_id in rule_ids:
        try:
            cells = rules.table_cells(rule_id)
        except rules.UnsupportedRuleError as exc:
            return _fail(str(exc))
        print(rule_id + "," + ",".join(cells))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

#: axiom id -> checker taking (rule_id, bound, max_witnesses)
_AXIOM_CHECKERS = {
    "reinforcement": lambda r, b, w: axioms.check_reinforcement(r, "full", b, w),
    "subset_reinforcement": lambda r, b, w: axioms.check_reinforcement(r, "subset", b, w),
    "superset_reinforcement": lambda r, b, w: axioms.check_reinforcement(r, "superset", b, w),
    "optimist_participation": lambda r, b, w: axioms.check_participation(r, "optimist", b, w),
    "positive_involvement": lambda r, b, w: axioms.check_participation(r, "positive_involvement", b, w),
    "singleton_negative_involvement": lambda r, b, w: axioms.check_participation(
        r, "singleton_negative_involvement", b, w
    ),
    "fishburn_participation": lambda r, b, w: axioms.check_participation(r, "fishburn", b, w),
    "monotonicity": lambda r, b, w: axioms.check_responsiveness(r, "monotonicity", b, max_witnesses=w),
    "positive_responsiveness": lambda r, b, w: axioms.check_responsiveness(r, "positive", b, max_witnesses=w),
    "tiebreak_positive_responsiveness": lambda r, b, w: axioms.check_responsiveness(
        r, "tiebreak_positive", b, max_witnesses=w
    ),
    "homogeneity": lambda r, b, w: axioms.check_homogeneity(r, b, w),
    "condorcet": lambda r, b, w: axioms.check_condorcet(r, "standard", b, w),
    "strong_condorcet": lambda r, b, w: axioms.check_condorcet(r, "strong", b, w),
    "neutrality": lambda r, b, w: axioms.check_neutrality(r, b, w),
}

_SPECIAL_AXIOMS = ("resolute_participation", "refinement", "continuity", "optimist_equivalence")
AXIOM_IDS = tuple(sorted(_AXIOM_CHECKERS)) + _SPECIAL_AXIOMS


def cmd_verify(args: argparse.Namespace) -> int:
    axiom, bound, cap = args.axiom, args.bound, args.max_witnesses
    try:
        if axiom == "resolute_participation":
            tiebreak = ORDER_NAMES.index(args.tiebreak)
            report = axioms.check_resolute_participation(args.rule, tiebreak, bound, cap)
        elif axiom == "refinement":
            if not args.upper:
                return _fail("--axiom refinement needs --upper <rule>")
            report = axioms.check_refinement(args.rule, args.upper, bound, cap)
        elif axiom == "optimist_equivalence":
            rule_ids = [args.rule] if args.rule else None
            report = axioms.verify_optimist_equivalence(bound, rule_ids)
        elif axiom == "continuity":
            if args.profile is None or args.profile2 is None:
                return _fail("--axiom continuity needs --profile and --profile2")
            threshold = axioms.continuity_probe(args.rule, args.profile, args.profile2, bound)
            if threshold is None:
                print(
                    f"{args.rule} continuity: no threshold up to horizon {bound} for "
                    f"{format_profile(args.profile)} against {format_profile(args.profile2)}"
                )
                return 1
            print(
                f"{args.rule} continuity: {threshold} copies of "
                f"{format_profile(args.profile)} absorb {format_profile(args.profile2)}"
            )
            return 0
        else:
            report = _AXIOM_CHECKERS[axiom](args.rule, bound, cap)
    except (rules.UnsupportedRuleError, rules.BoundExceededError, ValueError) as exc:
        return _fail(str(exc))
    print(report.render())
    return 0 if report.holds else 1


# ---------------------------------------------------------------------------
# figure4
# ---------------------------------------------------------------------------


def cmd_figure4(args: argparse.Namespace) -> int:
    if args.max_n < 4 or args.max_n % 2:
        return _fail(f"--max-n must be an even number >= 4, got {args.max_n}")
    rule_ids = [rid.strip() for rid in args.rules.split(",") if rid.strip()]
    if not rule_ids:
        return _fail("--rules must name at least one rule")
    print("n,rule,irresolute,total,fraction")
    for n in range(4, args.max_n + 1, 2):
        for rule_id in rule_ids:
            try:
                row = enumeration.irresoluteness(rule_id, n)
            except (rules.UnsupportedRuleError, rules.BoundExceededError) as exc:
                return _fail(str(exc))
            print(row.csv())
    return 0


# ---------------------------------------------------------------------------
# satgen / replay
# ---------------------------------------------------------------------------


def cmd_satgen(args: argparse.Namespace) -> int:
    try:
        instance = satgen.build_instance(args.bound, neutrality=args.neutral)
    except ValueError as exc:
        return _fail(str(exc))
    if args.out:
        satgen.emit_dimacs(instance, args.out)
        print(
            f"wrote {args.out}: {instance.num_vars} vars, {instance.num_clauses} clauses",
            file=sys.stderr,
        )
    else:
        sys.stdout.write(satgen.dimacs_text(instance))
    if args.solve:
        try:
            satisfiable = satgen.solve_naive(instance)
        except ValueError as exc:
            return _fail(str(exc))
        print("satisfiable" if satisfiable else "unsatisfiable")
    return 0


def cmd_replay(args: argparse.Namespace) -> int:
    script = satgen.proof_replay(args.id)
    print(script.render())
    return 0 if script.ok else 1


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

_RANKING_INDEX = {ranking: order for order, ranking in enumerate(ORDER_RANKING)}


def _single_swap_improvements(order: int):
    """(new order, promoted candidate) for each adjacent swap of one ballot."""
    first, second, third = ORDER_RANKING[order]
    yield _RANKING_INDEX[(second, first, third)], second
    yield _RANKING_INDEX[(first, third, second)], third


def _weak_scoring_overrides_condorcet(profile: Profile) -> bool:
    winner = condorcet_winner(margins(profile))
    if winner is None:
        return False
    return any(
        rules.dominates_all_scoring(profile, x, "weak")
        for x in CANDIDATES
        if x != winner
    )


def _artificial_homogeneity_violation(profile: Profile) -> bool:
    return rules.evaluate("artificial", t_fold(profile, 2)) != rules.evaluate(
        "artificial", profile
    )


def _artificial_neutrality_violation(profile: Profile) -> bool:
    winners = rules.evaluate("artificial", profile)
    return any(
        rules.evaluate("artificial", permute_profile(profile, sigma))
        != permute_choice_set(winners, sigma)
        for sigma in PERMUTATIONS[1:]
    )


def _nanson_positive_responsiveness_violation(profile: Profile) -> bool:
    winners = rules.evaluate("nanson", profile)
    for order, count in enumerate(profile):
        if count == 0:
            continue
        for new_order, promoted in _single_swap_improvements(order):
            if promoted not in winners:
                continue
            improved = list(profile)
            improved[order] -= 1
            improved[new_order] += 1
            if rules.evaluate("nanson", tuple(improved)) != frozenset({promoted}):
                return True
    return False


#: named predicates for ``search``: id -> (predicate, description)
SEARCH_PREDICATES = {
    "weak-scoring-overrides-condorcet": (
        _weak_scoring_overrides_condorcet,
        "a Condorcet winner exists, yet another candidate beats it under every "
        "weakly monotonic scoring vector",
    ),
    "artificial-homogeneity-violation": (
        _artificial_homogeneity_violation,
        "doubling the profile changes the artificial rule's winners",
    ),
    "artificial-neutrality-violation": (
        _artificial_neutrality_violation,
        "relabeling candidates changes the artificial rule's winners",
    ),
    "nanson-positive-responsiveness-violation": (
        _nanson_positive_responsiveness_violation,
        "promoting a Nanson winner on one ballot fails to make it the unique winner",
    ),
}


def cmd_search(args: argparse.Namespace) -> int:
    if args.list:
        for name, (_, description) in sorted(SEARCH_PREDICATES.items()):
            print(f"{name}: {description}")
        return 0
    if not args.predicate:
        return _fail("a predicate name is required (or use --list)")
    try:
        predicate, _ = SEARCH_PREDICATES[args.predicate]
    except KeyError:
        known = ", ".join(sorted(SEARCH_PREDICATES))
        return _fail(f"unknown predicate {args.predicate!r} (known: {known})")
    hits = enumeration.search(predicate, args.bound, mode=args.mode)
    for profile in hits:
        print(format_profile(profile))
    if hits:
        return 1
    print(f"no profile with at most {args.bound} voters matches", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivote",
        description="Three-candidate voting rules and their verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    winners = sub.add_parser("winners", help="evaluate rules on a profile")
    winners.add_argument("profile", type=_profile_argument)
    group = winners.add_mutually_exclusive_group(required=True)
    group.add_argument("--rule", action="append", help="rule id (repeatable)")
    group.add_argument("--all", action="store_true", help="every known rule")
    winners.set_defaults(func=cmd_winners)

    table = sub.add_parser("table", help="the 12-class output table as CSV")
    table.add_argument("--rule", help="print a single row")
    table.add_argument(
        "--representatives",
        action="store_true",
        help="print the representative profile of each class instead",
    )
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run an axiom checker")
    verify.add_argument("--rule", help="rule id under test")
    verify.add_argument("--axiom", required=True, choices=AXIOM_IDS, metavar="AXIOM")
    verify.add_argument("--bound", type=int, required=True, help="max total voters (or horizon)")
    verify.add_argument("--max-witnesses", type=int, default=5)
    verify.add_argument("--tiebreak", choices=ORDER_NAMES, default="abc",
                        help="tie-breaking order for resolute_participation")
    verify.add_argument("--upper", help="coarser rule for refinement")
    verify.add_argument("--profile", type=_profile_argument, help="majority profile for continuity")
    verify.add_argument("--profile2", type=_profile_argument, help="fixed minority for continuity")
    verify.set_defaults(func=cmd_verify)

    figure4 = sub.add_parser("figure4", help="irresoluteness frequencies as CSV")
    figure4.add_argument("--rules", default="maximin,nanson,leximin,black",
                         help="comma-separated rule ids")
    figure4.add_argument("--max-n", type=int, default=30, help="largest (even) electorate")
    figure4.set_defaults(func=cmd_figure4)

    satgen_cmd = sub.add_parser("satgen", help="export a reinforcement CNF instance")
    satgen_cmd.add_argument("--bound", type=int, required=True)
    satgen_cmd.add_argument("--neutral", action="store_true",
                            help="alias choice variables across relabelings")
    satgen_cmd.add_argument("--out", help="DIMACS destination (default: stdout)")
    satgen_cmd.add_argument("--solve", action="store_true",
                            help="also run the built-in best-effort solver")
    satgen_cmd.set_defaults(func=cmd_satgen)

    replay = sub.add_parser("replay", help="re-check a built-in impossibility argument")
    replay.add_argument("id", choices=satgen.SCRIPT_IDS)
    replay.set_defaults(func=cmd_replay)

    search = sub.add_parser("search", help="scan small profiles for a named phenomenon")
    search.add_argument("predicate", nargs="?", metavar="PREDICATE")
    search.add_argument("--bound", type=int, default=8, help="max total voters")
    search.add_argument("--mode", choices=("first", "all"), default="first")
    search.add_argument("--list", action="store_true", help="list known predicates")
    search.set_defaults(func=cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.axiom != "optimist_equivalence" and not args.rule:
        parser.error("--rule is required for this axiom")
    return args.func(args)


def entry_point() -> None:
    sys.exit(main())
