"""Command-line front end.

Every command reads its inputs from files (or builtin automaton names),
prints one JSON document to stdout, and exits with:

    0   success / positive decision
    1   negative decision (non-member, empty language, failed report)
    2   input error (unreadable file, schema violation, bad flag value)
    3   precondition failure (separator requested for overlapping languages,
        sampling an empty language)

`-o FILE` additionally writes the command's artifact to FILE.  `play` is
the one interactive command: a human plays one side of the tree game
against the solver's strategy until the play closes a cycle.
"""

from __future__ import annotations

import argparse
import json
import sys

from .trees import (
    RegularTree,
    TreeError,
    load_tree,
    rename_tree,
    tree_distance,
    tree_to_json,
)
from .games import (
    ADAM,
    EVE,
    GameError,
    game_from_text,
    game_to_dot,
    solve,
)
from .automata import (
    APTA,
    BUILTIN_NAMES,
    DUALITY,
    NPTA,
    apta_to_json,
    automaton_to_json,
    builtin,
    load_automaton,
    member,
    member_alt,
    npta_to_apta,
    rename_automaton,
    witness,
)
from .gamelang import (
    code_from_json,
    game_of_tree,
    in_w01,
    in_w01_prime,
    reduce_borel,
)
from .separation import (
    NotDisjoint,
    report_to_json,
    sample_language,
    synthesize_separator,
    verify_separation,
)


def _emit(doc, out_path=None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


class AutomatonRefError(ValueError):
    pass


def _load_npta(ref: str) -> NPTA:
    a = _load_any_automaton(ref)
    if not isinstance(a, NPTA):
        raise AutomatonRefError(f"{ref} is an alternating automaton; "
                                "a nondeterministic one is required")
    return a


def _is_builtin_name(ref: str) -> bool:
    import re

    return ref in BUILTIN_NAMES or re.fullmatch(r"Mik\(\d+,\d+\)", ref) is not None


def _load_any_automaton(ref: str):
    # Builtin names double as automaton arguments; anything else is a path.
    if _is_builtin_name(ref):
        return builtin(ref)
    return load_automaton(ref)


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise GameError(f"cannot read {path}: {exc}") from exc


def _load_tree_arg(path: str) -> RegularTree:
    try:
        return load_tree(path)
    except OSError as exc:
        raise TreeError(f"cannot read {path}: {exc}") from exc


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise TreeError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise TreeError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Commands.

def cmd_solve(args) -> int:
    g = game_from_text(_read_text(args.game))
    res = solve(g)
    doc = {
        "eve_region": sorted(res.eve_region),
        "adam_region": sorted(res.adam_region),
        "eve_strategy": sorted([v, w] for v, w in res.eve_strategy.choice.items()),
        "adam_strategy": sorted([v, w] for v, w in res.adam_strategy.choice.items()),
    }
    _emit(doc, args.output)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(game_to_dot(g, res))
    return 0


def cmd_member(args) -> int:
    a = _load_npta(args.automaton)
    t = _load_tree_arg(args.tree)
    verdict = member(a, t)
    _emit({"member": verdict}, args.output)
    return 0 if verdict else 1


def cmd_member_alt(args) -> int:
    a = _load_any_automaton(args.automaton)
    if isinstance(a, NPTA):
        a = npta_to_apta(a)
    t = _load_tree_arg(args.tree)
    verdict = member_alt(a, t)
    _emit({"member": verdict}, args.output)
    return 0 if verdict else 1


def cmd_empty(args) -> int:
    a = _load_npta(args.automaton)
    w = witness(a)
    doc = {"empty": w is None,
           "witness": None if w is None else tree_to_json(w)}
    _emit(doc, args.output)
    return 1 if w is None else 0


def cmd_gtl(args) -> int:
    t = _load_tree_arg(args.tree)
    first = in_w01(t)
    second = in_w01_prime(t)
    _emit({"in_W01": first, "in_W01_prime": second}, args.output)
    return 0 if first or second else 1


def cmd_reduce(args) -> int:
    code = code_from_json(_load_json(args.code))
    t = _load_tree_arg(args.tree)
    image = reduce_borel(code, t)
    landed = "W01" if in_w01(image) else "W01_prime"
    doc = {"landed_in": landed, "tree": tree_to_json(image)}
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if args.output:
        # The artifact is the tree document itself, ready for the other
        # commands to load.
        with open(args.output, "w") as fh:
            fh.write(json.dumps(tree_to_json(image), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_separate(args) -> int:
    a = _load_npta(args.a)
    b = _load_npta(args.b)
    separator = synthesize_separator(a, b, level=args.level)
    report = verify_separation(separator, a, b, args.samples, args.seed)
    doc = {"separator": apta_to_json(separator), "report": report_to_json(report)}
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(json.dumps(apta_to_json(separator), indent=2, sort_keys=True) + "\n")
    return 0 if report.passed else 1


def cmd_dual(args) -> int:
    if (args.tree is None) == (args.automaton is None):
        raise TreeError("dual needs exactly one of --tree or --automaton")
    if args.tree is not None:
        doc = tree_to_json(rename_tree(_load_tree_arg(args.tree), DUALITY))
    else:
        doc = automaton_to_json(rename_automaton(_load_npta(args.automaton), DUALITY))
    _emit(doc, args.output)
    return 0


def cmd_sample(args) -> int:
    a = _load_npta(args.automaton)
    try:
        result = sample_language(a, args.samples, args.seed)
    except ValueError as exc:
        _fail(str(exc))
        return 3
    doc = {
        "seed": args.seed,
        "requested": result.requested,
        "complete": result.complete,
        "trees": [tree_to_json(t) for t in result.trees],
    }
    _emit(doc, args.output)
    return 0


def cmd_builtin(args) -> int:
    a = builtin(args.name)
    _emit(automaton_to_json(a), args.output)
    return 0


def cmd_distance(args) -> int:
    t1 = _load_tree_arg(args.t1)
    t2 = _load_tree_arg(args.t2)
    d = tree_distance(t1, t2)
    _emit({"distance": str(d), "bisimilar": d == 0}, args.output)
    return 0


def cmd_play(args) -> int:
    t = _load_tree_arg(args.tree)
    g = game_of_tree(t)
    res = solve(g)
    human = EVE if args.side == "eve" else ADAM
    engine = 1 - human
    engine_choice = (res.eve_strategy if engine == EVE else res.adam_strategy).choice

    current = g.positions[0]
    transcript = [current]
    seen = {current: 0}
    print(f"playing {'Eve' if human == EVE else 'Adam'}; "
          "moves are 1 (left) or 2 (right)")
    while True:
        owner = g.owner[current]
        succ = g.successors[current]
        label = t.label[current]
        if owner == human:
            move = None
            while move is None:
                try:
                    raw = input(f"at {current} [{label}] your move (1/2): ").strip()
                except EOFError:
                    print()
                    print(json.dumps({"transcript": transcript, "verdict": None},
                                     sort_keys=True))
                    return 2
                if raw == "1":
                    move = succ[0]
                elif raw == "2":
                    move = succ[1]
                else:
                    print("enter 1 or 2")
        else:
            move = engine_choice.get(current, succ[0])
            direction = "1" if move == succ[0] else "2"
            print(f"at {current} [{label}] engine moves {direction}")
        current = move
        if current in seen:
            cycle = transcript[seen[current]:]
            top = max(g.priority[v] for v in cycle)
            verdict = "eve" if top % 2 == 0 else "adam"
            print()
            print(json.dumps({"transcript": transcript + [current],
                              "cycle": cycle,
                              "cycle_max_priority": top,
                              "verdict": verdict}, sort_keys=True))
            return 0
        seen[current] = len(transcript)
        transcript.append(current)


# ---------------------------------------------------------------------------
# Argument parsing.

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treegames",
        description="parity games, tree automata and separators "
                    "on regular infinite binary trees")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flag(p):
        p.add_argument("-o", "--output", metavar="FILE", default=None,
                       help="also write the artifact to FILE")

    p = sub.add_parser("solve", help="solve a parity game (text format)")
    p.add_argument("--game", required=True, metavar="FILE")
    p.add_argument("--dot", metavar="FILE", default=None,
                   help="write a DOT rendering with winning regions colored")
    output_flag(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("member", help="run-based membership test")
    p.add_argument("--automaton", required=True, metavar="FILE",
                   help="automaton JSON file or builtin name")
    p.add_argument("--tree", required=True, metavar="FILE")
    output_flag(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("member-alt", help="acceptance-game membership test")
    p.add_argument("--automaton", required=True, metavar="FILE")
    p.add_argument("--tree", required=True, metavar="FILE")
    output_flag(p)
    p.set_defaults(func=cmd_member_alt)

    p = sub.add_parser("empty", help="emptiness test with witness tree")
    p.add_argument("--automaton", required=True, metavar="FILE")
    output_flag(p)
    p.set_defaults(func=cmd_empty)

    p = sub.add_parser("gtl", help="membership in the game tree languages")
    p.add_argument("--tree", required=True, metavar="FILE")
    output_flag(p)
    p.set_defaults(func=cmd_gtl)

    p = sub.add_parser("reduce", help="apply a Borel code's reduction to a tree")
    p.add_argument("--code", required=True, metavar="FILE")
    p.add_argument("--tree", required=True, metavar="FILE")
    output_flag(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("separate",
                       help="synthesize and verify a separator for two "
                            "disjoint Büchi automata")
    p.add_argument("a", metavar="A", help="automaton JSON file or builtin name")
    p.add_argument("b", metavar="B", help="automaton JSON file or builtin name")
    p.add_argument("--samples", type=int, default=100, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--level", type=int, default=None, metavar="N",
                   help="hierarchy level to emit (default: the full bound)")
    output_flag(p)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("dual", help="apply the owner/bit duality renaming")
    p.add_argument("--tree", metavar="FILE", default=None)
    p.add_argument("--automaton", metavar="FILE", default=None)
    output_flag(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("play", help="play the tree game against the solver")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--as", dest="side", choices=("eve", "adam"), required=True)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("sample", help="sample distinct members of a language")
    p.add_argument("--automaton", required=True, metavar="FILE")
    p.add_argument("--samples", type=int, default=10, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    output_flag(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("builtin", help="emit a builtin automaton as JSON")
    p.add_argument("name", help="one of: " + ", ".join(BUILTIN_NAMES) +
                                ", Mik(i,k)")
    output_flag(p)
    p.set_defaults(func=cmd_builtin)

    p = sub.add_parser("distance", help="ultrametric distance of two trees")
    p.add_argument("t1", metavar="T1")
    p.add_argument("t2", metavar="T2")
    output_flag(p)
    p.set_defaults(func=cmd_distance)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotDisjoint as exc:
        _emit({"error": "languages are not disjoint",
               "witness": tree_to_json(exc.tree)})
        return 3
    except ValueError as exc:
        # covers TreeError, GameError, AutomatonError and schema violations
        _fail(str(exc))
        return 2
    except OSError as exc:
        _fail(str(exc))
        return 2


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
