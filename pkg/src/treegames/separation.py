"""Separator synthesis for disjoint Büchi tree languages.

The separator for T(a) versus T(b) is an alternating co-Büchi-shaped
automaton built as a finite hierarchy over a's state set.  Level 0 accepts
the trees admitting any a-run at all (a pure safety check, every rank 0).
Level n+1 re-runs a with its Büchi ranks, but whenever a branch passes
through an accepting (rank 2) state, it additionally launches the level-n
check on the subtree there.  Each level squeezes the accepted set closer to
T(a); the level to synthesize at is 2^(|a| * |b|) + 1 by default, which is
far more than the shipped examples need.

T(a) always sits inside every level, so verification is sample-based on the
b side: draw members of both languages and check the separator accepts the
a-samples and rejects the b-samples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import RegularTree, bisimilar
from .games import EVE, Strategy, solve, verify_strategy
from .automata import (
    APTA,
    NPTA,
    And,
    Atom,
    FALSE,
    Or,
    emptiness_game,
    intersection_product,
    is_buchi,
    member_alt,
    strategy_tree,
    witness,
)

import random


class NotDisjoint(ValueError):
    """Separator requested for overlapping languages; carries a tree in the
    intersection."""

    def __init__(self, tree: RegularTree):
        super().__init__("languages are not disjoint")
        self.tree = tree


def separator_level_bound(n_states_a: int, n_states_b: int) -> int:
    """Hierarchy level sufficient for separation, from the state counts."""
    if n_states_a < 1 or n_states_b < 1:
        raise ValueError("state counts must be positive")
    return 2 ** (n_states_a * n_states_b) + 1


def level_state(q: str, n: int) -> str:
    return f"{q}@{n}"


def _require_buchi(a: NPTA):
    if not is_buchi(a):
        raise ValueError("automaton is not Büchi (ranks must lie in {1, 2})")


def hierarchy_level_zero(a: NPTA) -> APTA:
    """Level 0: some run of `a` exists.  All ranks 0, so any infinite play
    is fine and only missing transitions reject."""
    table = {}
    for t in a.transitions:
        table.setdefault((t[0], t[1]), []).append(t)
    states = tuple(level_state(q, 0) for q in a.states)
    delta = {}
    for q in a.states:
        for letter in a.alphabet:
            choices = [
                And((Atom("1", level_state(l, 0)), Atom("2", level_state(r, 0))))
                for _, _, l, r in table.get((q, letter), ())
            ]
            delta[level_state(q, 0), letter] = Or(tuple(choices)) if choices else FALSE
    return APTA(a.alphabet, states, level_state(a.initial, 0), delta,
                {s: 0 for s in states})


def hierarchy_level_succ(a: NPTA, prev: APTA, n: int) -> APTA:
    """Level n+1 on top of level n: a Büchi main copy of `a` that launches
    the previous level at every accepting child it sends a branch through."""
    _require_buchi(a)
    table = {}
    for t in a.transitions:
        table.setdefault((t[0], t[1]), []).append(t)

    def step(p: str, direction: str):
        atom = Atom(direction, level_state(p, n + 1))
        if a.rank[p] == 1:
            return atom
        return And((atom, Atom(direction, level_state(p, n))))

    new_states = tuple(level_state(q, n + 1) for q in a.states)
    delta = dict(prev.delta)
    for q in a.states:
        for letter in a.alphabet:
            choices = [
                And((step(l, "1"), step(r, "2")))
                for _, _, l, r in table.get((q, letter), ())
            ]
            delta[level_state(q, n + 1), letter] = Or(tuple(choices)) if choices else FALSE
    rank = dict(prev.rank)
    rank.update({level_state(q, n + 1): a.rank[q] for q in a.states})
    return APTA(a.alphabet, prev.states + new_states,
                level_state(a.initial, n + 1), delta, rank)


@dataclass(frozen=True)
class SeparatorHierarchy:
    """All levels 0..n of the construction for one base automaton; each
    level is a standalone APTA started at the base's initial state."""

    base: NPTA
    levels: tuple[APTA, ...]

    def level(self, n: int) -> APTA:
        return self.levels[n]

    @property
    def top(self) -> APTA:
        return self.levels[-1]


def build_hierarchy(a: NPTA, up_to: int) -> SeparatorHierarchy:
    _require_buchi(a)
    if up_to < 0:
        raise ValueError("level must be nonnegative")
    levels = [hierarchy_level_zero(a)]
    for n in range(up_to):
        levels.append(hierarchy_level_succ(a, levels[-1], n))
    return SeparatorHierarchy(a, tuple(levels))


def disjointness_witness(a: NPTA, b: NPTA) -> RegularTree | None:
    """A tree in both Büchi languages, or None when they are disjoint."""
    _require_buchi(a)
    _require_buchi(b)
    return witness(intersection_product(a, b))


def check_disjoint_buchi(a: NPTA, b: NPTA) -> bool:
    return disjointness_witness(a, b) is None


def synthesize_separator(a: NPTA, b: NPTA, level: int | None = None) -> APTA:
    """Separator for T(a) versus T(b): accepts everything in T(a), rejects
    everything in T(b).  Raises NotDisjoint (with a witness tree) when the
    languages overlap.  `level` overrides the default hierarchy height
    separator_level_bound(|a|, |b|)."""
    _require_buchi(a)
    _require_buchi(b)
    w = disjointness_witness(a, b)
    if w is not None:
        raise NotDisjoint(w)
    if level is None:
        level = separator_level_bound(len(a.states), len(b.states))
    return build_hierarchy(a, level).top


# ---------------------------------------------------------------------------
# Sampling and verification.

@dataclass(frozen=True)
class SampleSet:
    """Distinct members of a language; may fall short of the request when
    the positional witness space is smaller than asked for."""

    trees: tuple[RegularTree, ...]
    requested: int

    @property
    def complete(self) -> bool:
        return len(self.trees) >= self.requested


def sample_language(a: NPTA, n: int, seed: int) -> SampleSet:
    """Up to n pairwise non-bisimilar accepted trees, deterministic in seed.

    Draws random positional choices inside Eve's winning region of the
    emptiness game and keeps those that verify as winning, so every returned
    tree is a member.  Raises ValueError on an empty language.
    """
    if n < 1:
        raise ValueError("sample count must be positive")
    game = emptiness_game(a)
    res = solve(game)
    start = ("s", a.initial)
    if start not in res.eve_region:
        raise ValueError("language is empty")

    options = {}
    for pos in game.positions:
        if pos[0] == "s" and pos in res.eve_region:
            options[pos] = [w for w in game.successors[pos] if w in res.eve_region]

    rng = random.Random(seed)
    trees: list[RegularTree] = []
    budget = max(100, 20 * n)
    for _ in range(budget):
        choice = {pos: rng.choice(opts) for pos, opts in options.items()}
        reach = {start}
        frontier = [start]
        while frontier:
            pos = frontier.pop()
            nxts = (choice[pos],) if pos[0] == "s" else game.successors[pos]
            for nxt in nxts:
                if nxt not in reach:
                    reach.add(nxt)
                    frontier.append(nxt)
        if not verify_strategy(game, Strategy(EVE, choice), reach):
            continue
        t = strategy_tree(a, choice)
        if not any(bisimilar(t, u) for u in trees):
            trees.append(t)
            if len(trees) == n:
                break
    return SampleSet(tuple(trees), n)


@dataclass(frozen=True)
class SeparationFailure:
    side: str
    index: int
    expected: bool
    got: bool
    tree: RegularTree


@dataclass(frozen=True)
class SeparationReport:
    accept_checked: int
    reject_checked: int
    failures: tuple[SeparationFailure, ...]
    disjointness_checked: bool
    samples_per_side: int
    seed: int

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_separation(separator: APTA, a: NPTA, b: NPTA, n: int, seed: int,
                      disjointness_checked: bool = False) -> SeparationReport:
    """Sample both languages and check the separator's verdicts.  Violations
    are recorded in the report, never raised."""
    sample_a = sample_language(a, n, seed)
    sample_b = sample_language(b, n, seed + 1)
    failures = []
    for i, t in enumerate(sample_a.trees):
        got = member_alt(separator, t)
        if not got:
            failures.append(SeparationFailure("accept", i, True, got, t))
    for i, t in enumerate(sample_b.trees):
        got = member_alt(separator, t)
        if got:
            failures.append(SeparationFailure("reject", i, False, got, t))
    return SeparationReport(
        accept_checked=len(sample_a.trees),
        reject_checked=len(sample_b.trees),
        failures=tuple(failures),
        disjointness_checked=disjointness_checked,
        samples_per_side=n,
        seed=seed,
    )


def report_to_json(report: SeparationReport) -> dict:
    from .trees import tree_to_json

    return {
        "passed": report.passed,
        "accept_checked": report.accept_checked,
        "reject_checked": report.reject_checked,
        "disjointness_checked": report.disjointness_checked,
        "samples_per_side": report.samples_per_side,
        "seed": report.seed,
        "failures": [
            {
                "side": f.side,
                "index": f.index,
                "expected": f.expected,
                "got": f.got,
                "tree": tree_to_json(f.tree),
            }
            for f in report.failures
        ],
    }


# ---------------------------------------------------------------------------
# Example pairs of disjoint Büchi languages, for exercising the synthesis.

@dataclass(frozen=True)
class ExamplePair:
    name: str
    a: NPTA
    b: NPTA
    # Hierarchy level at which the separator is exercised; None means the
    # full default bound.
    level: int | None


def _singleton(symbol: str) -> NPTA:
    from .automata import BINARY

    return NPTA(BINARY, ("s",), "s", (("s", symbol, "s", "s"),), {"s": 2})


def _leftmost_constant(symbol: str) -> NPTA:
    # Trees whose leftmost branch is constantly `symbol`; a 2-state safety
    # automaton, trivially Büchi with all ranks 2.
    from .automata import BINARY

    transitions = [("m", symbol, "m", "T"),
                   ("T", "0", "T", "T"), ("T", "1", "T", "T")]
    return NPTA(BINARY, ("m", "T"), "m", tuple(transitions), {"m": 2, "T": 2})


def _leftmost_finitely_many_ones() -> NPTA:
    # The leftmost branch carries finitely many 1s: ride it in q, guess the
    # last 1, then demand 0s forever in p.
    from .automata import BINARY

    transitions = [("q", "0", "q", "T"), ("q", "1", "q", "T"),
                   ("q", "0", "p", "T"), ("q", "1", "p", "T"),
                   ("p", "0", "p", "T"),
                   ("T", "0", "T", "T"), ("T", "1", "T", "T")]
    return NPTA(BINARY, ("q", "p", "T"), "q", tuple(transitions),
                {"q": 1, "p": 2, "T": 2})


def example_pairs() -> tuple[ExamplePair, ...]:
    """Disjoint Büchi pairs covering singleton, dense and renamed languages.
    Pairs whose default bound is large carry a small exercise level that
    already separates them."""
    from .automata import BIT_SWAP, builtin, rename_automaton

    all0 = _singleton("0")
    all1 = _singleton("1")
    return (
        ExamplePair("all0-vs-all1", all0, all1, None),
        ExamplePair("all1-vs-all0", all1, all0, None),
        ExamplePair("L-vs-all0", builtin("L"), all0, 4),
        ExamplePair("swapped-L-vs-all1", rename_automaton(builtin("L"), BIT_SWAP), all1, 4),
        ExamplePair("leftmost0-vs-leftmost1", _leftmost_constant("0"), _leftmost_constant("1"), 4),
        ExamplePair("leftmost-finite1s-vs-all1", _leftmost_finitely_many_ones(), all1, 4),
    )
