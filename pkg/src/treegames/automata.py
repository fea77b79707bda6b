"""Parity automata on infinite binary labeled trees.

Nondeterministic automata (NPTA) carry transitions (state, letter, left
state, right state) and a rank per state; a run is accepting when every
branch has an even limsup of ranks.  Alternating automata (APTA) replace the
transition relation by positive boolean formulas over moves Atom(direction,
state).  Acceptance of both kinds reduces to parity games over the tree's
finite generator, which is what member(), member_alt() and witness() solve.

The Rabin-Mostowski index of an automaton is the (min, max) rank pair,
shifted down by an even amount so the low end lands in {0, 1}.  Büchi means
ranks within {1, 2}; co-Büchi ranks within {0, 1}.

State names are strings throughout, so automata serialize directly.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, replace
from typing import NamedTuple

from .trees import (
    Alphabet,
    RegularTree,
    LetterRenaming,
    TreeError,
    same_symbols,
)
from .games import EVE, ADAM, ParityGame, Strategy, SolveResult, solve, verify_strategy


class AutomatonError(ValueError):
    """Malformed automaton or document."""


class UnsupportedProduct(AutomatonError):
    """Index combination outside what intersection_product implements;
    callers are expected to fall back to sample-based checks."""


class Index(NamedTuple):
    lo: int
    hi: int


@dataclass(frozen=True)
class NPTA:
    """Nondeterministic parity tree automaton over a binary tree alphabet."""

    alphabet: Alphabet
    states: tuple[str, ...]
    initial: str
    transitions: tuple[tuple[str, str, str, str], ...]
    rank: dict

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if len(set(self.states)) != len(self.states):
            raise AutomatonError("duplicate states")
        for q in self.states:
            if not isinstance(q, str):
                raise AutomatonError(f"state {q!r} is not a string")
        states = set(self.states)
        if self.initial not in states:
            raise AutomatonError(f"initial state {self.initial!r} unknown")
        normalized = sorted({tuple(t) for t in self.transitions})
        for q, a, l, r in normalized:
            if q not in states or l not in states or r not in states:
                raise AutomatonError(f"transition {(q, a, l, r)!r} uses an unknown state")
            if a not in self.alphabet:
                raise AutomatonError(f"transition {(q, a, l, r)!r} uses an unknown letter")
        object.__setattr__(self, "transitions", tuple(normalized))
        if set(self.rank) != states:
            raise AutomatonError("rank must be total on the states")
        for q, k in self.rank.items():
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise AutomatonError(f"rank of {q!r} must be a nonnegative integer")
        object.__setattr__(self, "rank", dict(self.rank))


def index_of(a) -> Index:
    lo = min(a.rank.values())
    hi = max(a.rank.values())
    shift = lo - (lo % 2)
    return Index(lo - shift, hi - shift)


def is_buchi(a) -> bool:
    return set(a.rank.values()) <= {1, 2}


def is_deterministic(a: NPTA) -> bool:
    seen = set()
    for q, letter, _, _ in a.transitions:
        if (q, letter) in seen:
            return False
        seen.add((q, letter))
    return True


def transition_table(a: NPTA) -> dict:
    """Transitions grouped by (state, letter), in transition order."""
    table = {}
    for t in a.transitions:
        table.setdefault((t[0], t[1]), []).append(t)
    return table


def rename_automaton(a: NPTA, renaming: LetterRenaming) -> NPTA:
    """Automaton for the renamed language: accepts rename_tree(t) exactly
    when `a` accepts t."""
    return replace(
        a,
        transitions=tuple((q, renaming.apply(s), l, r) for q, s, l, r in a.transitions),
    )


def with_initial(a, state: str):
    """Same automaton started in another state."""
    if state not in a.states:
        raise AutomatonError(f"state {state!r} unknown")
    return replace(a, initial=state)


# ---------------------------------------------------------------------------
# Membership and emptiness games.

def _check_tree_alphabet(a, t: RegularTree):
    if not same_symbols(a.alphabet, t.alphabet):
        raise AutomatonError("automaton and tree alphabets differ")


def membership_start(a, t: RegularTree):
    return ("s", a.initial, t.root)


def membership_game(a: NPTA, t: RegularTree) -> ParityGame:
    """Acceptance as a parity game on states x generator nodes.

    Eve owns state positions and picks a transition; Adam owns transition
    positions and picks a direction.  Both carry the source state's rank, so
    plays mirror run branches.  A state position without a matching
    transition is an Eve dead end, which is a loss for Eve.
    """
    _check_tree_alphabet(a, t)
    table = transition_table(a)
    positions, owner, priority, successors = [], {}, {}, {}
    start = membership_start(a, t)
    queue = deque([start])
    seen = {start}
    while queue:
        pos = queue.popleft()
        positions.append(pos)
        if pos[0] == "s":
            _, q, v = pos
            owner[pos] = EVE
            priority[pos] = a.rank[q]
            succs = tuple(("t", tr, v) for tr in table.get((q, t.label[v]), ()))
        else:
            _, (q, _, l, r), v = pos
            owner[pos] = ADAM
            priority[pos] = a.rank[q]
            succs = (("s", l, t.left[v]), ("s", r, t.right[v]))
        successors[pos] = succs
        for nxt in succs:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return ParityGame(tuple(positions), owner, priority, successors)


@dataclass(frozen=True)
class RunWitness:
    """Winning-strategy certificate for acceptance: Eve's positional
    strategy on her winning region of the membership game."""

    game: ParityGame
    strategy: Strategy
    region: frozenset
    start: object

    def check(self) -> bool:
        return self.start in self.region and verify_strategy(self.game, self.strategy, self.region)


def member(a: NPTA, t: RegularTree) -> bool:
    game = membership_game(a, t)
    return membership_start(a, t) in solve(game).eve_region


def member_witness(a: NPTA, t: RegularTree) -> RunWitness | None:
    game = membership_game(a, t)
    res = solve(game)
    start = membership_start(a, t)
    if start not in res.eve_region:
        return None
    return RunWitness(game, res.eve_strategy, res.eve_region, start)


def emptiness_game(a: NPTA) -> ParityGame:
    """Eve picks a letter and transition per state, Adam a direction; Eve
    wins somewhere exactly when the automaton accepts some tree."""
    positions, owner, priority, successors = [], {}, {}, {}
    by_state = {}
    for t in a.transitions:
        by_state.setdefault(t[0], []).append(t)
    start = ("s", a.initial)
    queue = deque([start])
    seen = {start}
    while queue:
        pos = queue.popleft()
        positions.append(pos)
        if pos[0] == "s":
            q = pos[1]
            owner[pos] = EVE
            priority[pos] = a.rank[q]
            succs = tuple(("t", tr) for tr in by_state.get(q, ()))
        else:
            q, _, l, r = pos[1]
            owner[pos] = ADAM
            priority[pos] = a.rank[q]
            succs = (("s", l), ("s", r))
        successors[pos] = succs
        for nxt in succs:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return ParityGame(tuple(positions), owner, priority, successors)


def strategy_tree(a: NPTA, choice: dict) -> RegularTree:
    """Tree read off a positional emptiness strategy: states become nodes,
    the chosen transition gives label and children."""
    label, left, right = {}, {}, {}
    queue = deque([a.initial])
    seen = {a.initial}
    while queue:
        q = queue.popleft()
        _, (_, letter, l, r) = choice[("s", q)]
        label[q] = letter
        left[q] = l
        right[q] = r
        for nxt in (l, r):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return RegularTree(a.alphabet, a.initial, label, left, right)


def witness(a: NPTA) -> RegularTree | None:
    """Some accepted tree, or None when the language is empty."""
    game = emptiness_game(a)
    res = solve(game)
    if ("s", a.initial) not in res.eve_region:
        return None
    return strategy_tree(a, res.eve_strategy.choice)


# ---------------------------------------------------------------------------
# Products.

def _product_reach(alphabet, states_initial, expand):
    """Generic reachable-state construction; expand(state) yields
    (letter, left, right) triples."""
    transitions = []
    order = []
    queue = deque([states_initial])
    seen = {states_initial}
    while queue:
        s = queue.popleft()
        order.append(s)
        for letter, l, r in expand(s):
            transitions.append((s, letter, l, r))
            for nxt in (l, r):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return order, transitions


def intersection_product(a: NPTA, b: NPTA) -> NPTA:
    """Automaton for the intersection, for the two supported index shapes:
    Büchi with Büchi (two-phase counter) and deterministic (0,1) with Büchi
    (single Rabin pair folded into ranks {1,2,3}).  Anything else raises
    UnsupportedProduct."""
    if not same_symbols(a.alphabet, b.alphabet):
        raise AutomatonError("alphabet mismatch")
    ta, tb = transition_table(a), transition_table(b)

    if is_buchi(a) and is_buchi(b):
        # Phase 1 waits for an accepting a-state, phase 2 for an accepting
        # b-state; finishing phase 2 is the accepting event.
        def expand(s):
            qa, qb, phase = s
            for letter in a.alphabet:
                for _, _, la, ra in ta.get((qa, letter), ()):
                    for _, _, lb, rb in tb.get((qb, letter), ()):
                        if phase == 1:
                            nxt = 2 if a.rank[qa] == 2 else 1
                        else:
                            nxt = 1 if b.rank[qb] == 2 else 2
                        yield letter, (la, lb, nxt), (ra, rb, nxt)

        initial = (a.initial, b.initial, 1)
        order, transitions = _product_reach(a.alphabet, initial, expand)
        name = {s: f"{s[0]}&{s[1]}&{s[2]}" for s in order}
        rank = {name[s]: 2 if s[2] == 2 and b.rank[s[1]] == 2 else 1 for s in order}
        return NPTA(
            a.alphabet,
            tuple(name[s] for s in order),
            name[initial],
            tuple((name[q], letter, name[l], name[r]) for q, letter, l, r in transitions),
            rank,
        )

    if is_deterministic(a) and index_of(a) == Index(0, 1) and is_buchi(b):
        # Branches must see a-rank 1 finitely often and b-rank 2 infinitely
        # often; priority 3 flags the former, 2 rewards the latter.
        def expand(s):
            qa, qb = s
            for letter in a.alphabet:
                for _, _, la, ra in ta.get((qa, letter), ()):
                    for _, _, lb, rb in tb.get((qb, letter), ()):
                        yield letter, (la, lb), (ra, rb)

        initial = (a.initial, b.initial)
        order, transitions = _product_reach(a.alphabet, initial, expand)
        name = {s: f"{s[0]}&{s[1]}" for s in order}

        def prio(s):
            if a.rank[s[0]] == 1:
                return 3
            return 2 if b.rank[s[1]] == 2 else 1

        return NPTA(
            a.alphabet,
            tuple(name[s] for s in order),
            name[initial],
            tuple((name[q], letter, name[l], name[r]) for q, letter, l, r in transitions),
            {name[s]: prio(s) for s in order},
        )

    raise UnsupportedProduct(
        f"no product for indices {index_of(a)} x {index_of(b)}"
        f"{'' if is_deterministic(a) else ' (left factor nondeterministic)'}")


# ---------------------------------------------------------------------------
# Alternating automata.

class Formula:
    """Positive boolean combination of moves; see the subclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class TrueFormula(Formula):
    pass


@dataclass(frozen=True)
class FalseFormula(Formula):
    pass


@dataclass(frozen=True)
class Atom(Formula):
    """Send one copy in the given direction ('1' or '2') in the given state."""

    direction: str
    state: str

    def __post_init__(self):
        if self.direction not in ("1", "2"):
            raise AutomatonError(f"direction must be '1' or '2', got {self.direction!r}")


@dataclass(frozen=True)
class And(Formula):
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise AutomatonError("And needs at least one part")


@dataclass(frozen=True)
class Or(Formula):
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise AutomatonError("Or needs at least one part")


TRUE = TrueFormula()
FALSE = FalseFormula()


def _formula_states(f: Formula):
    if isinstance(f, Atom):
        yield f.state
    elif isinstance(f, (And, Or)):
        for part in f.parts:
            yield from _formula_states(part)


@dataclass(frozen=True)
class APTA:
    """Alternating parity tree automaton; delta maps (state, letter) to a
    formula and must be total."""

    alphabet: Alphabet
    states: tuple[str, ...]
    initial: str
    delta: dict
    rank: dict

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if len(set(self.states)) != len(self.states):
            raise AutomatonError("duplicate states")
        states = set(self.states)
        if self.initial not in states:
            raise AutomatonError(f"initial state {self.initial!r} unknown")
        expected = {(q, letter) for q in self.states for letter in self.alphabet}
        if set(self.delta) != expected:
            raise AutomatonError("delta must be total on states x alphabet")
        for key, f in self.delta.items():
            if not isinstance(f, Formula):
                raise AutomatonError(f"delta{key!r} is not a formula")
            for q in _formula_states(f):
                if q not in states:
                    raise AutomatonError(f"delta{key!r} mentions unknown state {q!r}")
        if set(self.rank) != states:
            raise AutomatonError("rank must be total on the states")
        object.__setattr__(self, "delta", dict(self.delta))
        object.__setattr__(self, "rank", dict(self.rank))


def acceptance_game(a: APTA, t: RegularTree) -> ParityGame:
    """Eve resolves disjunctions, Adam conjunctions; an Atom advances to the
    child state position.  TrueFormula strands Adam and FalseFormula strands
    Eve, so they are winning and losing sinks for Eve.  Every position
    carries the rank of its governing state."""
    _check_tree_alphabet(a, t)
    positions, owner, priority, successors = [], {}, {}, {}
    start = ("s", a.initial, t.root)
    queue = deque([start])
    seen = {start}
    while queue:
        pos = queue.popleft()
        positions.append(pos)
        q, v = pos[1], pos[2]
        priority[pos] = a.rank[q]
        if pos[0] == "s":
            owner[pos] = EVE
            succs = (("f", q, v, a.delta[q, t.label[v]]),)
        else:
            f = pos[3]
            if isinstance(f, TrueFormula):
                owner[pos] = ADAM
                succs = ()
            elif isinstance(f, FalseFormula):
                owner[pos] = EVE
                succs = ()
            elif isinstance(f, Atom):
                owner[pos] = EVE
                succs = (("s", f.state, t.step(v, f.direction)),)
            elif isinstance(f, Or):
                owner[pos] = EVE
                succs = tuple(("f", q, v, part) for part in f.parts)
            else:
                owner[pos] = ADAM
                succs = tuple(("f", q, v, part) for part in f.parts)
        successors[pos] = succs
        for nxt in succs:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return ParityGame(tuple(positions), owner, priority, successors)


def member_alt(a: APTA, t: RegularTree) -> bool:
    game = acceptance_game(a, t)
    return ("s", a.initial, t.root) in solve(game).eve_region


def npta_to_apta(a: NPTA) -> APTA:
    """Alternation-free embedding: each transition set becomes a disjunction
    of And(Atom('1', left), Atom('2', right))."""
    table = transition_table(a)
    delta = {}
    for q in a.states:
        for letter in a.alphabet:
            choices = [
                And((Atom("1", l), Atom("2", r)))
                for _, _, l, r in table.get((q, letter), ())
            ]
            delta[q, letter] = Or(tuple(choices)) if choices else FALSE
    return APTA(a.alphabet, a.states, a.initial, delta, dict(a.rank))


# ---------------------------------------------------------------------------
# Builtin automata.  Languages of {0,1}-labeled trees unless stated:
#   L        some branch carries infinitely many 1s (Büchi)
#   M01      every branch has limsup 0 (deterministic, index (0,1));
#            Mik(i,k) generalizes to labels/ranks i..k
#   K-det    the rightmost branch carries finitely many 1s (deterministic
#            co-Büchi); K-buchi is the nondeterministic Büchi form
#   W01      game-labeled trees where Eve wins the induced game (index (0,1));
#            W01-prime is its image under the owner/bit duality
#   UBbin    exactly one branch carries infinitely many 1s (index (0,2))

BINARY = Alphabet(("0", "1"))
GAME_ALPHABET = Alphabet(("(E,0)", "(E,1)", "(A,0)", "(A,1)"))

DUALITY = LetterRenaming({
    "(E,0)": "(A,1)",
    "(E,1)": "(A,0)",
    "(A,0)": "(E,1)",
    "(A,1)": "(E,0)",
})

BIT_SWAP = LetterRenaming({"0": "1", "1": "0"})


def _automaton_L() -> NPTA:
    transitions = []
    for q in ("q", "p"):
        transitions += [(q, "0", "q", "T"), (q, "0", "T", "q"),
                        (q, "1", "p", "T"), (q, "1", "T", "p")]
    transitions += [("T", "0", "T", "T"), ("T", "1", "T", "T")]
    return NPTA(BINARY, ("q", "p", "T"), "q", tuple(transitions),
                {"q": 1, "p": 2, "T": 2})


def _automaton_Mik(i: int, k: int) -> NPTA:
    if i not in (0, 1):
        raise AutomatonError("first rank must be 0 or 1")
    if k < i:
        raise AutomatonError("empty rank range")
    symbols = tuple(str(m) for m in range(i, k + 1))
    alphabet = Alphabet(symbols)
    transitions = tuple((l, s, s, s) for l in symbols for s in symbols)
    return NPTA(alphabet, symbols, symbols[0], transitions,
                {s: int(s) for s in symbols})


def _automaton_K_det() -> NPTA:
    transitions = []
    for q in ("0", "1"):
        transitions += [(q, "0", "T", "0"), (q, "1", "T", "1")]
    transitions += [("T", "0", "T", "T"), ("T", "1", "T", "T")]
    return NPTA(BINARY, ("0", "1", "T"), "0", tuple(transitions),
                {"0": 0, "1": 1, "T": 0})


def _automaton_K_buchi() -> NPTA:
    transitions = [("q", "0", "T", "q"), ("q", "0", "T", "p"),
                   ("q", "1", "T", "q"), ("q", "1", "T", "p"),
                   ("p", "0", "T", "p"),
                   ("T", "0", "T", "T"), ("T", "1", "T", "T")]
    return NPTA(BINARY, ("q", "p", "T"), "q", tuple(transitions),
                {"q": 1, "p": 2, "T": 2})


def _automaton_W01() -> NPTA:
    transitions = []
    for l in ("0", "1"):
        for m in ("0", "1"):
            transitions.append((l, f"(A,{m})", m, m))
            transitions.append((l, f"(E,{m})", m, "T"))
            transitions.append((l, f"(E,{m})", "T", m))
    for owner in ("E", "A"):
        for m in ("0", "1"):
            transitions.append(("T", f"({owner},{m})", "T", "T"))
    return NPTA(GAME_ALPHABET, ("0", "1", "T"), "0", tuple(transitions),
                {"0": 0, "1": 1, "T": 0})


def _automaton_UBbin() -> NPTA:
    # Guess the unique bad branch; s-states ride it tracking the current
    # label, c-states run the no-bad-branch check on everything hung off it.
    transitions = []
    for b in ("0", "1"):
        for s in ("0", "1"):
            transitions.append((f"s{b}", s, f"s{s}", f"c{s}"))
            transitions.append((f"s{b}", s, f"c{s}", f"s{s}"))
            transitions.append((f"c{b}", s, f"c{s}", f"c{s}"))
    return NPTA(BINARY, ("s0", "s1", "c0", "c1"), "s0", tuple(transitions),
                {"s0": 1, "s1": 2, "c0": 0, "c1": 1})


_MIK = re.compile(r"Mik\((\d+),(\d+)\)")

BUILTIN_NAMES = ("L", "M01", "K-det", "K-buchi", "W01", "W01-prime", "UBbin")


def builtin(name: str) -> NPTA:
    """Builtin automaton by name; Mik takes its ranks as in 'Mik(1,3)'."""
    if name == "L":
        return _automaton_L()
    if name == "M01":
        return _automaton_Mik(0, 1)
    if name == "K-det":
        return _automaton_K_det()
    if name == "K-buchi":
        return _automaton_K_buchi()
    if name == "W01":
        return _automaton_W01()
    if name == "W01-prime":
        return rename_automaton(_automaton_W01(), DUALITY)
    if name == "UBbin":
        return _automaton_UBbin()
    m = _MIK.fullmatch(name)
    if m:
        return _automaton_Mik(int(m.group(1)), int(m.group(2)))
    raise AutomatonError(f"unknown builtin {name!r}")


# ---------------------------------------------------------------------------
# Serialization.

def automaton_to_json(a: NPTA) -> dict:
    return {
        "alphabet": list(a.alphabet.symbols),
        "states": list(a.states),
        "initial": a.initial,
        "transitions": [
            {"from": q, "letter": letter, "left": l, "right": r}
            for q, letter, l, r in a.transitions
        ],
        "ranks": dict(a.rank),
    }


def _doc_field(doc, key, kinds, what):
    if not isinstance(doc, dict) or key not in doc:
        raise AutomatonError(f"{what}: missing field {key!r}")
    value = doc[key]
    if kinds is not None and not isinstance(value, kinds):
        raise AutomatonError(f"{what}: field {key!r} has the wrong type")
    return value


def automaton_from_json(doc: dict) -> NPTA:
    try:
        alphabet = Alphabet(tuple(_doc_field(doc, "alphabet", list, "automaton")))
    except TreeError as exc:
        raise AutomatonError(str(exc)) from None
    states = tuple(_doc_field(doc, "states", list, "automaton"))
    initial = _doc_field(doc, "initial", str, "automaton")
    transitions = []
    for entry in _doc_field(doc, "transitions", list, "automaton"):
        transitions.append((
            _doc_field(entry, "from", str, "transition"),
            _doc_field(entry, "letter", str, "transition"),
            _doc_field(entry, "left", str, "transition"),
            _doc_field(entry, "right", str, "transition"),
        ))
    ranks = _doc_field(doc, "ranks", dict, "automaton")
    return NPTA(alphabet, states, initial, tuple(transitions), dict(ranks))


def formula_to_json(f: Formula):
    if isinstance(f, TrueFormula):
        return {"op": "true"}
    if isinstance(f, FalseFormula):
        return {"op": "false"}
    if isinstance(f, Atom):
        return {"op": "atom", "direction": f.direction, "state": f.state}
    op = "and" if isinstance(f, And) else "or"
    return {"op": op, "parts": [formula_to_json(part) for part in f.parts]}


def formula_from_json(doc) -> Formula:
    op = _doc_field(doc, "op", str, "formula")
    if op == "true":
        return TRUE
    if op == "false":
        return FALSE
    if op == "atom":
        return Atom(_doc_field(doc, "direction", str, "formula"),
                    _doc_field(doc, "state", str, "formula"))
    if op in ("and", "or"):
        parts = tuple(formula_from_json(p) for p in _doc_field(doc, "parts", list, "formula"))
        return And(parts) if op == "and" else Or(parts)
    raise AutomatonError(f"formula: unknown op {op!r}")


def apta_to_json(a: APTA) -> dict:
    return {
        "alphabet": list(a.alphabet.symbols),
        "states": list(a.states),
        "initial": a.initial,
        "delta": [
            {"state": q, "letter": letter, "formula": formula_to_json(a.delta[q, letter])}
            for q in a.states
            for letter in a.alphabet
        ],
        "ranks": dict(a.rank),
    }


def apta_from_json(doc: dict) -> APTA:
    try:
        alphabet = Alphabet(tuple(_doc_field(doc, "alphabet", list, "automaton")))
    except TreeError as exc:
        raise AutomatonError(str(exc)) from None
    states = tuple(_doc_field(doc, "states", list, "automaton"))
    initial = _doc_field(doc, "initial", str, "automaton")
    delta = {}
    for entry in _doc_field(doc, "delta", list, "automaton"):
        key = (_doc_field(entry, "state", str, "delta entry"),
               _doc_field(entry, "letter", str, "delta entry"))
        if key in delta:
            raise AutomatonError(f"delta entry {key!r} duplicated")
        delta[key] = formula_from_json(_doc_field(entry, "formula", dict, "delta entry"))
    ranks = _doc_field(doc, "ranks", dict, "automaton")
    return APTA(alphabet, states, initial, delta, dict(ranks))


def dump_automaton(a, path) -> None:
    doc = apta_to_json(a) if isinstance(a, APTA) else automaton_to_json(a)
    with open(path, "w") as handle:
        json.dump(doc, handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_automaton(path):
    """Load an NPTA or APTA document, telling them apart by their fields."""
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise AutomatonError(f"not valid JSON: {exc}") from None
    if isinstance(doc, dict) and "delta" in doc:
        return apta_from_json(doc)
    return automaton_from_json(doc)
