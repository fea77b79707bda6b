"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's solver pipeline: cycle
analysis is done by pairwise reachability, membership for deterministic
automata by direct product-graph inspection.  Agreement between these and
the game-based implementations is what the property tests check.
"""

from __future__ import annotations

import random

from treegames.trees import Alphabet, RegularTree, label_at
from treegames.games import ParityGame
from treegames.automata import NPTA, transition_table
from treegames.gamelang import Cyl, Neg, Union
from treegames.automata import GAME_ALPHABET


def random_game(rng: random.Random, max_positions: int, max_priority: int,
                max_degree: int) -> ParityGame:
    n = rng.randint(1, max_positions)
    owner = {i: rng.randint(0, 1) for i in range(n)}
    prio = {i: rng.randint(0, max_priority) for i in range(n)}
    succ = {}
    for i in range(n):
        degree = rng.randint(0, max_degree)
        succ[i] = tuple(sorted(rng.sample(range(n), min(degree, n))))
    return ParityGame(tuple(range(n)), owner, prio, succ)


def random_npta(rng: random.Random, alphabet: Alphabet, max_states: int,
                max_rank: int, density: float = 0.7) -> NPTA:
    n = rng.randint(1, max_states)
    states = tuple(f"q{i}" for i in range(n))
    transitions = []
    for q in states:
        for letter in alphabet:
            for _ in range(2):
                if rng.random() < density:
                    transitions.append((q, letter, rng.choice(states),
                                        rng.choice(states)))
    rank = {q: rng.randint(0, max_rank) for q in states}
    return NPTA(alphabet, states, states[0], tuple(transitions), rank)


def random_code(rng: random.Random, depth: int):
    labels = GAME_ALPHABET.symbols
    if depth == 0 or rng.random() < 0.3:
        assign = {}
        for _ in range(rng.randint(0, 2)):
            word = "".join(rng.choice("12") for _ in range(rng.randint(0, 3)))
            assign[word] = rng.choice(labels)
        return Cyl(tuple(sorted(assign.items())))
    if rng.random() < 0.5:
        return Neg(random_code(rng, depth - 1))
    heads = tuple(random_code(rng, depth - 1) for _ in range(rng.randint(1, 3)))
    tail = random_code(rng, depth - 1) if rng.random() < 0.5 else None
    return Union(heads, tail)


def reachable_within(start, allowed, succ) -> set:
    # Nodes of `allowed` reachable from start's successors through `allowed`.
    out = set()
    frontier = [w for w in succ(start) if w in allowed]
    while frontier:
        v = frontier.pop()
        if v in out:
            continue
        out.add(v)
        frontier.extend(w for w in succ(v) if w in allowed and w not in out)
    return out


def odd_dominated_cycle(nodes, succ, rank) -> bool:
    """Whether some cycle's maximum rank is odd, by plain reachability."""
    odd_ranks = sorted({rank[v] for v in nodes if rank[v] % 2 == 1})
    for c in odd_ranks:
        allowed = {v for v in nodes if rank[v] <= c}
        for v in allowed:
            if rank[v] == c and v in reachable_within(v, allowed, succ):
                return True
    return False


def det_member_oracle(a: NPTA, t: RegularTree) -> bool:
    """Membership for a deterministic automaton by inspecting the product
    of the generator with the automaton: the unique run exists and no
    branch can dominate a cycle with an odd rank."""
    table = transition_table(a)
    start = (t.root, a.initial)
    nodes = {start}
    frontier = [start]
    while frontier:
        v, q = frontier.pop()
        choices = table.get((q, t.label[v]), ())
        if len(choices) != 1:
            return False
        _, _, l, r = choices[0]
        for nxt in ((t.left[v], l), (t.right[v], r)):
            if nxt not in nodes:
                nodes.add(nxt)
                frontier.append(nxt)

    def succ(pair):
        v, q = pair
        _, _, l, r = table[q, t.label[v]][0]
        return ((t.left[v], l), (t.right[v], r))

    return not odd_dominated_cycle(nodes, succ, {(v, q): a.rank[q] for v, q in nodes})


def unfold_with_tail(t: RegularTree, depth: int, tail_symbol: str) -> RegularTree:
    """Prefix of `t` to the given depth, constant `tail_symbol` below it.
    The result agrees with `t` on every word of length <= depth."""
    label = {"@tail": tail_symbol}
    left = {"@tail": "@tail"}
    right = {"@tail": "@tail"}
    words = [""]
    for word in words:
        label[word] = label_at(t, word)
        if len(word) < depth:
            left[word], right[word] = word + "1", word + "2"
            words.extend((word + "1", word + "2"))
        else:
            left[word] = right[word] = "@tail"
    return RegularTree(t.alphabet, "", label, left, right)
