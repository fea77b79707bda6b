"""Parity games on finite graphs, with winning strategy extraction.

Max-parity convention throughout: an infinite play is won by Eve exactly
when the highest priority occurring infinitely often is even.  A play that
reaches a dead end is lost by the dead end's owner.  Both players win
positionally, so strategies are position-to-successor maps.

solve() runs the classic attractor-based recursive algorithm; dead ends are
handled by routing them to internal sink loops of the losing parity, which
keeps the recursion on dead-end-free games.  brute_force_solve() is an
independent oracle that enumerates all positional strategy pairs and decides
each forced lasso directly; it is exponential and only meant to cross-check
the solver on small games.

Games also travel in a line-per-position text format:

    parity 3;
    0 2 0 1,2 "name";
    1 1 1 0;
    2 0 0 ;

Header, then one record per position: id, priority, owner (0 = Eve,
1 = Adam), comma-separated successors (empty for a dead end) and an
optional quoted name.  Every record ends with a semicolon.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass

EVE = 0
ADAM = 1


class GameError(ValueError):
    """Malformed game, strategy or document."""


@dataclass(frozen=True)
class ParityGame:
    """Finite game graph.  Position order is the deterministic tie-break
    order used by the solver, so equal inputs give equal outputs."""

    positions: tuple
    owner: dict
    priority: dict
    successors: dict

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        if len(set(self.positions)) != len(self.positions):
            raise GameError("duplicate positions")
        pos = set(self.positions)
        for v in self.positions:
            if self.owner.get(v) not in (EVE, ADAM):
                raise GameError(f"position {v!r}: owner must be 0 (Eve) or 1 (Adam)")
            p = self.priority.get(v)
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise GameError(f"position {v!r}: priority must be a nonnegative integer")
            succs = self.successors.get(v)
            if succs is None:
                raise GameError(f"position {v!r}: no successor list")
            for w in succs:
                if w not in pos:
                    raise GameError(f"position {v!r}: successor {w!r} is not a position")
        object.__setattr__(self, "successors", {v: tuple(self.successors[v]) for v in self.positions})
        object.__setattr__(self, "owner", {v: self.owner[v] for v in self.positions})
        object.__setattr__(self, "priority", {v: self.priority[v] for v in self.positions})


@dataclass(frozen=True)
class Strategy:
    """Positional strategy: a chosen successor for each of the player's
    non-dead-end positions inside its stated domain."""

    player: int
    choice: dict


@dataclass(frozen=True)
class SolveResult:
    eve_region: frozenset
    adam_region: frozenset
    eve_strategy: Strategy
    adam_strategy: Strategy


def _attract(player, targets, region, owner, succ, pred):
    # Attractor of `targets` for `player` inside `region`.  Player-owned
    # positions pulled in record the successor they were attracted through;
    # processing order is fixed by position index, so the result is
    # deterministic.
    attr = set(targets)
    strat = {}
    todo = deque(sorted(targets))
    counts = {}
    while todo:
        u = todo.popleft()
        for v in pred[u]:
            if v not in region or v in attr:
                continue
            if owner[v] == player:
                attr.add(v)
                strat[v] = u
                todo.append(v)
            else:
                if v not in counts:
                    counts[v] = sum(1 for w in succ[v] if w in region)
                counts[v] -= 1
                if counts[v] == 0:
                    attr.add(v)
                    todo.append(v)
    return attr, strat


def _zielonka(region, owner, prio, succ, pred):
    # Requires a dead-end-free game.  The second recursive call of the
    # textbook formulation is unrolled into the while loop, so recursion
    # depth is bounded by the number of distinct priorities.
    win = (set(), set())
    strat = ({}, {})
    region = set(region)
    while region:
        d = max(prio[v] for v in region)
        sigma = d % 2
        opp = 1 - sigma
        tops = {v for v in region if prio[v] == d}
        a, astrat = _attract(sigma, tops, region, owner, succ, pred)
        sub_win, sub_strat = _zielonka(region - a, owner, prio, succ, pred)
        if not sub_win[opp]:
            win[sigma].update(region)
            strat[sigma].update(sub_strat[sigma])
            strat[sigma].update(astrat)
            for v in sorted(tops):
                if owner[v] == sigma:
                    strat[sigma][v] = next(u for u in succ[v] if u in region)
            return win, strat
        b, bstrat = _attract(opp, sub_win[opp], region, owner, succ, pred)
        win[opp].update(b)
        strat[opp].update(sub_strat[opp])
        strat[opp].update(bstrat)
        region -= b
    return win, strat


def solve(g: ParityGame) -> SolveResult:
    """Winning regions and positional winning strategies for both players."""
    n = len(g.positions)
    index = {v: i for i, v in enumerate(g.positions)}
    owner = [g.owner[v] for v in g.positions]
    prio = [g.priority[v] for v in g.positions]
    succ = [[index[w] for w in g.successors[v]] for v in g.positions]

    # Route dead ends to a sink loop of the parity that loses for the owner.
    if any(not s for s in succ):
        sink_even, sink_odd = n, n + 1
        owner += [ADAM, EVE]
        prio += [0, 1]
        for i in range(n):
            if not succ[i]:
                succ[i] = [sink_odd if owner[i] == EVE else sink_even]
        succ += [[sink_even], [sink_odd]]
    m = len(succ)

    pred = [[] for _ in range(m)]
    for i in range(m):
        for j in succ[i]:
            pred[j].append(i)

    win, strat = _zielonka(range(m), owner, prio, succ, pred)
    assert win[EVE].isdisjoint(win[ADAM]) and len(win[EVE]) + len(win[ADAM]) == m

    def back(player):
        region = frozenset(g.positions[i] for i in win[player] if i < n)
        choice = {
            g.positions[i]: g.positions[j]
            for i, j in strat[player].items()
            if i < n and j < n and g.successors[g.positions[i]]
        }
        return region, Strategy(player, choice)

    eve_region, eve_strategy = back(EVE)
    adam_region, adam_strategy = back(ADAM)
    return SolveResult(eve_region, adam_region, eve_strategy, adam_strategy)


def winner_from(g: ParityGame, position) -> int:
    """EVE or ADAM, for the player winning from the given position."""
    if position not in g.priority:
        raise GameError(f"unknown position {position!r}")
    res = solve(g)
    return EVE if position in res.eve_region else ADAM


def brute_force_solve(g: ParityGame, bound: int = 10 ** 6) -> SolveResult:
    """Oracle solver: enumerate positional strategy pairs, walk the forced
    lasso from every position, take the minimax.  Positional determinacy
    makes this exact.  Refuses games whose strategy-pair count (product of
    out-degrees over owned non-dead-end positions) exceeds `bound`."""
    eve_pos = [v for v in g.positions if g.owner[v] == EVE and g.successors[v]]
    adam_pos = [v for v in g.positions if g.owner[v] == ADAM and g.successors[v]]
    total = 1
    for v in eve_pos + adam_pos:
        total *= len(g.successors[v])
        if total > bound:
            raise GameError(f"strategy space larger than {bound}")

    def lasso_winner(choice, start):
        at = {}
        path = []
        v = start
        while True:
            if v in at:
                cycle_max = max(g.priority[u] for u in path[at[v]:])
                return cycle_max % 2
            at[v] = len(path)
            path.append(v)
            nxt = choice.get(v)
            if nxt is None:
                return 1 - g.owner[v]
            v = nxt

    eve_choices = [dict(zip(eve_pos, combo))
                   for combo in itertools.product(*(g.successors[v] for v in eve_pos))]
    adam_choices = [dict(zip(adam_pos, combo))
                    for combo in itertools.product(*(g.successors[v] for v in adam_pos))]

    n = len(g.positions)
    eve_all = [[True] * n for _ in eve_choices]
    adam_all = [[True] * n for _ in adam_choices]
    for ei, ec in enumerate(eve_choices):
        for ai, ac in enumerate(adam_choices):
            combined = {**ec, **ac}
            for s, v in enumerate(g.positions):
                if lasso_winner(combined, v) == EVE:
                    adam_all[ai][s] = False
                else:
                    eve_all[ei][s] = False

    eve_region = frozenset(
        g.positions[s] for s in range(n) if any(mask[s] for mask in eve_all))
    adam_region = frozenset(
        g.positions[s] for s in range(n) if any(mask[s] for mask in adam_all))
    assert eve_region.isdisjoint(adam_region)
    assert len(eve_region) + len(adam_region) == n

    def pick(choices, masks, region, player, owned):
        for choice, mask in zip(choices, masks):
            if all(g.positions[s] in region for s in range(n) if mask[s]) \
                    and all(mask[s] for s in range(n) if g.positions[s] in region):
                return Strategy(player, {v: choice[v] for v in owned if v in region})
        raise AssertionError("no uniform positional strategy found")

    eve_strategy = pick(eve_choices, eve_all, eve_region, EVE, eve_pos)
    adam_strategy = pick(adam_choices, adam_all, adam_region, ADAM, adam_pos)
    return SolveResult(eve_region, adam_region, eve_strategy, adam_strategy)


# ---------------------------------------------------------------------------
# Strategy checking.

def _sccs(nodes, succ_of):
    # Iterative Tarjan; recursion-free so large game graphs are fine.
    index, low = {}, {}
    onstack = set()
    stack = []
    result = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack.add(root)
        work = [(root, iter(succ_of(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ_of(w))))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
    return result


def has_cycle_with_max_parity(nodes, succ_of, priority, parity) -> bool:
    """Whether some cycle of the graph has a maximal priority of the given
    parity.  A cycle with maximum exactly c lives inside the subgraph of
    priorities <= c and passes through a priority-c node, and vice versa."""
    for c in sorted({priority[v] for v in nodes if priority[v] % 2 == parity}, reverse=True):
        sub = {v for v in nodes if priority[v] <= c}

        def sub_succ(v):
            return [w for w in succ_of(v) if w in sub]

        for comp in _sccs(sub, sub_succ):
            if not any(priority[v] == c for v in comp):
                continue
            if len(comp) > 1 or comp[0] in sub_succ(comp[0]):
                return True
    return False


def verify_strategy(g: ParityGame, strategy: Strategy, region, diagnostics=None) -> bool:
    """Check that the strategy wins everywhere on the region: the restricted
    subgraph never leaves the region, contains no dead end owned by the
    strategy's player, and every one of its cycles has a favorable maximal
    priority.  Appends a reason to `diagnostics` on failure."""

    def fail(message):
        if diagnostics is not None:
            diagnostics.append(message)
        return False

    player = strategy.player
    region = set(region)
    restricted = {}
    for v in region:
        if v not in g.priority:
            return fail(f"{v!r} is not a position")
        succs = g.successors[v]
        if g.owner[v] == player:
            if not succs:
                return fail(f"{v!r}: dead end owned by the strategy's player")
            choice = strategy.choice.get(v)
            if choice is None:
                return fail(f"{v!r}: no move chosen")
            if choice not in succs:
                return fail(f"{v!r}: chosen move {choice!r} is not an edge")
            if choice not in region:
                return fail(f"{v!r}: chosen move leaves the region")
            restricted[v] = (choice,)
        else:
            for w in succs:
                if w not in region:
                    return fail(f"{v!r}: opponent can leave the region via {w!r}")
            restricted[v] = succs
    if has_cycle_with_max_parity(region, lambda v: restricted[v], g.priority, 1 - player):
        return fail("cycle with unfavorable maximal priority")
    return True


# ---------------------------------------------------------------------------
# Text format and DOT export.

def relabel_positions(g: ParityGame):
    """Copy of the game on integer ids 0..n-1 (position order), with the map
    from original positions to new ids."""
    index = {v: i for i, v in enumerate(g.positions)}
    relabeled = ParityGame(
        tuple(range(len(g.positions))),
        {index[v]: g.owner[v] for v in g.positions},
        {index[v]: g.priority[v] for v in g.positions},
        {index[v]: tuple(index[w] for w in g.successors[v]) for v in g.positions},
    )
    return relabeled, index


def game_to_text(g: ParityGame) -> str:
    """Serialize; games with non-integer ids are relabeled, the original id
    surviving as the record's name."""
    if all(isinstance(v, int) and not isinstance(v, bool) for v in g.positions):
        relabeled, names = g, None
    else:
        relabeled, index = relabel_positions(g)
        names = {index[v]: str(v) for v in g.positions}
    lines = [f"parity {max(relabeled.positions, default=0)};"]
    for v in sorted(relabeled.positions):
        parts = [str(v), str(relabeled.priority[v]), str(relabeled.owner[v])]
        if relabeled.successors[v]:
            parts.append(",".join(str(w) for w in relabeled.successors[v]))
        if names is not None:
            parts.append(f'"{names[v]}"')
        lines.append(" ".join(parts) + ";")
    return "\n".join(lines) + "\n"


_RECORD = re.compile(
    r'^(\d+)\s+(\d+)\s+([01])\s*((?:\d+(?:\s*,\s*\d+)*)?)\s*(?:"([^"]*)")?$')


def game_from_text(text: str) -> ParityGame:
    """Parse the text format.  Errors carry the 1-based line number."""
    positions, owner, priority, successors = [], {}, {}, {}
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not line.endswith(";"):
            raise GameError(f"line {lineno}: record does not end with ';'")
        line = line[:-1].strip()
        if not header_seen:
            if not re.fullmatch(r"parity\s+\d+", line):
                raise GameError(f"line {lineno}: expected header 'parity N;'")
            header_seen = True
            continue
        m = _RECORD.fullmatch(line)
        if m is None:
            raise GameError(f"line {lineno}: malformed position record")
        v = int(m.group(1))
        if v in owner:
            raise GameError(f"line {lineno}: duplicate position {v}")
        positions.append(v)
        priority[v] = int(m.group(2))
        owner[v] = int(m.group(3))
        field = m.group(4).strip()
        successors[v] = tuple(int(s) for s in field.split(",")) if field else ()
    if not header_seen:
        raise GameError("line 1: expected header 'parity N;'")
    try:
        return ParityGame(tuple(sorted(positions)), owner, priority, successors)
    except GameError as exc:
        raise GameError(f"inconsistent game: {exc}") from None


def game_to_dot(g: ParityGame, result: SolveResult | None = None) -> str:
    """DOT rendering; Eve positions are ellipses, Adam positions boxes, and
    winning regions are colored when a solve result is supplied."""
    relabeled, index = relabel_positions(g)
    lines = ["digraph parity {"]
    for v in g.positions:
        i = index[v]
        shape = "ellipse" if g.owner[v] == EVE else "box"
        attrs = [f'label="{v}:{g.priority[v]}"', f"shape={shape}"]
        if result is not None:
            color = "lightblue" if v in result.eve_region else "lightsalmon"
            attrs.append("style=filled")
            attrs.append(f"fillcolor={color}")
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for v in g.positions:
        for w in g.successors[v]:
            lines.append(f"  n{index[v]} -> n{index[w]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
