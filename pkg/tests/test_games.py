"""Parity game solving.  The ground truth throughout is brute_force_solve,
which enumerates positional strategies and evaluates forced lassos; the
recursive solver must match it exactly."""

import random

import pytest

from treegames.games import (
    ADAM,
    EVE,
    GameError,
    ParityGame,
    Strategy,
    brute_force_solve,
    game_from_text,
    game_to_dot,
    game_to_text,
    has_cycle_with_max_parity,
    solve,
    verify_strategy,
    winner_from,
)

from helpers import odd_dominated_cycle, random_game


def game(owner, prio, succ):
    return ParityGame(tuple(sorted(owner)), owner, prio, succ)


def test_single_even_loop_is_eve_won():
    g = game({0: EVE}, {0: 0}, {0: (0,)})
    res = solve(g)
    assert res.eve_region == frozenset({0})
    assert res.adam_region == frozenset()
    assert winner_from(g, 0) == EVE


def test_single_odd_loop_is_adam_won():
    g = game({0: EVE}, {0: 1}, {0: (0,)})
    assert solve(g).adam_region == frozenset({0})


def test_dead_ends_lose_for_their_owner():
    g = game({0: EVE, 1: ADAM}, {0: 0, 1: 0}, {0: (), 1: ()})
    res = solve(g)
    assert res.adam_region == frozenset({0}), "stuck Eve loses"
    assert res.eve_region == frozenset({1}), "stuck Adam loses"


def test_eve_escapes_through_even_priority():
    # Eve cycles a(1) -> b(2) -> a; limsup 2 is even, so she wins both.
    g = game({"a": EVE, "b": EVE}, {"a": 1, "b": 2},
             {"a": ("a", "b"), "b": ("a",)})
    oracle = brute_force_solve(g)
    assert oracle.eve_region == frozenset({"a", "b"})
    res = solve(g)
    assert res.eve_region == oracle.eve_region
    assert res.eve_strategy.choice["a"] == "b", "staying on a loses"


def test_adam_can_force_the_odd_loop():
    g = game({0: ADAM, 1: EVE}, {0: 0, 1: 1},
             {0: (0, 1), 1: (1,)})
    res = solve(g)
    assert res.adam_region == frozenset({0, 1})
    assert res.adam_strategy.choice[0] == 1


def test_solver_matches_brute_force_on_random_games():
    rng = random.Random(404)
    for trial in range(300):
        g = random_game(rng, 6, 3, 3)
        got = solve(g)
        want = brute_force_solve(g)
        assert got.eve_region == want.eve_region, (trial, g)
        assert got.adam_region == want.adam_region, (trial, g)


def test_brute_force_strategies_verify():
    rng = random.Random(405)
    for trial in range(60):
        g = random_game(rng, 5, 2, 2)
        res = brute_force_solve(g)
        assert verify_strategy(g, res.eve_strategy, res.eve_region), (trial, g)
        assert verify_strategy(g, res.adam_strategy, res.adam_region), (trial, g)


def test_solver_strategies_verify():
    rng = random.Random(406)
    for trial in range(300):
        g = random_game(rng, 7, 3, 3)
        res = solve(g)
        notes = []
        ok = (verify_strategy(g, res.eve_strategy, res.eve_region, notes)
              and verify_strategy(g, res.adam_strategy, res.adam_region, notes))
        assert ok, (trial, g, notes)


def test_verify_rejects_bad_strategies():
    # Eve wins 0 by looping; sending her to the odd self-loop instead must
    # be flagged, as must a choice leaving her region.
    g = game({0: EVE, 1: EVE}, {0: 0, 1: 1}, {0: (0, 1), 1: (1,)})
    assert verify_strategy(g, Strategy(EVE, {0: 0}), {0})
    notes = []
    assert not verify_strategy(g, Strategy(EVE, {0: 1}), {0}, notes)
    assert notes, "diagnostics should name the violation"
    assert not verify_strategy(g, Strategy(EVE, {0: 0, 1: 1}), {0, 1})


def test_verify_rejects_owned_dead_end_in_region():
    g = game({0: EVE}, {0: 0}, {0: ()})
    assert not verify_strategy(g, Strategy(EVE, {}), {0})


def test_cycle_analysis_matches_reachability_oracle():
    rng = random.Random(407)
    for trial in range(200):
        n = rng.randint(1, 6)
        succ = {i: tuple(sorted(rng.sample(range(n), min(rng.randint(0, 2), n))))
                for i in range(n)}
        rank = {i: rng.randint(0, 3) for i in range(n)}
        for parity in (0, 1):
            got = has_cycle_with_max_parity(
                list(range(n)), lambda v: succ[v], rank, parity)
            flipped = {i: rank[i] + 1 for i in range(n)}
            want = (odd_dominated_cycle(range(n), lambda v: succ[v], rank)
                    if parity == 1 else
                    odd_dominated_cycle(range(n), lambda v: succ[v], flipped))
            assert got == want, (trial, succ, rank, parity)


def test_game_construction_validation():
    with pytest.raises(GameError):
        game({0: 2}, {0: 0}, {0: ()})  # bad owner
    with pytest.raises(GameError):
        game({0: EVE}, {0: -1}, {0: ()})  # negative priority
    with pytest.raises(GameError):
        game({0: EVE}, {0: 0}, {0: (1,)})  # unknown successor


def test_text_format_round_trip():
    rng = random.Random(408)
    for _ in range(40):
        g = random_game(rng, 6, 3, 3)
        back = game_from_text(game_to_text(g))
        assert back == g


def test_text_format_example():
    text = game_to_text(game({0: EVE, 1: ADAM}, {0: 1, 1: 2},
                             {0: (0, 1), 1: ()}))
    lines = text.strip().splitlines()
    assert lines[0] == "parity 1;"
    assert lines[1] == "0 1 0 0,1;"
    assert lines[2] == "1 2 1;"


def test_text_parse_errors_name_the_line():
    with pytest.raises(GameError, match="header"):
        game_from_text("0 1 0 0;\n")
    with pytest.raises(GameError, match="line 2"):
        game_from_text("parity 1;\n0 1 0 0\n")
    with pytest.raises(GameError, match="line 3"):
        game_from_text("parity 9;\n0 1 0 0;\nnope;\n")
    with pytest.raises(GameError):
        game_from_text("parity 1;\n0 1 0 0,5;\n")


def test_dot_export_mentions_positions_and_regions():
    g = game({0: EVE, 1: ADAM}, {0: 0, 1: 1}, {0: (1,), 1: (0,)})
    plain = game_to_dot(g)
    assert "digraph" in plain and "shape=box" in plain
    colored = game_to_dot(g, solve(g))
    assert "fillcolor" in colored
