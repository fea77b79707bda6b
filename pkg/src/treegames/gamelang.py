"""Game tree languages over the four-letter game alphabet.

A tree labeled by (owner, bit) pairs induces a parity game on its own
generator: the owner component says who moves at a node, the bit is the
node's priority, and the two children are the moves.  W01 collects the trees
whose induced game Eve wins (highest bit seen infinitely often is 0 on the
play), and W01-prime is the image of W01 under the duality that flips both
owner and bit.  A tree can fall in neither language, but never in both.

BorelCode is a small language of set descriptions: finite-support cylinders,
complement, and countable unions presented as a finite head plus an optional
looped tail.  eval_borel decides membership of a tree in the described set;
reduce_borel maps the tree to a game-labeled tree that lands in W01 when the
tree is in the set and in W01-prime when it is not, reading the input only
at the finitely many node words the cylinders mention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .trees import (
    RegularTree,
    TreeError,
    check_node_word,
    constant_tree,
    graft_spine,
    label_at,
    rename_tree,
    same_symbols,
)
from .games import EVE, ADAM, ParityGame, solve
from .automata import BINARY, GAME_ALPHABET, DUALITY, builtin, member


class GameLabel(NamedTuple):
    """Owner ('E' or 'A') and priority bit of a game tree letter."""

    owner: str
    bit: int

    @classmethod
    def from_symbol(cls, symbol: str) -> "GameLabel":
        if symbol not in GAME_ALPHABET:
            raise TreeError(f"not a game label: {symbol!r}")
        return cls(symbol[1], int(symbol[3]))

    @property
    def symbol(self) -> str:
        return f"({self.owner},{self.bit})"


ALL_EXISTS_ZERO = constant_tree(GAME_ALPHABET, "(E,0)")
ALL_FORALL_ONE = constant_tree(GAME_ALPHABET, "(A,1)")


def _require_game_alphabet(t: RegularTree):
    if not same_symbols(t.alphabet, GAME_ALPHABET):
        raise TreeError("tree is not over the game alphabet")


def game_of_tree(t: RegularTree) -> ParityGame:
    """The induced parity game on the tree's generator nodes."""
    _require_game_alphabet(t)
    owner, priority, successors = {}, {}, {}
    for v in t.nodes:
        lab = GameLabel.from_symbol(t.label[v])
        owner[v] = EVE if lab.owner == "E" else ADAM
        priority[v] = lab.bit
        successors[v] = (t.left[v], t.right[v])
    return ParityGame(t.nodes, owner, priority, successors)


def in_w01(t: RegularTree) -> bool:
    """Whether Eve wins the induced game from the root."""
    return t.root in solve(game_of_tree(t)).eve_region


def in_w01_prime(t: RegularTree) -> bool:
    """Whether the dual-renamed tree lands in W01; equivalently, whether
    Adam wins the induced game with the strong requirement that the highest
    bit seen infinitely often is 1."""
    return in_w01(rename_tree(t, DUALITY))


# ---------------------------------------------------------------------------
# Borel codes.

class BorelCode:
    __slots__ = ()

    @property
    def rank(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Cyl(BorelCode):
    """Cylinder: all trees matching a finite assignment of game labels to
    node words."""

    assign: tuple

    def __post_init__(self):
        entries = dict(self.assign)
        for word, symbol in entries.items():
            check_node_word(word)
            if symbol not in GAME_ALPHABET:
                raise TreeError(f"cylinder value {symbol!r} is not a game label")
        object.__setattr__(self, "assign", tuple(sorted(entries.items())))

    @property
    def rank(self) -> int:
        return 0


@dataclass(frozen=True)
class Neg(BorelCode):
    of: BorelCode

    @property
    def rank(self) -> int:
        return self.of.rank


@dataclass(frozen=True)
class Union(BorelCode):
    """Countable union: the head codes, then the tail code repeating forever
    (no tail means the union is just the finite head)."""

    head: tuple
    tail: BorelCode | None = None

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        if not self.head and self.tail is None:
            raise TreeError("Union needs a head member or a tail")

    @property
    def rank(self) -> int:
        parts = [c.rank for c in self.head]
        if self.tail is not None:
            parts.append(self.tail.rank)
        return 1 + max(parts)


def eval_borel(code: BorelCode, t: RegularTree) -> bool:
    """Membership of the tree in the coded set."""
    _require_game_alphabet(t)
    if isinstance(code, Cyl):
        return all(label_at(t, word) == symbol for word, symbol in code.assign)
    if isinstance(code, Neg):
        return not eval_borel(code.of, t)
    if isinstance(code, Union):
        if any(eval_borel(c, t) for c in code.head):
            return True
        return code.tail is not None and eval_borel(code.tail, t)
    raise TreeError(f"not a Borel code: {code!r}")


def reduce_borel(code: BorelCode, t: RegularTree) -> RegularTree:
    """Continuous reduction to the W01/W01-prime pair: the result is in W01
    exactly when the tree is in the coded set, and in W01-prime exactly when
    it is not.

    Cylinders collapse to the constant witnesses, complement is the duality
    renaming, and unions hang the member reductions off an Eve spine with
    bit 1: Eve wins by leaving the spine into a member that holds, and loses
    strongly if she stays (bit 1 forever) or enters a member that fails.
    """
    _require_game_alphabet(t)
    if isinstance(code, Cyl):
        return ALL_EXISTS_ZERO if eval_borel(code, t) else ALL_FORALL_ONE
    if isinstance(code, Neg):
        return rename_tree(reduce_borel(code.of, t), DUALITY)
    if isinstance(code, Union):
        head = [reduce_borel(c, t) for c in code.head]
        tail = reduce_borel(code.tail, t) if code.tail is not None else None
        return graft_spine(head, tail, "(E,1)")
    raise TreeError(f"not a Borel code: {code!r}")


def read_depth(code: BorelCode) -> int:
    """Length of the longest node word any cylinder reads; -1 when the code
    never looks at the tree.  Trees agreeing on all words up to this length
    reduce to bisimilar outputs."""
    if isinstance(code, Cyl):
        return max((len(word) for word, _ in code.assign), default=-1)
    if isinstance(code, Neg):
        return read_depth(code.of)
    if isinstance(code, Union):
        parts = [read_depth(c) for c in code.head]
        if code.tail is not None:
            parts.append(read_depth(code.tail))
        return max(parts)
    raise TreeError(f"not a Borel code: {code!r}")


# ---------------------------------------------------------------------------
# Membership in the plain parity languages and the rightmost-branch
# separator, decided on the generator directly.

def parity_lang_member(t: RegularTree, i: int, k: int) -> bool:
    """Whether every branch of a tree labeled by i..k has even limsup.  All
    positions belong to Adam (he picks the branch), so this holds exactly
    when every reachable cycle of the generator has an even maximum."""
    if i not in (0, 1) or k < i:
        raise TreeError("labels must run from i in {0,1} to k >= i")
    allowed = {str(m) for m in range(i, k + 1)}
    for v in t.nodes:
        if t.label[v] not in allowed:
            raise TreeError(f"label {t.label[v]!r} outside {sorted(allowed)}")
    owner = {v: ADAM for v in t.nodes}
    priority = {v: int(t.label[v]) for v in t.nodes}
    successors = {v: (t.left[v], t.right[v]) for v in t.nodes}
    game = ParityGame(t.nodes, owner, priority, successors)
    return t.root in solve(game).eve_region


def in_rightmost_separator(t: RegularTree) -> bool:
    """Whether the rightmost branch carries finitely many 1s."""
    if not same_symbols(t.alphabet, BINARY):
        raise TreeError("tree is not over the 0/1 alphabet")
    return member(builtin("K-det"), t)


# ---------------------------------------------------------------------------
# Serialization:
#   {"kind": "cyl", "assign": {"12": "(E,0)"}}
#   {"kind": "neg", "of": {...}}
#   {"kind": "union", "head": [...], "tail": {...} or null}

def code_to_json(code: BorelCode) -> dict:
    if isinstance(code, Cyl):
        return {"kind": "cyl", "assign": {word: symbol for word, symbol in code.assign}}
    if isinstance(code, Neg):
        return {"kind": "neg", "of": code_to_json(code.of)}
    if isinstance(code, Union):
        return {
            "kind": "union",
            "head": [code_to_json(c) for c in code.head],
            "tail": None if code.tail is None else code_to_json(code.tail),
        }
    raise TreeError(f"not a Borel code: {code!r}")


def code_from_json(doc) -> BorelCode:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise TreeError("code document: missing field 'kind'")
    kind = doc["kind"]
    if kind == "cyl":
        assign = doc.get("assign")
        if not isinstance(assign, dict):
            raise TreeError("cyl code: field 'assign' must be an object")
        return Cyl(tuple(assign.items()))
    if kind == "neg":
        if "of" not in doc:
            raise TreeError("neg code: missing field 'of'")
        return Neg(code_from_json(doc["of"]))
    if kind == "union":
        head = doc.get("head")
        if not isinstance(head, list):
            raise TreeError("union code: field 'head' must be a list")
        tail = doc.get("tail")
        return Union(tuple(code_from_json(c) for c in head),
                     None if tail is None else code_from_json(tail))
    raise TreeError(f"code document: unknown kind {kind!r}")
