"""Finitely presented infinite binary labeled trees.

An infinite full binary tree assigns a symbol of a finite alphabet to every
node word over the directions {1, 2}.  A tree with finitely many distinct
subtrees is stored as a finite generator graph: a set of nodes, a root, a
label per node and total left/right child maps.  Walking the generator along
a node word and reading the label evaluates the tree; re-rooting the same
generator yields subtrees.

Equality of the generated trees is bisimilarity of generators, and the
standard tree metric d(t1, t2) = 2^-n, with n the length of the shortest
disagreeing node word, is computed exactly by breadth-first search over the
product of the two generators.

All values are immutable after construction and every operation is a pure
function.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

LEFT = "1"
RIGHT = "2"
DIRECTIONS = (LEFT, RIGHT)

# Filler used by graft_spine when no explicit tail is given: the constant
# tree on this symbol (the strong-win-for-Adam constant of the game alphabet).
DEFAULT_TAIL_LABEL = "(A,1)"


class TreeError(ValueError):
    """Malformed generator, alphabet mismatch or bad document."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite collection of distinct symbol names."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise TreeError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise TreeError("alphabet symbols must be distinct")
        for s in self.symbols:
            if not isinstance(s, str):
                raise TreeError(f"symbol {s!r} is not a string")

    def __contains__(self, symbol):
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)


def same_symbols(a: Alphabet, b: Alphabet) -> bool:
    """Alphabet compatibility is by symbol set; order is presentation only."""
    return set(a.symbols) == set(b.symbols)


@dataclass(frozen=True)
class RegularTree:
    """Finite generator of an infinite binary labeled tree.

    Construction trims nodes unreachable from the root and checks that the
    label and both child maps are total on what remains, so a RegularTree
    always generates a total labeling of all node words.  Node ids may be any
    hashable value; serialization relabels non-scalar ids.
    """

    alphabet: Alphabet
    root: object
    label: dict
    left: dict
    right: dict

    def __post_init__(self):
        if self.root not in self.label:
            raise TreeError(f"root {self.root!r} has no label")
        order = []
        seen = {self.root}
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for child_map, side in ((self.left, "left"), (self.right, "right")):
                if v not in child_map:
                    raise TreeError(f"node {v!r} has no {side} child")
                c = child_map[v]
                if c not in self.label:
                    raise TreeError(f"{side} child {c!r} of {v!r} is not a labeled node")
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        for v in order:
            if self.label[v] not in self.alphabet:
                raise TreeError(f"label {self.label[v]!r} of node {v!r} is not in the alphabet")
        # Keep reachable nodes only, in breadth-first order from the root.
        object.__setattr__(self, "label", {v: self.label[v] for v in order})
        object.__setattr__(self, "left", {v: self.left[v] for v in order})
        object.__setattr__(self, "right", {v: self.right[v] for v in order})

    @property
    def nodes(self) -> tuple:
        """Generator nodes in breadth-first order from the root."""
        return tuple(self.label)

    def step(self, node, direction):
        if direction == LEFT:
            return self.left[node]
        if direction == RIGHT:
            return self.right[node]
        raise TreeError(f"direction must be '1' or '2', got {direction!r}")

    def walk(self, word: str):
        """Node reached from the root along a word over '1'/'2'."""
        v = self.root
        for d in word:
            v = self.step(v, d)
        return v


def label_at(t: RegularTree, word: str) -> str:
    """Symbol of the generated tree at the given node word."""
    return t.label[t.walk(word)]


def reroot(t: RegularTree, word: str) -> RegularTree:
    """Subtree at the given node word, presented by the same generator."""
    return RegularTree(t.alphabet, t.walk(word), t.label, t.left, t.right)


def constant_tree(alphabet: Alphabet, symbol: str) -> RegularTree:
    if symbol not in alphabet:
        raise TreeError(f"symbol {symbol!r} is not in the alphabet")
    return RegularTree(alphabet, 0, {0: symbol}, {0: 0}, {0: 0})


def bisimilar(t1: RegularTree, t2: RegularTree) -> bool:
    """Whether two generators present the same tree."""
    if not same_symbols(t1.alphabet, t2.alphabet):
        raise TreeError("alphabet mismatch")
    seen = {(t1.root, t2.root)}
    queue = deque(seen)
    while queue:
        a, b = queue.popleft()
        if t1.label[a] != t2.label[b]:
            return False
        for pair in ((t1.left[a], t2.left[b]), (t1.right[a], t2.right[b])):
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def tree_distance(t1: RegularTree, t2: RegularTree, depth_cap: int | None = None) -> Fraction:
    """Exact tree metric 2^-n, n the length of the shortest disagreeing word.

    Returns 0 when the trees are equal.  The search runs over the finite
    product of the generators, so it always terminates; a disagreement can
    only surface at depth below the product size.  `depth_cap`, if given,
    bounds the reported n and raises if the first disagreement lies deeper.
    """
    if not same_symbols(t1.alphabet, t2.alphabet):
        raise TreeError("alphabet mismatch")
    seen = {(t1.root, t2.root)}
    layer = deque([(t1.root, t2.root, 0)])
    while layer:
        a, b, depth = layer.popleft()
        if t1.label[a] != t2.label[b]:
            if depth_cap is not None and depth > depth_cap:
                raise TreeError(f"first disagreement at depth {depth} exceeds cap {depth_cap}")
            return Fraction(1, 2 ** depth)
        for pair in ((t1.left[a], t2.left[b]), (t1.right[a], t2.right[b])):
            if pair not in seen:
                seen.add(pair)
                layer.append((pair[0], pair[1], depth + 1))
    return Fraction(0)


@dataclass(frozen=True)
class LetterRenaming:
    """Permutation of a symbol set, applied to labels pointwise."""

    mapping: dict

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))
        values = list(self.mapping.values())
        if len(set(values)) != len(values):
            raise TreeError("renaming is not injective")
        if set(values) != set(self.mapping):
            raise TreeError("renaming must permute its own domain")

    def apply(self, symbol: str) -> str:
        try:
            return self.mapping[symbol]
        except KeyError:
            raise TreeError(f"symbol {symbol!r} outside renaming domain") from None

    def inverse(self) -> "LetterRenaming":
        return LetterRenaming({v: k for k, v in self.mapping.items()})

    def is_involution(self) -> bool:
        return all(self.mapping[v] == k for k, v in self.mapping.items())


def rename_tree(t: RegularTree, renaming: LetterRenaming) -> RegularTree:
    """Tree with every label replaced by its image under the renaming."""
    new_label = {v: renaming.apply(s) for v, s in t.label.items()}
    return RegularTree(t.alphabet, t.root, new_label, dict(t.left), dict(t.right))


def graft_spine(subtrees_head, subtrees_tail, spine_label: str) -> RegularTree:
    """Hang subtrees off the rightmost branch.

    The result carries `spine_label` on every node 2^n of the rightmost
    branch; node 2^n 1 roots subtrees_head[n] while the head lasts, and one
    shared copy of subtrees_tail beyond it (the spine loops there, keeping
    the result regular).  With subtrees_tail=None the constant tree on
    DEFAULT_TAIL_LABEL fills in.
    """
    head = list(subtrees_head)
    inputs = head + ([subtrees_tail] if subtrees_tail is not None else [])
    if not inputs:
        raise TreeError("graft_spine needs at least one subtree")
    alphabet = inputs[0].alphabet
    for t in inputs[1:]:
        if not same_symbols(t.alphabet, alphabet):
            raise TreeError("graft_spine inputs must share an alphabet")
    if spine_label not in alphabet:
        raise TreeError(f"spine label {spine_label!r} is not in the alphabet")
    if subtrees_tail is None:
        if DEFAULT_TAIL_LABEL not in alphabet:
            raise TreeError(f"no tail given and {DEFAULT_TAIL_LABEL!r} is not in the alphabet")
        subtrees_tail = constant_tree(alphabet, DEFAULT_TAIL_LABEL)

    label, left, right = {}, {}, {}

    def add_copy(tag, t):
        for v in t.nodes:
            label[tag, v] = t.label[v]
            left[tag, v] = (tag, t.left[v])
            right[tag, v] = (tag, t.right[v])
        return (tag, t.root)

    head_roots = [add_copy(("h", i), t) for i, t in enumerate(head)]
    tail_root = add_copy("t", subtrees_tail)
    k = len(head)
    for n in range(k + 1):
        s = ("s", n)
        label[s] = spine_label
        right[s] = ("s", n + 1) if n < k else s
        left[s] = head_roots[n] if n < k else tail_root
    return RegularTree(alphabet, ("s", 0), label, left, right)


def random_regular_tree(alphabet: Alphabet, max_nodes: int, seed: int) -> RegularTree:
    """Random generator with at most max_nodes nodes, deterministic in seed."""
    if max_nodes < 1:
        raise TreeError("max_nodes must be at least 1")
    rng = random.Random(seed)
    n = rng.randint(1, max_nodes)
    label = {i: rng.choice(alphabet.symbols) for i in range(n)}
    left = {i: rng.randrange(n) for i in range(n)}
    right = {i: rng.randrange(n) for i in range(n)}
    return RegularTree(alphabet, 0, label, left, right)


# ---------------------------------------------------------------------------
# Serialization.  Node words travel as strings over '1'/'2'; trees as
#   {"alphabet": [...], "root": id, "nodes": [{"id", "label", "left", "right"}]}
# with scalar (string or integer) node ids.  Other ids are relabeled in
# breadth-first order.

def check_node_word(word) -> str:
    if not isinstance(word, str) or any(d not in DIRECTIONS for d in word):
        raise TreeError(f"node word must be a string over '1'/'2', got {word!r}")
    return word


def _scalar_ids(t: RegularTree) -> dict:
    if all(isinstance(v, (str, int)) and not isinstance(v, bool) for v in t.nodes):
        return {v: v for v in t.nodes}
    return {v: i for i, v in enumerate(t.nodes)}


def tree_to_json(t: RegularTree) -> dict:
    ids = _scalar_ids(t)
    return {
        "alphabet": list(t.alphabet.symbols),
        "root": ids[t.root],
        "nodes": [
            {"id": ids[v], "label": t.label[v], "left": ids[t.left[v]], "right": ids[t.right[v]]}
            for v in t.nodes
        ],
    }


def _require(doc, key, kinds, what):
    if not isinstance(doc, dict) or key not in doc:
        raise TreeError(f"{what}: missing field {key!r}")
    value = doc[key]
    if kinds is not None and not isinstance(value, kinds):
        raise TreeError(f"{what}: field {key!r} has the wrong type")
    return value


def tree_from_json(doc: dict) -> RegularTree:
    symbols = _require(doc, "alphabet", list, "tree document")
    alphabet = Alphabet(tuple(symbols))
    root = _require(doc, "root", (str, int), "tree document")
    entries = _require(doc, "nodes", list, "tree document")
    label, left, right = {}, {}, {}
    for entry in entries:
        v = _require(entry, "id", (str, int), "tree node")
        if v in label:
            raise TreeError(f"duplicate node id {v!r}")
        label[v] = _require(entry, "label", str, "tree node")
        left[v] = _require(entry, "left", (str, int), "tree node")
        right[v] = _require(entry, "right", (str, int), "tree node")
    return RegularTree(alphabet, root, label, left, right)


def dump_tree(t: RegularTree, path) -> None:
    with open(path, "w") as handle:
        json.dump(tree_to_json(t), handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_tree(path) -> RegularTree:
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise TreeError(f"not valid JSON: {exc}") from None
    return tree_from_json(doc)
