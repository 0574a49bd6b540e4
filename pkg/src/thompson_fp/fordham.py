"""Caret classification and the word metric for positive elements of F(p).

Every caret of the source tree of a reduced positive diagram gets one of six
classes, and the word length of the element equals the sum of the weights:

    root           0      left           1
    middle_empty   1      middle_full    3
    right_empty    0      right_full     2

Base kinds propagate from the root downwards.  Writing M^i (1 <= i <= p-1)
for the middle kinds, the children of a caret get kinds and an order role
(predecessor children come before the caret in the caret total order,
successor children after it):

    root:   child 0 -> left (pred); children 1..p-2 -> M^1..M^{p-2};
            child p-1 -> right (succ)
    left:   child 0 -> left (pred); children 1..p-1 -> M^1..M^{p-1} (succ)
    right:  child 0 -> M^{p-1} (pred); children 1..p-2 -> M^1..M^{p-2};
            child p-1 -> right (succ)
    M^i:    children 0..p-i-1 -> M^i..M^{p-1} (pred);
            children p-i..p-1 -> M^1..M^i (succ)

The total order lists, recursively, the predecessor subtrees, then the caret,
then the successor subtrees.  A right caret is right_full when some middle
caret occurs after it in the total order (equivalently, anywhere among its
transitive successors), otherwise right_empty.  A middle caret is middle_full
when at least one of its successor children is a caret, otherwise
middle_empty.  In a reduced positive tree at most one caret is right_empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagrams import PTree, TreePair, evaluate, is_right_spine, reduce
from .words import Letter

ROOT = "root"
LEFT = "left"
MIDDLE_EMPTY = "middle_empty"
MIDDLE_FULL = "middle_full"
RIGHT_EMPTY = "right_empty"
RIGHT_FULL = "right_full"

# Unrefined kind names, for weighing hanging subtrees.
MIDDLE = "middle"
RIGHT = "right"

# Single source of truth for the weights; classification reads it live.
CARET_WEIGHTS = {
    ROOT: 0,
    LEFT: 1,
    MIDDLE_EMPTY: 1,
    MIDDLE_FULL: 3,
    RIGHT_EMPTY: 0,
    RIGHT_FULL: 2,
}


class NotPositiveError(ValueError):
    pass


@dataclass(frozen=True)
class CaretClass:
    kind: str
    middle_index: int | None = None  # i for M^i carets

    @property
    def weight(self) -> int:
        return CARET_WEIGHTS[self.kind]


@dataclass(frozen=True)
class ClassifiedTree:
    p: int
    tree: PTree
    classes: dict[int, CaretClass]  # preorder caret index -> class
    order: tuple[int, ...]  # preorder indices in caret total order

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.classes.values())

    def to_json(self) -> dict:
        return {
            str(i): {
                "class": c.kind,
                "middle_index": c.middle_index,
                "weight": c.weight,
            }
            for i, c in self.classes.items()
        }


# Base kind codes used during traversal.
_ROOT, _LEFT, _MID, _RIGHT = 0, 1, 2, 3


def _child_kinds(p: int, kind: int, mid_i: int) -> tuple[list, list]:
    """(predecessor, successor) lists of (child position, kind, middle index)."""
    if kind == _ROOT:
        return (
            [(0, _LEFT, 0)],
            [(c, _MID, c) for c in range(1, p - 1)] + [(p - 1, _RIGHT, 0)],
        )
    if kind == _LEFT:
        return [(0, _LEFT, 0)], [(c, _MID, c) for c in range(1, p)]
    if kind == _RIGHT:
        return (
            [(0, _MID, p - 1)],
            [(c, _MID, c) for c in range(1, p - 1)] + [(p - 1, _RIGHT, 0)],
        )
    preds = [(c, _MID, mid_i + c) for c in range(p - mid_i)]
    succs = [(p - mid_i + k, _MID, k + 1) for k in range(mid_i)]
    return preds, succs


def classify(p: int, tree: PTree) -> ClassifiedTree:
    """Classify every caret of a tree read as the source of a positive diagram."""
    if tree.children is None:
        raise ValueError("the empty tree has no carets to classify")

    preorder: dict[int, int] = {}

    def number(t: PTree) -> None:
        if t.children is None:
            return
        preorder[id(t)] = len(preorder)
        for c in t.children:
            number(c)

    number(tree)

    classes: dict[int, CaretClass] = {}
    order: list[int] = []

    def visit(t: PTree, kind: int, mid_i: int) -> None:
        preds, succs = _child_kinds(p, kind, mid_i)
        for pos, ck, ci in preds:
            child = t.children[pos]
            if child.children is not None:
                visit(child, ck, ci)
        my = preorder[id(t)]
        if kind == _MID:
            full = any(
                t.children[pos].children is not None for pos, _, _ in succs
            )
            classes[my] = CaretClass(MIDDLE_FULL if full else MIDDLE_EMPTY, mid_i)
        elif kind == _ROOT:
            classes[my] = CaretClass(ROOT)
        elif kind == _LEFT:
            classes[my] = CaretClass(LEFT)
        else:
            classes[my] = CaretClass(RIGHT_EMPTY)  # refined below
        order.append(my)
        for pos, ck, ci in succs:
            child = t.children[pos]
            if child.children is not None:
                visit(child, ck, ci)

    visit(tree, _ROOT, 0)

    # A right caret with a middle caret after it in the total order is full.
    middle_seen = False
    for idx in reversed(order):
        kind = classes[idx].kind
        if kind in (MIDDLE_EMPTY, MIDDLE_FULL):
            middle_seen = True
        elif kind == RIGHT_EMPTY and middle_seen:
            classes[idx] = CaretClass(RIGHT_FULL)

    return ClassifiedTree(p, tree, classes, tuple(order))


def tree_weight(p: int, tree: PTree, root_kind: str = ROOT, middle_index: int = 0) -> int:
    """Total caret weight of a tree, without building the classification.

    `root_kind`/`middle_index` let a tree be weighed as a hanging subtree
    (e.g. a middle subtree of kind M^i); the default weighs a source tree.
    """
    if tree.children is None:
        return 0
    kind0 = {ROOT: _ROOT, LEFT: _LEFT, RIGHT: _RIGHT, MIDDLE: _MID}[root_kind]
    entries: list[int] = []  # base kind codes in caret total order

    def visit(t: PTree, kind: int, mid_i: int) -> None:
        preds, succs = _child_kinds(p, kind, mid_i)
        for pos, ck, ci in preds:
            child = t.children[pos]
            if child.children is not None:
                visit(child, ck, ci)
        if kind == _MID:
            full = any(t.children[pos].children is not None for pos, _, _ in succs)
            entries.append(5 if full else 4)
        else:
            entries.append(kind)
        for pos, ck, ci in succs:
            child = t.children[pos]
            if child.children is not None:
                visit(child, ck, ci)

    visit(tree, kind0, middle_index)

    w = CARET_WEIGHTS
    w_root, w_left = w[ROOT], w[LEFT]
    w_me, w_mf = w[MIDDLE_EMPTY], w[MIDDLE_FULL]
    w_re, w_rf = w[RIGHT_EMPTY], w[RIGHT_FULL]
    total = 0
    middle_seen = False
    for code in reversed(entries):
        if code == 4:
            total += w_me
            middle_seen = True
        elif code == 5:
            total += w_mf
            middle_seen = True
        elif code == _RIGHT:
            total += w_rf if middle_seen else w_re
        elif code == _LEFT:
            total += w_left
        else:
            total += w_root
    return total


def positive_length(p: int, element: Union[TreePair, tuple, list]) -> int:
    """Word length of a positive element, from its classified source tree.

    Accepts a TreePair or a word (sequence of letters).  Raises
    NotPositiveError for elements that are not positive.
    """
    if isinstance(element, TreePair):
        if element.p != p:
            raise ValueError(f"mismatched p: {element.p} != {p}")
        pair = reduce(element)
    else:
        pair = evaluate(p, tuple(element))
    if not is_right_spine(p, pair.target):
        raise NotPositiveError(
            "Fordham positive method inapplicable: element is not positive"
        )
    if pair.source.children is None:
        return 0
    return tree_weight(p, pair.source)
