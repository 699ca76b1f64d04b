"""Words over a Cartan index set, the 2-/3-/4-move rewriting system, BFS over
the move graph, and i-box index combinatorics.

Positions are 1-based throughout.  6-move windows (Cartan pairs with
c_ij * c_ji = 3) are detected and refused rather than rewritten.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence

from .cartan import CartanData, roots_of_word
from .errors import (
    BudgetExhausted,
    InvalidBox,
    MoveNotApplicable,
    NotConnected,
    UnsupportedCartanPair,
)

DEFAULT_BUDGET = 200_000
BUDGET_ENV = "BRAIDSEED_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class WordKind(Enum):
    WEYL_REDUCED = "weyl-reduced"
    POSITIVE_BRAID = "positive-braid"


@dataclass(frozen=True)
class Word:
    letters: tuple
    kind: WordKind = WordKind.WEYL_REDUCED

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    @property
    def length(self) -> int:
        return len(self.letters)

    def letter(self, k: int):
        """Letter at 1-based position k."""
        return self.letters[k - 1]

    def replace(self, k: int, new_window: Sequence) -> "Word":
        """New word with positions k..k+len(new_window)-1 overwritten."""
        out = list(self.letters)
        out[k - 1 : k - 1 + len(new_window)] = list(new_window)
        return Word(tuple(out), self.kind)


def validate_word(cd: CartanData, w: Word) -> None:
    """Check letters lie in the index set; WeylReduced words must be reduced."""
    for i in w.letters:
        if i not in cd.position:
            raise InvalidBox(f"letter {i!r} not in the index set")
    if w.kind is WordKind.WEYL_REDUCED:
        if not roots_of_word(cd, w.letters).all_positive:
            raise MoveNotApplicable(
                f"word {w.letters} is not a reduced expression"
            )


class MoveKind(Enum):
    TWO = 2
    THREE = 3
    FOUR = 4

    @property
    def window(self) -> int:
        return self.value


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    position: int  # leftmost index of the affected window, 1-based

    def __str__(self) -> str:
        return f"{self.kind.name.title()}@{self.position}"


class MoveScan(NamedTuple):
    moves: tuple
    unsupported: tuple  # leftmost positions of 6-move windows


def enumerate_moves(cd: CartanData, w: Word) -> MoveScan:
    """All applicable moves, plus positions of 6-move windows we refuse.

    At a fixed position at most one move kind matches, because the kinds are
    classified by c_ij * c_ji of the letter pair.
    """
    letters = w.letters
    n = len(letters)
    moves = []
    unsupported = []
    for k in range(1, n):
        i, j = letters[k - 1], letters[k]
        if i == j:
            continue
        prod = cd.pair_product(i, j)
        if prod == 0:
            moves.append(Move(MoveKind.TWO, k))
        elif prod == 1:
            if k + 1 < n and letters[k + 1] == i:
                moves.append(Move(MoveKind.THREE, k))
        elif prod == 2:
            if k + 2 < n and letters[k + 1] == i and letters[k + 2] == j:
                moves.append(Move(MoveKind.FOUR, k))
        elif prod == 3:
            if k + 4 < n and letters[k + 1 : k + 5] == (i, j, i, j):
                unsupported.append(k)
    return MoveScan(tuple(moves), tuple(unsupported))


def apply_move(w: Word, m: Move) -> Word:
    """Rewrite the window of m; shape-level applicability is checked here.

    The Cartan-entry side of applicability is established by enumerate_moves;
    this function only needs the letters to match the window pattern.
    """
    k = m.position
    size = m.kind.window
    if k < 1 or k + size - 1 > w.length:
        raise MoveNotApplicable(f"{m} window leaves the word")
    window = w.letters[k - 1 : k - 1 + size]
    i, j = window[0], window[1]
    if i == j:
        raise MoveNotApplicable(f"{m} window letters are equal")
    if m.kind is MoveKind.TWO:
        return w.replace(k, (j, i))
    if m.kind is MoveKind.THREE:
        if window != (i, j, i):
            raise MoveNotApplicable(f"{m} window is not of shape iji")
        return w.replace(k, (j, i, j))
    if window != (i, j, i, j):
        raise MoveNotApplicable(f"{m} window is not of shape ijij")
    return w.replace(k, (j, i, j, i))


def _check_no_sixmove_pairs(cd: CartanData, letters: Sequence) -> None:
    present = sorted(set(letters), key=cd.position.__getitem__)
    for a in range(len(present)):
        for b in range(a + 1, len(present)):
            if cd.pair_product(present[a], present[b]) == 3:
                raise UnsupportedCartanPair(
                    f"letters {present[a]!r}, {present[b]!r} have c_ij*c_ji = 3; "
                    "their braid relation is outside the move system"
                )


def _bfs(cd: CartanData, start: Word, target: tuple, budget: int):
    """Explore the move graph from start.

    Returns ('found', path) when target is reached, ('exhausted', None) when
    the whole component was enumerated without it, ('budget', None) otherwise.
    """
    if start.letters == target:
        return "found", []
    visited = {start.letters: (None, None)}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for move in enumerate_moves(cd, current).moves:
            nxt = apply_move(current, move)
            if nxt.letters in visited:
                continue
            visited[nxt.letters] = (current.letters, move)
            if nxt.letters == target:
                path = []
                cursor = nxt.letters
                while visited[cursor][1] is not None:
                    prev, mv = visited[cursor]
                    path.append(mv)
                    cursor = prev
                path.reverse()
                return "found", path
            if len(visited) >= budget:
                return "budget", None
            queue.append(nxt)
    return "exhausted", None


def find_move_path(
    cd: CartanData, w: Word, w2: Word, budget: Optional[int] = None
) -> list:
    """Shortest move sequence from w to w2, BFS with (position, kind) ties.

    Raises NotConnected with definitive=True when the finite component of w
    was fully enumerated without meeting w2, definitive=False on budget
    exhaustion.
    """
    _check_no_sixmove_pairs(cd, w.letters + w2.letters)
    if w.length != w2.length:
        raise NotConnected("words of different lengths", definitive=True)
    status, path = _bfs(cd, w, w2.letters, budget or default_budget())
    if status == "found":
        return path
    raise NotConnected(
        f"no move path from {w.letters} to {w2.letters}",
        definitive=(status == "exhausted"),
    )


def words_equal_in_monoid(
    cd: CartanData, w: Word, w2: Word, budget: Optional[int] = None
) -> bool:
    """Positive-braid-monoid equality, decided by move-graph connectivity.

    The defining relations are length-homogeneous, so unequal lengths decide
    immediately; otherwise equality is exactly connectivity in the move graph.
    """
    _check_no_sixmove_pairs(cd, w.letters + w2.letters)
    if w.length != w2.length:
        return False
    status, _ = _bfs(cd, w, w2.letters, budget or default_budget())
    if status == "budget":
        raise BudgetExhausted(
            f"move-graph search stopped after {budget or default_budget()} words"
        )
    return status == "found"


class NeighborIndex(NamedTuple):
    minus: int
    plus: int
    minus_j: Optional[int]
    plus_j: Optional[int]


def neighbor_index(w: Word, a: int, j=None) -> NeighborIndex:
    """a-, a+ for the letter at a, and the j-relative versions when j is given.

    a- is the previous position with the same letter (0 when none); a+ the
    next one (length+1 when none); a-(j) and a+(j) scan for the letter j
    instead of i_a.
    """
    if not 1 <= a <= w.length:
        raise InvalidBox(f"position {a} outside [1, {w.length}]")
    target = w.letter(a)
    minus = max((k for k in range(1, a) if w.letter(k) == target), default=0)
    plus = min(
        (k for k in range(a + 1, w.length + 1) if w.letter(k) == target),
        default=w.length + 1,
    )
    minus_j = plus_j = None
    if j is not None:
        minus_j = max((k for k in range(1, a) if w.letter(k) == j), default=0)
        plus_j = min(
            (k for k in range(a + 1, w.length + 1) if w.letter(k) == j),
            default=w.length + 1,
        )
    return NeighborIndex(minus, plus, minus_j, plus_j)


@dataclass(frozen=True)
class EmptyBox:
    """Box with no positions: zero vector, unit torus element."""


EMPTY_BOX = EmptyBox()


@dataclass(frozen=True)
class IBox:
    lo: int
    hi: int
    brace: bool = False  # brace=True encodes the half-open [a, b} convention

    def __str__(self) -> str:
        close = "}" if self.brace else "]"
        return f"[{self.lo},{self.hi}{close}"


def make_ibox(lo: int, hi: int, brace: bool = False):
    """IBox constructor that collapses inverted ranges to the empty box."""
    if lo > hi:
        return EMPTY_BOX
    return IBox(lo, hi, brace)


def resolve_ibox(w: Word, box):
    """Closed box [a, c] underlying box; EMPTY_BOX passes through.

    A brace box [a, b} resolves to [a, b] when i_a = i_b and otherwise to
    [a, c] with c the last position before b carrying i_a; a itself always
    qualifies, so the resolution never fails for a <= b.
    """
    if box is EMPTY_BOX or isinstance(box, EmptyBox):
        return EMPTY_BOX
    a, b = box.lo, box.hi
    if not 1 <= a <= b <= w.length:
        raise InvalidBox(f"box {box} outside [1, {w.length}]")
    if not box.brace:
        if w.letter(a) != w.letter(b):
            raise InvalidBox(f"box {box}: endpoints carry different letters")
        return IBox(a, b, brace=False)
    if w.letter(a) == w.letter(b):
        return IBox(a, b, brace=False)
    c = max(k for k in range(a, b) if w.letter(k) == w.letter(a))
    return IBox(a, c, brace=False)


def ibox_vector(w: Word, box) -> tuple:
    """0/1 vector marking the positions of the box letter inside the box."""
    if box is EMPTY_BOX or isinstance(box, EmptyBox):
        return (0,) * w.length
    resolved = resolve_ibox(w, box)
    target = w.letter(resolved.lo)
    return tuple(
        1 if resolved.lo <= k <= resolved.hi and w.letter(k) == target else 0
        for k in range(1, w.length + 1)
    )


def move_to_json(m: Move) -> dict:
    return {"kind": str(m.kind.window), "pos": m.position}


def move_from_json(payload: dict) -> Move:
    kinds = {"2": MoveKind.TWO, "3": MoveKind.THREE, "4": MoveKind.FOUR}
    if payload.get("kind") not in kinds:
        raise MoveNotApplicable(f"unknown move kind {payload.get('kind')!r}")
    return Move(kinds[payload["kind"]], int(payload["pos"]))
