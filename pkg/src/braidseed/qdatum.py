"""Height functions on simply-laced diagrams and the repetition lattice.

A height function orients the diagram; repeatedly extracting sources
yields an adapted longest word, whose infinite star-periodic extension
is in bijection with the lattice of (vertex, level) pairs.  On top of
that sit the level windows, the bijection to positive roots with a
winding number, the reindexed exchange matrix of a window, the inverse
quantum Cartan series, and the standard monomial exponent patterns.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .cartan import CartanData, finite_type_data, reflect_root
from .errors import (
    DimensionMismatch,
    HeightParityViolation,
    NonContiguousWindow,
    NotASource,
    NotInvertibleAtOrder,
    NotSimplyLaced,
    PointOutsideLattice,
    SeriesOrderInsufficient,
)
from .seeds import gls_matrix
from .words import Word, WordKind


@dataclass(frozen=True)
class QDatum:
    """Simply-laced Cartan data with a height per vertex.

    The orientation is derived: an arrow i -> j exists exactly when the
    vertices are adjacent and the height drops along it.
    """

    cartan: CartanData
    heights: tuple

    def height(self, i) -> int:
        return self.heights[self.cartan.position[i]]

    @property
    def arrows(self) -> tuple:
        out = []
        for i in self.cartan.index_set:
            for j in self.cartan.index_set:
                if self.cartan.entry(i, j) == -1 and self.height(i) > self.height(j):
                    out.append((i, j))
        return tuple(out)

    def is_source(self, i) -> bool:
        return all(
            self.height(j) < self.height(i)
            for j in self.cartan.index_set
            if self.cartan.entry(i, j) == -1
        )

    def is_sink(self, i) -> bool:
        return all(
            self.height(j) > self.height(i)
            for j in self.cartan.index_set
            if self.cartan.entry(i, j) == -1
        )


@dataclass(frozen=True)
class RepetitionPoint:
    vertex: int
    level: int

    def __str__(self) -> str:
        return f"({self.vertex},{self.level})"


def validate_height(cd: CartanData, xi: Sequence[int]) -> QDatum:
    """Build a QDatum, checking simply-lacedness and the unit-step rule."""
    for i in cd.index_set:
        for j in cd.index_set:
            if i != j and cd.entry(i, j) not in (0, -1):
                raise NotSimplyLaced(
                    f"entry c[{i},{j}] = {cd.entry(i, j)} outside {{0, -1}}"
                )
    if len(xi) != len(cd.index_set):
        raise DimensionMismatch(
            f"got {len(xi)} heights for {len(cd.index_set)} vertices"
        )
    qd = QDatum(cd, tuple(int(v) for v in xi))
    for i in cd.index_set:
        for j in cd.index_set:
            if cd.entry(i, j) == -1 and abs(qd.height(i) - qd.height(j)) != 1:
                raise HeightParityViolation(
                    f"|xi_{i} - xi_{j}| = {abs(qd.height(i) - qd.height(j))} on an edge"
                )
    return qd


def source_reflect(qd: QDatum, i) -> QDatum:
    """Lower the height of a source vertex by 2."""
    if not qd.is_source(i):
        raise NotASource(f"vertex {i} has an incoming arrow")
    pos = qd.cartan.position[i]
    heights = tuple(
        v - 2 if t == pos else v for t, v in enumerate(qd.heights)
    )
    return QDatum(qd.cartan, heights)


def _sink_unreflect(qd: QDatum, i) -> QDatum:
    """Inverse reflection: raise the height of a sink vertex by 2."""
    if not qd.is_sink(i):
        raise NotASource(f"vertex {i} is not a sink, cannot unreflect")
    pos = qd.cartan.position[i]
    heights = tuple(
        v + 2 if t == pos else v for t, v in enumerate(qd.heights)
    )
    return QDatum(qd.cartan, heights)


def adapted_word(qd: QDatum) -> Word:
    """Longest word adapted to the heights: the level-0 window read from
    the top level down.

    Vertex i contributes one letter per level in (xi_{i*} - h, xi_i],
    stepping by 2; same-level vertices share a parity class, hence are
    non-adjacent and commute, so position order breaks those ties.  Pure
    greedy source extraction is not enough: it can overdraw a vertex whose
    window allotment is exhausted and leave a non-reduced word.
    """
    data = finite_type_data(qd.cartan)
    h = data.coxeter_number
    points = []
    for i in qd.cartan.index_set:
        lower = qd.height(data.star_of(qd.cartan, i)) - h
        p = qd.height(i)
        while p > lower:
            points.append((-p, qd.cartan.position[i], i))
            p -= 2
    points.sort()
    letters = tuple(i for _, _, i in points)
    running = qd
    for i in letters:
        running = source_reflect(running, i)
    return Word(letters, WordKind.WEYL_REDUCED)


def star_map(cd: CartanData) -> dict:
    """The involution i -> i* induced by the longest element."""
    data = finite_type_data(cd)
    return {i: data.star_of(cd, i) for i in cd.index_set}


def extended_sequence(qd: QDatum, w0: Word, star: dict, k: int) -> int:
    """Letter at any integer position of the star-periodic extension."""
    length = w0.length
    base = (k - 1) % length + 1
    shifts = (k - 1) // length
    letter = w0.letter(base)
    if shifts % 2 != 0:
        letter = star[letter]
    return letter


def pk_sequence(qd: QDatum, lo: int, hi: int):
    """Points (i_k, p_k) for k in [lo, hi].

    Positive positions replay source reflections forward; nonpositive
    ones replay inverse reflections backward from position zero.
    """
    w0 = adapted_word(qd)
    star = star_map(qd.cartan)
    points: Dict[int, RepetitionPoint] = {}
    if hi >= 1:
        running = qd
        for k in range(1, hi + 1):
            letter = extended_sequence(qd, w0, star, k)
            points[k] = RepetitionPoint(letter, running.height(letter))
            running = source_reflect(running, letter)
    if lo <= 0:
        running = qd
        for k in range(0, lo - 1, -1):
            letter = extended_sequence(qd, w0, star, k)
            running = _sink_unreflect(running, letter)
            points[k] = RepetitionPoint(letter, running.height(letter))
    return [points[k] for k in range(lo, hi + 1)]


def delta_window(qd: QDatum, k: int) -> frozenset:
    """Lattice points with xi_{i*} - (k+1)h < p <= xi_i - kh."""
    data = finite_type_data(qd.cartan)
    h = data.coxeter_number
    star = star_map(qd.cartan)
    out = set()
    for i in qd.cartan.index_set:
        upper = qd.height(i) - k * h
        lower = qd.height(star[i]) - (k + 1) * h
        p = upper if (upper - qd.height(i)) % 2 == 0 else upper - 1
        while p > lower:
            out.add(RepetitionPoint(i, p))
            p -= 2
    return frozenset(out)


def in_lattice(qd: QDatum, pt: RepetitionPoint) -> bool:
    return (
        pt.vertex in qd.cartan.position
        and (pt.level - qd.height(pt.vertex)) % 2 == 0
    )


def _require_point(qd: QDatum, pt: RepetitionPoint) -> None:
    if not in_lattice(qd, pt):
        raise PointOutsideLattice(f"{pt} violates the level parity at {pt.vertex}")


def _adapted_pass(qd: QDatum) -> tuple:
    """One full source-extraction pass: every vertex exactly once.

    Extracted vertices are excluded even if reflection makes them
    sources again; a remaining source always exists because the running
    orientation stays acyclic.
    """
    order = []
    remaining = set(qd.cartan.index_set)
    running = qd
    while remaining:
        source = min(
            (i for i in remaining if running.is_source(i)),
            key=lambda i: qd.cartan.position[i],
        )
        order.append(source)
        remaining.remove(source)
        running = source_reflect(running, source)
    return tuple(order)


def _coxeter_apply(qd: QDatum, x, inverse: bool = False):
    order = _adapted_pass(qd)
    if inverse:
        order = tuple(reversed(order))
    for i in order:
        x = reflect_root(qd.cartan, i, x)
    return x


def injective_root(qd: QDatum, i):
    """Sum of simple roots over vertices with an oriented path into i."""
    cd = qd.cartan
    reached = {i}
    frontier = [i]
    arrows = qd.arrows
    while frontier:
        target = frontier.pop()
        for a, b in arrows:
            if b == target and a not in reached:
                reached.add(a)
                frontier.append(a)
    total = [0] * len(cd.index_set)
    for j in reached:
        for t, v in enumerate(cd.simple_root(j)):
            total[t] += v
    return tuple(total)


def phi_map(qd: QDatum, pt: RepetitionPoint):
    """(positive root, winding level) of a lattice point.

    The base level of each vertex carries its injective root at winding
    zero; moving the level by 2 applies the Coxeter transformation, and
    crossing into negative roots adjusts the winding.
    """
    _require_point(qd, pt)
    root = injective_root(qd, pt.vertex)
    level = 0
    steps = (pt.level - qd.height(pt.vertex)) // 2
    for _ in range(steps):
        moved = _coxeter_apply(qd, root)
        if all(v >= 0 for v in moved):
            root = tuple(moved)
        else:
            root = tuple(-v for v in moved)
            level += 1
    for _ in range(-steps):
        moved = _coxeter_apply(qd, root, inverse=True)
        if all(v >= 0 for v in moved):
            root = tuple(moved)
        else:
            root = tuple(-v for v in moved)
            level -= 1
    return root, level


def phi_inverse(qd: QDatum, root, level: int) -> RepetitionPoint:
    """Lattice point mapping to (root, level); search is bounded because
    the winding is monotone in the lattice level."""
    data = finite_type_data(qd.cartan)
    h = data.coxeter_number
    bound = 2 * h * (abs(level) + 2)
    target = (tuple(root), level)
    for i in qd.cartan.index_set:
        base = qd.height(i)
        for p in range(base - bound, base + bound + 1, 2):
            pt = RepetitionPoint(i, p)
            if phi_map(qd, pt) == target:
                return pt
    raise PointOutsideLattice(f"no lattice point maps to {target}")


@dataclass(frozen=True)
class BHLWindow:
    """Reindexed exchange matrix of a contiguous chunk of the extension."""

    points: tuple
    positions: tuple
    entries: tuple

    def entry(self, a: RepetitionPoint, b: RepetitionPoint) -> int:
        return self.entries[self.points.index(a)][self.points.index(b)]


def _position_of_point(qd: QDatum, pt: RepetitionPoint) -> int:
    """Position of a lattice point in the extension (theo-style bijection).

    A vertex's levels decrease by 2 along successive forward positions
    starting at its height, and increase backward, so the occurrence
    count is determined by the level alone.
    """
    _require_point(qd, pt)
    w0 = adapted_word(qd)
    star = star_map(qd.cartan)
    base = qd.height(pt.vertex)
    if pt.level <= base:
        wanted = (base - pt.level) // 2
        seen = 0
        k = 0
        while True:
            k += 1
            if extended_sequence(qd, w0, star, k) == pt.vertex:
                if seen == wanted:
                    return k
                seen += 1
    wanted = (pt.level - base) // 2 - 1
    seen = 0
    k = 1
    while True:
        k -= 1
        if extended_sequence(qd, w0, star, k) == pt.vertex:
            if seen == wanted:
                return k
            seen += 1


def b_hl(qd: QDatum, points: Sequence[RepetitionPoint]) -> BHLWindow:
    """Exchange matrix of the window, entries looked up by lattice point."""
    if not points:
        return BHLWindow((), (), ())
    located = sorted(
        ((_position_of_point(qd, pt), pt) for pt in points), key=lambda t: t[0]
    )
    positions = tuple(k for k, _ in located)
    for a, b in zip(positions, positions[1:]):
        if b != a + 1:
            raise NonContiguousWindow(
                f"positions {positions} skip {a + 1}..{b - 1}"
            )
    ordered = tuple(pt for _, pt in located)
    letters = tuple(pt.vertex for pt in ordered)
    matrix = gls_matrix(qd.cartan, Word(letters, WordKind.POSITIVE_BRAID))
    return BHLWindow(ordered, positions, matrix.entries)


@dataclass(frozen=True)
class CartanSeries:
    """Coefficients of the series inverse of the quantum Cartan matrix.

    Expanded with nonnegative exponents around q = 0, so the support
    starts at u = 1 and every coefficient with u <= 0 is zero.  Requests
    beyond the computed order raise instead of returning a wrong zero.
    """

    cartan: CartanData
    u_max: int
    coefficients: tuple

    def matrix(self, u: int):
        if u <= 0:
            n = len(self.cartan.index_set)
            return tuple((0,) * n for _ in range(n))
        if u > self.u_max:
            raise SeriesOrderInsufficient(f"order {u} beyond computed {self.u_max}")
        return self.coefficients[u - 1]

    def entry(self, i, j, u: int) -> int:
        if u <= 0:
            return 0
        if u > self.u_max:
            raise SeriesOrderInsufficient(f"order {u} beyond computed {self.u_max}")
        pos = self.cartan.position
        return self.coefficients[u - 1][pos[i]][pos[j]]


def cartan_tilde(cd: CartanData, u_max: int) -> CartanSeries:
    """Invert C(q) = q^{-1}(I + qD + q^2 I) as a power series times q.

    D is the off-diagonal part of the Cartan matrix; the recurrence
    R_m = -(D R_{m-1} + R_{m-2}) with R_0 = I gives coefficient u = m+1.
    """
    n = len(cd.index_set)
    for i in cd.index_set:
        for j in cd.index_set:
            if i != j and cd.entry(i, j) not in (0, -1):
                raise NotSimplyLaced(
                    f"entry c[{i},{j}] = {cd.entry(i, j)} outside {{0, -1}}"
                )
    if u_max < 1:
        raise NotInvertibleAtOrder(f"order {u_max} < 1 computes nothing")
    d = [
        [cd.entry(i, j) if i != j else 0 for j in cd.index_set]
        for i in cd.index_set
    ]
    identity = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    coeffs = [identity]
    prev2 = [[0] * n for _ in range(n)]
    prev1 = identity
    for _ in range(u_max - 1):
        nxt = [
            [
                -(sum(d[a][t] * prev1[t][b] for t in range(n)) + prev2[a][b])
                for b in range(n)
            ]
            for a in range(n)
        ]
        coeffs.append(nxt)
        prev2, prev1 = prev1, nxt
    frozen = tuple(tuple(tuple(row) for row in m) for m in coeffs)
    return CartanSeries(cd, u_max, frozen)


def n_form(
    series: CartanSeries, p1: RepetitionPoint, p2: RepetitionPoint, d_i: int = 1
) -> int:
    """Pairing from four series coefficients at shifted level differences.

    The second pair of terms enters with flipped signs so that the
    pairing is antisymmetric and vanishes on the diagonal, which the
    torus commutation rule it feeds requires.
    """
    i, p = p1.vertex, p1.level
    j, q = p2.vertex, p2.level
    return (
        series.entry(i, j, p - q - d_i)
        - series.entry(i, j, p - q + d_i)
        - series.entry(i, j, q - p - d_i)
        + series.entry(i, j, q - p + d_i)
    )


def a_monomial(qd: QDatum, i, p: int) -> dict:
    """Exponent pattern of the standard monomial at (i, p).

    +1 at levels p-1 and p+1 of vertex i, -1 at level p of each adjacent
    vertex; adjacency parity makes every listed point a lattice point.
    """
    _require_point(qd, RepetitionPoint(i, p - 1))
    out = {
        RepetitionPoint(i, p - 1): 1,
        RepetitionPoint(i, p + 1): 1,
    }
    for j in qd.cartan.index_set:
        if qd.cartan.entry(i, j) == -1:
            out[RepetitionPoint(j, p)] = -1
    return out
