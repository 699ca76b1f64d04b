"""Piecewise-linear transition maps on exponent vectors.

Changing a word by a move induces a tropical bijection of exponent
vectors.  Each move is its own inverse at the same position, paths between
the same two words induce the same map, and i-box marker vectors
transport onto tabulated images.
"""
import itertools

from braidseed.cartan import preset
from braidseed.transitions import (
    transition_along_path,
    transition_apply,
    verify_ibox_transition,
)
from braidseed.words import IBox, Move, MoveKind, Word, WordKind, apply_move, find_move_path

cd = preset("a2")
w = Word((1, 2, 1), WordKind.WEYL_REDUCED)
m = Move(MoveKind.THREE, 1)
wp = apply_move(w, m)

print(f"3-move at 1: {w.letters} -> {wp.letters}")
for vec in [(1, 0, 0), (2, 0, 1), (1, 1, 1)]:
    image = transition_apply(cd, w, m, vec)
    back = transition_apply(cd, wp, m, image)
    print(f"  {vec} -> {image} -> {back}")

print()
print("path independence (a3, two routes between the same words):")
a3 = preset("a3")
wa = Word((1, 2, 1, 3, 2, 1), WordKind.WEYL_REDUCED)
wb = Word((2, 1, 2, 3, 2, 1), WordKind.WEYL_REDUCED)
path = find_move_path(a3, wa, wb)
detour = [Move(MoveKind.TWO, 3), Move(MoveKind.TWO, 3)] + path
vec = (1, 2, 0, 1, 0, 3)
print(f"  direct {path}: {transition_along_path(a3, wa, path, vec)}")
print(f"  detour {detour}: {transition_along_path(a3, wa, detour, vec)}")

print()
print("i-box transport along the 3-move (box -> rule -> image):")
for lo, hi in [(1, 3), (2, 2), (1, 1), (3, 3)]:
    report = verify_ibox_transition(cd, w, m, IBox(lo, hi))
    status = "ok" if report.match else "MISMATCH"
    print(f"  [{lo},{hi}] rule {report.rule!r}: {report.actual} {status}")

print()
print("all window exponent patterns round trip (4-move on b2):")
b2 = preset("b2")
word4 = Word((1, 2, 1, 2), WordKind.WEYL_REDUCED)
move4 = Move(MoveKind.FOUR, 1)
moved4 = apply_move(word4, move4)
bad = 0
for combo in itertools.product(range(3), repeat=4):
    image = transition_apply(b2, word4, move4, combo)
    if transition_apply(b2, moved4, move4, image) != combo:
        bad += 1
print(f"  {3 ** 4} patterns, {bad} failures")
