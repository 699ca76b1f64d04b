"""Words in the positive braid monoid and the moves connecting them.

A Cartan preset fixes the letter alphabet and which local rewrites apply:
2-moves swap commuting letters, 3-moves rewrite iji -> jij windows, and
4-moves rewrite ijij -> jiji windows when c_ij * c_ji = 2.  Connectivity
under these moves is exactly equality in the braid monoid.
"""
from braidseed.cartan import preset
from braidseed.errors import NotConnected
from braidseed.words import (
    Word,
    WordKind,
    apply_move,
    enumerate_moves,
    find_move_path,
    words_equal_in_monoid,
)

cd = preset("a2")
w = Word((1, 2, 1, 2), WordKind.POSITIVE_BRAID)
print(f"word {w.letters} over a2")
for m in enumerate_moves(cd, w).moves:
    print(f"  {m} -> {apply_move(w, m).letters}")

print()
print("shortest path (1,2,1,2) -> (2,1,2,2):")
path = find_move_path(cd, w, Word((2, 1, 2, 2), WordKind.POSITIVE_BRAID))
current = w
for m in path:
    current = apply_move(current, m)
    print(f"  {m} -> {current.letters}")

print()
b2 = preset("b2")
pair = Word((1, 2, 1, 2), WordKind.WEYL_REDUCED), Word((2, 1, 2, 1), WordKind.WEYL_REDUCED)
print(f"b2 4-move: {find_move_path(b2, *pair)}")

print()
same = words_equal_in_monoid(cd, w, Word((2, 1, 2, 2), WordKind.POSITIVE_BRAID))
print(f"(1,2,1,2) equals (2,1,2,2) in the a2 braid monoid: {same}")
try:
    find_move_path(cd, w, Word((1, 1, 2, 2), WordKind.POSITIVE_BRAID))
except NotConnected as err:
    print(f"(1,2,1,2) vs (1,1,2,2): NotConnected ({err})")
