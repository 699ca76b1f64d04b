"""Height functions, adapted words, and the repetition lattice.

A height function on a simply-laced diagram orients the edges downhill and
selects adapted reduced words.  Lattice points (i, p) with p matching the
parity of xi_i organize into level windows that biject with the positive
roots; phi makes the bijection explicit, and the inverse quantum Cartan
series builds the commutation pairing used by (q,t)-characters.
"""
from braidseed.cartan import preset, roots_of_word
from braidseed.qdatum import (
    RepetitionPoint,
    a_monomial,
    adapted_word,
    cartan_tilde,
    delta_window,
    n_form,
    phi_map,
    pk_sequence,
    validate_height,
)

cd = preset("a3")
qd = validate_height(cd, (0, 1, 2))
print(f"heights {qd.heights}, arrows {sorted(qd.arrows)}")
word = adapted_word(qd)
roots = roots_of_word(cd, word.letters)
print(f"adapted word {word.letters}, reduced: {roots.all_positive}")

print("\nlevel-0 window, its points, and phi:")
for pt in sorted(delta_window(qd, 0), key=lambda p: (-p.level, p.vertex)):
    root, level = phi_map(qd, pt)
    print(f"  {pt} -> root {root} at winding level {level}")

period = pk_sequence(qd, 1, word.length)
print(f"\nextraction points (i_k, p_k): {[str(p) for p in period]}")
print(f"match the window: {set(period) == delta_window(qd, 0)}")

print("\nstandard monomial exponents at (2, 0):")
for pt, coeff in sorted(a_monomial(qd, 2, 0).items(), key=lambda t: str(t[0])):
    print(f"  {pt}: {coeff:+d}")

print("\ninverse quantum Cartan series and the commutation pairing (a1):")
a1 = cartan_tilde(preset("a1"), 12)
values = [a1.entry(1, 1, u) for u in range(1, 8)]
print(f"  ctilde(1..7) = {values}")
for p in [0, 2, 4]:
    val = n_form(a1, RepetitionPoint(1, p + 2), RepetitionPoint(1, p))
    print(f"  N((1,{p + 2}),(1,{p})) = {val}")
