"""Acceptance gate: the eight primary end-to-end properties.

One test per criterion, each printing a single pass line on success; the
stated runtime caps are asserted where the criterion carries one.
"""
from __future__ import annotations

import itertools
import time

import numpy as np

from braidseed.cartan import finite_type_data, preset
from braidseed.cli import (
    campaign_contexts,
    exact_exchange_campaign,
    mutation_campaign,
    roundtrip_campaign,
    torus_campaign,
    tsystem_campaign,
)
from braidseed.errors import CaseNotTabulated, HeightParityViolation
from braidseed.qdatum import (
    RepetitionPoint,
    adapted_word,
    cartan_tilde,
    delta_window,
    n_form,
    phi_inverse,
    phi_map,
    pk_sequence,
    validate_height,
)
from braidseed.cartan import roots_of_word
from braidseed.seeds import seed_equivalence_report, tsystem_check
from braidseed.transitions import (
    OrderVerdict,
    transition_apply,
    transition_apply_many,
    verify_ibox_transition,
)
from braidseed.words import (
    IBox,
    MoveKind,
    Word,
    WordKind,
    apply_move,
    enumerate_moves,
    find_move_path,
    make_ibox,
)

ROUNDTRIP_TYPES = ["a2", "a1xa1", "b2", "a3"]


def braid_words(cd, lo, hi):
    for length in range(lo, hi + 1):
        for letters in itertools.product(cd.index_set, repeat=length):
            yield Word(letters, WordKind.POSITIVE_BRAID)


def test_criterion_1_transition_round_trips():
    start = time.monotonic()
    for name in ROUNDTRIP_TYPES:
        cd = preset(name)
        checked, failures = roundtrip_campaign(cd, 8)
        assert failures == [], (name, failures[:3])
        assert checked > 0
        # words short enough for the dense sweep get every vector verbatim
        for w in braid_words(cd, 2, 4):
            for m in enumerate_moves(cd, w).moves:
                wp = apply_move(w, m)
                arr = np.array(
                    list(itertools.product(range(5), repeat=w.length)), dtype=np.int64
                )
                back = transition_apply_many(
                    cd, wp, m, transition_apply_many(cd, w, m, arr)
                )
                assert np.array_equal(back, arr), (name, w.letters, str(m))
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"[PRIMARY 1] transition round trips: PASS ({elapsed:.1f}s)")


def _simple_paths(cd, w, target_letters, cap):
    out = []
    seen = {w.letters}
    trail = []

    def walk(current):
        if current.letters == target_letters and trail:
            out.append(tuple(trail))
            return
        if len(trail) == cap:
            return
        for m in enumerate_moves(cd, current).moves:
            nxt = apply_move(current, m)
            if nxt.letters in seen:
                continue
            seen.add(nxt.letters)
            trail.append(m)
            walk(nxt)
            trail.pop()
            seen.remove(nxt.letters)

    walk(w)
    return out


def _component(cd, w):
    frontier = [w]
    seen = {w.letters: w}
    while frontier:
        current = frontier.pop()
        for m in enumerate_moves(cd, current).moves:
            nxt = apply_move(current, m)
            if nxt.letters not in seen:
                seen[nxt.letters] = nxt
                frontier.append(nxt)
    return [seen[k] for k in sorted(seen)]


def test_criterion_2_path_independence():
    cases = [
        ("a2", Word((1, 2, 1, 2, 1), WordKind.POSITIVE_BRAID)),
        ("a3", Word(tuple(finite_type_data(preset("a3")).longest_word), WordKind.WEYL_REDUCED)),
    ]
    pairs_checked = 0
    for name, start_word in cases:
        cd = preset(name)
        words = _component(cd, start_word)
        length = start_word.length
        vectors = np.array(
            list(itertools.product(range(4), repeat=length)), dtype=np.int64
        )
        for wa, wb in itertools.combinations(words, 2):
            paths = _simple_paths(cd, wa, wb.letters, 6)[:12]
            if len(paths) < 2:
                continue
            pairs_checked += 1
            images = []
            for path in paths:
                arr = vectors
                current = wa
                for m in path:
                    arr = transition_apply_many(cd, current, m, arr)
                    current = apply_move(current, m)
                assert current.letters == wb.letters
                images.append(arr)
            for other in images[1:]:
                assert np.array_equal(images[0], other), (name, wa.letters, wb.letters)
    assert pairs_checked >= 2
    print(f"[PRIMARY 2] path independence: PASS ({pairs_checked} pairs)")


def _boxes_of(w):
    for a in range(1, w.length + 1):
        for b in range(a, w.length + 1):
            if w.letter(a) == w.letter(b):
                yield IBox(a, b)
        brace = make_ibox(a, w.length, brace=True)
        if not isinstance(brace, IBox) or brace.lo <= brace.hi:
            yield brace


def test_criterion_3_ibox_transport_table():
    required = {
        MoveKind.TWO: {"a=k", "a=k+1", "b=k", "b=k+1", "generic"},
        MoveKind.THREE: {"a=k+1", "b=k-1", "a=k-1", "a=k", "b=k", "b=k+1", "generic"},
        MoveKind.FOUR: {"a=k", "a=k+1", "a=k+2", "a=k+3", "generic"},
    }
    sweeps = [("a1xa1", 5), ("a2", 6), ("b2", 7)]
    covered = {kind: set() for kind in required}
    for name, cap in sweeps:
        cd = preset(name)
        for w in braid_words(cd, 2, cap):
            for m in enumerate_moves(cd, w).moves:
                for box in _boxes_of(w):
                    try:
                        report = verify_ibox_transition(cd, w, m, box)
                    except CaseNotTabulated:
                        continue
                    assert report.match, (name, w.letters, str(m), box)
                    if report.rule == "empty":
                        continue
                    for atom in report.rule.split(","):
                        covered[m.kind].add(atom)
    for kind, atoms in required.items():
        assert atoms <= covered[kind], (kind, atoms - covered[kind])
    print("[PRIMARY 3] i-box transport table: PASS")


def test_criterion_4_mutation_involutivity_and_compatibility():
    start = time.monotonic()
    for name, cd in campaign_contexts(3):
        checked, failures = mutation_campaign(cd, 6)
        assert failures == [], (name, failures[:3])
        assert checked > 0
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"[PRIMARY 4] mutation involutivity: PASS ({elapsed:.1f}s)")


def _w0_words(name):
    cd = preset(name)
    data = finite_type_data(cd)
    return cd, _component(cd, Word(tuple(data.longest_word), WordKind.WEYL_REDUCED))


def test_criterion_5_two_word_seed_equivalence():
    cd = preset("a2")
    report = seed_equivalence_report(
        cd,
        Word((1, 2, 1), WordKind.WEYL_REDUCED),
        Word((2, 1, 2), WordKind.WEYL_REDUCED),
    )
    assert report.match and report.exact_verified
    for name in ["b2", "c2"]:
        cd = preset(name)
        for letters, other in [
            ((1, 2, 1, 2), (2, 1, 2, 1)),
            ((2, 1, 2, 1), (1, 2, 1, 2)),
        ]:
            report = seed_equivalence_report(
                cd,
                Word(letters, WordKind.WEYL_REDUCED),
                Word(other, WordKind.WEYL_REDUCED),
            )
            assert report.match and report.exact_verified, (name, letters)
            assert report.lam_gauge_in_kernel
            assert report.four_move_intermediates
            for fm in report.four_move_intermediates:
                assert fm.value == fm.displayed == 1
    cd, words = _w0_words("a3")
    distant = []
    for wa, wb in itertools.combinations(words, 2):
        if len(find_move_path(cd, wa, wb)) >= 2:
            distant.append((wa, wb))
        if len(distant) == 3:
            break
    assert len(distant) == 3
    for wa, wb in distant:
        report = seed_equivalence_report(cd, wa, wb)
        assert report.match and report.exact_verified, (wa.letters, wb.letters)
        assert report.lam_gauge_in_kernel
    print("[PRIMARY 5] two-word seed equivalence: PASS")


def test_criterion_6_tropical_t_system():
    for name, cd in campaign_contexts(3):
        checked, failures = tsystem_campaign(cd, 8)
        assert failures == [], (name, failures[:3])
        assert checked > 0
        # strictness of the lower term on a smaller sweep
        for w in braid_words(cd, 1, 5):
            for a in range(1, w.length + 1):
                for b in range(a, w.length + 1):
                    if w.letter(a) != w.letter(b):
                        continue
                    result = tsystem_check(cd, w, IBox(a, b))
                    if result.degenerate:
                        continue
                    assert result.lower_verdict in (
                        OrderVerdict.LESS,
                        OrderVerdict.INCOMPARABLE,
                    ), (name, w.letters, a, b)
    print("[PRIMARY 6] tropical T-system: PASS")


def _heights(cd, bound=5):
    out = []
    for xi in itertools.product(range(-bound, bound + 1), repeat=len(cd.index_set)):
        try:
            out.append(validate_height(cd, xi))
        except HeightParityViolation:
            continue
    return out


def test_criterion_7_qdatum_layer():
    start = time.monotonic()
    for name in ["a1", "a2", "a3"]:
        cd = preset(name)
        data = finite_type_data(cd)
        count = len(data.positive_roots)
        for qd in _heights(cd):
            word = adapted_word(qd)
            assert word.length == count
            assert roots_of_word(cd, word.letters).all_positive
            for k in (-1, 0, 1):
                assert len(delta_window(qd, k)) == count
            assert set(pk_sequence(qd, 1, count)) == delta_window(qd, 0)
            points = set().union(*(delta_window(qd, k) for k in (-1, 0, 1)))
            seen = set()
            for pt in points:
                value = phi_map(qd, pt)
                assert value not in seen
                seen.add(value)
                assert phi_inverse(qd, value[0], value[1]) == pt
        series = cartan_tilde(cd, 40)
        for i in cd.index_set:
            for j in cd.index_set:
                for p in range(-4, 5):
                    for q in range(-4, 5):
                        x = RepetitionPoint(i, p)
                        y = RepetitionPoint(j, q)
                        assert n_form(series, x, y) == -n_form(series, y, x)
                        shifted = n_form(
                            series,
                            RepetitionPoint(i, p + 2),
                            RepetitionPoint(j, q + 2),
                        )
                        assert shifted == n_form(series, x, y)
    a1 = cartan_tilde(preset("a1"), 40)
    for p in range(-6, 7, 2):
        assert n_form(a1, RepetitionPoint(1, p + 2), RepetitionPoint(1, p)) == 2
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"[PRIMARY 7] q-datum layer: PASS ({elapsed:.1f}s)")


def test_criterion_8_exact_torus_sanity():
    for name, cd in campaign_contexts(3):
        checked, failures = torus_campaign(cd, min(6, 2 * len(cd.index_set)), 200)
        assert checked == 200 and failures == [], name
        checked, failures = exact_exchange_campaign(cd, 4)
        assert checked > 0 and failures == [], name
    print("[PRIMARY 8] exact torus sanity: PASS")
