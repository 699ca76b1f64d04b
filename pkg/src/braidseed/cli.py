"""Command-line front end: subcommand routing, verification campaigns, and
deterministic report emission.

Every subcommand produces a single report whose exit status encodes the
outcome: 0 when all comparisons agree (Match), 1 when at least one differs
(Mismatch), 2 when the computation raised a domain error (Error).  Campaign
sections are assembled in input enumeration order, so identical inputs give
byte-identical reports.

Words are read as positive-braid words unless --kind weyl-reduced is given;
reduced words are then certified before use.  The Cartan context comes from
--cartan, naming either a preset (a2, b2, ...) or a JSON file; `verify
tsystem` can infer a simply-laced type-A context from the word's letters.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .cartan import (
    CartanData,
    PRESET_MATRICES,
    cartan_from_json,
    finite_type_data,
    preset,
    roots_of_word,
    validate_cartan,
)
from .errors import BraidseedError, ConfigInvalid, NotFiniteType
from .qdatum import (
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
from .qlaurent import QuantumLaurent, commutation_doubled, torus_product
from .reports import (
    Report,
    base_metadata,
    comparison,
    echo,
    emit_report,
    error_report,
    report_from_sections,
)
from .seeds import (
    check_compatibility,
    exchange_check,
    initial_seed,
    mutate_seed,
    seed_equivalence_report,
    seed_to_json,
    tsystem_check,
)
from .transitions import (
    OrderVerdict,
    transition_apply,
    transition_apply_many,
    verify_ibox_transition,
)
from .words import (
    EmptyBox,
    IBox,
    Move,
    MoveKind,
    Word,
    WordKind,
    apply_move,
    default_budget,
    enumerate_moves,
    find_move_path,
    ibox_vector,
    make_ibox,
    move_to_json,
    resolve_ibox,
    validate_word,
    words_equal_in_monoid,
)

EXACT_CAP_DEFAULT = 8
LENGTH_CAP_DEFAULT = 8
RANK_CAP_DEFAULT = 3
ENTRY_CAP_DEFAULT = 4
CAMPAIGN_RNG_SEED = 20240823


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: subcommand path plus validated options."""

    command: tuple
    cartan_file: Optional[str]
    budget: int
    exact: bool
    exact_cap: int
    seed_files: tuple
    output: Optional[str]
    format: str
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# argument parsing


def _parse_letters(text: str) -> tuple:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise ConfigInvalid("word: empty letter list")
    out = []
    for item in items:
        try:
            out.append(int(item))
        except ValueError:
            out.append(item)
    return tuple(out)


def _parse_ints(text: str, flag: str) -> tuple:
    try:
        return tuple(int(t.strip()) for t in text.split(",") if t.strip())
    except ValueError as err:
        raise ConfigInvalid(f"{flag}: expected comma-separated integers") from err


def _parse_move(text: str) -> Move:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise ConfigInvalid("move: expected KIND,POSITION (e.g. 3,2)")
    kinds = {"2": MoveKind.TWO, "3": MoveKind.THREE, "4": MoveKind.FOUR}
    kind = kinds.get(parts[0].lower())
    if kind is None:
        raise ConfigInvalid(f"move: unknown kind {parts[0]!r}, expected 2, 3, or 4")
    try:
        position = int(parts[1])
    except ValueError as err:
        raise ConfigInvalid("move: position must be an integer") from err
    return Move(kind, position)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--output", default=None, help="report destination file")
    common.add_argument("--budget", type=int, default=None, help="BFS node limit")

    cartan_opt = argparse.ArgumentParser(add_help=False)
    cartan_opt.add_argument("--cartan", default=None, help="preset name or JSON file")

    word_opt = argparse.ArgumentParser(add_help=False)
    word_opt.add_argument(
        "--word", action="append", default=[], help="comma-separated letters"
    )
    word_opt.add_argument(
        "--kind",
        choices=[k.value for k in WordKind],
        default=WordKind.POSITIVE_BRAID.value,
    )

    exact_opt = argparse.ArgumentParser(add_help=False)
    exact_opt.add_argument("--exact", action="store_true")
    exact_opt.add_argument("--exact-cap", type=int, default=EXACT_CAP_DEFAULT)

    parser = argparse.ArgumentParser(
        prog="braidseed",
        description="exact combinatorics of words, transitions, and quantum seeds",
    )
    top = parser.add_subparsers(dest="group", required=True)

    p_cartan = top.add_parser("cartan").add_subparsers(dest="action", required=True)
    p_cartan.add_parser("check", parents=[common, cartan_opt])

    p_words = top.add_parser("words").add_subparsers(dest="action", required=True)
    p_words.add_parser("moves", parents=[common, cartan_opt, word_opt])
    p_words.add_parser("path", parents=[common, cartan_opt, word_opt])
    p_words.add_parser("equal", parents=[common, cartan_opt, word_opt])
    p_ibox = p_words.add_parser("ibox", parents=[common, cartan_opt, word_opt])
    p_ibox.add_argument("--box", required=True, help="lo,hi")
    p_ibox.add_argument("--brace", action="store_true")

    p_tr = top.add_parser("transition").add_subparsers(dest="action", required=True)
    p_apply = p_tr.add_parser("apply", parents=[common, cartan_opt, word_opt])
    p_apply.add_argument("--move", required=True, help="KIND,POSITION")
    p_apply.add_argument("--vector", action="append", default=[], required=True)
    p_apply.add_argument(
        "--convention", choices=["tabulated", "weighted"], default="tabulated"
    )
    p_vibox = p_tr.add_parser("verify-ibox", parents=[common, cartan_opt, word_opt])
    p_vibox.add_argument("--move", required=True, help="KIND,POSITION")
    p_vibox.add_argument("--box", required=True, help="lo,hi")
    p_vibox.add_argument("--brace", action="store_true")

    p_seed = top.add_parser("seed").add_subparsers(dest="action", required=True)
    p_build = p_seed.add_parser("build", parents=[common, cartan_opt, word_opt, exact_opt])
    p_build.add_argument("--out", default=None, help="write the seed JSON here")
    p_mutate = p_seed.add_parser(
        "mutate", parents=[common, cartan_opt, word_opt, exact_opt]
    )
    p_mutate.add_argument("--at", required=True, help="mutation slot sequence k1,k2,...")
    p_seed.add_parser(
        "verify-equivalence", parents=[common, cartan_opt, word_opt, exact_opt]
    )
    p_ts = p_seed.add_parser("tsystem", parents=[common, cartan_opt, word_opt, exact_opt])
    p_ts.add_argument("--box", required=True, help="lo,hi")
    p_ts.add_argument("--brace", action="store_true")

    p_qd = top.add_parser("qdatum").add_subparsers(dest="action", required=True)
    height_opt = argparse.ArgumentParser(add_help=False)
    height_opt.add_argument("--height", required=True, help="comma-separated heights")
    p_qd.add_parser("build", parents=[common, cartan_opt, height_opt])
    p_qd.add_parser("adapted-word", parents=[common, cartan_opt, height_opt])
    p_win = p_qd.add_parser("window", parents=[common, cartan_opt, height_opt])
    p_win.add_argument("--k", type=int, default=0)
    p_phi = p_qd.add_parser("phi", parents=[common, cartan_opt, height_opt])
    p_phi.add_argument("--point", required=True, help="vertex,level")
    p_ntab = p_qd.add_parser("ntab", parents=[common, cartan_opt])
    p_ntab.add_argument("--range", type=int, default=6, dest="level_range")

    p_verify = top.add_parser("verify").add_subparsers(dest="action", required=True)
    p_verify.add_parser(
        "corollary", parents=[common, cartan_opt, word_opt, exact_opt]
    )
    p_vts = p_verify.add_parser(
        "tsystem", parents=[common, cartan_opt, word_opt, exact_opt]
    )
    p_vts.add_argument("--box", default=None, help="lo,hi; omit to sweep all boxes")
    p_vts.add_argument("--brace", action="store_true")
    p_all = p_verify.add_parser("all", parents=[common, cartan_opt, exact_opt])
    p_all.add_argument("--length-cap", type=int, default=LENGTH_CAP_DEFAULT)
    p_all.add_argument("--rank-cap", type=int, default=RANK_CAP_DEFAULT)

    return parser


def parse_args(argv=None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    options = {}
    for key in (
        "kind",
        "box",
        "brace",
        "move",
        "convention",
        "at",
        "out",
        "height",
        "k",
        "point",
        "level_range",
        "length_cap",
        "rank_cap",
    ):
        if hasattr(ns, key):
            options[key] = getattr(ns, key)
    if hasattr(ns, "word"):
        options["words"] = tuple(_parse_letters(w) for w in ns.word)
    if hasattr(ns, "vector"):
        options["vectors"] = tuple(
            _parse_ints(v, "vector") for v in ns.vector
        )
    budget = ns.budget if getattr(ns, "budget", None) is not None else default_budget()
    seed_files = []
    cartan_ref = getattr(ns, "cartan", None)
    if cartan_ref and Path(cartan_ref).exists():
        seed_files.append(cartan_ref)
    return RunConfig(
        command=(ns.group, ns.action),
        cartan_file=cartan_ref,
        budget=budget,
        exact=getattr(ns, "exact", False),
        exact_cap=getattr(ns, "exact_cap", EXACT_CAP_DEFAULT),
        seed_files=tuple(seed_files),
        output=getattr(ns, "output", None),
        format=getattr(ns, "format", "text"),
        options=options,
    )


def _validate_config(config: RunConfig) -> None:
    if config.budget < 1:
        raise ConfigInvalid("budget: must be >= 1")
    if config.exact:
        for letters in config.options.get("words", ()):
            if len(letters) > config.exact_cap:
                raise ConfigInvalid(
                    f"exact: word length {len(letters)} exceeds cap {config.exact_cap}"
                )


# ---------------------------------------------------------------------------
# shared handler plumbing


def _load_cartan(config: RunConfig) -> CartanData:
    ref = config.cartan_file
    if ref is None:
        raise ConfigInvalid("cartan: missing --cartan")
    path = Path(ref)
    if path.exists():
        try:
            return cartan_from_json(path.read_text())
        except OSError as err:
            raise ConfigInvalid(f"cartan: cannot read {ref}: {err}") from err
    return preset(ref)


def _infer_a_type(words) -> CartanData:
    """Type-A context of rank max-letter, for letter alphabets 1..n."""
    letters = sorted({x for w in words for x in w})
    if not letters or any(not isinstance(x, int) or x < 1 for x in letters):
        raise ConfigInvalid("cartan: cannot infer a context from these letters")
    n = max(letters)
    matrix = [
        [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
        for i in range(n)
    ]
    return validate_cartan(matrix)


def _context(config: RunConfig, allow_infer: bool = False) -> CartanData:
    if config.cartan_file is None and allow_infer:
        return _infer_a_type(config.options.get("words", ()))
    return _load_cartan(config)


def _build_words(config: RunConfig, cd: CartanData, expect: int) -> tuple:
    raw = config.options.get("words", ())
    if len(raw) != expect:
        raise ConfigInvalid(
            f"word: expected {expect} --word option(s), got {len(raw)}"
        )
    kind = WordKind(config.options.get("kind", WordKind.POSITIVE_BRAID.value))
    out = []
    for letters in raw:
        w = Word(letters, kind)
        validate_word(cd, w)
        out.append(w)
    return tuple(out)


def _build_box(config: RunConfig, require_nonempty: bool = False):
    lo, hi = _box_bounds(config)
    box = make_ibox(lo, hi, brace=bool(config.options.get("brace")))
    if require_nonempty and isinstance(box, EmptyBox):
        raise ConfigInvalid(f"box: interval [{lo},{hi}] is empty")
    return box


def _box_bounds(config: RunConfig) -> tuple:
    bounds = _parse_ints(config.options["box"], "box")
    if len(bounds) != 2:
        raise ConfigInvalid("box: expected lo,hi")
    return bounds


def _metadata(config: RunConfig, cd: Optional[CartanData] = None) -> dict:
    inputs = {"options": {k: v for k, v in sorted(config.options.items())}}
    if cd is not None:
        inputs["cartan"] = {
            "indices": cd.index_set,
            "matrix": cd.matrix,
            "symmetrizer": cd.symmetrizer,
        }
    return base_metadata(config.command, inputs)


def _seed_core(seed) -> dict:
    payload = seed_to_json(seed)
    return {
        "B": payload["B"],
        "Lambda": payload["Lambda"],
        "tropical": payload["variables"]["tropical"],
        "exact": payload["variables"].get("exact"),
    }


# ---------------------------------------------------------------------------
# handlers


def _cmd_cartan_check(config: RunConfig) -> Report:
    cd = _load_cartan(config)
    n = len(cd.index_set)
    symmetrized = [
        [cd.symmetrizer[i] * cd.matrix[i][j] for j in range(n)] for i in range(n)
    ]
    transposed = [[symmetrized[j][i] for j in range(n)] for i in range(n)]
    sections = [
        echo("index-set", cd.index_set),
        echo("symmetrizer", cd.symmetrizer),
        comparison("symmetrized", symmetrized, transposed),
    ]
    try:
        data = finite_type_data(cd)
    except NotFiniteType:
        sections.append(comparison("finite-type", False, True))
    else:
        sections.append(comparison("finite-type", True, True))
        sections.append(echo("positive-roots", len(data.positive_roots)))
        sections.append(echo("coxeter-number", data.coxeter_number))
        sections.append(
            comparison(
                "longest-word-length", len(data.longest_word), len(data.positive_roots)
            )
        )
        sections.append(
            comparison(
                "longest-word-reduced",
                roots_of_word(cd, data.longest_word).all_positive,
                True,
            )
        )
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_words_moves(config: RunConfig) -> Report:
    cd = _context(config)
    (w,) = _build_words(config, cd, 1)
    scan = enumerate_moves(cd, w)
    sections = [echo("word", w.letters)]
    doubled = []
    for m in scan.moves:
        moved = apply_move(w, m)
        sections.append(echo(f"result-{m}", moved.letters))
        doubled.append(list(apply_move(moved, m).letters))
    sections.append(
        comparison("involutive", doubled, [list(w.letters)] * len(scan.moves))
    )
    sections.append(echo("unsupported-windows", scan.unsupported))
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_words_path(config: RunConfig) -> Report:
    cd = _context(config)
    w, w2 = _build_words(config, cd, 2)
    path = find_move_path(cd, w, w2, config.budget)
    current = w
    for m in path:
        current = apply_move(current, m)
    sections = [
        echo("path", [move_to_json(m) for m in path]),
        echo("length", len(path)),
        comparison("replay", current.letters, w2.letters),
    ]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_words_equal(config: RunConfig) -> Report:
    cd = _context(config)
    w, w2 = _build_words(config, cd, 2)
    equal = words_equal_in_monoid(cd, w, w2, config.budget)
    sections = [comparison("equal-in-monoid", equal, True)]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_words_ibox(config: RunConfig) -> Report:
    cd = _context(config)
    (w,) = _build_words(config, cd, 1)
    box = _build_box(config)
    resolved = resolve_ibox(w, box)
    sections = []
    if isinstance(resolved, EmptyBox):
        sections.append(echo("empty", True))
    else:
        sections.append(echo("resolved", {"lo": resolved.lo, "hi": resolved.hi}))
        sections.append(
            comparison(
                "endpoint-letters", w.letter(resolved.lo), w.letter(resolved.hi)
            )
        )
    sections.append(echo("vector", ibox_vector(w, box)))
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_transition_apply(config: RunConfig) -> Report:
    cd = _context(config)
    (w,) = _build_words(config, cd, 1)
    m = _parse_move(config.options["move"])
    convention = config.options.get("convention", "tabulated")
    wp = apply_move(w, m)
    sections = [echo("move", move_to_json(m)), echo("moved-word", wp.letters)]
    for idx, vec in enumerate(config.options.get("vectors", ()), start=1):
        image = transition_apply(cd, w, m, vec, convention)
        back = transition_apply(cd, wp, m, image, convention)
        sections.append(echo(f"image-{idx}", image))
        sections.append(comparison(f"round-trip-{idx}", back, vec))
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_transition_verify_ibox(config: RunConfig) -> Report:
    cd = _context(config)
    (w,) = _build_words(config, cd, 1)
    m = _parse_move(config.options["move"])
    box = _build_box(config)
    result = verify_ibox_transition(cd, w, m, box)
    sections = [
        echo("rule", result.rule),
        comparison("transported-vector", result.actual, result.expected),
    ]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_seed_build(config: RunConfig) -> Report:
    cd = _context(config)
    (w,) = _build_words(config, cd, 1)
    seed = initial_seed(cd, w, exact=config.exact)
    payload = seed_to_json(seed)
    sections = [
        echo("labels", payload["labels"]),
        echo("B", payload["B"]),
        echo("Lambda", payload["Lambda"]),
        echo("exchange", payload["exchange"]),
        echo("d-prime", payload["d_prime"]),
        echo("tropical", payload["variables"]["tropical"]),
        comparison("compatible", check_compatibility(seed.lam, seed.b), True),
    ]
    out = config.options.get("out")
    if out:
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        Path(out).write_text(blob)
        sections.append(echo("written", out))
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_seed_mutate(config: RunConfig) -> Report:
    cd = _context(config)
    (w,) = _build_words(config, cd, 1)
    slots = _parse_ints(config.options["at"], "at")
    if not slots:
        raise ConfigInvalid("at: empty mutation sequence")
    seed = initial_seed(cd, w, exact=config.exact)
    current = seed
    sections = []
    for idx, k in enumerate(slots, start=1):
        if config.exact:
            check = exchange_check(current, k)
            sections.append(comparison(f"exchange-step-{idx}", check.verified, True))
            sections.append(
                echo(
                    f"exchange-exponents-{idx}",
                    {"alpha2": check.alpha_doubled, "beta2": check.beta_doubled},
                )
            )
        current = mutate_seed(current, k)
    restored = current
    for k in reversed(slots):
        restored = mutate_seed(restored, k)
    sections.extend(
        [
            echo("B", [list(row) for row in current.b.entries]),
            echo("Lambda", [list(row) for row in current.lam]),
            echo("tropical", [list(v) for v in current.trop]),
            echo("labels", list(current.labels)),
            comparison("involutive", _seed_core(restored), _seed_core(seed)),
            comparison("compatible", check_compatibility(current.lam, current.b), True),
        ]
    )
    return report_from_sections(sections, _metadata(config, cd))


def _equivalence_sections(report) -> list:
    sections = [
        echo("path", [str(m) for m in report.path]),
        comparison("exchange-columns", report.b_exchange_match, True),
        echo("full-b-equal", report.b_full_match),
        comparison("transported-tropical", report.transported_match, True),
        echo("raw-tropical-equal", report.trop_match),
        comparison("lambda-gauge-in-kernel", report.lam_gauge_in_kernel, True),
        echo("lambda-gauge", report.lam_gauge),
        echo(
            "four-move-entries",
            [
                {"move": str(fm.move), "value": fm.value, "displayed": fm.displayed}
                for fm in report.four_move_intermediates
            ],
        ),
    ]
    if report.exact_verified is not None:
        sections.append(comparison("exchange-relations", report.exact_verified, True))
        sections.append(
            echo(
                "exchange-checks",
                [
                    {
                        "slot": c.slot,
                        "alpha2": c.alpha_doubled,
                        "beta2": c.beta_doubled,
                    }
                    for c in report.exchange_checks
                ],
            )
        )
    return sections


def _cmd_seed_verify_equivalence(config: RunConfig) -> Report:
    cd = _context(config)
    w, w2 = _build_words(config, cd, 2)
    report = seed_equivalence_report(
        cd,
        w,
        w2,
        exact=True if config.exact else None,
        exact_max_length=min(6, config.exact_cap),
        budget=config.budget,
    )
    return report_from_sections(_equivalence_sections(report), _metadata(config, cd))


def _tsystem_sections(result, prefix: str = "") -> list:
    sections = [
        echo(prefix + "box", {"lo": result.box.lo, "hi": result.box.hi}),
        echo(prefix + "degenerate", result.degenerate),
    ]
    if result.degenerate:
        return sections
    sections.append(
        comparison(prefix + "tropical-identity", result.left_sum, result.right_sum)
    )
    sections.append(echo(prefix + "lower-verdict", result.lower_verdict.name))
    sections.append(
        comparison(
            prefix + "lower-not-dominant",
            result.lower_verdict is not OrderVerdict.GREATER,
            True,
        )
    )
    if result.exact_verified is not None:
        sections.append(comparison(prefix + "exact-exchange", result.exact_verified, True))
        sections.append(
            echo(
                prefix + "exchange-exponents",
                {"alpha2": result.a_doubled, "beta2": result.b_doubled},
            )
        )
    return sections


def _cmd_seed_tsystem(config: RunConfig) -> Report:
    cd = _context(config, allow_infer=config.command[0] == "verify")
    (w,) = _build_words(config, cd, 1)
    box = _build_box(config, require_nonempty=True)
    mode = "exact" if config.exact else "tropical"
    result = tsystem_check(cd, w, box, mode=mode)
    return report_from_sections(_tsystem_sections(result), _metadata(config, cd))


def _cmd_verify_tsystem(config: RunConfig) -> Report:
    if config.options.get("box"):
        return _cmd_seed_tsystem(config)
    cd = _context(config, allow_infer=True)
    (w,) = _build_words(config, cd, 1)
    checked = 0
    failures = []
    degenerate = 0
    for a in range(1, w.length + 1):
        for b in range(a, w.length + 1):
            if w.letter(a) != w.letter(b):
                continue
            result = tsystem_check(cd, w, IBox(a, b))
            checked += 1
            if result.degenerate:
                degenerate += 1
                continue
            if result.left_sum != result.right_sum:
                failures.append({"box": [a, b], "kind": "identity"})
            if result.lower_verdict is OrderVerdict.GREATER:
                failures.append({"box": [a, b], "kind": "lower-dominant"})
    sections = [
        echo("boxes-checked", checked),
        echo("degenerate", degenerate),
        comparison("failures", failures, []),
    ]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_qdatum_build(config: RunConfig) -> Report:
    cd = _context(config)
    qd = validate_height(cd, _parse_ints(config.options["height"], "height"))
    data = finite_type_data(cd)
    word = adapted_word(qd)
    sections = [
        echo("heights", qd.heights),
        echo("arrows", sorted(qd.arrows)),
        echo("sources", [i for i in cd.index_set if qd.is_source(i)]),
        echo("adapted-word", word.letters),
        comparison("adapted-length", word.length, len(data.positive_roots)),
        comparison(
            "adapted-reduced", roots_of_word(cd, word.letters).all_positive, True
        ),
    ]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_qdatum_adapted_word(config: RunConfig) -> Report:
    cd = _context(config)
    qd = validate_height(cd, _parse_ints(config.options["height"], "height"))
    data = finite_type_data(cd)
    word = adapted_word(qd)
    roots = roots_of_word(cd, word.letters)
    sections = [
        echo("word", word.letters),
        comparison("length", word.length, len(data.positive_roots)),
        comparison("reduced", roots.all_positive, True),
        comparison("roots-distinct", len(set(roots.roots)), word.length),
    ]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_qdatum_window(config: RunConfig) -> Report:
    cd = _context(config)
    qd = validate_height(cd, _parse_ints(config.options["height"], "height"))
    data = finite_type_data(cd)
    k = config.options.get("k", 0)
    window = delta_window(qd, k)
    points = sorted((pt.vertex, pt.level) for pt in window)
    sections = [
        echo("k", k),
        echo("points", points),
        comparison("size", len(window), len(data.positive_roots)),
    ]
    if k == 0:
        period = pk_sequence(qd, 1, len(data.positive_roots))
        sections.append(
            comparison(
                "period-image", sorted((p.vertex, p.level) for p in period), points
            )
        )
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_qdatum_phi(config: RunConfig) -> Report:
    cd = _context(config)
    qd = validate_height(cd, _parse_ints(config.options["height"], "height"))
    raw = _parse_letters(config.options["point"])
    if len(raw) != 2 or not isinstance(raw[1], int):
        raise ConfigInvalid("point: expected vertex,level")
    pt = RepetitionPoint(raw[0], raw[1])
    root, level = phi_map(qd, pt)
    back = phi_inverse(qd, root, level)
    sections = [
        echo("phi", {"root": root, "level": level}),
        comparison("round-trip", (back.vertex, back.level), (pt.vertex, pt.level)),
    ]
    return report_from_sections(sections, _metadata(config, cd))


def _cmd_qdatum_ntab(config: RunConfig) -> Report:
    cd = _load_cartan(config)
    span = config.options.get("level_range", 6)
    if span < 1:
        raise ConfigInvalid("range: must be >= 1")
    series = cartan_tilde(cd, 2 * span + 4)
    levels = range(-span, span + 1)
    sections = []
    table = {}
    for i in cd.index_set:
        for j in cd.index_set:
            row = [
                n_form(series, RepetitionPoint(i, p), RepetitionPoint(j, 0))
                for p in levels
            ]
            table[(i, j)] = row
            sections.append(echo(f"n-{i}-{j}", row))
    forward = [table[(i, j)] for i in cd.index_set for j in cd.index_set]
    reverse = [
        [
            -n_form(series, RepetitionPoint(j, 0), RepetitionPoint(i, p))
            for p in levels
        ]
        for i in cd.index_set
        for j in cd.index_set
    ]
    sections.append(comparison("antisymmetric", forward, reverse))
    shifted = [
        [
            n_form(series, RepetitionPoint(i, p + 2), RepetitionPoint(j, 2))
            for p in levels
        ]
        for i in cd.index_set
        for j in cd.index_set
    ]
    sections.append(comparison("translation-invariant", shifted, forward))
    return report_from_sections(sections, _metadata(config, cd))


# ---------------------------------------------------------------------------
# verification campaigns


def campaign_contexts(rank_cap: int) -> list:
    """Preset contexts with rank <= rank_cap and no 6-move windows."""
    out = []
    for name in sorted(PRESET_MATRICES):
        cd = preset(name)
        if len(cd.index_set) > rank_cap:
            continue
        prod = max(
            cd.entry(i, j) * cd.entry(j, i)
            for i in cd.index_set
            for j in cd.index_set
            if i != j
        ) if len(cd.index_set) > 1 else 0
        if prod > 2:
            continue
        out.append((name, cd))
    return out


def _iter_braid_words(cd: CartanData, length_cap: int, lo: int = 2):
    for length in range(lo, length_cap + 1):
        for letters in itertools.product(cd.index_set, repeat=length):
            yield Word(letters, WordKind.POSITIVE_BRAID)


def roundtrip_campaign(
    cd: CartanData, length_cap: int, entry_cap: int = ENTRY_CAP_DEFAULT
) -> tuple:
    """Move-then-reverse-move identity over all words, moves, and window
    exponent patterns, plus one dense random vector per pair.

    Transition formulas read only the window coordinates, so exhausting the
    window combinations together with a dense off-window witness covers all
    vectors with entries <= entry_cap.
    """
    rng = random.Random(CAMPAIGN_RNG_SEED)
    checked = 0
    failures = []
    for w in _iter_braid_words(cd, length_cap):
        for m in enumerate_moves(cd, w).moves:
            wp = apply_move(w, m)
            width = m.kind.window
            lead = m.position - 1
            combos = np.array(
                list(itertools.product(range(entry_cap + 1), repeat=width)),
                dtype=np.int64,
            )
            arr = np.zeros((len(combos) + 1, w.length), dtype=np.int64)
            arr[:-1, lead : lead + width] = combos
            arr[-1] = [rng.randint(0, entry_cap) for _ in range(w.length)]
            image = transition_apply_many(cd, w, m, arr)
            back = transition_apply_many(cd, wp, m, image)
            checked += len(arr)
            if not np.array_equal(back, arr):
                bad = np.nonzero((back != arr).any(axis=1))[0]
                for idx in bad[:3]:
                    failures.append(
                        {
                            "word": list(w.letters),
                            "move": str(m),
                            "vector": arr[idx].tolist(),
                        }
                    )
    return checked, failures


def mutation_campaign(cd: CartanData, length_cap: int) -> tuple:
    """Mutation involutivity on (B, Lambda, tropical) plus compatibility of
    every once-mutated seed."""
    checked = 0
    failures = []
    for w in _iter_braid_words(cd, length_cap, lo=1):
        seed = initial_seed(cd, w)
        for k in seed.b.exchange:
            once = mutate_seed(seed, k)
            twice = mutate_seed(once, k)
            checked += 1
            if (
                twice.b.entries != seed.b.entries
                or twice.lam != seed.lam
                or twice.trop != seed.trop
            ):
                failures.append(
                    {"word": list(w.letters), "k": k, "kind": "involution"}
                )
            if not check_compatibility(once.lam, once.b):
                failures.append(
                    {"word": list(w.letters), "k": k, "kind": "compatibility"}
                )
    return checked, failures


def tsystem_campaign(cd: CartanData, length_cap: int) -> tuple:
    """Tropical boxed identity and lower-term dominance over all i-boxes."""
    checked = 0
    failures = []
    for w in _iter_braid_words(cd, length_cap, lo=1):
        for a in range(1, w.length + 1):
            for b in range(a, w.length + 1):
                if w.letter(a) != w.letter(b):
                    continue
                result = tsystem_check(cd, w, IBox(a, b))
                checked += 1
                if result.degenerate:
                    continue
                if result.left_sum != result.right_sum:
                    failures.append(
                        {"word": list(w.letters), "box": [a, b], "kind": "identity"}
                    )
                if result.lower_verdict is OrderVerdict.GREATER:
                    failures.append(
                        {
                            "word": list(w.letters),
                            "box": [a, b],
                            "kind": "lower-dominant",
                        }
                    )
    return checked, failures


def torus_campaign(cd: CartanData, word_length: int, pairs: int = 200) -> tuple:
    """Based-monomial commutation X^a X^b = q^Lambda(a,b) X^b X^a on random
    Laurent exponent pairs in one seed context per word length."""
    rng = random.Random(CAMPAIGN_RNG_SEED)
    letters = tuple(
        cd.index_set[t % len(cd.index_set)] for t in range(word_length)
    )
    seed = initial_seed(cd, Word(letters, WordKind.POSITIVE_BRAID))
    rank = len(letters)
    checked = 0
    failures = []
    for _ in range(pairs):
        a = tuple(rng.randint(-3, 3) for _ in range(rank))
        b = tuple(rng.randint(-3, 3) for _ in range(rank))
        left = torus_product(
            seed.lam,
            QuantumLaurent.monomial(rank, a),
            QuantumLaurent.monomial(rank, b),
        )
        right = torus_product(
            seed.lam,
            QuantumLaurent.monomial(rank, b),
            QuantumLaurent.monomial(rank, a),
        ).q_shift(commutation_doubled(seed.lam, a, b))
        checked += 1
        if left != right:
            failures.append({"a": list(a), "b": list(b)})
    return checked, failures


def exact_exchange_campaign(cd: CartanData, length_cap: int) -> tuple:
    """Exchange relation of every executed mutation on exact seeds."""
    checked = 0
    failures = []
    for w in _iter_braid_words(cd, length_cap, lo=1):
        seed = initial_seed(cd, w, exact=True)
        for k in seed.b.exchange:
            check = exchange_check(seed, k)
            checked += 1
            if not check.verified:
                failures.append({"word": list(w.letters), "k": k})
    return checked, failures


def _cmd_verify_all(config: RunConfig) -> Report:
    length_cap = config.options.get("length_cap", LENGTH_CAP_DEFAULT)
    rank_cap = config.options.get("rank_cap", RANK_CAP_DEFAULT)
    if length_cap < 1:
        raise ConfigInvalid("length-cap: must be >= 1")
    if rank_cap < 1:
        raise ConfigInvalid("rank-cap: must be >= 1")
    contexts = campaign_contexts(rank_cap)
    sections = [echo("contexts", [name for name, _ in contexts])]
    for name, cd in contexts:
        checked, failures = roundtrip_campaign(cd, length_cap)
        sections.append(echo(f"round-trips-{name}", checked))
        sections.append(comparison(f"round-trip-failures-{name}", failures, []))
        checked, failures = mutation_campaign(cd, min(length_cap, 6))
        sections.append(echo(f"mutations-{name}", checked))
        sections.append(comparison(f"mutation-failures-{name}", failures, []))
        checked, failures = tsystem_campaign(cd, length_cap)
        sections.append(echo(f"tsystem-boxes-{name}", checked))
        sections.append(comparison(f"tsystem-failures-{name}", failures, []))
        if config.exact:
            checked, failures = torus_campaign(cd, min(length_cap, 6))
            sections.append(echo(f"torus-pairs-{name}", checked))
            sections.append(comparison(f"torus-failures-{name}", failures, []))
            checked, failures = exact_exchange_campaign(cd, min(length_cap, 4))
            sections.append(echo(f"exchange-steps-{name}", checked))
            sections.append(comparison(f"exchange-failures-{name}", failures, []))
    return report_from_sections(sections, _metadata(config))


_HANDLERS = {
    ("cartan", "check"): _cmd_cartan_check,
    ("words", "moves"): _cmd_words_moves,
    ("words", "path"): _cmd_words_path,
    ("words", "equal"): _cmd_words_equal,
    ("words", "ibox"): _cmd_words_ibox,
    ("transition", "apply"): _cmd_transition_apply,
    ("transition", "verify-ibox"): _cmd_transition_verify_ibox,
    ("seed", "build"): _cmd_seed_build,
    ("seed", "mutate"): _cmd_seed_mutate,
    ("seed", "verify-equivalence"): _cmd_seed_verify_equivalence,
    ("seed", "tsystem"): _cmd_seed_tsystem,
    ("qdatum", "build"): _cmd_qdatum_build,
    ("qdatum", "adapted-word"): _cmd_qdatum_adapted_word,
    ("qdatum", "window"): _cmd_qdatum_window,
    ("qdatum", "phi"): _cmd_qdatum_phi,
    ("qdatum", "ntab"): _cmd_qdatum_ntab,
    ("verify", "corollary"): _cmd_seed_verify_equivalence,
    ("verify", "tsystem"): _cmd_verify_tsystem,
    ("verify", "all"): _cmd_verify_all,
}


def dispatch(config: RunConfig) -> Report:
    """Route a validated configuration to its handler."""
    _validate_config(config)
    handler = _HANDLERS.get(config.command)
    if handler is None:
        raise ConfigInvalid(f"command: unknown subcommand {config.command}")
    return handler(config)


def main(argv=None) -> int:
    try:
        config = parse_args(argv)
    except BraidseedError as err:
        report = error_report(type(err).__name__, str(err), base_metadata(("parse",)))
        sys.stdout.write(emit_report(report, "text").decode("utf-8"))
        return report.exit_code
    try:
        report = dispatch(config)
    except BraidseedError as err:
        report = error_report(type(err).__name__, str(err), _metadata(config))
    blob = emit_report(report, config.format)
    if config.output:
        Path(config.output).write_bytes(blob)
    else:
        sys.stdout.write(blob.decode("utf-8"))
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
