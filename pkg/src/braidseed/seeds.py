"""Seeds attached to words: exchange matrices, compatible pairings,
mutation with exact and tropical variable tracks, move scripts, and
equivalence verification between the seeds of monoid-equal words.

Position conventions are 1-based throughout, matching the word layer.
The exact track stores every cluster variable as a Laurent element of
the initial quantum torus; mutated variables are produced by exact
right division, so any internal inconsistency surfaces as
NonExactDivision instead of a silently wrong result.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .cartan import CartanData
from .errors import (
    ExchangeSetNotPreserved,
    FrozenIndex,
    MinorNotReachable,
    MutationIndexFrozen,
    ShapeMismatch,
    ZeroBlockViolated,
)
from .lattices import canonical_smallest_solution
from .qlaurent import (
    QHalf,
    QuantumLaurent,
    lambda_pairing,
    right_divide,
    torus_product,
)
from .transitions import (
    OrderVerdict,
    _window_letters,
    bilex_compare,
    par_mutation,
    transition_along_path,
)
from .words import (
    EMPTY_BOX,
    IBox,
    Move,
    MoveKind,
    Word,
    apply_move,
    find_move_path,
    ibox_vector,
    make_ibox,
    neighbor_index,
    resolve_ibox,
)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Full K x K integer matrix with a designated exchange column set.

    entries[k-1][l-1] holds b_{kl}; exchange lists K^ex; d_prime[s-1] is
    the symmetrizer value attached to position s (meaningful on K^ex).
    """

    entries: tuple
    exchange: tuple
    d_prime: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, k: int, l: int) -> int:
        return self.entries[k - 1][l - 1]

    def column(self, l: int) -> tuple:
        return tuple(row[l - 1] for row in self.entries)

    def is_exchange(self, k: int) -> bool:
        return k in self.exchange


def gls_matrix(cd: CartanData, w: Word) -> ExchangeMatrix:
    """Exchange matrix of the word's initial seed.

    b_{kl} is 1 when l = k-, -1 when l = k+, the Cartan entry c_{i_k i_l}
    when l- < k- < l < k, its negative when k- < l- < k < l, else 0.
    """
    n = w.length
    minus = [0] * (n + 1)
    for s in range(1, n + 1):
        minus[s] = neighbor_index(w, s).minus
    rows = []
    for k in range(1, n + 1):
        row = []
        for l in range(1, n + 1):
            if l == k:
                row.append(0)
            elif minus[k] == l:
                row.append(1)
            elif minus[l] == k:
                row.append(-1)
            elif minus[l] < minus[k] < l < k:
                row.append(cd.entry(w.letter(k), w.letter(l)))
            elif minus[k] < minus[l] < k < l:
                row.append(-cd.entry(w.letter(k), w.letter(l)))
            else:
                row.append(0)
        rows.append(tuple(row))
    exchange = tuple(s for s in range(1, n + 1) if minus[s] >= 1)
    d = dict(zip(cd.index_set, cd.symmetrizer))
    d_prime = tuple(d[w.letter(s)] for s in range(1, n + 1))
    return ExchangeMatrix(tuple(rows), exchange, d_prime)


def solve_lambda(b: ExchangeMatrix) -> tuple:
    """Canonical skew-symmetric pairing compatible with the exchange matrix.

    Solves sum_k lambda_{ik} b_{kj} = -2 d'_j delta_{ij} for all i in K
    and j in K^ex over the integers, then picks the canonical smallest
    solution (max-norm first, then absolute entries in row-major order,
    then nonnegative entries preferred).
    """
    n = b.n
    unknowns = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    index = {pair: t for t, pair in enumerate(unknowns)}
    rows = []
    rhs = []
    for i in range(1, n + 1):
        for j in b.exchange:
            row = [0] * len(unknowns)
            for k in range(1, n + 1):
                coeff = b.entry(k, j)
                if coeff == 0 or k == i:
                    continue
                if i < k:
                    row[index[(i, k)]] += coeff
                else:
                    row[index[(k, i)]] -= coeff
            rows.append(row)
            rhs.append(-2 * b.d_prime[j - 1] if i == j else 0)
    if not rows:
        return tuple((0,) * n for _ in range(n))
    solution = canonical_smallest_solution(rows, rhs)
    lam = [[0] * n for _ in range(n)]
    for (i, j), value in zip(unknowns, solution):
        lam[i - 1][j - 1] = value
        lam[j - 1][i - 1] = -value
    return tuple(tuple(row) for row in lam)


def check_compatibility(lam: Sequence[Sequence[int]], b: ExchangeMatrix) -> bool:
    """True iff sum_k lambda_{ik} b_{kj} = -2 d'_j delta_{ij} on K x K^ex."""
    n = b.n
    if len(lam) != n or any(len(row) != n for row in lam):
        raise ShapeMismatch(f"pairing size does not match K = [1, {n}]")
    for i in range(1, n + 1):
        for j in b.exchange:
            total = sum(lam[i - 1][k - 1] * b.entry(k, j) for k in range(1, n + 1))
            want = -2 * b.d_prime[j - 1] if i == j else 0
            if total != want:
                return False
    return True


@dataclass(frozen=True)
class Seed:
    """Quantum seed: current exchange data plus both variable tracks.

    torus_lam is the pairing of the initial torus and never changes along
    mutations; lam is the current seed's pairing.  exact is None when the
    exact track is disabled.
    """

    word: Word
    b: ExchangeMatrix
    lam: tuple
    trop: tuple
    labels: tuple
    torus_lam: tuple
    exact: Optional[tuple] = None


def initial_seed(cd: CartanData, w: Word, exact: bool = False) -> Seed:
    """Seed with variables the right-anchored boxes [s, l} of the word."""
    n = w.length
    b = gls_matrix(cd, w)
    lam = solve_lambda(b)
    trops = []
    labels = []
    for s in range(1, n + 1):
        box = resolve_ibox(w, IBox(s, n, brace=True))
        trops.append(ibox_vector(w, box))
        labels.append(f"D[{box.lo},{box.hi}]")
    exact_track = None
    if exact:
        exact_track = tuple(QuantumLaurent.generator(n, s) for s in range(1, n + 1))
    return Seed(
        word=w,
        b=b,
        lam=lam,
        trop=tuple(trops),
        labels=tuple(labels),
        torus_lam=lam,
        exact=exact_track,
    )


def _mutate_b(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    n = b.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == k or j == k:
                row.append(-b.entry(i, j))
            else:
                sign = -1 if b.entry(i, k) < 0 else 1
                row.append(b.entry(i, j) + sign * max(b.entry(i, k) * b.entry(k, j), 0))
        rows.append(tuple(row))
    return ExchangeMatrix(tuple(rows), b.exchange, b.d_prime)


def _mutate_lam(lam: tuple, b: ExchangeMatrix, k: int) -> tuple:
    n = b.n
    out = [list(row) for row in lam]
    for j in range(1, n + 1):
        if j == k:
            continue
        total = -lam[k - 1][j - 1]
        for l in range(1, n + 1):
            total += max(0, -b.entry(l, k)) * lam[l - 1][j - 1]
        out[k - 1][j - 1] = total
        out[j - 1][k - 1] = -total
    out[k - 1][k - 1] = 0
    return tuple(tuple(row) for row in out)


def exchange_vectors(b: ExchangeMatrix, k: int) -> tuple:
    """The two exchange monomial exponent vectors at k, each with -1 in slot k."""
    n = b.n
    up = [max(b.entry(j, k), 0) for j in range(1, n + 1)]
    down = [max(-b.entry(j, k), 0) for j in range(1, n + 1)]
    up[k - 1] = -1
    down[k - 1] = -1
    return tuple(up), tuple(down)


def _current_monomial(seed: Seed, vec: Sequence[int]) -> QuantumLaurent:
    """Ordered product of current variables to the given nonnegative powers,
    with the based-monomial q-prefactor of the current pairing."""
    n = seed.b.n
    doubled = sum(
        vec[i] * vec[j] * seed.lam[i][j]
        for i in range(n)
        for j in range(n)
        if i > j
    )
    out = QuantumLaurent.monomial(n, (0,) * n, QHalf.q_power(doubled))
    for j in range(n):
        for _ in range(vec[j]):
            out = torus_product(seed.torus_lam, out, seed.exact[j])
    return out


def _exchange_sum(seed: Seed, k: int) -> QuantumLaurent:
    """q^c1 m_a + q^c2 m_a' where m is the ordered product skipping slot k.

    Each based monomial X^a of the current seed (with exponent -1 in slot
    k) is rewritten as q^c * (product over the other slots) * X_k^{-1};
    the returned element is that numerator, so dividing by X_k's Laurent
    form on the right yields the mutated variable.
    """
    n = seed.b.n
    up, down = exchange_vectors(seed.b, k)
    total = QuantumLaurent.zero(n)
    for vec in (up, down):
        doubled = sum(
            vec[i] * vec[j] * seed.lam[i][j] for i in range(n) for j in range(n) if i > j
        )
        doubled -= 2 * sum(
            vec[j] * seed.lam[k - 1][j] for j in range(k, n)
        )
        part = QuantumLaurent.monomial(n, (0,) * n, QHalf.q_power(doubled))
        for j in range(n):
            if j == k - 1:
                continue
            for _ in range(vec[j]):
                part = torus_product(seed.torus_lam, part, seed.exact[j])
        total = total + part
    return total


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutation at an exchange index; returns a new seed.

    The tropical track applies the parameter mutation rule to the two
    exchange monomials' parameters; the exact track divides the exchange
    numerator by the current variable's Laurent form.
    """
    if not seed.b.is_exchange(k):
        raise FrozenIndex(f"index {k} is not in the exchange set {seed.b.exchange}")
    n = seed.b.n
    up, down = exchange_vectors(seed.b, k)
    d1 = [0] * n
    d2 = [0] * n
    for j in range(n):
        for t in range(n):
            if j != k - 1:
                d1[t] += up[j] * seed.trop[j][t]
                d2[t] += down[j] * seed.trop[j][t]
    new_trop_k = par_mutation(seed.trop[k - 1], tuple(d1), tuple(d2))
    trop = tuple(
        new_trop_k if t == k - 1 else seed.trop[t] for t in range(n)
    )
    exact = seed.exact
    if exact is not None:
        numerator = _exchange_sum(seed, k)
        new_var = right_divide(seed.torus_lam, numerator, exact[k - 1])
        exact = tuple(
            new_var if t == k - 1 else exact[t] for t in range(n)
        )
    labels = tuple(
        f"mu{k}({seed.labels[t]})" if t == k - 1 else seed.labels[t]
        for t in range(n)
    )
    return replace(
        seed,
        b=_mutate_b(seed.b, k),
        lam=_mutate_lam(seed.lam, seed.b, k),
        trop=trop,
        labels=labels,
        exact=exact,
    )


@dataclass(frozen=True)
class ExchangeCheck:
    """Outcome of verifying X_k * mu_k(X_k) = q^(alpha/2) M1 + q^(beta/2) M2.

    alpha_doubled and beta_doubled are the doubled q-exponents attached to
    the up and down exchange monomials; verified is None when the exact
    track is off.
    """

    slot: int
    alpha_doubled: int
    beta_doubled: int
    verified: Optional[bool]


def exchange_check(seed: Seed, k: int) -> ExchangeCheck:
    """Verify the exchange relation at k inside the initial torus."""
    if not seed.b.is_exchange(k):
        raise FrozenIndex(f"index {k} is not in the exchange set {seed.b.exchange}")
    n = seed.b.n
    up, down = exchange_vectors(seed.b, k)
    e_k = tuple(1 if t == k - 1 else 0 for t in range(n))
    alpha = lambda_pairing(seed.lam, e_k, up)
    beta = lambda_pairing(seed.lam, e_k, down)
    verified = None
    if seed.exact is not None:
        mutated = mutate_seed(seed, k)
        lhs = torus_product(seed.torus_lam, seed.exact[k - 1], mutated.exact[k - 1])
        up_plus = tuple(v + e for v, e in zip(up, e_k))
        down_plus = tuple(v + e for v, e in zip(down, e_k))
        rhs = _current_monomial(seed, up_plus).q_shift(alpha) + _current_monomial(
            seed, down_plus
        ).q_shift(beta)
        verified = lhs == rhs
    return ExchangeCheck(k, alpha, beta, verified)


def permute_seed(seed: Seed, rho: Sequence[int]) -> Seed:
    """Relabel slots: new slot i carries the data of old slot rho(i).

    rho is a 1-based image tuple; the exchange set is transported, and
    the symmetrizer values move with their slots.
    """
    n = seed.b.n
    if sorted(rho) != list(range(1, n + 1)):
        raise ExchangeSetNotPreserved(f"{rho} is not a permutation of [1, {n}]")
    entries = tuple(
        tuple(seed.b.entry(rho[i], rho[j]) for j in range(n)) for i in range(n)
    )
    exchange = tuple(
        sorted(i + 1 for i in range(n) if rho[i] in seed.b.exchange)
    )
    d_prime = tuple(seed.b.d_prime[rho[i] - 1] for i in range(n))
    b = ExchangeMatrix(entries, exchange, d_prime)
    lam = tuple(
        tuple(seed.lam[rho[i] - 1][rho[j] - 1] for j in range(n)) for i in range(n)
    )
    trop = tuple(seed.trop[rho[i] - 1] for i in range(n))
    labels = tuple(seed.labels[rho[i] - 1] for i in range(n))
    exact = None
    if seed.exact is not None:
        exact = tuple(seed.exact[rho[i] - 1] for i in range(n))
    return replace(
        seed, b=b, lam=lam, trop=trop, labels=labels, exact=exact
    )


def restrict_seed(seed: Seed, J: Sequence[int], Jex: Sequence[int]) -> Seed:
    """Restriction to a sub-index set; requires the zero block outside J.

    Tropical vectors are projected to the J coordinates; the exact track
    is dropped because the ambient torus changes rank.
    """
    n = seed.b.n
    J = tuple(sorted(J))
    Jex = tuple(sorted(Jex))
    if not set(Jex) <= set(J) & set(seed.b.exchange):
        raise ShapeMismatch("restricted exchange set must lie in J and K^ex")
    outside = [k for k in range(1, n + 1) if k not in set(J)]
    for k in outside:
        for l in Jex:
            if seed.b.entry(k, l) != 0:
                raise ZeroBlockViolated(
                    f"b[{k},{l}] = {seed.b.entry(k, l)} outside the restricted block"
                )
    entries = tuple(tuple(seed.b.entry(i, j) for j in J) for i in J)
    new_index = {old: new + 1 for new, old in enumerate(J)}
    b = ExchangeMatrix(
        entries,
        tuple(new_index[s] for s in Jex),
        tuple(seed.b.d_prime[s - 1] for s in J),
    )
    lam = tuple(tuple(seed.lam[i - 1][j - 1] for j in J) for i in J)
    torus_lam = tuple(tuple(seed.torus_lam[i - 1][j - 1] for j in J) for i in J)
    trop = tuple(tuple(seed.trop[s - 1][j - 1] for j in J) for s in J)
    labels = tuple(seed.labels[s - 1] for s in J)
    sub_letters = tuple(seed.word.letters[s - 1] for s in J)
    word = Word(sub_letters, seed.word.kind)
    return Seed(
        word=word,
        b=b,
        lam=lam,
        trop=trop,
        labels=labels,
        torus_lam=torus_lam,
        exact=None,
    )


@dataclass(frozen=True)
class MutationScript:
    """Mutations in application order, then a slot permutation."""

    mutations: tuple
    permutation: tuple


def _transpositions(n: int, *pairs) -> tuple:
    rho = list(range(1, n + 1))
    for a, b in pairs:
        rho[a - 1], rho[b - 1] = rho[b - 1], rho[a - 1]
    return tuple(rho)


def move_to_mutation_script(cd: CartanData, w: Word, m: Move) -> MutationScript:
    """Compile a word move into the seed operations realizing it.

    Swap moves permute two slots; triple moves mutate once and permute;
    quadruple moves need three mutations (the two stated orders agree)
    and the double transposition of both window slot pairs.
    """
    i, j, p = _window_letters(cd, w, m)
    n = w.length
    b = gls_matrix(cd, w)
    if m.kind is MoveKind.TWO:
        return MutationScript((), _transpositions(n, (p, p + 1)))
    if m.kind is MoveKind.THREE:
        muts = (p + 2,)
        perm = _transpositions(n, (p, p + 1))
    else:
        if cd.entry(j, i) == -1:
            muts = (p + 2, p + 3, p + 2)
        else:
            muts = (p + 3, p + 2, p + 3)
        perm = _transpositions(n, (p, p + 1), (p + 2, p + 3))
    for k in muts:
        if not b.is_exchange(k):
            raise MutationIndexFrozen(
                f"{m}: script index {k} is frozen in K^ex = {b.exchange}"
            )
    return MutationScript(muts, perm)


@dataclass(frozen=True)
class FourMoveIntermediate:
    """Recomputed entry b'_{p+1,p+3} after the first script mutation."""

    move: Move
    value: int
    displayed: int = 1

    @property
    def match(self) -> bool:
        return self.value == self.displayed


@dataclass(frozen=True)
class EquivalenceReport:
    """Comparison of a script-transported seed against the target's seed."""

    word_a: Word
    word_b: Word
    path: tuple
    b_exchange_match: bool
    b_full_match: bool
    trop_match: bool
    transported_match: bool
    transported_targets: tuple
    lam_gauge: tuple
    lam_gauge_in_kernel: bool
    exchange_checks: tuple
    exact_verified: Optional[bool]
    four_move_intermediates: tuple

    @property
    def match(self) -> bool:
        """Script transport reproduced the target seed.

        The tropical gate is transported_match: mutated vectors stay in
        the source word's coordinates, so they are compared against the
        target's vectors pulled back along the reversed path.  trop_match
        records the raw comparison for the coordinate-fixed cases.
        """
        core = (
            self.b_exchange_match
            and self.transported_match
            and self.lam_gauge_in_kernel
        )
        if self.exact_verified is None:
            return core
        return core and self.exact_verified


def seed_equivalence_report(
    cd: CartanData,
    w: Word,
    w2: Word,
    exact: Optional[bool] = None,
    exact_max_length: int = 6,
    budget: Optional[int] = None,
) -> EquivalenceReport:
    """Walk a move path from w to w2, compiling each move to a script and
    replaying it on the seed of w; compare the outcome with the seed of w2.

    exact defaults to running the exact track iff the word is short enough.
    """
    path = tuple(find_move_path(cd, w, w2, budget))
    if exact is None:
        exact = w.length <= exact_max_length
    seed = initial_seed(cd, w, exact=exact)
    current = w
    checks = []
    intermediates = []
    for move in path:
        script = move_to_mutation_script(cd, current, move)
        first = True
        for k in script.mutations:
            checks.append(exchange_check(seed, k))
            seed = mutate_seed(seed, k)
            if first and move.kind is MoveKind.FOUR:
                p = move.position
                intermediates.append(
                    FourMoveIntermediate(move, seed.b.entry(p + 1, p + 3))
                )
            first = False
        seed = permute_seed(seed, script.permutation)
        current = apply_move(current, move)
    target = initial_seed(cd, w2, exact=False)
    n = w.length
    b_exchange_match = all(
        seed.b.entry(t, l) == target.b.entry(t, l)
        for t in range(1, n + 1)
        for l in target.b.exchange
    ) and seed.b.exchange == target.b.exchange and seed.b.d_prime == target.b.d_prime
    b_full_match = seed.b.entries == target.b.entries
    trop_match = seed.trop == target.trop
    reverse = tuple(reversed(path))
    transported = tuple(
        transition_along_path(cd, w2, reverse, vec, convention="weighted")
        for vec in target.trop
    )
    transported_match = seed.trop == transported
    gauge = tuple(
        tuple(seed.lam[i][j] - target.lam[i][j] for j in range(n)) for i in range(n)
    )
    in_kernel = all(
        sum(gauge[i][k - 1] * target.b.entry(k, l) for k in range(1, n + 1)) == 0
        for i in range(n)
        for l in target.b.exchange
    )
    exact_verified = None
    if exact:
        exact_verified = all(c.verified for c in checks) if checks else True
    return EquivalenceReport(
        word_a=w,
        word_b=w2,
        path=path,
        b_exchange_match=b_exchange_match,
        b_full_match=b_full_match,
        trop_match=trop_match,
        transported_match=transported_match,
        transported_targets=transported,
        lam_gauge=gauge,
        lam_gauge_in_kernel=in_kernel,
        exchange_checks=tuple(checks),
        exact_verified=exact_verified,
        four_move_intermediates=tuple(intermediates),
    )


@dataclass(frozen=True)
class TSystemReport:
    """Boxed product identity for one box, tropical or exact mode."""

    box: IBox
    degenerate: bool
    identity_holds: bool
    left_sum: tuple
    right_sum: tuple
    lower_sum: tuple
    lower_verdict: OrderVerdict
    lower_strictly_smaller: Optional[bool]
    mode: str
    a_doubled: Optional[int] = None
    b_doubled: Optional[int] = None
    exact_verified: Optional[bool] = None

    @property
    def match(self) -> bool:
        if self.degenerate:
            return True
        ok = self.identity_holds
        if self.exact_verified is not None:
            ok = ok and self.exact_verified
        return ok


def _letter_boxes(cd: CartanData, w: Word, a: int, b: int):
    """Lower-product boxes [a+(j), b-(j)] over letters adjacent to i_a."""
    i = w.letter(a)
    boxes = []
    for j in cd.index_set:
        if j == i or cd.entry(i, j) == 0:
            continue
        plus_j = neighbor_index(w, a, j).plus_j
        minus_j = neighbor_index(w, b, j).minus_j
        boxes.append(make_ibox(plus_j, minus_j))
    return boxes


def tsystem_check(
    cd: CartanData, w: Word, box: IBox, mode: str = "tropical"
) -> TSystemReport:
    """Check the boxed product identity at one box.

    Tropical mode verifies vec[a+,b] + vec[a,b-] = vec[a,b] + vec[a+,b-]
    and compares the lower product against the main sum in the bi-lex
    order.  Exact mode additionally realizes the identity as the
    exchange relation at slot a+ when the box is right-anchored and the
    exchange monomials match the boxed terms; otherwise it raises
    MinorNotReachable.
    """
    resolved = resolve_ibox(w, box)
    a, b = resolved.lo, resolved.hi
    a_plus = neighbor_index(w, a).plus
    b_minus = neighbor_index(w, b).minus
    degenerate = a_plus > b

    def vec(lo, hi):
        return ibox_vector(w, make_ibox(lo, hi))

    left = tuple(
        x + y for x, y in zip(vec(a_plus, b), vec(a, b_minus))
    )
    right = tuple(
        x + y for x, y in zip(vec(a, b), vec(a_plus, b_minus))
    )
    lower_boxes = _letter_boxes(cd, w, a, b)
    lower = [0] * w.length
    for lb in lower_boxes:
        for t, v in enumerate(ibox_vector(w, lb)):
            lower[t] += v
    lower = tuple(lower)
    verdict = bilex_compare(lower, right)
    strictly = None
    if verdict is not OrderVerdict.INCOMPARABLE:
        strictly = verdict is OrderVerdict.LESS
    report = TSystemReport(
        box=resolved,
        degenerate=degenerate,
        identity_holds=left == right,
        left_sum=left,
        right_sum=right,
        lower_sum=lower,
        lower_verdict=verdict,
        lower_strictly_smaller=strictly,
        mode=mode,
    )
    if mode != "exact":
        return report
    if degenerate:
        raise MinorNotReachable(f"box {resolved} is degenerate for the exact mode")
    anchored = resolve_ibox(w, IBox(a, w.length, brace=True))
    if (anchored.lo, anchored.hi) != (a, b):
        raise MinorNotReachable(
            f"box {resolved} is not right-anchored; its minors are not "
            "variables of the initial seed"
        )
    seed = initial_seed(cd, w, exact=True)
    k = a_plus
    if not seed.b.is_exchange(k):
        raise MinorNotReachable(f"slot {k} is frozen; the identity has no exchange form")
    up, down = exchange_vectors(seed.b, k)
    par_up = [0] * w.length
    par_down = [0] * w.length
    for j in range(w.length):
        for t in range(w.length):
            if j != k - 1:
                par_up[t] += up[j] * seed.trop[j][t]
                par_down[t] += down[j] * seed.trop[j][t]
    if tuple(par_down) != right or tuple(par_up) != lower:
        raise MinorNotReachable(
            f"the exchange monomials at slot {k} do not realize the boxed terms"
        )
    check = exchange_check(seed, k)
    return replace(
        report,
        a_doubled=check.beta_doubled,
        b_doubled=check.alpha_doubled,
        exact_verified=check.verified,
    )


def seed_to_json(seed: Seed) -> dict:
    """Serializable seed dump; exact forms are keyed by exponent vector."""
    payload = {
        "labels": list(seed.labels),
        "B": [list(row) for row in seed.b.entries],
        "Lambda": [list(row) for row in seed.lam],
        "exchange": list(seed.b.exchange),
        "d_prime": list(seed.b.d_prime),
        "variables": {"tropical": [list(v) for v in seed.trop]},
        "word": {"letters": list(seed.word.letters), "kind": seed.word.kind.value},
    }
    if seed.exact is not None:
        payload["variables"]["exact"] = [
            {
                "terms": [
                    {"exponents": list(e), "coefficient": sorted(c.terms.items())}
                    for e, c in sorted(var.terms.items())
                ]
            }
            for var in seed.exact
        ]
    return payload
