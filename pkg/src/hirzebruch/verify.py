"""Named end-to-end checks backing ``verify-all``.

Each check returns a :class:`Check`; random inputs come from a fixed seed
so the ledger is reproducible byte for byte.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .bundles import closing_check, search, table_row
from .conclusions import bew_degree_set, hurewicz_homotopy_set
from .genera import (
    apply_sequence,
    closed_form_leading,
    genus_sequence,
    leading_coefficient,
    verify_product_identity,
)
from .manifolds import ahat, ahat_under_zero_signature, lemma24_matrix, signature
from .numeric import Genus
from .symfunc import GradedPolynomial, partitions

SEED = 20201015

# d mod 8 -> j-set of the refined main theorem
RESIDUE_J_SETS = {
    0: {2, 3, 7},
    1: {2, 3, 6},
    2: {2, 5},
    3: {2, 4},
    4: {3},
    5: {2, 3, 4, 6},
    6: {2, 3, 4, 9},
    7: {2, 3, 4, 8},
}

# r -> ((p, q, i, j) at k, (4i-p-1, 4j-q-1), degree column set)
PRINTED_TABLE = {
    2: (lambda k: (4 * k + 1, 4 * k + 1, k + 1, k + 1), (2, 2), {2, 5}),
    3: (lambda k: (4 * k + 1, 4 * k + 2, k + 1, k + 1), (2, 1), {2, 4}),
    4: (lambda k: (4 * k + 2, 4 * k + 2, k + 1, k + 1), (1, 1), {3}),
    5: (lambda k: (4 * k + 2, 4 * k + 3, k + 1, k + 2), (1, 4), {4, 6}),
    6: (lambda k: (4 * k + 3, 4 * k + 3, k + 2, k + 2), (4, 4), {4, 9}),
    7: (lambda k: (4 * k + 3, 4 * k + 4, k + 2, k + 2), (4, 3), {3, 4, 8}),
    8: (lambda k: (4 * k + 4, 4 * k + 4, k + 2, k + 2), (3, 3), {3, 7}),
    9: (lambda k: (4 * k + 4, 4 * k + 5, k + 2, k + 2), (3, 2), {2, 3, 6}),
}

W42_PAIRS = [{2, 5}, {6, 13}, {10, 21}, {14, 29}, {18, 37}]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}{tail}"


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        if x or not nonzero:
            return x


def random_total_class(rng: random.Random, cap: int) -> list[GradedPolynomial]:
    """Random ``1 + a_1 + ... + a_cap`` in the free graded ring on ``p_1, p_2, ...``."""
    out = [GradedPolynomial.one()]
    for w in range(1, cap + 1):
        out.append(GradedPolynomial(w, {part: random_rational(rng) for part in partitions(w)}))
    return out


def total_product(a, b, cap: int) -> list[GradedPolynomial]:
    out = []
    for n in range(cap + 1):
        acc = GradedPolynomial(n)
        for k in range(n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return out


def check_leading_coefficients(k_max: int = 8) -> Check:
    L = genus_sequence(Genus.L, k_max)
    A = genus_sequence(Genus.AHAT, k_max)
    printed = leading_coefficient(L, 1) == Fraction(1, 3) and leading_coefficient(A, 1) == Fraction(-1, 24)
    bad = [
        (g.value, k)
        for g, seq in ((Genus.L, L), (Genus.AHAT, A))
        for k in range(1, k_max + 1)
        if leading_coefficient(seq, k) != closed_form_leading(g, k)
    ]
    return Check(
        f"leading coefficients: s_1=1/3, a_1=-1/24, closed forms for k<={k_max}",
        printed and not bad,
        f"mismatches {bad}" if bad else "",
    )


def check_product_identities(n_max: int = 10) -> Check:
    bad = []
    count = 0
    for g in Genus:
        seq = genus_sequence(g, n_max)
        for i in range(1, n_max):
            for j in range(i, n_max - i + 1):
                count += 1
                if not verify_product_identity(seq, i, j).holds:
                    bad.append((g.value, i, j))
    return Check(
        f"product identities c_i c_j = c_(i+j) + lambda c_(i,j), i+j<={n_max}",
        not bad,
        f"{count} cases" + (f", failures {bad}" if bad else ""),
    )


def check_determinants(n: int = 8) -> Check:
    bad = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rep = lemma24_matrix(i, j)
            if rep.reduced_det != rep.expected_reduced_det or not rep.nonsingular or rep.reduced_det == 0:
                bad.append((i, j))
    return Check(
        f"reduced determinant -(2^2i-1)(2^2j-1)/4 and full matrix nonsingular, i,j<={n}",
        not bad,
        f"failures {bad}" if bad else "",
    )


def check_zero_signature(n: int = 6, samples: int = 20, seed: int = SEED) -> Check:
    rng = random.Random(seed)
    bad = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for _ in range(samples):
                v = random_rational(rng, nonzero=True)
                rep = ahat_under_zero_signature(i, j, v)
                M = rep.manifold()
                if rep.ahat == 0 or signature(M) != 0 or ahat(M) != rep.ahat:
                    bad.append((i, j, str(v)))
    return Check(
        f"zero-signature models have Ahat != 0, 1<=i<=j<={n}, {samples} samples each",
        not bad,
        f"failures {bad[:5]}" if bad else "",
    )


def check_multiplicativity(cap: int = 5, trials: int = 10, seed: int = SEED) -> Check:
    rng = random.Random(seed)
    bad = []
    for g in Genus:
        seq = genus_sequence(g, cap)
        for t in range(trials):
            a = random_total_class(rng, cap)
            b = random_total_class(rng, cap)
            lhs = apply_sequence(seq, total_product(a, b, cap), cap)
            rhs = total_product(apply_sequence(seq, a, cap), apply_sequence(seq, b, cap), cap)
            if lhs != rhs:
                bad.append((g.value, t))
    return Check(
        f"multiplicativity K(ab) = K(a)K(b) up to weight {cap}, {trials} trials per genus",
        not bad,
        f"failures {bad}" if bad else "",
    )


def check_table(k_max: int = 5) -> Check:
    bad = []
    for k in range(1, k_max + 1):
        for r, (params_at, cols, col_set) in PRINTED_TABLE.items():
            d = 8 * k + r
            row = table_row(d)
            if d == 13:
                a, b = row.params.base_dims
                if row.from_table or 1 not in (a, b) or not row.caveats:
                    bad.append(d)
                continue
            m_set = set(bew_degree_set(row.params).m_set) - {0, 1}
            if (
                row.params.as_tuple() != params_at(k)
                or row.degree_columns != cols
                or m_set != col_set
                or not row.from_table
            ):
                bad.append(d)
    small = {d: [bp.as_tuple() for bp in search(d)] for d in (6, 7, 8, 9)}
    if small != {6: [(3, 3, 1, 1)], 7: [], 8: [], 9: []}:
        bad.append(("search", small))
    return Check(
        f"table rows d=8k+r, k<={k_max}; d=13 caveat; search(6..9)",
        not bad,
        f"failures {bad}" if bad else "",
    )


def check_j_sets(k_max: int = 5) -> Check:
    bad = []
    for k in range(1, k_max + 1):
        for r in range(2, 10):
            d = 8 * k + r
            if d == 13:
                continue
            hw = hurewicz_homotopy_set(bew_degree_set(table_row(d).params).m_set)
            if set(hw.j_set) != RESIDUE_J_SETS[d % 8] or not all(2 <= j <= 9 for j in hw.j_set):
                bad.append((d, sorted(hw.j_set)))
    pairs = [
        set(bew_degree_set(bp).m_set)
        for bp in search(42)
        if bp.p == bp.q == 21 and bp.i == bp.j
    ]
    if pairs != W42_PAIRS:
        bad.append(("W_1^42", pairs))
    return Check(
        f"j-sets by d mod 8 for k<={k_max} and the five W_1^42 degree pairs",
        not bad,
        f"failures {bad}" if bad else "",
    )


def check_structure(d_max: int = 60) -> Check:
    bad = []
    for d in range(1, d_max + 1):
        found = search(d)
        if not all(closing_check(bp).passes for bp in found):
            bad.append(("closing", d))
        if bool(found) != (d == 6 or d >= 10):
            bad.append(("nonempty", d))
        has_thick = any(min(bp.base_dims) >= 2 for bp in found)
        if d in (6, 13) and has_thick:
            bad.append(("thin", d))
        if d >= 10 and d != 13 and not has_thick:
            bad.append(("thick", d))
        for bp in found:
            a, b = bp.base_dims
            if bp.total_dim % 4 or bp.total_dim != d + a + b:
                bad.append(("dims", bp.as_tuple()))
    return Check(
        f"search/closing invariants for d<={d_max}",
        not bad,
        f"failures {bad[:5]}" if bad else "",
    )


CHECKS: list[Callable[[], Check]] = [
    check_leading_coefficients,
    check_product_identities,
    check_determinants,
    check_zero_signature,
    check_multiplicativity,
    check_table,
    check_j_sets,
    check_structure,
]


def run_all() -> Iterator[Check]:
    for fn in CHECKS:
        try:
            yield fn()
        except Exception as exc:  # a crashing check is a failed check
            yield Check(fn.__name__, False, f"{type(exc).__name__}: {exc}")
