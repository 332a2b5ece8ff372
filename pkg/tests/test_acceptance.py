"""Acceptance criteria 1-9, each at exact tolerance.

Every test prints one ``PASS``/``FAIL`` line (visible with ``pytest -s``)
and then asserts, so a failing criterion is both reported and red.
Reference values are hard-coded here or computed from oracles that do not
share code with the engine (Bernoulli numbers by the binomial recurrence,
the printed parameter table transcribed row by row).
"""
import random
import subprocess
import sys
from fractions import Fraction
from math import comb, factorial

from hirzebruch.bundles import closing_check, search, table_row
from hirzebruch.conclusions import bew_degree_set, hurewicz_homotopy_set
from hirzebruch.genera import (
    apply_sequence,
    genus_sequence,
    leading_coefficient,
)
from hirzebruch.manifolds import (
    FormalManifold,
    ahat,
    ahat_under_zero_signature,
    lemma24_matrix,
    signature,
)
from hirzebruch.symfunc import GradedPolynomial, partitions

F = Fraction


def report(n, ok, what, detail=""):
    tail = f" [{detail}]" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {what}{tail}")
    assert ok, f"criterion {n} failed: {detail}"


def unsigned_b(n_max):
    B = [F(1)]
    for n in range(1, n_max + 1):
        B.append(-sum(comb(n + 1, j) * B[j] for j in range(n)) / F(n + 1))
    return [abs(b) for b in B]


def test_criterion_1_coefficients():
    B = unsigned_b(16)
    L, A = genus_sequence("L", 8), genus_sequence("Ahat", 8)
    printed = leading_coefficient(L, 1) == F(1, 3) and leading_coefficient(A, 1) == F(-1, 24)
    bad = []
    for k in range(1, 9):
        s = F(2 ** (2 * k) * (2 ** (2 * k - 1) - 1)) * B[2 * k] / factorial(2 * k)
        a = -B[2 * k] / (2 * factorial(2 * k))
        if leading_coefficient(L, k) != s or leading_coefficient(A, k) != a:
            bad.append(k)
    report(1, printed and not bad, "s_1=1/3, a_1=-1/24 and closed forms k<=8", f"mismatch {bad}" if bad else "")


def test_criterion_2_product_identity():
    bad, count = [], 0
    for g in ("L", "Ahat"):
        seq = genus_sequence(g, 10)
        for i in range(1, 10):
            for j in range(i, 11 - i):
                lam = 2 if i == j else 1
                lhs = leading_coefficient(seq, i) * leading_coefficient(seq, j)
                rhs = leading_coefficient(seq, i + j) + lam * seq[i + j].coefficient((j, i))
                count += 1
                if lhs != rhs:
                    bad.append((g, i, j))
    report(2, not bad and count == 50, "product identities for i<=j, i+j<=10", f"{count} cases" + (f"; {bad}" if bad else ""))


def test_criterion_3_determinants():
    bad = []
    for i in range(1, 9):
        for j in range(1, 9):
            r = lemma24_matrix(i, j)
            expected = -F(1, 4) * (2 ** (2 * i) - 1) * (2 ** (2 * j) - 1)
            L, A = genus_sequence("L", i + j), genus_sequence("Ahat", i + j)
            s = lambda k: leading_coefficient(L, k)  # noqa: E731
            a = lambda k: leading_coefficient(A, k)  # noqa: E731
            full = s(i) * s(j) * a(i + j) - s(i + j) * a(i) * a(j)
            if r.reduced_det != expected or full == 0 or r.full_det != full:
                bad.append((i, j))
    report(3, not bad, "reduced det -(2^2i-1)(2^2j-1)/4, full matrix nonsingular, i,j<=8", str(bad) if bad else "")


def test_criterion_4_zero_signature():
    rng = random.Random(4)
    bad, n = [], 0
    for i in range(1, 7):
        for j in range(i, 7):
            L = genus_sequence("L", i + j)
            A = genus_sequence("Ahat", i + j)
            for _ in range(20):
                v = F(rng.choice([-1, 1]) * rng.randint(1, 99), rng.randint(1, 40))
                rep = ahat_under_zero_signature(i, j, v)
                # brute force: solve sigma = 0 for the top number from L directly
                top = -L[i + j].coefficient((j, i)) * v / L[i + j].coefficient((i + j,))
                M = FormalManifold(i + j, {(i + j,): top, (j, i): v})
                n += 1
                if not (signature(M) == 0 and ahat(M) == rep.ahat != 0 and top == rep.p_top):
                    bad.append((i, j, v))
                # the brute-force genus agrees with the sequence evaluated by hand
                assert ahat(M) == A[i + j].coefficient((i + j,)) * top + A[i + j].coefficient((j, i)) * v
    report(4, not bad, "signature-zero models: sigma=0, Ahat!=0, solver = genus()", f"{n} samples" + (f"; {bad[:3]}" if bad else ""))


def _random_class(rng, cap):
    return [GradedPolynomial.one()] + [
        GradedPolynomial(w, {p: F(rng.randint(-9, 9), rng.randint(1, 9)) for p in partitions(w)})
        for w in range(1, cap + 1)
    ]


def _product(a, b, cap):
    out = []
    for n in range(cap + 1):
        acc = GradedPolynomial(n)
        for k in range(n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return out


def test_criterion_5_multiplicativity():
    rng = random.Random(5)
    bad = []
    for g in ("L", "Ahat"):
        seq = genus_sequence(g, 5)
        for t in range(10):
            a, b = _random_class(rng, 5), _random_class(rng, 5)
            lhs = apply_sequence(seq, _product(a, b, 5), 5)
            rhs = _product(apply_sequence(seq, a, 5), apply_sequence(seq, b, 5), 5)
            if lhs != rhs:
                bad.append((g, t))
    report(5, not bad, "K(ab) = K(a)K(b), 10 random inputs to weight 5, both genera", str(bad) if bad else "")


# transcription of the printed table: r -> (p, q, i, j) in k, degree columns, degree set
PRINTED = {
    2: (lambda k: (4 * k + 1, 4 * k + 1, k + 1, k + 1), (2, 2), {2, 5}),
    3: (lambda k: (4 * k + 1, 4 * k + 2, k + 1, k + 1), (2, 1), {2, 4}),
    4: (lambda k: (4 * k + 2, 4 * k + 2, k + 1, k + 1), (1, 1), {3}),
    5: (lambda k: (4 * k + 2, 4 * k + 3, k + 1, k + 2), (1, 4), {4, 6}),
    6: (lambda k: (4 * k + 3, 4 * k + 3, k + 2, k + 2), (4, 4), {4, 9}),
    7: (lambda k: (4 * k + 3, 4 * k + 4, k + 2, k + 2), (4, 3), {3, 4, 8}),
    8: (lambda k: (4 * k + 4, 4 * k + 4, k + 2, k + 2), (3, 3), {3, 7}),
    9: (lambda k: (4 * k + 4, 4 * k + 5, k + 2, k + 2), (3, 2), {2, 3, 6}),
}


def test_criterion_6_table():
    bad = []
    for k in range(1, 6):
        for r, (params, cols, degs) in PRINTED.items():
            d = 8 * k + r
            row = table_row(d)
            if d == 13:
                if row.from_table or not row.caveats or 1 not in row.params.base_dims:
                    bad.append(d)
                continue
            p, q, i, j = params(k)
            m = {4 * i - p - 1, 4 * j - q - 1, 4 * (i + j) - (p + q) - 1} - {0, 1}
            if row.params.as_tuple() != (p, q, i, j) or row.degree_columns != cols or m != degs:
                bad.append(d)
            if set(bew_degree_set(row.params).m_set) - {0, 1} != degs:
                bad.append(("m", d))
    small = {d: [bp.as_tuple() for bp in search(d)] for d in (6, 7, 8, 9)}
    ok = not bad and small == {6: [(3, 3, 1, 1)], 7: [], 8: [], 9: []}
    report(6, ok, "table rows k=1..5 all residues, d=13 caveat, search(6..9)", f"{bad} {small}" if not ok else "")


RESIDUE_J_SETS = {0: {2, 3, 7}, 1: {2, 3, 6}, 2: {2, 5}, 3: {2, 4}, 4: {3}, 5: {2, 3, 4, 6}, 6: {2, 3, 4, 9}, 7: {2, 3, 4, 8}}


def test_criterion_7_conclusions():
    bad = []
    for k in range(1, 6):
        for r in range(2, 10):
            d = 8 * k + r
            if d == 13:  # excluded from the theorem; handled by the mixture statement
                continue
            js = set(hurewicz_homotopy_set(bew_degree_set(table_row(d).params).m_set).j_set)
            if js != RESIDUE_J_SETS[d % 8]:
                bad.append((d, sorted(js)))
    pairs = [set(bew_degree_set(bp).m_set) for bp in search(42) if bp.p == bp.q == 21 and bp.i == bp.j]
    expected = [{2, 5}, {6, 13}, {10, 21}, {14, 29}, {18, 37}]
    ok = not bad and pairs == expected
    report(7, ok, "eight residue j-sets for k=1..5 (d!=13) and the five d=42 pairs", f"{bad} {pairs}" if not ok else "")


def test_criterion_8_structure():
    bad = []
    for d in range(1, 61):
        found = search(d)
        if not all(closing_check(bp).passes for bp in found):
            bad.append(("closing", d))
        thick = any(min(bp.base_dims) >= 2 for bp in found)
        if 10 <= d <= 60 and d != 13 and not thick:
            bad.append(("thick", d))
        if d in (6, 13) and (thick or not found):
            bad.append(("thin", d))
    report(8, not bad, "closing check d<=60, thick choices for 10<=d<=60 except 13", str(bad) if bad else "")


DOCUMENTED = [
    ["verify-all"],
    ["msequence", "--genus", "L", "--n", "4", "--format", "json"],
    ["bundle", "search", "--dim", "42", "--json"],
    ["bundle", "table", "--dim", "15"],
    ["bundle-search", "--dim", "8"],
    ["bundle-table", "--dim", "13", "--json"],
    ["conclude", "--dim", "15"],
    ["conclude", "--dim", "15", "--format", "json"],
    ["lemma24", "--i", "1", "--j", "1", "--pipj", "896"],
    ["lemma24", "--i", "0", "--j", "1"],
    ["identity", "--genus", "Ahat", "--i", "2", "--j", "3"],
    ["series", "--genus", "L", "--order", "8"],
    ["bernoulli", "--n", "16", "--all"],
    ["manifold", "--data", '{"dim": 8, "numbers": {"p2^1": "128", "p1^2": "896"}}'],
    ["conclude", "--dim", "8"],
]


def _run(argv):
    proc = subprocess.run(
        [sys.executable, "-m", "hirzebruch", *argv], capture_output=True, check=False
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_9_determinism():
    runs = {tuple(argv): (_run(argv), _run(argv)) for argv in DOCUMENTED}
    bad = [argv for argv, (first, second) in runs.items() if first != second]
    ok = not bad and runs[("verify-all",)][0][0] == 0
    report(9, ok, f"{len(DOCUMENTED)} CLI invocations byte-identical across two runs", str(bad) if bad else "")
