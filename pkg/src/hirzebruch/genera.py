"""Multiplicative sequences and their characteristic coefficients.

A series ``Q(z)`` with ``Q(0) = 1`` determines polynomials ``K_n`` in the
Pontryagin classes through ``K(p) = prod_l Q(x_l^2)``. The construction
used here stays inside the rational graded ring: take ``log Q``, replace
each ``z^m`` by the m-th power sum of the ``x_l^2`` written in the
``p_k`` (Newton), and exponentiate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .numeric import Genus, TruncatedSeries, char_series, series_log, unsigned_bernoulli
from .symfunc import GradedPolynomial, graded_exp, graded_multiply, power_sum_in_elementary

__all__ = [
    "DEFAULT_N_MAX",
    "MultiplicativeSequence",
    "ProductIdentity",
    "multiplicative_sequence",
    "genus_sequence",
    "leading_coefficient",
    "mixed_coefficient",
    "closed_form_leading",
    "verify_product_identity",
    "apply_sequence",
]

DEFAULT_N_MAX = 10


@dataclass(frozen=True)
class MultiplicativeSequence:
    source_series: TruncatedSeries
    polynomials: tuple[GradedPolynomial, ...]
    genus: Genus | None = None

    @property
    def n_max(self) -> int:
        return len(self.polynomials)

    def __getitem__(self, n: int) -> GradedPolynomial:
        """``K_n``; ``K_0`` is the constant 1."""
        if n == 0:
            return GradedPolynomial.one()
        if not 1 <= n <= self.n_max:
            raise IndexError(f"K_{n} not computed (n_max={self.n_max})")
        return self.polynomials[n - 1]

    def to_json(self) -> dict[str, list[dict[str, str]]]:
        return {str(n): self[n].to_json() for n in range(1, self.n_max + 1)}


def multiplicative_sequence(
    Q: TruncatedSeries, n_max: int = DEFAULT_N_MAX, genus: Genus | None = None
) -> MultiplicativeSequence:
    if Q[0] != 1:
        raise ValueError(f"characteristic series must satisfy Q(0) = 1, got {Q[0]}")
    if Q.order < n_max:
        raise ValueError(f"series of order {Q.order} cannot determine K_{n_max}")
    logq = series_log(Q)
    comps: list[GradedPolynomial | None] = [None]
    for m in range(1, n_max + 1):
        c = logq[m]
        comps.append(power_sum_in_elementary(m, n_max).scale(c) if c else None)
    parts = graded_exp(comps, n_max)
    return MultiplicativeSequence(Q, tuple(parts[1:]), genus)


@lru_cache(maxsize=None)
def _cached_sequence(genus: Genus, n_max: int) -> MultiplicativeSequence:
    return multiplicative_sequence(char_series(genus, n_max), n_max, genus)


def genus_sequence(genus: "Genus | str", n_max: int = DEFAULT_N_MAX) -> MultiplicativeSequence:
    """The L- or Ahat-sequence up to weight ``n_max`` (memoised)."""
    return _cached_sequence(Genus.parse(genus), n_max)


def leading_coefficient(seq: MultiplicativeSequence, k: int) -> Fraction:
    """Coefficient of ``p_k`` in ``K_k``."""
    if not 1 <= k <= seq.n_max:
        raise ValueError(f"k={k} outside 1..{seq.n_max}")
    return seq[k].coefficient((k,))


def mixed_coefficient(seq: MultiplicativeSequence, i: int, j: int) -> Fraction:
    """Coefficient of ``p_i p_j`` in ``K_{i+j}`` (of ``p_i^2`` when i == j)."""
    if i < 1 or j < 1 or i + j > seq.n_max:
        raise ValueError(f"(i, j)=({i}, {j}) outside the computed range")
    return seq[i + j].coefficient((i, j))


def closed_form_leading(genus: "Genus | str", k: int) -> Fraction:
    """Leading coefficient from Hirzebruch's Bernoulli-number formulas.

    Uses the unsigned Bernoulli numbers ``|B_2k|``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    genus = Genus.parse(genus)
    b = unsigned_bernoulli(2 * k)
    fact = Fraction(_factorial(2 * k))
    if genus is Genus.L:
        return 2 ** (2 * k) * (2 ** (2 * k - 1) - 1) * b / fact
    return -b / (2 * fact)


def _factorial(n: int) -> int:
    out = 1
    for x in range(2, n + 1):
        out *= x
    return out


@dataclass(frozen=True)
class ProductIdentity:
    i: int
    j: int
    lhs: Fraction
    rhs: Fraction
    lam: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "lambda": self.lam,
            "holds": self.holds,
        }


def verify_product_identity(seq: MultiplicativeSequence, i: int, j: int) -> ProductIdentity:
    """Check ``c_i c_j = c_{i+j} + lambda * c_{i,j}`` with lambda = 2 iff i == j."""
    lam = 2 if i == j else 1
    lhs = leading_coefficient(seq, i) * leading_coefficient(seq, j)
    rhs = leading_coefficient(seq, i + j) + lam * mixed_coefficient(seq, i, j)
    return ProductIdentity(i, j, lhs, rhs, lam)


def apply_sequence(
    seq: MultiplicativeSequence, total_class: Sequence[GradedPolynomial], cap: int | None = None
) -> list[GradedPolynomial]:
    """Evaluate ``K`` on a total class ``1 + a_1 + a_2 + ...``.

    ``total_class[k]`` is the weight-k part ``a_k`` (index 0 is ignored) of
    an element of some graded ring of ``GradedPolynomial`` values. Returns
    the homogeneous parts of ``K(a)`` up to weight ``cap``.
    """
    cap = seq.n_max if cap is None else cap
    if cap > seq.n_max:
        raise ValueError("cap exceeds the computed sequence")
    values = [
        total_class[k] if k < len(total_class) else GradedPolynomial(k)
        for k in range(1, cap + 1)
    ]
    out = [GradedPolynomial.one()]
    for n in range(1, cap + 1):
        acc = GradedPolynomial(n)
        for part, coeff in seq[n].items():
            term = GradedPolynomial.one().scale(coeff)
            for k in part:
                term = graded_multiply(term, values[k - 1])
            acc = acc + term
        out.append(acc)
    return out
