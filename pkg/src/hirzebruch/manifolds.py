"""Formal manifolds, genus evaluation and the two-number non-vanishing test.

A :class:`FormalManifold` keeps only what a genus can see: its dimension
and its rational Pontryagin numbers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .genera import (
    MultiplicativeSequence,
    genus_sequence,
    leading_coefficient,
    mixed_coefficient,
)
from .numeric import Genus, parse_rational
from .symfunc import Partition

__all__ = [
    "FormalManifold",
    "genus",
    "signature",
    "ahat",
    "Lemma24Report",
    "lemma24_matrix",
    "ZeroSignatureReport",
    "ahat_under_zero_signature",
]


def _det2(m) -> Fraction:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


@dataclass(frozen=True)
class FormalManifold:
    """A closed 4n-manifold seen through its Pontryagin numbers.

    Absent partitions have Pontryagin number zero.
    """

    quarter_dim: int
    pontryagin_numbers: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.quarter_dim < 0:
            raise ValueError("dimension must be non-negative")
        clean = {}
        for key, value in self.pontryagin_numbers.items():
            part = key if isinstance(key, Partition) else Partition(key)
            if part.weight != self.quarter_dim:
                raise ValueError(
                    f"Pontryagin number {part.label()} has weight {part.weight}, "
                    f"but the manifold has dimension {self.dim}"
                )
            clean[part] = Fraction(value)
        object.__setattr__(self, "pontryagin_numbers", clean)

    @property
    def dim(self) -> int:
        return 4 * self.quarter_dim

    def number(self, part) -> Fraction:
        return self.pontryagin_numbers.get(Partition(part), Fraction(0))

    def __add__(self, other: "FormalManifold") -> "FormalManifold":
        """Disjoint union: characteristic numbers add."""
        if self.quarter_dim != other.quarter_dim:
            raise ValueError("disjoint union needs equal dimensions")
        merged = dict(self.pontryagin_numbers)
        for k, v in other.pontryagin_numbers.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return FormalManifold(self.quarter_dim, merged)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "numbers": {k.label(): str(v) for k, v in sorted(
                self.pontryagin_numbers.items(), key=lambda kv: tuple(-x for x in kv[0])
            )},
        }

    @classmethod
    def from_json(cls, data: "Mapping | str") -> "FormalManifold":
        if isinstance(data, str):
            data = json.loads(data)
        dim = int(data["dim"])
        if dim % 4:
            raise ValueError(f"dimension {dim} is not divisible by 4")
        numbers = {
            Partition.parse(label): parse_rational(str(value))
            for label, value in data.get("numbers", {}).items()
        }
        return cls(dim // 4, numbers)


def genus(M: FormalManifold, seq: MultiplicativeSequence) -> Fraction:
    """Pair ``K_n`` with the Pontryagin numbers of ``M``."""
    n = M.quarter_dim
    if n == 0:
        return M.number(())
    if n > seq.n_max:
        raise ValueError(f"sequence only computed to weight {seq.n_max}, manifold needs {n}")
    poly = seq[n]
    return sum((poly.coefficient(part) * v for part, v in M.pontryagin_numbers.items()), Fraction(0))


def signature(M: FormalManifold) -> Fraction:
    return genus(M, genus_sequence(Genus.L, max(M.quarter_dim, 1)))


def ahat(M: FormalManifold) -> Fraction:
    return genus(M, genus_sequence(Genus.AHAT, max(M.quarter_dim, 1)))


@dataclass(frozen=True)
class Lemma24Report:
    i: int
    j: int
    full_matrix: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    full_det: Fraction
    reduced_matrix: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    reduced_det: Fraction

    @property
    def nonsingular(self) -> bool:
        return self.full_det != 0

    @property
    def expected_reduced_det(self) -> Fraction:
        return Fraction(-(2 ** (2 * self.i) - 1) * (2 ** (2 * self.j) - 1), 4)

    def to_json(self) -> dict:
        def mat(m):
            return [[str(x) for x in row] for row in m]

        return {
            "i": self.i,
            "j": self.j,
            "full_matrix": mat(self.full_matrix),
            "full_det": str(self.full_det),
            "reduced_matrix": mat(self.reduced_matrix),
            "reduced_det": str(self.reduced_det),
            "nonsingular": self.nonsingular,
        }


def lemma24_matrix(i: int, j: int) -> Lemma24Report:
    """Leading-coefficient matrix of the L- and Ahat-sequences at (i, j).

    The full matrix is ``[[s_i s_j, s_{i+j}], [a_i a_j, a_{i+j}]]`` built
    from the computed sequences; the reduced matrix is the same matrix with
    the Bernoulli factors scaled out.
    """
    if i < 1 or j < 1:
        raise ValueError("i and j must be >= 1")
    n = max(i + j, 2)
    L = genus_sequence(Genus.L, n)
    A = genus_sequence(Genus.AHAT, n)
    s = lambda k: leading_coefficient(L, k)  # noqa: E731
    a = lambda k: leading_coefficient(A, k)  # noqa: E731
    full = ((s(i) * s(j), s(i + j)), (a(i) * a(j), a(i + j)))
    reduced = (
        (
            Fraction((2 ** (2 * i - 1) - 1) * (2 ** (2 * j - 1) - 1)),
            Fraction(2 ** (2 * (i + j) - 1) - 1),
        ),
        (Fraction(1, 4), Fraction(-1, 2)),
    )
    return Lemma24Report(i, j, full, _det2(full), reduced, _det2(reduced))


@dataclass(frozen=True)
class ZeroSignatureReport:
    i: int
    j: int
    pipj: Fraction
    p_top: Fraction
    ahat: Fraction

    @property
    def degenerate(self) -> bool:
        """True when ``p_i p_j = 0`` and the non-vanishing conclusion is void."""
        return self.pipj == 0

    def manifold(self) -> FormalManifold:
        return FormalManifold(
            self.i + self.j, {(self.i + self.j,): self.p_top, (self.i, self.j): self.pipj}
        )

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "pipj": str(self.pipj),
            "p_top": str(self.p_top),
            "ahat": str(self.ahat),
            "degenerate": self.degenerate,
        }


def ahat_under_zero_signature(i: int, j: int, pipj) -> ZeroSignatureReport:
    """Solve ``signature = 0`` for ``p_{i+j}`` and return the resulting Ahat-genus.

    Only ``p_{i+j}`` and ``p_i p_j`` are allowed to be nonzero.
    """
    if i < 1 or j < 1:
        raise ValueError("i and j must be >= 1")
    pipj = Fraction(pipj)
    n = i + j
    L = genus_sequence(Genus.L, n)
    A = genus_sequence(Genus.AHAT, n)
    s_top = leading_coefficient(L, n)
    if s_top == 0:
        raise ZeroDivisionError(f"L-sequence has vanishing p_{n} coefficient")
    p_top = -mixed_coefficient(L, i, j) * pipj / s_top
    value = leading_coefficient(A, n) * p_top + mixed_coefficient(A, i, j) * pipj
    return ZeroSignatureReport(i, j, pipj, p_top, value)
