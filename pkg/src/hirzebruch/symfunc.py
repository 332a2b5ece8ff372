"""Partitions and graded polynomials in Pontryagin classes.

The class ``p_k`` is modelled as the k-th elementary symmetric polynomial in
the squares of formal Chern roots, so a monomial ``p_{l1} ... p_{lr}`` is
indexed by the partition ``(l1, ..., lr)``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Partition",
    "GradedPolynomial",
    "partitions",
    "partition_count",
    "power_sum_in_elementary",
    "graded_multiply",
    "graded_exp",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> Partition([1, 2, 1])
    Partition(2, 1, 1)
    >>> Partition.parse("p2^1.p1^2").weight
    4
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def multiplicities(self) -> list[tuple[int, int]]:
        return [(part, len(list(grp))) for part, grp in groupby(self)]

    def label(self) -> str:
        """Text form ``p2^1.p1^2``; the empty partition is ``1``."""
        if not self:
            return "1"
        return ".".join(f"p{part}^{mult}" for part, mult in self.multiplicities())

    _LABEL_RE = re.compile(r"p(\d+)(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        parts: list[int] = []
        for factor in text.split("."):
            m = cls._LABEL_RE.match(factor.strip())
            if not m:
                raise ValueError(f"bad partition label {text!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(parts)

    def __add__(self, other):
        # concatenation keeps the ordering invariant
        return Partition(tuple(self) + tuple(other))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _descending(n, n))


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_partitions(n))


def partition_count(n: int) -> int:
    return len(_partitions(n))


def _sort_key(part: Partition) -> tuple:
    # reverse lexicographic: (3) before (2, 1) before (1, 1, 1)
    return tuple(-x for x in part)


class GradedPolynomial:
    """Homogeneous polynomial of a fixed weight in ``p_1, p_2, ...``.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_weight", "_terms")

    def __init__(self, weight: int, terms: Mapping[Iterable[int], object] | None = None):
        if weight < 0:
            raise ValueError("weight must be >= 0")
        clean: dict[Partition, Fraction] = {}
        for key, coeff in (terms or {}).items():
            part = key if isinstance(key, Partition) else Partition(key)
            if part.weight != weight:
                raise ValueError(
                    f"partition {part.label()} has weight {part.weight}, expected {weight}"
                )
            c = Fraction(coeff)
            if c:
                clean[part] = clean.get(part, Fraction(0)) + c
        self._weight = weight
        self._terms = {k: clean[k] for k in sorted(clean, key=_sort_key) if clean[k]}

    @classmethod
    def _raw(cls, weight: int, terms: dict[Partition, Fraction]) -> "GradedPolynomial":
        obj = cls.__new__(cls)
        obj._weight = weight
        obj._terms = {k: terms[k] for k in sorted(terms, key=_sort_key) if terms[k]}
        return obj

    @classmethod
    def one(cls) -> "GradedPolynomial":
        return cls(0, {(): 1})

    @classmethod
    def zero(cls, weight: int) -> "GradedPolynomial":
        return cls(weight)

    @classmethod
    def generator(cls, k: int, coeff=1) -> "GradedPolynomial":
        """``coeff * p_k``."""
        return cls(k, {(k,): coeff})

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return dict(self._terms)

    def coefficient(self, part: Iterable[int]) -> Fraction:
        return self._terms.get(Partition(part), Fraction(0))

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self._weight == other._weight and self._terms == other._terms

    def __hash__(self):
        if not self._terms:
            return hash(())
        return hash((self._weight, tuple(self._terms.items())))

    def _check_weight(self, other: "GradedPolynomial") -> None:
        if self._weight != other._weight:
            raise ValueError(
                f"cannot add polynomials of weights {self._weight} and {other._weight}"
            )

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        if not other._terms:
            return self
        if not self._terms:
            return other
        self._check_weight(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return GradedPolynomial._raw(self._weight, out)

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial._raw(self._weight, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def scale(self, c) -> "GradedPolynomial":
        c = Fraction(c)
        if not c:
            return GradedPolynomial(self._weight)
        return GradedPolynomial._raw(self._weight, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            return graded_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "GradedPolynomial":
        out = GradedPolynomial.one()
        for _ in range(n):
            out = graded_multiply(out, self)
        return out

    def evaluate(self, values: Sequence) -> object:
        """Substitute ``p_k -> values[k - 1]`` (missing entries count as 0).

        Values may be rationals or anything supporting ``*`` and ``+``.
        """
        total = None
        for part, coeff in self._terms.items():
            term = coeff
            for k in part:
                v = values[k - 1] if k <= len(values) else 0
                term = term * v
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def to_json(self) -> list[dict[str, str]]:
        return [
            {"partition": part.label(), "coefficient": str(c)}
            for part, c in self._terms.items()
        ]

    @classmethod
    def from_json(cls, weight: int, rows: Sequence[Mapping[str, str]]) -> "GradedPolynomial":
        return cls(
            weight,
            {Partition.parse(r["partition"]): Fraction(r["coefficient"]) for r in rows},
        )

    def __repr__(self) -> str:
        return f"GradedPolynomial(weight={self._weight}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for part, c in self._terms.items():
            mono = "*".join(
                f"p{k}" if m == 1 else f"p{k}^{m}" for k, m in part.multiplicities()
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")


def graded_multiply(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    out: dict[Partition, Fraction] = {}
    for pa, ca in a.items():
        for pb, cb in b.items():
            key = pa + pb
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return GradedPolynomial._raw(a.weight + b.weight, out)


@lru_cache(maxsize=None)
def _power_sum(m: int) -> GradedPolynomial:
    # Newton: pw_m = sum_{i<m} (-1)^(i-1) e_i pw_{m-i} + (-1)^(m-1) m e_m
    acc = GradedPolynomial.generator(m, (-1) ** (m - 1) * m)
    for i in range(1, m):
        term = graded_multiply(GradedPolynomial.generator(i), _power_sum(m - i))
        acc = acc + (term if i % 2 else -term)
    return acc


def power_sum_in_elementary(m: int, cap: int | None = None) -> GradedPolynomial:
    """The m-th power sum of the roots written in ``e_1 .. e_m = p_1 .. p_m``.

    ``cap`` is the highest elementary polynomial available; it must be at
    least ``m``.
    """
    if m < 1:
        raise ValueError("power sums are indexed from 1")
    if cap is not None and m > cap:
        raise ValueError(f"m={m} exceeds cap={cap}")
    return _power_sum(m)


def graded_exp(components: Sequence[GradedPolynomial | None], cap: int) -> list[GradedPolynomial]:
    """Homogeneous parts ``E_0 .. E_cap`` of ``exp(a)``.

    ``components[k]`` is the weight-k part of ``a``; ``None`` or a missing
    entry is zero. The weight-0 part must vanish.
    """
    comps: list[GradedPolynomial] = []
    for k in range(cap + 1):
        c = components[k] if k < len(components) else None
        if c is None:
            c = GradedPolynomial(k)
        if c.weight != k and not c.is_zero():
            raise ValueError(f"component {k} has weight {c.weight}")
        comps.append(c if c.weight == k else GradedPolynomial(k))
    if not comps[0].is_zero():
        raise ValueError("graded_exp needs a vanishing weight-0 component")
    # weight grading is a derivation: n E_n = sum_k k a_k E_{n-k}
    out = [GradedPolynomial.one()]
    for n in range(1, cap + 1):
        acc = GradedPolynomial(n)
        for k in range(1, n + 1):
            if comps[k]:
                acc = acc + graded_multiply(comps[k], out[n - k]).scale(k)
        out.append(acc.scale(Fraction(1, n)))
    return out
