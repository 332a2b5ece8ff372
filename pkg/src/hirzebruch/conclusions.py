"""From a nonzero kappa class to nonvanishing (co)homotopy of metric spaces.

Given admissible bundle parameters, the class ``kappa_{Ahat_k}`` lives in
degree ``4k - d`` of the base ``S^a x S^b``. Some differential must kill
it, which forces ``H^m(F(M); Q) != 0`` for an ``m`` in a set determined by
the cohomology of the base. The rational Hurewicz theorem then turns those
degrees into degrees of nonvanishing rational homotopy.

Degrees of the kappa class range over ``r in {2, ..., 4k - d}``, the top
degree of the base; the transposed ``4d - k`` is never used.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .bundles import BundleParams, InvalidParameters, TableRow, search, table_row

__all__ = [
    "DegreeReport",
    "HurewiczReport",
    "ConclusionReport",
    "NoConclusion",
    "cohomology_degrees",
    "bew_degree_set",
    "hurewicz_homotopy_set",
    "theorem_conclusion",
]


class NoConclusion(ValueError):
    """Raised when no homotopy-theoretic statement can be derived."""


def cohomology_degrees(sphere_dims: Iterable[int]) -> set[int]:
    """Degrees of nonzero rational cohomology of a product of spheres."""
    dims = list(sphere_dims)
    if not dims:
        raise ValueError("need at least one sphere")
    if any(x < 1 for x in dims):
        raise ValueError(f"sphere dimensions must be >= 1: {dims}")
    return {sum(c) for r in range(len(dims) + 1) for c in combinations(dims, r)}


@dataclass(frozen=True)
class DegreeReport:
    base_dims: tuple[int, ...]
    kappa_degree: int
    cohomology_degrees_of_base: frozenset[int]
    m_set: frozenset[int]
    pi1_flag: bool

    def to_json(self) -> dict:
        return {
            "base_dims": list(self.base_dims),
            "kappa_degree": self.kappa_degree,
            "cohomology_degrees_of_base": sorted(self.cohomology_degrees_of_base),
            "m_set": sorted(self.m_set),
            "pi1_flag": self.pi1_flag,
        }


def bew_degree_set(params: BundleParams) -> DegreeReport:
    """Possible degrees ``m`` with ``H^m(F(M); Q) != 0``.

    ``m = (4k - d) - c - 1`` for base cohomology degrees ``c`` with
    ``(4k - d) - c >= 2``.
    """
    dims = params.base_dims
    top = params.kappa_degree
    coh = cohomology_degrees(dims)
    m_set = {top - c - 1 for c in coh if top - c >= 2}
    return DegreeReport(tuple(dims), top, frozenset(coh), frozenset(m_set), 1 in dims)


@dataclass(frozen=True)
class HurewiczReport:
    input_degrees: frozenset[int]
    pi1_possible: bool
    j_set: frozenset[int]
    hurewicz_threshold: int
    component_level: bool = False

    def to_json(self) -> dict:
        return {
            "input_degrees": sorted(self.input_degrees),
            "pi1_possible": self.pi1_possible,
            "j_set": sorted(self.j_set),
            "hurewicz_threshold": self.hurewicz_threshold,
            "component_level": self.component_level,
        }


def hurewicz_homotopy_set(degrees: Iterable[int]) -> HurewiczReport:
    """Degrees ``j >= 2`` one of which must carry ``pi_j (x) Q != 0``.

    Degree 1 is diverted to the fundamental group (after passing to the
    universal cover when pi_1 is finite) and degree 0 to path components.
    With ``r`` minimal such that every remaining degree above ``r`` is at
    most ``2r + 1``, either some ``pi_j (x) Q`` with ``2 <= j <= r`` is
    nonzero, or Hurewicz is an isomorphism below ``2r + 1`` and onto in
    degree ``2r + 1``, which lifts a nonzero homology class to homotopy.
    """
    degrees = frozenset(degrees)
    if not degrees:
        raise ValueError("need a nonempty set of degrees")
    if any(m < 0 for m in degrees):
        raise ValueError("degrees must be non-negative")
    higher = sorted(m for m in degrees if m >= 2)
    pi1 = 1 in degrees
    component = 0 in degrees
    if not higher:
        if not (pi1 or component):
            raise NoConclusion(f"degrees {sorted(degrees)} yield no conclusion")
        return HurewiczReport(degrees, pi1, frozenset(), 1, component)
    r = 1
    while any(m > 2 * r + 1 for m in higher if m > r):
        r += 1
    j_set = set(range(2, r + 1)) | {m for m in higher if m > r}
    return HurewiczReport(degrees, pi1, frozenset(j_set), r, component)


def _fmt(js: Iterable[int]) -> str:
    return "{" + ",".join(str(j) for j in sorted(js)) + "}"


COLLAPSE = (
    "the map F(W_1^d) -> R_scal>0(W_1^d) collapses infinitely many "
    "path components to one"
)
PI1_INFINITE = "pi_1(F(M)) is infinite"
H1_NONZERO = (
    "H_1(F(M);Q) != 0 (stronger than pi_1(F(M)) being infinite: the "
    "abelianisation has an element of infinite order)"
)


def _pi_clause(j_set) -> Optional[str]:
    js = sorted(j_set)
    if not js:
        return None
    if len(js) == 1:
        return f"pi_{js[0]}(F(M)) (x) Q != 0"
    return f"pi_j(F(M)) (x) Q != 0 for some j in {_fmt(js)}"


@dataclass(frozen=True)
class ConclusionReport:
    d: int
    row: TableRow
    degrees: DegreeReport
    hurewicz: HurewiczReport
    alternatives: tuple[str, ...]
    kind: str
    diagonal_choices: tuple[tuple[BundleParams, frozenset], ...] = ()
    extra: tuple[tuple[str, BundleParams, tuple[str, ...]], ...] = field(default=())
    side_conditions: tuple[str, ...] = ()

    @property
    def params(self) -> BundleParams:
        return self.row.params

    @property
    def m_set(self) -> frozenset[int]:
        return self.degrees.m_set

    @property
    def j_set(self) -> frozenset[int]:
        return self.hurewicz.j_set

    @property
    def pi1_possible(self) -> bool:
        return self.hurewicz.pi1_possible

    def summary(self) -> str:
        return " or ".join(self.alternatives)

    def to_json(self) -> dict:
        return {
            "dim": self.d,
            "kind": self.kind,
            "params": self.params.to_json(),
            "table": self.row.to_json(),
            "m_set": sorted(self.m_set),
            "pi1_possible": self.pi1_possible,
            "j_set": sorted(self.j_set),
            "hurewicz_threshold": self.hurewicz.hurewicz_threshold,
            "alternatives": list(self.alternatives),
            "side_conditions": list(self.side_conditions),
            "diagonal_choices": [
                {"params": list(bp.as_tuple()), "m_set": sorted(ms)}
                for bp, ms in self.diagonal_choices
            ],
            "additional": [
                {"kind": kind, "params": list(bp.as_tuple()), "alternatives": list(alts)}
                for kind, bp, alts in self.extra
            ],
        }


def _alternatives(params: BundleParams, hw: HurewiczReport) -> tuple[str, tuple[str, ...]]:
    a, b = params.base_dims
    if a == 1 and b == 1:
        return "component-or-H1", (COLLAPSE, H1_NONZERO)
    alts = []
    if 1 in (a, b):
        alts.append(COLLAPSE)
        kind = "mixture"
    else:
        kind = "homotopy"
    alts.append(PI1_INFINITE)
    clause = _pi_clause(hw.j_set)
    if clause:
        alts.append(clause)
    return kind, tuple(alts)


def _side_conditions(params: BundleParams) -> tuple[str, ...]:
    if not params.degree_one_base:
        return ()
    p, q = params.p, params.q
    return (
        f"for a degree-one base sphere the action of pi_0(Diff(S^{p} x S^{q}, D^{p + q})) "
        "on pi_0 of the metric space must factor through a finite group; "
        "this is not verified here and is replaced by the path-component alternative",
    )


def theorem_conclusion(d: int) -> ConclusionReport:
    """Homotopy-theoretic conclusion for Spin manifolds of genus >= 1 in dimension d."""
    if d < 6:
        raise NoConclusion(f"theorem not applicable: d={d} < 6")
    try:
        row = table_row(d)
    except InvalidParameters as exc:
        raise NoConclusion(f"theorem not applicable for d={d}: {exc}") from exc
    degrees = bew_degree_set(row.params)
    hw = hurewicz_homotopy_set(degrees.m_set)
    kind, alts = _alternatives(row.params, hw)

    genus_one = [bp for bp in search(d) if bp.is_genus_one]
    diagonal = tuple(
        (bp, bew_degree_set(bp).m_set) for bp in genus_one if bp.i == bp.j and bp.p <= bp.q
    )
    extra = []
    if kind == "homotopy":
        # degree-one choices add statements of their own (d = 6, 5 mod 8);
        # keep the sharpest one of each kind
        best: dict[str, tuple] = {}
        for bp in genus_one:
            if not bp.degree_one_base:
                continue
            sub_hw = hurewicz_homotopy_set(bew_degree_set(bp).m_set)
            sub_kind, sub_alts = _alternatives(bp, sub_hw)
            key = (max(sub_hw.j_set, default=0), len(sub_hw.j_set), bp.as_tuple())
            if sub_kind not in best or key < best[sub_kind][0]:
                best[sub_kind] = (key, bp, sub_alts)
        for sub_kind in sorted(best):
            _, bp, sub_alts = best[sub_kind]
            extra.append((sub_kind, bp, sub_alts))
    return ConclusionReport(
        d=d,
        row=row,
        degrees=degrees,
        hurewicz=hw,
        alternatives=alts,
        kind=kind,
        diagonal_choices=diagonal,
        extra=tuple(extra),
        side_conditions=_side_conditions(row.params),
    )
