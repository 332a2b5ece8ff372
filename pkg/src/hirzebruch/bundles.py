"""Parameter logic for ``S^p x S^q`` bundles over ``S^a x S^b``.

For positive integers with ``2j < p < 4i`` and ``2i < q < 4j`` there is a
bundle ``E -> S^(4i-p) x S^(4j-q)`` with fiber ``S^p x S^q`` whose total
space has Pontryagin numbers supported on ``p_{i+j}`` and ``p_i p_j``.
This module validates parameters, checks the dimension bounds needed to
close the fiber, models ``E`` as a :class:`FormalManifold` and enumerates
all admissible parameters of a given fiber dimension.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .manifolds import FormalManifold, ahat, ahat_under_zero_signature, signature

__all__ = [
    "InvalidParameters",
    "BundleParams",
    "validate",
    "ClosingReport",
    "closing_check",
    "TotalSpaceModel",
    "total_space_model",
    "kappa_pairing",
    "search",
    "TableRow",
    "table_row",
    "MAX_SEARCH_DIM",
    "MILNOR_ASSUMPTION",
]

MAX_SEARCH_DIM = 1000

MILNOR_ASSUMPTION = (
    "classes alpha in pi_4i(BSO(q)) and beta in pi_4j(BSO(p)) with "
    "p_i(alpha) != 0 and p_j(beta) != 0 exist (Milnor)"
)


class InvalidParameters(ValueError):
    """Raised when (p, q, i, j) violate the admissibility inequalities."""


@dataclass(frozen=True, order=True)
class BundleParams:
    p: int
    q: int
    i: int
    j: int

    def __post_init__(self):
        p, q, i, j = self.p, self.q, self.i, self.j
        for name, v in (("p", p), ("q", q), ("i", i), ("j", j)):
            if not isinstance(v, int) or v < 1:
                raise InvalidParameters(f"{name} must be a positive integer, got {v!r}")
        checks = (
            (2 * j < p, f"2j < p fails: {2 * j} < {p} is false"),
            (p < 4 * i, f"p < 4i fails: {p} < {4 * i} is false"),
            (2 * i < q, f"2i < q fails: {2 * i} < {q} is false"),
            (q < 4 * j, f"q < 4j fails: {q} < {4 * j} is false"),
        )
        for ok, msg in checks:
            if not ok:
                raise InvalidParameters(f"invalid (p,q,i,j)=({p},{q},{i},{j}): {msg}")

    @property
    def fiber_dim(self) -> int:
        return self.p + self.q

    @property
    def base_dims(self) -> tuple[int, int]:
        return (4 * self.i - self.p, 4 * self.j - self.q)

    @property
    def base_dim(self) -> int:
        return sum(self.base_dims)

    @property
    def k(self) -> int:
        return self.i + self.j

    @property
    def total_dim(self) -> int:
        return 4 * self.k

    @property
    def kappa_degree(self) -> int:
        return 4 * self.k - self.fiber_dim

    @property
    def degree_one_base(self) -> bool:
        return 1 in self.base_dims

    @property
    def spin_fiber_ok(self) -> bool:
        # S^p x S^q is 2-connected once p, q >= 3, which 2j < p and 2i < q force
        return self.p >= 3 and self.q >= 3

    @property
    def is_genus_one(self) -> bool:
        """Whether the fiber is ``W_1^d``: ``S^n x S^n`` or ``S^n x S^(n+1)``."""
        return abs(self.p - self.q) <= 1

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.i, self.j)

    def to_json(self) -> dict:
        a, b = self.base_dims
        return {
            "p": self.p,
            "q": self.q,
            "i": self.i,
            "j": self.j,
            "fiber_dim": self.fiber_dim,
            "base_dims": [a, b],
            "total_dim": self.total_dim,
            "k": self.k,
            "kappa_degree": self.kappa_degree,
            "degree_one_base": self.degree_one_base,
            "spin_fiber_ok": self.spin_fiber_ok,
        }


def validate(p: int, q: int, i: int, j: int) -> BundleParams:
    return BundleParams(p, q, i, j)


@dataclass(frozen=True)
class ClosingReport:
    n: int
    parity: str
    bound: int
    base_dim: int

    @property
    def passes(self) -> bool:
        return self.base_dim <= self.bound

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parity": self.parity,
            "bound": self.bound,
            "base_dim": self.base_dim,
            "passes": self.passes,
        }


def closing_check(params: BundleParams) -> ClosingReport:
    """Dimension test for capping the boundary ``S^n``-bundle, ``n = p + q - 1``.

    Even ``n`` needs ``dim B <= n - 5``, odd ``n`` needs ``dim B <= n - 3``.
    """
    n = params.fiber_dim - 1
    even = n % 2 == 0
    return ClosingReport(n, "even" if even else "odd", n - 5 if even else n - 3, params.base_dim)


@dataclass(frozen=True)
class TotalSpaceModel:
    params: BundleParams
    manifold: FormalManifold
    ahat: Fraction
    signature: Fraction
    label: Optional[str] = None
    assumptions: tuple[str, ...] = field(default=(MILNOR_ASSUMPTION,))

    @property
    def psc_obstructed(self) -> bool:
        # Spin total space with nonzero Ahat carries no psc metric
        return self.params.spin_fiber_ok and self.ahat != 0

    def to_json(self) -> dict:
        out = {
            "params": self.params.to_json(),
            "manifold": self.manifold.to_json(),
            "ahat": str(self.ahat),
            "signature": str(self.signature),
            "psc_obstructed": self.psc_obstructed,
            "conclusion": "no psc metric" if self.psc_obstructed else "inconclusive",
            "assumptions": list(self.assumptions),
        }
        if self.label:
            out["fiber_label"] = self.label
        return out


def total_space_model(params: BundleParams, pipj=1, label: str | None = None) -> TotalSpaceModel:
    """Characteristic-number model of the total space ``E``.

    ``pipj`` stands in for the (nonzero, uncomputed) number ``p_i p_j[E]``;
    ``p_{i+j}[E]`` is then forced by the vanishing of the signature.
    ``label`` records an optional connected summand of the fiber, which
    does not change the model.
    """
    pipj = Fraction(pipj)
    if pipj == 0:
        raise ValueError("p_i p_j[E] is nonzero for these bundles; pipj=0 is not a model of E")
    report = ahat_under_zero_signature(params.i, params.j, pipj)
    M = report.manifold()
    sig = signature(M)
    value = ahat(M)
    if sig != 0 or value != report.ahat:
        raise AssertionError("genus evaluation disagrees with the zero-signature solver")
    return TotalSpaceModel(params, M, value, sig, label)


def kappa_pairing(params: BundleParams, model: TotalSpaceModel) -> Fraction:
    """``<kappa_{Ahat_k}(pi), [S^a x S^b]>`` for ``k = i + j``.

    Fiber integration followed by pairing with the base equals pairing
    ``Ahat(T_pi E)`` with ``[E]``; the base contributes ``Ahat = 1`` as a
    product of spheres, so the value is ``Ahat(E)``. The class sits in
    degree ``params.kappa_degree``.
    """
    if model.params != params:
        raise ValueError("model was built for different parameters")
    return model.ahat


def _search_p(d: int, p: int) -> list[BundleParams]:
    q = d - p
    out = []
    # p < 4i < 2q  and  q < 4j < 2p
    for i in range(p // 4 + 1, (q + 1) // 2):
        for j in range(q // 4 + 1, (p + 1) // 2):
            if 2 * j < p < 4 * i and 2 * i < q < 4 * j:
                out.append(BundleParams(p, q, i, j))
    return out


def search(d: int, workers: int | None = None) -> list[BundleParams]:
    """All admissible ``(p, q, i, j)`` with ``p + q = d``, ordered by p, i, j."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > MAX_SEARCH_DIM:
        raise ValueError(f"d={d} exceeds the search cap {MAX_SEARCH_DIM}")
    ps = range(1, d)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            chunks = list(pool.map(lambda p: _search_p(d, p), ps))
    else:
        chunks = [_search_p(d, p) for p in ps]
    return [bp for chunk in chunks for bp in chunk]


# residue r of d = 8k + r  ->  (p, q, i, j) as affine functions (c0 + c1*k)
_TABLE = {
    2: ((1, 4), (1, 4), (1, 1), (1, 1)),
    3: ((1, 4), (2, 4), (1, 1), (1, 1)),
    4: ((2, 4), (2, 4), (1, 1), (1, 1)),
    5: ((2, 4), (3, 4), (1, 1), (2, 1)),
    6: ((3, 4), (3, 4), (2, 1), (2, 1)),
    7: ((3, 4), (4, 4), (2, 1), (2, 1)),
    8: ((4, 4), (4, 4), (2, 1), (2, 1)),
    9: ((4, 4), (5, 4), (2, 1), (2, 1)),
}


def _split(d: int) -> tuple[int, int]:
    k = (d - 2) // 8
    return k, d - 8 * k


@dataclass(frozen=True)
class TableRow:
    d: int
    k: int
    residue: int
    params: BundleParams
    from_table: bool
    rejected: Optional[str] = None

    @property
    def degree_columns(self) -> tuple[int, int]:
        """``(4i - p - 1, 4j - q - 1)``."""
        a, b = self.params.base_dims
        return (a - 1, b - 1)

    @property
    def caveats(self) -> list[str]:
        out = []
        if self.rejected:
            out.append(f"table row for d={self.d} is invalid ({self.rejected}); "
                       "first admissible choice from the search used instead")
        a, b = self.params.base_dims
        if 1 in (a, b):
            out.append(
                "a base sphere has dimension 1 (4i-p-1=0 or 4j-q-1=0): the "
                "pi_1-action hypothesis is not automatic, so the conclusion "
                "acquires a path-component alternative"
            )
        return out

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "row": f"8k+{self.residue}",
            "table_k": self.k,
            "params": self.params.to_json(),
            "degree_columns": list(self.degree_columns),
            "from_table": self.from_table,
            "degree_one_base": self.params.degree_one_base,
            "caveats": self.caveats,
        }


def table_row(d: int) -> TableRow:
    """The canonical parameter choice for fiber dimension ``d``.

    Uses the residue table for ``d = 8k + r`` (r in 2..9); when that row
    violates the inequalities (small k) the first search result with a
    ``W_1^d`` fiber is used. Raises :class:`InvalidParameters` when there
    is none.
    """
    if d < 6:
        raise InvalidParameters(f"no admissible parameters for d={d} < 6")
    k, r = _split(d)
    p, q, i, j = (c0 + c1 * k for c0, c1 in _TABLE[r])
    try:
        return TableRow(d, k, r, BundleParams(p, q, i, j), True)
    except InvalidParameters as exc:
        reason = str(exc).split(": ", 1)[-1]
    candidates = [bp for bp in search(d) if bp.is_genus_one]
    if not candidates:
        raise InvalidParameters(
            f"table row for d={d} is invalid ({reason}) and no admissible "
            "parameters exist for this dimension"
        )
    return TableRow(d, k, r, candidates[0], False, reason)
