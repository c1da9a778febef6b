"""Second Zagreb index bounds for connected graphs with pendant vertices.

For a graph with degree sequence ``d_1 >= ... >= d_n`` the edge-sum vector
``x_e = d_u + d_v`` has fixed total ``sum(d_i^2)``, and

    S(G) = (||x||^2 - sum(d_i^3)) / 2.

When there are ``h >= 1`` pendant vertices and ``1 + d_1 <= d_{n-h} + d_{n-h-1}``,
the ``m - h`` non-pendant edges have sums in ``[d_{n-h} + d_{n-h-1}, d_1 + d_2]``,
the ``h`` pendant edges in ``[1 + d_{n-h}, 1 + d_1]``, and the two intervals
are stacked in order. ``||x||^2`` is Schur-convex, so the extremal vectors of
that two-block set bound ``S(G)`` from both sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .errors import ConsistencyError, OutOfClassError, PreconditionError
from .graphs import DegreeSequence
from .majorization import (
    ExtremalTrace,
    OrderedVector,
    TwoBlockSet,
    integerize_minimal,
    maximal_element_two_block,
    minimal_element_two_block,
)

CLASS_CONDITION = "1 + d_1 <= d_{n-h} + d_{n-h-1}"


@dataclass(frozen=True)
class PendantClassSpec:
    sequence: DegreeSequence
    h: int
    m_edges: int
    a: int
    m1: int
    m2: int
    M1: int
    M2: int
    cube_sum: int

    @property
    def n(self) -> int:
        return self.sequence.n

    @property
    def block_set(self) -> TwoBlockSet:
        """Edge-sum constraint set: length ``m_edges``, first block ``m_edges - h``."""
        return TwoBlockSet(
            n=self.m_edges, h=self.m_edges - self.h,
            m1=self.m1, m2=self.m2, M1=self.M1, M2=self.M2, total=self.a,
        )

    def zagreb_from_vector(self, x: OrderedVector) -> int:
        twice = x.sum_of_squares() - self.cube_sum
        if isinstance(twice, float):
            return twice / 2
        if twice % 2:
            raise ConsistencyError(f"odd numerator {twice} for an integer edge-sum vector")
        return twice // 2


@dataclass(frozen=True)
class BoundsReport:
    """Lower and upper bound on ``S(G)``, with the vectors that produced them.

    Reports built from closed forms may leave ``traces`` empty.
    """

    lower: int
    upper: int
    lower_vector: Optional[OrderedVector] = None
    upper_vector: Optional[OrderedVector] = None
    traces: Tuple[ExtremalTrace, ...] = ()
    comparison: Optional[int] = None
    spec: Optional[PendantClassSpec] = None
    family: Optional[str] = None

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def as_dict(self) -> Dict:
        out: Dict = {}
        if self.spec is not None:
            sp = self.spec
            out.update(n=sp.n, m=sp.m_edges, a=sp.a, h=sp.h,
                       m1=sp.m1, m2=sp.m2, M1=sp.M1, M2=sp.M2)
        if self.family is not None:
            out["family"] = self.family
        out.update(
            lower=self.lower,
            upper=self.upper,
            lower_vector=None if self.lower_vector is None else self.lower_vector.tolist(),
            upper_vector=None if self.upper_vector is None else self.upper_vector.tolist(),
            das_gutman=self.comparison,
            branches=[t.as_dict() for t in self.traces],
        )
        return out


def build_constraint_set(seq: DegreeSequence) -> PendantClassSpec:
    """Constraint data for the edge-sum vector of any graph with degree sequence ``seq``.

    Raises :class:`OutOfClassError` when the sequence has no pendant vertex, fewer
    than two non-pendant vertices, fewer than four vertices, or breaks
    ``1 + d_1 <= d_{n-h} + d_{n-h-1}``.
    """
    d = seq.degrees
    n = len(d)
    h = seq.pendant_count
    if h == 0:
        raise OutOfClassError(
            "no pendant vertices (h = 0); the two-block bound does not apply, "
            "use extremal_single_interval on [2*d_n, 2*d_1] instead"
        )
    if n < 4:
        raise OutOfClassError(f"the pendant class needs n >= 4, got n = {n}")
    core = n - h
    if core < 2:
        raise OutOfClassError(
            f"{CLASS_CONDITION} needs at least two non-pendant vertices (n - h >= 2); got n - h = {core}"
        )
    d1, d2 = d[0], d[1]
    lo_a, lo_b = d[core - 1], d[core - 2]  # d_{n-h}, d_{n-h-1}
    if 1 + d1 > lo_a + lo_b:
        raise OutOfClassError(
            f"condition {CLASS_CONDITION} fails: 1 + {d1} = {1 + d1} > {lo_b} + {lo_a} = {lo_a + lo_b}"
        )
    return PendantClassSpec(
        sequence=seq,
        h=h,
        m_edges=seq.edge_count,
        a=sum(x * x for x in d),
        m1=lo_a + lo_b,
        m2=1 + lo_a,
        M1=d1 + d2,
        M2=1 + d1,
        cube_sum=sum(x ** 3 for x in d),
    )


def das_gutman_upper(n: int, m: int) -> int:
    """``2 m^2 - (n - 1) m``, the comparison upper bound."""
    if n < 2 or m < 1:
        raise PreconditionError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    return 2 * m * m - (n - 1) * m


def zagreb_bounds(seq: DegreeSequence) -> BoundsReport:
    """Sharp lower/upper bounds on ``S(G)`` over connected graphs with degree sequence ``seq``.

    The lower bound uses the integerized minimal vector: edge sums are integers,
    so the balanced integer vector is still a valid minimum and is never worse.
    """
    spec = build_constraint_set(seq)
    block = spec.block_set
    top = maximal_element_two_block(block)
    bottom = minimal_element_two_block(block)
    bottom_int = integerize_minimal(block, bottom)
    lower = spec.zagreb_from_vector(bottom_int)
    upper = spec.zagreb_from_vector(top.vector)
    if lower > upper:
        raise ConsistencyError(f"lower bound {lower} exceeds upper bound {upper}")
    return BoundsReport(
        lower=lower,
        upper=upper,
        lower_vector=bottom_int,
        upper_vector=top.vector,
        traces=(top, bottom),
        comparison=das_gutman_upper(seq.n, spec.m_edges),
        spec=spec,
    )


# ---------------------------------------------------------------------------
# closed forms

FAMILIES = ("tree_i", "tree_ii", "tree_iii", "uniform_core_tree", "regular_plus_pendants")


def family_sequence(family: str, params: Sequence[int]) -> DegreeSequence:
    """Degree sequence of a closed-form family (parameters are validated)."""
    _check_family(family, params)
    if family == "tree_i":
        t, s = params
        return DegreeSequence((t,) + (s,) * t + (1,) * (t * (s - 1)))
    if family == "tree_ii":
        t, s = params
        return DegreeSequence((s,) * t + (t,) + (1,) * (t * (s - 1)))
    if family == "tree_iii":
        (t,) = params
        return DegreeSequence((t,) * (t + 1) + (1,) * (t * (t - 1)))
    if family == "uniform_core_tree":
        k, r = params
        return DegreeSequence((k,) * r + (1,) * (r * k - 2 * r + 2))
    k, r, s = params
    return DegreeSequence((k + s,) * r + (1,) * (s * r))


def _check_family(family: str, params: Sequence[int]) -> None:
    arity = {"tree_i": 2, "tree_ii": 2, "tree_iii": 1, "uniform_core_tree": 2,
             "regular_plus_pendants": 3}
    if family not in arity:
        raise PreconditionError(f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")
    if len(params) != arity[family] or any(int(p) != p for p in params):
        raise PreconditionError(f"{family} takes {arity[family]} integer parameters, got {list(params)}")
    if family == "tree_i":
        t, s = params
        if not 2 <= s < t < 2 * s:
            raise PreconditionError(f"tree_i needs 2 <= s < t < 2s, got t={t}, s={s}")
    elif family == "tree_ii":
        t, s = params
        if not s > t >= 2:
            raise PreconditionError(f"tree_ii needs s > t >= 2, got t={t}, s={s}")
    elif family == "tree_iii":
        if params[0] < 2:
            raise PreconditionError(f"tree_iii needs t >= 2, got t={params[0]}")
    elif family == "uniform_core_tree":
        k, r = params
        if k < 2 or r < 2:
            raise PreconditionError(f"uniform_core_tree needs k >= 2 and r >= 2, got k={k}, r={r}")
    else:
        k, r, s = params
        if not (2 <= k <= r - 1 and (k * r) % 2 == 0 and s >= 1):
            raise PreconditionError(
                f"regular_plus_pendants needs 2 <= k <= r-1, k*r even, s >= 1; got k={k}, r={r}, s={s}"
            )


def closed_form_family(family: str, params: Sequence[int]) -> BoundsReport:
    """Closed-form bounds (and extremal edge-sum vectors) for the tree and pendant families.

    ``tree_i`` is ``(t, s^t, 1^{t(s-1)})`` with ``2 <= s < t < 2s``; ``tree_ii`` is
    ``(s^t, t, 1^{t(s-1)})`` with ``s > t >= 2``; ``tree_iii`` is
    ``(t^{t+1}, 1^{t(t-1)})``; ``uniform_core_tree`` is ``(k^r, 1^{rk-2r+2})``;
    ``regular_plus_pendants`` attaches ``s`` pendants to every vertex of a
    ``k``-regular graph on ``r`` vertices. The last three give exact values.
    """
    params = tuple(int(p) for p in params)
    seq = family_sequence(family, params)

    if family == "tree_i":
        t, s = params
        if t < 2 * s - 1:
            lower = t * (3 * t - t * t - 5 * s + 2 * s * t + 3 * s * s) // 2
            upper = t * s * (s + t - 1)
            low_vec = [2 * s] * t + [s + 2] * (t * (t - s)) + [s + 1] * (t * (2 * s - t - 1))
        else:
            lower = (2 * s - 1) * (3 * s + 3 * s * s - 4) // 2
            upper = s * (2 * s - 1) * (3 * s - 2)
            low_vec = [2 * s] * t + [s + 2] * (s * t - t)
        up_vec = [t + s] * t + [s + 1] * (s * t - t)
    elif family == "tree_ii":
        t, s = params
        lower = t * s * (s + t - 1)
        upper = t * (t - 2 * s + 2 * s * s)
        low_vec = [s + t] * t + [s + 1] * (s * t - t)
        up_vec = [2 * s] * t + [s + 1] * (s * t - 2 * t) + [t + 1] * t
    elif family == "tree_iii":
        (t,) = params
        lower = upper = 2 * t ** 3 - t * t
        low_vec = up_vec = [2 * t] * t + [t + 1] * (t * (t - 1))
    elif family == "uniform_core_tree":
        k, r = params
        lower = upper = k * (2 * k * r - 2 * r - k + 2)
        low_vec = up_vec = [2 * k] * (r - 1) + [k + 1] * (r * k - 2 * r + 2)
    else:
        k, r, s = params
        twice = r * (2 * s + k * s + k * k) * (k + s)
        lower = upper = twice // 2
        low_vec = up_vec = [2 * (k + s)] * (k * r // 2) + [k + s + 1] * (s * r)

    return BoundsReport(
        lower=lower,
        upper=upper,
        lower_vector=OrderedVector(low_vec),
        upper_vector=OrderedVector(up_vec),
        comparison=das_gutman_upper(seq.n, seq.edge_count),
        family=family,
    )
