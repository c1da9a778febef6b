"""Maximal and minimal elements, under the majorization order, of box sets with a fixed sum.

Vectors are always sorted nonincreasingly. ``x <| y`` (``y`` majorizes ``x``)
means every prefix sum of ``x`` is at most the matching prefix sum of ``y``
and the totals agree.

The general set is::

    S_a = {x : x_1 >= ... >= x_n >= 0, lower <= x <= upper, sum(x) = a}

with ``lower`` and ``upper`` themselves nonincreasing. :class:`TwoBlockSet` is
the special case where both bound vectors are constant on a first block of
length ``h`` and on the remaining ``n - h`` coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import (
    ConsistencyError,
    DimensionError,
    InfeasibleSetError,
    NotIntegerizableError,
    PreconditionError,
    UnsupportedCaseError,
)

#: Absolute tolerance for comparisons involving non-integer data.
TOL = 1e-9

Number = Union[int, float]


def _is_integral_value(v) -> bool:
    return float(v).is_integer()


def _tol(*integral_flags: bool) -> float:
    return 0.0 if all(integral_flags) else TOL


class OrderedVector:
    """A nonincreasing, nonnegative vector of length at least one.

    Integer input keeps an ``int64`` dtype; anything else is stored as float.
    The underlying array is read-only.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        if isinstance(entries, OrderedVector):
            self._entries = entries._entries
            return
        arr = np.array(entries)
        if arr.ndim != 1 or arr.size == 0:
            raise DimensionError(f"expected a non-empty 1-D vector, got shape {arr.shape}")
        if arr.dtype.kind in "iub":
            arr = arr.astype(np.int64)
        else:
            arr = arr.astype(np.float64)
            if not np.all(np.isfinite(arr)):
                raise PreconditionError("vector entries must be finite")
        tol = 0 if arr.dtype.kind == "i" else TOL
        if np.any(arr < -tol):
            raise PreconditionError(f"vector entries must be >= 0, got {arr.tolist()}")
        if np.any(arr[1:] > arr[:-1] + tol):
            raise PreconditionError(f"vector must be nonincreasing, got {arr.tolist()}")
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def sorted(cls, values) -> "OrderedVector":
        """Build from arbitrary order by sorting nonincreasingly."""
        arr = np.array(values)
        return cls(-np.sort(-arr))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def integral(self) -> bool:
        return self._entries.dtype.kind == "i"

    def __len__(self) -> int:
        return self._entries.size

    def __iter__(self):
        return iter(self.tolist())

    def __getitem__(self, i):
        return self._entries[i]

    def __array__(self, dtype=None, copy=None):
        return self._entries if dtype is None else self._entries.astype(dtype)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedVector):
            return NotImplemented
        return self._entries.shape == other._entries.shape and bool(
            np.all(self._entries == other._entries)
        )

    def __hash__(self):
        return hash(tuple(self.tolist()))

    def __repr__(self) -> str:
        return f"OrderedVector({self.tolist()})"

    def tolist(self) -> list:
        return self._entries.tolist()

    def sum(self) -> Number:
        return self._entries.sum().item()

    def sum_of_squares(self) -> Number:
        e = self._entries
        return int(np.dot(e, e)) if self.integral else float(np.dot(e, e))


def _as_vector(values, integral: bool) -> OrderedVector:
    """Wrap computed values, switching to integers when the data allow it exactly."""
    arr = np.asarray(values, dtype=np.float64)
    if integral:
        rounded = np.round(arr)
        if np.all(np.abs(arr - rounded) <= TOL):
            return OrderedVector(rounded.astype(np.int64))
    return OrderedVector(arr)


@dataclass(frozen=True)
class BoxedSumSet:
    """``{x nonincreasing : lower <= x <= upper, sum(x) = total}``."""

    lower: OrderedVector
    upper: OrderedVector
    total: Number

    def __post_init__(self):
        lo = OrderedVector(self.lower)
        hi = OrderedVector(self.upper)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        if len(lo) != len(hi):
            raise DimensionError(f"lower has length {len(lo)}, upper has length {len(hi)}")
        tol = self.tol
        if np.any(lo.entries > hi.entries + tol):
            raise InfeasibleSetError("lower bound exceeds upper bound in some coordinate")
        if not (lo.sum() - tol <= self.total <= hi.sum() + tol):
            raise InfeasibleSetError(
                f"total {self.total} outside [sum(lower), sum(upper)] = [{lo.sum()}, {hi.sum()}]"
            )

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def integral(self) -> bool:
        return self.lower.integral and self.upper.integral and _is_integral_value(self.total)

    @property
    def tol(self) -> float:
        return _tol(self.lower.integral, self.upper.integral, _is_integral_value(self.total))

    @property
    def is_disjoint(self) -> bool:
        """True when the coordinate intervals are pairwise disjoint (``upper[i+1] < lower[i]``)."""
        return self.n >= 2 and bool(np.all(self.upper.entries[1:] < self.lower.entries[:-1]))

    def contains(self, x, tol: Optional[float] = None) -> bool:
        x = np.asarray(x, dtype=np.float64)
        if tol is None:
            # integer sets compare exactly, but only against integer candidates
            tol = self.tol if np.all(x == np.round(x)) else TOL * max(1.0, abs(self.total))
        if x.shape != (self.n,):
            return False
        return bool(
            np.all(x[1:] <= x[:-1] + tol)
            and np.all(x >= self.lower.entries - tol)
            and np.all(x <= self.upper.entries + tol)
            and abs(x.sum() - self.total) <= tol * max(1.0, self.n)
        )


@dataclass(frozen=True)
class TwoBlockSet:
    """Box set whose bounds are ``[m1, M1]`` on the first ``h`` coordinates, ``[m2, M2]`` after.

    With ``h == n`` the second block is empty and the set is a single interval.
    """

    n: int
    h: int
    m1: Number
    m2: Number
    M1: Number
    M2: Number
    total: Number

    def __post_init__(self):
        n, h = self.n, self.h
        if n < 1 or not 1 <= h <= n:
            raise PreconditionError(f"need n >= 1 and 1 <= h <= n, got n={n}, h={h}")
        m1, m2, M1, M2 = self.m1, self.m2, self.M1, self.M2
        if not (0 <= m2 <= m1 and 0 <= M2 <= M1 and m1 <= M1 and m2 <= M2):
            raise InfeasibleSetError(
                "block bounds must satisfy 0 <= m2 <= m1, 0 <= M2 <= M1, m1 <= M1, m2 <= M2;"
                f" got m1={m1}, m2={m2}, M1={M1}, M2={M2}"
            )
        lo_sum = h * m1 + (n - h) * m2
        hi_sum = h * M1 + (n - h) * M2
        tol = self.tol
        if not (lo_sum - tol <= self.total <= hi_sum + tol):
            raise InfeasibleSetError(f"total {self.total} outside [{lo_sum}, {hi_sum}]")

    @property
    def integral(self) -> bool:
        return all(_is_integral_value(v) for v in (self.m1, self.m2, self.M1, self.M2, self.total))

    @property
    def tol(self) -> float:
        return 0.0 if self.integral else TOL

    @property
    def a_star(self) -> Number:
        """Total at which the maximal element switches shape: ``h*M1 + (n-h)*m2``."""
        return self.h * self.M1 + (self.n - self.h) * self.m2

    @property
    def a_tilde(self) -> Number:
        """``h*m1 + (n-h)*M2``."""
        return self.h * self.m1 + (self.n - self.h) * self.M2

    def lower_vector(self) -> OrderedVector:
        return OrderedVector(_block(self.m1, self.h, self.m2, self.n - self.h))

    def upper_vector(self) -> OrderedVector:
        return OrderedVector(_block(self.M1, self.h, self.M2, self.n - self.h))

    def expand(self) -> BoxedSumSet:
        return BoxedSumSet(self.lower_vector(), self.upper_vector(), self.total)

    def contains(self, x, tol: Optional[float] = None) -> bool:
        return self.expand().contains(x, tol)


def _block(v1, n1, v2, n2) -> np.ndarray:
    return np.array([v1] * n1 + [v2] * n2)


@dataclass(frozen=True)
class ExtremalTrace:
    """An extremal vector plus the case analysis that produced it.

    ``theta`` is set only for maximal elements, ``rho`` only for minimal ones.
    """

    branch: str
    vector: OrderedVector
    k: int = 0
    d: int = 0
    theta: Optional[float] = None
    rho: Optional[float] = None
    notes: tuple = field(default=())

    def __post_init__(self):
        for name in ("theta", "rho"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, float(v))

    def as_dict(self) -> dict:
        return {
            "branch": self.branch,
            "k": self.k,
            "d": self.d,
            "theta": _plain(self.theta),
            "rho": _plain(self.rho),
            "vector": self.vector.tolist(),
        }


def _plain(v):
    if v is None:
        return None
    v = float(v)
    return int(v) if v.is_integer() else v


# ---------------------------------------------------------------------------
# helpers

def partial_sums(x) -> np.ndarray:
    """Prefix sums ``P[k-1] = x_1 + ... + x_k`` for ``k = 1..n``."""
    return np.cumsum(np.asarray(OrderedVector(x).entries))


def majorizes(y, x) -> bool:
    """True iff ``y`` majorizes ``x`` (``x <| y``).

    Accepts :class:`OrderedVector` or any 1-D array; plain arrays are sorted
    nonincreasingly first. Integer inputs are compared exactly.
    """
    yv = y if isinstance(y, OrderedVector) else OrderedVector.sorted(y)
    xv = x if isinstance(x, OrderedVector) else OrderedVector.sorted(x)
    if len(yv) != len(xv):
        raise DimensionError(f"cannot compare vectors of length {len(yv)} and {len(xv)}")
    tol = _tol(yv.integral, xv.integral)
    return bool(_kernels.prefix_dominance(yv.entries, xv.entries, tol)[0])


def _floor_div(num, den, tol: float) -> int:
    if tol == 0.0:
        return int(round(num)) // int(round(den))
    q = math.floor(num / den)
    if (q + 1) * den <= num + tol:
        q += 1
    return int(q)


def _clip(v, lo, hi):
    return min(max(v, lo), hi)


def _check_total(n, a, lo_each_sum, hi_each_sum, tol):
    if not (lo_each_sum - tol <= a <= hi_each_sum + tol):
        raise InfeasibleSetError(f"total {a} outside [{lo_each_sum}, {hi_each_sum}] for n={n}")


# ---------------------------------------------------------------------------
# maximal elements

def maximal_element(s: BoxedSumSet) -> ExtremalTrace:
    """Maximal element of a :class:`BoxedSumSet`.

    Fills coordinates with their upper bounds from the left, lower bounds from
    the right, and puts the slack ``theta`` in the single coordinate between.
    ``k`` is the number of coordinates pinned at the upper bound.
    """
    m = s.lower.entries.astype(np.float64)
    M = s.upper.entries.astype(np.float64)
    a, n, tol = s.total, s.n, s.tol
    if a >= M.sum() - tol:
        # the set is the singleton {upper}; no k satisfies the strict inequality
        return ExtremalTrace("upper_boundary", s.upper, k=n, theta=None)

    pm = np.concatenate([[0.0], np.cumsum(m)])
    pM = np.concatenate([[0.0], np.cumsum(M)])
    # reach[k] = <M, s^k> + <m, v^k>, nondecreasing in k
    reach = pM + (pm[-1] - pm)
    k = int(np.count_nonzero(reach <= a + tol)) - 1
    theta = a - pM[k] - (pm[-1] - pm[k + 1])
    theta = _clip(theta, m[k], M[k])
    vec = np.concatenate([M[:k], [theta], m[k + 1:]])
    return ExtremalTrace("theorem", _as_vector(vec, s.integral), k=k, theta=theta)


def extremal_single_interval(n: int, a: Number, m: Number, M: Number, which: str) -> ExtremalTrace:
    """Extremal elements when every coordinate shares the interval ``[m, M]``.

    ``which`` is ``"max"`` or ``"min"``. The minimum is always the mean vector.
    """
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if not 0 <= m <= M:
        raise PreconditionError(f"need 0 <= m <= M, got m={m}, M={M}")
    integral = all(_is_integral_value(v) for v in (a, m, M))
    tol = _tol(integral)
    _check_total(n, a, n * m, n * M, tol)

    if which == "min":
        return ExtremalTrace("single_interval_mean", _as_vector([a / n] * n, integral), rho=a / n)
    if which != "max":
        raise PreconditionError(f"which must be 'max' or 'min', got {which!r}")

    if M == m:
        return ExtremalTrace("singleton", _as_vector([m] * n, integral), k=n)
    if a >= n * M - tol:
        return ExtremalTrace("upper_boundary", _as_vector([M] * n, integral), k=n)
    if m == 0:
        k = _floor_div(a, M, tol)
        theta = a - M * k
        branch = "single_interval_zero_floor"
    else:
        k = _floor_div(a - n * m, M - m, tol)
        theta = a - M * k - m * (n - k - 1)
        branch = "single_interval"
    theta = _clip(theta, m, M)
    vec = [M] * k + [theta] + [m] * (n - k - 1)
    return ExtremalTrace(branch, _as_vector(vec, integral), k=k, theta=theta)


def _shift_trace(t: ExtremalTrace, branch: str, head, tail, k_offset: int) -> ExtremalTrace:
    vec = np.concatenate([np.asarray(head, dtype=np.float64),
                          t.vector.entries.astype(np.float64),
                          np.asarray(tail, dtype=np.float64)])
    return ExtremalTrace(
        branch, _as_vector(vec, True), k=t.k + k_offset, d=t.d, theta=t.theta, rho=t.rho,
        notes=(f"reduced:{t.branch}",),
    )


def _degenerate_two_block(s: TwoBlockSet, which: str) -> Optional[ExtremalTrace]:
    """Handle ``h == n`` and blocks with ``m_i == M_i`` by reduction; None otherwise."""
    n, h, a = s.n, s.h, s.total
    if h == n:
        t = extremal_single_interval(n, a, s.m1, s.M1, which)
        return ExtremalTrace("single_block", _retype(t.vector, s.integral), k=t.k,
                             theta=t.theta, rho=t.rho, notes=(f"reduced:{t.branch}",))
    fixed1, fixed2 = s.m1 == s.M1, s.m2 == s.M2
    if fixed1 and fixed2:
        return ExtremalTrace("singleton", _as_vector(_block(s.m1, h, s.m2, n - h), s.integral),
                             k=n if which == "max" else 0)
    if fixed1:
        t = extremal_single_interval(n - h, a - h * s.m1, s.m2, s.M2, which)
        out = _shift_trace(t, "fixed_first_block", [s.m1] * h, [], h)
        return _retyped(out, s.integral)
    if fixed2:
        t = extremal_single_interval(h, a - (n - h) * s.m2, s.m1, s.M1, which)
        out = _shift_trace(t, "fixed_second_block", [], [s.m2] * (n - h), 0)
        return _retyped(out, s.integral)
    return None


def _retype(v: OrderedVector, integral: bool) -> OrderedVector:
    return _as_vector(v.entries, integral)


def _retyped(t: ExtremalTrace, integral: bool) -> ExtremalTrace:
    return ExtremalTrace(t.branch, _retype(t.vector, integral), k=t.k, d=t.d,
                         theta=t.theta, rho=t.rho, notes=t.notes)


def maximal_element_two_block(s: TwoBlockSet) -> ExtremalTrace:
    """Closed-form maximal element of a :class:`TwoBlockSet`.

    Below ``a*`` the slack sits inside the first block; from ``a*`` upward the
    first block is saturated at ``M1`` and the slack moves into the second.
    """
    reduced = _degenerate_two_block(s, "max")
    if reduced is not None:
        return reduced

    n, h, a, tol = s.n, s.h, s.total, s.tol
    m1, m2, M1, M2 = s.m1, s.m2, s.M1, s.M2
    if a >= h * M1 + (n - h) * M2 - tol:
        return ExtremalTrace("upper_boundary", s.upper_vector(), k=n)

    if a >= s.a_star - tol:
        k = _floor_div(a - h * (M1 - M2) - n * m2, M2 - m2, tol)
        theta = a - h * M1 - (k - h) * M2 - (n - k - 1) * m2
        theta = _clip(theta, m2, M2)
        vec = [M1] * h + [M2] * (k - h) + [theta] + [m2] * (n - k - 1)
        branch = "at_a_star" if abs(a - s.a_star) <= tol else "above_a_star"
    else:
        k = _floor_div(a - h * (m1 - m2) - n * m2, M1 - m1, tol)
        theta = a - k * M1 - (h - k - 1) * m1 - (n - h) * m2
        theta = _clip(theta, m1, M1)
        vec = [M1] * k + [theta] + [m1] * (h - k - 1) + [m2] * (n - h)
        branch = "below_a_star"
    return ExtremalTrace(branch, _as_vector(vec, s.integral), k=k, theta=theta)


# ---------------------------------------------------------------------------
# minimal elements

def _minimal_search(m, M, a, tol):
    """First admissible ``(k, d)`` scanning ``k + d = 0, 1, ...`` and ``k`` ascending."""
    n = m.size
    pm = np.concatenate([[0.0], np.cumsum(m)])
    pM = np.concatenate([[0.0], np.cumsum(M)])
    for t in range(n):
        for k in range(t + 1):
            d = t - k
            free = n - k - d
            rho = (a - pm[k] - (pM[n] - pM[n - d])) / free
            if not (m[k] - tol <= rho <= M[n - d - 1] + tol):
                continue
            if k > 0 and rho > m[k - 1] + tol:
                continue
            if d > 0 and rho < M[n - d] - tol:
                continue
            return k, d, rho
    return None


def minimal_element(s: BoxedSumSet) -> ExtremalTrace:
    """Minimal element of a :class:`BoxedSumSet`.

    The result keeps the first ``k`` coordinates at their lower bounds, the last
    ``d`` at their upper bounds, and levels the rest to a common value ``rho``.
    For pairwise-disjoint coordinate intervals the one-free-coordinate closed
    form is also evaluated and must agree with the search.
    """
    m = s.lower.entries.astype(np.float64)
    M = s.upper.entries.astype(np.float64)
    a, n, tol = s.total, s.n, s.tol

    found = _minimal_search(m, M, a, tol)
    if found is None:
        raise ConsistencyError(f"no admissible (k, d) for a feasible set: {s}")
    k, d, rho = found
    vec = np.concatenate([m[:k], np.full(n - k - d, rho), M[n - d:]])
    trace = ExtremalTrace("mean" if k == d == 0 else "theorem",
                          _as_vector(vec, s.integral), k=k, d=d, rho=rho)

    if s.is_disjoint:
        disjoint = _minimal_disjoint(m, M, a, tol)
        scale = TOL * max(1.0, abs(a))
        if not np.allclose(disjoint.vector.entries, trace.vector.entries, rtol=0, atol=scale):
            raise ConsistencyError(
                f"disjoint closed form {disjoint.vector} disagrees with search {trace.vector}"
            )
        return ExtremalTrace("disjoint", _as_vector(disjoint.vector.entries, s.integral),
                             k=disjoint.k, d=disjoint.d, rho=disjoint.rho)
    return trace


def _minimal_disjoint(m, M, a, tol) -> ExtremalTrace:
    n = m.size
    if a >= M.sum() - tol:
        return ExtremalTrace("upper_boundary", OrderedVector(M), k=0, d=n)
    pm = np.concatenate([[0.0], np.cumsum(m)])
    pM = np.concatenate([[0.0], np.cumsum(M)])
    # reach[k] = <m, s^k> + <M, v^k>, nonincreasing in k
    reach = pm + (pM[-1] - pM)
    k = int(np.count_nonzero(reach > a + tol)) - 1
    rho = a - pm[k] - (pM[-1] - pM[k + 1])
    rho = _clip(rho, m[k], M[k])
    vec = np.concatenate([m[:k], [rho], M[k + 1:]])
    return ExtremalTrace("disjoint", OrderedVector(vec), k=k, d=n - k - 1, rho=rho)


def minimal_element_two_block(s: TwoBlockSet) -> ExtremalTrace:
    """Closed-form minimal element of a :class:`TwoBlockSet`.

    Three shapes: the mean vector; ``m1`` on the first block with the rest
    levelled (``low``); or the first block levelled with ``M2`` after (``high``).
    Which one applies depends on whether ``m1 <= M2``.
    """
    reduced = _degenerate_two_block(s, "min")
    if reduced is not None:
        return reduced

    n, h, a, tol = s.n, s.h, s.total, s.tol
    m1, M2 = s.m1, s.M2
    if m1 <= M2:
        if n * m1 - tol <= a <= n * M2 + tol:
            shape = "mean"
        elif a < n * m1:
            shape = "low"
        else:
            shape = "high"
    else:
        shape = "low" if a < s.a_tilde - tol else "high"

    if shape == "mean":
        rho = a / n
        return ExtremalTrace("mean", _as_vector([rho] * n, s.integral), rho=rho)
    if shape == "low":
        rho = (a - h * m1) / (n - h)
        rho = _clip(rho, s.m2, M2)
        return ExtremalTrace("low", _as_vector(_block(m1, h, rho, n - h), s.integral),
                             k=h, d=0, rho=rho)
    rho = (a - M2 * (n - h)) / h
    rho = _clip(rho, m1, s.M1)
    branch = "at_a_tilde" if abs(a - s.a_tilde) <= tol else "high"
    return ExtremalTrace(branch, _as_vector(_block(rho, h, M2, n - h), s.integral),
                         k=0, d=n - h, rho=rho)


def integerize_minimal(s: TwoBlockSet, x: ExtremalTrace) -> OrderedVector:
    """Replace each constant fractional run of a minimal vector by its balanced integer run.

    A run of length ``L`` with integer sum ``T`` becomes ``T - L*floor(T/L)``
    copies of ``floor(T/L) + 1`` followed by ``floor(T/L)``.
    """
    if not s.integral:
        raise NotIntegerizableError(
            "integerization needs integer block bounds and an integer total"
        )
    vals = x.vector.entries.astype(np.float64)
    out = []
    i, n = 0, vals.size
    while i < n:
        j = i + 1
        while j < n and abs(vals[j] - vals[i]) <= TOL:
            j += 1
        run = vals[i:j]
        length = j - i
        if abs(run[0] - round(run[0])) <= TOL:
            out.extend([int(round(run[0]))] * length)
        else:
            total = run.sum()
            if abs(total - round(total)) > TOL * max(1.0, abs(total)):
                raise NotIntegerizableError(
                    f"fractional run {run[0]!r} x {length} has non-integer sum {total!r}"
                )
            total = int(round(total))
            base, extra = divmod(total, length)
            out.extend([base + 1] * extra + [base] * (length - extra))
        i = j
    vec = OrderedVector(np.array(out, dtype=np.int64))
    if not s.contains(vec.entries, tol=0.0):
        raise ConsistencyError(f"integerized vector {vec} left the set")
    return vec


# ---------------------------------------------------------------------------
# special families

FLOOR_SET = "floor_set_S2"
CEILING_SET = "ceiling_set_S3"


def special_set(n: int, a: Number, h: int, alpha: Number, family: str) -> TwoBlockSet:
    """The two-block set a special family expands to.

    ``floor_set_S2``: first ``h`` coordinates at least ``alpha``, no other limit
    beyond the total. ``ceiling_set_S3``: coordinates after ``h`` at most ``alpha``.
    """
    if family == FLOOR_SET:
        return TwoBlockSet(n=n, h=h, m1=alpha, m2=0, M1=a, M2=a, total=a)
    if family == CEILING_SET:
        return TwoBlockSet(n=n, h=h, m1=0, m2=0, M1=a, M2=alpha, total=a)
    raise PreconditionError(f"unknown family {family!r}")


def extremal_special(n: int, a: Number, h: int, alpha: Number, family: str, which: str) -> ExtremalTrace:
    if which not in ("max", "min"):
        raise PreconditionError(f"which must be 'max' or 'min', got {which!r}")
    if n < 1 or a <= 0:
        raise PreconditionError(f"need n >= 1 and a > 0, got n={n}, a={a}")
    integral = all(_is_integral_value(v) for v in (a, alpha))

    if family == FLOOR_SET:
        if not (1 <= h <= n and 0 < alpha and alpha * h <= a):
            raise PreconditionError(f"floor set needs 1 <= h <= n and 0 < alpha <= a/h; got h={h}, alpha={alpha}")
        if which == "max":
            vec = [a - h * alpha + alpha] + [alpha] * (h - 1) + [0] * (n - h)
            return ExtremalTrace("floor_set_max", _as_vector(vec, integral), k=0, theta=a - (h - 1) * alpha)
        if alpha * n <= a:
            return ExtremalTrace("mean", _as_vector([a / n] * n, integral), rho=a / n)
        rho = (a - alpha * h) / (n - h)
        return ExtremalTrace("floor_set_min", _as_vector(_block(alpha, h, rho, n - h), integral),
                             k=h, rho=rho)

    if family == CEILING_SET:
        if not (1 <= h <= n - 1 and 0 < alpha < a):
            raise PreconditionError(f"ceiling set needs 1 <= h <= n-1 and 0 < alpha < a; got h={h}, alpha={alpha}")
        if which == "max":
            raise UnsupportedCaseError("no closed form is provided for the maximal element of the ceiling set")
        if alpha * n >= a:
            return ExtremalTrace("mean", _as_vector([a / n] * n, integral), rho=a / n)
        rho = (a - (n - h) * alpha) / h
        return ExtremalTrace("ceiling_set_min", _as_vector(_block(rho, h, alpha, n - h), integral),
                             d=n - h, rho=rho)

    raise PreconditionError(f"unknown family {family!r}")
