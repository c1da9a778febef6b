"""Brute-force witnesses for the extremal vectors.

Nothing here derives an extremal vector. Samples and enumerations are built
from the set's bounds alone; :func:`verify_extremal` then checks candidate
vectors (by default the library's closed forms) against those witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from . import _kernels
from .errors import CapacityError, InfeasibleSetError, PreconditionError
from .majorization import (
    TOL,
    BoxedSumSet,
    OrderedVector,
    TwoBlockSet,
    integerize_minimal,
    maximal_element,
    maximal_element_two_block,
    minimal_element,
    minimal_element_two_block,
)

AnySet = Union[BoxedSumSet, TwoBlockSet]

DEFAULT_SAMPLES = 1000
DEFAULT_ENUM_CAP = 6
DEFAULT_BOUND_CAP = 20


def _boxed(s: AnySet) -> BoxedSumSet:
    return s.expand() if isinstance(s, TwoBlockSet) else s


@dataclass(frozen=True)
class FeasibleSample:
    """``vectors`` holds one sorted member per row."""

    vectors: np.ndarray
    seed: int
    set_descriptor: AnySet

    def __len__(self):
        return self.vectors.shape[0]

    def ordered(self) -> List[OrderedVector]:
        return [OrderedVector(row) for row in self.vectors]


def sample_feasible(s: AnySet, count: int = DEFAULT_SAMPLES, seed: int = 0) -> FeasibleSample:
    """Seeded members of ``s``, drawn coordinate by coordinate.

    Each coordinate is uniform on the interval left open by its own bounds and
    by what the remaining coordinates can still absorb; the row is then sorted.
    Sorting never breaks the bounds because both bound vectors are
    nonincreasing. The distribution is not uniform on the set.
    """
    if count < 1:
        raise PreconditionError(f"count must be >= 1, got {count}")
    box = _boxed(s)
    lo = box.lower.entries.astype(np.float64)
    hi = box.upper.entries.astype(np.float64)
    if not lo.sum() - TOL <= box.total <= hi.sum() + TOL:
        raise InfeasibleSetError(f"total {box.total} is not attainable")
    uniforms = np.random.default_rng(seed).random((count, box.n))
    rows = _kernels.fill_box_samples(lo, hi, box.total, uniforms)
    return FeasibleSample(rows, seed, s)


def enumerate_integer_feasible(
    s: AnySet, cap: int = DEFAULT_ENUM_CAP, bound_cap: int = DEFAULT_BOUND_CAP
) -> np.ndarray:
    """Every nonincreasing integer member of ``s``, one per row.

    Limited to ``n <= cap`` and largest upper bound ``<= bound_cap``.
    """
    box = _boxed(s)
    if not box.integral:
        raise PreconditionError("integer enumeration needs integer bounds and an integer total")
    if box.n > cap:
        raise CapacityError(f"n = {box.n} exceeds the enumeration cap {cap}")
    if box.upper.entries[0] > bound_cap:
        raise CapacityError(f"largest upper bound {box.upper.entries[0]} exceeds {bound_cap}")
    return _kernels.enumerate_box_integer(box.lower.entries, box.upper.entries, int(box.total))


def majorizes_rows(top, rows, tol: float = TOL) -> np.ndarray:
    """``top`` majorizes each sorted row of ``rows``."""
    return _kernels.prefix_dominance(np.asarray(top, dtype=np.float64), rows, tol)


def majorized_by_rows(bottom, rows, tol: float = TOL) -> np.ndarray:
    """Each sorted row of ``rows`` majorizes ``bottom``."""
    return _kernels.prefix_dominance(rows, np.asarray(bottom, dtype=np.float64), tol)


@dataclass
class VerificationReport:
    mode: str
    members_checked: int
    maximal: OrderedVector
    minimal: OrderedVector
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        head = "PASS" if self.passed else f"FAIL ({len(self.failures)} counterexamples)"
        lines = [
            f"{head}: {self.mode}, {self.members_checked} members",
            f"  maximal = {self.maximal.tolist()}",
            f"  minimal = {self.minimal.tolist()}",
        ]
        lines += [f"  {f}" for f in self.failures]
        return "\n".join(lines)


def verify_extremal(
    s: AnySet,
    *,
    seed: int = 0,
    count: int = DEFAULT_SAMPLES,
    cap: int = DEFAULT_ENUM_CAP,
    bound_cap: int = DEFAULT_BOUND_CAP,
    maximal: Optional[OrderedVector] = None,
    minimal: Optional[OrderedVector] = None,
    max_failures: int = 10,
) -> VerificationReport:
    """Check a maximal/minimal pair against brute-force members of ``s``.

    Small integer sets are enumerated exhaustively and compared with the
    integerized minimal vector; everything else is sampled and compared with
    the real-valued minimal vector. Pass ``maximal``/``minimal`` to check
    vectors from elsewhere.
    """
    box = _boxed(s)
    small = box.integral and box.n <= cap and box.upper.entries[0] <= bound_cap

    if maximal is None or minimal is None:
        if isinstance(s, TwoBlockSet):
            top, bottom = maximal_element_two_block(s), minimal_element_two_block(s)
        else:
            top, bottom = maximal_element(s), minimal_element(s)
        if maximal is None:
            maximal = top.vector
        if minimal is None:
            minimal = integerize_minimal(s, bottom) if small else bottom.vector
    maximal, minimal = OrderedVector(maximal), OrderedVector(minimal)

    if small:
        mode = "enumeration"
        rows = enumerate_integer_feasible(s, cap, bound_cap).astype(np.float64)
        tol = 0.0
    else:
        mode = "sampling"
        rows = sample_feasible(s, count, seed).vectors
        tol = TOL

    failures: List[str] = []

    def fail(msg):
        if len(failures) < max_failures:
            failures.append(msg)

    for name, vec in (("maximal", maximal), ("minimal", minimal)):
        if not box.contains(vec.entries):
            fail(f"{name} {vec.tolist()} is not a member of the set")

    top = maximal.entries.astype(np.float64)
    bottom = minimal.entries.astype(np.float64)
    if rows.shape[0]:
        up_ok = majorizes_rows(top, rows, tol)
        down_ok = majorized_by_rows(bottom, rows, tol)
        sq = np.einsum("ij,ij->i", rows, rows)
        sq_top, sq_bottom = float(top @ top), float(bottom @ bottom)
        for i in np.flatnonzero(~up_ok):
            fail(f"maximal does not majorize member {rows[i].tolist()}")
        for i in np.flatnonzero(~down_ok):
            fail(f"member {rows[i].tolist()} does not majorize minimal")
        for i in np.flatnonzero(sq > sq_top + TOL * max(1.0, sq_top)):
            fail(f"sum of squares {sq[i]} of {rows[i].tolist()} exceeds the maximal's {sq_top}")
        for i in np.flatnonzero(sq < sq_bottom - TOL * max(1.0, sq_bottom)):
            fail(f"sum of squares {sq[i]} of {rows[i].tolist()} is below the minimal's {sq_bottom}")

    return VerificationReport(mode, int(rows.shape[0]), maximal, minimal, failures)
