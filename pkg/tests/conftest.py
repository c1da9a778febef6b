"""Shared fixture lists and brute-force helpers.

The helpers here are deliberately naive (itertools + plain Python) so they stay
independent of both the closed forms and the compiled kernels.
"""
import itertools
from fractions import Fraction

import pytest

from schurbounds import BoxedSumSet, TwoBlockSet

# 20 sets for the extremality / agreement criteria.
BOXED_FIXTURES = [
    BoxedSumSet([2, 1, 0], [5, 4, 3], 9),
    BoxedSumSet([2, 1, 0], [5, 4, 3], 11),
    BoxedSumSet([2, 1, 0], [5, 4, 3], 4.5),
    BoxedSumSet([9, 6, 3, 0], [10, 8, 5, 2], 20),           # disjoint intervals
    BoxedSumSet([7.5, 4.2, 1.1], [9.0, 7.0, 4.0], 15.3),    # disjoint, real
    BoxedSumSet([3, 3, 1, 1, 0], [6, 5, 5, 2, 2], 12),
    BoxedSumSet([1] * 6, [4] * 6, 10),
    BoxedSumSet([0.5, 0.5, 0.2], [3.3, 2.1, 2.1], 4.0),
    BoxedSumSet([5, 2, 2, 2, 0, 0, 0], [8, 8, 6, 3, 3, 1, 1], 20),
    BoxedSumSet([4, 4, 4], [4, 4, 4], 12),                  # singleton
]
TWO_BLOCK_FIXTURES = [
    TwoBlockSet(n=13, h=9, m1=4, m2=3, M1=6, M2=4, total=60),
    TwoBlockSet(n=6, h=3, m1=4, m2=3, M1=5, M2=4, total=24),
    TwoBlockSet(n=6, h=2, m1=5, m2=3, M1=6, M2=4, total=26),
    TwoBlockSet(n=4, h=2, m1=1, m2=0, M1=4, M2=3, total=8),
    TwoBlockSet(n=8, h=6, m1=5, m2=3, M1=6, M2=4, total=42),
    TwoBlockSet(n=4, h=3, m1=4, m2=3, M1=5, M2=4, total=18),
    TwoBlockSet(n=7, h=3, m1=2, m2=1, M1=5, M2=3, total=12),
    TwoBlockSet(n=6, h=2, m1=3, m2=1, M1=3, M2=2, total=12),  # first block fixed
    TwoBlockSet(n=5, h=3, m1=1.5, m2=0.5, M1=4.5, M2=2.5, total=9.7),
    TwoBlockSet(n=6, h=6, m1=1, m2=1, M1=4, M2=4, total=13),  # empty second block
]
ALL_FIXTURES = BOXED_FIXTURES + TWO_BLOCK_FIXTURES

# 10 pendant-class sequences with n <= 8 for the sandwich criterion.
SANDWICH_SEQUENCES = [
    (3, 2, 2, 1),
    (3, 3, 3, 3, 2, 1, 1),
    (2, 2, 2, 1, 1),
    (3, 3, 2, 2, 1, 1),
    (3, 3, 2, 1, 1),
    (3, 3, 3, 2, 2, 1),
    (3, 3, 3, 3, 1, 1),
    (3, 3, 2, 2, 2, 1, 1),
    (4, 3, 3, 3, 3, 1, 1),
    (3, 3, 3, 3, 2, 2, 1, 1),
]


def fixture_id(s):
    if isinstance(s, TwoBlockSet):
        return f"two[n{s.n},h{s.h},{s.m1}-{s.M1}|{s.m2}-{s.M2},a{s.total}]"
    return f"box[{s.lower.tolist()}..{s.upper.tolist()},a{s.total}]"


def brute_members(lower, upper, total):
    """All nonincreasing integer vectors in the box with the given sum."""
    out = []
    for x in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper))):
        if sum(x) == total and all(x[i] >= x[i + 1] for i in range(len(x) - 1)):
            out.append(x)
    return out


def brute_majorizes(y, x):
    """Exact prefix-sum comparison on rationals."""
    y = sorted((Fraction(v) for v in y), reverse=True)
    x = sorted((Fraction(v) for v in x), reverse=True)
    py = px = 0
    for i, (a, b) in enumerate(zip(y, x)):
        py += a
        px += b
        if i < len(y) - 1 and px > py:
            return False
    return py == px


def brute_extremes(rows):
    """(max, min) of a finite set under majorization, or None where none exists."""
    top = [r for r in rows if all(brute_majorizes(r, o) for o in rows)]
    bottom = [r for r in rows if all(brute_majorizes(o, r) for o in rows)]
    return (top[0] if top else None), (bottom[0] if bottom else None)


@pytest.fixture(params=ALL_FIXTURES, ids=fixture_id)
def any_set(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
