import itertools
import random

import pytest

from schurbounds import (
    DegreeSequence,
    OutOfClassError,
    PreconditionError,
    SimpleGraph,
    build_constraint_set,
    closed_form_family,
    enumerate_realizations,
    das_gutman_upper,
    family_sequence,
    zagreb_bounds,
    zagreb_exact,
)
from schurbounds.bounds import FAMILIES

PI = (3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1)


def test_constraint_data_for_thirteen_vertex_sequence():
    sp = build_constraint_set(DegreeSequence(PI))
    assert (sp.n, sp.m_edges, sp.h, sp.a, sp.cube_sum) == (13, 13, 4, 60, 152)
    assert (sp.m1, sp.m2, sp.M1, sp.M2) == (4, 3, 6, 4)
    blk = sp.block_set
    assert (blk.n, blk.h) == (13, 9)


def test_thirteen_vertex_bounds_and_vectors():
    r = zagreb_bounds(DegreeSequence(PI))
    assert (r.lower, r.upper, r.comparison) == (64, 74, 182)
    assert r.upper_vector.tolist() == [6] * 6 + [4] * 3 + [3] * 4
    assert r.lower_vector.tolist() == [5] * 8 + [4] * 5
    assert [t.branch for t in r.traces] == ["below_a_star", "high"]
    assert not r.exact


@pytest.mark.parametrize(
    "degrees, expected",
    [((3, 2, 2, 1), (19, 20, 20)), ((3, 3, 3, 3, 2, 1, 1), (54, 58, 80))],
)
def test_small_sequence_bounds(degrees, expected):
    r = zagreb_bounds(DegreeSequence(degrees))
    assert (r.lower, r.upper, r.comparison) == expected


@pytest.mark.parametrize(
    "degrees, fragment",
    [
        ((5, 1, 1, 1, 1, 1), "n - h >= 2"),
        ((2, 2, 2, 2), "h = 0"),
        ((2, 1, 1), "n >= 4"),
        ((4, 2, 2, 1, 1, 1, 1), "1 + d_1 <= d_{n-h} + d_{n-h-1}"),
    ],
)
def test_out_of_class_messages(degrees, fragment):
    with pytest.raises(OutOfClassError) as info:
        zagreb_bounds(DegreeSequence(degrees))
    assert fragment in str(info.value)


def test_class_condition_equality_is_accepted():
    # 1 + d_1 = 4 = d_3 + d_2
    r = zagreb_bounds(DegreeSequence((3, 2, 2, 1)))
    assert r.lower <= r.upper


def test_das_gutman():
    assert das_gutman_upper(13, 13) == 182
    assert das_gutman_upper(4, 4) == 20
    assert das_gutman_upper(7, 8) == 80
    with pytest.raises(PreconditionError):
        das_gutman_upper(1, 0)


def test_comparison_bound_can_be_tighter_off_trees():
    # dominance over 2m^2 - (n-1)m is only claimed for the tree families
    seq = DegreeSequence((3, 3, 2, 1, 1))
    r = zagreb_bounds(seq)
    assert (r.lower, r.upper, r.comparison) == (27, 31, 30)
    values = {zagreb_exact(g) for g in enumerate_realizations(seq)}
    assert values and max(values) <= 30


def _regime_grid():
    for t, s in itertools.product(range(2, 7), repeat=2):
        if 2 <= s < t < 2 * s:
            yield "tree_i", (t, s)
        if s > t >= 2:
            yield "tree_ii", (t, s)
    for t in range(2, 7):
        yield "tree_iii", (t,)


@pytest.mark.parametrize("family, params", list(_regime_grid()))
def test_tree_closed_forms_match_general_bounds(family, params):
    cf = closed_form_family(family, params)
    gen = zagreb_bounds(family_sequence(family, params))
    assert (cf.lower, cf.upper) == (gen.lower, gen.upper)
    assert cf.upper_vector == gen.upper_vector
    assert cf.lower_vector == gen.lower_vector
    t, s = params[0], params[-1]
    assert cf.comparison == t * t * s * s > cf.upper


@pytest.mark.parametrize(
    "family, params, value",
    [
        ("uniform_core_tree", (2, 3), 12),
        ("uniform_core_tree", (2, 4), 16),
        ("uniform_core_tree", (3, 4), 45),
        ("regular_plus_pendants", (2, 3, 1), 36),
        ("tree_iii", (3,), 45),
    ],
)
def test_exact_families(family, params, value):
    cf = closed_form_family(family, params)
    gen = zagreb_bounds(family_sequence(family, params))
    assert cf.lower == cf.upper == gen.lower == gen.upper == value
    assert cf.exact


@pytest.mark.parametrize(
    "family, params",
    [("tree_i", (6, 3)), ("tree_ii", (3, 3)), ("tree_iii", (1,)), ("uniform_core_tree", (2, 1)),
     ("regular_plus_pendants", (3, 3, 1)), ("regular_plus_pendants", (3, 4, 0)), ("tree_i", (3,)),
     ("nope", (1,))],
)
def test_family_parameter_checks(family, params):
    with pytest.raises(PreconditionError):
        closed_form_family(family, params)


def test_family_names():
    assert set(FAMILIES) == {"tree_i", "tree_ii", "tree_iii", "uniform_core_tree", "regular_plus_pendants"}


def test_random_graphs_fall_inside_bounds():
    rng = random.Random(7)
    in_class = 0
    for _ in range(400):
        n = rng.randrange(4, 12)
        edges = {tuple(sorted((i, rng.randrange(i)))) for i in range(1, n)}
        pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
        edges |= set(rng.sample(pairs, rng.randrange(0, min(len(pairs), 2 * n) + 1)))
        g = SimpleGraph(n, edges)
        try:
            r = zagreb_bounds(DegreeSequence.from_unsorted(g.degrees()))
        except OutOfClassError:
            continue
        in_class += 1
        assert r.lower <= zagreb_exact(g) <= r.upper
    assert in_class >= 30
