"""Affine level combinatorics and the effective-class comparison diagnostic."""

from itertools import product

import pytest

from conecurves import (
    CartanType,
    InputError,
    build_cone,
    build_parabolic,
    build_root_system,
    comarks,
    compare_ne_ir,
    cone_from_ell,
    level_weights,
    minimal_ample,
)

# Dual Coxeter numbers, frozen from the classical tables.
DUAL_COXETER = {
    "A1": 2, "A2": 3, "A3": 4, "A4": 5, "A5": 6, "A6": 7, "A7": 8, "A8": 9,
    "B2": 3, "B3": 5, "B4": 7, "B5": 9, "B6": 11, "B7": 13, "B8": 15,
    "C2": 3, "C3": 4, "C4": 5, "C5": 6, "C6": 7, "C7": 8, "C8": 9,
    "D3": 4, "D4": 6, "D5": 8, "D6": 10, "D7": 12, "D8": 14,
    "E6": 12, "E7": 18, "E8": 30,
    "F4": 9,
    "G2": 4,
}


def borel_cone(type_name):
    rs = build_root_system(CartanType.parse(type_name))
    p = build_parabolic(rs, tuple(range(1, rs.rank + 1)))
    return build_cone(p, minimal_ample(p), 1)


def test_comarks_a1():
    assert comarks(CartanType("A", 1)).comarks == (1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_comarks_a_series_all_ones(n):
    assert comarks(CartanType("A", n)).comarks == (1,) * (n + 1)


def test_comarks_g2():
    marks = comarks(CartanType("G", 2)).comarks
    assert sorted(marks) == [1, 1, 2]
    assert sum(marks) == 4


def test_comarks_frozen_non_simply_laced():
    assert comarks(CartanType("B", 3)).comarks == (1, 1, 2, 1)
    assert comarks(CartanType("C", 3)).comarks == (1, 1, 1, 1)
    assert comarks(CartanType("F", 4)).comarks == (1, 2, 3, 2, 1)


def test_comark_zero_node_is_one():
    for name in ("A3", "B4", "C4", "D4", "E6", "F4", "G2"):
        assert comarks(CartanType.parse(name)).comarks[0] == 1


@pytest.mark.parametrize("name", sorted(DUAL_COXETER))
def test_comark_sums_are_dual_coxeter_numbers(name):
    assert sum(comarks(CartanType.parse(name)).comarks) == DUAL_COXETER[name]


def test_level_weights_examples():
    a1 = comarks(CartanType("A", 1))
    assert level_weights(a1, 1) == [(1, 0), (0, 1)]
    assert level_weights(a1, 0) == [(0, 0)]
    a2 = comarks(CartanType("A", 2))
    assert len(level_weights(a2, 1)) == 3


def test_level_zero_is_vacuum_only():
    for name in ("A2", "B3", "G2", "F4", "D4"):
        a = comarks(CartanType.parse(name))
        assert level_weights(a, 0) == [(0,) * (a.cartan_type.rank + 1)]


def test_level_weights_rejects_negative_level():
    with pytest.raises(InputError):
        level_weights(comarks(CartanType("A", 1)), -1)


def box_scan(weights, level):
    boxes = [range(level // w + 1) for w in weights]
    sols = [v for v in product(*boxes) if sum(a * b for a, b in zip(v, weights)) == level]
    return sorted(sols, key=lambda v: (sum(v), tuple(-c for c in v)))


@pytest.mark.parametrize("name", ("A1", "A2", "A4", "B2", "B4", "C3", "D4", "G2", "F4"))
def test_level_weights_match_box_scan(name):
    a = comarks(CartanType.parse(name))
    for level in range(9):
        assert level_weights(a, level) == box_scan(a.comarks, level)


def test_compare_ne_ir_a1_degree_one_mismatch():
    cmp = compare_ne_ir(borel_cone("A1"), 1)
    assert cmp.ne_count == 1
    assert cmp.ir_count == 2
    assert not cmp.match


def test_compare_ne_ir_degree_zero_matches():
    for name in ("A1", "A2", "B2", "G2", "A3"):
        cmp = compare_ne_ir(borel_cone(name), 0)
        assert cmp.ne_count == cmp.ir_count == 1
        assert cmp.match


def test_compare_ne_ir_a2_degree_two():
    cmp = compare_ne_ir(borel_cone("A2"), 2)
    assert cmp.ne_count == 3
    assert cmp.ir_count == 6
    assert not cmp.match


def test_compare_ne_ir_never_raises_on_valid_input():
    for name in ("A1", "A2", "B2", "C3", "G2"):
        cone = borel_cone(name)
        for degree in range(7):
            compare_ne_ir(cone, degree)


def test_compare_ne_ir_requires_minimal_ample():
    rs = build_root_system(CartanType("A", 1))
    p = build_parabolic(rs, (1,))
    with pytest.raises(InputError):
        compare_ne_ir(cone_from_ell(p, (2,), 1), 1)


def test_compare_ne_ir_split_picard_factors():
    # Marked nodes 1 and 3 of A3 are non-adjacent: two A1 factors.
    rs = build_root_system(CartanType("A", 3))
    p = build_parabolic(rs, (1, 3))
    cone = build_cone(p, minimal_ample(p), 1)
    cmp = compare_ne_ir(cone, 1)
    assert cmp.factor_nodes == ((1,), (3,))
    assert cmp.factor_comarks == ((1, 1), (1, 1))
    # ne(1) has the two unit classes; each A1 factor has two level-1
    # weights and the vacuum, so the split count is 2*1 + 1*2 = 4.
    assert cmp.ne_count == 2
    assert cmp.ir_count == 4
    assert not cmp.match


def test_compare_ne_ir_connected_marked_block():
    # Marked nodes 1,2 of A3 form one A2 factor.
    rs = build_root_system(CartanType("A", 3))
    p = build_parabolic(rs, (1, 2))
    cone = build_cone(p, minimal_ample(p), 1)
    cmp = compare_ne_ir(cone, 1)
    assert cmp.factor_nodes == ((1, 2),)
    assert cmp.factor_comarks == ((1, 1, 1),)
    assert cmp.ne_count == 2
    assert cmp.ir_count == 3
