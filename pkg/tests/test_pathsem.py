import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from invsat import oracle
from invsat.model import Column, Problem, assignment_from_string, flip_column, free_count
from invsat.pathsem import (CapacityError, PathSet, answer_set, answers_of, assignment_at,
                            intersection, leaf_index, membership, merge_adjacent, paths_of,
                            reverse_flip, union)

from conftest import brute_cube, column_pairs, columns, problems

PAPER_STRINGS = {
    "FUTT": "0000 0000 1000 1000",
    "UTUU": "1111 0000 1111 0000",
    "TFFT": "0000 0010 0000 0000",
    "UFUF": "0000 0101 0000 0101",
}


@pytest.mark.parametrize("a,pos", [("FTTT", 8), ("FFTT", 12), ("TTTT", 0), ("FFFF", 15)])
def test_leaf_index(a, pos):
    assignment = assignment_from_string(a)
    assert leaf_index(assignment) == pos
    assert assignment_at(pos, 4) == assignment


def test_leaf_index_bijection():
    for v in range(1, 7):
        seen = [leaf_index(assignment_at(p, v)) for p in range(2 ** v)]
        assert seen == list(range(2 ** v))


def test_tree_order_matches_product_order():
    # T branch first, first variable at the root
    order = list(itertools.product((True, False), repeat=4))
    assert [assignment_at(p, 4) for p in range(16)] == order


@pytest.mark.parametrize("pos", [-1, 16])
def test_assignment_at_out_of_range(pos):
    with pytest.raises(ValueError):
        assignment_at(pos, 4)


@pytest.mark.parametrize("col,bits", list(PAPER_STRINGS.items()) + [("UUUU", "1111 1111 1111 1111")])
def test_paths_of_paper_strings(col, bits):
    assert str(paths_of(Column.parse(col))) == bits


def test_paths_of_capacity():
    with pytest.raises(CapacityError):
        paths_of(Column.all_free(5), max_vars=4)


def test_union_paper(paper_problem):
    sets = [paths_of(c) for c in paper_problem]
    assert str(union(sets)) == "1111 0111 1111 1101"
    assert membership(paper_problem) == union(sets)


def test_union_identity_and_idempotence():
    s = paths_of(Column.parse("FUTT"))
    assert union([s, PathSet.empty(4)]) == s
    assert union([s, s]) == s
    assert union([], var_count=3) == PathSet.empty(3)
    with pytest.raises(ValueError):
        union([])
    with pytest.raises(ValueError):
        union([s, PathSet.empty(3)])


def test_reverse_flip():
    rs = PathSet.from_string("1111 0111 1111 1101")
    assert str(reverse_flip(rs)) == "0100 0000 0001 0000"
    assert reverse_flip(PathSet.full(3)) == PathSet.empty(3)
    assert reverse_flip(reverse_flip(rs)) == rs


def test_answers_of_paper(paper_problem):
    assert str(answer_set(paper_problem)) == "0100 0000 0001 0000"
    assert answers_of(paper_problem) == [assignment_from_string("TTTF"),
                                         assignment_from_string("FTFF")]
    # 1-indexed "2nd and 12th position"
    assert answer_set(paper_problem).positions() == [1, 11]


def test_answers_of_edge_cases():
    assert answers_of(Problem.from_strings("UUUU")) == []
    assert answers_of(Problem(1)) == [(True,), (False,)]


@pytest.mark.parametrize("c1,c2,expected", [
    ("TTTT", "TTTF", "TTTU"),
    ("TT", "FF", None),
    ("TU", "TU", "TU"),
    ("TU", "TF", None),
    ("FTU", "TTU", "UTU"),
])
def test_merge_adjacent(c1, c2, expected):
    got = merge_adjacent(Column.parse(c1), Column.parse(c2))
    assert (None if got is None else str(got)) == expected


def test_from_string_rejects_bad_length():
    with pytest.raises(ValueError):
        PathSet.from_string("010")


@given(columns(max_vars=10))
def test_cardinality(col):
    assert paths_of(col).popcount() == 2 ** free_count(col)


@given(columns(max_vars=10))
def test_flip_reverse_duality(col):
    assert paths_of(flip_column(col)) == paths_of(col).reversed()


@given(columns(max_vars=8))
def test_paths_of_matches_enumeration(col):
    got = {assignment_at(p, col.var_count) for p in paths_of(col).positions()}
    assert got == brute_cube(col)


@given(column_pairs(max_vars=8))
def test_reverse_flip_maps_union_to_intersection(pair):
    a, b = (paths_of(c) for c in pair)
    assert reverse_flip(a | b) == intersection([reverse_flip(a), reverse_flip(b)])


@settings(max_examples=300)
@given(problems(max_vars=8, max_clauses=12))
def test_answers_match_oracle(p):
    assert answers_of(p) == list(oracle.enumerate_models(p).models)
    assert np.array_equal(answer_set(p).bits, oracle.truth_vector(p))


@given(column_pairs(max_vars=8))
def test_merge_soundness(pair):
    c1, c2 = pair
    m = merge_adjacent(c1, c2)
    if m is not None:
        assert paths_of(m) == paths_of(c1) | paths_of(c2)
