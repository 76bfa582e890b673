import pytest
from hypothesis import given, strategies as st

from invsat.model import (Cell, Column, Problem, Tautology, assignment_from_string, column_from_literals,
                          complete, flip_column, free_count, path_count)

from conftest import columns


def test_cell_alphabet_is_closed():
    assert [c.value for c in Cell] == ["T", "F", "U"]
    with pytest.raises(ValueError):
        Cell("X")


@pytest.mark.parametrize("lits,v,expected", [
    ([(1, False), (3, True), (4, True)], 4, "FUTT"),
    ([], 3, "UUU"),
    ([(2, True)], 4, "UTUU"),
    ([(2, True), (2, True), (1, False)], 3, "FTU"),
])
def test_column_from_literals(lits, v, expected):
    assert str(column_from_literals(lits, v)) == expected


def test_column_from_literals_tautology():
    with pytest.raises(Tautology) as exc:
        column_from_literals([(1, True), (2, True), (1, False)], 3)
    assert exc.value.var == 1


@pytest.mark.parametrize("var", [0, 5, -1])
def test_column_from_literals_out_of_range(var):
    with pytest.raises(ValueError):
        column_from_literals([(var, True)], 4)


def test_column_roundtrip_and_indexing():
    col = Column.parse("[F,U,T,T]")
    assert col.cells == (Cell.F, Cell.U, Cell.T, Cell.T)
    assert col[0] is Cell.F and col[3] is Cell.T
    assert col.literals() == [-1, 3, 4]
    assert len(col) == 4
    with pytest.raises(IndexError):
        col[4]


def test_column_rejects_overlapping_masks():
    with pytest.raises(ValueError):
        Column(2, 0b01, 0b01)
    with pytest.raises(ValueError):
        Column(2, 0b100, 0)


@pytest.mark.parametrize("col,expected", [("FUTT", "TUFF"), ("UUUU", "UUUU"), ("TFU", "FTU")])
def test_flip_column(col, expected):
    assert str(flip_column(Column.parse(col))) == expected


@pytest.mark.parametrize("col,q", [("FUTT", 1), ("UUUU", 4), ("TFTF", 0)])
def test_free_and_path_count(col, q):
    c = Column.parse(col)
    assert free_count(c) == q
    assert path_count(c) == 2 ** q


@pytest.mark.parametrize("cube,fill,expected", [
    ("TTTF", True, "TTTF"),
    ("UTUF", True, "TTTF"),
    ("U", False, "F"),
    ("UFU", False, "FFF"),
])
def test_complete(cube, fill, expected):
    assert complete(Column.parse(cube), fill) == assignment_from_string(expected)


@given(columns())
def test_flip_is_involution(col):
    assert flip_column(flip_column(col)) == col
    assert free_count(flip_column(col)) == free_count(col)


@given(columns(), st.booleans())
def test_complete_agrees_on_assigned_cells(col, fill):
    a = complete(col, fill)
    assert len(a) == col.var_count
    for cell, value in zip(col.cells, a):
        if cell is Cell.T:
            assert value is True
        elif cell is Cell.F:
            assert value is False
        else:
            assert value is fill


def test_problem_shape_checks():
    p = Problem.from_strings("FUTT", "UTUU")
    assert (p.var_count, p.clause_count, p.input_size) == (4, 2, 8)
    with pytest.raises(ValueError):
        Problem(3, (Column.parse("TT"),))
    with pytest.raises(ValueError):
        Problem(0)
    assert Problem(2).clause_count == 0
