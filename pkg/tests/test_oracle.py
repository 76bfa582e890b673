import pytest
from hypothesis import given, strategies as st

from invsat import oracle
from invsat.model import Column, Problem, assignment_from_string
from invsat.solver import verify_model

from conftest import problems


def A(s):
    return assignment_from_string(s)


def test_evaluate(paper_problem):
    assert oracle.evaluate(paper_problem, A("FTFF"))
    assert oracle.evaluate(paper_problem, A("TTTF"))
    assert not oracle.evaluate(paper_problem, A("TFTT"))
    assert not oracle.evaluate(Problem.from_strings("UU"), A("TF"))
    assert oracle.evaluate(Problem(3), A("FFF"))
    with pytest.raises(ValueError):
        oracle.evaluate(paper_problem, A("TT"))


def test_enumerate_models(paper_problem):
    assert oracle.enumerate_models(paper_problem).models == (A("TTTF"), A("FTFF"))
    assert oracle.enumerate_models(Problem.from_strings("T")).models == (A("T"),)
    assert oracle.enumerate_models(Problem.from_strings("T", "F")).models == ()


@pytest.mark.parametrize("p,decision,count", [
    (Problem.from_strings("FUTT", "UTUU", "TFFT", "UFUF"), True, 2),
    (Problem(2), True, 4),
    (Problem.from_strings("T", "F"), False, 0),
])
def test_decide_and_count(p, decision, count):
    assert oracle.decide(p) is decision
    assert oracle.count_models(p) == count


def test_capacity():
    with pytest.raises(oracle.OracleCapacityError):
        oracle.decide(Problem(5), max_vars=4)


def test_blocked_enumeration_spans_blocks():
    # 2**16 rows crosses the internal block size
    p = Problem(16, (Column.parse("T" + "U" * 15),))
    assert oracle.count_models(p) == 2 ** 15
    assert oracle.truth_vector(p).sum() == 2 ** 15


@given(problems(max_vars=7))
def test_models_are_sorted_unique_and_valid(p):
    models = oracle.enumerate_models(p).models
    assert len(set(models)) == len(models)
    # tree order puts TRUE first, i.e. descending tuple order
    assert list(models) == sorted(models, reverse=True)
    assert all(oracle.evaluate(p, m) for m in models)
    assert oracle.count_models(p) == len(models)
    assert oracle.decide(p) == bool(models)


@given(problems(max_vars=6), st.data())
def test_evaluate_matches_verify_model(p, data):
    m = tuple(data.draw(st.lists(st.booleans(), min_size=p.var_count, max_size=p.var_count)))
    assert oracle.evaluate(p, m) == verify_model(p, m)
