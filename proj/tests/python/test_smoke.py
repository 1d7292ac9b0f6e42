import pathlib

import pytest

import quiverhh

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"

TWO_CYCLE = """
vertices: 1 2
arrows: a: 1 -> 2, b: 2 -> 1
relations: a b, b a
"""


def test_loop_dimensions():
    alg = quiverhh.load(str(DATA / "loop.q"))
    assert [alg.hh_dim(n) for n in range(5)] == [2, 1, 1, 1, 1]
    assert [alg.formula_dim(n) for n in range(5)] == [2, 1, 1, 1, 1]
    char2 = quiverhh.load(str(DATA / "loop.q"), char=2)
    assert [char2.hh_dim(n) for n in range(5)] == [2, 2, 2, 2, 2]


def test_breakdown_sums_to_dimension():
    alg = quiverhh.parse(TWO_CYCLE)
    for n in range(5):
        assert sum(v for _, v in alg.breakdown(n)) == alg.formula_dim(n)


def test_cup_and_bracket_tables():
    alg = quiverhh.parse(TWO_CYCLE)
    assert alg.cohomology_basis(2) == [[("ab", "e_1", "1"), ("ba", "e_2", "1")]]
    assert alg.cup_table(2, 2) == [[["1"]]]
    assert alg.bracket_table(1, 2) == [[["-1"]]]


def test_witnesses():
    alg = quiverhh.parse(TWO_CYCLE)
    cup = alg.witness("cup", 4)
    assert cup["omega"] == "(ab, e_1)"
    assert cup["verified"]
    br = alg.witness("bracket", 4)
    assert (br["s1"], br["s2"], br["coefficient"]) == (1, 2, "-1")
    assert br["verified"]
    with pytest.raises(quiverhh.HypothesisError):
        quiverhh.parse(TWO_CYCLE, char=3).witness("bracket", 4)
    assert quiverhh.load(str(DATA / "a3.q")).witness("cup", 4) is None


def test_errors():
    with pytest.raises(quiverhh.ParseError, match="'c'"):
        quiverhh.parse("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a c\n")
    with pytest.raises(quiverhh.HypothesisError):
        quiverhh.load(str(DATA / "not_string.q"))


def test_selftest_and_emit():
    alg = quiverhh.parse(TWO_CYCLE)
    assert all(ok for _, ok, _ in alg.selftest(3))
    assert quiverhh.parse(alg.emit()).emit() == alg.emit()
