import json
import random
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opdet.limits import ParseError, SizeError
from opdet.matrix import (
    ExactMatrix,
    det_bareiss,
    det_cofactor,
    det_leibniz,
    perm_brute,
    perm_ryser,
    perm_ryser_direct,
)

DETS = [det_leibniz, det_cofactor, det_bareiss]


def inversion_parity_det(rows):
    """Independent oracle: plain Leibniz with the sign from inversion count."""
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        total += (-1) ** inv * prod(rows[i][p[i]] for i in range(n))
    return total


def matrices(max_n=6, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


@pytest.mark.parametrize("det", DETS)
@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 1]], 1),
        ([[2, 3], [5, 7]], 2 * 7 - 3 * 5),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 0),
        ([[5]], 5),
    ],
)
def test_det_examples(det, rows, expected):
    assert det(ExactMatrix(rows)) == expected


def test_bareiss_rank_one():
    assert det_bareiss(ExactMatrix.ones(6)) == 0


def test_bareiss_needs_pivot_swap():
    A = ExactMatrix([[0, 1, 2], [3, 0, 4], [5, 6, 0]])
    assert det_bareiss(A) == inversion_parity_det(A.rows()) == 56


@pytest.mark.parametrize("perm", [perm_brute, perm_ryser, perm_ryser_direct])
@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 1]], 1),
        ([[1, 1], [1, 1]], 2),
        ([[2, 3], [5, 7]], 2 * 7 + 3 * 5),
        ([[1] * 4] * 4, factorial(4)),
    ],
)
def test_perm_examples(perm, rows, expected):
    assert perm(ExactMatrix(rows)) == expected


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_dets_agree_with_inversion_oracle(rows):
    A = ExactMatrix(rows)
    want = inversion_parity_det(rows)
    assert det_leibniz(A) == det_cofactor(A) == det_bareiss(A) == want


@settings(max_examples=100, deadline=None)
@given(matrices(max_n=7))
def test_ryser_matches_brute(rows):
    A = ExactMatrix(rows)
    assert perm_ryser(A) == perm_brute(A) == perm_ryser_direct(A)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_row_swap_negates(rows, data):
    n = len(rows)
    if n < 2:
        return
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda x: x != i))
    A = ExactMatrix(rows)
    B = A.swap_rows(i, j)
    for det in DETS:
        assert det(B) == -det(A)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_equal_rows_give_zero(rows, data):
    n = len(rows)
    if n < 2:
        return
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda x: x != i))
    rows = [list(r) for r in rows]
    rows[j] = list(rows[i])
    for det in DETS:
        assert det(ExactMatrix(rows)) == 0


def test_big_entries_stay_exact():
    big = 10**40
    A = ExactMatrix([[big, 1], [1, big]])
    want = big * big - 1
    assert det_leibniz(A) == det_cofactor(A) == det_bareiss(A) == want


def test_size_caps():
    A = ExactMatrix.ones(11)
    for fn in (det_leibniz, det_cofactor, perm_brute):
        with pytest.raises(SizeError):
            fn(A)
    assert det_bareiss(A) == 0
    assert perm_ryser(A) == factorial(11)
    with pytest.raises(SizeError):
        perm_ryser(ExactMatrix.ones(3), cap=2)


def test_env_var_overrides_caps(monkeypatch):
    monkeypatch.setenv("OPDET_MAX_N", "3")
    with pytest.raises(SizeError):
        det_leibniz(ExactMatrix.identity(4))
    assert det_leibniz(ExactMatrix.identity(3)) == 1


def test_constructor_rejects_bad_shapes():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        ExactMatrix([])
    with pytest.raises(TypeError):
        ExactMatrix([[1.5]])


def test_text_roundtrip():
    A = ExactMatrix([[2, -3], [5, 10**30]])
    assert ExactMatrix.from_text(A.to_text()) == A
    assert ExactMatrix.parse("2\n2 3\n5 7\n") == ExactMatrix([[2, 3], [5, 7]])


def test_json_roundtrip_and_strings():
    A = ExactMatrix([[1, 2**60], [-(2**60), 4]])
    obj = json.loads(A.to_json())
    assert obj["schema"] == 1
    assert obj["entries"][0][1] == str(2**60)
    assert ExactMatrix.from_json(A.to_json()) == A
    assert ExactMatrix.parse('{"n": 2, "entries": [["2", 3], [5, "7"]]}') == ExactMatrix(
        [[2, 3], [5, 7]]
    )


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n1 2\n",
        "2\n1 2\n3\n",
        "2\n1 x\n3 4\n",
        "1 2\n1 2\n",
        '{"n": 2, "entries": [[1, 2]]}',
        '{"n": 2, "entries": [[1, 2], [3]]}',
        '{"n": 1, "entries": [[true]]}',
        '{"entries": [[1]]}',
        "{bad json",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        ExactMatrix.parse(text)


def test_random_is_seeded():
    a = ExactMatrix.random(4, random.Random(3))
    b = ExactMatrix.random(4, random.Random(3))
    assert a == b
    assert all(-9 <= x <= 9 for row in a for x in row)
