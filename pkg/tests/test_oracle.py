from itertools import product

import pytest

from orientseq import counting
from orientseq.oracle import (
    MAX_NOS_3_3,
    NEGATIVE_ORIENTABLE,
    ORIENTABLE,
    SearchCapExceeded,
    exhaustive_count,
    exhaustive_max,
)
from orientseq.verify import is_negative_orientable, is_orientable


def unpruned_max(q, n, neg, maxlen):
    """Longest ring found by trying every sequence of each length."""
    best = 0
    for m in range(1, maxlen + 1):
        for s in product(range(q), repeat=m):
            ws = [tuple(s[(i + j) % m] for j in range(n)) for i in range(m)]
            seen = set(ws)
            if len(seen) != m:
                continue
            if neg:
                bad = any(tuple((-x) % q for x in reversed(w)) in seen for w in ws)
            else:
                bad = any(w[::-1] in seen for w in ws)
            if not bad:
                best = m
                break
    return best


@pytest.mark.parametrize("q, n, prop, expected", [
    (3, 2, NEGATIVE_ORIENTABLE, 3),
    (3, 2, ORIENTABLE, 3),
    (4, 2, NEGATIVE_ORIENTABLE, 5),
    (4, 2, ORIENTABLE, 4),
    (5, 2, NEGATIVE_ORIENTABLE, 10),
    (5, 2, ORIENTABLE, 10),
    (3, 3, ORIENTABLE, 9),
    (2, 5, ORIENTABLE, 6),
    (2, 6, ORIENTABLE, 16),
    (2, 4, NEGATIVE_ORIENTABLE, 0),
])
def test_exhaustive_max(q, n, prop, expected):
    res = exhaustive_max(q, n, prop)
    assert res.max_period == expected
    if expected:
        verify = is_orientable if prop == ORIENTABLE else is_negative_orientable
        assert verify(res.witness, n)
        assert res.witness.period == expected
    else:
        assert res.witness is None


def test_recorded_nos_3_3():
    res = exhaustive_max(3, 3, NEGATIVE_ORIENTABLE)
    assert res.max_period == MAX_NOS_3_3 == 10
    assert counting.nos_bound(3, 3) == 11
    assert is_negative_orientable(res.witness, 3)


@pytest.mark.parametrize("q, n, neg, maxlen", [
    (3, 2, True, 5),
    (4, 2, True, 7),
    (4, 2, False, 7),
    (2, 5, False, 12),
    (3, 3, False, 10),
])
def test_pruned_search_matches_unpruned(q, n, neg, maxlen):
    prop = NEGATIVE_ORIENTABLE if neg else ORIENTABLE
    assert exhaustive_max(q, n, prop).max_period == unpruned_max(q, n, neg, maxlen)


def test_unpruned_confirms_bound_11_not_attained():
    assert unpruned_max(3, 3, True, 11) == MAX_NOS_3_3


@pytest.mark.parametrize("q, n", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_search_respects_bounds(q, n):
    assert exhaustive_max(q, n, NEGATIVE_ORIENTABLE).max_period <= counting.nos_bound(q, n)
    if q >= 3 and n == 2:
        assert exhaustive_max(q, n, ORIENTABLE).max_period == counting.os2_max_period(q)


def test_cap():
    with pytest.raises(SearchCapExceeded):
        exhaustive_max(3, 6, ORIENTABLE)
    with pytest.raises(SearchCapExceeded):
        exhaustive_count(5, 3, "negasymmetric", cap=100)
    with pytest.raises(ValueError):
        exhaustive_max(3, 2, "palindromic")


def test_exhaustive_count_examples():
    assert exhaustive_count(4, 3, "negasymmetric") == 8
    assert exhaustive_count(3, 3, "pseudoweight", 4.5) == 7
    assert exhaustive_count(4, 3, "zerofree_weight", 6) == 7
    with pytest.raises(ValueError):
        exhaustive_count(3, 2, "odd")
