import pytest
from hypothesis import given, settings, strategies as st

from orientseq import counting
from orientseq.construct import ConstructionError, nos_construction2, nos_construction3
from orientseq.core import RingSequence
from orientseq.lempel import (
    NOS,
    OS,
    additive_order,
    build_os3,
    build_os_n,
    d_beta,
    delete_from_uniform_run,
    extend_run,
    extend_run_Ea,
    find_unit_adjustment,
    inverse_lift,
    make_unit_weight,
    maximal_run_starts,
    predicted_tower_period,
    recursive_tower,
    zero_free_tower,
)
from orientseq.verify import is_good, is_negative_orientable, is_orientable

from conftest import ring

OS34_PRINTED = "001112020122000121201122201012"
OS44_PRINTED = (
    "001312001130001212312330201330023330101201"
    "223130223312223030130112023112201112323023"
)
S43 = "0122120102100113111211"
S43_TRIMMED = "012212010210011311211"


def test_d_beta():
    assert d_beta(ring("012020121201", 3)) == ring("111211121112", 3)
    assert d_beta(ring("0000", 5)).symbols == (0, 0, 0, 0)
    assert d_beta(ring("012", 3), 2) == ring("222", 3)
    with pytest.raises(ValueError):
        d_beta(ring("012", 4), 2)


def test_additive_order():
    assert additive_order(2, 3) == 3
    assert additive_order(2, 4) == 2
    assert additive_order(3, 4) == 4
    assert additive_order(0, 5) == 1


@pytest.mark.parametrize("inp, q, out", [
    ("011", 3, "001220112"),
    ("1112", 3, "012020121201"),
    ("12", 4, "01302312"),
    ("0100112111", 3, OS34_PRINTED),
    (S43_TRIMMED, 4, OS44_PRINTED),
])
def test_lift_reproduces_printed(inp, q, out):
    lift = inverse_lift(ring(inp, q))
    assert lift.sequence == ring(out, q)


def test_lift_of_110_is_rotation():
    lift = inverse_lift(ring("110", 3), order=2)
    assert lift.period == 9 and lift.order == 3
    assert lift.sequence.is_rotation_of(ring("001220112", 3))


def test_printed_lifts_are_orientable():
    assert is_orientable(ring(OS34_PRINTED, 3), 4)
    assert is_orientable(ring(OS44_PRINTED, 4), 4)


def test_lift_rejects_non_nos():
    with pytest.raises(ValueError):
        inverse_lift(ring("12", 3), order=2)


def test_lift_non_unit_weight_period():
    s = ring("1113112212", 4)  # weight 15 = 3 mod 4
    assert inverse_lift(s).period == 40
    s = ring("112", 4)  # weight 0
    lift = inverse_lift(s)
    assert lift.order == 1 and lift.period == 3


@st.composite
def nos_seeds(draw):
    q = draw(st.integers(3, 6))
    n = draw(st.integers(2, 4))
    gen = draw(st.sampled_from([nos_construction2, nos_construction3]))
    seq, _ = gen(q, n)
    return seq, n


@settings(max_examples=30, deadline=None)
@given(nos_seeds(), st.integers(0, 5), st.sampled_from([1, 5]))
def test_roundtrip(seed, start, beta):
    seq, n = seed
    if not counting.is_unit(beta, seq.q):
        beta = 1
    lift = inverse_lift(seq, start=start, beta=beta)
    assert lift.period == lift.order * seq.period
    assert d_beta(lift.sequence, beta).symbols == seq.symbols * lift.order
    if lift.order == seq.q:
        assert is_orientable(lift.sequence, n + 1)


def test_find_unit_adjustment():
    assert find_unit_adjustment(4, 0) == [1]
    assert find_unit_adjustment(6, 4) == [1, 2]
    assert find_unit_adjustment(6, 0) == [1]
    assert find_unit_adjustment(6, 3) == [2]
    assert find_unit_adjustment(5, 3) == []
    assert find_unit_adjustment(9, 3) == [1]
    with pytest.raises(ValueError):
        find_unit_adjustment(2, 0)


@pytest.mark.parametrize("q", range(3, 13))
def test_adjustment_always_reaches_unit(q):
    for w in range(q):
        d = find_unit_adjustment(q, w)
        assert counting.is_unit(w - sum(d), q)
        assert all(1 <= i < q / 2 for i in d)


def test_delete_from_uniform_run():
    out = delete_from_uniform_run(ring(S43, 4), 1, 3)
    assert out == ring(S43_TRIMMED, 4)
    assert out.period == 21 and out.weight_mod_q() == 3
    assert delete_from_uniform_run(ring("112", 4), 1, 2) == ring("12", 4)
    with pytest.raises(ValueError, match="uniform tuple absent"):
        delete_from_uniform_run(ring("12", 4), 3, 2)
    with pytest.raises(ValueError, match="uniform tuple absent"):
        delete_from_uniform_run(ring("111", 4), 1, 2)


@pytest.mark.parametrize("q", range(3, 8))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_make_unit_weight_keeps_nos(q, n):
    seq, _ = nos_construction2(q, n)
    out, deleted = make_unit_weight(seq, n)
    assert counting.is_unit(out.weight_mod_q(), q)
    assert out.period == seq.period - len(deleted)
    assert (seq.weight_mod_q() - sum(deleted) - out.weight_mod_q()) % q == 0
    assert is_negative_orientable(out, n)


def test_extend_run():
    assert extend_run(ring("01302312", 4), 1) == ring("011302312", 4)
    assert extend_run_Ea(ring("10", 3), 0) == ring("100", 3)
    assert maximal_run_starts(ring("0110211", 3), 1) == [1, 5]
    with pytest.raises(ValueError):
        extend_run(ring("012", 4), 3)


def test_printed_e1_example_is_not_orientable():
    # the string printed for E_1(D^-1([1112])) has a palindromic window
    assert not is_orientable(ring("0120201212011", 3), 4)
    built = extend_run(ring("012020121201", 3), 1)
    assert built == ring("0112020121201", 3)
    assert is_orientable(built, 4)


def test_tower_from_1112():
    final, trace = recursive_tower(ring("1112", 3), 3, 6)
    assert trace.periods() == [4, 13, 40, 121]
    assert [(r.order, r.period, r.weight, r.parity) for r in trace.rows[:2]] == [
        (3, 4, 2, NOS), (4, 13, 1, OS)
    ]
    assert [r.parity for r in trace.rows] == [NOS, OS, NOS, OS]
    assert all(r.weight == 1 for r in trace.rows[1:])
    assert is_orientable(final, 6) and is_good(final, 6)
    assert final.period == predicted_tower_period(4, 3, 3)


def test_tower_from_12():
    final, trace = recursive_tower(ring("12", 4), 2, 3)
    assert final == ring("011302312", 4)
    assert trace.periods() == [2, 9]


def test_tower_rejects_bad_seeds():
    with pytest.raises(ValueError, match="unit-weight"):
        recursive_tower(ring("112", 4), 2, 3)
    with pytest.raises(ValueError):
        recursive_tower(ring("0110", 3), 2, 3)
    with pytest.raises(ValueError, match="not good"):
        recursive_tower(ring("001220112", 3), 3, 4)
    with pytest.raises(ValueError):
        recursive_tower(ring("1112", 3), 3, 2)


def test_tower_with_os_seed():
    final, trace = recursive_tower(ring("011302312", 4), 3, 5, parity=OS)
    assert [r.parity for r in trace.rows] == [OS, NOS, OS]
    assert is_orientable(final, 5)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
@pytest.mark.parametrize("seed_order", [2, 3])
def test_zero_free_tower_bounds(q, seed_order):
    m = counting.tower_seed_m2(q) if seed_order == 2 else counting.tower_seed_m3(q)
    final, trace = zero_free_tower(q, seed_order, seed_order + 2)
    for s, row in enumerate(trace.rows):
        assert row.period >= counting.tower_period(m, q, s)
    verify = is_orientable if trace.rows[-1].parity == OS else is_negative_orientable
    assert verify(final, seed_order + 2)
    for a, b in zip(trace.rows, trace.rows[1:]):
        assert b.period == q * a.period + 1
        assert a.parity != b.parity


def test_predicted_tower_period():
    assert predicted_tower_period(4, 3, 1) == 13
    assert predicted_tower_period(2, 4, 1) == 9
    with pytest.raises(ValueError):
        predicted_tower_period(0, 3, 1)


@pytest.mark.parametrize("q, period", [(3, 9), (4, 20), (5, 50), (6, 84), (7, 147)])
def test_build_os3(q, period):
    seq, rep = build_os3(q)
    assert seq.period == period
    assert seq.period >= counting.os3_lower_bound(q) == rep.lower_bound
    assert is_orientable(seq, 3)
    assert rep.bound is None


@pytest.mark.parametrize("q, n, period", [(3, 4, 30), (4, 4, 84), (5, 3, 50), (3, 5, 93)])
def test_build_os_n(q, n, period):
    seq, rep = build_os_n(q, n)
    assert seq.period == period >= counting.osn_lower_bound(q, n)
    assert is_orientable(seq, n)


def test_build_os_n_q3_n4_matches_printed_content():
    seq, _ = build_os_n(3, 4)
    assert seq.period == len(OS34_PRINTED)
    assert counting.osn_lower_bound(3, 4) == 27


# Upper bounds for OS_3(4) and OS_4(4) quoted from outside the package.
OS_BOUND_3_4 = 33
OS_BOUND_4_4 = 118


def test_lifted_periods_stay_under_quoted_bounds():
    assert build_os_n(3, 4)[0].period <= OS_BOUND_3_4
    assert build_os_n(4, 4)[0].period == OS_BOUND_4_4 - 34
