"""Smoke tests for the python bindings."""

import pytest

import cantorsum as cs


def test_digits():
    assert cs.expand_rational("3/2", 2, 4) == [1, 1, 0, 0, 0]
    assert cs.expand_rational("5/3", 2, 5) == [1, 1, 0, 1, 0, 1]
    assert cs.random_stream(7, 5, 10) == cs.random_stream(7, 5, 10)
    assert cs.digit_prefix_sums([1, 1, 0, 1]) == [1, 2, 2, 3]
    with pytest.raises(ValueError):
        cs.expand_rational("2/2", 2, 4)


def test_table_and_oracle():
    t = cs.build_table(2, alpha="3/2", n=4)
    assert t.x == [1, 3, 6, 12, 24]
    assert t.s == [1, 4, 10, 22, 46]
    assert t.delta == [1, 2, 2, 2, 2]
    ok, first_fail = cs.verify_delta_identity(t)
    assert ok and first_fail == -1
    assert cs.floor_power_oracle("5/3", 2, 3) == 13
    big = cs.build_table(10, seed=3, n=200)
    assert all(
        big.x[k + 1] == 10 * big.x[k] + big.digits[k + 1] for k in range(200)
    )
    assert cs.complement_in_prefix([1], 3) == [0, 2, 3]


def test_intset():
    s = cs.fs_bitmap([1, 3, 6, 12], 22)
    assert s.count() == 16
    assert s.test(21) and not s.test(2)
    assert s.members()[:4] == [0, 1, 3, 4]
    assert s.gaps()[0] == (1, 3)
    assert s.density(22) == "16/23"
    total = cs.sumset(s, s, 22)
    assert total.count() == 23
    scaled = cs.scaled_sumset(s, 1, 22)
    assert scaled == total
    rep = cs.piecewise_shift_invariant(cs.fs_bitmap([1, 3, 9], 13))
    assert rep["pass"] is True


def test_ruler_and_vdw():
    assert cs.ruler_sequence(8) == [1, 2, 1, 3, 1, 2, 1, 4]
    ok, indices = cs.gap_index_correspondence(2)
    assert ok and indices == [1, 2, 1]
    cert = cs.vdw_search(2, 3)
    assert cert["W"] == 9 and cert["verified"] is True
    assert cs.inverse_vdw(2, 9) == (3, False)
    assert cs.longest_ap([1, 3, 5, 8]) == (1, 2, 3)
    ext = cs.lemma23_extract(list(range(27)), 1)
    assert ext["ap"]["length"] == 27


def test_theorems():
    cover = cs.verify_doubling_cover(alpha="5/3", n=12)
    assert cover["pass"] is True
    t = cs.build_table(2, alpha="3/2", n=3)
    w = cs.witness_decompose("11", t)
    assert (w["u"], w["v"]) == ("10", "1")
    rep = cs.ap_content(3, alpha="3/2", n=50)
    assert rep["m"] == 50
    assert rep["extraction"]["ap"]["length"] == 50
    dens = cs.density_report(2, alpha="5/3", N=100000)
    assert dens["predicted_base"] == "3/5"
    ym = cs.y_membership(cs.build_table(3, alpha="3/2", n=3), 3, 200)
    assert ym["pass"] is True


def test_prefixes():
    assert cs.construct_generators("P3", 9) == [1, 2, 4, 9]
    assert cs.construct_generators("P4", 16, 14) == [1, 2, 4, 7, 16]
    assert cs.check_prefix_condition(4)
    assert not cs.check_prefix_condition(3)
    assert cs.superincreasing([1, 3, 9]) == (True, 0)
    rec = cs.recover_generators(cs.fs_bitmap([1, 3, 9], 13))
    assert rec["B"] == [1, 3, 9] and rec["validated"] is True
    conv = cs.verify_converse([1, 3, 9, 27], 40)
    assert conv["pass"] is True
