import numpy as np
import pytest

from unitgroups import verify
from unitgroups.verify import (CORPUS, DESK_CHECKS, TABLE_ROWS, CheckResult, _timed,
                               check_characteristics, check_dihedral_properties, check_gl,
                               check_group_algebra_d12_d4, check_indecomposability_mod_j2,
                               check_one_plus_2t, check_table_row, check_z4_chain,
                               radical_corpus_check, unit_center, verify_props, verify_table)
from unitgroups.dsl import evaluate


def test_check_result_line():
    assert CheckResult("x", True, "fine").line() == "PASS  x  (fine)"
    assert CheckResult("y", False).line() == "FAIL  y"


def test_crash_is_a_failure():
    r = _timed("boom", lambda: 1 / 0)
    assert not r.ok and "ZeroDivisionError" in r.detail


def test_table_shape():
    assert len(TABLE_ROWS) == 17
    assert {c for c, _, _ in TABLE_ROWS} == {2, 3, 4, 6, 8, 12}
    results = verify_table()
    assert len(results) == 22 and all(r.ok for r in results)


@pytest.mark.parametrize("c,n,text", [(2, 4, "M(2, GF(2))"), (3, 6, "GF(3)"), (4, 2, "Z(8)")])
def test_table_row_negative_controls(c, n, text):
    assert not check_table_row(c, n, text).ok


def test_table_row_examples():
    assert check_table_row(3, 6, "UT(2, GF(3))").ok
    assert check_table_row(8, 2, "Z(8)").ok


def test_corpus_contents():
    assert len(CORPUS) >= 20
    assert set(text for _, _, text in TABLE_ROWS) <= set(CORPUS)
    for needed in ("GA(GF(2), D(4))", "GA(GF(2), D(6))", "GA(GF(2), D(12))", "PQ(Z(4), [1, 0, 0, 0, 1])"):
        assert needed in CORPUS


@pytest.mark.parametrize("text", ["Z(12)", "GA(GF(2), D(4))", "UT(3, GF(2))", "PQ(GF(3), [0, 0, 1])"])
def test_radical_corpus_check_small(text):
    r = radical_corpus_check(text)
    assert r.ok, r.detail


def test_dihedral_properties():
    ok, detail = check_dihedral_properties(8)
    assert ok, detail


def test_characteristics():
    assert check_characteristics()[0]
    assert [c for c in range(2, 25) if verify._embeds_in_dihedral_center(c)] == [2, 3, 4, 6, 8, 12]


def test_indecomposability_small():
    assert check_indecomposability_mod_j2(corpus=("GA(GF(2), D(6))", "Z(12)", "Z(8)", "GF(2) x GF(3)"))[0]


def test_group_algebra_checks():
    assert check_group_algebra_d12_d4()[0]
    assert check_one_plus_2t()[0]
    assert check_z4_chain()[0]


def test_gl_checks():
    assert check_gl(np.random.default_rng(0))[0]
    assert len(unit_center(evaluate("M(2, GF(2))"))) == 1


def test_desk_check_keys_unique():
    keys = [c.key for c in DESK_CHECKS]
    assert len(keys) == len(set(keys)) == 12


def test_verify_props_subset():
    results = verify_props(seed=3, only={"gl", "quaternion"})
    assert [r.name.split()[0] for r in results] == ["gl", "quaternion"]
    assert all(r.ok for r in results)
    with pytest.raises(KeyError):
        verify_props(only={"nope"})


def test_un_oracle_uses_census():
    assert verify.un_oracle(3, 4).factors == (2, 3, 9)
