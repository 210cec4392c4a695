import pytest
from conftest import complexes
from hypothesis import given, settings

from nerverep.collapse import verify_collapse
from nerverep.configspace import config_space, verify_symmetric_cycle
from nerverep.geometry import realizes
from nerverep.fixtures import load
from nerverep.report import report
from nerverep.representability import AsteroidalTriple, verify_asteroidal_map, verify_intervals


def test_fig2_rows(fig2):
    R = report(fig2, 3)
    assert [R.row(d).representable.value for d in (1, 2, 3)] == [False, True, True]
    assert R.dual_dim == 1 and R.bound == 3
    assert realizes(fig2, R.bound_realization)
    one = R.row(1)
    assert one.matousek.holds is False
    assert isinstance(one.representable.certificate("obstruction"), AsteroidalTriple)
    assert realizes(fig2, R.row(2).representable.certificate("realization"))


def test_spider_row(spider):
    row = report(spider, 1).row(1)
    rep = row.representable
    assert rep.value is False
    assert verify_asteroidal_map(spider, rep.certificate("asteroidal_map"))
    assert verify_symmetric_cycle(config_space(spider), rep.certificate("symmetric_cycle"))
    assert row.collapsible.collapsible and verify_collapse(spider, row.collapsible.sequence)


def test_delta2_row(delta2):
    row = report(delta2, 1).row(1)
    assert row.representable.value is True
    assert verify_intervals(delta2, row.representable.certificate("intervals"))


def test_mobius_report(mobius):
    R = report(mobius, 2)
    assert R.dual_dim == 4 and R.bound == 9
    assert R.row(1).representable.value is False
    assert R.row(2).leray is True
    assert R.row(2).collapsible.collapsible


def test_d_max_validation(fig2):
    with pytest.raises(ValueError):
        report(fig2, 0)


def test_vkf_report_d2():
    R = report(load("vkf1"), 2)
    assert R.row(2).representable.value is False
    assert R.row(2).representable.certificate("kuratowski").kind == "K5"
    assert R.row(1).representable.value is False


@settings(max_examples=25)
@given(complexes(max_vertices=5, max_faces=4))
def test_report_is_consistent(K):
    R = report(K, 3)
    prev_rep = prev_mat = None
    for row in R.rows:
        rep, mat = row.representable.value, row.matousek.holds
        if rep:
            assert mat is True
            assert row.leray is True
            assert row.collapsible.collapsible is True
        if prev_rep:
            assert rep is True
        if prev_mat:
            assert mat is not False
        prev_rep, prev_mat = rep, mat
