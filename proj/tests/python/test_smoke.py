import pytest

import digigap


def test_cell_model():
    e = digigap.cell_from([2, 0, -1], [0, -1, 0])
    assert e.coords == [4, -1, -2]
    assert e.dimension == 2
    assert len(digigap.faces_of(digigap.Cell([0, 0, 0]), 0)) == 8
    assert digigap.const_i_from_j(0, 1, 3) == 6
    with pytest.raises(ValueError):
        digigap.cell_from([0, 0], [0, 0, 0])


def test_census_and_gaps():
    tandem = digigap.DigitalObject(3, [[0, 0, 0], [1, 1, 0]])
    cc = digigap.census(tandem)
    assert [cc.c(i) for i in range(4)] == [14, 23, 12, 2]
    assert digigap.g1_closed_form(cc) == 1
    assert [h.coords for h in digigap.detect_hubs(tandem, 1)] == [[1, 1, 0]]
    assert digigap.csi_identity_check(tandem) == (46, 46, True)


def test_duplicates():
    with pytest.raises(ValueError):
        digigap.DigitalObject(3, [[0, 0, 0], [0, 0, 0]])
    d = digigap.DigitalObject(3, [[0, 0, 0], [0, 0, 0]], strict=False)
    assert len(d) == 1 and d.duplicates_dropped == 1


def test_generated_curve_theorem():
    for seed in range(20):
        d = digigap.generate_curve(2 + seed, seed)
        assert digigap.validate_curve(d).is_valid
        g0 = len(digigap.detect_hubs(d, 0))
        assert digigap.g0_closed_form(digigap.census(d)) == g0
        table = digigap.run_identity_suite(d)
        assert table.all_pass()


def test_negative_control():
    cube = digigap.DigitalObject(3, [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    assert digigap.g0_closed_form(digigap.census(cube)) == 1
    assert digigap.detect_hubs(cube, 0) == []
    check = digigap.validate_curve(cube, 0)
    assert not check.is_valid
    assert check.violations[0][1] == "degree_over_two"
