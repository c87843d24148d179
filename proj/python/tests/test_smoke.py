import fractions

import pytest

import geomlie


def test_type_info():
    assert geomlie.type_info("E8") == {"name": "E8", "rank": 8, "coxeter_number": 30, "root_count": 240}
    assert len(geomlie.standard_types()) == 17
    with pytest.raises(geomlie.TypeLabelError):
        geomlie.type_info("D2")
    with pytest.raises(ValueError):
        geomlie.type_info("X3")


def test_matrices():
    assert geomlie.seifert_matrix("A2") == [[1, -1], [0, 1]]
    assert geomlie.cartan_matrix("A2") == [[2, -1], [-1, 2]]
    assert geomlie.pairing("A2", [1, 0], [0, 1]) == -1
    assert geomlie.monodromy_matrix("E6", "projective")[0] == [1, 1, 0, 0, 1, 1]
    assert geomlie.monodromy_matrix("A1") == [[1]]


def test_roots_and_orbits():
    assert len(geomlie.roots("E6")) == 72
    assert geomlie.roots("A1") == [[-1], [1]]
    assert geomlie.reflect("A2", [1, 0], [0, 1]) == [1, 1]
    e7 = geomlie.orbits("E7", "rhobar")
    assert len(e7["orbits"]) == 7
    a5 = geomlie.orbits("A5")
    assert a5["free"] is False
    assert sorted(len(o) for o in a5["orbits"]) == [3, 3, 6, 6, 6, 6]


def test_fold():
    assert geomlie.fold("D4:G2") == [[2, -3], [-1, 2]]
    with pytest.raises(geomlie.FoldingError):
        geomlie.fold("E7:F4")


def test_lie_algebra():
    assert geomlie.lie_dimension("E8") == 248
    assert geomlie.jacobi_violations("D5") == 0
    assert geomlie.killing_form("A1") == [[8, 0, 0], [0, 0, -4], [0, -4, 0]]
    assert geomlie.killing_nondegenerate("E6")
    assert geomlie.n_sign("A2", [1, 0], [0, 1]) == 1
    assert geomlie.sl2_verified("E7", geomlie.roots("E7")[5])
    assert geomlie.slk_model_check(4)
    doc = geomlie.structure_constants("A2")
    assert doc["dimension"] == 8
    assert geomlie.structure_constants_roundtrip(doc) == doc


def test_wheel():
    assert geomlie.segment_class("A5", 2, 4) == [0, 1, 1, 0, 0]
    with pytest.raises(geomlie.SegmentError):
        geomlie.segment_class("D5", 2, -2)
    assert len(geomlie.segment_classes("D5")["classes"]) == 40
    assert geomlie.rotation_angle("E6") == fractions.Fraction(7, 6)
    a = geomlie.segment_class("D4", 1, 2)
    b = geomlie.segment_class("D4", 2, 3)
    assert geomlie.d_geometric_sign("D4", a, b) == 1


def test_coxeter_plane():
    assert len(geomlie.project_roots("E8")) == 240
    assert geomlie.equivariance_residual("E8") < 1e-9
    assert geomlie.projection_injective("E7")
    assert not geomlie.projection_injective("E6")
    svg = geomlie.render_svg("A2", size=100)
    assert svg.startswith("<?xml") and svg.count("<circle") == 6


def test_verify():
    report = geomlie.verify(["A2", "E6"])
    assert report["pass"] is True
    assert not geomlie.verify(["A5"])["pass"]
