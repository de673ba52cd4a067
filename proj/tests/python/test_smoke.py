"""Smoke tests for the python bindings: one pass over every exposed surface."""

import math

import pytest

import tangnet as tn

INV_SQRT2 = 1.0 / math.sqrt(2.0)

FIG2_TEXT = """
system U { A:2, B:2 }
state psi = 0.70710678 |0,1> + (0-0.70710678i) |1,0>;
"""

GHZ4_TEXT = """
system U { q1:2, q2:2, q3:2, q4:2 }
state ghz = 0.70710678118654746 |0,0,0,0> + 0.70710678118654746 |1,1,1,1>;
"""


def bell_state():
    return tn.State([("A", 2), ("B", 2)], [INV_SQRT2, 0.0, 0.0, INV_SQRT2])


def test_state_roundtrip_and_entropy():
    bell = bell_state()
    assert bell.parties == [("A", 2), ("B", 2)]
    assert tn.entropy(bell, ["A"]) == pytest.approx(1.0, abs=1e-10)
    assert tn.mutual_info(bell, ["A"], ["B"]) == pytest.approx(2.0, abs=1e-10)
    assert tn.purity(bell, ["A"]) == pytest.approx(0.5, abs=1e-10)


def test_parse_state_and_schmidt():
    psi = tn.parse_state(FIG2_TEXT)
    coeffs = tn.schmidt_coefficients(psi, ["A"])
    assert coeffs == pytest.approx([INV_SQRT2, INV_SQRT2], abs=1e-10)
    assert "tangnet-spec v1" in tn.canonical_form(FIG2_TEXT)


def test_structure_and_classify():
    psi = tn.parse_state(FIG2_TEXT)
    structure = tn.structure_of(psi)
    assert len(structure["branches"]) == 2
    assert structure["branches"][1]["orientation"] == pytest.approx(90.0, abs=1e-9)

    cls = tn.classify(psi)
    assert cls["pairing"] == "asymmetric"

    enum = tn.enumerate_qubit_classes()
    assert enum["candidate_count"] == 8
    assert enum["distinct_count"] == len(enum["classes"])


def test_family_and_overlap():
    member = tn.family_state("asymmetric", 45.0, 270.0)
    psi = tn.parse_state(FIG2_TEXT)
    assert abs(member.overlap(psi)) >= 1.0 - 1e-12


def test_multiworld_report():
    ghz = tn.parse_state(GHZ4_TEXT)
    report = tn.multiworld_report(
        ghz, {"q1": "S1", "q2": "E1", "q3": "S2", "q4": "E2"}
    )
    assert report["I_total"] == pytest.approx(1.0, abs=1e-9)
    assert report["terms"]["I_S1E1:S2E2"] == pytest.approx(2.0, abs=1e-9)
    assert report["cases"]["conditionals_vanish"]


def test_conditional_mutual_info_default_empty():
    bell = bell_state()
    assert tn.conditional_mutual_info(bell, ["A"], ["B"]) == pytest.approx(
        2.0, abs=1e-10
    )


def test_demos():
    assert tn.slit_visibility(0.0) == pytest.approx(0.0, abs=1e-12)
    assert tn.slit_visibility(0.5) == pytest.approx(0.5, abs=1e-12)
    assert tn.rabi_entanglement(math.pi / 4) == pytest.approx(1.0, abs=1e-10)


def test_out_in_suite():
    summary = tn.out_in_suite(bell_state(), trials=50, seed=3)
    assert summary["worst_spectrum_distance"] <= 1e-8
    assert summary["worst_envariance_residual"] <= 1e-8
    assert summary["swap_class_always_preserved"]


def test_diagrams():
    dot = tn.structure_diagram(bell_state(), "dot")
    assert dot.startswith("graph structure {")
    svg = tn.structure_diagram(bell_state(), "svg")
    assert svg.startswith("<svg")
    boxes = tn.partition_diagram({"A": "S", "B": "E0"}, "dot")
    assert "cluster_" in boxes


def test_errors_surface_as_python_exceptions():
    with pytest.raises(tn.TangnetError):
        tn.parse_state("system U { A:2 } state g = 0.4 |0>;")
    with pytest.raises(tn.TangnetError):
        tn.mutual_info(bell_state(), ["A"], ["A"])
