import pytest

from socle_lab import (
    VerifyConfig,
    fiber_product_ring,
    field_extension_ring,
    ideal_product,
    ideal_equal,
    is_member,
    regular_param_scenarios,
    section4_ring,
    semigroup_curve_ring,
    verify,
    verify_family,
    zero_ideal,
)
from socle_lab.families import SOURCES, default_minpoly

FAST = VerifyConfig(samples=2, seed=0, depth_trials=2)


def test_section4_precondition():
    with pytest.raises(ValueError, match="1 <= d < m"):
        section4_ring(2, 2)
    with pytest.raises(ValueError, match="1 <= d < m"):
        section4_ring(1, 1)


def test_section4_shape():
    inst = section4_ring(3, 2, char=101)
    assert len(inst.ring.variables) == 3 + 2 + 1
    assert inst.ring.graded
    assert len(inst.ideals["Q"].gens) == 2


def test_field_extension_preconditions():
    with pytest.raises(ValueError, match="d >= 2"):
        field_extension_ring(1)
    with pytest.raises(ValueError, match="quadratic"):
        field_extension_ring(2, "u^3 + 1", char=0)
    with pytest.raises(ValueError, match="monic"):
        field_extension_ring(2, "2*u^2 + 1", char=0)


def test_default_minpoly_is_irreducible():
    # over F101, u^2+1 splits (10^2 = -1); the chosen default must not
    inst = field_extension_ring(2, None, char=101)
    assert inst.params["irreducible"] is True
    inst0 = field_extension_ring(2, None, char=0)
    assert inst0.params["minpoly"] == "u^2 + 1"
    assert inst0.params["irreducible"] is True


def test_fiber_product_is_reduced_with_two_components():
    inst = fiber_product_ring(2, char=101)
    p1, p2 = inst.ideals["p1"], inst.ideals["p2"]
    assert ideal_equal(ideal_product(p1, p2), zero_ideal(inst.ring))
    for f in ideal_product(p1, p2).gens:
        assert is_member(f, zero_ideal(inst.ring))


def test_expected_tables_carry_provenance():
    instances = [
        section4_ring(2, 1),
        fiber_product_ring(1),
        field_extension_ring(2),
        semigroup_curve_ring(),
        *regular_param_scenarios(),
    ]
    for inst in instances:
        for claim, exp in inst.expected.items():
            assert exp.source in SOURCES, (inst.tag, claim)
            if exp.source == "derived":
                assert exp.note, (inst.tag, claim)


def test_verify_section4_small():
    report = verify(section4_ring(2, 1, char=101), FAST)
    assert report.ok
    ids = {r.claim_id for r in report.rows}
    assert {"quotient-colength", "reduction-multiplicity", "stability-index",
            "squared-params-defect", "cube-reduction-identity",
            "depth"} <= ids


def test_verify_fiber_d1():
    report = verify(fiber_product_ring(1, char=101), FAST)
    assert report.ok
    stab = [r for r in report.rows if r.claim_id.startswith("stability-index")]
    assert len(stab) == 3  # default plus two samples
    assert all(r.computed == 1 for r in stab)


def test_verify_fiber_d2_flags_candidate_discrepancy():
    report = verify(fiber_product_ring(2, char=101), FAST)
    assert report.ok
    flagged = [r for r in report.rows if r.flagged]
    assert len(flagged) == 1
    row = flagged[0]
    assert row.claim_id == "buchsbaum-invariant-measured"
    assert row.computed == 1  # the measured defect
    assert row.expected is None  # no side chosen
    assert "d-1" in row.claim


def test_verify_field_extension():
    report = verify(field_extension_ring(2, None, char=101), FAST)
    assert report.ok
    by_id = {r.claim_id: r for r in report.rows}
    assert by_id["reduction-multiplicity"].computed == 2
    assert by_id["max-square-reduction"].computed is True
    assert by_id["kernel-contains-quadrics"].computed is True


def test_verify_regular_param_and_semigroup():
    merged = verify_family("regular-param", FAST, char=0)
    assert merged.ok
    by_id = {r.claim_id: r for r in merged.rows}
    assert by_id["socle-closed-shape"].computed == 2
    assert by_id["socle-nonclosed-shape"].computed == 3
    assert by_id["stability-absent"].computed is None

    sg = verify(semigroup_curve_ring(101), FAST)
    assert sg.ok
    assert {r.claim_id for r in sg.rows} >= {"cm-type", "parameter-defect"}


def test_verify_char_zero_spot_checks():
    report = verify(section4_ring(2, 1, char=0), FAST)
    assert report.ok
    report = verify(fiber_product_ring(1, char=0), FAST)
    assert report.ok


def test_report_json_stability():
    a = verify(fiber_product_ring(1, char=101), VerifyConfig(samples=3, seed=7))
    b = verify(fiber_product_ring(1, char=101), VerifyConfig(samples=3, seed=7))
    assert a.to_json() == b.to_json()


def test_unknown_family_rejected():
    with pytest.raises(ValueError, match="unknown family"):
        verify_family("nope")
