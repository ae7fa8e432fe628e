import pytest

from cubalg.curves import (WeierstrassCurve, invariants, universal_curve,
                           universal_curve_ring)
from cubalg.fgl import hasse_coefficients
from cubalg.poly import Ring
from cubalg.regseq import graded_regular_sequence_check, landweber_report


def test_c4_delta_a_even_regular_at_2():
    ring = universal_curve_ring()
    inv = invariants(universal_curve())
    seq = [inv["c4"], inv["delta"], ring.gen("a2"), ring.gen("a4"),
           ring.gen("a6")]
    rep = graded_regular_sequence_check(ring, seq, 2, 48)
    assert rep.regular_through_cutoff
    assert rep.certified
    # quotient is Z/2[a1, a3] / (a1^4, a1^3 a3^3 + a3^4): total rank 4*8/...
    # the certified total rank equals |c4| * |delta| / (|a1| * |a3|) = 16
    assert rep.quotient_total_rank == 16


def test_non_regular_sequence_detected():
    ring = Ring(("x", "y"), (1, 1))
    x, y = ring.gen("x"), ring.gen("y")
    rep = graded_regular_sequence_check(ring, [x * y, x * x], None, 8)
    assert not rep.regular_through_cutoff
    assert rep.failure is not None


def test_p5_quotient_rank_is_four():
    # Z_(5)[A, B], |A| = 8, |B| = 12; v1, v2 from y^2 = x^3 + Ax + B.
    # The honest total rank of the quotient by (5, v1, v2) is 4
    # (= (p-1)(p^2-1)/24), not 8.
    ring = Ring(("A", "B"), (8, 12))
    curve = WeierstrassCurve(ring.zero(), ring.zero(), ring.zero(),
                             ring.gen("A"), ring.gen("B"))
    vs = [v.restrict(ring) for v in hasse_coefficients(curve, 5, 2)]
    a, b = ring.gen("A"), ring.gen("B")
    assert vs[1].homogeneous_part(8).terms == (-1248 * a).terms
    # v2 = 4 B^4 modulo (5, A)
    v2_no_a = ring.poly({m: c for m, c in vs[2].terms.items()
                         if not m[ring.index("A")]})
    diff = v2_no_a - 4 * b ** 4
    assert all(c % 5 == 0 for c in diff.terms.values())
    rep = graded_regular_sequence_check(ring, [ring.const(5), vs[1], vs[2]],
                                        5, 60)
    assert rep.regular_through_cutoff
    assert rep.certified
    assert rep.quotient_total_rank == 4


def test_inhomogeneous_rejected():
    ring = Ring(("x",), (1,))
    with pytest.raises(ValueError):
        graded_regular_sequence_check(
            ring, [ring.gen("x") + ring.one()], None, 4)


def test_landweber_report_p2():
    rep = landweber_report(universal_curve(), 2, 24)
    assert rep["regularity"].regular_through_cutoff
    assert rep["c4_power_in_ideal"] == 1
    assert rep["delta_power_in_ideal"] == 1
