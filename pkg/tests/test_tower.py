import pytest

from abelianknots.diagram import MarkedSet, change_crossings, parse_gauss, parse_pd
from abelianknots.families import ROLFSEN_PD, twist_knot
from abelianknots.laurent import ONE, LaurentMatrix, LaurentPoly, Z
from abelianknots.oracle import alexander_poly_oracle
from abelianknots.tower import (CertificationError, SingularDiagram,
                                assemble_psi, build_loops, frame_loop,
                                lambda_matrix, loop_crossing_catalog,
                                loop_levels, run_pipeline)
from abelianknots.unknotting import verify_unknotted

TREFOIL = ROLFSEN_PD["3_1"]


def one_crossing_sets(diagram):
    out = []
    for c in diagram.crossings:
        try:
            if verify_unknotted(change_crossings(diagram, MarkedSet((c.id,)))):
                out.append(MarkedSet((c.id,)))
        except Exception:
            continue
    return out


def test_singular_diagram_epsilon_convention():
    d = parse_pd(TREFOIL)
    sing = SingularDiagram.build(d, MarkedSet((1,)))
    # original +1 crossing becomes -1 in the changed diagram
    assert sing.epsilon == (-1,)


def test_singular_diagram_rejects_noncertified():
    d = parse_pd(ROLFSEN_PD["5_1"])
    with pytest.raises(CertificationError):
        SingularDiagram.build(d, MarkedSet(()))


def test_build_loops_trefoil():
    d = parse_pd(TREFOIL)
    sing = SingularDiagram.build(d, MarkedSet((1,)))
    loops = build_loops(sing)
    assert len(loops) == 1
    # one loop traversing the arcs of the two unmarked crossings
    assert {c for (c, _r, _s) in loops[0].events} == {2, 3}
    assert len(loops[0].events) == 2


def test_empty_marked_set():
    d = parse_gauss("")
    sing = SingularDiagram.build(d, MarkedSet(()))
    loops = build_loops(sing)
    assert loops == ()
    lam = lambda_matrix(sing, loops)
    assert lam.rows == 0
    psi = assemble_psi(lam, ())
    assert psi.det() == ONE


def test_frame_loop_closes():
    d = parse_pd(ROLFSEN_PD["4_1"])
    for s in one_crossing_sets(d):
        sing = SingularDiagram.build(d, s)
        for lp in build_loops(sing):
            framed = frame_loop(sing, lp)
            raw = sum(sg for (_c, r, sg) in framed.events if r == "under")
            assert raw + framed.twists == 0
            levels = loop_levels(framed)
            if levels:
                assert levels[framed.basepoint_shift % len(levels)] == 0


def test_gradings_close_up():
    # winding profile returns to its start for every framed corpus loop
    for name in ("3_1", "5_2", "6_1", "7_2"):
        d = parse_pd(ROLFSEN_PD[name])
        for s in one_crossing_sets(d):
            sing = SingularDiagram.build(d, s)
            for lp in build_loops(sing):
                lp = frame_loop(sing, lp)
                h = lp.twists
                for (_c, role, sign) in lp.events:
                    if role == "under":
                        h += sign
                assert h == 0


def test_whitehead_family_lambda_and_psi():
    for n in range(-3, 4):
        d = twist_knot(n)
        res = run_pipeline(d, auto="minimal")
        assert len(res.marked) == (0 if n == 0 else 1)
        assert res.delta.equal_up_to_unit(ONE - Z * n), n
        if len(res.marked) == 1:
            lam = res.lam[0, 0]
            eps = res.epsilon[0]
            # z*lam + eps must be exactly +-(1 - n z)
            got = Z * lam + LaurentPoly.const(eps)
            assert got == ONE - Z * n or got == -(ONE - Z * n)


def test_assemble_psi_examples():
    lam = LaurentMatrix.from_rows([[LaurentPoly.const(-2)]])
    psi = assemble_psi(lam, (1,))
    assert psi[0, 0] == ONE - Z * 2
    p = LaurentPoly({1: 1})
    lam2 = LaurentMatrix.from_rows([[LaurentPoly.zero(), p],
                                    [p.involute(), LaurentPoly.zero()]])
    psi2 = assemble_psi(lam2, (1, -1))
    assert psi2.is_hermitian()
    assert psi2[0, 0] == ONE and psi2[1, 1] == LaurentPoly.const(-1)
    assert psi2[0, 1] == Z * p


def test_psi_structural_invariants_single_loops():
    for name, pd in ROLFSEN_PD.items():
        d = parse_pd(pd)
        for s in one_crossing_sets(d):
            res = run_pipeline(d, marked=s)
            assert res.psi.is_hermitian(), name
            at_one = res.psi.eval_int_matrix(1)
            dsize = len(res.epsilon)
            for i in range(dsize):
                for j in range(dsize):
                    assert at_one[i][j] == (res.epsilon[i] if i == j else 0)
            det = res.det
            assert det.involute().equal_up_to_unit(det)
            assert abs(det.eval_int(1)) == 1


def test_det_matches_oracle_single_loops_all_choices():
    # the calibrated regime: every one-crossing unknotting set, both
    # subarc sheets, several basepoints
    for name, pd in ROLFSEN_PD.items():
        d = parse_pd(pd)
        expected = alexander_poly_oracle(d)
        for s in one_crossing_sets(d):
            for seed in (None, 1, 2, 3):
                res = run_pipeline(d, marked=s, seed=seed)
                assert res.delta.equal_up_to_unit(expected), (name, tuple(s), seed)


def test_basepoint_change_keeps_det():
    d = parse_pd(TREFOIL)
    s = MarkedSet((1,))
    sing = SingularDiagram.build(d, s)
    dets = set()
    for shift in range(3):
        loops = build_loops(sing, basepoints=[shift])
        loops = tuple(frame_loop(sing, lp) for lp in loops)
        psi = assemble_psi(lambda_matrix(sing, loops), sing.epsilon)
        dets.add(psi.det().normalize_unit())
    assert len(dets) == 1


def test_catalog_hermitian_pairwise():
    # multi-loop towers: the assembled matrix is hermitian by construction
    d = parse_pd(ROLFSEN_PD["5_1"])
    from abelianknots.unknotting import descending_set
    s = descending_set(d, 1)
    sing = SingularDiagram.build(d, s)
    loops = tuple(frame_loop(sing, lp) for lp in build_loops(sing))
    lam = lambda_matrix(sing, loops)
    assert lam.is_hermitian()
    psi = assemble_psi(lam, sing.epsilon)
    assert psi.is_hermitian()
    at_one = psi.eval_int_matrix(1)
    for i in range(len(loops)):
        assert at_one[i][i] == sing.epsilon[i]
