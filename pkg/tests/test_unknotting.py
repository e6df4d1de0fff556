import pytest

from abelianknots.diagram import MarkedSet, UnknownArc, change_crossings, parse_gauss, parse_pd
from abelianknots.families import ROLFSEN_PD
from abelianknots.oracle import alexander_poly_oracle
from abelianknots.laurent import ONE
from abelianknots.unknotting import (descending_set, minimal_search,
                                     simplify_sequence, verify_unknotted)


def test_descending_set_trefoil():
    d = parse_pd(ROLFSEN_PD["3_1"])
    s = descending_set(d, 1)
    assert 1 <= len(s) <= 2
    assert verify_unknotted(change_crossings(d, s))
    with pytest.raises(UnknownArc):
        descending_set(d, 99)


def test_descending_set_trivial_cases():
    assert len(descending_set(parse_gauss(""))) == 0
    # an already descending diagram: a positive kink
    kink = parse_pd("[[1,2,2,1]]")
    # from the basepoint on the over side the first visit is the over-pass
    sizes = {len(descending_set(kink, b)) for b in (1, 2)}
    assert 0 in sizes


def test_descending_certifies_everywhere():
    for name, pd in ROLFSEN_PD.items():
        d = parse_pd(pd)
        for b in range(1, 2 * d.n + 1):
            s = descending_set(d, b)
            assert verify_unknotted(change_crossings(d, s)), (name, b)


def test_knotted_never_certifies():
    for name in ("3_1", "4_1", "5_1", "6_2", "7_3", "7_7"):
        d = parse_pd(ROLFSEN_PD[name])
        assert alexander_poly_oracle(d) != ONE
        assert not verify_unknotted(d), name


def test_verify_trivial():
    assert verify_unknotted(parse_gauss(""))
    assert verify_unknotted(parse_pd("[[1,2,2,1]]"))


def test_simplify_sequence_r1_r2():
    done, seq = simplify_sequence([(1, "O", 1), (1, "U", 1)])
    assert done and not seq
    done, _ = simplify_sequence(
        [(1, "O", 1), (2, "O", -1), (2, "U", -1), (1, "U", 1)])
    assert done


def test_minimal_search():
    tre = parse_pd(ROLFSEN_PD["3_1"])
    assert len(minimal_search(tre)) == 1
    fig8 = parse_pd(ROLFSEN_PD["4_1"])
    assert len(minimal_search(fig8)) == 1
    assert len(minimal_search(parse_gauss(""))) == 0


def test_minimal_not_larger_than_descending():
    for name in ("3_1", "4_1", "5_2", "6_1", "6_3"):
        d = parse_pd(ROLFSEN_PD[name])
        assert len(minimal_search(d)) <= len(descending_set(d, 1)), name


def test_change_descending_then_verify_after_r3():
    # 7-crossing knots exercise the R3 escape path inside the certifier
    for name in ("7_4", "7_6", "7_7"):
        d = parse_pd(ROLFSEN_PD[name])
        s = descending_set(d, 2)
        assert verify_unknotted(change_crossings(d, s)), name
