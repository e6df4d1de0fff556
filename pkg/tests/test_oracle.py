import pytest

from abelianknots.diagram import parse_gauss, parse_pd
from abelianknots.families import ROLFSEN_ALEXANDER, ROLFSEN_PD, twist_knot
from abelianknots.laurent import DomainError, LaurentPoly, ONE, T, Z
from abelianknots.oracle import (alexander_poly_oracle, arf_levine, wirtinger)

TREFOIL = ROLFSEN_PD["3_1"]
FIG8 = ROLFSEN_PD["4_1"]


def test_wirtinger_counts():
    d = parse_pd(TREFOIL)
    pres = wirtinger(d)
    assert pres.num_generators == 3
    assert len(pres.relators) == 3
    assert pres.abelianized_rank_is_one()
    assert wirtinger(parse_gauss("")).num_generators == 1
    f = wirtinger(parse_pd(FIG8))
    assert f.num_generators == 4 and len(f.relators) == 4


def test_alexander_examples():
    assert alexander_poly_oracle(parse_pd(TREFOIL)).equal_up_to_unit(
        ONE - T - T.involute())
    assert alexander_poly_oracle(parse_pd(FIG8)).equal_up_to_unit(
        T + T.involute() - 3)
    assert alexander_poly_oracle(parse_gauss("")) == ONE


def test_alexander_rolfsen_table():
    for name, pd in ROLFSEN_PD.items():
        delta = alexander_poly_oracle(parse_pd(pd))
        assert delta.equal_up_to_unit(LaurentPoly(ROLFSEN_ALEXANDER[name])), name


def test_alexander_at_one_is_unit():
    for name, pd in ROLFSEN_PD.items():
        delta = alexander_poly_oracle(parse_pd(pd))
        assert abs(delta.eval_int(1)) == 1, name


def test_alexander_symmetry():
    for name, pd in ROLFSEN_PD.items():
        delta = alexander_poly_oracle(parse_pd(pd))
        assert delta.equal_up_to_unit(delta.involute()), name


def test_twist_knot_family():
    for n in range(-3, 4):
        delta = alexander_poly_oracle(twist_knot(n))
        assert delta.equal_up_to_unit(ONE - Z * n), n


def test_oracle_reidemeister_invariance():
    # the same knot from its Gauss code must give the same polynomial
    from abelianknots.diagram import emit_gauss
    for name in ("3_1", "5_2", "6_2"):
        d = parse_pd(ROLFSEN_PD[name])
        d2 = parse_gauss(emit_gauss(d))
        assert alexander_poly_oracle(d).equal_up_to_unit(alexander_poly_oracle(d2))


def test_arf_levine():
    assert arf_levine(ONE - T - T.involute()) == 1   # Delta(-1) = 3
    assert arf_levine(T + T.involute() - 3) == 1     # Delta(-1) = -5
    assert arf_levine(ONE) == 0
    with pytest.raises(DomainError):
        arf_levine(LaurentPoly({0: 2}))


def test_arf_unit_and_involution_invariance():
    for name, pd in ROLFSEN_PD.items():
        delta = alexander_poly_oracle(parse_pd(pd))
        a = arf_levine(delta)
        assert arf_levine(delta * LaurentPoly({3: -1})) == a
        assert arf_levine(delta.involute()) == a
