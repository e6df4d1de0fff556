import pytest

from abelianknots.blanchfield import (NotHermitian, PresentationMatrix,
                                      QmodRClass, SingularMatrix)
from abelianknots.laurent import (LaurentMatrix, LaurentPoly, ONE,
                                  RationalFraction, T, Z)


def test_whitehead_family_pairing():
    for n in (1, 2, -3):
        a = PresentationMatrix(LaurentMatrix.from_rows([[ONE - Z * n]]))
        got = a.pairing(0, 0)
        want = QmodRClass(RationalFraction(LaurentPoly.const(-1), ONE - Z * n))
        assert got == want


def test_identity_trivial_module():
    a = PresentationMatrix(LaurentMatrix.identity(3))
    for i in range(3):
        for j in range(3):
            assert a.pairing(i, j).is_zero()
    report = a.check_linking_form()
    assert report["ok"]
    assert report["order"] == ONE


def test_trefoil_omega_axioms():
    a = PresentationMatrix(LaurentMatrix.from_rows([[Z, ONE], [ONE, ONE]]))
    report = a.check_linking_form()
    assert report["ok"]
    assert report["order"] == LaurentPoly({0: 1, 1: -1, 2: 1})
    # hermitian symmetry spelled out
    assert a.pairing(0, 1) == a.pairing(1, 0).involute()


def test_rejects_bad_inputs():
    with pytest.raises(NotHermitian):
        PresentationMatrix(LaurentMatrix.from_rows([[ONE, T], [ONE, ONE]]))
    with pytest.raises(SingularMatrix):
        PresentationMatrix(LaurentMatrix.zeros(1, 1))


def test_unit_congruence_leaves_verdicts():
    base = LaurentMatrix.from_rows([[Z, ONE], [ONE, ONE]])
    u = LaurentMatrix.from_rows([[T, LaurentPoly.zero()],
                                 [LaurentPoly.zero(), ONE]])
    congruent = u * base * u.involute_transpose()
    a, b = PresentationMatrix(base), PresentationMatrix(congruent)
    assert a.check_linking_form()["ok"] == b.check_linking_form()["ok"]
    assert a.order().equal_up_to_unit(b.order())


def test_relations_pair_trivially():
    m = LaurentMatrix.from_rows([[-Z, ONE], [ONE, ONE]])
    a = PresentationMatrix(m)
    zero = QmodRClass(RationalFraction(LaurentPoly.zero()))
    for k in range(2):
        relation = [m[i, k] for i in range(2)]
        for j in range(2):
            basis = [LaurentPoly.const(1 if i == j else 0) for i in range(2)]
            assert a.pairing_vectors(relation, basis) == zero
