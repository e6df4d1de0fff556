"""The linking form presented by a hermitian matrix over Z[t,t^-1].

A nonsingular hermitian matrix A presents the pairing
([x],[y]) -> -y^T Abar^-1 xbar on the quotient module R^d / A R^d,
valued in Q(t)/Z[t,t^-1].  Values are exact fractions; two fractions
represent the same class when their difference is integral.
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import (LaurentMatrix, LaurentPoly, RationalFraction, ShapeError)


class SingularMatrix(ValueError):
    """Presentation matrices must have nonzero determinant."""


class NotHermitian(ValueError):
    pass


@dataclass(frozen=True)
class QmodRClass:
    """An element of Q(t)/Z[t,t^-1] represented by an arbitrary fraction."""
    rep: RationalFraction

    def is_zero(self):
        return self.rep.is_integral()

    def __eq__(self, other):
        if not isinstance(other, QmodRClass):
            return NotImplemented
        return (self.rep - other.rep).is_integral()

    def involute(self):
        return QmodRClass(self.rep.involute())

    def __add__(self, other):
        return QmodRClass(self.rep + other.rep)

    def __neg__(self):
        return QmodRClass(-self.rep)

    def to_json_obj(self):
        return self.rep.to_json_obj()

    def __str__(self):
        return "[%s]" % self.rep


class PresentationMatrix:
    """A square hermitian matrix with nonzero determinant."""

    def __init__(self, matrix):
        if matrix.rows != matrix.cols:
            raise ShapeError("presentation matrix must be square")
        if not matrix.is_hermitian():
            raise NotHermitian("matrix is not equal to its involute-transpose")
        self.matrix = matrix
        self._det = matrix.det()
        if self._det.is_zero():
            raise SingularMatrix("presentation matrix has determinant zero")

    @property
    def size(self):
        return self.matrix.rows

    def det(self):
        return self._det

    def order(self):
        """Order of the presented torsion module, up to units."""
        return self._det.normalize_unit()

    def _conj_inverse_entry(self, row, col):
        """Entry (row, col) of conj(A)^-1 as an exact fraction."""
        conj = self.matrix.involute_transpose().transpose()  # entrywise conj
        minor = conj.delete_row_col(col, row).det()
        sign = 1 if (row + col) % 2 == 0 else -1
        return RationalFraction(minor * sign, conj.det())

    def pairing(self, i, j):
        """Class of the pairing of the i-th and j-th presented generators.

        For basis vectors x = e_i, y = e_j the defining formula
        -y^T conj(A)^-1 conj(x) reduces to -(conj(A)^-1)_{j,i}.
        """
        d = self.size
        if not (0 <= i < d and 0 <= j < d):
            raise ShapeError("pairing index out of range")
        return QmodRClass(-self._conj_inverse_entry(j, i))

    def pairing_vectors(self, x, y):
        """Pairing of arbitrary coefficient vectors (lists of LaurentPoly)."""
        d = self.size
        if len(x) != d or len(y) != d:
            raise ShapeError("vector length must match matrix size")
        acc = RationalFraction(LaurentPoly.zero())
        for j in range(d):
            if y[j].is_zero():
                continue
            for i in range(d):
                if x[i].is_zero():
                    continue
                term = self._conj_inverse_entry(j, i)
                weight = y[j] * x[i].involute()
                acc = acc + RationalFraction(-term.num * weight, term.den)
        return QmodRClass(acc)

    def check_linking_form(self):
        """Verify hermitian symmetry, triviality on relations, and the order.

        Returns a report dict with an overall verdict and itemized failures.
        """
        d = self.size
        failures = []
        pair_cache = {}
        for i in range(d):
            for j in range(d):
                pair_cache[(i, j)] = self.pairing(i, j)
        for i in range(d):
            for j in range(d):
                if pair_cache[(i, j)] != pair_cache[(j, i)].involute():
                    failures.append("pairing(%d,%d) is not the conjugate of "
                                    "pairing(%d,%d)" % (i, j, j, i))
        zero = QmodRClass(RationalFraction(LaurentPoly.zero()))
        for k in range(d):
            relation = [self.matrix[i, k] for i in range(d)]
            for j in range(d):
                basis = [LaurentPoly.const(1 if i == j else 0) for i in range(d)]
                if self.pairing_vectors(relation, basis) != zero:
                    failures.append("relation %d pairs nontrivially with e_%d" % (k, j))
        return {
            "hermitian": self.matrix.is_hermitian(),
            "order": self.order(),
            "failures": failures,
            "ok": not failures,
        }
