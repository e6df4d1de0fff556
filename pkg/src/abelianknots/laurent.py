"""Exact arithmetic over Z[t,t^-1] and its field of fractions.

Laurent polynomials are stored sparsely as {exponent: coefficient} with
Python integers, so nothing ever overflows or rounds.  The involution is
the ring automorphism t -> 1/t.  Matrices over the Laurent ring come with
an exact determinant (fraction-free elimination, cofactor expansion for
small sizes) and fractions support the membership test num/den in
Z[t,t^-1] needed for computations valued in Q(t)/Z[t,t^-1].
"""
from __future__ import annotations

from fractions import Fraction


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class DomainError(ValueError):
    """Input outside the mathematical domain of the operation."""


class DivisionByZero(ZeroDivisionError):
    """Inversion of a zero fraction."""


class LaurentPoly:
    """An element of Z[t,t^-1].

    Immutable.  Zero coefficients are never stored; the zero polynomial
    is the empty map.  Supports +, -, *, ** with other polynomials and
    with plain ints.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        c = {}
        for e, v in dict(coeffs).items():
            e = int(e)
            v = int(v)
            if v != 0:
                c[e] = v
        self._c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def const(cls, n):
        return cls({0: n})

    def coeff(self, exponent):
        return self._c.get(exponent, 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def is_unit(self):
        """True iff the polynomial is +-t^k."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def min_exp(self):
        if not self._c:
            raise DomainError("zero polynomial has no minimal exponent")
        return min(self._c)

    def max_exp(self):
        if not self._c:
            raise DomainError("zero polynomial has no maximal exponent")
        return max(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def involute(self):
        """Apply the involution t -> t^-1."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def eval_int(self, n):
        """Exact value at t = n for n in {1, -1}; t^-1 is undefined elsewhere."""
        if n not in (1, -1):
            raise DomainError("evaluation only defined at t = 1 or t = -1")
        total = 0
        for e, v in self._c.items():
            total += v if (n == 1 or e % 2 == 0) else -v
        return total

    def normalize_unit(self):
        """Canonical representative modulo units +-t^k.

        The lowest-degree term is shifted to exponent 0 and made positive.
        normalize_unit(0) = 0.
        """
        if not self._c:
            return self
        m = self.min_exp()
        sign = 1 if self._c[m] > 0 else -1
        return LaurentPoly({e - m: sign * v for e, v in self._c.items()})

    def equal_up_to_unit(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self.normalize_unit() == other.normalize_unit()

    def to_json_obj(self):
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json_obj(cls, obj):
        if not isinstance(obj, dict):
            raise DomainError("polynomial JSON must be an object of exponent: coefficient")
        return cls({int(e): int(v) for e, v in obj.items()})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), key=lambda p: -p[0]):
            mag = abs(v)
            if e == 0:
                term = str(mag)
            else:
                tp = "t" if e == 1 else "t^%d" % e
                term = tp if mag == 1 else "%d*%s" % (mag, tp)
            if not parts:
                parts.append(term if v > 0 else "-" + term)
            else:
                parts.append(("+ " if v > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % (dict(sorted(self._c.items())),)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.t()
# z = (1-t)(1-t^-1) = 2 - t - t^-1, self-conjugate.
Z = (ONE - T) * (ONE - T.involute())


def _poly_divide_exact(num, den):
    """Divide num by den in Z[t,t^-1], or return None if den does not divide num.

    Both are shifted to ordinary polynomials first; the division is done
    over Q and accepted only with zero remainder and integer quotient.
    """
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    nshift, dshift = num.min_exp(), den.min_exp()
    n = {e - nshift: Fraction(v) for e, v in num.items()}
    d = {e - dshift: Fraction(v) for e, v in den.items()}
    ndeg, ddeg = max(n), max(d)
    if ndeg < ddeg:
        return None
    lead = d[ddeg]
    q = {}
    while n:
        deg = max(n)
        if deg < ddeg:
            return None  # nonzero remainder
        f = n[deg] / lead
        q[deg - ddeg] = f
        for e, v in d.items():
            e2 = e + deg - ddeg
            r = n.get(e2, Fraction(0)) - f * v
            if r:
                n[e2] = r
            else:
                n.pop(e2, None)
    if any(f.denominator != 1 for f in q.values()):
        return None
    return LaurentPoly({e + nshift - dshift: int(f) for e, f in q.items()})


def divides(den, num):
    """True iff den divides num in Z[t,t^-1]."""
    return _poly_divide_exact(num, den) is not None


class LaurentMatrix:
    """Dense matrix over Z[t,t^-1], row-major, immutable."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError("entries length must be rows*cols")
        for x in entries:
            if not isinstance(x, LaurentPoly):
                raise ShapeError("entries must be LaurentPoly")
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def from_rows(cls, rowlists):
        rowlists = [list(r) for r in rowlists]
        rows = len(rowlists)
        cols = len(rowlists[0]) if rowlists else 0
        if any(len(r) != cols for r in rowlists):
            raise ShapeError("ragged rows")
        flat = [x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)
                for r in rowlists for x in r]
        return cls(rows, cols, flat)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO
                          for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ShapeError("index out of range")
        return self._e[i * self.cols + j]

    def row(self, i):
        return list(self._e[i * self.cols:(i + 1) * self.cols])

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._e) == (other.rows, other.cols, other._e)

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("shape mismatch in addition")
        return LaurentMatrix(self.rows, self.cols,
                             [a + b for a, b in zip(self._e, other._e)])

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return LaurentMatrix(self.rows, self.cols, [x * other for x in self._e])
        if self.cols != other.rows:
            raise ShapeError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return LaurentMatrix(self.rows, other.cols, out)

    __rmul__ = __mul__

    def transpose(self):
        return LaurentMatrix(self.cols, self.rows,
                             [self[i, j] for j in range(self.cols)
                              for i in range(self.rows)])

    def map(self, f):
        return LaurentMatrix(self.rows, self.cols, [f(x) for x in self._e])

    def involute_transpose(self):
        """Conjugate transpose for the involution t -> t^-1."""
        return self.transpose().map(lambda p: p.involute())

    def is_hermitian(self):
        return self.rows == self.cols and self == self.involute_transpose()

    def delete_row_col(self, i, j):
        ents = [self[r, c] for r in range(self.rows) if r != i
                for c in range(self.cols) if c != j]
        return LaurentMatrix(self.rows - 1, self.cols - 1, ents)

    def eval_int_matrix(self, n):
        """Integer matrix of values at t = n, n in {1,-1}."""
        return [[self[i, j].eval_int(n) for j in range(self.cols)]
                for i in range(self.rows)]

    def det(self):
        """Exact determinant; the 0x0 matrix has determinant 1."""
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return ONE
        if n <= 4:
            return self._det_cofactor()
        return self._det_bareiss()

    def _det_cofactor(self):
        n = self.rows
        if n == 0:
            return ONE
        if n == 1:
            return self[0, 0]
        acc = ZERO
        for j in range(n):
            if self[0, j].is_zero():
                continue
            minor = self.delete_row_col(0, j)
            term = self[0, j] * minor._det_cofactor()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def _det_bareiss(self):
        # Clear each row's negative powers of t; det picks up t^(total shift).
        n = self.rows
        shift_total = 0
        m = []
        for i in range(self.rows):
            row = self.row(i)
            exps = [p.min_exp() for p in row if not p.is_zero()]
            s = min(exps) if exps else 0
            if s < 0:
                row = [p.shift(-s) for p in row]
                shift_total += s
            m.append(row)
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    q = _poly_divide_exact(num, prev)
                    if q is None:
                        raise DomainError("Bareiss division failed; non-exact pivot")
                    m[i][j] = q
                m[i][k] = ZERO
            prev = m[k][k]
        d = m[n - 1][n - 1]
        if sign < 0:
            d = -d
        return d.shift(shift_total)

    def to_json_obj(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[self[i, j].to_json_obj() for j in range(self.cols)]
                            for i in range(self.rows)]}

    @classmethod
    def from_json_obj(cls, obj):
        rows, cols = int(obj["rows"]), int(obj["cols"])
        ents = obj["entries"]
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise ShapeError("entries do not match declared shape")
        flat = [LaurentPoly.from_json_obj(x) for r in ents for x in r]
        return cls(rows, cols, flat)

    def __repr__(self):
        body = "; ".join(", ".join(str(self[i, j]) for j in range(self.cols))
                         for i in range(self.rows))
        return "LaurentMatrix(%dx%d: %s)" % (self.rows, self.cols, body)


class RationalFraction:
    """A fraction num/den of Laurent polynomials, den != 0.

    Fractions are not reduced; equality is cross-multiplicative.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("fraction with zero denominator")
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, RationalFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("unhashable; equality is cross-multiplicative")

    def __add__(self, other):
        return RationalFraction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __neg__(self):
        return RationalFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalFraction(self.num * other.num, self.den * other.den)

    def invert(self):
        if self.num.is_zero():
            raise DivisionByZero("cannot invert a zero fraction")
        return RationalFraction(self.den, self.num)

    def involute(self):
        return RationalFraction(self.num.involute(), self.den.involute())

    def is_integral(self):
        """True iff the fraction lies in Z[t,t^-1] (den divides num)."""
        return divides(self.den, self.num)

    def to_json_obj(self):
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    def __str__(self):
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalFraction(%r, %r)" % (self.num, self.den)
