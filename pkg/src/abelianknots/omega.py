"""Presentation matrices from abstract order-two tower intersection data.

Input is the combinatorial record of a tower: per Whitney/accessory pair,
the two framing twists, the sign of the based double point, and the graded
intersection polynomials; plus the cross-pair polynomials.  The assembled
hermitian matrix has determinant the Alexander polynomial of any knot
bounding such a tower, and the parity of the odd Whitney twists is the
Arf invariant.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import (DomainError, LaurentMatrix, LaurentPoly, ONE, ShapeError, Z)
from .oracle import arf_levine


@dataclass(frozen=True)
class PairData:
    """One Whitney disc / accessory disc pair."""
    whitney_twist: int                  # a_i
    accessory_twist: int                # b_i
    sign: int                           # sign of the based double point
    p_ww: LaurentPoly = field(default_factory=LaurentPoly.zero)
    p_aa: LaurentPoly = field(default_factory=LaurentPoly.zero)
    p_wa: LaurentPoly = field(default_factory=LaurentPoly.zero)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("double point sign must be +1 or -1")


@dataclass(frozen=True)
class TowerData:
    """k disc pairs plus intersection polynomials between distinct pairs.

    cross maps (r, s) with 1 <= r < s <= 2k, {r,s} not a Whitney/accessory
    pair, to the graded intersection polynomial of e_r and e_s.
    """
    pairs: tuple
    cross: dict = field(default_factory=dict)

    @property
    def k(self):
        return len(self.pairs)

    @property
    def d(self):
        return 2 * len(self.pairs)

    def __post_init__(self):
        d = self.d
        for (r, s), p in self.cross.items():
            if not (1 <= r < s <= d):
                raise ShapeError("cross entry (%d,%d) out of range" % (r, s))
            if r % 2 == 1 and s == r + 1:
                raise ShapeError("(%d,%d) is a Whitney/accessory pair; use p_wa" % (r, s))
            if not isinstance(p, LaurentPoly):
                raise ShapeError("cross entries must be Laurent polynomials")


def assemble_omega(tower):
    """The hermitian matrix of the entry-by-entry tower recipe.

    Off-diagonal non-pair entries are z*p_rs, pair entries z*p + 1, the
    Whitney diagonal z*(p + pbar + a_i), the accessory diagonal
    z*(p + pbar + b_i) +- 1 by the double point sign.
    """
    d = tower.d
    entries = [[LaurentPoly.zero() for _ in range(d)] for _ in range(d)]
    for i, pair in enumerate(tower.pairs):
        w, a = 2 * i, 2 * i + 1          # 0-based rows of e_{2i-1}, e_{2i}
        entries[w][w] = Z * (pair.p_ww + pair.p_ww.involute() + pair.whitney_twist)
        entries[a][a] = (Z * (pair.p_aa + pair.p_aa.involute() + pair.accessory_twist)
                         + LaurentPoly.const(pair.sign))
        entries[w][a] = Z * pair.p_wa + ONE
        entries[a][w] = entries[w][a].involute()
    for (r, s), p in tower.cross.items():
        entries[r - 1][s - 1] = Z * p
        entries[s - 1][r - 1] = (Z * p).involute()
    return LaurentMatrix.from_rows(entries)


def arf_from_tower(tower):
    """Parity of the number of essentially twisted Whitney discs."""
    return sum(1 for pair in tower.pairs if pair.whitney_twist % 2 != 0) % 2


def verify_arf_consistency(tower):
    """det(Omega)(-1) is +-1 mod 8 exactly when the odd-twist count is even."""
    omega = assemble_omega(tower)
    det_at_m1 = _int_det(omega.eval_int_matrix(-1))
    value = LaurentPoly.const(det_at_m1)
    return arf_levine(value) == arf_from_tower(tower)


def _int_det(rows):
    """Exact integer determinant (fraction-free via rationals)."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if m[i][k] != 0:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        inv = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / inv
            if f == 0:
                continue
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    assert det.denominator == 1
    return int(det)


def det_mod8_blocked(x, y, c_matrix):
    """Exact det of A = B + 4C + 4C^T reduced mod 8, with the congruence check.

    B is the block sum of [[x_i, 1], [1, 1 + y_i]] with x_i, y_i multiples
    of 4, and C is integer upper triangular.  The result always equals
    (-1)^k + sum(x_i) mod 8; the function asserts that identity.
    """
    k = len(x)
    if len(y) != k:
        raise DomainError("x and y must have equal length")
    for v in list(x) + list(y):
        if v % 4 != 0:
            raise DomainError("entries of x and y must be multiples of 4")
    d = 2 * k
    if len(c_matrix) != d or any(len(row) != d for row in c_matrix):
        raise DomainError("C must be 2k x 2k")
    for i in range(d):
        for j in range(i):
            if c_matrix[i][j] != 0:
                raise DomainError("C must be upper triangular")
    a = [[0] * d for _ in range(d)]
    for i in range(k):
        a[2 * i][2 * i] = x[i]
        a[2 * i][2 * i + 1] = 1
        a[2 * i + 1][2 * i] = 1
        a[2 * i + 1][2 * i + 1] = 1 + y[i]
    for i in range(d):
        for j in range(d):
            a[i][j] += 4 * c_matrix[i][j] + 4 * c_matrix[j][i]
    det = _int_det(a)
    expected = ((-1) ** k + sum(x)) % 8
    if det % 8 != expected:
        raise AssertionError("mod-8 determinant identity failed: %d vs %d"
                             % (det % 8, expected))
    return det % 8


_CROSS_KEY = re.compile(r"^\((\d+),\s*(\d+)\)$")


def tower_from_json_obj(obj):
    """Decode the TowerData JSON schema (see module docstring in cli)."""
    if not isinstance(obj, dict) or "pairs" not in obj:
        raise DomainError("tower JSON must be an object with a 'pairs' list")
    pairs = []
    for entry in obj["pairs"]:
        pairs.append(PairData(
            whitney_twist=int(entry["a"]),
            accessory_twist=int(entry["b"]),
            sign=int(entry.get("sign", 1)),
            p_ww=LaurentPoly.from_json_obj(entry.get("p_ww", {})),
            p_aa=LaurentPoly.from_json_obj(entry.get("p_aa", {})),
            p_wa=LaurentPoly.from_json_obj(entry.get("p_wa", {})),
        ))
    cross = {}
    for key, val in obj.get("cross", {}).items():
        m = _CROSS_KEY.match(key.strip())
        if not m:
            raise DomainError("cross key %r is not of the form '(r,s)'" % key)
        cross[(int(m.group(1)), int(m.group(2)))] = LaurentPoly.from_json_obj(val)
    return TowerData(pairs=tuple(pairs), cross=cross)


def tower_to_json_obj(tower):
    return {
        "pairs": [{"a": p.whitney_twist, "b": p.accessory_twist, "sign": p.sign,
                   "p_ww": p.p_ww.to_json_obj(), "p_aa": p.p_aa.to_json_obj(),
                   "p_wa": p.p_wa.to_json_obj()} for p in tower.pairs],
        "cross": {"(%d,%d)" % rs: p.to_json_obj()
                  for rs, p in sorted(tower.cross.items())},
    }
