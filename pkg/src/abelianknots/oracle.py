"""Independent Alexander polynomial via Wirtinger presentation and Fox calculus.

This is the validation side of the package: it never touches the loop
pipeline, so agreement between the two is meaningful.  Arf comes from
Levine's congruence on the determinant at t = -1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import ONE, LaurentMatrix, LaurentPoly, DomainError


class OracleInternalError(AssertionError):
    """The oracle's own cross-check (row/column choice) failed."""


@dataclass(frozen=True)
class WirtingerPresentation:
    """Generators indexed by over-arcs; one conjugation relator per crossing.

    A relator is (v, w, u, sign) encoding x_v = x_w^sign x_u x_w^-sign:
    u is the incoming under-arc, v the outgoing, w the over-arc.
    """
    num_generators: int
    arc_of_edge: dict
    relators: tuple

    def abelianized_rank_is_one(self):
        """Abelianizing makes all generators equal, so the rank must be 1."""
        parent = list(range(self.num_generators))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v, w, u, sign in self.relators:
            parent[find(u)] = find(v)
        return len({find(g) for g in range(self.num_generators)}) == 1


def wirtinger(diagram):
    """Wirtinger presentation of the knot group from a diagram.

    Over-arcs are the equivalence classes of edges glued across over-passes.
    """
    n = diagram.n
    if n == 0:
        return WirtingerPresentation(1, {}, ())
    parent = list(range(2 * n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in diagram.crossings:
        parent[find(c.over_in)] = find(c.over_out)
    reps = {}
    arc_of_edge = {}
    for e in range(1, 2 * n + 1):
        r = find(e)
        if r not in reps:
            reps[r] = len(reps)
        arc_of_edge[e] = reps[r]
    relators = tuple((arc_of_edge[c.under_out], arc_of_edge[c.over_in],
                      arc_of_edge[c.under_in], c.sign)
                     for c in diagram.crossings)
    return WirtingerPresentation(len(reps), arc_of_edge, relators)


def _alexander_matrix(pres):
    """Fox derivatives of the relators, abelianized (every generator -> t)."""
    t = LaurentPoly.t()
    tinv = t.involute()
    rows = []
    for v, w, u, sign in pres.relators:
        row = {}
        tw = t if sign > 0 else tinv
        for gen, contrib in ((u, tw), (w, ONE - tw), (v, LaurentPoly.const(-1))):
            row[gen] = row.get(gen, LaurentPoly.zero()) + contrib
        rows.append(row)
    g = pres.num_generators
    return LaurentMatrix.from_rows(
        [[row.get(j, LaurentPoly.zero()) for j in range(g)] for row in rows])


def alexander_poly_oracle(diagram):
    """Alexander polynomial, unit-normalized, by Fox calculus.

    Deletes the last relator row and the highest-index generator column;
    a second row/column choice is recomputed internally and must agree up
    to units.
    """
    pres = wirtinger(diagram)
    if diagram.n == 0:
        return ONE
    if not pres.abelianized_rank_is_one():
        raise OracleInternalError("abelianization is not infinite cyclic")
    m = _alexander_matrix(pres)
    first = m.delete_row_col(m.rows - 1, m.cols - 1).det().normalize_unit()
    alt_row = 0 if m.rows > 1 else m.rows - 1
    alt_col = 0 if m.cols > 1 else m.cols - 1
    second = m.delete_row_col(alt_row, alt_col).det().normalize_unit()
    if not first.equal_up_to_unit(second):
        raise OracleInternalError(
            "row/column choice changed the Alexander polynomial: %s vs %s"
            % (first, second))
    return first


def arf_levine(delta):
    """Arf invariant from Delta(-1) mod 8 (0 for +-1, 1 for +-3).

    Rejects even values: a genuine Alexander polynomial is odd at -1.
    """
    v = delta.eval_int(-1)
    r = v % 8
    if r in (1, 7):
        return 0
    if r in (3, 5):
        return 1
    raise DomainError("Delta(-1) = %d is even; not an Alexander polynomial" % v)
