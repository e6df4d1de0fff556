"""Finding and certifying unknotting sets of crossing changes.

The descending-diagram construction always works: walk the knot from a
basepoint and mark every crossing first met on its under-strand; changing
those makes the diagram descending, hence trivial.  The certifier is a
greedy Reidemeister simplifier on the Gauss sequence (R1 and R2 reductions,
budgeted R3 reshuffles to escape local minima).  A negative certificate
means "not certified", never "knotted".
"""
from __future__ import annotations

import itertools

from .diagram import MarkedSet, UnknownArc, change_crossings

R3_BUDGET_DEFAULT = 1000


def descending_set(diagram, basepoint=1):
    """Crossings whose first visit from the basepoint edge is an under-pass.

    Changing exactly these produces a descending diagram (an unknot).
    """
    if diagram.n == 0:
        return MarkedSet(())
    if not (1 <= basepoint <= 2 * diagram.n):
        raise UnknownArc(basepoint)
    seen = set()
    marked = []
    edge = basepoint
    for _ in range(2 * diagram.n):
        cid, role = diagram.edge_in[edge]
        if cid not in seen:
            seen.add(cid)
            if role == "under":
                marked.append(cid)
        edge = diagram.succ(edge)
    return MarkedSet(tuple(sorted(marked)))


def _canonical(seq):
    """Rotation- and label-independent form of a Gauss sequence."""
    if not seq:
        return ()
    best = None
    L = len(seq)
    for start in range(L):
        relabel = {}
        out = []
        for k in range(L):
            cid, role, sign = seq[(start + k) % L]
            if cid not in relabel:
                relabel[cid] = len(relabel)
            out.append((relabel[cid], role, sign))
        key = tuple(out)
        if best is None or key < best:
            best = key
    return best


def _positions(seq):
    pos = {}
    for i, (cid, role, sign) in enumerate(seq):
        pos.setdefault(cid, {})[role] = i
    return pos


def _remove(seq, kill):
    return [p for i, p in enumerate(seq) if i not in kill]


def _r1_step(seq):
    L = len(seq)
    for i in range(L):
        j = (i + 1) % L
        if seq[i][0] == seq[j][0]:
            return _remove(seq, {i, j})
    return None


def _r2_step(seq):
    L = len(seq)
    pos = _positions(seq)
    for i in range(L):
        j = (i + 1) % L
        (c1, r1, s1), (c2, r2, s2) = seq[i], seq[j]
        if c1 == c2 or r1 != r2 or s1 == s2:
            continue
        other = "U" if r1 == "O" else "O"
        q1, q2 = pos[c1][other], pos[c2][other]
        if (q1 + 1) % L == q2 or (q2 + 1) % L == q1:
            return _remove(seq, {i, j, q1, q2})
    return None


def _r3_moves(seq):
    """All Reidemeister-III rewrites: a strand over (or under) two
    crossings slides across the third crossing of the triangle."""
    L = len(seq)
    if L < 6:
        return
    pos = _positions(seq)

    def adjacent(a, b):
        return (a + 1) % L == b or (b + 1) % L == a

    for i in range(L):
        j = (i + 1) % L
        (cx, rx, _sx), (cy, ry, _sy) = seq[i], seq[j]
        if cx == cy or rx != ry:
            continue  # the moving strand passes over both or under both
        other_x = pos[cx]["U" if rx == "O" else "O"]
        other_y = pos[cy]["U" if ry == "O" else "O"]
        for cz in pos:
            if cz in (cx, cy):
                continue
            pz = pos[cz]
            for za, zb in ((pz["O"], pz["U"]), (pz["U"], pz["O"])):
                if adjacent(other_x, za) and adjacent(other_y, zb):
                    spots = {i, j, other_x, za, other_y, zb}
                    if len(spots) != 6:
                        continue
                    out = list(seq)
                    for a, b in ((i, j), (other_x, za), (other_y, zb)):
                        out[a], out[b] = out[b], out[a]
                    yield out


def simplify_sequence(seq, r3_budget=R3_BUDGET_DEFAULT):
    """Greedy reduction; returns (reached_zero, reduced_sequence)."""
    seq = list(seq)

    def reduce_fully(s):
        while True:
            nxt = _r1_step(s)
            if nxt is None:
                nxt = _r2_step(s)
            if nxt is None:
                return s
            s = nxt

    seq = reduce_fully(seq)
    if not seq:
        return True, seq
    frontier = [seq]
    visited = {_canonical(seq)}
    moves = 0
    while frontier and moves < r3_budget:
        state = frontier.pop()
        for candidate in _r3_moves(state):
            moves += 1
            candidate = reduce_fully(candidate)
            if not candidate:
                return True, candidate
            key = _canonical(candidate)
            if key not in visited:
                visited.add(key)
                frontier.append(candidate)
            if moves >= r3_budget:
                break
    shortest = min(visited, key=len)
    return False, list(shortest)


def verify_unknotted(diagram, r3_budget=R3_BUDGET_DEFAULT):
    """True iff greedy simplification reaches zero crossings.

    False means "not certified" only; the simplifier never proves
    knottedness.
    """
    done, _ = simplify_sequence(diagram.gauss_sequence(), r3_budget)
    return done


def minimal_search(diagram, size_budget=None, r3_budget=R3_BUDGET_DEFAULT):
    """Smallest certified unknotting set within the budgets.

    Ties break lexicographically on crossing ids; falls back to the
    descending set when the search exhausts its budgets.
    """
    ids = sorted(c.id for c in diagram.crossings)
    fallback = descending_set(diagram)
    if size_budget is None:
        size_budget = len(fallback)
    if verify_unknotted(diagram, r3_budget):
        return MarkedSet(())
    for size in range(1, min(size_budget, len(ids)) + 1):
        for combo in itertools.combinations(ids, size):
            changed = change_crossings(diagram, MarkedSet(combo))
            if verify_unknotted(changed, r3_budget):
                return MarkedSet(combo)
    return fallback
