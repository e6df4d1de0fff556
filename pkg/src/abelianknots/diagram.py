"""Oriented knot diagrams from PD codes and signed Gauss codes.

Conventions: a PD crossing lists four edge labels (incoming under-strand
first, then counterclockwise).  Edge labels run 1..2n along the knot's
orientation, wrapping at 2n, and change at every crossing passage, so the
under-strand runs a -> a+1 and the over-strand x -> x+1 for the over
incoming edge x.  Crossing sign is +1 when the over-strand enters at the
second slot (rotating the under direction counterclockwise by 90 degrees
gives the over direction).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed PD or Gauss code text."""


class ValidationError(ValueError):
    """Syntactically fine but not a single consistently-labelled knot."""


class UnknownCrossing(KeyError):
    pass


class UnknownArc(KeyError):
    pass


@dataclass(frozen=True)
class Crossing:
    """One crossing: slots in PD convention and derived strand roles."""
    id: int
    slots: tuple  # (a, b, c, d): incoming under first, then counterclockwise
    sign: int     # +1 or -1
    over_in: int
    over_out: int

    @property
    def under_in(self):
        return self.slots[0]

    @property
    def under_out(self):
        return self.slots[2]


@dataclass(frozen=True)
class MarkedSet:
    """Crossings whose change unknots the diagram, in a fixed order."""
    ids: tuple

    def __post_init__(self):
        if len(set(self.ids)) != len(self.ids):
            raise ValidationError("duplicate crossing ids in marked set")
        object.__setattr__(self, "ids", tuple(self.ids))

    def __len__(self):
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)

    def __contains__(self, cid):
        return cid in self.ids


class OrientedDiagram:
    """A validated oriented knot diagram.

    Edges are 1..2n; `edge_in` / `edge_out` map each edge to the
    (crossing id, role) where it ends / begins, role in {'under','over'}.
    """

    def __init__(self, crossings):
        self.crossings = tuple(crossings)
        self.n = len(self.crossings)
        self.by_id = {c.id: c for c in self.crossings}
        if len(self.by_id) != self.n:
            raise ValidationError("duplicate crossing ids")
        self.edge_in = {}
        self.edge_out = {}
        for c in self.crossings:
            for edge, role, table in ((c.under_in, "under", self.edge_in),
                                      (c.over_in, "over", self.edge_in),
                                      (c.under_out, "under", self.edge_out),
                                      (c.over_out, "over", self.edge_out)):
                if edge in table:
                    raise ValidationError("edge %d is %scoming at two crossings"
                                          % (edge, "in" if table is self.edge_in else "out"))
                table[edge] = (c.id, role)
        expected = set(range(1, 2 * self.n + 1))
        if self.n and (set(self.edge_in) != expected or set(self.edge_out) != expected):
            raise ValidationError("edge labels must be exactly 1..2n")

    @property
    def num_edges(self):
        return 2 * self.n

    def succ(self, edge):
        """The next edge along the orientation."""
        return edge % (2 * self.n) + 1

    def crossing(self, cid):
        try:
            return self.by_id[cid]
        except KeyError:
            raise UnknownCrossing(cid) from None

    def crossing_sign(self, cid):
        return self.crossing(cid).sign

    def writhe(self):
        return sum(c.sign for c in self.crossings)

    def mirror(self):
        """Swap over/under everywhere (the mirror diagram)."""
        return change_crossings(self, MarkedSet(tuple(c.id for c in self.crossings)))

    def gauss_sequence(self):
        """Passes in traversal order: (crossing id, 'O'/'U', sign) for the
        passage at the end of edge k, k = 1..2n."""
        seq = []
        for k in range(1, 2 * self.n + 1):
            cid, role = self.edge_in[k]
            seq.append((cid, "O" if role == "over" else "U", self.by_id[cid].sign))
        return seq

    def to_json_obj(self):
        return {"crossings": [{"id": c.id, "slots": list(c.slots), "sign": c.sign}
                              for c in self.crossings]}

    def __repr__(self):
        return "OrientedDiagram(%s)" % (emit_pd(self),)


def _make_crossing(cid, slots, n):
    a, b, c, d = slots
    if n == 0:
        raise ValidationError("crossing in an empty diagram")
    wrap = 2 * n

    def succ(x):
        return x % wrap + 1

    if succ(a) != c:
        raise ValidationError("crossing %d: under-strand %d -> %d breaks the "
                              "arc numbering convention" % (cid, a, c))
    candidates = [x for x, y in ((b, d), (d, b)) if succ(x) == y]
    if not candidates:
        raise ValidationError("crossing %d: over-strand slots %d,%d are not "
                              "consecutive edges" % (cid, b, d))
    if len(candidates) == 2:
        # Only possible for a one-crossing diagram; the over strand re-enters
        # on the edge the under strand just produced.
        over_in = c if c in (b, d) else candidates[0]
    else:
        over_in = candidates[0]
    over_out = d if over_in == b else b
    sign = 1 if over_in == b else -1
    return Crossing(id=cid, slots=(a, b, c, d), sign=sign,
                    over_in=over_in, over_out=over_out)


def diagram_from_slots(slot_lists):
    """Build and validate a diagram from a list of 4-tuples of edge labels."""
    n = len(slot_lists)
    counts = {}
    for slots in slot_lists:
        if len(slots) != 4:
            raise ValidationError("each crossing needs exactly 4 edge labels")
        for x in slots:
            if not isinstance(x, int) or x < 1 or x > 2 * n:
                raise ValidationError("edge label %r outside 1..2n" % (x,))
            counts[x] = counts.get(x, 0) + 1
    bad = sorted(e for e in range(1, 2 * n + 1) if counts.get(e, 0) != 2)
    if n and bad:
        raise ValidationError("edge labels %s do not appear exactly twice" % bad)
    crossings = [_make_crossing(i + 1, tuple(slots), n)
                 for i, slots in enumerate(slot_lists)]
    return OrientedDiagram(crossings)


def parse_pd(text):
    """Parse a PD code like "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("PD code is not a valid bracketed list: %s" % exc) from None
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise ParseError("PD code must be a list of 4-tuples")
    return diagram_from_slots(data)


def emit_pd(diagram):
    return json.dumps([list(c.slots) for c in diagram.crossings],
                      separators=(",", ","))


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])$")


def parse_gauss(text):
    """Parse a signed Gauss code like "O1+ U2- ..."; empty means the unknot."""
    tokens = text.split()
    if not tokens:
        return OrientedDiagram([])
    passes = []
    for tok in tokens:
        m = _GAUSS_TOKEN.match(tok)
        if not m:
            raise ParseError("bad Gauss token %r" % tok)
        role, label, sign = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        passes.append((label, role, sign))
    seen = {}
    for label, role, sign in passes:
        entry = seen.setdefault(label, {})
        if role in entry:
            raise ValidationError("crossing %d passed twice as %s" % (label, role))
        entry[role] = sign
    for label, entry in seen.items():
        if set(entry) != {"O", "U"}:
            raise ValidationError("crossing %d lacks an %s-pass"
                                  % (label, "under" if "O" in entry else "over"))
        if entry["O"] != entry["U"]:
            raise ValidationError("crossing %d has inconsistent signs" % label)
    if len(passes) != 2 * len(seen):
        raise ValidationError("each crossing must be passed exactly twice")
    return diagram_from_gauss_passes(passes)


def diagram_from_gauss_passes(passes):
    """Build a diagram from a full pass list [(label, 'O'/'U', sign), ...].

    Pass j (1-based) has incoming edge j and outgoing edge j+1 (wrapping).
    """
    n = len(passes) // 2
    wrap = 2 * n
    where = {}
    for j, (label, role, sign) in enumerate(passes, start=1):
        where.setdefault(label, {})[role] = j
    slot_lists = []
    order = []
    for label, role_pos in sorted(where.items()):
        sign = next(s for (lab, r, s) in passes if lab == label)
        ju, jo = role_pos["U"], role_pos["O"]
        a, cc = ju, ju % wrap + 1
        oin, oout = jo, jo % wrap + 1
        if sign > 0:
            slots = (a, oin, cc, oout)
        else:
            slots = (a, oout, cc, oin)
        slot_lists.append(slots)
        order.append(label)
    diagram = diagram_from_slots(slot_lists)
    for cid, label in enumerate(order, start=1):
        want = next(s for (lab, r, s) in passes if lab == label)
        if diagram.crossing(cid).sign != want:
            raise ValidationError("Gauss code signs are not planar-consistent "
                                  "at crossing %d" % label)
    return diagram


def emit_gauss(diagram):
    return " ".join("%s%d%s" % (role, cid, "+" if sign > 0 else "-")
                    for cid, role, sign in diagram.gauss_sequence())


def change_crossings(diagram, marked):
    """Swap over and under strands at every marked crossing."""
    new_slots = []
    for c in diagram.crossings:
        if c.id in marked:
            a, b, cc, d = c.slots
            new_slots.append((b, cc, d, a) if c.sign > 0 else (d, a, b, cc))
        else:
            new_slots.append(c.slots)
    for cid in marked:
        diagram.crossing(cid)  # raise UnknownCrossing on bad ids
    return diagram_from_slots(new_slots)
