"""Knot diagrams as planar-diagram (PD) codes.

A crossing ``(a, b, c, d)`` lists the four edge labels counterclockwise,
starting from the incoming under-edge, so ``c = a + 1`` (mod 2n). The over
strand runs ``d -> b`` when ``b = d + 1`` (a positive crossing) and
``b -> d`` when ``d = b + 1`` (negative). This is the convention of the
KnotInfo and Knot Atlas tables.

PD file format: one crossing per line as ``X a b c d``; ``#`` starts a comment.
"""
from __future__ import annotations

import re
import string
from bisect import bisect_right
from dataclasses import dataclass

from .fpgroup import Presentation, Word

__all__ = [
    "PDCode",
    "PDError",
    "parse_pd",
    "format_pd",
    "writhe",
    "mirror",
    "wirtinger",
    "connected_sum",
    "crossing_signs",
]


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]
    comments: tuple[str, ...] = ()

    def __post_init__(self):
        _validate(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def __len__(self):
        return len(self.crossings)


def _succ(x: int, m: int) -> int:
    return x % m + 1


def _validate(crossings):
    n = len(crossings)
    if n == 0:
        return
    m = 2 * n
    seen: dict[int, int] = {}
    for cr in crossings:
        if len(cr) != 4:
            raise PDError(f"crossing {cr} does not have four labels")
        for x in cr:
            seen[x] = seen.get(x, 0) + 1
    if set(seen) != set(range(1, m + 1)) or any(v != 2 for v in seen.values()):
        raise PDError("edge labels must be exactly 1..2n, each used twice")
    for a, b, c, d in crossings:
        if c != _succ(a, m):
            raise PDError(f"crossing {(a, b, c, d)}: under-strand must continue a -> a+1")
        if b != _succ(d, m) and d != _succ(b, m):
            raise PDError(f"crossing {(a, b, c, d)}: over-strand labels are not consecutive "
                          "(multi-component or malformed code)")
    # one component: following edge succession must visit every edge
    incoming_under = {a for a, _, _, _ in crossings}
    if len(incoming_under) != n:
        raise PDError("an edge enters two undercrossings")


def crossing_signs(pd: PDCode) -> list[int]:
    m = pd.edge_count
    return [1 if b == _succ(d, m) else -1 for _, b, _, d in pd.crossings]


def writhe(pd: PDCode) -> int:
    return sum(crossing_signs(pd))


def mirror(pd: PDCode) -> PDCode:
    """Swap over and under at every crossing.

    The new tuple starts at the old incoming over-edge and keeps the
    counterclockwise order, which flips every sign.
    """
    m = pd.edge_count
    out = []
    for a, b, c, d in pd.crossings:
        if b == _succ(d, m):  # over strand d -> b
            out.append((d, a, b, c))
        else:  # over strand b -> d
            out.append((b, c, d, a))
    return PDCode(tuple(out), pd.comments)


def parse_pd(text: str) -> PDCode:
    crossings = []
    comments = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(raw)
            continue
        line = line.split("#", 1)[0]
        toks = re.split(r"[\s,\[\]]+", line.strip())
        toks = [t for t in toks if t]
        if not toks or toks[0].upper() != "X" or len(toks) != 5:
            raise PDError(f"bad PD line {raw!r}")
        try:
            crossings.append(tuple(int(t) for t in toks[1:]))
        except ValueError:
            raise PDError(f"bad PD line {raw!r}") from None
    return PDCode(tuple(crossings), tuple(comments))


def format_pd(pd: PDCode, comments: bool = True) -> str:
    lines = list(pd.comments) if comments else []
    lines += ["X " + " ".join(map(str, cr)) for cr in pd.crossings]
    return "\n".join(lines) + "\n"


def _generator_names(k: int) -> tuple[str, ...]:
    if k <= 26:
        return tuple(string.ascii_lowercase[:k])
    return tuple(f"g{i + 1}" for i in range(k))


def wirtinger(pd: PDCode, base_edge: int = 1) -> Presentation:
    """Wirtinger presentation with meridian and preferred longitude selected.

    Generators are the arcs (over-passes between consecutive undercrossings),
    numbered along the knot starting with the arc carrying ``base_edge``,
    which hosts the base point. At a crossing of sign ``e`` with incoming
    under-arc ``x``, outgoing ``y`` and over-arc ``z`` the relation is
    ``y = z^-e x z^e``. The longitude is the product of the ``z^e`` met along
    the knot from the base point, times ``x1^-writhe``.
    """
    n = len(pd.crossings)
    if n == 0:
        return Presentation(("a",), (), (Word((1,)), Word()), ("m1", "l1"),
                            ("# Wirtinger presentation of a crossingless diagram",))
    m = pd.edge_count
    if not 1 <= base_edge <= m:
        raise PDError(f"base edge {base_edge} out of range")
    signs = crossing_signs(pd)
    starts = sorted(c for _, _, c, _ in pd.crossings)  # each under-exit begins an arc

    def arc_start(e):
        i = bisect_right(starts, e)
        return starts[i - 1] if i else starts[-1]

    first = arc_start(base_edge)
    # arcs in traversal order from the base arc
    order = sorted(starts, key=lambda s: (s - first) % m)
    arc_index = {s: i for i, s in enumerate(order)}

    def arc(e):
        return arc_index[arc_start(e)]

    names = _generator_names(n)
    relators = []
    under_at = {}
    for k, (a, b, c, d) in enumerate(pd.crossings):
        x, y, z, e = arc(a) + 1, arc(c) + 1, arc(b) + 1, signs[k]
        relators.append(Word((y, -e * z, -x, e * z)))
        under_at[a] = (z, e)
    letters = []
    for step in range(m):
        edge = (first - 1 + step) % m + 1
        if edge in under_at:
            z, e = under_at[edge]
            letters.append(e * z)
    w = sum(signs)
    letters += [-1 if w > 0 else 1] * abs(w)
    longitude = Word(tuple(letters))
    return Presentation(names, tuple(relators), (Word((1,)), longitude), ("m1", "l1"),
                        (f"# Wirtinger presentation, base point on edge {base_edge}, writhe {w}",))


def connected_sum(p: PDCode, q: PDCode) -> PDCode:
    """Orientation-respecting connected sum, cutting both diagrams at their
    last edge and splicing ``p``'s last edge into ``q``'s first."""
    if not p.crossings:
        return q
    if not q.crossings:
        return p
    mp, mq = p.edge_count, q.edge_count
    total = mp + mq

    def is_incoming(cr, pos, m):
        a, b, c, d = cr
        if pos == 0:
            return True
        if pos in (1, 3):
            over_in = d if b == _succ(d, m) else b
            return cr[pos] == over_in
        return False

    out = []
    for cr in p.crossings:
        new = list(cr)
        for pos, x in enumerate(cr):
            if x == mp and is_incoming(cr, pos, mp):
                new[pos] = total
        out.append(tuple(new))
    for cr in q.crossings:
        new = [x + mp for x in cr]
        for pos, x in enumerate(cr):
            if x == mq and is_incoming(cr, pos, mq):
                new[pos] = mp
        out.append(tuple(new))
    return PDCode(tuple(out))
