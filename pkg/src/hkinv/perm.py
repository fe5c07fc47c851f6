"""Permutations and small permutation groups.

Points are 1-based and composition acts on the right: in ``p * q`` the
point ``x`` goes first through ``p`` and then through ``q``.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "TargetGroup",
    "ClosureTooLarge",
    "compose",
    "order",
    "parse_cycles",
    "format_cycles",
    "subgroup_closure",
    "canonical_form",
    "conjugate_vector",
    "s6_outer_automorphism",
    "parse_group",
]

AUT_ACTIONS = ("sn", "inner", "full")


class ClosureTooLarge(RuntimeError):
    """Raised when a generated subgroup exceeds the configured size bound."""


class Permutation:
    """A bijection of ``{1..n}`` stored as the tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(1, degree + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} out of range 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x} repeated")
                seen.add(x)
            for i, x in enumerate(cyc):
                img[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``, i.e. relabel points by ``g``."""
        img = [0] * self.degree
        for x in range(1, self.degree + 1):
            img[g(x) - 1] = g(self(x))
        return Permutation(img)

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def order(self) -> int:
        return order(self)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self):
        return self._hash

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right action: the result sends ``x`` to ``q(p(x))``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Permutation([qi[x - 1] for x in p.images])


def order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in p.cycles())) if not p.is_identity() else 1


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2)(3 4 5)"``.

    Points may be separated by spaces or commas, or written run together
    when the degree is below 10; ``"()"`` is the identity.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation text")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ValueError(f"malformed cycle text: {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        if len(body) == 1 and len(body[0]) > 1 and degree < 10:
            body = list(body[0])  # compact "(12345)"
        try:
            pts = [int(x) for x in body]
        except ValueError:
            raise ValueError(f"malformed cycle text: {text!r}") from None
        if pts:
            cycles.append(pts)
    if stripped[pos:].strip() or pos == 0:
        raise ValueError(f"malformed cycle text: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def subgroup_closure(gens: Iterable[Permutation], degree: int | None = None,
                     bound: int = 100_000) -> frozenset[Permutation]:
    """Subgroup generated by ``gens`` as an explicit element set.

    Breadth-first: every new element is multiplied on the right by each
    generator until nothing new appears.
    """
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators of different degrees")
    ident = Permutation.identity(degree)
    gens = [g for g in set(gens) if not g.is_identity()]
    elements = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in elements:
                elements.add(y)
                if len(elements) > bound:
                    raise ClosureTooLarge(f"closure exceeds {bound} elements")
                queue.append(y)
    return frozenset(elements)


def conjugate_vector(vec: Sequence[Permutation], g: Permutation) -> tuple[Permutation, ...]:
    return tuple(x.conjugate(g) for x in vec)


def _synthematic_totals() -> list[frozenset]:
    pts = range(1, 7)
    duads = [frozenset(d) for d in itertools.combinations(pts, 2)]
    synthemes = [frozenset(s) for s in itertools.combinations(duads, 3)
                 if len(frozenset().union(*s)) == 6]
    totals = []
    for combo in itertools.combinations(synthemes, 5):
        covered = [d for s in combo for d in s]
        if len(set(covered)) == 15:
            totals.append(frozenset(combo))
    return sorted(totals, key=lambda t: sorted(sorted(sorted(d) for d in s) for s in t))


def s6_outer_automorphism() -> dict[Permutation, Permutation]:
    """An outer automorphism of S6, as a lookup table on all 720 elements.

    S6 permutes its six synthematic totals; that action is the map.
    """
    totals = _synthematic_totals()
    index = {t: i for i, t in enumerate(totals)}
    table = {}
    for imgs in itertools.permutations(range(1, 7)):
        g = Permutation(imgs)

        def move(total):
            return frozenset(frozenset(frozenset(g(x) for x in d) for d in s) for s in total)

        table[g] = Permutation([index[move(t)] + 1 for t in totals])
    return table


class TargetGroup:
    """A finite permutation group together with the automorphism action used
    to identify homomorphisms.

    ``kind`` is ``"symmetric"``, ``"alternating"`` or ``"explicit"``. The
    action ``"sn"`` conjugates by the normalizer of the group in S_n (all of
    S_n for the symmetric and alternating kinds), ``"inner"`` conjugates by
    group elements only, and ``"full"`` adds the exceptional outer
    automorphism of A6/S6.
    """

    def __init__(self, kind: str, degree: int, generators: Sequence[Permutation] = (),
                 aut_action: str = "sn", name: str | None = None):
        if kind not in ("symmetric", "alternating", "explicit"):
            raise ValueError(f"unknown group kind {kind!r}")
        if aut_action not in AUT_ACTIONS:
            raise ValueError(f"unknown automorphism action {aut_action!r}")
        if any(g.degree != degree for g in generators):
            raise ValueError("generator degree does not match group degree")
        self.kind = kind
        self.degree = degree
        self.generators = tuple(generators)
        self.aut_action = aut_action
        self.name = name or {"symmetric": f"S{degree}", "alternating": f"A{degree}"}.get(kind, "G")

    @classmethod
    def symmetric(cls, n: int, aut_action: str = "sn") -> "TargetGroup":
        return cls("symmetric", n, aut_action=aut_action)

    @classmethod
    def alternating(cls, n: int, aut_action: str = "sn") -> "TargetGroup":
        return cls("alternating", n, aut_action=aut_action)

    @classmethod
    def explicit(cls, generators: Sequence[Permutation], degree: int | None = None,
                 aut_action: str = "sn", name: str | None = None) -> "TargetGroup":
        if degree is None:
            degree = generators[0].degree
        return cls("explicit", degree, generators, aut_action=aut_action, name=name)

    def with_action(self, aut_action: str) -> "TargetGroup":
        return TargetGroup(self.kind, self.degree, self.generators, aut_action, self.name)

    def __repr__(self):
        return f"TargetGroup({self.name}, action={self.aut_action})"

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted lexicographically by image tuple."""
        n = self.degree
        if self.kind == "symmetric":
            elts = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        elif self.kind == "alternating":
            elts = [g for g in (Permutation(p) for p in itertools.permutations(range(1, n + 1)))
                    if g.sign() == 1]
        else:
            elts = subgroup_closure(self.generators, n)
        return tuple(sorted(elts))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __contains__(self, p: Permutation) -> bool:
        return p in self.index

    @cached_property
    def index(self) -> dict[Permutation, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @cached_property
    def identity_index(self) -> int:
        return self.index[Permutation.identity(self.degree)]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        """``mul_table[i][j]`` is the index of ``elements[i] * elements[j]``."""
        idx = self.index
        elts = self.elements
        return [[idx[a * b] for b in elts] for a in elts]

    @cached_property
    def inv_table(self) -> list[int]:
        return [self.index[g.inverse()] for g in self.elements]

    @cached_property
    def order_table(self) -> list[int]:
        return [order(g) for g in self.elements]

    @cached_property
    def automorphisms(self) -> np.ndarray:
        """Array of shape (|Aut|, |G|): row ``a`` maps element indices under
        the a-th automorphism of the configured action. Row 0 is the identity.
        """
        idx = self.index
        elts = self.elements
        n = self.degree
        if self.aut_action == "inner":
            conjugators = list(elts)
        else:
            conjugators = [g for g in (Permutation(p) for p in itertools.permutations(range(1, n + 1)))
                           if self.kind != "explicit" or all(x.conjugate(g) in idx for x in self.generators)]
        maps = []
        for g in conjugators:
            maps.append([idx[x.conjugate(g)] for x in elts])
        if self.aut_action == "full" and n == 6 and self.kind != "explicit":
            outer = s6_outer_automorphism()
            twisted = [idx[outer[x]] for x in elts]
            maps.extend([[row[t] for t in twisted] for row in maps[:]])
        ident = list(range(len(elts)))
        table = np.unique(np.array(maps, dtype=np.int32), axis=0)
        # deterministic order with the identity first
        rows = [r for r in table.tolist() if r != ident]
        return np.array([ident] + rows, dtype=np.int32)

    @cached_property
    def class_representatives(self) -> tuple[int, ...]:
        """Indices of the lexicographically smallest element of each orbit of
        the automorphism action on single elements."""
        mins = self.automorphisms.min(axis=0)
        return tuple(int(i) for i in np.flatnonzero(mins == np.arange(self.order)))

    def closure_indices(self, gens: Iterable[int]) -> set[int]:
        mul = self.mul_table
        gens = [g for g in set(gens) if g != self.identity_index]
        elements = {self.identity_index}
        frontier = [self.identity_index]
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if y not in elements:
                        elements.add(y)
                        nxt.append(y)
            frontier = nxt
        return elements

    def generates(self, gens: Iterable[int]) -> bool:
        return len(self.closure_indices(gens)) == self.order


def _canonical_rows(table: np.ndarray, vec: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    rows = table[:, list(vec)]
    if rows.shape[1] == 0:
        return rows, np.zeros(len(rows), dtype=bool)
    best = rows[np.lexsort(rows.T[::-1])[0]]
    return best, np.all(rows == np.asarray(vec), axis=1)


def canonical_indices(group: TargetGroup, vec: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Canonical form and orbit size of an index vector under ``group``'s action."""
    table = group.automorphisms
    best, fixing = _canonical_rows(table, vec)
    if len(vec) == 0:
        return (), 1
    return tuple(int(x) for x in best), len(table) // int(fixing.sum())


def canonical_form(vec: Sequence[Permutation], group: TargetGroup) -> tuple[Permutation, ...]:
    """Lexicographically least vector in the orbit of ``vec``."""
    idx = group.index
    best, _ = canonical_indices(group, [idx[p] for p in vec])
    return tuple(group.elements[i] for i in best)


_GROUP_RE = re.compile(r"^\s*([ASDCZ])\s*(\d+)\s*$", re.IGNORECASE)


def parse_group(spec: str, aut_action: str = "sn") -> TargetGroup:
    """Parse ``"A5"``, ``"S4"``, ``"D10"`` (dihedral of order 10), ``"C5"``/``"Z5"`` or ``"1"``."""
    s = spec.strip()
    if s in ("1", "trivial"):
        return TargetGroup.explicit([], degree=1, aut_action=aut_action, name="1")
    m = _GROUP_RE.match(s)
    if not m:
        raise ValueError(f"unrecognized group spec {spec!r}")
    kind, n = m.group(1).upper(), int(m.group(2))
    if kind == "S":
        return TargetGroup.symmetric(n, aut_action)
    if kind == "A":
        return TargetGroup.alternating(n, aut_action)
    if kind == "D":
        if n % 2 or n < 6:
            raise ValueError("dihedral spec must be D<2k> with k >= 3")
        k = n // 2
        rot = Permutation([i % k + 1 for i in range(1, k + 1)])
        refl = Permutation([(1 - i) % k + 1 for i in range(1, k + 1)])
        return TargetGroup.explicit([rot, refl], aut_action=aut_action, name=f"D{n}")
    rot = Permutation([i % n + 1 for i in range(1, n + 1)])
    return TargetGroup.explicit([rot], aut_action=aut_action, name=f"Z{n}")
