"""Finite-group invariants built from homomorphism classes: the G-image of
meridians, the G-index polynomial and the meridian/longitude order table.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .fpgroup import Presentation, PresentationError
from .homsearch import HomClassSet, Homomorphism, enumerate_homs
from .perm import Permutation, TargetGroup, order, subgroup_closure

__all__ = [
    "SubgroupLabel",
    "MeridianImageSet",
    "IndexPolynomial",
    "ChiralityTable",
    "NotClosedError",
    "is_proper",
    "identify_subgroup",
    "normal_closure",
    "meridian_image",
    "g_image",
    "g_index",
    "chirality_table",
]


class NotClosedError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SubgroupLabel:
    order: int
    name: str

    @property
    def long_name(self) -> str:
        """Name as printed in tables: cyclic groups become ``Z/nZ``."""
        if self.name.startswith("Z") and self.name[1:].isdigit():
            return f"Z/{self.name[1:]}Z"
        return self.name

    def __str__(self):
        return self.name


def _abelian_invariants(elements: Sequence[Permutation]) -> list[int]:
    """Invariant factors ``d1 | d2 | ...`` of an abelian group given by its elements."""
    n = len(elements)
    orders = [order(g) for g in elements]
    primes = [q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))]
    primary: list[list[int]] = []
    for p in primes:
        part = p ** _valuation(n, p)
        # #{g : g^(p^k) = 1} = p^(number of cyclic p-factors of order >= p^k), summed over k
        killed = [1]
        k = 0
        while killed[-1] < part:
            k += 1
            killed.append(sum(1 for o in orders if (p ** k) % o == 0))
        at_least = [_valuation(killed[i] // killed[i - 1], p) for i in range(1, len(killed))]
        at_least.append(0)
        sizes = []
        for i in range(len(at_least) - 1):
            sizes += [p ** (i + 1)] * (at_least[i] - at_least[i + 1])
        primary.append(sorted(sizes, reverse=True))
    width = max((len(s) for s in primary), default=0)
    inv = [1] * width
    for sizes in primary:
        for i, q in enumerate(sizes):
            inv[i] *= q
    return sorted(inv)


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def identify_subgroup(elements: Iterable[Permutation], check: bool = True) -> SubgroupLabel:
    """Name a small permutation group from its element set.

    Recognizes the subgroup types of A5, S4 and A6; anything else gets a
    structural fallback name.
    """
    elts = list(set(elements))
    n = len(elts)
    if check:
        s = set(elts)
        if any(a * b not in s for a in elts for b in elts):
            raise NotClosedError("element set is not closed under multiplication")
    if n == 1:
        return SubgroupLabel(1, "1")
    orders = Counter(order(g) for g in elts)
    abelian = all(a * b == b * a for a in elts for b in elts)
    if abelian:
        inv = _abelian_invariants(elts)
        if len(inv) == 1:
            return SubgroupLabel(n, f"Z{n}")
        if inv == [2, 2]:
            return SubgroupLabel(n, "V4")
        return SubgroupLabel(n, "x".join(f"Z{d}" for d in inv))
    # dihedral: a cyclic subgroup of index 2, everything outside is an involution
    if n % 2 == 0 and orders.get(n // 2, 0) > 0:
        k = n // 2
        rot = next(g for g in elts if order(g) == k)
        cyc = {rot ** i for i in range(k)}
        if all(order(g) == 2 for g in elts if g not in cyc):
            return SubgroupLabel(n, "S3" if n == 6 else f"D{n}")
    if n == 12 and max(orders) == 3:
        return SubgroupLabel(n, "A4")
    if n == 24 and set(orders) == {1, 2, 3, 4}:
        return SubgroupLabel(n, "S4")
    if n == 60 and set(orders) == {1, 2, 3, 5}:
        return SubgroupLabel(n, "A5")
    if n == 120 and set(orders) == {1, 2, 3, 4, 5, 6}:
        return SubgroupLabel(n, "S5")
    if n == 360 and set(orders) == {1, 2, 3, 4, 5}:
        return SubgroupLabel(n, "A6")
    if n == 18 and orders == Counter({1: 1, 2: 9, 3: 8}):
        return SubgroupLabel(n, "(Z3xZ3):Z2")
    if n == 36 and orders == Counter({1: 1, 2: 9, 3: 8, 4: 18}):
        return SubgroupLabel(n, "(Z3xZ3):Z4")
    if n == 8 and orders.get(4, 0) == 6:
        return SubgroupLabel(n, "Q8")
    return SubgroupLabel(n, f"order{n}-nonabelian")


def normal_closure(gens: Iterable[Permutation], ambient: Iterable[Permutation],
                   degree: int) -> frozenset[Permutation]:
    """Smallest normal subgroup of ``ambient`` (an element set) containing ``gens``."""
    ambient = list(ambient)
    conj = {g.conjugate(h) for g in gens for h in ambient}
    return subgroup_closure(conj, degree)


def _check_selectors(h: Homomorphism, selectors: Sequence[int]):
    for i in selectors:
        if not 0 <= i < len(h.selected_images):
            raise IndexError(f"selector {i} out of range")


def is_proper(h: Homomorphism, surface_selectors: Sequence[int], group: TargetGroup) -> bool:
    """A surjection is proper when the boundary images do not generate the group."""
    if not h.surjective:
        raise ValueError("properness is defined for surjective homomorphisms only")
    _check_selectors(h, surface_selectors)
    gens = [h.selected_images[i] for i in surface_selectors]
    return len(subgroup_closure(gens, group.degree)) != group.order


def meridian_image(h: Homomorphism, meridian_selectors: Sequence[int],
                   surface_selectors: Sequence[int], degree: int) -> SubgroupLabel:
    _check_selectors(h, list(meridian_selectors) + list(surface_selectors))
    surface = subgroup_closure([h.selected_images[i] for i in surface_selectors], degree)
    kernel = normal_closure([h.selected_images[i] for i in meridian_selectors], surface, degree)
    return identify_subgroup(kernel, check=False)


class MeridianImageSet(Counter):
    """Multiset of subgroup labels."""

    def labels(self) -> list[SubgroupLabel]:
        return sorted(self.elements(), key=lambda s: (s.name, s.order))

    def render(self, long: bool = False) -> str:
        names = [s.long_name if long else s.name for s in self.labels()]
        return "{" + ", ".join(names) + "}"

    def __str__(self):
        return self.render()

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "MeridianImageSet":
        sizes = {"1": 1, "V4": 4, "A4": 12, "S3": 6, "S4": 24, "A5": 60, "A6": 360}
        out = cls()
        for nm in names:
            nm = nm.strip()
            if nm.startswith("Z/"):
                nm = "Z" + nm[2:-1]
            if nm.startswith(("Z", "D")) and nm[1:].isdigit():
                size = int(nm[1:])
            else:
                size = sizes[nm]
            out[SubgroupLabel(size, nm)] += 1
        return out


def _homs(p: Presentation, group: TargetGroup, homs: HomClassSet | None, **kw) -> HomClassSet:
    return homs if homs is not None else enumerate_homs(p, group, **kw)


def proper_classes(p: Presentation, group: TargetGroup, homs: HomClassSet | None = None,
                   **kw) -> list[Homomorphism]:
    homs = _homs(p, group, homs, **kw)
    surf = p.surface_selectors
    return [h for h in homs if h.surjective and is_proper(h, surf, group)]


def g_image(p: Presentation, group: TargetGroup, homs: HomClassSet | None = None,
            **kw) -> MeridianImageSet:
    if not p.meridian_selectors:
        raise PresentationError("presentation has no meridian roles")
    out = MeridianImageSet()
    for h in proper_classes(p, group, homs, **kw):
        out[meridian_image(h, p.meridian_selectors, p.surface_selectors, group.degree)] += 1
    return out


class IndexPolynomial(dict):
    """Sparse polynomial: exponent -> coefficient."""

    def __str__(self):
        terms = []
        for i in sorted(self):
            c = self[i]
            if c == 0:
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    def total(self) -> int:
        return sum(self.values())

    @classmethod
    def parse(cls, text: str) -> "IndexPolynomial":
        out = cls()
        for term in text.replace(" ", "").split("+"):
            coef, _, power = term.partition("x")
            out[int(power[1:]) if power else 1] = int(coef) if coef else 1
        return out


def g_index(p: Presentation, group: TargetGroup, meridian: int | str,
            homs: HomClassSet | None = None, **kw) -> IndexPolynomial:
    """Count all classes (surjective or not) by the order of the meridian's image."""
    k = p.role_index(meridian) if isinstance(meridian, str) else meridian
    if not 0 <= k < len(p.selected):
        raise IndexError(f"selector {k} out of range")
    homs = _homs(p, group, homs, **kw)
    counts = Counter(h.selected_images[k].order() for h in homs)
    return IndexPolynomial(sorted(counts.items()))


class ChiralityTable(dict):
    """(order of meridian image, order of meridian*longitude image) -> count."""

    def marginal(self) -> dict[int, int]:
        out: Counter = Counter()
        for (i, _), c in self.items():
            out[i] += c
        return dict(sorted(out.items()))

    def __str__(self):
        return "{" + ", ".join(f"({i},{j}): {c}" for (i, j), c in sorted(self.items())) + "}"


def chirality_table(p: Presentation, group: TargetGroup, m: int | str = "m1", l: int | str = "l1",
                    all_classes: bool = False, homs: HomClassSet | None = None,
                    **kw) -> ChiralityTable:
    """Partition classes by the orders of the images of ``m`` and ``m*l``.

    Only surjective classes are counted unless ``all_classes``.
    """
    mi = p.role_index(m) if isinstance(m, str) else m
    li = p.role_index(l) if isinstance(l, str) else l
    homs = _homs(p, group, homs, **kw)
    counts: Counter = Counter()
    for h in homs:
        if not (all_classes or h.surjective):
            continue
        mm, ll = h.selected_images[mi], h.selected_images[li]
        counts[(mm.order(), (mm * ll).order())] += 1
    return ChiralityTable(sorted(counts.items()))
