"""Enumeration of homomorphisms from a finitely presented group into a finite
permutation group, up to the group's automorphism action.

Generators are assigned one at a time following a static plan. A generator
is either *branched* over the group elements or *deduced* from a relator in
which it is the only unassigned letter and occurs exactly once. Each relator
is checked as soon as all of its letters are assigned.

Symmetry breaking: when branching, only the least element of its orbit
under the stabilizer of the images assigned so far is tried. Every orbit of
homomorphisms keeps at least one representative; the survivors are then
collapsed by canonical form.
"""
from __future__ import annotations

import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .fpgroup import Presentation, evaluate
from .perm import Permutation, TargetGroup, canonical_indices, format_cycles

__all__ = [
    "Homomorphism",
    "HomClassSet",
    "SearchLimitExceeded",
    "enumerate_homs",
    "brute_force_enumerate",
    "format_listing",
    "to_json",
]

log = logging.getLogger(__name__)


class SearchLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Homomorphism:
    images: tuple[Permutation, ...]
    selected_images: tuple[Permutation, ...]
    surjective: bool
    orbit_size: int = 1

    def as_dict(self) -> dict:
        return {
            "images": [format_cycles(p) for p in self.images],
            "selected": [format_cycles(p) for p in self.selected_images],
            "surjective": self.surjective,
            "orbit_size": self.orbit_size,
        }


@dataclass(frozen=True)
class HomClassSet:
    classes: tuple[Homomorphism, ...]
    raw_count: int
    action: str
    group: str = ""

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def surjective(self) -> "HomClassSet":
        keep = tuple(h for h in self.classes if h.surjective)
        return HomClassSet(keep, sum(h.orbit_size for h in keep), self.action, self.group)


# A plan step is (generator, relator_to_solve_or_None, relators_to_check).
# Solving uses a relator "u g^e v" with g occurring once: g^e = u^-1 v^-1.

@dataclass(frozen=True)
class _Step:
    gen: int
    solve: tuple | None  # (prefix letters, exponent, suffix letters)
    checks: tuple[tuple[tuple[int, int], ...], ...]


def _letters(word) -> tuple[tuple[int, int], ...]:
    return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in word.letters)


def _plan(p: Presentation) -> list[_Step]:
    relators = [_letters(r) for r in p.relators if len(r)]
    gensets = [{g for g, _ in r} for r in relators]
    n = p.rank
    assigned: set[int] = set()
    checked: set[int] = set()
    steps = []
    while len(assigned) < n:
        gen, solve, solved_by = None, None, None
        for ri, r in enumerate(relators):
            if ri in checked:
                continue
            free = gensets[ri] - assigned
            if len(free) == 1:
                g = next(iter(free))
                pos = [i for i, (h, _) in enumerate(r) if h == g]
                if len(pos) == 1:
                    i = pos[0]
                    gen, solve, solved_by = g, (r[:i], r[i][1], r[i + 1:]), ri
                    break
        if gen is None:
            # branch on the generator that completes the most relators
            def score(g):
                closing = sum(1 for ri in range(len(relators))
                              if ri not in checked and gensets[ri] - assigned == {g})
                touching = sum(1 for s in gensets if g in s)
                return (closing, touching, -g)
            gen = max((g for g in range(n) if g not in assigned), key=score)
        assigned.add(gen)
        checks = []
        for ri, r in enumerate(relators):
            if ri not in checked and gensets[ri] <= assigned:
                checked.add(ri)
                if ri != solved_by:
                    checks.append(r)
        steps.append(_Step(gen, solve, tuple(checks)))
    return steps


class _Searcher:
    def __init__(self, p: Presentation, group: TargetGroup, node_limit: int):
        self.group = group
        self.mul = group.mul_table
        self.inv = group.inv_table
        self.ident = group.identity_index
        self.auts = group.automorphisms
        self.steps = _plan(p)
        self.n = p.rank
        self.node_limit = node_limit
        self.nodes = 0
        self.order = group.order

    def _word(self, img, letters) -> int:
        mul, inv = self.mul, self.inv
        r = self.ident
        for g, e in letters:
            x = img[g]
            r = mul[r][x if e > 0 else inv[x]]
        return r

    def candidates(self, stab: np.ndarray) -> list[int]:
        if len(stab) == 1:
            return list(range(self.order))
        mins = self.auts[stab].min(axis=0)
        return [int(i) for i in np.flatnonzero(mins == np.arange(self.order))]

    def run(self, top_choices: Sequence[int] | None = None) -> list[tuple[int, ...]]:
        img = [-1] * self.n
        out: list[tuple[int, ...]] = []
        stab = np.arange(len(self.auts))
        self._descend(0, img, stab, out, top_choices)
        return out

    def first_branch_choices(self) -> list[int]:
        return self.candidates(np.arange(len(self.auts)))

    def _descend(self, k, img, stab, out, top_choices):
        if k == len(self.steps):
            out.append(tuple(img))
            return
        step = self.steps[k]
        if step.solve is not None:
            prefix, e, suffix = step.solve
            u = self._word(img, prefix)
            v = self._word(img, suffix)
            val = self.inv[self.mul[v][u]]  # g^e = u^-1 v^-1 = (v u)^-1
            if e < 0:
                val = self.inv[val]
            img[step.gen] = val
            if all(self._word(img, r) == self.ident for r in step.checks):
                self._descend(k + 1, img, stab, out, top_choices)
            img[step.gen] = -1
            return
        choices = top_choices if (top_choices is not None and self._is_first_branch(k)) \
            else self.candidates(stab)
        for val in choices:
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise SearchLimitExceeded(f"node limit {self.node_limit} exceeded")
            img[step.gen] = val
            if all(self._word(img, r) == self.ident for r in step.checks):
                sub = stab[self.auts[stab, val] == val] if len(stab) > 1 else stab
                self._descend(k + 1, img, sub, out, top_choices)
        img[step.gen] = -1

    def _is_first_branch(self, k):
        return all(s.solve is not None for s in self.steps[:k])


def _worker(args):
    p, group, node_limit, chunk = args
    s = _Searcher(p, group, node_limit)
    found = s.run(chunk)
    return found, s.nodes


def _collect(p: Presentation, group: TargetGroup, vectors: Iterable[tuple[int, ...]],
             surjective_only: bool, canon=None) -> HomClassSet:
    canon = canon or (lambda v: canonical_indices(group, v))
    classes: dict[tuple[int, ...], int] = {}
    for v in vectors:
        c, size = canon(v)
        classes.setdefault(c, size)
    homs = []
    elts = group.elements
    for c in sorted(classes):
        surj = group.generates(c)
        if surjective_only and not surj:
            continue
        images = tuple(elts[i] for i in c)
        selected = tuple(evaluate(w, images) for w in p.selected)
        homs.append(Homomorphism(images, selected, surj, classes[c]))
    return HomClassSet(tuple(homs), sum(h.orbit_size for h in homs), group.aut_action, group.name)


def enumerate_homs(p: Presentation, group: TargetGroup, surjective_only: bool = False,
                   node_limit: int = 10**9, jobs: int = 1) -> HomClassSet:
    """All homomorphisms ``p -> group`` up to ``group.aut_action``.

    The trivial homomorphism is included unless ``surjective_only``.
    """
    if p.rank < 1:
        raise ValueError("presentation needs at least one generator")
    searcher = _Searcher(p, group, node_limit)
    if jobs > 1:
        first = searcher.first_branch_choices()
        chunks = [first[i::jobs] for i in range(jobs) if first[i::jobs]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
            results = list(ex.map(_worker, [(p, group, node_limit, c) for c in chunks]))
        vectors = [v for found, _ in results for v in found]
        nodes = sum(n for _, n in results)
    else:
        vectors = searcher.run()
        nodes = searcher.nodes
    log.info("searched %d nodes, %d candidate vectors", nodes, len(vectors))
    return _collect(p, group, vectors, surjective_only)


def _orbit_canonical(group: TargetGroup):
    """Canonical form by explicit orbit enumeration over Permutation objects.

    Independent of the automorphism tables used by the search.
    """
    from .perm import s6_outer_automorphism

    n = group.degree
    elts = set(group.elements)
    if group.aut_action == "inner":
        conj = list(group.elements)
    else:
        conj = [g for g in (Permutation(q) for q in itertools.permutations(range(1, n + 1)))
                if all(x.conjugate(g) in elts for x in group.generators)]
    maps = [lambda x, g=g: x.conjugate(g) for g in conj]
    if group.aut_action == "full" and n == 6 and group.kind != "explicit":
        outer = s6_outer_automorphism()
        maps += [lambda x, g=g: outer[x].conjugate(g) for g in conj]
    index = group.index

    def canon(v):
        vec = [group.elements[i] for i in v]
        orbit = {tuple(f(x) for x in vec) for f in maps}
        best = min(orbit, key=lambda t: tuple(x.images for x in t))
        return tuple(index[x] for x in best), len(orbit)

    return canon


def brute_force_enumerate(p: Presentation, group: TargetGroup, surjective_only: bool = False,
                          bound: int = 10**8) -> HomClassSet:
    """Test every assignment of generator images; the oracle for ``enumerate_homs``."""
    total = group.order ** p.rank
    if total > bound:
        raise SearchLimitExceeded(f"{total} assignments exceed bound {bound}")
    elts = group.elements
    index = group.index
    found = []
    for imgs in itertools.product(elts, repeat=p.rank):
        if all(evaluate(r, imgs).is_identity() for r in p.relators if len(r)):
            found.append(tuple(index[x] for x in imgs))
    return _collect(p, group, found, surjective_only, canon=_orbit_canonical(group))


def format_listing(p: Presentation, homs: HomClassSet) -> str:
    """Text listing in appcontour's verbose style."""
    lines = []
    for k, h in enumerate(homs.classes, 1):
        lines.append(f"====== Homomorphism #{k} defined by the permutations:")
        lines.extend(format_cycles(x) for x in h.images)
        for j, s in enumerate(h.selected_images, 1):
            lines.append(f"Selected element #{j} -> {format_cycles(s)}")
    lines.append(f"Result: {len(homs)}")
    return "\n".join(lines) + "\n"


def to_json(homs: HomClassSet) -> str:
    doc = {
        "group": homs.group,
        "action": homs.action,
        "count": len(homs),
        "raw_count": homs.raw_count,
        "classes": [h.as_dict() for h in homs.classes],
    }
    return json.dumps(doc, indent=2)
