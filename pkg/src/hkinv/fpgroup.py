"""Finitely presented groups with selected elements.

The text format is the one used by appcontour::

    fpgroup {<a,b,c,d,e,f; baCA,faDA,feDAd,acEC,BcFDf; b,FADadaf,A,FACdaf>}

Lowercase letters are generators, uppercase letters their inverses, and the
optional third field lists selected elements. Comment lines start with ``#``;
a line ``# roles: m1,m2,l1,l2`` names the selected elements.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from .perm import Permutation

__all__ = [
    "Word",
    "Presentation",
    "PresentationError",
    "parse_presentation",
    "format_presentation",
    "parse_word",
    "free_reduce",
    "cyclic_reduce",
    "invert",
    "evaluate",
    "substitute",
    "parse_rule_word",
    "abelianized_exponent_matrix",
    "abelian_invariants",
]


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    """A word in the generators: ``+k`` is generator ``k-1``, ``-k`` its inverse."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(x == 0 for x in self.letters):
            raise ValueError("letter 0 is not allowed")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        return Word(base.letters * abs(k))

    def format(self, names: Sequence[str]) -> str:
        return "".join(names[x - 1] if x > 0 else _upper(names[-x - 1]) for x in self.letters)

    def generators(self) -> set[int]:
        return {abs(x) - 1 for x in self.letters}


def _upper(name: str) -> str:
    return name[0].upper() + name[1:]


def free_reduce(w: Word) -> Word:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return Word(tuple(out))


def cyclic_reduce(w: Word) -> Word:
    letters = free_reduce(w).letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return Word(letters[i:j])


def invert(w: Word) -> Word:
    return Word(tuple(-x for x in reversed(w.letters)))


def evaluate(w: Word, images: Sequence[Permutation]) -> Permutation:
    """Left-to-right product of the generator images along ``w``."""
    if not images:
        raise ValueError("empty image vector")
    degree = images[0].degree
    inverses: dict[int, Permutation] = {}
    result = list(range(1, degree + 1))
    for x in w.letters:
        if x > 0:
            g = images[x - 1]
        else:
            g = inverses.get(-x)
            if g is None:
                g = inverses[-x] = images[-x - 1].inverse()
        gi = g.images
        result = [gi[p - 1] for p in result]
    return Permutation(result)


_ROLE_RE = re.compile(r"^[mlbs]\d+$")


def _default_roles(k: int) -> tuple[str, ...]:
    # two selected elements are a knot's m1,l1; four a handcuff's m1,m2,l1,l2
    if k == 2:
        return ("m1", "l1")
    if k == 4:
        return ("m1", "m2", "l1", "l2")
    return tuple(f"s{i + 1}" for i in range(k))


@dataclass(frozen=True)
class Presentation:
    """Generators, relators and selected elements of a finitely presented group.

    ``roles`` names each selected element: ``m<k>`` meridians, ``l<k>`` the
    longitude paired with ``m<k>``, ``b<k>`` auxiliary boundary words that
    only help generate the boundary subgroup, ``s<k>`` anything else.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    selected: tuple[Word, ...] = ()
    roles: tuple[str, ...] | None = None  # None means the default naming
    comments: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.generators:
            raise PresentationError("empty generator list")
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        for name in self.generators:
            if not re.fullmatch(r"[a-z]\d*", name):
                raise PresentationError(f"bad generator name {name!r}")
        n = len(self.generators)
        for w in self.relators + self.selected:
            if any(abs(x) > n for x in w.letters):
                raise PresentationError("letter index out of range")
        if self.roles is None:
            object.__setattr__(self, "roles", _default_roles(len(self.selected)))
        else:
            object.__setattr__(self, "roles", tuple(self.roles))
            if len(self.roles) != len(self.selected):
                raise PresentationError("role count does not match selected elements")
            if len(set(self.roles)) != len(self.roles):
                raise PresentationError("duplicate role names")
            for r in self.roles:
                if not _ROLE_RE.match(r):
                    raise PresentationError(f"bad role name {r!r}")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def role_names(self) -> tuple[str, ...]:
        return self.roles

    def role_index(self, role: str) -> int:
        try:
            return self.role_names.index(role)
        except ValueError:
            raise PresentationError(f"no selected element with role {role!r}") from None

    def selected_by_role(self) -> dict[str, Word]:
        return dict(zip(self.role_names, self.selected))

    @property
    def meridian_selectors(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.role_names) if r[0] == "m")

    @property
    def surface_selectors(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.role_names) if r[0] in "mlb")

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def format(self, bare: bool = False) -> str:
        return format_presentation(self, bare=bare)


_TOKEN_RE = re.compile(r"[A-Za-z]\d*")


def parse_word(text: str, names: Sequence[str]) -> Word:
    lookup = {n: i + 1 for i, n in enumerate(names)}
    text = text.strip()
    letters = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise PresentationError(f"unexpected text in word {text!r}")
        pos = m.end()
        tok = m.group(0)
        low = tok[0].lower() + tok[1:]
        if low not in lookup:
            raise PresentationError(f"unknown letter {tok!r}")
        letters.append(lookup[low] if tok[0].islower() else -lookup[low])
    if text[pos:].strip():
        raise PresentationError(f"unexpected text in word {text!r}")
    return Word(tuple(letters))


def _split_list(text: str) -> list[str]:
    text = text.strip()
    if not text:
        return []
    return [t.strip() for t in text.split(",")]


def parse_presentation(text: str) -> Presentation:
    """Parse the ``fpgroup {<gens; relators; selected>}`` format.

    A bare ``<...>`` body is accepted too. Words are kept exactly as written.
    """
    comments = []
    roles = None
    body_lines = []
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#"):
            comments.append(line)
            m = re.match(r"#\s*roles\s*:\s*(.*)$", s)
            if m:
                roles = tuple(r.strip() for r in m.group(1).split(",") if r.strip())
        elif s:
            body_lines.append(s)
    body = " ".join(body_lines)
    m = re.fullmatch(r"\s*(?:fpgroup\s*\{\s*)?<([^<>]*)>\s*(\}?)\s*", body)
    if not m:
        raise PresentationError("unbalanced or missing delimiters")
    if body.lstrip().startswith("fpgroup") != (m.group(2) == "}"):
        raise PresentationError("unbalanced braces")
    fields = m.group(1).split(";")
    if len(fields) > 3:
        raise PresentationError("too many fields")
    names = _split_list(fields[0])
    if not names:
        raise PresentationError("empty generator list")
    for n in names:
        if not re.fullmatch(r"[a-z]\d*", n):
            raise PresentationError(f"bad generator name {n!r}")
    relators = tuple(parse_word(w, names) for w in _split_list(fields[1])) if len(fields) > 1 else ()
    selected = tuple(parse_word(w, names) for w in _split_list(fields[2])) if len(fields) > 2 else ()
    return Presentation(tuple(names), relators, selected, roles, tuple(comments))


def format_presentation(p: Presentation, bare: bool = False, comments: bool = True) -> str:
    names = p.generators
    parts = [",".join(names), ",".join(w.format(names) for w in p.relators)]
    if p.selected:
        parts.append(",".join(w.format(names) for w in p.selected))
    body = "<" + "; ".join(parts) + ">"
    text = body if bare else "fpgroup {" + body + "}"
    header = []
    if comments:
        header = [c for c in p.comments if not re.match(r"\s*#\s*roles\s*:", c)]
        if p.roles:
            header.append("# roles: " + ",".join(p.roles))
    return "\n".join(header + [text]) + "\n" if header else text + "\n"


_RULE_TOKEN = re.compile(r"\s*([mlbsMLBS]\d+)(?:\s*\^\s*([+-]?\d+))?")


def parse_rule_word(text: str) -> list[tuple[str, int]]:
    """Parse a word in role symbols, e.g. ``"l1 m1 m1"`` or ``"m1^-1 L1 m1"``.

    An uppercase role symbol is the inverse; ``^k`` raises to an integer power.
    """
    out = []
    pos = 0
    text = text.strip()
    if text in ("", "1"):
        return out
    while pos < len(text):
        m = _RULE_TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"bad rule word {text!r}")
        pos = m.end()
        sym = m.group(1)
        exp = int(m.group(2)) if m.group(2) else 1
        if sym[0].isupper():
            sym, exp = sym.lower(), -exp
        out.append((sym, exp))
    return out


def substitute(p: Presentation, rules: Mapping[str, str | Sequence[tuple[str, int]]],
               keep_boundary: bool = True) -> Presentation:
    """Replace selected elements by words in the current selected elements.

    ``rules`` maps a role (``"m2"``) to a word in role symbols (``"m2 l2"``).
    All rules are expanded against the *current* words simultaneously and the
    results are freely reduced. With ``keep_boundary`` the displaced words are
    kept as auxiliary ``b<k>`` entries, so the subgroup generated by all
    boundary words does not change.
    """
    current = p.selected_by_role()
    new = dict(current)
    for role, rule in rules.items():
        if role not in current:
            raise PresentationError(f"rule target {role!r} is not a selected role")
        tokens = parse_rule_word(rule) if isinstance(rule, str) else list(rule)
        w = Word()
        for sym, exp in tokens:
            if sym not in current:
                raise PresentationError(f"rule references untagged symbol {sym!r}")
            w = w * current[sym] ** exp
        new[role] = free_reduce(w)
    roles = list(p.role_names)
    selected = [new[r] for r in roles]
    if keep_boundary:
        used = {r for r in roles if r[0] == "b"}
        k = 1
        for r in p.role_names:
            if r in rules and r[0] in "ml" and free_reduce(new[r]) != free_reduce(current[r]):
                while f"b{k}" in used:
                    k += 1
                roles.append(f"b{k}")
                used.add(f"b{k}")
                selected.append(current[r])
    return replace(p, selected=tuple(selected), roles=tuple(roles))


def abelianized_exponent_matrix(p: Presentation) -> np.ndarray:
    """Signed exponent sums: rows are relators, columns generators."""
    mat = np.zeros((len(p.relators), p.rank), dtype=np.int64)
    for r, w in enumerate(p.relators):
        for x in w.letters:
            mat[r, abs(x) - 1] += 1 if x > 0 else -1
    return mat


def abelian_invariants(p: Presentation) -> list[int]:
    """Invariants of the abelianization, ``0`` standing for a free ``Z`` factor.

    ``[0]`` means the abelianization is infinite cyclic.
    """
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    mat = abelianized_exponent_matrix(p)
    n = p.rank
    if mat.shape[0] == 0:
        return [0] * n
    snf = smith_normal_form(Matrix(mat.tolist()), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    diag += [0] * (n - len(diag))
    return sorted((d for d in diag if d != 1), key=lambda d: (d == 0, d))
