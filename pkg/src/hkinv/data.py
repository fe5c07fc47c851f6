"""Bundled input files: fpgroup presentations, twist rules and PD codes."""
from __future__ import annotations

import configparser
from importlib import resources
from pathlib import Path

from .diagram import PDCode, parse_pd
from .fpgroup import Presentation, PresentationError, parse_presentation

__all__ = ["list_data", "read_text", "load_presentation", "load_pd", "load_rules",
           "parse_rules", "load_input"]


def _root():
    return resources.files("hkinv") / "data"


def list_data() -> list[str]:
    return sorted(p.name for p in _root().iterdir() if not p.name.startswith("_"))


def read_text(name: str) -> str:
    path = _root() / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled file {name!r}; have {list_data()}")
    return path.read_text()


def load_presentation(name: str) -> Presentation:
    return parse_presentation(read_text(name if "." in name else name + ".fpgroup"))


def load_pd(name: str) -> PDCode:
    return parse_pd(read_text(name if "." in name else name + ".pd"))


def parse_rules(text: str) -> dict[str, dict[str, str]]:
    """Rule sets from ini-style text: one ``[name]`` section per twist,
    ``role = word`` lines inside."""
    cp = configparser.ConfigParser(comment_prefixes=("#", ";"), inline_comment_prefixes=("#",),
                                   default_section="__none__")
    cp.optionxform = str
    cp.read_string(text)
    return {s: dict(cp[s]) for s in cp.sections()}


def load_rules(name: str) -> dict[str, dict[str, str]]:
    return parse_rules(read_text(name if "." in name else name + ".rules"))


def _resolve(path: str | Path) -> str:
    p = Path(path)
    if p.is_file():
        return p.read_text()
    try:
        return read_text(str(path))
    except FileNotFoundError:
        raise FileNotFoundError(f"{path}: no such file (nor a bundled data file)") from None


def load_input(path: str | Path) -> tuple[str, Presentation | PDCode]:
    """Read a file (or a bundled data file by name) and detect its kind.

    Returns ``("pd", PDCode)`` or ``("fpgroup", Presentation)``.
    """
    text = _resolve(path)
    body = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if body and all(ln[:1] in "Xx" and ln[1:2] in " \t[" for ln in body):
        return "pd", parse_pd(text)
    if not body:
        raise PresentationError(f"{path}: empty input")
    return "fpgroup", parse_presentation(text)
