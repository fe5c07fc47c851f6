"""Command-line front end.

Every command builds a plain report dict; ``--format json`` dumps it and the
text renderer prints the same fields.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .data import load_input, parse_rules, _resolve
from .diagram import PDCode, PDError, format_pd, mirror, wirtinger
from .fpgroup import Presentation, PresentationError, format_presentation, substitute
from .homsearch import SearchLimitExceeded, enumerate_homs, format_listing
from .invariants import chirality_table, g_image, g_index, proper_classes
from .perm import TargetGroup, parse_group

log = logging.getLogger("hkinv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    group: str = "A5"
    aut: str = "sn"
    surjective: bool = False
    all_classes: bool = False
    verbose: bool = False
    fmt: str = "text"
    jobs: int = 1
    options: dict = field(default_factory=dict)

    def target(self) -> TargetGroup:
        try:
            return parse_group(self.group, self.aut)
        except ValueError as e:
            raise UsageError(str(e)) from None


def _presentation(path: str) -> tuple[Presentation, str]:
    kind, obj = load_input(path)
    if kind == "pd":
        return wirtinger(obj), kind
    return obj, kind


def _pd(path: str) -> PDCode:
    kind, obj = load_input(path)
    if kind != "pd":
        raise UsageError(f"{path}: expected a PD code")
    return obj


def _table_dict(t) -> dict[str, int]:
    return {f"{i},{j}": c for (i, j), c in sorted(t.items())}


def cmd_homcount(cfg: RunConfig) -> dict:
    p, _ = _presentation(cfg.inputs[0])
    homs = enumerate_homs(p, cfg.target(), surjective_only=cfg.surjective, jobs=cfg.jobs)
    rep = {"command": "homcount", "input": cfg.inputs[0], "group": cfg.group, "aut": cfg.aut,
           "surjective_only": cfg.surjective, "count": len(homs), "raw_count": homs.raw_count}
    if cfg.verbose:
        rep["classes"] = [h.as_dict() for h in homs]
        rep["listing"] = format_listing(p, homs)
    return rep


def cmd_gimage(cfg: RunConfig) -> dict:
    p, _ = _presentation(cfg.inputs[0])
    g = cfg.target()
    homs = enumerate_homs(p, g, surjective_only=True, jobs=cfg.jobs)
    img = g_image(p, g, homs=homs)
    rep = {"command": "gimage", "input": cfg.inputs[0], "group": cfg.group, "aut": cfg.aut,
           "proper_classes": len(proper_classes(p, g, homs=homs)),
           "image": [s.name for s in img.labels()]}
    return rep


def cmd_gindex(cfg: RunConfig) -> dict:
    p, _ = _presentation(cfg.inputs[0])
    g = cfg.target()
    role = cfg.options.get("meridian") or "m1"
    poly = g_index(p, g, role, surjective_only=cfg.surjective, jobs=cfg.jobs)
    return {"command": "gindex", "input": cfg.inputs[0], "group": cfg.group, "aut": cfg.aut,
            "meridian": role, "polynomial": str(poly),
            "coefficients": {str(k): v for k, v in sorted(poly.items())}, "total": poly.total()}


def cmd_chirality(cfg: RunConfig) -> dict:
    g = cfg.target()
    m, l = cfg.options.get("m") or "m1", cfg.options.get("l") or "l1"
    tables = []
    for path in cfg.inputs:
        p, _ = _presentation(path)
        t = chirality_table(p, g, m, l, all_classes=cfg.all_classes, jobs=cfg.jobs)
        tables.append(_table_dict(t))
    rep = {"command": "chirality", "inputs": cfg.inputs, "group": cfg.group, "aut": cfg.aut,
           "all_classes": cfg.all_classes, "tables": tables}
    if len(tables) == 2:
        a, b = tables
        diff = {k: [a.get(k, 0), b.get(k, 0)] for k in sorted(set(a) | set(b))
                if a.get(k, 0) != b.get(k, 0)}
        rep["diff"] = diff
        rep["verdict"] = f"chiral (distinguished by {cfg.group})" if diff \
            else f"not distinguished by {cfg.group}"
    return rep


def cmd_twist(cfg: RunConfig) -> dict:
    p, _ = _presentation(cfg.inputs[0])
    rules_path = cfg.options.get("rules")
    name = cfg.options.get("twist")
    if not rules_path or not name:
        raise UsageError("twist needs --rules FILE and --twist NAME")
    rules = parse_rules(_resolve(rules_path))
    if name not in rules:
        raise UsageError(f"unknown rule set {name!r}; have {sorted(rules)}")
    q = substitute(p, rules[name])
    note = f"# {name} twist of {Path(cfg.inputs[0]).name}: " + \
        ", ".join(f"{k} = {v}" for k, v in rules[name].items())
    q = Presentation(q.generators, q.relators, q.selected, q.roles, q.comments + (note,))
    return {"command": "twist", "input": cfg.inputs[0], "twist": name,
            "roles": list(q.role_names), "output": format_presentation(q)}


def cmd_wirtinger(cfg: RunConfig) -> dict:
    pd = _pd(cfg.inputs[0])
    p = wirtinger(pd, base_edge=cfg.options.get("base_edge") or 1)
    return {"command": "wirtinger", "input": cfg.inputs[0], "output": format_presentation(p)}


def cmd_mirror(cfg: RunConfig) -> dict:
    pd = _pd(cfg.inputs[0])
    mp = mirror(pd)
    mp = PDCode(mp.crossings, pd.comments + (f"# mirror image of {Path(cfg.inputs[0]).name}",))
    return {"command": "mirror", "input": cfg.inputs[0], "output": format_pd(mp)}


COMMANDS = {
    "homcount": cmd_homcount,
    "gimage": cmd_gimage,
    "gindex": cmd_gindex,
    "chirality": cmd_chirality,
    "twist": cmd_twist,
    "wirtinger": cmd_wirtinger,
    "mirror": cmd_mirror,
}


def render_text(rep: dict) -> str:
    cmd = rep["command"]
    if cmd == "homcount":
        out = rep.get("listing") or f"Result: {rep['count']}\n"
        return out
    if cmd == "gimage":
        return "{" + ", ".join(rep["image"]) + "}\n"
    if cmd == "gindex":
        return rep["polynomial"] + "\n"
    if cmd == "chirality":
        lines = []
        for path, t in zip(rep["inputs"], rep["tables"]):
            body = ", ".join(f"({k}): {v}" for k, v in t.items())
            lines.append(f"{path}: {{{body}}}")
        if "diff" in rep:
            for k, (a, b) in rep["diff"].items():
                lines.append(f"  ({k}): {a} vs {b}")
            lines.append(rep["verdict"])
        return "\n".join(lines) + "\n"
    return rep["output"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="A5", help="target group: A5, S4, A6, D10, Z5, ...")
    common.add_argument("--aut", choices=("sn", "inner", "full"), default="sn",
                        help="automorphisms used to identify homomorphisms (default: conjugation "
                             "by the normalizer in the symmetric group)")
    excl = common.add_mutually_exclusive_group()
    excl.add_argument("--surjective", action="store_true", help="count surjective classes only")
    excl.add_argument("--all-classes", action="store_true",
                      help="chirality: count every class, not only surjective ones")
    common.add_argument("--verbose", "-v", action="store_true")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--jobs", "-j", type=int, default=1, help="worker processes for the search")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")

    ap = argparse.ArgumentParser(prog="hkinv", description="Finite-group invariants of knots "
                                 "and handlebody knots.")
    sub = ap.add_subparsers(dest="command", required=True)
    s = sub.add_parser("homcount", parents=[common], help="count homomorphism classes")
    s.add_argument("input")
    s = sub.add_parser("gimage", parents=[common], help="G-image of meridians")
    s.add_argument("input")
    s = sub.add_parser("gindex", parents=[common], help="G-index polynomial")
    s.add_argument("input")
    s.add_argument("--meridian", default="m1", help="role of the meridian (default m1)")
    s = sub.add_parser("chirality", parents=[common], help="(order m, order ml) table")
    s.add_argument("input")
    s.add_argument("--compare", help="second input to compare against")
    s.add_argument("--meridian", dest="m", default="m1")
    s.add_argument("--longitude", dest="l", default="l1")
    s = sub.add_parser("twist", parents=[common], help="apply a twist substitution")
    s.add_argument("input")
    s.add_argument("--rules", required=True, help="rules file (ini sections)")
    s.add_argument("--twist", required=True, help="rule set name, e.g. -A1")
    s = sub.add_parser("wirtinger", parents=[common], help="PD code to fpgroup")
    s.add_argument("input")
    s.add_argument("--base-edge", type=int, default=1)
    s = sub.add_parser("mirror", parents=[common], help="mirror a PD code")
    s.add_argument("input")
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    inputs = [ns.input]
    if getattr(ns, "compare", None):
        inputs.append(ns.compare)
    if ns.jobs < 1:
        raise UsageError("--jobs must be positive")
    opts = {k: getattr(ns, k, None) for k in ("meridian", "m", "l", "rules", "twist", "base_edge")}
    return RunConfig(ns.command, inputs, ns.group, ns.aut, ns.surjective, ns.all_classes,
                     ns.verbose, ns.fmt, ns.jobs, opts)


def run(cfg: RunConfig) -> dict:
    t0 = time.perf_counter()
    rep = COMMANDS[cfg.command](cfg)
    log.info("%s finished in %.2fs", cfg.command, time.perf_counter() - t0)
    return rep


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    # argparse usage errors exit with status 2 on their own
    ns = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = _config(ns)
        rep = run(cfg)
    except UsageError as e:
        print(f"hkinv: error: {e}", file=sys.stderr)
        return 2
    except (FileNotFoundError, PresentationError, PDError, ValueError, IndexError) as e:
        print(f"hkinv: error: {e}", file=sys.stderr)
        return 1
    except SearchLimitExceeded as e:
        print(f"hkinv: search aborted: {e}", file=sys.stderr)
        return 1
    text = json.dumps(rep, indent=2) + "\n" if cfg.fmt == "json" else render_text(rep)
    if ns.output:
        Path(ns.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
