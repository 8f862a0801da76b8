"""Seed files: a JSON object with one line per matrix row.

Keys, in the order they are written::

    format     "clusterlift-seed/1"
    vertices   vertex labels
    kinds      "uf" | "sf" | "hf" per vertex
    B          one row per vertex, one column per unfrozen vertex
    variables  reference variable names
    degree     {"dim": m, "rows": [...]} or null
    lifting    {"D": [...], "I": [...], "nu": [...]}     (lifted seeds only)
    tags       {vertex: [alpha, v_letters, w_letters]}   (minor tags, optional)
    word       {"type": "A3", "letters": [...]}          (subscript order, optional)
    cluster    text form of each cluster variable        (only when not the reference seed)

Writing then reading then writing again reproduces the same bytes.
"""
from __future__ import annotations

import json
from typing import Any

from .laurent import from_text, to_text
from .lifting import LiftingConfig
from .rootsys import WeylWord, cartan
from .seedcore import DegreeConfig, Seed, new_seed

FORMAT = "clusterlift-seed/1"


def _row(r) -> str:
    return "[" + ", ".join(str(int(x)) for x in r) + "]"


def _grid(rows, indent: str) -> str:
    if not rows:
        return "[]"
    inner = (",\n" + indent + "  ").join(_row(r) for r in rows)
    return "[\n" + indent + "  " + inner + "\n" + indent + "]"


def _str_list(xs) -> str:
    return "[" + ", ".join(json.dumps(str(x)) for x in xs) + "]"


def nu_to_text(cfg: LiftingConfig, indent: str = "") -> str:
    return ("{\n" + indent + '  "D": ' + _str_list(cfg.D) + ",\n"
            + indent + '  "I": ' + _str_list(cfg.I) + ",\n"
            + indent + '  "nu": ' + _grid(cfg.nu, indent + "  ") + "\n" + indent + "}")


def nu_from_obj(obj: dict) -> LiftingConfig:
    try:
        return LiftingConfig(tuple(obj["D"]), tuple(obj["I"]), tuple(tuple(r) for r in obj["nu"]))
    except KeyError as exc:
        raise ValueError(f"lifting matrix is missing the key {exc}") from None


def dump_seed(s: Seed) -> str:
    parts = [f'  "format": {json.dumps(FORMAT)}',
             '  "vertices": ' + _str_list(s.vertices),
             '  "kinds": ' + _str_list(s.kinds),
             '  "B": ' + _grid(s.B, "  "),
             '  "variables": ' + _str_list(s.variables)]
    if s.degree is None:
        parts.append('  "degree": null')
    else:
        parts.append('  "degree": {\n    "dim": ' + str(s.degree.dim) + ',\n    "rows": '
                     + _grid(s.degree.rows, "    ") + "\n  }")
    if isinstance(s.nu, LiftingConfig):
        parts.append('  "lifting": ' + nu_to_text(s.nu, "  "))
    if s.tags:
        items = []
        for v in s.vertices:
            if v in s.tags:
                a, vw, ww = s.tags[v]
                items.append(f"    {json.dumps(v)}: [{int(a)}, {_row(vw)}, {_row(ww)}]")
        parts.append('  "tags": {\n' + ",\n".join(items) + "\n  }")
    if isinstance(s.word, WeylWord):
        parts.append('  "word": {"type": ' + json.dumps(s.word.cartan.label) + ', "letters": '
                     + _row(s.word.letters) + "}")
    if not s.is_reference():
        parts.append('  "cluster": [\n' + ",\n".join("    " + json.dumps(to_text(p)) for p in s.cluster)
                     + "\n  ]")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def load_seed(text: str) -> Seed:
    try:
        obj: dict[str, Any] = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"seed file is not valid JSON: {exc}") from None
    if obj.get("format") != FORMAT:
        raise ValueError(f"unsupported seed format {obj.get('format')!r}")
    for key in ("vertices", "kinds", "B"):
        if key not in obj:
            raise ValueError(f"seed file is missing the key {key!r}")
    variables = obj.get("variables")
    cluster = None
    if "cluster" in obj:
        cluster = [from_text(c, variables) for c in obj["cluster"]]
    deg = None
    if obj.get("degree") is not None:
        d = obj["degree"]
        deg = DegreeConfig(int(d["dim"]), tuple(tuple(r) for r in d["rows"]))
    extra: dict[str, Any] = {}
    if "lifting" in obj:
        extra["nu"] = nu_from_obj(obj["lifting"])
    if "tags" in obj:
        extra["tags"] = {k: (int(a), tuple(v), tuple(w)) for k, (a, v, w) in obj["tags"].items()}
    if "word" in obj:
        extra["word"] = WeylWord(tuple(obj["word"]["letters"]), cartan(obj["word"]["type"]))
    return new_seed(obj["vertices"], obj["kinds"], obj["B"], deg, cluster=cluster,
                    variables=variables, **extra)


def load_nu(text: str) -> LiftingConfig:
    try:
        return nu_from_obj(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ValueError(f"lifting file is not valid JSON: {exc}") from None


def dump_nu(cfg: LiftingConfig) -> str:
    return nu_to_text(cfg) + "\n"
