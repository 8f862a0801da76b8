"""Valued quivers of seeds as arrow lists, DOT and plain text."""
from __future__ import annotations

from .seedcore import Seed

SHAPES = {"uf": "circle", "sf": "box", "hf": "box"}


def vertex_symmetrizers(s: Seed) -> dict[str, int]:
    """d_{i_k} for the positions of a word seed; empty for other vertices."""
    w = s.word
    if w is None:
        return {}
    d = w.cartan.d
    return {str(k): d[w[k] - 1] for k in range(1, len(w) + 1) if str(k) in s.vertices}


def arrows(s: Seed) -> dict[tuple[str, str], tuple[int, int]]:
    """{(i, j): (b_ij, -b_ji)} for every arrow i -> j touching an unfrozen vertex.

    For a frozen end b_ji is not stored; it is d_i b_ij / d_j when both
    symmetrizers are known and -b_ij otherwise.
    """
    d = vertex_symmetrizers(s)

    def value(i, j):
        b = s.b(i, j)
        if s.kind(i) != "uf" or s.kind(j) != "uf":
            if i in d and j in d:
                return b, d[i] * b // d[j]
            return b, b
        return b, -s.b(j, i)

    out = {}
    for i in s.vertices:
        for j in s.unfrozen:
            if i == j:
                continue
            b = s.b(i, j)
            if b > 0:
                out[(i, j)] = value(i, j)
            elif b < 0 and s.kind(i) != "uf":
                out[(j, i)] = value(j, i)
    return out


def to_dot(s: Seed, name: str = "seed") -> str:
    lines = [f"digraph {name} {{"]
    for v, k in zip(s.vertices, s.kinds):
        style = ', style=filled, fillcolor=black, fontcolor=white' if k == "hf" else ""
        lines.append(f'  "{v}" [shape={SHAPES[k]}{style}];')
    for (i, j), (a, b) in sorted(arrows(s).items(), key=lambda e: (s.row(e[0][0]), s.row(e[0][1]))):
        label = "" if (a, b) == (1, 1) else f' [label="{a}, {b}"]'
        lines.append(f'  "{i}" -> "{j}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(s: Seed) -> str:
    marks = {"uf": "o", "sf": "[]", "hf": "#"}
    lines = ["vertices: " + " ".join(f"{marks[k]}{v}" for v, k in zip(s.vertices, s.kinds))]
    for (i, j), (a, b) in sorted(arrows(s).items(), key=lambda e: (s.row(e[0][0]), s.row(e[0][1]))):
        lines.append(f"{i} -> {j}" + ("" if (a, b) == (1, 1) else f" ({a},{b})"))
    return "\n".join(lines) + "\n"
