"""DOT and CSV renderings. Output is byte-stable for fixed input."""

from __future__ import annotations

import math

from .geomtree import GeometricGraph
from .graphs import GraphHandle, eccentricities


def graph_to_dot(g: GraphHandle) -> str:
    lines = [f"graph {g.kind}_n{g.n} {{"]
    for i, v in enumerate(g.vertices):
        lines.append(f'  {i} [label="{v}"];')
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def circle_position(label: int, n: int, radius: float = 2.0) -> tuple[float, float]:
    """Label 1 at the top, the rest clockwise."""
    angle = 2 * math.pi * (label - 1) / n
    return radius * math.sin(angle), radius * math.cos(angle)


def tree_to_dot(tree: GeometricGraph) -> str:
    lines = ["graph tree {", "  layout=neato;", "  node [shape=circle];"]
    for v in tree.vertices:
        x, y = circle_position(v, tree.n)
        # "+ 0.0" folds -0.0 into 0.0
        lines.append(f'  {v} [pos="{x + 0.0:.4f},{y + 0.0:.4f}!"];')
    for e in tree.key:
        lines.append(f"  {e.a} -- {e.b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def eccentricities_csv(g: GraphHandle) -> str:
    rows = ["id,vertex,eccentricity"]
    for i, (v, e) in enumerate(zip(g.vertices, eccentricities(g))):
        rows.append(f'{i},"{v}",{e}')
    return "\n".join(rows) + "\n"
