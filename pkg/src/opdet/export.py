"""Text, JSON, CSV and Graphviz DOT renderings.

Every renderer returns a string and is a pure function of its arguments, so
repeated runs are byte-identical.  JSON documents carry ``"schema": 1``.
"""

import csv
import io
import json

from .endofunctions import (
    all_functions,
    as_function,
    flatten,
    forest,
    is_bijective,
    require_acyclic,
)
from .expansion import coefficient_table, in_S_f
from .partitions import covers_below, enumerate_ordered_partitions
from .permutahedron import euler_characteristic

SCHEMA = 1


def _dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def _q(label):
    return '"' + str(label).replace('"', r"\"") + '"'


# --- partitions and the poset -----------------------------------------------


def partitions_text(n, cap=None):
    return "".join(f"{B}\n" for B in enumerate_ordered_partitions(n, cap=cap))


def partitions_json(n, cap=None):
    parts = [B.to_json() for B in enumerate_ordered_partitions(n, cap=cap)]
    return _dumps({"schema": SCHEMA, "n": n, "partitions": parts})


def poset_edges(n, direction="down", cap=None):
    """Covering pairs of the poset of ordered partitions.

    ``down`` gives ``B -> merge_adjacent(B, k)`` (finer to coarser);
    ``up`` reverses every edge (coarser to finer, as the Hasse diagram is
    usually drawn with the one-block partition at the bottom).
    """
    if direction not in ("down", "up"):
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    edges = []
    for B in enumerate_ordered_partitions(n, cap=cap):
        for C in covers_below(B):
            edges.append((B, C) if direction == "down" else (C, B))
    return edges


def poset_dot(n, direction="down", cap=None):
    lines = [f"digraph poset_{n} {{", "  rankdir=BT;"]
    for B in enumerate_ordered_partitions(n, cap=cap):
        lines.append(f"  {_q(B)};")
    for src, dst in poset_edges(n, direction, cap):
        lines.append(f"  {_q(src)} -> {_q(dst)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(n, direction="down", cap=None):
    nodes = [B.to_json() for B in enumerate_ordered_partitions(n, cap=cap)]
    edges = [[str(a), str(b)] for a, b in poset_edges(n, direction, cap)]
    return _dumps({"schema": SCHEMA, "n": n, "direction": direction, "nodes": nodes, "edges": edges})


# --- coefficients -----------------------------------------------------------

COEFF_FIELDS = ("function", "c_f", "is_bijective", "domain_size")


def coefficient_rows(n, cap=None):
    table = coefficient_table(n, cap=cap)
    rows = []
    for f in all_functions(n):
        rows.append(
            {
                "function": " ".join(map(str, f.table)),
                "c_f": table[f],
                "is_bijective": is_bijective(f),
                "domain_size": flatten(f).function.n,
            }
        )
    return rows


def coefficients_csv(n, cap=None):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COEFF_FIELDS, lineterminator="\n")
    w.writeheader()
    for row in coefficient_rows(n, cap):
        w.writerow({**row, "is_bijective": str(row["is_bijective"]).lower()})
    return buf.getvalue()


def coefficients_json(n, cap=None):
    return _dumps({"schema": SCHEMA, "n": n, "rows": coefficient_rows(n, cap)})


# --- polytope faces ---------------------------------------------------------


def polytope_faces(f, cap=None):
    """Every face with its dimension and whether it belongs to the faces of
    ``S_f``, plus the Euler characteristic of those faces."""
    f = as_function(f)
    require_acyclic(f, "polytope_faces")
    faces = []
    members = []
    for B in enumerate_ordered_partitions(f.n, cap=cap):
        inside = in_S_f(B, f)
        faces.append({"face": str(B), "dim": f.n - B.r, "in_gamma": inside})
        if inside:
            members.append(B)
    return faces, euler_characteristic(members)


def polytope_json(f, cap=None):
    f = as_function(f)
    faces, chi = polytope_faces(f, cap)
    return _dumps({"schema": SCHEMA, "function": str(f), "chi": chi, "faces": faces})


def polytope_dot(f, cap=None):
    """Face poset with the faces of ``S_f`` bold and the others dashed."""
    f = as_function(f)
    faces, chi = polytope_faces(f, cap)
    inside = {d["face"]: d["in_gamma"] for d in faces}
    lines = [
        "digraph gamma_f {",
        "  rankdir=BT;",
        f"  label={_q(f'f = {f}   chi = {chi}')};",
    ]
    for d in faces:
        style = "bold" if d["in_gamma"] else "dashed"
        lines.append(f"  {_q(d['face'])} [style={style}];")
    for B in enumerate_ordered_partitions(f.n, cap=cap):
        for C in covers_below(B):
            style = "bold" if inside[str(B)] and inside[str(C)] else "dashed"
            lines.append(f"  {_q(C)} -> {_q(B)} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- forests ----------------------------------------------------------------


def forest_dot(f):
    """Edges ``q -> f(q)`` for non-roots; each root carries a self-loop."""
    f = as_function(f)
    F = forest(f)
    lines = ["digraph forest {"]
    for q in range(1, f.n + 1):
        shape = "doublecircle" if q in F.roots else "circle"
        lines.append(f"  {q} [shape={shape}];")
    for q in sorted(F.parent):
        lines.append(f"  {q} -> {F.parent[q]};")
    for root in F.roots:
        lines.append(f"  {root} -> {root};")
    lines.append("}")
    return "\n".join(lines) + "\n"
