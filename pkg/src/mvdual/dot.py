"""Graphviz export of finite diagrams of multisets.

Each object is a cluster whose nodes are its points labelled with their
denominators; each arrow is one edge between clusters labelled with its
name and classification flags.  With ``point_edges`` the point map is drawn
as well.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .mscat import Construction
from .multiset import FiniteMultiset, MultisetArrow, classify


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def diagram_to_dot(objects: Mapping[str, FiniteMultiset],
                   arrows: Sequence[tuple[str, str, str, MultisetArrow]],
                   point_edges: bool = False, name: str = "diagram") -> str:
    """``arrows`` are ``(name, dom name, cod name, arrow)``."""
    lines = [f"digraph {_q(name)} {{", "  compound=true;", "  node [shape=box];"]
    anchor = {}
    for k, (oname, X) in enumerate(objects.items()):
        lines.append(f"  subgraph {_q('cluster_' + oname)} {{")
        lines.append(f"    label={_q(oname)};")
        if not len(X):
            node = f"{oname}/∅"
            lines.append(f"    {_q(node)} [label={_q('∅')}, shape=plaintext];")
            anchor[oname] = node
        for x, d in zip(X.points, X.denoms):
            lines.append(f"    {_q(oname + '/' + x)} [label={_q(f'{x} : {d}')}];")
            anchor.setdefault(oname, oname + "/" + x)
        lines.append("  }")
    for aname, src, dst, f in arrows:
        flags = ", ".join(classify(f).labels()) or "plain"
        lines.append(f"  {_q(anchor[src])} -> {_q(anchor[dst])} "
                     f"[label={_q(f'{aname} [{flags}]')}, ltail={_q('cluster_' + src)}, "
                     f"lhead={_q('cluster_' + dst)}];")
        if point_edges:
            for x, y in f.mapping.items():
                lines.append(f"  {_q(src + '/' + x)} -> {_q(dst + '/' + y)} [style=dashed, arrowsize=0.5];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def construction_to_dot(con: Construction, point_edges: bool = False) -> str:
    """The diagram of ``con`` together with its apex and legs."""
    objects = {f"D{i}": X for i, X in enumerate(con.diagram.objects)}
    objects["apex"] = con.apex
    arrows = [(f"d{k}", f"D{s}", f"D{t}", a) for k, (s, t, a) in enumerate(con.diagram.arrows)]
    for i, leg in enumerate(con.legs):
        if con.kind == "limit":
            arrows.append((f"leg{i}", "apex", f"D{i}", leg))
        else:
            arrows.append((f"leg{i}", f"D{i}", "apex", leg))
    return diagram_to_dot(objects, arrows, point_edges, name=con.kind)
