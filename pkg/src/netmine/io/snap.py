"""SNAP edge lists: whitespace-separated integer pairs, "#" comments.

Node ids may be arbitrary integers; they are compacted to dense indices
in ascending id order, with the original ids kept in a numerical
"original_id" column.  Isolated nodes cannot be represented.
"""

from __future__ import annotations

from ..core import Network
from ..errors import ParseError


def read(text, directed=None):
    pairs = []
    seen_any = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            seen_any = True
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"expected two integer ids, got {line!r}", line=line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integer ids, got {line!r}", line=line_no) from None
        pairs.append((u, v))
        seen_any = True
    if not seen_any:
        raise ParseError("empty input", line=1)

    ids = sorted({u for u, _ in pairs} | {v for _, v in pairs})
    index_of = {node_id: index for index, node_id in enumerate(ids)}
    net = Network(directed=bool(directed), node_count=len(ids))
    column = net.add_node_attribute("original_id", "numerical")
    for node_id, index in index_of.items():
        column[index] = float(node_id)
    for u, v in pairs:
        if u == v:
            continue
        net.add_link_if_absent(index_of[u], index_of[v])
    return net


def write(net):
    column = net.node_attributes.get("original_id")

    def name(u):
        if column is not None and column.kind == "numerical" and column[u] is not None:
            value = column[u]
            if float(value).is_integer():
                return str(int(value))
        return str(u)

    lines = [f"# Nodes: {net.node_count} Links: {net.link_count} "
             f"({'directed' if net.directed else 'undirected'})"]
    for u, v in net.links():
        lines.append(f"{name(u)}\t{name(v)}")
    return "\n".join(lines) + "\n"
