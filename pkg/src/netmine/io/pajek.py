"""Pajek .net: *Vertices / *Edges / *Arcs sections with 1-based indices.

Topology only: vertex labels survive as a "label" column, weights and
coordinates are ignored.  *Arcs lines make the network directed; *Edges
lines in a directed file are read as one arc per orientation.
"""

from __future__ import annotations

import re

from ..core import Network
from ..errors import ParseError, ReferentialError

_VERTEX = re.compile(r'^\s*(\d+)(?:\s+"((?:[^"\\]|\\.)*)"|\s+(\S+))?')


def read(text):
    lines = text.splitlines()
    n = None
    labels = {}
    edges, arcs = [], []
    section = None
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if line.startswith("*"):
            word = line.split()[0].lower()
            if word == "*vertices":
                parts = line.split()
                if len(parts) < 2:
                    raise ParseError("*Vertices without a count", line=line_no)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {parts[1]!r}", line=line_no) from None
                if n < 0:
                    raise ParseError("vertex count must be >= 0", line=line_no)
                section = "vertices"
            elif word in ("*edges", "*edgeslist"):
                section = "edges" if word == "*edges" else "edgeslist"
            elif word in ("*arcs", "*arcslist"):
                section = "arcs" if word == "*arcs" else "arcslist"
            elif word == "*network":
                continue
            else:
                raise ParseError(f"unsupported section {line.split()[0]!r}", line=line_no)
            continue
        if section == "vertices":
            match = _VERTEX.match(line)
            if not match:
                raise ParseError(f"bad vertex line {line!r}", line=line_no)
            index = int(match.group(1))
            if not 1 <= index <= n:
                raise ParseError(f"vertex id {index} outside 1..{n}", line=line_no)
            label = match.group(2)
            if label is None:
                label = match.group(3)
            if label is not None:
                labels[index - 1] = label.replace('\\"', '"')
        elif section in ("edges", "arcs"):
            parts = line.split()
            if len(parts) < 2:
                raise ParseError(f"bad link line {line!r}", line=line_no)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"bad link line {line!r}", line=line_no) from None
            (edges if section == "edges" else arcs).append((line_no, u, v))
        elif section in ("edgeslist", "arcslist"):
            parts = line.split()
            try:
                ids = [int(p) for p in parts]
            except ValueError:
                raise ParseError(f"bad list line {line!r}", line=line_no) from None
            if len(ids) < 2:
                raise ParseError(f"bad list line {line!r}", line=line_no)
            bucket = edges if section == "edgeslist" else arcs
            for v in ids[1:]:
                bucket.append((line_no, ids[0], v))
        else:
            raise ParseError("expected a *Vertices section first", line=line_no)

    if n is None:
        raise ParseError("no *Vertices section found", line=1)
    directed = bool(arcs)
    net = Network(directed=directed, node_count=n)
    if labels:
        column = net.add_node_attribute("label", "string")
        for index, label in labels.items():
            column[index] = label

    def add(line_no, u, v):
        if not (1 <= u <= n and 1 <= v <= n):
            raise ReferentialError(f"link ({u}, {v}) references a vertex outside 1..{n}",
                                   line=line_no)
        if u == v:
            return
        net.add_link_if_absent(u - 1, v - 1)

    for line_no, u, v in arcs:
        add(line_no, u, v)
    for line_no, u, v in edges:
        add(line_no, u, v)
        if directed:
            add(line_no, v, u)
    return net


def write(net):
    lines = [f"*Vertices {net.node_count}"]
    label_column = net.node_attributes.get("label")
    if label_column is not None:
        for u in range(net.node_count):
            value = label_column[u]
            if value is not None:
                escaped = str(value).replace('"', '\\"')
                lines.append(f'{u + 1} "{escaped}"')
    lines.append("*Arcs" if net.directed else "*Edges")
    for u, v in net.links():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
