"""GraphML: the XML-based format with declared attribute keys."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from ..core import Network
from ..errors import ParseError, ReferentialError
from . import format_real

_NUMERIC_TYPES = {"double", "float", "int", "long"}


def _local(tag):
    return tag.rsplit("}", 1)[-1]


def read(text):
    if not text.strip():
        raise ParseError("empty input", line=1)
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise ParseError(f"malformed XML: {exc.msg.split(':')[0]}",
                         line=line, column=column) from None
    if _local(root.tag) != "graphml":
        raise ParseError(f"root element is <{_local(root.tag)}>, expected <graphml>")

    keys = {}
    for element in root:
        if _local(element.tag) != "key":
            continue
        key_id = element.get("id")
        name = element.get("attr.name", key_id)
        kind = "numerical" if element.get("attr.type", "string").lower() in _NUMERIC_TYPES \
            else "string"
        keys[key_id] = (element.get("for", "all"), name, kind)

    graphs = [element for element in root if _local(element.tag) == "graph"]
    if not graphs:
        raise ParseError("no <graph> element")
    if len(graphs) > 1:
        raise ParseError("multiple <graph> elements are not supported (one network per document)")
    graph = graphs[0]
    directed = graph.get("edgedefault", "undirected").lower() == "directed"
    net = Network(directed=directed)
    ids = {}

    def read_data(element, side, index):
        for child in element:
            if _local(child.tag) != "data":
                continue
            key_id = child.get("key")
            if key_id not in keys:
                raise ParseError(f"<data> references undeclared key {key_id!r}")
            scope, name, kind = keys[key_id]
            if scope not in (side, "all"):
                continue
            columns = net.node_attributes if side == "node" else net.link_attributes
            adder = net.add_node_attribute if side == "node" else net.add_link_attribute
            if name not in columns:
                adder(name, kind)
            value = child.text or ""
            if kind == "numerical":
                try:
                    columns[name][index] = float(value)
                except ValueError:
                    raise ParseError(f"expected a number for {name!r}, got {value!r}") from None
            else:
                columns[name][index] = value

    for element in graph:
        if _local(element.tag) != "node":
            continue
        node_id = element.get("id")
        if node_id is None:
            raise ParseError("<node> without id")
        if node_id in ids:
            raise ParseError(f"duplicate node id {node_id!r}")
        index = net.add_node()
        ids[node_id] = index
        read_data(element, "node", index)
    for element in graph:
        if _local(element.tag) != "edge":
            continue
        source, target = element.get("source"), element.get("target")
        if source is None or target is None:
            raise ParseError("<edge> without source/target")
        for endpoint in (source, target):
            if endpoint not in ids:
                raise ReferentialError(f"edge endpoint {endpoint!r} is not a declared node")
        u, v = ids[source], ids[target]
        if u == v:
            continue
        index = net.add_link_if_absent(u, v)
        if index is None:
            continue
        read_data(element, "edge", index)
    return net


def write(net):
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">']
    key_ids = {}
    for scope, columns in (("node", net.node_attributes), ("edge", net.link_attributes)):
        for column in columns.values():
            key_id = f"d{len(key_ids)}"
            key_ids[(scope, column.name)] = key_id
            attr_type = "double" if column.kind == "numerical" else "string"
            lines.append(f'  <key id="{key_id}" for="{scope}" '
                         f'attr.name={quoteattr(column.name)} attr.type="{attr_type}"/>')
    default = "directed" if net.directed else "undirected"
    lines.append(f'  <graph edgedefault="{default}">')

    def data_lines(scope, columns, index):
        out = []
        for column in columns.values():
            value = column[index]
            if value is None:
                continue
            text = format_real(value) if column.kind == "numerical" else escape(str(value))
            out.append(f'      <data key="{key_ids[(scope, column.name)]}">{text}</data>')
        return out

    for u in range(net.node_count):
        body = data_lines("node", net.node_attributes, u)
        if body:
            lines.append(f'    <node id="n{u}">')
            lines.extend(body)
            lines.append('    </node>')
        else:
            lines.append(f'    <node id="n{u}"/>')
    for index in range(net.link_count):
        u, v = net.link_ends(index)
        body = data_lines("edge", net.link_attributes, index)
        if body:
            lines.append(f'    <edge source="n{u}" target="n{v}">')
            lines.extend(body)
            lines.append('    </edge>')
        else:
            lines.append(f'    <edge source="n{u}" target="n{v}"/>')
    lines.append('  </graph>')
    lines.append('</graphml>')
    return "\n".join(lines) + "\n"
