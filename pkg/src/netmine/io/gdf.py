"""GDF: the CSV-like format with typed node and link attribute columns."""

from __future__ import annotations

from ..core import Network
from ..errors import ParseError, ReferentialError
from . import format_real

_NUMERIC_TYPES = {"double", "float", "integer", "int", "long"}


def _split_fields(line, line_no):
    """Comma-split with single-quote quoting, GUESS style."""
    fields, current, quoted = [], [], False
    i = 0
    while i < len(line):
        ch = line[i]
        if quoted:
            if ch == "'" and i + 1 < len(line) and line[i + 1] == "'":
                current.append("'")
                i += 1
            elif ch == "'":
                quoted = False
            else:
                current.append(ch)
        elif ch == "'":
            quoted = True
        elif ch == ",":
            fields.append("".join(current))
            current = []
        else:
            current.append(ch)
        i += 1
    if quoted:
        raise ParseError("unterminated quoted value", line=line_no)
    fields.append("".join(current))
    return [f.strip() for f in fields]


def _parse_header(line, line_no, first_field):
    body = line.split(">", 1)[1]
    columns = []
    for spec in _split_fields(body, line_no):
        parts = spec.split()
        if not parts:
            raise ParseError("empty column definition", line=line_no)
        name = parts[0]
        kind = parts[1].lower() if len(parts) > 1 else "varchar"
        kind = kind.split("(")[0]  # VARCHAR(32) and friends
        columns.append((name, "numerical" if kind in _NUMERIC_TYPES else "string"))
    if not columns or columns[0][0].lower() != first_field:
        raise ParseError(f"first {first_field} column must be named {first_field!r}", line=line_no)
    return columns


def read(text, directed=None):
    lines = text.splitlines()
    net = None
    node_columns = link_columns = None
    names = {}
    directed_field = None
    section = None
    seen_directed_values = set()
    pending_links = []

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        lowered = line.lower()
        if lowered.startswith("nodedef>"):
            if net is not None:
                raise ParseError("repeated nodedef> header", line=line_no)
            node_columns = _parse_header(line, line_no, "name")
            net = Network(directed=bool(directed))
            for name, kind in node_columns[1:]:
                net.add_node_attribute(name, kind)
            section = "nodes"
        elif lowered.startswith("edgedef>"):
            if net is None:
                raise ParseError("edgedef> before nodedef>", line=line_no)
            link_columns = _parse_header(line, line_no, "node1")
            if len(link_columns) < 2 or link_columns[1][0].lower() != "node2":
                raise ParseError("second edge column must be named 'node2'", line=line_no)
            directed_field = next((i for i, (name, _) in enumerate(link_columns)
                                   if name.lower() == "directed"), None)
            for i, (name, kind) in enumerate(link_columns):
                if i in (0, 1, directed_field):
                    continue
                net.add_link_attribute(name, kind)
            section = "links"
        elif section == "nodes":
            fields = _split_fields(line, line_no)
            if len(fields) > len(node_columns):
                raise ParseError(f"row has {len(fields)} fields, header defines "
                                 f"{len(node_columns)}", line=line_no)
            fields += [""] * (len(node_columns) - len(fields))
            name = fields[0]
            if name in names:
                raise ParseError(f"duplicate node name {name!r}", line=line_no)
            index = net.add_node()
            names[name] = index
            for (column_name, kind), value in zip(node_columns[1:], fields[1:]):
                _store(net.node_attributes[column_name], index, value, kind, line_no)
        elif section == "links":
            fields = _split_fields(line, line_no)
            if len(fields) > len(link_columns):
                raise ParseError(f"row has {len(fields)} fields, header defines "
                                 f"{len(link_columns)}", line=line_no)
            fields += [""] * (len(link_columns) - len(fields))
            for name in (fields[0], fields[1]):
                if name not in names:
                    raise ReferentialError(f"link endpoint {name!r} is not a declared node",
                                           line=line_no)
            if directed_field is not None:
                seen_directed_values.add(fields[directed_field].strip().lower())
            pending_links.append((line_no, fields))
        else:
            raise ParseError("expected a nodedef> header", line=line_no)

    if net is None:
        raise ParseError("empty input: no nodedef> header found", line=1)

    # A GDF directed column applies to the whole network here: mixed values
    # are rejected rather than silently flattened.
    if directed_field is not None and directed is None:
        truthy = {v in ("true", "1", "yes") for v in seen_directed_values if v}
        if len(truthy) > 1:
            raise ParseError("mixed directed=true/false links are not supported")
        if truthy == {True}:
            upgraded = Network(directed=True)
            upgraded.add_nodes(net.node_count)
            for name, column in net.node_attributes.items():
                upgraded.node_attributes[name] = column.copy()
            for name, column in net.link_attributes.items():
                upgraded.add_link_attribute(name, column.kind)
            net = upgraded

    for line_no, fields in pending_links:
        u, v = names[fields[0]], names[fields[1]]
        if u == v:
            continue
        index = net.add_link_if_absent(u, v)
        if index is None:
            continue
        for i, (name, kind) in enumerate(link_columns):
            if i in (0, 1, directed_field):
                continue
            _store(net.link_attributes[name], index, fields[i], kind, line_no)
    return net


def _store(column, index, text, kind, line_no):
    if text == "":
        column[index] = None
        return
    if kind == "numerical":
        try:
            column[index] = float(text)
        except ValueError:
            raise ParseError(f"expected a number for {column.name!r}, got {text!r}",
                             line=line_no) from None
    else:
        column[index] = text


def _quote(value):
    text = "" if value is None else str(value)
    if "," in text or "'" in text or text != text.strip():
        return "'" + text.replace("'", "''") + "'"
    return text


def _format_value(column, index):
    value = column[index]
    if value is None:
        return ""
    if column.kind == "numerical":
        return format_real(value)
    return _quote(value)


def write(net):
    lines = []
    node_columns = list(net.node_attributes.values())
    header = ["name VARCHAR"]
    header += [f"{c.name} {'DOUBLE' if c.kind == 'numerical' else 'VARCHAR'}"
               for c in node_columns]
    lines.append("nodedef>" + ",".join(header))
    for u in range(net.node_count):
        row = [f"v{u}"] + [_format_value(c, u) for c in node_columns]
        lines.append(",".join(row))
    link_columns = list(net.link_attributes.values())
    header = ["node1 VARCHAR", "node2 VARCHAR", "directed BOOLEAN"]
    header += [f"{c.name} {'DOUBLE' if c.kind == 'numerical' else 'VARCHAR'}"
               for c in link_columns]
    lines.append("edgedef>" + ",".join(header))
    flag = "true" if net.directed else "false"
    for index in range(net.link_count):
        u, v = net.link_ends(index)
        row = [f"v{u}", f"v{v}", flag] + [_format_value(c, index) for c in link_columns]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
