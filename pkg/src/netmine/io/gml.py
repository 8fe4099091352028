"""GML: the hierarchical ASCII key-value format."""

from __future__ import annotations

import re

from ..core import Network
from ..errors import ParseError, ReferentialError
from . import format_real

_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|\[|\]|[^\s\[\]"]+')

_KNOWN_NODE_KEYS = ("id",)
_KNOWN_EDGE_KEYS = ("source", "target")


class _Tokenizer:
    def __init__(self, text):
        self.tokens = []
        for line_no, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0]
            for match in _TOKEN.finditer(body):
                self.tokens.append((match.group(0), line_no, match.start() + 1))
        self.position = 0

    def peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def next(self):
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input")
        self.position += 1
        return token


def _unescape(text):
    def repl(match):
        body = match.group(1)
        if body.startswith("#"):
            try:
                return chr(int(body[2:], 16) if body[1:2] in ("x", "X") else int(body[1:]))
            except ValueError:
                return match.group(0)
        return {"quot": '"', "amp": "&", "lt": "<", "gt": ">"}.get(body, match.group(0))

    return re.sub(r"&([A-Za-z]+|#x?[0-9A-Fa-f]+);", repl, text)


def _escape(text):
    out = text.replace("&", "&amp;").replace('"', "&quot;")
    return "".join(ch if 32 <= ord(ch) < 127 else f"&#{ord(ch)};" for ch in out)


def _parse_value(tokens):
    token, line, column = tokens.next()
    if token == "[":
        items = []
        while True:
            ahead = tokens.peek()
            if ahead is None:
                raise ParseError("unterminated list", line=line, column=column)
            if ahead[0] == "]":
                tokens.next()
                return items
            key_token, key_line, key_column = tokens.next()
            if key_token in ("[", "]") or key_token.startswith('"'):
                raise ParseError(f"expected a key, got {key_token!r}",
                                 line=key_line, column=key_column)
            items.append((key_token, _parse_value(tokens)))
    if token == "]":
        raise ParseError("unexpected ']'", line=line, column=column)
    if token.startswith('"'):
        return _unescape(token[1:-1].replace('\\"', '"'))
    try:
        if re.fullmatch(r"[+-]?\d+", token):
            return int(token)
        return float(token)
    except ValueError:
        return token  # bare words act as strings


def _items(value, line=None):
    if not isinstance(value, list):
        raise ParseError("expected a [...] list", line=line)
    return value


def read(text):
    tokens = _Tokenizer(text)
    graph_value = None
    while tokens.peek() is not None:
        key, line, column = tokens.next()
        if key in ("[", "]") or key.startswith('"'):
            raise ParseError(f"expected a top-level key, got {key!r}", line=line, column=column)
        value = _parse_value(tokens)
        if key.lower() == "graph":
            if graph_value is not None:
                raise ParseError("multiple graph sections", line=line, column=column)
            graph_value = _items(value, line)
    if graph_value is None:
        raise ParseError("no graph [...] section found", line=1)

    directed = any(key.lower() == "directed" and value in (1, 1.0)
                   for key, value in graph_value)
    net = Network(directed=directed)
    ids = {}
    node_entries = [value for key, value in graph_value if key.lower() == "node"]
    edge_entries = [value for key, value in graph_value if key.lower() == "edge"]
    for entry in node_entries:
        fields = dict(_normalize(_items(entry)))
        if "id" not in fields:
            raise ParseError("node without id")
        node_id = fields.pop("id")
        if node_id in ids:
            raise ParseError(f"duplicate node id {node_id!r}")
        index = net.add_node()
        ids[node_id] = index
        for key, value in fields.items():
            _attach(net, "node", key, value, index)
    for entry in edge_entries:
        fields = dict(_normalize(_items(entry)))
        if "source" not in fields or "target" not in fields:
            raise ParseError("edge without source/target")
        source, target = fields.pop("source"), fields.pop("target")
        for endpoint in (source, target):
            if endpoint not in ids:
                raise ReferentialError(f"edge endpoint {endpoint!r} is not a declared node")
        u, v = ids[source], ids[target]
        if u == v:
            continue
        index = net.add_link_if_absent(u, v)
        if index is None:
            continue
        for key, value in fields.items():
            _attach(net, "link", key, value, index)
    return net


def _normalize(items):
    # Later duplicates of a key win, matching a plain dict build.
    return [(key.lower() if key.lower() in ("id", "source", "target") else key, value)
            for key, value in items]


def _attach(net, side, key, value, index):
    from ..core import AttributeColumn

    columns = net.node_attributes if side == "node" else net.link_attributes
    adder = net.add_node_attribute if side == "node" else net.add_link_attribute
    if isinstance(value, list):
        value = _serialize_items(value)  # nested structure kept as its GML text
        kind = "string"
    elif isinstance(value, (int, float)):
        kind = "numerical"
    else:
        kind = "string"
    if key not in columns:
        adder(key, kind)
    column = columns[key]
    if column.kind == "numerical" and kind == "string":
        # A text value under a key seen as numeric demotes the column to text.
        column = AttributeColumn(key, "string",
                                 [None if v is None else format_real(v) for v in column.values])
        columns[key] = column
    if column.kind == "string" and isinstance(value, (int, float)):
        value = format_real(value)
    column[index] = value


def _serialize_value(value, indent):
    if isinstance(value, list):
        inner = "".join(f"{' ' * (indent + 2)}{k} {_serialize_value(v, indent + 2)}\n"
                        for k, v in value)
        return "[\n" + inner + " " * indent + "]"
    if isinstance(value, float):
        return format_real(value)
    if isinstance(value, int):
        return str(value)
    return '"' + _escape(str(value)) + '"'


def _serialize_items(items):
    return _serialize_value(items, 0)


def write(net):
    lines = ["graph ["]
    if net.directed:
        lines.append("  directed 1")
    for u in range(net.node_count):
        lines.append("  node [")
        lines.append(f"    id {u}")
        for column in net.node_attributes.values():
            value = column[u]
            if value is None:
                continue
            if column.kind == "numerical":
                lines.append(f"    {column.name} {format_real(value)}")
            else:
                lines.append(f'    {column.name} "{_escape(str(value))}"')
        lines.append("  ]")
    for index in range(net.link_count):
        u, v = net.link_ends(index)
        lines.append("  edge [")
        lines.append(f"    source {u}")
        lines.append(f"    target {v}")
        for column in net.link_attributes.values():
            value = column[index]
            if value is None:
                continue
            if column.kind == "numerical":
                lines.append(f"    {column.name} {format_real(value)}")
            else:
                lines.append(f'    {column.name} "{_escape(str(value))}"')
        lines.append("  ]")
    lines.append("]")
    return "\n".join(lines) + "\n"
