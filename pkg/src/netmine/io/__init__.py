"""Network file formats: GDF, GML, GraphML, Pajek, and SNAP edge lists.

Readers are tolerant of wild data: self-loops and repeated links are
skipped, links to undeclared nodes raise a referential error, malformed
syntax raises a parse error with the line (and column where known).
Writers emit UTF-8 text with LF line endings and reals with at most 12
significant digits.  docs/formats.md spells out each grammar and what
each format can and cannot carry.
"""

from __future__ import annotations

import enum
from pathlib import Path

from ..errors import UnknownFormatError


class FormatId(str, enum.Enum):
    GDF = "gdf"
    GML = "gml"
    GRAPHML = "graphml"
    PAJEK = "pajek"
    SNAP = "snap"


_EXTENSIONS = {
    ".gdf": FormatId.GDF,
    ".gml": FormatId.GML,
    ".graphml": FormatId.GRAPHML,
    ".xml": FormatId.GRAPHML,
    ".net": FormatId.PAJEK,
    ".paj": FormatId.PAJEK,
    ".txt": FormatId.SNAP,
    ".edges": FormatId.SNAP,
    ".edgelist": FormatId.SNAP,
}


def _coerce_format(format_id):
    if isinstance(format_id, FormatId):
        return format_id
    try:
        return FormatId(str(format_id).lower())
    except ValueError:
        raise UnknownFormatError(f"unknown format {format_id!r}; "
                                 f"expected one of {[f.value for f in FormatId]}") from None


def detect_format(path_or_header):
    """Map a file path (by extension, then content) or a text header to a format."""
    text = str(path_or_header)
    if isinstance(path_or_header, Path) or ("\n" not in text and "\x00" not in text):
        try:
            candidate = Path(path_or_header)
            suffix = candidate.suffix.lower()
        except ValueError:
            suffix = ""
            candidate = None
        if suffix in _EXTENSIONS:
            return _EXTENSIONS[suffix]
        if candidate is not None:
            try:
                return _sniff(candidate.read_text(encoding="utf-8", errors="replace")[:4096])
            except OSError:
                pass
    return _sniff(text)


def _sniff(text):
    import re

    stripped = text.lstrip("﻿ \t\r\n")
    lowered = stripped.lower()
    if lowered.startswith("nodedef>"):
        return FormatId.GDF
    if "<graphml" in lowered[:1024]:
        return FormatId.GRAPHML
    if lowered.startswith("*vertices") or lowered.startswith("*network"):
        return FormatId.PAJEK
    if re.match(r'(creator[^\n]*\n\s*)?(version[^\n]*\n\s*)?graph\s*\[', lowered):
        return FormatId.GML
    lines = [line for line in stripped.splitlines() if line.strip()]
    data = [line for line in lines if not line.lstrip().startswith("#")]
    if lines and not data:
        return FormatId.SNAP  # comments only, the edge-list idiom
    if data:
        fields = data[0].split()
        if len(fields) >= 2:
            try:
                int(fields[0]), int(fields[1])
            except ValueError:
                pass
            else:
                return FormatId.SNAP
    raise UnknownFormatError("could not recognize the network format from path or content")


def read_network(text, format_id, directed=None):
    """Parse ``text`` in the given format into a Network.

    ``directed`` overrides the default directedness of formats that do
    not encode it themselves (GDF without a directed field, SNAP).
    """
    from . import gdf, gml, graphml, pajek, snap

    format_id = _coerce_format(format_id)
    readers = {
        FormatId.GDF: gdf.read,
        FormatId.GML: gml.read,
        FormatId.GRAPHML: graphml.read,
        FormatId.PAJEK: pajek.read,
        FormatId.SNAP: snap.read,
    }
    if format_id in (FormatId.GDF, FormatId.SNAP):
        return readers[format_id](text, directed=directed)
    return readers[format_id](text)


def write_network(net, format_id):
    """Serialize a network; returns the document text."""
    from . import gdf, gml, graphml, pajek, snap

    format_id = _coerce_format(format_id)
    writers = {
        FormatId.GDF: gdf.write,
        FormatId.GML: gml.write,
        FormatId.GRAPHML: graphml.write,
        FormatId.PAJEK: pajek.write,
        FormatId.SNAP: snap.write,
    }
    return writers[format_id](net)


def read_network_file(path, format_id=None, directed=None):
    path = Path(path)
    if format_id is None:
        format_id = detect_format(path)
    return read_network(path.read_text(encoding="utf-8"), format_id, directed=directed)


def write_network_file(net, path, format_id=None):
    path = Path(path)
    if format_id is None:
        format_id = detect_format(path)
    path.write_text(write_network(net, format_id), encoding="utf-8", newline="\n")


def format_real(value):
    """Real number formatting shared by all writers: <= 12 significant digits."""
    text = format(float(value), ".12g")
    return text


__all__ = [
    "FormatId",
    "detect_format",
    "format_real",
    "read_network",
    "read_network_file",
    "write_network",
    "write_network_file",
]
