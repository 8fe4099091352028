"""netmine: network analysis and mining toolkit.

Attributed graph model, network file formats, random and regular
generators, structural metrics, community detection, link scoring and
prediction, layout and SVG rendering, with a CLI (`netmine`) and a local
JSON API (`netmine serve`) on top.
"""

from .core import (
    AttributeColumn,
    CompactNetwork,
    Dendrogram,
    MembershipMatrix,
    Network,
    NodeScore,
    Partition,
    ScoreMatrix,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeColumn",
    "CompactNetwork",
    "Dendrogram",
    "MembershipMatrix",
    "Network",
    "NodeScore",
    "Partition",
    "ScoreMatrix",
    "__version__",
]
