"""Named test-corpus graphs and inline generator specs.

An inline spec is either ``family:k`` (see gen_family) or the name of a
fixed graph such as ``petersen``; verify runs can therefore be configured
without any files on disk.
"""

from __future__ import annotations

from .errors import InvalidParameterError
from .graphs import GRAPH_FAMILIES, Graph, gen_family


def petersen() -> Graph:
    """3-regular, 10 vertices: outer 5-cycle, inner pentagram, spokes."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


NAMED_GRAPHS = {"petersen": petersen}

DEFAULT_CORPUS_SPECS = (
    "complete:2",
    "path:3",
    "path:4",
    "cycle:4",
    "cycle:5",
    "complete:3",
    "complete:4",
    "star:5",
    "petersen",
)


def graph_from_spec(spec: str) -> Graph:
    """Build a graph from an inline spec like ``cycle:4`` or ``petersen``."""
    spec = spec.strip()
    if spec in NAMED_GRAPHS:
        return NAMED_GRAPHS[spec]()
    if ":" in spec:
        family, _, size = spec.partition(":")
        if family in GRAPH_FAMILIES:
            try:
                k = int(size)
            except ValueError:
                raise InvalidParameterError(
                    f"bad size {size!r} in spec {spec!r}"
                ) from None
            return gen_family(family, k)
    raise InvalidParameterError(
        f"unknown graph spec {spec!r}; expected family:k "
        f"with family in {GRAPH_FAMILIES} or one of {sorted(NAMED_GRAPHS)}"
    )


def default_corpus() -> list[tuple[str, Graph]]:
    return [(spec, graph_from_spec(spec)) for spec in DEFAULT_CORPUS_SPECS]
