"""
Graphviz DOT rendering of quivers.
"""

import graphviz

from quiverflip.core.quiver import Provenance, Quiver

INSERTED_STYLE = {"shape": "box", "style": "dashed"}


def emit_dot(q: Quiver, name: str = "quiver") -> str:
    """
    DOT source for ``q``.

    An arrow of multiplicity m becomes m parallel edges; inserted vertices
    are drawn as dashed boxes.
    """
    graph = graphviz.Digraph(name=name)
    for vertex in q.vertices:
        if q.provenance[vertex.index] is Provenance.INSERTED:
            graph.node(vertex.label, **INSERTED_STYLE)
        else:
            graph.node(vertex.label)
    for arrow in q.arrows():
        for _ in range(arrow.multiplicity):
            graph.edge(arrow.tail.label, arrow.head.label)
    return graph.source
