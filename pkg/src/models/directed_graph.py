import networkx as nx

from pydantic import BaseModel, ConfigDict, model_validator
from typing import List, Tuple

class GraphEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    source: str
    range: str

class DirectedGraph(BaseModel):
    """A directed graph (E0, E1, r, s) in the graph-algebra convention: an edge runs from s(e) to r(e)."""
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    edges: Tuple[GraphEdge, ...] = ()

    @model_validator(mode="after")
    def _check_endpoints(self) -> "DirectedGraph":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Duplicate vertices in {self.vertices}")
        names = [edge.name for edge in self.edges]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate edge names in {names}")
        known = set(self.vertices)
        for edge in self.edges:
            if edge.source not in known or edge.range not in known:
                raise ValueError(f"Edge '{edge.name}' has an endpoint outside the vertex set")
        return self

    def edges_into(self, vertex: str) -> List[GraphEdge]:
        return sorted((edge for edge in self.edges if edge.range == vertex), key=lambda edge: edge.name)

    def receivers(self) -> List[str]:
        return [vertex for vertex in self.vertices if self.edges_into(vertex)]

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.range, key=edge.name)
        return graph

    def edge_paths(self) -> List[Tuple[str, ...]]:
        """Edge sequences of all directed paths with at least one edge, for acyclic graphs."""
        graph = self.to_networkx()
        paths = []
        for start in self.vertices:
            for end in self.vertices:
                if start == end:
                    continue
                for path in nx.all_simple_edge_paths(graph, start, end):
                    paths.append(tuple(key for _, _, key in path))
        return sorted(paths)

    def __json__(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"name": edge.name, "source": edge.source, "range": edge.range} for edge in self.edges]
        }

class DecoratedGraph(BaseModel):
    """A tree made into a directed graph by capping every leaf and the root with an inserted vertex."""
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    edges: Tuple[GraphEdge, ...]
    inserted: Tuple[str, ...]

    def to_directed_graph(self) -> DirectedGraph:
        return DirectedGraph(vertices=self.vertices, edges=self.edges)

    def has_path_through(self, edges: List[str]) -> bool:
        wanted = set(edges)
        return any(wanted <= set(path) for path in self.to_directed_graph().edge_paths())

    def __json__(self) -> dict:
        json = self.to_directed_graph().__json__()
        json["inserted"] = list(self.inserted)
        return json
