# services/graph_loader.py
from pathlib import Path
from typing import List, Tuple, Union

from models.graph import Graph
from services.base_service import BaseService
from utils.errors import GraphFormatError, GraphValidationError


class GraphLoaderService(BaseService):
    """Reads and writes the edge-list graph format.

    First non-comment line "n m", then m lines "i j"; '#' starts a comment.
    """

    def __init__(self):
        super().__init__()

    def initialize(self) -> None:
        """No initialization needed for the loader."""
        pass

    def parse_graph(self, text: str, source: str = "<text>") -> Graph:
        """Parse graph-file content into a validated Graph."""
        rows = self._data_rows(text)
        if not rows:
            raise GraphFormatError("missing header line 'n m'", source)

        header_line, header = rows[0]
        n, m = self._parse_pair(header, source, header_line, "header")
        if n < 2:
            raise GraphFormatError(f"graph needs at least 2 nodes, got n={n}", source, header_line)
        if m < 0:
            raise GraphFormatError(f"edge count must be nonnegative, got m={m}", source, header_line)
        edge_rows = rows[1:]
        if len(edge_rows) != m:
            raise GraphFormatError(f"header declares {m} edges but {len(edge_rows)} edge lines follow",
                                   source, header_line)

        edges: List[Tuple[int, int]] = []
        seen = {}
        for line_no, fields in edge_rows:
            i, j = self._parse_pair(fields, source, line_no, "edge")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphFormatError(f"edge ({i}, {j}) references a node outside 0..{n - 1}", source, line_no)
            if i == j:
                raise GraphFormatError(f"self-loop at node {i}", source, line_no)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key} (first seen on line {seen[key]})", source, line_no)
            seen[key] = line_no
            edges.append(key)

        try:
            graph = Graph.from_edges(n, edges)
        except GraphValidationError as e:
            raise GraphFormatError(str(e), source) from e
        self.logger.info(f"Loaded graph from {source}: n={graph.node_count}, m={graph.edge_count}")
        return graph

    def load_graph(self, path: Union[str, Path]) -> Graph:
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as e:
            self.handle_error(e, {"path": str(path)})
            raise
        return self.parse_graph(text, source=str(path))

    @staticmethod
    def serialize_graph(graph: Graph) -> str:
        """Canonical text form: header then edges in canonical order."""
        lines = [f"{graph.node_count} {graph.edge_count}"]
        lines.extend(f"{i} {j}" for i, j in graph.edges)
        return "\n".join(lines) + "\n"

    @staticmethod
    def _data_rows(text: str) -> List[Tuple[int, List[str]]]:
        rows = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            content = raw.split('#', 1)[0].strip()
            if content:
                rows.append((line_no, content.split()))
        return rows

    @staticmethod
    def _parse_pair(fields: List[str], source: str, line_no: int, what: str) -> Tuple[int, int]:
        if len(fields) != 2:
            raise GraphFormatError(f"malformed {what} line: expected 2 integers, got {len(fields)} fields",
                                   source, line_no)
        try:
            return int(fields[0]), int(fields[1])
        except ValueError as e:
            raise GraphFormatError(f"malformed {what} line: {' '.join(fields)!r} is not two integers",
                                   source, line_no) from e
