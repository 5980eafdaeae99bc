# kneser-tw - Treewidth of generalized Kneser graphs with exact certificates.
# Copyright (C) 2026 The kneser-tw developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Tree decompositions and their validation.

A tree decomposition is a tree whose nodes 0..m-1 carry bags of vertices such
that every edge lies in some bag and the nodes holding any given vertex induce
a connected non-empty subtree. Its width is the size of its largest bag minus
one.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from kneser_tw.utils import Edge, GraphLike

logger = logging.getLogger(__name__)

Bag = Tuple[int, ...]


@dataclass(frozen=True)
class TreeDecomposition:
    """
    A tree decomposition with canonical storage: bags are sorted tuples and
    tree edges are sorted pairs (i, j) with i < j.

    Use :meth:`from_bags` to build one from unsorted data.
    """

    bags: Tuple[Bag, ...]  #: bags[i] is the bag of node i.
    tree_edges: Tuple[Edge, ...] = ()  #: Edges of the tree.

    @classmethod
    def from_bags(
        cls, bags: Sequence[Iterable[int]], tree_edges: Iterable[Edge] = ()
    ) -> "TreeDecomposition":
        """
        Build a decomposition, normalizing bags and edges.

        Args:
            bags (Sequence[Iterable[int]]): the bag of each node.
            tree_edges (Iterable[Edge], optional): the tree edges. Defaults to ().

        Returns:
            TreeDecomposition: the normalized decomposition.
        """
        normalized_edges = sorted({(min(i, j), max(i, j)) for i, j in tree_edges})
        return cls(
            tuple(tuple(sorted(set(bag))) for bag in bags), tuple(normalized_edges)
        )

    @property
    def num_nodes(self) -> int:
        """Number of nodes of the tree."""
        return len(self.bags)

    @property
    def max_bag_size(self) -> int:
        """Size of the largest bag, 0 without nodes."""
        return max((len(bag) for bag in self.bags), default=0)

    @property
    def width(self) -> int:
        """Largest bag size minus one."""
        return self.max_bag_size - 1

    @property
    def largest_bag_node(self) -> int:
        """First node with a largest bag, -1 without nodes."""
        for node, bag in enumerate(self.bags):
            if len(bag) == self.max_bag_size:
                return node
        return -1

    def to_networkx(self) -> nx.Graph:
        """
        Returns:
            nx.Graph: the tree, with the bags as "bag" node attributes.
        """
        tree = nx.Graph()
        for node, bag in enumerate(self.bags):
            tree.add_node(node, bag=bag)
        tree.add_edges_from(self.tree_edges)
        return tree

    def __str__(self) -> str:
        return (
            f"Tree decomposition with {self.num_nodes} bags of width {self.width}"
        )


class ViolationKind(str, Enum):
    """
    Kinds of defects of a tree decomposition.
    """

    MALFORMED_TREE = "malformed tree"  #: Structural problem: no node, bad edge, cycle or disconnection.
    UNKNOWN_VERTEX = "unknown vertex"  #: A bag holds a vertex that is not in the graph.
    MISSING_VERTEX = "missing vertex"  #: A vertex is in no bag.
    DISCONNECTED_TRACE = "disconnected trace"  #: The nodes holding a vertex are not connected.
    UNCOVERED_EDGE = "uncovered edge"  #: No bag holds both ends of an edge.


@dataclass(frozen=True)
class Violation:
    """
    A single defect of a tree decomposition.
    """

    kind: ViolationKind
    vertices: Tuple[int, ...] = ()  #: The vertex or edge concerned.
    nodes: Tuple[int, ...] = ()  #: The tree nodes concerned.
    detail: str = ""

    def __str__(self) -> str:
        text = self.kind.value
        if self.vertices:
            text += " " + " ".join(str(v) for v in self.vertices)
        if self.detail:
            text += f": {self.detail}"
        return text


@dataclass
class WidthReport:
    """
    Outcome of :func:`validate_decomposition`.
    """

    width: int
    largest_bag_node: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        """True if there is no violation."""
        return not self.violations

    def kinds(self) -> List[ViolationKind]:
        """
        Returns:
            List[ViolationKind]: the kinds of the violations, in order.
        """
        return [violation.kind for violation in self.violations]

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: the report, for run reports.
        """
        return {
            "width": self.width,
            "largest_bag_node": self.largest_bag_node,
            "valid": self.valid,
            "violations": [str(violation) for violation in self.violations],
        }


def _structural_violations(td: TreeDecomposition) -> List[Violation]:
    if td.num_nodes == 0:
        return [Violation(ViolationKind.MALFORMED_TREE, detail="no node")]
    violations = []
    for i, j in td.tree_edges:
        if not (0 <= i < td.num_nodes and 0 <= j < td.num_nodes) or i == j:
            violations.append(
                Violation(
                    ViolationKind.MALFORMED_TREE,
                    nodes=(i, j),
                    detail="tree edge with an invalid end",
                )
            )
    if violations:
        return violations
    tree = td.to_networkx()
    if not nx.is_tree(tree):
        detail = "not connected" if not nx.is_connected(tree) else "has a cycle"
        violations.append(Violation(ViolationKind.MALFORMED_TREE, detail=detail))
    return violations


def validate_decomposition(graph: GraphLike, td: TreeDecomposition) -> WidthReport:
    """
    Check that td is a tree decomposition of graph.

    Structural defects of the tree are reported alone, the other checks being
    meaningless on a tree that is not one. Otherwise every vertex must appear
    in a connected non-empty set of nodes and every edge must be in a bag.

    Args:
        graph (GraphLike): the graph, with vertices 0..N-1.
        td (TreeDecomposition): the candidate decomposition.

    Returns:
        WidthReport: the width, the node with the largest bag and the violations.
    """
    report = WidthReport(width=td.width, largest_bag_node=td.largest_bag_node)
    report.violations.extend(_structural_violations(td))
    if report.violations:
        logger.debug("Decomposition is structurally malformed.")
        return report

    size = graph.number_of_nodes()
    # holders[v] has bit i set iff v is in the bag of node i
    holders = [0] * size
    for node, bag in enumerate(td.bags):
        for v in bag:
            if 0 <= v < size:
                holders[v] |= 1 << node
            else:
                report.violations.append(
                    Violation(ViolationKind.UNKNOWN_VERTEX, vertices=(v,), nodes=(node,))
                )

    tree = td.to_networkx()
    for v in range(size):
        nodes = [i for i in range(td.num_nodes) if holders[v] >> i & 1]
        if not nodes:
            report.violations.append(
                Violation(ViolationKind.MISSING_VERTEX, vertices=(v,))
            )
        elif not nx.is_connected(tree.subgraph(nodes)):
            report.violations.append(
                Violation(
                    ViolationKind.DISCONNECTED_TRACE, vertices=(v,), nodes=tuple(nodes)
                )
            )

    for u, v in sorted((min(a, b), max(a, b)) for a, b in graph.edges()):
        if not holders[u] & holders[v]:
            report.violations.append(
                Violation(ViolationKind.UNCOVERED_EDGE, vertices=(u, v))
            )

    logger.debug(
        "Validated decomposition of width %i: %i violations.",
        report.width,
        len(report.violations),
    )
    return report
