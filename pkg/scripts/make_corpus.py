"""Regenerate data/connected_upto6.g6 from the networkx graph atlas.

The corpus is checked in; this script only exists to rebuild it and to
cross-check our graph6 writer against networkx's codec.
"""

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from cyclelink.graph import Graph
from cyclelink.io6 import parse_graph6, to_graph6


def main() -> None:
    lines = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if not 1 <= n <= 6 or not nx.is_connected(G):
            continue
        g = Graph(range(n), list(G.edges()))
        s = to_graph6(g)
        assert s == nx.to_graph6_bytes(G, header=False).decode().strip()
        assert parse_graph6(s) == g
        lines.append(s)
    with open("data/connected_upto6.g6", "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs")


if __name__ == "__main__":
    main()
