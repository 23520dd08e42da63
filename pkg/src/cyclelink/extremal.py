"""Generator and recognizer for the tight obstruction family.

These are the instances that are 5-massed yet admit no rooted C5-minor
for some order of the roots: five pairwise "cyclically nonadjacent"
roots, an adjacent apex pair {a, b} dominating all roots, and tight
components hanging off {a, b, x_i, x_{i+2}} with density exactly 5|C|.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GenerationError, GraphError
from .graph import Graph
from .minor import canonical_cyclic_orders, find_rooted_cycle_minor


@dataclass(frozen=True)
class ExtremalCertificate:
    """Machine-checked witness of the obstruction structure."""

    roots: tuple[int, ...]           # cyclic labeling x1..x5
    apex_pair: tuple[int, int]       # (a, b), a < b
    components: tuple[tuple[frozenset[int], int], ...]  # (C, attachment index i)

    def to_json_dict(self) -> dict:
        return {
            "roots": list(self.roots),
            "apex_pair": list(self.apex_pair),
            "components": [
                {"vertices": sorted(c), "attachment_index": i}
                for c, i in self.components
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def verify(self, g: Graph) -> bool:
        """Re-check every certificate invariant against the host graph."""
        xs = self.roots
        if len(xs) != 5 or len(set(xs)) != 5:
            return False
        a, b = self.apex_pair
        if a in xs or b in xs or not g.has_edge(a, b):
            return False
        for i in range(5):
            if g.has_edge(xs[i], xs[(i + 1) % 5]):
                return False
            if not g.has_edge(a, xs[i]) or not g.has_edge(b, xs[i]):
                return False
        comps = g.delete(set(xs) | {a, b}).components()
        claimed = {frozenset(c) for c, _ in self.components}
        if claimed != {frozenset(c) for c in comps}:
            return False
        for c, i in self.components:
            if g.rho(c) != 5 * len(c):
                return False
            allowed = {a, b, xs[i], xs[(i + 2) % 5]}
            if not g.neighborhood(c) <= allowed:
                return False
        rest = set(g.vertices()) - set(xs)
        return g.rho(rest) == 5 * len(rest) + 1


def recognize(g: Graph, x) -> ExtremalCertificate | None:
    """Search all canonical labelings of x and all apex candidates for a
    fully verified certificate."""
    xs = sorted(set(x))
    if len(xs) != 5:
        raise GraphError(f"recognizer needs exactly 5 roots, got {len(xs)}")
    for v in xs:
        g._check(v)
    rest = set(g.vertices()) - set(xs)
    if g.rho(rest) != 5 * len(rest) + 1:
        return None
    # apex candidates: adjacent pairs outside X dominating every root
    dominating = sorted(
        v for v in rest if all(g.has_edge(v, r) for r in xs)
    )
    for i, a in enumerate(dominating):
        for b in dominating[i + 1:]:
            if not g.has_edge(a, b):
                continue
            comps = [frozenset(c) for c in g.delete(set(xs) | {a, b}).components()]
            for order in canonical_cyclic_orders(xs):
                cert = _try_labeling(g, order, a, b, comps)
                if cert is not None:
                    return cert
    return None


def _try_labeling(g, order, a, b, comps) -> ExtremalCertificate | None:
    for i in range(5):
        if g.has_edge(order[i], order[(i + 1) % 5]):
            return None
    assigned = []
    for c in comps:
        if g.rho(c) != 5 * len(c):
            return None
        nbrs = g.neighborhood(c)
        idx = next(
            (
                i
                for i in range(5)
                if nbrs <= {a, b, order[i], order[(i + 2) % 5]}
            ),
            None,
        )
        if idx is None:
            return None
        assigned.append((c, idx))
    return ExtremalCertificate(tuple(order), (a, b), tuple(assigned))


def generate(component_spec, *, filter_with_engine: bool = True):
    """Build a family member from a list of (attachment index, size) pairs.

    Vertices: roots 1..5, apexes a=6 and b=7, then component vertices.
    Each component starts as a triangle fully joined to its four
    attachments (density exactly 5|C|); extra vertices keep the density
    tight by adding exactly five edges each.  The result must pass the
    recognizer, and (by default) the exact engine must confirm the
    canonical order has no C5-minor.

    Returns (graph, roots).
    """
    roots = (1, 2, 3, 4, 5)
    a, b = 6, 7
    edges = [(a, b)]
    edges += [(a, r) for r in roots] + [(b, r) for r in roots]
    nxt = 8
    for entry in component_spec:
        i, size = entry
        if not 1 <= i <= 5:
            raise GenerationError(f"attachment index out of range: {i}")
        if size < 3:
            raise GenerationError(
                f"tight component needs at least 3 vertices, got {size}"
            )
        attach = [a, b, roots[i - 1], roots[(i + 1) % 5]]
        core = [nxt, nxt + 1, nxt + 2]
        nxt += 3
        edges += [(core[0], core[1]), (core[0], core[2]), (core[1], core[2])]
        edges += [(c, t) for c in core for t in attach]
        for _ in range(size - 3):
            w = nxt
            nxt += 1
            # five new edges keep rho(C) = 5|C| exact
            edges += [(w, core[0]), (w, core[1]), (w, core[2]), (w, a), (w, b)]
            core.append(w)
    g = Graph(roots + (a, b), edges)

    # every realization is re-verified, never trusted
    rest = set(g.vertices()) - set(roots)
    if g.rho(rest) != 5 * len(rest) + 1:
        raise GenerationError("generated instance misses the global density target")
    for c in g.delete(set(roots) | {a, b}).components():
        if g.rho(c) != 5 * len(c):
            raise GenerationError("generated component misses rho(C) = 5|C|")
    if recognize(g, roots) is None:
        raise GenerationError("generated instance fails the recognizer")
    if filter_with_engine and find_rooted_cycle_minor(g, roots) is not None:
        from .io6 import to_graph6

        raise GenerationError(
            "generated instance admits a C5-minor for the canonical order; "
            f"archived graph6: {to_graph6(g)}"
        )
    return g, roots
