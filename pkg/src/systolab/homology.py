"""Homology labelings of mesh edges and the homological systole.

A tree-cotree split of a closed oriented mesh (spanning tree of the
1-skeleton, spanning tree of the dual graph, 2g leftover edges) yields one
homology generator per leftover edge.  Propagating the face-boundary
relations through the dual tree assigns every edge a signature in Z2^(2g)
(and an integer vector in Z^(2g) for the oriented version) so that the
class of any closed edge path is just the sum of its edge labels.

The homological systole is computed exactly as a shortest-path problem in
the signature cover: states are (vertex, signature), edges flip signatures,
and the shortest nontrivial cycle through a vertex is the shortest path
from (v, 0) to any (v, s != 0).  The cover has 2^(2g) sheets, so the exact
search is gated on the genus; past the gate a per-generator double-cover
search runs instead and its result is flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush

from .errors import DomainError, MeshError, ResourceLimitError
from .mesh import TriMesh, edge_key

# 2g may not exceed this exponent for the exact cover search (4096 sheets).
COVER_EXPONENT_LIMIT = 12


def tree_cotree(mesh: TriMesh):
    """Split edges into spanning tree, dual-tree (cotree) and 2g generators.

    Returns (tree_edges, cotree_order, generator_edges) where cotree_order
    lists (face_index, crossing_edge) pairs in dual BFS order; consuming it
    in reverse solves each face constraint with one unknown.
    """
    tree: set = set()
    seen = [False] * mesh.n_vertices
    seen[0] = True
    queue = [0]
    while queue:
        u = queue.pop(0)
        for w in mesh.neighbors(u):
            if not seen[w]:
                seen[w] = True
                tree.add(edge_key(u, w))
                queue.append(w)

    edge_faces: dict = {}
    for idx, (a, b, c) in enumerate(mesh.faces):
        for e in (edge_key(a, b), edge_key(b, c), edge_key(c, a)):
            edge_faces.setdefault(e, []).append(idx)

    face_seen = [False] * len(mesh.faces)
    face_seen[0] = True
    cotree_order: list[tuple[int, tuple[int, int]]] = []
    cotree_edges: set = set()
    queue = [0]
    while queue:
        f = queue.pop(0)
        a, b, c = mesh.faces[f]
        for e in (edge_key(a, b), edge_key(b, c), edge_key(c, a)):
            if e in tree or e in cotree_edges:
                continue
            two = edge_faces[e]
            other = two[0] if two[1] == f else two[1]
            if not face_seen[other]:
                face_seen[other] = True
                cotree_edges.add(e)
                cotree_order.append((other, e))
                queue.append(other)

    generators = [e for e in mesh.edges if e not in tree and e not in cotree_edges]
    if len(generators) != 2 * mesh.genus:
        raise MeshError(
            f"tree-cotree split produced {len(generators)} generators, "
            f"expected {2 * mesh.genus}"
        )
    return tree, cotree_order, generators


def z2_edge_signatures(mesh: TriMesh) -> dict:
    """Per-edge Z2^(2g) signatures as bitmasks; closed-path class = XOR of edges.

    Generator edges carry single bits, tree edges carry 0, and cotree edges
    are solved so every face boundary XORs to zero, which makes the class
    of a cycle depend only on its homology class.
    """
    tree, cotree_order, generators = tree_cotree(mesh)
    sig = {e: 0 for e in mesh.edges}
    for bit, e in enumerate(generators):
        sig[e] = 1 << bit
    for face_idx, unknown in reversed(cotree_order):
        a, b, c = mesh.faces[face_idx]
        acc = 0
        for e in (edge_key(a, b), edge_key(b, c), edge_key(c, a)):
            if e != unknown:
                acc ^= sig[e]
        sig[unknown] = acc
    return sig


def integer_edge_vectors(mesh: TriMesh) -> dict:
    """Oriented per-edge vectors in Z^(2g) for the canonical (u<v) direction.

    Traversing an edge against its canonical direction contributes the
    negated vector; oriented face boundaries sum to zero, so summing along
    a closed path gives its integer homology class.
    """
    tree, cotree_order, generators = tree_cotree(mesh)
    dim = len(generators)
    zero = (0,) * dim
    vec = {e: zero for e in mesh.edges}
    for i, e in enumerate(generators):
        vec[e] = tuple(1 if j == i else 0 for j in range(dim))

    def oriented(u, v):
        key = edge_key(u, v)
        base = vec[key]
        if (u, v) == key:
            return base
        return tuple(-x for x in base)

    for face_idx, unknown in reversed(cotree_order):
        a, b, c = mesh.faces[face_idx]
        acc = [0] * dim
        direction = None
        for (u, v) in ((a, b), (b, c), (c, a)):
            if edge_key(u, v) == unknown:
                direction = (u, v)
            else:
                contrib = oriented(u, v)
                for j in range(dim):
                    acc[j] += contrib[j]
        # Solve s(direction) = -acc, then store for the canonical direction.
        solved = tuple(-x for x in acc)
        if direction == unknown:
            vec[unknown] = solved
        else:
            vec[unknown] = tuple(-x for x in solved)
    return vec


def path_class(mesh: TriMesh, directed_edges, vectors=None) -> tuple:
    """Integer homology class of a closed directed edge path."""
    if vectors is None:
        vectors = integer_edge_vectors(mesh)
    dim = len(next(iter(vectors.values()))) if vectors else 0
    acc = [0] * dim
    for (u, v) in directed_edges:
        base = vectors[edge_key(u, v)]
        sign = 1 if (u, v) == edge_key(u, v) else -1
        for j in range(dim):
            acc[j] += sign * base[j]
    return tuple(acc)


@dataclass(frozen=True)
class CycleWitness:
    """A closed directed edge path realizing a homology-nontrivial cycle."""

    edges: tuple[tuple[int, int], ...]
    length: float
    signature: tuple[int, ...]
    exact: bool = True

    def __post_init__(self):
        if not self.edges:
            raise DomainError("witness cycle must contain at least one edge")
        for (u, v), (w, _) in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if v != w:
                raise DomainError("witness edges do not form a closed connected path")
        if not any(self.signature):
            raise DomainError("witness signature is zero: cycle is homologically trivial")

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for (u, _) in self.edges)

    def to_dict(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "length": self.length,
            "signature": list(self.signature),
            "exact": self.exact,
        }


def _witness_from_predecessors(mesh, sig, pred, final_state, start_state, exact):
    edges = []
    state = final_state
    total = 0.0
    while state != start_state:
        prev = pred[state]
        edges.append((prev[0], state[0]))
        total += mesh.length(prev[0], state[0])
        state = prev
    edges.reverse()
    bits = final_state[1]
    dim = 2 * mesh.genus
    signature = tuple((bits >> k) & 1 for k in range(dim))
    return CycleWitness(edges=tuple(edges), length=total, signature=signature, exact=exact)


def homological_systole(
    mesh: TriMesh,
    cover_exponent_limit: int = COVER_EXPONENT_LIMIT,
    heuristic: bool = False,
) -> CycleWitness:
    """Shortest homologically nontrivial edge cycle, with an explicit witness.

    Exact mode runs a shortest-path search from every vertex inside the
    2^(2g)-sheeted signature cover.  When 2g exceeds the exponent gate a
    ResourceLimitError asks for heuristic=True, which switches to one
    double-cover search per generator; that result is flagged non-exact.
    """
    genus = mesh.genus
    if genus == 0:
        raise DomainError("genus-0 mesh has no homologically nontrivial cycle")
    dim = 2 * genus
    if heuristic:
        return _systole_double_covers(mesh, dim)
    if dim > cover_exponent_limit:
        raise ResourceLimitError(
            f"2g = {dim} exceeds the exact cover gate ({cover_exponent_limit}); "
            f"pass heuristic=True for the flagged per-generator search"
        )
    sig = z2_edge_signatures(mesh)

    best = math.inf
    best_final = None
    best_pred = None
    best_start = None
    for source in range(mesh.n_vertices):
        start = (source, 0)
        dist = {start: 0.0}
        pred = {}
        heap = [(0.0, start)]
        while heap:
            d, state = heappop(heap)
            if d > dist.get(state, math.inf) or d >= best:
                continue
            v, bits = state
            for w in mesh.neighbors(v):
                e = edge_key(v, w)
                nd = d + mesh.edge_lengths[e]
                if nd >= best:
                    continue
                nstate = (w, bits ^ sig[e])
                if nd < dist.get(nstate, math.inf):
                    dist[nstate] = nd
                    pred[nstate] = state
                    heappush(heap, (nd, nstate))
        for bits in range(1, 1 << dim):
            state = (source, bits)
            d = dist.get(state)
            if d is not None and d < best:
                best = d
                best_final = state
                best_pred = pred
                best_start = start
    if best_final is None:
        raise MeshError("no homologically nontrivial cycle found on a positive-genus mesh")
    return _witness_from_predecessors(mesh, sig, best_pred, best_final, best_start, True)


def _systole_double_covers(mesh: TriMesh, dim: int) -> CycleWitness:
    # One 2-sheeted cover per generator bit: the shortest cycle odd in some
    # coordinate.  Every nontrivial class is odd in at least one coordinate,
    # but the result is flagged per the exact/heuristic contract.
    sig = z2_edge_signatures(mesh)
    best = math.inf
    best_payload = None
    for bit in range(dim):
        mask = 1 << bit
        for source in range(mesh.n_vertices):
            start = (source, 0)
            dist = {start: 0.0}
            pred = {}
            heap = [(0.0, start)]
            while heap:
                d, state = heappop(heap)
                if d > dist.get(state, math.inf) or d >= best:
                    continue
                v, parity = state
                for w in mesh.neighbors(v):
                    e = edge_key(v, w)
                    nd = d + mesh.edge_lengths[e]
                    if nd >= best:
                        continue
                    nstate = (w, parity ^ (1 if sig[e] & mask else 0))
                    if nd < dist.get(nstate, math.inf):
                        dist[nstate] = nd
                        pred[nstate] = state
                        heappush(heap, (nd, nstate))
            target = (source, 1)
            d = dist.get(target)
            if d is not None and d < best:
                best = d
                best_payload = (pred, target, start)
    if best_payload is None:
        raise MeshError("no homologically nontrivial cycle found on a positive-genus mesh")
    pred, target, start = best_payload
    edges = []
    state = target
    total = 0.0
    while state != start:
        prev = pred[state]
        edges.append((prev[0], state[0]))
        total += mesh.length(prev[0], state[0])
        state = prev
    edges.reverse()
    bits = 0
    for (u, v) in edges:
        bits ^= sig[edge_key(u, v)]
    signature = tuple((bits >> k) & 1 for k in range(dim))
    return CycleWitness(edges=tuple(edges), length=total, signature=signature, exact=False)
