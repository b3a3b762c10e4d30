"""Triangulated closed oriented surfaces with per-edge lengths.

A TriMesh is a purely combinatorial-metric object: vertices are integers,
faces are oriented triples, and the geometry lives entirely in the edge
lengths.  Construction validates that the complex is a closed oriented
2-manifold (every edge borders exactly two faces with opposite directions,
every vertex link is a single cycle) and that every face strictly satisfies
the triangle inequality.

Edges are keyed by unordered vertex pairs, which is also the shape of the
JSON interchange format; parallel edges are therefore not representable and
constructors reject inputs that would need them.
"""

from __future__ import annotations

import json
import math
from collections import deque

from .errors import DomainError, MeshError

Edge = tuple[int, int]
Face = tuple[int, int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class TriMesh:
    """A closed oriented triangulated surface with positive edge lengths."""

    def __init__(self, n_vertices: int, faces, edge_lengths=None):
        self.n_vertices = int(n_vertices)
        self.faces: tuple[Face, ...] = tuple(tuple(int(i) for i in f) for f in faces)
        self._validate_combinatorics()
        self.edges: tuple[Edge, ...] = self._collect_edges()
        if edge_lengths is None:
            self.edge_lengths = {e: 1.0 for e in self.edges}
        else:
            self.edge_lengths = self._normalize_lengths(edge_lengths)
        self._validate_triangles()
        self._neighbors = None

    # -- validation ---------------------------------------------------------

    def _validate_combinatorics(self):
        if self.n_vertices < 1:
            raise MeshError("mesh needs at least one vertex")
        if not self.faces:
            raise MeshError("mesh needs at least one face")
        directed: set[tuple[int, int]] = set()
        for idx, f in enumerate(self.faces):
            if len(f) != 3:
                raise MeshError(f"face #{idx} {f} is not a triple")
            if len(set(f)) != 3:
                raise MeshError(f"face #{idx} {f} has a repeated vertex")
            for v in f:
                if not 0 <= v < self.n_vertices:
                    raise MeshError(f"face #{idx} {f} references vertex {v} out of range")
            a, b, c = f
            for d in ((a, b), (b, c), (c, a)):
                if d in directed:
                    raise MeshError(
                        f"directed edge {d} appears twice: inconsistent orientation "
                        f"or non-manifold gluing"
                    )
                directed.add(d)
        # Closed oriented manifold: each directed edge must have its reverse.
        for (u, v) in directed:
            if (v, u) not in directed:
                raise MeshError(f"edge {edge_key(u, v)} borders only one face: surface not closed")
        self._check_vertex_links(directed)
        self._check_connected(directed)
        chi = self.euler_characteristic()
        if chi % 2 != 0 or chi > 2:
            raise MeshError(f"Euler characteristic {chi} is not that of a closed surface")

    def _check_vertex_links(self, directed):
        # At vertex v the faces (v,a,b) induce a successor map a -> b on the
        # link; a single cycle through all neighbors means a disk neighborhood.
        succ: dict[int, dict[int, int]] = {}
        for a, b, c in self.faces:
            for v, x, y in ((a, b, c), (b, c, a), (c, a, b)):
                table = succ.setdefault(v, {})
                if x in table:
                    raise MeshError(f"vertex {v} link branches at neighbor {x}")
                table[x] = y
        for v in range(self.n_vertices):
            table = succ.get(v)
            if not table:
                raise MeshError(f"vertex {v} belongs to no face")
            start = next(iter(table))
            seen = 0
            node = start
            while True:
                node = table.get(node)
                seen += 1
                if node is None:
                    raise MeshError(f"vertex {v} link is not a closed cycle")
                if node == start:
                    break
            if seen != len(table):
                raise MeshError(f"vertex {v} link splits into several cycles")

    def _check_connected(self, directed):
        adjacency: dict[int, list[int]] = {}
        for (u, v) in directed:
            adjacency.setdefault(u, []).append(v)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in adjacency.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != self.n_vertices:
            raise MeshError("mesh is not connected")

    def _collect_edges(self) -> tuple[Edge, ...]:
        edges = set()
        for a, b, c in self.faces:
            edges.add(edge_key(a, b))
            edges.add(edge_key(b, c))
            edges.add(edge_key(c, a))
        return tuple(sorted(edges))

    def _normalize_lengths(self, edge_lengths) -> dict[Edge, float]:
        table: dict[Edge, float] = {}
        for key, value in dict(edge_lengths).items():
            u, v = key
            table[edge_key(int(u), int(v))] = float(value)
        known = set(self.edges)
        extra = set(table) - known
        if extra:
            raise MeshError(f"edge lengths given for non-edges: {sorted(extra)[:4]}")
        missing = known - set(table)
        if missing:
            raise MeshError(f"missing edge lengths for: {sorted(missing)[:4]}")
        for e, length in table.items():
            if not math.isfinite(length) or length <= 0.0:
                raise MeshError(f"edge {e} has non-positive length {length}")
        return table

    def _validate_triangles(self):
        for idx, (a, b, c) in enumerate(self.faces):
            x = self.edge_lengths[edge_key(a, b)]
            y = self.edge_lengths[edge_key(b, c)]
            z = self.edge_lengths[edge_key(c, a)]
            longest = max(x, y, z)
            if longest >= x + y + z - longest:
                raise DomainError(
                    f"face #{idx} ({a},{b},{c}) violates the strict triangle "
                    f"inequality: sides {x}, {y}, {z}"
                )

    # -- basic invariants -----------------------------------------------------

    def euler_characteristic(self) -> int:
        edges = set()
        for a, b, c in self.faces:
            edges.add(edge_key(a, b))
            edges.add(edge_key(b, c))
            edges.add(edge_key(c, a))
        return self.n_vertices - len(edges) + len(self.faces)

    @property
    def genus(self) -> int:
        chi = self.euler_characteristic()
        if chi % 2 != 0:
            raise MeshError(f"odd Euler characteristic {chi}: not a valid closed complex")
        return (2 - chi) // 2

    def length(self, u: int, v: int) -> float:
        return self.edge_lengths[edge_key(u, v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._neighbors is None:
            table = [[] for _ in range(self.n_vertices)]
            for (u, w) in self.edges:
                table[u].append(w)
                table[w].append(u)
            self._neighbors = tuple(tuple(sorted(row)) for row in table)
        return self._neighbors[v]

    def scaled(self, factor: float) -> "TriMesh":
        if not math.isfinite(factor) or factor <= 0.0:
            raise DomainError(f"scale factor must be > 0, got {factor}")
        lengths = {e: l * factor for e, l in self.edge_lengths.items()}
        return TriMesh(self.n_vertices, self.faces, lengths)

    def __repr__(self):
        return (
            f"TriMesh(V={self.n_vertices}, E={len(self.edges)}, "
            f"F={len(self.faces)}, genus={self.genus})"
        )


def mesh_genus(mesh: TriMesh) -> int:
    """Genus (2 - chi)/2 of a validated closed mesh."""
    return mesh.genus


def mesh_area(mesh: TriMesh) -> float:
    """Total area: sum of Heron areas over all faces."""
    total = 0.0
    for a, b, c in mesh.faces:
        total += _heron(
            mesh.length(a, b), mesh.length(b, c), mesh.length(c, a)
        )
    return total


def _heron(x: float, y: float, z: float) -> float:
    # Numerically stable ordering (Kahan): a >= b >= c.
    a, b, c = sorted((x, y, z), reverse=True)
    s = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(max(s, 0.0))


def build_flat_torus(u, v, n: int) -> TriMesh:
    """Lattice-aligned triangulation of the flat torus R^2 / (Z*u + Z*v).

    The n x n vertex grid is triangulated so edges run along u/n, v/n and
    (u+v)/n; straight lattice geodesics in those directions are then edge
    paths.  n must be at least 3: for smaller n the quotient identifies
    parallel edges, which the vertex-pair edge representation cannot hold.
    """
    ux, uy = float(u[0]), float(u[1])
    vx, vy = float(v[0]), float(v[1])
    det = ux * vy - uy * vx
    if det == 0.0 or not math.isfinite(det):
        raise DomainError(f"lattice vectors u={u}, v={v} are linearly dependent")
    n = int(n)
    if n < 1:
        raise DomainError(f"subdivision count must be >= 1, got {n}")
    if n < 3:
        raise DomainError(
            f"subdivision count {n} is too coarse for a simplicial torus; need n >= 3"
        )

    def vid(i: int, j: int) -> int:
        return (i % n) * n + (j % n)

    len_u = math.hypot(ux, uy) / n
    len_v = math.hypot(vx, vy) / n
    len_d = math.hypot(ux + vx, uy + vy) / n

    faces: list[Face] = []
    lengths: dict[Edge, float] = {}
    for i in range(n):
        for j in range(n):
            p00 = vid(i, j)
            p10 = vid(i + 1, j)
            p01 = vid(i, j + 1)
            p11 = vid(i + 1, j + 1)
            faces.append((p00, p10, p11))
            faces.append((p00, p11, p01))
            lengths[edge_key(p00, p10)] = len_u
            lengths[edge_key(p00, p01)] = len_v
            lengths[edge_key(p00, p11)] = len_d
    return TriMesh(n * n, faces, lengths)


def build_octahedron() -> TriMesh:
    """Octahedron boundary complex (genus 0) with unit edge lengths."""
    # Vertices: 0,1 poles; 2..5 equator.
    faces = [
        (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 2),
        (1, 3, 2), (1, 4, 3), (1, 5, 4), (1, 2, 5),
    ]
    return TriMesh(6, faces)


def build_pillow(side: float = 1.0) -> TriMesh:
    """Two equilateral triangles glued along their whole boundary (a sphere)."""
    if side <= 0.0:
        raise DomainError(f"side must be > 0, got {side}")
    faces = [(0, 1, 2), (0, 2, 1)]
    lengths = {(0, 1): side, (1, 2): side, (0, 2): side}
    return TriMesh(3, faces, lengths)


def mesh_to_dict(mesh: TriMesh) -> dict:
    """JSON-ready mapping: vertex count, face triples and edge length triples."""
    return {
        "vertices": mesh.n_vertices,
        "faces": [list(f) for f in mesh.faces],
        "edge_lengths": [[u, v, mesh.edge_lengths[(u, v)]] for (u, v) in mesh.edges],
    }


def mesh_from_dict(data: dict) -> TriMesh:
    """Inverse of mesh_to_dict; all-unit lengths when edge_lengths is omitted."""
    try:
        n_vertices = int(data["vertices"])
        faces = data["faces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MeshError(f"malformed mesh document: {exc}") from exc
    raw = data.get("edge_lengths")
    lengths = None
    if raw is not None:
        lengths = {}
        for item in raw:
            u, v, length = item
            lengths[edge_key(int(u), int(v))] = float(length)
    return TriMesh(n_vertices, faces, lengths)


def save_mesh(mesh: TriMesh, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(mesh_to_dict(mesh), handle, indent=1)
        handle.write("\n")


def load_mesh(path) -> TriMesh:
    with open(path, encoding="utf-8") as handle:
        return mesh_from_dict(json.load(handle))
