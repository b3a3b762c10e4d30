"""Independent oracles for the test suite.

Everything here recomputes expected values by a different route than the
package: formulas re-derived in 60-digit arithmetic (mpmath), homology
membership by GF(2) elimination on the face-boundary matrix, systoles by
exhaustive bounded cycle enumeration, torus loop counts from the lattice
norm, and surface-group counts by enumerating every freely reduced word and
grouping them with a stand-alone greedy-reduction word solver.
"""

from __future__ import annotations

import math
from collections import defaultdict, deque
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60

SQRT3 = mp.sqrt(3)


# ---------------------------------------------------------------------------
# High-precision formula oracles
# ---------------------------------------------------------------------------

def hp_genus_bound_general(alpha, beta, delta) -> float:
    a, b, d = mp.mpf(repr(alpha)), mp.mpf(repr(beta)), mp.mpf(repr(delta))
    num = SQRT3 - (2 * b - 6 * a - d) ** 2
    den = (2 * a - d) ** 2
    return float(SQRT3 / (8 * mp.pi) * mp.log(num / den) ** 2 / b**2)


def hp_genus_bound_half_inj(eta) -> float:
    e = mp.mpf(repr(eta))
    m = min(1 - 7 * e, mp.mpf(1) / 2)
    num = 4 * SQRT3 - (8 - mp.pi) * m**2
    den = (8 - mp.pi) * e**2
    return float(SQRT3 / (8 * mp.pi) * mp.log(num / den) ** 2 / (mp.mpf(1) / 2 - 2 * e) ** 2)


def hp_katok(genus, area) -> float:
    if genus == 1:
        return 0.0
    return float(mp.sqrt(2 * mp.pi * (2 * genus - 2) / mp.mpf(repr(area))))


def hp_entropy_upper(area, sys_, alpha, beta, model) -> tuple[float, float]:
    """(h_upper, log_argument) with the disk model given as an mp-callable."""
    area, sys_ = mp.mpf(repr(area)), mp.mpf(repr(sys_))
    a, b = mp.mpf(repr(alpha)), mp.mpf(repr(beta))
    arg = (area - model((b - 3 * a) * sys_)) / model(a * sys_)
    return float(mp.log(arg) / (b * sys_)), float(arg)


def hp_croke(radius):
    return (8 - mp.pi) / 2 * mp.mpf(repr(float(radius))) ** 2


def hp_height(rho):
    rho = mp.mpf(repr(float(rho)))

    def model(radius):
        return (2 * radius - rho) ** 2 / 2

    return model


def hp_euclid(radius):
    return mp.pi * mp.mpf(repr(float(radius))) ** 2


def hp_entropy_upper_inj(inj, area, eta) -> tuple[float, float]:
    inj, area, e = mp.mpf(repr(inj)), mp.mpf(repr(area)), mp.mpf(repr(eta))
    m = min(1 - 7 * e, mp.mpf(1) / 2)
    arg = (2 * area / inj**2 - (8 - mp.pi) * m**2) / ((8 - mp.pi) * e**2)
    return float(mp.log(arg) / ((1 - 4 * e) * inj)), float(arg)


def hp_gromov_ratio(genus) -> float:
    return float(64 / (4 * mp.sqrt(genus) + 27))


def hp_center_count(area, sys_) -> float:
    return float(64 / mp.pi * (mp.mpf(repr(area)) / mp.mpf(repr(sys_)) ** 2) - 9)


# ---------------------------------------------------------------------------
# GF(2) homology membership (independent of the package's edge labeling)
# ---------------------------------------------------------------------------

class Gf2Boundaries:
    """Row-reduced span of the face boundaries over GF(2).

    A cycle (edge set, as a bitmask over edge indices) is null-homologous on
    a closed surface iff it lies in this span.
    """

    def __init__(self, mesh):
        self.edge_index = {e: i for i, e in enumerate(mesh.edges)}
        rows = []
        for a, b, c in mesh.faces:
            mask = 0
            for u, v in ((a, b), (b, c), (c, a)):
                key = (u, v) if u < v else (v, u)
                mask ^= 1 << self.edge_index[key]
            rows.append(mask)
        self.basis: list[int] = []
        for row in rows:
            self._insert(row)

    def _insert(self, row):
        for b in self.basis:
            row = min(row, row ^ b)
        if row:
            self.basis.append(row)
            self.basis.sort(reverse=True)

    def reduce(self, mask: int) -> int:
        for b in self.basis:
            mask = min(mask, mask ^ b)
        return mask

    def is_boundary(self, mask: int) -> bool:
        return self.reduce(mask) == 0

    def cycle_mask(self, vertices) -> int:
        mask = 0
        closed = list(vertices) + [vertices[0]]
        for u, v in zip(closed, closed[1:]):
            key = (u, v) if u < v else (v, u)
            mask ^= 1 << self.edge_index[key]
        return mask


def brute_force_systole(mesh) -> float:
    """Shortest homology-nontrivial cycle by exhaustive bounded enumeration.

    Seeds the bound with tree cycles (spanning-tree path plus one chord),
    then depth-first enumerates every simple cycle shorter than the current
    best, testing nontriviality by GF(2) elimination.
    """
    gf2 = Gf2Boundaries(mesh)
    best = math.inf

    # Seed: cycles closing one non-tree chord through the spanning tree.
    parent = {0: 0}
    order = [0]
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in mesh.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    tree_edges = {tuple(sorted((v, parent[v]))) for v in parent if v != parent[v]}

    def tree_path(a, b):
        ups_a = [a]
        while parent[ups_a[-1]] != ups_a[-1]:
            ups_a.append(parent[ups_a[-1]])
        seen = set(ups_a)
        ups_b = [b]
        while ups_b[-1] not in seen:
            ups_b.append(parent[ups_b[-1]])
        meet = ups_b[-1]
        head = ups_a[: ups_a.index(meet) + 1]
        return head + ups_b[:-1][::-1]

    for (u, v) in mesh.edges:
        if (u, v) in tree_edges:
            continue
        cycle = tree_path(u, v)
        mask = gf2.cycle_mask(cycle)
        if mask and not gf2.is_boundary(mask):
            length = sum(
                mesh.length(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])
            )
            best = min(best, length)
    assert math.isfinite(best), "no nontrivial seed cycle found"

    # Exhaustive search below the seed bound.
    tol = 1e-12
    stack_visited = set()

    def neighbors_sorted(v):
        return sorted(mesh.neighbors(v), key=lambda w: (mesh.length(v, w), w))

    def dfs(source, v, length, path):
        nonlocal best
        for w in neighbors_sorted(v):
            step = length + mesh.length(v, w)
            if step >= best - tol:
                continue
            if w == source and len(path) >= 3:
                mask = gf2.cycle_mask(path)
                if mask and not gf2.is_boundary(mask):
                    best = step
                continue
            if w in stack_visited or w < source:
                continue
            stack_visited.add(w)
            path.append(w)
            dfs(source, w, step, path)
            path.pop()
            stack_visited.remove(w)

    for source in range(mesh.n_vertices):
        stack_visited.clear()
        stack_visited.add(source)
        dfs(source, source, 0.0, [source])
    return best


# ---------------------------------------------------------------------------
# Torus loop-class counting from the lattice norm
# ---------------------------------------------------------------------------

def lattice_loop_norm(a: int, b: int, w_u: float, w_v: float, w_d: float) -> float:
    """Shortest edge-path length in class (a, b) on a lattice-aligned torus.

    Paths may step along u, v or the diagonal u+v (either direction), so a
    class (a, b) costs min over the diagonal step count d.
    """
    lo = min(0, a, b)
    hi = max(0, a, b)
    return min(
        abs(a - d) * w_u + abs(b - d) * w_v + abs(d) * w_d for d in range(lo, hi + 1)
    )


def lattice_class_count(threshold: float, w_u: float, w_v: float, w_d: float) -> int:
    """Classes (a, b) in Z^2 with loop norm <= threshold (incl. the trivial one)."""
    reach = int(threshold / min(w_u, w_v, w_d)) + 2
    count = 0
    for a in range(-reach, reach + 1):
        for b in range(-reach, reach + 1):
            if lattice_loop_norm(a, b, w_u, w_v, w_d) <= threshold + 1e-9:
                count += 1
    return count


def brute_force_loop_classes(mesh, basepoint: int, threshold: float) -> int:
    """Distinct GF(2)-independent *integer* classes of loops within threshold.

    Enumerates every edge path from the basepoint no longer than the
    threshold and collects the classes of the closed ones.  The class is
    the reduction of the path's integer edge-chain modulo the face-boundary
    lattice, done by exact Gaussian elimination over Q on the boundary
    matrix; this never references the package's tree-cotree labels.
    """
    edge_index = {e: i for i, e in enumerate(mesh.edges)}
    n_edges = len(mesh.edges)
    rows = []
    for a, b, c in mesh.faces:
        row = [Fraction(0)] * n_edges
        for u, v in ((a, b), (b, c), (c, a)):
            key = (u, v) if u < v else (v, u)
            row[edge_index[key]] += 1 if (u, v) == key else -1
        rows.append(row)
    # Row-reduce the boundary lattice over Q (pivot columns eliminated).
    pivots = []
    basis = []
    for row in rows:
        row = row[:]
        for (col, base) in zip(pivots, basis):
            if row[col]:
                factor = row[col] / base[col]
                row = [x - factor * y for x, y in zip(row, base)]
        for col, val in enumerate(row):
            if val:
                pivots.append(col)
                basis.append(row)
                break

    def reduce_chain(chain):
        row = [Fraction(x) for x in chain]
        for (col, base) in zip(pivots, basis):
            if row[col]:
                factor = row[col] / base[col]
                row = [x - factor * y for x, y in zip(row, base)]
        return tuple(row)

    classes = set()
    chain = [0] * n_edges

    def dfs(v, length):
        if v == basepoint:
            classes.add(reduce_chain(chain))
        for w in mesh.neighbors(v):
            key = (v, w) if v < w else (w, v)
            step = length + mesh.edge_lengths[key]
            if step > threshold + 1e-9:
                continue
            chain[edge_index[key]] += 1 if (v, w) == key else -1
            dfs(w, step)
            chain[edge_index[key]] -= 1 if (v, w) == key else -1

    dfs(basepoint, 0.0)
    return len(classes)


# ---------------------------------------------------------------------------
# Surface-group word oracle (stand-alone greedy word solver)
# ---------------------------------------------------------------------------

class WordOracle:
    """Counts group elements among short words of a one-relator surface group.

    Own conventions throughout: letters are +/-(i+1) for generator i, the
    relator is rebuilt from scratch, and classes are produced by grouping
    every freely reduced word by an exhaustively-explored set of geodesic
    rewritings (not the greedy descent the package uses).  ``is_trivial``
    gives the underlying word-problem decision for spot checks.
    """

    def __init__(self, genus: int):
        assert genus >= 2
        self.genus = genus
        rel = []
        for i in range(genus):
            a, b = i * 2 + 1, i * 2 + 2
            rel += [a, b, -a, -b]
        self.rlen = len(rel)
        self.half = self.rlen // 2
        rel_inv = [-x for x in reversed(rel)]
        rotations = [tuple(rel[i:] + rel[:i]) for i in range(self.rlen)]
        rotations += [tuple(rel_inv[i:] + rel_inv[:i]) for i in range(self.rlen)]
        self.long_repl = {}
        self.half_repl = {}
        for rot in rotations:
            for k in range(self.half, self.rlen + 1):
                head, tail = rot[:k], rot[k:]
                repl = tuple(-x for x in reversed(tail))
                if k == self.half:
                    self.half_repl[head] = repl
                else:
                    self.long_repl[head] = repl

    @staticmethod
    def free_reduce(word):
        out = []
        for x in word:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def greedy_reduce(self, word):
        w = self.free_reduce(word)
        while True:
            size = len(w)
            hit = None
            for k in range(min(self.rlen, size), self.half, -1):
                for i in range(size - k + 1):
                    repl = self.long_repl.get(w[i : i + k])
                    if repl is not None:
                        hit = (i, k, repl)
                        break
                if hit:
                    break
            if hit is None:
                return w
            i, k, repl = hit
            w = self.free_reduce(w[:i] + repl + w[i + k :])

    def is_trivial(self, word) -> bool:
        return len(self.greedy_reduce(word)) == 0

    def geodesic_class_key(self, word):
        """Shortlex-least word in the closure of half-relator rewritings."""
        start = self.greedy_reduce(word)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for i in range(len(w) - self.half + 1):
                repl = self.half_repl.get(w[i : i + self.half])
                if repl is None:
                    continue
                cand = self.free_reduce(w[:i] + repl + w[i + self.half :])
                if len(cand) > len(w):
                    continue
                if cand not in seen:
                    seen.add(cand)
                    queue.append(cand)
        return min(seen, key=lambda w: (len(w), w))

    def letters(self):
        return [x for i in range(self.genus) for x in (i * 2 + 1, -(i * 2 + 1), i * 2 + 2, -(i * 2 + 2))]

    def all_reduced_words(self, max_len: int):
        letters = self.letters()
        stack = [()]
        while stack:
            w = stack.pop()
            yield w
            if len(w) < max_len:
                for x in letters:
                    if w and w[-1] == -x:
                        continue
                    stack.append(w + (x,))

    def count_elements_by_length(self, max_len: int, spot_checks: int = 400):
        """Cumulative element counts, plus soundness/completeness checks.

        Groups every freely reduced word by geodesic_class_key, recording
        the minimum word length per class; then spot-verifies that words
        sharing a key multiply to a trivial quotient and that distinct keys
        sharing an abelianization and length do not.
        """
        min_len = {}
        members = defaultdict(list)
        for w in self.all_reduced_words(max_len):
            key = self.geodesic_class_key(w)
            if key not in min_len or len(w) < min_len[key]:
                min_len[key] = len(w)
            if len(members[key]) < 3:
                members[key].append(w)

        import random

        rng = random.Random(20240 + max_len)
        sound = [ws for ws in members.values() if len(ws) > 1]
        for ws in rng.sample(sound, min(spot_checks, len(sound))):
            u, v = ws[0], ws[1]
            inv_v = tuple(-x for x in reversed(v))
            assert self.is_trivial(u + inv_v), (u, v)

        by_bucket = defaultdict(list)
        for key in min_len:
            abel = [0] * (2 * self.genus)
            for x in key:
                abel[abs(x) - 1] += 1 if x > 0 else -1
            by_bucket[(tuple(abel), len(key))].append(key)
        crowded = [keys for keys in by_bucket.values() if len(keys) > 1]
        for keys in rng.sample(crowded, min(spot_checks, len(crowded))):
            u, v = sorted(keys)[:2]
            inv_v = tuple(-x for x in reversed(v))
            assert not self.is_trivial(u + inv_v), (u, v)

        return [
            sum(1 for l in min_len.values() if l <= L) for L in range(max_len + 1)
        ]
