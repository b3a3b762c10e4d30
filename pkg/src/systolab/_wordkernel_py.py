"""Pure-Python word kernels for one-relator surface-group counting.

Letters are bytes 0..4g-1: x and its inverse differ by 2g (mod 4g).  The
relator is the standard genus-g product of commutators, length 4g.  For
g >= 2 the presentation satisfies the small-cancellation condition that
makes the greedy reduction below a complete solution of the word problem:
a freely reduced word represents the identity iff replacing subwords longer
than half of (a cyclic rotation of) the relator by the shorter complement,
until nothing applies, empties the word.

Reduced words are geodesic for these presentations, and two geodesics of
the same element differ by swaps of exactly-half relator subwords; the
canonical form therefore minimizes over such swaps, shortlex.

The same module shape exists as a compiled extension (_wordkernel.pyx);
callers select one at import via systolab.words.BACKEND.
"""

from __future__ import annotations

from .errors import DomainError

BACKEND_NAME = "pure"

_TABLES: dict = {}


def _inv(x: int, n: int) -> int:
    return (x + n // 2) % n


def relator(genus: int) -> bytes:
    """Standard relator: product of commutators [a_i, b_i], length 4*genus."""
    n = 4 * genus
    word = []
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        word += [a, b, _inv(a, n), _inv(b, n)]
    return bytes(word)


def tables(genus: int):
    """Replacement tables for the Dehn step and the exact-half swap.

    Returns (n_letters, half, replace, swap): ``replace`` maps every
    subword longer than half the relator to the inverse of its complement,
    ``swap`` does the same for exactly-half subwords.
    """
    if genus < 2:
        raise DomainError("word kernels require genus >= 2 (the torus case is abelian)")
    cached = _TABLES.get(genus)
    if cached is not None:
        return cached
    n = 4 * genus
    rel = relator(genus)
    inv_rel = bytes(_inv(x, n) for x in reversed(rel))
    rotations = [rel[i:] + rel[:i] for i in range(len(rel))]
    rotations += [inv_rel[i:] + inv_rel[:i] for i in range(len(inv_rel))]
    half = len(rel) // 2
    replace: dict[bytes, bytes] = {}
    swap: dict[bytes, bytes] = {}
    prefixes = set()
    for rot in rotations:
        for k in range(half, len(rel) + 1):
            head, tail = rot[:k], rot[k:]
            complement = bytes(_inv(x, n) for x in reversed(tail))
            if k == half:
                swap[head] = complement
            else:
                replace[head] = complement
        prefixes.add(rot[:half])
    # Distinct half-length prefixes certify the small-cancellation condition
    # (pieces are single letters) that the reduction relies on.
    if len(prefixes) != len(rotations):
        raise DomainError(f"relator for genus {genus} is not small-cancellation")
    result = (n, half, replace, swap)
    _TABLES[genus] = result
    return result


def free_reduce(word: bytes, genus: int) -> bytes:
    """Cancel adjacent inverse letters until the word is freely reduced."""
    n = 4 * genus
    out = bytearray()
    for x in word:
        if out and out[-1] == _inv(x, n):
            out.pop()
        else:
            out.append(x)
    return bytes(out)


def dehn_reduce(word: bytes, genus: int) -> bytes:
    """Greedy reduction to a geodesic representative (empty iff identity)."""
    n, half, replace, _ = tables(genus)
    w = free_reduce(word, genus)
    rlen = 4 * genus
    changed = True
    while changed:
        changed = False
        size = len(w)
        for k in range(min(rlen, size), half, -1):
            for i in range(size - k + 1):
                rep = replace.get(w[i : i + k])
                if rep is not None:
                    w = free_reduce(w[:i] + rep + w[i + k :], genus)
                    changed = True
                    break
            if changed:
                break
    return w


def canonical(word: bytes, genus: int) -> bytes:
    """Shortlex-least geodesic of the element represented by ``word``."""
    _, half, _, swap = tables(genus)
    w = dehn_reduce(word, genus)
    while True:
        best = w
        for i in range(len(w) - half + 1):
            rep = swap.get(w[i : i + half])
            if rep is not None:
                cand = free_reduce(w[:i] + rep + w[i + half :], genus)
                if (len(cand), cand) < (len(best), best):
                    best = cand
        if best == w:
            return w
        w = best


def is_identity(word: bytes, genus: int) -> bool:
    return len(dehn_reduce(word, genus)) == 0


def ball_profile(genus: int, max_len: int) -> list[int]:
    """Cumulative counts of distinct group elements by geodesic length.

    Entry L is the number of elements representable by words of length at
    most L.  Breadth-first over one representative word per element: the
    products of known elements with generators cover the next sphere.
    """
    if max_len < 0:
        raise DomainError(f"max_len must be >= 0, got {max_len}")
    n = 4 * genus
    tables(genus)
    seen = {b""}
    frontier = [b""]
    counts = [1]
    for _ in range(max_len):
        next_frontier = []
        for w in frontier:
            last = w[-1] if w else -1
            for x in range(n):
                if last >= 0 and x == _inv(last, n):
                    continue
                candidate = w + bytes((x,))
                key = canonical(candidate, genus)
                if key not in seen:
                    seen.add(key)
                    next_frontier.append(candidate)
        frontier = next_frontier
        counts.append(len(seen))
    return counts
