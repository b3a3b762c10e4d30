# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _wordkernel_py: hot loops for surface-group counting.

Same API and same algorithms as the pure module; words stay Python bytes
(they key the dedup dictionaries anyway) while the scanning and rewriting
loops run on C integers and a C scratch buffer.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

from .errors import DomainError

BACKEND_NAME = "compiled"

_TABLES = {}

DEF MAX_WORD = 512


cdef inline int _inv_c(int x, int n):
    return (x + n // 2) % n


def relator(int genus):
    """Standard relator: product of commutators [a_i, b_i], length 4*genus."""
    cdef int n = 4 * genus
    cdef int i
    word = []
    for i in range(genus):
        word += [2 * i, 2 * i + 1, _inv_c(2 * i, n), _inv_c(2 * i + 1, n)]
    return bytes(word)


def tables(int genus):
    """Replacement tables for the Dehn step and the exact-half swap."""
    if genus < 2:
        raise DomainError("word kernels require genus >= 2 (the torus case is abelian)")
    cached = _TABLES.get(genus)
    if cached is not None:
        return cached
    cdef int n = 4 * genus
    rel = relator(genus)
    inv_rel = bytes([_inv_c(x, n) for x in reversed(rel)])
    rotations = [rel[i:] + rel[:i] for i in range(len(rel))]
    rotations += [inv_rel[i:] + inv_rel[:i] for i in range(len(inv_rel))]
    cdef int half = len(rel) // 2
    replace = {}
    swap = {}
    prefixes = set()
    for rot in rotations:
        for k in range(half, len(rel) + 1):
            head, tail = rot[:k], rot[k:]
            complement = bytes([_inv_c(x, n) for x in reversed(tail)])
            if k == half:
                swap[head] = complement
            else:
                replace[head] = complement
        prefixes.add(rot[:half])
    if len(prefixes) != len(rotations):
        raise DomainError(f"relator for genus {genus} is not small-cancellation")
    result = (n, half, replace, swap)
    _TABLES[genus] = result
    return result


cdef bytes _free_reduce_c(const unsigned char[:] word, int n):
    cdef unsigned char out[MAX_WORD]
    cdef int top = 0
    cdef int i, x
    for i in range(word.shape[0]):
        x = word[i]
        if top > 0 and out[top - 1] == _inv_c(x, n):
            top -= 1
        else:
            out[top] = <unsigned char> x
            top += 1
    return PyBytes_FromStringAndSize(<char*> out, top)


def free_reduce(word: bytes, int genus):
    """Cancel adjacent inverse letters until the word is freely reduced."""
    if len(word) > MAX_WORD:
        raise DomainError(f"word longer than kernel limit {MAX_WORD}")
    return _free_reduce_c(word, 4 * genus)


def dehn_reduce(word: bytes, int genus):
    """Greedy reduction to a geodesic representative (empty iff identity)."""
    tabs = tables(genus)
    cdef int n = tabs[0]
    cdef int half = tabs[1]
    replace = tabs[2]
    cdef int rlen = 4 * genus
    if len(word) > MAX_WORD:
        raise DomainError(f"word longer than kernel limit {MAX_WORD}")
    w = _free_reduce_c(word, n)
    cdef int changed = 1
    cdef int size, k, i
    while changed:
        changed = 0
        size = len(w)
        k = rlen if rlen < size else size
        while k > half:
            for i in range(size - k + 1):
                rep = replace.get(w[i : i + k])
                if rep is not None:
                    w = _free_reduce_c(w[:i] + rep + w[i + k :], n)
                    changed = 1
                    break
            if changed:
                break
            k -= 1
    return w


def canonical(word: bytes, int genus):
    """Shortlex-least geodesic of the element represented by ``word``."""
    tabs = tables(genus)
    cdef int n = tabs[0]
    cdef int half = tabs[1]
    swap = tabs[3]
    w = dehn_reduce(word, genus)
    cdef int i, size
    while True:
        best = w
        size = len(w)
        for i in range(size - half + 1):
            rep = swap.get(w[i : i + half])
            if rep is not None:
                cand = _free_reduce_c(w[:i] + rep + w[i + half :], n)
                if (len(cand), cand) < (len(best), best):
                    best = cand
        if best == w:
            return w
        w = best


def is_identity(word: bytes, int genus):
    return len(dehn_reduce(word, genus)) == 0


def ball_profile(int genus, int max_len):
    """Cumulative counts of distinct group elements by geodesic length."""
    if max_len < 0:
        raise DomainError(f"max_len must be >= 0, got {max_len}")
    cdef int n = 4 * genus
    tables(genus)
    seen = {b""}
    frontier = [b""]
    counts = [1]
    cdef int x, last, layer
    for layer in range(max_len):
        next_frontier = []
        for w in frontier:
            last = w[-1] if len(w) else -1
            for x in range(n):
                if last >= 0 and x == _inv_c(last, n):
                    continue
                candidate = w + bytes((x,))
                key = canonical(candidate, genus)
                if key not in seen:
                    seen.add(key)
                    next_frontier.append(candidate)
        frontier = next_frontier
        counts.append(len(seen))
    return counts
