# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled genus-tree descent; same contract as ``_pytree``."""

cdef enum:
    MAXG = 60
    SIZE = 3 * MAXG + 4

MAX_GENUS = MAXG


cdef void _walk(unsigned char* member, int* gaps, int g, int target,
                long long* counts, list sink):
    cdef int conductor, start, m, k, a, ok, i
    if counts != NULL:
        counts[g] += 1
    if g == target:
        if sink is not None:
            sink.append(tuple([gaps[i] for i in range(g)]))
        return
    conductor = gaps[g - 1] + 1 if g > 0 else 0
    m = 1
    while not member[m]:
        m += 1
    start = conductor if conductor > 1 else 1
    k = start
    while k < start + m:
        ok = 1
        a = m
        while a <= k // 2:
            if member[a] and member[k - a]:
                ok = 0
                break
            a += 1
        if ok:
            member[k] = 0
            gaps[g] = k
            _walk(member, gaps, g + 1, target, counts, sink)
            member[k] = 1
        k += 1


cdef int _setup(root_gaps, int genus, unsigned char* member, int* gaps) except -1:
    cdef int i, n
    if genus > MAXG:
        raise ValueError(f"genus {genus} exceeds kernel limit {MAXG}")
    if len(root_gaps) > genus:
        raise ValueError("root genus exceeds target genus")
    for i in range(SIZE):
        member[i] = 1
    for i, n in enumerate(root_gaps):
        member[n] = 0
        gaps[i] = n
    return len(root_gaps)


def count_tree(root_gaps, int max_genus):
    """Number of descendants (root included) at each genus ``0..max_genus``."""
    cdef unsigned char member[SIZE]
    cdef int gaps[MAXG + 1]
    cdef long long counts[MAXG + 1]
    cdef int g0 = _setup(root_gaps, max_genus, member, gaps)
    cdef int i
    for i in range(MAXG + 1):
        counts[i] = 0
    _walk(member, gaps, g0, max_genus, counts, None)
    return [counts[i] for i in range(max_genus + 1)]


def enumerate_tree(root_gaps, int genus):
    """Gap tuples of every descendant of the root having the given genus."""
    cdef unsigned char member[SIZE]
    cdef int gaps[MAXG + 1]
    cdef int g0 = _setup(root_gaps, genus, member, gaps)
    cdef list sink = []
    _walk(member, gaps, g0, genus, NULL, sink)
    return sink
