"""Pure-Python genus-tree descent.

A node is a semigroup; its children remove one minimal generator lying
above the Frobenius number.  Every semigroup of genus g+1 arises exactly
once this way from the semigroup obtained by re-adding its Frobenius number.
"""

MAX_GENUS = 60


def _check(root_gaps, genus):
    if genus > MAX_GENUS:
        raise ValueError(f"genus {genus} exceeds kernel limit {MAX_GENUS}")
    if len(root_gaps) > genus:
        raise ValueError("root genus exceeds target genus")


def _membership(gaps, size):
    member = bytearray([1]) * size
    for n in gaps:
        member[n] = 0
    return member


def _multiplicity(member):
    n = 1
    while not member[n]:
        n += 1
    return n


def _tree_generators(member, conductor, m):
    """Minimal generators in [conductor, conductor + m)."""
    out = []
    start = max(conductor, 1)
    for k in range(start, start + m):
        for a in range(m, k // 2 + 1):
            if member[a] and member[k - a]:
                break
        else:
            out.append(k)
    return out


def _walk(member, gaps, target, counts, sink):
    g = len(gaps)
    if counts is not None:
        counts[g] += 1
    if g == target:
        if sink is not None:
            sink.append(tuple(gaps))
        return
    conductor = gaps[-1] + 1 if gaps else 0
    m = _multiplicity(member)
    for k in _tree_generators(member, conductor, m):
        member[k] = 0
        gaps.append(k)
        _walk(member, gaps, target, counts, sink)
        gaps.pop()
        member[k] = 1


def count_tree(root_gaps, max_genus):
    """Number of descendants (root included) at each genus ``0..max_genus``."""
    _check(root_gaps, max_genus)
    counts = [0] * (max_genus + 1)
    member = _membership(root_gaps, 3 * max_genus + 4)
    _walk(member, list(root_gaps), max_genus, counts, None)
    return counts


def enumerate_tree(root_gaps, genus):
    """Gap tuples of every descendant of the root having the given genus."""
    _check(root_gaps, genus)
    sink = []
    member = _membership(root_gaps, 3 * genus + 4)
    _walk(member, list(root_gaps), genus, None, sink)
    return sink
