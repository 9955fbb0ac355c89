"""Integer-table kernels with a numba path and a pure-numpy fallback.

The numba kernels are used when numba imports and the environment variable
``LRBQUIVER_DISABLE_NUMBA`` is unset (or ``0``). Both implementations are
importable under explicit names so they can be compared directly.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None


def _disabled():
    return os.environ.get("LRBQUIVER_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")


HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _disabled()
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# associativity: first (a, b, c) with (ab)c != a(bc), or (-1, -1, -1)

def assoc_witness_numpy(mult):
    n = mult.shape[0]
    for a in range(n):
        left = mult[mult[a]]          # left[b, c] = (ab)c
        right = mult[a][mult]         # right[b, c] = a(bc)
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return -1, -1, -1


def _assoc_witness_py(mult):
    n = mult.shape[0]
    for a in range(n):
        for b in range(n):
            ab = mult[a, b]
            for c in range(n):
                if mult[ab, c] != mult[a, mult[b, c]]:
                    return a, b, c
    return -1, -1, -1


# ---------------------------------------------------------------------------
# closure of a seed under the product, first-seen order

def closure_numpy(mult, seed):
    order = [int(s) for s in seed]
    seen = np.zeros(mult.shape[0], dtype=np.bool_)
    seen[order] = True
    k = 0
    while k < len(order):
        t = order[k]
        prev = np.asarray(order[: k + 1], dtype=mult.dtype)
        cand = np.empty(2 * len(prev), dtype=mult.dtype)
        cand[0::2] = mult[t, prev]
        cand[1::2] = mult[prev, t]
        for c in cand[~seen[cand]].tolist():
            if not seen[c]:
                seen[c] = True
                order.append(c)
        k += 1
    return np.asarray(order, dtype=np.int64)


def _closure_py(mult, seed):
    n = mult.shape[0]
    order = np.empty(n, dtype=np.int64)
    seen = np.zeros(n, dtype=np.bool_)
    m = 0
    for s in seed:
        order[m] = s
        seen[s] = True
        m += 1
    k = 0
    while k < m:
        t = order[k]
        for j in range(k + 1):
            u = order[j]
            p = mult[t, u]
            if not seen[p]:
                seen[p] = True
                order[m] = p
                m += 1
            q = mult[u, t]
            if not seen[q]:
                seen[q] = True
                order[m] = q
                m += 1
        k += 1
    return order[:m].copy()


# ---------------------------------------------------------------------------
# classes of the arrow relation on S_X
#
# members: the elements of support X; witnesses: w with y < w, supp(w) < X.
# x is identified with yx, and every witness glues together all x with wx = yx.

def arrow_classes_numpy(mult, members, witnesses, y):
    m = len(members)
    if m == 0:
        return 0
    pos = np.full(mult.shape[0], -1, dtype=np.int64)
    pos[members] = np.arange(m)
    labels = np.arange(m)
    ymem = mult[y, members]
    partner = pos[ymem]
    glue = mult[np.ix_(witnesses, members)] == ymem[None, :] if len(witnesses) else None
    while True:
        new = np.minimum(labels, labels[partner])
        np.minimum.at(new, partner, labels)
        if glue is not None:
            big = np.where(glue, new[None, :], m)
            row_min = big.min(axis=1)
            new = np.minimum(new, np.where(glue, row_min[:, None], m).min(axis=0))
        if np.array_equal(new, labels):
            break
        labels = new
    return len(np.unique(labels))


def _find(parent, i):
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        nxt = parent[i]
        parent[i] = root
        i = nxt
    return root


def _arrow_classes_py(mult, members, witnesses, y):
    n = mult.shape[0]
    m = len(members)
    pos = np.full(n, -1, dtype=np.int64)
    for i in range(m):
        pos[members[i]] = i
    parent = np.arange(m)
    classes = m
    for i in range(m):
        a = _find(parent, i)
        b = _find(parent, pos[mult[y, members[i]]])
        if a != b:
            parent[max(a, b)] = min(a, b)
            classes -= 1
    for k in range(len(witnesses)):
        w = witnesses[k]
        first = -1
        for i in range(m):
            x = members[i]
            if mult[w, x] == mult[y, x]:
                if first < 0:
                    first = _find(parent, i)
                else:
                    b = _find(parent, i)
                    if b != first:
                        lo, hi = min(first, b), max(first, b)
                        parent[hi] = lo
                        first = lo
                        classes -= 1
    return classes


if HAVE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    assoc_witness_numba = _jit(_assoc_witness_py)
    closure_numba = _jit(_closure_py)
    _find = _jit(_find)
    arrow_classes_numba = _jit(_arrow_classes_py)
else:  # pragma: no cover
    assoc_witness_numba = closure_numba = arrow_classes_numba = None


if USE_NUMBA:
    assoc_witness = assoc_witness_numba
    closure = closure_numba
    arrow_classes = arrow_classes_numba
else:
    assoc_witness = assoc_witness_numpy
    closure = closure_numpy
    arrow_classes = arrow_classes_numpy
