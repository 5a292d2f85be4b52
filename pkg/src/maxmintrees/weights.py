"""
Permutation weight straight from the word, without building a tree.

The weight of a permutation equals, summed over its non-descent positions,
the number of descents inside that position's subtree range, minus n.  The
subtree range of a non-descent i in the extended word is [max(M, L) + 1, m]
where

  j = first position right of i whose value is smaller than sigma_i,
  m = position of the maximum value strictly between i and j,
  M = nearest position left of m whose value exceeds sigma_m,
  L = nearest position left of i whose value is smaller than sigma_i
      (the front sentinel position 0 when there is none).

The appended maximum n+1 always counts as a descent; the back sentinel 0
makes that fall out of the plain comparison ext[k] > ext[k+1].

Two implementations are provided.  ``weight_via_ranges`` computes j, m, M
and L by direct scanning per non-descent (quadratic worst case, fast in
practice).  ``weight_accelerated`` precomputes nearest-smaller /
nearest-greater indices with monotonic stacks and answers the max-position
queries from a sparse table, costing O(n log n) per call; large inputs are
handed to a numpy backend.  Both return identical values by contract, and
the tests enforce that against each other and against the tree-based
computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perms import ExtendedPermutation, Permutation, extend

_NUMPY_CUTOFF = 2048


@dataclass(frozen=True)
class SubtreeRange:
    """Inclusive position interval inside the extended word."""

    left: int
    right: int


def _scan_range(ext: Sequence[int], i: int) -> tuple[int, int]:
    """(left, right) subtree range of non-descent position i, by scanning."""
    v = ext[i]
    j = i + 1
    while ext[j] > v:
        j += 1
    m = i + 1
    best = ext[m]
    for k in range(i + 2, j):
        if ext[k] > best:
            best = ext[k]
            m = k
    M = m - 1
    while ext[M] < best:
        M -= 1
    L = i - 1
    while L and ext[L] > v:
        L -= 1
    lo = M if M > L else L
    return lo + 1, m


def subtree_range(ext: ExtendedPermutation, i: int) -> SubtreeRange:
    """
    The subtree range of non-descent position i: the positions whose values
    form subtree(build_max_weight_tree(p), sigma_i).

    >>> subtree_range(extend((2, 1, 3)), 2)
    SubtreeRange(left=1, right=4)
    """
    n = len(ext) - 3
    if not 1 <= i <= n:
        raise ValueError(f"position {i} outside 1..{n}")
    if ext[i] > ext[i + 1]:
        raise ValueError(f"position {i} is a descent")
    left, right = _scan_range(ext, i)
    return SubtreeRange(left, right)


def _descent_prefix(ext: Sequence[int]) -> list[int]:
    """P[k] = number of descent positions in 1..k of the extended word."""
    n1 = len(ext) - 2
    P = [0] * (n1 + 1)
    c = 0
    for k in range(1, n1 + 1):
        if ext[k] > ext[k + 1]:
            c += 1
        P[k] = c
    return P


def descents_and_weight(p: Permutation) -> tuple[int, int]:
    """
    (descent count, weight) of p in one pass over the extended word.

    This is the scanning range algorithm fused with the descent count; it
    is the kernel behind weight_via_ranges and the symmetric-group
    enumeration.
    """
    n = len(p)
    ext = [n + 2, *p, n + 1, 0]
    P = _descent_prefix(ext)
    total = 0
    for i in range(1, n + 1):
        if ext[i] > ext[i + 1]:
            continue
        lo, m = _scan_range(ext, i)
        total += P[m] - P[lo - 1]
    return P[n], total - n


def weight_via_ranges(p: Permutation) -> int:
    """
    Weight of p by the scanning range algorithm (quadratic worst case).

    >>> weight_via_ranges((1, 3, 2))
    1
    """
    return descents_and_weight(p)[1]


def range_details(p: Permutation) -> list[dict]:
    """
    Per-non-descent breakdown of the range computation: position, value,
    subtree range and the number of descents inside it.
    """
    n = len(p)
    ext = extend(p)
    P = _descent_prefix(ext)
    out = []
    for i in range(1, n + 1):
        if ext[i] > ext[i + 1]:
            continue
        lo, m = _scan_range(ext, i)
        out.append(
            {
                "position": i,
                "value": ext[i],
                "range": [lo, m],
                "descents": P[m] - P[lo - 1],
            }
        )
    return out


def _stack_indices(ext: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    """
    Monotonic-stack precomputes over the extended word:

      nsr[k] = first position > k with a smaller value,
      psl[k] = nearest position < k with a smaller value (0 when none),
      pgl[k] = nearest position < k with a greater value (0 when none).
    """
    size = len(ext)
    nsr = [0] * size
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for t in range(size):
        v = ext[t]
        while stack and ext[stack[-1]] > v:
            nsr[pop()] = t
        push(t)
    stack.clear()
    psl = [0] * size
    for t in range(size):
        v = ext[t]
        while stack and ext[stack[-1]] > v:
            pop()
        if stack:
            psl[t] = stack[-1]
        push(t)
    stack.clear()
    pgl = [0] * size
    for t in range(size):
        v = ext[t]
        while stack and ext[stack[-1]] < v:
            pop()
        if stack:
            pgl[t] = stack[-1]
        push(t)
    return nsr, psl, pgl


def weight_accelerated(p: Permutation) -> int:
    """
    Weight of p using precomputed index structures, O(n log n) per call.

    Output is identical to weight_via_ranges for every input.

    >>> weight_accelerated((1, 3, 2))
    1
    """
    if len(p) >= _NUMPY_CUTOFF:
        return _accelerated_numpy(p)
    return _accelerated_python(p)


def _accelerated_python(p: Permutation) -> int:
    n = len(p)
    ext = [n + 2, *p, n + 1, 0]
    size = n + 3
    nsr, psl, pgl = _stack_indices(ext)
    P = _descent_prefix(ext)
    # sparse table of range-max positions: table[k][i] = argmax over
    # positions [i, i + 2^k - 1]
    table = [list(range(size))]
    k = 1
    while (1 << k) <= size:
        half = 1 << (k - 1)
        prev = table[-1]
        row = []
        append = row.append
        for idx in range(size - (1 << k) + 1):
            a = prev[idx]
            b = prev[idx + half]
            append(a if ext[a] >= ext[b] else b)
        table.append(row)
        k += 1
    total = 0
    for i in range(1, n + 1):
        if ext[i] > ext[i + 1]:
            continue
        j = nsr[i]
        l, r = i + 1, j - 1
        k = (r - l + 1).bit_length() - 1
        row = table[k]
        a = row[l]
        b = row[r - (1 << k) + 1]
        m = a if ext[a] >= ext[b] else b
        M = pgl[m]
        L = psl[i]
        lo = M if M > L else L
        total += P[m] - P[lo]
    return total - n


def _accelerated_numpy(p: Permutation) -> int:
    import numpy as np

    n = len(p)
    ext = [n + 2, *p, n + 1, 0]
    size = n + 3
    nsr, psl, pgl = _stack_indices(ext)
    vals = np.array(ext, dtype=np.int64)
    desc = vals[1 : n + 2] > vals[2 : n + 3]
    P = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(desc, out=P[1:])
    levels = size.bit_length()
    table = np.empty((levels, size), dtype=np.int64)
    table[0] = np.arange(size)
    pos = np.arange(size)
    for k in range(1, levels):
        half = 1 << (k - 1)
        prev = table[k - 1]
        cand = prev[np.minimum(pos + half, size - 1)]
        table[k] = np.where(vals[prev] >= vals[cand], prev, cand)
    idx = np.flatnonzero(~desc[:n]) + 1  # non-descent positions 1..n
    jj = np.asarray(nsr, dtype=np.int64)[idx]
    l = idx + 1
    r = jj - 1
    span = r - l + 1
    k = np.frexp(span)[1] - 1  # floor(log2(span)), exact for integers
    a = table[k, l]
    b = table[k, r - (1 << k.astype(np.int64)) + 1]
    m = np.where(vals[a] >= vals[b], a, b)
    lo = np.maximum(np.asarray(pgl, dtype=np.int64)[m], np.asarray(psl, dtype=np.int64)[idx])
    return int((P[m] - P[lo]).sum()) - n
