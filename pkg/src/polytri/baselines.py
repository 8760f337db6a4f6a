"""Ground truth: the classic cubic interval DP and a brute-force oracle."""

from __future__ import annotations

import numpy as np

from .core import (
    Polygon,
    TriangleWeightFn,
    Triangulation,
    check_accumulator_bound,
    int64_safe,
    norm_edge,
)

def solve_dp_cubic(
    poly: Polygon, f: TriangleWeightFn, engine: str = "auto"
) -> tuple[int, Triangulation]:
    """Minimum triangulation weight by interval DP over arcs (cubic time).

    cost(i, j) is the optimum for the sub-polygon on nodes i..j closed by
    the chord (i, j); the answer is cost(0, n - 1). Ties between split
    points resolve to the smallest index, so reconstruction is
    deterministic. ``engine`` is "python", "numpy", or "auto"; the numpy
    path requires a vectorizable f whose accumulated values fit int64.
    """
    f.ensure_monotonic()
    check_accumulator_bound(poly, f)
    n, w = poly.n, poly.weights
    if n == 3:
        val = f.fn(w[0], w[1], w[2])
        return val, Triangulation(frozenset(), val)
    if engine == "auto":
        engine = "numpy" if f.vec is not None and int64_safe(poly, f) and n >= 64 else "python"
    if engine == "numpy":
        if f.vec is None or not int64_safe(poly, f):
            raise OverflowError("numpy engine refused: weight function not int64-safe here")
        opt, edges = _dp_numpy(poly, f)
    elif engine == "python":
        opt, edges = _dp_python(poly, f)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return opt, Triangulation(frozenset(edges), opt)


def _dp_python(poly: Polygon, f: TriangleWeightFn) -> tuple[int, list[tuple[int, int]]]:
    n, w = poly.n, poly.weights
    fw = f.fn
    cost = [[0] * n for _ in range(n)]
    split = [[0] * n for _ in range(n)]
    for d in range(2, n):
        for i in range(n - d):
            j = i + d
            wi, wj = w[i], w[j]
            row = cost[i]
            best = None
            bm = -1
            for m in range(i + 1, j):
                c = row[m] + cost[m][j] + fw(wi, w[m], wj)
                if best is None or c < best:
                    best = c
                    bm = m
            cost[i][j] = best
            split[i][j] = bm
    edges = _dp_edges(n, lambda i, j: split[i][j])
    return cost[0][n - 1], edges


def _dp_numpy(poly: Polygon, f: TriangleWeightFn) -> tuple[int, list[tuple[int, int]]]:
    n = poly.n
    W = np.array(poly.weights, dtype=np.int64)
    fvec = f.vec
    # diag[d][i] = cost(i, i + d); splits stored as the offset k with m = i + k
    diag: list[np.ndarray] = [np.zeros(n - d, dtype=np.int64) for d in range(2)]
    kdiag: list[np.ndarray] = [np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)]
    for d in range(2, n):
        ln = n - d
        wi = W[:ln]
        wj = W[d:]
        best = diag[1][:ln] + diag[d - 1][1 : 1 + ln] + fvec(wi, W[1 : 1 + ln], wj)
        bestk = np.ones(ln, dtype=np.int64)
        for k in range(2, d):
            cand = diag[k][:ln] + diag[d - k][k : k + ln] + fvec(wi, W[k : k + ln], wj)
            mask = cand < best
            best = np.where(mask, cand, best)
            bestk = np.where(mask, k, bestk)
        diag.append(best)
        kdiag.append(bestk)
    edges = _dp_edges(n, lambda i, j: i + int(kdiag[j - i][i]))
    return int(diag[n - 1][0]), edges


def _dp_edges(n: int, split_at) -> list[tuple[int, int]]:
    edges: list[tuple[int, int]] = []
    work = [(0, n - 1)]
    while work:
        i, j = work.pop()
        if j - i < 2:
            continue
        m = split_at(i, j)
        for a, b in ((i, m), (m, j)):
            if b - a >= 2 and not (a == 0 and b == n - 1):
                edges.append((a, b))
        work.append((i, m))
        work.append((m, j))
    return edges


# ---------------------------------------------------------------------------
# brute force

_ENUM_CAP = 14
_structure_cache: dict[int, tuple] = {}


def _structures(n: int) -> tuple:
    """All triangulations of an n-gon as (edges, triangles) pairs.

    Generated by recursing on the apex of the triangle that sits on the
    closing side (0, n - 1), so each triangulation appears exactly once.
    Cached for n <= 12, where the oracle gets reused across many seeds.
    """
    cached = _structure_cache.get(n)
    if cached is not None:
        return cached

    def rec(i: int, j: int) -> list[tuple[tuple, tuple]]:
        if j - i < 2:
            return [((), ())]
        out = []
        for m in range(i + 1, j):
            chords = tuple(
                (a, b) for a, b in ((i, m), (m, j)) if b - a >= 2 and not (a == 0 and b == n - 1)
            )
            for le, lt in rec(i, m):
                for re_, rt in rec(m, j):
                    out.append((le + re_ + chords, lt + rt + ((i, m, j),)))
        return out

    result = tuple(rec(0, n - 1))
    if n <= 12:
        _structure_cache[n] = result
    return result


def enumerate_triangulations(n: int):
    """Yield every triangulation of an n-gon as a frozenset of edges."""
    if not 3 <= n <= _ENUM_CAP:
        raise ValueError(f"enumeration supports 3 <= n <= {_ENUM_CAP}, got {n}")
    for edges, _ in _structures(n):
        yield frozenset(edges)


_tri_array_cache: dict[int, np.ndarray] = {}


def _triangle_array(n: int) -> np.ndarray:
    arr = _tri_array_cache.get(n)
    if arr is None:
        arr = np.array([t for _, t in _structures(n)], dtype=np.int16)  # (S, n - 2, 3)
        if n <= 12:
            _tri_array_cache[n] = arr
    return arr


def solve_bruteforce(
    poly: Polygon, f: TriangleWeightFn
) -> tuple[int, list[frozenset[tuple[int, int]]]]:
    """Exhaustive optimum plus the complete list of optimal edge sets."""
    n = poly.n
    if not 3 <= n <= _ENUM_CAP:
        raise ValueError(f"brute force supports 3 <= n <= {_ENUM_CAP}, got {n}")
    f.ensure_monotonic()
    check_accumulator_bound(poly, f)
    structures = _structures(n)
    if f.vec is not None and int64_safe(poly, f):
        T = _triangle_array(n)
        W = np.array(poly.weights, dtype=np.int64)
        totals = f.vec(W[T[:, :, 0]], W[T[:, :, 1]], W[T[:, :, 2]]).sum(axis=1)
        best = int(totals.min())
        winners = [frozenset(structures[i][0]) for i in np.flatnonzero(totals == best)]
        return best, winners
    w = poly.weights
    fw = f.fn
    best = None
    winners = []
    for edges, triangles in structures:
        total = 0
        for a, b, c in triangles:
            total += fw(w[a], w[b], w[c])
        if best is None or total < best:
            best = total
            winners = [frozenset(edges)]
        elif total == best:
            winners.append(frozenset(edges))
    return best, winners
