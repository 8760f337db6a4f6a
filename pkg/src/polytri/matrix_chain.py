"""Matrix-chain multiplication as polygon triangulation.

A chain of n matrices with dimensions p0 x p1, p1 x p2, ..., p(n-1) x pn
maps to an (n + 1)-node polygon with weights p0..pn: polygon side
(i - 1, i) stands for matrix Ai, side (0, n) for the full product, and a
triangle {i, m, j} for multiplying the partial products over (i, m) and
(m, j) at cost pi * pm * pj. Minimum multiplicative triangulation weight
equals the minimum number of scalar multiplications.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    ACCUMULATOR_MAX,
    Edge,
    Polygon,
    Triangulation,
    require_valid,
)


@dataclass(frozen=True)
class ChainDims:
    """Matrix chain dimensions; dims[i - 1] x dims[i] is matrix Ai."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        ds = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", ds)
        if len(ds) < 2:
            raise ValueError(f"a chain needs at least 2 dimensions, got {len(ds)}")
        for i, d in enumerate(ds):
            if d <= 0:
                raise ValueError(f"dimension {i} is non-positive: {d}")

    @property
    def n_matrices(self) -> int:
        return len(self.dims) - 1


def chain_to_polygon(chain: ChainDims) -> Polygon | None:
    """The polygon whose triangulations are the chain's parenthesizations.

    A single matrix costs zero multiplications and has no polygon; that
    degenerate case returns None.
    """
    if chain.n_matrices == 1:
        return None
    return Polygon(chain.dims)


def _split_table(poly: Polygon, edges: set[Edge]) -> dict[Edge, int]:
    """For each chord or closing side (i, j), the split node of its triangle."""
    n = poly.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        adj[i].add((i + 1) % n)
        adj[(i + 1) % n].add(i)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    splits: dict[Edge, int] = {}
    work = [(0, n - 1)]
    while work:
        i, j = work.pop()
        if j - i < 2:
            continue
        mids = [m for m in adj[i] & adj[j] if i < m < j]
        assert len(mids) == 1
        splits[(i, j)] = mids[0]
        work.append((i, mids[0]))
        work.append((mids[0], j))
    return splits


def triangulation_to_parenthesization(
    chain: ChainDims, tri: Iterable[Edge] | Triangulation
) -> str:
    """Render the parenthesization encoded by a triangulation.

    The triangle {i, m, j} on chord (i, j) becomes "(L R)" where L covers
    matrices i+1..m and R covers m+1..j.
    """
    if chain.n_matrices == 1:
        return "A1"
    poly = chain_to_polygon(chain)
    splits = _split_table(poly, require_valid(poly, tri))
    n = poly.n
    parts: dict[Edge, str] = {}
    work: list[tuple[int, int, bool]] = [(0, n - 1, False)]
    while work:
        i, j, expanded = work.pop()
        if j - i == 1:
            parts[(i, j)] = f"A{j}"
        elif expanded:
            m = splits[(i, j)]
            parts[(i, j)] = f"({parts[(i, m)]} {parts[(m, j)]})"
        else:
            m = splits[(i, j)]
            work.append((i, j, True))
            work.append((i, m, False))
            work.append((m, j, False))
    return parts[(0, n - 1)]


def parenthesization_cost(chain: ChainDims, tri: Iterable[Edge] | Triangulation) -> int:
    """Scalar multiplication count of the encoded parenthesization.

    Computed by the chain recurrence cost(i, j) = cost(i, m) + cost(m, j)
    + pi * pm * pj, a deliberately separate route from summing triangle
    weights over the polygon.
    """
    if chain.n_matrices == 1:
        return 0
    poly = chain_to_polygon(chain)
    splits = _split_table(poly, require_valid(poly, tri))
    p = chain.dims
    n = poly.n
    cost: dict[Edge, int] = {}
    work: list[tuple[int, int, bool]] = [(0, n - 1, False)]
    while work:
        i, j, expanded = work.pop()
        if j - i == 1:
            cost[(i, j)] = 0
        elif expanded:
            m = splits[(i, j)]
            cost[(i, j)] = cost[(i, m)] + cost[(m, j)] + p[i] * p[m] * p[j]
        else:
            m = splits[(i, j)]
            work.append((i, j, True))
            work.append((i, m, False))
            work.append((m, j, False))
    total = cost[(0, n - 1)]
    if total >= ACCUMULATOR_MAX:
        raise OverflowError("parenthesization cost exceeds the 128-bit accumulator range")
    return total


def parse_chain(text: str) -> ChainDims:
    """Parse the chain text format: line 1 is n, line 2 is n + 1 dims."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError(f"chain file needs exactly 2 non-blank lines, got {len(lines)}")
    try:
        n = int(lines[0])
        dims = [int(tok) for tok in lines[1].split()]
    except ValueError as exc:
        raise ValueError(f"chain file is not integer-valued: {exc}") from None
    if n < 1:
        raise ValueError(f"chain file declares n={n} < 1")
    if len(dims) != n + 1:
        raise ValueError(f"chain file declares {n} matrices but lists {len(dims)} dimensions")
    return ChainDims(tuple(dims))


def format_chain(chain: ChainDims) -> str:
    return f"{chain.n_matrices}\n{' '.join(str(d) for d in chain.dims)}\n"


def load_chain(path: str) -> ChainDims:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_chain(fh.read())
