"""Matrix-chain multiplication via polygon triangulation.

The chain A1 (10x20), A2 (20x30), A3 (30x40) is the textbook example: the
dims become a 4-node polygon, the optimal multiplicative triangulation
picks the chord (0, 2), and reading the triangles back gives
((A1 A2) A3) at 18000 scalar multiplications versus 32000 the other way.
"""

from polytri import (
    ChainDims,
    TriangleWeightFn,
    chain_to_polygon,
    gen_random_chain,
    parenthesization_cost,
    solve_bst,
    triangulation_to_parenthesization,
)


def solve_chain(chain: ChainDims) -> None:
    k = chain.n_matrices
    print(f"dims: {chain.dims} ({k} {'matrix' if k == 1 else 'matrices'})")
    poly = chain_to_polygon(chain)
    if poly is None:
        print("  single matrix: 0 multiplications, A1\n")
        return
    opt, tri, _ = solve_bst(poly, TriangleWeightFn.multiplicative())
    text = triangulation_to_parenthesization(chain, tri)
    assert parenthesization_cost(chain, tri) == opt
    print(f"  {opt} scalar multiplications: {text}\n")


def main() -> None:
    solve_chain(ChainDims((10, 20, 30, 40)))
    solve_chain(ChainDims((10, 20)))
    for seed in (7, 8):
        solve_chain(gen_random_chain(9, seed=seed))


if __name__ == "__main__":
    main()
