"""Solve one small polygon with every algorithm and compare the answers.

The quadrilateral below is small enough to eyeball: under the
multiplicative weight the optimum splits along (0, 2), under the additive
weight along (1, 3). All exact solvers agree on the weights; the additive
heuristic happens to be exact here because it always is on
quadrilaterals.
"""

from polytri import (
    Polygon,
    TriangleWeightFn,
    heuristic_triangulate,
    solve_bst,
    solve_dp_cubic,
    solve_yao,
)


def main() -> None:
    poly = Polygon((1, 2, 5, 3))
    print(f"polygon weights: {poly.weights}")

    for name, f in (
        ("multiplicative", TriangleWeightFn.multiplicative()),
        ("additive", TriangleWeightFn.additive()),
        ("product+sum", TriangleWeightFn.product_plus_sum()),
    ):
        opt_dp, tri_dp = solve_dp_cubic(poly, f)
        opt_yao, _, st_yao = solve_yao(poly, f)
        opt_bst, tri_bst, st_bst = solve_bst(poly, f)
        assert opt_dp == opt_yao == opt_bst
        print(f"\n{name}:")
        print(f"  optimum {opt_bst}, edges {sorted(tri_bst.edges)}")
        print(f"  dp3 edges {sorted(tri_dp.edges)} (ties may pick another optimum)")
        print(
            f"  bst visited {st_bst.visited_cones} of {st_bst.total_cones} cones, "
            f"yao swept all {st_yao.total_cones}"
        )

    tri, report = heuristic_triangulate(poly)
    opt_add = solve_bst(poly, TriangleWeightFn.additive())[0]
    print(
        f"\nadditive heuristic: weight {report.heuristic_weight}, "
        f"edges {sorted(tri.edges)}, exact optimum {opt_add}"
    )


if __name__ == "__main__":
    main()
