"""How bad can the linear additive heuristic get? Exactly 1/3, in the limit.

On gen_heuristic_worst(5, t) the heuristic fans from the lightest node
while the optimum chains along the rank order; the relative error is
(t - 1) / (3 (t + 2)), which climbs toward 1/3 as the two heavy nodes
dominate. Random instances sit far below the bound.
"""

import random
from fractions import Fraction

from polytri import error_ratio, gen_heuristic_worst, gen_random


def main() -> None:
    print(f"{'t':>8} {'weights':<24} {'C':>8} {'C_opt':>8} {'E':>12}")
    for t in (1, 2, 4, 10, 100, 10**4):
        poly = gen_heuristic_worst(5, t)
        rep = error_ratio(poly)
        label = str(poly.weights) if t <= 100 else "(1, 1, 10^4, 10^4, 1)"
        assert rep.ratio == Fraction(t - 1, 3 * (t + 2))
        print(
            f"{t:>8} {label:<24} {rep.heuristic_weight:>8} "
            f"{rep.optimal_weight:>8} {str(rep.ratio):>12}"
        )

    rng = random.Random(0)
    worst = Fraction(0)
    for _ in range(300):
        poly = gen_random(rng.randint(4, 150), rng.randrange(2**32))
        worst = max(worst, error_ratio(poly).ratio)
    print(f"\nworst of 300 random instances: E = {float(worst):.4f} (bound: 1/3)")


if __name__ == "__main__":
    main()
