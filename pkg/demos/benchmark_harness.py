"""Run a small solver grid and summarize how the visit counts grow.

run_bench solves identical seeded instances with each algorithm and
cross-checks their optima; growth_summary then normalizes mean visited
cones by n log2 n and by n^2. On random weights the branching solver
tracks the n log2 n column while the sweep tracks n^2 - the gap is the
whole point of being lazy.
"""

import io

from polytri import growth_summary, read_csv, run_bench, write_csv


def main() -> None:
    records = run_bench(
        sizes=(100, 300, 1000, 3000),
        trials=5,
        seed=42,
        algos=("bst", "yao"),  # the cubic baseline has nothing to say up here
    )

    buf = io.StringIO()
    write_csv(records, buf)
    buf.seek(0)
    assert read_csv(buf) == records  # the CSV is the archive format
    print(f"{len(records)} records ({len(buf.getvalue().splitlines()) - 1} CSV rows)\n")

    summary = growth_summary(records)
    for algo, rows in summary.items():
        print(f"{algo}:")
        print(f"{'n':>8} {'mean visited':>14} {'/ n log2 n':>12} {'/ n^2':>10}")
        for row in rows:
            print(
                f"{int(row['n']):>8} {row['mean_visited']:>14.0f} "
                f"{row['per_n_log2_n']:>12.3f} {row['per_n2']:>10.4f}"
            )
        print()


if __name__ == "__main__":
    main()
