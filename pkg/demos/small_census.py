"""Count spherical two-distance sets of n points by their lowest dimension.

Each isomorphism class of graphs on n vertices is tested once. A spherical
graph on n vertices lives in dimension n - 2 but may fit in fewer; the
multiplicity of the second adjacency eigenvalue says how many fewer.
"""

from __future__ import annotations

import sys
import time

from twodist.census import census_csv, run_census


def main(max_n: int = 8) -> None:
    rows = []
    for n in range(4, max_n + 1):
        start = time.perf_counter()
        row = run_census(n, certify=True)
        rows.append(row)
        print(f"n={n}: {row.spherical} spherical of {row.total_classes} classes "
              f"({time.perf_counter() - start:.1f}s)", file=sys.stderr)
    sys.stdout.write(census_csv(rows))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
