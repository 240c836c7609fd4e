"""Two classical two-distance sets, recovered from their graphs.

The regular pentagon has diagonals longer than its sides; joining the
vertices at the long distance gives the 5-cycle. The Petersen graph encodes
the ten midpoints of the edges of a regular 4-simplex. In both cases the
spectrum alone predicts the distance ratio and the dimension, and the
realisation step turns that prediction into coordinates.
"""

from __future__ import annotations

from twodist import Graph, condition_oracle, realize, test_spherical


def show(name: str, g: Graph) -> None:
    rep = test_spherical(g)
    print(f"{name}: n={rep.n} lambda2={rep.lambda2:.6f} mu1={rep.mu1:.6f}")
    print(f"  spherical={rep.spherical} k={rep.ratio_k:.10f} min_dimension={rep.min_dimension}")
    trace = condition_oracle(g)
    print(f"  condition trace: psd={trace.psd} null_equivalence={trace.null_equivalence}")
    emb = realize(g)
    d = emb.pairwise_distances()
    distinct = sorted({round(float(x), 9) for x in d[d > 0]})
    print(f"  realised in R^{emb.dim}: distances {distinct}, circumradius {emb.circumradius:.6f}")


def main() -> None:
    show("pentagon", Graph.cycle(5))
    show("Petersen", Graph.petersen())
    # the 4-cycle is complete bipartite, so no two-distance set has it as graph
    rep = test_spherical(Graph.cycle(4))
    print(f"4-cycle: representable={rep.representable} spherical={rep.spherical}")


if __name__ == "__main__":
    main()
