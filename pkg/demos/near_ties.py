"""A graph where floating point nearly gets it wrong.

On this 9-vertex graph the top eigenvalue of the centred adjacency matrix
misses the second adjacency eigenvalue by a few parts in a billion, well
inside what a naive tolerance would call equal. The exact oracle works with
the integer characteristic polynomials and shows the two are different, so
the graph is not spherical.
"""

from __future__ import annotations

from twodist import exact_decide, parse_graph6, test_spherical
from twodist.spherical import decide_batch


def main() -> None:
    g = parse_graph6("H_t^S[I")
    naive = decide_batch(g.adjacency()[None])
    rep = test_spherical(g)
    print(f"lambda2 = {rep.lambda2:.15f}")
    print(f"mu1     = {rep.mu1:.15f}  (gap {abs(rep.mu1 - rep.lambda2):.2e})")
    print(f"float-only verdict: spherical={bool(naive['spherical'][0])}, borderline={bool(naive['borderline'][0])}")
    exact = exact_decide(g)
    print(f"exact verdict:      spherical={exact.spherical} ({exact.reason or 'no reason given'})")
    print(f"reported verdict:   spherical={rep.spherical}, decided_by={rep.decided_by}")


if __name__ == "__main__":
    main()
