#!/usr/bin/env python3
"""Attack the open value omega(2,3): is there a 5x5 ternary omnimosaic?

Known bracket: the pigeonhole bound gives n >= 5, the grid construction
gives n <= 6, and a counting argument (81 - 16 = 65 targets using any fixed
letter versus C(4,2)*C(5,2) = 60 placements missing a row) shows every row
and column of a candidate must contain all three letters.  The canonical
depth-first search below applies that constraint; exhausting n=5 would
settle omega(2,3) = 6.

Usage: python3 scripts/omega23_search.py [--max-nodes N] [--max-seconds S]
"""

import argparse

from omnikit import search


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-nodes", type=int, default=None)
    parser.add_argument("--max-seconds", type=float, default=60.0)
    args = parser.parse_args()

    budget = search.SearchBudget(
        max_nodes=args.max_nodes, max_seconds=args.max_seconds
    )
    print("searching n=5, k=2, a=3 with", budget)
    result = search.exists_omnimosaic(5, 2, 3, budget=budget)
    print(f"status={result.status} nodes={result.nodes} elapsed={result.elapsed:.1f}s")
    if result.status == search.FOUND:
        print("witness found -- omega(2,3) = 5:")
        for row in result.witness.to_rows():
            print(" ".join(map(str, row)))
    elif result.status == search.EXHAUSTED_NONE:
        print("no 5x5 ternary omnimosaic exists -- omega(2,3) = 6")
    else:
        print("budget exceeded; the bracket 5 <= omega(2,3) <= 6 stands")


if __name__ == "__main__":
    main()
