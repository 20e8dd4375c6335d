"""Certified lower and formula upper bounds for a few product families.

    python3 scripts/bound_reports.py [--json]
"""

import argparse
import json

from hadprod.construction import product_bound_report
from hadprod.generators import complete, cycle, fan, grid, hypercube, path, star
from hadprod.product import cartesian_product

PAIRS = [
    ("C5 x C5", cycle(5), cycle(5)),
    ("C6xK2 x K2", cartesian_product(cycle(6), complete(2))[0], complete(2)),
    ("W6 x K3", fan(6), complete(3)),
    ("R3 x K2", grid(3), complete(2)),
    ("Q3 x P3", hypercube(3), path(3)),
    ("K1,4 x K4", star(4), complete(4)),
    ("K7 x K144", complete(7), complete(144)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="print full reports")
    ap.add_argument("--budget", type=int, default=200000)
    a = ap.parse_args()
    for name, g, h in PAIRS:
        rep = product_bound_report(g, h, budget=a.budget)
        if a.json:
            print(json.dumps(rep.to_json(), sort_keys=True))
            continue
        how = max(rep.lower, key=lambda b: b["value"])["provenance"]
        exact = "" if rep.eta_exact is None else f" exact={rep.eta_exact}"
        print(f"{name:<12} {rep.best_lower:>4} <= eta <= {rep.best_upper:<5}{exact:<10} chi={rep.chi_exact} "
              f"verdict={rep.verdict} (best lower from {how})")


if __name__ == "__main__":
    main()
