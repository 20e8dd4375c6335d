"""Size of the affine-plane clique minor in K_h x K_l against h*sqrt(l).

    python3 scripts/construction_sizes.py [--verify]

Hosts are stored densely, so --verify only builds hosts up to MAX_BUILD vertices.
"""

import argparse
import math
import time

from hadprod.construction import construction_params, product_clique_model, upper_bound_kn_km

MAX_BUILD = 40000
CASES = [(7, 144), (14, 144), (20, 144), (22, 900), (44, 900), (66, 900), (45, 3136), (90, 3136)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--verify", action="store_true", help="also build and verify each model")
    a = ap.parse_args()
    print(f"{'h':>4} {'l':>5} {'p':>2} {'N':>6} {'h*sqrt(l)':>10} {'ratio':>6} {'upper':>6}  verify")
    for h, l in CASES:
        pr = construction_params(h, l)
        ref = h * math.sqrt(l)
        upper = upper_bound_kn_km(max(h, l), min(h, l))
        note = ""
        if a.verify and h * l <= MAX_BUILD:
            t0 = time.perf_counter()
            m = product_clique_model(h, l)
            note = f"K_{m.pattern.n} ok in {time.perf_counter() - t0:.2f}s"
        print(f"{h:>4} {l:>5} {pr.p:>2} {pr.clique_size:>6} {ref:>10.1f} {pr.clique_size / ref:>6.3f} "
              f"{upper:>6}  {note}")


if __name__ == "__main__":
    main()
