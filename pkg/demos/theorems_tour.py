"""Checks of the structural results on a random five-well system.

* the ground level is simple and its wave function has no node;
* removing a well never lowers any level;
* eigenvalues of Phi with one well removed interlace those of the full Phi;
* every eigenvalue branch increases with |E|;
* in hbar = 1, m = 1/2 units, Phi is congruent to the resolvent matrix Gamma.

Run:  python demos/theorems_tour.py
"""
import numpy as np

from deltawells import validate_system
from deltawells.verify import run_suite

rng = np.random.default_rng(5)
centers = np.cumsum(rng.uniform(0.5, 2.5, 5))
strengths = rng.uniform(0.5, 3.0, 5)
system = validate_system(centers, strengths)
print(system, "\n")

for record in run_suite(system):
    margin = record["worst_margin"]
    margin = "n/a" if margin is None else f"{margin:.3e}"
    print(f"{record['name']:>12}: {record['status']:<12} worst margin {margin}")

removal = next(r for r in run_suite(system, "removal"))
print("\nlevel shifts after removing each well (all >= 0):")
for index, deltas in removal["details"]["deltas"].items():
    print(f"  well {index}: " + " ".join(f"{d:+.4f}" for d in deltas))
