"""
Scanning plane triangulations for tight induced-forest examples
===============================================================

The committed fixtures hold every plane triangulation with 4..10 vertices
(counts 1, 1, 2, 5, 14, 50, 233). A triangulation on even n is *tight* when
its largest induced forest has exactly n/2 vertices; for those, every
orientation is swept for an acyclic set of size n/2 + 1.

Note: this scan finds 10 tight triangulations (1, 1, 3, 5 for n = 4, 6, 8,
10); the acceptance suite's expected count of 9 matches only if the n = 4
case (K4) is skipped. The README carries the verification trail.
"""

from planacyclic import (find_tight, load_fixtures, max_induced_forest,
                         orientation_sweep)

fixtures = load_fixtures([4, 6, 8, 10])

total = 0
tight_small = []
for n in (4, 6, 8, 10):
    graphs = fixtures[n]
    tight = find_tight(graphs)
    total += len(tight)
    print(f"n={n}: {len(graphs):3d} triangulations, {len(tight)} tight "
          f"(forest sizes {sorted({max_induced_forest(g.graph).size for g in graphs})})")
    if n <= 8:
        tight_small.extend(tight)
print("tight total:", total)

# Sweep every orientation (up to reversal) of the small tight examples.
# K4 has 2^5 orientations after dedup, the octahedron 2^11, each n=8 one 2^17.
for eg in tight_small:
    result = orientation_sweep(eg, eg.n // 2 + 1, jobs=2)
    print(f"n={eg.n} m={eg.m}: {result.orientations} orientations, "
          f"every one has an acyclic set of size {eg.n // 2 + 1}: "
          f"{result.all_meet_threshold}")

# The octahedron again, exactly: the minimum over orientations of the
# maximum acyclic set really is n/2 + 1, so the threshold is sharp.
octa = find_tight(fixtures[6])[0]
exact = orientation_sweep(octa, 4, exact=True)
print("octahedron exact minimum MAS over orientations:", exact.min_mas)
