"""
Exact feedback vertex sets, acyclic sets, and induced forests
=============================================================

The solvers are small branch-and-bound searches over bitmask adjacency;
every answer is provably optimal and every witness is re-validated. The
brute-force oracles make the dual route explicit.
"""

import random

from planacyclic import (Digraph, UndirectedGraph, brute_force_max_induced_forest,
                         brute_force_min_fvs, has_acyclic_set_of_size,
                         is_acyclic, max_acyclic_set, max_induced_forest,
                         min_fvs, reverse)

# A directed 5-cycle needs exactly one feedback vertex.
cycle = Digraph(5, [(i, (i + 1) % 5) for i in range(5)])
w = min_fvs(cycle)
print("5-cycle:", w)

# Maximum acyclic set = complement of a minimum feedback vertex set.
mas = max_acyclic_set(cycle)
print("MAS witness:", sorted(mas.vertices), "is acyclic:",
      is_acyclic(cycle, mas.vertices))

# The decision variant stops at the first acyclic set of the target size.
print("has acyclic set of size 4:", has_acyclic_set_of_size(cycle, 4))
print("has acyclic set of size 5:", has_acyclic_set_of_size(cycle, 5))

# Solver vs. brute force on random digraphs: sizes must agree exactly.
rng = random.Random(7)
for _ in range(5):
    n = rng.randint(4, 10)
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < 0.3]
    d = Digraph(n, arcs)
    a, b = min_fvs(d).size, brute_force_min_fvs(d).size
    assert a == b
    print(f"random n={n} m={d.m}: min_fvs={a} (brute force agrees), "
          f"MAS={max_acyclic_set(d).size}, reversal MAS="
          f"{max_acyclic_set(reverse(d)).size}")

# The undirected side: maximum induced forest (complement of a minimum
# decycling set). K4 and the octahedron only keep half their vertices.
k4 = UndirectedGraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
octa = UndirectedGraph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                           if (u, v) not in ((0, 3), (1, 4), (2, 5))])
for name, g in [("K4", k4), ("octahedron", octa)]:
    w = max_induced_forest(g)
    assert w.size == brute_force_max_induced_forest(g).size
    print(f"{name}: induced forest {w.size} of {g.n} vertices "
          f"-> {sorted(w.vertices)}")
