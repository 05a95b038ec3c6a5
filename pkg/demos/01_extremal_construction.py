"""
Building planar oriented graphs with no large acyclic set
=========================================================

The recursive construction glues directed g-cycles together through a
designated vertex pair, one feedback unit per level. Every claim the
certificate makes is re-checked here with the exact solvers.
"""

from planacyclic import (construct, digirth, euler_characteristic,
                         max_acyclic_set, min_fvs, pad_to_order,
                         pair_in_some_min_fvs, theorem_bound)

# Level 1 is just a directed triangle: 3 vertices, best acyclic set 2.
cert = construct(3, 1)
print("f=1:", cert.digraph, "MAS =", max_acyclic_set(cert.digraph).size)

# Each extra level adds g-1 vertices but only one more feedback vertex,
# so the acyclic fraction creeps down toward (g-2)/(g-1).
for f in range(1, 7):
    cert = construct(3, f)
    d = cert.digraph
    mas = max_acyclic_set(d).size
    print(f"f={f}: n={d.n:2d} m={d.m:2d} "
          f"min_fvs={min_fvs(d).size} MAS={mas} "
          f"bound={theorem_bound(d.n, 3)} digirth={digirth(d)}")
    assert mas == theorem_bound(d.n, 3), "construction must meet the bound"

# The planarity certificate: V - E + F of the maintained embedding is 2.
cert = construct(5, 3)
print("\ng=5, f=3 embedding:", cert.embedding,
      "euler =", euler_characteristic(cert.embedding))

# The pair (x, y) the next level would attach to is special: no minimum
# feedback vertex set contains both, which is what drives the induction.
print("designated pair", (cert.x, cert.y), "on face", cert.face)
print("pair in some minimum FVS?",
      pair_in_some_min_fvs(cert.digraph, cert.x, cert.y))

# Orders between construction sizes are reached by padding with isolated
# vertices; each one raises the maximum acyclic set by exactly 1.
padded = pad_to_order(construct(3, 2), 6)
print("\npadded to n=6: MAS =", max_acyclic_set(padded).size, "= 6/2 + 1")
