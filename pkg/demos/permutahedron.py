"""The standard gradient field on the permutahedron.

Ordered partitions of A = {1..n} form a poset P_A under refinement.  The
field V_A pairs every cell except the fully split partition 1|2|...|n, which
makes the permutahedron collapsible onto a point.
"""

from cubechains.morse import critical, find_cycle, permutahedron_field, to_dot
from cubechains.partitions import permutahedron

for n in range(6):
    P = permutahedron(range(1, n + 1))
    V = permutahedron_field(range(1, n + 1))
    crit = critical(P, V)
    cells = [P.format(c) for cells in crit.values() for c in cells]
    print(f"|A| = {n}: {len(P):4d} cells, {len(V):4d} vectors, "
          f"gradient={find_cycle(P, V) is None}, critical={cells}")

# the picture for A = {1, 2, 3}: six arrows, one critical vertex
print()
print(to_dot(permutahedron([1, 2, 3]), permutahedron_field([1, 2, 3]), name="P3"))
