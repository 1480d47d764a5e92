"""Critical cells of directed path spaces on cubical complexes.

For a subcomplex K of the n-cube, the cube chains from 0 to 1 form the poset
P_K.  The field W_K is built inductively; its critical cells can also be read
off explicitly as critical sequences.  Here we compare both descriptions on
the s-skeleta of the cube, whose path spaces model PV-programs where n
processes share a resource of capacity s.
"""

from cubechains.cubical import standard_cube
from cubechains.homology import conf_counts, homology_report
from cubechains.morse import critical, is_gradient
from cubechains.partitions import build_pk, format_partition
from cubechains.wk import build_wk, enumerate_critical_sequences, format_sequence

K = standard_cube(3).skeleton(2)
P, W = build_wk(K)
print("2-skeleton of the 3-cube")
print(f"  P_K has {len(P)} cells, W_K has {len(W)} vectors, gradient={is_gradient(P, W)}")
for d, cells in critical(P, W).items():
    print(f"  critical in dim {d}: {[format_partition(K.labels, c) for c in cells]}")
for cs in enumerate_critical_sequences(K):
    print("  sequence", format_sequence(K.labels, cs))

print()
print("s-skeleta: critical cells sit in dimensions q(s-1)")
for n, s in [(4, 2), (4, 3), (5, 3), (5, 4)]:
    K = standard_cube(n).skeleton(s)
    rep = homology_report(K, max_simplices=50_000)
    print(f"  n={n} s={s}: counts b(n,s,q) = {conf_counts(n, s)}; "
          f"homology {rep.betti} [{rep.method}]")
