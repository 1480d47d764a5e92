"""Critical routes in Euclidean cubical complexes.

A Euclidean complex in the box [0, k] embeds into a standard cube, and its
critical cells are described by routes: staircase lines that hop across
missing cubes.  The staircase example below has three such routes, one per
path component of its directed path space.
"""

import json
from pathlib import Path

from cubechains.euclid import EuclideanComplex, embed, enumerate_critical_routes, route_to_sequence
from cubechains.homology import poset_betti
from cubechains.partitions import build_pk

here = Path(__file__).parent / "data"

for name in ["swiss_square", "staircase"]:
    doc = json.loads((here / f"{name}.json").read_text())
    K = EuclideanComplex.box_minus(doc["k"], [(c["a"], c["b"]) for c in doc["exclude"]])
    routes = sorted(enumerate_critical_routes(K), key=lambda r: (r.q, r.a))
    print(f"{name}: {len(routes)} critical routes")
    for r in routes:
        cs = route_to_sequence(r, K)
        print(f"  dim {r.dim}: b = {list(r.b)}, a = {list(r.a)}, q = {cs.q}")
    rep = poset_betti(build_pk(embed(K)), max_dim=0, max_simplices=None)
    print(f"  path components (oracle b0): {rep.betti[0]}")
