"""Brute-force integral homology and the configuration-space counts.

Homology of a simplicial complex is computed from its boundary matrices over
the integers.  Sparse column reduction with unit pivots handles the large,
torsion-free cases; as soon as a non-unit pivot shows up the matrix is
handed to a dense Smith normal form instead, so the answer is always exact.
"""

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .cubical import standard_cube
from .poset import ResourceLimitError, count_chains, order_complex

DEFAULT_MAX_SIMPLICES = 10_000
DENSE_CAP = 400  # rows*cols above this^2 are not attempted densely


# -- Smith normal form --------------------------------------------------------

def smith_diagonal(matrix):
    """Nonzero invariant factors of an integer matrix (list of rows), ascending.

    Plain elimination with arbitrary-precision integers; fine for small
    dense matrices.
    """
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        # smallest nonzero entry in the remaining block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                # the pivot must divide the whole remaining block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                continue
            # move the smallest entry of row/column t to the pivot and repeat
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cands)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _dense_from_columns(columns, nrows):
    rows = [[0] * len(columns) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v
    return rows


def reduce_boundary(columns, nrows, skip=()):
    """Rank and invariant factors > 1 of a sparse integer matrix.

    ``columns`` is a list of {row: value} dicts.  Columns whose index is in
    ``skip`` are known to reduce to zero and are ignored (clearing).  Returns
    ``(rank, torsion, pivot_rows)``.
    """
    owner = {}  # pivot row -> reduced column
    pivots = []
    unit_only = True
    skip = set(skip)
    for j, col in enumerate(columns):
        if j in skip or not col:
            continue
        col = dict(col)
        while col:
            low = max(col)
            v = col[low]
            other = owner.get(low)
            if other is None:
                break
            u = other[low]
            if v % u:
                unit_only = False
                break
            q = v // u
            for i, w in other.items():
                x = col.get(i, 0) - q * w
                if x:
                    col[i] = x
                else:
                    col.pop(i, None)
        if not unit_only:
            break
        if col:
            low = max(col)
            if abs(col[low]) != 1:
                unit_only = False
                break
            owner[low] = col
            pivots.append(low)
    if unit_only:
        return len(pivots), [], pivots
    size = nrows * len(columns)
    if size > DENSE_CAP ** 2:
        raise ResourceLimitError(
            f"non-unit pivot in a {nrows}x{len(columns)} boundary matrix; dense SNF cap exceeded")
    diag = smith_diagonal(_dense_from_columns(columns, nrows))
    return len(diag), [d for d in diag if d > 1], None


def boundary_columns(simplices_d, index_lower):
    cols = []
    for s in simplices_d:
        col = {}
        for i in range(len(s)):
            col[index_lower[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols


# -- Betti numbers ------------------------------------------------------------

@dataclass
class BettiReport:
    betti: list
    torsion: list = field(default_factory=list)  # [(dim, order), ...]
    method: str = "oracle"
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"betti": list(self.betti),
                "torsion": [[d, o] for d, o in self.torsion],
                "method": self.method}

    def dumps(self):
        return json.dumps(self.to_json())


def betti(sc, max_dim=None, max_simplices=DEFAULT_MAX_SIMPLICES):
    """Integral homology of a simplicial complex, H_0 .. H_max_dim.

    Simplices above ``max_dim + 1`` are never touched.  Raises
    :class:`ResourceLimitError` if more than ``max_simplices`` simplices are
    needed.
    """
    by_dim = defaultdict(list)
    for s in sc.simplices:
        by_dim[len(s) - 1].append(s)
    top = max(by_dim, default=-1)
    if max_dim is None:
        max_dim = top
    used = sum(len(by_dim[d]) for d in range(0, max_dim + 2))
    if max_simplices is not None and used > max_simplices:
        raise ResourceLimitError(f"{used} simplices exceed the cap of {max_simplices}")
    index = {d: {s: i for i, s in enumerate(sorted(by_dim[d]))} for d in range(0, max_dim + 2)}
    ordered = {d: sorted(by_dim[d]) for d in index}
    rank = {}
    torsion = []
    cleared = {}
    # top-down so that pivot rows of d+1 clear columns of d
    for d in range(max_dim + 1, 0, -1):
        cols = boundary_columns(ordered[d], index[d - 1])
        r, tors, piv = reduce_boundary(cols, len(ordered[d - 1]), cleared.get(d, ()))
        rank[d] = r
        torsion += [(d - 1, t) for t in tors]
        cleared[d - 1] = set(piv) if piv is not None else set()
    out = []
    for d in range(0, max_dim + 1):
        n_d = len(ordered.get(d, ()))
        out.append(n_d - rank.get(d, 0) - rank.get(d + 1, 0))
    return BettiReport(out, sorted(torsion))


def poset_betti(poset, max_dim=None, max_simplices=DEFAULT_MAX_SIMPLICES):
    """Homology of the order complex of a poset."""
    if len(poset) == 0:
        return BettiReport([0] if max_dim is None else [0] * (max_dim + 1))
    cap_dim = None if max_dim is None else max_dim + 1
    if max_simplices is not None:
        total = sum(count_chains(poset, cap_dim).values())
        if total > max_simplices:
            raise ResourceLimitError(f"{total} simplices exceed the cap of {max_simplices}")
    sc = order_complex(poset, max_dim=cap_dim)
    return betti(sc, max_dim=max_dim, max_simplices=None)


def euler_characteristic(poset):
    """chi of the order complex, from chain counts."""
    return sum((-1) ** d * c for d, c in count_chains(poset).items())


# -- configuration-space counts ------------------------------------------------

def conf_counts(n, s):
    """b(n, s, q) by direct enumeration of the block pattern.

    Counts ((E_j), (F_j)) partitioning {1..n} with every #E_j = s + 1 and
    F_{j-1} empty or max(F_{j-1}) < max(E_j); keyed by q.
    """
    if not 0 < s <= n:
        raise ValueError("need 0 < s <= n")
    out = defaultdict(int)

    def go(rest, q):
        # choose F (any subset), then either stop with F = rest or pick E
        for r in range(len(rest) + 1):
            for F in combinations(rest, r):
                left = [x for x in rest if x not in F]
                if not left:
                    out[q] += 1
                    continue
                for E in combinations(left, s + 1):
                    if F and max(F) > max(E):
                        continue
                    go([x for x in left if x not in E], q + 1)

    go(list(range(1, n + 1)), 0)
    return dict(sorted(out.items()))


def generalized_conf_counts(k, s):
    """b_k(n, s, q): critical routes of the s-skeleton of [0, k], keyed by q."""
    from .euclid import EuclideanComplex, enumerate_critical_routes
    if s <= 0:
        raise ValueError("need s > 0")
    K = EuclideanComplex.box(k).skeleton(s)
    out = defaultdict(int)
    for r in enumerate_critical_routes(K):
        out[r.q] += 1
    return dict(sorted(out.items()))


def conf_count_upper_bound(n, s, q):
    """Zero when q blocks of size s + 1 do not fit into n letters."""
    if q * (s + 1) > n:
        return 0
    return comb(n, q * (s + 1)) * (q + 1) ** n


# -- reports ------------------------------------------------------------------

def homology_report(K, max_simplices=DEFAULT_MAX_SIMPLICES):
    """Homology of the path space of K (cubical or Euclidean) from its critical cells.

    When no two critical dimensions are consecutive, every differential of
    the Morse complex vanishes and the homology is free on the critical
    cells.  Otherwise only the Morse inequalities are available; they are
    supplemented by oracle Betti numbers when the order complex is small
    enough.
    """
    from .euclid import EuclideanComplex, embed
    from .partitions import build_pk
    from .wk import critical_inductive
    C = embed(K) if isinstance(K, EuclideanComplex) else K
    counts = {d: len(v) for d, v in critical_inductive(C).items()}
    if not counts:
        return BettiReport([], method="gap-exact", notes=["path space is empty"])
    top = max(counts)
    dims = sorted(counts)
    if all(b - a > 1 for a, b in zip(dims, dims[1:])):
        return BettiReport([counts.get(d, 0) for d in range(top + 1)], method="gap-exact",
                           notes=["exact via dimension gap"])
    P = build_pk(C)
    try:
        rep = poset_betti(P, max_dim=top + 1, max_simplices=max_simplices)
    except ResourceLimitError:
        return BettiReport([counts.get(d, 0) for d in range(top + 1)], method="bounds-only",
                           notes=["bounds only (Morse inequalities)",
                                  "order complex too large for the oracle"])
    betti_list = rep.betti
    while len(betti_list) > top + 1 and betti_list[-1] == 0:
        betti_list = betti_list[:-1]
    return BettiReport(betti_list, rep.torsion, method="oracle",
                       notes=["bounds only (Morse inequalities)",
                              f"critical counts {[counts.get(d, 0) for d in range(top + 1)]}",
                              "oracle Betti numbers of the order complex"])


def skeleton_of_cube(n, s):
    return standard_cube(n).skeleton(s)
