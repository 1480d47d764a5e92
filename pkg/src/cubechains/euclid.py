"""Euclidean cubical complexes, their embedding into a standard cube and critical routes.

Points are integer tuples.  An elementary cube is a pair ``(a, b)`` with
``b - a`` in {0, 1}^n.  Coordinates are 1-based in labels (the ambient label
set is A_k = ((1,1), ..., (1,k_1), (2,1), ..., (n,k_n))) and 0-based in code.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .cubical import CubicalComplex, LabelSet, bits
from .wk import CriticalSequence, sigma


def cube_dim(cube):
    a, b = cube
    return sum(y - x for x, y in zip(a, b))


def directions(cube):
    a, b = cube
    return [i for i, (x, y) in enumerate(zip(a, b)) if y - x == 1]


def check_cube(cube, k=None):
    a, b = cube
    if len(a) != len(b) or any(not 0 <= y - x <= 1 for x, y in zip(a, b)):
        raise ValueError(f"not an elementary cube: {cube!r}")
    if k is not None:
        if len(a) != len(k) or any(x < 0 or y > kk for x, y, kk in zip(a, b, k)):
            raise ValueError(f"cube {cube!r} lies outside the box [0, {tuple(k)}]")


def faces(cube):
    """All elementary cubes contained in ``cube``, itself included."""
    a, b = cube
    opts = [((x, x),) if x == y else ((x, x), (y, y), (x, y)) for x, y in zip(a, b)]
    for combo in product(*opts):
        yield tuple(p for p, _ in combo), tuple(q for _, q in combo)


def contains(big, small):
    (a, b), (x, y) = big, small
    return all(ai <= xi and yi <= bi for ai, bi, xi, yi in zip(a, b, x, y))


def box_cubes(k):
    out = []
    n = len(k)
    for a in product(*(range(x + 1) for x in k)):
        for d in product((0, 1), repeat=n):
            b = tuple(x + y for x, y in zip(a, d))
            if all(y <= kk for y, kk in zip(b, k)):
                out.append((a, b))
    return out


class EuclideanComplex:
    """A face-closed family of elementary cubes inside the box [0, k]."""

    def __init__(self, k, cubes, check=True):
        self.k = tuple(k)
        self.n = len(self.k)
        self.cubes = frozenset((tuple(a), tuple(b)) for a, b in cubes)
        if check:
            for c in self.cubes:
                check_cube(c, self.k)

    @classmethod
    def from_cubes(cls, k, cubes):
        """Face-closure of the listed cubes."""
        cubes = [(tuple(a), tuple(b)) for a, b in cubes]
        for c in cubes:
            check_cube(c, k)
        out = set()
        for c in cubes:
            out.update(faces(c))
        return cls(k, out, check=False)

    @classmethod
    def box(cls, k):
        return cls(k, box_cubes(k), check=False)

    @classmethod
    def box_minus(cls, k, exclude):
        """The full box with the listed cells, and every cell containing them, removed."""
        exclude = [(tuple(a), tuple(b)) for a, b in exclude]
        for c in exclude:
            check_cube(c, k)
        kept = [c for c in box_cubes(k) if not any(contains(c, x) for x in exclude)]
        return cls(k, kept, check=False)

    def __contains__(self, cube):
        return cube in self.cubes

    def __len__(self):
        return len(self.cubes)

    def __eq__(self, other):
        return isinstance(other, EuclideanComplex) and (self.k, self.cubes) == (other.k, other.cubes)

    def __hash__(self):
        return hash((self.k, self.cubes))

    def __repr__(self):
        return f"EuclideanComplex(k={self.k}, {len(self.cubes)} cubes)"

    def validate(self):
        return all(f in self.cubes for c in self.cubes for f in faces(c))

    def skeleton(self, q):
        return EuclideanComplex(self.k, (c for c in self.cubes if cube_dim(c) <= q), check=False)

    def missing(self):
        """Cubes of the box that are not in the complex."""
        return [c for c in box_cubes(self.k) if c not in self.cubes]


def skeleton(K, q):
    """Cells of dimension at most ``q`` (Euclidean or standard-cube complexes)."""
    return K.skeleton(q)


# -- embedding into the standard A_k cube ----------------------------------

@lru_cache(maxsize=None)
def box_labels(k):
    """A_k with its default order (i, j) lexicographic."""
    return LabelSet((i + 1, j) for i in range(len(k)) for j in range(1, k[i] + 1))


def embed_cube(cube, k, labels=None):
    """i_k of an elementary cube, as an (ones, stars) pair over A_k."""
    labels = labels or box_labels(tuple(k))
    a, b = cube
    ones = stars = 0
    for i, kk in enumerate(k):
        for j in range(1, kk + 1):
            bit = 1 << labels.index[(i + 1, j)]
            if j <= a[i]:
                ones |= bit
            elif a[i] < j == b[i]:
                stars |= bit
    return ones, stars


def embed(K, order=None):
    """i_k(K) as a cubical complex over A_k (or over ``order``, a permutation of A_k)."""
    labels = box_labels(K.k) if order is None else LabelSet(order)
    if order is not None:
        for i, kk in enumerate(K.k):
            pos = [labels.index[(i + 1, j)] for j in range(1, kk + 1)]
            if pos != sorted(pos):
                raise ValueError("order must keep (i, j) < (i, j') for j < j'")
    for c in K.cubes:
        check_cube(c, K.k)
    return CubicalComplex(labels, (embed_cube(c, K.k, labels) for c in K.cubes), check=False)


def chi(mask, k, labels=None):
    """Bar-projection of a subset of A_k: count vector of first coordinates."""
    labels = labels or box_labels(tuple(k))
    out = [0] * len(k)
    for p in bits(mask):
        out[labels.labels[p][0] - 1] += 1
    return tuple(out)


def project(partition, k, labels=None):
    """U_k: blockwise bar-projection, giving an ordered partition of the multiset [k]."""
    return [chi(b, k, labels) for b in partition]


def is_proper(multipartition):
    return all(all(x <= 1 for x in c) for c in multipartition)


def lift(multipartition, k, labels=None):
    """Inverse of :func:`project` on proper partitions of [k]."""
    k = tuple(k)
    labels = labels or box_labels(k)
    if not is_proper(multipartition):
        raise ValueError("only proper multiset partitions can be lifted")
    if tuple(map(sum, zip(*multipartition))) != k and multipartition:
        raise ValueError("blocks do not add up to k")
    used = [0] * len(k)
    out = []
    for c in multipartition:
        block = 0
        for i, x in enumerate(c):
            if x:
                used[i] += 1
                block |= 1 << labels.index[(i + 1, used[i])]
        out.append(block)
    return tuple(out)


def box_order_ok(partition, k, labels=None):
    """(i, j) must sit in an earlier block than (i, j') whenever j < j'."""
    labels = labels or box_labels(tuple(k))
    where = {}
    for r, b in enumerate(partition):
        for p in bits(b):
            where[labels.labels[p]] = r
    for i, kk in enumerate(k):
        for j in range(1, kk):
            if where[(i + 1, j)] >= where[(i + 1, j + 1)]:
                return False
    return True


def proper_multipartitions(k):
    """All proper ordered partitions of the multiset [k]."""
    k = tuple(k)
    if not any(k):
        return [[]]
    out = []
    n = len(k)
    for d in product((0, 1), repeat=n):
        if any(d) and all(x <= kk for x, kk in zip(d, k)):
            rest = tuple(kk - x for kk, x in zip(k, d))
            for tail in proper_multipartitions(rest):
                out.append([d] + tail)
    return out


# -- minimal lines and routes -----------------------------------------------

def minimal_line(a, b):
    """Staircase from a to b: coordinate 1 travels first, then 2, and so on.

    Returned as a face-closed set of cubes (vertices and unit edges).
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or any(x > y for x, y in zip(a, b)):
        raise ValueError("minimal line needs a <= b")
    cur = list(a)
    out = {(a, a)}
    for i in range(len(a)):
        for v in range(a[i], b[i]):
            p = tuple(cur)
            cur[i] = v + 1
            q = tuple(cur)
            out.update(((p, q), (q, q)))
    return out


def _line_in(K, a, b):
    cubes = K.cubes
    cur = list(a)
    if (tuple(a), tuple(a)) not in cubes:
        return False
    for i in range(len(a)):
        for v in range(a[i], b[i]):
            p = tuple(cur)
            cur[i] = v + 1
            if (p, tuple(cur)) not in cubes:
                return False
    return True


@dataclass(frozen=True)
class CriticalRoute:
    """a = (a^1..a^{q+1}), b = (b^0..b^q)."""
    a: tuple
    b: tuple

    @property
    def q(self):
        return len(self.b) - 1

    @property
    def dim(self):
        return sum(cube_dim((self.a[j - 1], self.b[j])) - 2 for j in range(1, self.q + 1))

    def blocks(self):
        """The missing cubes [a^j, b^j], j = 1..q."""
        return [(self.a[j - 1], self.b[j]) for j in range(1, self.q + 1)]

    def to_json(self):
        return {"dim": self.dim, "q": self.q,
                "a": [list(p) for p in self.a], "b": [list(p) for p in self.b]}


def is_critical_route(K, route):
    """Check that ``route`` is a critical route of K.

    Minimal lines b^j -> a^j must lie in K, each [a^j, b^{j+1}] must be a
    missing cube whose edge from a^j in its last direction m lies in K, as
    does the opposite facet, and the line arriving at a^j may only move in
    coordinates up to m.
    """
    a, b, k = route.a, route.b, K.k
    q = route.q
    n = K.n
    if len(a) != q + 1 or q < 0:
        return False
    if b[0] != (0,) * n or a[-1] != k:
        return False
    for j in range(q + 1):
        if any(x > y for x, y in zip(b[j], a[j])):
            return False
        if not _line_in(K, b[j], a[j]):
            return False
    for j in range(1, q + 1):
        lo, hi = a[j - 1], b[j]
        diff = [y - x for x, y in zip(lo, hi)]
        if not all(0 <= d <= 1 for d in diff) or not any(diff):
            return False
        if (lo, hi) in K.cubes:
            return False
        m = max(i for i, d in enumerate(diff) if d)
        mid = tuple(x + (i == m) for i, x in enumerate(lo))
        if (lo, mid) not in K.cubes or (mid, hi) not in K.cubes:
            return False
        if not _line_order_ok(b[j - 1], lo, m):
            return False
    return True


def _line_order_ok(start, end, m):
    moved = [i for i in range(len(start)) if end[i] > start[i]]
    return not moved or max(moved) <= m


def enumerate_critical_routes(K):
    """All critical routes in K, found by depth-first search over corner points."""
    k, n = K.k, K.n
    cubes = K.cubes
    memo = {}
    zero = (0,) * n

    def tails(start):
        # list of (a^{j+1}, b^{j+1}, a^{j+2}, ...) continuing from b^j = start
        if start in memo:
            return memo[start]
        out = []
        for a in product(*(range(start[i], k[i] + 1) for i in range(n))):
            if not _line_in(K, start, a):
                continue
            if a == k:
                out.append((a,))
                continue
            free = [i for i in range(n) if a[i] < k[i]]
            for r in range(2, len(free) + 1):
                for dirs in combinations(free, r):
                    m = dirs[-1]
                    if not _line_order_ok(start, a, m):
                        continue
                    b = tuple(x + (i in dirs) for i, x in enumerate(a))
                    if (a, b) in cubes:
                        continue
                    mid = tuple(x + (i == m) for i, x in enumerate(a))
                    if (a, mid) not in cubes or (mid, b) not in cubes:
                        continue
                    for tail in tails(b):
                        out.append((a, b) + tail)
        memo[start] = out
        return out

    routes = []
    if (zero, zero) not in cubes:
        return routes
    for seq in tails(zero):
        routes.append(CriticalRoute(a=tuple(seq[0::2]), b=(zero,) + tuple(seq[1::2])))
    return routes


def route_to_sequence(route, K):
    """The critical sequence of i_k(K) matching a critical route."""
    if not is_critical_route(K, route):
        raise ValueError("not a critical route of K")
    labels = box_labels(K.k)

    def interval(lo, hi):
        out = 0
        for i in range(K.n):
            for r in range(lo[i] + 1, hi[i] + 1):
                out |= 1 << labels.index[(i + 1, r)]
        return out

    q = route.q
    E = tuple(interval(route.a[j - 1], route.b[j]) for j in range(1, q + 1))
    F = tuple(interval(route.b[j], route.a[j]) for j in range(q + 1))
    return CriticalSequence(E=E, F=F)


def sequence_to_route(cs, K):
    """The critical route of K matching a critical sequence of i_k(K)."""
    from .wk import is_critical_sequence
    k = K.k
    if not is_critical_sequence(embed(K), cs):
        raise ValueError("not a critical sequence of i_k(K)")
    labels = box_labels(k)
    a, b = [], [(0,) * K.n]
    acc = [0] * K.n
    for j in range(cs.q + 1):
        acc = [x + y for x, y in zip(acc, chi(cs.F[j], k, labels))]
        a.append(tuple(acc))
        if j < cs.q:
            acc = [x + y for x, y in zip(acc, chi(cs.E[j], k, labels))]
            b.append(tuple(acc))
    return CriticalRoute(a=tuple(a), b=tuple(b))


def route_cell(route, K):
    """The critical cell of W_{i_k(K)} attached to a route."""
    return sigma(route_to_sequence(route, K))


# -- the sandwich case [0,k]_(n-1) <= K <= [0,k] ------------------------------

def in_sandwich(K):
    n = K.n
    if n < 2:
        return False
    return all(c in K.cubes for c in box_cubes(K.k) if cube_dim(c) <= n - 1)


def cube_sequence_of_route(route, K):
    """[b^1, ..., b^q] for a critical route of a sandwiched complex."""
    if not in_sandwich(K):
        raise ValueError("cube sequences need n >= 2 and [0,k]_(n-1) inside K")
    return [route.b[j] for j in range(1, route.q + 1)]


def route_of_cube_sequence(points, K):
    """Inverse of :func:`cube_sequence_of_route`: a^j = b^j - 1, a^{q+1} = k."""
    if not in_sandwich(K):
        raise ValueError("cube sequences need n >= 2 and [0,k]_(n-1) inside K")
    zero = (0,) * K.n
    pts = [tuple(p) for p in points]
    a = tuple(tuple(x - 1 for x in p) for p in pts) + (K.k,)
    return CriticalRoute(a=a, b=(zero,) + tuple(pts))


def random_euclidean(k, rng, p_hole=0.15, min_dim=1):
    """Box minus a random set of cells of dimension >= ``min_dim``."""
    holes = [c for c in box_cubes(tuple(k)) if cube_dim(c) >= min_dim and rng.random() < p_hole]
    return EuclideanComplex.box_minus(k, holes)


def random_sandwich(k, rng, p_hole=0.3):
    """[0,k]_(n-1) plus a random subset of the top cells."""
    n = len(k)
    tops = [c for c in box_cubes(tuple(k)) if cube_dim(c) == n]
    holes = [c for c in tops if rng.random() < p_hole]
    return EuclideanComplex.box_minus(k, holes)

