"""Finite graded posets, closed subposets and order complexes."""

from collections import defaultdict


class FinitePoset:
    """A finite poset given by its covering relation and a dimension map.

    ``covers`` maps each element to the elements it covers (the elements
    directly below it).  The strict order is the transitive closure, computed
    once on demand.  Elements must be hashable; ``fmt`` renders them.
    """

    def __init__(self, elements, covers, dim, fmt=str):
        self.elements = list(elements)
        self._set = set(self.elements)
        self.covers = {x: frozenset(covers.get(x, ())) for x in self.elements}
        self.dim = dict(dim)
        self.fmt = fmt
        self._below = None
        for x, lower in self.covers.items():
            for y in lower:
                if y not in self._set:
                    raise ValueError(f"cover {fmt(y)} of {fmt(x)} is not an element")

    def __contains__(self, x):
        return x in self._set

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def _check(self, x):
        if x not in self._set:
            raise KeyError(f"unknown cell {self.fmt(x)}")

    def below(self, x):
        """Strict down-set of ``x``."""
        self._check(x)
        if self._below is None:
            self._below = {}
            for y in sorted(self.elements, key=self.dim.__getitem__):
                acc = set()
                for z in self.covers[y]:
                    acc.add(z)
                    acc |= self._below[z]
                self._below[y] = frozenset(acc)
        return self._below[x]

    def less_than(self, x, y):
        return x in self.below(y)

    def leq(self, x, y):
        return x == y or self.less_than(x, y)

    def facets(self, b):
        """All a < b with dim(a) = dim(b) - 1."""
        self._check(b)
        d = self.dim[b] - 1
        return {a for a in self.covers[b] if self.dim[a] == d}

    def by_dim(self):
        out = defaultdict(list)
        for x in self.elements:
            out[self.dim[x]].append(x)
        return dict(sorted(out.items()))

    def subposet(self, cells):
        """Induced subposet on ``cells`` (covers recomputed from the order)."""
        cells = set(cells)
        covers = {}
        for x in cells:
            lower = [y for y in self.below(x) if y in cells]
            # y is covered by x iff no z in cells lies strictly between
            covers[x] = [y for y in lower
                         if not any(y in self.below(z) for z in lower if z != y)]
        keep = [x for x in self.elements if x in cells]
        return FinitePoset(keep, covers, {x: self.dim[x] for x in keep}, self.fmt)

    def check_order(self):
        """Exhaustive check of irreflexivity, transitivity and grading."""
        for x in self.elements:
            down = self.below(x)
            if x in down:
                return False
            for y in down:
                if not self.below(y) <= down:
                    return False
            for y in self.covers[x]:
                if self.dim[y] >= self.dim[x]:
                    return False
        return True


def is_closed_subposet(poset, cells):
    """True iff ``cells`` is downward closed in ``poset``."""
    cells = set(cells)
    for y in cells:
        if y not in poset:
            raise KeyError(f"{poset.fmt(y)} is not an element")
        if not poset.below(y) <= cells:
            return False
    return True


def down_closure(poset, cells):
    out = set(cells)
    for y in cells:
        out |= poset.below(y)
    return out


class SimplicialComplex:
    """Abstract simplicial complex; simplices are tuples of vertex indices."""

    def __init__(self, vertices, simplices):
        self.vertices = list(vertices)
        self.simplices = list(simplices)

    def __len__(self):
        return len(self.simplices)

    @classmethod
    def from_facets(cls, facets):
        """Face-closure of the given vertex sets."""
        verts = sorted({v for f in facets for v in f}, key=repr)
        index = {v: i for i, v in enumerate(verts)}
        seen = set()
        for f in facets:
            f = tuple(sorted(index[v] for v in f))
            _add_faces(f, seen)
        return cls(verts, sorted(seen, key=lambda s: (len(s), s)))

    def by_dim(self):
        out = defaultdict(list)
        for s in self.simplices:
            out[len(s) - 1].append(s)
        return dict(sorted(out.items()))

    def is_closed(self):
        present = set(self.simplices)
        if len(present) != len(self.simplices):
            return False
        for s in self.simplices:
            if len(s) > 1:
                for i in range(len(s)):
                    if s[:i] + s[i + 1:] not in present:
                        return False
        return True

    def euler_characteristic(self):
        return sum((-1) ** (len(s) - 1) for s in self.simplices)


def _add_faces(simplex, seen):
    if simplex in seen or not simplex:
        return
    seen.add(simplex)
    for i in range(len(simplex)):
        _add_faces(simplex[:i] + simplex[i + 1:], seen)


def count_chains(poset, max_dim=None):
    """Number of chains by length - 1 (simplex dimension), without building them."""
    order = sorted(poset.elements, key=poset.dim.__getitem__)
    # ending[x][k]: chains with top x and k+1 elements
    ending = {}
    cap = None if max_dim is None else max_dim + 1
    totals = defaultdict(int)
    for x in order:
        row = [1]
        for y in poset.below(x):
            for k, c in enumerate(ending[y]):
                if cap is not None and k + 1 >= cap:
                    break
                if k + 1 == len(row):
                    row.append(0)
                row[k + 1] += c
        ending[x] = row
        for k, c in enumerate(row):
            totals[k] += c
    return dict(sorted(totals.items()))


def order_complex(poset, max_dim=None, limit=None):
    """Nerve of ``poset``: one simplex per nonempty chain.

    Vertices are the poset elements (in ``poset.elements`` order); a simplex
    is the ascending tuple of vertex indices of a chain listed bottom-up.
    ``max_dim`` caps simplex dimension.  ``limit`` raises
    :class:`ResourceLimitError` when the number of simplices would exceed it.
    """
    if limit is not None:
        total = sum(count_chains(poset, max_dim).values())
        if total > limit:
            raise ResourceLimitError(
                f"order complex has {total} simplices, cap is {limit}")
    index = {x: i for i, x in enumerate(poset.elements)}
    # ascending vertex order inside a simplex must be a linear extension
    rank = {x: i for i, x in enumerate(
        sorted(poset.elements, key=lambda x: (poset.dim[x], index[x])))}
    verts = sorted(poset.elements, key=rank.__getitem__)
    simplices = []
    cap = None if max_dim is None else max_dim + 1

    def extend(chain, top):
        simplices.append(tuple(rank[x] for x in reversed(chain)))
        if cap is not None and len(chain) >= cap:
            return
        for y in poset.below(top):
            chain.append(y)
            extend(chain, y)
            chain.pop()

    for x in poset.elements:
        extend([x], x)
    simplices.sort(key=lambda s: (len(s), s))
    return SimplicialComplex(verts, simplices)


class ResourceLimitError(RuntimeError):
    """Raised when a brute-force computation exceeds its size cap."""
