"""Ordered partitions, the permutahedron poset P_A, cube chains and P_K.

An ordered partition is a tuple of nonzero, pairwise disjoint block masks.
The canonical text form is ``"a,b|c|d,e"`` with labels ascending inside a
block.  Partitions of the empty set are the empty tuple.
"""

from functools import lru_cache

from .cubical import LabelSet, bits, end_vertices, popcount, submasks
from .poset import FinitePoset


def union(partition):
    out = 0
    for b in partition:
        out |= b
    return out


def partition_dim(partition):
    return sum(popcount(b) - 1 for b in partition)


def format_partition(labels, partition):
    return "|".join(",".join(str(a) for a in labels.members(b)) for b in partition)


def parse_partition(labels, text, parse_label=None):
    """Inverse of :func:`format_partition`.

    ``parse_label`` converts label text; by default the labels' own ``str``
    forms are matched.
    """
    if text == "":
        return ()
    lookup = {str(a): a for a in labels.labels}
    blocks = []
    for chunk in text.split("|"):
        names = [s.strip() for s in chunk.split(",")]
        try:
            members = [parse_label(s) if parse_label else lookup[s] for s in names]
        except KeyError as exc:
            raise ValueError(f"unknown label {exc.args[0]!r} in {text!r}") from None
        blocks.append(labels.mask(members))
    p = tuple(blocks)
    check_partition(p)
    return p


def check_partition(partition, support=None):
    seen = 0
    for b in partition:
        if b == 0 or b & seen:
            raise ValueError("blocks must be nonempty and disjoint")
        seen |= b
    if support is not None and seen != support:
        raise ValueError("blocks do not cover the label set")


def ordered_partitions(mask):
    """All ordered partitions of the set ``mask``."""
    return _ordered_partitions(mask)


@lru_cache(maxsize=None)
def _ordered_partitions(mask):
    if mask == 0:
        return ((),)
    out = []
    for first in submasks(mask):
        if first:
            for rest in _ordered_partitions(mask & ~first):
                out.append((first,) + rest)
    return tuple(out)


def ordered_bell(n):
    """Number of ordered partitions of an n-set (Fubini numbers)."""
    from math import comb
    f = [1]
    for m in range(1, n + 1):
        f.append(sum(comb(m, k) * f[m - k] for k in range(1, m + 1)))
    return f[n]


def refines(mu, lam):
    """True iff ``mu`` is finer than ``lam`` (consecutive blocks of mu merge into lam)."""
    if union(mu) != union(lam):
        raise ValueError("partitions of different sets")
    i = 0
    for block in lam:
        acc = 0
        while acc != block:
            if i == len(mu) or mu[i] & ~block:
                return False
            acc |= mu[i]
            i += 1
    return i == len(mu)


def splits(partition):
    """Facets in P_A: split one block B into B1|B2, both nonempty."""
    out = []
    for i, block in enumerate(partition):
        if block & (block - 1) == 0:
            continue
        for first in submasks(block):
            if first and first != block:
                out.append(partition[:i] + (first, block & ~first) + partition[i + 1:])
    return out


def chain_of_partition(partition):
    """Cube chain c^lambda: the i-th cube is c(B_1..B_{i-1}, B_i, B_{i+1}..B_l)."""
    done = 0
    out = []
    for b in partition:
        out.append((done, b))
        done |= b
    return out


def partition_of_chain(chain, support):
    """Inverse of :func:`chain_of_partition` for chains from 0 to 1 on ``support``."""
    check_chain(chain, support)
    return tuple(stars for _, stars in chain)


def check_chain(chain, support):
    if support and not chain:
        raise ValueError("empty cube chain on a nonempty label set")
    prev_end = (0, 0)
    for c in chain:
        if c[1] == 0:
            raise ValueError("cube chains consist of positive-dimensional cubes")
        if (c[0] | c[1]) & ~support or c[0] & c[1]:
            raise ValueError("cube outside the label set")
        start, end = end_vertices(c)
        if start != prev_end:
            raise ValueError("consecutive cubes do not meet")
        prev_end = end
    if prev_end != (support, 0):
        raise ValueError("cube chain does not end at the top vertex")


def in_complex(K, partition):
    """lambda in P_K: every cube of the associated chain lies in K."""
    cubes = K.cubes
    done = 0
    for b in partition:
        if (done, b) not in cubes:
            return False
        done |= b
    return True


def pk_cells(K):
    """Elements of P_K, by depth-first extension of the cube chain."""
    cubes = K.cubes
    support = K.support
    out = []

    def grow(prefix, done):
        rest = support & ~done
        if rest == 0:
            out.append(prefix)
            return
        for b in submasks(rest):
            if b and (done, b) in cubes:
                grow(prefix + (b,), done | b)

    grow((), 0)
    return out


class PartitionPoset(FinitePoset):
    """A down-closed set of ordered partitions of A ordered by refinement."""

    def __init__(self, labels, support, cells):
        self.labels = labels
        self.support = support
        cells = list(cells)
        present = set(cells)
        covers = {p: [q for q in splits(p) if q in present] for p in cells}
        super().__init__(cells, covers, {p: partition_dim(p) for p in cells},
                         fmt=lambda p: format_partition(labels, p))

    def format(self, cell):
        return format_partition(self.labels, cell)

    def parse(self, text):
        return parse_partition(self.labels, text)


def permutahedron(labels):
    """The poset P_A of all ordered partitions of A."""
    if not isinstance(labels, LabelSet):
        labels = LabelSet(labels)
    return PartitionPoset(labels, labels.full, ordered_partitions(labels.full))


def build_pk(K):
    """The poset P_K (possibly empty)."""
    return PartitionPoset(K.labels, K.support, pk_cells(K))


def check_composition(K, lam, blocks, mu, C, D):
    """Both sides of the composition criterion for lam|B_1|...|B_k|mu.

    Returns ``(a, b)``: (a) is membership of the concatenation in P_K, (b) the
    conjunction of lam in P_{K|0_C}, mu in P_{K|1_D} and the middle cubes
    lying in K.
    """
    whole = tuple(lam) + tuple(blocks) + tuple(mu)
    a = in_complex(K, whole)
    b = in_complex(K.restrict(C, 0), lam) and in_complex(K.restrict(D, 1), mu)
    done = C
    for blk in blocks:
        b = b and (done, blk) in K.cubes
        done |= blk
    return a, b


def labelled(labels, partition):
    """Blocks as tuples of labels."""
    return [labels.members(b) for b in partition]

