"""Discrete vector fields on CW-posets.

Covers flows and cycles, Morse functions, product fields and the standard
gradient fields on simplices, cubes and permutahedra.
"""

from collections import defaultdict
from functools import total_ordering

from .cubical import CubicalComplex, LabelSet, all_faces, bits, face, popcount, submasks
from .partitions import ordered_partitions, union
from .poset import FinitePoset


class InvalidFieldError(ValueError):
    pass


class DiscreteVectorField:
    """A set of pairwise disjoint pairs (a, b) with a a facet of b."""

    def __init__(self, pairs=()):
        self.up = {}    # a -> b
        self.down = {}  # b -> a
        for a, b in pairs:
            self.add(a, b)

    def add(self, a, b):
        if a in self.up or a in self.down or b in self.up or b in self.down or a == b:
            raise InvalidFieldError(f"cells of ({a!r}, {b!r}) already used by another vector")
        self.up[a] = b
        self.down[b] = a

    def __len__(self):
        return len(self.up)

    def __iter__(self):
        return iter(self.up.items())

    def __contains__(self, pair):
        a, b = pair
        return self.up.get(a) == b and a in self.up

    def __eq__(self, other):
        return isinstance(other, DiscreteVectorField) and self.up == other.up

    def __repr__(self):
        return f"DiscreteVectorField({len(self)} vectors)"

    def pairs(self):
        return set(self.up.items())

    def regular(self):
        return set(self.up) | set(self.down)

    def update(self, other):
        for a, b in other:
            self.add(a, b)
        return self

    def mapped(self, f):
        return DiscreteVectorField((f(a), f(b)) for a, b in self)

    def validate(self, poset):
        for a, b in self:
            if a not in poset or b not in poset:
                raise InvalidFieldError("vector cell outside the poset")
            if a not in poset.facets(b):
                raise InvalidFieldError(
                    f"{poset.fmt(a)} is not a facet of {poset.fmt(b)}")
        return True


def critical(poset, field):
    """Cells in no vector, bucketed by dimension."""
    reg = field.regular()
    out = defaultdict(list)
    for x in poset.elements:
        if x not in reg:
            out[poset.dim[x]].append(x)
    for cells in out.values():
        try:
            cells.sort()
        except TypeError:
            pass
    return dict(sorted(out.items()))


def critical_counts(poset, field):
    return {d: len(cells) for d, cells in critical(poset, field).items()}


def find_cycle(poset, field):
    """A cycle (a_1, b_1, ..., a_k, b_k, a_1) of ``field``, or None.

    Flows step from a vector (a, b) to any other facet a' of b that is itself
    the tail of a vector; a cycle is a directed cycle of this graph.
    """
    field.validate(poset)
    up = field.up
    succ = {}
    for a, b in up.items():
        succ[a] = [x for x in poset.facets(b) if x != a and x in up]
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(succ, WHITE)
    for root in succ:
        if colour[root] != WHITE:
            continue
        path = [root]
        iters = [iter(succ[root])]
        colour[root] = GREY
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                colour[path.pop()] = BLACK
                iters.pop()
                continue
            if colour[nxt] == GREY:
                loop = path[path.index(nxt):] + [nxt]
                out = []
                for a in loop[:-1]:
                    out += [a, up[a]]
                return out + [nxt]
            if colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                iters.append(iter(succ[nxt]))
    return None


def is_gradient(poset, field):
    return find_cycle(poset, field) is None


def validate_morse_function(poset, field, h):
    """Check that ``h`` decreases strictly along vectors and weakly elsewhere."""
    for b in poset.elements:
        for a in poset.facets(b):
            if field.up.get(a) == b:
                if not h(a) > h(b):
                    return False
            elif not h(a) <= h(b):
                return False
    return True


def product_poset(P, Q):
    elements = [(p, q) for p in P.elements for q in Q.elements]
    covers = {(p, q): [(x, q) for x in P.covers[p]] + [(p, y) for y in Q.covers[q]]
              for p, q in elements}
    dims = {(p, q): P.dim[p] + Q.dim[q] for p, q in elements}
    return FinitePoset(elements, covers, dims,
                       fmt=lambda c: f"({P.fmt(c[0])}, {Q.fmt(c[1])})")


def product_field(P, V, Q, W):
    """V x W: the W-vectors in every P-slice, plus V-vectors over Crit(W)."""
    out = DiscreteVectorField()
    for p in P.elements:
        for q, q2 in W:
            out.add((p, q), (p, q2))
    crit_w = [q for q in Q.elements if q not in W.up and q not in W.down]
    for p, p2 in V:
        for q in crit_w:
            out.add((p, q), (p2, q))
    return out


# -- simplices ---------------------------------------------------------------

def simplex_poset(labels):
    """Nonempty subsets of A as masks, ordered by inclusion."""
    ls = labels if isinstance(labels, LabelSet) else LabelSet(labels)
    cells = [s for s in submasks(ls.full) if s]
    covers = {s: [s & ~(1 << i) for i in bits(s) if s & ~(1 << i)] for s in cells}
    return FinitePoset(cells, covers, {s: popcount(s) - 1 for s in cells},
                       fmt=lambda s: "{" + ",".join(map(str, ls.members(s))) + "}")


def simplex_field(labels):
    ls = labels if isinstance(labels, LabelSet) else LabelSet(labels)
    m = 1 << (ls.n - 1)
    return DiscreteVectorField((b, b | m) for b in submasks(ls.full & ~m) if b)


# -- cubes -------------------------------------------------------------------

def cube_poset(K):
    """Face poset of a cubical complex."""
    if not isinstance(K, CubicalComplex):
        K = CubicalComplex.full(K)
    covers = {}
    for c in K.cubes:
        n = popcount(c[1])
        covers[c] = [face(c, i, e) for i in range(1, n + 1) for e in (0, 1)]
    return FinitePoset(sorted(K.cubes), covers, {c: popcount(c[1]) for c in K.cubes},
                       fmt=K.word)


def cube_field(labels, support=None):
    """The standard field S^cube_A on the standard A-cube: pairs (..1.., ..*..)."""
    ls = labels if isinstance(labels, LabelSet) else LabelSet(labels)
    support = ls.full if support is None else support
    out = DiscreteVectorField()
    _cube_field(support, 0, out)
    return out


def _cube_field(support, fixed_zero, out):
    # recurse on the max label m: m = 0 part is a copy of the smaller cube
    if support == 0:
        return
    m = 1 << (support.bit_length() - 1)
    rest = support & ~m
    for ones, stars in all_faces((0, rest)):
        out.add((ones | m, stars), (ones, stars | m))
    _cube_field(rest, fixed_zero | m, out)


# -- permutahedra ------------------------------------------------------------

@total_ordering
class MorseValue:
    """An element (s, t) of Z x Z_+ with the dot-order.

    (s, t) <= (s', t') iff s > s', or s == s' and 1 != t <= t', or s == s'
    and t' == 1.  So larger s is smaller, and t runs 2 < 3 < ... < 1.
    """

    __slots__ = ("s", "t")

    def __init__(self, s, t):
        if t < 1:
            raise ValueError("t must be a positive integer")
        self.s, self.t = s, t

    def __le__(self, other):
        s, t, s2, t2 = self.s, self.t, other.s, other.t
        if s > s2:
            return True
        if s == s2 and t != 1 and t <= t2:
            return True
        return s == s2 and t2 == 1

    def __eq__(self, other):
        return isinstance(other, MorseValue) and (self.s, self.t) == (other.s, other.t)

    def __hash__(self):
        return hash((self.s, self.t))

    def __lt__(self, other):
        return self <= other and self != other

    def __repr__(self):
        return f"MorseValue({self.s}, {self.t})"


def h_value(partition):
    """h_A(lambda) = (#C, #B) where B is the block holding the max label."""
    m = 1 << (union(partition).bit_length() - 1)
    before = 0
    for b in partition:
        if b & m:
            return MorseValue(popcount(before), popcount(b))
        before |= b
    raise ValueError("empty partition")


def in_top_part(partition):
    """True iff lambda lies in P^r_A, i.e. it is not of the form pi|m."""
    m = 1 << (union(partition).bit_length() - 1)
    return partition[-1] != m


def permutahedron_field(labels, support=None):
    """The standard gradient field V_A on P_A, built by recursion on max(A)."""
    ls = labels if isinstance(labels, LabelSet) else LabelSet(labels)
    support = ls.full if support is None else support
    return DiscreteVectorField(_perm_pairs(support))


def _perm_pairs(support):
    if support == 0:
        return []
    m = 1 << (support.bit_length() - 1)
    rest = support & ~m
    out = [(a + (m,), b + (m,)) for a, b in _perm_pairs(rest)]
    out += top_part_pairs(support)
    return out


def top_part_pairs(support):
    """V^r_A: (pi|m|B|rho, pi|m+B|rho) over A' = C + B + D, B nonempty."""
    m = 1 << (support.bit_length() - 1)
    rest = support & ~m
    out = []
    for C in submasks(rest):
        for pi in ordered_partitions(C):
            for B in submasks(rest & ~C):
                if not B:
                    continue
                for rho in ordered_partitions(rest & ~C & ~B):
                    out.append((pi + (m, B) + rho, pi + (m | B,) + rho))
    return out


def top_part_partner(partition, m):
    """Partner of lambda in V^r_A (``m`` the max-label bit), or None if none exists.

    Returns ``(lower, upper)``.
    """
    for i, b in enumerate(partition):
        if b & m:
            if b == m:
                if i + 1 == len(partition):
                    return None
                nxt = partition[i + 1]
                return partition, partition[:i] + (m | nxt,) + partition[i + 2:]
            return partition[:i] + (m, b & ~m) + partition[i + 1:], partition
    raise ValueError("max label not in partition")


def permutahedron_poset(labels):
    from .partitions import permutahedron
    return permutahedron(labels)


def to_dot(poset, field, name="field"):
    """Hasse diagram as a DOT digraph; vectors drawn as bold arrows a -> b."""
    q = lambda x: '"' + poset.fmt(x).replace('"', r'\"') + '"'
    lines = [f"digraph {name} {{"]
    for x in poset.elements:
        lines.append(f"  {q(x)};")
    for b in poset.elements:
        for a in poset.facets(b):
            if field.up.get(a) == b:
                lines.append(f"  {q(a)} -> {q(b)} [style=bold, penwidth=2];")
            else:
                lines.append(f"  {q(b)} -> {q(a)} [color=gray];")
    lines.append("}")
    return "\n".join(lines)

