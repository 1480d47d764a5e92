"""The gradient field W_K on P_K and its critical cells.

Three independent routes to the critical cells are provided:

* :func:`build_wk` materialises the whole field and reads off its critical
  cells;
* :func:`critical_inductive` runs the recursion on the max label without
  building any vectors;
* :func:`enumerate_critical_sequences` lists the explicit certificates
  ((E_j), (F_j)) and :func:`sigma` turns each into a cell.
"""

from collections import defaultdict
from dataclasses import dataclass

from .cubical import bits, popcount, submasks, top_bit
from .morse import DiscreteVectorField, top_part_partner
from .partitions import build_pk, format_partition, in_complex, pk_cells


def tau(mask):
    """Singleton blocks in ascending label order."""
    return tuple(1 << i for i in bits(mask))


def kappa(mask):
    """max(B) | B minus max(B); needs at least two elements."""
    if popcount(mask) < 2:
        raise ValueError("kappa needs a block with at least two elements")
    top = 1 << top_bit(mask)
    return top, mask & ~top


@dataclass(frozen=True)
class BranchingSequence:
    """(C, B, D) with c(C, m+B, D) missing but c(C, m, B+D), c(C+m, B, D) present."""
    C: int
    B: int
    D: int

    def cube(self, m):
        return self.C, self.B | m

    def labelled(self, labels):
        return tuple(labels.members(x) for x in (self.C, self.B, self.D))


def branching_sequences(K):
    support = K.support
    if support == 0:
        return []
    m = 1 << top_bit(support)
    rest = support & ~m
    cubes = K.cubes
    out = []
    for C in submasks(rest):
        if (C, m) not in cubes:
            continue
        for B in submasks(rest & ~C):
            if B and (C, m | B) not in cubes and (C | m, B) in cubes:
                out.append(BranchingSequence(C, B, rest & ~C & ~B))
    return out


class _Memo:
    """Per-complex cache keyed by (support, cubes); one instance per top-level call."""

    def __init__(self):
        self.cells = {}
        self.pairs = {}
        self.crit = {}
        self.branch = {}

    def pk(self, K):
        key = K.key()
        if key not in self.cells:
            self.cells[key] = pk_cells(K)
        return self.cells[key]

    def br(self, K):
        key = K.key()
        if key not in self.branch:
            self.branch[key] = branching_sequences(K)
        return self.branch[key]


def _field_parts(K, memo):
    """(W^m, V^r, Y) vector lists for K."""
    support = K.support
    if support == 0:
        return [], [], []
    m = 1 << top_bit(support)
    rest = support & ~m
    lower = []
    if (rest, m) in K.cubes:
        lower = [(a + (m,), b + (m,)) for a, b in _pairs(K.restrict(rest, 0), memo)]
    cells = memo.pk(K)
    present = set(cells)
    vr = []
    for lam in cells:
        if lam[-1] == m:
            continue
        low, high = top_part_partner(lam, m)
        if lam == low and high in present:
            vr.append((low, high))
    ys = []
    for br in memo.br(K):
        mid = (m, br.B)
        K0, K1 = K.restrict(br.C, 0), K.restrict(br.D, 1)
        w0, w1 = _pairs(K0, memo), _pairs(K1, memo)
        p0 = memo.pk(K0)
        reg1 = {x for pair in w1 for x in pair}
        crit1 = [r for r in memo.pk(K1) if r not in reg1]
        ys += [(pi + mid + r, pi + mid + r2) for pi in p0 for r, r2 in w1]
        ys += [(pi + mid + r, pi2 + mid + r) for pi, pi2 in w0 for r in crit1]
    return lower, vr, ys


def _pairs(K, memo):
    key = K.key()
    if key not in memo.pairs:
        lower, vr, ys = _field_parts(K, memo)
        memo.pairs[key] = lower + vr + ys
    return memo.pairs[key]


def build_wk(K):
    """The poset P_K together with the gradient field W_K on it."""
    P = build_pk(K)
    return P, DiscreteVectorField(_pairs(K, _Memo()))


def wk_parts(K):
    """The three pieces (W^m_K, V^r_K, Y_K) of W_K as fields."""
    lower, vr, ys = _field_parts(K, _Memo())
    return (DiscreteVectorField(lower), DiscreteVectorField(vr),
            DiscreteVectorField(ys))


def critical_inductive(K):
    """Crit(W_K) from the recursion on max(A), bucketed by dimension."""
    return _bucket(_crit(K, _Memo()))


def _crit(K, memo):
    key = K.key()
    if key in memo.crit:
        return memo.crit[key]
    support = K.support
    if support == 0:
        out = {()}
    else:
        m = 1 << top_bit(support)
        rest = support & ~m
        out = set()
        if (rest, m) in K.cubes:
            out |= {lam + (m,) for lam in _crit(K.restrict(rest, 0), memo)}
        for br in memo.br(K):
            left = _crit(K.restrict(br.C, 0), memo)
            right = _crit(K.restrict(br.D, 1), memo)
            mid = (m, br.B)
            out |= {pi + mid + r for pi in left for r in right}
    memo.crit[key] = out
    return out


def _bucket(cells):
    out = defaultdict(list)
    for c in cells:
        out[sum(popcount(b) - 1 for b in c)].append(c)
    return {d: sorted(v) for d, v in sorted(out.items())}


@dataclass(frozen=True)
class CriticalSequence:
    """((E_1..E_q), (F_0..F_q)) as tuples of label masks."""
    E: tuple
    F: tuple

    @property
    def q(self):
        return len(self.E)

    @property
    def dim(self):
        return sum(popcount(e) - 2 for e in self.E)

    def outer_sets(self, j):
        """(C_j, D_j) for 1 <= j <= q: everything before, resp. after, E_j."""
        before = 0
        for i in range(j):
            before |= self.F[i]
            if i < j - 1:
                before |= self.E[i]
        after = 0
        for i in range(j, self.q + 1):
            after |= self.F[i]
            if i < self.q:
                after |= self.E[i]
        return before, after

    def labelled(self, labels):
        return ([labels.members(e) for e in self.E], [labels.members(f) for f in self.F])


def sigma(cs):
    """tau(F_0) | kappa(E_1) | tau(F_1) | ... | kappa(E_q) | tau(F_q)."""
    out = tau(cs.F[0])
    for e, f in zip(cs.E, cs.F[1:]):
        out += kappa(e) + tau(f)
    return out


def enumerate_critical_sequences(K):
    """All critical sequences of K, built left to right with pruning."""
    support = K.support
    cubes = K.cubes
    memo = {}

    def tau_blocks(done):
        # all F (as masks) whose ascending singleton chain starting at ``done`` lies in K
        out = []

        def grow(F, cur, last):
            out.append(F)
            for i in bits(support & ~cur):
                b = 1 << i
                if b > last and (cur, b) in cubes:
                    grow(F | b, cur | b, b)

        grow(0, done, 0)
        return out

    def suffixes(done):
        # list of (F_j, E_{j+1}, F_{j+1}, ...) tuples completing a prefix ending at ``done``
        if done in memo:
            return memo[done]
        out = []
        for F in tau_blocks(done):
            here = done | F
            rest = support & ~here
            if rest == 0:
                out.append((F,))
                continue
            floor = 1 << top_bit(F) if F else 0
            for E in submasks(rest):
                if popcount(E) < 2:
                    continue
                top = 1 << top_bit(E)
                if top < floor:
                    continue
                if (here, E) in cubes:
                    continue
                if (here, top) not in cubes or (here | top, E & ~top) not in cubes:
                    continue
                for tail in suffixes(here | E):
                    out.append((F, E) + tail)
        memo[done] = out
        return out

    result = []
    for seq in suffixes(0):
        result.append(CriticalSequence(E=seq[1::2], F=seq[0::2]))
    return result


def is_critical_sequence(K, cs):
    """Direct check that ``cs`` is a critical sequence of K.

    The blocks must partition A with every #E_j >= 2, sigma(cs) must lie in
    P_K, F_{j-1} must be empty or have a smaller maximum than E_j, and the
    cube c(C_j, E_j, D_j) must be missing from K.
    """
    if len(cs.F) != len(cs.E) + 1:
        return False
    seen = 0
    for x in cs.E + cs.F:
        if x & seen:
            return False
        seen |= x
    if seen != K.support:
        return False
    if any(popcount(e) < 2 for e in cs.E):
        return False
    if not in_complex(K, sigma(cs)):
        return False
    for j in range(1, cs.q + 1):
        f, e = cs.F[j - 1], cs.E[j - 1]
        if f and top_bit(f) > top_bit(e):
            return False
        C, _ = cs.outer_sets(j)
        if (C, e) in K.cubes:
            return False
    return True


def critical_from_sequences(K):
    """sigma of every critical sequence, bucketed by dimension."""
    return _bucket(sigma(cs) for cs in enumerate_critical_sequences(K))


def format_sequence(labels, cs):
    E = " ".join("{" + ",".join(map(str, labels.members(e))) + "}" for e in cs.E)
    F = " ".join("{" + ",".join(map(str, labels.members(f))) + "}" for f in cs.F)
    return f"E=[{E}] F=[{F}] -> {format_partition(labels, sigma(cs))}"
