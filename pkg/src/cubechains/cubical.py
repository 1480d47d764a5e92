"""Standard A-cubes, A-cubical complexes and their restrictions.

A cube of the standard A-cube is a word over {0, 1, *} indexed by a finite
ordered label set A.  Internally a cube is a pair of bitmasks ``(ones, stars)``
over the positions of the *ambient* label tuple; entries not in either mask
are 0.  Complexes remember the ambient labels together with a ``support`` mask
(the set A itself), so restricting to a subset never renumbers coordinates.
"""

from itertools import combinations

Cube = tuple  # (ones, stars)


def bits(mask):
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def top_bit(mask):
    return mask.bit_length() - 1


def submasks(mask):
    """All submasks of ``mask`` including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class LabelSet:
    """A finite, totally ordered set of hashable labels."""

    def __init__(self, labels):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {labels!r}")
        self.labels = labels
        self.index = {a: i for i, a in enumerate(labels)}
        self.n = len(labels)
        self.full = (1 << self.n) - 1

    def __repr__(self):
        return f"LabelSet({list(self.labels)!r})"

    def __eq__(self, other):
        return isinstance(other, LabelSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __len__(self):
        return self.n

    @property
    def max(self):
        if not self.labels:
            raise ValueError("empty label set has no maximum")
        return self.labels[-1]

    def mask(self, subset):
        m = 0
        for a in subset:
            try:
                m |= 1 << self.index[a]
            except KeyError:
                raise ValueError(f"unknown label {a!r}") from None
        return m

    def members(self, mask):
        return tuple(self.labels[i] for i in bits(mask))

    def word(self, cube, support=None):
        """Render a cube as a string over {0,1,*} on ``support`` (default: all)."""
        ones, stars = cube
        if support is None:
            support = self.full
        out = []
        for i in bits(support):
            b = 1 << i
            out.append("*" if stars & b else "1" if ones & b else "0")
        return "".join(out)

    def parse_word(self, word, support=None):
        if support is None:
            support = self.full
        pos = bits(support)
        if len(word) != len(pos):
            raise ValueError(f"word {word!r} has length {len(word)}, expected {len(pos)}")
        ones = stars = 0
        for ch, i in zip(word, pos):
            if ch == "1":
                ones |= 1 << i
            elif ch == "*":
                stars |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad letter {ch!r} in cube word {word!r}")
        return ones, stars


def dim(cube):
    return popcount(cube[1])


def face(cube, i, eps):
    """d_i^eps: replace the i-th star (1-based, in label order) by ``eps``."""
    ones, stars = cube
    pos = bits(stars)
    if not 1 <= i <= len(pos):
        raise IndexError(f"face index {i} out of range for a {len(pos)}-cube")
    b = 1 << pos[i - 1]
    return (ones | b if eps else ones), stars & ~b


def end_vertices(cube):
    """Initial and final vertex: every star replaced by 0, resp. by 1."""
    ones, stars = cube
    return (ones, 0), (ones | stars, 0)


def make_cube(labels, ones, stars, zeros):
    """The cube c(B1, B*, B0) of the standard A-cube, A = ``labels``."""
    o, s, z = labels.mask(ones), labels.mask(stars), labels.mask(zeros)
    if o & s or o & z or s & z or (o | s | z) != labels.full:
        raise ValueError("(B1, B*, B0) must partition the label set")
    return o, s


def cube_leq(c, d):
    """True iff c is a face of d (inclusion of closed cubes)."""
    (o1, s1), (o2, s2) = c, d
    return s1 & ~s2 == 0 and o2 & ~o1 == 0 and (o1 & ~o2) & ~s2 == 0


def all_faces(cube):
    """Every face of ``cube``, the cube itself included."""
    ones, stars = cube
    for keep in submasks(stars):
        free = stars & ~keep
        for up in submasks(free):
            yield ones | up, keep


class CubicalComplex:
    """A face-closed set of cubes of the standard A-cube.

    ``labels`` is the ambient LabelSet; ``support`` is the mask of A inside it.
    """

    __slots__ = ("labels", "support", "cubes", "_hash")

    def __init__(self, labels, cubes, support=None, check=True):
        if not isinstance(labels, LabelSet):
            labels = LabelSet(labels)
        self.labels = labels
        self.support = labels.full if support is None else support
        self.cubes = frozenset(cubes)
        self._hash = None
        if check:
            for ones, stars in self.cubes:
                if ones & stars or (ones | stars) & ~self.support:
                    raise ValueError("cube outside the support of the complex")

    @classmethod
    def from_words(cls, labels, words, close=True):
        """Build from cube words; with ``close`` the face-closure is taken."""
        if not isinstance(labels, LabelSet):
            labels = LabelSet(labels)
        cubes = [labels.parse_word(w) for w in words]
        if close:
            cubes = closure(cubes)
        return cls(labels, cubes)

    @classmethod
    def full(cls, labels):
        """The standard A-cube itself."""
        if not isinstance(labels, LabelSet):
            labels = LabelSet(labels)
        return cls(labels, all_faces((0, labels.full)), check=False)

    @property
    def label_set(self):
        return LabelSet(self.labels.members(self.support))

    def __contains__(self, cube):
        return cube in self.cubes

    def __len__(self):
        return len(self.cubes)

    def __iter__(self):
        return iter(self.cubes)

    def key(self):
        return self.support, self.cubes

    def __eq__(self, other):
        if not isinstance(other, CubicalComplex):
            return NotImplemented
        if self.labels == other.labels:
            return self.support == other.support and self.cubes == other.cubes
        return (self.labels.members(self.support) == other.labels.members(other.support)
                and self.words() == other.words())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.labels.members(self.support), frozenset(self.words())))
        return self._hash

    def __repr__(self):
        return (f"CubicalComplex(labels={list(self.labels.members(self.support))!r}, "
                f"{len(self.cubes)} cubes)")

    def word(self, cube):
        return self.labels.word(cube, self.support)

    def words(self):
        return sorted(self.word(c) for c in self.cubes)

    @property
    def dim(self):
        return max((dim(c) for c in self.cubes), default=-1)

    def f_vector(self):
        counts = [0] * (self.dim + 1)
        for c in self.cubes:
            counts[dim(c)] += 1
        return counts

    def validate(self):
        """True iff the cube set is face-closed."""
        cubes = self.cubes
        for cube in cubes:
            for i in range(1, dim(cube) + 1):
                if face(cube, i, 0) not in cubes or face(cube, i, 1) not in cubes:
                    return False
        return True

    def restrict(self, subset, eps):
        """K|_B^eps: cubes on B whose extension by ``eps`` off B lies in K.

        ``subset`` is a mask inside the support.
        """
        if subset & ~self.support:
            raise ValueError("restriction set is not contained in A")
        off = self.support & ~subset
        want = off if eps else 0
        out = [(ones & subset, stars) for ones, stars in self.cubes
               if stars & off == 0 and ones & off == want]
        return CubicalComplex(self.labels, out, subset, check=False)

    def restrict_labels(self, labels, eps):
        return self.restrict(self.labels.mask(labels), eps)

    def skeleton(self, q):
        """Cubes of dimension at most ``q``."""
        return CubicalComplex(self.labels, (c for c in self.cubes if dim(c) <= q),
                              self.support, check=False)

    def with_order(self, order):
        """The same complex with the coordinates relabelled in a new total order."""
        new = LabelSet(order)
        old_members = self.labels.members(self.support)
        if sorted(map(repr, new.labels)) != sorted(map(repr, old_members)):
            raise ValueError("order must be a permutation of the complex's labels")
        remap = {self.labels.index[a]: new.index[a] for a in old_members}

        def move(mask):
            out = 0
            for i in bits(mask):
                out |= 1 << remap[i]
            return out

        return CubicalComplex(new, ((move(o), move(s)) for o, s in self.cubes))


def closure(cubes):
    """Face-closure of a collection of cubes."""
    out = set()
    for cube in cubes:
        if cube in out:
            continue
        out.update(all_faces(cube))
    return out


def standard_cube(n):
    """The standard cube on labels 1..n."""
    return CubicalComplex.full(range(1, n + 1))


def random_complex(labels, rng, p_keep=0.7):
    """A random face-closed sub-complex of the standard A-cube.

    Cubes are removed top-down: every cube is dropped with probability
    ``1 - p_keep`` together with all cubes containing it.  Vertices are never
    dropped, so the result always contains the two corners.
    """
    full = CubicalComplex.full(labels)
    ls = full.labels
    drop = set()
    for d in range(ls.n, 0, -1):
        for stars in (sum(1 << i for i in c) for c in combinations(range(ls.n), d)):
            for ones in submasks(ls.full & ~stars):
                if rng.random() > p_keep:
                    drop.add((ones, stars))
    kept = [c for c in full.cubes if not any(cube_leq(x, c) for x in drop)]
    return CubicalComplex(ls, kept, check=False)
