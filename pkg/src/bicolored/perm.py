"""Permutations of {1,...,n}, cycle types, integer partitions, class sizes."""

import itertools
import math


class Permutation:
    """A bijection of {1,...,n} stored as its tuple of images."""

    __slots__ = ("n", "images")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("images must be a bijection of {1,...,%d}" % n)
        self.n = n
        self.images = images

    def __call__(self, i):
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def moved(self):
        """The set of points not fixed."""
        return frozenset(i for i in range(1, self.n + 1) if self.images[i - 1] != i)

    def cycles(self):
        """Disjoint cycles as tuples, singletons included, smallest point first."""
        seen = [False] * (self.n + 1)
        out = []
        for i in range(1, self.n + 1):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self(i)
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        body = "".join("(%s)" % " ".join(map(str, c)) for c in self.cycles() if len(c) > 1)
        return "Permutation[n=%d, %s]" % (self.n, body or "id")

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))

    @staticmethod
    def from_cycles(n, *cycles):
        """Build a permutation of {1,...,n} from disjoint cycles like (1,2,3)."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return Permutation(images)


class CycleType:
    """The counts c_r of r-cycles of a permutation of n points, singletons included."""

    __slots__ = ("n", "counts")

    def __init__(self, n, counts):
        counts = {r: c for r, c in dict(counts).items() if c}
        if any(r < 1 or c < 0 for r, c in counts.items()):
            raise ValueError("cycle lengths positive, counts nonnegative")
        if sum(r * c for r, c in counts.items()) != n:
            raise ValueError("counts do not partition %d" % n)
        self.n = n
        self.counts = counts

    def items(self):
        return sorted(self.counts.items())

    def get(self, r):
        return self.counts.get(r, 0)

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.n == other.n and self.counts == other.counts

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def __repr__(self):
        return "CycleType[%d; %s]" % (self.n, self.counts)


def cycle_type(sigma):
    """Extract the cycle type of a permutation, singleton cycles counted."""
    counts = {}
    for cyc in sigma.cycles():
        counts[len(cyc)] = counts.get(len(cyc), 0) + 1
    return CycleType(sigma.n, counts)


def total_cycles(t):
    """c(sigma): the number of cycles, singletons included."""
    return sum(t.counts.values())


def partitions(n):
    """All partitions of n as CycleType values, reverse-lexicographic part order."""
    def gen(m, largest):
        if m == 0:
            yield ()
            return
        for first in range(min(m, largest), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    for parts in gen(n, n if n else 1):
        counts = {}
        for r in parts:
            counts[r] = counts.get(r, 0) + 1
        yield CycleType(n, counts)


def class_size(t):
    """Number of permutations in the symmetric group with this cycle type."""
    z = 1
    for r, c in t.counts.items():
        z *= r ** c * math.factorial(c)
    return math.factorial(t.n) // z


def make_cycle(n, length):
    """The canonical cycle (1 2 ... length) fixing the remaining points."""
    if not 1 <= length <= n:
        raise ValueError("need 1 <= length <= n")
    images = list(range(2, length + 1)) + [1] + list(range(length + 1, n + 1))
    return Permutation(images)


def disjoint(sigma, tau):
    """True when no point is moved by both permutations."""
    if sigma.n != tau.n:
        raise ValueError("degree mismatch")
    return sigma.moved().isdisjoint(tau.moved())


def compose(sigma, tau):
    """Function composition: (sigma tau)(i) = sigma(tau(i))."""
    if sigma.n != tau.n:
        raise ValueError("degree mismatch")
    return Permutation(sigma.images[j - 1] for j in tau.images)


def all_permutations(n):
    """Iterate the whole symmetric group on {1,...,n}."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)
