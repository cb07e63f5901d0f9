"""Graded symbol sequences, permutations, and the Koszul sign of a permutation.

The central object is ``kappa(sigma, g)``: the sign picked up when the
permutation ``sigma`` reorders the graded sequence ``g``, following the rule
that swapping two adjacent symbols of degrees a, b contributes ``(-1)**(a*b)``.
``kappa`` is evaluated along a bubble-sort decomposition of ``sigma`` into
adjacent swaps; ``kappa_exponent`` is the independent closed form (a sum of
degree products over the inversion pairs of ``sigma``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DimensionError, DomainError, ResourceError

# Largest n for which exhaustive sweeps over all of S_n are attempted (720
# elements, 518,400 ordered pairs).
EXHAUSTIVE_BOUND = 6


def parity(value: int) -> int:
    """Parity in {0, 1}, with mathematical modulus so that -3 is odd."""
    return value % 2


class Permutation:
    """An element of S_n stored as the tuple of 1-based images.

    ``images[i-1]`` is sigma(i). Composition is ``(sigma * tau)(i) =
    sigma(tau(i))``, i.e. the right factor acts first.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        n = len(images)
        if n < 2:
            raise DomainError(f"permutations need n >= 2, got length {n}")
        if sorted(images) != list(range(1, n + 1)):
            raise DomainError(f"not a bijection of 1..{n}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def adjacent(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition s_i = (i, i+1) in S_n."""
        if not 1 <= i <= n - 1:
            raise DomainError(f"adjacent transposition index {i} not in 1..{n - 1}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        """Product of cycles, rightmost cycle applied first."""
        result = cls.identity(n)
        for cycle in cycles:
            images = list(range(1, n + 1))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= n:
                    raise DomainError(f"cycle entry {a} out of range 1..{n}")
                images[a - 1] = b
            result = result * cls(images)
        return result

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DimensionError(f"cannot compose S_{self.n} with S_{other.n}")
        return Permutation(self.images[other.images[i] - 1] for i in range(self.n))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def inversions(self):
        """All pairs (i, j), 1-based, with i < j and sigma(i) > sigma(j)."""
        im = self.images
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if im[i] > im[j]
        ]

    def inversion_count(self) -> int:
        return len(self.inversions())

    def sign(self) -> int:
        """The signature (-1)**inversion_count."""
        return -1 if self.inversion_count() % 2 else 1

    def rank(self) -> int:
        """Lexicographic rank of the one-line form among all of S_n."""
        im = self.images
        r = 0
        for i in range(self.n):
            smaller = sum(1 for j in range(i + 1, self.n) if im[j] < im[i])
            r = r * (self.n - i) + smaller
        return r

    def cycles(self):
        """Disjoint cycles (fixed points omitted), each starting at its minimum."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def one_line(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycles)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.one_line()})"


def symmetric_group(n: int):
    """All of S_n in lexicographic one-line order (identity first)."""
    if n < 2:
        raise DomainError(f"symmetric_group needs n >= 2, got {n}")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


@dataclass(frozen=True)
class GradedSequence:
    """An ordered sequence of distinct symbols with integer degrees."""

    symbols: tuple
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.symbols) != len(self.degrees):
            raise DimensionError(
                f"{len(self.symbols)} symbols but {len(self.degrees)} degrees"
            )
        if len(self.symbols) < 2:
            raise DomainError(f"graded sequences need n >= 2, got {len(self.symbols)}")
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError(f"symbol labels must be distinct: {self.symbols!r}")

    @classmethod
    def from_degrees(cls, degrees, symbols=None) -> "GradedSequence":
        """Build a base sequence; labels default to f1..fn."""
        degrees = tuple(degrees)
        if symbols is None:
            symbols = tuple(f"f{i}" for i in range(1, len(degrees) + 1))
        return cls(symbols, degrees)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def degree(self, i: int) -> int:
        """Degree at 1-based position i."""
        return self.degrees[i - 1]

    def symbol(self, i: int):
        return self.symbols[i - 1]

    def parities(self) -> tuple:
        return tuple(parity(d) for d in self.degrees)

    def swap_adjacent(self, i: int) -> "GradedSequence":
        """The sequence with positions i and i+1 exchanged (1-based)."""
        sy = list(self.symbols)
        de = list(self.degrees)
        sy[i - 1], sy[i] = sy[i], sy[i - 1]
        de[i - 1], de[i] = de[i], de[i - 1]
        return GradedSequence(tuple(sy), tuple(de))


def act(sigma: Permutation, g: GradedSequence) -> GradedSequence:
    """The left action: result[i] = g[sigma^{-1}(i)]."""
    if sigma.n != g.n:
        raise DimensionError(f"permutation of size {sigma.n} acting on length {g.n}")
    inv = sigma.inverse()
    return GradedSequence(
        tuple(g.symbols[inv(i) - 1] for i in range(1, g.n + 1)),
        tuple(g.degrees[inv(i) - 1] for i in range(1, g.n + 1)),
    )


def bubble_swaps(sigma: Permutation) -> tuple:
    """Adjacent-swap positions that bubble-sort the one-line form of sigma.

    The swaps, applied to a sequence in the returned order, realise sigma:
    sigma = s_{j_m} o ... o s_{j_1} for swaps (j_1, ..., j_m). The length
    equals the inversion count of sigma.
    """
    a = list(sigma.images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(len(a) - 1):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                swaps.append(j + 1)
                changed = True
    return tuple(swaps)


def kappa(sigma: Permutation, g: GradedSequence) -> int:
    """The Koszul sign of sigma acting on g.

    Evaluated along a bubble-sort decomposition of sigma, multiplying the
    adjacent-swap signs (-1)**(a*b) as the swaps are applied to g. The result
    does not depend on the decomposition.
    """
    if sigma.n != g.n:
        raise DimensionError(f"permutation of size {sigma.n} vs sequence length {g.n}")
    state = list(g.parities())
    e = 0
    for j in bubble_swaps(sigma):
        e ^= state[j - 1] & state[j]
        state[j - 1], state[j] = state[j], state[j - 1]
    return -1 if e else 1


def kappa_exponent(sigma: Permutation, g: GradedSequence) -> int:
    """Closed-form exponent: sum of |g_i||g_j| over inversion pairs, mod 2.

    ``kappa(sigma, g) == (-1)**kappa_exponent(sigma, g)``. Independent of the
    decomposition route used by ``kappa``.
    """
    if sigma.n != g.n:
        raise DimensionError(f"permutation of size {sigma.n} vs sequence length {g.n}")
    p = g.parities()
    e = 0
    for i, j in sigma.inversions():
        e ^= p[i - 1] & p[j - 1]
    return e


def _odd_count(degrees) -> int:
    degrees = tuple(degrees)
    if len(degrees) < 2:
        raise DomainError(f"need n >= 2 degrees, got {len(degrees)}")
    return sum(parity(d) for d in degrees)


def is_morphism(degrees) -> bool:
    """Whether kappa(-, g) is a group morphism S_n -> {+-1}.

    True iff the degrees all have the same parity, or exactly one is odd.
    """
    odd = _odd_count(degrees)
    n = len(tuple(degrees))
    return odd in (0, 1, n)


def is_constant_one(degrees) -> bool:
    """Whether kappa(-, g) is constant +1: at most one odd degree."""
    return _odd_count(degrees) <= 1


def morphism_bruteforce(degrees, bound: int = EXHAUSTIVE_BOUND) -> bool:
    """Exhaustive morphism check: kappa(st, f) == kappa(s, f) * kappa(t, f).

    Agrees with ``is_morphism`` on every input; kept as an independent route.
    """
    degrees = tuple(degrees)
    n = len(degrees)
    if n < 2:
        raise DomainError(f"need n >= 2 degrees, got {n}")
    if n > bound:
        raise ResourceError(f"n={n} exceeds exhaustive bound {bound}")
    f = GradedSequence.from_degrees(degrees)
    perms = list(symmetric_group(n))
    sign = {p: kappa(p, f) for p in perms}
    for s in perms:
        for t in perms:
            if sign[s * t] != sign[s] * sign[t]:
                return False
    return True
