"""Words in the free group on adjacent transpositions, and their Koszul signs.

A ``Word`` is a formal product of generators ``s_k`` and their inverses; it
projects onto S_n by multiplying out the corresponding adjacent swaps. The
sign of a word is the product of adjacent-swap signs picked up while the word
acts letter by letter (rightmost letter first); it only depends on the image
permutation, which is what makes the sign of a permutation well defined.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import GradedSequence, Permutation, bubble_swaps
from .errors import DimensionError, DomainError, ParseError


@dataclass(frozen=True)
class Generator:
    """One letter: the adjacent transposition s_index, or its formal inverse."""

    index: int
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise DomainError(f"generator exponent must be +-1, got {self.exponent}")
        if self.index < 1:
            raise DomainError(f"generator index must be >= 1, got {self.index}")

    def inverse(self) -> "Generator":
        return Generator(self.index, -self.exponent)

    def __str__(self):
        return f"s{self.index}" if self.exponent == 1 else f"s{self.index}^-1"


@dataclass(frozen=True)
class Word:
    """A formal product of generators in the free group on s_1..s_{n-1}.

    The leftmost letter is applied last: the word ``s2 s1`` means first swap
    positions 1,2 then swap positions 2,3.
    """

    letters: tuple = field(default=())
    n: int = 2

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 2:
            raise DomainError(f"ambient n must be >= 2, got {self.n}")
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise DomainError(
                    f"letter {letter} out of range for ambient n={self.n}"
                )

    @classmethod
    def empty(cls, n: int) -> "Word":
        return cls((), n)

    @classmethod
    def from_indices(cls, indices, n: int) -> "Word":
        """A word of plain (exponent +1) generators."""
        return cls(tuple(Generator(i) for i in indices), n)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise DimensionError(f"cannot concatenate words with n={self.n} and n={other.n}")
        return Word(self.letters + other.letters, self.n)

    def inverse(self) -> "Word":
        return Word(tuple(l.inverse() for l in reversed(self.letters)), self.n)

    def is_reduced(self) -> bool:
        return all(
            a != b.inverse() for a, b in zip(self.letters, self.letters[1:])
        )

    def __str__(self):
        return render_word(self)


def reduce_word(word: Word) -> Word:
    """The unique freely reduced form: cancel adjacent s_k s_k^-1 pairs only.

    The group relations (s_k squared, braid, commutation) are *not* applied;
    ``s1 s1`` is already reduced.
    """
    stack = []
    for letter in word.letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack), word.n)


def project(word: Word) -> Permutation:
    """The image permutation in S_n (rightmost letter applied first)."""
    p = Permutation.identity(word.n)
    for letter in word.letters:
        p = p * Permutation.adjacent(letter.index, word.n)
    return p


def kappa_word(word: Word, g: GradedSequence) -> int:
    """Sign of a word on g: apply letters right to left, multiplying swap signs.

    The empty word gives +1. Works on arbitrary words, reduced or not, and
    equals ``kappa(project(word), g)``.
    """
    if word.n != g.n:
        raise DimensionError(f"word with n={word.n} vs sequence length {g.n}")
    state = list(g.parities())
    e = 0
    for letter in reversed(word.letters):
        i = letter.index
        e ^= state[i - 1] & state[i]
        state[i - 1], state[i] = state[i], state[i - 1]
    return -1 if e else 1


def decompose_adjacent(sigma: Permutation) -> Word:
    """Deterministic bubble-sort decomposition of sigma into adjacent swaps.

    The product of the returned word (leftmost letter applied last) equals
    sigma, and its length equals the inversion count of sigma.
    """
    swaps = bubble_swaps(sigma)
    return Word.from_indices(reversed(swaps), sigma.n)


def relators(n: int):
    """The defining relators of S_n as words equal to the identity.

    s_i^2, the commutators s_i s_j s_i^-1 s_j^-1 for |i-j| > 1, and the braid
    words s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1.
    """
    if n < 2:
        raise DomainError(f"relators need n >= 2, got {n}")
    out = []
    for i in range(1, n):
        out.append(Word.from_indices((i, i), n))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(
                Word(
                    (Generator(i), Generator(j), Generator(i, -1), Generator(j, -1)),
                    n,
                )
            )
    for i in range(1, n - 1):
        out.append(
            Word(
                (
                    Generator(i),
                    Generator(i + 1),
                    Generator(i),
                    Generator(i + 1, -1),
                    Generator(i, -1),
                    Generator(i + 1, -1),
                ),
                n,
            )
        )
    return out


def random_word(n: int, rng, max_len: int = 32) -> Word:
    """A uniform random word: random letters, random exponents, bounded length."""
    length = rng.randint(0, max_len)
    letters = tuple(
        Generator(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return Word(letters, n)


_TOKEN = re.compile(r"s(\d+)(\^-1|')?$")


def parse_word(text: str, n: int) -> Word:
    """Parse whitespace-separated tokens ``s<k>`` and ``s<k>^-1`` (alias ``s<k>'``).

    ``e`` alone denotes the empty word.
    """
    if text.strip() == "e":
        return Word.empty(n)
    letters = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        m = _TOKEN.match(token)
        if not m:
            raise ParseError(f"bad word token {token!r}", position=pos)
        index = int(m.group(1))
        if not 1 <= index <= n - 1:
            raise ParseError(
                f"generator index {index} out of range 1..{n - 1}", position=pos
            )
        letters.append(Generator(index, -1 if m.group(2) else 1))
        pos += len(token)
    return Word(tuple(letters), n)


def render_word(word: Word) -> str:
    """Inverse of ``parse_word``; the empty word renders as ``e``."""
    if not word.letters:
        return "e"
    return " ".join(str(letter) for letter in word.letters)
