"""The sign map as a 2-cochain on S_n, with coboundaries in {+-1} coefficients.

``build_cf`` tabulates c(sigma, rho) = kappa(sigma, rho(f)) densely over
S_n x S_n, indexed by the lexicographic rank of one-line forms so that
serialized tables are byte-stable. The module-structure choice on {+-1} is a
morphism u : S_n -> {+-1}, necessarily trivial or the signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import GradedSequence, Permutation, act, kappa, parity, symmetric_group
from .errors import DimensionError, DomainError, ResourceError

# Dense (n!)^2 tables are built up to this n (720^2 entries at the bound).
TABLE_BOUND = 6
# Dense (n!)^3 coboundary tables and exhaustive cocycle sweeps stop here.
TRIPLE_BOUND = 5


@lru_cache(maxsize=None)
def perm_list(n: int):
    """All of S_n in lexicographic (rank) order, cached."""
    return tuple(symmetric_group(n))


@lru_cache(maxsize=None)
def _rank_of(n: int):
    return {p: r for r, p in enumerate(perm_list(n))}


@lru_cache(maxsize=None)
def mul_table(n: int) -> np.ndarray:
    """mul[i, j] = rank of perm[i] * perm[j]."""
    perms = perm_list(n)
    rank = _rank_of(n)
    table = np.empty((len(perms), len(perms)), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = rank[p * q]
    return table


@lru_cache(maxsize=None)
def inverse_table(n: int) -> np.ndarray:
    """inv[i] = rank of perm[i]^{-1}."""
    perms = perm_list(n)
    rank = _rank_of(n)
    return np.array([rank[p.inverse()] for p in perms], dtype=np.int32)


@dataclass(frozen=True)
class ModuleStructure:
    """An S_n-module structure on {+-1}: the trivial morphism or the signature."""

    kind: str

    def __post_init__(self):
        if self.kind not in ("trivial", "signature"):
            raise DomainError(f"unknown module structure kind {self.kind!r}")

    def __call__(self, sigma: Permutation) -> int:
        return 1 if self.kind == "trivial" else sigma.sign()

    def vector(self, n: int) -> np.ndarray:
        """Values over S_n in rank order."""
        return np.array([self(p) for p in perm_list(n)], dtype=np.int8)


TRIVIAL = ModuleStructure("trivial")
SIGNATURE = ModuleStructure("signature")


class TwoCochain:
    """A dense map S_n x S_n -> {+-1}, indexed by lexicographic rank."""

    def __init__(self, n: int, table: np.ndarray):
        size = len(perm_list(n))
        table = np.asarray(table, dtype=np.int8)
        if table.shape != (size, size):
            raise DimensionError(f"expected table shape ({size}, {size}), got {table.shape}")
        self.n = n
        self.table = table
        self.table.setflags(write=False)

    @classmethod
    def from_function(cls, n: int, fn) -> "TwoCochain":
        perms = perm_list(n)
        table = np.array([[fn(s, r) for r in perms] for s in perms], dtype=np.int8)
        return cls(n, table)

    def __call__(self, sigma: Permutation, rho: Permutation) -> int:
        return int(self.table[sigma.rank(), rho.rank()])

    def records(self):
        """Rows (sigma_rank, rho_rank, sign) in canonical order."""
        size = self.table.shape[0]
        for i in range(size):
            for j in range(size):
                yield (i, j, int(self.table[i, j]))

    def __eq__(self, other):
        return (
            isinstance(other, TwoCochain)
            and self.n == other.n
            and np.array_equal(self.table, other.table)
        )


class OneCochain:
    """A map S_n -> {+-1}, indexed by lexicographic rank."""

    def __init__(self, n: int, values: np.ndarray):
        size = len(perm_list(n))
        values = np.asarray(values, dtype=np.int8)
        if values.shape != (size,):
            raise DimensionError(f"expected {size} values, got shape {values.shape}")
        self.n = n
        self.values = values
        self.values.setflags(write=False)

    @classmethod
    def from_function(cls, n: int, fn) -> "OneCochain":
        return cls(n, np.array([fn(p) for p in perm_list(n)], dtype=np.int8))

    def __call__(self, sigma: Permutation) -> int:
        return int(self.values[sigma.rank()])

    def __eq__(self, other):
        return (
            isinstance(other, OneCochain)
            and self.n == other.n
            and np.array_equal(self.values, other.values)
        )


class ThreeCochain:
    """A dense map S_n x S_n x S_n -> {+-1}."""

    def __init__(self, n: int, table: np.ndarray):
        self.n = n
        self.table = np.asarray(table, dtype=np.int8)
        self.table.setflags(write=False)

    def __call__(self, sigma: Permutation, tau: Permutation, rho: Permutation) -> int:
        return int(self.table[sigma.rank(), tau.rank(), rho.rank()])

    def is_constant_one(self) -> bool:
        return bool(np.all(self.table == 1))


def build_cf(f: GradedSequence, bound: int = TABLE_BOUND) -> TwoCochain:
    """Tabulate c(sigma, rho) = kappa(sigma, rho(f)) over all of S_n x S_n."""
    if f.n > bound:
        raise ResourceError(f"n={f.n} exceeds dense table bound {bound}")
    perms = perm_list(f.n)
    table = np.empty((len(perms), len(perms)), dtype=np.int8)
    for j, rho in enumerate(perms):
        g = act(rho, f)
        for i, sigma in enumerate(perms):
            table[i, j] = kappa(sigma, g)
    return TwoCochain(f.n, table)


def identity_row(c: TwoCochain) -> OneCochain:
    """The 1-cochain c(-, e); rank 0 is the identity in lexicographic order."""
    return OneCochain(c.n, c.table[:, 0].copy())


def coboundary2(c: TwoCochain, u: ModuleStructure, bound: int = TRIPLE_BOUND) -> ThreeCochain:
    """The 3-cochain delta(c)(s, t, r) = u(s)*c(t, r)*c(st, r)*c(s, tr)*c(s, t).

    Inverses are trivial in {+-1}, so the two inverted factors enter as plain
    products.
    """
    if c.n > bound:
        raise ResourceError(f"n={c.n} exceeds dense 3-cochain bound {bound}")
    mul = mul_table(c.n)
    C = c.table
    uvec = u.vector(c.n)
    table = (
        uvec[:, None, None]
        * C[None, :, :]
        * C[mul]
        * C[np.arange(C.shape[0])[:, None, None], mul[None, :, :]]
        * C[:, :, None]
    )
    return ThreeCochain(c.n, table)


def coboundary1(v: OneCochain, u: ModuleStructure) -> TwoCochain:
    """The 2-cochain delta(v)(s, t) = u(s)*v(t)*v(st)*v(s)."""
    mul = mul_table(v.n)
    vals = v.values
    uvec = u.vector(v.n)
    table = uvec[:, None] * vals[None, :] * vals[mul] * vals[:, None]
    return TwoCochain(v.n, table)


def module_from_degrees(degrees):
    """The module structure with u(s_i) = (-1)**(|f_i| |f_{i+1}|), if consistent.

    Returns None when the generator values disagree (no admissible structure).
    """
    degrees = tuple(degrees)
    if len(degrees) < 2:
        raise DomainError(f"need n >= 2 degrees, got {len(degrees)}")
    ui = [
        -1 if parity(a) & parity(b) else 1 for a, b in zip(degrees, degrees[1:])
    ]
    if any(v != ui[0] for v in ui):
        return None
    return TRIVIAL if ui[0] == 1 else SIGNATURE


def is_cocycle(f: GradedSequence, u: ModuleStructure | None = None, bound: int = TRIPLE_BOUND) -> bool:
    """Whether c_f is a 2-cocycle for the module structure u, by exhaustive check.

    With u=None the structure determined by the degrees is used; if no
    structure is admissible the answer is False (c_f cannot be a cocycle for
    either choice).
    """
    if f.n > bound:
        raise ResourceError(f"n={f.n} exceeds exhaustive cocycle bound {bound}")
    if u is None:
        u = module_from_degrees(f.degrees)
        if u is None:
            return False
    c = build_cf(f)
    return coboundary2(c, u, bound=bound).is_constant_one()
