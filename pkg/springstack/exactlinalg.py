"""
exactlinalg.py — Exact linear algebra over small prime fields.

Matrices act on column vectors; subspaces are stored as the rows of their
reduced row echelon basis, so equal subspaces compare equal structurally.

Computations are done over 𝔽_p rather than an algebraically closed field.
Every statement checked with this module is a containment or an equality of
Jordan types, which does not change under field extension, so 𝔽_p-points are
enough to witness them.

The p = 2 case eliminates on Python-int bitmasks; other primes eliminate on
int64 numpy arrays (entries stay below 2**16, so products fit).
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np
import sympy

from springstack.errors import (
    ConfigError,
    DimensionError,
    NotInvariantError,
    NotNilpotentError,
    PartitionError,
    SingularMatrixError,
)
from springstack.partitions import Partition, transpose
from springstack.settings import get_settings

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=64)
def _is_prime(p: int) -> bool:
    return bool(sympy.isprime(p))


@dataclass(frozen=True)
class PrimeField:
    """The field 𝔽_p, p prime and at most ``Settings.max_prime``."""

    p: int = 2

    def __post_init__(self) -> None:
        check_prime(self.p)

    def inverse(self, a: int) -> int:
        return pow(int(a) % self.p, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or not _is_prime(int(p)):
        raise ConfigError(f"field characteristic must be a prime, got {p!r}")
    limit = get_settings().max_prime
    if p > limit:
        raise ConfigError(f"characteristic {p} exceeds the configured bound {limit}")
    return int(p)


class PrimeFieldMatrix:
    """An immutable r×c matrix with entries reduced mod p."""

    __slots__ = ("p", "data", "_hash")

    def __init__(self, data: np.ndarray | Sequence[Sequence[int]], p: int) -> None:
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-dimensional matrix, got shape {arr.shape}")
        arr %= p
        arr.setflags(write=False)
        self.p = p
        self.data = arr
        self._hash: int | None = None

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> PrimeFieldMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> PrimeFieldMatrix:
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def jordan_block(cls, n: int, p: int) -> PrimeFieldMatrix:
        """J_n with J v_1 = 0 and J v_k = v_{k-1}."""
        return cls(np.eye(n, k=1, dtype=np.int64), p)

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.data.shape[0]), int(self.data.shape[1]))

    @property
    def T(self) -> PrimeFieldMatrix:
        return PrimeFieldMatrix(self.data.T, self.p)

    def __matmul__(self, other: PrimeFieldMatrix) -> PrimeFieldMatrix:
        return multiply(self, other)

    def __add__(self, other: PrimeFieldMatrix) -> PrimeFieldMatrix:
        _same_shape(self, other)
        return PrimeFieldMatrix(self.data + other.data, self.p)

    def __sub__(self, other: PrimeFieldMatrix) -> PrimeFieldMatrix:
        _same_shape(self, other)
        return PrimeFieldMatrix(self.data - other.data, self.p)

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.data.shape, self.data.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"PrimeFieldMatrix(p={self.p}, rows={self.rows()})"

    def rows(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def to_json(self) -> dict:
        return {"p": self.p, "rows": self.rows()}

    @classmethod
    def from_json(cls, data: dict) -> PrimeFieldMatrix:
        p = check_prime(int(data["p"]))
        rows = data["rows"]
        if rows and len({len(r) for r in rows}) != 1:
            raise DimensionError("matrix rows have different lengths")
        return cls(rows if rows else np.zeros((0, 0), dtype=np.int64), p)


def _same_shape(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> None:
    if a.p != b.p:
        raise DimensionError(f"matrices over different fields: p={a.p} and p={b.p}")
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} and {b.shape}")


# ── Basic operations ───────────────────────────────────────────────────────────

def multiply(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> PrimeFieldMatrix:
    if a.p != b.p:
        raise DimensionError(f"matrices over different fields: p={a.p} and p={b.p}")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return PrimeFieldMatrix(a.data @ b.data, a.p)


def power(a: PrimeFieldMatrix, k: int) -> PrimeFieldMatrix:
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"power of a non-square matrix {a.shape}")
    if k < 0:
        raise DimensionError("negative powers are not supported; use inverse()")
    result = PrimeFieldMatrix.identity(a.shape[0], a.p)
    base = a
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def apply(a: PrimeFieldMatrix, v: Sequence[int] | np.ndarray) -> np.ndarray:
    vec = np.asarray(v, dtype=np.int64)
    if vec.shape != (a.shape[1],):
        raise DimensionError(f"cannot apply a {a.shape} matrix to a vector of shape {vec.shape}")
    return (a.data @ vec) % a.p


def rref(m: PrimeFieldMatrix) -> tuple[PrimeFieldMatrix, tuple[int, ...]]:
    """Reduced row echelon form without zero rows, and the pivot columns."""
    if m.p == 2:
        rows, pivots = _rref_gf2(m.data)
    else:
        rows, pivots = _rref_modp(m.data, m.p)
    return PrimeFieldMatrix(rows, m.p), pivots


def _rref_modp(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    m = a.copy() % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def _rref_gf2(a: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    # bit c of a mask is column c, so the pivot is the lowest set bit
    ncols = a.shape[1]
    basis: dict[int, int] = {}
    for row in a:
        x = 0
        for c in np.flatnonzero(row & 1):
            x |= 1 << int(c)
        for piv, b in basis.items():
            if x >> piv & 1:
                x ^= b
        if not x:
            continue
        piv = (x & -x).bit_length() - 1
        for q, b in basis.items():
            if b >> piv & 1:
                basis[q] = b ^ x
        basis[piv] = x
    pivots = tuple(sorted(basis))
    out = np.zeros((len(pivots), ncols), dtype=np.int64)
    for r, piv in enumerate(pivots):
        mask = basis[piv]
        for c in range(piv, ncols):
            if mask >> c & 1:
                out[r, c] = 1
    return out, pivots


def rank(m: PrimeFieldMatrix) -> int:
    return len(rref(m)[1])


def kernel(m: PrimeFieldMatrix) -> Subspace:
    """{v : m v = 0} as a subspace of 𝔽_p^cols."""
    reduced, pivots = rref(m)
    ncols = m.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    vectors = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        vectors[k, f] = 1
        for r, piv in enumerate(pivots):
            vectors[k, piv] = -reduced.data[r, f]
    return Subspace.span(vectors, m.p, ncols)


def image(m: PrimeFieldMatrix) -> Subspace:
    """The column space of ``m``."""
    return Subspace.span(m.data.T, m.p, m.shape[0])


def inverse(m: PrimeFieldMatrix) -> PrimeFieldMatrix:
    n, cols = m.shape
    if n != cols:
        raise DimensionError(f"inverse of a non-square matrix {m.shape}")
    augmented = PrimeFieldMatrix(np.hstack([m.data, np.eye(n, dtype=np.int64)]), m.p)
    reduced, pivots = rref(augmented)
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        raise SingularMatrixError(f"matrix of shape {m.shape} is singular over F_{m.p}")
    return PrimeFieldMatrix(reduced.data[:n, n:], m.p)


def conjugate(g: PrimeFieldMatrix, e: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """g e g^{-1}."""
    return g @ e @ inverse(g)


# ── Subspaces and flags ────────────────────────────────────────────────────────

class Subspace:
    """A subspace of 𝔽_p^ambient held by its canonical (RREF) row basis."""

    __slots__ = ("basis", "pivots", "ambient")

    def __init__(self, basis: PrimeFieldMatrix, pivots: tuple[int, ...], ambient: int) -> None:
        # trusted constructor: basis must already be in reduced echelon form
        self.basis = basis
        self.pivots = pivots
        self.ambient = ambient

    @classmethod
    def span(
        cls, vectors: np.ndarray | Sequence[Sequence[int]] | PrimeFieldMatrix, p: int, ambient: int
    ) -> Subspace:
        if isinstance(vectors, PrimeFieldMatrix):
            arr = vectors.data
        else:
            arr = np.asarray(vectors, dtype=np.int64)
            if arr.ndim != 2:
                arr = arr.reshape(-1, ambient) if arr.size else np.zeros((0, ambient), dtype=np.int64)
        if arr.shape[1] != ambient:
            raise DimensionError(f"vectors of length {arr.shape[1]} in an ambient space of dimension {ambient}")
        reduced, pivots = rref(PrimeFieldMatrix(arr, p))
        return cls(reduced, pivots, ambient)

    @classmethod
    def zero(cls, ambient: int, p: int) -> Subspace:
        return cls(PrimeFieldMatrix.zeros(0, ambient, p), (), ambient)

    @classmethod
    def full(cls, ambient: int, p: int) -> Subspace:
        return cls(PrimeFieldMatrix.identity(ambient, p), tuple(range(ambient)), ambient)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient: int, p: int) -> Subspace:
        """Span of the standard basis vectors with the given 0-based indices."""
        idx = sorted(set(indices))
        data = np.zeros((len(idx), ambient), dtype=np.int64)
        for r, c in enumerate(idx):
            data[r, c] = 1
        return cls(PrimeFieldMatrix(data, p), tuple(idx), ambient)

    @property
    def p(self) -> int:
        return self.basis.p

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Residue of ``v`` modulo the subspace; zero iff ``v`` lies in it."""
        vec = np.asarray(v, dtype=np.int64) % self.p
        if not self.pivots:
            return vec
        return (vec - vec[list(self.pivots)] @ self.basis.data) % self.p

    def contains(self, v: Sequence[int] | np.ndarray) -> bool:
        return not self.reduce(np.asarray(v)).any()

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of a member ``v`` in the canonical basis."""
        if not self.contains(v):
            raise NotInvariantError("vector does not lie in the subspace")
        return np.asarray(v, dtype=np.int64)[list(self.pivots)] % self.p

    def __le__(self, other: Subspace) -> bool:
        _same_space(self, other)
        return all(other.contains(row) for row in self.basis.data)

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def __lt__(self, other: Subspace) -> bool:
        return self.dim < other.dim and self <= other

    def sum(self, other: Subspace) -> Subspace:
        _same_space(self, other)
        return Subspace.span(np.vstack([self.basis.data, other.basis.data]), self.p, self.ambient)

    def __add__(self, other: Subspace) -> Subspace:
        return self.sum(other)

    def transform(self, g: PrimeFieldMatrix) -> Subspace:
        """g·W = {g w : w ∈ W}."""
        if g.shape[1] != self.ambient:
            raise DimensionError(f"cannot apply a {g.shape} matrix to a subspace of {self.ambient}-space")
        return Subspace.span(self.basis.data @ g.data.T, self.p, g.shape[0])

    def embed(self, offset: int, ambient: int) -> Subspace:
        """Place this subspace in coordinates ``offset .. offset+dim-1`` of a larger space."""
        if offset + self.ambient > ambient:
            raise DimensionError(f"block of dimension {self.ambient} at {offset} overflows {ambient}")
        data = np.zeros((self.dim, ambient), dtype=np.int64)
        data[:, offset : offset + self.ambient] = self.basis.data
        return Subspace(PrimeFieldMatrix(data, self.p), tuple(c + offset for c in self.pivots), ambient)

    def project(self, start: int, stop: int) -> Subspace:
        """Image under the coordinate projection onto ``start:stop``."""
        if not 0 <= start <= stop <= self.ambient:
            raise DimensionError(f"coordinates {start}:{stop} outside {self.ambient}-space")
        return Subspace.span(self.basis.data[:, start:stop], self.p, stop - start)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient}, p={self.p}, basis={self.basis.rows()})"

    def to_json(self) -> dict:
        return {"p": self.p, "ambient": self.ambient, "rows": self.basis.rows()}

    @classmethod
    def from_json(cls, data: dict) -> Subspace:
        p = check_prime(int(data["p"]))
        ambient = int(data.get("ambient", len(data["rows"][0]) if data["rows"] else 0))
        return cls.span(np.asarray(data["rows"], dtype=np.int64).reshape(-1, ambient), p, ambient)


def _same_space(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient or a.p != b.p:
        raise DimensionError(
            f"subspaces of different spaces: F_{a.p}^{a.ambient} and F_{b.p}^{b.ambient}"
        )


class Flag:
    """A complete flag 0 ⊊ F_1 ⊊ ... ⊊ F_{N-1} ⊊ 𝔽_p^N, with dim F_i = i."""

    __slots__ = ("ambient", "p", "spaces")

    def __init__(self, spaces: Sequence[Subspace], ambient: int, p: int, check: bool = True) -> None:
        spaces = tuple(spaces)
        if spaces and spaces[-1].dim == ambient:
            spaces = spaces[:-1]
        if check:
            if len(spaces) != max(ambient - 1, 0):
                raise DimensionError(f"a flag of {ambient}-space has {max(ambient - 1, 0)} proper steps, got {len(spaces)}")
            for i, space in enumerate(spaces, start=1):
                if space.ambient != ambient or space.p != p:
                    raise DimensionError(f"F_{i} lives in the wrong space")
                if space.dim != i:
                    raise DimensionError(f"dim F_{i} = {space.dim}, expected {i}")
                if i > 1 and not spaces[i - 2] <= space:
                    raise DimensionError(f"F_{i - 1} is not contained in F_{i}")
        self.ambient = ambient
        self.p = p
        self.spaces = spaces

    @classmethod
    def from_vectors(cls, vectors: np.ndarray | Sequence[Sequence[int]], p: int) -> Flag:
        """F_i = span of the first i vectors (which must be independent)."""
        arr = np.asarray(vectors, dtype=np.int64)
        n = arr.shape[1] if arr.ndim == 2 else 0
        return cls([Subspace.span(arr[:i], p, n) for i in range(1, n)], n, p)

    @classmethod
    def coordinate(cls, order: Sequence[int], p: int) -> Flag:
        """F_i = span of the standard basis vectors ``order[0], ..., order[i-1]`` (0-based)."""
        n = len(order)
        return cls([Subspace.coordinate(order[:i], n, p) for i in range(1, n)], n, p, check=False)

    def space(self, i: int) -> Subspace:
        """F_i for 0 ≤ i ≤ N, with F_0 = 0 and F_N the whole space."""
        if i == 0:
            return Subspace.zero(self.ambient, self.p)
        if i == self.ambient:
            return Subspace.full(self.ambient, self.p)
        if not 0 < i < self.ambient:
            raise DimensionError(f"flag of {self.ambient}-space has no step {i}")
        return self.spaces[i - 1]

    def chain(self) -> list[Subspace]:
        """F_1, ..., F_N."""
        return [self.space(i) for i in range(1, self.ambient + 1)]

    def transform(self, g: PrimeFieldMatrix) -> Flag:
        return Flag([s.transform(g) for s in self.spaces], self.ambient, self.p, check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Flag):
            return NotImplemented
        return self.ambient == other.ambient and self.p == other.p and self.spaces == other.spaces

    def __hash__(self) -> int:
        return hash((self.ambient, self.p, self.spaces))

    def __repr__(self) -> str:
        return f"Flag(ambient={self.ambient}, p={self.p}, dims=1..{max(self.ambient - 1, 0)})"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "ambient": self.ambient,
            "spaces": [s.basis.rows() for s in self.spaces],
        }

    @classmethod
    def from_json(cls, data: dict) -> Flag:
        p = check_prime(int(data["p"]))
        n = int(data["ambient"])
        spaces = [Subspace.span(np.asarray(rows, dtype=np.int64).reshape(-1, n), p, n) for rows in data["spaces"]]
        return cls(spaces, n, p)


# ── Operators and subspaces ────────────────────────────────────────────────────

def is_invariant(e: PrimeFieldMatrix, w: Subspace) -> bool:
    images = (w.basis.data @ e.data.T) % e.p
    return all(w.contains(v) for v in images)


def restrict(e: PrimeFieldMatrix, w: Subspace) -> PrimeFieldMatrix:
    """Matrix of e|_W in W's canonical basis; W must be e-stable."""
    if e.shape != (w.ambient, w.ambient):
        raise DimensionError(f"operator of shape {e.shape} on a subspace of {w.ambient}-space")
    images = (w.basis.data @ e.data.T) % e.p
    for v in images:
        if w.reduce(v).any():
            raise NotInvariantError("subspace is not stable under the operator")
    if not w.pivots:
        return PrimeFieldMatrix.zeros(0, 0, e.p)
    return PrimeFieldMatrix(images[:, list(w.pivots)].T, e.p)


def preimage(e: PrimeFieldMatrix, w: Subspace) -> Subspace:
    """e^{-1}(W) = {v : e v ∈ W}."""
    if e.shape[0] != w.ambient:
        raise DimensionError(f"operator of shape {e.shape} into a subspace of {w.ambient}-space")
    annihilator = kernel(w.basis) if w.dim else Subspace.full(w.ambient, w.p)
    # W = {x : a·x = 0 for all a in the annihilator}
    return kernel(PrimeFieldMatrix(annihilator.basis.data, e.p) @ e)


def jordan_type(e: PrimeFieldMatrix) -> Partition:
    """Jordan type of a nilpotent e from d_j = dim ker(e^j)."""
    n, cols = e.shape
    if n != cols:
        raise DimensionError(f"Jordan type of a non-square matrix {e.shape}")
    dims = [0]
    current = PrimeFieldMatrix.identity(n, e.p)
    for _ in range(n):
        current = current @ e
        dims.append(n - rank(current))
        if dims[-1] == n:
            break
    if dims[-1] != n:
        raise NotNilpotentError(f"e^{n} is not zero, so e is not nilpotent")
    steps = [b - a for a, b in zip(dims, dims[1:]) if b > a]
    return transpose(Partition(tuple(steps)))


def kernel_power(e: PrimeFieldMatrix, j: int) -> Subspace:
    return kernel(power(e, j))


def maximal_kernel_index(e: PrimeFieldMatrix, h: Subspace) -> int:
    """Largest j with H ⊇ ker(e^{j-1})."""
    j = 1
    current = PrimeFieldMatrix.identity(e.shape[0], e.p)
    while j <= e.shape[0]:
        current = current @ e
        if not kernel(current) <= h:
            break
        j += 1
    return j


def hyperplane_restriction_type(lam: Partition, j: int) -> Partition:
    """λ with the bottom box of column j removed (λ^⊤_j decremented, re-sorted)."""
    columns = list(transpose(lam).parts)
    if not 1 <= j <= len(columns):
        raise PartitionError(f"column {j} of {lam} is empty", lam.parts)
    columns[j - 1] -= 1
    return transpose(Partition(tuple(sorted(columns, reverse=True))))


def projective_points(k: int, p: int) -> Iterator[tuple[int, ...]]:
    """One representative per line of 𝔽_p^k: first nonzero coordinate is 1."""
    for lead in range(k):
        for tail in itertools.product(range(p), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def enumerate_extensions(w: Subspace, u: Subspace) -> Iterator[Subspace]:
    """Every W' with W ⊂ W' ⊆ U and dim W' = dim W + 1, each once."""
    _same_space(w, u)
    if not w <= u:
        raise DimensionError("W is not contained in U")
    residues = np.array([w.reduce(v) for v in u.basis.data], dtype=np.int64).reshape(-1, u.ambient)
    quotient, _ = rref(PrimeFieldMatrix(residues, u.p))
    k = quotient.shape[0]
    for coeffs in projective_points(k, u.p):
        v = (np.asarray(coeffs, dtype=np.int64) @ quotient.data) % u.p
        yield Subspace.span(np.vstack([w.basis.data, v]), u.p, u.ambient)


def count_extensions(w: Subspace, u: Subspace) -> int:
    k = u.dim - w.dim
    return (u.p**k - 1) // (u.p - 1)


def enumerate_hyperplanes(n: int, p: int) -> Iterator[Subspace]:
    """All hyperplanes of 𝔽_p^n, as kernels of projective functionals."""
    for f in projective_points(n, p):
        yield kernel(PrimeFieldMatrix([f], p))


def stable_hyperplanes(e: PrimeFieldMatrix) -> Iterator[Subspace]:
    return (h for h in enumerate_hyperplanes(e.shape[0], e.p) if is_invariant(e, h))


# ── Random matrices (seeded) ───────────────────────────────────────────────────

def random_matrix(rows: int, cols: int, p: int, rng: np.random.Generator) -> PrimeFieldMatrix:
    return PrimeFieldMatrix(rng.integers(0, p, size=(rows, cols)), p)


def random_invertible(n: int, p: int, rng: np.random.Generator) -> PrimeFieldMatrix:
    while True:
        g = random_matrix(n, n, p, rng)
        if rank(g) == n:
            return g


def random_block_upper_triangular(
    blocks: Sequence[int], p: int, rng: np.random.Generator
) -> tuple[PrimeFieldMatrix, PrimeFieldMatrix]:
    """A random invertible g preserving W_1 ⊂ W_2 ⊂ ..., and its block-diagonal part g_0."""
    n = sum(blocks)
    starts = list(itertools.accumulate(blocks, initial=0))
    g = np.zeros((n, n), dtype=np.int64)
    g0 = np.zeros((n, n), dtype=np.int64)
    for b, size in enumerate(blocks):
        lo, hi = starts[b], starts[b + 1]
        diag = random_invertible(size, p, rng).data
        g[lo:hi, lo:hi] = diag
        g0[lo:hi, lo:hi] = diag
        g[:lo, lo:hi] = rng.integers(0, p, size=(lo, size))
    return PrimeFieldMatrix(g, p), PrimeFieldMatrix(g0, p)
