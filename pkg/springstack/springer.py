"""
springer.py — Nilpotent representatives, Spaltenstein's map, Springer fibres
over 𝔽_p and the LS map on flags.

The Jordan basis v_{i,j,k} of 𝔽_p^N is indexed by triples (i, j, k): block i,
row j of μ_i, box k of that row. Basis vectors are ordered lexicographically
in (i, j, k), so block V_i occupies consecutive coordinates and

    e_0 : v_{i,j,k+1} ↦ v_{i,j,k}            (rows of each μ_i are Jordan chains)
    e_1 : v_{b,j,1}   ↦ v_{a,j,μ_{a,j}}      (a < b consecutive blocks having a row j)

With e = e_0 + e_1 every row j of the stacked diagram is one Jordan chain,
so the Jordan type of e is μ^Σ.

A flag F of 𝔽_p^N lies in the Springer fibre of e when e F_i ⊆ F_{i-1} for
every i. Spaltenstein's map sends it to the standard tableau whose box i is
the box added going from Type(e|F_{i-1}) to Type(e|F_i).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from springstack.errors import (
    CeilingExceededError,
    DimensionError,
    FibreMembershipError,
    TableauError,
)
from springstack.exactlinalg import (
    Flag,
    PrimeFieldMatrix,
    Subspace,
    check_prime,
    enumerate_extensions,
    jordan_type,
    preimage,
    restrict,
)
from springstack.partitions import (
    LeviDatum,
    Partition,
    hook_length_count,
    springer_fibre_dimension,
)
from springstack.settings import get_settings
from springstack.tableaux import (
    NestedPartitionSequence,
    StandardTableau,
    enumerate_standard,
    tableau_from_nested,
)

logger = logging.getLogger(__name__)

Triple = tuple[int, int, int]


# ── Representatives ────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class IndexSet:
    """The triples (i, j, k) of a Levi datum, in basis order."""

    datum: LeviDatum
    triples: tuple[Triple, ...] = field(init=False)
    _index: dict[Triple, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        triples = tuple(
            (i, j, k)
            for i, mu in enumerate(self.datum.block_partitions, start=1)
            for j, row in enumerate(mu.parts, start=1)
            for k in range(1, row + 1)
        )
        object.__setattr__(self, "triples", triples)
        object.__setattr__(self, "_index", {t: pos for pos, t in enumerate(triples)})

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def position(self, i: int, j: int, k: int) -> int:
        """0-based coordinate of v_{i,j,k}."""
        try:
            return self._index[(i, j, k)]
        except KeyError:
            raise DimensionError(f"({i},{j},{k}) is not an index of {self.datum}") from None

    def block_range(self, i: int) -> range:
        start = self.datum.offsets()[i - 1]
        return range(start, start + self.datum.levi_shape.parts[i - 1])


@dataclass(frozen=True)
class NilpotentRep:
    datum: LeviDatum
    index_set: IndexSet
    e0: PrimeFieldMatrix
    e1: PrimeFieldMatrix
    e: PrimeFieldMatrix

    @property
    def p(self) -> int:
        return self.e.p

    @property
    def ambient(self) -> int:
        return self.e.shape[0]

    def block_subspace(self, i: int) -> Subspace:
        """V_i, 1-based."""
        return Subspace.coordinate(self.index_set.block_range(i), self.ambient, self.p)

    def partial_flag(self, j: int) -> Subspace:
        """W_j = V_1 ⊕ ... ⊕ V_j, with W_0 = 0."""
        stop = self.datum.offsets()[j] if j < self.datum.n else self.ambient
        return Subspace.coordinate(range(stop), self.ambient, self.p)

    def block_operator(self, i: int) -> PrimeFieldMatrix:
        """e_0 restricted to V_i, in block coordinates."""
        r = self.index_set.block_range(i)
        return PrimeFieldMatrix(self.e0.data[r.start : r.stop, r.start : r.stop], self.p)


def build_representative(d: LeviDatum, p: int = 2) -> NilpotentRep:
    p = check_prime(p)
    index = IndexSet(d)
    n = len(index)
    e0 = np.zeros((n, n), dtype=np.int64)
    e1 = np.zeros((n, n), dtype=np.int64)
    for i, j, k in index:
        if k > 1:
            e0[index.position(i, j, k - 1), index.position(i, j, k)] = 1
    for j in range(1, d.m + 1):
        having = [i for i, mu in enumerate(d.block_partitions, start=1) if mu.part(j) > 0]
        for a, b in zip(having, having[1:]):
            top = d.block_partitions[a - 1].part(j)
            e1[index.position(a, j, top), index.position(b, j, 1)] = 1
    m0 = PrimeFieldMatrix(e0, p)
    m1 = PrimeFieldMatrix(e1, p)
    logger.debug("representative for %s: N=%d, p=%d", d, n, p)
    return NilpotentRep(d, index, m0, m1, m0 + m1)


# ── Spaltenstein's map ─────────────────────────────────────────────────────────

def check_in_fibre(e: PrimeFieldMatrix, flag: Flag) -> None:
    """Raise :class:`FibreMembershipError` at the first i with e F_i ⊄ F_{i-1}."""
    if e.shape != (flag.ambient, flag.ambient):
        raise DimensionError(f"operator of shape {e.shape} on a flag of {flag.ambient}-space")
    below = flag.space(0)
    for i in range(1, flag.ambient + 1):
        current = flag.space(i)
        images = (current.basis.data @ e.data.T) % e.p
        if any(below.reduce(v).any() for v in images):
            raise FibreMembershipError(i)
        below = current


def in_fibre(e: PrimeFieldMatrix, flag: Flag) -> bool:
    try:
        check_in_fibre(e, flag)
    except FibreMembershipError:
        return False
    return True


def spaltenstein_map(e: PrimeFieldMatrix, flag: Flag) -> StandardTableau:
    check_in_fibre(e, flag)
    types = [Partition()]
    for space in flag.chain():
        types.append(jordan_type(restrict(e, space)))
    return tableau_from_nested(NestedPartitionSequence(tuple(types)))


def blockwise_map(
    e0: PrimeFieldMatrix, d: LeviDatum, flags: Sequence[Flag]
) -> tuple[StandardTableau, ...]:
    """Φ_0 for an arbitrary block-diagonal e_0; flags are in block coordinates."""
    _check_block_flags(d, flags)
    out = []
    for start, size, flag in zip(d.offsets(), d.levi_shape.parts, flags):
        block = PrimeFieldMatrix(e0.data[start : start + size, start : start + size], e0.p)
        out.append(spaltenstein_map(block, flag))
    return tuple(out)


def blockwise_spaltenstein(rep: NilpotentRep, flags: Sequence[Flag]) -> tuple[StandardTableau, ...]:
    return blockwise_map(rep.e0, rep.datum, flags)


# ── Fibre enumeration ──────────────────────────────────────────────────────────

def fibre_estimate(lam: Partition, p: int) -> int:
    """|Std(λ)| · p^{dim 𝓑_e}: the leading term of the 𝔽_p point count."""
    return hook_length_count(lam) * p ** springer_fibre_dimension(lam)


@dataclass(frozen=True)
class FibreCounts:
    """Per-tableau flag counts of a Springer fibre, in ascending tableau order."""

    shape: Partition
    p: int
    total_flags: int
    classes: tuple[tuple[StandardTableau, int], ...]

    def count(self, sigma: StandardTableau) -> int:
        return dict(self.classes).get(sigma, 0)

    def empty_classes(self) -> list[StandardTableau]:
        return [sigma for sigma, n in self.classes if n == 0]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "p": self.p,
            "total_flags": self.total_flags,
            "classes": [{"tableau": sigma.to_json(), "count": n} for sigma, n in self.classes],
        }

    @classmethod
    def from_json(cls, data: dict) -> FibreCounts:
        classes = tuple(
            (StandardTableau.from_json(c["tableau"]), int(c["count"])) for c in data["classes"]
        )
        out = cls(Partition.from_json(data["shape"]), int(data["p"]), int(data["total_flags"]), classes)
        if sum(n for _, n in classes) != out.total_flags:
            raise TableauError("entries", "class counts do not add up to total_flags")
        return out


@dataclass
class FibreDecomposition:
    """The 𝔽_p-points of 𝓑_e grouped by their Spaltenstein tableau."""

    e: PrimeFieldMatrix
    p: int
    shape: Partition
    classes: dict[StandardTableau, list[Flag]]

    @property
    def total(self) -> int:
        return sum(len(flags) for flags in self.classes.values())

    def flags(self) -> Iterator[Flag]:
        for flags in self.classes.values():
            yield from flags

    def counts(self) -> FibreCounts:
        ordered = enumerate_standard(self.shape)
        return FibreCounts(
            self.shape,
            self.p,
            self.total,
            tuple((sigma, len(self.classes.get(sigma, ()))) for sigma in ordered),
        )

    def to_json(self) -> dict:
        return self.counts().to_json()


def iter_fibre(
    e: PrimeFieldMatrix, ceiling: int | None = None
) -> Iterator[tuple[Flag, StandardTableau]]:
    """Depth-first walk of 𝓑_e(𝔽_p), yielding each flag once with Φ of it.

    F_i runs over the lines of e^{-1}(F_{i-1}) / F_{i-1}. Jordan types of the
    partial flags are shared along the walk.
    """
    n = e.shape[0]
    if e.shape[1] != n:
        raise DimensionError(f"operator of shape {e.shape} is not square")
    lam = jordan_type(e)
    limit = get_settings().max_flags if ceiling is None else ceiling
    estimate = fibre_estimate(lam, e.p)
    if estimate > limit:
        raise CeilingExceededError(estimate, limit)
    logger.debug("enumerating fibre of type %s over F_%d (about %d flags)", lam, e.p, estimate)

    seen = 0
    spaces: list[Subspace] = []
    types: list[Partition] = [Partition()]

    def walk(below: Subspace) -> Iterator[tuple[Flag, StandardTableau]]:
        nonlocal seen
        if below.dim == n - 1:
            seen += 1
            if seen > limit:
                raise CeilingExceededError(seen, limit)
            types.append(lam)
            sigma = tableau_from_nested(NestedPartitionSequence(tuple(types)))
            types.pop()
            yield Flag(spaces, n, e.p, check=False), sigma
            return
        for space in enumerate_extensions(below, preimage(e, below)):
            spaces.append(space)
            types.append(jordan_type(restrict(e, space)))
            yield from walk(space)
            types.pop()
            spaces.pop()

    if n == 0:
        return
    if n == 1:
        yield Flag([], 1, e.p, check=False), StandardTableau(((1,),))
        return
    yield from walk(Subspace.zero(n, e.p))


def enumerate_fibre(
    e: PrimeFieldMatrix,
    p: int | None = None,
    ceiling: int | None = None,
    on_flag: Callable[[Flag, StandardTableau], None] | None = None,
) -> FibreDecomposition:
    """Every 𝔽_p-point of 𝓑_e, grouped by Φ."""
    if p is not None and p != e.p:
        raise DimensionError(f"operator is over F_{e.p}, not F_{p}")
    lam = jordan_type(e)
    classes: dict[StandardTableau, list[Flag]] = {}
    for flag, sigma in iter_fibre(e, ceiling):
        classes.setdefault(sigma, []).append(flag)
        if on_flag is not None:
            on_flag(flag, sigma)
    ordered = dict(sorted(classes.items(), key=lambda item: item[0].sort_key))
    decomposition = FibreDecomposition(e, e.p, lam, ordered)
    logger.info(
        "fibre of type %s over F_%d: %d flags in %d classes",
        lam, e.p, decomposition.total, len(ordered),
    )
    return decomposition


def random_fibre_flag(e: PrimeFieldMatrix, rng: np.random.Generator) -> Flag:
    """A point of 𝓑_e(𝔽_p) built one step at a time.

    F_i is a uniformly chosen line of e^{-1}(F_{i-1}) / F_{i-1}. Every point of
    the fibre has positive probability, though points are not equally likely
    unless each step offers the same number of lines.
    """
    n = e.shape[0]
    if e.shape[1] != n:
        raise DimensionError(f"operator of shape {e.shape} is not square")
    jordan_type(e)  # raises NotNilpotentError
    spaces: list[Subspace] = []
    below = Subspace.zero(n, e.p)
    for _ in range(n - 1):
        lines = list(enumerate_extensions(below, preimage(e, below)))
        below = lines[int(rng.integers(len(lines)))]
        spaces.append(below)
    return Flag(spaces, n, e.p, check=False)


def enumerate_blockwise_fibres(
    rep: NilpotentRep, ceiling: int | None = None
) -> tuple[FibreDecomposition, ...]:
    """The fibre of e_0|V_i for every block, in block coordinates."""
    limit = get_settings().max_flags if ceiling is None else ceiling
    estimate = math.prod(fibre_estimate(mu, rep.p) for mu in rep.datum.block_partitions)
    if estimate > limit:
        raise CeilingExceededError(estimate, limit, what="flag tuples")
    return tuple(
        enumerate_fibre(rep.block_operator(i), ceiling=limit) for i in range(1, rep.datum.n + 1)
    )


# ── The LS map ─────────────────────────────────────────────────────────────────

def _check_block_flags(d: LeviDatum, flags: Sequence[Flag]) -> None:
    if len(flags) != d.n:
        raise DimensionError(f"expected {d.n} block flags for {d}, got {len(flags)}")
    for i, (flag, size) in enumerate(zip(flags, d.levi_shape.parts), start=1):
        if flag.ambient != size:
            raise DimensionError(f"block {i} has dimension {size}, its flag has {flag.ambient}")
    if len({flag.p for flag in flags}) > 1:
        raise DimensionError("block flags over different fields")


def embed_flag(flag: Flag, offset: int, ambient: int) -> tuple[Subspace, ...]:
    """F_1, ..., F_dim of a block flag placed at ``offset`` in 𝔽_p^ambient."""
    return tuple(space.embed(offset, ambient) for space in flag.chain())


def ls_map(d: LeviDatum, flags: Sequence[Flag]) -> Flag:
    """F̄_i = W_{j-1} + F^{(j)}_k with Σ_{l<j} λ_l < i ≤ Σ_{l≤j} λ_l and k = i - Σ_{l<j} λ_l."""
    _check_block_flags(d, flags)
    n = d.weight
    p = flags[0].p if flags else 2
    spaces: list[Subspace] = []
    for start, flag in zip(d.offsets(), flags):
        w = Subspace.coordinate(range(start), n, p)
        spaces.extend(w + block for block in embed_flag(flag, start, n))
    return Flag(spaces, n, p, check=False)


def block_flags(d: LeviDatum, flag: Flag) -> tuple[Flag, ...]:
    """Recover the block flags of an LS image: F^{(j)}_k is F̄_i projected onto V_j."""
    if flag.ambient != d.weight:
        raise DimensionError(f"flag of {flag.ambient}-space for a datum of weight {d.weight}")
    out = []
    for start, size in zip(d.offsets(), d.levi_shape.parts):
        chain = [flag.space(start + k).project(start, start + size) for k in range(1, size)]
        out.append(Flag(chain, size, flag.p))
    return tuple(out)


def representative_flags(rep: NilpotentRep, tableaux: Sequence[StandardTableau]) -> tuple[Flag, ...]:
    """F^{(k)}_j = span of the v_{k,l,m} whose (l, m)-entry in tableaux[k] is at most j."""
    d = rep.datum
    if len(tableaux) != d.n:
        raise TableauError("shape", f"expected {d.n} tableaux for {d}, got {len(tableaux)}")
    out = []
    for k, (sigma, mu) in enumerate(zip(tableaux, d.block_partitions), start=1):
        if sigma.shape != mu:
            raise TableauError("shape", f"tableau {k} has shape {sigma.shape}, block {k} needs {mu}")
        start = rep.index_set.block_range(k).start
        # order[t] is the block coordinate of the box holding entry t+1
        order = [
            rep.index_set.position(k, *sigma.position(entry)) - start
            for entry in range(1, sigma.size + 1)
        ]
        out.append(Flag.coordinate(order, rep.p))
    return tuple(out)


def theorem_flag(rep: NilpotentRep, tableaux: Sequence[StandardTableau]) -> Flag:
    return ls_map(rep.datum, representative_flags(rep, tableaux))

