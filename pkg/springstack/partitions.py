"""
partitions.py — Partitions, compositions, Levi data and induced-orbit arithmetic.

A nilpotent orbit of gl_N is named by a partition of N (its Jordan type); a
Levi subalgebra gl_{λ_1} ⊕ ... ⊕ gl_{λ_n} by a composition λ of N; a nilpotent
orbit in the Levi by a LeviDatum, one partition μ_i ⊢ λ_i per block.

Inducing such an orbit to gl_N yields the partition μ^Σ whose j-th part is the
sum of the j-th parts of the μ_i (zero padded), see :func:`mu_sigma`.
"""

from __future__ import annotations

import functools
import itertools
import math
import numbers
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from springstack.errors import PartitionError


def _as_int_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, numbers.Real) or int(v) != v:
            raise PartitionError(f"{what} parts must be integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers. Trailing zeros are stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = list(_as_int_tuple(self.parts, "partition"))
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 1 for p in parts):
            raise PartitionError(f"partition parts must be positive: {parts}", parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"partition parts must be weakly decreasing: {parts}", parts)
        object.__setattr__(self, "parts", tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, j: int) -> int:
        """1-based part access with the convention that missing parts are 0."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def transpose(self) -> Partition:
        return transpose(self)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Partition:
        return cls(tuple(data))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse a comma-separated list such as ``"3,2,2"``."""
        return cls(_parse_ints(text))


@dataclass(frozen=True)
class Composition:
    """Tuple of positive integers in a fixed order (the Levi shape)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = _as_int_tuple(self.parts, "composition")
        if any(p < 1 for p in parts):
            raise PartitionError(f"composition parts must be positive: {list(parts)}", parts)
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def offsets(self) -> tuple[int, ...]:
        """``offsets()[k]`` is λ_1 + ... + λ_k (0-based k), so block k starts after it."""
        return tuple(itertools.accumulate(self.parts, initial=0))[:-1]

    def to_partition(self) -> Partition:
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Composition:
        return cls(tuple(data))

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(_parse_ints(text))


@dataclass(frozen=True)
class LeviDatum:
    """A Levi shape λ ⊨ N and a partition μ_i ⊢ λ_i for every block."""

    levi_shape: Composition
    block_partitions: tuple[Partition, ...]

    def __post_init__(self) -> None:
        blocks = tuple(
            b if isinstance(b, Partition) else Partition(tuple(b)) for b in self.block_partitions
        )
        shape = self.levi_shape
        if not isinstance(shape, Composition):
            shape = Composition(tuple(shape))
        if len(blocks) != shape.length:
            raise PartitionError(
                f"Levi shape {shape} has {shape.length} blocks but "
                f"{len(blocks)} block partitions were given"
            )
        for i, (mu, lam) in enumerate(zip(blocks, shape.parts), start=1):
            if mu.weight != lam:
                raise PartitionError(
                    f"block {i}: partition {mu} has weight {mu.weight}, expected λ_{i} = {lam}",
                    mu.parts,
                )
        object.__setattr__(self, "levi_shape", shape)
        object.__setattr__(self, "block_partitions", blocks)

    @classmethod
    def of(
        cls,
        blocks: Sequence[Partition | Sequence[int]],
        levi_shape: Sequence[int] | None = None,
    ) -> LeviDatum:
        """Build a datum from block partitions; λ defaults to their weights."""
        parts = tuple(b if isinstance(b, Partition) else Partition(tuple(b)) for b in blocks)
        shape = Composition(tuple(levi_shape) if levi_shape is not None else tuple(p.weight for p in parts))
        return cls(shape, parts)

    @property
    def n(self) -> int:
        return len(self.block_partitions)

    @property
    def m(self) -> int:
        return max((mu.length for mu in self.block_partitions), default=0)

    @property
    def weight(self) -> int:
        return self.levi_shape.weight

    def offsets(self) -> tuple[int, ...]:
        return self.levi_shape.offsets()

    def sub_datum(self, start: int, stop: int) -> LeviDatum:
        """Datum of the consecutive blocks ``start:stop`` (0-based, half-open)."""
        return LeviDatum(
            Composition(self.levi_shape.parts[start:stop]), self.block_partitions[start:stop]
        )

    def __str__(self) -> str:
        blocks = ";".join(",".join(map(str, mu.parts)) for mu in self.block_partitions)
        return f"λ={self.levi_shape} μ={blocks}"

    def to_json(self) -> dict[str, list]:
        return {
            "levi_shape": self.levi_shape.to_json(),
            "blocks": [mu.to_json() for mu in self.block_partitions],
        }

    @classmethod
    def from_json(cls, data: dict) -> LeviDatum:
        return cls.of([Partition.from_json(b) for b in data["blocks"]], data.get("levi_shape"))

    @classmethod
    def parse(cls, levi: str, levi_shape: str | None = None) -> LeviDatum:
        """Parse ``"3,3;2,2,1;1,1,1,1"`` with an optional ``"6,5,4"`` shape."""
        blocks = [Partition.parse(chunk) for chunk in levi.split(";")]
        shape = _parse_ints(levi_shape) if levi_shape else None
        return cls.of(blocks, shape)


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(chunk) for chunk in text.split(","))
    except ValueError:
        raise PartitionError(f"expected comma-separated integers, got {text!r}") from None


# ── Operations ─────────────────────────────────────────────────────────────────

def transpose(lam: Partition) -> Partition:
    """Conjugate partition: part j is the number of parts of λ that are ≥ j."""
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def mu_sigma(d: LeviDatum) -> Partition:
    """μ^Σ_j = Σ_i μ_{i,j} over all n blocks, zero padded to length m."""
    return Partition(
        tuple(sum(mu.part(j) for mu in d.block_partitions) for j in range(1, d.m + 1))
    )


def induced_partition_oracle(d: LeviDatum) -> Partition:
    """Induce through the zero orbit: concatenate the μ_i^⊤, sort into ν, return ν^⊤."""
    nu = sorted(
        (c for mu in d.block_partitions for c in transpose(mu).parts), reverse=True
    )
    return transpose(Partition(tuple(nu)))


def springer_fibre_dimension(lam: Partition) -> int:
    return sum(c * (c - 1) for c in transpose(lam).parts) // 2


def centraliser_dimension(lam: Partition) -> int:
    return sum(c * c for c in transpose(lam).parts)


def levi_centraliser_dimension(d: LeviDatum) -> int:
    """dim g_0^{e_0}: the centraliser dimension inside the Levi, summed over blocks."""
    return sum(centraliser_dimension(mu) for mu in d.block_partitions)


def levi_zero_datum(levi_shape: Composition) -> LeviDatum:
    """The zero orbit of the Levi: every block has partition (1, ..., 1)."""
    return LeviDatum(levi_shape, tuple(Partition((1,) * lam) for lam in levi_shape.parts))


def hook_length_count(lam: Partition) -> int:
    """Number of standard tableaux of shape λ by the hook length formula."""
    conj = transpose(lam)
    hooks = 1
    for i, row in enumerate(lam.parts, start=1):
        for j in range(1, row + 1):
            hooks *= (row - j) + (conj.part(j) - i) + 1
    return math.factorial(lam.weight) // hooks


# ── Enumeration ────────────────────────────────────────────────────────────────

def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order: (n), (n-1,1), ..."""
    if n < 0:
        raise PartitionError(f"cannot partition a negative integer: {n}")
    for parts in _partitions(n, n if max_part is None else max_part):
        yield Partition(parts)


def _partitions(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first, *rest)


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, largest first part first."""
    for parts in _compositions(n):
        yield Composition(parts)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _compositions(n - first):
            yield (first, *rest)


def enumerate_levi_data(n: int) -> Iterator[LeviDatum]:
    """Every Levi datum of weight ``n``: all compositions × all block partitions."""
    for shape in enumerate_compositions(n):
        for blocks in itertools.product(*(list(enumerate_partitions(lam)) for lam in shape.parts)):
            yield LeviDatum(shape, blocks)


def groupings(n: int) -> Iterator[tuple[int, ...]]:
    """Ways to cut ``n`` consecutive blocks into consecutive groups (compositions of n)."""
    yield from _compositions(n)


def group_bounds(grouping: Sequence[int]) -> list[tuple[int, int]]:
    starts = list(itertools.accumulate(grouping, initial=0))
    return list(zip(starts[:-1], starts[1:]))


def induce_in_stages(d: LeviDatum, grouping: Sequence[int]) -> Partition:
    """Induce each group of consecutive blocks first, then induce the results."""
    if sum(grouping) != d.n or any(g < 1 for g in grouping):
        raise PartitionError(f"grouping {tuple(grouping)} does not cut {d.n} blocks")
    inner = [d.sub_datum(a, b) for a, b in group_bounds(grouping)]
    outer = LeviDatum(
        Composition(tuple(sub.weight for sub in inner)), tuple(mu_sigma(sub) for sub in inner)
    )
    return mu_sigma(outer)


# ── Random sampling ────────────────────────────────────────────────────────────

@functools.lru_cache(maxsize=64)
def _partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n))


def random_partition(n: int, rng: np.random.Generator) -> Partition:
    """A partition of ``n`` drawn uniformly from all of them."""
    choices = _partition_list(n)
    return choices[int(rng.integers(len(choices)))]


def random_composition(n: int, rng: np.random.Generator) -> Composition:
    """Each of the n-1 cut points is used with probability 1/2."""
    cuts = [k for k in range(1, n) if rng.integers(2)]
    bounds = [0, *cuts, n]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def random_levi_datum(n: int, rng: np.random.Generator) -> LeviDatum:
    shape = random_composition(n, rng)
    return LeviDatum(shape, tuple(random_partition(lam, rng) for lam in shape.parts))
