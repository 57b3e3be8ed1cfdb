"""
tableaux.py — Standard Young tableaux, their total order, and the stacking map.

Entries and positions are 1-based everywhere a caller can see them.

The order on Std(λ) compares column words from the right: writing σ_i for the
column holding entry i, σ < τ when σ_i < τ_i at the largest i where the two
words differ. For λ = (3,2)::

    123 < 124 < 134 < 125 < 135
    45    35    25    34    24

Stacking glues a tuple of tableaux (one per Levi block) row by row: row i of
stk(T_1, ..., T_n) is row i of T_1, then row i of T_2 shifted by λ_1, then
row i of T_3 shifted by λ_1 + λ_2, and so on.
"""

from __future__ import annotations

import enum
import functools
import json
import numbers
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from springstack.errors import CeilingExceededError, TableauError
from springstack.partitions import (
    Composition,
    LeviDatum,
    Partition,
    group_bounds,
    hook_length_count,
)
from springstack.settings import get_settings


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@functools.total_ordering
@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a Young diagram. Construction validates it."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = _as_rows(self.rows)
        object.__setattr__(self, "rows", rows)
        _check_standard(rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @functools.cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        return {
            x: (i, j)
            for i, row in enumerate(self.rows, start=1)
            for j, x in enumerate(row, start=1)
        }

    def position(self, entry: int) -> tuple[int, int]:
        """1-based (row, column) of ``entry``."""
        try:
            return self._positions[entry]
        except KeyError:
            raise TableauError("range", f"entry {entry} is not in the tableau") from None

    def entry(self, row: int, column: int) -> int:
        return self.rows[row - 1][column - 1]

    @property
    def column_word(self) -> tuple[int, ...]:
        """σ_1 ... σ_N: the column of each entry."""
        return tuple(self._positions[i][1] for i in range(1, self.size + 1))

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(reversed(self.column_word))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, StandardTableau):
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data: object) -> StandardTableau:
        return cls(_as_rows(data))

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableauError("shape", f"not a JSON array of rows: {exc.msg}") from None
        return cls.from_json(data)


def _as_rows(rows: object) -> tuple[tuple[int, ...], ...]:
    if isinstance(rows, (str, bytes)) or not isinstance(rows, Iterable):
        raise TableauError("shape", f"a tableau is a sequence of rows, got {rows!r}")
    out = []
    for i, row in enumerate(rows, start=1):
        if isinstance(row, (str, bytes)) or not isinstance(row, Iterable):
            raise TableauError("shape", f"row {i} is not a sequence of entries: {row!r}")
        entries = []
        for j, x in enumerate(row, start=1):
            if isinstance(x, bool) or not isinstance(x, numbers.Integral):
                raise TableauError("entries", f"entries must be integers, got {x!r}", (i, j))
            entries.append(int(x))
        out.append(tuple(entries))
    return tuple(out)


def _check_standard(rows: tuple[tuple[int, ...], ...]) -> None:
    lengths = [len(r) for r in rows]
    if any(n == 0 for n in lengths):
        raise TableauError("shape", f"empty row in a tableau with row lengths {lengths}")
    for i in range(1, len(lengths)):
        if lengths[i] > lengths[i - 1]:
            raise TableauError(
                "shape", f"row lengths {lengths} are not weakly decreasing", (i + 1, lengths[i])
            )
    n = sum(lengths)
    entries = [x for r in rows for x in r]
    if sorted(entries) != list(range(1, n + 1)):
        dupes = sorted(x for x, c in Counter(entries).items() if c > 1)
        missing = sorted(set(range(1, n + 1)) - set(entries))
        detail = []
        if dupes:
            detail.append(f"duplicated {dupes}")
        if missing:
            detail.append(f"missing {missing}")
        out_of_range = sorted(x for x in set(entries) if not 1 <= x <= n)
        if out_of_range:
            detail.append(f"out of range {out_of_range}")
        raise TableauError("entries", f"entries must be 1..{n} once each: " + ", ".join(detail))
    for i, row in enumerate(rows, start=1):
        for j in range(1, len(row)):
            if row[j] <= row[j - 1]:
                raise TableauError("row", f"{row[j - 1]} then {row[j]} is not increasing", (i, j + 1))
    for i in range(1, len(rows)):
        for j, x in enumerate(rows[i], start=1):
            above = rows[i - 1][j - 1]
            if x <= above:
                raise TableauError("column", f"{above} above {x} is not increasing", (i + 1, j))


# ── Operations ─────────────────────────────────────────────────────────────────

def validate(
    rows: Sequence[Sequence[int]], shape: Partition | Sequence[int] | None = None
) -> StandardTableau:
    """Return the tableau for ``rows``, checking it has ``shape`` when given."""
    tab = StandardTableau(_as_rows(rows))
    if shape is not None:
        want = shape if isinstance(shape, Partition) else Partition(tuple(shape))
        if tab.shape != want:
            raise TableauError("shape", f"tableau has shape {tab.shape}, expected {want}")
    return tab


def compare(sigma: StandardTableau, tau: StandardTableau) -> Ordering:
    """Compare column words at the largest index where they differ."""
    if sigma.shape != tau.shape:
        raise TableauError(
            "shape", f"cannot compare tableaux of shapes {sigma.shape} and {tau.shape}"
        )
    for a, b in zip(reversed(sigma.column_word), reversed(tau.column_word)):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    return Ordering.EQUAL


def enumerate_standard(lam: Partition) -> list[StandardTableau]:
    """All of Std(λ), ascending in the column-word order."""
    limit = get_settings().max_tableau_n
    if lam.weight > limit:
        raise CeilingExceededError(hook_length_count(lam), limit, what=f"tableaux (N={lam.weight})")
    found = [StandardTableau(rows) for rows in _fillings(lam)]
    return sorted(found, key=lambda t: t.sort_key)


def _fillings(lam: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    rows: list[list[int]] = [[] for _ in lam.parts]
    n = lam.weight

    def place(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, target in enumerate(lam.parts):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                yield from place(k + 1)
                rows[i].pop()

    yield from place(1)


def stack(d: LeviDatum, tableaux: Sequence[StandardTableau]) -> StandardTableau:
    """The stacking map stk : Std(μ_1) × ... × Std(μ_n) → Std(μ^Σ)."""
    if len(tableaux) != d.n:
        raise TableauError("shape", f"expected {d.n} tableaux for {d}, got {len(tableaux)}")
    for k, (tab, mu) in enumerate(zip(tableaux, d.block_partitions), start=1):
        if tab.shape != mu:
            raise TableauError("shape", f"tableau {k} has shape {tab.shape}, block {k} needs {mu}")
    rows: list[list[int]] = [[] for _ in range(d.m)]
    for tab, offset in zip(tableaux, d.offsets()):
        for i, row in enumerate(shift(tab, offset)):
            rows[i].extend(row)
    return StandardTableau(tuple(tuple(r) for r in rows))


def shift(sigma: StandardTableau, k: int) -> tuple[tuple[int, ...], ...]:
    """The numbered diagram of sigma with every entry raised by k."""
    return tuple(tuple(x + k for x in row) for row in sigma.rows)


def stack_in_stages(
    d: LeviDatum, tableaux: Sequence[StandardTableau], grouping: Sequence[int]
) -> StandardTableau:
    """Stack each group of consecutive blocks, then stack the group results."""
    inner_data = [d.sub_datum(a, b) for a, b in group_bounds(grouping)]
    inner = [
        stack(sub, tableaux[a:b]) for sub, (a, b) in zip(inner_data, group_bounds(grouping))
    ]
    outer = LeviDatum(
        Composition(tuple(sub.weight for sub in inner_data)), tuple(t.shape for t in inner)
    )
    return stack(outer, inner)


def random_standard(lam: Partition, rng: np.random.Generator) -> StandardTableau:
    """Grow a tableau box by box, each time into a uniformly chosen available row."""
    rows: list[list[int]] = [[] for _ in lam.parts]
    for k in range(1, lam.weight + 1):
        available = [
            i
            for i, target in enumerate(lam.parts)
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i]))
        ]
        rows[available[int(rng.integers(len(available)))]].append(k)
    return StandardTableau(tuple(tuple(r) for r in rows))


def restrict_tableau(sigma: StandardTableau, i: int) -> StandardTableau:
    """The tableau formed by the boxes labelled 1, ..., i."""
    if not 1 <= i <= sigma.size:
        raise TableauError("range", f"cannot restrict a tableau of size {sigma.size} to {i}")
    rows = [tuple(x for x in row if x <= i) for row in sigma.rows]
    return StandardTableau(tuple(r for r in rows if r))


# ── Nested partition sequences ─────────────────────────────────────────────────

@dataclass(frozen=True)
class NestedPartitionSequence:
    """∅ = ν_0 ⊂ ν_1 ⊂ ... ⊂ ν_N, each step adding one box to an available row."""

    seq: tuple[Partition, ...]

    def __post_init__(self) -> None:
        seq = tuple(p if isinstance(p, Partition) else Partition(tuple(p)) for p in self.seq)
        object.__setattr__(self, "seq", seq)
        if not seq or seq[0].weight != 0:
            raise TableauError("nesting", "a nested sequence starts at the empty partition")
        for step in range(1, len(seq)):
            _added_row(seq[step - 1], seq[step], step)

    @property
    def size(self) -> int:
        return len(self.seq) - 1

    def to_json(self) -> list[list[int]]:
        return [p.to_json() for p in self.seq]


def _added_row(before: Partition, after: Partition, step: int) -> int:
    """0-based row of the single box ``after`` has over ``before``."""
    rows = max(before.length, after.length)
    grown = [j for j in range(1, rows + 1) if after.part(j) != before.part(j)]
    if len(grown) != 1 or after.part(grown[0]) != before.part(grown[0]) + 1:
        raise TableauError(
            "nesting", f"step {step}: {after} is not {before} with one box added"
        )
    return grown[0] - 1


def tableau_from_nested(s: NestedPartitionSequence) -> StandardTableau:
    """Entry i goes into the box added at step i."""
    rows: list[list[int]] = []
    for step in range(1, len(s.seq)):
        i = _added_row(s.seq[step - 1], s.seq[step], step)
        if i == len(rows):
            rows.append([])
        rows[i].append(step)
    return StandardTableau(tuple(tuple(r) for r in rows))


def nested_from_tableau(sigma: StandardTableau) -> NestedPartitionSequence:
    counts = [0] * len(sigma.rows)
    seq = [Partition()]
    for k in range(1, sigma.size + 1):
        counts[sigma.position(k)[0] - 1] += 1
        seq.append(Partition(tuple(counts)))
    return NestedPartitionSequence(tuple(seq))
