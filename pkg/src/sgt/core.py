"""Finite semigroups given by Cayley tables: constructors and classification."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


class RangeError(ValueError):
    pass


class AssociativityViolation(ValueError):
    def __init__(self, triple):
        i, j, k = triple
        super().__init__(f"({i}*{j})*{k} != {i}*({j}*{k})")
        self.triple = (i, j, k)


class DegreeMismatch(ValueError):
    pass


class NotAnIdeal(ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InternalAssertFailure(RuntimeError):
    """A theorem-guaranteed check failed; indicates an implementation bug."""


@dataclass(frozen=True)
class FiniteSemigroup:
    """Semigroup on {0, ..., size-1} with multiplication table[a][b] = a*b."""

    size: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    identity: int | None = field(default=None, compare=False)
    zero: int | None = field(default=None, compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.size)

    def idempotents(self) -> list[int]:
        return [x for x in range(self.size) if self.table[x][x] == x]

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)


@dataclass(frozen=True)
class Transformation:
    """Total map on {0, ..., degree-1}; composes left to right."""

    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.degree:
            raise DegreeMismatch(
                f"expected {self.degree} images, got {len(self.images)}")
        for v in self.images:
            if not 0 <= v < self.degree:
                raise RangeError(f"image {v} out of range for degree {self.degree}")

    def then(self, other: "Transformation") -> "Transformation":
        """self followed by other: x -> other(self(x))."""
        if other.degree != self.degree:
            raise DegreeMismatch("cannot compose transformations of different degree")
        return Transformation(self.degree, tuple(other.images[v] for v in self.images))


@dataclass(frozen=True)
class SubsetClosure:
    parent: FiniteSemigroup
    members: tuple[int, ...]
    closed: bool


def _detect_identity(table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    return None


def _detect_zero(table) -> int | None:
    n = len(table)
    for z in range(n):
        if all(table[z][x] == z == table[x][z] for x in range(n)):
            return z
    return None


def _first_nonassociative_triple(table) -> tuple[int, int, int] | None:
    t = np.asarray(table, dtype=np.int32)
    n = t.shape[0]
    # t[t[i]] is row-indexed: (t[t[i]])[j,k] = t[t[i,j], k]; t[i, t] gives t[i, t[j,k]].
    block = 64
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        left = t[t[lo:hi]]
        right = t[lo:hi][:, t]
        if not np.array_equal(left, right):
            i, j, k = np.argwhere(left != right)[0]
            return (int(i) + lo, int(j), int(k))
    return None


def from_cayley(n: int, rows: Sequence[Sequence[int]],
                labels: Sequence[str] | None = None) -> FiniteSemigroup:
    """Validate an n-by-n multiplication table and build the semigroup.

    Raises RangeError for malformed entries and AssociativityViolation
    (carrying the first failing triple) for non-associative tables.
    The identity and zero, when present, are detected and cached.
    """
    if n <= 0:
        raise RangeError("size must be positive")
    if len(rows) != n:
        raise RangeError(f"expected {n} rows, got {len(rows)}")
    table = []
    for row in rows:
        if len(row) != n:
            raise RangeError(f"expected {n} columns, got {len(row)}")
        for v in row:
            if not 0 <= int(v) < n:
                raise RangeError(f"entry {v} out of range [0, {n})")
        table.append(tuple(int(v) for v in row))
    table = tuple(table)
    bad = _first_nonassociative_triple(table)
    if bad is not None:
        raise AssociativityViolation(bad)
    if labels is not None:
        if len(labels) != n:
            raise RangeError("labels length must equal size")
        labels = tuple(str(x) for x in labels)
    return FiniteSemigroup(size=n, table=table, labels=labels,
                           identity=_detect_identity(table),
                           zero=_detect_zero(table))


def from_transformations(degree: int, gens: Sequence[Transformation]) -> FiniteSemigroup:
    """Close a nonempty set of transformations under left-to-right composition.

    Elements are indexed in discovery order: the generators first (in the
    given order, duplicates dropped), then breadth-first products in
    (element, generator) order.  Labels record a shortest generator word.
    """
    if not gens:
        raise DegreeMismatch("at least one generator required")
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(
                f"generator of degree {g.degree}, expected {degree}")
    elements: list[Transformation] = []
    index: dict[tuple[int, ...], int] = {}
    words: list[str] = []
    for gi, g in enumerate(gens):
        if g.images not in index:
            index[g.images] = len(elements)
            elements.append(g)
            words.append(f"g{gi}")
    pos = 0
    while pos < len(elements):
        x = elements[pos]
        for gi, g in enumerate(gens):
            y = x.then(g)
            if y.images not in index:
                index[y.images] = len(elements)
                elements.append(y)
                words.append(words[pos] + f"*g{gi}")
        pos += 1
    n = len(elements)
    table = [[index[elements[a].then(elements[b]).images] for b in range(n)]
             for a in range(n)]
    return from_cayley(n, table, labels=words)


def adjoin_identity(s: FiniteSemigroup, only_if_missing: bool = False) -> FiniteSemigroup:
    """Adjoin a two-sided identity as a new element at index size."""
    if only_if_missing and s.identity is not None:
        return s
    n = s.size
    table = [list(row) + [i] for i, row in enumerate(s.table)]
    table.append(list(range(n + 1)))
    labels = None
    if s.labels is not None:
        labels = list(s.labels) + ["1"]
    return from_cayley(n + 1, table, labels=labels)


def adjoin_zero(s: FiniteSemigroup, only_if_missing: bool = False) -> FiniteSemigroup:
    """Adjoin a two-sided zero as a new element at index size."""
    if only_if_missing and s.zero is not None:
        return s
    n = s.size
    table = [list(row) + [n] for row in s.table]
    table.append([n] * (n + 1))
    labels = None
    if s.labels is not None:
        labels = list(s.labels) + ["0"]
    return from_cayley(n + 1, table, labels=labels)


def direct_product(m: FiniteSemigroup, n: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; (i, j) sits at index i*|N| + j."""
    nn = n.size
    size = m.size * nn
    table = [[0] * size for _ in range(size)]
    for a in range(m.size):
        for b in range(nn):
            for c in range(m.size):
                for d in range(nn):
                    table[a * nn + b][c * nn + d] = m.table[a][c] * nn + n.table[b][d]
    labels = tuple(f"({m.label(a)},{n.label(b)})"
                   for a in range(m.size) for b in range(nn))
    return from_cayley(size, table, labels=labels)


def rees_quotient(s: FiniteSemigroup, ideal: Iterable[int]) -> FiniteSemigroup:
    """Collapse a two-sided ideal to a fresh zero (placed at the last index)."""
    ideal = set(ideal)
    if not ideal:
        raise NotAnIdeal("ideal must be nonempty")
    for v in ideal:
        if not 0 <= v < s.size:
            raise RangeError(f"ideal element {v} out of range")
    for a in ideal:
        for x in range(s.size):
            if s.table[a][x] not in ideal:
                raise NotAnIdeal(f"{a}*{x} escapes the ideal", pair=(a, x))
            if s.table[x][a] not in ideal:
                raise NotAnIdeal(f"{x}*{a} escapes the ideal", pair=(x, a))
    keep = [x for x in range(s.size) if x not in ideal]
    new_index = {x: i for i, x in enumerate(keep)}
    z = len(keep)
    n = z + 1
    table = [[z] * n for _ in range(n)]
    for a in keep:
        for b in keep:
            p = s.table[a][b]
            table[new_index[a]][new_index[b]] = new_index.get(p, z)
    labels = tuple(s.label(x) for x in keep) + ("0",)
    return from_cayley(n, table, labels=labels)


def sub_semigroup(s: FiniteSemigroup, members: Sequence[int]) -> FiniteSemigroup:
    """Restrict the table to a multiplicatively closed subset (given order)."""
    index = {x: i for i, x in enumerate(members)}
    for a in members:
        for b in members:
            if s.table[a][b] not in index:
                raise ValueError(f"subset not closed: {a}*{b} = {s.table[a][b]}")
    table = [[index[s.table[a][b]] for b in members] for a in members]
    labels = tuple(s.label(x) for x in members)
    return from_cayley(len(members), table, labels=labels)


def subsemigroup_closure(s: FiniteSemigroup, seed: Iterable[int]) -> SubsetClosure:
    """Smallest multiplicatively closed superset of seed."""
    members = set()
    for v in seed:
        if not 0 <= v < s.size:
            raise RangeError(f"seed element {v} out of range")
        members.add(v)
    queue = list(members)
    while queue:
        a = queue.pop()
        for b in list(members):
            for p in (s.table[a][b], s.table[b][a]):
                if p not in members:
                    members.add(p)
                    queue.append(p)
    return SubsetClosure(parent=s, members=tuple(sorted(members)), closed=True)


@dataclass(frozen=True)
class Classification:
    band: bool
    semilattice: bool
    commutative: bool
    group: bool
    monoid: bool
    has_zero: bool
    nilpotent: bool
    completely_regular: bool
    cryptogroup: bool
    left_simple: bool
    right_simple: bool
    simple: bool
    zero_simple: bool
    completely_simple: bool
    completely_zero_simple: bool

    def as_dict(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _is_nilpotent(s: FiniteSemigroup) -> bool:
    if s.zero is None:
        return False
    power = set(range(s.size))
    for _ in range(s.size):
        power = {s.table[a][b] for a in power for b in range(s.size)}
        if power == {s.zero}:
            return True
    return False


def _h_is_congruence(s: FiniteSemigroup, h_class: Sequence[int]) -> bool:
    n = s.size
    by_class: dict[int, list[int]] = {}
    for x in range(n):
        by_class.setdefault(h_class[x], []).append(x)
    for members in by_class.values():
        for a, b in zip(members, members[1:]):
            for t in range(n):
                if h_class[s.table[a][t]] != h_class[s.table[b][t]]:
                    return False
                if h_class[s.table[t][a]] != h_class[s.table[t][b]]:
                    return False
    return True


@lru_cache(maxsize=512)
def classify(s: FiniteSemigroup) -> Classification:
    """Compute the standard property flags by direct definition checks."""
    from . import green  # deferred: green builds FiniteSemigroup values

    n = s.size
    table = s.table
    idem = s.idempotents()
    band = len(idem) == n
    commutative = all(table[a][b] == table[b][a] for a in range(n) for b in range(a))
    full = set(range(n))
    latin = all(set(row) == full for row in table) and \
        all({table[a][b] for a in range(n)} == full for b in range(n))
    group = latin and len(idem) == 1

    gd = green.green_data(s)
    completely_regular = all(gd.h_class[x] == gd.h_class[table[x][x]] for x in range(n))
    num_l = len(set(gd.l_class))
    num_r = len(set(gd.r_class))
    num_j = len(set(gd.j_class))

    zero_simple = False
    if s.zero is not None and num_j == 2:
        z = s.zero
        z_alone = sum(1 for x in range(n) if gd.j_class[x] == gd.j_class[z]) == 1
        square_nonzero = any(table[a][b] != z for a in range(n) for b in range(n))
        zero_simple = z_alone and square_nonzero

    return Classification(
        band=band,
        semilattice=band and commutative,
        commutative=commutative,
        group=group,
        monoid=s.identity is not None,
        has_zero=s.zero is not None,
        nilpotent=_is_nilpotent(s),
        completely_regular=completely_regular,
        cryptogroup=completely_regular and _h_is_congruence(s, gd.h_class),
        left_simple=num_l == 1,
        right_simple=num_r == 1,
        simple=num_j == 1,
        zero_simple=zero_simple,
        completely_simple=num_j == 1 and completely_regular,
        completely_zero_simple=zero_simple,
    )
