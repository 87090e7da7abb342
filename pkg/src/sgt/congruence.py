"""Right congruences generated by pair sets, connecting sequences, enumeration."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import FiniteSemigroup, RangeError

#: Multiplier standing for the formal identity of S^1; serialized as "1".
FORMAL_IDENTITY = None


class CapExceeded(RuntimeError):
    def __init__(self, partial_count: int):
        super().__init__(f"congruence count exceeded cap (found {partial_count} so far)")
        self.partial_count = partial_count


class NotTwoSided(ValueError):
    def __init__(self, witness):
        a, b, t = witness
        super().__init__(f"left compatibility fails: {a} ~ {b} but {t}*{a} !~ {t}*{b}")
        self.witness = witness


@dataclass(frozen=True)
class PairSet:
    parent: FiniteSemigroup
    pairs: frozenset[tuple[int, int]]

    def symmetrized(self) -> frozenset[tuple[int, int]]:
        return self.pairs | {(y, x) for (x, y) in self.pairs}

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)


def pair_set(s: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> PairSet:
    out = set()
    for a, b in pairs:
        if not (0 <= a < s.size and 0 <= b < s.size):
            raise RangeError(f"pair ({a}, {b}) out of range")
        out.add((int(a), int(b)))
    return PairSet(parent=s, pairs=frozenset(out))


@dataclass(frozen=True)
class RightCongruence:
    parent: FiniteSemigroup
    class_of: tuple[int, ...]
    index: int

    def members(self, c: int) -> list[int]:
        return [x for x in range(self.parent.size) if self.class_of[x] == c]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.index)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]


def _canonical_classes(keys) -> tuple[int, ...]:
    seen: dict = {}
    out = []
    for k in keys:
        if k not in seen:
            seen[k] = len(seen)
        out.append(seen[k])
    return tuple(out)


def right_congruence(s: FiniteSemigroup, class_of: Iterable) -> RightCongruence:
    """Canonicalize a class map and check right compatibility."""
    labels = list(class_of)
    if len(labels) != s.size:
        raise RangeError("class map length must equal semigroup size")
    canon = _canonical_classes(labels)
    groups: dict[int, list[int]] = {}
    for x, c in enumerate(canon):
        groups.setdefault(c, []).append(x)
    for members in groups.values():
        for a, b in zip(members, members[1:]):
            for t in range(s.size):
                if canon[s.table[a][t]] != canon[s.table[b][t]]:
                    raise ValueError(
                        f"not right compatible: {a} ~ {b} but {a}*{t} !~ {b}*{t}")
    return RightCongruence(parent=s, class_of=canon, index=len(groups))


def identity_congruence(s: FiniteSemigroup) -> RightCongruence:
    return RightCongruence(parent=s, class_of=tuple(range(s.size)), index=s.size)


def universal_congruence(s: FiniteSemigroup) -> RightCongruence:
    return RightCongruence(parent=s, class_of=(0,) * s.size, index=1)


def rc_generate(s: FiniteSemigroup, x: PairSet | Iterable[tuple[int, int]],
                two_sided: bool = False) -> RightCongruence:
    """Smallest right (or two-sided) congruence containing the pairs.

    Union-find saturation: every union event is queued, and each queued pair
    is translated on the right by all elements (and on the left when
    two_sided) until the queue empties.
    """
    if not isinstance(x, PairSet):
        x = pair_set(s, x)
    n = s.size
    table = s.table
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    queue = deque()

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
            queue.append((a, b))

    for a, b in sorted(x.pairs):
        union(a, b)
    while queue:
        a, b = queue.popleft()
        ta, tb = table[a], table[b]
        for t in range(n):
            union(ta[t], tb[t])
        if two_sided:
            for t in range(n):
                union(table[t][a], table[t][b])
    canon = _canonical_classes(find(a) for a in range(n))
    return RightCongruence(parent=s, class_of=canon, index=len(set(canon)))


@dataclass(frozen=True)
class XStep:
    x: int
    y: int
    s: int | None  # FORMAL_IDENTITY for the formal multiplier


@dataclass(frozen=True)
class XSequence:
    parent: FiniteSemigroup
    a: int
    b: int
    steps: tuple[XStep, ...]

    def __len__(self):
        return len(self.steps)

    def check(self) -> bool:
        """Re-verify every step identity by direct multiplication."""
        def times(x, m):
            return x if m is FORMAL_IDENTITY else self.parent.table[x][m]

        if not self.steps:
            return self.a == self.b
        cur = self.a
        for st in self.steps:
            if times(st.x, st.s) != cur:
                return False
            cur = times(st.y, st.s)
        return cur == self.b


def _sequence_edges(s: FiniteSemigroup, x: PairSet):
    """Adjacency u -> sorted [(label, v)] with label = (x, y, s-key); s-key n is the formal identity."""
    n = s.size
    adj: dict[int, list[tuple[tuple[int, int, int], int]]] = {u: [] for u in range(n)}
    for (px, py) in sorted(x.symmetrized()):
        for m in range(n + 1):
            if m < n:
                u, v = s.table[px][m], s.table[py][m]
            else:
                u, v = px, py
            adj[u].append(((px, py, m), v))
    for u in range(n):
        adj[u].sort()
    return adj


def find_x_sequence(s: FiniteSemigroup, x: PairSet | Iterable[tuple[int, int]],
                    a: int, b: int) -> XSequence | None:
    """Shortest connecting sequence from a to b, or None when none exists.

    Among shortest sequences the lexicographically least list of step
    records (x, y, s) is returned, with the formal identity ordered after
    all real multipliers.
    """
    if not isinstance(x, PairSet):
        x = pair_set(s, x)
    if not (0 <= a < s.size and 0 <= b < s.size):
        raise RangeError("endpoints out of range")
    if a == b:
        return XSequence(parent=s, a=a, b=b, steps=())
    adj = _sequence_edges(s, x)
    n = s.size
    dist = [-1] * n
    dist[b] = 0
    frontier = deque([b])
    while frontier:
        u = frontier.popleft()
        for _, v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                frontier.append(v)
    if dist[a] < 0:
        return None
    steps = []
    u, remaining = a, dist[a]
    while remaining:
        for label, v in adj[u]:
            if dist[v] == remaining - 1:
                px, py, m = label
                steps.append(XStep(x=px, y=py, s=m if m < n else FORMAL_IDENTITY))
                u, remaining = v, remaining - 1
                break
        else:
            raise AssertionError("BFS tree walk lost the path")
    return XSequence(parent=s, a=a, b=b, steps=tuple(steps))


@dataclass(frozen=True)
class Disconnected:
    index: int


def rc_diameter(s: FiniteSemigroup, x: PairSet | Iterable[tuple[int, int]]) -> int | Disconnected:
    """Max over all pairs of the shortest connecting-sequence length.

    Defined only when the generated right congruence is universal; otherwise
    returns Disconnected carrying the actual index.
    """
    if not isinstance(x, PairSet):
        x = pair_set(s, x)
    rho = rc_generate(s, x)
    if rho.index != 1:
        return Disconnected(index=rho.index)
    adj = _sequence_edges(s, x)
    n = s.size
    best = 0
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        frontier = deque([src])
        while frontier:
            u = frontier.popleft()
            for _, v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    frontier.append(v)
        if min(dist) < 0:
            raise AssertionError("universal congruence but sequence graph disconnected")
        best = max(best, max(dist))
    return best


@dataclass(frozen=True)
class CongruenceLattice:
    parent: FiniteSemigroup
    congruences: tuple[RightCongruence, ...]

    def __len__(self):
        return len(self.congruences)


def linking_pairs(rho: RightCongruence) -> list[tuple[int, int]]:
    """One spanning pair set for the partition: first member to each other member."""
    out = []
    for members in rho.classes():
        out.extend((members[0], m) for m in members[1:])
    return out


def within_class_pairs(rho: RightCongruence) -> list[tuple[int, int]]:
    out = []
    for members in rho.classes():
        out.extend(itertools.combinations(members, 2))
    return out


def join(rho: RightCongruence, sigma: RightCongruence) -> RightCongruence:
    """Join by re-saturating the union of spanning pair sets."""
    return rc_generate(rho.parent, linking_pairs(rho) + linking_pairs(sigma))


def enumerate_right_congruences(s: FiniteSemigroup,
                                cap: int | None = None) -> CongruenceLattice:
    """All right congruences: principal ones closed under pairwise join.

    Every right congruence is the join of the principal congruences of its
    pairs, so the closure is exhaustive.  Raises CapExceeded as soon as the
    count passes the cap.
    """
    found: dict[tuple[int, ...], RightCongruence] = {}

    def add(rho):
        if rho.class_of not in found:
            found[rho.class_of] = rho
            if cap is not None and len(found) > cap:
                raise CapExceeded(len(found))
            return True
        return False

    add(identity_congruence(s))
    fresh = list(found.values())
    for a in range(s.size):
        for b in range(a + 1, s.size):
            rho = rc_generate(s, [(a, b)])
            if add(rho):
                fresh.append(rho)
    while fresh:
        rho = fresh.pop()
        for other in list(found.values()):
            j = join(rho, other)
            if add(j):
                fresh.append(j)
    ordered = sorted(found.values(), key=lambda r: (-r.index, r.class_of))
    return CongruenceLattice(parent=s, congruences=tuple(ordered))


def minimal_generating_pairs(s: FiniteSemigroup, rho: RightCongruence,
                             exact_limit: int = 12) -> tuple[PairSet, bool]:
    """A pair set generating rho, with an optimality flag.

    Candidates are the within-class pairs.  When there are at most
    exact_limit candidates the minimum-cardinality subset is found by
    iterative deepening (optimal=True); otherwise a greedy cover is built
    (optimal=False).
    """
    candidates = sorted(within_class_pairs(rho))
    if not candidates:
        return pair_set(s, []), True
    if len(candidates) <= exact_limit:
        for k in range(len(candidates) + 1):
            for combo in itertools.combinations(candidates, k):
                if rc_generate(s, combo).class_of == rho.class_of:
                    return pair_set(s, combo), True
        raise AssertionError("within-class pairs must generate their congruence")
    chosen: list[tuple[int, int]] = []
    current = rc_generate(s, chosen)
    while current.class_of != rho.class_of:
        best = None
        for c in candidates:
            if current.related(*c):
                continue
            trial = rc_generate(s, chosen + [c])
            gain = sum(1 for (a, b) in candidates
                       if trial.related(a, b) and not current.related(a, b))
            if best is None or gain > best[0]:
                best = (gain, c, trial)
        chosen.append(best[1])
        current = best[2]
    return pair_set(s, chosen), False


def quotient_semigroup(s: FiniteSemigroup, rho: RightCongruence) -> FiniteSemigroup:
    """Quotient by a two-sided congruence; classes keep their canonical order."""
    n = s.size
    cls = rho.class_of
    groups = rho.classes()
    for members in groups:
        for a, b in zip(members, members[1:]):
            for t in range(n):
                if cls[s.table[t][a]] != cls[s.table[t][b]]:
                    raise NotTwoSided((a, b, t))
                if cls[s.table[a][t]] != cls[s.table[b][t]]:
                    raise NotTwoSided((a, b, t))
    reps = [members[0] for members in groups]
    table = [[cls[s.table[ra][rb]] for rb in reps] for ra in reps]
    # well-definedness across representative choices
    for members in groups:
        for a in members:
            for j, rb in enumerate(reps):
                if cls[s.table[a][rb]] != table[cls[a]][j]:
                    raise NotTwoSided((reps[cls[a]], a, rb))
    labels = tuple("|".join(s.label(m) for m in members) for members in groups)
    from .core import from_cayley
    return from_cayley(rho.index, table, labels=labels)
