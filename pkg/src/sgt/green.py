"""Green's relations, egg-box data, and Schuetzenberger groups."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSemigroup, InternalAssertFailure, from_cayley

#: Formal identity adjoined to S when acting on the right; never an element index.
FORMAL_IDENTITY = None


def _canonical(keys) -> tuple[int, ...]:
    seen: dict = {}
    out = []
    for k in keys:
        if k not in seen:
            seen[k] = len(seen)
        out.append(seen[k])
    return tuple(out)


@dataclass(frozen=True)
class GreenData:
    parent: FiniteSemigroup
    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    h_class: tuple[int, ...]
    d_class: tuple[int, ...]
    j_class: tuple[int, ...]
    group_h_classes: frozenset[int]

    def h_members(self, h: int) -> list[int]:
        return [x for x in range(self.parent.size) if self.h_class[x] == h]


@lru_cache(maxsize=256)
def green_data(s: FiniteSemigroup) -> GreenData:
    """Compute R, L, H, D and J as canonical class maps; asserts D = J."""
    n = s.size
    table = s.table
    rmask = [0] * n
    lmask = [0] * n
    for a in range(n):
        m = 1 << a
        for x in range(n):
            m |= 1 << table[a][x]
        rmask[a] = m
        m = 1 << a
        for x in range(n):
            m |= 1 << table[x][a]
        lmask[a] = m
    r_class = _canonical(rmask)
    l_class = _canonical(lmask)
    h_class = _canonical(zip(r_class, l_class))

    # D = transitive closure of R union L: merge every R-class and L-class.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    firsts_r: dict[int, int] = {}
    firsts_l: dict[int, int] = {}
    for x in range(n):
        if r_class[x] in firsts_r:
            union(firsts_r[r_class[x]], x)
        else:
            firsts_r[r_class[x]] = x
        if l_class[x] in firsts_l:
            union(firsts_l[l_class[x]], x)
        else:
            firsts_l[l_class[x]] = x
    d_class = _canonical(find(x) for x in range(n))

    jmask = []
    for a in range(n):
        m = lmask[a]
        acc = 0
        x = 0
        while m:
            if m & 1:
                acc |= rmask[x]
            m >>= 1
            x += 1
        jmask.append(acc)
    j_class = _canonical(jmask)
    if d_class != j_class:
        raise InternalAssertFailure("D != J on a finite semigroup")

    groups = frozenset(h_class[x] for x in range(n) if table[x][x] == x)
    return GreenData(parent=s, r_class=r_class, l_class=l_class, h_class=h_class,
                     d_class=d_class, j_class=j_class, group_h_classes=groups)


@dataclass(frozen=True)
class SchutzGroup:
    h_class: tuple[int, ...]
    stabilizer: tuple[int | None, ...]
    sigma_class_of: dict[int | None, int]
    group: FiniteSemigroup
    action_witness: dict[tuple[int, int], int]


def _act(s: FiniteSemigroup, h: int, m: int | None) -> int:
    return h if m is FORMAL_IDENTITY else s.table[h][m]


def schutzenberger(s: FiniteSemigroup, element: int) -> SchutzGroup:
    """Right stabilizer of the H-class of `element`, modulo pointwise equality.

    The stabilizer is taken inside S^1 (the formal identity is FORMAL_IDENTITY,
    listed last); the quotient is returned as an explicit group table.
    """
    gd = green_data(s)
    members = tuple(gd.h_members(gd.h_class[element]))
    hset = frozenset(members)

    stab: list[int | None] = []
    for m in range(s.size):
        if frozenset(s.table[h][m] for h in members) == hset:
            stab.append(m)
    stab.append(FORMAL_IDENTITY)

    def key(m):
        return tuple(_act(s, h, m) for h in members)

    class_of: dict[int | None, int] = {}
    keys: dict[tuple[int, ...], int] = {}
    reps: list[int | None] = []
    for m in stab:
        k = key(m)
        if k not in keys:
            keys[k] = len(keys)
            reps.append(m)
        class_of[m] = keys[k]

    def mul1(a, b):
        if a is FORMAL_IDENTITY:
            return b
        if b is FORMAL_IDENTITY:
            return a
        return s.table[a][b]

    size = len(reps)
    # products of stabilizer elements stay in the stabilizer
    table = [[class_of[mul1(reps[a], reps[b])] for b in range(size)]
             for a in range(size)]
    group = from_cayley(size, table)

    from .core import classify
    if not classify(group).group:
        raise InternalAssertFailure("stabilizer quotient is not a group")
    if size != len(members):
        raise InternalAssertFailure("stabilizer quotient size differs from |H|")

    witness = {(h, c): _act(s, h, reps[c]) for h in members for c in range(size)}
    return SchutzGroup(h_class=members, stabilizer=tuple(stab),
                       sigma_class_of=class_of, group=group,
                       action_witness=witness)


def maximal_subgroups(s: FiniteSemigroup) -> list[tuple[tuple[int, ...], FiniteSemigroup]]:
    """The group H-classes with their multiplication tables."""
    gd = green_data(s)
    out = []
    for h in sorted(gd.group_h_classes):
        members = gd.h_members(h)
        index = {x: i for i, x in enumerate(members)}
        table = [[index[s.table[a][b]] for b in members] for a in members]
        labels = tuple(s.label(x) for x in members)
        out.append((tuple(members), from_cayley(len(members), table, labels=labels)))
    return out
