"""Structure theory: Rees matrix semigroups, semilattice decompositions."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .core import (FiniteSemigroup, InternalAssertFailure, RangeError, classify,
                   from_cayley)
from .congruence import (NotTwoSided, RightCongruence, quotient_semigroup,
                         right_congruence)
from .green import green_data


class InvalidGroup(ValueError):
    pass


class RaggedMatrix(ValueError):
    pass


class MismatchedInput(ValueError):
    pass


class NotCompletelySimple(ValueError):
    pass


class NotCompletelyRegular(ValueError):
    pass


class NotCommutative(ValueError):
    pass


#: Sandwich-matrix entry standing for zero.
ZERO = None


@dataclass(frozen=True)
class ReesStructure:
    group: FiniteSemigroup
    i_size: int
    j_size: int
    p_matrix: tuple[tuple[int | None, ...], ...]  # j_size rows of i_size entries
    with_zero: bool

    def element_index(self, i: int, g: int, j: int) -> int:
        return (i * self.group.size + g) * self.j_size + j

    def triple_count(self) -> int:
        return self.i_size * self.group.size * self.j_size

    def is_regular(self) -> bool:
        """Every row and every column of P has a nonzero entry."""
        rows_ok = all(any(v is not ZERO for v in row) for row in self.p_matrix)
        cols_ok = all(any(row[i] is not ZERO for row in self.p_matrix)
                      for i in range(self.i_size))
        return rows_ok and cols_ok


def rees_structure(group: FiniteSemigroup, i_size: int, j_size: int,
                   p_matrix, with_zero: bool) -> ReesStructure:
    if not classify(group).group:
        raise InvalidGroup("structure group must be a group")
    if i_size <= 0 or j_size <= 0:
        raise RaggedMatrix("index sets must be nonempty")
    if len(p_matrix) != j_size:
        raise RaggedMatrix(f"expected {j_size} rows, got {len(p_matrix)}")
    rows = []
    for row in p_matrix:
        if len(row) != i_size:
            raise RaggedMatrix(f"expected {i_size} entries, got {len(row)}")
        for v in row:
            if v is ZERO:
                if not with_zero:
                    raise RangeError("zero entry in a structure without zero")
            elif not 0 <= v < group.size:
                raise RangeError(f"matrix entry {v} not a group element index")
        rows.append(tuple(row))
    return ReesStructure(group=group, i_size=i_size, j_size=j_size,
                         p_matrix=tuple(rows), with_zero=with_zero)


def _rees_table(r: ReesStructure) -> tuple[list[list[int]], list[str]]:
    ng = r.group.size
    jsz = r.j_size
    nt = r.triple_count()
    size = nt + 1 if r.with_zero else nt
    zero = nt
    gt = r.group.table
    pm = r.p_matrix
    triples = [(i, g, j) for i in range(r.i_size) for g in range(ng)
               for j in range(jsz)]
    labels = [f"({i},{r.group.label(g)},{j})" for i, g, j in triples]
    table = []
    for (i1, g1, j1) in triples:
        row = [0] * size
        base = i1 * ng
        prow = pm[j1]
        grow = gt[g1]
        for b, (i2, g2, j2) in enumerate(triples):
            p = prow[i2]
            if p is ZERO:
                row[b] = zero
            else:
                row[b] = (base + gt[grow[p]][g2]) * jsz + j2
        if r.with_zero:
            row[zero] = zero
        table.append(row)
    if r.with_zero:
        labels.append("0")
        table.append([zero] * size)
    return table, labels


def rees_construct(r: ReesStructure) -> FiniteSemigroup:
    """Matrix semigroup over r: triples (i, g, j) in lexicographic order,
    product (i1, g1*p[j1][i2]*g2, j2), plus a zero when requested.

    When P is regular the result is checked to be completely (0-)simple;
    otherwise a warning is issued and the check is skipped.
    """
    table, labels = _rees_table(r)
    s = from_cayley(len(table), table, labels=labels)
    if r.is_regular():
        flags = classify(s)
        want = flags.completely_zero_simple if r.with_zero else flags.completely_simple
        if not want:
            raise InternalAssertFailure("regular sandwich matrix did not yield a "
                                        "completely (0-)simple semigroup")
    else:
        warnings.warn("sandwich matrix is not regular; classification not checked",
                      stacklevel=2)
    return s


@dataclass(frozen=True)
class ThetaPattern:
    vectors: tuple[tuple[int, ...], ...]  # one 0/1 vector of length |I| per j


def theta_congruence(s: FiniteSemigroup, r: ReesStructure) -> tuple[ThetaPattern, RightCongruence]:
    """Per-column zero patterns of P and the right congruence they induce.

    Nonzero elements are related iff their third coordinates have equal
    patterns; the zero forms its own class.  The index always equals the
    number of distinct patterns plus one.
    """
    if not r.with_zero:
        raise MismatchedInput("theta congruence needs a structure with zero")
    table, _ = _rees_table(r)
    if s.size != len(table) or s.table != tuple(tuple(row) for row in table):
        raise MismatchedInput("semigroup was not constructed from this structure")
    vectors = tuple(tuple(1 if v is not ZERO else 0 for v in row)
                    for row in r.p_matrix)
    ng = r.group.size
    keys: list = []
    for i in range(r.i_size):
        for g in range(ng):
            for j in range(r.j_size):
                keys.append(vectors[j])
    keys.append("zero")
    rho = right_congruence(s, keys)
    if rho.index != len(set(vectors)) + 1:
        raise InternalAssertFailure("pattern count does not match congruence index")
    return ThetaPattern(vectors=vectors), rho


def _group_inverse(g: FiniteSemigroup, x: int) -> int:
    e = g.identity
    for y in range(g.size):
        if g.table[x][y] == e:
            return y
    raise InvalidGroup(f"element {x} has no inverse")


def rees_coordinates(s: FiniteSemigroup) -> tuple[ReesStructure, tuple[int, ...]]:
    """Coordinatize a completely (0-)simple semigroup as a matrix semigroup.

    Returns the structure and the element map from constructed indices to s,
    verified to be a bijective homomorphism by a full table check.  P is
    normalized so its first row and column are the group identity where
    nonzero.
    """
    flags = classify(s)
    if not (flags.completely_simple or flags.completely_zero_simple):
        raise NotCompletelySimple("input must be completely simple or completely 0-simple")
    with_zero = flags.completely_zero_simple
    gd = green_data(s)
    skip = {s.zero} if with_zero else set()

    idem = [x for x in s.idempotents() if x not in skip]
    e = min(idem)
    re_, le_ = gd.r_class[e], gd.l_class[e]

    def ordered_classes(class_of, first):
        ids = []
        for x in range(s.size):
            if x in skip:
                continue
            c = class_of[x]
            if c not in ids:
                ids.append(c)
        ids.remove(first)
        return [first] + ids

    r_ids = ordered_classes(gd.r_class, re_)
    l_ids = ordered_classes(gd.l_class, le_)
    i_size, j_size = len(r_ids), len(l_ids)

    g_members = [x for x in range(s.size)
                 if gd.r_class[x] == re_ and gd.l_class[x] == le_]
    g_index = {x: k for k, x in enumerate(g_members)}
    g_table = [[g_index[s.table[a][b]] for b in g_members] for a in g_members]
    group = from_cayley(len(g_members), g_table,
                        labels=[s.label(x) for x in g_members])

    # q_j in R_e /\ L_j, r_i in R_i /\ L_e, both smallest.
    q = [min(x for x in range(s.size) if x not in skip
             and gd.r_class[x] == re_ and gd.l_class[x] == lj) for lj in l_ids]
    rr = [min(x for x in range(s.size) if x not in skip
              and gd.r_class[x] == ri and gd.l_class[x] == le_) for ri in r_ids]

    def sandwich(qq, rrr):
        p = []
        for j in range(j_size):
            row = []
            for i in range(i_size):
                v = s.table[qq[j]][rrr[i]]
                row.append(g_index[v] if v in g_index else ZERO)
            p.append(row)
        return p

    p = sandwich(q, rr)
    for j in range(j_size):
        if p[j][0] is not ZERO:
            z = g_members[_group_inverse(group, p[j][0])]
            q[j] = s.table[z][q[j]]
    p = sandwich(q, rr)
    for i in range(i_size):
        if p[0][i] is not ZERO:
            w = g_members[_group_inverse(group, p[0][i])]
            rr[i] = s.table[rr[i]][w]
    p = sandwich(q, rr)

    struct = rees_structure(group, i_size, j_size, p, with_zero)
    mapping = []
    for i in range(i_size):
        for g in range(group.size):
            for j in range(j_size):
                mapping.append(s.table[s.table[rr[i]][g_members[g]]][q[j]])
    if with_zero:
        mapping.append(s.zero)
    mapping = tuple(mapping)

    table, _ = _rees_table(struct)
    if sorted(mapping) != list(range(s.size)):
        raise InternalAssertFailure("coordinate map is not a bijection")
    for a in range(s.size):
        for b in range(s.size):
            if mapping[table[a][b]] != s.table[mapping[a]][mapping[b]]:
                raise InternalAssertFailure("coordinate map is not a homomorphism")
    return struct, mapping


@dataclass(frozen=True)
class Decomposition:
    parent: FiniteSemigroup
    component_of: tuple[int, ...]
    semilattice: FiniteSemigroup
    kind: tuple[str, ...]
    component_tables: tuple[FiniteSemigroup, ...]

    def components(self) -> list[list[int]]:
        k = len(self.kind)
        out: list[list[int]] = [[] for _ in range(k)]
        for x, c in enumerate(self.component_of):
            out[c].append(x)
        return out


def _component_semigroup(s: FiniteSemigroup, members: list[int]) -> FiniteSemigroup:
    from .core import sub_semigroup
    try:
        return sub_semigroup(s, members)
    except ValueError as exc:
        raise InternalAssertFailure(f"component is not closed: {exc}")


def cr_decomposition(s: FiniteSemigroup) -> Decomposition:
    """Split a completely regular semigroup into completely simple components.

    Components are the J-classes; the quotient is checked to be a
    semilattice and every component to be completely simple.
    """
    if not classify(s).completely_regular:
        raise NotCompletelyRegular("input is not a union of groups")
    gd = green_data(s)
    try:
        rho = right_congruence(s, gd.j_class)
        quot = quotient_semigroup(s, rho)
    except (ValueError, NotTwoSided) as exc:
        raise InternalAssertFailure(f"J-classes are not a congruence: {exc}")
    if not classify(quot).semilattice:
        raise InternalAssertFailure("quotient by J-classes is not a semilattice")
    comps = rho.classes()
    tables = []
    for members in comps:
        sub = _component_semigroup(s, members)
        if not classify(sub).completely_simple:
            raise InternalAssertFailure("component is not completely simple")
        tables.append(sub)
    return Decomposition(parent=s, component_of=rho.class_of, semilattice=quot,
                         kind=("completely_simple",) * len(comps),
                         component_tables=tuple(tables))


def h_congruence_check(s: FiniteSemigroup) -> tuple[bool, tuple[int, int, int] | None]:
    """Is Green's H a two-sided congruence?  On failure return (a, b, t)."""
    gd = green_data(s)
    by_class: dict[int, list[int]] = {}
    for x in range(s.size):
        by_class.setdefault(gd.h_class[x], []).append(x)
    for members in by_class.values():
        for a, b in zip(members, members[1:]):
            for t in range(s.size):
                if gd.h_class[s.table[a][t]] != gd.h_class[s.table[b][t]]:
                    return False, (a, b, t)
                if gd.h_class[s.table[t][a]] != gd.h_class[s.table[t][b]]:
                    return False, (a, b, t)
    return True, None


def _divisibility(s: FiniteSemigroup):
    """Bitmask helpers: divides[a][b] iff a^n lies in b*S^1 for some n <= |S|."""
    n = s.size
    rmask = []
    for b in range(n):
        m = 1 << b
        for x in range(n):
            m |= 1 << s.table[b][x]
        rmask.append(m)
    powmask = []
    for a in range(n):
        m = 0
        p = a
        for _ in range(n):
            m |= 1 << p
            p = s.table[p][a]
        powmask.append(m)
    return rmask, powmask


def archimedean_decomposition(s: FiniteSemigroup) -> Decomposition:
    """Split a commutative semigroup along mutual divisibility.

    a and b share a component iff some power of each lies in the other's
    principal ideal.  Components are checked closed and archimedean; the
    quotient is checked to be a semilattice.
    """
    if not classify(s).commutative:
        raise NotCommutative("archimedean decomposition needs a commutative semigroup")
    n = s.size
    rmask, powmask = _divisibility(s)

    def divides(a, b):
        return powmask[a] & rmask[b] != 0

    comp = [-1] * n
    count = 0
    for a in range(n):
        for b in range(a):
            if divides(a, b) and divides(b, a):
                comp[a] = comp[b]
                break
        else:
            comp[a] = count
            count += 1
    try:
        rho = right_congruence(s, comp)
        quot = quotient_semigroup(s, rho)
    except (ValueError, NotTwoSided) as exc:
        raise InternalAssertFailure(f"components are not a congruence: {exc}")
    if not classify(quot).semilattice:
        raise InternalAssertFailure("divisibility quotient is not a semilattice")
    comps = rho.classes()
    tables = []
    for members in comps:
        sub = _component_semigroup(s, members)
        for a in members:
            for b in members:
                if not divides(a, b):
                    raise InternalAssertFailure("component is not archimedean")
        tables.append(sub)
    return Decomposition(parent=s, component_of=rho.class_of, semilattice=quot,
                         kind=("archimedean",) * len(comps),
                         component_tables=tuple(tables))


def completeness_check(s: FiniteSemigroup) -> tuple[bool, tuple[tuple[int, ...], ...]]:
    """Per archimedean component, the idempotents it contains."""
    dec = archimedean_decomposition(s)
    report = []
    for members in dec.components():
        report.append(tuple(x for x in members if s.table[x][x] == x))
    return all(report), tuple(report)


def diagonal_cyclic_witness(s: FiniteSemigroup) -> tuple[int, int] | None:
    """First (a, b) whose componentwise right orbit covers all of S x S."""
    n = s.size
    for a in range(n):
        ta = s.table[a]
        for b in range(n):
            tb = s.table[b]
            if len({(ta[t], tb[t]) for t in range(n)}) == n * n:
                return (a, b)
    return None
