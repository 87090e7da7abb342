"""Replays of the constructive generating-set arguments on finite instances.

Each verify_* operation builds a generating set exactly as the corresponding
construction prescribes and checks that it generates the claimed congruence
(or subsemigroup).  All representative choices use smallest-index
tie-breaking so reports are reproducible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (FiniteSemigroup, InternalAssertFailure, NotAnIdeal,
                   adjoin_identity, direct_product, sub_semigroup,
                   subsemigroup_closure)
from .congruence import (FORMAL_IDENTITY, PairSet, RightCongruence,
                         enumerate_right_congruences, minimal_generating_pairs,
                         pair_set, rc_generate, right_congruence,
                         within_class_pairs)
from .green import green_data, schutzenberger


class NotGenerating(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


class NotMonoids(ValueError):
    pass


class NotHomomorphism(ValueError):
    pass


class NotSurjective(ValueError):
    pass


class NoInternalIdentity(ValueError):
    pass


class NotRefinement(ValueError):
    pass


class SizeLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    construction: str
    inputs: str
    built_pairs: PairSet | None
    built_elements: tuple | None
    expected: RightCongruence | None
    computed: RightCongruence | None
    passed: bool
    distinguishing_pair: tuple[int, int] | None
    note: str = ""


def _distinguish(expected: RightCongruence, computed: RightCongruence):
    for a in range(expected.parent.size):
        for b in range(a + 1, expected.parent.size):
            if expected.related(a, b) != computed.related(a, b):
                return (a, b)
    return None


def _congruence_report(construction, inputs, built, expected, computed,
                       elements=None, note="") -> VerificationReport:
    passed = expected.class_of == computed.class_of
    return VerificationReport(
        construction=construction, inputs=inputs, built_pairs=built,
        built_elements=elements, expected=expected, computed=computed,
        passed=passed,
        distinguishing_pair=None if passed else _distinguish(expected, computed),
        note=note)


def _generating_pairs(rho: RightCongruence, full_pairs: bool) -> PairSet:
    if full_pairs:
        return pair_set(rho.parent, within_class_pairs(rho))
    return minimal_generating_pairs(rho.parent, rho)[0]


def verify_fg_gens(s: FiniteSemigroup, gens: Iterable[int], rho: RightCongruence,
                   inputs: str = "") -> VerificationReport:
    """Generator-indexed pair set for a finite-index congruence on <gens> = S."""
    gens = sorted(set(gens))
    if subsemigroup_closure(s, gens).members != tuple(range(s.size)):
        raise NotGenerating("given set does not generate the semigroup")
    alpha = [members[0] for members in rho.classes()]
    built = set()
    for x in gens:
        built.add((x, alpha[rho.class_of[x]]))
    for i in range(rho.index):
        for x in gens:
            ax = s.table[alpha[i]][x]
            built.add((ax, alpha[rho.class_of[ax]]))
    computed = rc_generate(s, built)
    return _congruence_report("fg", inputs, pair_set(s, built), rho, computed)


def _l_congruence(s: FiniteSemigroup) -> RightCongruence:
    return right_congruence(s, green_data(s).l_class)


def verify_lclass_gens(s: FiniteSemigroup, x: PairSet,
                       inputs: str = "") -> VerificationReport:
    """Element set built from a pair set generating the L-relation.

    For each (a, b) in the symmetrized set, the smallest alpha with
    a = alpha*b joins the class representatives; the formal identity is
    allowed as alpha and contributes nothing.
    """
    lrel = _l_congruence(s)
    if rc_generate(s, x).class_of != lrel.class_of:
        raise PreconditionFailed("pair set does not generate the L-relation")
    built = set()
    for (a, b) in sorted(x.symmetrized()):
        if a == b:
            continue
        alpha = next((c for c in range(s.size) if s.table[c][b] == a), None)
        if alpha is None:
            raise PreconditionFailed(f"no left factor: {a} not in S*{b}")
        built.add(alpha)
    for members in lrel.classes():
        built.add(members[0])
    closure = subsemigroup_closure(s, built)
    passed = closure.members == tuple(range(s.size))
    missing = sorted(set(range(s.size)) - set(closure.members))
    return VerificationReport(
        construction="lclass", inputs=inputs, built_pairs=x,
        built_elements=tuple(sorted(built)), expected=None, computed=None,
        passed=passed, distinguishing_pair=None,
        note="" if passed else f"unreached elements: {missing}")


def verify_dp_gens(m: FiniteSemigroup, n: FiniteSemigroup, rho: RightCongruence,
                   full_pairs: bool = False, inputs: str = "") -> VerificationReport:
    """Product generating set assembled from the two coordinate restrictions."""
    if m.identity is None or n.identity is None:
        raise NotMonoids("both factors must be monoids")
    p = direct_product(m, n)
    if rho.parent.table != p.table:
        raise ValueError("congruence does not live on the direct product")

    def idx(a, b):
        return a * n.size + b

    one_m, one_n = m.identity, n.identity
    rho_n = right_congruence(n, [rho.class_of[idx(one_m, b)] for b in range(n.size)])
    d_reps = [members[0] for members in rho_n.classes()]

    alpha: dict[tuple[int, int], int] = {}
    for j, dj in enumerate(d_reps):
        for a in range(m.size):
            key = (rho.class_of[idx(a, dj)], j)
            if key not in alpha:
                alpha[key] = a
    built = set()
    for (i, j), aij in alpha.items():
        for (i2, k), aik in alpha.items():
            if i == i2 and j != k:
                built.add((idx(aij, d_reps[j]), idx(aik, d_reps[k])))
    x = _generating_pairs(rho_n, full_pairs)
    for (a, b) in x:
        built.add((idx(one_m, a), idx(one_m, b)))
    for j, dj in enumerate(d_reps):
        rho_j = right_congruence(m, [rho.class_of[idx(a, dj)] for a in range(m.size)])
        xj = _generating_pairs(rho_j, full_pairs)
        for (a, b) in xj:
            built.add((idx(a, dj), idx(b, dj)))
    computed = rc_generate(p, built)
    expected = right_congruence(p, rho.class_of)
    return _congruence_report("dp", inputs, pair_set(p, built), expected, computed)


def verify_schutz_gens(s: FiniteSemigroup, element: int, full_pairs: bool = False,
                       inputs: str = "") -> VerificationReport:
    """Stabilizer-class generators for the group assigned to an H-class.

    Works over S with a fresh identity adjoined; the by-translate congruence
    is generated, and for each generating pair inside the R-class a
    stabilizer element realizing the translate is reduced to its class.
    """
    t = adjoin_identity(s)
    gdt = green_data(t)
    h_members = [v for v in range(s.size)
                 if gdt.h_class[v] == gdt.h_class[element]]
    r_set = frozenset(v for v in range(t.size)
                      if gdt.r_class[v] == gdt.r_class[element])
    keys = []
    for w in range(t.size):
        f = frozenset(t.table[h][w] for h in h_members)
        keys.append(("in", tuple(sorted(f))) if f <= r_set else ("out",))
    rho = right_congruence(t, keys)
    x = _generating_pairs(rho, full_pairs)

    sg = schutzenberger(s, element)
    h0 = h_members[0]
    a_classes = set()
    for (px, py) in sorted(x.symmetrized()):
        f = frozenset(t.table[h][px] for h in h_members)
        if not f <= r_set:
            continue
        target = t.table[h0][px]
        chosen = None
        for alpha in sg.stabilizer:
            ha = h0 if alpha is FORMAL_IDENTITY else s.table[h0][alpha]
            if t.table[ha][py] == target:
                chosen = alpha
                break
        if chosen is None:
            raise InternalAssertFailure("no stabilizer element realizes the translate")
        a_classes.add(sg.sigma_class_of[chosen])
    gamma = sg.group
    if a_classes:
        generated = subsemigroup_closure(gamma, sorted(a_classes)).members
    else:
        generated = (gamma.identity,)
    passed = generated == tuple(range(gamma.size))
    return VerificationReport(
        construction="schutz", inputs=inputs, built_pairs=x,
        built_elements=tuple(sorted(a_classes)), expected=None, computed=None,
        passed=passed, distinguishing_pair=None,
        note="" if passed else
        f"generated {len(generated)} of {gamma.size} classes")


def verify_quotient_gens(s: FiniteSemigroup, t: FiniteSemigroup,
                         theta: Sequence[int], rho_on_t: RightCongruence,
                         full_pairs: bool = False,
                         inputs: str = "") -> VerificationReport:
    """Push a pullback's generating set through a surjective homomorphism."""
    if len(theta) != s.size:
        raise NotHomomorphism("map length must equal source size")
    for a in range(s.size):
        for b in range(s.size):
            if theta[s.table[a][b]] != t.table[theta[a]][theta[b]]:
                raise NotHomomorphism(f"theta({a}*{b}) != theta({a})*theta({b})")
    if set(theta) != set(range(t.size)):
        raise NotSurjective("map does not cover the target")
    pulled = right_congruence(s, [rho_on_t.class_of[theta[a]] for a in range(s.size)])
    x = _generating_pairs(pulled, full_pairs)
    built = {(theta[a], theta[b]) for (a, b) in x}
    computed = rc_generate(t, built)
    return _congruence_report("quotient", inputs, pair_set(t, built),
                              rho_on_t, computed)


def ideal_subsemigroup(s: FiniteSemigroup, ideal: Iterable[int]) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Restrict s to a two-sided ideal; returns the semigroup and sorted members."""
    members = sorted(set(ideal))
    if not members:
        raise NotAnIdeal("ideal must be nonempty")
    mset = set(members)
    for a in members:
        for x in range(s.size):
            if s.table[a][x] not in mset:
                raise NotAnIdeal(f"{a}*{x} escapes the ideal", pair=(a, x))
            if s.table[x][a] not in mset:
                raise NotAnIdeal(f"{x}*{a} escapes the ideal", pair=(x, a))
    return sub_semigroup(s, members), tuple(members)


def verify_ideal_gens(s: FiniteSemigroup, ideal: Iterable[int], e: int,
                      rho_on_i: RightCongruence, full_pairs: bool = False,
                      inputs: str = "") -> VerificationReport:
    """Left-multiply a pullback's generating set into an ideal with identity e."""
    isub, members = ideal_subsemigroup(s, ideal)
    if e not in members:
        raise NoInternalIdentity("e must belong to the ideal")
    sub_index = {v: k for k, v in enumerate(members)}
    for v in members:
        if s.table[e][v] != v or s.table[v][e] != v:
            raise NoInternalIdentity(f"{e} is not an identity inside the ideal")
    if rho_on_i.parent.table != isub.table:
        raise ValueError("congruence does not live on the ideal subsemigroup")
    pulled = right_congruence(
        s, [rho_on_i.class_of[sub_index[s.table[e][a]]] for a in range(s.size)])
    x = _generating_pairs(pulled, full_pairs)
    built = {(sub_index[s.table[e][a]], sub_index[s.table[e][b]]) for (a, b) in x}
    computed = rc_generate(isub, built)
    expected = right_congruence(isub, rho_on_i.class_of)
    return _congruence_report("ideal", inputs, pair_set(isub, built),
                              expected, computed)


def verify_extend_gens(s: FiniteSemigroup, rho: RightCongruence,
                       sigma: RightCongruence, full_pairs: bool = False,
                       inputs: str = "") -> VerificationReport:
    """Extend a refinement's generating set by representative cross pairs."""
    for members in rho.classes():
        if len({sigma.class_of[v] for v in members}) != 1:
            raise NotRefinement("rho does not refine sigma")
    x = _generating_pairs(rho, full_pairs)
    alpha = [members[0] for members in rho.classes()]
    built = set(x.pairs)
    for i, ai in enumerate(alpha):
        for j, aj in enumerate(alpha):
            if i != j and sigma.related(ai, aj):
                built.add((ai, aj))
    computed = rc_generate(s, built)
    return _congruence_report("extend", inputs, pair_set(s, built), sigma, computed)


def _power_profile(s: FiniteSemigroup, x: int) -> tuple[int, int]:
    seen = {x: 1}
    p = x
    k = 1
    while True:
        p = s.table[p][x]
        k += 1
        if p in seen:
            return (seen[p], k - seen[p])  # (index, period)
        seen[p] = k


def _element_profile(s: FiniteSemigroup, x: int):
    right = {s.table[x][v] for v in range(s.size)} | {x}
    left = {s.table[v][x] for v in range(s.size)} | {x}
    return (s.table[x][x] == x, len(right), len(left), _power_profile(s, x))


def isomorphic(s: FiniteSemigroup, t: FiniteSemigroup,
               size_limit: int) -> tuple[int, ...] | None:
    """First table isomorphism found by profile-pruned backtracking, or None."""
    if s.size != t.size:
        return None
    if s.size > size_limit:
        raise SizeLimitExceeded(f"size {s.size} exceeds limit {size_limit}")
    n = s.size
    prof_s = [_element_profile(s, x) for x in range(n)]
    prof_t = [_element_profile(t, x) for x in range(n)]
    candidates = [[y for y in range(n) if prof_t[y] == prof_s[x]] for x in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def consistent(x, y):
        for a in range(x + 1):
            fa = mapping[a] if a < x else y
            for (u, v, fu, fv) in ((a, x, fa, y), (x, a, y, fa)):
                p = s.table[u][v]
                q = t.table[fu][fv]
                if mapping[p] != -1 and mapping[p] != q:
                    return False
        return True

    def backtrack(x):
        if x == n:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            if consistent(x, y) and backtrack(x + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if backtrack(0):
        return tuple(mapping)
    return None


def two_sided_congruences(s: FiniteSemigroup) -> list[RightCongruence]:
    out = []
    for rho in enumerate_right_congruences(s).congruences:
        ok = True
        for members in rho.classes():
            for a, b in zip(members, members[1:]):
                for w in range(s.size):
                    if rho.class_of[s.table[w][a]] != rho.class_of[s.table[w][b]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(rho)
    return out


def ideals_with_identity(s: FiniteSemigroup):
    """All two-sided ideals possessing an internal identity, with that identity."""
    out = []
    for size in range(1, s.size + 1):
        for subset in itertools.combinations(range(s.size), size):
            mset = set(subset)
            if any(s.table[a][x] not in mset or s.table[x][a] not in mset
                   for a in subset for x in range(s.size)):
                continue
            e = next((c for c in subset
                      if all(s.table[c][v] == v == s.table[v][c] for v in subset)),
                     None)
            if e is not None:
                out.append((subset, e))
    return out


def sweep(size_limit: int = 5, schutz_limit: int = 6, dp_limit: int = 3,
          lib: dict[str, FiniteSemigroup] | None = None) -> list[VerificationReport]:
    """Run every construction over the built-in library; returns all reports."""
    from .library import library
    if lib is None:
        lib = library()
    reports: list[VerificationReport] = []
    for name, s in lib.items():
        if s.size <= size_limit:
            lattice = enumerate_right_congruences(s).congruences
            gens = tuple(range(s.size))
            for k, rho in enumerate(lattice):
                reports.append(verify_fg_gens(s, gens, rho,
                                              inputs=f"{name} rho#{k}"))
            lrel = _l_congruence(s)
            xmin, _ = minimal_generating_pairs(s, lrel)
            reports.append(verify_lclass_gens(s, xmin, inputs=f"{name} minimal"))
            xfull = pair_set(s, within_class_pairs(lrel))
            reports.append(verify_lclass_gens(s, xfull, inputs=f"{name} full"))
            for a, rho in enumerate(lattice):
                for b, sigma in enumerate(lattice):
                    if all(len({sigma.class_of[v] for v in members}) == 1
                           for members in rho.classes()):
                        reports.append(verify_extend_gens(
                            s, rho, sigma, inputs=f"{name} rho#{a} sigma#{b}"))
            for k, rho2 in enumerate(two_sided_congruences(s)):
                from .congruence import quotient_semigroup
                t = quotient_semigroup(s, rho2)
                for k2, rho_t in enumerate(enumerate_right_congruences(t).congruences):
                    reports.append(verify_quotient_gens(
                        s, t, rho2.class_of, rho_t,
                        inputs=f"{name} mod#{k} rho#{k2}"))
            for ideal, e in ideals_with_identity(s):
                isub, _ = ideal_subsemigroup(s, ideal)
                for k2, rho_i in enumerate(enumerate_right_congruences(isub).congruences):
                    reports.append(verify_ideal_gens(
                        s, ideal, e, rho_i,
                        inputs=f"{name} ideal{list(ideal)} rho#{k2}"))
        if s.size <= schutz_limit:
            for el in range(s.size):
                reports.append(verify_schutz_gens(s, el, inputs=f"{name} el{el}"))
    monoids = [(name, s) for name, s in lib.items()
               if s.identity is not None and s.size <= dp_limit]
    for na, m in monoids:
        for nb, n2 in monoids:
            p = direct_product(m, n2)
            for k, rho in enumerate(enumerate_right_congruences(p).congruences):
                reports.append(verify_dp_gens(m, n2, rho,
                                              inputs=f"{na}x{nb} rho#{k}"))
    return reports
