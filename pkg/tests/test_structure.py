import itertools

import pytest

import oracles
from sgt.core import classify
from sgt.library import chain, cyclic, left_zero, nilpotent_n3, rectangular_band, right_zero, t2, trivial
from sgt.structure import (InvalidGroup, MismatchedInput, NotCommutative,
                           NotCompletelyRegular, NotCompletelySimple,
                           RaggedMatrix, archimedean_decomposition,
                           completeness_check, cr_decomposition,
                           diagonal_cyclic_witness, h_congruence_check,
                           rees_construct, rees_coordinates, rees_structure,
                           theta_congruence)
from sgt.verify import isomorphic


def test_rees_construct_rectangular_band():
    r = rees_structure(trivial(), 2, 2, [[0, 0], [0, 0]], with_zero=False)
    s = rees_construct(r)
    assert s.size == 4
    assert isomorphic(s, rectangular_band(2, 2), 8) is not None


def test_rees_construct_degenerate_group():
    r = rees_structure(cyclic(2), 1, 1, [[0]], with_zero=False)
    s = rees_construct(r)
    assert s.table == cyclic(2).table


def test_rees_construct_with_zero():
    r = rees_structure(trivial(), 2, 2, [[0, None], [None, 0]], with_zero=True)
    s = rees_construct(r)
    assert s.size == 5 and s.zero == 4
    # product formula by hand: (i1,g,j1)(i2,g,j2) = 0 iff p[j1][i2] = 0
    for a, (i1, j1) in enumerate(itertools.product(range(2), range(2))):
        for b, (i2, j2) in enumerate(itertools.product(range(2), range(2))):
            expect = 4 if r.p_matrix[j1][i2] is None else i1 * 2 + j2
            assert s.table[a][b] == expect
    assert classify(s).completely_zero_simple


def test_rees_construct_irregular_warns():
    r = rees_structure(trivial(), 2, 2, [[0, 0], [None, None]], with_zero=True)
    with pytest.warns(UserWarning):
        rees_construct(r)


def test_rees_structure_validation():
    with pytest.raises(InvalidGroup):
        rees_structure(chain(2), 1, 1, [[0]], with_zero=False)
    with pytest.raises(RaggedMatrix):
        rees_structure(trivial(), 2, 2, [[0, 0]], with_zero=False)
    with pytest.raises(ValueError):
        rees_structure(trivial(), 1, 1, [[None]], with_zero=False)


def test_theta_diagonal_pattern():
    r = rees_structure(trivial(), 2, 2, [[0, None], [None, 0]], with_zero=True)
    s = rees_construct(r)
    pattern, rho = theta_congruence(s, r)
    assert pattern.vectors == ((1, 0), (0, 1))
    assert rho.index == 3
    # brute-force class count over the 5 elements
    assert len(set(rho.class_of)) == 3
    assert oracles.is_right_compatible(s, rho.class_of)


def test_theta_all_nonzero():
    r = rees_structure(trivial(), 2, 3, [[0, 0], [0, 0], [0, 0]], with_zero=True)
    s = rees_construct(r)
    pattern, rho = theta_congruence(s, r)
    assert set(pattern.vectors) == {(1, 1)}
    assert rho.index == 2


def test_theta_repeated_rows():
    r = rees_structure(trivial(), 2, 3, [[0, None], [0, None], [None, 0]],
                       with_zero=True)
    s = rees_construct(r)
    pattern, rho = theta_congruence(s, r)
    assert rho.index == 3


def test_theta_mismatched_input():
    r = rees_structure(trivial(), 2, 2, [[0, None], [None, 0]], with_zero=True)
    with pytest.raises(MismatchedInput):
        theta_congruence(cyclic(5), r)
    r2 = rees_structure(trivial(), 2, 2, [[0, 0], [0, 0]], with_zero=False)
    with pytest.raises(MismatchedInput):
        theta_congruence(rees_construct(r2), r2)


def test_rees_coordinates_rectangular_band():
    struct, mapping = rees_coordinates(rectangular_band(2, 2))
    assert struct.group.size == 1
    assert struct.i_size == 2 and struct.j_size == 2
    assert all(v == 0 for row in struct.p_matrix for v in row)


def test_rees_coordinates_group():
    struct, mapping = rees_coordinates(cyclic(3))
    assert struct.group.size == 3 and struct.i_size == 1 and struct.j_size == 1


def test_rees_coordinates_right_zero():
    struct, mapping = rees_coordinates(right_zero(3))
    assert (struct.group.size, struct.i_size, struct.j_size) == (1, 1, 3)


def test_rees_coordinates_left_zero():
    struct, mapping = rees_coordinates(left_zero(3))
    assert (struct.group.size, struct.i_size, struct.j_size) == (1, 3, 1)


def test_rees_coordinates_rejects_non_simple():
    # note chain(2) itself is completely 0-simple (trivial group, 1x1 matrix)
    with pytest.raises(NotCompletelySimple):
        rees_coordinates(chain(3))
    with pytest.raises(NotCompletelySimple):
        rees_coordinates(nilpotent_n3())
    struct, _ = rees_coordinates(chain(2))
    assert struct.with_zero and struct.group.size == 1


def test_rees_coordinates_normalization():
    # first row and column of P are the identity where nonzero
    r = rees_structure(cyclic(2), 2, 2, [[0, 1], [1, 1]], with_zero=False)
    struct, _ = rees_coordinates(rees_construct(r))
    assert struct.p_matrix[0] == (struct.group.identity,) * struct.i_size
    for row in struct.p_matrix:
        assert row[0] == struct.group.identity


def test_rees_roundtrip_with_zero():
    r = rees_structure(cyclic(2), 2, 2, [[0, None], [None, 1]], with_zero=True)
    s = rees_construct(r)
    struct, mapping = rees_coordinates(s)
    rebuilt = rees_construct(struct)
    assert rebuilt.size == s.size
    for a in range(rebuilt.size):
        for b in range(rebuilt.size):
            assert mapping[rebuilt.table[a][b]] == s.table[mapping[a]][mapping[b]]


def test_cr_decomposition_band(lib):
    for name in ("chain3", "rb22", "lz3", "rz4"):
        s = lib[name]
        dec = cr_decomposition(s)
        assert classify(dec.semilattice).semilattice
        for sub in dec.component_tables:
            assert classify(sub).completely_simple
        # component map equals the J-classes
        from sgt.green import green_data
        assert dec.component_of == green_data(s).j_class


def test_cr_decomposition_group():
    dec = cr_decomposition(cyclic(2))
    assert len(dec.kind) == 1 and dec.semilattice.size == 1


def test_cr_decomposition_semilattice_is_itself():
    s = chain(2)
    dec = cr_decomposition(s)
    assert dec.semilattice.table == s.table
    assert all(len(m) == 1 for m in dec.components())


def test_cr_decomposition_rejects_non_cr():
    with pytest.raises(NotCompletelyRegular):
        cr_decomposition(nilpotent_n3())


def test_h_congruence_check_band_and_group():
    assert h_congruence_check(chain(3)) == (True, None)
    assert h_congruence_check(cyclic(4)) == (True, None)


def test_h_congruence_check_t2_witness():
    s = t2()
    ok, witness = h_congruence_check(s)
    # oracle: full scan both sides
    from sgt.green import green_data
    h = green_data(s).h_class
    expect = all(
        h[s.table[a][w]] == h[s.table[b][w]] and h[s.table[w][a]] == h[s.table[w][b]]
        for a in range(s.size) for b in range(s.size) if h[a] == h[b]
        for w in range(s.size))
    assert ok == expect == False
    a, b, w = witness
    assert h[a] == h[b]
    assert (h[s.table[a][w]] != h[s.table[b][w]]
            or h[s.table[w][a]] != h[s.table[w][b]])


def test_h_congruence_agrees_with_definition_oracle(lib):
    from sgt.green import green_data
    for s in lib.values():
        h = green_data(s).h_class
        expect = all(
            h[s.table[a][w]] == h[s.table[b][w]]
            and h[s.table[w][a]] == h[s.table[w][b]]
            for a in range(s.size) for b in range(s.size) if h[a] == h[b]
            for w in range(s.size))
        assert h_congruence_check(s)[0] == expect


def test_cryptogroup_cross_module_consistency(lib):
    for s in lib.values():
        flags = classify(s)
        assert flags.cryptogroup == (flags.completely_regular
                                     and h_congruence_check(s)[0])


def test_archimedean_two_chain():
    dec = archimedean_decomposition(chain(2))
    assert len(dec.kind) == 2
    # oracle: 0 is in 1*S^1 but no power of 1 reaches 0*S^1 = {0}
    s = chain(2)
    assert 0 in {s.table[1][x] for x in range(2)} | {1}
    assert all(p != 0 for p in [1])


def test_archimedean_group_single_component():
    dec = archimedean_decomposition(cyclic(4))
    assert len(dec.kind) == 1


def test_archimedean_nilpotent_single_component():
    dec = archimedean_decomposition(nilpotent_n3())
    assert len(dec.kind) == 1
    assert dec.semilattice.size == 1


def test_archimedean_rejects_noncommutative():
    with pytest.raises(NotCommutative):
        archimedean_decomposition(right_zero(3))


def test_archimedean_components_recheck(lib):
    for name, s in lib.items():
        if not classify(s).commutative:
            continue
        dec = archimedean_decomposition(s)
        assert classify(dec.semilattice).semilattice
        # within each component, mutual divisibility holds in the parent
        for members in dec.components():
            for a in members:
                for b in members:
                    powers = set()
                    p = a
                    for _ in range(s.size):
                        powers.add(p)
                        p = s.table[p][a]
                    ideal = {b} | {s.table[b][x] for x in range(s.size)}
                    assert powers & ideal, (name, a, b)


def test_completeness_check():
    ok, report = completeness_check(nilpotent_n3())
    assert ok and report == ((2,),)
    ok2, report2 = completeness_check(chain(2))
    assert ok2 and report2 == ((0,), (1,))
    for s in (cyclic(5), chain(3)):
        assert completeness_check(s)[0]


def test_diagonal_cyclic_witness(lib):
    assert diagonal_cyclic_witness(trivial()) == (0, 0)
    for name, s in lib.items():
        if s.size >= 2:
            assert diagonal_cyclic_witness(s) is None, name
