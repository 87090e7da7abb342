import pytest

from sgt.congruence import (identity_congruence, minimal_generating_pairs,
                            pair_set, rc_generate, universal_congruence)
from sgt.core import adjoin_zero, direct_product, sub_semigroup
from sgt.library import chain, cyclic, left_zero, rectangular_band, right_zero, t2, trivial
from sgt.verify import (NoInternalIdentity, NotGenerating, NotHomomorphism,
                        NotMonoids, NotRefinement, NotSurjective,
                        PreconditionFailed, SizeLimitExceeded, isomorphic,
                        sweep, two_sided_congruences, verify_dp_gens,
                        verify_extend_gens, verify_fg_gens, verify_ideal_gens,
                        verify_lclass_gens, verify_quotient_gens,
                        verify_schutz_gens)


def test_fg_universal_on_z2():
    s = cyclic(2)
    rep = verify_fg_gens(s, [1], universal_congruence(s))
    assert rep.passed
    assert (1, 0) in rep.built_pairs.pairs


def test_fg_identity_on_z2():
    s = cyclic(2)
    rep = verify_fg_gens(s, [1], identity_congruence(s))
    assert rep.passed
    assert all(a == b for a, b in rep.built_pairs.pairs)


def test_fg_right_zero():
    s = right_zero(3)
    rho = rc_generate(s, [(0, 1)])
    rep = verify_fg_gens(s, range(3), rho)
    assert rep.passed and rep.computed.class_of == rho.class_of


def test_fg_rejects_non_generating_set():
    with pytest.raises(NotGenerating):
        verify_fg_gens(cyclic(4), [2], universal_congruence(cyclic(4)))


def test_lclass_left_zero():
    s = left_zero(3)
    rep = verify_lclass_gens(s, pair_set(s, [(0, 1), (1, 2)]))
    assert rep.passed
    assert set(rep.built_elements) == {0, 1, 2}


def test_lclass_group():
    s = cyclic(3)
    rep = verify_lclass_gens(s, pair_set(s, [(0, 1)]))
    assert rep.passed
    # alpha with e = alpha*g is g^2; closure of {g^2, e} covers the group
    assert 2 in rep.built_elements


def test_lclass_right_zero_identity_relation():
    s = right_zero(3)
    rep = verify_lclass_gens(s, pair_set(s, []))
    assert rep.passed
    assert rep.built_elements == (0, 1, 2)


def test_lclass_precondition():
    s = cyclic(3)
    with pytest.raises(PreconditionFailed):
        verify_lclass_gens(s, pair_set(s, []))  # identity != universal = L


def test_dp_klein_universal():
    m = cyclic(2)
    p = direct_product(m, m)
    rep = verify_dp_gens(m, m, universal_congruence(p))
    assert rep.passed


def test_dp_trivial():
    t = trivial()
    p = direct_product(t, t)
    rep = verify_dp_gens(t, t, universal_congruence(p))
    assert rep.passed


def test_dp_projection_kernel():
    m = cyclic(2)
    n = chain(2)
    p = direct_product(m, n)
    from sgt.congruence import enumerate_right_congruences
    kernel = [r for r in enumerate_right_congruences(p).congruences
              if r.class_of == tuple(a // n.size for a in range(p.size))]
    assert kernel, "projection kernel must be enumerated"
    rep = verify_dp_gens(m, n, kernel[0])
    assert rep.passed


def test_dp_rejects_non_monoids():
    s = right_zero(2)
    p = direct_product(s, s)
    with pytest.raises(NotMonoids):
        verify_dp_gens(s, s, universal_congruence(p))


def test_schutz_cyclic_group():
    rep = verify_schutz_gens(cyclic(3), 0)
    assert rep.passed


def test_schutz_right_zero():
    rep = verify_schutz_gens(right_zero(2), 0)
    assert rep.passed


def test_schutz_rectangular_band():
    s = rectangular_band(2, 2)
    for x in range(4):
        assert verify_schutz_gens(s, x).passed


def test_quotient_identity_map():
    s = cyclic(3)
    theta = tuple(range(3))
    rep = verify_quotient_gens(s, s, theta, universal_congruence(s))
    assert rep.passed


def test_quotient_z4_to_z2():
    s = cyclic(4)
    t = cyclic(2)
    theta = (0, 1, 0, 1)
    rep = verify_quotient_gens(s, t, theta, universal_congruence(t))
    assert rep.passed


def test_quotient_chain_collapse():
    s = chain(3)
    rho2 = rc_generate(s, [(0, 1)], two_sided=True)
    from sgt.congruence import quotient_semigroup
    t = quotient_semigroup(s, rho2)
    rep = verify_quotient_gens(s, t, rho2.class_of, identity_congruence(t))
    assert rep.passed


def test_quotient_validation():
    s = cyclic(4)
    with pytest.raises(NotHomomorphism):
        verify_quotient_gens(s, cyclic(2), (0, 0, 1, 1), universal_congruence(cyclic(2)))
    with pytest.raises(NotSurjective):
        verify_quotient_gens(s, cyclic(2), (0, 0, 0, 0), universal_congruence(cyclic(2)))


def test_ideal_zero_adjoined_group():
    s = adjoin_zero(cyclic(2))
    isub = sub_semigroup(s, [2])
    rep = verify_ideal_gens(s, [2], 2, universal_congruence(isub))
    assert rep.passed


def test_ideal_chain_bottom():
    s = chain(2)
    isub = sub_semigroup(s, [0])
    rep = verify_ideal_gens(s, [0], 0, universal_congruence(isub))
    assert rep.passed


def test_ideal_product_example():
    m = cyclic(2)
    n = chain(2)
    p = direct_product(m, n)  # (a, b) at index a*2+b
    ideal = [0, 2]  # Z2 x {bottom}
    isub = sub_semigroup(p, ideal)
    rep = verify_ideal_gens(p, ideal, 0, universal_congruence(isub))
    assert rep.passed


def test_ideal_validation():
    s = chain(2)
    isub = sub_semigroup(s, [0])
    with pytest.raises(NoInternalIdentity):
        verify_ideal_gens(s, [0], 1, universal_congruence(isub))


def test_extend_identity_to_universal():
    s = cyclic(3)
    rep = verify_extend_gens(s, identity_congruence(s), universal_congruence(s))
    assert rep.passed


def test_extend_equal():
    s = cyclic(3)
    rho = universal_congruence(s)
    rep = verify_extend_gens(s, rho, rho)
    assert rep.passed
    assert rep.built_pairs.pairs == minimal_generating_pairs(s, rho)[0].pairs


def test_extend_z4_coset():
    s = cyclic(4)
    rho = rc_generate(s, [(0, 2)])
    rep = verify_extend_gens(s, rho, universal_congruence(s))
    assert rep.passed


def test_extend_rejects_non_refinement():
    s = cyclic(4)
    rho = rc_generate(s, [(0, 2)])
    sigma = identity_congruence(s)
    with pytest.raises(NotRefinement):
        verify_extend_gens(s, rho, sigma)


def test_full_pairs_flag_also_passes(lib):
    s = lib["rz3"]
    rho = rc_generate(s, [(0, 1)])
    assert verify_extend_gens(s, rho, universal_congruence(s), full_pairs=True).passed
    assert verify_schutz_gens(lib["z4"], 1, full_pairs=True).passed


def test_reports_reproducible():
    s = cyclic(3)
    a = verify_fg_gens(s, [1], universal_congruence(s), inputs="x")
    b = verify_fg_gens(s, [1], universal_congruence(s), inputs="x")
    assert a == b


def test_isomorphic_identity():
    s = t2()
    assert isomorphic(s, s, 8) == (0, 1, 2, 3)


def test_isomorphic_z4_vs_klein():
    z4 = cyclic(4)
    klein = direct_product(cyclic(2), cyclic(2))
    assert isomorphic(z4, klein, 8) is None


def test_isomorphic_rees_vs_band():
    from sgt.structure import rees_construct, rees_structure
    r = rees_structure(trivial(), 2, 2, [[0, 0], [0, 0]], with_zero=False)
    bij = isomorphic(rees_construct(r), rectangular_band(2, 2), 8)
    assert bij is not None
    s, t = rees_construct(r), rectangular_band(2, 2)
    for a in range(4):
        for b in range(4):
            assert bij[s.table[a][b]] == t.table[bij[a]][bij[b]]


def test_isomorphic_size_limit():
    with pytest.raises(SizeLimitExceeded):
        isomorphic(cyclic(9), cyclic(9), 8)
    assert isomorphic(cyclic(3), cyclic(4), 8) is None


def test_two_sided_congruences_right_zero():
    # in a right-zero semigroup left compatibility is automatic
    assert len(two_sided_congruences(right_zero(3))) == 5


def test_sweep_small_library_passes():
    small = {"z2": cyclic(2), "rz2": right_zero(2)}
    reports = sweep(size_limit=2, schutz_limit=2, dp_limit=2, lib=small)
    assert reports and all(r.passed for r in reports)
    constructions = {r.construction for r in reports}
    assert {"fg", "lclass", "extend", "quotient", "ideal", "schutz", "dp"} <= constructions


def test_fg_built_set_respects_size_bound(lib):
    from sgt.congruence import enumerate_right_congruences
    for name, s in lib.items():
        if s.size > 4:
            continue
        gens = list(range(s.size))
        for rho in enumerate_right_congruences(s).congruences:
            rep = verify_fg_gens(s, gens, rho)
            assert rep.passed
            assert len(rep.built_pairs) <= len(gens) * (1 + rho.index)


def test_extend_built_set_respects_size_bound():
    s = cyclic(4)
    rho = rc_generate(s, [(0, 2)])
    rep = verify_extend_gens(s, rho, universal_congruence(s))
    x, _ = minimal_generating_pairs(s, rho)
    assert len(rep.built_pairs) <= len(x) + rho.index * rho.index


def test_constructions_on_six_element_monoid():
    # beyond the exhaustive sweep size: spot runs on a larger instance
    z6 = cyclic(6)
    from sgt.congruence import enumerate_right_congruences
    congruences = enumerate_right_congruences(z6).congruences
    assert len(congruences) == 4  # divisors of 6
    for rho in congruences:
        assert verify_fg_gens(z6, [1], rho).passed
        assert verify_extend_gens(z6, rho, universal_congruence(z6)).passed
        assert verify_quotient_gens(z6, z6, tuple(range(6)), rho).passed
