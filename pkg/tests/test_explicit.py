import numpy as np
import pytest

from ordersum import explicit as ex
from ordersum.abelian import AbelianGroup, order_type_of, psi
from ordersum.numcore import lcm, p_part, prime_set


def test_validate_rejects_garbage():
    with pytest.raises(ex.TableError):
        ex.validate_table([[0, 1]])
    with pytest.raises(ex.NoIdentityAtZero):
        ex.validate_table([[1, 0], [0, 1]])
    with pytest.raises(ex.NotLatinSquare):
        ex.validate_table([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
    with pytest.raises(ex.CapExceeded) as info:
        ex.validate_table(np.zeros((600, 600), dtype=int))
    assert info.value.order == 600 and info.value.cap == 512


def test_validate_rejects_nonassociative():
    # a Latin square with identity that is not a group table
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(ex.NotAssociative):
        ex.validate_table(table)


def test_constructors_are_groups():
    for g in (ex.cyclic(12), ex.dihedral(16), ex.dicyclic(8),
              ex.elementary_abelian(3, 2),
              ex.direct_product(ex.cyclic(4), ex.dihedral(6))):
        revalidated = ex.validate_table(g.table, label=g.label)
        assert revalidated.n == g.n


def test_constructor_argument_errors():
    with pytest.raises(ValueError):
        ex.dihedral(7)
    with pytest.raises(ValueError):
        ex.dihedral(2)
    with pytest.raises(ValueError):
        ex.dicyclic(6)
    with pytest.raises(ValueError):
        ex.cyclic(0)


def test_psi_tie_at_order_32():
    g = ex.direct_product(ex.cyclic(2), ex.dihedral(16))
    h = ex.direct_product(ex.cyclic(4), ex.dicyclic(8))
    assert g.psi() == h.psi() == 119
    assert g.order_type().entries == ((1, 1), (2, 19), (4, 4), (8, 8))
    assert h.order_type().entries == ((1, 1), (2, 3), (4, 28))
    assert not ex.is_lcm_group(g)
    assert ex.is_lcm_group(h)


def test_dihedral_dicyclic_order_types():
    assert ex.dihedral(16).order_type().entries == ((1, 1), (2, 9), (4, 2), (8, 4))
    assert ex.dicyclic(8).order_type().entries == ((1, 1), (2, 1), (4, 6))
    assert ex.dicyclic(8).psi() == 27
    assert ex.dihedral(6).exponent() == 6


def test_pairwise_lcm_matches_literal_definition():
    groups = [g for g in (
        ex.cyclic(k) for k in range(1, 13)
    )] + [ex.dihedral(n) for n in range(4, 25, 2)] + [
        ex.dicyclic(n) for n in range(8, 25, 4)
    ] + [ex.direct_product(ex.cyclic(2), ex.dihedral(8)),
         ex.direct_product(ex.cyclic(3), ex.dicyclic(8))]
    for g in groups:
        if g.n <= 24:
            assert ex.is_lcm_group(g) == ex.is_lcm_group_literal(g), g.label


def test_explicit_agrees_with_symbolic_abelian():
    from ordersum.abelian import enumerate_abelian

    for n in range(1, 129):
        for a in enumerate_abelian(n):
            g = ex.from_abelian(a)
            assert g.psi() == psi(a)
            assert g.order_type().entries == order_type_of(a).entries
            assert g.exponent() == a.exponent
            assert ex.is_lcm_group(g)  # abelian groups always are


def test_omega_levels():
    q8 = ex.dicyclic(8)
    assert ex.omega_level(q8, 2, 0) == frozenset({0})
    assert len(ex.omega_level(q8, 2, 1)) == 2
    assert len(ex.omega_level(q8, 2, 2)) == 8
    d8 = ex.dihedral(8)
    layer = ex.omega_level(d8, 2, 1)
    # identity + five involutions; not product-closed, so not a subgroup
    assert len(layer) == 6
    assert not ex._closed_under_product(d8, layer)
    with pytest.raises(ValueError):
        ex.omega_level(q8, 2, -1)


def test_structural_route_agrees_on_catalogue():
    groups = [ex.dihedral(n) for n in range(4, 33, 2)] + [
        ex.dicyclic(n) for n in range(8, 33, 4)
    ] + [ex.from_abelian(a)
         for n in range(1, 33)
         for a in __import__("ordersum.abelian", fromlist=["enumerate_abelian"]).enumerate_abelian(n)]
    for g in groups:
        assert ex.is_lcm_group(g) == ex.is_lcm_structural(g), g.label


def test_nilpotency_detection():
    assert ex.is_nilpotent(ex.dihedral(8))
    assert not ex.is_nilpotent(ex.dihedral(6))       # S3
    assert not ex.is_nilpotent(ex.dihedral(12))
    assert ex.is_nilpotent(ex.direct_product(ex.cyclic(3), ex.dicyclic(8)))
    assert ex.sylow_candidate(ex.dihedral(6), 2) is None
    syl3 = ex.sylow_candidate(ex.dihedral(6), 3)
    assert syl3 is not None and syl3.order == 3


def test_subgroup_validation():
    g = ex.cyclic(6)
    with pytest.raises(ValueError):
        ex.Subgroup(g, (1, 2))        # no identity
    with pytest.raises(ValueError):
        ex.Subgroup(g, (0, 1, 2, 3))  # Lagrange violation
    with pytest.raises(ValueError):
        ex.Subgroup(g, (0, 2))        # not closed (2+2=4 missing)
    sub = ex.Subgroup(g, (0, 2, 4))
    assert sub.order == 3 and sub.index == 2
    assert 2 in sub and 1 not in sub
    assert sub.psi() == 7
    assert sub.as_group().order_type().entries == ((1, 1), (3, 2))


def test_generated():
    d16 = ex.dihedral(16)
    rotations = ex.generated(d16, [1])
    assert rotations.members == tuple(range(8))
    whole = ex.generated(d16, [1, 8])
    assert whole.order == 16
    assert ex.generated(d16, []).members == (0,)


def test_quotient_and_normality():
    q8 = ex.dicyclic(8)
    center = ex.generated(q8, [2])  # {1, -1}
    assert center.members == (0, 2)
    quot = ex.quotient(q8, center)
    assert quot.order_type().entries == ((1, 1), (2, 3))  # C2 x C2
    s3 = ex.dihedral(6)
    reflection = ex.generated(s3, [3])
    with pytest.raises(ex.NotNormal) as info:
        ex.quotient(s3, reflection)
    assert 0 <= info.value.witness < 6
    labels = ex.coset_map(q8, center)
    for a in range(8):
        for b in range(8):
            assert labels[q8.mul(a, b)] == quot.mul(int(labels[a]), int(labels[b]))


def test_index_p_subgroup_counts():
    assert len(ex.index_p_subgroups(ex.cyclic(4), 2)) == 1
    assert len(ex.index_p_subgroups(ex.elementary_abelian(2, 2), 2)) == 3
    assert len(ex.index_p_subgroups(ex.elementary_abelian(3, 2), 3)) == 4
    assert len(ex.index_p_subgroups(ex.dihedral(16), 2)) == 3
    assert len(ex.index_p_subgroups(ex.cyclic(6), 2)) == 1
    assert len(ex.index_p_subgroups(ex.cyclic(6), 3)) == 1
    with pytest.raises(ValueError):
        ex.index_p_subgroups(ex.cyclic(6), 5)
    with pytest.raises(ex.CapExceeded):
        ex.index_p_subgroups(ex.cyclic(60), 2, max_order=32)


def test_index_p_fast_path_matches_search():
    # nilpotent fast path vs exhaustive closure search must agree exactly
    cases = [
        (ex.cyclic(12), 2), (ex.cyclic(12), 3),
        (ex.dihedral(8), 2), (ex.dicyclic(8), 2),
        (ex.dihedral(16), 2), (ex.elementary_abelian(2, 3), 2),
        (ex.direct_product(ex.cyclic(2), ex.cyclic(4)), 2),
        (ex.direct_product(ex.cyclic(3), ex.cyclic(9)), 3),
    ]
    for g, p in cases:
        fast = [s.members for s in ex._index_p_nilpotent(g, p)]
        slow = [s.members for s in ex._index_p_search(g, p)]
        assert sorted(fast) == sorted(slow), (g.label, p)


def test_index_p_on_non_nilpotent():
    s3 = ex.dihedral(6)
    subs = ex.index_p_subgroups(s3, 2)  # the rotation subgroup, index 2
    assert len(subs) == 1 and subs[0].members == (0, 1, 2)
    assert len(ex.index_p_subgroups(s3, 3)) == 3  # reflections, index 3


def test_p_part_decomposition():
    for g in (ex.cyclic(12), ex.direct_product(ex.cyclic(4), ex.cyclic(9)),
              ex.dihedral(12)):
        for elem in g.elements():
            for p in prime_set(g.n):
                gp, gp2 = ex.p_part_decomposition(g, elem, p)
                assert g.mul(gp, gp2) == elem
                assert g.mul(gp2, gp) == elem  # powers of elem commute
                assert g.element_order(gp) == p_part(g.element_order(elem), p)
                assert g.element_order(gp2) % p != 0


def test_coset_functions():
    g = ex.cyclic(8)
    sub = ex.generated(g, [4])  # {0, 4}
    # coset 1 + {0,4} = {1, 5}: orders 8, 8
    assert ex.coset_psi(1, sub) == 16
    assert ex.coset_order_min(1, sub) == 8
    assert ex.coset_exponent(1, sub) == 8
    assert ex.coset_order_type(2, sub) == ((4, 2),)
    assert ex.coset_order_type(0, sub) == ((1, 1), (2, 1))


def test_direct_product_structure():
    g = ex.direct_product(ex.cyclic(3), ex.cyclic(4))
    assert g.n == 12
    assert g.order_type().entries == order_type_of(AbelianGroup.cyclic(12)).entries
    # right factor occupies ids 0..3
    assert [g.element_order(i) for i in range(4)] == [1, 4, 2, 4]


def test_table_text_round_trip(tmp_path):
    g = ex.dihedral(8)
    text = ex.dump_table_text(g)
    back = ex.parse_table_text(text, label="D8")
    assert np.array_equal(back.table, g.table)
    with pytest.raises(ex.TableError):
        ex.parse_table_text("")
    with pytest.raises(ex.TableError):
        ex.parse_table_text("nope\n0 1\n1 0\n")
    with pytest.raises(ex.TableError):
        ex.parse_table_text("3\n0 1\n1 0\n")


def test_power_and_inverse():
    g = ex.dicyclic(8)
    for a in g.elements():
        assert g.mul(a, g.inv(a)) == 0
        assert g.power(a, g.element_order(a)) == 0
        assert g.power(a, -1) == g.inv(a)


def test_order_lcm_divisibility_everywhere():
    # the defining divisibility, brute force on an LCM group
    g = ex.direct_product(ex.cyclic(4), ex.dicyclic(8))
    o = g.orders
    for a in g.elements():
        for b in g.elements():
            assert lcm(int(o[a]), int(o[b])) % int(o[g.table[a, b]]) == 0
