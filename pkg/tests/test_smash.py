import pytest

from hopfsmash.catalog import (
    algebra_entry,
    automorphism_by_name,
    cyclic_group,
    h8,
    h8_tau4_action,
    kC3_inversion_action,
    nichols8_minus_id_action,
    symmetric_group_3,
)
from hopfsmash.hopf_core import dual, multiply, verify_hopf_axioms
from hopfsmash.integrals import left_integral
from hopfsmash.powers import exponent
from hopfsmash.smash import (
    ActionError,
    GroupError,
    GroupTable,
    component_idempotent,
    dual_group_algebra,
    duality_check,
    group_algebra,
    smash_coproduct,
    smash_product,
    trivial_action,
    verify_action,
)

ACTIONS = [kC3_inversion_action, h8_tau4_action, nichols8_minus_id_action]


def structure(H):
    return H.mult, H.comult, H.unit, H.counit, H.antipode


class TestGroupTable:
    def test_cyclic(self):
        G = cyclic_group(2)
        assert G.order == 2 and G.inverse(1) == 1

    def test_s3(self):
        G = symmetric_group_3()
        assert any(G.mul(x, y) != G.mul(y, x) for x in G for y in G)
        assert G.exponent() == 6
        assert all(G.mul(x, G.inverse(x)) == G.identity for x in G)

    @pytest.mark.parametrize("table", [[[0, 1], [0, 1]], [[0, 1, 2], [1, 2, 0]], [[1, 0], [0, 1]], [[0, 5], [5, 0]]])
    def test_invalid(self, table):
        with pytest.raises(GroupError):
            GroupTable(table)

    def test_non_associative(self):
        # a Latin square with identity 0 that is not associative
        t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        with pytest.raises(GroupError, match="associativity"):
            GroupTable(t)


class TestGroupAlgebras:
    def test_c2(self):
        H = group_algebra(cyclic_group(2))
        assert H.dim == 2 and verify_hopf_axioms(H).ok

    def test_s3_noncommutative_cocommutative(self):
        H = group_algebra(symmetric_group_3())
        basis = [H.basis_element(i) for i in range(6)]
        assert any(multiply(H, a, b) != multiply(H, b, a) for a in basis for b in basis)
        assert all(j == k for i in range(6) for j, k, _ in H.comult_table[i])

    def test_c4_exponent(self):
        assert exponent(group_algebra(cyclic_group(4))).value == 4

    def test_function_algebra(self):
        G = cyclic_group(2)
        K = dual_group_algebra(G)
        assert verify_hopf_axioms(K).ok
        assert structure(K) == structure(dual(group_algebra(G)))
        assert left_integral(K) == K.basis_element(0)


class TestActions:
    def test_inversion(self):
        act = kC3_inversion_action()
        assert act.group.order == 2

    def test_h8(self):
        act = h8_tau4_action()
        assert act.aut(1).matrix == h8().automorphisms["tau4"].matrix

    def test_homomorphism_failure(self):
        e = algebra_entry("kC5")
        tau = automorphism_by_name(e, "power:2")  # order 4, but placed on an element of order 2
        with pytest.raises(ActionError, match="homomorphism"):
            verify_action(e.algebra, cyclic_group(2), [e.algebra.identity_endo, tau.matrix])

    def test_identity_law(self):
        e = algebra_entry("kC3")
        inv = automorphism_by_name(e, "inversion").matrix
        with pytest.raises(ActionError, match="identity"):
            verify_action(e.algebra, cyclic_group(2), [inv, inv])

    def test_wrong_length(self):
        e = algebra_entry("kC3")
        with pytest.raises(ActionError):
            verify_action(e.algebra, cyclic_group(2), [e.algebra.identity_endo])


class TestSmashCoproduct:
    def test_trivial_group(self):
        A = h8().algebra
        sc = smash_coproduct(trivial_action(A))
        assert structure(sc.K) == structure(A)

    @pytest.mark.parametrize("make", ACTIONS)
    def test_axioms_and_dimension(self, make):
        act = make()
        sc = smash_coproduct(act)
        assert sc.K.dim == act.algebra.dim * act.group.order
        assert verify_hopf_axioms(sc.K).ok

    def test_flat_index(self):
        sc = smash_coproduct(kC3_inversion_action())
        assert sc.index(2, 1) == 5 and sc.split(5) == (2, 1)
        assert sc.K.basis[5] == "g^2♮p_g"

    def test_idempotents(self):
        sc = smash_coproduct(h8_tau4_action())
        K, G = sc.K, sc.G
        es = [component_idempotent(sc, x) for x in G]
        total = K.zero()
        for e in es:
            total = total + e
        assert total == K.one()
        for x in G:
            assert K.counit_of(es[x]) == (1 if x == G.identity else 0)
            for y in G:
                expected = es[x] if x == y else K.zero()
                assert multiply(K, es[x], es[y]) == expected


class TestSmashProduct:
    def test_trivial_group(self):
        A = h8().algebra
        assert structure(smash_product(trivial_action(A))) == structure(dual(A))

    @pytest.mark.parametrize("make", ACTIONS)
    def test_axioms_and_duality(self, make):
        act = make()
        assert verify_hopf_axioms(smash_product(act)).ok
        report = duality_check(act)
        assert report.equal, report.differences

    def test_trivial_group_duality(self):
        assert duality_check(trivial_action(h8().algebra)).equal
