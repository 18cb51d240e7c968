import pytest

from hopfsmash.catalog import h8, h8_tau4_action, kC3_inversion_action, nichols8, nichols8_minus_id_action
from hopfsmash.exact_math import ExactMatrix
from hopfsmash.hopf_core import verify_hopf_axioms
from hopfsmash.representations import (
    RepresentationError,
    decompose_by_group,
    degree_of,
    direct_sum,
    dual_rep,
    extend_to_smash,
    regular_rep,
    restrict_to_algebra,
    restrict_to_component,
    split_by_degree,
    tensor_dual_grading_check,
    tensor_rep,
    trivial_rep,
    twist_rep,
    verify_representation,
)
from hopfsmash.smash import smash_coproduct, trivial_action


@pytest.fixture(scope="module")
def h8_smash():
    return smash_coproduct(h8_tau4_action())


@pytest.fixture(scope="module")
def M(h8_smash):
    return extend_to_smash(h8_smash, h8().representations["N"], 1)


class TestVerify:
    def test_n_is_valid(self):
        e = h8()
        N = e.representations["N"]
        assert verify_representation(e.algebra, N.matrices).rank == 2

    def test_trivial_everywhere(self):
        for e in (h8(), nichols8()):
            assert verify_representation(e.algebra, trivial_rep(e.algebra).matrices).rank == 1

    def test_bad_z(self):
        e = h8()
        H = e.algebra
        N = e.representations["N"]
        mats = list(N.matrices)
        # rebuild every basis matrix with z -> I2: words are products of x, y, z matrices
        X, Y, Z = mats[1], mats[2], ExactMatrix.identity(H.field, 2)
        words = {"1": [], "x": [X], "y": [Y], "xy": [X, Y], "z": [Z], "xz": [X, Z], "yz": [Y, Z], "xyz": [X, Y, Z]}
        bad = []
        for label in H.basis:
            acc = ExactMatrix.identity(H.field, 2)
            for m in words[label]:
                acc = acc @ m
            bad.append(acc)
        with pytest.raises(RepresentationError, match="rho"):
            verify_representation(H, bad)

    def test_wrong_count(self):
        H = h8().algebra
        with pytest.raises(RepresentationError):
            verify_representation(H, [ExactMatrix.identity(H.field, 1)] * 3)


class TestCharacters:
    def test_character_basics(self):
        e = h8()
        H, N = e.algebra, e.representations["N"]
        assert N.character(H.one()) == 2
        assert N.character(H.basis_element("z")) == 0
        T = trivial_rep(H)
        S = direct_sum(N, T)
        for i in range(H.dim):
            b = H.basis_element(i)
            assert S.character(b) == N.character(b) + T.character(b)

    def test_dual_of_n_same_character(self):
        e = h8()
        N = e.representations["N"]
        D = dual_rep(e.algebra, N)
        assert D.rank == N.rank
        assert D.character_vector() == N.character_vector()
        assert dual_rep(e.algebra, trivial_rep(e.algebra)).same_matrices(trivial_rep(e.algebra))

    def test_tensor(self):
        e = nichols8()
        H = e.algebra
        V = e.representations["V2"]
        T = tensor_rep(H, V, V)
        assert T.rank == 4
        verify_representation(H, T.matrices)
        assert tensor_rep(H, trivial_rep(H), V).same_matrices(V)
        for i in range(H.dim):
            expected = sum((V.matrices[j].trace() * V.matrices[k].trace() * c for j, k, c in H.comult_table[i]),
                           H.field.zero())
            assert T.matrices[i].trace() == expected

    @pytest.mark.parametrize("name", ["trivial", "sign", "V2"])
    def test_duals_are_representations(self, name):
        e = nichols8()
        verify_representation(e.algebra, dual_rep(e.algebra, e.representations[name]).matrices)


class TestTwist:
    def test_identity(self):
        act = h8_tau4_action()
        N = h8().representations["N"]
        assert twist_rep(act, N, 0).same_matrices(N)

    def test_composition_and_character(self):
        act = nichols8_minus_id_action()
        V = nichols8().representations["V2"]
        G, H = act.group, act.algebra
        for y in G:
            for z in G:
                assert twist_rep(act, twist_rep(act, V, z), y).same_matrices(twist_rep(act, V, G.mul(y, z)))
            tw = twist_rep(act, V, y)
            for i in range(H.dim):
                assert tw.character(H.basis_element(i)) == V.character(act.act(G.inverse(y), H.basis_element(i)))


class TestGrading:
    def test_example_module(self, h8_smash, M):
        dec = decompose_by_group(h8_smash, M)
        assert dec.dims() == {0: 0, 1: 2}
        assert degree_of(h8_smash, M) == 1

    def test_regular(self, h8_smash):
        dec = decompose_by_group(h8_smash, regular_rep(h8_smash.K))
        assert dec.dims() == {0: 8, 1: 8}

    def test_identity_degree_restricts_back(self, h8_smash):
        N = h8().representations["N"]
        M1 = extend_to_smash(h8_smash, N, 0)
        assert restrict_to_algebra(h8_smash, M1).same_matrices(N)
        assert restrict_to_component(h8_smash, M1, 1) is None
        assert restrict_to_component(h8_smash, M1, 0).same_matrices(N)

    def test_split_regular(self):
        sc = smash_coproduct(kC3_inversion_action())
        parts = split_by_degree(sc, regular_rep(sc.K))
        assert [x for x, _ in parts] == [0, 1]
        assert all(p.rank == 3 for _, p in parts)

    def test_wrong_algebra(self, h8_smash):
        with pytest.raises(RepresentationError):
            decompose_by_group(h8_smash, h8().representations["N"])


class TestTensorDualGrading:
    def test_example(self, h8_smash, M):
        T = tensor_rep(h8_smash.K, M, M)
        assert T.rank == 4 and degree_of(h8_smash, T) == 0
        assert degree_of(h8_smash, dual_rep(h8_smash.K, M)) == 1
        assert tensor_dual_grading_check(h8_smash, M, M).ok

    def test_all_single_degree_pairs(self):
        for make, reps in ((h8_tau4_action, h8().representations), (nichols8_minus_id_action, nichols8().representations)):
            sc = smash_coproduct(make())
            mods = [extend_to_smash(sc, r, x) for r in reps.values() for x in sc.G]
            for a in mods:
                for b in mods:
                    assert tensor_dual_grading_check(sc, a, b).ok

    def test_trivial_group(self):
        e = h8()
        sc = smash_coproduct(trivial_action(e.algebra))
        Ms = [extend_to_smash(sc, e.representations["N"], 0), extend_to_smash(sc, trivial_rep(e.algebra), 0)]
        assert all(tensor_dual_grading_check(sc, a, b).ok for a in Ms for b in Ms)

    def test_multi_degree_rejected(self, h8_smash):
        with pytest.raises(RepresentationError):
            tensor_dual_grading_check(h8_smash, regular_rep(h8_smash.K), regular_rep(h8_smash.K))

    def test_tensor_and_dual_are_representations(self, h8_smash, M):
        verify_representation(h8_smash.K, tensor_rep(h8_smash.K, M, M).matrices)
        verify_representation(h8_smash.K, dual_rep(h8_smash.K, M).matrices)
        assert verify_hopf_axioms(h8_smash.K).ok
