import pytest

from hopfsmash.catalog import (
    algebra_entry,
    h8,
    h8_tau4_action,
    nichols8,
    nichols8_automorphism,
    nichols8_minus_id_action,
)
from hopfsmash.exact_math import FieldSpec
from hopfsmash.indicators import (
    graded_indicator_check,
    module_indicator,
    p_map,
    regular_twisted_indicator,
    smash_indicator_check,
    twisted_module_indicator,
)
from hopfsmash.integrals import NotSemisimpleError, normalized_integral
from hopfsmash.powers import identity_automorphism
from hopfsmash.representations import direct_sum, extend_to_smash, regular_rep, trivial_rep
from hopfsmash.smash import smash_coproduct, trivial_action

from helpers import sweedler_power

ORDER_TWO = [(1, 0, 0, 1), (-1, 0, 0, -1), (1, 0, 0, -1), (0, 1, 1, 0), (0, -1, -1, 0), (-1, 0, 0, 1)]


@pytest.fixture(scope="module")
def h8_smash():
    return smash_coproduct(h8_tau4_action())


class TestPMap:
    def test_m1(self):
        H = h8().algebra
        assert p_map(H, 1, identity_automorphism(H)) == H.unit_counit

    def test_m2_identity(self):
        H = h8().algebra
        assert p_map(H, 2, identity_automorphism(H)).is_identity()

    def test_m3_group_algebra(self):
        H = algebra_entry("kC5").algebra
        P = p_map(H, 3, identity_automorphism(H))
        for k in range(5):
            assert P.column(k) == H.basis_element(2 * k % 5).coords


class TestRegular:
    def test_kC2(self):
        assert regular_twisted_indicator(algebra_entry("kC2").algebra, 2).value == 2

    def test_four_methods_reported(self):
        v = regular_twisted_indicator(nichols8().algebra, 3)
        assert v.value == 9
        assert set(v.methods) == {"trace", "left_integral", "right_right", "left_left"}

    def test_nichols8_det_minus_one(self):
        n = nichols8()
        assert regular_twisted_indicator(n.algebra, 2, nichols8_automorphism(1, 0, 0, -1, n)).value == 0

    @pytest.mark.parametrize("abcd", ORDER_TWO)
    def test_closed_form_order_two(self, abcd):
        n = nichols8()
        tau = nichols8_automorphism(*abcd, n)
        a, b, c, d = abcd
        det = a * d - b * c
        for m in (2, 4, 6):
            assert regular_twisted_indicator(n.algebra, m, tau).value == m * m * (1 + det) // 2

    @pytest.mark.parametrize("field,abcd", [
        (1, (1, 0, 0, 1)), (1, (0, -1, 1, -1)), (1, (-1, 1, -1, 0)),
        (3, ("z", 0, 0, "z^2")), (3, ("z", 0, 0, "z")), (3, (1, 0, 0, "z")), (3, ("z", 1, 0, 1)),
    ])
    def test_closed_form_order_three(self, field, abcd):
        F = FieldSpec(field)
        n = nichols8(F)
        tau = nichols8_automorphism(*abcd, n)
        a, b, c, d = (F.scalar(v) for v in abcd)
        tr, det = a + d, a * d - b * c
        expected = (tr + det) ** 2 + (tr + 1) * (1 - det)
        assert regular_twisted_indicator(n.algebra, 3, tau).value == expected

    @pytest.mark.parametrize("name", ["h8", "kS3", "k^S3", "kC4"])
    def test_matches_regular_module_indicator(self, name):
        H = algebra_entry(name).algebra
        R = regular_rep(H)
        for m in range(1, 5):
            assert regular_twisted_indicator(H, m).value == module_indicator(H, R, m).value

    def test_m1_convention(self):
        assert regular_twisted_indicator(nichols8().algebra, 1).value == 1


class TestModule:
    def test_trivial(self):
        H = h8().algebra
        T = trivial_rep(H)
        for m in range(1, 5):
            assert module_indicator(H, T, m).value == 1
            assert twisted_module_indicator(H, T, m, identity_automorphism(H)).value == 1

    def test_twisted_N(self):
        e = h8()
        assert twisted_module_indicator(e.algebra, e.representations["N"], 2, e.automorphisms["tau4"]).value == -1

    def test_N_untwisted_matches_sweedler(self):
        e = h8()
        H, N = e.algebra, e.representations["N"]
        L = normalized_integral(H)
        assert module_indicator(H, N, 2).value == N.character(sweedler_power(H, L, 2))

    def test_non_semisimple_guard(self):
        n = nichols8()
        with pytest.raises(NotSemisimpleError):
            module_indicator(n.algebra, n.representations["V2"], 2)

    def test_example_module(self, h8_smash):
        M = extend_to_smash(h8_smash, h8().representations["N"], 1)
        assert module_indicator(h8_smash.K, M, 2).value == -1
        assert module_indicator(h8_smash.K, M, 1).value == 0

    def test_additive(self, h8_smash):
        K = h8_smash.K
        M = extend_to_smash(h8_smash, h8().representations["N"], 1)
        T = trivial_rep(K)
        for m in (1, 2, 3):
            assert module_indicator(K, direct_sum(M, T), m).value == \
                module_indicator(K, M, m).value + module_indicator(K, T, m).value


class TestGraded:
    def test_example(self, h8_smash):
        M = extend_to_smash(h8_smash, h8().representations["N"], 1)
        r = graded_indicator_check(h8_smash, M, 2)
        assert r.lhs == r.rhs == -1

    def test_regular(self, h8_smash):
        r = graded_indicator_check(h8_smash, regular_rep(h8_smash.K), 2)
        assert r.equal

    def test_single_degree_below_order(self, h8_smash):
        M = extend_to_smash(h8_smash, h8().representations["N"], 1)
        r = graded_indicator_check(h8_smash, M, 1)
        assert r.lhs == 0 and r.equal


class TestSmashRegular:
    def test_nichols8(self):
        act = nichols8_minus_id_action()
        for m, v in ((2, 8), (4, 32)):
            r = smash_indicator_check(act, m)
            assert r.lhs == r.rhs == v

    def test_odd_m_only_identity(self):
        r = smash_indicator_check(nichols8_minus_id_action(), 3)
        assert list(r.terms) == ["1"] and r.equal

    def test_trivial_group(self):
        A = h8().algebra
        r = smash_indicator_check(trivial_action(A), 2)
        assert r.lhs == r.rhs == regular_twisted_indicator(A, 2).value

    def test_h8(self):
        r = smash_indicator_check(h8_tau4_action(), 2)
        assert r.equal
