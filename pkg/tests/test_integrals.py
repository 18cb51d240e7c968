from fractions import Fraction

import pytest

from hopfsmash.catalog import algebra_entry, all_entries, h8, kC3_inversion_action, nichols8
from hopfsmash.integrals import (
    IntegralError,
    NotSemisimpleError,
    dual_integral,
    integral_pair,
    is_left_integral,
    is_right_integral,
    is_semisimple,
    left_integral,
    normalize_pair,
    normalized_integral,
    right_integral,
)
from hopfsmash.smash import smash_coproduct

from helpers import vec


def alg(name):
    return algebra_entry(name).algebra


class TestLeftRight:
    def test_kC2(self):
        H = alg("kC2")
        assert left_integral(H) == H.element([1, 1])

    def test_kC3_right(self):
        H = alg("kC3")
        assert right_integral(H) == H.element([1, 1, 1])

    def test_function_algebra(self):
        H = alg("k^S3")
        assert left_integral(H) == H.basis_element(0)

    def test_nichols8(self):
        H = nichols8().algebra
        expected = H.basis_element("xy") + H.basis_element("gxy")
        assert left_integral(H) == expected == right_integral(H)

    @pytest.mark.parametrize("entry", all_entries(), ids=lambda e: e.name)
    def test_defining_equations(self, entry):
        H = entry.algebra
        L, R = left_integral(H), right_integral(H)
        assert is_left_integral(H, L) and is_right_integral(H, R)
        assert is_right_integral(H, H.antipode_of(L))

    def test_not_an_integral(self):
        H = alg("kC2")
        assert not is_left_integral(H, H.one())


class TestDualIntegral:
    def test_group_algebra(self):
        H = alg("kC3")
        assert dual_integral(H) == vec(H, [1, 0, 0])

    def test_function_algebra(self):
        H = alg("k^C3")
        assert dual_integral(H) == vec(H, [1, 1, 1])

    def test_nichols8_both_sides(self):
        H = nichols8().algebra
        xy_star = vec(H, [1 if b == "xy" else 0 for b in H.basis])
        assert dual_integral(H, "right") == xy_star == dual_integral(H, "left")

    def test_bad_side(self):
        with pytest.raises(ValueError):
            dual_integral(alg("kC2"), "middle")


class TestPairing:
    def test_nichols8_pair_already_normalized(self):
        H = nichols8().algebra
        pair = integral_pair(H)
        assert pair.pairing() == 1
        assert pair.lam == dual_integral(H)

    def test_kC2(self):
        assert integral_pair(alg("kC2")).pairing() == 1

    def test_rescaling_only_moves_lambda(self):
        H = alg("kC2")
        L, lam = left_integral(H), dual_integral(H)
        pair = normalize_pair(L * 2, lam)
        assert pair.Lambda == L * 2
        assert pair.lam == lam.scale(Fraction(1, 2))

    def test_degenerate(self):
        H = alg("kC2")
        with pytest.raises(IntegralError):
            normalize_pair(left_integral(H), vec(H, [0, 0]))


class TestSemisimple:
    @pytest.mark.parametrize("name,expected", [("kC3", True), ("kS3", True), ("k^S3", True)])
    def test_group_algebras(self, name, expected):
        assert is_semisimple(alg(name)) is expected

    def test_h8(self):
        assert is_semisimple(h8().algebra)

    def test_nichols8(self):
        assert not is_semisimple(nichols8().algebra)
        with pytest.raises(NotSemisimpleError):
            normalized_integral(nichols8().algebra)

    @pytest.mark.parametrize("name", ["kC3", "kS3", "k^S3", "h8"])
    def test_normalized_is_two_sided(self, name):
        H = algebra_entry(name).algebra
        L = normalized_integral(H)
        assert H.counit_of(L) == 1
        assert is_left_integral(H, L) and is_right_integral(H, L)


def test_smash_integral_is_lambda_tensor_p1():
    sc = smash_coproduct(kC3_inversion_action())
    L = sc.embed(left_integral(sc.A), sc.G.identity)
    assert is_left_integral(sc.K, L) and is_right_integral(sc.K, L)
    assert sc.integral == L
