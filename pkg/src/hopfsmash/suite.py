"""The full reproduction suite: every published value and every identity check.

Each check carries a short statement of what is being compared. The
``mutate`` switch corrupts one structure constant of a smash coproduct so
the power-formula check must fail (used to test the suite itself).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .catalog import (
    algebra_entry,
    all_entries,
    automorphism_by_name,
    h8,
    h8_tau4_action,
    kC3_inversion_action,
    nichols8,
    nichols8_automorphism,
    nichols8_minus_id_action,
)
from .exact_math import FieldSpec
from .hopf_core import FiniteHopfAlgebra, dual, verify_hopf_axioms
from .indicators import graded_indicator_check, module_indicator, regular_twisted_indicator, \
    smash_indicator_check, twisted_module_indicator
from .integrals import dual_integral
from .powers import (
    HopfAutomorphism,
    antipode_power_identity_holds,
    exponent,
    exponent_divisibility_holds,
    identity_automorphism,
    smash_power_formula_holds,
    twisted_exponent,
    twisted_power_endo,
)
from .representations import extend_to_smash, regular_rep, tensor_dual_grading_check
from .smash import GroupTable, HopfAction, SmashCoproduct, duality_check, smash_coproduct, smash_product


@dataclass(frozen=True)
class CheckResult:
    name: str
    statement: str
    expected: str
    actual: str
    passed: bool


def _check(name: str, statement: str, expected: object, actual: object) -> CheckResult:
    return CheckResult(name, statement, str(expected), str(actual), expected == actual)


def _flag(name: str, statement: str, ok: bool) -> CheckResult:
    return CheckResult(name, statement, "True", str(ok), ok)


def mutated(sc: SmashCoproduct) -> SmashCoproduct:
    """Copy of ``sc`` with one multiplication constant doubled."""
    K = sc.K
    i, j, k, c = K.mult[0]
    mult = [(i, j, k, c + c)] + list(K.mult[1:])
    bad = FiniteHopfAlgebra(K.name + "~", K.field, K.basis, mult, K.comult, K.unit, K.counit, K.antipode)
    return SmashCoproduct(sc.action, bad)


# -- individual groups of checks --------------------------------------------------------


def _nichols_order_two() -> Iterator[CheckResult]:
    e = nichols8()
    A = e.algebra
    cases = [("id", (1, 0, 0, 1)), ("-id", (-1, 0, 0, -1)), ("diag(1,-1)", (1, 0, 0, -1)), ("antidiag(1,1)", (0, 1, 1, 0))]
    for label, abcd in cases:
        tau = nichols8_automorphism(*abcd, e)
        det = Fraction(abcd[0] * abcd[3] - abcd[1] * abcd[2])
        for m in (2, 4, 6):
            expected = m * m if det == 1 else 0
            got = regular_twisted_indicator(A, m, tau).value
            yield _check(f"nichols8-indicator-{label}-m{m}",
                         "order-two tau, even m: nu_{m,tau} = m^2 if Det = 1, 0 if Det = -1", expected, got)


def _nichols_order_three() -> Iterator[CheckResult]:
    e = nichols8()
    yield _check("nichols8-indicator-id-m3", "nu_{3,id} = 9", 9, regular_twisted_indicator(e.algebra, 3).value)
    tau = nichols8_automorphism(0, -1, 1, -1, e)
    yield _check("nichols8-indicator-companion-m3", "order-three tau over Q: nu_{3,tau} = 0", 0,
                 regular_twisted_indicator(e.algebra, 3, tau).value)
    F = FieldSpec(3)
    e3 = nichols8(F)
    tau3 = nichols8_automorphism("z", 0, 0, "z^2", e3)
    yield _check("nichols8-indicator-diag(z,z^2)-m3", "order-three tau over Q(zeta_3): nu_{3,tau} = 0", 0,
                 regular_twisted_indicator(e3.algebra, 3, tau3).value)


def _nichols_intermediate() -> Iterator[CheckResult]:
    e = nichols8()
    A = e.algebra
    lam = dual_integral(A, "right")
    xy = A.basis_element("xy").coords
    for label, abcd in [("id", (1, 0, 0, 1)), ("-id", (-1, 0, 0, -1)), ("diag(1,-1)", (1, 0, 0, -1))]:
        tau = nichols8_automorphism(*abcd, e)
        det = abcd[0] * abcd[3] - abcd[1] * abcd[2]
        for m in (2, 4):
            got = lam.dot(twisted_power_endo(A, m, tau) @ xy)  # type: ignore[arg-type]
            yield _check(f"nichols8-lambda-xy-power-{label}-m{m}", "lambda((xy)^[m,tau]) = m^2/4 (1 + Det tau)",
                         Fraction(m * m, 4) * (1 + det), got)


def _h8_example() -> Iterator[CheckResult]:
    e = h8()
    N = e.representations["N"]
    yield _check("h8-twisted-module-indicator", "nu_{2,tau4}(N) = -1", -1,
                 twisted_module_indicator(e.algebra, N, 2, e.automorphisms["tau4"]).value)
    sc = smash_coproduct(h8_tau4_action())
    M = extend_to_smash(sc, N, 1)
    yield _check("h8-smash-module-indicator", "nu_2^K(M) = -1 for N placed in degree tau4", -1,
                 module_indicator(sc.K, M, 2).value)


def _smash_regular() -> Iterator[CheckResult]:
    act = nichols8_minus_id_action()
    sc = smash_coproduct(act)
    for m, expected in ((2, 8), (4, 32)):
        r = smash_indicator_check(act, m, sc)
        yield _check(f"nichols8-smash-regular-m{m}-lhs", "nu_m(K) computed on K", expected, r.lhs)
        yield _check(f"nichols8-smash-regular-m{m}-rhs", "sum over g^m = 1 of nu_{m,g}(A)", expected, r.rhs)
    r = smash_indicator_check(h8_tau4_action(), 2)
    yield _check("h8-smash-regular-m2", "nu_2(K) = sum over g^2 = 1 of nu_{2,g}(A)", r.lhs, r.rhs)


def _smash_exponent() -> Iterator[CheckResult]:
    act = kC3_inversion_action()
    K = smash_coproduct(act).K
    A, G = act.algebra, act.group
    parts = [G.exponent(), exponent(A).value, twisted_exponent(A, act.aut(1)).value]
    yield _check("kC3-smash-exponent", "exp(K) = 6", 6, exponent(K).value)
    yield _check("kC3-smash-exponent-lcm", "exp(K) = lcm(exp G, exp_z A)", exponent(K).value, math.lcm(*parts))


def _actions() -> list[tuple[str, HopfAction]]:
    return [("kC3", kC3_inversion_action()), ("h8", h8_tau4_action()), ("nichols8", nichols8_minus_id_action())]


def _catalog_automorphisms() -> list[tuple[str, FiniteHopfAlgebra, HopfAutomorphism]]:
    out = []
    e = h8()
    out += [("h8:id", e.algebra, identity_automorphism(e.algebra)), ("h8:tau4", e.algebra, e.automorphisms["tau4"])]
    n = nichols8()
    for label, abcd in [("id", (1, 0, 0, 1)), ("-id", (-1, 0, 0, -1)), ("diag(1,-1)", (1, 0, 0, -1)),
                        ("antidiag(1,1)", (0, 1, 1, 0)), ("companion", (0, -1, 1, -1))]:
        out.append((f"nichols8:{label}", n.algebra, nichols8_automorphism(*abcd, n)))
    c3 = algebra_entry("kC3")
    out.append(("kC3:inversion", c3.algebra, automorphism_by_name(c3, "inversion")))
    c5 = algebra_entry("kC5")
    out.append(("kC5:power:2", c5.algebra, automorphism_by_name(c5, "power:2")))
    s3 = algebra_entry("k^S3")
    out.append(("k^S3:id", s3.algebra, identity_automorphism(s3.algebra)))
    return out


def _identities(mutate: bool) -> Iterator[CheckResult]:
    smashes = {name: smash_coproduct(act) for name, act in _actions()}
    for name, sc in smashes.items():
        target = mutated(sc) if mutate and name == "kC3" else sc
        ok = all(smash_power_formula_holds(target, n) for n in range(1, 7))
        yield _flag(f"{name}-smash-power-formula", "(a#p_x)^[n] = sum_{z^n = x} a^[n,z^-1] # p_z, n <= 6", ok)

    for label, H, tau in _catalog_automorphisms():
        ns = [n for n in range(1, 7) if n % tau.order == 0]
        ok = all(antipode_power_identity_holds(H, tau, n) for n in ns)
        yield _flag(f"{label}-antipode-power", "S(x^[n,tau]) = tau^-1 (S(x)^[n,tau^-1])", ok)

    e = h8()
    H8, t4 = e.algebra, e.automorphisms["tau4"]
    kS3 = algebra_entry("k^S3").algebra
    for label, H, tau in (("h8:tau4", H8, t4), ("h8:id", H8, identity_automorphism(H8)),
                          ("k^S3:id", kS3, identity_automorphism(kS3))):
        yield _flag(f"{label}-exponent-divisibility", "x^[mr,tau] = eps(x)1 iff exp_tau divides mr",
                    exponent_divisibility_holds(H, tau, 6))
    yield _check("h8-inverse-twist-exponent", "exp_{tau^-1}(H8) = exp_tau(H8)",
                 twisted_exponent(H8, t4).value, twisted_exponent(H8, t4.inverse()).value)

    for name, act in _actions():
        yield _flag(f"{name}-duality", "dual(A # k^G) = A* # kG entrywise", duality_check(act, smashes[name]).equal)

    sc = smashes["h8"]
    M = extend_to_smash(sc, e.representations["N"], 1)
    for label, rep in (("N@tau4", M), ("regular", regular_rep(sc.K))):
        r = graded_indicator_check(sc, rep, 2)
        yield _check(f"h8-graded-indicator-{label}", "nu_2^K(M) = sum_{x^2=1} nu_{2,x^-1}(M_x)", r.lhs, r.rhs)

    for name in ("h8", "nichols8"):
        sc = smashes[name]
        mods = []
        for _, rep in sorted(_module_sources(name).items()):
            for x in sc.G:
                mods.append(extend_to_smash(sc, rep, x))
        ok = all(tensor_dual_grading_check(sc, M1, M2).ok for M1 in mods for M2 in mods)
        yield _flag(f"{name}-tensor-dual-grading", "(M(x)N)_x and (M*)_x formulas, all single-degree pairs", ok)

    algebras: list[FiniteHopfAlgebra] = [entry.algebra for entry in all_entries()]
    algebras += [sc.K for sc in smashes.values()] + [smash_product(act) for _, act in _actions()]
    algebras += [dual(H) for H in algebras[:7]]
    for H in algebras:
        yield _flag(f"{H.name}-axioms", "all Hopf algebra axioms", verify_hopf_axioms(H).ok)


def _module_sources(name: str):
    if name == "h8":
        e = h8()
        return {"N": e.representations["N"], "trivial": e.representations["trivial"]}
    return dict(nichols8().representations)


def _classical() -> Iterator[CheckResult]:
    for gname in ("C2", "C3", "S3"):
        entry = algebra_entry(f"k{gname}")
        H = entry.algebra
        G = _group_of(entry.name)
        expected = sum(1 for g in G if G.mul(g, g) == G.identity)
        yield _check(f"k{gname}-regular-indicator", "nu_2(regular kG) = #{g : g^2 = 1}", expected,
                     module_indicator(H, regular_rep(H), 2).value)


def _group_of(name: str) -> GroupTable:
    from .catalog import group_for

    G = group_for(name)
    assert G is not None
    return G


GROUPS: list[tuple[str, Callable[..., Iterator[CheckResult]]]] = [
    ("nichols8 order-two indicators", _nichols_order_two),
    ("nichols8 order-three indicators", _nichols_order_three),
    ("nichols8 integral values", _nichols_intermediate),
    ("h8 module indicators", _h8_example),
    ("smash regular indicators", _smash_regular),
    ("smash exponent", _smash_exponent),
    ("identities", _identities),
    ("group algebra indicators", _classical),
]


def run_suite(mutate: bool = False) -> list[CheckResult]:
    results: list[CheckResult] = []
    for _, fn in GROUPS:
        results.extend(fn(mutate) if fn is _identities else fn())
    return results
