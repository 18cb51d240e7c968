"""Frobenius-Schur indicators: regular twisted, module and twisted module versions.

The regular twisted indicator is always evaluated by four independent
formulas (trace formula and three integral formulas); any disagreement
raises :class:`IndicatorInconsistencyError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exact_math import ExactMatrix, FieldScalar
from .hopf_core import Element, FiniteHopfAlgebra, convolve
from .integrals import dual_integral, left_integral, normalize_pair, normalized_integral, right_integral
from .powers import HopfAutomorphism, _check_divides, identity_automorphism, twisted_power_endo
from .representations import Representation, restrict_to_component
from .smash import HopfAction, SmashCoproduct, smash_coproduct


class IndicatorInconsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class IndicatorValue:
    value: FieldScalar
    methods: dict[str, FieldScalar] = dc_field(default_factory=dict)

    def __str__(self) -> str:
        return str(self.value)


def p_map(H: FiniteHopfAlgebra, m: int, tau: HopfAutomorphism) -> ExactMatrix:
    """``a -> sum (tau^{m-1} a1)(tau^{m-2} a2) ... (tau a_{m-1})``; ``u eps`` when ``m = 1``."""
    _check_divides(tau, m)
    if m == 1:
        return H.unit_counit
    powers = [H.identity_endo]
    for _ in range(m - 1):
        powers.append(powers[-1] @ tau.matrix)
    P = powers[m - 1]
    for k in range(m - 2, 0, -1):
        P = convolve(H, P, powers[k])
    return P


def regular_twisted_indicator(H: FiniteHopfAlgebra, m: int, tau: HopfAutomorphism | None = None) -> IndicatorValue:
    if tau is None:
        tau = identity_automorphism(H)
    _check_divides(tau, m)
    S = H.antipode
    methods: dict[str, FieldScalar] = {}
    methods["trace"] = (S @ p_map(H, m, tau)).trace()

    Q = twisted_power_endo(H, m, tau)
    L_left = left_integral(H)
    lam_right = dual_integral(H, "right")
    pair = normalize_pair(L_left, lam_right)
    methods["left_integral"] = pair.lam.dot(Q @ (S @ L_left.coords))  # type: ignore[arg-type]

    L_right = right_integral(H)
    pair_r = normalize_pair(L_right, lam_right, "right", "right")
    methods["right_right"] = pair_r.lam.dot(Q @ L_right.coords)  # type: ignore[arg-type]

    inv = tau.inverse()
    pair_l = normalize_pair(L_left, dual_integral(H, "left"), "left", "left")
    methods["left_left"] = pair_l.lam.dot(inv.matrix @ (twisted_power_endo(H, m, inv) @ L_left.coords))

    values = set(methods.values())
    if len(values) != 1:
        detail = ", ".join(f"{k}={v}" for k, v in methods.items())
        raise IndicatorInconsistencyError(f"indicator formulas disagree on {H.name}, m={m}: {detail}")
    return IndicatorValue(methods["trace"], methods)


def twisted_module_indicator(H: FiniteHopfAlgebra, rep: Representation, m: int,
                             tau: HopfAutomorphism | None = None) -> IndicatorValue:
    """``chi_W`` at the ``m``-th twisted power of the normalized integral."""
    if tau is None:
        tau = identity_automorphism(H)
    if rep.algebra is not H:
        raise ValueError("representation is over a different algebra")
    Lam = normalized_integral(H)
    power = twisted_power_endo(H, m, tau) @ Lam.coords
    value = rep.character(Element(H, power))  # type: ignore[arg-type]
    return IndicatorValue(value, {"character": value})


def module_indicator(H: FiniteHopfAlgebra, rep: Representation, m: int) -> IndicatorValue:
    return twisted_module_indicator(H, rep, m, identity_automorphism(H))


@dataclass
class IdentityCheck:
    lhs: FieldScalar
    rhs: FieldScalar
    terms: dict[str, FieldScalar] = dc_field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def graded_indicator_check(sc: SmashCoproduct, rep: Representation, m: int) -> IdentityCheck:
    """Module indicator on K against the sum of twisted indicators of its components."""
    G, A = sc.G, sc.A
    lhs = module_indicator(sc.K, rep, m).value
    terms: dict[str, FieldScalar] = {}
    rhs = A.field.zero()
    for x in G:
        if G.power(x, m) != G.identity:
            continue
        part = restrict_to_component(sc, rep, x)
        if part is None:
            terms[G.labels[x]] = A.field.zero()
            continue
        v = twisted_module_indicator(A, part, m, sc.action.aut(G.inverse(x))).value
        terms[G.labels[x]] = v
        rhs = rhs + v
    return IdentityCheck(lhs, rhs, terms)


def smash_indicator_check(action: HopfAction, m: int, sc: SmashCoproduct | None = None) -> IdentityCheck:
    """Regular indicator of K against the sum of regular twisted indicators of A."""
    if sc is None:
        sc = smash_coproduct(action)
    G, A = action.group, action.algebra
    lhs = regular_twisted_indicator(sc.K, m).value
    terms: dict[str, FieldScalar] = {}
    rhs = A.field.zero()
    for g in G:
        if G.power(g, m) != G.identity:
            continue
        v = regular_twisted_indicator(A, m, action.aut(g)).value
        terms[G.labels[g]] = v
        rhs = rhs + v
    return IdentityCheck(lhs, rhs, terms)
