"""Hopf powers, twisted Hopf powers and (twisted) exponents.

Powers are computed as endomorphisms through the convolution recurrence
``Q_1 = id``, ``Q_{k+1} = Q_k * tau^k``, so the tensor power ``A^{(x)n}`` is
never formed.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field as dc_field
from typing import Iterator

from .exact_math import ExactMatrix, kron
from .hopf_core import Element, FiniteHopfAlgebra, convolve

DEFAULT_MAX_ORDER = 1000


class AutomorphismError(ValueError):
    pass


class OrderDivisibilityError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HopfAutomorphism:
    algebra: FiniteHopfAlgebra
    matrix: ExactMatrix
    order: int
    name: str = "tau"

    def __call__(self, a: Element) -> Element:
        return Element(self.algebra, self.matrix @ a.coords)  # type: ignore[arg-type]

    def power(self, k: int) -> HopfAutomorphism:
        k %= self.order
        return HopfAutomorphism(self.algebra, self.matrix.power(k), self.order // math.gcd(self.order, k),
                                f"{self.name}^{k}")

    def inverse(self) -> HopfAutomorphism:
        return HopfAutomorphism(self.algebra, self.matrix.power(self.order - 1), self.order, f"{self.name}^-1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfAutomorphism):
            return NotImplemented
        return self.algebra is other.algebra and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)


def _first_bad_column(lhs: ExactMatrix, rhs: ExactMatrix) -> int:
    for j in range(lhs.cols):
        if lhs.column(j) != rhs.column(j):
            return j
    return -1


def matrix_order(M: ExactMatrix, max_order: int = DEFAULT_MAX_ORDER) -> int:
    P = M
    for k in range(1, max_order + 1):
        if P.is_identity():
            return k
        P = P @ M
    raise AutomorphismError(f"no finite order up to {max_order}")


def verify_automorphism(H: FiniteHopfAlgebra, M: ExactMatrix, *, name: str = "tau",
                        max_order: int = DEFAULT_MAX_ORDER) -> HopfAutomorphism:
    """Check that ``M`` is a Hopf automorphism of finite order and wrap it."""
    d = H.dim
    if M.shape != (d, d):
        raise AutomorphismError(f"{name}: expected a {d}x{d} matrix, got {M.shape[0]}x{M.shape[1]}")
    if M.field != H.field:
        raise AutomorphismError(f"{name}: matrix over {M.field}, algebra over {H.field}")
    if M.rank() < d:
        raise AutomorphismError(f"{name}: not invertible (not bijective)")
    if M @ H.unit != H.unit:
        raise AutomorphismError(f"{name}: does not fix the unit, {name}(1) != 1")
    if H.counit.T @ M != H.counit.T:
        j = _first_bad_column(H.counit.T @ M, H.counit.T)
        raise AutomorphismError(f"{name}: eps o {name} != eps at {H.basis[j]}")
    MM = kron(M, M)
    lhs = M @ H.mult_matrix
    rhs = H.mult_matrix @ MM
    if lhs != rhs:
        col = _first_bad_column(lhs, rhs)
        i, j = divmod(col, d)
        raise AutomorphismError(f"{name}: not multiplicative, {name}({H.basis[i]}*{H.basis[j]}) "
                                f"!= {name}({H.basis[i]}){name}({H.basis[j]})")
    lhs = H.comult_matrix @ M
    rhs = MM @ H.comult_matrix
    if lhs != rhs:
        i = _first_bad_column(lhs, rhs)
        raise AutomorphismError(f"{name}: not comultiplicative, Delta({name}({H.basis[i]})) "
                                f"!= ({name} (x) {name})Delta({H.basis[i]})")
    return HopfAutomorphism(H, M, matrix_order(M, max_order), name)


def identity_automorphism(H: FiniteHopfAlgebra) -> HopfAutomorphism:
    return HopfAutomorphism(H, H.identity_endo, 1, "id")


# -- powers -------------------------------------------------------------------


def power_endos(H: FiniteHopfAlgebra, tau: ExactMatrix) -> Iterator[ExactMatrix]:
    """Yield ``Q_1, Q_2, ...`` where ``Q_n(x) = sum x1 tau(x2) ... tau^{n-1}(x_n)``."""
    Q = H.identity_endo
    yield Q
    tk = tau
    while True:
        Q = convolve(H, Q, tk)
        yield Q
        tk = tk @ tau


def _check_divides(tau: HopfAutomorphism, n: int) -> None:
    if n < 1:
        raise ValueError(f"power must be positive, got {n}")
    if n % tau.order:
        raise OrderDivisibilityError(f"order {tau.order} of {tau.name} does not divide {n}")


def twisted_power_endo(H: FiniteHopfAlgebra, n: int, tau: HopfAutomorphism | ExactMatrix,
                       *, strict: bool = True) -> ExactMatrix:
    """Matrix of ``x -> x^[n, tau]``.

    With ``strict=False`` the divisibility condition on the order of ``tau``
    is not enforced (the formula is still meaningful, e.g. in the smash
    coproduct power formula).
    """
    if isinstance(tau, HopfAutomorphism):
        if strict:
            _check_divides(tau, n)
        matrix = tau.matrix
    else:
        if strict:
            raise TypeError("strict twisted powers need a verified HopfAutomorphism")
        matrix = tau
    if n < 1:
        raise ValueError(f"power must be positive, got {n}")
    for k, Q in enumerate(power_endos(H, matrix), start=1):
        if k == n:
            return Q
    raise AssertionError("unreachable")


def twisted_power(H: FiniteHopfAlgebra, x: Element, n: int, tau: HopfAutomorphism) -> Element:
    return Element(H, twisted_power_endo(H, n, tau) @ x.coords)  # type: ignore[arg-type]


def hopf_power(H: FiniteHopfAlgebra, x: Element, n: int) -> Element:
    return twisted_power(H, x, n, identity_automorphism(H))


# -- exponents ----------------------------------------------------------------


@dataclass(frozen=True)
class ExponentResult:
    value: int | None
    bound: int
    s2_warning: bool = False

    @property
    def found(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return f"Found({self.value})" if self.found else f"NotFoundUpTo({self.bound})"


def default_bound(H: FiniteHopfAlgebra, tau: HopfAutomorphism | None = None) -> int:
    env = os.environ.get("HOPFSMASH_BOUND")
    if env:
        return int(env)
    return 16 * H.dim * (tau.order if tau is not None else 1)


def _s2_warning(H: FiniteHopfAlgebra) -> bool:
    return not (H.antipode @ H.antipode).is_identity()


def twisted_exponent(H: FiniteHopfAlgebra, tau: HopfAutomorphism, bound: int | None = None) -> ExponentResult:
    """Smallest multiple ``n`` of the order of ``tau`` with ``x^[n,tau] = eps(x)1``."""
    if bound is None:
        bound = default_bound(H, tau)
    target = H.unit_counit
    r = tau.order
    warn = _s2_warning(H)
    for n, Q in enumerate(power_endos(H, tau.matrix), start=1):
        if n > bound:
            break
        if n % r == 0 and Q == target:
            return ExponentResult(n, bound, warn)
    return ExponentResult(None, bound, warn)


def exponent(H: FiniteHopfAlgebra, bound: int | None = None) -> ExponentResult:
    return twisted_exponent(H, identity_automorphism(H), bound)


@dataclass
class CoprimeExperimentReport:
    order: int
    bound: int
    baseline: ExponentResult
    rows: list[tuple[int, ExponentResult]] = dc_field(default_factory=list)

    @property
    def disagreements(self) -> list[int]:
        """Powers ``m`` whose twisted exponent provably differs from the baseline."""
        out = []
        for m, res in self.rows:
            if (res.found or self.baseline.found) and res.value != self.baseline.value:
                out.append(m)
        return out

    @property
    def conclusive(self) -> bool:
        return self.baseline.found or all(res.found for _, res in self.rows)

    @property
    def agree(self) -> bool | None:
        """True/False when decided within the bound, None when inconclusive."""
        if self.disagreements:
            return False
        if not all(res.found for _, res in self.rows):
            return None
        return True


def coprime_power_experiment(H: FiniteHopfAlgebra, tau: HopfAutomorphism,
                             bound: int | None = None) -> CoprimeExperimentReport:
    """Compare ``exp_{tau^m}`` with ``exp_tau`` for every ``m`` coprime to the order."""
    n = tau.order
    if bound is None:
        bound = default_bound(H, tau)
    baseline = twisted_exponent(H, tau, bound)
    report = CoprimeExperimentReport(n, bound, baseline)
    for m in range(1, max(n, 2)):
        if math.gcd(m, n) != 1:
            continue
        res = baseline if m == 1 else twisted_exponent(H, tau.power(m), bound)
        report.rows.append((m, res))
    return report


# -- identity checks ----------------------------------------------------------


def antipode_power_identity_holds(H: FiniteHopfAlgebra, tau: HopfAutomorphism, n: int) -> bool:
    """``S(x^[n,tau]) = tau^-1 (S(x)^[n,tau^-1])`` for every basis ``x``."""
    S = H.antipode
    inv = tau.inverse()
    lhs = S @ twisted_power_endo(H, n, tau)
    rhs = inv.matrix @ twisted_power_endo(H, n, inv) @ S
    return lhs == rhs


def exponent_divisibility_holds(H: FiniteHopfAlgebra, tau: HopfAutomorphism, max_multiple: int, *, literal: bool = False) -> bool:
    """Divisibility criterion for ``Q_{mr} = u eps``, checked for ``m <= max_multiple``.

    The default form is ``Q_{mr} = u eps`` iff ``exp_tau`` divides ``mr``.
    With ``literal=True`` the divisor tested is ``m`` itself, which only
    agrees with the default when ``tau`` has order 1.
    """
    e = twisted_exponent(H, tau)
    if not e.found:
        raise ValueError(f"twisted exponent of {H.name} not found up to {e.bound}")
    r = tau.order
    target = H.unit_counit
    for n, Q in enumerate(power_endos(H, tau.matrix), start=1):
        if n > max_multiple * r:
            break
        if n % r:
            continue
        divisor_of = n // r if literal else n
        if (Q == target) != (divisor_of % e.value == 0):  # type: ignore[operator]
            return False
    return True


def smash_power_formula_holds(sc, n: int) -> bool:
    """Power formula on a smash coproduct, all basis elements at once.

    ``(a # p_x)^[n] = sum_{z^n = x} a^[n, z^-1] # p_z``.
    """
    A, G, K = sc.A, sc.G, sc.K
    d = A.dim
    lhs = twisted_power_endo(K, n, K.identity_endo, strict=False)
    per_z = {z: twisted_power_endo(A, n, sc.action.matrix(G.inverse(z)), strict=False) for z in G}
    entries = []
    for x in G:
        for z in G:
            if G.power(z, n) != x:
                continue
            Q = per_z[z]
            for r, i, c in Q.nonzero_entries():
                entries.append((sc.index(r, z), sc.index(i, x), c))
    rhs = ExactMatrix.from_entries(K.field, K.dim, K.dim, entries)
    return lhs == rhs
