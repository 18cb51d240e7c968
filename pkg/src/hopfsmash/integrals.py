"""Integrals of a finite-dimensional Hopf algebra and of its dual."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .exact_math import ExactMatrix, ExactVector, FieldScalar, vstack
from .hopf_core import Element, FiniteHopfAlgebra

Side = Literal["left", "right"]


class IntegralError(ValueError):
    pass


class NotSemisimpleError(ValueError):
    pass


def _scaled_kernel_vector(M: ExactMatrix, what: str) -> ExactVector:
    basis = M.kernel()
    if len(basis) != 1:
        raise IntegralError(f"{what}: solution space has dimension {len(basis)}, expected 1")
    v = basis[0]
    lead = v[v.first_nonzero()]
    return v.scale(lead.inverse())  # type: ignore[return-value]


def _side(side: str) -> Side:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return side  # type: ignore[return-value]


def integral(H: FiniteHopfAlgebra, side: Side = "left") -> Element:
    """Integral of ``H`` with first nonzero coordinate 1."""
    _side(side)
    I = H.identity_endo
    mults = H.left_mult if side == "left" else H.right_mult
    system = vstack(*(mults(i) - I.scale(H.counit[i]) for i in range(H.dim)))
    return Element(H, _scaled_kernel_vector(system, f"{side} integral of {H.name}"))


def left_integral(H: FiniteHopfAlgebra) -> Element:
    return integral(H, "left")


def right_integral(H: FiniteHopfAlgebra) -> Element:
    return integral(H, "right")


def dual_integral(H: FiniteHopfAlgebra, side: Side = "right") -> ExactVector:
    """Integral of the dual Hopf algebra, as a covector on ``H``.

    right: ``sum lam(x1) x2 = lam(x) 1``; left: ``sum x1 lam(x2) = lam(x) 1``.
    """
    _side(side)
    d = H.dim
    entries: list[tuple[int, int, FieldScalar]] = []
    for i in range(d):
        for j, k, e in H.comult_table[i]:
            # equation row (i, r) with r the surviving tensor factor
            r, var = (k, j) if side == "right" else (j, k)
            entries.append((i * d + r, var, e))
        for r in range(d):
            u = H.unit[r]
            if u:
                entries.append((i * d + r, i, -u))
    system = ExactMatrix.from_entries(H.field, d * d, d, entries)
    return _scaled_kernel_vector(system, f"{side} integral of the dual of {H.name}")


@dataclass(frozen=True)
class IntegralPair:
    Lambda: Element
    lam: ExactVector
    Lambda_side: Side = "left"
    lam_side: Side = "right"

    def pairing(self) -> FieldScalar:
        return self.lam.dot(self.Lambda.coords)


def normalize_pair(Lambda: Element, lam: ExactVector, Lambda_side: Side = "left",
                   lam_side: Side = "right") -> IntegralPair:
    """Rescale ``lam`` so that ``lam(Lambda) = 1``."""
    value = lam.dot(Lambda.coords)
    if not value:
        raise IntegralError("lam(Lambda) = 0; the integral pairing is degenerate")
    return IntegralPair(Lambda, lam.scale(value.inverse()), Lambda_side, lam_side)  # type: ignore[arg-type]


def integral_pair(H: FiniteHopfAlgebra, Lambda_side: Side = "left", lam_side: Side = "right") -> IntegralPair:
    return normalize_pair(integral(H, Lambda_side), dual_integral(H, lam_side), Lambda_side, lam_side)


def is_semisimple(H: FiniteHopfAlgebra) -> bool:
    return bool(H.counit_of(left_integral(H)))


def normalized_integral(H: FiniteHopfAlgebra) -> Element:
    """The two-sided integral with ``eps(Lambda) = 1``; semisimple algebras only."""
    Lambda = left_integral(H)
    e = H.counit_of(Lambda)
    if not e:
        raise NotSemisimpleError(f"{H.name} is not semisimple (eps of its integral is 0)")
    return Lambda * e.inverse()


def is_left_integral(H: FiniteHopfAlgebra, a: Element) -> bool:
    return all(H.left_mult(i) @ a.coords == a.coords.scale(H.counit[i]) for i in range(H.dim))


def is_right_integral(H: FiniteHopfAlgebra, a: Element) -> bool:
    return all(H.right_mult(i) @ a.coords == a.coords.scale(H.counit[i]) for i in range(H.dim))
