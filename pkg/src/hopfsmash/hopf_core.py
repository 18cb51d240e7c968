"""Finite-dimensional Hopf algebras given by structure constants.

Conventions used throughout the package:

* ``b_i b_j = sum_k c[i,j,k] b_k`` is stored as entries ``(i, j, k, c)``;
* ``Delta(b_i) = sum e[i,j,k] b_j (x) b_k`` is stored as ``(i, j, k, e)``;
* the tensor square is laid out row-major, ``b_j (x) b_k`` at ``j*d + k``;
* a linear endomorphism is a ``d x d`` matrix whose column ``i`` holds the
  coordinates of the image of ``b_i``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .exact_math import (
    Entry,
    ExactMatrix,
    ExactVector,
    FieldScalar,
    FieldSpec,
    _to_int_form,
    kron,
)

SparseEntry = tuple[int, int, int, FieldScalar]


class AlgebraMismatchError(ValueError):
    pass


def _canonical(field: FieldSpec, entries: Iterable[tuple[int, int, int, Entry]], d: int) -> tuple[SparseEntry, ...]:
    acc: dict[tuple[int, int, int], FieldScalar] = {}
    for i, j, k, c in entries:
        if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
            raise IndexError(f"structure constant index ({i}, {j}, {k}) outside dimension {d}")
        key = (i, j, k)
        c = field.scalar(c)
        acc[key] = acc[key] + c if key in acc else c
    return tuple((i, j, k, c) for (i, j, k), c in sorted(acc.items()) if c)


class FiniteHopfAlgebra:
    """Hopf algebra data on a fixed basis.

    Construction does not check the Hopf axioms; call
    :func:`verify_hopf_axioms` (builders in ``smash`` and ``catalog`` do).
    """

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        basis: Sequence[str],
        mult: Iterable[tuple[int, int, int, Entry]],
        comult: Iterable[tuple[int, int, int, Entry]],
        unit: Sequence[Entry] | ExactVector,
        counit: Sequence[Entry] | ExactVector,
        antipode: ExactMatrix,
    ) -> None:
        d = len(basis)
        self.name = name
        self.field = field
        self.basis = tuple(basis)
        self.mult = _canonical(field, mult, d)
        self.comult = _canonical(field, comult, d)
        self.unit = unit if isinstance(unit, ExactVector) else ExactVector.from_list(field, list(unit))
        self.counit = counit if isinstance(counit, ExactVector) else ExactVector.from_list(field, list(counit))
        if len(self.unit) != d or len(self.counit) != d:
            raise ValueError("unit/counit length does not match dimension")
        if antipode.shape != (d, d) or antipode.field != field:
            raise ValueError("antipode must be a d x d matrix over the algebra's field")
        self.antipode = antipode
        self._valid: bool | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"FiniteHopfAlgebra({self.name!r}, dim={self.dim}, field={self.field})"

    # -- tables ------------------------------------------------------------

    @cached_property
    def mult_table(self) -> dict[tuple[int, int], list[tuple[int, FieldScalar]]]:
        table: dict[tuple[int, int], list[tuple[int, FieldScalar]]] = defaultdict(list)
        for i, j, k, c in self.mult:
            table[i, j].append((k, c))
        return dict(table)

    @cached_property
    def comult_table(self) -> list[list[tuple[int, int, FieldScalar]]]:
        table: list[list[tuple[int, int, FieldScalar]]] = [[] for _ in range(self.dim)]
        for i, j, k, c in self.comult:
            table[i].append((j, k, c))
        return table

    @cached_property
    def mult_matrix(self) -> ExactMatrix:
        """``d x d^2`` matrix of the multiplication map."""
        d = self.dim
        return ExactMatrix.from_entries(self.field, d, d * d, ((k, i * d + j, c) for i, j, k, c in self.mult))

    @cached_property
    def comult_matrix(self) -> ExactMatrix:
        """``d^2 x d`` matrix of the comultiplication map."""
        d = self.dim
        return ExactMatrix.from_entries(self.field, d * d, d, ((j * d + k, i, c) for i, j, k, c in self.comult))

    def left_mult(self, i: int) -> ExactMatrix:
        """Matrix of ``a -> b_i a``."""
        return self._left_mults[i]

    def right_mult(self, i: int) -> ExactMatrix:
        """Matrix of ``a -> a b_i``."""
        return self._right_mults[i]

    @cached_property
    def _left_mults(self) -> list[ExactMatrix]:
        per: list[list] = [[] for _ in range(self.dim)]
        for i, j, k, c in self.mult:
            per[i].append((k, j, c))
        return [ExactMatrix.from_entries(self.field, self.dim, self.dim, e) for e in per]

    @cached_property
    def _right_mults(self) -> list[ExactMatrix]:
        per: list[list] = [[] for _ in range(self.dim)]
        for i, j, k, c in self.mult:
            per[j].append((k, i, c))
        return [ExactMatrix.from_entries(self.field, self.dim, self.dim, e) for e in per]

    @cached_property
    def identity_endo(self) -> ExactMatrix:
        return ExactMatrix.identity(self.field, self.dim)

    @cached_property
    def unit_counit(self) -> ExactMatrix:
        """The convolution unit ``u o eps``."""
        return self.unit @ self.counit.T

    @cached_property
    def _conv_plan(self) -> tuple:
        d = self.dim
        cidx: list[int] = []
        for i, j, k, _ in self.comult:
            cidx.extend((i, j, k))
        cval, cden = _to_int_form(self.field, [c for *_, c in self.comult])
        ordered = sorted(self.mult, key=lambda e: (e[0] * d + e[1], e[2]))
        moff = [0] * (d * d + 1)
        for i, j, _, _ in ordered:
            moff[i * d + j + 1] += 1
        for pq in range(d * d):
            moff[pq + 1] += moff[pq]
        mtgt = [k for _, _, k, _ in ordered]
        mval, mden = _to_int_form(self.field, [c for *_, c in ordered])
        return cidx, cval, cden, moff, mtgt, mval, mden

    # -- elements ----------------------------------------------------------

    def element(self, coords: Sequence[Entry] | ExactVector | str) -> Element:
        if isinstance(coords, str):
            return self.basis_element(coords)
        if not isinstance(coords, ExactVector):
            coords = ExactVector.from_list(self.field, list(coords))
        return Element(self, coords)

    def basis_element(self, which: int | str) -> Element:
        i = self.basis.index(which) if isinstance(which, str) else which
        return Element(self, ExactVector.unit(self.field, self.dim, i))

    def one(self) -> Element:
        return Element(self, self.unit)

    def zero(self) -> Element:
        return Element(self, ExactVector.zero(self.field, self.dim))

    def counit_of(self, a: Element) -> FieldScalar:
        return self.counit.dot(a.coords)

    def antipode_of(self, a: Element) -> Element:
        return Element(self, self.antipode @ a.coords)  # type: ignore[arg-type]

    @property
    def is_validated(self) -> bool:
        return bool(self._valid)


class Element:
    """An element of a :class:`FiniteHopfAlgebra`, by coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FiniteHopfAlgebra, coords: ExactVector) -> None:
        if len(coords) != algebra.dim:
            raise ValueError(f"{len(coords)} coordinates for a {algebra.dim}-dimensional algebra")
        self.algebra = algebra
        self.coords = coords

    def _same(self, other: Element) -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(f"elements of {self.algebra.name} and {other.algebra.name}")

    def __add__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.algebra, self.coords + other.coords)  # type: ignore[arg-type]

    def __sub__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.algebra, self.coords - other.coords)  # type: ignore[arg-type]

    def __neg__(self) -> Element:
        return Element(self.algebra, -self.coords)  # type: ignore[arg-type]

    def __mul__(self, other: object) -> Element:
        if isinstance(other, Element):
            return multiply(self.algebra, self, other)
        if isinstance(other, (FieldScalar, int, Fraction)):
            return Element(self.algebra, self.coords.scale(other))  # type: ignore[arg-type]
        return NotImplemented

    def __rmul__(self, other: object) -> Element:
        if isinstance(other, (FieldScalar, int, Fraction)):
            return Element(self.algebra, self.coords.scale(other))  # type: ignore[arg-type]
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def is_zero(self) -> bool:
        return self.coords.is_zero()

    def __repr__(self) -> str:
        return format_combination(self.coords, self.algebra.basis)


def format_combination(coords: ExactVector, labels: Sequence[str]) -> str:
    parts = []
    for i in coords.support():
        c = coords[i]
        if c == 1:
            parts.append(labels[i])
        elif c == -1:
            parts.append(f"-{labels[i]}")
        elif c.is_rational():
            parts.append(f"{c}*{labels[i]}")
        else:
            parts.append(f"({c})*{labels[i]}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# -- operations ---------------------------------------------------------------


def _check_algebra(H: FiniteHopfAlgebra, *elts: Element) -> None:
    for e in elts:
        if e.algebra is not H:
            raise AlgebraMismatchError(f"element of {e.algebra.name} used in {H.name}")


def multiply(H: FiniteHopfAlgebra, a: Element, b: Element) -> Element:
    _check_algebra(H, a, b)
    return Element(H, H.mult_matrix @ kron(a.coords, b.coords))  # type: ignore[arg-type]


def comultiply(H: FiniteHopfAlgebra, a: Element) -> ExactVector:
    """Coordinates of ``Delta(a)`` in the ``d^2`` tensor basis."""
    _check_algebra(H, a)
    return H.comult_matrix @ a.coords  # type: ignore[return-value]


def convolve(H: FiniteHopfAlgebra, f: ExactMatrix, g: ExactMatrix) -> ExactMatrix:
    """Matrix of ``x -> sum f(x1) g(x2)``, i.e. ``mu o (f (x) g) o Delta``."""
    d = H.dim
    if f.shape != (d, d) or g.shape != (d, d):
        raise ValueError(f"convolution needs {d}x{d} matrices")
    cidx, cval, cden, moff, mtgt, mval, mden = H._conv_plan
    fn, fd = f.int_form()
    gn, gd = g.int_form()
    num = kernels.convolve(fn, gn, d, H.field.degree, H.field.reduction, cidx, cval, moff, mtgt, mval)
    return ExactMatrix._make(H.field, d, d, num, fd * gd * cden * mden)


def endo_power(tau: ExactMatrix, k: int) -> ExactMatrix:
    return tau.power(k)


def same_structure(H1: FiniteHopfAlgebra, H2: FiniteHopfAlgebra) -> bool:
    """Entrywise equality of all structure constants (labels and names ignored)."""
    return (
        H1.field == H2.field
        and H1.dim == H2.dim
        and H1.mult == H2.mult
        and H1.comult == H2.comult
        and H1.unit == H2.unit
        and H1.counit == H2.counit
        and H1.antipode == H2.antipode
    )


def structure_differences(H1: FiniteHopfAlgebra, H2: FiniteHopfAlgebra) -> list[str]:
    diffs = []
    for attr in ("field", "dim", "mult", "comult", "unit", "counit", "antipode"):
        if getattr(H1, attr) != getattr(H2, attr):
            diffs.append(attr)
    return diffs


def _dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def dual(H: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    """The dual Hopf algebra on the dual basis."""
    D = FiniteHopfAlgebra(
        name=_dual_label(H.name),
        field=H.field,
        basis=[_dual_label(b) for b in H.basis],
        mult=[(j, k, i, c) for i, j, k, c in H.comult],
        comult=[(k, i, j, c) for i, j, k, c in H.mult],
        unit=H.counit,
        counit=H.unit,
        antipode=H.antipode.T,
    )
    return D


# -- axiom verification -------------------------------------------------------


AXIOMS = (
    "associativity",
    "unitality",
    "coassociativity",
    "counitality",
    "comultiplication_multiplicative",
    "comultiplication_unital",
    "counit_multiplicative",
    "counit_unital",
    "antipode",
)


@dataclass
class AxiomReport:
    algebra: str
    results: dict[str, bool] = dc_field(default_factory=dict)
    failures: dict[str, str] = dc_field(default_factory=dict)
    s_squared_identity: bool = True

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def failed(self) -> list[str]:
        return [name for name, passed in self.results.items() if not passed]


def _scalars(H: FiniteHopfAlgebra):
    # Fractions are markedly faster than FieldScalar wrappers over Q
    if H.field.degree == 1:
        conv = lambda c: c.coefficients[0]  # noqa: E731
    else:
        conv = lambda c: c  # noqa: E731
    mt: dict[tuple[int, int], list] = {key: [(k, conv(c)) for k, c in v] for key, v in H.mult_table.items()}
    ct = [[(j, k, conv(c)) for j, k, c in row] for row in H.comult_table]
    unit = {i: conv(H.unit[i]) for i in H.unit.support()}
    counit = [conv(c) for c in H.counit]
    S = [{r: conv(H.antipode[r, i]) for r in range(H.dim) if not H.antipode.entry_is_zero(r, i)}
         for i in range(H.dim)]
    return mt, ct, unit, counit, S


def _clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


def verify_hopf_axioms(H: FiniteHopfAlgebra) -> AxiomReport:
    """Exhaustive check of every Hopf axiom on basis tuples."""
    d = H.dim
    mt, ct, unit, counit, S = _scalars(H)
    report = AxiomReport(H.name)
    empty: list = []

    def prod(u: dict, v: dict) -> dict:
        out: dict = defaultdict(int)
        for p, a in u.items():
            for q, b in v.items():
                for k, c in mt.get((p, q), empty):
                    out[k] += a * b * c
        return _clean(out)

    def record(name: str, failure: str | None) -> None:
        report.results[name] = failure is None
        if failure is not None:
            report.failures[name] = failure

    lab = H.basis

    def assoc() -> str | None:
        for i in range(d):
            for j in range(d):
                ij = dict(mt.get((i, j), empty))
                for k in range(d):
                    jk = dict(mt.get((j, k), empty))
                    if prod(ij, {k: 1}) != prod({i: 1}, jk):
                        return f"({lab[i]}*{lab[j]})*{lab[k]} != {lab[i]}*({lab[j]}*{lab[k]})"
        return None

    record("associativity", assoc())

    def unital() -> str | None:
        for i in range(d):
            if prod(unit, {i: 1}) != {i: 1}:
                return f"1*{lab[i]} != {lab[i]}"
            if prod({i: 1}, unit) != {i: 1}:
                return f"{lab[i]}*1 != {lab[i]}"
        return None

    record("unitality", unital())

    def coassoc() -> str | None:
        for i in range(d):
            left: dict = defaultdict(int)
            right: dict = defaultdict(int)
            for j, k, e in ct[i]:
                for p, q, e2 in ct[j]:
                    left[p, q, k] += e * e2
                for p, q, e2 in ct[k]:
                    right[j, p, q] += e * e2
            if _clean(left) != _clean(right):
                return f"(Delta (x) id)Delta({lab[i]}) != (id (x) Delta)Delta({lab[i]})"
        return None

    record("coassociativity", coassoc())

    def counital() -> str | None:
        for i in range(d):
            left: dict = defaultdict(int)
            right: dict = defaultdict(int)
            for j, k, e in ct[i]:
                left[k] += counit[j] * e
                right[j] += e * counit[k]
            if _clean(left) != {i: 1} or _clean(right) != {i: 1}:
                return f"counit axiom fails on {lab[i]}"
        return None

    record("counitality", counital())

    def delta_mult() -> str | None:
        for i in range(d):
            for j in range(d):
                lhs: dict = defaultdict(int)
                for k, c in mt.get((i, j), empty):
                    for p, q, e in ct[k]:
                        lhs[p, q] += c * e
                rhs: dict = defaultdict(int)
                for p, q, e in ct[i]:
                    for r, s, e2 in ct[j]:
                        pr = mt.get((p, r), empty)
                        if not pr:
                            continue
                        qs = mt.get((q, s), empty)
                        ee = e * e2
                        for k1, c1 in pr:
                            f = ee * c1
                            for k2, c2 in qs:
                                rhs[k1, k2] += f * c2
                if _clean(lhs) != _clean(rhs):
                    return f"Delta({lab[i]}*{lab[j]}) != Delta({lab[i]})Delta({lab[j]})"
        return None

    record("comultiplication_multiplicative", delta_mult())

    def delta_unit() -> str | None:
        lhs: dict = defaultdict(int)
        for i, a in unit.items():
            for p, q, e in ct[i]:
                lhs[p, q] += a * e
        rhs = {(p, q): a * b for p, a in unit.items() for q, b in unit.items()}
        return None if _clean(lhs) == _clean(rhs) else "Delta(1) != 1 (x) 1"

    record("comultiplication_unital", delta_unit())

    def eps_mult() -> str | None:
        for i in range(d):
            for j in range(d):
                lhs = sum((counit[k] * c for k, c in mt.get((i, j), empty)), 0)
                if lhs != counit[i] * counit[j]:
                    return f"eps({lab[i]}*{lab[j]}) != eps({lab[i]})eps({lab[j]})"
        return None

    record("counit_multiplicative", eps_mult())
    record("counit_unital", None if sum((counit[i] * a for i, a in unit.items()), 0) == 1 else "eps(1) != 1")

    def antipode() -> str | None:
        for i in range(d):
            target = {k: counit[i] * a for k, a in unit.items()} if counit[i] else {}
            left: dict = defaultdict(int)
            right: dict = defaultdict(int)
            for j, k, e in ct[i]:
                for r, s in S[j].items():
                    for t, c in mt.get((r, k), empty):
                        left[t] += e * s * c
                for r, s in S[k].items():
                    for t, c in mt.get((j, r), empty):
                        right[t] += e * s * c
            if _clean(left) != _clean(target):
                return f"sum S(x1)x2 != eps(x)1 for x = {lab[i]}"
            if _clean(right) != _clean(target):
                return f"sum x1 S(x2) != eps(x)1 for x = {lab[i]}"
        return None

    record("antipode", antipode())
    report.s_squared_identity = (H.antipode @ H.antipode).is_identity()
    H._valid = report.ok
    return report


def require_valid(H: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    """Run the axiom suite once and cache the verdict; raise on failure."""
    if H._valid is None:
        verify_hopf_axioms(H)
    if not H._valid:
        report = verify_hopf_axioms(H)
        raise ValueError(f"{H.name} is not a Hopf algebra: {report.failures}")
    return H
