"""Exact arithmetic over cyclotomic fields Q(zeta_n) and dense linear algebra.

Scalars are vectors of reduced fractions in the power basis
``1, z, ..., z^(phi(n)-1)``.  Matrices are stored as flat integer numerators
over one common denominator, which is the layout the kernels consume.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from . import kernels

Rational = Union[int, Fraction]


class ScalarSyntaxError(ValueError):
    pass


class FieldMismatchError(ValueError):
    pass


# -- cyclotomic polynomials -------------------------------------------------


def _polydiv_exact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (low-to-high), ``den`` monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for shift in range(len(quot) - 1, -1, -1):
        c = num[shift + dd]
        quot[shift] = c
        if c:
            for s, dc in enumerate(den):
                num[shift + s] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _zeta_powers(n: int) -> tuple[tuple[int, ...], ...]:
    # row u = coordinates of z^u, for u up to max(n, 2*phi - 1)
    phi_n = cyclotomic_polynomial(n)
    phi = len(phi_n) - 1
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(max(n, 2 * phi - 1)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for s in range(phi):
                cur[s] -= top * phi_n[s]
    return tuple(rows)


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(zeta_n); ``n = 1`` (and ``n = 2``) is the rationals."""

    cyclotomic_order: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.cyclotomic_order, int) or self.cyclotomic_order < 1:
            raise ValueError(f"cyclotomic order must be a positive integer, got {self.cyclotomic_order!r}")

    @property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.cyclotomic_order)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def reduction(self) -> tuple[tuple[int, ...], ...]:
        return _zeta_powers(self.cyclotomic_order)

    def zero(self) -> FieldScalar:
        return FieldScalar(self, (Fraction(0),) * self.degree)

    def one(self) -> FieldScalar:
        return self.rational(1)

    def rational(self, value: Rational) -> FieldScalar:
        return FieldScalar(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def zeta(self, power: int = 1) -> FieldScalar:
        n = self.cyclotomic_order
        row = self.reduction[power % n]
        return FieldScalar(self, tuple(Fraction(c) for c in row))

    def scalar(self, value: object) -> FieldScalar:
        """Coerce an int, Fraction, literal string or FieldScalar into this field."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar over {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, (int, Fraction)):
            return self.rational(value)
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    def parse(self, text: str) -> FieldScalar:
        return parse_scalar(text, self)

    def __str__(self) -> str:
        return "Q" if self.cyclotomic_order == 1 else f"Q(z{self.cyclotomic_order})"


QQ = FieldSpec(1)


# -- scalars ----------------------------------------------------------------


class FieldScalar:
    """Immutable element of Q(zeta_n) with canonical coefficient vector."""

    __slots__ = ("field", "coefficients")

    def __init__(self, field: FieldSpec, coefficients: Sequence[Rational]) -> None:
        if len(coefficients) != field.degree:
            raise ValueError(f"expected {field.degree} coefficients, got {len(coefficients)}")
        self.field = field
        self.coefficients = tuple(Fraction(c) for c in coefficients)

    @classmethod
    def _raw(cls, field: FieldSpec, coefficients: tuple[Fraction, ...]) -> FieldScalar:
        obj = cls.__new__(cls)
        obj.field = field
        obj.coefficients = coefficients
        return obj

    def _coerce(self, other: object) -> FieldScalar | None:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine scalars over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0]

    def __add__(self, other: object) -> FieldScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar._raw(self.field, tuple(a + b for a, b in zip(self.coefficients, o.coefficients)))

    __radd__ = __add__

    def __neg__(self) -> FieldScalar:
        return FieldScalar._raw(self.field, tuple(-a for a in self.coefficients))

    def __sub__(self, other: object) -> FieldScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar._raw(self.field, tuple(a - b for a, b in zip(self.coefficients, o.coefficients)))

    def __rsub__(self, other: object) -> FieldScalar:
        return (-self) + other

    def __mul__(self, other: object) -> FieldScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        phi = self.field.degree
        if phi == 1:
            return FieldScalar._raw(self.field, (self.coefficients[0] * o.coefficients[0],))
        tmp = [Fraction(0)] * (2 * phi - 1)
        for u, a in enumerate(self.coefficients):
            if a:
                for v, b in enumerate(o.coefficients):
                    if b:
                        tmp[u + v] += a * b
        out = tmp[:phi]
        red = self.field.reduction
        for u in range(phi, 2 * phi - 1):
            c = tmp[u]
            if c:
                for s in range(phi):
                    out[s] += c * red[u][s]
        return FieldScalar._raw(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> FieldScalar:
        return invert_scalar(self)

    def __truediv__(self, other: object) -> FieldScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * invert_scalar(o)

    def __rtruediv__(self, other: object) -> FieldScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * invert_scalar(self)

    def __pow__(self, exponent: int) -> FieldScalar:
        if exponent < 0:
            return invert_scalar(self) ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coefficients[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coefficients[0])
        return hash((self.field, self.coefficients))

    def __repr__(self) -> str:
        return f"FieldScalar({self.field}, {str(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def format_scalar(s: FieldScalar) -> str:
    terms: list[tuple[bool, str]] = []
    for power, c in enumerate(s.coefficients):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if power == 0:
            body = str(mag)
        else:
            zpow = "z" if power == 1 else f"z^{power}"
            body = zpow if mag == 1 else f"{mag}*{zpow}"
        terms.append((neg, body))
    if not terms:
        return "0"
    first_neg, first = terms[0]
    out = ("-" if first_neg else "") + first
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?(?:\s*\*\s*(?P<z1>z)(?:\s*\^\s*(?P<e1>\d+))?)?
          | (?P<z2>z)(?:\s*\^\s*(?P<e2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str, field: FieldSpec) -> FieldScalar:
    """Parse a literal such as ``"3/2"``, ``"1/2*z"`` or ``"z^2 + z + 1"``."""
    if not isinstance(text, str):
        raise ScalarSyntaxError(f"scalar literal must be a string, got {type(text).__name__}")
    src = text.replace("−", "-")
    if not src.strip():
        raise ScalarSyntaxError("empty scalar literal")
    n = field.cyclotomic_order
    acc = [Fraction(0)] * field.degree
    red = field.reduction
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if m is None or m.end() == pos or (m.group("num") is None and m.group("z2") is None):
            raise ScalarSyntaxError(f"cannot parse scalar literal {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise ScalarSyntaxError(f"missing operator in scalar literal {text!r} at position {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("num") is not None:
            den = int(m.group("den")) if m.group("den") is not None else 1
            if den == 0:
                raise ScalarSyntaxError(f"zero denominator in {text!r}")
            coeff = Fraction(int(m.group("num")), den)
            has_z = m.group("z1") is not None
            exp = int(m.group("e1")) if m.group("e1") is not None else 1
        else:
            coeff = Fraction(1)
            has_z = True
            exp = int(m.group("e2")) if m.group("e2") is not None else 1
        if not has_z:
            exp = 0
        elif n == 1:
            raise FieldMismatchError(f"literal {text!r} uses z but the field is Q (order 1)")
        row = red[exp % n]
        for s in range(field.degree):
            acc[s] += sign * coeff * row[s]
        pos = m.end()
    return FieldScalar._raw(field, tuple(acc))


def invert_scalar(s: FieldScalar) -> FieldScalar:
    """Multiplicative inverse, by solving the multiplication-by-``s`` system."""
    if s.is_zero():
        raise ZeroDivisionError("inverse of zero scalar")
    field = s.field
    phi = field.degree
    if phi == 1:
        return FieldScalar._raw(field, (1 / s.coefficients[0],))
    # column v = coordinates of s * z^v
    cols = [(s * field.zeta(v)).coefficients for v in range(phi)]
    system = [[cols[v][u] for v in range(phi)] + [Fraction(int(u == 0))] for u in range(phi)]
    reduced, pivots = _rref(system, phi)
    if len(pivots) < phi:
        raise ZeroDivisionError(f"{s} is not invertible")
    return FieldScalar._raw(field, tuple(reduced[r][phi] for r in range(phi)))


# -- Gaussian elimination on python-level entries --------------------------


def _rref(rows: list[list], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form in place; pivots searched in the first ``ncols`` columns."""
    if not rows:
        return rows, []
    width = len(rows[0])
    if ncols is None:
        ncols = width
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = rows[r] = [v * inv for v in prow]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    rows[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


# -- matrices ---------------------------------------------------------------


def _to_int_form(field: FieldSpec, scalars: Iterable[FieldScalar]) -> tuple[list[int], int]:
    coeffs: list[Fraction] = []
    for s in scalars:
        coeffs.extend(s.coefficients)
    den = math.lcm(1, *(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if not any(num):
        return tuple(0 for _ in num), 1
    if den < 0:
        num, den = [-v for v in num], -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [v // g for v in num]
        den //= g
    return tuple(num), den


Entry = Union[FieldScalar, int, Fraction, str]


class ExactMatrix:
    """Dense matrix over Q(zeta_n), row-major, common-denominator storage."""

    __slots__ = ("field", "rows", "cols", "_num", "_den")

    def __init__(self, field: FieldSpec, rows: int, cols: int, num: Sequence[int], den: int = 1) -> None:
        if len(num) != rows * cols * field.degree:
            raise ValueError("numerator length does not match shape")
        if den == 0:
            raise ZeroDivisionError("zero common denominator")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._num, self._den = _normalize(num, den)

    @staticmethod
    def _make(field: FieldSpec, rows: int, cols: int, num: Sequence[int], den: int) -> ExactMatrix:
        cls = ExactVector if cols == 1 else ExactMatrix
        obj = cls.__new__(cls)
        obj.field, obj.rows, obj.cols = field, rows, cols
        obj._num, obj._den = _normalize(num, den)
        return obj

    # construction

    @classmethod
    def from_scalars(cls, field: FieldSpec, rows: int, cols: int, entries: Sequence[Entry]) -> ExactMatrix:
        scalars = [field.scalar(e) for e in entries]
        if len(scalars) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(scalars)}")
        num, den = _to_int_form(field, scalars)
        return cls._make(field, rows, cols, num, den)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Entry]]) -> ExactMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls.from_scalars(field, nrows, ncols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Entry]]) -> ExactMatrix:
        ncols = len(columns)
        nrows = len(columns[0]) if ncols else 0
        return cls.from_scalars(field, nrows, ncols,
                                [columns[j][i] for i in range(nrows) for j in range(ncols)])

    @classmethod
    def from_entries(cls, field: FieldSpec, rows: int, cols: int,
                     entries: Iterable[tuple[int, int, Entry]]) -> ExactMatrix:
        """Sparse constructor; repeated positions accumulate."""
        zero = field.zero()
        dense = [zero] * (rows * cols)
        for i, j, c in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            dense[i * cols + j] = dense[i * cols + j] + field.scalar(c)
        return cls.from_scalars(field, rows, cols, dense)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> ExactMatrix:
        return cls._make(field, rows, cols, [0] * (rows * cols * field.degree), 1)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> ExactMatrix:
        phi = field.degree
        num = [0] * (n * n * phi)
        for i in range(n):
            num[(i * n + i) * phi] = 1
        return cls._make(field, n, n, num, 1)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def int_form(self) -> tuple[tuple[int, ...], int]:
        """Flat numerators (``phi`` per entry) and the common denominator."""
        return self._num, self._den

    def _entry(self, i: int, j: int) -> FieldScalar:
        phi = self.field.degree
        o = (i * self.cols + j) * phi
        den = self._den
        return FieldScalar._raw(self.field, tuple(Fraction(v, den) for v in self._num[o:o + phi]))

    def __getitem__(self, key: tuple[int, int]) -> FieldScalar:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self._entry(i, j)

    def entry_is_zero(self, i: int, j: int) -> bool:
        phi = self.field.degree
        o = (i * self.cols + j) * phi
        return not any(self._num[o:o + phi])

    def to_rows(self) -> list[list[FieldScalar]]:
        return [[self._entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def column(self, j: int) -> ExactVector:
        phi = self.field.degree
        num: list[int] = []
        for i in range(self.rows):
            o = (i * self.cols + j) * phi
            num.extend(self._num[o:o + phi])
        return ExactMatrix._make(self.field, self.rows, 1, num, self._den)  # type: ignore[return-value]

    def columns(self) -> list[ExactVector]:
        return [self.column(j) for j in range(self.cols)]

    def row(self, i: int) -> ExactVector:
        phi = self.field.degree
        o = i * self.cols * phi
        return ExactMatrix._make(self.field, self.cols, 1, self._num[o:o + self.cols * phi], self._den)  # type: ignore[return-value]

    def nonzero_entries(self) -> Iterator[tuple[int, int, FieldScalar]]:
        for i in range(self.rows):
            for j in range(self.cols):
                if not self.entry_is_zero(i, j):
                    yield i, j, self._entry(i, j)

    # arithmetic

    def _check(self, other: ExactMatrix) -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"matrices over {self.field} and {other.field}")

    def _linear(self, other: ExactMatrix, sign: int) -> ExactMatrix:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = math.lcm(self._den, other._den)
        fa, fb = den // self._den, sign * (den // other._den)
        num = [a * fa + b * fb for a, b in zip(self._num, other._num)]
        return ExactMatrix._make(self.field, self.rows, self.cols, num, den)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._linear(other, 1)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._linear(other, -1)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix._make(self.field, self.rows, self.cols, [-v for v in self._num], self._den)

    def scale(self, s: Entry) -> ExactMatrix:
        s = self.field.scalar(s)
        phi = self.field.degree
        snum, sden = _to_int_form(self.field, [s])
        if phi == 1:
            c = snum[0]
            return ExactMatrix._make(self.field, self.rows, self.cols, [v * c for v in self._num], self._den * sden)
        from ._pykernels import _pmul
        red = self.field.reduction
        num: list[int] = []
        for o in range(0, len(self._num), phi):
            num.extend(_pmul(self._num[o:o + phi], snum, phi, red))
        return ExactMatrix._make(self.field, self.rows, self.cols, num, self._den * sden)

    def __mul__(self, s: object) -> ExactMatrix:
        if isinstance(s, (FieldScalar, int, Fraction)):
            return self.scale(s)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        num = kernels.matmul(self._num, other._num, self.rows, self.cols, other.cols,
                             self.field.degree, self.field.reduction)
        return ExactMatrix._make(self.field, self.rows, other.cols, num, self._den * other._den)

    def power(self, k: int) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse().power(-k)
        result = ExactMatrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> ExactMatrix:
        phi = self.field.degree
        num: list[int] = []
        for j in range(self.cols):
            for i in range(self.rows):
                o = (i * self.cols + j) * phi
                num.extend(self._num[o:o + phi])
        return ExactMatrix._make(self.field, self.cols, self.rows, num, self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == ExactMatrix.identity(self.field, self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows and self.cols == other.cols
                and self._den == other._den and self._num == other._num)

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self._num, self._den))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.to_rows())
        return f"ExactMatrix({self.rows}x{self.cols}, [{body}])"

    # linear algebra

    def _python_rows(self) -> list[list]:
        # Fractions for Q, FieldScalars otherwise
        if self.field.degree == 1:
            den = self._den
            c = self.cols
            return [[Fraction(v, den) for v in self._num[i * c:(i + 1) * c]] for i in range(self.rows)]
        return self.to_rows()

    def _from_python_rows(self, rows: list[list], ncols: int) -> ExactMatrix:
        flat = [self.field.scalar(v) for r in rows for v in r]
        return ExactMatrix.from_scalars(self.field, len(rows), ncols, flat)

    def rref(self) -> tuple[ExactMatrix, list[int]]:
        rows, pivots = _rref(self._python_rows(), self.cols)
        return self._from_python_rows(rows, self.cols), pivots

    def rank(self) -> int:
        return len(_rref(self._python_rows(), self.cols)[1])

    def kernel(self) -> list[ExactVector]:
        return kernel(self)

    def inverse(self) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        one = Fraction(1) if self.field.degree == 1 else self.field.one()
        zero = Fraction(0) if self.field.degree == 1 else self.field.zero()
        aug = [row + [one if i == j else zero for j in range(n)] for i, row in enumerate(self._python_rows())]
        rows, pivots = _rref(aug, n)
        if len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return self._from_python_rows([r[n:] for r in rows], n)

    def solve(self, rhs: ExactMatrix) -> ExactMatrix:
        """Some ``X`` with ``self @ X == rhs``; raises ValueError if none exists."""
        self._check(rhs)
        if rhs.rows != self.rows:
            raise ValueError("right-hand side has wrong row count")
        n, k = self.cols, rhs.cols
        aug = [a + b for a, b in zip(self._python_rows(), rhs._python_rows())]
        rows, pivots = _rref(aug, n)
        for r in rows[len(pivots):]:
            if any(r[n:]):
                raise ValueError("linear system is inconsistent")
        zero = Fraction(0) if self.field.degree == 1 else self.field.zero()
        sol = [[zero] * k for _ in range(n)]
        for r, c in enumerate(pivots):
            sol[c] = rows[r][n:]
        return self._from_python_rows(sol, k)

    def trace(self) -> FieldScalar:
        return trace(self)

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        return kron(self, other)


class ExactVector(ExactMatrix):
    """Column vector; indexing with a single integer."""

    __slots__ = ()

    @classmethod
    def from_list(cls, field: FieldSpec, values: Sequence[Entry]) -> ExactVector:
        return ExactMatrix.from_scalars(field, len(values), 1, values)  # type: ignore[return-value]

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> ExactVector:
        return ExactMatrix.zeros(field, n, 1)  # type: ignore[return-value]

    @classmethod
    def unit(cls, field: FieldSpec, n: int, i: int) -> ExactVector:
        num = [0] * (n * field.degree)
        num[i * field.degree] = 1
        return ExactMatrix._make(field, n, 1, num, 1)  # type: ignore[return-value]

    def __len__(self) -> int:
        return self.rows

    def __getitem__(self, i):  # type: ignore[override]
        if isinstance(i, tuple):
            return super().__getitem__(i)
        if not 0 <= i < self.rows:
            raise IndexError(i)
        return self._entry(i, 0)

    def __iter__(self) -> Iterator[FieldScalar]:
        return (self._entry(i, 0) for i in range(self.rows))

    def is_zero_at(self, i: int) -> bool:
        return self.entry_is_zero(i, 0)

    def support(self) -> list[int]:
        return [i for i in range(self.rows) if not self.entry_is_zero(i, 0)]

    def dot(self, other: ExactVector) -> FieldScalar:
        return (self.T @ other)[0, 0]

    def first_nonzero(self) -> int | None:
        for i in range(self.rows):
            if not self.entry_is_zero(i, 0):
                return i
        return None

    def __repr__(self) -> str:
        return f"ExactVector([{', '.join(str(e) for e in self)}])"


def kernel(m: ExactMatrix) -> list[ExactVector]:
    """Basis of the right null space, one vector per free column."""
    rows, pivots = _rref(m._python_rows(), m.cols)
    field = m.field
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec: list = [0] * m.cols
        vec[free] = 1
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][free]
        basis.append(ExactVector.from_list(field, [field.scalar(v) for v in vec]))
    return basis


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    a._check(b)
    num = kernels.kron(a._num, b._num, a.rows, a.cols, b.rows, b.cols, a.field.degree, a.field.reduction)
    return ExactMatrix._make(a.field, a.rows * b.rows, a.cols * b.cols, num, a._den * b._den)


def trace(m: ExactMatrix) -> FieldScalar:
    if m.rows != m.cols:
        raise ValueError(f"trace of non-square {m.rows}x{m.cols} matrix")
    phi = m.field.degree
    acc = [0] * phi
    for i in range(m.rows):
        o = (i * m.cols + i) * phi
        for s in range(phi):
            acc[s] += m._num[o + s]
    return FieldScalar._raw(m.field, tuple(Fraction(v, m._den) for v in acc))


def block_diagonal(*blocks: ExactMatrix) -> ExactMatrix:
    field = blocks[0].field
    n = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    entries = []
    r0 = c0 = 0
    for b in blocks:
        for i, j, v in b.nonzero_entries():
            entries.append((r0 + i, c0 + j, v))
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix.from_entries(field, n, c, entries)


def _rescaled(m: ExactMatrix, den: int) -> list[int]:
    f = den // m._den
    return [v * f for v in m._num]


def vstack(*blocks: ExactMatrix) -> ExactMatrix:
    if not blocks:
        raise ValueError("vstack of nothing")
    field, cols = blocks[0].field, blocks[0].cols
    if any(b.field != field or b.cols != cols for b in blocks):
        raise ValueError("vstack needs equal column counts over one field")
    den = math.lcm(*(b._den for b in blocks))
    num: list[int] = []
    for b in blocks:
        num.extend(_rescaled(b, den))
    return ExactMatrix._make(field, sum(b.rows for b in blocks), cols, num, den)


def hstack(*blocks: ExactMatrix) -> ExactMatrix:
    if not blocks:
        raise ValueError("hstack of nothing")
    return vstack(*(b.T for b in blocks)).T
