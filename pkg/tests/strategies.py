"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from hopfsmash.exact_math import ExactMatrix, FieldScalar, FieldSpec

FIELDS = [FieldSpec(1), FieldSpec(3), FieldSpec(4)]

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))


def scalars(field: FieldSpec):
    return st.lists(small_fractions, min_size=field.degree, max_size=field.degree).map(
        lambda cs: FieldScalar(field, cs))


@st.composite
def field_and_scalars(draw, count: int = 3):
    F = draw(st.sampled_from(FIELDS))
    return F, [draw(scalars(F)) for _ in range(count)]


@st.composite
def matrices(draw, field: FieldSpec, rows=None, cols=None, max_dim: int = 4):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    entries = draw(st.lists(scalars(field), min_size=r * c, max_size=r * c))
    return ExactMatrix.from_scalars(field, r, c, entries)


@st.composite
def sparse_matrices(draw, field: FieldSpec, n: int):
    """Square matrices with many zero entries (the realistic case for structure maps)."""
    entries = []
    for _ in range(n * n):
        if draw(st.booleans()):
            entries.append(field.zero())
        else:
            entries.append(draw(scalars(field)))
    return ExactMatrix.from_scalars(field, n, n, entries)
