"""Finite groups, Hopf actions, the smash coproduct ``A # k^G`` and its dual.

Basis element ``a_i # p_x`` of the smash coproduct (and ``a_i* # x`` of the
smash product) sits at flat index ``x * dim(A) + i``, so each group element
owns a contiguous block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .exact_math import ExactMatrix, FieldSpec, QQ
from .hopf_core import Element, FiniteHopfAlgebra, dual, require_valid, structure_differences
from .integrals import left_integral
from .powers import HopfAutomorphism, verify_automorphism


class GroupError(ValueError):
    pass


class ActionError(ValueError):
    pass


class GroupTable:
    """A finite group given by its multiplication table on ``0..n-1``."""

    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0,
                 labels: Sequence[str] | None = None, name: str = "G") -> None:
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupError("table must be square and nonempty")
        if any(not 0 <= v < n for row in table for v in row):
            raise GroupError("table entries out of range")
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.name = name
        if len(self.labels) != n:
            raise GroupError("one label per element required")
        t = self.table
        for x in range(n):
            if t[identity][x] != x or t[x][identity] != x:
                raise GroupError(f"{self.labels[identity]} is not an identity for {self.labels[x]}")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        raise GroupError(f"associativity fails at ({self.labels[x]}, {self.labels[y]}, {self.labels[z]})")
        inv = []
        for x in range(n):
            found = [y for y in range(n) if t[x][y] == identity]
            if len(found) != 1 or t[found[0]][x] != identity:
                raise GroupError(f"{self.labels[x]} has no two-sided inverse")
            inv.append(found[0])
        self.inverses = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self, x: int) -> int:
        return self.inverses[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse(x), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(x) for x in self))

    def index(self, label: str | int) -> int:
        return label if isinstance(label, int) else self.labels.index(label)


# -- kG and k^G -----------------------------------------------------------------


def _permutation(field: FieldSpec, perm: Sequence[int]) -> ExactMatrix:
    return ExactMatrix.from_entries(field, len(perm), len(perm), ((perm[i], i, 1) for i in range(len(perm))))


def group_algebra(G: GroupTable, field: FieldSpec = QQ) -> FiniteHopfAlgebra:
    n = G.order
    H = FiniteHopfAlgebra(
        name=f"k{G.name}",
        field=field,
        basis=G.labels,
        mult=[(x, y, G.mul(x, y), 1) for x in G for y in G],
        comult=[(x, x, x, 1) for x in G],
        unit=[1 if x == G.identity else 0 for x in G],
        counit=[1] * n,
        antipode=_permutation(field, G.inverses),
    )
    return require_valid(H)


def dual_group_algebra(G: GroupTable, field: FieldSpec = QQ) -> FiniteHopfAlgebra:
    n = G.order
    H = FiniteHopfAlgebra(
        name=f"k^{G.name}",
        field=field,
        basis=[f"p_{lab}" for lab in G.labels],
        mult=[(x, x, x, 1) for x in G],
        comult=[(x, y, G.mul(G.inverse(y), x), 1) for x in G for y in G],
        unit=[1] * n,
        counit=[1 if x == G.identity else 0 for x in G],
        antipode=_permutation(field, G.inverses),
    )
    return require_valid(H)


# -- actions ----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HopfAction:
    algebra: FiniteHopfAlgebra
    group: GroupTable
    auts: tuple[HopfAutomorphism, ...]

    def matrix(self, x: int) -> ExactMatrix:
        return self.auts[x].matrix

    def aut(self, x: int) -> HopfAutomorphism:
        return self.auts[x]

    def act(self, x: int, a: Element) -> Element:
        return self.auts[x](a)


def verify_action(A: FiniteHopfAlgebra, G: GroupTable,
                  matrices: Sequence[ExactMatrix | HopfAutomorphism]) -> HopfAction:
    """Check that ``x -> matrices[x]`` is a group action by Hopf automorphisms."""
    if len(matrices) != G.order:
        raise ActionError(f"{len(matrices)} matrices for a group of order {G.order}")
    auts: list[HopfAutomorphism] = []
    for x, M in enumerate(matrices):
        label = G.labels[x]
        if isinstance(M, HopfAutomorphism):
            if M.algebra is not A:
                raise ActionError(f"automorphism for {label} belongs to another algebra")
            auts.append(M)
            continue
        try:
            auts.append(verify_automorphism(A, M, name=label))
        except ValueError as exc:
            raise ActionError(f"element {label}: {exc}") from exc
    if not auts[G.identity].matrix.is_identity():
        raise ActionError(f"identity law fails: {G.labels[G.identity]} does not act trivially")
    for x in G:
        for y in G:
            if auts[x].matrix @ auts[y].matrix != auts[G.mul(x, y)].matrix:
                raise ActionError(f"homomorphism law fails: {G.labels[x]}.({G.labels[y]}.a) "
                                  f"!= ({G.labels[G.mul(x, y)]}).a")
    return HopfAction(A, G, tuple(auts))


# -- smash coproduct --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SmashCoproduct:
    action: HopfAction
    K: FiniteHopfAlgebra

    @property
    def A(self) -> FiniteHopfAlgebra:
        return self.action.algebra

    @property
    def G(self) -> GroupTable:
        return self.action.group

    def index(self, i: int, x: int) -> int:
        return x * self.A.dim + i

    def split(self, flat: int) -> tuple[int, int]:
        x, i = divmod(flat, self.A.dim)
        return i, x

    def embed(self, a: Element, x: int) -> Element:
        """``a # p_x`` as an element of K."""
        entries = [(self.index(i, x), 0, a.coords[i]) for i in a.coords.support()]
        vec = ExactMatrix.from_entries(self.K.field, self.K.dim, 1, entries)
        return Element(self.K, vec)  # type: ignore[arg-type]

    @cached_property
    def integral(self) -> Element:
        """``Lambda_A # p_1``."""
        return self.embed(left_integral(self.A), self.G.identity)


def smash_label(a: str, x: str) -> str:
    return f"{a}♮p_{x}"


def smash_coproduct(action: HopfAction, *, verify: bool = True) -> SmashCoproduct:
    A, G = action.algebra, action.group
    d, F = A.dim, A.field
    idx = lambda i, x: x * d + i  # noqa: E731
    # columns of each action matrix, as sparse lists
    acts = [{k: list(_column_entries(action.matrix(x), k)) for k in range(d)} for x in G]

    mult = [(idx(i, x), idx(j, x), idx(k, x), c) for x in G for i, j, k, c in A.mult]
    comult = []
    for x in G:
        for y in G:
            yi = G.inverse(y)
            rest = G.mul(yi, x)
            for i, j, k, e in A.comult:
                for l, t in acts[yi][k]:
                    comult.append((idx(i, x), idx(j, y), idx(l, rest), e * t))
    unit = [A.unit[i] for _ in G for i in range(d)]
    counit = [A.counit[i] if x == G.identity else F.zero() for x in G for i in range(d)]
    S_entries = []
    for x in G:
        xi = G.inverse(x)
        TS = action.matrix(xi) @ A.antipode
        for l, i, c in TS.nonzero_entries():
            S_entries.append((idx(l, xi), idx(i, x), c))
    K = FiniteHopfAlgebra(
        name=f"{A.name}♮k^{G.name}",
        field=F,
        basis=[smash_label(a, G.labels[x]) for x in G for a in A.basis],
        mult=mult,
        comult=comult,
        unit=unit,
        counit=counit,
        antipode=ExactMatrix.from_entries(F, d * G.order, d * G.order, S_entries),
    )
    if verify:
        require_valid(K)
    return SmashCoproduct(action, K)


def _column_entries(M: ExactMatrix, k: int):
    for l in range(M.rows):
        if not M.entry_is_zero(l, k):
            yield l, M[l, k]


def smash_product(action: HopfAction, *, verify: bool = True) -> FiniteHopfAlgebra:
    """The Hopf algebra ``A* # kG`` on the basis ``a_i* # x``."""
    A, G = action.algebra, action.group
    d, F = A.dim, A.field
    idx = lambda i, x: x * d + i  # noqa: E731
    # (a_i* # x)(a_j* # y) = sum_m T_{x^-1}[j, m] a_i* a_m* # xy,  a_i* a_m* = sum_k e_k^{im} a_k*
    dual_prod: dict[tuple[int, int], list] = {}
    for k, i, m, e in A.comult:
        dual_prod.setdefault((i, m), []).append((k, e))
    mult = []
    for x in G:
        Tinv = action.matrix(G.inverse(x))
        for y in G:
            xy = G.mul(x, y)
            for j in range(d):
                for m, t in _row_entries(Tinv, j):
                    for i in range(d):
                        for k, e in dual_prod.get((i, m), ()):
                            mult.append((idx(i, x), idx(j, y), idx(k, xy), t * e))
    comult = [(idx(k, x), idx(i, x), idx(j, x), c) for x in G for i, j, k, c in A.mult]
    unit = [A.counit[i] if x == G.identity else F.zero() for x in G for i in range(d)]
    counit = [A.unit[i] for _ in G for i in range(d)]
    S_entries = []
    for x in G:
        xi = G.inverse(x)
        ST = A.antipode @ action.matrix(x)
        # column (i, x) of S holds (S T_x)[i, l] at (l, x^-1)
        for i, l, c in ST.nonzero_entries():
            S_entries.append((idx(l, xi), idx(i, x), c))
    D = FiniteHopfAlgebra(
        name=f"{A.name}*#k{G.name}",
        field=F,
        basis=[f"{a}*#{G.labels[x]}" for x in G for a in A.basis],
        mult=mult,
        comult=comult,
        unit=unit,
        counit=counit,
        antipode=ExactMatrix.from_entries(F, d * G.order, d * G.order, S_entries),
    )
    if verify:
        require_valid(D)
    return D


def _row_entries(M: ExactMatrix, j: int):
    for m in range(M.cols):
        if not M.entry_is_zero(j, m):
            yield m, M[j, m]


@dataclass(frozen=True)
class DualityReport:
    equal: bool
    differences: tuple[str, ...]


def duality_check(action: HopfAction, sc: SmashCoproduct | None = None) -> DualityReport:
    """Compare the dual of the smash coproduct with the smash product entrywise."""
    if sc is None:
        sc = smash_coproduct(action)
    diffs = structure_differences(dual(sc.K), smash_product(action))
    return DualityReport(not diffs, tuple(diffs))


def component_idempotent(sc: SmashCoproduct, x: int) -> Element:
    """``1_A # p_x``."""
    return sc.embed(sc.A.one(), x)


def trivial_action(A: FiniteHopfAlgebra) -> HopfAction:
    G = GroupTable([[0]], labels=["1"], name="1")
    return verify_action(A, G, [A.identity_endo])


def action_from_generator(A: FiniteHopfAlgebra, aut: HopfAutomorphism, G: GroupTable | None = None) -> HopfAction:
    """The cyclic group generated by ``aut`` acting on ``A``; element ``k`` acts by ``aut^k``."""
    from .catalog import cyclic_group

    if G is None:
        G = cyclic_group(aut.order)
    mats = [aut.matrix.power(k) for k in range(G.order)]
    return verify_action(A, G, mats)

