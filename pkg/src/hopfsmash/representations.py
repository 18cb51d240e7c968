"""Matrix representations of Hopf algebras and of smash coproducts."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exact_math import ExactMatrix, FieldScalar, block_diagonal, kron
from .hopf_core import Element, FiniteHopfAlgebra
from .smash import HopfAction, SmashCoproduct


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: FiniteHopfAlgebra
    rank: int
    matrices: tuple[ExactMatrix, ...]
    name: str = "M"

    def act(self, a: Element) -> ExactMatrix:
        """``rho(a)`` for an arbitrary element."""
        out = ExactMatrix.zeros(self.algebra.field, self.rank, self.rank)
        for i in a.coords.support():
            out = out + self.matrices[i].scale(a.coords[i])
        return out

    def character(self, a: Element) -> FieldScalar:
        return self.act(a).trace()

    def character_vector(self) -> list[FieldScalar]:
        return [M.trace() for M in self.matrices]

    def same_matrices(self, other: Representation) -> bool:
        return self.rank == other.rank and self.matrices == other.matrices


def _combo(field, rank: int, terms) -> ExactMatrix:
    out = ExactMatrix.zeros(field, rank, rank)
    for c, M in terms:
        out = out + M.scale(c)
    return out


def verify_representation(H: FiniteHopfAlgebra, matrices: Sequence[ExactMatrix], name: str = "M") -> Representation:
    """Check ``rho(1) = I`` and ``rho(b_i) rho(b_j) = rho(b_i b_j)`` on all basis pairs."""
    d = H.dim
    if len(matrices) != d:
        raise RepresentationError(f"{name}: {len(matrices)} matrices for a {d}-dimensional algebra")
    r = matrices[0].rows
    for i, M in enumerate(matrices):
        if M.shape != (r, r) or M.field != H.field:
            raise RepresentationError(f"{name}: matrix for {H.basis[i]} is not {r}x{r} over {H.field}")
    F = H.field
    one = _combo(F, r, ((H.unit[i], matrices[i]) for i in H.unit.support()))
    if not one.is_identity():
        raise RepresentationError(f"{name}: rho(1) is not the identity")
    table = H.mult_table
    for i in range(d):
        for j in range(d):
            rhs = _combo(F, r, ((c, matrices[k]) for k, c in table.get((i, j), ())))
            if matrices[i] @ matrices[j] != rhs:
                raise RepresentationError(f"{name}: rho({H.basis[i]}) rho({H.basis[j]}) "
                                          f"!= rho({H.basis[i]}*{H.basis[j]})")
    return Representation(H, r, tuple(matrices), name)


def trivial_rep(H: FiniteHopfAlgebra) -> Representation:
    mats = tuple(ExactMatrix.from_rows(H.field, [[H.counit[i]]]) for i in range(H.dim))
    return Representation(H, 1, mats, "trivial")


def regular_rep(H: FiniteHopfAlgebra) -> Representation:
    return Representation(H, H.dim, tuple(H.left_mult(i) for i in range(H.dim)), "regular")


def direct_sum(*reps: Representation) -> Representation:
    H = reps[0].algebra
    mats = tuple(block_diagonal(*(rep.matrices[i] for rep in reps)) for i in range(H.dim))
    return Representation(H, sum(rep.rank for rep in reps), mats, "+".join(rep.name for rep in reps))


def twist_rep(action: HopfAction, rep: Representation, y: int) -> Representation:
    """``a .y m = (y^-1 . a) m``."""
    H, G = action.algebra, action.group
    T = action.matrix(G.inverse(y))
    mats = tuple(
        _combo(H.field, rep.rank, ((T[l, i], rep.matrices[l]) for l in range(H.dim) if not T.entry_is_zero(l, i)))
        for i in range(H.dim)
    )
    return Representation(H, rep.rank, mats, f"^{G.labels[y]}{rep.name}")


def tensor_rep(H: FiniteHopfAlgebra, rep1: Representation, rep2: Representation) -> Representation:
    """``rho(b) = sum rho1(b1) (x) rho2(b2)``."""
    r = rep1.rank * rep2.rank
    mats = []
    for i in range(H.dim):
        out = ExactMatrix.zeros(H.field, r, r)
        for j, k, e in H.comult_table[i]:
            out = out + kron(rep1.matrices[j], rep2.matrices[k]).scale(e)
        mats.append(out)
    return Representation(H, r, tuple(mats), f"{rep1.name}(x){rep2.name}")


def dual_rep(H: FiniteHopfAlgebra, rep: Representation) -> Representation:
    """``rho*(b) = rho(S b)^T``."""
    S = H.antipode
    mats = tuple(
        _combo(H.field, rep.rank, ((S[r, i], rep.matrices[r]) for r in range(H.dim) if not S.entry_is_zero(r, i))).T
        for i in range(H.dim)
    )
    return Representation(H, rep.rank, mats, f"{rep.name}*")


def extend_to_smash(sc: SmashCoproduct, rep: Representation, x: int) -> Representation:
    """The K-module equal to ``rep`` in degree ``x`` and zero elsewhere."""
    A, G, K = sc.A, sc.G, sc.K
    zero = ExactMatrix.zeros(A.field, rep.rank, rep.rank)
    mats = [zero] * K.dim
    for i in range(A.dim):
        mats[sc.index(i, x)] = rep.matrices[i]
    return verify_representation(K, mats, f"{rep.name}@{G.labels[x]}")


# -- grading by the group -----------------------------------------------------------


@dataclass
class GradedDecomposition:
    """``x -> (basis matrix of M_x, dim M_x)``; basis columns span ``M_x``."""

    rank: int
    components: dict[int, tuple[ExactMatrix | None, int]] = dc_field(default_factory=dict)

    def dims(self) -> dict[int, int]:
        return {x: n for x, (_, n) in self.components.items()}

    def support(self) -> list[int]:
        return [x for x, (_, n) in self.components.items() if n]


def _idempotents(sc: SmashCoproduct, rep: Representation) -> list[ExactMatrix]:
    return [rep.act(_idem(sc, x)) for x in sc.G]


def _idem(sc: SmashCoproduct, x: int) -> Element:
    return sc.embed(sc.A.one(), x)


def _column_basis(E: ExactMatrix) -> ExactMatrix | None:
    _, pivots = E.rref()
    if not pivots:
        return None
    cols = E.columns()
    return ExactMatrix.from_columns(E.field, [list(cols[p]) for p in pivots])


def decompose_by_group(sc: SmashCoproduct, rep: Representation) -> GradedDecomposition:
    if rep.algebra is not sc.K:
        raise RepresentationError("representation is not over the smash coproduct")
    E = _idempotents(sc, rep)
    G = sc.G
    total = ExactMatrix.zeros(sc.K.field, rep.rank, rep.rank)
    for x in G:
        total = total + E[x]
        for y in G:
            expected = E[x] if x == y else ExactMatrix.zeros(sc.K.field, rep.rank, rep.rank)
            if E[x] @ E[y] != expected:
                raise RepresentationError(f"idempotents for {G.labels[x]} and {G.labels[y]} are not orthogonal")
    if not total.is_identity():
        raise RepresentationError("component idempotents do not sum to the identity")
    dec = GradedDecomposition(rep.rank)
    for x in G:
        B = _column_basis(E[x])
        dec.components[x] = (B, 0 if B is None else B.cols)
    if sum(dec.dims().values()) != rep.rank:
        raise RepresentationError("component dimensions do not add up to the rank")
    return dec


def restrict_to_component(sc: SmashCoproduct, rep: Representation, x: int) -> Representation | None:
    """``M_x`` as an A-module (``a`` acts as ``a # p_x``); None when ``M_x = 0``."""
    B = _column_basis(_idempotents(sc, rep)[x])
    if B is None:
        return None
    mats = tuple(B.solve(rep.matrices[sc.index(i, x)] @ B) for i in range(sc.A.dim))
    return Representation(sc.A, B.cols, mats, f"{rep.name}_{sc.G.labels[x]}")


def restrict_to_algebra(sc: SmashCoproduct, rep: Representation) -> Representation:
    """A-module structure through ``a -> a # 1``."""
    A, K = sc.A, sc.K
    mats = []
    for i in range(A.dim):
        out = ExactMatrix.zeros(K.field, rep.rank, rep.rank)
        for x in sc.G:
            out = out + rep.matrices[sc.index(i, x)]
        mats.append(out)
    return Representation(A, rep.rank, tuple(mats), f"{rep.name}|A")


def degree_of(sc: SmashCoproduct, rep: Representation) -> int | None:
    """The unique ``x`` with ``M = M_x``, or None if ``M`` is spread over several degrees."""
    E = _idempotents(sc, rep)
    for x in sc.G:
        if E[x].is_identity():
            return x
    return None


def degree_of_component(dec: GradedDecomposition) -> int | None:
    supp = dec.support()
    return supp[0] if len(supp) == 1 else None


@dataclass(frozen=True)
class TensorDualReport:
    tensor_degree_ok: bool
    tensor_matrices_equal: bool
    dual_degree_ok: bool
    dual_matrices_equal: bool

    @property
    def ok(self) -> bool:
        return all((self.tensor_degree_ok, self.tensor_matrices_equal, self.dual_degree_ok, self.dual_matrices_equal))


def tensor_dual_grading_check(sc: SmashCoproduct, M: Representation, N: Representation) -> TensorDualReport:
    """Grading of tensor products and duals of single-degree K-modules, as matrix equalities.

    (i)  ``M (x) N`` lives in degree ``yz`` and equals ``M|A (x) ^y(N|A)`` placed there;
    (ii) ``M*`` lives in degree ``y^-1`` and restricts to ``^{y^-1}((M|A)*)``.
    """
    G, K, A = sc.G, sc.K, sc.A
    y, z = degree_of(sc, M), degree_of(sc, N)
    if y is None or z is None:
        raise RepresentationError("both modules must be concentrated in a single degree")
    MN = tensor_rep(K, M, N)
    yz = G.mul(y, z)
    MA, NA = restrict_to_algebra(sc, M), restrict_to_algebra(sc, N)
    built = extend_to_smash(sc, tensor_rep(A, MA, twist_rep(sc.action, NA, y)), yz)
    Md = dual_rep(K, M)
    yi = G.inverse(y)
    expected_dual = twist_rep(sc.action, dual_rep(A, MA), yi)
    return TensorDualReport(
        tensor_degree_ok=degree_of(sc, MN) == yz,
        tensor_matrices_equal=MN.same_matrices(built),
        dual_degree_ok=degree_of(sc, Md) == yi,
        dual_matrices_equal=restrict_to_algebra(sc, Md).same_matrices(expected_dual),
    )


def split_by_degree(sc: SmashCoproduct, rep: Representation) -> list[tuple[int, Representation]]:
    """Single-degree summands ``M_x`` of a K-module, each as a K-module."""
    out = []
    for x in sc.G:
        part = restrict_to_component(sc, rep, x)
        if part is not None:
            out.append((x, extend_to_smash(sc, part, x)))
    return out
