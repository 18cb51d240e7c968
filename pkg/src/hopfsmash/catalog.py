"""Built-in, axiom-verified Hopf algebras, automorphisms, actions and modules.

Both eight-dimensional algebras are presented by generators; multiplication
tables, coproducts, antipodes and automorphism matrices are derived by
symbolic multiplication from the generator data, never typed in by hand.

Basis orders (fixed, file formats index by position):

* ``h8``:       1, x, y, xy, z, xz, yz, xyz
* ``nichols8``: 1, g, x, gx, y, gy, xy, gxy
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Sequence

from .exact_math import Entry, ExactMatrix, FieldScalar, FieldSpec, QQ
from .hopf_core import FiniteHopfAlgebra, require_valid
from .powers import HopfAutomorphism, verify_automorphism
from .representations import Representation, trivial_rep, verify_representation
from .smash import GroupTable, HopfAction, dual_group_algebra, group_algebra, verify_action

Vec = dict[int, FieldScalar]
HALF = Fraction(1, 2)


# -- groups --------------------------------------------------------------------


def cyclic_group(n: int) -> GroupTable:
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return GroupTable([[(a + b) % n for b in range(n)] for a in range(n)], 0, labels[:n], f"C{n}")


def symmetric_group_3() -> GroupTable:
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    labels = ["1", "(12)", "(23)", "(13)", "(123)", "(132)"]
    # (p q)(i) = p(q(i)): apply q first
    table = [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]
    return GroupTable(table, 0, labels, "S3")


# -- presented algebras ------------------------------------------------------------


def _add(acc: Vec, k: int, c: FieldScalar) -> None:
    v = acc.get(k)
    v = c if v is None else v + c
    if v:
        acc[k] = v
    else:
        acc.pop(k, None)


class _Presented:
    """Helper for algebras whose basis consists of normal-form monomials.

    ``basis_mul(i, j)`` returns the product of two basis elements as a sparse
    vector. Generators are basis indices.
    """

    def __init__(self, field: FieldSpec, labels: Sequence[str], basis_mul: Callable[[int, int], Vec],
                 words: Sequence[Sequence[int]]) -> None:
        self.field = field
        self.labels = list(labels)
        self.d = len(labels)
        self._basis_mul = basis_mul
        self.words = [list(w) for w in words]  # basis element i = product of generators words[i]

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self._basis_mul(i, j).items():
                    _add(out, k, a * b * c)
        return out

    def one(self) -> Vec:
        return {0: self.field.one()}

    def vec(self, pairs: dict[int, Entry]) -> Vec:
        out: Vec = {}
        for k, c in pairs.items():
            _add(out, k, self.field.scalar(c))
        return out

    def extend(self, images: dict[int, Vec], *, anti: bool = False) -> list[Vec]:
        """Images of all basis elements under the (anti-)multiplicative extension."""
        out = []
        for w in self.words:
            acc = self.one()
            for g in w:
                acc = self.mul(images[g], acc) if anti else self.mul(acc, images[g])
            out.append(acc)
        return out

    # tensor square: sparse dict keyed by (j, k)
    def tmul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for (i1, i2), a in u.items():
            for (j1, j2), b in v.items():
                for k1, c1 in self._basis_mul(i1, j1).items():
                    for k2, c2 in self._basis_mul(i2, j2).items():
                        key = (k1, k2)
                        val = out.get(key, self.field.zero()) + a * b * c1 * c2
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    def extend_coproduct(self, images: dict[int, dict]) -> list[dict]:
        out = []
        one = self.field.one()
        for w in self.words:
            acc = {(0, 0): one}
            for g in w:
                acc = self.tmul(acc, images[g])
            out.append(acc)
        return out

    def matrix(self, columns: Sequence[Vec]) -> ExactMatrix:
        return ExactMatrix.from_entries(self.field, self.d, self.d,
                                        ((k, i, c) for i, col in enumerate(columns) for k, c in col.items()))

    def hopf(self, name: str, comult_gens: dict[int, dict], counit: Sequence[Entry],
             antipode_gens: dict[int, Vec]) -> FiniteHopfAlgebra:
        mult = [(i, j, k, c) for i in range(self.d) for j in range(self.d) for k, c in self._basis_mul(i, j).items()]
        comult = [(i, j, k, c) for i, D in enumerate(self.extend_coproduct(comult_gens)) for (j, k), c in D.items()]
        unit = [1] + [0] * (self.d - 1)
        S = self.matrix(self.extend(antipode_gens, anti=True))
        return require_valid(FiniteHopfAlgebra(name, self.field, self.labels, mult, comult, unit, counit, S))


def _bits(i: int) -> tuple[int, int, int]:
    return i & 1, (i >> 1) & 1, (i >> 2) & 1


def _idx(a: int, b: int, c: int) -> int:
    return a + 2 * b + 4 * c


_WORDS = [[g for g, bit in zip((1, 2, 4), _bits(i)) if bit] for i in range(8)]


# -- H8 --------------------------------------------------------------------------


H8_BASIS = ("1", "x", "y", "xy", "z", "xz", "yz", "xyz")


def _h8_presented(field: FieldSpec) -> _Presented:
    one = field.one()
    z_squared = {0: one * HALF, 1: one * HALF, 2: one * HALF, 3: -one * HALF}

    def basis_mul(i: int, j: int) -> Vec:
        a, b, c = _bits(i)
        a2, b2, c2 = _bits(j)
        if c:
            # z x = y z and z y = x z
            a2, b2 = b2, a2
        head = _idx((a + a2) % 2, (b + b2) % 2, 0)
        if c + c2 < 2:
            return {head + 4 * (c + c2): one}
        out: Vec = {}
        ha, hb, _ = _bits(head)
        for k, v in z_squared.items():
            ka, kb, _ = _bits(k)
            _add(out, _idx((ha + ka) % 2, (hb + kb) % 2, 0), v)
        return out

    return _Presented(field, H8_BASIS, basis_mul, _WORDS)


@dataclass
class CatalogEntry:
    name: str
    algebra: FiniteHopfAlgebra
    automorphisms: dict[str, HopfAutomorphism] = dc_field(default_factory=dict)
    representations: dict[str, Representation] = dc_field(default_factory=dict)
    notes: str = ""


def h8(field: FieldSpec = QQ) -> CatalogEntry:
    """Eight-dimensional semisimple Hopf algebra, neither commutative nor cocommutative."""
    P = _h8_presented(field)
    one = field.one()
    X, Y, Z = 1, 2, 4
    h = one * HALF
    dz = {(Z, Z): h, (Z, 5): h, (6, Z): h, (6, 5): -h}  # z(x)z + z(x)xz + yz(x)z - yz(x)xz
    H = P.hopf(
        "h8",
        comult_gens={X: {(X, X): one}, Y: {(Y, Y): one}, Z: dz},
        counit=[1] * 8,
        antipode_gens={X: {X: one}, Y: {Y: one}, Z: {Z: one}},
    )
    tau_z = P.vec({4: -HALF, 5: HALF, 6: HALF, 7: HALF})
    tau4 = verify_automorphism(H, P.matrix(P.extend({X: {Y: one}, Y: {X: one}, Z: tau_z})), name="tau4")
    N = verify_representation(H, _rep_from_generators(H, P, {
        X: [[1, 0], [0, -1]],
        Y: [[-1, 0], [0, 1]],
        Z: [[0, 1], [1, 0]],
    }), name="N")
    return CatalogEntry("h8", H, {"tau4": tau4}, {"N": N, "trivial": trivial_rep(H)},
                        "x^2 = y^2 = 1, xy = yx, xz = zy, yz = zx, z^2 = (1 + x + y - xy)/2")


def _rep_from_generators(H: FiniteHopfAlgebra, P: _Presented, gens: dict[int, list[list[Entry]]]) -> list[ExactMatrix]:
    F = H.field
    gm = {g: ExactMatrix.from_rows(F, rows) for g, rows in gens.items()}
    r = next(iter(gm.values())).rows
    out = []
    for w in P.words:
        M = ExactMatrix.identity(F, r)
        for g in w:
            M = M @ gm[g]
        out.append(M)
    return out


# -- nichols8 ----------------------------------------------------------------------


NICHOLS8_BASIS = ("1", "g", "x", "gx", "y", "gy", "xy", "gxy")


def _nichols8_presented(field: FieldSpec) -> _Presented:
    one = field.one()

    def basis_mul(i: int, j: int) -> Vec:
        a, b, c = _bits(i)
        a2, b2, c2 = _bits(j)
        if b + b2 > 1 or c + c2 > 1:
            return {}
        # move g^a2 left past x^b y^c, then x^b2 left past y^c
        sign = (-1) ** (a2 * (b + c) + c * b2)
        return {_idx((a + a2) % 2, b + b2, c + c2): one * sign}

    return _Presented(field, NICHOLS8_BASIS, basis_mul, _WORDS)


_NICHOLS_CACHE: dict[FieldSpec, CatalogEntry] = {}


def nichols8(field: FieldSpec = QQ) -> CatalogEntry:
    """Eight-dimensional non-semisimple pointed Hopf algebra with S^2 != id."""
    if field in _NICHOLS_CACHE:
        return _NICHOLS_CACHE[field]
    P = _nichols8_presented(field)
    one = field.one()
    g, x, y = 1, 2, 4
    H = P.hopf(
        "nichols8",
        comult_gens={g: {(g, g): one}, x: {(x, g): one, (0, x): one}, y: {(y, g): one, (0, y): one}},
        counit=[1, 1, 0, 0, 0, 0, 0, 0],
        antipode_gens={g: {g: one}, x: {3: one}, y: {5: one}},
    )
    zero2 = [[0, 0], [0, 0]]
    reps = {
        "trivial": trivial_rep(H),
        "sign": verify_representation(H, _rep_from_generators(H, P, {g: [[-1]], x: [[0]], y: [[0]]}), "sign"),
        "V2": verify_representation(H, _rep_from_generators(H, P, {
            g: [[1, 0], [0, -1]], x: [[0, 0], [1, 0]], y: zero2}), "V2"),
    }
    entry = CatalogEntry("nichols8", H, {}, reps,
                         "gx = -xg, gy = -yg, xy = -yx, g^2 = 1, x^2 = y^2 = 0")
    entry.automorphisms["id"] = nichols8_automorphism(1, 0, 0, 1, entry)
    entry.automorphisms["minus_id"] = nichols8_automorphism(-1, 0, 0, -1, entry)
    _NICHOLS_CACHE[field] = entry
    return entry


def nichols8_automorphism(a: Entry, b: Entry, c: Entry, d: Entry,
                          entry: CatalogEntry | None = None, *, field: FieldSpec | None = None) -> HopfAutomorphism:
    """Automorphism fixing ``g`` with ``x -> a x + b y`` and ``y -> c x + d y``."""
    if entry is None:
        entry = nichols8(field or QQ)
    H = entry.algebra
    F = H.field
    a, b, c, d = (F.scalar(v) for v in (a, b, c, d))
    if not a * d - b * c:
        raise ValueError("singular matrix: a*d - b*c = 0")
    P = _nichols8_presented(F)
    M = P.matrix(P.extend({1: {1: F.one()}, 2: P.vec({2: a, 4: b}), 4: P.vec({2: c, 4: d})}))
    return verify_automorphism(H, M, name=f"gl2({a},{b},{c},{d})")


# -- small group algebras and actions ---------------------------------------------------


def inversion_automorphism(H: FiniteHopfAlgebra, G: GroupTable) -> HopfAutomorphism:
    """``g -> g^-1`` on the group algebra of an abelian group."""
    M = ExactMatrix.from_entries(H.field, G.order, G.order, ((G.inverse(x), x, 1) for x in G))
    return verify_automorphism(H, M, name="inversion")


def power_automorphism(H: FiniteHopfAlgebra, G: GroupTable, k: int) -> HopfAutomorphism:
    """``g -> g^k`` on the group algebra of an abelian group."""
    M = ExactMatrix.from_entries(H.field, G.order, G.order, ((G.power(x, k), x, 1) for x in G))
    return verify_automorphism(H, M, name=f"power:{k}")


def kC3_inversion_action() -> HopfAction:
    G3 = cyclic_group(3)
    A = group_algebra(G3)
    inv = inversion_automorphism(A, G3)
    return verify_action(A, cyclic_group(2), [A.identity_endo, inv])


def h8_tau4_action() -> HopfAction:
    e = h8()
    A = e.algebra
    return verify_action(A, cyclic_group(2), [A.identity_endo, e.automorphisms["tau4"]])


def nichols8_minus_id_action() -> HopfAction:
    e = nichols8()
    A = e.algebra
    return verify_action(A, cyclic_group(2), [A.identity_endo, e.automorphisms["minus_id"]])


ACTIONS: dict[str, Callable[[], HopfAction]] = {
    "kC3:inversion": kC3_inversion_action,
    "h8:tau4": h8_tau4_action,
    "nichols8:minus_id": nichols8_minus_id_action,
}


# -- name lookup -----------------------------------------------------------------


def _group_by_name(name: str) -> GroupTable:
    if name == "S3":
        return symmetric_group_3()
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) >= 1:
        return cyclic_group(int(name[1:]))
    raise KeyError(f"unknown group {name!r}")


def group_for(name: str) -> GroupTable | None:
    """The group behind ``kC<n>``, ``kS3``, ``k^C<n>``, ``k^S3``; None otherwise."""
    if name.startswith("k^"):
        return _group_by_name(name[2:])
    if name.startswith("k"):
        try:
            return _group_by_name(name[1:])
        except KeyError:
            return None
    return None


def algebra_entry(name: str) -> CatalogEntry:
    if name == "h8":
        return h8()
    if name == "nichols8":
        return nichols8()
    if name.startswith("k^"):
        G = _group_by_name(name[2:])
        H = dual_group_algebra(G)
        return CatalogEntry(name, H, {}, {"trivial": trivial_rep(H)})
    if name.startswith("k"):
        G = _group_by_name(name[1:])
        H = group_algebra(G)
        return CatalogEntry(name, H, {}, {"trivial": trivial_rep(H)})
    raise KeyError(f"unknown catalog algebra {name!r}")


ALGEBRA_NAMES = ("h8", "nichols8", "kC<n>", "kS3", "k^C<n>", "k^S3")


def automorphism_by_name(entry: CatalogEntry, spec: str) -> HopfAutomorphism:
    """Resolve ``id``, ``inversion``, ``power:k``, ``gl2:a,b,c,d`` or an entry-specific name."""
    H = entry.algebra
    if spec in entry.automorphisms:
        return entry.automorphisms[spec]
    if spec == "id":
        from .powers import identity_automorphism

        return identity_automorphism(H)
    G = group_for(entry.name)
    if spec == "inversion" and G is not None and not entry.name.startswith("k^"):
        return inversion_automorphism(H, G)
    if spec.startswith("power:") and G is not None and not entry.name.startswith("k^"):
        return power_automorphism(H, G, int(spec.split(":", 1)[1]))
    if spec.startswith("gl2:") and entry.name == "nichols8":
        parts = spec.split(":", 1)[1].split(",")
        if len(parts) != 4:
            raise ValueError("gl2 needs four entries a,b,c,d")
        return nichols8_automorphism(*parts, entry)
    raise KeyError(f"unknown automorphism {spec!r} for {entry.name}")


def all_entries() -> list[CatalogEntry]:
    return [h8(), nichols8()] + [algebra_entry(n) for n in ("kC2", "kC3", "kS3", "k^C2", "k^S3")]

