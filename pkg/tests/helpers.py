"""Small independent oracles shared by several test modules."""

from hopfsmash.exact_math import ExactVector, kron
from hopfsmash.hopf_core import Element, FiniteHopfAlgebra, multiply


def tensor(a: Element, b: Element) -> list:
    return list(kron(a.coords, b.coords).column(0))


def tensor_product(H: FiniteHopfAlgebra, u: list, v: list) -> list:
    """(a (x) b)(c (x) d) = ac (x) bd on coordinate lists of length d^2."""
    d = H.dim
    out = [H.field.zero()] * (d * d)
    for p, cu in enumerate(u):
        if not cu:
            continue
        for q, cv in enumerate(v):
            if not cv:
                continue
            a, b = H.basis_element(p // d), H.basis_element(p % d)
            c, e = H.basis_element(q // d), H.basis_element(q % d)
            prod = tensor(multiply(H, a, c), multiply(H, b, e))
            out = [o + cu * cv * t for o, t in zip(out, prod)]
    return out


def sweedler_power(H: FiniteHopfAlgebra, x: Element, n: int, twist=None) -> Element:
    """x^[n,tau] (tau given as a matrix) by literal iterated coproduct into A^(x)n, then multiply factors.

    Deliberately slow and independent of the convolution recurrence.
    """
    d = H.dim
    terms = {(i,): c for i, c in enumerate(x.coords) if c}
    for _ in range(n - 1):
        nxt: dict = {}
        for word, c in terms.items():
            for j, k, e in H.comult_table[word[-1]]:
                key = word[:-1] + (j, k)
                nxt[key] = nxt.get(key, H.field.zero()) + c * e
        terms = {w: c for w, c in nxt.items() if c}
    total = H.zero()
    for word, c in terms.items():
        acc = H.one()
        for pos, i in enumerate(word):
            b = H.basis_element(i)
            if twist is not None:
                b = Element(H, twist.power(pos) @ b.coords) if pos else b
            acc = multiply(H, acc, b)
        total = total + acc * c
    return total


def vec(H: FiniteHopfAlgebra, values) -> ExactVector:
    return ExactVector.from_list(H.field, values)
