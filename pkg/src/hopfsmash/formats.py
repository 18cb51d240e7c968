"""JSON file formats for algebras, automorphisms, actions and representations.

Scalars are stored as literals (``"1/2"``, ``"-1 + z"``); sparse tensors as
lists of objects ``{"i": .., "j": .., "k": .., "c": ..}`` with zero entries
omitted. ``dumps_*`` output is canonical, so load followed by dump
reproduces a file byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Callable

from .exact_math import ExactMatrix, FieldScalar, FieldSpec, parse_scalar
from .hopf_core import FiniteHopfAlgebra
from .powers import HopfAutomorphism, verify_automorphism
from .representations import Representation, verify_representation
from .smash import GroupTable, HopfAction, verify_action


class FormatError(ValueError):
    pass


def _lit(c: FieldScalar) -> str:
    return str(c)


def _sparse_matrix(M: ExactMatrix) -> list[dict[str, Any]]:
    return [{"i": i, "j": j, "c": _lit(c)} for i, j, c in M.nonzero_entries()]


def _matrix_from_sparse(field: FieldSpec, rows: int, cols: int, entries: list) -> ExactMatrix:
    try:
        return ExactMatrix.from_entries(field, rows, cols,
                                        ((e["i"], e["j"], parse_scalar(e["c"], field)) for e in entries))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed sparse matrix entry: {exc}") from exc


def _dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=1) + "\n"


def content_hash(text: str | bytes) -> str:
    data = text.encode("utf-8") if isinstance(text, str) else text
    return hashlib.sha256(data).hexdigest()


# -- algebras --------------------------------------------------------------------


def algebra_to_dict(H: FiniteHopfAlgebra) -> dict[str, Any]:
    return {
        "name": H.name,
        "field": {"cyclotomic_order": H.field.cyclotomic_order},
        "dimension": H.dim,
        "basis": list(H.basis),
        "unit": [_lit(c) for c in H.unit],
        "counit": [_lit(c) for c in H.counit],
        "mult": [{"i": i, "j": j, "k": k, "c": _lit(c)} for i, j, k, c in H.mult],
        "comult": [{"i": i, "j": j, "k": k, "c": _lit(c)} for i, j, k, c in H.comult],
        "antipode": _sparse_matrix(H.antipode),
    }


def algebra_from_dict(data: dict[str, Any]) -> FiniteHopfAlgebra:
    try:
        field = FieldSpec(int(data["field"]["cyclotomic_order"]))
        d = int(data["dimension"])
        basis = list(data["basis"])
        if len(basis) != d:
            raise FormatError(f"{len(basis)} basis labels for dimension {d}")

        def tensor(key: str):
            return [(e["i"], e["j"], e["k"], parse_scalar(e["c"], field)) for e in data[key]]

        return FiniteHopfAlgebra(
            name=str(data["name"]),
            field=field,
            basis=basis,
            mult=tensor("mult"),
            comult=tensor("comult"),
            unit=[parse_scalar(c, field) for c in data["unit"]],
            counit=[parse_scalar(c, field) for c in data["counit"]],
            antipode=_matrix_from_sparse(field, d, d, data["antipode"]),
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"malformed Hopf algebra file: {exc!r}") from exc


def dumps_algebra(H: FiniteHopfAlgebra) -> str:
    return _dumps(algebra_to_dict(H))


def loads_algebra(text: str) -> FiniteHopfAlgebra:
    return algebra_from_dict(_parse_json(text))


def _parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


# -- automorphisms -------------------------------------------------------------------


def automorphism_to_dict(aut: HopfAutomorphism, algebra_ref: str) -> dict[str, Any]:
    return {"algebra": algebra_ref, "name": aut.name, "matrix": _sparse_matrix(aut.matrix)}


def automorphism_from_dict(data: dict[str, Any], H: FiniteHopfAlgebra) -> HopfAutomorphism:
    if "matrix" not in data:
        raise FormatError("automorphism file needs a 'matrix' field")
    M = _matrix_from_sparse(H.field, H.dim, H.dim, data["matrix"])
    return verify_automorphism(H, M, name=str(data.get("name", "tau")))


def dumps_automorphism(aut: HopfAutomorphism, algebra_ref: str) -> str:
    return _dumps(automorphism_to_dict(aut, algebra_ref))


# -- actions ---------------------------------------------------------------------------


def action_to_dict(action: HopfAction, algebra_ref: str) -> dict[str, Any]:
    G = action.group
    return {
        "algebra": algebra_ref,
        "group": {"name": G.name, "order": G.order, "identity": G.identity,
                  "labels": list(G.labels), "table": [list(r) for r in G.table]},
        "matrices": {str(x): _sparse_matrix(action.matrix(x)) for x in G},
    }


def action_from_dict(data: dict[str, Any], H: FiniteHopfAlgebra) -> HopfAction:
    try:
        g = data["group"]
        G = GroupTable(g["table"], int(g.get("identity", 0)), g.get("labels"), str(g.get("name", "G")))
        if int(g.get("order", G.order)) != G.order:
            raise FormatError("group order does not match its table")
        mats = [_matrix_from_sparse(H.field, H.dim, H.dim, data["matrices"][str(x)]) for x in G]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed action file: {exc!r}") from exc
    return verify_action(H, G, mats)


def dumps_action(action: HopfAction, algebra_ref: str) -> str:
    return _dumps(action_to_dict(action, algebra_ref))


# -- representations ---------------------------------------------------------------------


def representation_to_dict(rep: Representation, algebra_ref: str) -> dict[str, Any]:
    return {"algebra": algebra_ref, "name": rep.name, "rank": rep.rank,
            "matrices": [_sparse_matrix(M) for M in rep.matrices]}


def representation_from_dict(data: dict[str, Any], H: FiniteHopfAlgebra) -> Representation:
    try:
        r = int(data["rank"])
        mats = [_matrix_from_sparse(H.field, r, r, m) for m in data["matrices"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed representation file: {exc!r}") from exc
    return verify_representation(H, mats, str(data.get("name", "M")))


def dumps_representation(rep: Representation, algebra_ref: str) -> str:
    return _dumps(representation_to_dict(rep, algebra_ref))


# -- files -----------------------------------------------------------------------------------


def read_json(path: str | Path) -> tuple[Any, str]:
    """Parsed JSON and the sha256 of the raw bytes."""
    raw = Path(path).read_bytes()
    return _parse_json(raw.decode("utf-8")), content_hash(raw)


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def load_algebra(path: str | Path) -> FiniteHopfAlgebra:
    return algebra_from_dict(read_json(path)[0])


def load_with(path: str | Path, builder: Callable[[dict, FiniteHopfAlgebra], Any], H: FiniteHopfAlgebra) -> Any:
    return builder(read_json(path)[0], H)
