import json

import pytest
from hypothesis import given, settings

from hopfsmash import formats
from hopfsmash.catalog import all_entries, h8, h8_tau4_action, nichols8, nichols8_minus_id_action
from hopfsmash.exact_math import FieldSpec
from hopfsmash.hopf_core import structure_differences
from hopfsmash.powers import AutomorphismError
from hopfsmash.representations import RepresentationError
from hopfsmash.smash import ActionError, smash_coproduct

from strategies import matrices


@pytest.mark.parametrize("entry", all_entries() + [nichols8(FieldSpec(3))], ids=lambda e: f"{e.name}-{e.algebra.field}")
def test_algebra_round_trip(entry):
    text = formats.dumps_algebra(entry.algebra)
    back = formats.loads_algebra(text)
    assert structure_differences(back, entry.algebra) == []
    assert formats.dumps_algebra(back) == text


def test_smash_labels_round_trip():
    K = smash_coproduct(h8_tau4_action()).K
    back = formats.loads_algebra(formats.dumps_algebra(K))
    assert back.basis == K.basis and structure_differences(back, K) == []


def test_automorphism_round_trip():
    e = h8()
    tau = e.automorphisms["tau4"]
    back = formats.automorphism_from_dict(json.loads(formats.dumps_automorphism(tau, "catalog:h8")), e.algebra)
    assert back.matrix == tau.matrix and back.order == 2 and back.name == "tau4"


def test_action_round_trip():
    act = nichols8_minus_id_action()
    back = formats.action_from_dict(json.loads(formats.dumps_action(act, "catalog:nichols8")), act.algebra)
    assert [back.matrix(x) for x in back.group] == [act.matrix(x) for x in act.group]
    assert back.group.table == act.group.table


def test_representation_round_trip():
    e = nichols8()
    V = e.representations["V2"]
    back = formats.representation_from_dict(json.loads(formats.dumps_representation(V, "catalog:nichols8")), e.algebra)
    assert back.same_matrices(V) and back.name == "V2"


@settings(max_examples=30)
@given(matrices(FieldSpec(4), max_dim=4))
def test_sparse_matrix_round_trip(M):
    assert formats._matrix_from_sparse(M.field, M.rows, M.cols, formats._sparse_matrix(M)) == M


def test_canonical_bytes_and_hash(tmp_path):
    text = formats.dumps_algebra(h8().algebra)
    assert text.endswith("\n") and text == formats.dumps_algebra(h8().algebra)
    p = tmp_path / "h8.json"
    formats.write_text(p, text)
    data, digest = formats.read_json(p)
    assert digest == formats.content_hash(text) and len(digest) == 64
    assert data["dimension"] == 8


class TestErrors:
    def test_invalid_json(self):
        with pytest.raises(formats.FormatError):
            formats.loads_algebra("{not json")

    def test_missing_field(self):
        data = formats.algebra_to_dict(h8().algebra)
        del data["comult"]
        with pytest.raises(formats.FormatError):
            formats.algebra_from_dict(data)

    def test_basis_mismatch(self):
        data = formats.algebra_to_dict(h8().algebra)
        data["basis"].pop()
        with pytest.raises(formats.FormatError):
            formats.algebra_from_dict(data)

    def test_bad_scalar(self):
        data = formats.algebra_to_dict(h8().algebra)
        data["unit"][0] = "one"
        with pytest.raises(ValueError):
            formats.algebra_from_dict(data)

    def test_automorphism_rejected(self):
        H = h8().algebra
        data = {"matrix": [{"i": 0, "j": 0, "c": "2"}]}
        with pytest.raises(AutomorphismError):
            formats.automorphism_from_dict(data, H)

    def test_action_rejected(self):
        act = h8_tau4_action()
        data = formats.action_to_dict(act, "catalog:h8")
        data["matrices"]["0"] = data["matrices"]["1"]
        with pytest.raises(ActionError):
            formats.action_from_dict(data, act.algebra)

    def test_representation_rejected(self):
        e = h8()
        data = formats.representation_to_dict(e.representations["N"], "catalog:h8")
        data["matrices"][0] = data["matrices"][1]
        with pytest.raises(RepresentationError):
            formats.representation_from_dict(data, e.algebra)
