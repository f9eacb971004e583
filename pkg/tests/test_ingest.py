import json
import os

import pytest

from cellua.algebra import verify_cellular
from cellua.field import GF, QQ
from cellua.ingest import (InputError, NotFiniteWithinCapError, QuiverPresentation, SchemaError,
                           build_path_algebra, builtin, load, parse, parse_quiver, serialize)
from cellua.poset import PosetError


def _doc(data_dir, name):
    with open(os.path.join(data_dir, name), encoding="utf-8") as fh:
        return json.load(fh)


@pytest.mark.parametrize("spec", ["path-example", "matrix:n=3", "matrix:n=4,b=2", "path-example:alpha=constant"])
def test_serialize_roundtrip(spec):
    alg, ad = builtin(spec)
    back, ad2 = parse(serialize(alg, ad))
    assert back.same_structure(alg)
    assert (ad2 is None) == (ad is None)
    if ad is not None:
        assert ad2.to_field(QQ) == ad


def test_serialize_is_deterministic():
    alg, ad = builtin("path-example")
    assert serialize(alg, ad) == serialize(*builtin("path-example"))


@pytest.mark.parametrize("name,spec", [("path-example.cell.json", "path-example"),
                                       ("path-example.quiver.json", "path-example"),
                                       ("matrix-4-2.cell.json", "matrix:n=4,b=2"),
                                       ("matrix-3.cell.json", "matrix:n=3")])
def test_data_files_match_builtins(data_dir, name, spec):
    alg, ad = load(os.path.join(data_dir, name))
    ref, rad = builtin(spec)
    assert alg.same_structure(ref)
    assert ad == rad


def test_load_with_field_change(data_dir):
    alg, ad = load(os.path.join(data_dir, "path-example.cell.json"), GF(23))
    assert alg.field == GF(23)
    assert verify_cellular(alg).ok


def test_missing_file_is_input_error(tmp_path):
    with pytest.raises(InputError):
        load(str(tmp_path / "nonexistent.cell.json"))


def test_invalid_json():
    with pytest.raises(SchemaError, match="invalid JSON"):
        parse(b"{not json")


@pytest.mark.parametrize("edit,match", [
    (lambda d: d.pop("unit"), "unit"),
    (lambda d: d.__setitem__("field", "fp:12"), "field"),
    (lambda d: d["products"].append(dict(d["products"][0])), "twice"),
    (lambda d: d["products"][0].__setitem__("left", "nope"), "unknown basis element"),
    (lambda d: d["basis"].pop(), "labels do not match"),
    (lambda d: d["basis"][1].__setitem__("name", d["basis"][0]["name"]), "distinct"),
    (lambda d: d["unit"].__setitem__("E1,1", "1/0"), "unit"),
])
def test_schema_errors(data_dir, edit, match):
    doc = _doc(data_dir, "matrix-3.cell.json")
    edit(doc)
    with pytest.raises(SchemaError, match=match):
        parse(json.dumps(doc))


def test_cyclic_cell_order_rejected(data_dir):
    doc = _doc(data_dir, "path-example.cell.json")
    doc["cells"]["covers"].append(["l5", "l0"])
    with pytest.raises(PosetError):
        parse(json.dumps(doc))


def test_quiver_without_cells_gives_plain_algebra(data_dir):
    doc = _doc(data_dir, "path-example.quiver.json")
    for k in ("cells", "index_sets", "cell_basis", "alpha"):
        doc.pop(k, None)
    alg, ad = parse_quiver(json.dumps(doc))
    assert alg.dim == 18 and ad is None and alg.datum is None


def test_quiver_alpha_without_cells_rejected(data_dir):
    doc = _doc(data_dir, "path-example.quiver.json")
    for k in ("cells", "index_sets", "cell_basis"):
        doc.pop(k)
    with pytest.raises(SchemaError, match="alpha needs"):
        parse_quiver(json.dumps(doc))


def test_quiver_presentation_errors():
    with pytest.raises(InputError):
        QuiverPresentation(["1", "1"], [], [], QQ)
    with pytest.raises(InputError):
        QuiverPresentation(["1"], [("a", "1", "2")], [], QQ)
    with pytest.raises(InputError):
        QuiverPresentation(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [{"a": 1, "a b": 1}], QQ)


def test_infinite_quiver_hits_cap():
    q = QuiverPresentation(["1"], [("x", "1", "1")], [], QQ)
    with pytest.raises(NotFiniteWithinCapError):
        build_path_algebra(q, 4)


def test_truncated_loop():
    q = QuiverPresentation(["1"], [("x", "1", "1")], [{"x x x": 1}], QQ)
    pa = build_path_algebra(q, 4)
    assert pa.algebra.dim == 3


@pytest.mark.parametrize("spec", ["matrix", "matrix:n=x", "matrix:n=3,c=2", "matrix:n=3,b=1",
                                  "matrix:n=3,b=4", "matrix:n=0", "nope"])
def test_bad_builtins(spec):
    with pytest.raises(InputError):
        builtin(spec)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matrix_builtin_dimension(n):
    alg, ad = builtin(f"matrix:n={n}")
    assert alg.dim == n * n and ad is None
