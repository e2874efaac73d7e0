import json

import pytest

from dendro import fixtures as F
from dendro import io
from dendro.cli import main
from dendro.cohomology import cohomology_dim


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def zero1(tmp_path):
    return write(tmp_path, "zero1.json", io.algebra_to_json(F.get("zero1")))


def test_cohomology_zero1(capsys, zero1):
    code, out, _ = run(capsys, "cohomology", zero1, "--format", "json")
    assert code == 0
    recs = json.loads(out)["degrees"]
    assert [r["dim_H"] for r in recs] == [1, 2, 3]


def test_cli_agrees_with_library(capsys, tmp_path):
    D = F.get("dual")
    path = write(tmp_path, "dual.json", io.algebra_to_json(D))
    for theory in ("dend", "inv", "skew"):
        code, out, _ = run(capsys, "cohomology", path, "--theory", theory, "--format", "json")
        assert code == 0
        got = [r["dim_H"] for r in json.loads(out)["degrees"]]
        assert got == [cohomology_dim(theory, D, None, n) for n in (1, 2, 3)]


def test_broken_exits_one_and_names_axiom(capsys, tmp_path):
    path = write(tmp_path, "broken.json", io.algebra_to_json(F.get("broken")))
    code, out, _ = run(capsys, "validate", path, "--format", "json")
    assert code == 1
    rep = json.loads(out)["reports"][0]
    assert "axiom 1" in rep["check"] and rep["where"] == {"i": 0, "j": 0, "k": 0}


def test_malformed_inputs_exit_two(capsys, tmp_path, zero1):
    bad = write(tmp_path, "bad.json", '{"basis": ["e1"], "left": {')
    assert run(capsys, "cohomology", bad)[0] == 2
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 2
    no_inv = write(tmp_path, "one.json", io.algebra_to_json(F.get("one_dim")))
    code, _, err = run(capsys, "cohomology", no_inv, "--theory", "inv")
    assert code == 2 and "input error" in err
    flt = write(tmp_path, "flt.json", {"basis": ["e"], "left": {"0,0": [[0, 0.5]]}})
    assert run(capsys, "validate", flt)[0] == 2


def test_free_and_tensor(capsys):
    code, out, _ = run(capsys, "free", "--max-degree", "3", "--format", "json")
    assert code == 0 and json.loads(out)["dims"] == [1, 2, 5]
    assert run(capsys, "free", "--generators", "2", "--max-degree", "3", "--eps", "-1", "--sign")[0] == 0
    assert run(capsys, "tensor", "--generators", "2", "--eps", "-1")[0] == 0


def test_maxalg_orientation_codes(capsys):
    assert run(capsys, "maxalg", "--eps", "1")[0] == 0
    code, out, _ = run(capsys, "maxalg", "--eps", "-1")
    assert code == 1 and "a=1, b=1" in out


def test_extend_and_deform_defaults(capsys, zero1):
    code, out, _ = run(capsys, "extend", zero1, "--format", "json")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "deform", zero1, "--order", "1", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["class"]["zero"] and payload["class"]["cocycle"]


def test_equiv_zero_cocycle(capsys, tmp_path, zero1):
    D = F.get("zero1")
    pair = io.pair_to_json(*[a * 0 for a in _zero_pair(D)])
    path = write(tmp_path, "pair.json", pair)
    code, out, _ = run(capsys, "equiv", zero1, "--cochain", path, "--format", "json")
    assert code == 0 and json.loads(out)["equivalent"]


def _zero_pair(D):
    from dendro import exactmat as em
    return em.zeros((len(D.group), D.dim, D.dim)), em.zeros((2, D.dim, D.dim, D.dim))


def test_homotopy_command(capsys, tmp_path):
    from dendro.homotopy import from_dendriform
    V, fam = from_dendriform(F.get("cubic"))
    path = write(tmp_path, "fam.json", io.family_to_json(V, fam))
    assert run(capsys, "homotopy", path)[0] == 0
    V, fam = from_dendriform(F.get("broken"))
    path = write(tmp_path, "bad.json", io.family_to_json(V, fam))
    assert run(capsys, "homotopy", path)[0] == 1


def test_fixture_unknown(capsys):
    assert run(capsys, "fixture", "nope")[0] == 2


@pytest.mark.parametrize("name", sorted(F.CATALOG))
def test_algebra_json_round_trip(name):
    D = F.get(name)
    E = io.algebra_from_json(json.loads(io.dump(io.algebra_to_json(D))))
    assert (E.left == D.left).all() and (E.right == D.right).all()
    assert io.algebra_to_json(E) == io.algebra_to_json(D)


def test_module_and_family_round_trip():
    from dendro.algebra import Representation
    from dendro.homotopy import from_dendriform
    D = F.get("cubic")
    M = Representation.regular(D)
    data = io.module_to_json(M, D.group)
    M2 = io.module_from_json(json.loads(io.dump(data)), D)
    assert io.module_to_json(M2, D.group) == data
    V, fam = from_dendriform(D)
    V2, fam2 = io.family_from_json(io.family_to_json(V, fam))
    assert V2.degrees == V.degrees and all((fam2[k] == fam[k]).all() for k in fam)


def test_rationals():
    assert io.fmt(io.rat("3/6")) == "1/2" and io.fmt(io.rat(4)) == 4
    with pytest.raises(Exception):
        io.rat(0.5)
