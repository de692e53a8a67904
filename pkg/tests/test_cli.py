"""End-to-end command line coverage, in process.

Every subcommand gets a happy path (text and JSON where both exist) and
the documented exit codes are pinned: 0 success, 1 domain error, 2 parse
error.
"""

import json

import pytest

from extmcg import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_arf(capsys):
    code, out, _ = run(capsys, "arf", '{"basis_values": [0, 0]}')
    assert (code, out.strip()) == (0, "0")
    code, payload = run_json(capsys, "arf", '{"basis_values": [1, 1]}')
    assert (code, payload) == (0, {"arf": 1})


def test_arf_with_explicit_gram(capsys):
    blob = json.dumps({"basis_values": [1, 1],
                       "gram": [[0, 1], [1, 0]]})
    code, payload = run_json(capsys, "arf", blob)
    assert (code, payload) == (0, {"arf": 1})


def test_stabilizer_and_orbit(capsys):
    code, payload = run_json(capsys, "stabilizer", '{"basis_values": [0, 0]}')
    assert code == 0
    assert payload["order"] == 2
    assert [[0, 1], [1, 0]] in payload["elements"]
    code, payload = run_json(capsys, "orbit", '{"basis_values": [0, 0]}')
    assert code == 0 and payload["order"] == 3
    code, out, _ = run(capsys, "orbit", '{"basis_values": [1, 1]}')
    assert code == 0 and out.splitlines()[0] == "order 1"


def test_enumerate_sp(capsys):
    code, payload = run_json(capsys, "enumerate-sp", "--k", "1")
    assert code == 0 and payload["order"] == 6 and len(payload["elements"]) == 6
    code, payload = run_json(capsys, "enumerate-sp", "--k", "2", "--count")
    assert code == 0 and payload["order"] == 720 and "elements" not in payload


def test_member(capsys):
    code, out, _ = run(capsys, "member", '{"rows":[[2,-1],[1,0]]}')
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "member", '{"rows":[[1,1],[0,1]]}')
    assert (code, out.strip()) == (0, "false")
    code, payload = run_json(capsys, "member", '{"rows":[[1,0],[0,1]]}')
    assert payload == {"member": True}


def test_member_domain_and_parse_errors(capsys):
    code, _, err = run(capsys, "member", '{"rows":[[1,1],[1,1]]}')
    assert code == 1 and "determinant" in err
    code, _, err = run(capsys, "member", "{bad json")
    assert code == 2
    code, _, err = run(capsys, "member", '{"cols": []}')
    assert code == 1


def test_mod2(capsys):
    assert run(capsys, "mod2", '{"rows":[[1,2],[0,1]]}')[1].strip() == "Id"
    assert run(capsys, "mod2", '{"rows":[[0,-1],[1,0]]}')[1].strip() == "V"
    assert run(capsys, "mod2", '{"rows":[[1,1],[1,2]]}')[1].strip() == "Other"


def test_decompose_roundtrip(capsys):
    code, payload = run_json(capsys, "decompose", '{"rows":[[2,-1],[1,0]]}')
    assert code == 0
    code2, out, _ = run(capsys, "eval-word", payload["word"])
    assert code2 == 0
    assert out.strip() == "2 -1 / 1 0"


def test_decompose_rejects_nonmember(capsys):
    code, _, err = run(capsys, "decompose", '{"rows":[[1,1],[0,1]]}')
    assert code == 1 and "odd" in err


def test_eval_word(capsys):
    code, payload = run_json(capsys, "eval-word", "V^4")
    assert payload == {"rows": [[1, 0], [0, 1]]}
    code, payload = run_json(capsys, "eval-word", "- e")
    assert payload == {"rows": [[-1, 0], [0, -1]]}
    code, _, err = run(capsys, "eval-word", "V x T")
    assert code == 2 and "bad token" in err


def test_coset_enum(capsys):
    code, payload = run_json(
        capsys, "coset-enum", "gens: a,b; rels: a^2, b^2, [a,b]")
    assert (code, payload["order"]) == (0, 4)
    code, _, err = run(capsys, "coset-enum",
                       "gens: V,T; rels: V^4, V^2 T V^-2 T^-1",
                       "--max-cosets", "500")
    assert code == 1 and "500" in err
    code, _, err = run(capsys, "coset-enum", "gens a b")
    assert code == 2


def test_isomorphic(capsys):
    code, out, _ = run(capsys, "isomorphic", "dihedral:8", "quaternion:8")
    assert (code, out.strip()) == (0, "false")
    code, payload = run_json(capsys, "isomorphic", "e-even",
                             json.dumps({"table": [[0]]}))
    assert payload == {"isomorphic": False, "witness": None}
    code, payload = run_json(capsys, "isomorphic", "klein", "klein")
    assert payload["isomorphic"] is True
    assert sorted(payload["witness"]) == [0, 1, 2, 3]
    code, _, err = run(capsys, "isomorphic", "octonion:8", "klein")
    assert code == 2


def test_build_omega(capsys):
    code, payload = run_json(capsys, "build-omega", "--p", "3")
    assert code == 0 and payload["size"] == 9
    assert payload["entries"][0] == [0, 0, -1]
    code, out, _ = run(capsys, "build-omega", "--p", "4", "--variant", "hat")
    assert code == 0 and "order 2" in out
    code, payload = run_json(capsys, "build-omega", "--p", "2",
                             "--variant", "prime", "--q", "5")
    assert code == 0 and payload["size"] == 10
    code, _, err = run(capsys, "build-omega", "--p", "3", "--variant", "hat")
    assert code == 1 and "even" in err


def test_induced_action(capsys):
    code, payload = run_json(capsys, "induced-action", "--variant", "plain",
                             "--p", "5")
    assert payload == {"rows": [[0, -1], [1, 0]]}
    code, payload = run_json(capsys, "induced-action", "--variant", "prime",
                             "--p", "4")
    assert payload == {"rows": [[-1, 0], [0, -1]]}
    mat = json.dumps({"size": 5, "entries":
                      [[0, 0, -1], [1, 3, 1], [2, 4, 1], [3, 1, -1], [4, 2, 1]]})
    code, payload = run_json(capsys, "induced-action", mat, "--p", "1")
    assert (code, payload) == (0, {"rows": [[0, -1], [1, 0]]})
    code, _, err = run(capsys, "induced-action", mat)
    assert code == 2 and "--p" in err
    code, _, err = run(capsys, "induced-action")
    assert code == 2


def test_classify(capsys):
    code, payload = run_json(capsys, "classify", "--family", "equal-product",
                             "--p", "4")
    assert code == 0
    assert payload["total"] == "D8xZ2"
    assert payload["image"] == payload["kernel"] == "Z2xZ2"
    assert payload["splits"] is True
    code, out, _ = run(capsys, "classify", "--family", "unknot-sphere",
                       "--n", "7")
    assert code == 0 and "trivial" in out
    code, payload = run_json(capsys, "classify", "--family", "unequal-product",
                             "--p", "2", "--q", "5")
    assert payload["image"] == "Z2" and payload["total"] is None
    assert payload["total_reason"]
    code, payload = run_json(capsys, "classify", "--family", "adjacent-product",
                             "--p", "14")
    assert payload["total"] == "Z2xZ2"


def test_classify_errors(capsys):
    code, _, err = run(capsys, "classify", "--family", "equal-product")
    assert code == 2 and "--p" in err
    code, _, err = run(capsys, "classify", "--family", "adjacent-product",
                       "--p", "13")
    assert code == 1 and "congruent" in err
    code, _, err = run(capsys, "classify", "--family", "unknot-sphere",
                       "--n", "3")
    assert code == 1


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_all(capsys):
    code, payload = run_json(capsys, "verify-all")
    assert code == 0
    assert len(payload) == 8
    assert all(entry["passed"] for entry in payload)
    names = [entry["name"] for entry in payload]
    assert "symplectic-census" in names and "classification-table" in names
