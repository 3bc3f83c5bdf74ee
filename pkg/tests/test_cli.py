from __future__ import annotations

import io
import json

import pytest

import golden
from frieze_lab import catalog
from frieze_lab.cli import run
from frieze_lab.polyring import GroebnerBasis, leading, parse_poly
from frieze_lab.quiver import Quiver
from frieze_lab.seeds import AutomorphismSpec


def monic_set(polys, order):
    return {p.scale(1 / leading(p, order)[1]) for p in polys}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def a21_file(tmp_path):
    path = tmp_path / "a21.json"
    path.write_text(catalog.a21().to_json())
    return str(path)


def test_components_from_a_quiver_file(a21_file):
    code, out, _ = call("components", "--quiver", a21_file, "--spec", "coxeter", "--point", "1,1,1",
                        "--order", "natural")
    assert code == 0
    d = json.loads(out)
    assert d["component_count"] == 2 and d["c"] == "52"
    variables = ["x1", "x2", "x3"]
    got = [GroebnerBasis.from_dict({"variables": variables, "order": d["order"], "generators": c["generators"]})
           for c in d["components"]]
    for ideal in golden.A21_IDEALS:
        want = [parse_poly(t, variables) for t in ideal]
        assert any(monic_set(G.gens, G.order) == monic_set(want, G.order) for G in got)


def test_recurrence_text_output():
    code, out, _ = call("recurrence", "--quiver", "E7", "--spec", "coxeter", "--point", ",".join("1" * 8),
                        "--coordinate", "1", "--format", "text")
    assert code == 0
    assert out.startswith("x^12 - 61*x^6 + 1, m=6, c=61")


def test_orbit_horizon_zero_is_the_base_point():
    code, out, _ = call("orbit", "--quiver", "A21", "--horizon", "0", "--point", "1,2,3")
    assert code == 0 and json.loads(out)["points"] == [["1", "2", "3"]]


def test_orbit_values():
    code, out, _ = call("orbit", "--quiver", "A21", "--horizon", "4", "--format", "text")
    rows = [tuple(int(x) for x in line.split()) for line in out.strip().splitlines()]
    assert code == 0 and rows == [tuple(p) for p in golden.A21_ORBIT]


def test_mutate_round_trips_quiver_json():
    code, out, _ = call("mutate", "--quiver", "A21", "--word", "1,2", "--point", "1,1,1")
    d = json.loads(out)
    assert code == 0
    assert Quiver.from_dict(d["quiver"]) == catalog.a21().mutate(1).mutate(2)
    assert d["point"] == ["2", "3", "1"]


def test_finite_case_with_permutation():
    word = ",".join(map(str, catalog.MARKOV_COVER_GREEN_SEQUENCE))
    code, out, _ = call("components", "--quiver", "markov_cover", "--spec", word, "--perm", "(1 5)")
    d = json.loads(out)
    assert code == 0 and d["kind"] == "finite"
    assert sorted(c["points"][0][0] for c in d["components"]) == ["1", "9"]
    assert AutomorphismSpec.from_dict(d["spec"], 6).sigma == (5, 2, 3, 4, 1, 6)


def test_fold_and_lift(tmp_path):
    code, out, _ = call("fold", "--quiver", "star", "--group", "(2 3 4 5)")
    d = json.loads(out)
    assert code == 0
    assert Quiver.from_dict(d["folded"]).D == (4, 1) and d["projection"] == [1, 2, 2, 2, 2]
    assert d["folded_spec"]["word"] == [1, 2]
    basis = tmp_path / "folded.json"
    basis.write_text(json.dumps({"variables": ["x1", "x2"], "order": ["x2", "x1"],
                                 "generators": [golden.STAR_FOLDED]}))
    code, out, _ = call("fold", "--quiver", "star", "--group", "(2 3 4 5)", "--basis", str(basis))
    lifted = GroebnerBasis.from_dict(json.loads(out)["basis"])
    assert code == 0 and len(lifted) == 4


def test_check_subcommand(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"variables": ["x1", "x2", "x3"], "order": ["x1", "x2", "x3"],
                                "generators": list(golden.A21_IDEALS[0])}))
    # whichever residue the basis belongs to, exactly one of the two passes
    codes = [call("check", "--basis", str(good), "--quiver", "A21", "--residue", str(r), "--modulus", "2")[0]
             for r in (0, 1)]
    assert sorted(codes) == [0, 3]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"variables": ["x", "y"], "order": ["x", "y"], "generators": ["x^2 - y", "x*y - 1"]}))
    code, out, _ = call("check", "--basis", str(bad))
    assert code == 3 and json.loads(out)["is_groebner"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ("orbit", "--quiver", "nope"),
        ("orbit", "--quiver", "A21", "--point", "1,2"),
        ("orbit", "--quiver", "A21", "--point", "1,x,3"),
        ("orbit", "--quiver", "A21", "--spec", "1,7"),
        ("orbit", "--quiver", "A21", "--perm", "(1 9)"),
        ("orbit", "--quiver", "A21", "--spec", "1"),  # not an automorphism
        ("components", "--quiver", "A21", "--order", "x1,x1,x2"),
        ("fold", "--quiver", "star", "--group", "(2 3"),
        ("frobnicate",),
    ],
)
def test_input_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_parse_errors_name_the_position():
    _, _, err = call("orbit", "--quiver", "A21", "--spec", "1,2,x")
    assert "entry 3" in err
    _, _, err = call("orbit", "--quiver", "A21", "--point", "1,1/0,1")
    assert "entry 2" in err


def test_computation_errors_exit_3():
    code, _, err = call("orbit", "--quiver", "A21", "--point", "1,-1,1", "--horizon", "3")
    assert code == 3 and "computation error" in err
    code, _, _ = call("fold", "--quiver", "markov_cover", "--group", "(1 2)")
    assert code == 3


def test_output_is_deterministic():
    argv = ("components", "--quiver", "E6", "--order", "reverse")
    first = call(*argv)[1]
    assert call(*argv)[1] == first
    d = json.loads(first)
    assert d["charpoly"] == "x^4 - 7*x^2 + 1"
