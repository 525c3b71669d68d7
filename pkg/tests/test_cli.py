import json

import pytest

from stanleychar.cli import main
from stanleychar.exactpoly import Poly


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


def test_char_zero_branch(capsys):
    code, out = run(capsys, "char", "--pi", "4", "--lambda", "2,1")
    assert code == 0
    assert out.strip() == "0"


def test_char_value(capsys):
    code, out = run(capsys, "char", "--pi", "3", "--lambda", "2,1")
    assert code == 0
    assert out.strip() == "-3"


def test_char_shape(capsys):
    code, out = run(capsys, "char", "--pi", "3", "--p", "1,1", "--q", "2,1")
    assert code == 0
    assert out.strip() == "-3"


def test_char_json(capsys):
    code, out = run(capsys, "char", "--pi", "3", "--lambda", "2,1", "--output", "json")
    assert json.loads(out) == {"pi": [3], "lambda": [2, 1], "value": -3}


def test_kerov_text(capsys, tmp_path):
    code, out = run(capsys, "kerov", "--k", "5", "--cache-dir", str(tmp_path))
    assert code == 0
    assert out.strip() == "R6 + 15*R4 + 5*R2^2 + 8*R2"


def test_stanley_json_round_trip(capsys):
    code, out = run(capsys, "stanley", "--pi", "5", "--ell", "3", "--output", "json")
    assert code == 0
    poly = Poly.from_json(out)
    assert poly.coefficient({"p1": 1, "p2": 1, "p3": 1, "q1": 1, "q2": 1, "q3": 1}) == 25
    assert poly.to_json() == out.strip()


def test_cumulant(capsys):
    code, out = run(capsys, "cumulant", "--j", "2", "--ell", "1")
    assert code == 0
    assert out.strip() == "p1*q1"


def test_maps_summary(capsys):
    code, out = run(
        capsys, "maps", "--sigma1", "5,1,3,2,4", "--sigma2", "4,3,5,1,2"
    )
    assert code == 0
    assert "euler characteristic: 0" in out
    assert "genus per component: [1]" in out


def test_maps_json_with_embeddings(capsys):
    code, out = run(
        capsys,
        "maps",
        "--sigma1", "5,1,3,2,4",
        "--sigma2", "4,3,5,1,2",
        "--lambda", "3,1",
        "--output", "json",
    )
    data = json.loads(out)
    assert data["euler_characteristic"] == 0
    assert data["genus_per_component"] == [1]
    assert data["embeddings"] > 0


def test_maps_dot(capsys):
    code, out = run(capsys, "maps", "--sigma1", "2,1", "--sigma2", "2,1", "--dot")
    assert code == 0
    assert out.startswith("graph bipartite_map {")


def test_degree_guard():
    with pytest.raises(SystemExit) as exc:
        main(["stanley", "--pi", "8", "--ell", "1"])
    assert exc.value.code == 2


def test_degree_at_guard_allowed(capsys):
    code, out = run(capsys, "stanley", "--pi", "7", "--ell", "1")
    assert code == 0


def test_usage_error_bad_partition():
    with pytest.raises(SystemExit) as exc:
        main(["char", "--pi", "x", "--lambda", "2,1"])
    assert exc.value.code == 2


def test_verify_jack_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "jack-fixture")
    assert code == 0
    assert "PASS jack gamma=0 specialization" in out
    assert out.strip().endswith("passed 3/3")


def test_verify_small_suite_deterministic(capsys):
    code1, out1 = run(capsys, "verify", "--suite", "eq1", "--threads", "1")
    code2, out2 = run(capsys, "verify", "--suite", "eq1", "--threads", "3")
    assert code1 == code2 == 0
    assert out1 == out2
