import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from freesummand.cli import main

G12 = '{"q_rank": 1, "free_rank": 0, "invariant_factors": [12]}'
Z4 = '{"q_rank": 0, "free_rank": 0, "invariant_factors": [4]}'
Z6 = '{"q_rank": 0, "free_rank": 0, "invariant_factors": [6]}'
ZFREE = '{"q_rank": 0, "free_rank": 2, "invariant_factors": [12]}'


def schema(name):
    text = resources.files("freesummand").joinpath("schemas").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


JSON_CASES = [
    (["james", "5"], "james"),
    (["james", "1"], "james"),
    (["split", "--n", "25", "--r", "3"], "section"),
    (["split", "--n", "24", "--r", "4", "--verify"], "section"),
    (["split", "--n", "24", "--r", "2", "--verify"], "section"),
    (["split", "--n", "24", "--r", "1"], "section"),
    (["summand", "--n", "48", "--rank", "2"], "section"),
    (["classify", "sphere", "--x", "8", "--y", "9", "--d", "10", "--e", "3"], "verdict"),
    (["classify", "sphere", "--x", "8", "--y", "9", "--d", "30", "--e", "3"], "verdict"),
    (["classify", "stable", "--s", "3", "--w", "-5", "--bs"], "verdict"),
    (["classify", "stiefel-surj", "--n", "10", "--r", "2", "--d", "10", "--e", "9"], "verdict"),
    (["classify", "stiefel-inj", "--n", "10", "--r", "2", "--d", "12", "--e", "11"], "verdict"),
    (["group", "canonical", "--group", G12], "group"),
    (["group", "torsion", "--group", G12, "--m", "4"], "group"),
    (["group", "mod", "--group", ZFREE, "--m", "4"], "group"),
    (["group", "primary", "--group", G12, "--p", "2"], "group"),
    (["group", "presentation", "--matrix", "[[2, 0], [0, 3]]"], "group"),
    (["group", "predicates", "--group", G12, "--primes", "2"], "predicates"),
    (["group", "completion", "--group", ZFREE, "--primes", "2,3"], "completion"),
    (["group", "completion", "--group", ZFREE], "completion"),
    (["group", "decompose", "--group", G12, "--primes", "2"], "decomposition"),
    (["group", "hom", "--group", Z4, "--target", Z6], "hom"),
    (["group", "pfd", "--fraction", "1/12", "--primes", "2,3"], "pfd"),
    (["group", "snf", "--matrix", '{"rows": 2, "cols": 2, "entries": [2, 4, 0, 4]}'], "snf"),
    (["verify", "--quick"], "verify"),
]


@pytest.mark.parametrize("argv, name", JSON_CASES, ids=[" ".join(a[:2]) for a, _ in JSON_CASES])
def test_json_output_matches_schema(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), schema(name))


def test_schemas_are_valid():
    for path in resources.files("freesummand").joinpath("schemas").iterdir():
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


def test_james_five(capsys):
    _, out, _ = run(capsys, "james", "5")
    assert json.loads(out)["value"] == "2880"


def test_split_no_with_witness(capsys):
    _, out, _ = run(capsys, "split", "--n", "25", "--r", "3")
    payload = json.loads(out)
    assert payload["verdict"] == "no"
    assert payload["certificate"]["failing_prime"] == 2
    assert payload["hypothesis"] == "ring contains algebraic closure of Q"


def test_split_trace_skipped_outside_range(capsys):
    code, out, _ = run(capsys, "split", "--n", "24", "--r", "2", "--verify")
    payload = json.loads(out)
    assert code == 0 and payload["trace"] is None and payload["trace_skipped"]


def test_text_format_cites_its_source(capsys):
    _, out, _ = run(capsys, "classify", "stable", "--s", "1", "--w", "0", "--format", "text")
    assert "isomorphism (by stable-realization-iso)" in out
    _, out, _ = run(capsys, "split", "--n", "24", "--r", "4", "--format", "text")
    assert "by james-divisibility-criterion" in out and "algebraic closure" in out


def test_pfd_values(capsys):
    _, out, _ = run(capsys, "group", "pfd", "--fraction", "5/6", "--primes", "2,3")
    assert json.loads(out)["parts"] == {"2": "1/2", "3": "1/3"}


@pytest.mark.parametrize(
    "argv",
    [
        ["james"],
        ["james", "0"],
        ["james", "five"],
        ["split", "--n", "0", "--r", "1"],
        ["bogus"],
        ["james", "5", "--unknown"],
        ["group", "torsion", "--group", "not json", "--m", "2"],
        ["group", "torsion", "--group", "@/does/not/exist", "--m", "2"],
        ["group", "pfd", "--fraction", "1/10", "--primes", "2,3"],
        ["group", "hom", "--group", '{"q_rank":0,"free_rank":0,"invariant_factors":[300]}',
         "--target", '{"q_rank":0,"free_rank":0,"invariant_factors":[300]}'],
        ["group", "decompose", "--group", ZFREE],
        ["chart", "--x", "8", "--y", "9", "--d0", "0", "--d1", "2000", "--e0", "0", "--e1", "2000"],
        ["classify", "stiefel-inj", "--n", "0", "--r", "1", "--d", "0", "--e", "0"],
    ],
)
def test_malformed_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "usage" in err


def test_group_from_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(G12)
    _, out, _ = run(capsys, "group", "canonical", "--group", f"@{path}")
    assert json.loads(out) == json.loads(G12)


def test_chart_tsv_matches_golden(capsys):
    from freesummand.verification import golden_chart_bytes

    _, out, _ = run(capsys, "chart", "--x", "8", "--y", "9", "--d0", "0", "--d1", "20",
                    "--e0", "-2", "--e1", "20")
    assert out.encode() == golden_chart_bytes()


def test_chart_svg(capsys):
    code, out, _ = run(capsys, "chart", "--x", "8", "--y", "9", "--d0", "0", "--d1", "5",
                       "--e0", "0", "--e1", "5", "--format", "svg")
    assert code == 0 and out.startswith("<svg")


def test_deterministic_subprocess_output():
    argv = [sys.executable, "-m", "freesummand", "chart", "--x", "8", "--y", "9", "--d0", "0",
            "--d1", "20", "--e0", "-2", "--e1", "20", "--format", "svg"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_no_argument_usage_via_subprocess():
    proc = subprocess.run([sys.executable, "-m", "freesummand", "james"], capture_output=True,
                          text=True)
    assert proc.returncode == 2
    assert "usage" in proc.stderr
