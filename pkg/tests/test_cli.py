import json

import pytest

from codetheta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coset_theta_json(capsys):
    code, out, _ = run(capsys, "coset-theta", "--p", "2", "--ell", "7",
                       "--a", "0", "--b", "1", "--prec", "12")
    assert code == 0
    body = json.loads(out)
    assert body["config"]["method"] == "direct"
    assert body["series"]["terms"] == [[2, 2], [4, 2], [8, 2]]


def test_coset_theta_klein_equality(capsys):
    _, out1, _ = run(capsys, "coset-theta", "--p", "2", "--ell", "7",
                     "--a", "0", "--b", "1")
    _, out2, _ = run(capsys, "coset-theta", "--p", "2", "--ell", "7",
                     "--a", "1", "--b", "1")
    assert json.loads(out1)["series"] == json.loads(out2)["series"]


def test_byte_identical_reruns(capsys):
    args = ("collide", "--p", "2", "--ell", "7", "--n", "2",
            "--prec", "30", "--threads", "1")
    _, out1, _ = run(capsys, *args)
    code, out2, _ = run(capsys, "collide", "--p", "2", "--ell", "7", "--n",
                        "2", "--prec", "30", "--threads", "4")
    assert code == 0
    assert out1 == out2


def test_nullity_auto_and_trunc(capsys):
    code, out, _ = run(capsys, "nullity", "--p", "2", "--ell", "15",
                       "--n", "4", "--trunc", "16")
    body = json.loads(out)
    assert code == 0 and body["report"]["rank"] == 15
    code, out, _ = run(capsys, "nullity", "--p", "2", "--ell", "7",
                       "--n", "2", "--auto")
    body = json.loads(out)
    assert body["report"]["nullity"] == 1 and body["report"]["stabilized"]


def test_nullity_table_csv(capsys):
    code, out, _ = run(capsys, "nullity-table", "--p", "2",
                       "--ells", "3,7", "--ns", "1,2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# ")
    assert lines[1] == "n\\ell,3,7"
    assert lines[2] == "1,1,0"


def test_code_theta_with_oracle(capsys):
    code, out, _ = run(capsys, "code-theta", "--p", "2", "--ell", "7",
                       "--code", "w;w+1;0,1", "--oracle", "--prec", "13")
    body = json.loads(out)
    assert code == 0 and body["oracle_matches"] is True


def test_swe_pretty(capsys):
    code, out, _ = run(capsys, "swe", "--p", "2", "--ell", "7",
                       "--code", "w;w+1;1,1", "--format", "pretty")
    assert code == 0
    assert out.splitlines()[1] == "X^2 + Y^2 + 2Z^2"


def test_verify_single_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--example", "p2-n2")
    assert code == 0 and out.startswith("PASS")
    code, _, err = run(capsys, "verify", "--example", "missing")
    assert code == 1 and "missing" in err


def test_flag_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nullity", "--p", "2"])
    assert exc.value.code == 2


def test_guard_errors_exit_1(capsys):
    code, _, err = run(capsys, "coset-theta", "--p", "2", "--ell", "8",
                       "--a", "0", "--b", "0")
    assert code == 1 and "error" in err
