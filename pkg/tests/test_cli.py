import json
import subprocess
import sys
from pathlib import Path

import pytest

from udmg import reference
from udmg.cli import (
    load_matrixset,
    matrixset_from_text,
    matrixset_to_text,
    run,
    save_matrixset,
)

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "genus1_f5.json"


@pytest.fixture()
def fixture_path(tmp_path):
    path = tmp_path / "genus1.json"
    save_matrixset(reference.matrix_set(), str(path))
    return str(path)


def test_round_trip_bytes(fixture_path):
    text = Path(fixture_path).read_text(encoding="utf-8")
    assert matrixset_to_text(matrixset_from_text(text)) == text
    assert text.endswith("\n")


def test_round_trip_random_sets():
    import random

    from udmg import Udmg, make_field
    from udmg.linalg import FqMatrix

    rng = random.Random(99)
    for _ in range(25):
        field = make_field(rng.choice([2, 3, 5, 7]))
        K = rng.randint(1, 4)
        mats = tuple(
            FqMatrix(field, K, n, tuple(rng.randrange(field.q) for _ in range(K * n)))
            for n in (rng.randint(1, 4) for _ in range(rng.randint(1, 4))))
        u = Udmg(field, K, rng.randint(0, 3), mats)
        text = matrixset_to_text(u)
        again = matrixset_from_text(text)
        assert again == u
        assert matrixset_to_text(again) == text


def test_round_trip_extension_field(tmp_path):
    from udmg import Udmg, make_field
    from udmg.linalg import FqMatrix

    f4 = make_field(2, 2)
    u = Udmg(f4, 2, 0, (FqMatrix.from_rows(f4, [(1, 2), (0, 3)]),
                        FqMatrix.from_rows(f4, [(2, 0), (1, 1)])))
    text = matrixset_to_text(u)
    assert '"modulus": [1, 1, 1]' in text
    again = matrixset_from_text(text)
    assert again.field.q == 4 and again.matrices == u.matrices
    assert matrixset_to_text(again) == text


def test_bundled_fixture_file_matches_reference():
    assert FIXTURE.exists()
    u = load_matrixset(str(FIXTURE))
    assert u.matrices == reference.matrix_set().matrices
    assert matrixset_to_text(u) == FIXTURE.read_text(encoding="utf-8")


def test_verify_exit_codes(fixture_path, capsys):
    assert run(["verify", fixture_path]) == 0
    assert run(["verify", fixture_path, "--genus", "0"]) == 1
    out = capsys.readouterr().out
    assert "0, 0, 0, 0, 0, 0, 1, 1, 1" in out.replace("[", "").replace("]", "")
    assert run(["verify", "/nonexistent/file.json"]) == 2
    assert run(["verify"]) == 2  # missing argument


def test_verify_min_genus(fixture_path, capsys):
    assert run(["--json", "verify", fixture_path, "--min-genus"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["minimal_genus"] == 1
    assert data["valid"] is True


def test_verify_threads_equivalent(fixture_path, capsys, monkeypatch):
    run(["--json", "verify", fixture_path, "--genus", "0", "--threads", "1"])
    one = capsys.readouterr().out
    run(["--json", "verify", fixture_path, "--genus", "0", "--threads", "4"])
    four = capsys.readouterr().out
    assert one == four
    monkeypatch.setenv("UDMG_THREADS", "3")
    run(["--json", "verify", fixture_path, "--genus", "0", "--threads", "1"])
    assert capsys.readouterr().out == one


def test_construct_genus1(tmp_path, capsys):
    desc = FIXTURE.parent / "genus1_f5_construction.json"
    out = tmp_path / "set.json"
    assert run(["--json", "construct", str(desc), "-o", str(out)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verified"] and data["L"] == 9
    assert data["valuations"][8] == [0, 1, 3]
    assert any("s*" in b or "r" in b for b in data["basis"])
    u = load_matrixset(str(out))
    assert u.matrices == reference.matrix_set().matrices


def test_construct_genus0(tmp_path, capsys):
    desc = tmp_path / "line.json"
    desc.write_text(json.dumps({
        "q": 5, "genus": 0, "K": 3,
        "points": ["0", "1", "2", "3", "4", "inf"],
    }))
    out = tmp_path / "rs.json"
    assert run(["--json", "construct", str(desc), "-o", str(out)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["K"] == 3 and data["L"] == 6
    assert run(["verify", str(out)]) == 0


def test_quotient_command(fixture_path, tmp_path, capsys):
    out = tmp_path / "quot.json"
    code = run(["--json", "quotient", fixture_path,
                "--truncate", "1,0,0,0,0,0,0,0,0", "-o", str(out)])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["d"], data["r"], data["B_dim"]) == (0, 2, 1)
    assert data["height"] == 2 and data["genus"] == 1
    q = load_matrixset(str(out))
    assert q.K == 2 and q.lengths == (2,) + (3,) * 8
    assert run(["verify", str(out)]) == 0


def test_code_command(fixture_path, capsys):
    assert run(["--json", "code", fixture_path, "--min-distance"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["n"], data["k"]) == (9, 3)
    assert 6 <= data["d"] <= 7
    assert data["defect"] <= 1


def test_bounds_command(capsys):
    assert run(["--json", "bounds", "--K", "4", "--q", "2", "--g", "2",
                "--lengths", "4,4,4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["class1_bound"] == 9
    assert data["partition_bound"] == 8


def test_modulate_command(fixture_path, capsys):
    assert run(["--json", "modulate", fixture_path, "--snr", "--audit"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["snr_within_bounds"] is True
    assert data["audit_passed"] is True
    assert data["rate_symbols"] == 3
    assert data["snr"] == "40384"  # exact rational; this one happens to be integral
    assert "/" in data["audit_floor"]


def test_example_pipeline(tmp_path, capsys):
    out = tmp_path / "emitted.json"
    assert run(["--json", "example-paper", "-o", str(out)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["all_passed"] is True
    assert out.read_text(encoding="utf-8") == FIXTURE.read_text(encoding="utf-8")


def test_malformed_inputs_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["verify", str(bad)]) == 2
    nodiv = tmp_path / "nodiv.json"
    nodiv.write_text(json.dumps({"q": 5, "genus": 1, "a": 1, "b": 1,
                                 "points": [[0, 1]]}))
    assert run(["construct", str(nodiv), "-o", str(tmp_path / "x.json")]) == 2


def test_console_module_smoke(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "udmg.cli", "verify", str(FIXTURE)],
        capture_output=True, text=True, timeout=60)
    assert res.returncode == 0
    assert "valid: True" in res.stdout
