"""End-to-end CLI checks against golden reports.

Regenerate goldens with ``python tests/test_cli.py --regen`` and review the diff.
"""

import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from conftest import CORPUS, GOLDEN, corpus_files  # noqa: E402
from veqlab.cli import COMMANDS, main, run_command  # noqa: E402

CASES = [
    ("solve", "z4_tau", []),
    ("solve", "z4_tau_mu_alt", []),
    ("solve", "z8_tau_z2", ["--float"]),
    ("solve", "z4_dalembert", []),
    ("solve", "klein_sigma_mu", []),
    ("solve", "d4xz4_sigma", []),
    ("solve", "z4xnull_tau", []),
    ("solve", "q8_tau", ["--format", "json"]),
    ("validate", "leftzero2_sigma", []),
    ("analyze", "z3_discover", []),
    ("analyze", "d4_tau", ["--format", "json"]),
    ("characters", "z4_tau_mu_alt", []),
    ("crosscheck", "z6_tau", []),
    ("crosscheck", "z4_tau", ["--format", "json"]),
    ("verify", "z4_tau", ["--values", "0 -1 0 1"]),
    ("verify", "z4_tau", ["--values", "0 1 0 -1"]),
]


def golden_name(cmd, stem, flags):
    tag = "".join("-" + f.lstrip("-").replace(" ", "_") for f in flags)
    ext = "json" if "json" in flags else "txt"
    return f"{cmd}.{stem}{tag}.{ext}"


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("cmd, stem, flags", CASES, ids=[golden_name(*c) for c in CASES])
def test_golden(cmd, stem, flags):
    code, out = run([cmd, str(CORPUS / f"{stem}.veq"), *flags])
    expected = (GOLDEN / golden_name(cmd, stem, flags)).read_text()
    assert out == expected
    assert out.splitlines()[-1].endswith(str(code)) or '"exit_code"' in out


def test_z4_solve_golden_content():
    text = (GOLDEN / "solve.z4_tau.txt").read_text()
    assert "f = (0, 1, 0, -1)" in text
    assert "provenance chi = (1, w(4,1), -1, -1*w(4,1))" in text
    assert "identities: all pass" in text
    assert text.count("solution ") == 1


def test_deterministic():
    args = ["solve", str(CORPUS / "d4xz4_tau.veq"), "--format", "json"]
    assert run(args) == run(args)


EXPECTED_EXIT = {"leftzero2_sigma": 1}


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_corpus_exit_codes(path):
    for cmd in ("validate", "analyze", "characters"):
        code, _ = run([cmd, str(path)])
        assert code == EXPECTED_EXIT.get(path.stem, 0), cmd


@pytest.mark.parametrize("path", [p for p in corpus_files() if p.stem not in EXPECTED_EXIT], ids=lambda p: p.stem)
def test_corpus_solve_json(path):
    rep = run_command("solve", path)
    if "discover" in path.stem:
        assert rep.exit_code == 1
        return
    assert rep.exit_code == 0
    data = json.loads(json.dumps(rep.data))
    assert data["instance"]["name"] == path.stem
    for sol in data.get("solutions", []):
        assert sol["verified"] is True
        if "dalembert" in path.stem:
            continue
        assert all(v["ok"] for v in sol["identities"].values())
        assert all(v["ok"] for v in sol["g"]["checks"].values())


def test_crosscheck_all_small_corpus():
    for path in corpus_files():
        rep = run_command("crosscheck", path)
        if rep.exit_code == 1:
            continue
        assert rep.exit_code == 0, path.stem
        assert rep.data["crosscheck"]["match"]


def test_crosscheck_over_cap():
    rep = run_command("crosscheck", CORPUS / "z6_tau.veq", brute_force_cap=5)
    assert rep.exit_code == 1
    assert "exceeds the order cap" in rep.messages[-1]


def test_crosscheck_mismatch_exit_two(monkeypatch):
    import veqlab.cli as cli

    monkeypatch.setattr(cli, "brute_force_solutions", lambda *a, **k: [])
    rep = run_command("crosscheck", CORPUS / "z4_tau.veq")
    assert rep.exit_code == 2


def test_bad_file(tmp_path):
    p = tmp_path / "bad.veq"
    p.write_text("elements: a b\ntable:\n  a\n")
    code, out = run(["validate", str(p)])
    assert code == 1
    assert "line 3" in out
    code, out = run(["validate", str(tmp_path / "missing.veq")])
    assert code == 1


def test_bad_values():
    code, out = run(["verify", str(CORPUS / "z4_tau.veq"), "--values", "0 1 0"])
    assert code == 1
    code, out = run(["verify", str(CORPUS / "z4_tau.veq"), "--values", "0 1 0 w(4"])
    assert code == 1


def test_float_rendering():
    _, out = run(["solve", str(CORPUS / "z4_tau.veq"), "--format", "json", "--float"])
    data = json.loads(out)
    assert data["solutions"][0]["approx_float"] == ["0.0", "1.0", "0.0", "-1.0"]


def test_console_script():
    r = subprocess.run(["veqlab", "solve", str(CORPUS / "z4_tau.veq")], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout == (GOLDEN / "solve.z4_tau.txt").read_text()


def test_commands_complete():
    assert set(COMMANDS) == {"validate", "analyze", "characters", "solve", "verify", "crosscheck"}


def _regen():
    GOLDEN.mkdir(exist_ok=True)
    for cmd, stem, flags in CASES:
        _, out = run([cmd, str(CORPUS / f"{stem}.veq"), *flags])
        (GOLDEN / golden_name(cmd, stem, flags)).write_text(out)
        print("wrote", golden_name(cmd, stem, flags))


if __name__ == "__main__" and "--regen" in sys.argv:
    _regen()
