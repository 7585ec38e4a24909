"""Command-line interface: verbs, exit codes and JSON output."""

import json
import subprocess
import sys

import pytest

from tiler.cli import main

from .conftest import CORPUS


@pytest.fixture
def fig_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.txt"
        path.write_text(CORPUS[name] + "\n", encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_tileable(self, capsys, fig_file):
        code, out, _ = run(capsys, "check", fig_file("2x2"), "--json")
        assert code == 0
        info = json.loads(out)
        assert info["cells"] == 4
        assert info["tileable"] is True
        assert info["equilibrium_ok"] is True

    def test_untileable_exit_code(self, capsys, fig_file):
        code, out, _ = run(capsys, "check", fig_file("t-tetromino"))
        assert code == 1
        assert "tileable: False" in out


class TestMinMax:
    def test_min_render(self, capsys, fig_file):
        code, out, _ = run(capsys, "min", fig_file("2x2"))
        assert code == 0
        assert out == "ab\nab\n"

    def test_min_max_differ(self, capsys, fig_file):
        path = fig_file("2x4")
        _, lo, _ = run(capsys, "min", path, "--json")
        _, hi, _ = run(capsys, "max", path, "--json")
        assert json.loads(lo) != json.loads(hi)

    def test_untileable(self, capsys, fig_file):
        code, _, err = run(capsys, "min", fig_file("l-tromino"))
        assert code == 1
        assert "untileable" in err


class TestCountEnum:
    def test_count(self, capsys, fig_file):
        code, out, _ = run(capsys, "count", fig_file("3x4"))
        assert (code, out.strip()) == (0, "11")

    def test_count_json(self, capsys, fig_file):
        _, out, _ = run(capsys, "count", fig_file("2x4"), "--json")
        assert json.loads(out)["count"] == 5

    def test_enum_json(self, capsys, fig_file):
        _, out, _ = run(capsys, "enum", fig_file("2x3"), "--json")
        assert len(json.loads(out)["tilings"]) == 3

    def test_enum_limit(self, capsys, fig_file):
        _, out, _ = run(capsys, "enum", fig_file("4x4"), "--json", "--limit", "2")
        assert len(json.loads(out)["tilings"]) == 2

    def test_oracle_count(self, capsys, fig_file):
        _, out, _ = run(capsys, "oracle-count", fig_file("3x4"))
        assert out.strip() == "11"


class TestSample:
    def test_seeded_and_repeatable(self, capsys, fig_file):
        path = fig_file("2x4")
        code, out1, _ = run(capsys, "sample", path, "--seed", "3", "-n", "4", "--json")
        assert code == 0
        _, out2, _ = run(capsys, "sample", path, "--seed", "3", "-n", "4", "--json")
        assert out1 == out2
        assert len(json.loads(out1)["samples"]) == 4

    def test_seed_required(self, capsys, fig_file):
        with pytest.raises(SystemExit) as exc:
            main(["sample", fig_file("2x2")])
        assert exc.value.code == 2


class TestDist:
    def test_min_to_max(self, capsys, fig_file, tmp_path):
        path = fig_file("4x4-minus-2x2")
        _, lo, _ = run(capsys, "min", path, "--json")
        _, hi, _ = run(capsys, "max", path, "--json")
        t1 = tmp_path / "t1.json"
        t2 = tmp_path / "t2.json"
        t1.write_text(lo)
        t2.write_text(hi)
        code, out, _ = run(capsys, "dist", path, str(t1), str(t2), "--json", "--path")
        assert code == 0
        result = json.loads(out)
        assert result["distance"] == 1
        assert result["local_flip_connected"] is False
        assert len(result["path"]) == 1

    def test_local_count(self, capsys, fig_file, tmp_path):
        path = fig_file("2x2")
        _, lo, _ = run(capsys, "min", path, "--json")
        _, hi, _ = run(capsys, "max", path, "--json")
        t1 = tmp_path / "t1.json"
        t2 = tmp_path / "t2.json"
        t1.write_text(lo)
        t2.write_text(hi)
        _, out, _ = run(capsys, "dist", path, str(t1), str(t2), "--json")
        result = json.loads(out)
        assert result["local_flip_connected"] is True
        assert result["local_flip_count"] == 1


class TestDiagnostics:
    def test_components(self, capsys, fig_file):
        _, out, _ = run(capsys, "components", fig_file("4x4-minus-2x2"), "--json")
        result = json.loads(out)
        kinds = sorted(c["kind"] for c in result["components"])
        assert kinds == ["hole", "infinity"]

    def test_eq(self, capsys, fig_file):
        _, out, _ = run(capsys, "eq", fig_file("3x3-ring"), "--json")
        result = json.loads(out)
        assert result["steps"] == {"0": -4}
        assert len(result["arcs"]) == 4  # two crossed edges, both directions

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "min", "/no/such/file")
        assert code == 2
        assert "error:" in err

    def test_bad_figure(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("#?\n##")
        code, _, err = run(capsys, "min", str(bad))
        assert code == 2
        assert "error:" in err


def test_console_script(fig_file):
    out = subprocess.run(
        [sys.executable, "-m", "tiler.cli", "count", fig_file("2x3")],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "3"
