import json

import pytest

from stardec import formats
from stardec import generators as gen
from stardec.cli import run


@pytest.fixture
def petersen_file(tmp_path):
    path = tmp_path / "petersen.txt"
    assert run(["generate", "petersen", "-o", str(path)]) == 0
    return path


def test_generate_then_decompose(petersen_file, tmp_path):
    out = tmp_path / "d.json"
    dot = tmp_path / "d.dot"
    code = run(["decompose", str(petersen_file), "--check", "--oracle-crosscheck", "16",
                "-o", str(out), "--dot", str(dot)])
    assert code == 0
    assert run(["verify", str(petersen_file), str(out)]) == 0
    assert "color=red" in dot.read_text()


def test_verify_tampered(petersen_file, tmp_path):
    out = tmp_path / "d.json"
    run(["decompose", str(petersen_file), "-o", str(out)])
    doc = json.loads(out.read_text())
    doc["matching"].append(doc["tree"].pop())
    out.write_text(json.dumps(doc))
    assert run(["verify", str(petersen_file), str(out)]) == 1


def test_decompose_degree_two(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert run(["decompose", str(path)]) == 2


def test_missing_file_is_io_error(tmp_path):
    assert run(["decompose", str(tmp_path / "missing.txt")]) == 3


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 5\n0 1\n")
    assert run(["decompose", str(path)]) == 3


def test_usage_error():
    assert run(["frobnicate"]) == 3


def test_generate_formats(tmp_path):
    g6 = tmp_path / "j5.g6"
    assert run(["generate", "flower", "5", "--format", "graph6", "-o", str(g6)]) == 0
    assert formats.read_graph(g6) == gen.flower_snark(5)
    assert run(["generate", "flower", "4"]) == 3


def test_generate_k4_compose(tmp_path):
    path = tmp_path / "k4.txt"
    assert run(["generate", "k4-compose", "-o", str(path)]) == 0
    assert formats.read_graph(path).n == 70


def test_generate_fixture(tmp_path):
    path = tmp_path / "e4.txt"
    assert run(["generate", "fixture", "e4", "-o", str(path)]) == 0
    assert formats.read_graph(path) == gen.fixture_e4()


def test_random_seed_from_environment(tmp_path, monkeypatch):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    monkeypatch.setenv("STARDEC_SEED", "7")
    assert run(["generate", "random", "--centre", "8", "--tips", "3,3", "-o", str(a)]) == 0
    assert run(["generate", "random", "--seed", "7", "--centre", "8", "--tips", "3,3", "-o", str(b)]) == 0
    assert a.read_text() == b.read_text()
    assert run(["generate", "random", "--centre", "8"]) == 3


def test_detect(petersen_file, tmp_path, capsys):
    assert run(["detect", str(petersen_file)]) == 0
    cover = formats.cover_from_json(capsys.readouterr().out)
    assert len(cover.cycles) == 2
    assert run(["detect", str(petersen_file), "--budget", "0"]) == 2
    assert capsys.readouterr().out.strip() == "unknown"


def test_decompose_with_cover(petersen_file, tmp_path):
    cover = tmp_path / "cover.json"
    assert run(["detect", str(petersen_file), "-o", str(cover)]) == 0
    assert run(["decompose", str(petersen_file), "--cover", str(cover), "--check"]) == 0


def test_oracle(petersen_file, capsys):
    assert run(["oracle", str(petersen_file)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["tree"]) == 9
    assert run(["oracle", str(petersen_file), "--budget", "2"]) == 1
    assert "none within budget" in capsys.readouterr().out
