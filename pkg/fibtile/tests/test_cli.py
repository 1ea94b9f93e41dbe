import json

import pytest

from fibtile.cli import main
from fibtile.verify import SUITES

PLUS1_JSON = json.dumps(
    {
        "scheme": "fib-plus1",
        "parts": [
            {"size": 2, "color": [2]},
            {"size": 4, "color": [1, 1, 2]},
            {"size": 1, "color": [1]},
            {"size": 3, "color": [2, 1]},
        ],
    }
)


def test_no_command(capsys):
    assert main([]) == 0
    assert "usage" in capsys.readouterr().out


def test_count(capsys):
    assert main(["count", "--scheme", "fib-even", "--n", "8"]) == 0
    assert capsys.readouterr().out == "10864\n"

    assert main(["count", "--scheme", "fib-even", "--scheme", "fib-odd", "--max-n", "3", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["n"] == [1, 2, 3]
    assert out["counts"]["fib-even"] == [1, 4, 15]
    assert set(out["counts"]) == {"fib-even", "fib-odd"}

    assert main(["count", "--max-n", "4"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0].split() == ["scheme", "1", "2", "3", "4"]
    assert len(lines) == 6


def test_count_bfile(tmp_path):
    good = tmp_path / "b001353.txt"
    good.write_text("1 1\n2 4\n3 15\n4 56\n")
    assert main(["count", "--scheme", "fib-even", "--max-n", "4", "--oeis-bfile", str(good)]) == 0

    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 4\n3 15\n4 57\n")
    assert main(["count", "--scheme", "fib-even", "--max-n", "4", "--oeis-bfile", str(bad)]) == 1

    # one scheme only
    assert main(["count", "--max-n", "4", "--oeis-bfile", str(good)]) == 1

    assert main(["count", "--scheme", "fib-even", "--oeis-bfile", str(tmp_path / "missing.txt")]) == 1


def test_enumerate(capsys):
    assert main(["enumerate", "--kind", "colored", "--scheme", "fib-even", "--n", "3"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 15
    assert all(json.loads(line)["scheme"] == "fib-even" for line in lines)

    assert main(["enumerate", "--kind", "tn-partition", "--n", "4", "--limit", "2"]) == 0
    assert len(capsys.readouterr().out.strip().split("\n")) == 2

    assert main(["enumerate", "--kind", "colored", "--n", "3"]) == 1
    assert main(["enumerate", "--kind", "tree", "--n", "0"]) == 1


def test_map(capsys):
    assert main(["map", "--bijection", "thm31-word", "--input", PLUS1_JSON]) == 0
    assert capsys.readouterr().out == '"021102201"\n'

    assert main(["map", "--bijection", "thm31-word", "--format", "text", "--input", PLUS1_JSON]) == 0
    assert capsys.readouterr().out == "021102201\n"

    assert main(["map", "--bijection", "phi", "--format", "text", "--input", "14|2|3"]) == 0
    assert capsys.readouterr().out == "14|23\n"

    assert main(["map", "--bijection", "thm31-word", "--inverse", "--input", "021102201"]) == 0
    assert json.loads(capsys.readouterr().out) == json.loads(PLUS1_JSON)

    assert main(["map", "--bijection", "phi", "--input", "14|2|3"]) == 0
    assert json.loads(capsys.readouterr().out) == [[1, 4], [2, 3]]

    assert main(["map", "--bijection", "alpha", "--input", "1,1,2,1,2,2,1"]) == 0
    assert json.loads(capsys.readouterr().out) == [1, 1, 3, 5, 1]

    # fib-plus1 input for a fib-only codec
    assert main(["map", "--bijection", "thm32-word", "--input", PLUS1_JSON]) == 1

    assert main(["map", "--bijection", "two-comp", "--inverse", "--input", "[[1, 1]]"]) == 1


def test_malformed_input():
    malformed = [
        ("thm31-word", '{"scheme": "fib-plus1", "parts": [{"size": 3}]}'),
        ("unimodal", '{"scheme": "fib-odd", "parts": [{"color": [{"junction": "dotted"}]}]}'),
        ("spot-word", '{"scheme": "fib-even", "parts": [{"color": [5]}]}'),
        ("ladder-tree", '{"scheme": "fib-even", "parts": [5]}'),
        ("phi", "[[1, \"2\"]]"),
        ("ocps-string", "[[1], 2]"),
    ]
    for bijection, text in malformed:
        assert main(["map", "--bijection", bijection, "--input", text]) == 1, bijection

    assert main(["map", "--bijection", "ladder-tree", "--inverse", "--input", '{"n": 2, "edges": [1, 2]}']) == 1
    assert main(["map", "--bijection", "two-comp", "--inverse", "--family", "one-two", "--input", "[1, 2]"]) == 1
    assert main(["render", "--kind", "board", "--input", '{"n": 3, "spots": ["a"]}']) == 1


def test_map_input_file(tmp_path, capsys):
    path = tmp_path / "colored.json"
    path.write_text(PLUS1_JSON)
    assert main(["map", "--bijection", "two-comp", "--input-file", str(path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert sum(part for part, _ in out) == 10


def test_render(capsys):
    assert main(["render", "--kind", "colored", "--input", PLUS1_JSON]) == 0
    assert capsys.readouterr().out == "[. .|.:.:. .|.|. .:.]\n"

    assert main(["render", "--kind", "partition", "--format", "dot", "--input", "13|2"]) == 0
    assert capsys.readouterr().out.startswith("graph partition {")

    assert main(["render", "--kind", "tree", "--format", "svg", "--input", '{"n": 2, "edges": ["B1", "T1", "V1"]}']) == 1


def test_series(capsys):
    assert main(["series", "--numer", "0,1,-1", "--denom", "1,-3,1", "--n", "5"]) == 0
    assert capsys.readouterr().out == "1, 2, 5, 13, 34\n"

    assert main(["series", "--scheme", "fib-even", "--n", "4", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == [1, 4, 15, 56]

    assert main(["series", "--n", "4"]) == 1
    assert main(["series", "--scheme", "fib", "--numer", "1", "--n", "4"]) == 1


def test_verify(capsys, tmp_path):
    assert main(["verify", "--max-n", "1", "--jobs", "2"]) == 0
    assert capsys.readouterr().out.strip().endswith(f"{len(SUITES)}/{len(SUITES)} suites passed")

    config = tmp_path / "config.json"
    config.write_text(json.dumps({"suites": [{"name": "phi", "max_n": 3}]}))
    assert main(["verify", "--suite", "phi", "--config", str(config), "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [(r["suite"], r["maxN"], r["code"]) for r in out] == [("phi", 3, "ok")]

    assert main(["verify", "--max-n", "-1"]) == 1


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["count", "--scheme", "fib-plus2"])
    assert e.value.code == 2

    with pytest.raises(SystemExit) as e:
        main(["map", "--input", "1"])
    assert e.value.code == 2


if __name__ == "__main__":
    pytest.main()
