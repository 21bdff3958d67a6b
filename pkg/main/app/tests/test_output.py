import json

import pytest

from app.utils.output import OutputDocument, parse_csv, write_document


def sample(fmt):
    doc = OutputDocument("coeffs", {"family": "laplace", "order": 2}, ["n", "value"], format=fmt)
    for n, value in enumerate(["1", "1/12", "1/288"]):
        doc.add_row(n=n, value=value)
    return doc


def test_markdown():
    assert sample("markdown").render() == (
        "| n | value |\n"
        "|---|-------|\n"
        "| 0 |     1 |\n"
        "| 1 |  1/12 |\n"
        "| 2 | 1/288 |\n"
    )


def test_csv():
    assert sample("csv").render() == "n,value\n0,1\n1,1/12\n2,1/288\n"


def test_json():
    doc = json.loads(sample("json").render())
    assert doc == {
        "command": "coeffs",
        "params": {"family": "laplace", "order": 2},
        "rows": [{"n": "0", "value": "1"}, {"n": "1", "value": "1/12"}, {"n": "2", "value": "1/288"}],
    }


def test_csv_quotes_only_when_needed():
    doc = OutputDocument("x", {}, ["note"], format="csv")
    doc.add_row(note="a, b")
    assert doc.render() == 'note\n"a, b"\n'
    assert parse_csv(doc.render()) == [{"note": "a, b"}]


def test_blank_cells():
    doc = OutputDocument("x", {}, ["a", "b"], format="csv")
    doc.add_row(a=None, b=3)
    assert doc.rows == [{"a": "", "b": "3"}]
    assert doc.column("b") == ["3"]


def test_missing_column():
    with pytest.raises(ValueError):
        sample("csv").add_row(n=3)


def test_unknown_format():
    with pytest.raises(ValueError):
        OutputDocument("x", {}, ["a"], format="xml")


def test_atomic_write(tmp_path):
    target = tmp_path / "out" / "laplace.csv"
    assert write_document(sample("csv"), target) == target
    assert target.read_text(encoding="utf-8") == "n,value\n0,1\n1,1/12\n2,1/288\n"
    assert [p.name for p in target.parent.iterdir()] == ["laplace.csv"]


def test_write_to_stdout(capsys):
    assert write_document(sample("csv"), "-") is None
    assert capsys.readouterr().out == "n,value\n0,1\n1,1/12\n2,1/288\n"
