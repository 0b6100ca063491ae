import pytest

from omlab.algfile import format_alg, parse_alg, read_alg, write_alg
from omlab.corpus import corpus_dir, load
from omlab.errors import DuplicateHeader, ParseError, SizeMismatch


def test_parse_b2_with_comments():
    text = "# two elements\nn 2\none 1\nzero 0\n1 1   \n0 1\n# trailing\n"
    assert parse_alg(text) == ([[1, 1], [0, 1]], 1, 0)


def test_short_table_is_size_mismatch():
    text = "n 4\none 3\nzero 0\n3 3 3 3\n0 3 3 3\n1 2 3 3\n"
    with pytest.raises(SizeMismatch):
        parse_alg(text)


def test_short_row_reports_column():
    with pytest.raises(SizeMismatch) as info:
        parse_alg("n 2\none 1\nzero 0\n1 1\n0\n")
    assert info.value.line == 5


def test_duplicate_header():
    with pytest.raises(DuplicateHeader):
        parse_alg("n 2\nn 2\none 1\nzero 0\n1 1\n0 1\n")


def test_non_integer_token():
    with pytest.raises(ParseError) as info:
        parse_alg("n 2\none 1\nzero 0\n1 x\n0 1\n")
    assert (info.value.line, info.value.column) == (4, 3)


def test_writer_round_trip_on_corpus():
    for path in sorted(corpus_dir().glob("*.alg")):
        text = path.read_text()
        alg = read_alg(path)
        assert write_alg(alg) == text
        assert parse_alg(write_alg(alg)) == ([list(r) for r in alg.imp], alg.one, alg.zero)


def test_read_names_by_stem():
    assert load("MO2").name == "MO2"
    assert format_alg([[1, 1], [0, 1]], 1, 0).startswith("n 2\none 1\nzero 0\n")
