import pytest

from fibtile.utils.bfile import first_mismatch, parse_bfile, read_bfile

LADDER_BFILE = """\
# A001353: spanning trees of the n-ladder
1 1
2 4

3 15
4 56
"""


def test_parse_bfile():
    assert parse_bfile(LADDER_BFILE) == {1: 1, 2: 4, 3: 15, 4: 56}
    assert parse_bfile("") == {}

    with pytest.raises(ValueError):
        parse_bfile("1 1\n2\n")

    with pytest.raises(ValueError):
        parse_bfile("1 one\n")

    with pytest.raises(ValueError):
        parse_bfile("1 1\n1 2\n")


def test_read_bfile(tmp_path):
    path = tmp_path / "b001353.txt"
    path.write_text(LADDER_BFILE)
    assert read_bfile(path) == {1: 1, 2: 4, 3: 15, 4: 56}
    assert read_bfile(str(path)) == {1: 1, 2: 4, 3: 15, 4: 56}


def test_first_mismatch():
    terms = parse_bfile(LADDER_BFILE)
    assert first_mismatch([1, 4, 15, 56], terms) is None
    assert first_mismatch([4, 15], terms, offset=2) is None
    assert first_mismatch([1, 4, 16, 56], terms) == (3, 16, 15)
    # indices past the end of the b-file are mismatches
    assert first_mismatch([1, 4, 15, 56, 209], terms) == (5, 209, None)


if __name__ == "__main__":
    pytest.main()
