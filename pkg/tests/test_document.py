import pytest

from _families import FIXTURES
from nhs import (Numbering, ParseError, empty_disk, format_numbering, format_numberings, parse_complex,
                 parse_numbering, quadrant_disk, serialize_complex)

QUADRANT_TEXT = (FIXTURES / "quadrant_disk.nhs").read_text()


def test_quadrant_document_parses_to_builder():
    assert parse_complex(QUADRANT_TEXT) == quadrant_disk()


def test_empty_disk_document():
    c = parse_complex("surface euler=1 boundary_circles=1\nregion d genus=0 free=(rim:yes)\n")
    assert (len(c.vertices), len(c.edges), len(c.regions)) == (0, 0, 1)
    assert c == empty_disk()


@pytest.mark.parametrize("c", [quadrant_disk(), empty_disk()], ids=["quadrant", "empty"])
def test_round_trip(c):
    text = serialize_complex(c)
    assert parse_complex(text) == c
    assert serialize_complex(parse_complex(text)) == text


def test_unicode_ids_round_trip():
    text = QUADRANT_TEXT.replace("q1", "Σ₁").replace("bne", "β→n")
    c = parse_complex(text)
    assert "Σ₁" in c.region_map
    assert serialize_complex(c) == text


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\nsurface euler=2 boundary_circles=0  # sphere\nregion s genus=0\n"
    assert serialize_complex(parse_complex(text)) == "surface euler=2 boundary_circles=0\nregion s genus=0\n"


@pytest.mark.parametrize("text, fragment, line", [
    ("surface euler=1 boundary_circles=1\nedge c kind=C from=x to=y\n", "dangling reference to vertex 'x'", 2),
    ("surface euler=2 boundary_circles=0\nregion s genus=0 cycles=(+k)\n", "dangling reference to edge 'k'", 2),
    ("surface euler=2 boundary_circles=0\nvertex a kind=dummy\nregion a genus=0\n", "duplicate id 'a'", 3),
    ("surface euler=2 boundary_circles=0\nvertex a kind=star\n", "unknown vertex kind", 2),
    ("surface euler=2 boundary_circles=0\nedge b kind=B from=a to=a\n", "requires pB", 2),
    ("surface euler=2 boundary_circles=0\nregion s genus=-1\n", "at least 0", 2),
    ("surface euler=2 boundary_circles=0\nregion s genus=0 cycles=(k)\n", "malformed directed edge", 2),
    ("region s genus=0\n", "missing surface record", 1),
    ("surface euler=2 boundary_circles=0\nblob x\n", "unknown record", 2),
])
def test_parse_errors(text, fragment, line):
    with pytest.raises(ParseError) as info:
        parse_complex(text)
    assert fragment in str(info.value)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}, column ")


def test_error_column_points_at_token():
    with pytest.raises(ParseError) as info:
        parse_complex("surface euler=1 boundary_circles=1\nvertex o kind=crossing\nedge c kind=C from=o to=zz\n")
    assert info.value.column == len("edge c kind=C from=o to=") + 1


def test_numbering_format_round_trip():
    n = Numbering.of({"q2": 0, "q1": 1, "q4": 0, "q3": 1})
    text = format_numbering(n)
    assert text.splitlines()[0] == "region q1 = 1"
    assert parse_numbering(text, quadrant_disk()) == n


def test_numbering_rejects_unknown_and_duplicate_regions():
    c = quadrant_disk()
    with pytest.raises(ParseError, match="unknown region"):
        parse_numbering("region q9 = 1\n", c)
    with pytest.raises(ParseError, match="duplicate region"):
        parse_numbering("region q1 = 1\nregion q1 = 0\n", c)
    with pytest.raises(ParseError, match="at least 0"):
        parse_numbering("region q1 = -1\n", c)


def test_numbering_blocks_are_blank_line_separated():
    ns = [Numbering.of({"a": 0}), Numbering.of({"a": 1})]
    assert format_numberings(ns) == "region a = 0\n\nregion a = 1\n"
    assert format_numberings([]) == ""
