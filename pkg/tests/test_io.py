import re
from fractions import Fraction

import pytest

from strongmatch.generate import generate_points
from strongmatch.geom import check_general_position, make_points, smallest_homothet
from strongmatch.greedy import Pair, StrongMatching, strong_match_greedy
from strongmatch.pointio import (ParseError, format_matching, format_points, parse_matching,
                                 parse_points)
from strongmatch.svg import render_svg


# -- point files ------------------------------------------------------------

def test_points_round_trip_bytes():
    text = format_points(generate_points(25, 3, "disk"))
    assert format_points(parse_points(text)) == text


def test_comments_and_blank_lines():
    pts = parse_points("# header\n\n0.5 0.25  # trailing\n  1 2\n")
    assert [(p.x, p.y, p.index) for p in pts] == [(0.5, 0.25, 0), (1.0, 2.0, 1)]


def test_exact_parse():
    pts = parse_points("0.1 0.2\n", exact=True)
    assert pts[0].x == Fraction(1, 10)


@pytest.mark.parametrize("text,line", [("0 0\n1 2 3\n", 2), ("# c\n0 zero\n", 2),
                                       ("nan 0\n", 1), ("0\n", 1)])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_points(text, path="pts.txt")
    assert err.value.line == line
    assert str(err.value).startswith(f"pts.txt:{line}: ")


# -- matching files ---------------------------------------------------------

@pytest.mark.parametrize("kind,mode", [("disk", "disk"), ("tri_down", "triangle"),
                                       ("tri_up", "triangle"), ("square", "square")])
def test_matching_round_trip(kind, mode):
    pts = generate_points(30, 7, mode)
    M = strong_match_greedy(pts, kind)
    text = format_matching(M)
    back = parse_matching(text)
    assert back.kind == kind
    assert [(p.i, p.j) for p in back.pairs] == [(p.i, p.j) for p in M.pairs]
    assert format_matching(back) == text


def test_mixed_triangles_read_as_theta():
    pts = make_points([(0, 0), (1, 0.3), (5, 5), (6, 5.4)])
    M = StrongMatching("theta6", [Pair(0, 1, smallest_homothet(pts[0], pts[1], "tri_down")),
                                  Pair(2, 3, smallest_homothet(pts[2], pts[3], "tri_up"))])
    assert parse_matching(format_matching(M)).kind == "theta6"


@pytest.mark.parametrize("text,msg", [("0 1 disk 0 0\n", "takes 3"),
                                      ("0 1 blob 1 2 3\n", "unknown shape"),
                                      ("0 x square 0 0 1\n", "integers"),
                                      ("0 1 triangle 0 0 1 left\n", "orientation"),
                                      ("0 1\n", "expected")])
def test_matching_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_matching(text)


# -- svg --------------------------------------------------------------------

def test_svg_one_disk():
    pts = make_points([(0, 0), (2, 0)])
    svg = render_svg(pts, strong_match_greedy(pts, "disk"))
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 1


def test_svg_points_only():
    svg = render_svg(make_points([(0, 0), (1, 1), (2, 0.5)]))
    assert "<circle" not in svg and "<rect" not in svg and "<path" in svg


def test_svg_square_stays_square():
    pts = make_points([(0, 0), (3, 1)])
    svg = render_svg(pts, strong_match_greedy(pts, "square"))
    w = float(re.search(r'<rect[^>]* width="([^"]+)"', svg).group(1))
    h = float(re.search(r'<rect[^>]* height="([^"]+)"', svg).group(1))
    assert w == pytest.approx(h)


def test_svg_triangles():
    pts = generate_points(12, 1, "triangle")
    svg = render_svg(pts, strong_match_greedy(pts, "tri_up"))
    assert svg.count("<polygon") >= 1


def test_svg_empty():
    assert "<svg" in render_svg([])


# -- generator --------------------------------------------------------------

def test_generate_empty():
    assert generate_points(0, 1) == []


def test_generate_is_deterministic():
    assert format_points(generate_points(50, 9, "square")) == \
        format_points(generate_points(50, 9, "square"))
    assert format_points(generate_points(50, 9)) != format_points(generate_points(50, 10))


@pytest.mark.parametrize("mode", ["disk", "triangle", "square"])
def test_generate_general_position(mode):
    pts = generate_points(100, 2, mode)
    assert len(pts) == 100
    assert check_general_position(pts, mode).ok
    assert all(0 <= p.x <= 1 and 0 <= p.y <= 1 for p in pts)
