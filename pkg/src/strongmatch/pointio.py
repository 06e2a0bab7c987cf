"""Point and matching files.

Point file: one ``x y`` pair per line, ``#`` starts a comment, the index of
a point is its position among the data lines.  Matching file: one
``i j kind params...`` record per line where kind and arity are

    disk      cx cy r
    triangle  a b c down|up
    square    x0 y0 s

Numbers are written with ``PLACES`` digits after the point, so a canonical
file survives parse -> serialize byte for byte.
"""

from .geom import Disk, Point, Square, TriDown, TriUp
from .greedy import Pair, StrongMatching
from .numeric import format_number, parse_number

PLACES = 12


class ParseError(ValueError):
    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def _number(token, exact, path, lineno):
    try:
        return parse_number(token, exact)
    except (ValueError, ArithmeticError):
        raise ParseError(path, lineno, f"bad number {token!r}") from None


def parse_points(text, exact=False, path="<points>"):
    points = []
    for lineno, body in _data_lines(text):
        tokens = body.split()
        if len(tokens) != 2:
            raise ParseError(path, lineno, f"expected 2 numbers, got {len(tokens)}")
        x, y = (_number(t, exact, path, lineno) for t in tokens)
        points.append(Point(x, y, len(points)))
    return points


def format_points(points):
    return "".join(f"{format_number(p.x, PLACES)} {format_number(p.y, PLACES)}\n"
                   for p in points)


def read_points(path, exact=False):
    with open(path) as f:
        return parse_points(f.read(), exact, path)


def write_points(path, points):
    with open(path, "w") as f:
        f.write(format_points(points))


# -- matchings ----------------------------------------------------------------

def _shape_record(h):
    if isinstance(h, Disk):
        return "disk", [*h.params()], []
    if isinstance(h, TriDown):
        return "triangle", [*h.params()], ["down"]
    if isinstance(h, TriUp):
        return "triangle", [*h.params()], ["up"]
    if isinstance(h, Square):
        return "square", [*h.params()], []
    raise TypeError(f"cannot serialize {h!r}")


def format_matching(matching):
    lines = []
    for pair in matching.pairs:
        kind, nums, flags = _shape_record(pair.rep)
        fields = [str(pair.i), str(pair.j), kind]
        fields += [format_number(float(v), PLACES) for v in nums] + flags
        lines.append(" ".join(fields) + "\n")
    return "".join(lines)


_ARITY = {"disk": 3, "triangle": 4, "square": 3}


def parse_matching(text, path="<matching>"):
    pairs = []
    kinds = set()
    for lineno, body in _data_lines(text):
        tokens = body.split()
        if len(tokens) < 3:
            raise ParseError(path, lineno, "expected 'i j kind params...'")
        kind = tokens[2]
        if kind not in _ARITY:
            raise ParseError(path, lineno, f"unknown shape kind {kind!r}")
        args = tokens[3:]
        if len(args) != _ARITY[kind]:
            raise ParseError(path, lineno, f"{kind} takes {_ARITY[kind]} fields, got {len(args)}")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(path, lineno, "point indices must be integers") from None
        if kind == "triangle":
            *nums, flag = args
            if flag not in ("down", "up"):
                raise ParseError(path, lineno, f"orientation must be down or up, got {flag!r}")
        else:
            nums, flag = args, None
        a, b, c = (_number(t, False, path, lineno) for t in nums)
        if kind == "disk":
            rep = Disk.from_radius(a, b, c)
        elif kind == "square":
            rep = Square(a, b, c)
        else:
            rep = (TriDown if flag == "down" else TriUp)(a, b, c)
        kinds.add(rep.kind)
        pairs.append(Pair(i, j, rep))
    if kinds <= {"tri_down", "tri_up"} and len(kinds) == 2:
        kind = "theta6"
    else:
        kind = kinds.pop() if len(kinds) == 1 else None
    return StrongMatching(kind, pairs, "strict")


def read_matching(path):
    with open(path) as f:
        return parse_matching(f.read(), path)


def write_matching(path, matching):
    with open(path, "w") as f:
        f.write(format_matching(matching))
