"""Plain-text polytope files: a "d n" header, then n rows of d integers.

The writer is canonical (single spaces, LF endings, no trailing blanks),
so written files are byte-stable and diff cleanly; the parser is strict
and reports the line and column of the first problem.
"""

from __future__ import annotations

from .errors import ParseError
from .polytope import LatticePolytope


def loads(text: str) -> LatticePolytope:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty file", 1, 1)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'd n'", 1, 1)
    try:
        d = int(header[0])
    except ValueError:
        raise ParseError(f"bad dimension {header[0]!r}", 1, 1) from None
    try:
        n = int(header[1])
    except ValueError:
        raise ParseError(
            f"bad vertex count {header[1]!r}", 1, lines[0].index(header[1]) + 1
        ) from None
    if d < 1 or n < 1:
        raise ParseError("dimension and vertex count must be positive", 1, 1)
    if len(lines) - 1 != n:
        raise ParseError(
            f"expected {n} vertex lines, found {len(lines) - 1}", min(len(lines), n + 1), 1
        )
    verts = []
    for i in range(1, n + 1):
        tokens = lines[i].split()
        if len(tokens) != d:
            raise ParseError(
                f"expected {d} coordinates, found {len(tokens)}", i + 1, 1
            )
        row = []
        for tok in tokens:
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(
                    f"bad integer {tok!r}", i + 1, lines[i].index(tok) + 1
                ) from None
        verts.append(tuple(row))
    return LatticePolytope(verts)


def dumps(p: LatticePolytope) -> str:
    lines = [f"{p.dim} {p.vertex_count}"]
    lines.extend(" ".join(str(x) for x in v) for v in p.vertices)
    return "\n".join(lines) + "\n"


def dumps_matrix(matrix) -> str:
    rows = len(matrix)
    cols = len(matrix[0])
    lines = [f"{rows} {cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in matrix)
    return "\n".join(lines) + "\n"


def dumps_rational(rp) -> str:
    lines = [f"{rp.dim} {len(rp.vertices)}"]
    lines.extend(" ".join(str(x) for x in v) for v in rp.vertices)
    return "\n".join(lines) + "\n"


def load(path) -> LatticePolytope:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(p: LatticePolytope, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps(p))
