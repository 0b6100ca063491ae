"""Reader and writer for the ``.alg`` text format.

::

    n 4
    one 3
    zero 0
    3 3 3 3
    ...

``#`` starts a comment line; blank lines and trailing whitespace are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .algebra import FiniteAlgebra, validate
from .errors import DuplicateHeader, ParseError, SizeMismatch

HEADERS = ("n", "one", "zero")


def parse_alg(text: str) -> tuple[list[list[int]], int, int]:
    """Return ``(table, one, zero)``; no axioms are checked here."""
    header: dict[str, int] = {}
    rows: list[list[int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        stripped = line.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        last_line = lineno
        tokens = _tokens(line)
        key = tokens[0][1]
        if key in HEADERS:
            if rows:
                raise ParseError(f"header {key!r} after table rows", lineno, tokens[0][0])
            if key in header:
                raise DuplicateHeader(f"duplicate header {key!r}", lineno, tokens[0][0])
            if len(tokens) != 2:
                raise ParseError(f"header {key!r} takes exactly one value", lineno, tokens[0][0])
            header[key] = _int(tokens[1], lineno)
            continue
        missing = [h for h in HEADERS if h not in header]
        if missing:
            raise ParseError(f"missing header {missing[0]!r} before table", lineno, tokens[0][0])
        n = header["n"]
        if len(tokens) != n:
            col = tokens[n][0] if len(tokens) > n else len(line) + 1
            raise SizeMismatch(f"row has {len(tokens)} entries, expected {n}", lineno, col)
        if len(rows) == n:
            raise SizeMismatch(f"more than {n} rows", lineno, 1)
        rows.append([_int(t, lineno) for t in tokens])
    missing = [h for h in HEADERS if h not in header]
    if missing:
        raise ParseError(f"missing header {missing[0]!r}", last_line + 1)
    n = header["n"]
    if n < 1:
        raise ParseError("n must be positive", 1)
    if len(rows) != n:
        raise SizeMismatch(f"expected {n} rows, found {len(rows)}", last_line + 1)
    return rows, header["one"], header["zero"]


def _tokens(line: str) -> list[tuple[int, str]]:
    out = []
    col = 0
    for piece in line.split():
        col = line.index(piece, col)
        out.append((col + 1, piece))
        col += len(piece)
    return out


def _int(token: tuple[int, str], lineno: int) -> int:
    col, text = token
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", lineno, col) from None


def format_alg(table, one: int, zero: int) -> str:
    lines = [f"n {len(table)}", f"one {one}", f"zero {zero}"]
    lines += [" ".join(str(v) for v in row) for row in table]
    return "\n".join(lines) + "\n"


def write_alg(alg: FiniteAlgebra) -> str:
    return format_alg(alg.imp, alg.one, alg.zero)


def read_alg(path: str | Path) -> FiniteAlgebra:
    path = Path(path)
    table, one, zero = parse_alg(path.read_text(encoding="utf-8"))
    return validate(table, one, zero, name=path.stem)
