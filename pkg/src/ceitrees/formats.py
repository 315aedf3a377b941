"""Text formats for trees.

Edge-list format::

    # optional comment lines
    n 4
    1 2
    2 3
    3 4

Prüfer format: the same ``n <count>`` header followed by a single line
``prufer a1 a2 ...`` (the entry list is empty for ``n = 2``).

Lines whose first non-blank character is ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from .errors import BadEntry, BadLabel, CEIError, NotATree
from .tree import Tree, build_tree


class ParseError(CEIError):
    """Malformed input. ``line`` is the 1-based line number, if known."""

    def __init__(self, message: str, line: int | None = None, kind: str = "ParseError"):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{kind}: {message}")
        self.line = line
        self.kind = kind


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped.split()))
    return out


def _parse_header(lines: list[tuple[int, list[str]]]) -> int:
    if not lines:
        raise ParseError("empty input, expected 'n <count>'")
    lineno, toks = lines[0]
    if len(toks) != 2 or toks[0] != "n":
        raise ParseError(f"expected 'n <count>', got {' '.join(toks)!r}", lineno)
    try:
        return int(toks[1])
    except ValueError:
        raise ParseError(f"vertex count {toks[1]!r} is not an integer", lineno) from None


def detect_format(text: str) -> str:
    lines = _content_lines(text)
    if len(lines) >= 2 and lines[1][1][0] == "prufer":
        return "prufer"
    return "edges"


def parse_edge_list(text: str) -> Tree:
    lines = _content_lines(text)
    n = _parse_header(lines)
    edges = []
    edge_lines = []
    for lineno, toks in lines[1:]:
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(toks)!r}", lineno)
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ParseError(f"non-integer label in {' '.join(toks)!r}", lineno) from None
        edge_lines.append(lineno)
    try:
        return build_tree(n, edges)
    except (NotATree, BadLabel) as exc:
        line = edge_lines[exc.edge_index] if exc.edge_index is not None else None
        raise ParseError(str(exc), line, type(exc).__name__) from exc
    except CEIError as exc:
        raise ParseError(str(exc), lines[0][0], type(exc).__name__) from exc


def format_edge_list(t: Tree) -> str:
    return f"n {t.n}\n" + "".join(f"{u} {v}\n" for u, v in t.edges())


def parse_prufer(text: str) -> Tree:
    from .enumeration import prufer_decode

    lines = _content_lines(text)
    n = _parse_header(lines)
    if len(lines) != 2 or lines[1][1][0] != "prufer":
        line = lines[1][0] if len(lines) > 1 else None
        raise ParseError("expected a single 'prufer ...' line after the header", line)
    lineno, toks = lines[1]
    try:
        seq = [int(x) for x in toks[1:]]
    except ValueError:
        raise ParseError("non-integer Prüfer entry", lineno) from None
    try:
        return prufer_decode(n, seq)
    except (BadEntry, CEIError) as exc:
        raise ParseError(str(exc), lineno, type(exc).__name__) from exc


def format_prufer(t: Tree) -> str:
    from .enumeration import prufer_encode

    seq = prufer_encode(t)
    return f"n {t.n}\nprufer" + "".join(f" {x}" for x in seq) + "\n"


def parse_tree(text: str, fmt: str = "auto") -> Tree:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "prufer":
        return parse_prufer(text)
    raise ValueError(f"unknown format {fmt!r}")


def format_dot(t: Tree, name: str = "T") -> str:
    body = "".join(f"  {u} -- {v};\n" for u, v in t.edges())
    return f"graph {name} {{\n{body}}}\n"
