"""Text formats for the three categories.

Graphs:     ``v <id> [loop]`` and ``e <id> <id>`` (``e x x`` is a loop).
Posets:     ``p <id>`` and ``c <x> <y>`` declaring the cover x < y.
Complexes:  ``f <v1> <v2> ...`` per facet.

``#`` starts a comment; ids made only of digits parse as ints. Endpoints of
edges, covers and facets are declared implicitly.
"""

from __future__ import annotations

from .canon import parse_token
from .complexes import SimplicialComplex
from .errors import ParseError, ValidationError
from .graphs import Graph
from .posets import Poset


def _directive_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph(text: str) -> Graph:
    vertices, edges, loops = [], [], []
    for lineno, toks in _directive_lines(text):
        kind, args = toks[0], [parse_token(t) for t in toks[1:]]
        if kind == "v":
            if len(args) == 1:
                vertices.append(args[0])
            elif len(args) == 2 and toks[2] == "loop":
                vertices.append(args[0])
                loops.append(args[0])
            else:
                raise ParseError(lineno, f"bad vertex directive: {toks!r}")
        elif kind == "e":
            if len(args) != 2:
                raise ParseError(lineno, f"bad edge directive: {toks!r}")
            if args[0] == args[1]:
                loops.append(args[0])
            else:
                edges.append((args[0], args[1]))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    return Graph(vertices, edges=edges, loops=loops)


def parse_poset(text: str) -> Poset:
    elements, covers = [], []
    for lineno, toks in _directive_lines(text):
        kind, args = toks[0], [parse_token(t) for t in toks[1:]]
        if kind == "p":
            if len(args) != 1:
                raise ParseError(lineno, f"bad element directive: {toks!r}")
            elements.append(args[0])
        elif kind == "c":
            if len(args) != 2:
                raise ParseError(lineno, f"bad cover directive: {toks!r}")
            if args[0] == args[1]:
                raise ParseError(lineno, f"cover relates {args[0]!r} to itself")
            covers.append((args[0], args[1]))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    return Poset(elements, covers)


def parse_complex(text: str) -> SimplicialComplex:
    facets = []
    lines = {}
    for lineno, toks in _directive_lines(text):
        if toks[0] != "f":
            raise ParseError(lineno, f"unknown directive {toks[0]!r}")
        if len(toks) < 2:
            raise ParseError(lineno, "facet needs at least one vertex")
        facet = tuple(parse_token(t) for t in toks[1:])
        facets.append(facet)
        lines[frozenset(facet)] = lineno
    for fs, lineno in lines.items():
        for other in lines:
            if fs < other:
                raise ValidationError(
                    f"line {lineno}: facet is contained in another facet")
    return SimplicialComplex(facets)


def serialize(obj) -> str:
    return obj.to_text()


def parse(category: str, text: str):
    parser = {"graph": parse_graph, "poset": parse_poset,
              "complex": parse_complex}.get(category)
    if parser is None:
        raise ValidationError(f"unknown category: {category!r}")
    return parser(text)
