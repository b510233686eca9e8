"""Target graphs ``H`` and ``F``: named families or explicit small graphs.

Mini-language accepted by :func:`parse_pattern`::

    K4      clique on 4 vertices
    C6      cycle on 6 vertices
    K3,3    complete bipartite graph
    Kbar3   3 isolated vertices
    K4-e    K4 minus an edge
    P3      path on 3 vertices
    g6:Bw   explicit graph given in graph6
    @f.g6   explicit graph read from the first line of a file
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .graph import Graph, from_graph6, to_graph6


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    kind: str  # "clique" | "cycle" | "bipartite" | "explicit"
    a: int = 0
    b: int = 0
    explicit: Graph | None = None
    label: str | None = None

    def __post_init__(self):
        if self.kind == "clique" and self.a < 1:
            raise PatternError("clique size must be at least 1")
        if self.kind == "cycle" and self.a < 3:
            raise PatternError("cycle length must be at least 3")
        if self.kind == "bipartite" and (self.a < 1 or self.b < 1):
            raise PatternError("bipartite part sizes must be at least 1")
        if self.kind == "explicit" and (self.explicit is None or self.explicit.n < 1):
            raise PatternError("explicit pattern needs a nonempty graph")
        if self.kind not in ("clique", "cycle", "bipartite", "explicit"):
            raise PatternError(f"unknown pattern kind {self.kind!r}")

    @cached_property
    def graph(self) -> Graph:
        if self.kind == "clique":
            return Graph.complete(self.a)
        if self.kind == "cycle":
            return Graph.cycle(self.a)
        if self.kind == "bipartite":
            return Graph.complete_bipartite(self.a, self.b)
        return self.explicit

    @property
    def num_vertices(self) -> int:
        return self.graph.n

    def __str__(self) -> str:
        if self.label:
            return self.label
        if self.kind == "clique":
            return f"K{self.a}"
        if self.kind == "cycle":
            return f"C{self.a}"
        if self.kind == "bipartite":
            return f"K{self.a},{self.b}"
        return "g6:" + to_graph6(self.explicit)


def clique(r: int) -> Pattern:
    return Pattern("clique", r)


def cycle(l: int) -> Pattern:
    return Pattern("cycle", l)


def complete_bipartite(a: int, b: int) -> Pattern:
    return Pattern("bipartite", a, b)


def explicit(g: Graph, label: str | None = None) -> Pattern:
    return Pattern("explicit", explicit=g, label=label)


def independent(r: int) -> Pattern:
    return explicit(Graph.empty(r), f"Kbar{r}")


def clique_minus_edge(r: int) -> Pattern:
    return explicit(Graph.complete(r).remove_edge(0, 1), f"K{r}-e")


def path(r: int) -> Pattern:
    return explicit(Graph.path(r), f"P{r}")


def parse_pattern(text: str) -> Pattern:
    s = text.strip()
    if s.startswith("@"):
        lines = [ln for ln in Path(s[1:]).read_text().splitlines() if ln.strip()]
        if not lines:
            raise PatternError(f"no graph in {s[1:]}")
        return explicit(from_graph6(lines[0]))
    if s.startswith("g6:"):
        return explicit(from_graph6(s[3:]))
    # K_4 and K4 are the same pattern
    s = s.replace("_", "")
    m = re.fullmatch(r"Kbar(\d+)", s)
    if m:
        return independent(int(m.group(1)))
    m = re.fullmatch(r"K(\d+)-e", s)
    if m:
        return clique_minus_edge(int(m.group(1)))
    m = re.fullmatch(r"K(\d+),(\d+)", s)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+)", s)
    if m:
        return clique(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", s)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"P(\d+)", s)
    if m:
        return path(int(m.group(1)))
    raise PatternError(f"cannot parse pattern {text!r}")
