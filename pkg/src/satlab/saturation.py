"""F-freeness, F-saturation, saturation certificates and the Moore dichotomy."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from . import counting
from .counting import find_clique, find_embedding, find_path
from .graph import Graph, diameter, girth
from .patterns import Pattern, clique, cycle, parse_pattern


@dataclass
class SaturationCertificate:
    target: Pattern
    free_checked: bool
    # (u, v) with u < v  ->  host vertices in pattern-vertex order
    witnesses: dict[tuple[int, int], list[int]] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "target": str(self.target),
                "free_checked": self.free_checked,
                "witnesses": [{"u": u, "v": v, "copy": w} for (u, v), w in sorted(self.witnesses.items())],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SaturationCertificate":
        data = json.loads(text)
        wit = {}
        for item in data["witnesses"]:
            key = (int(item["u"]), int(item["v"]))
            if key in wit:
                # a duplicated key can never be a valid certificate
                raise ValueError(f"duplicate witness for nonedge {key}")
            wit[key] = [int(x) for x in item["copy"]]
        return cls(parse_pattern(data["target"]), bool(data["free_checked"]), wit)


def is_free(g: Graph, f: Pattern) -> bool:
    return not counting.contains(g, f)


def creates_through(g: Graph, u: int, v: int, f: Pattern) -> list[int] | None:
    """A copy of ``f`` in ``g + uv`` that uses the edge ``uv``, or None.

    The witness lists host vertices in the pattern's own vertex order. For
    cycles this is a ``u``-``v`` path with ``k - 1`` edges in ``g``.
    """
    if u == v or g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not a nonedge")
    if f.kind == "clique":
        if f.a < 2:
            return None
        common = g.adj[u] & g.adj[v]
        rest = find_clique(g, f.a - 2, common)
        return None if rest is None else [u, v] + rest
    if f.kind == "cycle":
        return find_path(g, u, v, f.a - 1)
    h = f.graph
    g2 = g.add_edge(u, v)
    for a, b in h.edges():
        for x, y in ((a, b), (b, a)):
            emb = find_embedding(g2, h, {x: u, y: v})
            if emb is not None:
                return emb
    return None


def is_saturated(g: Graph, f: Pattern) -> tuple[bool, SaturationCertificate | None]:
    """Decide whether ``g`` is ``f``-saturated; on success also return a certificate.

    Complete graphs that are ``f``-free are (vacuously) saturated.
    """
    if not is_free(g, f):
        return False, None
    cert = SaturationCertificate(f, True)
    for u, v in g.nonedges():
        w = creates_through(g, u, v, f)
        if w is None:
            return False, None
        cert.witnesses[(u, v)] = w
    return True, cert


def saturated(g: Graph, f: Pattern) -> bool:
    return is_saturated(g, f)[0]


def witness_is_valid(g: Graph, u: int, v: int, f: Pattern, w: list[int]) -> bool:
    h = f.graph
    if len(w) != h.n or len(set(w)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in w):
        return False
    uses_uv = False
    for a, b in h.edges():
        x, y = w[a], w[b]
        if {x, y} == {u, v}:
            uses_uv = True
        elif not g.has_edge(x, y):
            return False
    return uses_uv


def verify_certificate(g: Graph, cert: SaturationCertificate) -> bool:
    """Check a certificate from scratch, independently of how it was produced."""
    keys = set(cert.witnesses)
    if keys != set(g.nonedges()):
        return False
    for (u, v), w in cert.witnesses.items():
        if not witness_is_valid(g, u, v, cert.target, w):
            return False
    if cert.free_checked:
        # generic embedding search rather than the fast paths used by is_free
        if find_embedding(g, cert.target.graph) is not None:
            return False
    return True


class MooreClass(enum.Enum):
    MOORE = "Moore"
    DIAMETER3_SATURATED = "Diameter3Saturated"
    NOT_APPLICABLE = "NotApplicable"


def moore_check(g: Graph) -> MooreClass:
    """Classify a triangle-free C4-saturated graph as Moore or diameter 3."""
    if not is_free(g, clique(3)) or not saturated(g, cycle(4)):
        return MooreClass.NOT_APPLICABLE
    d = diameter(g)
    if d == 2 and girth(g) == 5:
        return MooreClass.MOORE
    if d == 3:
        return MooreClass.DIAMETER3_SATURATED
    return MooreClass.NOT_APPLICABLE
