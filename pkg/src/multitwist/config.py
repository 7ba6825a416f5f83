"""Configuration graphs of a pair of essential 1-manifolds.

The bipartite multigraph has one vertex per curve component of each of
the two families (here called the a-side and the b-side) and one edge
per intersection point, so the whole structure is captured by the
non-negative integer matrix of pairwise geometric intersection numbers.
Vertices are ordered canonically, a-block first, so every derived matrix
is reproducible bit for bit.

An embedded configuration additionally records, for every curve, the
cyclic order of its intersection points together with the local
intersection signs.  That is exactly the data needed to rebuild the
surface (genus via face tracing) and the bigon track of the twisting
calculus; it is an input format, never derived from pictures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import SchemaError, ValidationError


@dataclass(frozen=True)
class ConfigurationGraph:
    """Bipartite multigraph given by its intersection multiplicities.

    ``mult[i][j]`` is the number of parallel edges between a-vertex ``i``
    and b-vertex ``j`` (0-based).  Every vertex must have positive degree:
    a curve component disjoint from the other family never occurs in a
    filling configuration and is rejected rather than dropped.
    """

    n_a: int
    n_b: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n_a < 1 or self.n_b < 1:
            raise ValidationError("need at least one curve on each side")
        if len(self.mult) != self.n_a or any(len(r) != self.n_b for r in self.mult):
            raise ValidationError("multiplicity matrix shape mismatch")
        for row in self.mult:
            for m in row:
                if not isinstance(m, int) or m < 0:
                    raise ValidationError("multiplicities must be non-negative integers")
        for i, row in enumerate(self.mult):
            if not any(row):
                raise ValidationError(f"a-curve {i + 1} has zero degree")
        for j in range(self.n_b):
            if not any(row[j] for row in self.mult):
                raise ValidationError(f"b-curve {j + 1} has zero degree")

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable[int]]) -> "ConfigurationGraph":
        mat = tuple(tuple(int(m) for m in row) for row in rows)
        return cls(len(mat), len(mat[0]) if mat else 0, mat)

    @property
    def n_vertices(self) -> int:
        return self.n_a + self.n_b

    @property
    def n_edges(self) -> int:
        return sum(sum(row) for row in self.mult)

    def a_degree(self, i: int) -> int:
        return sum(self.mult[i])

    def b_degree(self, j: int) -> int:
        return sum(row[j] for row in self.mult)


def intersection_matrix(g: ConfigurationGraph) -> np.ndarray:
    """The n_a x n_b matrix of geometric intersection numbers."""
    return np.array(g.mult, dtype=np.int64)


def adjacency_matrix(g: ConfigurationGraph) -> np.ndarray:
    """Adjacency matrix in the (a-block, b-block) vertex order.

    Block anti-diagonal, symmetric, zero diagonal.
    """
    n = intersection_matrix(g)
    za = np.zeros((g.n_a, g.n_a), dtype=np.int64)
    zb = np.zeros((g.n_b, g.n_b), dtype=np.int64)
    return np.block([[za, n], [n.T, zb]])


def components(g: ConfigurationGraph) -> list[ConfigurationGraph]:
    """Connected components, re-indexed, ordered by smallest original vertex.

    A-vertex i has global index i; b-vertex j has global index n_a + j.
    """
    seen_a: dict[int, int] = {}
    seen_b: dict[int, int] = {}
    comps: list[tuple[list[int], list[int]]] = []
    for start in range(g.n_a):
        if start in seen_a:
            continue
        comp_id = len(comps)
        a_list: list[int] = []
        b_list: list[int] = []
        stack: list[tuple[str, int]] = [("a", start)]
        seen_a[start] = comp_id
        while stack:
            side, k = stack.pop()
            if side == "a":
                a_list.append(k)
                for j in range(g.n_b):
                    if g.mult[k][j] and j not in seen_b:
                        seen_b[j] = comp_id
                        stack.append(("b", j))
            else:
                b_list.append(k)
                for i in range(g.n_a):
                    if g.mult[i][k] and i not in seen_a:
                        seen_a[i] = comp_id
                        stack.append(("a", i))
        comps.append((sorted(a_list), sorted(b_list)))
    # zero-degree vertices are impossible, so every b-vertex was reached
    out = []
    order = sorted(range(len(comps)), key=lambda c: min(comps[c][0]))
    for c in order:
        a_list, b_list = comps[c]
        mat = tuple(tuple(g.mult[i][j] for j in b_list) for i in a_list)
        out.append(ConfigurationGraph(len(a_list), len(b_list), mat))
    return out


def is_connected(g: ConfigurationGraph) -> bool:
    return len(components(g)) == 1


def is_small_type(g: ConfigurationGraph) -> bool:
    """No multiple edges: every pair of curves meets at most once."""
    return all(m <= 1 for row in g.mult for m in row)


# ---------------------------------------------------------------------------
# Family labels

RECESSIVE = "recessive"
CRITICAL = "critical"
DOMINANT = "dominant"

_PARAMETRIC = {"A", "D", "P", "Q"}
_FIXED = {"E6", "E7", "E8", "R7", "R8", "R9"}


@dataclass(frozen=True)
class FamilyLabel:
    """Structural type of a connected configuration graph.

    ``kind`` is recessive/critical/dominant.  For the named families the
    subscript convention follows the vertex count: ``A`` (path, c >= 1),
    ``D`` (one branch vertex, legs 1/1/c-3, c >= 4), ``P`` (even cycle,
    c even, with P_2 the double edge), ``Q`` (the affine fork shape,
    c >= 5, Q_5 being the 4-edge star), and the fixed exceptional shapes
    E6/E7/E8 (recessive) and R7/R8/R9 (critical).  Dominant graphs carry
    no family name; ``is_eh10`` marks the unique minimal dominant one.
    """

    kind: str
    family: str | None = None
    c: int | None = None
    is_eh10: bool = False

    def __post_init__(self) -> None:
        if self.kind not in (RECESSIVE, CRITICAL, DOMINANT):
            raise ValidationError(f"unknown kind {self.kind!r}")
        if self.kind == DOMINANT:
            if self.family is not None or self.c is not None:
                raise ValidationError("dominant labels carry no family name")
            return
        if self.family in _FIXED:
            if self.c is not None:
                raise ValidationError(f"{self.family} takes no parameter")
            return
        if self.family not in _PARAMETRIC or self.c is None:
            raise ValidationError("recessive/critical label needs a valid family")
        limits = {"A": 1, "D": 4, "P": 2, "Q": 5}
        if self.c < limits[self.family]:
            raise ValidationError(f"{self.family}_{self.c} is out of range")
        if self.family == "P" and self.c % 2:
            raise ValidationError("P graphs have an even number of vertices")

    @property
    def name(self) -> str:
        if self.kind == DOMINANT:
            return "Eh10" if self.is_eh10 else "Dominant"
        if self.family in _FIXED:
            return f"{self.family[0]}_{self.family[1]}" if self.family[0] == "R" else self.family
        return f"{self.family}_{self.c}"


# ---------------------------------------------------------------------------
# Embedded configurations

@dataclass(frozen=True)
class IntersectionPoint:
    """One intersection record: curve pair, cyclic positions, local sign."""

    id: int
    a: int       # 0-based a-curve index
    b: int       # 0-based b-curve index
    pos_a: int   # position in the a-curve's cyclic order
    pos_b: int
    sign: int    # +1 or -1


@dataclass(frozen=True)
class EmbeddedConfiguration:
    graph: ConfigurationGraph
    points: tuple[IntersectionPoint, ...]
    _a_cycles: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _b_cycles: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        g = self.graph
        pair_counts: dict[tuple[int, int], int] = {}
        by_a: dict[int, dict[int, int]] = {i: {} for i in range(g.n_a)}
        by_b: dict[int, dict[int, int]] = {j: {} for j in range(g.n_b)}
        ids = set()
        for k, p in enumerate(self.points):
            if p.sign not in (+1, -1):
                raise ValidationError(f"point {p.id}: sign must be +1 or -1")
            if not (0 <= p.a < g.n_a and 0 <= p.b < g.n_b):
                raise ValidationError(f"point {p.id}: curve index out of range")
            if p.id in ids:
                raise ValidationError(f"duplicate point id {p.id}")
            ids.add(p.id)
            pair_counts[(p.a, p.b)] = pair_counts.get((p.a, p.b), 0) + 1
            if p.pos_a in by_a[p.a]:
                raise ValidationError(f"a-curve {p.a + 1}: duplicate position {p.pos_a}")
            if p.pos_b in by_b[p.b]:
                raise ValidationError(f"b-curve {p.b + 1}: duplicate position {p.pos_b}")
            by_a[p.a][p.pos_a] = k
            by_b[p.b][p.pos_b] = k
        for i in range(g.n_a):
            for j in range(g.n_b):
                if pair_counts.get((i, j), 0) != g.mult[i][j]:
                    raise ValidationError(
                        f"pair (a{i + 1}, b{j + 1}): {pair_counts.get((i, j), 0)} points "
                        f"recorded, multiplicity {g.mult[i][j]}"
                    )
        a_cycles = []
        for i in range(g.n_a):
            d = g.a_degree(i)
            if sorted(by_a[i]) != list(range(d)):
                raise ValidationError(f"a-curve {i + 1}: positions are not 0..{d - 1}")
            a_cycles.append(tuple(by_a[i][p] for p in range(d)))
        b_cycles = []
        for j in range(g.n_b):
            d = g.b_degree(j)
            if sorted(by_b[j]) != list(range(d)):
                raise ValidationError(f"b-curve {j + 1}: positions are not 0..{d - 1}")
            b_cycles.append(tuple(by_b[j][p] for p in range(d)))
        object.__setattr__(self, "_a_cycles", tuple(a_cycles))
        object.__setattr__(self, "_b_cycles", tuple(b_cycles))

    def a_cycle(self, i: int) -> tuple[int, ...]:
        """Point indices (into .points) along a-curve i in cyclic order."""
        return self._a_cycles[i]

    def b_cycle(self, j: int) -> tuple[int, ...]:
        return self._b_cycles[j]


# ---------------------------------------------------------------------------
# JSON ingestion
#
# {"a": 2, "b": 3, "edges": [[1, 1, 1], [1, 2, 2], ...],
#  "embedding": {"points": [{"id": 1, "a": 1, "b": 1,
#                            "pos_a": 0, "pos_b": 0, "sign": 1}, ...]}}
# Curve indices are 1-based in the document; duplicate (i, j) edge entries
# are summed.

def _as_document(text) -> dict:
    if isinstance(text, dict):
        return text
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise SchemaError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    return doc


def parse_config(text) -> ConfigurationGraph:
    """Parse and validate a configuration document (str, bytes, or dict)."""
    doc = _as_document(text)
    for key in ("a", "b", "edges"):
        if key not in doc:
            raise SchemaError(f"missing required key {key!r}")
    n_a, n_b = doc["a"], doc["b"]
    if not isinstance(n_a, int) or not isinstance(n_b, int):
        raise SchemaError("'a' and 'b' must be integers")
    if not isinstance(doc["edges"], list):
        raise SchemaError("'edges' must be a list of [i, j, mult] triples")
    if n_a < 1 or n_b < 1:
        raise ValidationError("need at least one curve on each side")
    mult = [[0] * n_b for _ in range(n_a)]
    for entry in doc["edges"]:
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(v, int) for v in entry)
        ):
            raise SchemaError(f"edge entry {entry!r} is not an [i, j, mult] triple")
        i, j, m = entry
        if not (1 <= i <= n_a and 1 <= j <= n_b):
            raise ValidationError(f"edge {entry!r}: curve index out of range")
        if m < 0:
            raise ValidationError(f"edge {entry!r}: negative multiplicity")
        mult[i - 1][j - 1] += m
    return ConfigurationGraph(n_a, n_b, tuple(tuple(r) for r in mult))


def parse_embedded(text) -> EmbeddedConfiguration:
    """Parse a document that carries an 'embedding' block."""
    doc = _as_document(text)
    g = parse_config(doc)
    emb = doc.get("embedding")
    if emb is None:
        raise SchemaError("document has no 'embedding' block")
    if not isinstance(emb, dict) or not isinstance(emb.get("points"), list):
        raise SchemaError("'embedding' must be an object with a 'points' list")
    points = []
    for rec in emb["points"]:
        if not isinstance(rec, dict):
            raise SchemaError(f"point record {rec!r} is not an object")
        try:
            points.append(
                IntersectionPoint(
                    id=int(rec["id"]),
                    a=int(rec["a"]) - 1,
                    b=int(rec["b"]) - 1,
                    pos_a=int(rec["pos_a"]),
                    pos_b=int(rec["pos_b"]),
                    sign=int(rec["sign"]),
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f"bad point record {rec!r}: {e}") from e
    return EmbeddedConfiguration(g, tuple(points))


def load_config(path) -> ConfigurationGraph:
    with open(path, "rb") as f:
        return parse_config(f.read())


def load_embedded(path) -> EmbeddedConfiguration:
    with open(path, "rb") as f:
        return parse_embedded(f.read())
