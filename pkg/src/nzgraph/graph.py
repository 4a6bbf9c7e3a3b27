"""The non-zero component graph with int-bitset adjacency rows.

Vertex *positions* are 0-based offsets into ``ComponentGraph.vertices``;
position p holds the vector with canonical index p + 1. Vertex sets are
Python ints used as bitsets over positions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from .errors import ConsistencyError
from .vecspace import SpaceParams, VectorLabel, enumerate_vertices


def order_formula(n: int, q: int) -> int:
    return q**n - 1


def size_formula(n: int, q: int) -> int:
    return (q ** (2 * n) - q**n + 1 - (2 * q - 1) ** n) // 2


def degree_formula(n: int, q: int, s: int) -> int:
    """Degree of a vertex with s nonzero coefficients."""
    return (q**s - 1) * q ** (n - s) - 1


def profile_formula_q2(n: int, s: int, r: int) -> int:
    """|N(v) ∩ T_r| for v in T_s when q = 2, by the four-case count."""
    if r <= n - s:
        return comb(n, r) - comb(n - s, r) - (1 if r == s else 0)
    return comb(n, r) - (1 if r == s else 0)


@dataclass(frozen=True, eq=False)
class ComponentGraph:
    params: SpaceParams
    vertices: tuple[VectorLabel, ...]
    adj: tuple[int, ...]
    class_index: tuple[int, ...]
    class_masks: tuple[int, ...] = field(repr=False)
    edge_count: int = 0

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    def position_of(self, index: int) -> int:
        """Position of the vector with canonical index ``index``."""
        if not 1 <= index <= len(self.vertices):
            raise IndexError(f"vertex index {index} out of range")
        return index - 1

    def position_of_digits(self, digits) -> int:
        index = 0
        for d in reversed(digits):
            index = index * self.q + d
        return self.position_of(index)

    def label(self, pos: int) -> str:
        return self.vertices[pos].text(self.q)

    def labels(self, bits: int) -> list[str]:
        return [self.label(p) for p in iter_bits(bits)]

    def class_mask(self, i: int) -> int:
        """Bitset of T_i (1-based class number)."""
        return self.class_masks[i - 1]

    def _check(self, pos: int):
        if not 0 <= pos < len(self.vertices):
            raise IndexError(f"position {pos} out of range for order {self.order}")


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex positions of one graph, stored as an int bitset."""

    bits: int
    order: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise ValueError(f"bitset has members outside order {self.order}")

    @classmethod
    def of(cls, g: "ComponentGraph", positions=()) -> "VertexSet":
        bits = 0
        for p in positions:
            g._check(p)
            bits |= 1 << p
        return cls(bits, g.order)

    @property
    def card(self) -> int:
        return self.bits.bit_count()

    def __len__(self):
        return self.card

    def __iter__(self):
        return iter_bits(self.bits)

    def __contains__(self, pos) -> bool:
        return bool(self.bits >> pos & 1)

    def positions(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def with_bits(self, bits: int) -> "VertexSet":
        return VertexSet(bits, self.order)

    def sort_key(self):
        """Cardinality first, then lexicographic on sorted positions."""
        return (self.card, self.positions())


def iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def build_graph(params: SpaceParams) -> ComponentGraph:
    """Construct the graph; adjacency iff supports intersect.

    Raises ConsistencyError if the edge count differs from the closed form.
    """
    n, q = params.n, params.q
    vertices = tuple(enumerate_vertices(params))
    # through[i]: every vertex whose support contains coordinate i
    through = [0] * n
    by_support: dict[int, int] = {}
    for pos, v in enumerate(vertices):
        by_support[v.support] = by_support.get(v.support, 0) | (1 << pos)
    for mask, bits in by_support.items():
        for i in range(n):
            if mask >> i & 1:
                through[i] |= bits
    reach: dict[int, int] = {}
    for mask in by_support:
        row = 0
        for i in range(n):
            if mask >> i & 1:
                row |= through[i]
        reach[mask] = row
    adj = tuple(reach[v.support] & ~(1 << pos) for pos, v in enumerate(vertices))

    class_masks = [0] * n
    for pos, v in enumerate(vertices):
        class_masks[v.weight - 1] |= 1 << pos

    degree_sum = sum(row.bit_count() for row in adj)
    edges = degree_sum // 2
    expected = size_formula(n, q)
    if degree_sum % 2 or edges != expected:
        raise ConsistencyError(
            f"edge count {degree_sum / 2} != closed form {expected} for n={n}, q={q}"
        )
    return ComponentGraph(
        params=params,
        vertices=vertices,
        adj=adj,
        class_index=tuple(v.weight for v in vertices),
        class_masks=tuple(class_masks),
        edge_count=edges,
    )


def degree_of(g: ComponentGraph, pos: int) -> int:
    g._check(pos)
    return g.adj[pos].bit_count()


def class_profile(g: ComponentGraph, pos: int) -> list[int]:
    """Entry r-1 is the number of neighbours of ``pos`` lying in T_r."""
    g._check(pos)
    row = g.adj[pos]
    return [(row & m).bit_count() for m in g.class_masks]


def closed_neighborhood(g: ComponentGraph, pos: int) -> int:
    g._check(pos)
    return g.adj[pos] | (1 << pos)


def edges(g: ComponentGraph):
    """Yield (i, j) index pairs with i < j in lexicographic order."""
    for pos, row in enumerate(g.adj):
        for other in iter_bits(row >> (pos + 1)):
            yield pos + 1, pos + other + 2


EXPORT_FORMATS = ("dot", "json", "adjlist")


def export_graph(g: ComponentGraph, fmt: str) -> bytes:
    if fmt == "json":
        doc = {
            "n": g.n,
            "q": g.q,
            "nodes": [
                {"id": v.index, "label": v.text(g.q), "weight": v.weight}
                for v in g.vertices
            ],
            "edges": [list(e) for e in edges(g)],
        }
        text = json.dumps(doc, separators=(",", ":")) + "\n"
    elif fmt == "dot":
        lines = ["graph ncg {"]
        lines += [f'  "{g.label(p)}";' for p in range(g.order)]
        lines += [
            f'  "{g.label(i - 1)}" -- "{g.label(j - 1)}";' for i, j in edges(g)
        ]
        lines.append("}")
        text = "\n".join(lines) + "\n"
    elif fmt == "adjlist":
        lines = [
            f"{g.label(p)}: " + ",".join(g.labels(g.adj[p])) for p in range(g.order)
        ]
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown export format {fmt!r}")
    return text.encode()
