"""Twin classes computed from adjacency, and what they imply for LD sets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotTwinsError, PreconditionError, SizeMismatchError
from .graph import ComponentGraph, VertexSet, iter_bits


class TwinKind(str, Enum):
    ADJACENT = "adjacent"
    NONADJACENT = "nonadjacent"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class TwinClass:
    members: VertexSet
    kind: TwinKind

    @property
    def size(self) -> int:
        return self.members.card

    @property
    def first(self) -> int:
        return next(iter(self.members))


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]
    vertex_to_class: tuple[int, ...]

    def nontrivial(self) -> list[TwinClass]:
        return [c for c in self.classes if c.kind is not TwinKind.SINGLETON]

    def has_adjacent_twins(self) -> bool:
        return any(c.kind is TwinKind.ADJACENT for c in self.classes)


def twin_partition(g: ComponentGraph) -> TwinPartition:
    """Group by equal closed neighbourhoods, then regroup leftovers by open ones."""
    closed: dict[int, int] = {}
    for pos, row in enumerate(g.adj):
        key = row | (1 << pos)
        closed[key] = closed.get(key, 0) | (1 << pos)

    groups: list[tuple[int, TwinKind]] = []
    leftovers = []
    for bits in closed.values():
        if bits & (bits - 1):
            groups.append((bits, TwinKind.ADJACENT))
        else:
            leftovers.append(bits.bit_length() - 1)

    opened: dict[int, int] = {}
    for pos in leftovers:
        opened[g.adj[pos]] = opened.get(g.adj[pos], 0) | (1 << pos)
    for bits in opened.values():
        kind = TwinKind.NONADJACENT if bits & (bits - 1) else TwinKind.SINGLETON
        groups.append((bits, kind))

    groups.sort(key=lambda item: (item[0] & -item[0]).bit_length())
    classes = []
    owner = [0] * g.order
    for cid, (bits, kind) in enumerate(groups):
        _assert_twins(g, bits, kind)
        classes.append(TwinClass(VertexSet(bits, g.order), kind))
        for pos in iter_bits(bits):
            owner[pos] = cid
    return TwinPartition(tuple(classes), tuple(owner))


def _assert_twins(g: ComponentGraph, bits: int, kind: TwinKind):
    members = list(iter_bits(bits))
    head = members[0]
    for pos in members[1:]:
        if kind is TwinKind.ADJACENT:
            ok = g.adj[pos] | (1 << pos) == g.adj[head] | (1 << head)
        else:
            ok = g.adj[pos] == g.adj[head] and not g.adj[pos] >> head & 1
        if not ok:
            raise AssertionError(f"positions {head} and {pos} are not {kind.value} twins")


def twin_lower_bound(p: TwinPartition) -> int:
    """Every LD set keeps all but at most one member of each twin class."""
    return sum(c.size - 1 for c in p.classes)


def twin_swap(s: VertexSet, u: int, v: int, p: TwinPartition) -> VertexSet:
    """Replace u by its twin v in s."""
    if s.order != len(p.vertex_to_class):
        raise SizeMismatchError("set and partition belong to different graphs")
    if u not in s:
        raise PreconditionError(f"position {u} is not in the set")
    if v in s:
        raise PreconditionError(f"position {v} is already in the set")
    cid = p.vertex_to_class[u]
    if cid != p.vertex_to_class[v] or p.classes[cid].kind is TwinKind.SINGLETON:
        raise NotTwinsError(f"positions {u} and {v} are not in a common twin class")
    return s.with_bits(s.bits & ~(1 << u) | (1 << v))
