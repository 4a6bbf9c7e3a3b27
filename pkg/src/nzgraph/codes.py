"""Locating-dominating and identifying-code predicates, and named set families.

The public predicates take a VertexSet and return a Verdict explaining any
failure. The ``*_bits`` variants work on raw int bitsets and are what the
solver calls in its inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, SizeMismatchError
from .graph import ComponentGraph, VertexSet, iter_bits
from .twins import TwinKind, TwinPartition, twin_partition


@dataclass(frozen=True)
class Verdict:
    """Predicate outcome. On failure ``vertices`` is the violating vertex or pair."""

    ok: bool
    reason: str = ""
    vertices: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def _require_match(g: ComponentGraph, s: VertexSet):
    if s.order != g.order:
        raise SizeMismatchError(f"set of order {s.order} used with graph of order {g.order}")


def ld_bits(adj, bits: int) -> bool:
    seen = set()
    for u, row in enumerate(adj):
        if bits >> u & 1:
            continue
        trace = row & bits
        if not trace or trace in seen:
            return False
        seen.add(trace)
    return True


def id_bits(adj, bits: int, strict: bool = True) -> bool:
    seen = set()
    for u, row in enumerate(adj):
        trace = (row | (1 << u)) & bits
        if trace in seen or (strict and not trace):
            return False
        seen.add(trace)
    return True


def is_locating_dominating(g: ComponentGraph, s: VertexSet) -> Verdict:
    """Every vertex outside s has a nonempty trace N(u) ∩ s, all traces distinct."""
    _require_match(g, s)
    bits = s.bits
    owner: dict[int, int] = {}
    for u, row in enumerate(g.adj):
        if bits >> u & 1:
            continue
        trace = row & bits
        if not trace:
            return Verdict(False, "undominated", (u,))
        if trace in owner:
            return Verdict(False, "same trace", (owner[trace], u))
        owner[trace] = u
    return PASS


def is_identifying_code(g: ComponentGraph, s: VertexSet, strict: bool = True) -> Verdict:
    """Closed traces N[u] ∩ s pairwise distinct over all vertices.

    With ``strict`` (the default) every trace must also be nonempty; the
    non-strict form tolerates a single vertex with an empty trace.
    """
    _require_match(g, s)
    bits = s.bits
    owner: dict[int, int] = {}
    for u, row in enumerate(g.adj):
        trace = (row | (1 << u)) & bits
        if strict and not trace:
            return Verdict(False, "undominated", (u,))
        if trace in owner:
            return Verdict(False, "same trace", (owner[trace], u))
        owner[trace] = u
    return PASS


def is_minimal(g: ComponentGraph, s: VertexSet, target: str = "ld", strict: bool = True) -> bool:
    """Feasible, and no single-element deletion stays feasible."""
    _require_match(g, s)
    test = _bits_predicate(target, strict)
    if not test(g.adj, s.bits):
        return False
    return not any(test(g.adj, s.bits & ~(1 << p)) for p in iter_bits(s.bits))


def _bits_predicate(target: str, strict: bool = True):
    if target == "ld":
        return ld_bits
    if target == "id":
        return lambda adj, bits: id_bits(adj, bits, strict)
    raise ValueError(f"unknown target {target!r}")


def family_T1(g: ComponentGraph) -> VertexSet:
    return VertexSet(g.class_mask(1), g.order)


def family_T2_Tn1(g: ComponentGraph) -> VertexSet:
    if g.q != 2 or g.n < 4:
        raise PreconditionError("T2 ∪ T_{n-1} is defined here for q = 2 and n >= 4")
    return VertexSet(g.class_mask(2) | g.class_mask(g.n - 1), g.order)


def family_twin_deletion(
    g: ComponentGraph, choice=None, partition: TwinPartition | None = None
) -> VertexSet:
    """All vertices except one excluded member per non-singleton twin class.

    ``choice`` maps class id to the excluded position; classes left out of the
    mapping drop their highest position.
    """
    if g.q < 3:
        raise PreconditionError("twin-deletion family requires q >= 3")
    p = partition or twin_partition(g)
    choice = dict(choice or {})
    bits = g.full_mask
    for cid, cls in enumerate(p.classes):
        if cls.kind is TwinKind.SINGLETON:
            if cid in choice:
                raise PreconditionError(f"class {cid} is a singleton")
            continue
        drop = choice.pop(cid, max(cls.members))
        if drop not in cls.members:
            raise PreconditionError(f"position {drop} is not a member of class {cid}")
        bits &= ~(1 << drop)
    if choice:
        raise PreconditionError(f"unknown class ids in choice: {sorted(choice)}")
    return VertexSet(bits, g.order)


def family_exchange_counterexample(g: ComponentGraph) -> VertexSet:
    """{b1+b4, b2+b4, b3+b4} ∪ T3 in the n = 4, q = 2 graph."""
    if (g.n, g.q) != (4, 2):
        raise PreconditionError("counterexample family is defined for n = 4, q = 2 only")
    bits = g.class_mask(3)
    for digits in ((1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1)):
        bits |= 1 << g.position_of_digits(digits)
    return VertexSet(bits, g.order)
