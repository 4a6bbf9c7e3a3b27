"""Exact minimum LD sets and identifying codes, minimal-set enumeration,
and the exchange-property check.

Searches are cardinality-staged: size k runs upward from a lower bound and
the first size with a feasible set is optimal. Within a size, candidates are
generated in lexicographic order of their sorted positions, so the first hit
is the lexicographically least optimal set. Twin classes are enforced during
generation: a candidate never omits two members of one class.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .codes import id_bits, ld_bits
from .errors import BudgetExceededError, OrderTooLargeError, PreconditionError
from .graph import ComponentGraph, VertexSet, iter_bits
from .twins import TwinKind, TwinPartition, twin_lower_bound, twin_partition

DEFAULT_BUDGET = 10**8
ORACLE_MAX_ORDER = 20
TARGETS = ("ld", "id")


@dataclass
class SolveReport:
    target: str
    optimum: int | None
    witness: VertexSet | None
    lower_bound_used: int
    candidates_examined: int
    elapsed: float = 0.0

    @property
    def nonexistent(self) -> bool:
        return self.optimum is None

    def to_dict(self, g: ComponentGraph) -> dict:
        return {
            "target": self.target,
            "optimum": self.optimum,
            "nonexistent": self.nonexistent,
            "witness": None if self.witness is None else g.labels(self.witness.bits),
            "lower_bound": self.lower_bound_used,
            "candidates": self.candidates_examined,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


@dataclass
class ExchangeReport:
    holds: bool
    sets_examined: int
    # (L1, L2, u1): no u2 in L2 makes (L2 - {u2}) + {u1} minimal LD
    witness: tuple[VertexSet, VertexSet, int] | None = None


def _predicate(target: str, strict: bool):
    if target == "ld":
        return ld_bits
    if target == "id":
        if strict:
            return id_bits
        return lambda adj, bits: id_bits(adj, bits, False)
    raise ValueError(f"unknown target {target!r}")


@dataclass
class _Generator:
    """Lexicographic k-subset generator honouring twin-class constraints."""

    order: int
    owner: list[int]  # class id per position, -1 for unconstrained
    sizes: list[int]  # size per constrained class
    counter: list[int] = field(default_factory=lambda: [0])

    @classmethod
    def from_partition(cls, p: TwinPartition, order: int) -> "_Generator":
        owner = [-1] * order
        sizes = []
        for c in p.classes:
            if c.kind is TwinKind.SINGLETON:
                continue
            for pos in c.members:
                owner[pos] = len(sizes)
            sizes.append(c.size)
        return cls(order, owner, sizes)

    def partitions(self, k: int):
        """Start states keyed by smallest member; yielded in lexicographic order."""
        if k == 0:
            if all(s <= 1 for s in self.sizes):
                yield (self.order, 0, 0, [0] * len(self.sizes), list(self.sizes))
            return
        excl = [0] * len(self.sizes)
        rem = list(self.sizes)
        for first in range(self.order - k + 1):
            c = self.owner[first]
            st_excl, st_rem = list(excl), list(rem)
            if c >= 0:
                st_rem[c] -= 1
            yield (first + 1, k - 1, 1 << first, st_excl, st_rem)
            # position `first` excluded from here on
            if c >= 0:
                if excl[c]:
                    return
                excl[c] = 1
                rem[c] -= 1

    def walk(self, state):
        pos, need, bits, excl, rem = state
        mandatory = sum(max(0, r - (1 - e)) for r, e in zip(rem, excl))
        yield from self._rec(pos, need, bits, excl, rem, mandatory)

    def _rec(self, pos, need, bits, excl, rem, mandatory):
        if mandatory > need:
            return
        if need == 0:
            yield bits
            return
        if self.order - pos < need:
            return
        c = self.owner[pos]
        if c < 0:
            yield from self._rec(pos + 1, need - 1, bits | (1 << pos), excl, rem, mandatory)
            yield from self._rec(pos + 1, need, bits, excl, rem, mandatory)
            return
        drop = 1 if rem[c] > 1 - excl[c] else 0
        rem[c] -= 1
        yield from self._rec(pos + 1, need - 1, bits | (1 << pos), excl, rem, mandatory - drop)
        if not excl[c]:
            excl[c] = 1
            yield from self._rec(pos + 1, need, bits, excl, rem, mandatory)
            excl[c] = 0
        rem[c] += 1


def _scan(gen: _Generator, state, test, adj, budget: int, stop=None):
    """First feasible set in one partition, with the number of candidates tested."""
    examined = 0
    for bits in gen.walk(state):
        examined += 1
        if test(adj, bits):
            return bits, examined
        if examined > budget:
            raise BudgetExceededError("candidate budget exhausted", examined)
        if stop is not None and examined & 0x3FF == 0 and stop():
            return None, examined
    return None, examined


def _search_size(gen, k, test, adj, budget, spent, threads):
    """Least feasible k-set, plus the serial-equivalent candidate count."""
    states = list(gen.partitions(k))
    if threads <= 1 or len(states) < 2:
        examined = 0
        for state in states:
            bits, n = _scan(gen, state, test, adj, budget - spent - examined)
            examined += n
            if bits is not None:
                return bits, examined
        return None, examined

    best = [len(states)]
    lock = threading.Lock()

    def job(i):
        if i > best[0]:
            return None, 0, None
        try:
            bits, n = _scan(gen, states[i], test, adj, budget - spent,
                            stop=lambda: i > best[0])
        except BudgetExceededError as exc:
            return None, exc.examined, exc
        if bits is not None:
            with lock:
                best[0] = min(best[0], i)
        return bits, n, None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(job, range(len(states))))
    examined = 0
    for bits, n, err in results:
        # partitions before the winner are fully scanned, as in the serial order
        examined += n
        if err is not None or spent + examined > budget:
            raise BudgetExceededError("candidate budget exhausted", spent + examined)
        if bits is not None:
            return bits, examined
    return None, examined


def _staged(g, target, test, lower, partition, budget, threads, strict=True):
    start = time.perf_counter()
    gen = _Generator.from_partition(partition, g.order)
    spent = 0
    for k in range(lower, g.order + 1):
        bits, examined = _search_size(gen, k, test, g.adj, budget, spent, threads)
        spent += examined
        if bits is not None:
            return SolveReport(target, k, VertexSet(bits, g.order), lower, spent,
                               time.perf_counter() - start)
    return SolveReport(target, None, None, lower, spent, time.perf_counter() - start)


def q2_lower_bound(g: ComponentGraph) -> int:
    """n when q = 2 and n >= 3, else 0 (no bound claimed)."""
    if g.q == 2 and g.n >= 3:
        return g.n
    return 0


def min_ld(g: ComponentGraph, budget: int = DEFAULT_BUDGET, threads: int = 1,
           partition: TwinPartition | None = None,
           lower_bound: int | None = None) -> SolveReport:
    p = partition or twin_partition(g)
    if lower_bound is None:
        lower_bound = max(twin_lower_bound(p), q2_lower_bound(g))
    return _staged(g, "ld", ld_bits, lower_bound, p, budget, threads)


def min_id(g: ComponentGraph, strict: bool = True, budget: int = DEFAULT_BUDGET,
           threads: int = 1, partition: TwinPartition | None = None,
           lower_bound: int | None = None) -> SolveReport:
    """Exact identifying number, or a NONEXISTENT report when twins forbid a code."""
    start = time.perf_counter()
    p = partition or twin_partition(g)
    test = _predicate("id", strict)
    full_ok = test(g.adj, g.full_mask)
    if full_ok == p.has_adjacent_twins():
        raise AssertionError("identifying-code existence disagrees with twin structure")
    if not full_ok:
        return SolveReport("id", None, None, 0, 1, time.perf_counter() - start)
    if lower_bound is None:
        lower_bound = twin_lower_bound(p)
        if strict:
            # every strict identifying code is locating-dominating
            lower_bound = max(lower_bound, q2_lower_bound(g))
    return _staged(g, "id", test, lower_bound, p, budget, threads, strict)


def enumerate_minimal(g: ComponentGraph, size_cap: int, target: str = "ld",
                      strict: bool = True, budget: int = DEFAULT_BUDGET,
                      partition: TwinPartition | None = None) -> list[VertexSet]:
    """Inclusion-minimal feasible sets of size <= size_cap, by (size, positions)."""
    test = _predicate(target, strict)
    p = partition or twin_partition(g)
    if target == "id" and p.has_adjacent_twins():
        return []
    gen = _Generator.from_partition(p, g.order)
    adj = g.adj
    found = []
    examined = 0
    for k in range(min(size_cap, g.order) + 1):
        for state in gen.partitions(k):
            for bits in gen.walk(state):
                examined += 1
                if examined > budget:
                    raise BudgetExceededError("candidate budget exhausted", examined)
                if not test(adj, bits):
                    continue
                if any(test(adj, bits & ~(1 << x)) for x in iter_bits(bits)):
                    continue
                found.append(VertexSet(bits, g.order))
    return found


def enumerate_minimal_ld(g, size_cap, **kw):
    return enumerate_minimal(g, size_cap, "ld", **kw)


def enumerate_minimal_id(g, size_cap, strict=True, **kw):
    return enumerate_minimal(g, size_cap, "id", strict=strict, **kw)


def check_exchange(g: ComponentGraph, sets) -> ExchangeReport:
    """Test the exchange property over every ordered pair drawn from ``sets``.

    For L1, L2 and u1 in L1 some u2 in L2 must make (L2 - {u2}) + {u1}
    an inclusion-minimal LD set. u1 already in L2 is served by u2 = u1.
    """
    adj = g.adj
    minimal: dict[int, bool] = {}

    def is_min(bits):
        if bits not in minimal:
            minimal[bits] = ld_bits(adj, bits) and not any(
                ld_bits(adj, bits & ~(1 << x)) for x in iter_bits(bits))
        return minimal[bits]

    sets = list(sets)
    for s in sets:
        if s.order != g.order or not is_min(s.bits):
            raise PreconditionError(f"not an inclusion-minimal LD set: {g.labels(s.bits)}")
    good: dict[tuple[int, int], bool] = {}

    def exchangeable(l2, u1):
        key = (l2, u1)
        if key not in good:
            good[key] = any(is_min(l2 & ~(1 << u2) | (1 << u1)) for u2 in iter_bits(l2))
        return good[key]

    for l1 in sets:
        for l2 in sets:
            for u1 in iter_bits(l1.bits & ~l2.bits):
                if not exchangeable(l2.bits, u1):
                    return ExchangeReport(False, len(minimal), (l1, l2, u1))
    return ExchangeReport(True, len(minimal))


def brute_oracle(g: ComponentGraph, target: str, strict: bool = True) -> SolveReport:
    """Unpruned subset enumeration with its own set-based predicate.

    Adjacency is recomputed from supports, so nothing here depends on the
    bitset rows or the twin-aware generator.
    """
    if g.order > ORACLE_MAX_ORDER:
        raise OrderTooLargeError(f"oracle limited to order {ORACLE_MAX_ORDER}, got {g.order}")
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}")
    start = time.perf_counter()
    supports = [v.support for v in g.vertices]
    V = len(supports)
    nbrs = [frozenset(j for j in range(V) if j != i and supports[i] & supports[j])
            for i in range(V)]

    def feasible(chosen):
        chosen = set(chosen)
        traces = []
        for u in range(V):
            if target == "ld":
                if u in chosen:
                    continue
                t = nbrs[u] & chosen
                if not t:
                    return False
            else:
                t = (nbrs[u] | {u}) & chosen
                if strict and not t:
                    return False
            traces.append(frozenset(t))
        return len(set(traces)) == len(traces)

    examined = 0
    for k in range(V + 1):
        for combo in combinations(range(V), k):
            examined += 1
            if feasible(combo):
                return SolveReport(target, k, VertexSet.of(g, combo), 0, examined,
                                   time.perf_counter() - start)
    return SolveReport(target, None, None, 0, examined, time.perf_counter() - start)
