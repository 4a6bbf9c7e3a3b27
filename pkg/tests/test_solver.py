from collections import Counter
from itertools import combinations
from math import comb

import pytest

from nzgraph import (
    BudgetExceededError,
    OrderTooLargeError,
    PreconditionError,
    VertexSet,
    brute_oracle,
    check_exchange,
    enumerate_minimal_id,
    enumerate_minimal_ld,
    family_exchange_counterexample,
    family_T1,
    is_identifying_code,
    is_locating_dominating,
    min_id,
    min_ld,
    q2_lower_bound,
    twin_partition,
)
from nzgraph.codes import ld_bits

from conftest import graph

SMALL = [(n, q) for n in range(1, 5) for q in range(2, 17) if q**n - 1 <= 15]


@pytest.mark.parametrize("n,q,opt", [(3, 2, 3), (2, 2, 2), (2, 3, 5), (1, 2, 1), (4, 2, 4), (5, 2, 5)])
def test_min_ld_values(n, q, opt):
    rep = min_ld(graph(n, q))
    assert rep.optimum == opt
    assert is_locating_dominating(graph(n, q), rep.witness)


def test_min_ld_n2_q3_matches_exhaustive():
    g = graph(2, 3)
    sizes = [bin(b).count("1") for b in range(1 << g.order) if ld_bits(g.adj, b)]
    assert min(sizes) == 5
    rep = min_ld(g)
    assert rep.lower_bound_used == 5 and rep.optimum == 5


def test_min_ld_n3_q3_certified_by_bound():
    rep = min_ld(graph(3, 3))
    assert rep.optimum == rep.lower_bound_used == 19
    assert rep.candidates_examined == 1


@pytest.mark.parametrize("n,q,opt", [(3, 2, 3), (2, 2, 2), (2, 3, None), (3, 3, None), (2, 4, None), (4, 2, 4)])
def test_min_id_values(n, q, opt):
    rep = min_id(graph(n, q))
    assert rep.optimum == opt
    assert rep.nonexistent == (opt is None)
    assert rep.nonexistent == twin_partition(graph(n, q)).has_adjacent_twins()
    if opt is not None:
        w = rep.witness
        assert is_identifying_code(graph(n, q), w)
        assert not any(is_identifying_code(graph(n, q), w.with_bits(w.bits & ~(1 << x))) for x in w)


def test_q2_lower_bound():
    assert q2_lower_bound(graph(5, 2)) == 5
    assert q2_lower_bound(graph(2, 2)) == 0
    assert q2_lower_bound(graph(2, 3)) == 0
    g = graph(4, 2)
    assert comb(15, 3) == 455
    assert not any(ld_bits(g.adj, sum(1 << p for p in c)) for c in combinations(range(15), 3))


@pytest.mark.parametrize("n,q", SMALL)
def test_oracle_equivalence(n, q):
    g = graph(n, q)
    for target, solve in (("ld", min_ld), ("id", min_id)):
        fast, slow = solve(g), brute_oracle(g, target)
        assert fast.optimum == slow.optimum, target
        if fast.witness is not None:
            assert fast.witness.positions() == slow.witness.positions()


@pytest.mark.parametrize("n,q", SMALL)
def test_oracle_equivalence_literal_id(n, q):
    g = graph(n, q)
    assert min_id(g, strict=False).optimum == brute_oracle(g, "id", strict=False).optimum


def test_oracle_edge_cases():
    assert brute_oracle(graph(1, 2), "ld").optimum == 1
    assert brute_oracle(graph(1, 3), "id").nonexistent
    with pytest.raises(OrderTooLargeError):
        brute_oracle(graph(3, 3), "ld")


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4)])
def test_witness_is_minimal_and_deterministic(n, q):
    g = graph(n, q)
    a, b = min_ld(g), min_ld(g, threads=4)
    assert a.witness == b.witness and a.candidates_examined == b.candidates_examined
    for x in a.witness:
        assert not is_locating_dominating(g, a.witness.with_bits(a.witness.bits & ~(1 << x)))


def test_budget():
    g = graph(5, 2)
    with pytest.raises(BudgetExceededError):
        min_ld(g, budget=10, lower_bound=0)
    with pytest.raises(BudgetExceededError):
        min_ld(g, budget=10, lower_bound=0, threads=3)


def test_search_without_bound_still_exact():
    # dropping the q=2 bound makes the staged search prove it from scratch
    for n in (3, 4):
        rep = min_ld(graph(n, 2), lower_bound=0)
        assert rep.optimum == n


def test_enumerate_minimal_ld():
    g = graph(2, 3)
    sets = enumerate_minimal_ld(g, 8)
    assert sets and all(s.card == 5 for s in sets)
    brute = [b for b in range(1 << g.order) if ld_bits(g.adj, b)
             and not any(ld_bits(g.adj, b & ~(1 << x)) for x in range(g.order) if b >> x & 1)]
    assert sorted(s.bits for s in sets) == sorted(brute)
    assert enumerate_minimal_ld(g, 0) == []
    g = graph(4, 2)
    sets = enumerate_minimal_ld(g, 7)
    bits = {s.bits for s in sets}
    assert family_T1(g).bits in bits
    assert family_exchange_counterexample(g).bits in bits
    assert [s.sort_key() for s in sets] == sorted(s.sort_key() for s in sets)


def test_enumerate_minimal_ld_matches_brute_n4():
    g = graph(4, 2)
    sets = enumerate_minimal_ld(g, 15)
    brute = [b for b in range(1 << g.order) if ld_bits(g.adj, b)
             and not any(ld_bits(g.adj, b & ~(1 << x)) for x in range(g.order) if b >> x & 1)]
    assert sorted(s.bits for s in sets) == sorted(brute)
    assert Counter(s.card for s in sets) == Counter({7: 484, 8: 240, 4: 1})


def test_enumerate_minimal_id():
    for n in (3, 4):
        g = graph(n, 2)
        assert [s.bits for s in enumerate_minimal_id(g, g.order)] == [g.class_mask(1)]
    assert enumerate_minimal_id(graph(2, 3), 8) == []


def test_exchange_fails_n4():
    g = graph(4, 2)
    rep = check_exchange(g, [family_T1(g), family_exchange_counterexample(g)])
    assert not rep.holds
    l1, l2, u1 = rep.witness
    assert {l1.card, l2.card} == {4, 7}
    assert u1 in l1 and u1 not in l2


def test_exchange_trivial_and_q3():
    g = graph(3, 2)
    assert check_exchange(g, [family_T1(g)]).holds
    g = graph(2, 3)
    assert check_exchange(g, enumerate_minimal_ld(g, 8)).holds


def test_exchange_rejects_non_minimal():
    g = graph(3, 2)
    with pytest.raises(PreconditionError):
        check_exchange(g, [VertexSet(g.full_mask, g.order)])


def test_report_json_shape():
    g = graph(3, 2)
    d = min_ld(g).to_dict(g)
    assert set(d) == {"target", "optimum", "nonexistent", "witness", "lower_bound",
                      "candidates", "elapsed_ms"}
    assert d["witness"] == ["100", "010", "001"]
    d = min_id(graph(2, 3)).to_dict(graph(2, 3))
    assert d["nonexistent"] is True and d["witness"] is None and d["optimum"] is None
