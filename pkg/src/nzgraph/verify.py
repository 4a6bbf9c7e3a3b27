"""Claim-by-claim verification of the closed forms and constructions for Γ(V).

Each instance (n, q) produces one row per claim in CLAIMS. A claim whose
hypotheses exclude the instance, or whose check would exceed a work limit, is
reported as skipped rather than passed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb, prod

from .codes import (
    family_exchange_counterexample,
    family_T1,
    family_T2_Tn1,
    family_twin_deletion,
    is_identifying_code,
    is_locating_dominating,
    is_minimal,
    ld_bits,
)
from .graph import (
    ComponentGraph,
    build_graph,
    class_profile,
    degree_formula,
    order_formula,
    profile_formula_q2,
    size_formula,
)
from .solver import DEFAULT_BUDGET, check_exchange, enumerate_minimal, min_id, min_ld
from .twins import TwinKind, twin_lower_bound, twin_partition
from .vecspace import DEFAULT_VERTEX_CAP, SpaceParams, class_size

DEFAULT_MATRIX = ((2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4))
EXHAUSTIVE_LIMIT = 10**6
EXCHANGE_SET_LIMIT = 256
ENUMERATION_ORDER_LIMIT = 20

PASS, FAIL, SKIP = "pass", "fail", "skipped"

CLAIMS = (
    ("order", "|V| = q^n - 1"),
    ("size", "|E| = (q^2n - q^n + 1 - (2q-1)^n)/2"),
    ("degree", "deg(v) = (q^s - 1) q^(n-s) - 1 for v in T_s"),
    ("class-sizes", "|T_i| = C(n,i) (q-1)^i"),
    ("class-profile", "q=2: |N(v) ∩ T_r| four-case count"),
    ("twin-classes", "q>=3: twin classes = support groups, adjacent, size (q-1)^i"),
    ("twin-bound", "q>=3: twin bound = sum C(n,i)((q-1)^i - 1)"),
    ("t1-ld", "q=2, n>=3: T_1 is locating-dominating"),
    ("t1-id", "q=2, n>=3: T_1 is an identifying code"),
    ("t2-traces", "q=2, n>=4: N(u) ∩ T_2 distinct for u outside T_2 ∪ T_(n-1)"),
    ("t2-tn1-ld", "q=2, n>=4: T_2 ∪ T_(n-1) is locating-dominating"),
    ("t2-tn1-minimal", "q=2, n>=5: T_2 ∪ T_(n-1) is inclusion-minimal"),
    ("counterexample-minimal", "q=2, n=4: {b1+b4, b2+b4, b3+b4} ∪ T_3 is minimal LD"),
    ("twin-deletion-ld", "q>=3: all-but-one per twin class is locating-dominating"),
    ("ld-lower-bound", "q=2, n>=3: no LD set of size n-1"),
    ("lambda", "λ: 2 (n=2,q=2); n (q=2,n>=3); sum C(n,i)((q-1)^i - 1) (q>=3)"),
    ("identifying-number", "I: n (q=2, n>=2); none (q>=3, n>=2)"),
    ("lambda-le-id", "λ <= I"),
    ("unique-minimal-id", "q=2, n>=3: T_1 is the only minimal identifying code"),
    ("minimal-ld-family", "q>=3: minimal LD sets = twin-deletion sets"),
    ("exchange", "LD exchange property: fails (q=2, n>=4); holds (q>=3)"),
)


@dataclass(frozen=True)
class ClaimRow:
    n: int
    q: int
    claim: str
    statement: str
    expected: str
    computed: str
    status: str

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerifyReport:
    rows: list[ClaimRow]

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.rows)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for r in self.rows:
            out[r.status] += 1
        return out


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _fmt_set(g: ComponentGraph, bits: int) -> str:
    return "{" + ",".join(g.labels(bits)) + "}"


class _Instance:
    """Lazily computed shared results for one (n, q)."""

    def __init__(self, n, q, budget, threads, vertex_cap):
        self.n, self.q = n, q
        self.g = build_graph(SpaceParams(n, q, vertex_cap))
        self.partition = twin_partition(self.g)
        self.budget = budget
        self.threads = threads
        self._ld = self._id = None
        self.minimal = None

    @property
    def ld(self):
        if self._ld is None:
            self._ld = min_ld(self.g, budget=self.budget, threads=self.threads,
                              partition=self.partition)
        return self._ld

    @property
    def id(self):
        if self._id is None:
            self._id = min_id(self.g, budget=self.budget, threads=self.threads,
                              partition=self.partition)
        return self._id


def _check_order(inst):
    g = inst.g
    exp = order_formula(g.n, g.q)
    return str(exp), str(g.order), _status(exp == g.order)


def _check_size(inst):
    g = inst.g
    exp = size_formula(g.n, g.q)
    got = sum(row.bit_count() for row in g.adj) // 2
    return str(exp), str(got), _status(exp == got)


def _check_degree(inst):
    g = inst.g
    bad = [p for p, v in enumerate(g.vertices)
           if g.adj[p].bit_count() != degree_formula(g.n, g.q, v.weight)]
    return "0 mismatches", f"{len(bad)} mismatches", _status(not bad)


def _check_class_sizes(inst):
    g = inst.g
    exp = [class_size(g.n, g.q, i) for i in range(1, g.n + 1)]
    got = [g.class_mask(i).bit_count() for i in range(1, g.n + 1)]
    return str(exp), str(got), _status(exp == got)


def _check_class_profile(inst):
    g = inst.g
    if g.q != 2:
        return None
    bad = 0
    for p, v in enumerate(g.vertices):
        prof = class_profile(g, p)
        want = [profile_formula_q2(g.n, v.weight, r) for r in range(1, g.n + 1)]
        bad += prof != want
    return "0 mismatches", f"{bad} mismatches", _status(bad == 0)


def _support_groups(g):
    groups = {}
    for p, v in enumerate(g.vertices):
        groups[v.support] = groups.get(v.support, 0) | (1 << p)
    return groups


def _check_twin_classes(inst):
    g, p = inst.g, inst.partition
    if g.q < 3:
        return None
    groups = sorted(_support_groups(g).values())
    found = sorted(c.members.bits for c in p.classes)
    kinds = {c.kind for c in p.classes}
    sizes_ok = all(c.size == (g.q - 1) ** g.vertices[c.first].weight for c in p.classes)
    ok = groups == found and kinds == {TwinKind.ADJACENT} and sizes_ok
    return (f"{2**g.n - 1} adjacent classes",
            f"{len(found)} classes, kinds {sorted(k.value for k in kinds)}", _status(ok))


def _lambda_formula_q3(n, q):
    return sum(comb(n, i) * ((q - 1) ** i - 1) for i in range(1, n + 1))


def _check_twin_bound(inst):
    g = inst.g
    if g.q < 3:
        return None
    exp = _lambda_formula_q3(g.n, g.q)
    got = twin_lower_bound(inst.partition)
    return str(exp), str(got), _status(exp == got)


def _check_t1_ld(inst):
    g = inst.g
    if g.q != 2 or g.n < 3:
        return None
    ok = bool(is_locating_dominating(g, family_T1(g)))
    return "true", str(ok).lower(), _status(ok)


def _check_t1_id(inst):
    g = inst.g
    if g.q != 2 or g.n < 3:
        return None
    ok = bool(is_identifying_code(g, family_T1(g)))
    return "true", str(ok).lower(), _status(ok)


def _check_t2_traces(inst):
    g = inst.g
    if g.q != 2 or g.n < 4:
        return None
    t2 = g.class_mask(2)
    # complementary pairs inside T_2 collide when n = 4; T_2 members are in the set
    outside = g.full_mask & ~g.class_mask(g.n - 1) & ~t2
    traces = [g.adj[p] & t2 for p in range(g.order) if outside >> p & 1]
    collisions = len(traces) - len(set(traces))
    return "0 collisions", f"{collisions} collisions", _status(collisions == 0)


def _check_t2_tn1_ld(inst):
    g = inst.g
    if g.q != 2 or g.n < 4:
        return None
    ok = bool(is_locating_dominating(g, family_T2_Tn1(g)))
    return "true", str(ok).lower(), _status(ok)


def _check_t2_tn1_minimal(inst):
    g = inst.g
    if g.q != 2 or g.n < 5:
        return None
    ok = is_minimal(g, family_T2_Tn1(g))
    return "true", str(ok).lower(), _status(ok)


def _check_counterexample(inst):
    g = inst.g
    if (g.n, g.q) != (4, 2):
        return None
    s = family_exchange_counterexample(g)
    ok = is_minimal(g, s)
    return "minimal, size 7", f"{'minimal' if ok else 'not minimal'}, size {s.card}", \
        _status(ok and s.card == 7)


def _check_twin_deletion_ld(inst):
    g = inst.g
    if g.q < 3:
        return None
    s = family_twin_deletion(g, partition=inst.partition)
    ok = bool(is_locating_dominating(g, s))
    exp = _lambda_formula_q3(g.n, g.q)
    return f"true, size {exp}", f"{str(ok).lower()}, size {s.card}", \
        _status(ok and s.card == exp)


def _check_ld_lower_bound(inst):
    g = inst.g
    if g.q != 2 or g.n < 3 or comb(g.order, g.n - 1) > EXHAUSTIVE_LIMIT:
        return None
    hits = 0
    for combo in combinations(range(g.order), g.n - 1):
        bits = 0
        for p in combo:
            bits |= 1 << p
        hits += ld_bits(g.adj, bits)
    return f"0 of {comb(g.order, g.n - 1)}", f"{hits} of {comb(g.order, g.n - 1)}", \
        _status(hits == 0)


def _expected_lambda(n, q):
    if q == 2 and n == 2:
        return 2
    if q == 2 and n >= 3:
        return n
    if q >= 3:
        return _lambda_formula_q3(n, q)
    return None


def _check_lambda(inst):
    exp = _expected_lambda(inst.n, inst.q)
    if exp is None:
        return None
    rep = inst.ld
    ok = rep.optimum == exp and bool(is_locating_dominating(inst.g, rep.witness))
    return str(exp), f"{rep.optimum} (bound {rep.lower_bound_used})", _status(ok)


def _expected_id(n, q):
    if n < 2:
        return None
    return n if q == 2 else "none"


def _check_identifying_number(inst):
    exp = _expected_id(inst.n, inst.q)
    if exp is None:
        return None
    rep = inst.id
    got = "none" if rep.nonexistent else rep.optimum
    if rep.nonexistent:
        ok = exp == "none" and inst.partition.has_adjacent_twins()
    else:
        ok = got == exp and bool(is_identifying_code(inst.g, rep.witness))
    return str(exp), str(got), _status(ok)


def _check_lambda_le_id(inst):
    if inst.id.nonexistent:
        return None
    lam, ident = inst.ld.optimum, inst.id.optimum
    # the identifying witness must itself be locating-dominating
    ok = lam <= ident and bool(is_locating_dominating(inst.g, inst.id.witness))
    return "λ <= I", f"{lam} <= {ident}", _status(ok)


def _check_unique_minimal_id(inst):
    g = inst.g
    if g.q != 2 or g.n < 3 or g.order > ENUMERATION_ORDER_LIMIT:
        return None
    found = enumerate_minimal(g, g.order, "id", budget=inst.budget,
                              partition=inst.partition)
    t1 = g.class_mask(1)
    got = "[" + ";".join(_fmt_set(g, s.bits) for s in found) + "]"
    return f"[{_fmt_set(g, t1)}]", got, _status([s.bits for s in found] == [t1])


def _twin_deletion_count(inst):
    return prod(c.size for c in inst.partition.nontrivial())


def _generated_count(inst):
    """Candidates the twin-constrained generator visits across all sizes."""
    singletons = inst.g.order - sum(c.size for c in inst.partition.nontrivial())
    return prod(c.size + 1 for c in inst.partition.nontrivial()) * 2**singletons


def _minimal_ld_sets(inst):
    if inst.minimal is None:
        inst.minimal = enumerate_minimal(inst.g, inst.g.order, "ld", budget=inst.budget,
                                         partition=inst.partition)
    return inst.minimal


def _check_minimal_ld_family(inst):
    g = inst.g
    if g.q < 3 or _generated_count(inst) > EXHAUSTIVE_LIMIT:
        return None
    sets = _minimal_ld_sets(inst)
    classes = inst.partition.nontrivial()
    deletions = all(
        all((s.bits & c.members.bits).bit_count() == c.size - 1 for c in classes)
        for s in sets
    )
    expected = _twin_deletion_count(inst)
    return f"{expected} twin-deletion sets", \
        f"{len(sets)} sets, {'all' if deletions else 'not all'} twin-deletion", \
        _status(deletions and len(sets) == expected)


def _check_exchange(inst):
    g = inst.g
    if g.q == 2 and g.n >= 4:
        other = family_exchange_counterexample(g) if g.n == 4 else family_T2_Tn1(g)
        rep = check_exchange(g, [family_T1(g), other])
        if rep.holds:
            return "fails", "holds", FAIL
        l1, l2, u1 = rep.witness
        return "fails", f"fails (sizes {l1.card},{l2.card}; u1={g.label(u1)})", PASS
    if g.q >= 3:
        if (_generated_count(inst) > EXHAUSTIVE_LIMIT
                or _twin_deletion_count(inst) > EXCHANGE_SET_LIMIT):
            return None
        sets = _minimal_ld_sets(inst)
        rep = check_exchange(g, sets)
        return "holds", f"{'holds' if rep.holds else 'fails'} over {len(sets)} sets", \
            _status(rep.holds)
    return None


_CHECKS = {
    "order": _check_order,
    "size": _check_size,
    "degree": _check_degree,
    "class-sizes": _check_class_sizes,
    "class-profile": _check_class_profile,
    "twin-classes": _check_twin_classes,
    "twin-bound": _check_twin_bound,
    "t1-ld": _check_t1_ld,
    "t1-id": _check_t1_id,
    "t2-traces": _check_t2_traces,
    "t2-tn1-ld": _check_t2_tn1_ld,
    "t2-tn1-minimal": _check_t2_tn1_minimal,
    "counterexample-minimal": _check_counterexample,
    "twin-deletion-ld": _check_twin_deletion_ld,
    "ld-lower-bound": _check_ld_lower_bound,
    "lambda": _check_lambda,
    "identifying-number": _check_identifying_number,
    "lambda-le-id": _check_lambda_le_id,
    "unique-minimal-id": _check_unique_minimal_id,
    "minimal-ld-family": _check_minimal_ld_family,
    "exchange": _check_exchange,
}


def verify_matrix(n: int, q: int, budget: int = DEFAULT_BUDGET, threads: int = 1,
                  vertex_cap: int | None = None) -> VerifyReport:
    """All claim rows for one instance. Failures are data, never exceptions."""
    inst = _Instance(n, q, budget, threads, vertex_cap or DEFAULT_VERTEX_CAP)
    rows = []
    for claim, statement in CLAIMS:
        result = _CHECKS[claim](inst)
        if result is None:
            rows.append(ClaimRow(n, q, claim, statement, "-", "-", SKIP))
        else:
            rows.append(ClaimRow(n, q, claim, statement, *result))
    return VerifyReport(rows)


def verify_many(instances=DEFAULT_MATRIX, **kw) -> VerifyReport:
    rows = []
    for n, q in instances:
        rows.extend(verify_matrix(n, q, **kw).rows)
    return VerifyReport(rows)
