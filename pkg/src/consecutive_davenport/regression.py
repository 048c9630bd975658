"""Regression table of the known constant values.

Each check computes a group of constants and records, per case, the
expected value, the value obtained and whether they agree.  The
``verify-paper`` CLI command and the acceptance tests both run this table.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np

from . import catalog
from .constructions import metacyclic_free, product_interleave, rank_power_free
from .descriptors import parse_group
from .groups import Group, abelian, cyclic, direct_product
from .sequences import OrderedSequence, WindowAutomaton, is_free, is_free_unweighted_fast
from .solver import (
    NAIVE_BUDGET,
    SearchConfig,
    compute_consecutive,
    compute_consecutive_naive,
    compute_consecutive_unweighted,
    compute_davenport,
    conjecture_sweep,
    is_zero_sum_free,
    verify_value,
)
from .weights import (
    WeightSet,
    explicit_set,
    full_weight,
    punctured_set,
    revalidate,
    unit_nonsquares,
    unit_powers,
    unweighted,
)


@dataclass
class Case:
    label: str
    expected: object
    got: object
    ok: bool
    conclusive: bool = True


@dataclass
class CheckOutcome:
    number: int
    title: str
    budget: float
    cases: list[Case] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def conclusive(self) -> bool:
        return all(c.conclusive for c in self.cases)

    @property
    def passed(self) -> bool:
        return bool(self.cases) and all(c.ok for c in self.cases) and self.conclusive

    @property
    def within_budget(self) -> bool:
        return self.elapsed <= self.budget

    def add(self, label: str, expected, got, ok: bool | None = None, conclusive: bool = True) -> None:
        self.cases.append(Case(label, expected, got, (expected == got) if ok is None else ok, conclusive))


def _value_case(out: CheckOutcome, label: str, res, expected: int) -> None:
    out.add(label, expected, res.value, conclusive=res.conclusive)
    if res.witness is not None:
        out.add(f"{label} witness length", expected - 1, len(res.witness))


# -- individual criteria ------------------------------------------------------


def check_cyclic_unweighted(out: CheckOutcome) -> None:
    for n in range(2, 13):
        G = cyclic(n)
        res = compute_consecutive(G, unweighted(n))
        _value_case(out, f"C(C{n})", res, n)
        if res.witness is not None:
            out.add(f"C(C{n}) witness free", True, is_free(res.witness, [1]))


def check_abelian_unweighted(out: CheckOutcome) -> None:
    for desc in catalog.abelian_catalog(24):
        G = parse_group(desc)
        res = compute_consecutive_unweighted(G)
        _value_case(out, f"C({desc})", res, G.order)


def check_metacyclic(out: CheckOutcome) -> None:
    for desc in ["M(4,2,4,3)", "M(4,2,2,3)", "M(3,2,3,2)", "M(5,2,5,4)", "M(8,2,8,7)"]:
        G = parse_group(desc)
        res = compute_consecutive(G, unweighted(G.exponent))
        _value_case(out, f"C({desc})", res, G.order)
        s = metacyclic_free(G)
        out.add(f"{desc} construction free, length {G.order - 1}", (True, G.order - 1), (is_free(s, [1]), len(s)))


def check_products(out: CheckOutcome) -> None:
    for h_desc, k_desc in product(["C2", "A[2,2]"], ["M(3,2,3,2)", "M(4,2,4,3)"]):
        H, K = parse_group(h_desc), parse_group(k_desc)
        G = direct_product(H, K)
        label = f"C({G.descriptor})"
        if G.order <= 24:
            res = compute_consecutive(G, unweighted(G.exponent))
            _value_case(out, label, res, G.order)
        else:
            s1 = OrderedSequence(H, compute_consecutive_unweighted(H).witness.elements)
            s2 = metacyclic_free(K)
            s = product_interleave(s1, s2, product=G)
            lower = len(s) + 1 if is_free(s, [1]) and is_free_unweighted_fast(s) else None
            upper = G.order  # pigeonhole on prefix products
            out.add(f"{label} lower bound via interleaving", G.order, lower)
            out.add(f"{label} upper bound via pigeonhole", G.order, upper)


def check_cyclic_full(out: CheckOutcome) -> None:
    for n in range(2, 13):
        res = compute_consecutive(cyclic(n), full_weight(n))
        _value_case(out, f"C_full(C{n})", res, 2)


def check_cyclic_units(out: CheckOutcome) -> None:
    sets: list[tuple[int, WeightSet]] = []
    for p in (3, 5, 7, 11, 13):
        sets += [(p, unit_powers(p, 2)), (p, unit_nonsquares(p))]
    sets.append((13, unit_powers(13, 3)))
    for p, A in sets:
        res = compute_consecutive(cyclic(p), A)
        _value_case(out, f"C_{A}(C{p})", res, 3)


def check_rank_two_full(out: CheckOutcome) -> None:
    for n in range(2, 9):
        res = compute_consecutive(abelian([n, n]), full_weight(n))
        _value_case(out, f"C_full(C{n}^2)", res, 4)


def check_rank_lower_bounds(out: CheckOutcome) -> None:
    cases = [(2, 3, full_weight(2), 8), (3, 3, full_weight(3), 8), (4, 2, full_weight(4), 4), (5, 2, unit_powers(5, 2), 9)]
    for n, r, A, bound in cases:
        s = rank_power_free(n, r, A)
        out.add(f"C_{A}(C{n}^{r}) >= {bound}: free sequence of length {bound - 1}", (True, bound - 1), (is_free(s, A), len(s)))


def check_davenport(out: CheckOutcome) -> None:
    cases = [(abelian([n, n]), full_weight(n), 3) for n in (2, 3, 4, 5)]
    cases += [
        (abelian([2, 4, 4]), full_weight(4), 3),
        (abelian([2, 6]), punctured_set(2, 1, 3), 2),
        (abelian([2, 6, 6]), punctured_set(2, 1, 3), 3),
    ]
    for G, A, expected in cases:
        res = compute_davenport(G, A)
        out.add(f"D_{A}({G.descriptor})", expected, res.value, conclusive=res.conclusive)
        if res.witness is not None:
            out.add(f"D_{A}({G.descriptor}) witness zero-sum free", True, is_zero_sum_free(res.witness, A))


def check_punctured(out: CheckOutcome) -> None:
    A = punctured_set(2, 1, 3)
    for G, expected in [(abelian([2, 6]), 2), (abelian([2, 6, 6]), 4)]:
        rep = verify_value(G, A, expected)
        out.add(f"C_{A}({G.descriptor}) = {expected} by level search", "PASS", rep.verdict,
                conclusive=rep.verdict != "INCONCLUSIVE")
        res = compute_consecutive(G, A)
        _value_case(out, f"C_{A}({G.descriptor}) by longest path", res, expected)


def _random_weight_sets(m: int, rng: np.random.Generator, count: int = 2) -> list[WeightSet]:
    out = []
    for _ in range(count):
        size = int(rng.integers(1, m))
        out.append(explicit_set(rng.choice(np.arange(1, m), size=size, replace=False).tolist(), m))
    return out


def weight_sets_for(G: Group, rng: np.random.Generator) -> list[WeightSet]:
    m = G.exponent
    if m <= 2:
        return [unweighted(m)]
    return [unweighted(m), full_weight(m), *_random_weight_sets(m, rng)]


def _naive_len(order: int) -> int:
    if order == 1:
        return 4
    return min(int(math.log(NAIVE_BUDGET) / math.log(order) + 1e-9), 4 * order + 1)


def _all_free_paths_agree(G: Group, max_len: int) -> bool:
    """Prefix-product test vs window automaton on every sequence of length <= max_len."""
    auto = WindowAutomaton(G, [1])
    rows = G.rows

    def walk(state: int, prefixes: frozenset, q: int, fast_free: bool, slow_free: bool, depth: int) -> bool:
        if fast_free != slow_free:
            return False
        if depth == max_len:
            return True
        for g in G.elements():
            nxt = auto.step(state, g)
            q2 = rows[q][g]
            if not walk(nxt, prefixes | {q2}, q2, fast_free and q2 not in prefixes,
                        slow_free and not nxt & 1, depth + 1):
                return False
        return True

    return walk(0, frozenset({0}), 0, True, True, 0)


PRODUCT_PAIRS = [
    ("C2", "C3", None), ("C2", "S3", None), ("C3", "C2", None), ("A[2,2]", "C2", None), ("C2", "Q8", None),
    ("C2", "C2", "full"), ("C3", "C3", "full"), ("C4", "C4", "full"), ("C6", "C6", "full"),
    ("S3", "C6", "full"), ("C6", "S3", "full"), ("C5", "C5", "U^2(5)"), ("C5", "C5", "U-U2(5)"),
]

SUBGROUP_PAIRS = [
    ("C2", "C4", "full"), ("C2", "C6", "full"), ("C3", "C6", "full"), ("C2", "C4", "{1,3}"),
    ("C2", "C6", "{1,5}"), ("C3", "C6", "{2,3}"), ("C2", "D4", "full"), ("C2", "Q8", "full"),
    ("C2", "S3", "full"), ("A[2,2]", "C4", "full"), ("C2", "C8", "{1,3,5,7}"), ("C3", "C9", "{1,2,4,5,7,8}"),
]


def _weights_for(desc: str | None, m: int) -> WeightSet:
    from .descriptors import parse_weights

    return unweighted(m) if desc is None else parse_weights(desc, m)


def check_properties(out: CheckOutcome, seed: int = 20240601) -> None:
    rng = np.random.default_rng(seed)
    for desc in catalog.SMALL_GROUPS:
        G = parse_group(desc)
        for A in weight_sets_for(G, rng):
            fast = compute_consecutive(G, A)
            max_len = _naive_len(G.order)
            naive = compute_consecutive_naive(G, A, max_len)
            if naive.conclusive:
                out.add(f"oracle {desc} A={A.key()}", naive.value, fast.value, conclusive=fast.conclusive)
            else:
                out.add(f"oracle {desc} A={A.key()} beyond naive range {max_len}", True,
                        fast.value is None or fast.value > max_len, conclusive=fast.conclusive)
            if fast.witness is not None:
                out.add(f"witness {desc} A={A.key()} free", True, is_free(fast.witness, A))
        out.add(f"prefix test = automaton on {desc}, length <= 6", True, _all_free_paths_agree(G, 6))

    for h_desc, k_desc, wdesc in PRODUCT_PAIRS:
        H, K = parse_group(h_desc), parse_group(k_desc)
        G = direct_product(H, K)
        vals = []
        for grp in (H, K, G):
            A = _weights_for(wdesc, grp.exponent)
            vals.append(compute_consecutive(grp, A).value)
        out.add(f"C_A({G.descriptor}) >= C_A({h_desc}) C_A({k_desc}), A={wdesc or '{1}'}",
                f">= {vals[0] * vals[1]}", vals[2], ok=vals[2] >= vals[0] * vals[1])

    for h_desc, k_desc, wdesc in SUBGROUP_PAIRS:
        H, K = parse_group(h_desc), parse_group(k_desc)
        G = direct_product(H, K)
        A = _weights_for(wdesc, K.exponent)
        ck = compute_consecutive(K, A).value
        cg = compute_consecutive(G, revalidate(A, G.exponent)).value
        out.add(f"C_A({G.descriptor}) >= C_A({k_desc}), A={wdesc}", f">= {ck}", cg, ok=cg >= ck)


def check_sweep(out: CheckOutcome) -> None:
    for row in conjecture_sweep(catalog.load(catalog.sweep_catalog())):
        out.add(f"C({row.group}) = |G|", "EQUAL", row.verdict, conclusive=row.verdict != "INCONCLUSIVE")
        if row.witness is not None:
            out.add(f"{row.group} sweep witness free", True, is_free(row.witness, [1]))


CHECKS: list[tuple[int, str, float, Callable[[CheckOutcome], None]]] = [
    (1, "C(C_n) = n, n in [2,12]", 1.0, check_cyclic_unweighted),
    (2, "C(G) = |G| for abelian |G| <= 24", 30.0, check_abelian_unweighted),
    (3, "C(G) = |G| for metacyclic groups", 60.0, check_metacyclic),
    (4, "C(H x K) = |H||K|", 300.0, check_products),
    (5, "C_full(C_n) = 2, n in [2,12]", 1.0, check_cyclic_full),
    (6, "C_A(C_p) = 3 for U(p)^2, U(p)\\U(p)^2, U(13)^3", 10.0, check_cyclic_units),
    (7, "C_full(C_n^2) = 4, n in [2,8]", 120.0, check_rank_two_full),
    (8, "rank-r lower bounds by interleaving", 40.0, check_rank_lower_bounds),
    (9, "D_A values", 300.0, check_davenport),
    (10, "punctured weights: C_A(C2+C6) = 2, C_A(C2+C6^2) = 4", 600.0, check_punctured),
    (11, "property suites", 600.0, check_properties),
    (12, "catalog sweep C(G) = |G|", 600.0, check_sweep),
]


def run_check(number: int) -> CheckOutcome:
    num, title, budget, fn = next(c for c in CHECKS if c[0] == number)
    out = CheckOutcome(num, title, budget)
    start = time.perf_counter()
    fn(out)
    out.elapsed = time.perf_counter() - start
    return out


def run_all(numbers: list[int] | None = None) -> list[CheckOutcome]:
    return [run_check(num) for num, *_ in CHECKS if numbers is None or num in numbers]
