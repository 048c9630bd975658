"""Exact computation of C_A(G) and D_A(G) by longest-path search over state graphs.

``C_A(G)`` is one more than the longest free ordered sequence.  Two
sequences with the same window state (see :mod:`.sequences`) have exactly
the same free extensions, so the search memoizes on states and the
answer is ``1 + (longest path from the empty state)``.  For ``D_A(G)`` of
an abelian group the state is the set of all weighted subsequence
products instead.

No free sequence has length ``|G|`` or more: fixing any weight ``a`` in
``A``, the windows of ``g_1^a g_2^a ...`` are among the weighted windows,
and their prefix products must be distinct.  The search therefore stops
as soon as it finds a free sequence of length ``|G| - 1``.
"""

from __future__ import annotations

import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterable

from .groups import Group
from .sequences import EMPTY, OrderedSequence, WindowAutomaton, WindowState, is_free, is_free_unweighted_fast
from .weights import WeightSet, unweighted

INFINITE = math.inf
NAIVE_BUDGET = 10**8

CONSECUTIVE = "consecutive"
DAVENPORT = "davenport"


@dataclass(frozen=True)
class SearchConfig:
    """Caps and scheduling for the state-graph searches.

    ``max_length`` defaults to ``|G|`` when 1 is a weight and ``4|G|``
    otherwise.  ``deterministic`` forces a single thread so the witness is
    the lexicographically least free sequence of maximal length and
    ``states_explored`` is reproducible.
    """

    max_length: int | None = None
    max_states: int = 2_000_000
    deterministic: bool = True
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_length is not None and self.max_length < 1:
            raise ValueError("max_length must be positive")
        if self.max_states < 1 or self.threads < 1:
            raise ValueError("caps must be positive")


@dataclass
class ConstantResult:
    """Outcome of a constant computation.

    ``value`` is exact only when ``conclusive``; otherwise ``lower_bound``
    holds the best bound established and ``cap_hit`` names the cap that
    stopped the search.
    """

    kind: str
    group: str
    weights: str
    value: int | float | None
    witness: OrderedSequence | None
    states_explored: int = 0
    elapsed: float = 0.0
    conclusive: bool = True
    lower_bound: int | None = None
    cap_hit: str | None = None

    def to_json(self) -> dict:
        value = self.value
        if value == INFINITE:
            value = "INFINITE"
        return {
            "kind": self.kind,
            "group": self.group,
            "weights": self.weights,
            "value": value,
            "witness": None if self.witness is None else self.witness.text(),
            "states_explored": self.states_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "conclusive": self.conclusive,
            "lower_bound": self.lower_bound,
            "cap_hit": self.cap_hit,
        }


class _Stop(Exception):
    pass


def _check_weights(group: Group, weights: WeightSet) -> None:
    if not (weights.modulus == group.exponent or weights.revalidated or weights.is_unweighted):
        raise ValueError(
            f"weight set {weights} was validated for modulus {weights.modulus}, "
            f"but exp({group.descriptor}) = {group.exponent}; use revalidate()"
        )


class _LongestPath:
    """Memoized longest-suffix DFS over a state graph with on-stack cycle detection.

    ``successor(state, g)`` returns the next state, or ``None`` when
    appending ``g`` is illegal.  ``memo[state]`` holds ``(length, g)``: the
    longest legal suffix from ``state`` and the least first letter
    achieving it.
    """

    def __init__(
        self,
        successor: Callable[[WindowState, int], WindowState | None],
        alphabet: int,
        *,
        target: int | None,
        max_length: int,
        max_states: int,
        memo: dict | None = None,
        stop: threading.Event | None = None,
    ):
        self.successor = successor
        self.alphabet = alphabet
        self.target = target
        self.max_length = max_length
        self.max_states = max_states
        self.memo: dict[WindowState, tuple[int, int]] = {} if memo is None else memo
        self.stop = stop or threading.Event()
        self.expanded = 0
        self.best_path: tuple[int, ...] = ()
        self.truncated = False
        self.cycle: tuple[int, ...] | None = None
        self.cap_hit: str | None = None

    def chain(self, state: WindowState) -> list[int]:
        """Follow memoized best letters from ``state``."""
        out = []
        while True:
            entry = self.memo.get(state)
            if entry is None or entry[0] == 0:
                return out
            g = entry[1]
            out.append(g)
            state = self.successor(state, g)

    def _record(self, prefix: list[int], total: int, child: WindowState | None) -> None:
        if total > len(self.best_path):
            suffix = self.chain(child) if child is not None else []
            self.best_path = tuple(prefix) + tuple(suffix)
            if self.target is not None and total >= self.target:
                raise _Stop

    def run(self, root: WindowState, prefix: Iterable[int] = ()) -> int:
        """Longest legal path length from ``root``; raises :class:`_Stop` on early exit or caps."""
        prefix = list(prefix)
        base = len(prefix)
        if root in self.memo:
            self._record(prefix, base + self.memo[root][0], root)
            return self.memo[root][0]
        # frame: [state, next letter to try, best length, best letter]
        stack: list[list[int]] = [[root, 0, 0, -1]]
        on_stack = {root}
        path = prefix  # letters leading to stack[-1]
        self._record(path, base, None)
        while stack:
            if self.stop.is_set():
                raise _Stop
            frame = stack[-1]
            state, g = frame[0], frame[1]
            depth = base + len(stack) - 1
            if g >= self.alphabet or depth >= self.max_length:
                if g < self.alphabet:
                    # depth cap: remaining letters are not explored
                    if any(self.successor(state, h) is not None for h in range(self.alphabet)):
                        self.truncated = True
                stack.pop()
                on_stack.discard(state)
                self.memo[state] = (frame[2], frame[3])
                if stack:
                    parent = stack[-1]
                    value = frame[2] + 1
                    if value > parent[2]:
                        parent[2], parent[3] = value, path[-1]
                    path.pop()
                continue
            frame[1] = g + 1
            child = self.successor(state, g)
            if child is None:
                continue
            if child in on_stack:
                self.cycle = tuple(path) + (g,)
                raise _Stop
            known = self.memo.get(child)
            if known is not None:
                value = known[0] + 1
                if value > frame[2]:
                    frame[2], frame[3] = value, g
                path.append(g)
                self._record(path, depth + value, child)
                path.pop()
                continue
            path.append(g)
            self._record(path, depth + 1, None)
            self.expanded += 1
            if self.expanded > self.max_states:
                self.cap_hit = "max_states"
                raise _Stop
            stack.append([child, 0, 0, -1])
            on_stack.add(child)
        return self.memo[root][0]


def _search(
    group: Group,
    weights: WeightSet,
    cfg: SearchConfig,
    kind: str,
    successor: Callable[[WindowState, int], WindowState | None],
    check: Callable[[OrderedSequence], bool],
) -> ConstantResult:
    start = time.perf_counter()
    has_one = 1 in weights
    target = group.order - 1
    max_length = cfg.max_length or (group.order if has_one else 4 * group.order)
    threads = 1 if cfg.deterministic else cfg.threads
    memo: dict = {}
    stop = threading.Event()

    def make() -> _LongestPath:
        return _LongestPath(
            successor, group.order, target=target, max_length=max_length,
            max_states=cfg.max_states, memo=memo, stop=stop,
        )

    searches: list[_LongestPath] = []
    stopped = False
    if threads == 1:
        s = make()
        searches.append(s)
        try:
            s.run(EMPTY)
        except _Stop:
            stopped = True
    else:
        def branch(g: int) -> None:
            s = make()
            searches.append(s)
            child = successor(EMPTY, g)
            if child is None:
                return
            try:
                s.run(child, [g])
            except _Stop:
                stop.set()

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(branch, range(group.order)))
        stopped = stop.is_set()

    expanded = sum(s.expanded for s in searches)
    cycle = next((s.cycle for s in searches if s.cycle is not None), None)
    cap_hit = next((s.cap_hit for s in searches if s.cap_hit), None)
    truncated = any(s.truncated for s in searches)
    best = max((s.best_path for s in searches), key=len, default=())
    if not stopped and threads > 1:
        # least first letter among the best branches, then memoized chain
        lengths = []
        for g in range(group.order):
            child = successor(EMPTY, g)
            if child is not None and child in memo:
                lengths.append((memo[child][0] + 1, -g))
        if lengths:
            length, neg_g = max(lengths)
            best = (-neg_g, *searches[0].chain(successor(EMPTY, -neg_g)))
    elif not stopped:
        best = tuple(searches[0].chain(EMPTY))

    desc, wdesc = group.descriptor, weights.describe()
    elapsed = time.perf_counter() - start
    if cycle is not None:
        return ConstantResult(kind, desc, wdesc, INFINITE, None, expanded, elapsed, True, None, "cycle")
    witness = OrderedSequence(group, best)
    if not check(witness):
        raise AssertionError(f"search produced a non-free witness {witness.text()}")
    lower = len(best) + 1
    if cap_hit is not None or truncated:
        return ConstantResult(kind, desc, wdesc, None, witness, expanded, elapsed, False, lower, cap_hit or "max_length")
    if stopped and (target is None or len(best) < target):
        raise AssertionError("search stopped without reaching its target")
    return ConstantResult(kind, desc, wdesc, lower, witness if best else None, expanded, elapsed, True, lower)


def compute_consecutive(group: Group, weights: WeightSet, cfg: SearchConfig | None = None) -> ConstantResult:
    """C_A(G): one more than the longest A-weighted consecutive product-one free sequence."""
    cfg = cfg or SearchConfig()
    _check_weights(group, weights)
    auto = WindowAutomaton(group, weights)

    def successor(state: WindowState, g: int) -> WindowState | None:
        nxt = auto.step(state, g)
        return None if nxt & 1 else nxt

    return _search(group, weights, cfg, CONSECUTIVE, successor, lambda s: is_free(s, weights))


def is_zero_sum_free(seq: OrderedSequence, weights: WeightSet | Iterable[int]) -> bool:
    """True iff no nonempty (not necessarily consecutive) subsequence has a weighted product 1.

    Multiplies in sequence order, so for non-abelian groups this is the
    ordered-subsequence notion.
    """
    auto = WindowAutomaton(seq.group, weights)
    sigma = EMPTY
    for g in seq.elements:
        sigma |= auto.step(sigma, g)
        if sigma & 1:
            return False
    return True


def compute_davenport(group: Group, weights: WeightSet, cfg: SearchConfig | None = None) -> ConstantResult:
    """D_A(G) for an abelian group, via the subset-product state graph."""
    cfg = cfg or SearchConfig()
    if not group.is_abelian:
        raise ValueError(f"D_A is only computed for abelian groups; {group.descriptor} is not abelian")
    _check_weights(group, weights)
    auto = WindowAutomaton(group, weights)

    def successor(sigma: WindowState, g: int) -> WindowState | None:
        nxt = sigma | auto.step(sigma, g)
        return None if nxt & 1 else nxt

    return _search(group, weights, cfg, DAVENPORT, successor, lambda s: is_zero_sum_free(s, weights))


def compute_consecutive_unweighted(group: Group, cfg: SearchConfig | None = None) -> ConstantResult:
    """C(G) with A = {1} via prefix products.

    A sequence is free iff its prefix products ``1, q_1, q_2, ...`` are
    pairwise distinct, so the state is ``(visited prefixes, current
    prefix)``.  Length ``|G| - 1`` is an upper bound for free sequences.
    """
    cfg = cfg or SearchConfig()
    start = time.perf_counter()
    rows = group.rows
    m = group.order

    def successor(state: WindowState, g: int) -> WindowState | None:
        # low m bits: visited prefixes; bits above: current prefix index
        visited = (state & ((1 << m) - 1)) | 1
        q = rows[state >> m][g]
        if visited >> q & 1:
            return None
        return (visited | 1 << q) | (q << m)

    search = _LongestPath(successor, m, target=m - 1, max_length=cfg.max_length or m, max_states=cfg.max_states)
    stopped = False
    try:
        search.run(EMPTY)
    except _Stop:
        stopped = True
    best = search.best_path if stopped else tuple(search.chain(EMPTY))
    witness = OrderedSequence(group, best)
    if not is_free_unweighted_fast(witness):
        raise AssertionError("prefix search produced a non-free witness")
    elapsed = time.perf_counter() - start
    wdesc = unweighted(group.exponent).describe()
    if search.cap_hit or search.truncated:
        return ConstantResult(CONSECUTIVE, group.descriptor, wdesc, None, witness, search.expanded, elapsed,
                              False, len(best) + 1, search.cap_hit or "max_length")
    return ConstantResult(CONSECUTIVE, group.descriptor, wdesc, len(best) + 1, witness if best else None,
                          search.expanded, elapsed, True, len(best) + 1)


# ---------------------------------------------------------------------------
# Naive oracles
# ---------------------------------------------------------------------------


def _power_table_by_repetition(group: Group, weights: Iterable[int]) -> dict[tuple[int, int], int]:
    rows = group.rows
    out = {}
    for g in group.elements():
        for a in weights:
            acc = 0
            for _ in range(a):
                acc = rows[acc][g]
            out[g, a] = acc
    return out


def compute_consecutive_naive(group: Group, weights: WeightSet, max_len: int) -> ConstantResult:
    """C_A(G) by enumerating sequences in lexicographic order.

    Only free sequences are extended (a prefix of a free sequence is
    free), and each new window is checked against every weight vector.
    Independent of the window-state automaton.
    """
    start = time.perf_counter()
    desc, wdesc = group.descriptor, weights.describe()
    if group.order**max_len > NAIVE_BUDGET:
        return ConstantResult(CONSECUTIVE, desc, wdesc, None, None, 0, 0.0, False, 1, "budget")
    rows = group.rows
    ws = list(weights)
    powers = _power_table_by_repetition(group, ws)
    best: list[int] = []
    seq: list[int] = []
    visited = 0

    def new_windows_free() -> bool:
        j = len(seq)
        for i in range(j - 1, -1, -1):
            window = seq[i:]
            for vec in product(ws, repeat=len(window)):
                acc = 0
                for g, a in zip(window, vec):
                    acc = rows[acc][powers[g, a]]
                if acc == 0:
                    return False
        return True

    def extend() -> bool:
        nonlocal best, visited
        visited += 1
        if len(seq) > len(best):
            best = list(seq)
        if len(seq) == max_len:
            return True
        for g in group.elements():
            seq.append(g)
            if new_windows_free() and extend():
                return True
            seq.pop()
        return False

    hit_cap = extend()
    elapsed = time.perf_counter() - start
    witness = OrderedSequence(group, best) if best else None
    if hit_cap:
        return ConstantResult(CONSECUTIVE, desc, wdesc, None, witness, visited, elapsed, False, max_len + 1, "max_length")
    return ConstantResult(CONSECUTIVE, desc, wdesc, len(best) + 1, witness, visited, elapsed, True, len(best) + 1)


def compute_davenport_naive(group: Group, weights: WeightSet, max_len: int) -> ConstantResult:
    """D_A(G) by enumerating multisets and checking every subset and weight vector."""
    start = time.perf_counter()
    desc, wdesc = group.descriptor, weights.describe()
    if not group.is_abelian:
        raise ValueError(f"D_A is only computed for abelian groups; {group.descriptor} is not abelian")
    if math.comb(group.order + max_len - 1, max_len) > NAIVE_BUDGET:
        return ConstantResult(DAVENPORT, desc, wdesc, None, None, 0, 0.0, False, 1, "budget")
    rows = group.rows
    ws = list(weights)
    powers = _power_table_by_repetition(group, ws)

    def free(ms: tuple[int, ...]) -> bool:
        # only subsets containing the last element are new
        *head, last = ms
        for r in range(len(head) + 1):
            for sub in combinations(head, r):
                items = sub + (last,)
                for vec in product(ws, repeat=len(items)):
                    acc = 0
                    for g, a in zip(items, vec):
                        acc = rows[acc][powers[g, a]]
                    if acc == 0:
                        return False
        return True

    best: tuple[int, ...] = ()
    visited = 0
    frontier = [()]
    length = 0
    while frontier and length < max_len:
        nxt = []
        for ms in frontier:
            lo = ms[-1] if ms else 0
            for g in range(lo, group.order):
                cand = ms + (g,)
                visited += 1
                if free(cand):
                    nxt.append(cand)
        if not nxt:
            break
        frontier = nxt
        length += 1
        best = frontier[0]
    elapsed = time.perf_counter() - start
    witness = OrderedSequence(group, best) if best else None
    if frontier and length == max_len and best and len(best) == max_len:
        return ConstantResult(DAVENPORT, desc, wdesc, None, witness, visited, elapsed, False, max_len + 1, "max_length")
    return ConstantResult(DAVENPORT, desc, wdesc, len(best) + 1, witness, visited, elapsed, True, len(best) + 1)


# ---------------------------------------------------------------------------
# Verification and sweeps
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    """Result of checking a claimed constant value.

    ``verdict`` is ``PASS`` when a free sequence of length ``claimed - 1``
    exists and none of length ``claimed`` does.
    """

    group: str
    weights: str
    kind: str
    claimed: int
    verdict: str
    witness: OrderedSequence | None
    level_sizes: list[int] = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


def verify_value(
    group: Group,
    weights: WeightSet,
    claimed: int,
    *,
    kind: str = CONSECUTIVE,
    max_states: int = 5_000_000,
) -> VerifyReport:
    """Breadth-first search over deduplicated states, depth ``claimed``."""
    if claimed < 1:
        raise ValueError("claimed value must be at least 1")
    _check_weights(group, weights)
    auto = WindowAutomaton(group, weights)
    if kind == CONSECUTIVE:
        def successor(state, g):
            return auto.step(state, g)
        check = lambda s: is_free(s, weights)
    elif kind == DAVENPORT:
        if not group.is_abelian:
            raise ValueError(f"D_A is only computed for abelian groups; {group.descriptor} is not abelian")
        def successor(state, g):
            return state | auto.step(state, g)
        check = lambda s: is_zero_sum_free(s, weights)
    else:
        raise ValueError(f"unknown kind {kind!r}")

    # parents[d][state] = (state at depth d-1, letter)
    parents: list[dict[int, tuple[int, int]]] = [{EMPTY: (EMPTY, -1)}]
    sizes = [1]
    total = 1
    for depth in range(1, claimed + 1):
        level: dict[int, tuple[int, int]] = {}
        for state in parents[-1]:
            for g in group.elements():
                nxt = successor(state, g)
                if nxt & 1 or nxt in level:
                    continue
                level[nxt] = (state, g)
        parents.append(level)
        sizes.append(len(level))
        total += len(level)
        if not level or total > max_states:
            break

    def witness_at(depth: int) -> OrderedSequence | None:
        if depth >= len(parents) or not parents[depth]:
            return None
        state = min(parents[depth])
        letters = []
        for d in range(depth, 0, -1):
            state, g = parents[d][state]
            letters.append(g)
        return OrderedSequence(group, letters[::-1])

    desc, wdesc = group.descriptor, weights.describe()
    exists_below = claimed == 1 or witness_at(claimed - 1) is not None
    if total > max_states and len(parents) <= claimed:
        return VerifyReport(desc, wdesc, kind, claimed, "INCONCLUSIVE", witness_at(len(parents) - 1), sizes,
                            f"state cap {max_states} reached at depth {len(parents) - 1}")
    witness = witness_at(claimed - 1) if claimed > 1 else OrderedSequence(group)
    if witness is not None and not check(witness):
        raise AssertionError("BFS witness failed the freeness check")
    too_long = witness_at(claimed)
    if not exists_below:
        return VerifyReport(desc, wdesc, kind, claimed, "FAIL", None, sizes,
                            f"no free sequence of length {claimed - 1}")
    if too_long is not None:
        return VerifyReport(desc, wdesc, kind, claimed, "FAIL", too_long, sizes,
                            f"free sequence of length {claimed} exists: {too_long.text()}")
    return VerifyReport(desc, wdesc, kind, claimed, "PASS", witness, sizes, "")


@dataclass
class SweepRow:
    group: str
    order: int
    value: int | None
    verdict: str
    witness: OrderedSequence | None = None

    def csv_row(self) -> list:
        return [self.group, "{1}", "" if self.value is None else self.value, self.order, self.verdict]


def conjecture_sweep(groups: Iterable[Group], cfg: SearchConfig | None = None) -> list[SweepRow]:
    """Compare C(G) with |G| for each group, using the prefix-product search."""
    rows = []
    for group in groups:
        res = compute_consecutive_unweighted(group, cfg)
        if not res.conclusive:
            verdict = "INCONCLUSIVE"
        elif res.value == group.order:
            verdict = "EQUAL"
        else:
            verdict = "LESS" if res.value < group.order else "GREATER"
        rows.append(SweepRow(group.descriptor, group.order, res.value, verdict, res.witness))
    return rows
