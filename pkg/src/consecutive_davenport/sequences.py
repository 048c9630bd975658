"""Ordered sequences and the window-product automaton.

A *window state* is the set of all weighted products of consecutive
windows ending at the current position, stored as a Python ``int`` bit
mask: bit ``i`` is set iff element ``i`` is in the set.  Because the
identity has index 0, "the identity is a window product" is the probe
``state & 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .groups import Group
from .weights import WeightSet

WindowState = int
PowTable = tuple[tuple[int, ...], ...]

EMPTY: WindowState = 0


@dataclass(frozen=True)
class OrderedSequence:
    """A word ``g_1 g_2 ... g_k`` over ``group`` (element indices)."""

    group: Group
    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(int(g) for g in self.elements))
        m = self.group.order
        for g in self.elements:
            if not 0 <= g < m:
                raise ValueError(f"element index {g} out of range for {self.group.descriptor}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __add__(self, other: "OrderedSequence") -> "OrderedSequence":
        if other.group != self.group:
            raise ValueError("cannot concatenate sequences over different groups")
        return OrderedSequence(self.group, self.elements + other.elements)

    def repeat(self, times: int) -> "OrderedSequence":
        """``S^[times]``: ``times`` copies of the word in order."""
        return OrderedSequence(self.group, self.elements * times)

    def append(self, g: int) -> "OrderedSequence":
        return OrderedSequence(self.group, self.elements + (g,))

    def product(self) -> int:
        """Ordered product; the empty word has product 1."""
        rows = self.group.rows
        acc = 0
        for g in self.elements:
            acc = rows[acc][g]
        return acc

    def text(self) -> str:
        return ",".join(self.group.labels[g] for g in self.elements)

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Certificate:
    """A product-one window ``g_start^a_start ... g_end^a_end = 1`` (1-based, inclusive)."""

    start: int
    end: int
    weights: tuple[int, ...]


def weighted_powers(group: Group, weights: WeightSet | Iterable[int]) -> PowTable:
    """``table[g]`` = sorted distinct values of ``g^a`` for ``a`` in the weight set."""
    ws = tuple(weights)
    return tuple(tuple(sorted({group.pow(g, a) for a in ws})) for g in group.elements())


def step(group: Group, state: WindowState, g: int, pow_table: PowTable) -> WindowState:
    """Window products ending at a newly appended ``g``.

    Returns ``{p * w : p in state + {1}, w in pow_table[g]}``.  The identity
    may be in the result; callers decide what that means.
    """
    rows = group.rows
    out = 0
    for p in members(state | 1):
        row = rows[p]
        for w in pow_table[g]:
            out |= 1 << row[w]
    return out


def members(state: WindowState) -> list[int]:
    out = []
    while state:
        low = state & -state
        out.append(low.bit_length() - 1)
        state ^= low
    return out


def from_members(elements: Iterable[int]) -> WindowState:
    state = 0
    for g in elements:
        state |= 1 << g
    return state


class WindowAutomaton:
    """Cached transition function of the window-state automaton for ``(group, weights)``.

    ``masks(g)[p]`` is the bit mask of ``p * g^A``, built on first use, so
    a transition costs one OR per member of the current state.
    """

    def __init__(self, group: Group, weights: WeightSet | Iterable[int]):
        self.group = group
        self.weights = weights
        self.pow_table = weighted_powers(group, weights)
        self._masks: list[list[int] | None] = [None] * group.order

    def masks(self, g: int) -> list[int]:
        col = self._masks[g]
        if col is None:
            ws = self.pow_table[g]
            col = [from_members(row[w] for w in ws) for row in self.group.rows]
            self._masks[g] = col
        return col

    def step(self, state: WindowState, g: int) -> WindowState:
        col = self.masks(g)
        out = col[0]
        while state:
            low = state & -state
            out |= col[low.bit_length() - 1]
            state ^= low
        return out

    def run(self, elements: Iterable[int]) -> Iterator[WindowState]:
        """Yield the state after each position."""
        state = EMPTY
        for g in elements:
            state = self.step(state, g)
            yield state


def _check_group(seq: OrderedSequence, weights: WeightSet | Iterable[int]) -> None:
    if isinstance(weights, WeightSet) and not (
        weights.modulus == seq.group.exponent or weights.revalidated or weights.is_unweighted
    ):
        raise ValueError(
            f"weight set {weights} was validated for modulus {weights.modulus}, "
            f"but exp({seq.group.descriptor}) = {seq.group.exponent}; use revalidate()"
        )


def product_one_certificate(seq: OrderedSequence, weights: WeightSet | Iterable[int]) -> Certificate | None:
    """A product-one weighted window of ``seq``, or ``None`` if ``seq`` is free.

    The window is the shortest one ending at the first position whose
    window state contains the identity; its weights are the
    lexicographically least that work.
    """
    _check_group(seq, weights)
    auto = WindowAutomaton(seq.group, weights)
    end = None
    for j, state in enumerate(auto.run(seq.elements)):
        if state & 1:
            end = j
            break
    if end is None:
        return None
    group, rows = seq.group, seq.group.rows
    ws = sorted(set(weights))
    # suffix[t] = set of products g_t^a_t ... g_end^a_end
    suffix: dict[int, set[int]] = {end + 1: {0}}
    start = None
    for t in range(end, -1, -1):
        pw = {group.pow(seq[t], a) for a in ws}
        suffix[t] = {rows[w][x] for w in pw for x in suffix[t + 1]}
        if 0 in suffix[t]:
            start = t
            break
    assert start is not None
    target, chosen = 0, []
    for t in range(start, end + 1):
        for a in ws:
            w = group.pow(seq[t], a)
            rest = group.mul(group.inv(w), target)
            if rest in suffix[t + 1]:
                chosen.append(a)
                target = rest
                break
    return Certificate(start + 1, end + 1, tuple(chosen))


def is_free(seq: OrderedSequence, weights: WeightSet | Iterable[int]) -> bool:
    """True iff no nonempty consecutive window has a weighted product equal to 1."""
    _check_group(seq, weights)
    auto = WindowAutomaton(seq.group, weights)
    return not any(state & 1 for state in auto.run(seq.elements))


def pi_a(seq: OrderedSequence, weights: WeightSet | Iterable[int]) -> frozenset[int]:
    """All weighted products of nonempty consecutive windows."""
    _check_group(seq, weights)
    auto = WindowAutomaton(seq.group, weights)
    acc = 0
    for state in auto.run(seq.elements):
        acc |= state
    return frozenset(members(acc))


def pi_a_bullet(seq: OrderedSequence, weights: WeightSet | Iterable[int]) -> frozenset[int]:
    return pi_a(seq, weights) | {seq.group.identity}


def is_free_unweighted_fast(seq: OrderedSequence, weights: WeightSet | Iterable[int] | None = None) -> bool:
    """Unweighted freeness via prefix products: free iff ``1, q_1, ..., q_k`` are pairwise distinct."""
    if weights is not None and tuple(weights) != (1,):
        raise ValueError(f"the prefix-product test only applies to A = {{1}}, got {tuple(weights)}")
    rows = seq.group.rows
    seen = {0}
    q = 0
    for g in seq.elements:
        q = rows[q][g]
        if q in seen:
            return False
        seen.add(q)
    return True
