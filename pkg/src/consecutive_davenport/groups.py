"""Finite groups as dense Cayley tables with 0-based element indices.

Every group built here has the identity at index 0, a full multiplication
table ``table[a, b] = a * b`` and precomputed element orders.  Groups are
immutable once built and carry a canonical text descriptor (see
:mod:`consecutive_davenport.descriptors`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Sequence

import numpy as np

DEFAULT_ORDER_CAP = 4096
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64


class GroupError(ValueError):
    """Raised for invalid group parameters or malformed tables."""


@dataclass(frozen=True)
class MetacyclicParams:
    """Parameters of ``<x, y | y^n = 1, x^k = y^l, yx = xy^s>``."""

    n: int
    k: int
    l: int
    s: int

    def validate(self) -> None:
        for name in ("n", "k", "l", "s"):
            if getattr(self, name) < 1:
                raise GroupError(f"metacyclic parameter {name} must be positive, got {getattr(self, name)}")
        n, k, l, s = self.n, self.k, self.l, self.s
        if (s**k - 1) % n:
            raise GroupError(f"invalid metacyclic parameters {self}: n={n} does not divide s^k - 1 = {s**k - 1}")
        if (l * (s - 1)) % n:
            raise GroupError(f"invalid metacyclic parameters {self}: n={n} does not divide l(s - 1) = {l * (s - 1)}")

    @property
    def order(self) -> int:
        return self.n * self.k


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its Cayley table.

    ``labels[i]`` is the printable name of element ``i``; ``descriptor`` is
    the canonical text form the group was built from.  Equality is
    descriptor equality, no isomorphism testing is attempted.
    """

    descriptor: str
    table: np.ndarray
    labels: tuple[str, ...]
    factors: tuple["Group", ...] = field(default=(), repr=False)
    metacyclic: MetacyclicParams | None = field(default=None, repr=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and other.descriptor == self.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"Group({self.descriptor!r}, order={self.order})"

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists; faster than numpy for scalar lookups."""
        return self.table.tolist()

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = np.argmin(self.table, axis=1)  # identity is index 0, the unique zero per row
        return tuple(int(v) for v in inv)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        rows = self.rows
        orders = []
        for g in self.elements():
            x, m = g, 1
            while x != 0:
                x = rows[x][g]
                m += 1
            orders.append(m)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, self.element_orders, 1)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def order_profile(self) -> dict[int, int]:
        """Map element order -> number of elements of that order."""
        profile: dict[int, int] = {}
        for o in self.element_orders:
            profile[o] = profile.get(o, 0) + 1
        return dict(sorted(profile.items()))

    def mul(self, a: int, b: int) -> int:
        assert 0 <= a < self.order and 0 <= b < self.order, (a, b)
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        assert 0 <= a < self.order, a
        return self.inverses[a]

    def pow(self, a: int, e: int) -> int:
        """``a**e`` by square-and-multiply over the table; negative ``e`` inverts first."""
        assert 0 <= a < self.order, a
        if e < 0:
            a, e = self.inverses[a], -e
        rows = self.rows
        result, base = 0, a
        while e:
            if e & 1:
                result = rows[result][base]
            base = rows[base][base]
            e >>= 1
        return result

    def order_of(self, a: int) -> int:
        assert 0 <= a < self.order, a
        return self.element_orders[a]

    def index(self, label: str) -> int:
        """Element index for a printed label."""
        try:
            return self._label_index[label]
        except KeyError:
            raise GroupError(f"{label!r} is not an element of {self.descriptor}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def check_table(table: np.ndarray, *, seed: int = 0) -> None:
    """Raise :class:`GroupError` unless ``table`` is a group table with identity 0."""
    m = table.shape[0]
    if table.shape != (m, m) or m == 0:
        raise GroupError(f"table must be square and nonempty, got shape {table.shape}")
    ids = np.arange(m)
    if not (np.array_equal(table[0], ids) and np.array_equal(table[:, 0], ids)):
        raise GroupError("index 0 does not act as the identity")
    target = np.broadcast_to(ids, (m, m))
    if not (np.array_equal(np.sort(table, axis=1), target) and np.array_equal(np.sort(table, axis=0), target.T)):
        raise GroupError("table is not a Latin square")
    if m <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        left = table[table]  # left[a, b, c] = (ab) c
        right = table[:, table]  # right[a, b, c] = a (bc)
        ok = np.array_equal(left, right)
    else:
        rng = np.random.default_rng(seed)
        count = 10 * m * m
        a, b, c = rng.integers(0, m, size=(3, count))
        ok = np.array_equal(table[table[a, b], c], table[a, table[b, c]])
    if not ok:
        raise GroupError("table is not associative")


def _make(descriptor: str, table: np.ndarray, labels: Sequence[str], order_cap: int, **extra) -> Group:
    if table.shape[0] > order_cap:
        raise GroupError(f"group {descriptor} has order {table.shape[0]} above the cap {order_cap}")
    table = np.ascontiguousarray(table, dtype=np.int64)
    check_table(table)
    table.setflags(write=False)
    return Group(descriptor, table, tuple(labels), **extra)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def cyclic(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    """The cyclic group C_n, element ``i`` standing for ``g^i``."""
    if n < 1:
        raise GroupError(f"cyclic group order must be positive, got {n}")
    if n > order_cap:
        raise GroupError(f"group C{n} has order {n} above the cap {order_cap}")
    ids = np.arange(n)
    table = (ids[:, None] + ids[None, :]) % n
    return _make(f"C{n}", table, [str(i) for i in range(n)], order_cap)


def _product_table(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    m1, m2 = t1.shape[0], t2.shape[0]
    # index (h, k) -> h * m2 + k
    return (t1[:, None, :, None] * m2 + t2[None, :, None, :]).reshape(m1 * m2, m1 * m2)


def _tuple_labels(labels: Sequence[Sequence[str]]) -> list[str]:
    out = [""]
    for i, labs in enumerate(labels):
        out = [f"{p}|{q}" if i else q for p in out for q in labs]
    return [f"({s})" for s in out]


def abelian(invariant_factors: Sequence[int], *, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    """``C_{n_1} x ... x C_{n_r}`` with ``n_1 | n_2 | ... | n_r``.

    Elements are tuples with the last coordinate varying fastest; labels
    look like ``(a|b|c)``.
    """
    factors = [int(v) for v in invariant_factors]
    if not factors:
        raise GroupError("abelian group needs at least one invariant factor")
    for v in factors:
        if v <= 1:
            raise GroupError(f"invariant factors must exceed 1, got {v}")
    for a, b in zip(factors, factors[1:]):
        if b % a:
            raise GroupError(f"invariant factors must form a divisibility chain: {a} does not divide {b}")
    order = math.prod(factors)
    if order > order_cap:
        raise GroupError(f"group of order {order} above the cap {order_cap}")
    table = np.zeros((1, 1), dtype=np.int64)
    for v in factors:
        table = _product_table(table, cyclic(v).table)
    labels = _tuple_labels([[str(i) for i in range(v)] for v in factors])
    desc = "A[" + ",".join(map(str, factors)) + "]"
    return _make(desc, table, labels, order_cap)


def _metacyclic_label(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "1"
    xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
    ys = "" if b == 0 else ("y" if b == 1 else f"y^{b}")
    return xs + ys


def metacyclic(
    params: MetacyclicParams | tuple[int, int, int, int],
    *,
    descriptor: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> Group:
    """Metacyclic group on normal forms ``x^a y^b`` (index ``a*n + b``).

    Multiplication: ``(x^a y^b)(x^c y^d) = x^((a+c) mod k) y^((l*floor((a+c)/k) + b*s^c + d) mod n)``.
    """
    p = params if isinstance(params, MetacyclicParams) else MetacyclicParams(*params)
    p.validate()
    n, k, l, s = p.n, p.k, p.l, p.s
    if n * k > order_cap:
        raise GroupError(f"metacyclic group of order {n * k} above the cap {order_cap}")
    a = np.repeat(np.arange(k), n)
    b = np.tile(np.arange(n), k)
    spow = np.array([pow(s, c, n) for c in range(k)], dtype=np.int64)
    A, C = a[:, None], a[None, :]
    B, D = b[:, None], b[None, :]
    total = A + C
    new_a = total % k
    new_b = (l * (total // k) + B * spow[C] + D) % n
    table = new_a * n + new_b
    labels = [_metacyclic_label(int(i), int(j)) for i, j in zip(a, b)]
    return _make(descriptor or f"M({n},{k},{l},{s})", table, labels, order_cap, metacyclic=p)


def dihedral(m: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Dihedral group of order ``2m`` as ``M(m, 2, m, m-1)``."""
    if m < 2:
        raise GroupError(f"dihedral D<m> needs m >= 2, got {m}")
    return metacyclic(MetacyclicParams(m, 2, m, m - 1), descriptor=f"D{m}", order_cap=order_cap)


def quaternion8() -> Group:
    return metacyclic(MetacyclicParams(4, 2, 2, 3), descriptor="Q8")


def symmetric3() -> Group:
    return metacyclic(MetacyclicParams(3, 2, 3, 2), descriptor="S3")


def direct_product(h: Group, k: Group, *, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    """``H x K`` with element ``(h, k)`` at index ``h*|K| + k``."""
    order = h.order * k.order
    if order > order_cap:
        raise GroupError(f"direct product of order {order} above the cap {order_cap}")
    table = _product_table(h.table, k.table)
    labels = [f"({p}|{q})" for p in h.labels for q in k.labels]
    return _make(f"P({h.descriptor},{k.descriptor})", table, labels, order_cap, factors=(h, k))


def embed_left(g: Group, h_elem: int) -> int:
    """Index of ``(h, 1)`` in a direct product built by :func:`direct_product`."""
    _, k = g.factors
    return h_elem * k.order


def embed_right(g: Group, k_elem: int) -> int:
    """Index of ``(1, k)`` in a direct product."""
    return k_elem
