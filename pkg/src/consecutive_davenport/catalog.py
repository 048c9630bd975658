"""Built-in group catalogs for sweeps and property checks."""

from __future__ import annotations

import math
from itertools import product

from sympy import divisors

from .descriptors import parse_group
from .groups import Group


def invariant_factor_chains(max_order: int) -> list[list[int]]:
    """All chains ``n_1 | n_2 | ... | n_r`` with ``n_1 > 1`` and product at most ``max_order``."""
    out: list[list[int]] = []

    def grow(chain: list[int], order: int) -> None:
        out.append(list(chain))
        last = chain[-1]
        for nxt in range(last, max_order // order + 1, last):
            grow(chain + [nxt], order * nxt)

    for first in range(2, max_order + 1):
        grow([first], first)
    return sorted(out, key=lambda c: (math.prod(c), len(c), c))


def metacyclic_parameters(max_order: int) -> list[tuple[int, int, int, int]]:
    """Valid ``(n, k, l, s)`` with ``n, k >= 2``, ``nk <= max_order``, ``1 <= s < n`` and ``l | n``."""
    out = []
    for n in range(2, max_order // 2 + 1):
        for k in range(2, max_order // n + 1):
            for s, l in product(range(1, n), divisors(n)):
                if (s**k - 1) % n == 0 and (l * (s - 1)) % n == 0:
                    out.append((n, k, l, s))
    return out


def cyclic_catalog(max_order: int = 16) -> list[str]:
    return [f"C{n}" for n in range(2, max_order + 1)]


def abelian_catalog(max_order: int = 24) -> list[str]:
    return ["A[" + ",".join(map(str, c)) + "]" for c in invariant_factor_chains(max_order)]


def metacyclic_catalog(max_order: int = 16) -> list[str]:
    return [f"M({n},{k},{l},{s})" for n, k, l, s in metacyclic_parameters(max_order)]


PRODUCT_FACTORS_H = ["C2", "C3", "C4", "A[2,2]"]
PRODUCT_FACTORS_K = ["S3", "D4", "Q8", "D5", "D6", "M(3,4,3,2)"]


def product_catalog(max_order: int = 24) -> list[str]:
    out = []
    for h, k in product(PRODUCT_FACTORS_H, PRODUCT_FACTORS_K):
        desc = f"P({h},{k})"
        if parse_group(desc).order <= max_order:
            out.append(desc)
    return out


def sweep_catalog() -> list[str]:
    """Cyclic up to 16, abelian up to 24, metacyclic up to 16, products up to 24."""
    seen: set[str] = set()
    out = []
    for desc in cyclic_catalog() + abelian_catalog() + metacyclic_catalog() + product_catalog():
        if desc not in seen:
            seen.add(desc)
            out.append(desc)
    return out


SMALL_GROUPS = ["C1", "C2", "C3", "C4", "A[2,2]", "C5", "C6", "S3", "C7", "C8", "A[2,4]", "A[2,2,2]", "D4", "Q8"]
"""One representative of every isomorphism class of order at most 8."""


def load(descriptors: list[str]) -> list[Group]:
    return [parse_group(d) for d in descriptors]
