"""Explicit free sequences certifying lower bounds on C_A(G).

Each builder returns an :class:`OrderedSequence` and the tests re-check
freeness instead of trusting the construction.
"""

from __future__ import annotations

import numpy as np

from .groups import Group, MetacyclicParams, abelian, cyclic, direct_product, metacyclic
from .sequences import OrderedSequence, is_free
from .weights import WeightSet, revalidate, unweighted

# Free sequences of length 2 over C_p (C_A(C_p) = 3), found by exhaustive
# search and frozen.  Keys: (family, p); values: element indices.
RANK_ONE_WITNESSES: dict[tuple[str, int], tuple[int, ...]] = {
    ("squares", 3): (1, 1), ("nonsquares", 3): (1, 1),
    ("squares", 5): (1, 2), ("nonsquares", 5): (1, 2),
    ("squares", 7): (1, 1), ("nonsquares", 7): (1, 1),
    ("squares", 11): (1, 1), ("nonsquares", 11): (1, 1),
    ("squares", 13): (1, 2), ("nonsquares", 13): (1, 2), ("cubes", 13): (1, 2),
    ("squares", 17): (1, 3), ("nonsquares", 17): (1, 3),
    ("squares", 19): (1, 1), ("nonsquares", 19): (1, 1), ("cubes", 19): (1, 2),
    ("squares", 23): (1, 1), ("nonsquares", 23): (1, 1),
    ("squares", 29): (1, 2), ("nonsquares", 29): (1, 2),
    ("squares", 31): (1, 1), ("nonsquares", 31): (1, 1), ("cubes", 31): (1, 3),
    ("squares", 37): (1, 2), ("nonsquares", 37): (1, 2), ("cubes", 37): (1, 2),
    ("squares", 41): (1, 3), ("nonsquares", 41): (1, 3),
    ("squares", 43): (1, 1), ("nonsquares", 43): (1, 1), ("cubes", 43): (1, 3),
}


def cyclic_free(n: int) -> OrderedSequence:
    """``g^[n-1]`` over C_n for the generator ``g = 1``."""
    if n < 2:
        raise ValueError(f"cyclic_free needs n >= 2, got {n}")
    return OrderedSequence(cyclic(n), (1,) * (n - 1))


def metacyclic_free(params: MetacyclicParams | Group | tuple[int, int, int, int]) -> OrderedSequence:
    """``(y^[n-1] x)^[k-1] y^[n-1]``, length ``nk - 1``, over the metacyclic group."""
    if isinstance(params, Group):
        group = params
        if group.metacyclic is None:
            raise ValueError(f"{group.descriptor} was not built from metacyclic parameters")
        p = group.metacyclic
    else:
        p = params if isinstance(params, MetacyclicParams) else MetacyclicParams(*params)
        group = metacyclic(p)
    y = 1 if p.n > 1 else 0  # index of x^0 y^1
    x = p.n  # index of x^1 y^0
    block = (y,) * (p.n - 1)
    return OrderedSequence(group, (block + (x,)) * (p.k - 1) + block)


def product_interleave(
    s1: OrderedSequence,
    s2: OrderedSequence,
    weights: WeightSet | None = None,
    *,
    product: Group | None = None,
) -> OrderedSequence:
    """Lift ``s1`` over H and ``s2`` over K into a free sequence over H x K.

    Returns ``S1' (1,g_1) S1' (1,g_2) ... (1,g_t) S1'`` where ``S1'`` is
    ``s1`` lifted to ``(h, 1)`` entries; the length is
    ``(|s1| + 1)(|s2| + 1) - 1``.
    """
    h, k = s1.group, s2.group
    weights = weights or unweighted(max(h.exponent, k.exponent))
    if not weights.is_unweighted and h.exponent != k.exponent:
        raise ValueError(
            f"interleaving with weights {weights} needs exp(H) = exp(K), got {h.exponent} and {k.exponent}"
        )
    for s in (s1, s2):
        if not is_free(s, revalidate(weights, s.group.exponent)):
            raise ValueError(f"input sequence {s.text()} over {s.group.descriptor} is not free for {weights}")
    g = product or direct_product(h, k)
    if g.factors:
        if g.factors[0].order != h.order or g.factors[1].order != k.order:
            raise ValueError(f"{g.descriptor} is not a product of {h.descriptor} and {k.descriptor}")
    elif not _same_table(g, direct_product(h, k)):
        raise ValueError(f"{g.descriptor} does not share the H x K index layout")
    # indices (h, k) -> h*|K| + k hold for both direct_product and abelian tables
    lifted = tuple(h_el * k.order for h_el in s1.elements)
    out: list[int] = list(lifted)
    for k_el in s2.elements:
        out.append(k_el)
        out.extend(lifted)
    return OrderedSequence(g, out)


def _family(weights: WeightSet) -> tuple[str, int]:
    if weights.name == "full":
        return "full", weights.modulus
    if weights.name == "powers" and weights.params[1] in (2, 3):
        p, nu = weights.params
        return ("squares" if nu == 2 else "cubes"), p
    if weights.name == "nonsquares":
        return "nonsquares", weights.params[0]
    raise ValueError(f"rank_power_free supports full, U^2(p), U-U2(p) and U^3(p) weights, got {weights}")


def _rank_one(weights: WeightSet) -> tuple[int, ...]:
    family, p = _family(weights)
    if family == "full":
        return (1,)
    if (family, p) in RANK_ONE_WITNESSES:
        return RANK_ONE_WITNESSES[family, p]
    from .solver import compute_consecutive

    res = compute_consecutive(cyclic(p), weights)
    if res.value != 3:
        raise ValueError(f"C_A(C_{p}) = {res.value} for {weights}, so there is no length-2 base witness")
    return res.witness.elements


def rank_power_free(n: int, r: int, weights: WeightSet) -> OrderedSequence:
    """Free sequence of length ``b^r - 1`` over ``C_n^r`` (``b = 2`` for full weight, else 3).

    Built by repeatedly interleaving the rank-``(r-1)`` sequence with the
    rank-1 one, following ``C_n^r = C_n^(r-1) x C_n``.
    """
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    if weights.modulus != n:
        raise ValueError(f"weights {weights} have modulus {weights.modulus}, expected {n}")
    base = _rank_one(weights)
    seq = OrderedSequence(abelian([n]), base)
    one = seq
    for rank in range(2, r + 1):
        target = abelian([n] * rank)
        seq = product_interleave(seq, one, weights, product=target)
    return seq


def extremal_free(group: Group, weights: WeightSet | None = None) -> OrderedSequence:
    """The construction matching ``group``'s descriptor.

    Unweighted: cyclic and metacyclic groups directly, abelian groups and
    direct products by interleaving.  Weighted: ``C_n^r`` with a
    supported weight family.
    """
    weights = weights or unweighted(group.exponent)
    if not weights.is_unweighted:
        factors = _abelian_factors(group)
        if factors is None or len(set(factors)) != 1:
            raise ValueError(f"weighted constructions need a group C_n^r, got {group.descriptor}")
        seq = rank_power_free(factors[0], len(factors), weights)
        return OrderedSequence(group, seq.elements)
    if group.metacyclic is not None:
        return metacyclic_free(group)
    if group.descriptor.startswith("C"):
        return OrderedSequence(group, (1,) * (group.order - 1))
    factors = _abelian_factors(group)
    if factors is not None:
        seq = OrderedSequence(abelian(factors[:1]), (1,) * (factors[0] - 1))
        for i in range(1, len(factors)):
            k = OrderedSequence(cyclic(factors[i]), (1,) * (factors[i] - 1))
            seq = product_interleave(seq, k, product=abelian(factors[: i + 1]))
        return OrderedSequence(group, seq.elements)
    if group.factors:
        h, k = group.factors
        return product_interleave(extremal_free(h), extremal_free(k), product=group)
    raise ValueError(f"no construction for {group.descriptor}")


def _abelian_factors(group: Group) -> list[int] | None:
    d = group.descriptor
    if d.startswith("A[") and d.endswith("]"):
        return [int(v) for v in d[2:-1].split(",")]
    if d.startswith("C") and d[1:].isdigit() and int(d[1:]) > 1:
        return [int(d[1:])]
    return None


def _same_table(a: Group, b: Group) -> bool:
    return bool(np.array_equal(a.table, b.table))
