"""Weight sets ``A`` of integer exponents used in weighted products."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from sympy import isprime


class WeightError(ValueError):
    """Raised when a weight set is empty, out of range or violates its constructor's hypotheses."""


@dataclass(frozen=True)
class WeightSet:
    """A nonempty set of weights validated against ``modulus`` (the group exponent).

    ``name`` is the constructor tag and ``params`` its arguments, kept so the
    set prints back in its descriptor form (``full``, ``U^2(5)``, ...).
    ``revalidated`` marks a set moved onto another modulus by
    :func:`revalidate`; such sets may hold weights at or above the modulus.
    """

    weights: tuple[int, ...]
    modulus: int
    name: str = "explicit"
    params: tuple[int, ...] = ()
    revalidated: bool = False

    def __post_init__(self) -> None:
        if not self.weights:
            raise WeightError("weight set must be nonempty")
        if list(self.weights) != sorted(set(self.weights)):
            raise WeightError("weights must be sorted and distinct")
        hi = math.inf if self.revalidated else self.modulus - 1
        for a in self.weights:
            if not 1 <= a <= hi:
                raise WeightError(f"weight {a} outside [1, {self.modulus - 1}]")

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __contains__(self, a: object) -> bool:
        return a in self.weights

    def issubset(self, other: "WeightSet") -> bool:
        return set(self.weights) <= set(other.weights)

    @property
    def is_unweighted(self) -> bool:
        return self.weights == (1,)

    def describe(self) -> str:
        """Descriptor text, parseable by :func:`consecutive_davenport.descriptors.parse_weights`."""
        if self.name == "full":
            return "full"
        if self.name == "powers":
            p, nu = self.params
            return f"U^{nu}({p})"
        if self.name == "nonsquares":
            return f"U-U2({self.params[0]})"
        if self.name == "punctured":
            d, k, n = self.params
            return f"punct({d},{k},{n})"
        return "{" + ",".join(map(str, self.weights)) + "}"

    def key(self) -> str:
        """Stable cache key: descriptor plus the explicit weights and modulus."""
        return f"{self.describe()}={{{','.join(map(str, self.weights))}}}@{self.modulus}"

    def __str__(self) -> str:
        return self.describe()


def full_weight(m: int) -> WeightSet:
    """``A = [1, m - 1]``."""
    if m <= 1:
        raise WeightError(f"full weight needs modulus >= 2, got {m}")
    return WeightSet(tuple(range(1, m)), m, "full")


def unit_powers(p: int, nu: int) -> WeightSet:
    """The ``nu``-th power residues ``U(p)^nu`` modulo a prime ``p``."""
    if not isprime(p):
        raise WeightError(f"{p} is not prime")
    if nu < 1:
        raise WeightError(f"power must be positive, got {nu}")
    return WeightSet(tuple(sorted({pow(x, nu, p) for x in range(1, p)})), p, "powers", (p, nu))


def unit_nonsquares(p: int) -> WeightSet:
    """``U(p) \\ U(p)^2`` for an odd prime ``p``."""
    if not isprime(p):
        raise WeightError(f"{p} is not prime")
    if p == 2:
        raise WeightError("non-squares need an odd prime; U(2) has no non-squares")
    squares = set(unit_powers(p, 2).weights)
    return WeightSet(tuple(a for a in range(1, p) if a not in squares), p, "nonsquares", (p,))


def punctured_set(d: int, k: int, n: int) -> WeightSet:
    """``[1, d^k n - 1]`` minus ``{d^(k-i) n : 1 <= i <= k}``, modulus ``d^k n``."""
    if min(d, k, n) < 1:
        raise WeightError(f"punctured set parameters must be positive, got {(d, k, n)}")
    m = d**k * n
    if math.gcd(d, n) > d - 1:
        raise WeightError(f"hypothesis gcd(d, n) <= d - 1 fails: gcd({d}, {n}) = {math.gcd(d, n)}")
    if m < 6:
        raise WeightError(f"hypothesis d^k n >= 6 fails: d^k n = {m}")
    removed = {d ** (k - i) * n for i in range(1, k + 1)}
    return WeightSet(tuple(a for a in range(1, m) if a not in removed), m, "punctured", (d, k, n))


def explicit_set(values: Iterable[int], m: int) -> WeightSet:
    """Deduplicated sorted weights from ``values``, each required to lie in ``[1, m - 1]``."""
    vals = list(values)
    if not vals:
        raise WeightError("weight set must be nonempty")
    for a in vals:
        if not 1 <= a <= m - 1:
            raise WeightError(f"weight {a} outside [1, {m - 1}]")
    return WeightSet(tuple(sorted(set(vals))), m)


def unweighted(m: int) -> WeightSet:
    """``A = {1}``; valid for every modulus, including the trivial group's."""
    return WeightSet((1,), max(m, 2))


def revalidate(weights: WeightSet, m: int) -> WeightSet:
    """Rebind ``weights`` to modulus ``m`` without reducing them.

    Weights at or above ``m`` are kept: they act through ordinary powering,
    so ``g^a`` with ``a`` a multiple of ``ord(g)`` is simply the identity.
    """
    if m < 1:
        raise WeightError(f"modulus must be positive, got {m}")
    if weights.modulus == m and not weights.revalidated:
        return weights
    return WeightSet(weights.weights, m, weights.name, weights.params, revalidated=True)
