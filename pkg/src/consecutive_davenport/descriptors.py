"""Text forms for groups, weight sets and sequences.

Groups::

    C<n>            cyclic
    A[n1,n2,...]    abelian, invariant factors n1 | n2 | ...
    M(n,k,l,s)      metacyclic <x, y | y^n, x^k = y^l, yx = xy^s>
    P(desc,desc)    direct product
    D<m>, Q8, S3    dihedral of order 2m, quaternion, symmetric

Weights: ``full``, ``{a,b,c}``, ``U^v(p)``, ``U-U2(p)``, ``punct(d,k,n)``.

Sequences: comma-separated elements.  Cyclic elements are integers,
metacyclic ones words like ``1``, ``x``, ``y^3``, ``xy^2``, and elements of
abelian or product groups are tuples ``(a|b)``.
"""

from __future__ import annotations

import re

from . import groups as g
from .groups import Group, GroupError
from .sequences import OrderedSequence
from .weights import WeightError, WeightSet, explicit_set, full_weight, punctured_set, revalidate, unit_nonsquares, unit_powers


class DescriptorError(ValueError):
    """Malformed descriptor; carries the offending position and what was expected."""

    def __init__(self, text: str, pos: int, expected: str, reason: str = ""):
        self.text, self.pos, self.expected = text, pos, expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        msg = f"{text!r}, position {pos}: expected {expected}, found {found}"
        if reason:
            msg = f"{text!r}, position {pos}: {reason}"
        super().__init__(msg)


class _Cursor:
    def __init__(self, text: str):
        self.text = re.sub(r"\s+", "", text)
        self.pos = 0

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def take(self, s: str) -> None:
        if not self.peek(s):
            raise DescriptorError(self.text, self.pos, repr(s))
        self.pos += len(s)

    def integer(self) -> int:
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise DescriptorError(self.text, self.pos, "an integer")
        self.pos = m.end()
        return int(m.group())

    def integers(self, open_: str, close: str) -> list[int]:
        self.take(open_)
        out = [self.integer()]
        while self.peek(","):
            self.take(",")
            out.append(self.integer())
        self.take(close)
        return out

    def end(self) -> None:
        if self.pos != len(self.text):
            raise DescriptorError(self.text, self.pos, "end of input")


def _group(cur: _Cursor, order_cap: int) -> Group:
    start = cur.pos
    try:
        if cur.peek("Q8"):
            cur.take("Q8")
            return g.quaternion8()
        if cur.peek("S3"):
            cur.take("S3")
            return g.symmetric3()
        if cur.peek("C"):
            cur.take("C")
            return g.cyclic(cur.integer(), order_cap=order_cap)
        if cur.peek("D"):
            cur.take("D")
            return g.dihedral(cur.integer(), order_cap=order_cap)
        if cur.peek("A"):
            cur.take("A")
            return g.abelian(cur.integers("[", "]"), order_cap=order_cap)
        if cur.peek("M"):
            cur.take("M")
            vals = cur.integers("(", ")")
            if len(vals) != 4:
                raise DescriptorError(cur.text, start, "M(n,k,l,s)", f"M(...) takes 4 parameters, got {len(vals)}")
            return g.metacyclic(tuple(vals), order_cap=order_cap)
        if cur.peek("P"):
            cur.take("P")
            cur.take("(")
            h = _group(cur, order_cap)
            cur.take(",")
            k = _group(cur, order_cap)
            cur.take(")")
            return g.direct_product(h, k, order_cap=order_cap)
    except GroupError as exc:
        raise DescriptorError(cur.text, start, "a valid group", str(exc)) from None
    raise DescriptorError(cur.text, cur.pos, "one of C, A, M, P, D, Q8, S3")


def parse_group(text: str, *, order_cap: int = g.DEFAULT_ORDER_CAP) -> Group:
    cur = _Cursor(text)
    group = _group(cur, order_cap)
    cur.end()
    return group


def canonical_group(text: str) -> str:
    return parse_group(text).descriptor


def parse_weights(text: str, m: int) -> WeightSet:
    """Weight set for a group of exponent ``m``."""
    cur = _Cursor(text)
    start = 0
    try:
        if cur.peek("full"):
            cur.take("full")
            ws = full_weight(m)
        elif cur.peek("{"):
            ws = explicit_set(cur.integers("{", "}"), m)
        elif cur.peek("U-U2"):
            cur.take("U-U2")
            ws = unit_nonsquares(*cur.integers("(", ")"))
        elif cur.peek("U^"):
            cur.take("U^")
            nu = cur.integer()
            (p,) = cur.integers("(", ")")
            ws = unit_powers(p, nu)
        elif cur.peek("punct"):
            cur.take("punct")
            vals = cur.integers("(", ")")
            if len(vals) != 3:
                raise DescriptorError(cur.text, start, "punct(d,k,n)", f"punct takes 3 parameters, got {len(vals)}")
            ws = punctured_set(*vals)
        else:
            raise DescriptorError(cur.text, cur.pos, "one of full, {..}, U^v(p), U-U2(p), punct(d,k,n)")
    except (WeightError, TypeError) as exc:
        raise DescriptorError(cur.text, start, "a valid weight set", str(exc)) from None
    cur.end()
    if ws.modulus != m:
        if max(ws.weights) >= m:
            raise DescriptorError(cur.text, 0, "weights below the exponent",
                                  f"{ws.describe()} has modulus {ws.modulus}, incompatible with exponent {m}")
        ws = revalidate(ws, m)
    return ws


_META = re.compile(r"(?:x(?:\^(-?\d+))?)?(?:y(?:\^(-?\d+))?)?")


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_element(text: str, group: Group) -> int:
    """Index of the element written ``text`` in ``group``."""
    tok = re.sub(r"[\s*]", "", text)
    if tok in group._label_index:
        return group._label_index[tok]
    if group.metacyclic is not None:
        m = _META.fullmatch(tok)
        if tok in ("1", "e"):
            return 0
        if m and tok:
            n = group.metacyclic.n
            x, y = n if group.metacyclic.k > 1 else group.pow(1 % group.order, group.metacyclic.l), 1 % group.order
            a = 0 if not tok.startswith("x") else int(m.group(1) or 1)
            b = 0 if "y" not in tok else int(m.group(2) or 1)
            return group.mul(group.pow(x, a), group.pow(y, b))
    elif group.factors:
        h, k = group.factors
        if tok.startswith("(") and tok.endswith(")"):
            parts = _split_top(tok[1:-1], "|")
            if len(parts) == 2:
                return parse_element(parts[0], h) * k.order + parse_element(parts[1], k)
    elif group.descriptor.startswith("A["):
        factors = [int(v) for v in group.descriptor[2:-1].split(",")]
        inner = tok[1:-1] if tok.startswith("(") and tok.endswith(")") else tok
        parts = inner.split("|")
        if len(parts) == len(factors) and all(re.fullmatch(r"-?\d+", p) for p in parts):
            idx = 0
            for p, n in zip(parts, factors):
                idx = idx * n + int(p) % n
            return idx
    elif re.fullmatch(r"-?\d+", tok):
        return int(tok) % group.order
    raise DescriptorError(text, 0, f"an element of {group.descriptor}")


def parse_sequence(text: str, group: Group) -> OrderedSequence:
    text = text.strip()
    if not text:
        return OrderedSequence(group)
    return OrderedSequence(group, [parse_element(tok, group) for tok in _split_top(text, ",")])
