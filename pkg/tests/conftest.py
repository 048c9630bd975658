from itertools import product

import pytest


def power(group, g, a):
    acc = 0
    for _ in range(a):
        acc = group.table[acc, g]
    return int(acc)


def brute_window_products(group, elements, weights):
    """Every weighted product of every nonempty window, by enumerating weight vectors."""
    out = set()
    k = len(elements)
    for i in range(k):
        for j in range(i, k):
            for vec in product(list(weights), repeat=j - i + 1):
                acc = 0
                for g, a in zip(elements[i : j + 1], vec):
                    acc = int(group.table[acc, power(group, g, a)])
                out.add(acc)
    return out


def brute_subsequence_products(group, elements, weights):
    """Weighted products of every nonempty (not necessarily consecutive) subsequence."""
    out = set()
    k = len(elements)
    for mask in range(1, 1 << k):
        items = [elements[i] for i in range(k) if mask >> i & 1]
        for vec in product(list(weights), repeat=len(items)):
            acc = 0
            for g, a in zip(items, vec):
                acc = int(group.table[acc, power(group, g, a)])
            out.add(acc)
    return out


@pytest.fixture
def brute():
    return brute_window_products


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
