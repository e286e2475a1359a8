from itertools import combinations

import pytest


def all_partitions(total, max_part=None):
    """Every partition of ``total`` as a decreasing tuple (plain recursion)."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in all_partitions(total - first, first):
            yield (first,) + rest


def brute_complements(gens, colength, limit):
    """Module complements of size ``colength`` among semigroup elements below ``limit``,
    found by testing every subset."""
    members = {0}
    for x in range(1, limit):
        if any(x - g in members for g in gens if x >= g):
            members.add(x)
    pool = sorted(members)
    found = []
    for delta in combinations(pool, colength):
        d = set(delta)
        if all((x - g) not in members or (x - g) in d for x in d for g in gens):
            found.append(delta)
    return found


@pytest.fixture
def brute_partitions():
    return all_partitions


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
