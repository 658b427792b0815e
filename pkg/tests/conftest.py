import random
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from quasisym.core import CayleyTable, Permutation, apply_isotopy, load_table, table_from_function
from quasisym.groups import small_groups
from quasisym.isotope import group_from_table

FIXTURES = Path(__file__).parent / "fixtures"


def random_latin_square(n, rng):
    """Randomised backtracking fill; fine for n <= 7."""
    grid = [[-1] * n for _ in range(n)]

    def fill(cell):
        if cell == n * n:
            return True
        i, j = divmod(cell, n)
        vals = list(range(n))
        rng.shuffle(vals)
        for v in vals:
            if v in grid[i][:j] or any(grid[r][j] == v for r in range(i)):
                continue
            grid[i][j] = v
            if fill(cell + 1):
                return True
        grid[i][j] = -1
        return False

    fill(0)
    return CayleyTable(grid)


def modular(m, f):
    return table_from_function(m, lambda x, y: f(x, y) % m)


@pytest.fixture(scope="session")
def not_group_isotope():
    return load_table(FIXTURES / "order5_not_group_isotope.txt")


@pytest.fixture(scope="session")
def groups():
    return {name: group_from_table(t) for name, t in small_groups(9).items()}


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def latin_squares(draw, max_order=6):
    """Mix of unstructured squares and isotopes of small groups."""
    n = draw(st.integers(min_value=1, max_value=max_order))
    rng = random.Random(draw(seeds))
    if draw(st.booleans()):
        return random_latin_square(n, rng)
    names = [k for k, t in small_groups(max_order).items() if t.order == n]
    base = small_groups(max_order)[rng.choice(names)]
    perms = []
    for _ in range(3):
        p = list(range(n))
        rng.shuffle(p)
        perms.append(Permutation(p))
    return apply_isotopy(base, *perms)


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(range(n))))


def as_list(t):
    return np.asarray(t.entries).tolist()


def squares_mod(p):
    return {k * k % p for k in range(1, p)}


def semi_symmetric_sweep(p):
    """All (α, β, 0) over Z_p that are strictly semi-symmetric, by the oracle.

    Pairs are first screened by evaluating x·(y·x) = y at (0, 1) and (1, 0);
    survivors get the full identity check and a symmetry-group computation.
    """
    from quasisym.core import SymmetryClass, classify_by_oracle, satisfies_identity
    from quasisym.linear import LinearIsotopeSpec, linear_isotope_table

    a = np.arange(1, p)[:, None]
    b = np.arange(1, p)[None, :]

    def op(x, y):
        return (a * x + b * y) % p

    ok = (op(0, op(1, 0)) == 1) & (op(1, op(0, 1)) == 0)
    found = []
    for i, j in zip(*np.nonzero(ok)):
        spec = LinearIsotopeSpec(p, int(i) + 1, int(j) + 1, 0)
        t = linear_isotope_table(spec)
        if satisfies_identity(t, "semi-symmetric") and classify_by_oracle(t) is SymmetryClass.STRICTLY_SEMI_SYMMETRIC:
            found.append(spec)
    return sorted(found)


def primes_below(n):
    return [p for p in range(2, n) if all(p % k for k in range(2, p))]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
