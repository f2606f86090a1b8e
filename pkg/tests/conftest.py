import random
from fractions import Fraction

import pytest

from neumann_ellipsoid import Ellipsoid, Polynomial
from neumann_ellipsoid.poly import monomials_of_degree

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and not report.failed):
        return
    num, title = marker.args
    passed = report.passed and _criteria.get(num, (True,))[0]
    _criteria[num] = (passed, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        passed, title = _criteria[num]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {num:>2}: {title}")


def random_rational(rng: random.Random, span: int = 9, den: int = 4) -> Fraction:
    value = Fraction(0)
    while value == 0:
        value = Fraction(rng.randint(-span, span), rng.randint(1, den))
    return value


def random_polynomial(rng: random.Random, n: int, max_degree: int, n_terms: int,
                      min_degree: int = 0) -> Polynomial:
    pool = [a for k in range(min_degree, max_degree + 1) for a in monomials_of_degree(n, k)]
    picks = rng.sample(pool, min(n_terms, len(pool)))
    return Polynomial(n, {a: random_rational(rng) for a in picks})


def random_ellipsoid(rng: random.Random, n: int) -> Ellipsoid:
    return Ellipsoid(tuple(Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20161101)
