import pytest

from leibkit import enumeration, radicals
from leibkit.algebra import restrict
from leibkit.cartan import cartan_subalgebras
from leibkit.constructions import counterexample, heisenberg_H, heisenberg_example
from leibkit.corpus import build_corpus
from leibkit.theorems import run_all


@pytest.fixture
def cex2():
    return counterexample(2)


@pytest.fixture
def heis2():
    return heisenberg_example(2)


@pytest.fixture
def heis2_H():
    """H of the Heisenberg example at p = 2 as an algebra with basis x, y, z."""
    return restrict(heisenberg_example(2), heisenberg_H(2)).algebra


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_results(corpus):
    """{name: [CheckResult, ...]} for every corpus algebra, computed once."""
    return {name: run_all(A) for name, A in corpus}


@pytest.fixture
def fresh_caches():
    enumeration.clear_caches()
    radicals.clear_caches()
    cartan_subalgebras.cache_clear()
    yield


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_log.lines():
        terminalreporter.write_line(line)
