import pytest

from forcinglab import corpus as corpus_mod
from forcinglab.hf import EMPTY, parse_hf

# criterion number -> (description, passed); filled in by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}. {desc}")


@pytest.fixture(scope="session")
def cohen2():
    return corpus_mod.cohen2()


@pytest.fixture(scope="session")
def one_point():
    return corpus_mod.one_point()


@pytest.fixture(scope="session")
def eq_bottoms():
    return corpus_mod.equivalent_bottoms()


@pytest.fixture(scope="session")
def degenerate():
    return corpus_mod.degenerate()


@pytest.fixture(scope="session")
def small_orders():
    """Every quasi-order with at most 5 elements, up to isomorphism."""
    return corpus_mod.all_quasiorders(5)


@pytest.fixture
def sets():
    return {
        "0": EMPTY,
        "1": parse_hf("{{}}"),
        "2": parse_hf("{{},{{}}}"),
        "3": parse_hf("{{},{{}},{{},{{}}}}"),
    }
