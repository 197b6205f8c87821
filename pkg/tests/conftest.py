import sys

import pytest
from hypothesis import strategies as st

from conjlen import LambdaGroup


@pytest.fixture(scope="session")
def G():
    return LambdaGroup()


def letters_of(alphabet):
    """Hypothesis strategy for raw (unreduced) letter sequences over signed generators."""
    signed = sorted(alphabet) + [-x for x in sorted(alphabet)]
    return st.lists(st.sampled_from(signed), max_size=12).map(tuple)



def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "SUMMARY", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
