"""One test per acceptance criterion, each at its stated tolerance.

Each test prints a single pass/fail line. The same lines are collected into
an "acceptance criteria" section of the pytest summary. Running this file
directly prints them without pytest.
"""
import pytest

import conftest
from pellfrac import acceptance


@pytest.mark.parametrize("check", acceptance.CHECKS, ids=lambda c: c.__name__.split("_")[0].upper())
def test_criterion(check):
    result = check(acceptance.DEFAULT_SEED)
    line = result.line()
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, line


if __name__ == "__main__":
    import sys

    results = acceptance.run_all()
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
